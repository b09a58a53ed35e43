"""A reproducible sweep written to CSV and JSON."""
import tempfile
from pathlib import Path

from pvlab import SweepConfig, run_sweep, write_report

config = SweepConfig(q_range=(3, 200), q_filter="primes", char_filter="sample_k", sample_k=5, seed=2024)
report = run_sweep(config)
print(len(report.rows), "rows over", report.summary["moduli"], "moduli")
for key in ("max_pv_constant", "max_long_sum_ratio", "max_gauss_defect"):
    print(key, report.summary[key])
print("l1 fit:", report.summary["l1_fit"])

out = Path(tempfile.mkdtemp())
write_report(report, out / "sweep.csv")
write_report(report, out / "sweep.json", "json")
print((out / "sweep.csv").read_text().splitlines()[:3])

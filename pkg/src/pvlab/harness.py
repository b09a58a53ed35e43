"""Sweeps over (q, chi): configuration, execution, the l1 fit and report files.

Sampling uses numpy's Philox4x64-10 counter-based generator keyed by
``(seed mod 2**64, q)``.  Each modulus owns its own stream, so the rows for a
given q do not depend on which other moduli are in the sweep or on how the
work is split across processes.
"""
from __future__ import annotations

import csv
import dataclasses
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np
import tomli

from .bounds import c_constant, long_sum_length, window_maxima
from .charsum import gauss_sum, max_interval_sum, prefix_walk
from .dirichlet import enumerate_characters
from .errors import ConfigError, DegenerateDesign, IoError, OutputExists
from .modarith import factorize, is_prime
from .window import SpectrumSummary, l1_bound, l1_norm, make_window

SCHEMA = "pvlab-1"
Q_FILTERS = ("primes", "all", "cubefree", "non_cubefree")
CHAR_FILTERS = ("all_primitive", "real_primitive", "sample_k")

ROW_FIELDS = (
    "q", "label", "order", "parity",
    "max_abs", "max_M", "max_N", "pv_constant",
    "theorem_c", "theorem_ratio",
    "long_N", "long_max_abs", "long_sum_ratio",
    "win_M", "win_N", "win_K", "l1", "l1_bound", "l1_ratio",
    "gauss_abs2", "gauss_defect",
)
_INT_FIELDS = {"q", "label", "order", "parity", "max_M", "max_N", "long_N", "win_M", "win_N", "win_K"}


@dataclass(frozen=True)
class SweepConfig:
    q_range: tuple[int, int]
    q_filter: str = "primes"
    char_filter: str = "all_primitive"
    sample_k: int = 4
    k_exponent: float = 0.7
    epsilon: float = 0.05
    seed: int = 0
    # execution details: they never change the report, so they are left out
    # of equality and of the serialized config
    parallelism: int = field(default=1, compare=False)
    output_path: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        try:
            lo, hi = (int(v) for v in self.q_range)
        except (TypeError, ValueError):
            raise ConfigError("q_range must be a pair of integers") from None
        object.__setattr__(self, "q_range", (lo, hi))
        if lo < 3:
            raise ConfigError(f"q_range lower end must be >= 3, got {lo}")
        if hi < lo:
            raise ConfigError("q_range is empty")
        if self.q_filter not in Q_FILTERS:
            raise ConfigError(f"q_filter must be one of {Q_FILTERS}")
        if self.char_filter not in CHAR_FILTERS:
            raise ConfigError(f"char_filter must be one of {CHAR_FILTERS}")
        if self.sample_k < 1:
            raise ConfigError("sample_k must be positive")
        if not 0 < self.k_exponent < 1:
            raise ConfigError("k_exponent must lie in (0, 1)")
        # the largest c any admitted modulus can have
        c = 0.25 if self.q_filter in ("primes", "cubefree") else 1 / 3
        if not 0 < self.epsilon < 1 - c:
            raise ConfigError(f"epsilon must lie in (0, {1 - c:.4g}) for q_filter={self.q_filter}")
        if not 0 <= self.seed < 2**64:
            raise ConfigError("seed must be a 64-bit unsigned integer")
        if self.parallelism < 1:
            raise ConfigError("parallelism must be positive")

    def to_dict(self) -> dict:
        d = {f.name: getattr(self, f.name) for f in dataclasses.fields(self) if f.compare}
        d["q_range"] = list(self.q_range)
        return d


def config_from_dict(d: dict) -> SweepConfig:
    names = {f.name for f in dataclasses.fields(SweepConfig)}
    unknown = set(d) - names
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    if "q_range" not in d:
        raise ConfigError("q_range is required")
    try:
        return SweepConfig(**d)
    except TypeError as exc:
        raise ConfigError(str(exc)) from None


def load_config(path: str | os.PathLike) -> SweepConfig:
    """Read a TOML file whose keys are SweepConfig field names."""
    try:
        with open(path, "rb") as fh:
            data = tomli.load(fh)
    except OSError as exc:
        raise IoError(f"cannot read config {path}: {exc}") from exc
    except tomli.TOMLDecodeError as exc:
        raise ConfigError(f"bad TOML in {path}: {exc}") from exc
    return config_from_dict(data)


def select_moduli(config: SweepConfig) -> list[int]:
    lo, hi = config.q_range
    keep = {
        "primes": is_prime,
        "all": lambda q: True,
        "cubefree": lambda q: factorize(q).cubefree,
        "non_cubefree": lambda q: not factorize(q).cubefree,
    }[config.q_filter]
    return [q for q in range(lo, hi + 1) if keep(q)]


def _rng(seed: int, q: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=[seed, q]))


def _window_params(q: int, kappa: float, rng: np.random.Generator) -> tuple[int, int, int] | None:
    """(M, N, K) with K = floor(q^kappa) shrunk until N + 2K < q leaves N >= 2."""
    K = min(math.floor(q**kappa), (q - 3) // 2)
    if K < 1:
        return None
    N = int(rng.integers(2, q - 2 * K, endpoint=False))
    M = int(rng.integers(0, q))
    return M, N, K


def _row(chi, config: SweepConfig, rng: np.random.Generator) -> dict:
    q = chi.q
    best = max_interval_sum(chi)
    c = c_constant(chi)
    scale = math.sqrt(q) * math.log(q)
    long_N = long_sum_length(q, config.epsilon, c)
    if long_N > 0:
        walk = prefix_walk(chi)
        long_max = float(window_maxima(walk.points, walk.total, long_N).max())
    else:
        long_max = 0.0
    tau2 = abs(gauss_sum(chi)) ** 2
    row = {
        "q": q,
        "label": chi.label,
        "order": chi.order,
        "parity": chi.parity,
        "max_abs": best.abs,
        "max_M": best.M,
        "max_N": best.N,
        "pv_constant": best.abs / scale,
        "theorem_c": c,
        "theorem_ratio": best.abs / (4 * c / math.pi**2 * scale),
        "long_N": long_N,
        "long_max_abs": long_max,
        "long_sum_ratio": long_max / math.sqrt(q),
        "gauss_abs2": tau2,
        "gauss_defect": abs(tau2 - q),
    }
    params = _window_params(q, config.k_exponent, rng)
    if params is None:
        row.update(dict.fromkeys(("win_M", "win_N", "win_K", "l1", "l1_bound", "l1_ratio")))
    else:
        summary = l1_norm(make_window(q, *params))
        row.update(
            win_M=params[0], win_N=params[1], win_K=params[2],
            l1=summary.l1, l1_bound=summary.bound, l1_ratio=summary.ratio,
        )
    return {k: row[k] for k in ROW_FIELDS}


def _chars_for(q: int, config: SweepConfig, rng: np.random.Generator) -> list:
    prim = [c for c in enumerate_characters(q) if c.is_primitive and not c.is_principal]
    if config.char_filter == "real_primitive":
        return [c for c in prim if c.is_real]
    if config.char_filter == "sample_k" and len(prim) > config.sample_k:
        pick = np.sort(rng.choice(len(prim), size=config.sample_k, replace=False))
        return [prim[i] for i in pick]
    return prim


def sweep_modulus(q: int, config: SweepConfig) -> list[dict]:
    """All rows for one modulus, in label order.  Pure given (config, q)."""
    rng = _rng(config.seed, q)
    return [_row(chi, config, rng) for chi in _chars_for(q, config, rng)]


def _task(args: tuple[int, dict]) -> tuple[int, list[dict]]:
    q, cfg = args
    return q, sweep_modulus(q, config_from_dict(cfg))


def summarize(rows: Sequence[dict]) -> dict:
    """Maxima and fitted constants; a function of the rows alone."""
    out: dict = {"rows": len(rows), "moduli": len({r["q"] for r in rows})}
    for key in ("pv_constant", "theorem_ratio", "long_sum_ratio", "l1_ratio", "gauss_defect"):
        vals = [r for r in rows if r[key] is not None]
        if vals:
            top = max(vals, key=lambda r: r[key])
            out[f"max_{key}"] = {"value": top[key], "q": top["q"], "label": top["label"]}
        else:
            out[f"max_{key}"] = None
    try:
        A, B, rms = fit_l1_model(rows)
        out["l1_fit"] = {"A": A, "B": B, "rms": rms}
    except DegenerateDesign:
        out["l1_fit"] = None
    return out


@dataclass(frozen=True)
class SweepReport:
    config: SweepConfig
    rows: list[dict]
    summary: dict

    def to_dict(self) -> dict:
        return {"schema": SCHEMA, "config": self.config.to_dict(), "rows": self.rows, "summary": self.summary}


def run_sweep(config: SweepConfig) -> SweepReport:
    moduli = select_moduli(config)
    if config.parallelism == 1 or len(moduli) < 2:
        parts = [(q, sweep_modulus(q, config)) for q in moduli]
    else:
        cfg = config.to_dict()
        with ProcessPoolExecutor(max_workers=config.parallelism) as pool:
            parts = list(pool.map(_task, [(q, cfg) for q in moduli], chunksize=1))
    parts.sort(key=lambda p: p[0])
    rows = sorted((r for _, rs in parts for r in rs), key=lambda r: (r["q"], r["label"]))
    return SweepReport(config, rows, summarize(rows))


def _fit_data(rows: Iterable) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    q, K, l1 = [], [], []
    for r in rows:
        if isinstance(r, SpectrumSummary):
            q.append(r.window.q), K.append(r.window.K), l1.append(r.l1)
        else:
            k = r.get("win_K", r.get("K"))
            if k is None or r.get("l1") is None:
                continue
            q.append(r["q"]), K.append(k), l1.append(r["l1"])
    return np.array(q, dtype=float), np.array(K, dtype=float), np.array(l1, dtype=float)


def fit_l1_model(rows: Iterable) -> tuple[float, float, float]:
    """Least squares for l1 ~ A q log(q/K) + B q.  Returns (A, B, rms residual).

    Rows are SpectrumSummary objects or mappings with q, l1 and win_K (or K);
    rows without window data are skipped.
    """
    q, K, l1 = _fit_data(rows)
    if len(np.unique(q)) < 5:
        raise DegenerateDesign(f"need at least 5 distinct q, got {len(np.unique(q))}")
    X = np.column_stack([q * np.log(q / K), q])
    coef, _, rank, _ = np.linalg.lstsq(X, l1, rcond=None)
    if rank < 2:
        raise DegenerateDesign("design matrix is rank deficient")
    rms = float(np.sqrt(np.mean((X @ coef - l1) ** 2)))
    return float(coef[0]), float(coef[1]), rms


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _open_new(path: Path, force: bool):
    if path.exists() and not force:
        raise OutputExists(f"{path} exists; pass force to overwrite")
    try:
        return open(path, "w", newline="", encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def write_report(report: SweepReport, path: str | os.PathLike, format: str = "csv", force: bool = False) -> Path:
    """CSV (one row per (q, chi), fixed header) or JSON with a schema tag.

    CSV floats carry 12 significant digits; JSON keeps full double precision
    so that reading it back gives an equal report.
    """
    path = Path(path)
    if format not in ("csv", "json"):
        raise ValueError("format must be csv or json")
    with _open_new(path, force) as fh:
        try:
            if format == "csv":
                w = csv.writer(fh, lineterminator="\n")
                w.writerow(ROW_FIELDS)
                for r in report.rows:
                    w.writerow([_fmt(r[k]) for k in ROW_FIELDS])
            else:
                json.dump(report.to_dict(), fh, indent=1)
                fh.write("\n")
        except OSError as exc:
            raise IoError(f"cannot write {path}: {exc}") from exc
    return path


def read_report(path: str | os.PathLike) -> SweepReport:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    if data.get("schema") != SCHEMA:
        raise IoError(f"{path}: expected schema {SCHEMA!r}")
    return SweepReport(config_from_dict(data["config"]), data["rows"], data["summary"])


def read_csv_rows(path: str | os.PathLike) -> list[dict]:
    def parse(k, v):
        if v == "":
            return None
        return int(v) if k in _INT_FIELDS else float(v)

    try:
        with open(path, newline="", encoding="utf-8") as fh:
            return [{k: parse(k, v) for k, v in r.items()} for r in csv.DictReader(fh)]
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc


def recompute_derived(row: dict) -> dict:
    """Ratios rebuilt from a row's primary columns."""
    q = row["q"]
    scale = math.sqrt(q) * math.log(q)
    out = {
        "pv_constant": row["max_abs"] / scale,
        "theorem_ratio": row["max_abs"] / (4 * row["theorem_c"] / math.pi**2 * scale),
        "long_sum_ratio": row["long_max_abs"] / math.sqrt(q),
        "gauss_defect": abs(row["gauss_abs2"] - q),
    }
    if row["win_K"] is not None:
        bound = l1_bound(q, row["win_K"])
        out.update(l1_bound=bound, l1_ratio=row["l1"] / bound)
    return out

"""Command-line entry point ``pvlab``.

Exit codes: 0 success, 1 invariant violation, 2 usage or config error,
3 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import acceptance
from .bounds import congruence_energy
from .charsum import gauss_sum, max_interval_sum, partial_sum
from .dirichlet import character, enumerate_characters
from .errors import ConfigError, IoError, PvlabError
from .harness import CHAR_FILTERS, Q_FILTERS, SweepConfig, load_config, run_sweep, write_report
from .window import fourier_closed_form, fourier_dft, l1_norm, make_window

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def _emit(obj) -> None:
    print(json.dumps(obj))


def cmd_chars(args) -> int:
    for chi in enumerate_characters(args.q):
        if args.primitive_only and not chi.is_primitive:
            continue
        _emit({
            "q": chi.q, "label": chi.label, "name": chi.name, "order": chi.order,
            "parity": chi.parity, "conductor": chi.conductor, "primitive": chi.is_primitive,
        })
    return EXIT_OK


def cmd_sum(args) -> int:
    chi = character(args.q, args.label)
    _emit(partial_sum(chi, args.m, args.n).to_json(chi))
    return EXIT_OK


def cmd_max(args) -> int:
    chi = character(args.q, args.label)
    _emit(max_interval_sum(chi).to_json(chi))
    return EXIT_OK


def cmd_gauss(args) -> int:
    chi = character(args.q, args.label)
    tau = gauss_sum(chi)
    _emit({
        "q": chi.q, "label": chi.label, "re": tau.real, "im": tau.imag,
        "abs2": abs(tau) ** 2, "primitive": chi.is_primitive,
    })
    return EXIT_OK


def cmd_window(args) -> int:
    w = make_window(args.q, args.m, args.n, args.k)
    out = {"q": w.q, "M": w.M, "N": w.N, "K": w.K, "mass": w.mass}
    status = EXIT_OK
    if args.l1:
        s = l1_norm(w)
        out.update(l1=s.l1, bound=s.bound, ratio=s.ratio)
    if args.check_dft:
        ref = fourier_dft(w)
        err = float(np.abs(fourier_closed_form(w, np.arange(1, w.q)) - ref[1:]).max()) if w.q > 1 else 0.0
        err = max(err, abs(ref[0] - w.mass))
        ok = err <= 1e-9 * w.q
        out.update(dft_max_err=err, dft_ok=ok)
        status = EXIT_OK if ok else EXIT_VIOLATION
    _emit(out)
    return status


def cmd_energy(args) -> int:
    e = congruence_energy(args.q, args.m, args.n, args.u)
    _emit({"q": e.q, "M": e.M, "N": e.N, "U": e.U, "count": e.count, "normalized": e.normalized})
    return EXIT_OK


def _sweep_config(args) -> SweepConfig:
    overrides = {
        "seed": args.seed,
        "parallelism": args.jobs,
        "output_path": args.out,
    }
    if args.config:
        base = load_config(args.config)
        changes = {k: v for k, v in overrides.items() if v is not None}
        fields = {**base.to_dict(), "parallelism": base.parallelism, "output_path": base.output_path, **changes}
        return SweepConfig(**fields)
    if args.q_lo is None or args.q_hi is None:
        raise ConfigError("sweep needs --config or both --q-lo and --q-hi")
    fields = {
        "q_range": (args.q_lo, args.q_hi),
        "q_filter": args.filter or "primes",
        "char_filter": args.chars or "all_primitive",
        **{k: v for k, v in overrides.items() if v is not None},
    }
    if args.sample_k is not None:
        fields["sample_k"] = args.sample_k
    return SweepConfig(**fields)


def cmd_sweep(args) -> int:
    config = _sweep_config(args)
    if not config.output_path:
        raise ConfigError("sweep needs an output path (--out or output_path in the config)")
    path = Path(config.output_path)
    fmt = args.format or ("json" if path.suffix == ".json" else "csv")
    if path.exists() and not args.force:
        # refuse before spending time on the sweep
        raise IoError(f"{path} exists; pass --force to overwrite")
    report = run_sweep(config)
    write_report(report, path, fmt, force=args.force)
    print(f"wrote {len(report.rows)} rows to {path}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = acceptance.run_all(fast=args.fast)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pvlab", description="Dirichlet character sum experiments.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chars", help="list characters mod q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--primitive-only", action="store_true")
    p.set_defaults(func=cmd_chars)

    p = sub.add_parser("sum", help="S(chi, M, N) over M < n <= M + N")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--label", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("max", help="maximal |S(chi, M, N)| and a maximising interval")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--label", type=int, required=True)
    p.set_defaults(func=cmd_max)

    p = sub.add_parser("gauss", help="Gauss sum of a character")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--label", type=int, required=True)
    p.set_defaults(func=cmd_gauss)

    p = sub.add_parser("window", help="trapezoid window spectrum")
    for name in ("q", "m", "n", "k"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--l1", action="store_true", help="report the l1 norm of the transform")
    p.add_argument("--check-dft", action="store_true", help="compare the closed form with a direct DFT")
    p.set_defaults(func=cmd_window)

    p = sub.add_parser("energy", help="congruence energy count")
    for name in ("q", "m", "n", "u"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("sweep", help="run a (q, chi) sweep and write a report")
    p.add_argument("--config", help="TOML file with SweepConfig fields")
    p.add_argument("--q-lo", type=int)
    p.add_argument("--q-hi", type=int)
    p.add_argument("--filter", choices=Q_FILTERS, help="which moduli to include")
    p.add_argument("--chars", choices=CHAR_FILTERS, help="which characters per modulus")
    p.add_argument("--sample-k", type=int)
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--jobs", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run the acceptance suite")
    p.add_argument("--fast", action="store_true")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except IoError as exc:
        print(f"pvlab: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"pvlab: {exc}", file=sys.stderr)
        return EXIT_IO
    except (PvlabError, ValueError) as exc:
        print(f"pvlab: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

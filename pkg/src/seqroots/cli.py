"""Command-line surface: sequence tables, root extraction, benchmarks.

Every command builds one structured document; the human-readable table is
rendered from that document alone, so parsing the JSON form and re-rendering
reproduces the table byte for byte.  Sequence terms, seeds, and coefficients
travel as decimal strings in JSON because the terms outgrow fixed-width
integers within a few dozen steps.

Exit codes: 0 converged/ok, 2 tie detected, 3 iteration budget exhausted,
4 seed collapsed, 5 estimator cross-check failed, 64 bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from typing import Callable, NoReturn, Optional, Sequence

from .bench import BenchCase, builtin_cases, format_report, run_bench
from .driver import (
    DEFAULT_OPTIONS,
    DriverOptions,
    RootEstimate,
    RootStatus,
    dominant_root,
    enumerate_real_roots,
    root_via_shift,
)
from .errors import EstimatorMismatchError, SeqrootsError
from .poly import AffineShift, MonicIntPolynomial, make_polynomial
from .render import ratio_string
from .sequences import default_seed, init_family, shifted_family

EXIT_OK = 0
EXIT_TIE = 2
EXIT_MAX_ITERS = 3
EXIT_DEGENERATE = 4
EXIT_MISMATCH = 5
EXIT_USAGE = 64

_STATUS_EXIT = {
    RootStatus.CONVERGED: EXIT_OK,
    RootStatus.TIE_DETECTED: EXIT_TIE,
    RootStatus.MAX_ITERS_EXCEEDED: EXIT_MAX_ITERS,
    RootStatus.DEGENERATE_SEED: EXIT_DEGENERATE,
}


@dataclass(frozen=True)
class RunConfig:
    command: str
    poly: Optional[MonicIntPolynomial]
    shift: Optional[AffineShift] = None
    seed: Optional[tuple[int, ...]] = None
    steps: int = 0
    digits: int = DEFAULT_OPTIONS.target_digits
    max_iters: int = DEFAULT_OPTIONS.max_iters
    runs: int = 5
    as_json: bool = False


class _Parser(argparse.ArgumentParser):
    """Usage problems exit with the dedicated usage code."""

    def error(self, message: str) -> NoReturn:
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _poly_arg(text: str) -> MonicIntPolynomial:
    try:
        values = [int(part) for part in text.split(",")]
        return make_polynomial(values)
    except (ValueError, SeqrootsError) as exc:
        raise argparse.ArgumentTypeError(f"bad polynomial {text!r}: {exc}")


def _shift_arg(text: str) -> AffineShift:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"shift must be 'a,b', got {text!r}")
    try:
        return AffineShift(int(parts[0]), int(parts[1]))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad shift {text!r}: {exc}")


def _seed_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad seed {text!r}: {exc}")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="seqroots",
        description="Real roots of monic integer polynomials via exact "
        "integer recurrences and rational ratio sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, poly_required: bool = True) -> None:
        p.add_argument(
            "--poly",
            type=_poly_arg,
            required=poly_required,
            help="comma-separated coefficients including the leading 1, "
            "e.g. '1,2,-1' for x^2+2x-1",
        )
        p.add_argument(
            "--digits",
            type=_positive,
            default=DEFAULT_OPTIONS.target_digits,
            help="significant digits for rendering and convergence "
            "(default %(default)s)",
        )
        p.add_argument("--json", action="store_true", help="emit the structured document")

    seq = sub.add_parser("sequences", help="print the sequence table for a polynomial")
    common(seq)
    seq.add_argument("--shift", type=_shift_arg, help="affine shift 'a,b' of the iteration matrix")
    seq.add_argument("--seed", type=_seed_arg, help="starting vector (default 1,0,...,0)")
    seq.add_argument(
        "--steps",
        type=_non_negative,
        default=0,
        help="final step index; the table has steps+1 rows",
    )

    root = sub.add_parser("root", help="estimate one root (dominant, or via a shift)")
    common(root)
    root.add_argument("--shift", type=_shift_arg, help="affine shift 'a,b' selecting the target root")
    root.add_argument(
        "--max-iters",
        type=_positive,
        default=DEFAULT_OPTIONS.max_iters,
        help="iteration budget (default %(default)s)",
    )

    roots = sub.add_parser("roots", help="enumerate all verified real roots")
    common(roots)
    roots.add_argument(
        "--max-iters",
        type=_positive,
        default=DEFAULT_OPTIONS.max_iters,
        help="iteration budget per run (default %(default)s)",
    )

    bench = sub.add_parser(
        "bench", help="time the exact pipeline against the float reference"
    )
    common(bench, poly_required=False)
    bench.add_argument("--shift", type=_shift_arg, help="affine shift 'a,b' for the single-case run")
    bench.add_argument(
        "--runs", type=_positive, default=5, help="timing repetitions (default %(default)s)"
    )
    return parser


def _config_from(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        poly=getattr(args, "poly", None),
        shift=getattr(args, "shift", None),
        seed=getattr(args, "seed", None),
        steps=getattr(args, "steps", 0),
        digits=args.digits,
        max_iters=getattr(args, "max_iters", DEFAULT_OPTIONS.max_iters),
        runs=getattr(args, "runs", 5),
        as_json=args.json,
    )


def _options(cfg: RunConfig) -> DriverOptions:
    return DriverOptions(target_digits=cfg.digits, max_iters=cfg.max_iters)


def _shift_field(shift: Optional[AffineShift]) -> Optional[list[str]]:
    if shift is None:
        return None
    return [str(shift.a), str(shift.b)]


def _estimate_field(est: RootEstimate, digits: int) -> dict:
    return {
        "value": est.decimal(digits),
        "fraction": str(est.value),
        "digits": est.decimal_digits,
        "status": est.status.value,
        "iterations": est.iterations,
        "shift": _shift_field(est.shift_used),
        "estimator": est.estimator,
    }


def cmd_sequences(cfg: RunConfig) -> tuple[dict, int]:
    assert cfg.poly is not None
    seed = cfg.seed if cfg.seed is not None else default_seed(cfg.poly.degree)
    if cfg.shift is not None:
        family = shifted_family(cfg.poly, cfg.shift, seed, keep_history=True)
    else:
        family = init_family(cfg.poly, seed, keep_history=True)
    family.run_to(cfg.steps)
    rows = []
    for j in range(cfg.steps + 1):
        vec = family.vector(j)
        ratios = [
            ratio_string(vec[i], vec[i + 1], cfg.digits)
            for i in range(len(vec) - 1)
        ]
        rows.append(
            {"j": j, "terms": [str(t) for t in vec], "ratios": ratios}
        )
    doc = {
        "command": "sequences",
        "polynomial": [str(c) for c in cfg.poly.with_leading()],
        "shift": _shift_field(cfg.shift),
        "seed": [str(s) for s in seed],
        "rows": rows,
        "estimates": [],
    }
    return doc, EXIT_OK


def cmd_root(cfg: RunConfig) -> tuple[dict, int]:
    assert cfg.poly is not None
    opts = _options(cfg)
    if cfg.shift is not None:
        est = root_via_shift(cfg.poly, cfg.shift, opts)
    else:
        est = dominant_root(cfg.poly, opts)
    doc = {
        "command": "root",
        "polynomial": [str(c) for c in cfg.poly.with_leading()],
        "shift": _shift_field(cfg.shift),
        "seed": None,
        "rows": [],
        "estimates": [_estimate_field(est, cfg.digits)],
    }
    return doc, _STATUS_EXIT[est.status]


def cmd_roots(cfg: RunConfig) -> tuple[dict, int]:
    assert cfg.poly is not None
    estimates = enumerate_real_roots(cfg.poly, _options(cfg))
    doc = {
        "command": "roots",
        "polynomial": [str(c) for c in cfg.poly.with_leading()],
        "shift": None,
        "seed": None,
        "rows": [],
        "estimates": [_estimate_field(e, cfg.digits) for e in estimates],
    }
    return doc, EXIT_OK


def cmd_bench(cfg: RunConfig) -> tuple[dict, int]:
    if cfg.poly is not None:
        label = ",".join(str(c) for c in cfg.poly.with_leading())
        if cfg.shift is not None:
            label += f" shift {cfg.shift.a},{cfg.shift.b}"
        cases: Sequence[BenchCase] = (BenchCase(label, cfg.poly, cfg.shift),)
    else:
        cases = builtin_cases()
    rows = run_bench(cases, digits=cfg.digits, runs=cfg.runs, max_iters=cfg.max_iters)
    doc = {
        "command": "bench",
        "polynomial": None,
        "shift": _shift_field(cfg.shift),
        "seed": None,
        "rows": [asdict(row) for row in rows],
        "estimates": [],
    }
    return doc, EXIT_OK


def sequences_table(doc: dict) -> str:
    """Fixed-width table built purely from the structured document."""
    rows = doc["rows"]
    if rows:
        m = len(rows[0]["terms"])
    else:
        m = len(doc["seed"])
    headers = ["j"]
    headers += [f"S({i})" for i in range(1, m + 1)]
    headers += [f"S({i})/S({i + 1})" for i in range(1, m)]
    table = [headers]
    for row in rows:
        table.append([str(row["j"])] + list(row["terms"]) + list(row["ratios"]))
    widths = [max(len(line[c]) for line in table) for c in range(len(headers))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(line, widths)) for line in table]
    return "\n".join(lines)


def estimates_text(doc: dict) -> str:
    """One line per estimate, from the structured document only."""
    lines = []
    for est in doc["estimates"]:
        shift = est["shift"]
        shift_text = f"{shift[0]},{shift[1]}" if shift else "-"
        lines.append(
            f"{est['value']}  status={est['status']}  iterations={est['iterations']}"
            f"  shift={shift_text}  estimator={est['estimator']}"
        )
    if not lines:
        lines.append("no real roots")
    return "\n".join(lines)


def render_text(doc: dict) -> str:
    command = doc["command"]
    if command == "sequences":
        return sequences_table(doc)
    if command in ("root", "roots"):
        return estimates_text(doc)
    if command == "bench":
        return format_report(doc["rows"])
    raise ValueError(f"unknown command {command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = _config_from(args)
    handlers: dict[str, Callable[[RunConfig], tuple[dict, int]]] = {
        "sequences": cmd_sequences,
        "root": cmd_root,
        "roots": cmd_roots,
        "bench": cmd_bench,
    }
    try:
        doc, code = handlers[cfg.command](cfg)
    except EstimatorMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except SeqrootsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.as_json:
        print(json.dumps(doc, indent=2))
    else:
        print(render_text(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: transform (LOCC convertibility of two spectra), classify (one
point of the recovery plane), region (CSV export of the classified grid),
bell (Bell-pair concentration queries).  Every command takes --eps and
--json.

Exit codes: 0 affirmative verdict / success, 1 negative verdict, 2 usage,
domain, or I/O error.

Output records serialize with a stable key order (command, inputs, results,
status); numeric fields are printed with 12 significant digits.  Region CSV
files use the schema `p,q,class` with floats as shortest round-trip decimals
and LF line endings, one row per grid cell in row-major order (p outer).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .errors import InputDomainError
from .majorization import Comparability
from .nielsen import transform_verdict
from .recovery import (
    RecoveryProblem,
    RegionClass,
    RegionGrid,
    _CLASS_ORDER,
    bell_bound,
    can_concentrate_bell,
    classify_point,
    is_feasible_closed_form,
    product_spectra,
    region_grid,
)
from .spectra import (
    DEFAULT_TOL,
    SchmidtSpectrum,
    Tolerance,
    entropy,
    make_spectrum,
    two_qubit,
)

__all__ = ["OutputRecord", "main", "entry", "write_region_csv", "parse_spectrum"]

_VERDICT_LABEL = {
    Comparability.LEFT_MAJORIZED: "forward",
    Comparability.RIGHT_MAJORIZED: "backward",
    Comparability.EQUAL: "equal",
    Comparability.INCOMPARABLE: "incomparable",
}

_REGION_LABEL = {
    RegionClass.COMPLETE_RECOVERY: "complete-recovery",
    RegionClass.TRUE_RECOVERY: "true-recovery",
    RegionClass.TRIVIAL_RECOVERY: "trivial-recovery",
    RegionClass.INCOMPARABLE: "incomparable",
    RegionClass.ENTANGLEMENT_INCREASING: "entanglement-increasing",
    RegionClass.INFEASIBLE_OTHER: "infeasible",
}


class CliUsageError(Exception):
    pass


@dataclass
class OutputRecord:
    """One command's result: echoed inputs, verdicts, and the exit status."""

    command: str
    inputs: dict
    results: dict
    status: int

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "inputs": _round12(self.inputs),
            "results": _round12(self.results),
            "status": self.status,
        }
        return json.dumps(payload)

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        for section in (self.inputs, self.results):
            for key, val in section.items():
                lines.append(f"{key}: {_text_value(val)}")
        lines.append(f"status: {self.status}")
        return "\n".join(lines)


def _round12(val):
    if isinstance(val, bool):
        return val
    if isinstance(val, float):
        return float(f"{val:.12g}")
    if isinstance(val, (list, tuple)):
        return [_round12(v) for v in val]
    if isinstance(val, dict):
        return {k: _round12(v) for k, v in val.items()}
    return val


def _text_value(val) -> str:
    if isinstance(val, bool):
        return "true" if val else "false"
    if isinstance(val, float):
        return f"{val:.12g}"
    if isinstance(val, (list, tuple)):
        return "(" + ", ".join(_text_value(v) for v in val) + ")"
    if isinstance(val, dict):
        return " ".join(f"{k}={_text_value(v)}" for k, v in val.items())
    return str(val)


def parse_spectrum(text: str, tol: Tolerance) -> SchmidtSpectrum:
    """Parse comma-separated weights and canonicalize them."""
    try:
        vals = [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise CliUsageError(f"cannot parse spectrum {text!r}")
    if not vals:
        raise CliUsageError(f"cannot parse spectrum {text!r}")
    return make_spectrum(vals, tol)


def write_region_csv(grid: RegionGrid, fh) -> None:
    """Emit the grid as `p,q,class` rows, one per cell, deterministically."""
    n = grid.n
    labels = [cls.value for cls in _CLASS_ORDER]
    qreprs = [repr(0.5 + j / (2 * n)) for j in range(n + 1)]
    fh.write("p,q,class\n")
    for i in range(n + 1):
        prepr = repr(0.5 + i / (2 * n))
        row = grid.codes[i]
        for j in range(n + 1):
            fh.write(f"{prepr},{qreprs[j]},{labels[row[j]]}\n")


def _cmd_transform(args, tol: Tolerance):
    if (args.source is None) == (args.a is None):
        raise CliUsageError("give exactly one of --source or --a")
    if (args.target is None) == (args.b is None):
        raise CliUsageError("give exactly one of --target or --b")
    source = (
        parse_spectrum(args.source, tol)
        if args.source is not None
        else two_qubit(args.a, tol).spectrum
    )
    target = (
        parse_spectrum(args.target, tol)
        if args.target is not None
        else two_qubit(args.b, tol).spectrum
    )
    verdict = transform_verdict(source, target, tol)
    status = 0 if verdict.forward else 1
    record = OutputRecord(
        command="transform",
        inputs={
            "source": list(source.values),
            "target": list(target.values),
            "eps": tol.eps,
        },
        results={
            "verdict": _VERDICT_LABEL[verdict.comparability],
            "forward": verdict.forward,
            "backward": verdict.backward,
            "entropy_source": verdict.entropy_source,
            "entropy_target": verdict.entropy_target,
        },
        status=status,
    )
    return record, status


def _cmd_classify(args, tol: Tolerance):
    prob = RecoveryProblem(args.a, args.b, tol)
    if not tol.lt(args.b, 1.0):
        raise CliUsageError("classify requires b < 1; use `bell` for b = 1")
    cls = classify_point(prob, args.p, args.q)
    x, y = product_spectra(prob, args.p, args.q)
    e_source = entropy(two_qubit(args.a, tol).spectrum)
    e_target = entropy(two_qubit(args.b, tol).spectrum)
    e_aux_before = entropy(two_qubit(args.p, tol).spectrum)
    e_aux_after = entropy(two_qubit(args.q, tol).spectrum)
    recovery_classes = (
        RegionClass.COMPLETE_RECOVERY,
        RegionClass.TRUE_RECOVERY,
        RegionClass.TRIVIAL_RECOVERY,
    )
    status = 0 if cls in recovery_classes else 1
    record = OutputRecord(
        command="classify",
        inputs={
            "a": args.a,
            "b": args.b,
            "p": args.p,
            "q": args.q,
            "eps": tol.eps,
        },
        results={
            "class": _REGION_LABEL[cls],
            "joint_before": list(x.values),
            "joint_after": list(y.values),
            "entropy_source": e_source,
            "entropy_target": e_target,
            "entropy_aux_before": e_aux_before,
            "entropy_aux_after": e_aux_after,
            "recovered": e_aux_after - e_aux_before,
        },
        status=status,
    )
    return record, status


def _cmd_region(args, tol: Tolerance):
    prob = RecoveryProblem(args.a, args.b, tol)
    grid = region_grid(prob, args.n)
    if args.out is not None:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                write_region_csv(grid, fh)
        except OSError as exc:
            raise CliUsageError(f"cannot write {args.out}: {exc}")
    else:
        write_region_csv(grid, sys.stdout)
    counts = grid.counts()
    record = OutputRecord(
        command="region",
        inputs={
            "a": args.a,
            "b": args.b,
            "n": args.n,
            "eps": tol.eps,
            "out": args.out if args.out is not None else "-",
        },
        results={
            "cells": (args.n + 1) * (args.n + 1),
            "counts": {cls.value: counts[cls] for cls in _CLASS_ORDER},
        },
        status=0,
    )
    return record, 0


def _cmd_bell(args, tol: Tolerance):
    inputs = {"a": args.a, "p": args.p, "eps": tol.eps}
    if args.b is None:
        ok = can_concentrate_bell(args.a, args.p, tol)
        results = {"concentratable": ok, "ap": args.a * args.p}
        status = 0 if ok else 1
    else:
        inputs = {"a": args.a, "p": args.p, "b": args.b, "eps": tol.eps}
        prob = RecoveryProblem(args.a, args.b, tol)
        bound = bell_bound(prob)
        if tol.lt(args.b, 1.0):
            feasible = is_feasible_closed_form(prob, args.p, 0.5)
        else:
            # product-state target: the closed form degenerates, use the
            # concentration predicate directly
            feasible = can_concentrate_bell(args.a, args.p, tol)
        results = {"bound": bound, "feasible_with_residual": feasible}
        status = 0 if feasible else 1
    record = OutputRecord(
        command="bell", inputs=inputs, results=results, status=status
    )
    return record, status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entrecovery",
        description="LOCC convertibility and entanglement recovery regions",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--eps", type=float, default=DEFAULT_TOL.eps,
        help="absolute comparison tolerance (default 1e-12)",
    )
    common.add_argument(
        "--json", action="store_true", help="emit a JSON record instead of text"
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_tr = sub.add_parser(
        "transform", parents=[common],
        help="decide deterministic LOCC convertibility of two spectra",
    )
    p_tr.add_argument("--source", help="comma-separated source spectrum")
    p_tr.add_argument("--target", help="comma-separated target spectrum")
    p_tr.add_argument("--a", type=float, help="source two-qubit coefficient")
    p_tr.add_argument("--b", type=float, help="target two-qubit coefficient")
    p_tr.set_defaults(func=_cmd_transform)

    p_cl = sub.add_parser(
        "classify", parents=[common],
        help="classify one point (p, q) of the recovery plane",
    )
    for name in ("a", "b", "p", "q"):
        p_cl.add_argument(f"--{name}", type=float, required=True)
    p_cl.set_defaults(func=_cmd_classify)

    p_re = sub.add_parser(
        "region", parents=[common],
        help="classify the whole (p, q) grid and export CSV",
    )
    p_re.add_argument("--a", type=float, required=True)
    p_re.add_argument("--b", type=float, required=True)
    p_re.add_argument("--n", type=int, required=True, help="grid resolution per axis")
    p_re.add_argument("--out", help="CSV path (default: CSV to stdout)")
    p_re.set_defaults(func=_cmd_region)

    p_be = sub.add_parser(
        "bell", parents=[common],
        help="Bell-pair concentration bound and feasibility",
    )
    p_be.add_argument("--a", type=float, required=True)
    p_be.add_argument("--p", type=float, required=True)
    p_be.add_argument("--b", type=float, help="target coefficient (omit for b = 1)")
    p_be.set_defaults(func=_cmd_bell)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        tol = Tolerance(args.eps)
        record, status = args.func(args, tol)
    except (InputDomainError, CliUsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    stream = sys.stdout
    if args.cmd == "region" and args.out is None:
        stream = sys.stderr  # CSV already occupies stdout
    print(record.to_json() if args.json else record.to_text(), file=stream)
    return status


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

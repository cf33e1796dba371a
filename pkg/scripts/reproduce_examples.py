#!/usr/bin/env python3
"""Re-run the package's worked examples end to end and print PASS/FAIL lines.

Exit status is 0 when every check passes, 1 otherwise.
"""

import io
import sys
from contextlib import redirect_stdout

from entrecovery import (
    Comparability,
    RecoveryProblem,
    RegionClass,
    can_concentrate_bell,
    classify_point,
    compare,
    entropy,
    is_majorized_by,
    make_spectrum,
    product_spectra,
    region_grid,
)
from entrecovery.cli import main as cli_main


def matches(values, wanted, tol=1e-12):
    return len(values) == len(wanted) and all(
        abs(g - w) <= tol for g, w in zip(values, wanted)
    )


def check_true_recovery_example():
    prob = RecoveryProblem(0.7, 0.8)
    x, y = product_spectra(prob, 0.6, 0.55)
    ok = matches(x.values, (0.42, 0.28, 0.18, 0.12))
    ok = ok and matches(y.values, (0.44, 0.36, 0.11, 0.09))
    ok = ok and is_majorized_by(x, y)
    ok = ok and classify_point(prob, 0.6, 0.55) is RegionClass.TRUE_RECOVERY
    recovered = entropy(make_spectrum([0.55, 0.45])) - entropy(make_spectrum([0.6, 0.4]))
    return ok and abs(recovered - 0.021823859533139654) <= 1e-12


def check_concentration_example():
    prob = RecoveryProblem(0.6, 0.9)
    x, y = product_spectra(prob, 0.7, 0.5)
    ok = matches(x.values, (0.42, 0.28, 0.18, 0.12))
    ok = ok and matches(y.values, (0.45, 0.45, 0.05, 0.05))
    ok = ok and is_majorized_by(x, y)
    return ok and can_concentrate_bell(0.6, 0.7) and 0.6 * 0.7 < 0.5


def check_incomparable_pair():
    x = make_spectrum([0.63, 0.27, 0.07, 0.03])
    y = make_spectrum([0.64, 0.16, 0.16, 0.04])
    return (compare(x, y) is Comparability.INCOMPARABLE
            and compare(y, x) is Comparability.INCOMPARABLE)


def check_complete_point():
    prob = RecoveryProblem(0.7, 0.8)
    ok = classify_point(prob, 0.8, 0.7) is RegionClass.COMPLETE_RECOVERY
    x, y = product_spectra(prob, 0.8, 0.7)
    return ok and entropy(x) == entropy(y)


def check_region_counts():
    counts = region_grid(RecoveryProblem(0.7, 0.8), 50).counts()
    wanted = {
        RegionClass.COMPLETE_RECOVERY: 1,
        RegionClass.TRUE_RECOVERY: 161,
        RegionClass.TRIVIAL_RECOVERY: 54,
        RegionClass.INCOMPARABLE: 445,
        RegionClass.ENTANGLEMENT_INCREASING: 614,
        RegionClass.INFEASIBLE_OTHER: 1326,
    }
    return counts == wanted


def check_cli_bell_example():
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli_main(["bell", "--a", "0.6", "--p", "0.7", "--b", "0.9"])
    out = buf.getvalue()
    return code == 0 and "bound: 0.75" in out and "feasible_with_residual: true" in out


CHECKS = (
    ("true-recovery worked example (a=0.7 b=0.8 p=0.6 q=0.55)", check_true_recovery_example),
    ("bell concentration example (a=0.6 p=0.7)", check_concentration_example),
    ("incomparable four-element pair", check_incomparable_pair),
    ("complete recovery at the swapped point", check_complete_point),
    ("frozen region census at n=50", check_region_counts),
    ("cli bell subcommand transcript", check_cli_bell_example),
)


def main():
    failures = 0
    for label, fn in CHECKS:
        ok = fn()
        print(("PASS " if ok else "FAIL ") + label)
        if not ok:
            failures += 1
    print(f"{len(CHECKS) - failures} of {len(CHECKS)} checks passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

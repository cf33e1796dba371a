"""Deterministic LOCC convertibility via Nielsen's criterion.

A pure state converts deterministically to another under local operations and
classical communication exactly when its Schmidt spectrum is majorized by the
target's.  Entanglement entropy can only decrease along such a conversion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .majorization import Comparability, compare, is_majorized_by
from .spectra import DEFAULT_TOL, SchmidtSpectrum, Tolerance, entropy

__all__ = ["can_transform", "transform_verdict", "TransformVerdict"]


def can_transform(
    source: SchmidtSpectrum, target: SchmidtSpectrum, tol: Tolerance = DEFAULT_TOL
) -> bool:
    """True iff the source converts deterministically into the target."""
    return is_majorized_by(source, target, tol)


@dataclass(frozen=True)
class TransformVerdict:
    """Comparability of a source/target pair plus both entanglement entropies."""

    comparability: Comparability
    entropy_source: float
    entropy_target: float

    @property
    def forward(self) -> bool:
        return self.comparability in (
            Comparability.LEFT_MAJORIZED,
            Comparability.EQUAL,
        )

    @property
    def backward(self) -> bool:
        return self.comparability in (
            Comparability.RIGHT_MAJORIZED,
            Comparability.EQUAL,
        )


def transform_verdict(
    source: SchmidtSpectrum, target: SchmidtSpectrum, tol: Tolerance = DEFAULT_TOL
) -> TransformVerdict:
    """Compare both directions and report entropies alongside the verdict.

    The identity conversion is reported as Equal rather than refused.
    """
    cls = compare(source, target, tol)
    es = entropy(source)
    et = entropy(target)
    if cls in (Comparability.LEFT_MAJORIZED, Comparability.EQUAL):
        # monotonicity: convertibility implies no entanglement gain
        assert tol.geq(es, et)
    return TransformVerdict(cls, es, et)

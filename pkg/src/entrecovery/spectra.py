"""Schmidt spectra of bipartite pure states and spectrum arithmetic.

A pure bipartite state is represented by its Schmidt spectrum: the vector of
squared Schmidt coefficients, i.e. the eigenvalues of either reduced density
matrix.  Everything downstream (convertibility, recovery regions) operates on
these probability vectors only, so this module is the whole state model.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    EmptyInputError,
    NegativeWeightError,
    NotNormalizedError,
    OutOfRangeError,
)

__all__ = [
    "Tolerance",
    "DEFAULT_TOL",
    "SchmidtSpectrum",
    "TwoQubitPair",
    "make_spectrum",
    "two_qubit",
    "tensor",
    "entropy",
]


@dataclass(frozen=True)
class Tolerance:
    """Absolute comparison tolerance used by every predicate in the package.

    All strict and non-strict comparisons route through the methods below so
    boundary semantics stay uniform: "non-strict within eps" means leq/geq,
    "strict beyond eps" means lt/gt.
    """

    eps: float = 1e-12

    def __post_init__(self):
        if not (0.0 < self.eps < 1e-3):
            raise OutOfRangeError(f"eps must lie in (0, 1e-3), got {self.eps}")

    def leq(self, x: float, y: float) -> bool:
        return x <= y + self.eps

    def geq(self, x: float, y: float) -> bool:
        return x >= y - self.eps

    def lt(self, x: float, y: float) -> bool:
        return x < y - self.eps

    def gt(self, x: float, y: float) -> bool:
        return x > y + self.eps

    def close(self, x: float, y: float) -> bool:
        return abs(x - y) <= self.eps


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class SchmidtSpectrum:
    """Probability vector of squared Schmidt coefficients, sorted non-increasing.

    Direct construction trusts the caller to pass canonical values (sorted,
    normalized, in [0,1]); use make_spectrum for anything unvalidated.
    """

    values: tuple[float, ...]

    @property
    def dim(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class TwoQubitPair:
    """Two-qubit pure state, parameterized by its larger squared coefficient a.

    Canonical range is 1/2 <= a <= 1; a = 1/2 is a Bell pair, a = 1 a product
    state.  Build through two_qubit() to canonicalize either coefficient.
    """

    a: float

    def __post_init__(self):
        if not (DEFAULT_TOL.geq(self.a, 0.5) and DEFAULT_TOL.leq(self.a, 1.0)):
            raise OutOfRangeError(
                f"two-qubit parameter must lie in [1/2, 1], got {self.a}"
            )

    @property
    def spectrum(self) -> SchmidtSpectrum:
        return SchmidtSpectrum((self.a, 1.0 - self.a))


def make_spectrum(raw, tol: Tolerance = DEFAULT_TOL) -> SchmidtSpectrum:
    """Validate and canonicalize raw weights into a SchmidtSpectrum.

    Parameters
    ----------
    raw : iterable of float
        Squared Schmidt coefficients in any order.  Values within eps below 0
        or above 1 are clamped; zero entries are allowed.
    tol : Tolerance
        Comparison tolerance.

    Returns
    -------
    SchmidtSpectrum
        Entries sorted in non-increasing order.

    Raises
    ------
    EmptyInputError, NegativeWeightError, NotNormalizedError
    """
    vals = [float(v) for v in raw]
    if not vals:
        raise EmptyInputError("spectrum needs at least one weight")
    for v in vals:
        if v < -tol.eps:
            raise NegativeWeightError(f"negative weight {v}")
    total = sum(vals)
    if abs(total - 1.0) > tol.eps:
        raise NotNormalizedError(f"weights sum to {total}, expected 1")
    clamped = [min(1.0, max(0.0, v)) for v in vals]
    clamped.sort(reverse=True)
    return SchmidtSpectrum(tuple(clamped))


def two_qubit(a_raw: float, tol: Tolerance = DEFAULT_TOL) -> TwoQubitPair:
    """Build a TwoQubitPair from either squared coefficient.

    Accepts any value in [0, 1] (within eps) and canonicalizes to
    a = max(a_raw, 1 - a_raw), so the stored parameter lies in [1/2, 1].
    """
    if not (tol.geq(a_raw, 0.0) and tol.leq(a_raw, 1.0)):
        raise OutOfRangeError(f"coefficient must lie in [0, 1], got {a_raw}")
    a = min(1.0, max(0.0, float(a_raw)))
    return TwoQubitPair(max(a, 1.0 - a))


def tensor(s: SchmidtSpectrum, t: SchmidtSpectrum) -> SchmidtSpectrum:
    """Spectrum of the joint state: all pairwise products, re-sorted."""
    prods = [u * v for u in s.values for v in t.values]
    prods.sort(reverse=True)
    return SchmidtSpectrum(tuple(prods))


def entropy(s: SchmidtSpectrum) -> float:
    """Entanglement entropy -sum(v * log2(v)) in ebits, with 0*log(0) = 0."""
    h = 0.0
    for v in s.values:
        if v > 0.0:
            h -= v * math.log2(v)
    return h

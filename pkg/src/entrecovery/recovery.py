"""Entanglement recovery region for an auxiliary two-qubit pair.

Setting: a source pair with larger coefficient a must be converted into a
less entangled pair with coefficient b (a < b).  Performing the conversion
collectively with an auxiliary pair (p before, q after) can move some of the
lost entanglement into the auxiliary: the joint conversion is deterministic
exactly when the product spectrum (ap, a(1-p), (1-a)p, (1-a)(1-p)) is
majorized by (bq, b(1-q), (1-b)q, (1-b)(1-q)).

Two independent deciders are provided and must agree:

* the direct 4-element majorization oracle (ground truth), used by
  classify_point and region_grid;
* is_feasible_closed_form, the derived inequality set
  1/2 <= q < p <= 1,  ap <= bq,  (1-b)(1-q) <= (1-a)(1-p),  p <= b,  q < b.

Recovered entanglement is real (q < a) in the true-recovery subregion and
reproducible by per-pair conversions (q >= a) in the trivial one; the single
point (p, q) = (b, a) swaps the roles of the two pairs completely.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import OutOfRangeError, ResolutionTooLargeError
from .majorization import is_majorized_by
from .spectra import DEFAULT_TOL, SchmidtSpectrum, Tolerance, entropy

__all__ = [
    "RecoveryProblem",
    "RegionClass",
    "RegionGrid",
    "product_spectra",
    "is_feasible_closed_form",
    "classify_point",
    "bell_bound",
    "can_concentrate_bell",
    "region_grid",
]

MAX_GRID_N = 10_000


@dataclass(frozen=True)
class RecoveryProblem:
    """Fixed source/target parameters 1/2 <= a < b <= 1 of a recovery scenario.

    a < b must hold strictly beyond eps (equal pairs need no recovery).
    b = 1 (product-state target, i.e. concentration) is a valid problem, but
    the closed-form region requires b < 1; see is_feasible_closed_form.
    """

    a: float
    b: float
    tol: Tolerance = field(default=DEFAULT_TOL)

    def __post_init__(self):
        t = self.tol
        if not (t.geq(self.a, 0.5) and t.leq(self.b, 1.0)):
            raise OutOfRangeError(
                f"need 1/2 <= a and b <= 1, got a={self.a}, b={self.b}"
            )
        if not t.lt(self.a, self.b):
            raise OutOfRangeError(
                f"need a < b strictly beyond eps, got a={self.a}, b={self.b}"
            )


class RegionClass(enum.Enum):
    """Classification of a point (p, q) of the auxiliary-pair plane."""

    COMPLETE_RECOVERY = "complete"
    TRUE_RECOVERY = "true"
    TRIVIAL_RECOVERY = "trivial"
    INCOMPARABLE = "incomparable"
    ENTANGLEMENT_INCREASING = "increasing"
    INFEASIBLE_OTHER = "infeasible"


# fixed code order for grid storage and CSV output
_CLASS_ORDER = (
    RegionClass.COMPLETE_RECOVERY,
    RegionClass.TRUE_RECOVERY,
    RegionClass.TRIVIAL_RECOVERY,
    RegionClass.INCOMPARABLE,
    RegionClass.ENTANGLEMENT_INCREASING,
    RegionClass.INFEASIBLE_OTHER,
)
_CLASS_CODE = {cls: i for i, cls in enumerate(_CLASS_ORDER)}


def _require_unit_range(tol: Tolerance, **params: float) -> None:
    for name, v in params.items():
        if not (tol.geq(v, 0.5) and tol.leq(v, 1.0)):
            raise OutOfRangeError(f"{name} must lie in [1/2, 1], got {v}")


def _sorted_products(c: float, v: float) -> list[float]:
    # spectrum of a c-pair joined with a v-pair, sorted non-increasing
    return sorted(
        (c * v, c * (1.0 - v), (1.0 - c) * v, (1.0 - c) * (1.0 - v)),
        reverse=True,
    )


def _pair_entropy(v: float) -> float:
    return entropy(SchmidtSpectrum((v, 1.0 - v)))


def product_spectra(
    prob: RecoveryProblem, p: float, q: float
) -> tuple[SchmidtSpectrum, SchmidtSpectrum]:
    """Joint spectra (source x auxiliary-before, target x auxiliary-after)."""
    _require_unit_range(prob.tol, p=p, q=q)
    x = SchmidtSpectrum(tuple(_sorted_products(prob.a, p)))
    y = SchmidtSpectrum(tuple(_sorted_products(prob.b, q)))
    return x, y


def is_feasible_closed_form(prob: RecoveryProblem, p: float, q: float) -> bool:
    """Decide recovery feasibility from the derived inequalities alone.

    Parameters
    ----------
    prob : RecoveryProblem
        Problem with b < 1 strictly (the boundary-line slopes degenerate at
        b = 1; concentration targets are handled by can_concentrate_bell).
    p, q : float
        Auxiliary-pair parameters in [1/2, 1].

    Returns
    -------
    bool
        True iff all of: 1/2 <= q < p <= 1 (q < p strict, so the auxiliary
        strictly gains entanglement), ap <= bq and
        (1-b)(1-q) <= (1-a)(1-p) (division-free forms of the slope bounds
        q >= (a/b)p and 1-q <= ((1-a)/(1-b))(1-p)), and p <= b with q < b.

    Never consults the majorization oracle; classify_point is the
    independent ground-truth route and the two are tested for equivalence.
    """
    t = prob.tol
    if not t.lt(prob.b, 1.0):
        raise OutOfRangeError("closed-form region requires b < 1")
    _require_unit_range(t, p=p, q=q)
    a, b = prob.a, prob.b
    return (
        t.geq(q, 0.5)
        and t.leq(p, 1.0)
        and t.lt(q, p)
        and t.leq(a * p, b * q)
        and t.leq((1.0 - b) * (1.0 - q), (1.0 - a) * (1.0 - p))
        and t.leq(p, b)
        and t.lt(q, b)
    )


def classify_point(prob: RecoveryProblem, p: float, q: float) -> RegionClass:
    """Classify a point of the (p, q) plane using the majorization oracle.

    Precedence:

    1. (p, q) = (b, a) within eps with forward majorization: complete
       recovery (the two pairs simply swap roles).
    2. Forward majorization with q < p and a strict entropy gain in the
       auxiliary: true recovery when q < a, trivial recovery when q >= a.
    3. Reverse majorization with unequal spectra: the conversion would
       increase total entanglement, so it is excluded.
    4. Neither direction: incomparable.
    5. Everything else (q >= p, equal spectra, no strict gain): infeasible.

    The closed form never enters; see is_feasible_closed_form.
    """
    t = prob.tol
    _require_unit_range(t, p=p, q=q)
    x, y = product_spectra(prob, p, q)
    fwd = is_majorized_by(x, y, t)
    if t.close(p, prob.b) and t.close(q, prob.a) and fwd:
        return RegionClass.COMPLETE_RECOVERY
    e_before = _pair_entropy(p)
    e_after = _pair_entropy(q)
    if fwd and t.lt(q, p) and t.lt(e_before, e_after):
        if t.lt(q, prob.a):
            return RegionClass.TRUE_RECOVERY
        return RegionClass.TRIVIAL_RECOVERY
    rev = is_majorized_by(y, x, t)
    equal = all(t.close(u, v) for u, v in zip(x.values, y.values))
    if rev and not equal:
        return RegionClass.ENTANGLEMENT_INCREASING
    if not fwd and not rev:
        return RegionClass.INCOMPARABLE
    return RegionClass.INFEASIBLE_OTHER


def bell_bound(prob: RecoveryProblem) -> float:
    """Largest auxiliary parameter p for which a Bell pair (q = 1/2) is reachable."""
    return prob.b / (2.0 * prob.a)


def can_concentrate_bell(a: float, p: float, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True iff a*p < 1/2 strictly: the two pairs concentrate into a Bell pair.

    This is the b = 1 case: the first pair ends in a product state (its
    residual is discarded) and the auxiliary becomes maximally entangled.
    The bound is kept strict; at a*p = 1/2 exactly the underlying product
    spectrum (with prefix sums (ap, a, 1-(1-a)(1-p))) is still majorized by
    (1/2, 1/2, 0, 0), but only with equality in the first prefix.
    """
    _require_unit_range(tol, a=a, p=p)
    return tol.lt(a * p, 0.5)


@dataclass(frozen=True, eq=False)
class RegionGrid:
    """Rasterized classification of [1/2, 1]^2 at resolution n.

    codes[i, j] stores the class of (p_i, q_j) with p_i = 1/2 + i/(2n) and
    q_j = 1/2 + j/(2n), both exact float expressions, as an index into the
    fixed class order (complete, true, trivial, incomparable, increasing,
    infeasible).
    """

    a: float
    b: float
    n: int
    codes: np.ndarray

    def p_value(self, i: int) -> float:
        return 0.5 + i / (2 * self.n)

    def q_value(self, j: int) -> float:
        return 0.5 + j / (2 * self.n)

    def class_at(self, i: int, j: int) -> RegionClass:
        return _CLASS_ORDER[self.codes[i, j]]

    def counts(self) -> dict[RegionClass, int]:
        bins = np.bincount(self.codes.ravel(), minlength=len(_CLASS_ORDER))
        return {cls: int(bins[_CLASS_CODE[cls]]) for cls in _CLASS_ORDER}


def region_grid(prob: RecoveryProblem, n: int) -> RegionGrid:
    """Classify every point of the (n+1) x (n+1) grid over [1/2, 1]^2.

    Internally vectorized, but cell-for-cell identical to calling
    classify_point on each (p_i, q_j): all per-axis quantities (sorted
    product spectra, prefix sums, pair entropies) are computed by the same
    scalar code, and the cross comparisons use the same IEEE operations.
    Deterministic for fixed (a, b, n, eps).  Memory is O(n^2) bytes.
    """
    if n < 1:
        raise OutOfRangeError(f"grid resolution must be >= 1, got {n}")
    if n > MAX_GRID_N:
        raise ResolutionTooLargeError(f"grid resolution {n} exceeds {MAX_GRID_N}")
    t = prob.tol
    eps = t.eps
    a, b = prob.a, prob.b
    pts = [0.5 + i / (2 * n) for i in range(n + 1)]
    m = len(pts)

    x4 = np.array([_sorted_products(a, v) for v in pts])
    y4 = np.array([_sorted_products(b, v) for v in pts])
    sx = np.empty((m, 3))
    sy = np.empty((m, 3))
    for k, arr, pref in ((0, x4, sx), (1, y4, sy)):
        acc = np.zeros(m)
        for col in range(3):
            acc = acc + arr[:, col]
            pref[:, col] = acc
    hv = np.array([_pair_entropy(v) for v in pts])
    pv = np.array(pts)

    # per-axis scalar masks
    near_b = np.abs(pv - b) <= eps  # rows where p is the complete-recovery abscissa
    near_a = np.abs(pv - a) <= eps  # columns where q matches the source parameter
    q_below_a = pv < a - eps

    codes = np.empty((m, m), dtype=np.uint8)
    infeasible = _CLASS_CODE[RegionClass.INFEASIBLE_OTHER]
    chunk = max(1, min(m, 2_000_000 // m))
    for lo in range(0, m, chunk):
        hi = min(lo + chunk, m)
        sxc = sx[lo:hi]
        x4c = x4[lo:hi]
        fwd = np.ones((hi - lo, m), dtype=bool)
        rev = np.ones((hi - lo, m), dtype=bool)
        for k in range(3):
            fwd &= sxc[:, k][:, None] <= (sy[:, k] + eps)[None, :]
            rev &= sy[:, k][None, :] <= (sxc[:, k] + eps)[:, None]
        equal = (np.abs(x4c[:, None, :] - y4[None, :, :]) <= eps).all(axis=-1)
        gain = (pv[None, :] < (pv[lo:hi] - eps)[:, None]) & (
            hv[lo:hi][:, None] < (hv - eps)[None, :]
        )

        m1 = near_b[lo:hi][:, None] & near_a[None, :] & fwd
        m2 = ~m1 & fwd & gain
        m3 = ~m1 & ~m2 & rev & ~equal
        m4 = ~m1 & ~m2 & ~m3 & ~fwd & ~rev

        block = np.full((hi - lo, m), infeasible, dtype=np.uint8)
        block[m1] = _CLASS_CODE[RegionClass.COMPLETE_RECOVERY]
        block[m2 & q_below_a[None, :]] = _CLASS_CODE[RegionClass.TRUE_RECOVERY]
        block[m2 & ~q_below_a[None, :]] = _CLASS_CODE[RegionClass.TRIVIAL_RECOVERY]
        block[m3] = _CLASS_CODE[RegionClass.ENTANGLEMENT_INCREASING]
        block[m4] = _CLASS_CODE[RegionClass.INCOMPARABLE]
        codes[lo:hi] = block
    return RegionGrid(a=a, b=b, n=n, codes=codes)

"""
Fillability obstruction from d-invariants.

If a rational homology sphere Y with |H_1| = delta (square-free) bounds a
negative definite 4-manifold then max 4d(Y, s) >= 1 - 1/delta (delta odd) or
>= 1 (delta even).  An L-space surgery K(n) with every d-value below that bound
therefore has no weak symplectic filling, and neither does K(q) for rational
q in [2g - 1, n].
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .alexpoly import AlexanderPolynomial
from .dinv import DInvariantTable, d_table, fraction_pair
from .errors import SlopeTooSmall
from .torsion import IntervalData, TorsionProfile, direct_profile

__all__ = [
    "Conclusion",
    "Verdict",
    "SlopeInterval",
    "is_square_free",
    "weak_threshold",
    "classify",
    "rational_nonfillable_interval",
    "quick_bound",
    "rough_estimate",
    "lower_bound_line",
]


class Conclusion(str, enum.Enum):
    OBSTRUCTED = "OBSTRUCTED"
    INCONCLUSIVE = "INCONCLUSIVE"
    NOT_APPLICABLE = "NOT_APPLICABLE"

    @property
    def exit_code(self) -> int:
        return {"OBSTRUCTED": 0, "INCONCLUSIVE": 10, "NOT_APPLICABLE": 11}[self.value]


@dataclass(frozen=True)
class Verdict:
    slope: int
    square_free: bool
    threshold: Fraction
    max_d: Fraction
    weak_labels: tuple[int, ...]
    conclusion: Conclusion

    @property
    def all_negative(self) -> bool:
        return self.max_d < 0

    def as_dict(self) -> dict:
        return {
            "slope": self.slope,
            "square_free": self.square_free,
            "threshold": fraction_pair(self.threshold),
            "max_d": fraction_pair(self.max_d),
            "all_negative": self.all_negative,
            "weak_labels": list(self.weak_labels),
            "conclusion": self.conclusion.value,
        }


@dataclass(frozen=True)
class SlopeInterval:
    """Interval of rational slopes; ``None`` for an infinite end."""

    low: Fraction | None
    high: Fraction | None
    low_closed: bool = True
    high_closed: bool = True

    def __post_init__(self):
        if self.low is None:
            object.__setattr__(self, "low_closed", False)
        if self.high is None:
            object.__setattr__(self, "high_closed", False)
        if self.low is not None and self.high is not None and self.low > self.high:
            raise ValueError(f"empty interval: {self.low} > {self.high}")

    def __contains__(self, q) -> bool:
        if self.low is not None and (q < self.low or (q == self.low and not self.low_closed)):
            return False
        if self.high is not None and (q > self.high or (q == self.high and not self.high_closed)):
            return False
        return True

    def is_empty(self) -> bool:
        return (
            self.low is not None
            and self.high is not None
            and self.low == self.high
            and not (self.low_closed and self.high_closed)
        )

    def __str__(self):
        lo = "-inf" if self.low is None else str(self.low)
        hi = "inf" if self.high is None else str(self.high)
        left = "[" if self.low_closed else "("
        right = "]" if self.high_closed else ")"
        return f"{left}{lo}, {hi}{right}"

    def as_dict(self) -> dict:
        return {
            "low": None if self.low is None else fraction_pair(Fraction(self.low)),
            "high": None if self.high is None else fraction_pair(Fraction(self.high)),
            "low_closed": self.low_closed,
            "high_closed": self.high_closed,
        }


def is_square_free(n: int) -> bool:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        if n % p == 0:
            n //= p
        p += 1
    return True


def weak_threshold(n: int) -> Fraction:
    """Smallest d-value counted as weak: 4d >= 1 - 1/n (n odd) or 4d >= 1 (n even)."""
    if n % 2:
        return (1 - Fraction(1, n)) / 4
    return Fraction(1, 4)


def classify(table: DInvariantTable) -> Verdict:
    n = table.n
    threshold = weak_threshold(n)
    sf = is_square_free(n)
    weak = tuple(i for i, d in enumerate(table.entries) if d >= threshold)
    if not sf:
        conclusion = Conclusion.NOT_APPLICABLE
    elif weak:
        conclusion = Conclusion.INCONCLUSIVE
    else:
        conclusion = Conclusion.OBSTRUCTED
    return Verdict(
        slope=n,
        square_free=sf,
        threshold=threshold,
        max_d=table.max_d,
        weak_labels=weak,
        conclusion=conclusion,
    )


def _as_profile(knot) -> TorsionProfile:
    if isinstance(knot, TorsionProfile):
        return knot
    if isinstance(knot, AlexanderPolynomial):
        return direct_profile(knot)
    raise TypeError(f"expected AlexanderPolynomial or TorsionProfile, got {type(knot).__name__}")


def scan_verdicts(knot, scan_max: int, start: int | None = None) -> list[Verdict]:
    """Classify every integral slope from ``start`` (default 2g-1) to ``scan_max``."""
    profile = _as_profile(knot)
    low = 2 * profile.genus - 1
    if start is None:
        start = low
    if start < low:
        raise SlopeTooSmall(f"scan start {start} < 2g-1 = {low}")
    return [classify(d_table(profile, n)) for n in range(start, scan_max + 1)]


def rational_nonfillable_interval(knot, scan_max: int) -> SlopeInterval | None:
    """Closed interval [2g-1, n] for the largest obstructed integral n <= scan_max.

    ``knot`` is an :class:`AlexanderPolynomial` or a ready :class:`TorsionProfile`.
    Returns None when no slope in range is obstructed, including the case
    scan_max < 2g - 1.
    """
    profile = _as_profile(knot)
    low = 2 * profile.genus - 1
    if low < 1:
        raise SlopeTooSmall("2g-1 is not a positive slope (unknot)")
    if scan_max < low:
        return None
    best = None
    for v in scan_verdicts(profile, scan_max):
        if v.conclusion is Conclusion.OBSTRUCTED:
            best = v.slope
    if best is None:
        return None
    return SlopeInterval(Fraction(low), Fraction(best))


def quick_bound(g: int, n: int) -> bool:
    """Necessary condition for K(n) to have no weak d-invariant, from the genus alone.

    With n = 2g + m - 1 the label g carries the pure unknot value; it is
    non-weak only if (m-2)^2 < 4g (m even) or (m-1)(m-3) < 4g (m odd).
    ``False`` guarantees a weak label.  For m = 0 there is no such label and
    the screen is vacuously passed.
    """
    if n < 2 * g - 1:
        raise SlopeTooSmall(f"slope {n} < 2g-1 = {2 * g - 1}")
    m = n - 2 * g + 1
    if m == 0:
        return True
    if m % 2 == 0:
        return (m - 2) ** 2 < 4 * g
    return (m - 1) * (m - 3) < 4 * g


def _min_ratio_index(d: IntervalData) -> int:
    g = d.genus
    best_i, best = None, None
    for i in range(1, d.h + 1):
        ratio = Fraction(d.A_(i), g - d.a_(i))
        if best is None or ratio < best:
            best_i, best = i, ratio
    return best_i


def rough_estimate(d: IntervalData) -> bool:
    """Sufficient test that every d-invariant of K(2g-1) is negative."""
    i = _min_ratio_index(d)
    return d.a_(i) + 4 * d.A_(i) >= d.genus


def lower_bound_line(d: IntervalData) -> tuple[Fraction, Fraction, int]:
    """Line h(j) = slope*j + intercept lying under the torsion staircase.

    Passes through (g, 0) with slope -min_i A_i/(g - a_i).  Returns
    ``(slope, intercept, i_min)``.
    """
    i = _min_ratio_index(d)
    s = Fraction(d.A_(i), d.genus - d.a_(i))
    return -s, s * d.genus, i

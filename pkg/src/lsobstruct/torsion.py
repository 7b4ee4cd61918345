"""
Torsion coefficients of L-space knots from the jump vector.

For k = 2h even, put

    A_j = r_1 + ... + r_j,   B_j = r_{k-j+1} + ... + r_k,   C_l = r_{k-l+2} + ... + r_k,
    a_j = g - (A_j + B_j),   b_l = g - (A_l + C_l),          a_0 = g,  b_1 = g - 1.

The positive coefficients of the Alexander polynomial sit at a_0 > a_1 > ... > a_h = 0
and the negative ones at b_1 > ... > b_h, so t_{j-1} - t_j is 1 exactly when
j lies in one of the intervals (b_{l+1}, a_l], l = 0..h-1.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .alexpoly import (
    AlexanderPolynomial,
    JumpVector,
    krcatovich_check,
    torsion_direct,
    validate_lspace_form,
)
from .errors import DegenerateIntervals, GenusMismatch, IndexOutOfRange, UnsupportedParity

log = logging.getLogger(__name__)

__all__ = [
    "IntervalData",
    "TorsionProfile",
    "interval_data",
    "torsion_step",
    "torsion_profile",
    "direct_profile",
    "profile_csv",
]


@dataclass(frozen=True)
class IntervalData:
    """Interval endpoints driving the torsion step formula.

    Lists are stored 1-based in spirit: ``A[0]`` is A_1, ``C[0]`` is C_2,
    ``a[0]`` is a_0 and ``b[0]`` is b_1.  Use the accessor methods to
    avoid off-by-one mistakes.
    """

    genus: int
    h: int
    A: tuple[int, ...]
    B: tuple[int, ...]
    C: tuple[int, ...]
    a: tuple[int, ...]
    b: tuple[int, ...]

    def A_(self, j):
        return self.A[j - 1]

    def a_(self, j):
        return self.a[j]

    def b_(self, l):
        return self.b[l - 1]

    def rising_intervals(self):
        """The intervals (b_{h-i}, a_{h-i-1}] for i = 0..h-1 as (open_low, high) pairs."""
        return [(self.b_(self.h - i), self.a_(self.h - i - 1)) for i in range(self.h)]


@dataclass(frozen=True)
class TorsionProfile:
    """Dense torsion coefficients t_0 .. t_g."""

    values: tuple[int, ...]
    genus: int

    def __getitem__(self, j: int) -> int:
        j = abs(j)
        return self.values[j] if j <= self.genus else 0

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def check(self):
        """Assert the staircase invariants; returns self for chaining."""
        v = self.values
        assert len(v) == self.genus + 1
        assert v[-1] == 0
        if self.genus > 0:
            assert v[-2] == 1
        assert all(x - y in (0, 1) for x, y in zip(v, v[1:]))
        return self


def interval_data(r: JumpVector, g: int | None = None) -> IntervalData:
    """Compute A, B, C, a, b for an even-length jump vector."""
    k = r.k
    if k == 0 or k % 2:
        raise UnsupportedParity(f"interval formulas need k even and positive, got k={k}")
    if g is None:
        g = r.genus
    elif g != r.genus:
        raise GenusMismatch(f"genus {g} does not match the jump vector (expected {r.genus})")
    h = k // 2

    A = tuple(sum(r[i] for i in range(1, j + 1)) for j in range(1, h + 1))
    B = tuple(sum(r[i] for i in range(k - j + 1, k + 1)) for j in range(1, h + 1))
    C = tuple(sum(r[i] for i in range(k - l + 2, k + 1)) for l in range(2, h + 1))
    a = (g,) + tuple(g - (A[j - 1] + B[j - 1]) for j in range(1, h + 1))
    b = (g - 1,) + tuple(g - (A[l - 1] + C[l - 2]) for l in range(2, h + 1))

    for j in range(1, h + 1):
        if not a[j] < b[j - 1] < a[j - 1]:
            bad = krcatovich_check(r)
            log.warning("degenerate intervals for r=%s (krcatovich violations: %s)", r.r, bad)
            raise DegenerateIntervals(
                f"need a_{j} < b_{j} < a_{j - 1}, got {a[j]}, {b[j - 1]}, {a[j - 1]}"
                + (f"; r fails the Krcatovich inequality at j={bad}" if bad else "")
            )
    if a[h] != 0:
        raise DegenerateIntervals(f"a_h should be 0, got {a[h]}")
    return IntervalData(genus=g, h=h, A=A, B=B, C=C, a=a, b=b)


def torsion_step(d: IntervalData, j: int) -> int:
    """t_{j-1} - t_j for 1 <= j <= g."""
    if not 1 <= j <= d.genus:
        raise IndexOutOfRange(f"j={j} outside 1..{d.genus}")
    return sum(1 for lo, hi in d.rising_intervals() if lo < j <= hi)


def torsion_profile(d: IntervalData) -> TorsionProfile:
    g = d.genus
    steps = [0] * (g + 1)
    for j in range(1, g + 1):
        steps[j] = torsion_step(d, j)
    values = [0] * (g + 1)
    for j in range(g - 1, -1, -1):
        values[j] = values[j + 1] + steps[j + 1]
    return TorsionProfile(tuple(values), g)


def direct_profile(poly: AlexanderPolynomial) -> TorsionProfile:
    """Profile from the defining sum; works for any parity of k."""
    g = validate_lspace_form(poly).exponents[-1]
    return TorsionProfile(tuple(torsion_direct(poly, j) for j in range(g + 1)), g)


def profile_csv(profile: TorsionProfile) -> str:
    lines = ["j,t_j"]
    lines += [f"{j},{t}" for j, t in enumerate(profile.values)]
    return "\n".join(lines) + "\n"

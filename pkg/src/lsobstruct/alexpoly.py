"""
Symmetrized Alexander polynomials of L-space knots.

An L-space knot has Alexander polynomial

    sum_{i=-k}^{k} (-1)^(k+i) t^(n_i),    n_{-k} < ... < n_k,  n_i = -n_{-i},

with n_k - n_{k-1} = 1.  The jump vector r_i = n_{k+2-2i} - n_{k+1-2i}
(i = 1..k) records every second gap and determines the polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import (
    DegenerateSequence,
    EmptyPolynomial,
    InconsistentParity,
    InvalidJump,
    NotLSpaceForm,
)

__all__ = [
    "AlexanderPolynomial",
    "ExponentSequence",
    "JumpVector",
    "validate_lspace_form",
    "jump_vector_from_exponents",
    "polynomial_from_jump_vector",
    "genus",
    "krcatovich_check",
    "torsion_direct",
]


@dataclass(frozen=True, init=False)
class AlexanderPolynomial:
    """Sparse Laurent polynomial ``{exponent: coefficient}``.

    Zero coefficients are dropped on construction and the terms are kept
    sorted by exponent.  Structural checks (symmetry, staircase shape) are
    done by :func:`validate_lspace_form`, not here, so that malformed input
    can still be represented and diagnosed.
    """

    coeffs: tuple[tuple[int, int], ...]
    name: str | None = field(default=None, compare=False)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]], name=None):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        table: dict[int, int] = {}
        for e, c in items:
            table[int(e)] = table.get(int(e), 0) + int(c)
        object.__setattr__(self, "coeffs", tuple(sorted((e, c) for e, c in table.items() if c != 0)))
        object.__setattr__(self, "name", name)

    def __getitem__(self, exponent: int) -> int:
        return self.as_dict().get(exponent, 0)

    def __len__(self):
        return len(self.coeffs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    @property
    def degree(self) -> int:
        return self.coeffs[-1][0]

    def evaluate(self, t=1):
        return sum(c * t**e for e, c in self.coeffs)

    def is_symmetric(self) -> bool:
        d = self.as_dict()
        return all(d.get(-e, 0) == c for e, c in d.items())

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in reversed(self.coeffs):
            mono = "1" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if abs(c) != 1:
                mono = f"{abs(c)}" if e == 0 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out


@dataclass(frozen=True)
class ExponentSequence:
    """Ascending exponents n_{-k} .. n_k of an L-space Alexander polynomial."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        n = tuple(int(x) for x in self.exponents)
        object.__setattr__(self, "exponents", n)
        if len(n) % 2 != 1:
            raise NotLSpaceForm("even number of terms", f"{len(n)} exponents")
        for lo, hi in zip(n, n[1:]):
            if lo >= hi:
                raise NotLSpaceForm("exponents not strictly increasing", f"{lo} >= {hi}")
        for a, b in zip(n, reversed(n)):
            if a != -b:
                raise NotLSpaceForm("exponents not antisymmetric", f"{a} vs {b}")
        if len(n) > 1 and n[-1] - n[-2] != 1:
            raise NotLSpaceForm("top gap is not 1", f"n_k - n_(k-1) = {n[-1] - n[-2]}")

    @property
    def k(self) -> int:
        return (len(self.exponents) - 1) // 2

    def n(self, i: int) -> int:
        """Exponent n_i for -k <= i <= k."""
        return self.exponents[i + self.k]

    def to_polynomial(self, name=None) -> AlexanderPolynomial:
        # sign of t^{n_i} is (-1)^(k+i), i.e. (-1)^position in ascending order
        return AlexanderPolynomial({e: (-1) ** p for p, e in enumerate(self.exponents)}, name=name)


@dataclass(frozen=True)
class JumpVector:
    """Jump vector ``r = (r_1, ..., r_k)``; requires r_1 = 1 and every r_i >= 1."""

    r: tuple[int, ...]

    def __post_init__(self):
        r = tuple(int(x) for x in self.r)
        object.__setattr__(self, "r", r)
        bad = [i + 1 for i, x in enumerate(r) if x < 1]
        if bad:
            raise InvalidJump(f"entries r_{bad[0]}={r[bad[0] - 1]} must be >= 1")
        if r and r[0] != 1:
            raise InvalidJump(f"r_1 must equal 1 (top gap of the polynomial), got {r[0]}")

    @property
    def k(self) -> int:
        return len(self.r)

    @property
    def h(self) -> int | None:
        return self.k // 2 if self.k % 2 == 0 else None

    @property
    def genus(self) -> int:
        # the 2k gaps alternate r_1, r_k, r_2, r_{k-1}, ... and span [-g, g]
        return sum(self.r)

    def __getitem__(self, i: int) -> int:
        """One-based access: ``jv[1]`` is r_1."""
        if not 1 <= i <= self.k:
            raise IndexError(i)
        return self.r[i - 1]

    def __iter__(self):
        return iter(self.r)

    def __len__(self):
        return self.k


def validate_lspace_form(poly: AlexanderPolynomial) -> ExponentSequence:
    """Check the L-space staircase shape and return the ascending exponents.

    Raises :class:`NotLSpaceForm` naming the first failed condition.
    """
    if len(poly) == 0:
        raise EmptyPolynomial("polynomial has no nonzero terms")
    for e, c in poly.coeffs:
        if c not in (1, -1):
            raise NotLSpaceForm("coefficient not +-1", f"c_{e} = {c}")
    d = poly.as_dict()
    for e, c in poly.coeffs:
        if d.get(-e) != c:
            raise NotLSpaceForm("not symmetric", f"c_{e} = {c} but c_{-e} = {d.get(-e, 0)}")
    descending = list(reversed(poly.coeffs))
    for pos, (e, c) in enumerate(descending):
        want = 1 if pos % 2 == 0 else -1
        if c != want:
            raise NotLSpaceForm("signs do not alternate from the top", f"c_{e} = {c}, expected {want}")
    return ExponentSequence(tuple(e for e, _ in poly.coeffs))


def jump_vector_from_exponents(seq: ExponentSequence) -> JumpVector:
    k = seq.k
    if k == 0:
        raise DegenerateSequence("the unknot polynomial has no jumps")
    return JumpVector(tuple(seq.n(k + 2 - 2 * i) - seq.n(k + 1 - 2 * i) for i in range(1, k + 1)))


def polynomial_from_jump_vector(r: JumpVector | Iterable[int], name=None) -> AlexanderPolynomial:
    """Rebuild the Alexander polynomial encoded by a jump vector."""
    if not isinstance(r, JumpVector):
        r = JumpVector(tuple(r))
    k = r.k
    if k == 0:
        return AlexanderPolynomial({0: 1}, name=name)
    gaps = []
    for q in range(2 * k):
        gaps.append(r[q // 2 + 1] if q % 2 == 0 else r[k - (q - 1) // 2])
    exps = [r.genus]
    for gap in gaps:
        exps.append(exps[-1] - gap)
    exps.reverse()
    if any(a != -b for a, b in zip(exps, reversed(exps))):
        raise InconsistentParity(f"reconstructed exponents {exps} are not antisymmetric")
    return ExponentSequence(tuple(exps)).to_polynomial(name=name)


def genus(poly: AlexanderPolynomial) -> int:
    return validate_lspace_form(poly).exponents[-1]


def krcatovich_check(r: JumpVector) -> list[int]:
    """Indices j violating sum_{i=2}^{j} r_i <= sum_{i=k-j+2}^{k} r_i.

    An empty list means ``r`` passes this admissibility test for L-space knots.
    """
    k = r.k
    bad = []
    for j in range(2, k + 1):
        lhs = sum(r[i] for i in range(2, j + 1))
        rhs = sum(r[i] for i in range(k - j + 2, k + 1))
        if lhs > rhs:
            bad.append(j)
    return bad


def torsion_direct(poly: AlexanderPolynomial, j: int) -> int:
    """Torsion coefficient t_j = sum_{m>0} m * c_{|j|+m} by the defining sum."""
    j = abs(j)
    return sum((e - j) * c for e, c in poly.coeffs if e > j)

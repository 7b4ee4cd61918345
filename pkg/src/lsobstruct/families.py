"""
Built-in knots and the slope classification for the K_n family.

K_n is the closure of the 4-strand braid [(2,1,3,2)^(2n+1), -1, 2, 1, 1, 2]
with symmetrized Alexander polynomial

    1 + sum_{k=0}^{n} (t^(4k+2) + t^-(4k+2)) - sum_{j=0}^{n} (t^(4j+1) + t^-(4j+1)).

It has a Legendrian representative with tb = 8n+1, |rot| = 2, which is sharp
for the slice-Bennequin bound, giving tight structures off [8n+1, 8n+3].
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .alexpoly import AlexanderPolynomial, JumpVector, polynomial_from_jump_vector
from .dinv import d_table
from .errors import NoSquareFreeCandidate
from .obstruction import Conclusion, SlopeInterval, classify, is_square_free
from .torsion import direct_profile

__all__ = [
    "KnFamilyMember",
    "SlopeReport",
    "Tag",
    "kn_knot",
    "kn_braid_word",
    "kn_torsion_closed_form",
    "kn_obstruction_slope",
    "kn_slope_classification",
    "tight_excluded_interval",
    "pretzel_p_2_3_11",
    "builtin_knots",
    "HYPERBOLICITY_DISCLAIMER",
]

HYPERBOLICITY_DISCLAIMER = (
    "hyperbolic only generically: finitely many exceptional slopes may lie in "
    "these intervals and are not identified"
)


class Tag(str, enum.Enum):
    TIGHT_NONFILLABLE = "TIGHT_NONFILLABLE"
    NONFILLABLE_TIGHT_UNKNOWN = "NONFILLABLE_TIGHT_UNKNOWN"
    TIGHT_FILLABILITY_UNKNOWN = "TIGHT_FILLABILITY_UNKNOWN"


@dataclass(frozen=True)
class KnFamilyMember:
    n: int
    knot: AlexanderPolynomial
    braid_word: tuple[int, ...]
    genus: int
    tb: int
    rot_abs: int

    @property
    def jump_vector(self) -> JumpVector:
        return JumpVector((1,) * (self.n + 2) + (3,) * self.n)


@dataclass(frozen=True)
class SlopeReport:
    n: int
    tight_excluded: SlopeInterval
    nonfillable: SlopeInterval | None
    m: int | None
    classification: tuple[tuple[SlopeInterval, Tag], ...]
    notes: tuple[str, ...] = field(default=(HYPERBOLICITY_DISCLAIMER,))

    def tag_of(self, q) -> Tag | None:
        for interval, tag in self.classification:
            if q in interval:
                return tag
        return None

    def as_dict(self) -> dict:
        return {
            "family": "kn",
            "index": self.n,
            "m": self.m,
            "tight_excluded": self.tight_excluded.as_dict(),
            "nonfillable": None if self.nonfillable is None else self.nonfillable.as_dict(),
            "classification": [
                {"interval": iv.as_dict(), "tag": tag.value} for iv, tag in self.classification
            ],
            "notes": list(self.notes),
        }


def kn_braid_word(n: int) -> tuple[int, ...]:
    return (2, 1, 3, 2) * (2 * n + 1) + (-1, 2, 1, 1, 2)


def kn_knot(n: int) -> KnFamilyMember:
    if n < 1:
        raise ValueError(f"family index must be >= 1, got {n}")
    coeffs = {0: 1}
    for k in range(n + 1):
        coeffs[4 * k + 2] = coeffs[-(4 * k + 2)] = 1
        coeffs[4 * k + 1] = coeffs[-(4 * k + 1)] = -1
    knot = AlexanderPolynomial(coeffs, name=f"K_{n}")
    return KnFamilyMember(
        n=n,
        knot=knot,
        braid_word=kn_braid_word(n),
        genus=4 * n + 2,
        tb=8 * n + 1,
        rot_abs=2,
    )


def kn_torsion_closed_form(n: int, j: int) -> int:
    j = abs(j)
    if j > 4 * n + 2:
        return 0
    return n - (j + 2) // 4 + 1


def tight_excluded_interval(genus: int, tb: int, rot_abs: int) -> SlopeInterval:
    """Slopes where sharp Legendrian data says nothing: [2g - |rot| - 1, 2g - 1].

    Surgery at every rational slope outside this closed interval carries a
    tight contact structure, provided tb + |rot| = 2g - 1 with g the slice genus.
    """
    if genus <= 0:
        raise ValueError("slice genus must be positive")
    if tb + abs(rot_abs) != 2 * genus - 1:
        raise ValueError(f"tb + |rot| = {tb + abs(rot_abs)} is not 2g - 1 = {2 * genus - 1}")
    return SlopeInterval(Fraction(2 * genus - abs(rot_abs) - 1), Fraction(2 * genus - 1))


def kn_obstruction_slope(n: int) -> int:
    """Largest candidate in {8n+3, 8n+5} that is square-free and obstructed."""
    member = kn_knot(n)
    profile = direct_profile(member.knot)
    for cand in (8 * n + 5, 8 * n + 3):
        if not is_square_free(cand):
            continue
        if classify(d_table(profile, cand)).conclusion is Conclusion.OBSTRUCTED:
            return cand
    raise NoSquareFreeCandidate(f"neither {8 * n + 3} nor {8 * n + 5} is a square-free obstructed slope")


def kn_slope_classification(n: int) -> SlopeReport:
    member = kn_knot(n)
    tight_excluded = tight_excluded_interval(member.genus, member.tb, member.rot_abs)
    low = Fraction(2 * member.genus - 1)  # 8n+3
    notes = [HYPERBOLICITY_DISCLAIMER]
    try:
        m = kn_obstruction_slope(n)
    except NoSquareFreeCandidate as exc:
        m = None
        notes.append(str(exc))

    below = SlopeInterval(None, tight_excluded.low, high_closed=False)
    classes = [(below, Tag.TIGHT_FILLABILITY_UNKNOWN)]
    if m is None:
        nonfillable = None
        classes.append((SlopeInterval(low, None, low_closed=False), Tag.TIGHT_FILLABILITY_UNKNOWN))
    else:
        nonfillable = SlopeInterval(low, Fraction(m))
        classes.append((SlopeInterval(low, low), Tag.NONFILLABLE_TIGHT_UNKNOWN))
        if m > low:
            classes.append((SlopeInterval(low, Fraction(m), low_closed=False), Tag.TIGHT_NONFILLABLE))
        classes.append((SlopeInterval(Fraction(m), None, low_closed=False), Tag.TIGHT_FILLABILITY_UNKNOWN))
    return SlopeReport(
        n=n,
        tight_excluded=tight_excluded,
        nonfillable=nonfillable,
        m=m,
        classification=tuple(classes),
        notes=tuple(notes),
    )


def pretzel_p_2_3_11() -> AlexanderPolynomial:
    return polynomial_from_jump_vector((1, 1, 1, 1, 1, 2), name="P(-2,3,11)")


def builtin_knots(max_index: int = 3) -> list[AlexanderPolynomial]:
    """The pretzel example plus K_1 .. K_max_index."""
    return [pretzel_p_2_3_11()] + [kn_knot(n).knot for n in range(1, max_index + 1)]

"""
d-invariants of integral surgeries K(n) on L-space knots.

    d(K(n), i) = (n - 2|i|)^2 / (4n) - 1/4 - 2 t_i(K),    |i| <= n/2.

Everything is computed with :class:`fractions.Fraction`; floats never enter a
verdict.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import LabelOutOfRange, SlopeTooSmall
from .torsion import TorsionProfile

__all__ = [
    "DInvariantTable",
    "unknot_d",
    "surgery_d",
    "d_table",
    "table_csv",
    "table_json",
]

BRANCH_TORSION = "torsion"
BRANCH_UNKNOT = "unknot"


@dataclass(frozen=True)
class DInvariantTable:
    """d-invariants of K(n) for labels 0..floor(n/2).

    Labels i and -i give the same value, so only i >= 0 is stored.  For even
    n the labels n/2 and -n/2 name the same Spin^c structure; either way
    ``structure_count`` is n.
    """

    n: int
    genus: int
    entries: tuple[Fraction, ...]
    branches: tuple[str, ...]

    @property
    def structure_count(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[abs(i)]

    def __len__(self):
        return len(self.entries)

    def labels(self):
        return range(len(self.entries))

    @property
    def max_d(self) -> Fraction:
        return max(self.entries)

    def all_negative(self) -> bool:
        return all(d < 0 for d in self.entries)


def _check_label(n, i):
    if n < 1:
        raise LabelOutOfRange(f"surgery coefficient must be positive, got {n}")
    if 2 * abs(i) > n:
        raise LabelOutOfRange(f"label {i} outside |i| <= {n}/2")


def unknot_d(n: int, i: int) -> Fraction:
    _check_label(n, i)
    return Fraction((n - 2 * abs(i)) ** 2, 4 * n) - Fraction(1, 4)


def _require_lspace_slope(genus, n):
    if n < 2 * genus - 1:
        raise SlopeTooSmall(f"slope {n} < 2g-1 = {2 * genus - 1}; the surgery formula is not guaranteed")


def surgery_d(t: TorsionProfile, n: int, i: int) -> Fraction:
    _require_lspace_slope(t.genus, n)
    _check_label(n, i)
    return unknot_d(n, i) - 2 * t[i]


def d_table(t: TorsionProfile, n: int) -> DInvariantTable:
    """Tabulate d(K(n), i) for 0 <= i <= floor(n/2).

    Labels below the genus carry the torsion correction; labels from g to
    g + floor((m-1)/2), where n = 2g + m - 1, are pure unknot values.
    """
    g = t.genus
    _require_lspace_slope(g, n)
    m = n - 2 * g + 1
    top = g + (m - 1) // 2
    if top != n // 2:
        raise AssertionError(f"branch limit {top} != floor(n/2) = {n // 2} for n={n}, g={g}")

    entries, branches = [], []
    for i in range(n // 2 + 1):
        base = Fraction((n - 2 * i) ** 2, 4 * n) - Fraction(1, 4)
        if i < g:
            entries.append(base - 2 * t.values[i])
            branches.append(BRANCH_TORSION)
        else:
            entries.append(base)
            branches.append(BRANCH_UNKNOT)
    return DInvariantTable(n=n, genus=g, entries=tuple(entries), branches=tuple(branches))


def table_csv(table: DInvariantTable, branch=True) -> str:
    head = "i,numerator,denominator" + (",branch" if branch else "")
    rows = [head]
    for i, (d, br) in enumerate(zip(table.entries, table.branches)):
        row = f"{i},{d.numerator},{d.denominator}"
        rows.append(row + (f",{br}" if branch else ""))
    return "\n".join(rows) + "\n"


def fraction_pair(q: Fraction) -> list[int]:
    return [q.numerator, q.denominator]


def table_dict(table: DInvariantTable) -> dict:
    return {
        "n": table.n,
        "genus": table.genus,
        "structure_count": table.structure_count,
        "entries": [
            {"i": i, "d": fraction_pair(d), "branch": br}
            for i, (d, br) in enumerate(zip(table.entries, table.branches))
        ],
    }


def table_json(table: DInvariantTable) -> str:
    return json.dumps(table_dict(table), indent=2) + "\n"

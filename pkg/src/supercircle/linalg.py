"""Exact sparse Gaussian elimination over the rationals.

Rows are dicts ``{column: Fraction}``.  Rows can be fed one at a time, which
lets callers detect the first inconsistent equation while assembling a
system in stages.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping


class RowReducer:
    """Incremental row-echelon form for a system ``sum_c row[c] x_c = rhs``.

    Each stored row is keyed by its pivot, the smallest column with a nonzero
    entry, and is normalized so the pivot entry equals 1.
    """

    def __init__(self):
        self.pivots: dict[int, tuple[dict[int, Fraction], Fraction]] = {}
        self.columns: set[int] = set()
        self.consistent = True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add_column(self, col: int):
        self.columns.add(col)

    def add_row(self, row: Mapping[int, Fraction], rhs=0) -> bool:
        """Insert an equation; returns False if it makes the system inconsistent."""
        r = {c: Fraction(v) for c, v in row.items() if v}
        b = Fraction(rhs)
        self.columns.update(r)
        while r:
            col = min(r)
            piv = self.pivots.get(col)
            if piv is None:
                inv = 1 / r[col]
                self.pivots[col] = ({c: v * inv for c, v in r.items()}, b * inv)
                return True
            prow, pb = piv
            f = r[col]
            for c, v in prow.items():
                nv = r.get(c, 0) - f * v
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
            b -= f * pb
        if b:
            self.consistent = False
            return False
        return True

    def free_columns(self) -> list[int]:
        return sorted(c for c in self.columns if c not in self.pivots)

    def _back_substitute(self, fixed: Mapping[int, Fraction], homogeneous: bool) -> dict[int, Fraction]:
        x: dict[int, Fraction] = {c: Fraction(v) for c, v in fixed.items()}
        for col in sorted(self.pivots, reverse=True):
            prow, pb = self.pivots[col]
            acc = Fraction(0) if homogeneous else pb
            for c, v in prow.items():
                if c != col:
                    acc -= v * x.get(c, 0)
            x[col] = acc
        return {c: v for c, v in x.items() if v}

    def particular_solution(self) -> dict[int, Fraction]:
        """Solution with every free column set to zero."""
        if not self.consistent:
            raise ValueError("system is inconsistent")
        return self._back_substitute({}, homogeneous=False)

    def nullspace(self) -> list[dict[int, Fraction]]:
        """One basis vector per free column (that column set to 1)."""
        return [self._back_substitute({c: 1}, homogeneous=True) for c in self.free_columns()]


def solve(rows, rhs, columns=None):
    """Convenience wrapper: returns (particular, nullspace) or None if inconsistent."""
    red = RowReducer()
    for c in columns or ():
        red.add_column(c)
    for row, b in zip(rows, rhs):
        if not red.add_row(row, b):
            return None
    return red.particular_solution(), red.nullspace()

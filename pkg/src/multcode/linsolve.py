"""Dense homogeneous linear systems over GF(p)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .field import FieldElement, PrimeField


@dataclass(frozen=True)
class Matrix:
    field: PrimeField
    rows: int
    cols: int
    entries: tuple  # row-major ints in [0, p)

    def __post_init__(self):
        if self.rows * self.cols != len(self.entries):
            raise ValueError(f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                             f"got {len(self.entries)}")

    @classmethod
    def from_rows(cls, field: PrimeField, rows: Sequence[Sequence[int]], cols: Optional[int] = None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        p = field.p
        return cls(field, len(rows), cols, tuple(int(v) % p for r in rows for v in r))

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def apply(self, v: Sequence[int]) -> list:
        p = self.field.p
        return [sum(a * int(b) for a, b in zip(self.row(i), v)) % p for i in range(self.rows)]


def rref(rows: list, cols: int, p: int):
    """Reduce ``rows`` (list of int lists, modified in place) to reduced row
    echelon form. The pivot in each column is taken from the lowest-index
    remaining row with a nonzero entry. Returns the pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(cols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r]
        inv = pow(lead[c], -1, p)
        if inv != 1:
            for j in range(c, cols):
                lead[j] = lead[j] * inv % p
        for i in range(nrows):
            if i != r:
                row = rows[i]
                f = row[c]
                if f:
                    for j in range(c, cols):
                        if lead[j]:
                            row[j] = (row[j] - f * lead[j]) % p
        pivots.append(c)
        r += 1
    return pivots


def kernel_vector_raw(rows: list, cols: int, p: int) -> Optional[list]:
    """Canonical nonzero kernel vector of an integer matrix, or None.

    The first free column is set to 1 and every other free column to 0.
    """
    work = [[v % p for v in row] for row in rows]
    pivots = rref(work, cols, p)
    pivot_set = set(pivots)
    free = next((c for c in range(cols) if c not in pivot_set), None)
    if free is None:
        return None
    v = [0] * cols
    v[free] = 1
    for i, c in enumerate(pivots):
        v[c] = (-work[i][free]) % p
    return v


def kernel_vector(M: Matrix) -> Optional[list]:
    """Nonzero ``v`` with ``M v = 0`` as FieldElements, or None if the kernel
    is trivial."""
    rows = [M.row(i) for i in range(M.rows)]
    v = kernel_vector_raw(rows, M.cols, M.field.p)
    if v is None:
        return None
    return [FieldElement(x, M.field) for x in v]

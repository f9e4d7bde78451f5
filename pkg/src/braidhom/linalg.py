"""Exact sparse linear algebra over Z and F_p.

Matrices are stored column-wise: ``columns[j]`` is a dict ``{row: value}``
holding the nonzero entries of column ``j``.  For boundary matrices this
is just "the boundary of cell j".

Integer reduction eliminates unit pivots sparsely first (the common case
for cellular and simplicial boundaries), then finishes the leftover block
with a dense Smith normal form on Python integers.  Nothing is reduced
modulo anything when working over Z.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence


@dataclass
class SparseMatrix:
    nrows: int
    ncols: int
    columns: list[dict[int, int]] = field(default_factory=list)

    def __post_init__(self):
        if not self.columns:
            self.columns = [{} for _ in range(self.ncols)]
        if len(self.columns) != self.ncols:
            raise ValueError("column count mismatch")
        for col in self.columns:
            for r, v in list(col.items()):
                if not 0 <= r < self.nrows:
                    raise ValueError(f"row index {r} out of range")
                if v == 0:
                    del col[r]

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]]) -> "SparseMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        cols = [{} for _ in range(ncols)]
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            for j, v in enumerate(row):
                if v:
                    cols[j][i] = int(v)
        return cls(nrows, ncols, cols)

    @classmethod
    def from_triples(cls, nrows: int, ncols: int, triples: Iterable[tuple[int, int, int]]) -> "SparseMatrix":
        cols = [{} for _ in range(ncols)]
        for r, c, v in triples:
            if not 0 <= c < ncols:
                raise ValueError(f"column index {c} out of range")
            cols[c][r] = cols[c].get(r, 0) + int(v)
        return cls(nrows, ncols, cols)

    def triples(self) -> list[tuple[int, int, int]]:
        return [(r, c, v) for c, col in enumerate(self.columns) for r, v in sorted(col.items())]

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for c, col in enumerate(self.columns):
            for r, v in col.items():
                out[r][c] = v
        return out

    def nnz(self) -> int:
        return sum(len(c) for c in self.columns)

    def is_zero(self, modulus: int = 0) -> bool:
        if modulus:
            return all(v % modulus == 0 for col in self.columns for v in col.values())
        return all(not col for col in self.columns)

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        """self @ other."""
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out = []
        for col in other.columns:
            acc: dict[int, int] = {}
            for k, b in col.items():
                for r, a in self.columns[k].items():
                    acc[r] = acc.get(r, 0) + a * b
            out.append({r: v for r, v in acc.items() if v})
        return SparseMatrix(self.nrows, other.ncols, out)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "SparseMatrix":
        rindex = {r: i for i, r in enumerate(rows)}
        new_cols = []
        for c in cols:
            new_cols.append({rindex[r]: v for r, v in self.columns[c].items() if r in rindex})
        return SparseMatrix(len(rows), len(cols), new_cols)


def _as_sparse(m) -> SparseMatrix:
    if isinstance(m, SparseMatrix):
        return m
    return SparseMatrix.from_dense(m)


# -- integers -----------------------------------------------------------------

def _unit_elimination(m: SparseMatrix) -> tuple[int, dict[int, dict[int, int]]]:
    """Eliminate +-1 pivots sparsely.

    Returns the number of unit pivots removed and the leftover matrix as a
    row-major dict ``{row: {col: value}}`` (only rows/cols still alive).
    Pivot choice: scan columns in index order; among rows with a unit
    entry in the column take the one with fewest nonzeros, ties to the
    lowest row index.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for c, col in enumerate(m.columns):
        if col:
            cols[c] = set(col)
        for r, v in col.items():
            rows.setdefault(r, {})[c] = v
    units = 0
    progress = True
    while progress:
        progress = False
        for c in sorted(cols):
            rset = cols.get(c)
            if not rset:
                cols.pop(c, None)
                continue
            best = None
            for r in rset:
                v = rows[r][c]
                if v == 1 or v == -1:
                    key = (len(rows[r]), r)
                    if best is None or key < best:
                        best = key
            if best is None:
                continue
            p = best[1]
            prow = rows.pop(p)
            pv = prow[c]
            for r in sorted(rset):
                if r == p:
                    continue
                row = rows[r]
                factor = row[c] * pv  # pv = +-1 so pv^-1 = pv
                for cc, val in prow.items():
                    nv = row.get(cc, 0) - factor * val
                    if nv:
                        if cc not in row:
                            cols[cc].add(r)
                        row[cc] = nv
                    else:
                        if cc in row:
                            del row[cc]
                            cols[cc].discard(r)
            for cc in prow:
                if cc != c:
                    cols[cc].discard(p)
            del cols[c]
            units += 1
            progress = True
    leftover = {r: row for r, row in rows.items() if row}
    return units, leftover


def _dense_snf_diagonal(a: list[list[int]]) -> list[int]:
    """Nonzero diagonal of a Smith form of a dense integer matrix (not yet chained)."""
    a = [row[:] for row in a]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    diag = []
    t = 0
    while t < nr and t < nc:
        # smallest nonzero |entry| in the active block; ties lowest row, then column
        piv = None
        for i in range(t, nr):
            row = a[i]
            for j in range(t, nc):
                v = row[j]
                if v and (piv is None or abs(v) < piv[0]):
                    piv = (abs(v), i, j)
        if piv is None:
            break
        _, i, j = piv
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            done = True
            p = a[t][t]
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, nc):
                            ri[j] -= q * rt[j]
                    if a[i][t]:
                        done = False
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for row in a[t:]:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        done = False
            if done:
                break
            # move the smallest remaining entry of row/col t onto the pivot
            best = (abs(a[t][t]), t, t)
            for i in range(t + 1, nr):
                if a[i][t] and abs(a[i][t]) < best[0]:
                    best = (abs(a[i][t]), i, t)
            for j in range(t + 1, nc):
                if a[t][j] and abs(a[t][j]) < best[0]:
                    best = (abs(a[t][j]), t, j)
            _, i, j = best
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def _chain(diag: Iterable[int]) -> tuple[int, ...]:
    """Diagonal entries -> invariant factors d1 | d2 | ... (keeps the 1s)."""
    d = sorted(x for x in diag if x)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                if d[j] % d[i]:
                    g = gcd(d[i], d[j])
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
        d.sort()
    return tuple(d)


def smith_normal_form(m) -> tuple[tuple[int, ...], int]:
    """Invariant factors and rank of an integer matrix.

    >>> smith_normal_form([[2, 4], [6, 8]])
    ((2, 4), 2)
    """
    sm = _as_sparse(m)
    units, left = _unit_elimination(sm)
    if not left:
        return (1,) * units, units
    rows = sorted(left)
    cols = sorted({c for row in left.values() for c in row})
    cindex = {c: k for k, c in enumerate(cols)}
    dense = [[0] * len(cols) for _ in rows]
    for i, r in enumerate(rows):
        for c, v in left[r].items():
            dense[i][cindex[c]] = v
    rest = _dense_snf_diagonal(dense)
    factors = _chain([1] * units + rest)
    return factors, len(factors)


# -- prime fields -------------------------------------------------------------

def _rank_mod2(m: SparseMatrix) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for col in m.columns:
        v = 0
        for r, val in col.items():
            if val & 1:
                v |= 1 << r
        while v:
            top = v.bit_length() - 1
            other = pivots.get(top)
            if other is None:
                pivots[top] = v
                rank += 1
                break
            v ^= other
    return rank


def _rank_mod_p(m: SparseMatrix, p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}  # pivot row -> normalized column
    rank = 0
    for col in m.columns:
        v = {r: x % p for r, x in col.items() if x % p}
        while v:
            top = max(v)
            other = pivots.get(top)
            if other is None:
                inv = pow(v[top], -1, p)
                pivots[top] = {r: x * inv % p for r, x in v.items()}
                rank += 1
                break
            f = v[top]
            for r, x in other.items():
                nv = (v.get(r, 0) - f * x) % p
                if nv:
                    v[r] = nv
                else:
                    v.pop(r, None)
    return rank


def rank_mod_p(m, p: int) -> int:
    """Rank of an integer matrix reduced modulo the prime ``p``."""
    sm = _as_sparse(m)
    if p == 2:
        return _rank_mod2(sm)
    return _rank_mod_p(sm, p)


def rank_over(m, characteristic: int) -> int:
    if characteristic == 0:
        return smith_normal_form(m)[1]
    return rank_mod_p(m, characteristic)

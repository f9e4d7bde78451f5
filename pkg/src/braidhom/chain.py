"""Finite chain complexes with named cells and their homology."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .errors import ChainComplexError, NotASubcomplexError, TwistedCoefficientsError
from .groups import Coefficients, GradedAbelianGroup, ZZ
from .linalg import SparseMatrix, rank_mod_p, smith_normal_form


@dataclass(frozen=True)
class ChainComplex:
    """Cells per degree plus boundary matrices ``C_q -> C_{q-1}``.

    ``boundaries[q]`` has one column per q-cell and one row per
    (q-1)-cell.  ``characteristic`` is 0 for an integral complex, or p when
    the entries are only meaningful mod p (models built over F_p).
    ``∂∂ = 0`` is checked on construction.
    """

    cells: Mapping[int, tuple[str, ...]]
    boundaries: Mapping[int, SparseMatrix]
    characteristic: int = 0

    def __post_init__(self):
        cells = {int(q): tuple(names) for q, names in self.cells.items() if names}
        if any(q < 0 for q in cells):
            raise ChainComplexError("negative degree cells")
        bds = {}
        for q in cells:
            rows = len(cells.get(q - 1, ()))
            m = self.boundaries.get(q)
            if m is None:
                m = SparseMatrix(rows, len(cells[q]))
            if m.ncols != len(cells[q]) or m.nrows != rows:
                raise ChainComplexError(
                    f"boundary in degree {q} has shape {m.nrows}x{m.ncols}, "
                    f"expected {rows}x{len(cells[q])}")
            bds[q] = m
        object.__setattr__(self, "cells", dict(sorted(cells.items())))
        object.__setattr__(self, "boundaries", bds)
        for q in cells:
            if q - 1 in cells and q - 2 in cells:
                if not bds[q - 1].matmul(bds[q]).is_zero(self.characteristic):
                    raise ChainComplexError(f"boundary squared is nonzero in degree {q}")

    @property
    def top_degree(self) -> int:
        return max(self.cells, default=-1)

    def count(self, q: int) -> int:
        return len(self.cells.get(q, ()))

    def boundary(self, q: int) -> SparseMatrix:
        if q in self.boundaries:
            return self.boundaries[q]
        return SparseMatrix(self.count(q - 1), self.count(q))

    def euler_characteristic(self) -> int:
        return sum((-1) ** q * len(c) for q, c in self.cells.items())

    def index(self) -> dict[str, tuple[int, int]]:
        return {name: (q, i) for q, names in self.cells.items() for i, name in enumerate(names)}

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        return {
            "characteristic": self.characteristic,
            "cells": {str(q): list(names) for q, names in self.cells.items()},
            "boundaries": {str(q): [list(t) for t in m.triples()]
                           for q, m in self.boundaries.items() if m.nnz()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "ChainComplex":
        cells = {int(q): tuple(v) for q, v in data["cells"].items()}
        bds = {}
        for q, triples in data.get("boundaries", {}).items():
            q = int(q)
            bds[q] = SparseMatrix.from_triples(len(cells.get(q - 1, ())), len(cells.get(q, ())),
                                               (tuple(t) for t in triples))
        return cls(cells, bds, int(data.get("characteristic", 0)))

    @classmethod
    def from_boundary_dicts(cls, cells: Mapping[int, Sequence[str]],
                            boundary: Mapping[str, Mapping[str, int]],
                            characteristic: int = 0) -> "ChainComplex":
        """Build from ``boundary[cell] = {face_cell: coefficient}``."""
        pos = {name: i for q, names in cells.items() for i, name in enumerate(names)}
        bds = {}
        for q, names in cells.items():
            cols = []
            for name in names:
                col = {}
                for face, v in boundary.get(name, {}).items():
                    if characteristic:
                        v %= characteristic
                    if v:
                        if face not in pos or face not in cells.get(q - 1, ()):
                            raise ChainComplexError(f"face {face!r} of {name!r} is not a {q - 1}-cell")
                        col[pos[face]] = col.get(pos[face], 0) + v
                cols.append(col)
            bds[q] = SparseMatrix(len(cells.get(q - 1, ())), len(names), cols)
        return cls(cells, bds, characteristic)


def _check_coeff(c: ChainComplex, coeff: Coefficients):
    if coeff.kind == "pmz":
        raise TwistedCoefficientsError()
    if c.characteristic and coeff.characteristic != c.characteristic:
        raise ValueError(f"complex is defined mod {c.characteristic}; cannot take {coeff} homology")


def homology(c: ChainComplex, coeff: Coefficients | str = ZZ) -> GradedAbelianGroup:
    """H_q = ker ∂_q / im ∂_{q+1} for every degree of ``c``."""
    coeff = Coefficients.parse(coeff)
    _check_coeff(c, coeff)
    degrees = list(c.cells)
    if coeff.kind == "z":
        snf = {q: smith_normal_form(c.boundary(q)) for q in degrees}
        out = {}
        for q in degrees:
            rank_out = snf[q][1] if q in snf else 0
            factors, rank_in = snf.get(q + 1, ((), 0))
            free = c.count(q) - rank_out - rank_in
            out[q] = (free, tuple(f for f in factors if f > 1))
        return GradedAbelianGroup(out)
    p = coeff.characteristic
    ranks = {q: rank_mod_p(c.boundary(q), p) for q in degrees}
    return GradedAbelianGroup({q: (c.count(q) - ranks[q] - ranks.get(q + 1, 0), ()) for q in degrees})


def subcomplex_closed(c: ChainComplex, selected: set[tuple[int, int]]) -> tuple[int, int] | None:
    """First selected cell whose boundary leaves the selection, or None."""
    for q, i in sorted(selected):
        for r, v in c.boundary(q).columns[i].items():
            if c.characteristic and v % c.characteristic == 0:
                continue
            if (q - 1, r) not in selected:
                return (q, i)
    return None


def quotient_complex(c: ChainComplex, in_sub: Callable[[str], bool]) -> ChainComplex:
    """The quotient C/A for the subcomplex A of cells satisfying ``in_sub``."""
    selected = {(q, i) for q, names in c.cells.items() for i, n in enumerate(names) if in_sub(n)}
    bad = subcomplex_closed(c, selected)
    if bad is not None:
        q, i = bad
        raise NotASubcomplexError(f"not a subcomplex: boundary of {c.cells[q][i]!r} leaves the selection")
    keep = {q: [i for i in range(len(names)) if (q, i) not in selected] for q, names in c.cells.items()}
    cells = {q: tuple(c.cells[q][i] for i in idx) for q, idx in keep.items()}
    bds = {q: c.boundary(q).submatrix(keep.get(q - 1, []), idx) for q, idx in keep.items()}
    return ChainComplex(cells, bds, c.characteristic)


def relative_homology(c: ChainComplex, sub: Callable[[str], bool],
                      coeff: Coefficients | str = ZZ) -> GradedAbelianGroup:
    """Homology of the pair (C, A) where A is the subcomplex picked by ``sub``."""
    coeff = Coefficients.parse(coeff)
    _check_coeff(c, coeff)
    return homology(quotient_complex(c, sub), coeff)


def homological_connectivity(g: GradedAbelianGroup) -> float | int:
    """(least degree with a nonzero group) - 1, for a reduced homology group.

    All groups vanishing gives infinity (the contractible convention).
    """
    if g.is_zero():
        return math.inf
    return min(g.degrees()) - 1


def cohomological_dimension(g: GradedAbelianGroup) -> int:
    return g.top_degree

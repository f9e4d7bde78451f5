"""Finite abstract simplicial complexes and a small built-in library."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Sequence

from ..chain import ChainComplex
from ..errors import BudgetExceeded
from ..linalg import SparseMatrix

DEFAULT_BUDGET_F2 = 5_000_000
DEFAULT_BUDGET_Z = 500_000
BUDGET_ENV = "BRAIDHOM_BUDGET"


def default_budget(characteristic: int) -> int:
    """Simplex budget for one oracle job; ``BRAIDHOM_BUDGET`` overrides both defaults."""
    env = os.environ.get(BUDGET_ENV)
    if env:
        return int(env)
    return DEFAULT_BUDGET_Z if characteristic == 0 else DEFAULT_BUDGET_F2


@dataclass(frozen=True)
class SimplicialComplex:
    """Vertices (labels, in a fixed order) and facets (sets of vertex indices).

    Simplices are sorted tuples of vertex indices; the vertex order doubles
    as the orientation used for boundary matrices.
    """

    vertices: tuple[Hashable, ...]
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise ValueError("duplicate vertex labels")
        fs = set()
        for f in self.facets:
            t = tuple(sorted(set(int(v) for v in f)))
            if not t:
                raise ValueError("empty facet")
            if t[0] < 0 or t[-1] >= n:
                raise ValueError(f"facet {f} references a missing vertex")
            fs.add(t)
        # drop facets contained in other facets
        proper = set()
        for g in fs:
            for k in range(1, len(g)):
                proper.update(combinations(g, k))
        maximal = [f for f in fs if f not in proper]
        covered = {v for f in maximal for v in f}
        maximal += [(v,) for v in range(n) if v not in covered]
        object.__setattr__(self, "facets", tuple(sorted(maximal, key=lambda f: (len(f), f))))

    @classmethod
    def from_facets(cls, facets: Iterable[Sequence[Hashable]],
                    vertices: Sequence[Hashable] | None = None) -> "SimplicialComplex":
        """Build from facets given by vertex labels."""
        facets = [tuple(f) for f in facets]
        if vertices is None:
            seen: dict = {}
            for f in facets:
                for v in f:
                    seen.setdefault(v, None)
            try:
                vertices = sorted(seen)
            except TypeError:
                vertices = list(seen)
        index = {v: i for i, v in enumerate(vertices)}
        return cls(tuple(vertices), tuple(tuple(index[v] for v in f) for f in facets))

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def simplices(self, budget: int | None = None) -> dict[int, list[tuple[int, ...]]]:
        out: set[tuple[int, ...]] = set()
        for f in self.facets:
            for k in range(1, len(f) + 1):
                out.update(combinations(f, k))
                if budget is not None and len(out) > budget:
                    raise BudgetExceeded(len(out), budget, "simplicial complex")
        by_dim: dict[int, list[tuple[int, ...]]] = {}
        for s in sorted(out):
            by_dim.setdefault(len(s) - 1, []).append(s)
        return by_dim

    def count(self) -> int:
        return sum(len(v) for v in self.simplices().values())

    def label(self, s: Sequence[int]) -> str:
        return "[" + ",".join(_fmt(self.vertices[v]) for v in s) + "]"

    def chain_complex(self, characteristic: int = 0, budget: int | None = None) -> ChainComplex:
        by_dim = self.simplices(budget)
        cells = {q: tuple(self.label(s) for s in ss) for q, ss in by_dim.items()}
        bds = {}
        for q, ss in by_dim.items():
            if q == 0:
                continue
            pos = {s: i for i, s in enumerate(by_dim[q - 1])}
            cols = [{pos[s[:a] + s[a + 1:]]: (-1) ** a for a in range(q + 1)} for s in ss]
            bds[q] = SparseMatrix(len(by_dim[q - 1]), len(ss), cols)
        return ChainComplex(cells, bds, characteristic)

    def vertex_index(self, label: Hashable) -> int:
        try:
            return self.vertices.index(label)
        except ValueError:
            raise KeyError(f"no vertex {label!r}") from None

    # -- JSON --------------------------------------------------------------
    def to_json(self) -> dict:
        return {"vertices": [_jsonable(v) for v in self.vertices],
                "facets": [[_jsonable(self.vertices[v]) for v in f] for f in self.facets]}

    @classmethod
    def from_json(cls, data: Mapping | Sequence) -> "SimplicialComplex":
        """Accept ``{"facets": [[...], ...]}`` or a bare facet list."""
        if isinstance(data, Mapping):
            facets = data["facets"]
            verts = data.get("vertices")
        else:
            facets, verts = data, None
        conv = lambda v: tuple(v) if isinstance(v, list) else v  # noqa: E731
        return cls.from_facets([[conv(v) for v in f] for f in facets],
                               [conv(v) for v in verts] if verts is not None else None)


def _fmt(v) -> str:
    if isinstance(v, tuple):
        return "(" + ",".join(_fmt(x) for x in v) + ")"
    return str(v)


def _jsonable(v):
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    return v


# -- built-in library -------------------------------------------------------------

def point() -> SimplicialComplex:
    return SimplicialComplex.from_facets([[0]])


def interval() -> SimplicialComplex:
    return SimplicialComplex.from_facets([[0, 1]])


def circle(m: int = 3) -> SimplicialComplex:
    """Boundary of an m-gon (m >= 3)."""
    if m < 3:
        raise ValueError("a triangulated circle needs at least 3 vertices")
    return SimplicialComplex.from_facets([[i, (i + 1) % m] for i in range(m)])


def sphere_boundary(n: int) -> SimplicialComplex:
    """∂Δ^{n+1}, a triangulated S^n."""
    return SimplicialComplex.from_facets(list(combinations(range(n + 2), n + 1)))


def torus() -> SimplicialComplex:
    """Möbius' minimal 7-vertex torus."""
    facets = []
    for i in range(7):
        facets.append([i, (i + 1) % 7, (i + 3) % 7])
        facets.append([i, (i + 2) % 7, (i + 3) % 7])
    return SimplicialComplex.from_facets(facets)


def wedge(*parts: SimplicialComplex) -> SimplicialComplex:
    """Glue each part's first vertex to one common basepoint "*".

    Other vertices are relabelled ``(i, label)`` by summand index.
    """
    if not parts:
        return point()
    facets = []
    for i, x in enumerate(parts):
        base = x.vertices[0]
        rename = {v: ("*" if v == base else f"{i}.{_fmt(v)}") for v in x.vertices}
        facets += [[rename[x.vertices[v]] for v in f] for f in x.facets]
    verts = ["*"] + [f"{i}.{_fmt(v)}" for i, x in enumerate(parts) for v in x.vertices[1:]]
    return SimplicialComplex.from_facets(facets, verts)


def figure_eight() -> SimplicialComplex:
    return wedge(circle(3), circle(3))


BUILTINS = {
    "point": point,
    "interval": interval,
    "circle": lambda: circle(3),
    "circle3": lambda: circle(3),
    "circle4": lambda: circle(4),
    "S1": lambda: circle(3),
    "S2": lambda: sphere_boundary(2),
    "S3": lambda: sphere_boundary(3),
    "sphere2": lambda: sphere_boundary(2),
    "sphere3": lambda: sphere_boundary(3),
    "torus": torus,
    "figure-eight": figure_eight,
}


def load_space(spec: str) -> SimplicialComplex:
    """A builtin name or a path to a JSON facet list."""
    if spec in BUILTINS:
        return BUILTINS[spec]()
    with open(spec) as fh:
        return SimplicialComplex.from_json(json.load(fh))

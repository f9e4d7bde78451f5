"""Symmetric and truncated products of finite simplicial complexes.

X^n is triangulated by the staircase (ordered product) triangulation: a
k-simplex is an n-tuple of *columns*, each a non-decreasing sequence of
k+1 vertices of X spanning a simplex of X, such that no two consecutive
rows agree in every column.  The symmetric group permutes the columns
and preserves the vertex order of every simplex, so each orbit is a
simplex of a Δ-complex whose realization is SP^n X; an orbit is named by
its sorted tuple of columns.

TP^n X is the further quotient by [x, x, y, ...] ~ [*, *, y, ...].  On
cells this replaces two equal columns by two constant basepoint columns.
The relation commutes with faces, so the quotient is a simplicial set:
cells related to a degenerate simplex (two equal consecutive rows) die,
the rest are grouped by union-find.  The stage filtration TP^{n-m} is
the set of classes with a representative carrying m basepoint columns.

The barycentric route (:func:`regularize` and :func:`orbit_quotient`)
is kept as an independent cross-check of the staircase orbit complex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Hashable, Mapping, Sequence

from ..chain import ChainComplex, homology, quotient_complex
from ..errors import BudgetExceeded
from ..groups import Coefficients, GradedAbelianGroup, ZZ
from ..linalg import SparseMatrix
from .complex import SimplicialComplex, default_budget

MODES = ("SP", "TP", "SPbar", "TPbar")

Column = tuple[int, ...]
Cell = tuple[Column, ...]


# -- explicit product triangulation ---------------------------------------------------

@dataclass(frozen=True)
class GroupComplex:
    """A simplicial complex with a group acting by vertex permutations.

    ``group`` lists every group element as a tuple ``g`` with ``g[v]`` the
    image of vertex index ``v``.
    """

    complex: SimplicialComplex
    group: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.complex.vertices)
        for g in self.group:
            if sorted(g) != list(range(n)):
                raise ValueError("group elements must permute the vertices")


def _shuffles(dims: Sequence[int]) -> list[tuple[int, ...]]:
    """Orders in which coordinates step: words with dims[i] copies of letter i."""
    letters = [i for i, d in enumerate(dims) for _ in range(d)]
    return sorted(set(permutations(letters)))


def product_triangulation(x: SimplicialComplex, n: int, budget: int | None = None) -> GroupComplex:
    """Staircase triangulation of X^n with 𝔖_n permuting coordinates."""
    if n < 1:
        raise ValueError("n must be >= 1")
    budget = default_budget(0) if budget is None else budget
    verts = [tuple(t) for t in _product_tuples(len(x.vertices), n)]
    index = {v: i for i, v in enumerate(verts)}
    facets = []
    for choice in _product_tuples(len(x.facets), n):
        fs = [x.facets[c] for c in choice]
        dims = [len(f) - 1 for f in fs]
        for word in _shuffles(dims):
            pos = [0] * n
            chain = [tuple(f[0] for f in fs)]
            for i in word:
                pos[i] += 1
                chain.append(tuple(fs[j][pos[j]] for j in range(n)))
            facets.append(tuple(index[v] for v in chain))
            if len(facets) > budget:
                raise BudgetExceeded(len(facets), budget, "product triangulation")
    labels = tuple(tuple(x.vertices[i] for i in v) for v in verts)
    cx = SimplicialComplex(labels, tuple(facets))
    group = []
    for perm in permutations(range(n)):
        group.append(tuple(index[tuple(v[perm[j]] for j in range(n))] for v in verts))
    return GroupComplex(cx, tuple(group))


def _product_tuples(m: int, n: int):
    if n == 0:
        yield ()
        return
    for rest in _product_tuples(m, n - 1):
        for i in range(m):
            yield rest + (i,)


# -- barycentric regularization -------------------------------------------------------

def barycentric_subdivision(gx: GroupComplex, budget: int | None = None) -> GroupComplex:
    """sd(X) with the induced action; new vertices are ordered by dimension."""
    x = gx.complex
    budget = default_budget(0) if budget is None else budget
    by_dim = x.simplices(budget)
    sims = [s for q in sorted(by_dim) for s in by_dim[q]]
    index = {s: i for i, s in enumerate(sims)}
    facets = []
    for f in x.facets:
        for order in permutations(f):
            chain = [tuple(sorted(order[:j])) for j in range(1, len(order) + 1)]
            facets.append(tuple(index[c] for c in chain))
            if len(facets) > budget:
                raise BudgetExceeded(len(facets), budget, "barycentric subdivision")
    labels = tuple(x.label(s) for s in sims)
    group = tuple(tuple(index[tuple(sorted(g[v] for v in s))] for s in sims) for g in gx.group)
    return GroupComplex(SimplicialComplex(labels, tuple(facets)), group)


def regularize(gx: GroupComplex, passes: int = 2, budget: int | None = None) -> GroupComplex:
    """Apply barycentric subdivision ``passes`` times (always, even for trivial actions)."""
    for _ in range(passes):
        gx = barycentric_subdivision(gx, budget)
    return gx


def is_regular(gx: GroupComplex) -> bool:
    """Check the two regularity conditions for the action.

    (a) an element fixing a simplex setwise fixes it pointwise;
    (b) if v_0..v_k span a simplex and g_0 v_0, ..., g_k v_k do too, one
        element g has g v_i = g_i v_i for all i.
    Condition (b) is exponential in the simplex size; desk-scale only.
    """
    by_dim = gx.complex.simplices()
    simplices = {s for ss in by_dim.values() for s in ss}
    for s in simplices:
        for g in gx.group:
            img = [g[v] for v in s]
            if set(img) == set(s) and img != list(s):
                return False
        for choice in _product_tuples(len(gx.group), len(s)):
            img = tuple(gx.group[c][v] for c, v in zip(choice, s))
            if tuple(sorted(set(img))) in simplices and len(set(img)) == len(s):
                if not any(all(g[v] == w for v, w in zip(s, img)) for g in gx.group):
                    return False
    return True


def orbit_quotient(gx: GroupComplex, characteristic: int = 0, budget: int | None = None) -> ChainComplex:
    """Chains of the orbit Δ-complex X/G.

    Valid when every group element preserves the vertex order of every
    simplex (true after one barycentric subdivision, and for the
    staircase product); this is checked.
    """
    x = gx.complex
    by_dim = x.simplices(budget)
    orbits: dict[int, list[tuple[int, ...]]] = {}
    for q, ss in by_dim.items():
        seen = set()
        for s in ss:
            imgs = []
            for g in gx.group:
                img = tuple(g[v] for v in s)
                if list(img) != sorted(img):
                    raise ValueError("action does not preserve simplex vertex order; regularize first")
                imgs.append(img)
            seen.add(min(imgs))
        orbits[q] = sorted(seen)
    canon = {}
    for q, ss in by_dim.items():
        for s in ss:
            canon[s] = min(tuple(g[v] for v in s) for g in gx.group)
    cells = {q: tuple(x.label(s) for s in os_) for q, os_ in orbits.items()}
    bds = {}
    for q, os_ in orbits.items():
        if q == 0:
            continue
        pos = {s: i for i, s in enumerate(orbits[q - 1])}
        cols = []
        for s in os_:
            col: dict[int, int] = {}
            for a in range(q + 1):
                r = pos[canon[s[:a] + s[a + 1:]]]
                col[r] = col.get(r, 0) + (-1) ** a
            cols.append({r: v for r, v in col.items() if v})
        bds[q] = SparseMatrix(len(orbits[q - 1]), len(os_), cols)
    return ChainComplex(cells, bds, characteristic)


# -- staircase orbit cells ----------------------------------------------------------------

def _columns(x: SimplicialComplex, k: int) -> list[tuple[Column, int]]:
    """All columns of length k+1 with their step masks (bit g = change between rows g, g+1)."""
    out = []
    for q, sims in x.simplices().items():
        if q > k:
            continue
        for s in sims:
            for steps in combinations(range(k), q):
                col = [s[0]]
                i = 0
                mask = 0
                for g in range(k):
                    if g in steps:
                        i += 1
                        mask |= 1 << g
                    col.append(s[i])
                out.append((tuple(col), mask))
    out.sort()
    return out


def _orbit_cells(cols: list[tuple[Column, int]], n: int, k: int, max_step: int,
                 repeat: bool) -> list[Cell]:
    """Sorted n-multisets (or n-sets) of columns whose step masks cover all k gaps."""
    full = (1 << k) - 1
    out: list[Cell] = []
    chosen: list[Column] = []

    def rec(start: int, mask: int):
        left = n - len(chosen)
        if left == 0:
            if mask == full:
                out.append(tuple(chosen))
            return
        if k - bin(mask).count("1") > left * max_step:
            return
        for i in range(start, len(cols)):
            c, m = cols[i]
            chosen.append(c)
            rec(i if repeat else i + 1, mask | m)
            chosen.pop()

    rec(0, 0)
    return out


def sp_cells(x: SimplicialComplex, n: int, budget: int | None = None,
             distinct: bool = False, avoid: int | None = None) -> dict[int, list[Cell]]:
    """Nondegenerate orbit cells of SP^n X, by dimension.

    ``distinct`` keeps only cells with pairwise different columns and
    ``avoid`` drops cells having a constant column at that vertex.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    budget = default_budget(0) if budget is None else budget
    out: dict[int, list[Cell]] = {}
    total = 0
    for k in range(n * x.dimension + 1):
        cols = _columns(x, k)
        if avoid is not None:
            cols = [(c, m) for c, m in cols if c != (avoid,) * (k + 1)]
        cells = _orbit_cells(cols, n, k, max(x.dimension, 0), not distinct)
        total += len(cells)
        if total > budget:
            raise BudgetExceeded(total, budget, f"SP^{n} orbit cells (dimension {k})")
        if cells:
            out[k] = cells
    return out


def _face(cell: Cell, a: int) -> Cell:
    return tuple(sorted(c[:a] + c[a + 1:] for c in cell))


def _degenerate(cell: Cell) -> bool:
    k = len(cell[0]) - 1
    return any(all(c[a] == c[a + 1] for c in cell) for a in range(k))


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, a):
        p = self.parent.setdefault(a, a)
        if p == a:
            return a
        root = self.find(p)
        self.parent[a] = root
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # the smaller cell stays root so representatives are canonical
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


@dataclass(frozen=True)
class QuotientComplex:
    """Cellular chains of SP^n X or TP^n X with the basepoint stage filtration.

    ``basepoint_columns[name]`` is the largest number of basepoint columns
    among the cell's representatives: the cell lies in the image of the
    stage n - m exactly when this is at least m.
    """

    mode: str
    n: int
    chain: ChainComplex
    basepoint_columns: Mapping[str, int] = field(default_factory=dict)

    def stage_predicate(self, stage: int) -> Callable[[str], bool]:
        """Cells of the image of stage ``stage`` (stage < 0 selects nothing)."""
        need = self.n - stage
        if stage < 0:
            return lambda name: False
        return lambda name: self.basepoint_columns.get(name, 0) >= need

    def relative(self, stage: int) -> ChainComplex:
        """Chains of the pair (this, stage)."""
        return quotient_complex(self.chain, self.stage_predicate(stage))


def _cell_name(x: SimplicialComplex, cell: Cell) -> str:
    return "|".join(",".join(str(x.vertices[v]) for v in c) for c in cell)


def _basepoint_index(x: SimplicialComplex, basepoint) -> int | None:
    if basepoint is None:
        return None
    return x.vertex_index(basepoint)


def symmetric_product(x: SimplicialComplex, n: int, basepoint: Hashable | None = None,
                      characteristic: int = 0, budget: int | None = None) -> QuotientComplex:
    b = _basepoint_index(x, basepoint)
    cells = sp_cells(x, n, default_budget(characteristic) if budget is None else budget)
    names = {q: tuple(_cell_name(x, c) for c in cs) for q, cs in cells.items()}
    bds = {}
    for q, cs in cells.items():
        if q == 0:
            continue
        pos = {c: i for i, c in enumerate(cells[q - 1])}
        cols = []
        for c in cs:
            col: dict[int, int] = {}
            for a in range(q + 1):
                r = pos[_face(c, a)]
                col[r] = col.get(r, 0) + (-1) ** a
            cols.append({r: v for r, v in col.items() if v})
        bds[q] = SparseMatrix(len(cells[q - 1]), len(cs), cols)
    bp = {}
    if b is not None:
        for q, cs in cells.items():
            const = (b,) * (q + 1)
            for c, name in zip(cs, names[q]):
                bp[name] = sum(1 for col in c if col == const)
    return QuotientComplex("SP", n, ChainComplex(names, bds, characteristic), bp)


def truncated_product(x: SimplicialComplex, n: int, basepoint: Hashable,
                      characteristic: int = 0, budget: int | None = None) -> QuotientComplex:
    if basepoint is None:
        raise ValueError("truncated products need a basepoint vertex")
    b = _basepoint_index(x, basepoint)
    cells = sp_cells(x, n, default_budget(characteristic) if budget is None else budget)
    uf = _UnionFind()
    dead = set()
    for q, cs in cells.items():
        const = (b,) * (q + 1)
        for c in cs:
            uf.find(c)
            seen = set()
            for i in range(len(c) - 1):
                col = c[i]
                if col == c[i + 1] and col != const and col not in seen:
                    seen.add(col)
                    rest = list(c)
                    rest.remove(col)
                    rest.remove(col)
                    img = tuple(sorted(rest + [const, const]))
                    if _degenerate(img):
                        dead.add(c)
                    else:
                        uf.union(c, img)
    dead_roots = {uf.find(c) for c in dead}
    classes: dict[int, dict[Cell, list[Cell]]] = {}
    for q, cs in cells.items():
        for c in cs:
            r = uf.find(c)
            if r not in dead_roots:
                classes.setdefault(q, {}).setdefault(r, []).append(c)
    reps = {q: sorted(cl) for q, cl in classes.items()}
    names = {q: tuple(_cell_name(x, r) for r in rs) for q, rs in reps.items()}
    bds = {}
    for q, rs in reps.items():
        if q == 0:
            continue
        pos = {r: i for i, r in enumerate(reps.get(q - 1, []))}
        cols = []
        for r in rs:
            col: dict[int, int] = {}
            for a in range(q + 1):
                f = uf.find(_face(r, a))
                if f in dead_roots:
                    continue
                i = pos[f]
                col[i] = col.get(i, 0) + (-1) ** a
            cols.append({i: v for i, v in col.items() if v})
        bds[q] = SparseMatrix(len(reps.get(q - 1, [])), len(rs), cols)
    bp = {}
    for q, cl in classes.items():
        const = (b,) * (q + 1)
        for r, members in cl.items():
            bp[_cell_name(x, r)] = max(sum(1 for col in m if col == const) for m in members)
    return QuotientComplex("TP", n, ChainComplex(names, bds, characteristic), bp)


def reduced_truncated_product(x: SimplicialComplex, n: int, basepoint: Hashable,
                              characteristic: int = 0, budget: int | None = None) -> ChainComplex:
    """Chains of the pair (TP^n, TP^{n-1}) built directly.

    A class survives in the quotient TP^n / TP^{n-1} exactly when it is a
    single cell with n distinct columns, none constant at the basepoint;
    faces landing on the fat diagonal or the basepoint ideal are dropped.
    """
    if basepoint is None:
        raise ValueError("truncated products need a basepoint vertex")
    b = _basepoint_index(x, basepoint)
    budget = default_budget(characteristic) if budget is None else budget
    cells = sp_cells(x, n, budget, distinct=True, avoid=b)
    names = {q: tuple(_cell_name(x, c) for c in cs) for q, cs in cells.items()}
    bds = {}
    for q, cs in cells.items():
        if q == 0:
            continue
        pos = {c: i for i, c in enumerate(cells.get(q - 1, []))}
        cols = []
        for c in cs:
            col: dict[int, int] = {}
            for a in range(q + 1):
                i = pos.get(_face(c, a))
                if i is not None:
                    col[i] = col.get(i, 0) + (-1) ** a
            cols.append({i: v for i, v in col.items() if v})
        bds[q] = SparseMatrix(len(cells.get(q - 1, [])), len(cs), cols)
    return ChainComplex(names, bds, characteristic)


def quotient_space(x: SimplicialComplex, mode: str, n: int, basepoint: Hashable | None = None,
                   characteristic: int = 0, budget: int | None = None) -> QuotientComplex:
    """Cell structure for SP^n, TP^n, or their reduced quotients.

    For ``SPbar``/``TPbar`` the returned chains are those of the pair
    (SP^n, SP^{n-1}) resp. (TP^n, TP^{n-1}), i.e. of the quotient space
    relative to its collapsed point.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if n < 1:
        raise ValueError("n must be >= 1")
    if mode != "SP" and basepoint is None:
        raise ValueError(f"mode {mode} needs a basepoint vertex")
    if mode == "TPbar":
        return QuotientComplex(mode, n, reduced_truncated_product(x, n, basepoint, characteristic, budget), {})
    if mode.startswith("SP"):
        qc = symmetric_product(x, n, basepoint, characteristic, budget)
    else:
        qc = truncated_product(x, n, basepoint, characteristic, budget)
    if mode.endswith("bar"):
        return QuotientComplex(mode, n, qc.relative(n - 1), {})
    return qc


def oracle_homology(x: SimplicialComplex, mode: str, n: int, coeff: Coefficients | str = ZZ,
                    basepoint: Hashable | None = None, budget: int | None = None) -> GradedAbelianGroup:
    """Unreduced homology of SP^n X, TP^n X, SP̄^n X or TP̄^n X."""
    coeff = Coefficients.parse(coeff)
    if budget is None:
        budget = default_budget(coeff.characteristic)
    qc = quotient_space(x, mode, n, basepoint, 0, budget)
    g = homology(qc.chain, coeff)
    if mode.endswith("bar"):
        return g.unreduced()
    return g


def oracle_relative(x: SimplicialComplex, n: int, lower: int, basepoint: Hashable,
                    coeff: Coefficients | str = ZZ, mode: str = "TP",
                    budget: int | None = None) -> GradedAbelianGroup:
    """H_*(P^n X, P^{lower} X) for P = TP or SP, with -1 <= lower < n."""
    if not -1 <= lower < n:
        raise ValueError("need -1 <= lower < n")
    coeff = Coefficients.parse(coeff)
    if budget is None:
        budget = default_budget(coeff.characteristic)
    if mode == "TP":
        qc = truncated_product(x, n, basepoint, 0, budget)
    elif mode == "SP":
        qc = symmetric_product(x, n, basepoint, 0, budget)
    else:
        raise ValueError("mode must be 'TP' or 'SP'")
    return homology(qc.relative(lower), coeff)

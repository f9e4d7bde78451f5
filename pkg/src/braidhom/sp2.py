"""Minimal multiplicative cell model for symmetric products of 2-complexes.

X is a bouquet of ``w`` circles with ``r`` disks attached.  Cells of
SP^n X are star-products

    v0^a * e_{i1} * ... * e_{it} * SP^{s1}(D1) * ... * SP^{sr}(Dr)

of weight a + t + sum(s) = n and degree t + 2 sum(s), with circle indices
strictly increasing (e_i * e_j = -e_j * e_i, e_i * e_i = 0).  The boundary
is the degree -1 derivation with

    ∂e_i = 0,  ∂v0 = 0,  ∂SP^s(D_j) = (sum_i c_ij e_i) * SP^{s-1}(D_j)

where c_ij is the exponent sum of generator i in the attaching word of D_j,
and ∂(a*b) = ∂a*b + (-1)^{|a|} a*∂b.
"""

from __future__ import annotations

import json
import string
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

from .chain import ChainComplex
from .errors import PresentationError
from .groups import Coefficients, ZZ
from .linalg import SparseMatrix


def _default_labels(w: int) -> tuple[str, ...]:
    letters = string.ascii_lowercase
    if w <= len(letters):
        return tuple(letters[:w])
    return tuple(f"x{i + 1}" for i in range(w))


@dataclass(frozen=True)
class TwoComplexPresentation:
    """Bouquet of ``w`` circles with disks attached along words.

    Each disk is a sequence of ``(generator_index, ±1)`` with 1-based
    generator indices.
    """

    w: int
    disks: tuple[tuple[tuple[int, int], ...], ...] = ()
    generator_labels: tuple[str, ...] = ()
    disk_labels: tuple[str, ...] = ()

    def __post_init__(self):
        if self.w < 0:
            raise PresentationError("w must be >= 0")
        disks = tuple(tuple((int(g), int(e)) for g, e in word) for word in self.disks)
        for j, word in enumerate(disks):
            for g, e in word:
                if not 1 <= g <= self.w:
                    raise PresentationError(
                        f"disk {j + 1} references generator {g}, but only {self.w} generators exist")
                if e not in (1, -1):
                    raise PresentationError(f"exponent {e} in disk {j + 1} is not ±1")
        object.__setattr__(self, "disks", disks)
        if not self.generator_labels:
            object.__setattr__(self, "generator_labels", _default_labels(self.w))
        if not self.disk_labels:
            object.__setattr__(self, "disk_labels", tuple(f"D{j + 1}" for j in range(len(disks))))
        if len(self.generator_labels) != self.w or len(self.disk_labels) != len(disks):
            raise PresentationError("label count mismatch")

    @property
    def r(self) -> int:
        return len(self.disks)

    def abelianized(self) -> list[dict[int, int]]:
        """Exponent sums ``{generator: c}`` of each attaching word."""
        out = []
        for word in self.disks:
            c: dict[int, int] = {}
            for g, e in word:
                c[g] = c.get(g, 0) + e
            out.append({g: v for g, v in c.items() if v})
        return out

    # -- builders ---------------------------------------------------------
    @classmethod
    def surface(cls, genus: int, punctures: int = 0) -> "TwoComplexPresentation":
        """Closed or punctured orientable surface.

        With ``punctures >= 1`` the surface deformation retracts onto a
        bouquet of 2g + q - 1 circles.
        """
        if genus < 0 or punctures < 0:
            raise PresentationError("genus and punctures must be >= 0")
        if punctures >= 1:
            return cls(2 * genus + punctures - 1)
        if genus == 0:
            # sphere: no 1-cells, one disk on the empty word
            return cls(0, ((),))
        word = []
        for i in range(genus):
            a, b = 2 * i + 1, 2 * i + 2
            word += [(a, 1), (b, 1), (a, -1), (b, -1)]
        labels = tuple(x for i in range(genus) for x in (f"a{i + 1}", f"b{i + 1}")) if genus > 1 else ("a", "b")
        return cls(2 * genus, (tuple(word),), labels)

    @classmethod
    def wedge_of_circles(cls, w: int) -> "TwoComplexPresentation":
        return cls(w)

    @classmethod
    def from_json(cls, data: Mapping) -> "TwoComplexPresentation":
        """Parse ``{"w": 2, "disks": [[["a", 1], ["b", 1], ...]]}``.

        Generators may be named by label (default a, b, c, ...) or by
        1-based index.
        """
        w = int(data["w"])
        labels = tuple(data.get("generators", _default_labels(w)))
        if len(labels) != w:
            raise PresentationError("generator label count does not match w")
        index = {name: i + 1 for i, name in enumerate(labels)}
        disks = []
        for word in data.get("disks", []):
            letters = []
            for g, e in word:
                if isinstance(g, str):
                    if g not in index:
                        raise PresentationError(f"unknown generator {g!r}")
                    g = index[g]
                letters.append((int(g), int(e)))
            disks.append(tuple(letters))
        return cls(w, tuple(disks), labels)

    def to_json(self) -> dict:
        return {
            "w": self.w,
            "generators": list(self.generator_labels),
            "disks": [[[self.generator_labels[g - 1], e] for g, e in word] for word in self.disks],
        }


@dataclass(frozen=True, order=True)
class SpCell:
    """v0^v0_power * e_I * prod_j SP^{s_j}(D_j)."""

    v0_power: int
    circles: tuple[int, ...]
    disk_exponents: tuple[int, ...]

    @property
    def weight(self) -> int:
        return self.v0_power + len(self.circles) + sum(self.disk_exponents)

    @property
    def degree(self) -> int:
        return len(self.circles) + 2 * sum(self.disk_exponents)

    def name(self, x: TwoComplexPresentation) -> str:
        parts = []
        if self.v0_power:
            parts.append("v0" if self.v0_power == 1 else f"v0^{self.v0_power}")
        parts += [f"e_{x.generator_labels[i - 1]}" for i in self.circles]
        for j, s in enumerate(self.disk_exponents):
            if s:
                parts.append(f"SP{s}({x.disk_labels[j]})" if s > 1 else x.disk_labels[j])
        return "*".join(parts) if parts else "1"


def _cells(x: TwoComplexPresentation, n: int, reduced: bool) -> list[SpCell]:
    r = x.r

    def disk_vectors(total, slots):
        if slots == 0:
            if total == 0:
                yield ()
            return
        for s in range(total, -1, -1):
            for rest in disk_vectors(total - s, slots - 1):
                yield (s,) + rest

    out = []
    v0_range = [0] if reduced else range(n + 1)
    for a in v0_range:
        for t in range(min(x.w, n - a) + 1):
            for circ in combinations(range(1, x.w + 1), t):
                for ds in disk_vectors(n - a - t, r):
                    out.append(SpCell(a, circ, ds))
    out.sort(key=lambda c: (c.degree, -c.v0_power, c.circles, tuple(-s for s in c.disk_exponents)))
    return out


def _insert_circle(circles: tuple[int, ...], i: int) -> tuple[int, tuple[int, ...]] | None:
    """e_I * e_i in normal form: (sign, sorted indices) or None if zero."""
    if i in circles:
        return None
    larger = sum(1 for j in circles if j > i)
    return (-1) ** larger, tuple(sorted(circles + (i,)))


def _boundary(cell: SpCell, abel: list[dict[int, int]]) -> dict[SpCell, int]:
    # e_I has odd/even degree |I|; disk part has even degree so the Koszul
    # sign for differentiating the disk part is (-1)^{|I|}.
    out: dict[SpCell, int] = {}
    sign_i = (-1) ** len(cell.circles)
    ds = list(cell.disk_exponents)
    for j, s in enumerate(ds):
        if s == 0:
            continue
        rest = tuple(ds[:j] + [s - 1] + ds[j + 1:])
        for i, c in abel[j].items():
            ins = _insert_circle(cell.circles, i)
            if ins is None:
                continue
            sign, circ = ins
            target = SpCell(cell.v0_power, circ, rest)
            out[target] = out.get(target, 0) + sign_i * sign * c
    return {k: v for k, v in out.items() if v}


def _build(x: TwoComplexPresentation, n: int, coeff, reduced: bool) -> ChainComplex:
    if n < 0:
        raise ValueError("n must be >= 0")
    coeff = Coefficients.parse(coeff)
    if coeff.kind == "pmz":
        raise ValueError("models are built over z or f_p")
    p = coeff.characteristic
    cells = _cells(x, n, reduced)
    abel = x.abelianized()
    by_deg: dict[int, list[SpCell]] = {}
    for c in cells:
        by_deg.setdefault(c.degree, []).append(c)
    pos = {c: i for cs in by_deg.values() for i, c in enumerate(cs)}
    bds = {}
    for q, cs in by_deg.items():
        cols = []
        for c in cs:
            col = {}
            for face, v in _boundary(c, abel).items():
                if reduced and face.v0_power:
                    continue
                if p:
                    v %= p
                if v:
                    col[pos[face]] = v
            cols.append(col)
        bds[q] = SparseMatrix(len(by_deg.get(q - 1, ())), len(cs), cols)
    names = {q: tuple(c.name(x) for c in cs) for q, cs in by_deg.items()}
    return ChainComplex(names, bds, p)


def build_sp_model(x: TwoComplexPresentation, n: int, coeff=ZZ) -> ChainComplex:
    """Cellular chain complex of SP^n X."""
    return _build(x, n, coeff, reduced=False)


def reduced_sp_model(x: TwoComplexPresentation, n: int, coeff=ZZ) -> ChainComplex:
    """Quotient of the SP^n model by v0 * C(SP^{n-1}); computes reduced homology of SP̄^n X."""
    if n < 1:
        raise ValueError("reduced model needs n >= 1")
    return _build(x, n, coeff, reduced=True)


def sp_cells(x: TwoComplexPresentation, n: int, reduced: bool = False) -> list[SpCell]:
    return _cells(x, n, reduced)


def load_presentation(path: str) -> TwoComplexPresentation:
    with open(path) as fh:
        return TwoComplexPresentation.from_json(json.load(fh))


__all__: Sequence[str] = [
    "TwoComplexPresentation", "SpCell", "build_sp_model", "reduced_sp_model",
    "sp_cells", "load_presentation",
]

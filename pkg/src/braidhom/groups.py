"""Coefficient tags and graded finitely generated abelian groups.

A :class:`GradedAbelianGroup` is the output type of every homology or
cohomology computation in the package::

    >>> g = GradedAbelianGroup({0: (1, ()), 1: (0, (2,)), 3: (1, ())})
    >>> print(g)
    H_0 = Z, H_1 = Z/2, H_3 = Z
    >>> g.ranks()
    [1, 0, 0, 1]
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping


@dataclass(frozen=True)
class Coefficients:
    """Coefficient ring tag: ``Z``, ``F_p``, or the orientation sheaf ``±Z``.

    ``±Z`` can be carried around as a tag but no homology routine
    computes with it.
    """

    kind: str  # "z" | "fp" | "pmz"
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("z", "fp", "pmz"):
            raise ValueError(f"unknown coefficient kind {self.kind!r}")
        if self.kind == "fp":
            if self.p < 2 or any(self.p % q == 0 for q in range(2, int(self.p ** 0.5) + 1)):
                raise ValueError(f"F_p needs a prime p, got {self.p}")
        elif self.p != 0:
            raise ValueError("only F_p carries a characteristic")

    @classmethod
    def parse(cls, text: "str | Coefficients") -> "Coefficients":
        if isinstance(text, Coefficients):
            return text
        t = text.strip().lower().replace("_", "").replace("/", "")
        if t in ("z", "zz", "integers"):
            return ZZ
        if t in ("pmz", "±z", "twisted", "+-z"):
            return TWISTED
        if t.startswith("f") and t[1:].isdigit():
            return cls("fp", int(t[1:]))
        if t.startswith("z") and t[1:].isdigit():
            return cls("fp", int(t[1:]))
        raise ValueError(f"cannot parse coefficients {text!r}")

    @property
    def is_field(self) -> bool:
        return self.kind == "fp"

    @property
    def characteristic(self) -> int:
        return self.p

    def __str__(self):
        if self.kind == "z":
            return "z"
        if self.kind == "pmz":
            return "pmz"
        return f"f{self.p}"


ZZ = Coefficients("z")
F2 = Coefficients("fp", 2)
TWISTED = Coefficients("pmz")


def Fp(p: int) -> Coefficients:
    return Coefficients("fp", p)


def normalize_torsion(orders: Iterable[int]) -> tuple[int, ...]:
    """Turn arbitrary cyclic orders into invariant factors d1 | d2 | ...

    Orders equal to 1 are dropped; 0 is not allowed here (free summands
    are counted separately).
    """
    diag = [abs(int(o)) for o in orders]
    if any(o == 0 for o in diag):
        raise ValueError("torsion orders must be nonzero")
    diag = [o for o in diag if o != 1]
    # pairwise (a, b) -> (gcd, lcm) until the chain condition holds
    changed = True
    while changed:
        changed = False
        diag.sort()
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                a, b = diag[i], diag[j]
                if b % a:
                    g = gcd(a, b)
                    diag[i], diag[j] = g, a * b // g
                    changed = True
        diag = [o for o in diag if o != 1]
    return tuple(sorted(diag))


@dataclass(frozen=True)
class GradedAbelianGroup:
    """Finitely generated abelian group in each non-negative degree.

    ``entries`` maps degree to ``(free_rank, torsion)`` where ``torsion``
    is a divisibility chain of integers >= 2.  Missing degrees are zero.
    Over a field ``torsion`` is empty and ``free_rank`` is the dimension.
    """

    entries: Mapping[int, tuple[int, tuple[int, ...]]] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for deg, value in dict(self.entries).items():
            deg = int(deg)
            if isinstance(value, int):
                free, tors = value, ()
            else:
                free, tors = value
            free = int(free)
            tors = tuple(int(t) for t in tors)
            if deg < 0:
                if free or tors:
                    raise ValueError("negative degrees carry the zero group")
                continue
            if free < 0:
                raise ValueError(f"negative rank in degree {deg}")
            if any(t < 2 for t in tors) or any(b % a for a, b in zip(tors, tors[1:])):
                raise ValueError(f"torsion {tors} in degree {deg} is not a divisibility chain")
            if free or tors:
                clean[deg] = (free, tors)
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    # -- construction -----------------------------------------------------
    @classmethod
    def from_ranks(cls, ranks: Iterable[int], start: int = 0) -> "GradedAbelianGroup":
        return cls({start + i: (r, ()) for i, r in enumerate(ranks)})

    @classmethod
    def zero(cls) -> "GradedAbelianGroup":
        return cls({})

    @classmethod
    def point(cls) -> "GradedAbelianGroup":
        return cls({0: (1, ())})

    @classmethod
    def sphere(cls, k: int, reduced: bool = False) -> "GradedAbelianGroup":
        if k < 0:
            raise ValueError("sphere dimension must be >= 0")
        if reduced:
            return cls({k: (1, ())})
        if k == 0:
            return cls({0: (2, ())})
        return cls({0: (1, ()), k: (1, ())})

    # -- access -----------------------------------------------------------
    def __getitem__(self, deg: int) -> tuple[int, tuple[int, ...]]:
        return self.entries.get(deg, (0, ()))

    def free(self, deg: int) -> int:
        return self[deg][0]

    def torsion(self, deg: int) -> tuple[int, ...]:
        return self[deg][1]

    def is_zero(self, deg: int | None = None) -> bool:
        if deg is None:
            return not self.entries
        return deg not in self.entries

    def degrees(self) -> list[int]:
        return list(self.entries)

    @property
    def top_degree(self) -> int:
        return max(self.entries, default=-1)

    def ranks(self, length: int | None = None) -> list[int]:
        """Free ranks (dimensions over a field) in degrees 0..length-1."""
        if length is None:
            length = self.top_degree + 1
        return [self.free(q) for q in range(length)]

    def is_torsion_free(self) -> bool:
        return all(not t for _, t in self.entries.values())

    def euler_characteristic(self) -> int:
        return sum((-1) ** q * f for q, (f, _) in self.entries.items())

    # -- algebra ----------------------------------------------------------
    def shift(self, by: int) -> "GradedAbelianGroup":
        """Raise all degrees by ``by``; anything pushed below zero is dropped."""
        return GradedAbelianGroup({q + by: v for q, v in self.entries.items() if q + by >= 0})

    def direct_sum(self, other: "GradedAbelianGroup") -> "GradedAbelianGroup":
        out = dict(self.entries)
        for q, (f, t) in other.entries.items():
            f0, t0 = out.get(q, (0, ()))
            out[q] = (f0 + f, normalize_torsion(t0 + t))
        return GradedAbelianGroup(out)

    __add__ = direct_sum

    def scale(self, copies: int) -> "GradedAbelianGroup":
        """Direct sum of ``copies`` copies of this group."""
        if copies < 0:
            raise ValueError("copies must be non-negative")
        out = GradedAbelianGroup.zero()
        for _ in range(copies):
            out = out.direct_sum(self)
        return out

    def reduced(self) -> "GradedAbelianGroup":
        """Reduced homology of a nonempty space from its unreduced homology."""
        f0, t0 = self[0]
        if f0 < 1:
            raise ValueError("degree-0 free rank must be >= 1 to reduce")
        out = dict(self.entries)
        out[0] = (f0 - 1, t0)
        return GradedAbelianGroup(out)

    def unreduced(self) -> "GradedAbelianGroup":
        return self.direct_sum(GradedAbelianGroup.point())

    def mod_p_dims(self, p: int) -> "GradedAbelianGroup":
        """Dimensions of homology with F_p coefficients (universal coefficients).

        dim H_q(-; F_p) = rank H_q + #{p | t in H_q} + #{p | t in H_{q-1}}
        """
        top = self.top_degree + 1
        out = {}
        for q in range(top + 1):
            d = self.free(q)
            d += sum(1 for t in self.torsion(q) if t % p == 0)
            d += sum(1 for t in self.torsion(q - 1) if t % p == 0)
            out[q] = (d, ())
        return GradedAbelianGroup(out)

    def dims_equal(self, other: "GradedAbelianGroup") -> bool:
        top = max(self.top_degree, other.top_degree) + 1
        return self.ranks(top) == other.ranks(top)

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        return {str(q): {"free": f, "torsion": list(t)} for q, (f, t) in self.entries.items()}

    @classmethod
    def from_json(cls, data: Mapping) -> "GradedAbelianGroup":
        out = {}
        for q, v in data.items():
            if isinstance(v, Mapping):
                out[int(q)] = (int(v.get("free", 0)), tuple(v.get("torsion", ())))
            else:
                out[int(q)] = (int(v), ())
        return cls(out)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    # -- display ----------------------------------------------------------
    def describe(self, deg: int) -> str:
        f, t = self[deg]
        parts = []
        if f == 1:
            parts.append("Z")
        elif f > 1:
            parts.append(f"Z^{f}")
        parts.extend(f"Z/{o}" for o in t)
        return " + ".join(parts) if parts else "0"

    def describe_field(self, deg: int, field: str = "F") -> str:
        f = self.free(deg)
        return "0" if f == 0 else (field if f == 1 else f"{field}^{f}")

    def __str__(self):
        if not self.entries:
            return "0"
        return ", ".join(f"H_{q} = {self.describe(q)}" for q in self.entries)


def tensor_field(a: GradedAbelianGroup, b: GradedAbelianGroup) -> GradedAbelianGroup:
    """Graded tensor product of two graded vector spaces (dimensions only)."""
    out: dict[int, int] = {}
    for p, (fa, ta) in a.entries.items():
        for q, (fb, tb) in b.entries.items():
            if ta or tb:
                raise ValueError("tensor_field expects torsion-free inputs")
            out[p + q] = out.get(p + q, 0) + fa * fb
    return GradedAbelianGroup({q: (d, ()) for q, d in out.items()})

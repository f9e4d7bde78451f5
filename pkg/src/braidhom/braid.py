"""Duality and puncture-splitting calculus for braid-space cohomology.

Cohomology tables of B(M, k) are produced from relative truncated-product
homology by the degree reflection H^i = H_{kd-i}, and combined under
puncturing by the two splitting formulas:

    closed:     H^j(B(M,n)) = H^j(B(M-p,n)) + H^{j-d}(B(M-p,n-1))          (mod 2)
    punctures:  H^j(B(M-Q_k,n)) = sum_r H^{j-(n-r)(d-1)}(B(M-p,r))^{p(k-1,n-r)}
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Mapping, Sequence

from .errors import CoefficientPolicyError, HypothesisError
from .groups import Coefficients, F2, GradedAbelianGroup, ZZ


@dataclass(frozen=True)
class SpaceDescriptor:
    """Bookkeeping for a compact manifold M with a removed closed set U.

    ``conn_bar`` is the connectivity r of M/(U ∪ ∂M), or of M itself when
    U ∪ ∂M is empty.
    """

    d: int
    orientable: bool = True
    closed: bool = True
    punctures: int = 0
    conn_bar: int = 0

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("manifold dimension must be >= 1")
        if self.punctures < 0:
            raise ValueError("punctures must be >= 0")
        if self.conn_bar < 0:
            raise ValueError("connectivity of the quotient must be finite and >= 0")

    @property
    def has_ends(self) -> bool:
        """True when U ∪ ∂M is nonempty."""
        return self.punctures > 0 or not self.closed

    @property
    def flavor(self) -> str:
        return "punctured" if self.has_ends else "closed"

    @classmethod
    def sphere(cls, d: int, punctures: int = 0) -> "SpaceDescriptor":
        # S^d / (finitely many points) is S^d wedge circles: connectivity 0
        # once two or more points are collapsed
        r = d - 1 if punctures <= 1 else 0
        return cls(d, True, True, punctures, r)

    @classmethod
    def surface(cls, genus: int, punctures: int = 0, orientable: bool = True) -> "SpaceDescriptor":
        r = 1 if (genus == 0 and punctures <= 1) else 0
        return cls(2, orientable, True, punctures, r)


@dataclass(frozen=True)
class CohomologyTable:
    """H^*(B(-, k)) with its coefficient tag."""

    k: int
    coeff: Coefficients
    groups: GradedAbelianGroup

    def __post_init__(self):
        object.__setattr__(self, "coeff", Coefficients.parse(self.coeff))
        if self.k < 0:
            raise ValueError("k must be >= 0")

    def dims(self, length: int | None = None) -> list[int]:
        return self.groups.ranks(length)

    def to_json(self) -> dict:
        return {"k": self.k, "coeff": str(self.coeff), "groups": self.groups.to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> "CohomologyTable":
        return cls(int(data["k"]), Coefficients.parse(data.get("coeff", "f2")),
                   GradedAbelianGroup.from_json(data["groups"]))

    @classmethod
    def from_dims(cls, k: int, dims: Sequence[int], coeff=F2) -> "CohomologyTable":
        return cls(k, Coefficients.parse(coeff), GradedAbelianGroup.from_ranks(dims))


# -- combinatorics ------------------------------------------------------------

def compositions(r: int, s: int) -> int:
    """p(r, s): ordered r-tuples of non-negative integers summing to s.

    >>> compositions(2, 5), compositions(4, 1), compositions(3, 2)
    (6, 4, 6)
    """
    if r < 0 or s < 0:
        raise ValueError("p(r, s) needs r, s >= 0")
    if r == 0:
        if s == 0:
            return 1
        raise ValueError("p(0, s) with s > 0: no parts to fill")
    return comb(s + r - 1, r - 1)


def _multiplicity(parts: int, s: int) -> int:
    # p(0, s) = δ_{s,0}, so one puncture reproduces the base table
    if parts == 0:
        return 1 if s == 0 else 0
    return compositions(parts, s)


# -- coefficient policy -------------------------------------------------------

def braid_orientable(space: SpaceDescriptor, k: int) -> bool:
    """Whether B(M, k) is orientable (dimension >= 2, k >= 2 only)."""
    if space.d < 2:
        raise HypothesisError(
            "Folklore lemma",
            "out of lemma scope for d = 1; B(S^1, n) is a disc bundle over S^1, "
            "trivial (orientable) iff n is odd; see the B(S^1,n) catalog entry")
    if k < 2:
        raise HypothesisError("Folklore lemma", "out of lemma scope for k <= 1")
    return space.orientable and space.d % 2 == 0


def coefficient_allowed(coeff: Coefficients | str, d: int, orientable: bool) -> bool:
    """F2 always; Z only for orientable even-dimensional M; ±Z never."""
    coeff = Coefficients.parse(coeff)
    if coeff == F2:
        return True
    if coeff.kind == "pmz":
        return False
    return orientable and d % 2 == 0


def check_coefficients(coeff: Coefficients | str, d: int, orientable: bool, what: str) -> Coefficients:
    coeff = Coefficients.parse(coeff)
    if coeff.kind == "pmz":
        raise CoefficientPolicyError(f"{what}: twisted coefficients not computable")
    if not coefficient_allowed(coeff, d, orientable):
        raise CoefficientPolicyError(
            f"{what}: {coeff} coefficients need M orientable of even dimension (d={d}, "
            f"orientable={orientable}); use f2")
    return coeff


# -- duality ------------------------------------------------------------------

def dualize(rel: GradedAbelianGroup, k: int, d: int, flavor: str = "punctured",
            coeff: Coefficients | str = F2, orientable: bool = False) -> CohomologyTable:
    """H^i(B(M-U, k)) = H_{kd-i}(relative TP pair) for 0 <= i <= kd.

    ``flavor`` records which pair ``rel`` is the homology of:
    ``"punctured"`` for (TP^k M̄, TP^{k-1} M̄), ``"closed"`` for
    (TP^k M, TP^{k-2} M).
    """
    if flavor not in ("punctured", "closed"):
        raise ValueError("flavor must be 'punctured' or 'closed'")
    if k < 0 or d < 1:
        raise ValueError("need k >= 0 and d >= 1")
    coeff = check_coefficients(coeff, d, orientable, "duality")
    if coeff.is_field and not rel.is_torsion_free():
        raise ValueError("field tables carry no torsion")
    top = k * d
    if rel.top_degree > top:
        raise ValueError(f"relative homology in degree {rel.top_degree} exceeds kd = {top}")
    out = {top - q: v for q, v in rel.entries.items()}
    return CohomologyTable(k, coeff, GradedAbelianGroup(out))


def split_closed(punctured_n: CohomologyTable, punctured_n_minus_1: CohomologyTable,
                 d: int) -> CohomologyTable:
    """Mod 2 cohomology of B(M, n) from B(M-p, n) and B(M-p, n-1)."""
    for t in (punctured_n, punctured_n_minus_1):
        if t.coeff != F2:
            raise CoefficientPolicyError(
                "the closed-manifold splitting is no longer true with coefficients other than F2")
    if punctured_n_minus_1.k != punctured_n.k - 1:
        raise ValueError("second table must be for one fewer point")
    g = punctured_n.groups.direct_sum(punctured_n_minus_1.groups.shift(d))
    return CohomologyTable(punctured_n.k, F2, g)


def split_punctures(base: Sequence[CohomologyTable] | Mapping[int, CohomologyTable], k: int, d: int,
                    field: Coefficients | str = F2, orientable: bool = False,
                    n: int | None = None) -> CohomologyTable:
    """Cohomology of B(M - {p_1..p_k}, n) from the tables of B(M - p, r), r <= n.

    ``base[r]`` is the table for r points.  ``n`` defaults to the largest
    r supplied.
    """
    field = Coefficients.parse(field)
    if k < 1:
        raise HypothesisError("puncture splitting", "needs k >= 1 punctures")
    if not field.is_field:
        raise CoefficientPolicyError("puncture splitting is stated for field coefficients")
    if field != F2 and not (orientable and d % 2 == 0):
        raise CoefficientPolicyError(
            f"{field} coefficients need M orientable of even dimension; use f2")
    tables = dict(base) if isinstance(base, Mapping) else dict(enumerate(base))
    if n is None:
        n = max(tables, default=-1)
    if n < 0:
        raise ValueError("no base tables supplied")
    total = GradedAbelianGroup.zero()
    for r in range(n + 1):
        if r not in tables:
            raise ValueError(f"missing base table for B(M-p, {r})")
        t = tables[r]
        if t.k != r:
            raise ValueError(f"base table at position {r} is for {t.k} points")
        if t.coeff != field:
            raise CoefficientPolicyError(f"base table for r={r} is over {t.coeff}, not {field}")
        mult = _multiplicity(k - 1, n - r)
        if mult:
            total = total.direct_sum(t.groups.shift((n - r) * (d - 1)).scale(mult))
    return CohomologyTable(n, field, total)


def les_consistency(punctured_nm1: GradedAbelianGroup | CohomologyTable,
                    punctured_n: GradedAbelianGroup | CohomologyTable,
                    closed_n: GradedAbelianGroup | CohomologyTable, d: int) -> bool:
    """Rank shadow of the long exact sequence

        ... -> H_{q-d+1}(B(N,n-1)) -> H_q(B(N,n)) -> H_q(B(M,n)) -> H_{q-d}(B(N,n-1)) -> ...

    Returns True when the alternating sum of dimensions around the whole
    sequence vanishes.  This is necessary for exactness but not
    sufficient.
    """
    def g(x):
        return x.groups if isinstance(x, CohomologyTable) else x

    a, b, c = g(punctured_n), g(closed_n), g(punctured_nm1)
    top = max(a.top_degree, b.top_degree, c.top_degree + d) + 1
    total = 0
    for q in range(top + 1):
        total += (-1) ** q * (a.free(q) - b.free(q) + c.free(q - d))
    return total == 0

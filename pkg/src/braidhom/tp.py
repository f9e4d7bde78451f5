"""Truncated symmetric products: circle model, wedges, splitting checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from .chain import ChainComplex
from .errors import CoefficientPolicyError
from .groups import Coefficients, F2, GradedAbelianGroup, tensor_field
from .linalg import SparseMatrix


def tp_circle_complex(n: int) -> ChainComplex:
    """One cell σ^k in each degree 0 <= k <= n with ∂σ^k = (1 + (-1)^k) σ^{k-1}.

    The k-skeleton is TP^k(S^1); the whole complex has the homology of RP^n.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    cells = {k: (f"sigma{k}",) for k in range(n + 1)}
    bds = {}
    for k in range(1, n + 1):
        v = 1 + (-1) ** k
        bds[k] = SparseMatrix(1, 1, [{0: v} if v else {}])
    return ChainComplex(cells, bds)


def tp_circle_skeleton(k: int):
    """Cell-name predicate selecting the TP^k(S^1) skeleton."""
    return lambda name: int(name[len("sigma"):]) <= k


@dataclass(frozen=True)
class ReducedTpTable:
    """H̃_*(TP̄^s X) for s = 0..n, for one wedge summand X.

    The s = 0 entry is always H̃(S^0): rank 1 in degree 0.
    """

    summand: str
    tables: Mapping[int, GradedAbelianGroup] = field(default_factory=dict)
    field_tag: Coefficients = F2

    def __post_init__(self):
        tables = {int(s): g for s, g in self.tables.items()}
        s0 = tables.setdefault(0, GradedAbelianGroup.sphere(0, reduced=True))
        if s0 != GradedAbelianGroup.sphere(0, reduced=True):
            raise ValueError("TP̄^0 is S^0: its reduced homology is rank 1 in degree 0")
        object.__setattr__(self, "tables", dict(sorted(tables.items())))
        object.__setattr__(self, "field_tag", Coefficients.parse(self.field_tag))

    def __getitem__(self, s: int) -> GradedAbelianGroup:
        if s not in self.tables:
            raise KeyError(f"no TP̄^{s} table for summand {self.summand!r}")
        return self.tables[s]

    @property
    def max_stage(self) -> int:
        return max(self.tables)

    @classmethod
    def circle(cls, n: int, field_tag=F2) -> "ReducedTpTable":
        """TP̄^s(S^1) = S^s."""
        return cls("S1", {s: GradedAbelianGroup.sphere(s, reduced=True) for s in range(n + 1)}, field_tag)

    @classmethod
    def point(cls, n: int, field_tag=F2) -> "ReducedTpTable":
        return cls("point", {s: GradedAbelianGroup.zero() for s in range(1, n + 1)}, field_tag)

    def to_json(self) -> dict:
        return {"summand": self.summand, "field": str(self.field_tag),
                "tables": {str(s): g.to_json() for s, g in self.tables.items()}}

    @classmethod
    def from_json(cls, data: Mapping) -> "ReducedTpTable":
        return cls(data.get("summand", "X"),
                   {int(s): GradedAbelianGroup.from_json(g) for s, g in data["tables"].items()},
                   data.get("field", "f2"))


def weak_compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered ``parts``-tuples of non-negative integers summing to n, lexicographic."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    for first in range(n + 1):
        for rest in weak_compositions(n - first, parts - 1):
            yield (first,) + rest


def reduced_tp_wedge(summands: Sequence[ReducedTpTable], n: int,
                     field: Coefficients | str = F2) -> GradedAbelianGroup:
    """H̃_*(TP̄^n(X_1 v ... v X_m)) from the summands' TP̄ tables.

    Sum over compositions s_1 + ... + s_m = n of the graded tensor product
    of the H̃_*(TP̄^{s_i} X_i).  Over Z this is only allowed when every
    input is torsion-free.
    """
    field = Coefficients.parse(field)
    if field.kind == "pmz":
        raise CoefficientPolicyError("twisted coefficients are not supported for wedges")
    if field.kind == "z":
        for t in summands:
            for g in t.tables.values():
                if not g.is_torsion_free():
                    raise CoefficientPolicyError(
                        f"Z coefficients need torsion-free inputs (summand {t.summand!r} has torsion)")
    for t in summands:
        if field.kind == "fp" and t.field_tag != field:
            raise CoefficientPolicyError(f"summand {t.summand!r} is over {t.field_tag}, not {field}")
    if n < 0:
        raise ValueError("n must be >= 0")
    if not summands:
        return GradedAbelianGroup.sphere(0, reduced=True) if n == 0 else GradedAbelianGroup.zero()
    total = GradedAbelianGroup.zero()
    for comp in weak_compositions(n, len(summands)):
        term = GradedAbelianGroup.sphere(0, reduced=True)
        for t, s in zip(summands, comp):
            term = tensor_field(term, t[s])
            if term.is_zero():
                break
        total = total.direct_sum(term)
    return total


def lm_split_check(full: GradedAbelianGroup, previous: GradedAbelianGroup,
                   reduced: GradedAbelianGroup, coeff: Coefficients | str = F2) -> bool:
    """dim H_q(TP^n) == dim H_q(TP^{n-1}) + dim H̃_q(TP̄^n) for every q (mod 2)."""
    if Coefficients.parse(coeff) != F2:
        raise CoefficientPolicyError("the truncated-product splitting is a mod 2 statement")
    for g in (full, previous, reduced):
        if not g.is_torsion_free():
            raise CoefficientPolicyError("expected F2 dimension tables (no torsion)")
    top = max(full.top_degree, previous.top_degree, reduced.top_degree) + 1
    return all(full.free(q) == previous.free(q) + reduced.free(q) for q in range(top))


def bcm_e1_connectivity(k: int, w: int) -> int:
    """Lower bound for the connectivity of the relative TP pair of a 2-complex.

    Minimum over the E^1 summands of the truncated-product spectral
    sequence: i + k - min(w, i) - 1 for 1 <= i <= k-1, 2k - min(w, k) - 1
    for i = k, and k - 1 for i = 0.
    """
    if k < 1 or w < 0:
        raise ValueError("need k >= 1 and w >= 0")
    cases = [i + k - min(w, i) - 1 for i in range(1, k)]
    cases.append(2 * k - min(w, k) - 1)
    cases.append(k - 1)
    return min(cases)

"""Cohomological-dimension, connectivity and stability bounds.

Every bound comes back as a :class:`BoundReport`.  Passing a measured
group turns the report into a check: upper bounds (cohomological
dimension) are violated when the measured top degree exceeds them,
lower bounds (connectivity) when the measured connectivity falls short.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Mapping, Sequence

from .braid import SpaceDescriptor
from .chain import cohomological_dimension, homological_connectivity
from .errors import HypothesisError
from .groups import GradedAbelianGroup

CONSISTENT = "consistent"
VIOLATED = "violated"
NOT_MEASURED = "not-measured"


@dataclass(frozen=True)
class BoundReport:
    bound: int
    theorem: str
    inputs: Mapping[str, object] = field(default_factory=dict)
    kind: str = "upper"  # "upper": measured <= bound; "lower": measured >= bound
    measured: int | float | None = None
    verdict: str = NOT_MEASURED
    detail: str = ""

    def check(self, measured: int | float) -> "BoundReport":
        ok = measured <= self.bound if self.kind == "upper" else measured >= self.bound
        return replace(self, measured=measured, verdict=CONSISTENT if ok else VIOLATED)

    @property
    def ok(self) -> bool:
        return self.verdict != VIOLATED

    def to_json(self) -> dict:
        m = self.measured
        if isinstance(m, float) and math.isinf(m):
            m = "inf"
        return {"theorem": self.theorem, "bound": self.bound, "kind": self.kind,
                "inputs": dict(self.inputs), "measured": m, "verdict": self.verdict,
                "detail": self.detail}


def _require(cond: bool, theorem: str, message: str):
    if not cond:
        raise HypothesisError(theorem, message)


# -- closed-form bounds ---------------------------------------------------------

def cohdim_bound(space: SpaceDescriptor, k: int,
                 measured: GradedAbelianGroup | None = None) -> BoundReport:
    """Upper bound on the cohomological dimension of B(M - U, k).

    (d-1)k - r + 1 for M closed with U empty, (d-1)k - r otherwise.  A
    measured table over F_2 may be checked against it, since mod 2
    cohomological dimension never exceeds the ±Z one.
    """
    _require(k >= 2, "Theorem main3", "needs k >= 2")
    r = space.conn_bar
    b = (space.d - 1) * k - r + (0 if space.has_ends else 1)
    rep = BoundReport(b, "main3", {"d": space.d, "k": k, "r": r, "closed": not space.has_ends})
    if measured is not None:
        rep = rep.check(cohomological_dimension(measured))
    return rep


def sp_connectivity_bound(n: int, r: int) -> int:
    """SP̄^n of an r-connected complex (r >= 1) is (2n + r - 2)-connected."""
    _require(r >= 1, "Theorem connectivity", "needs r >= 1")
    _require(n >= 1, "Theorem connectivity", "needs n >= 1")
    return 2 * n + r - 2


def tp_relative_bound(k: int, r: int, flavor: str = "punctured") -> int:
    """Lower bound on R_k, the connectivity of the relative TP pair."""
    _require(k >= 1, "Lemma R", "needs k >= 1")
    _require(r >= 0, "Lemma R", "needs r >= 0")
    if flavor == "punctured":
        return k + r - 1
    if flavor == "closed":
        return k + r - 2
    raise ValueError("flavor must be 'punctured' or 'closed'")


def nakaoka_bound(k: int, r: int) -> int:
    """TP̄^k of an r-connected space is (r + k - 1)-connected (r >= 0)."""
    _require(k >= 1, "Theorem nakak", "needs k >= 1")
    _require(r >= 0, "Theorem nakak", "needs r >= 0")
    return r + k - 1


def conn2_bound(n: int, w: int) -> int:
    """SP̄^n of a 2-complex with w one-cells is (2n - min(w, n) - 1)-connected."""
    _require(n >= 1, "Proposition conntwo", "needs n >= 1")
    _require(w >= 0, "Proposition conntwo", "needs w >= 0")
    return 2 * n - min(w, n) - 1


def connectivity_report(theorem: str, value: int, inputs: Mapping[str, object],
                        reduced: GradedAbelianGroup | None = None) -> BoundReport:
    """Wrap a connectivity lower bound, optionally checking reduced homology."""
    rep = BoundReport(value, theorem, dict(inputs), kind="lower")
    if reduced is not None:
        rep = rep.check(homological_connectivity(reduced))
    return rep


# -- stability ------------------------------------------------------------------

PROFILES = ("generic", "surface-punctured")


def stability_range(k: int, profile: str | Mapping[int, int] = "generic") -> int:
    """s(k): B(M,k) -> B(M,k+1) is a homology isomorphism up to degree s(k).

    ``profile`` is "generic" (floor(k/2)), "surface-punctured" (k - 1), or a
    mapping ``{k: s(k)}`` supplied by the caller.
    """
    _require(k >= 1, "Theorem arnold", "needs k >= 1")
    if isinstance(profile, Mapping):
        if k not in profile:
            raise KeyError(f"custom stability profile has no entry for k={k}")
        return int(profile[k])
    if profile == "generic":
        return k // 2
    if profile == "surface-punctured":
        return k - 1
    raise ValueError(f"unknown profile {profile!r}; expected one of {PROFILES}")


def scanning_connectivity(k: int, profile: str | Mapping[int, int] = "generic") -> int:
    """Homological connectivity s(k-1) of the scanning map (k >= 2)."""
    _require(k >= 2, "Proposition main4", "needs k >= 2")
    return stability_range(k - 1, profile)


def stability_table_check(tables: Sequence[GradedAbelianGroup] | Mapping[int, GradedAbelianGroup],
                          profile: str | Mapping[int, int] = "generic") -> BoundReport:
    """Monomorphism shadow of stabilization on consecutive tables.

    ``tables[k]`` (or the k-th entry, starting at k = 1 for a sequence) is
    H_*(B(M, k)).  Requires dim H_q(k) <= dim H_q(k+1) everywhere and
    equality for q <= s(k).
    """
    if isinstance(tables, Mapping):
        tbl = dict(tables)
    else:
        tbl = {i + 1: g for i, g in enumerate(tables)}
    ks = sorted(tbl)
    rep = BoundReport(0, "arnold", {"ks": ks, "profile": profile if isinstance(profile, str) else "custom"})
    for k in ks:
        if k + 1 not in tbl:
            continue
        a, b = tbl[k], tbl[k + 1]
        s = stability_range(k, profile)
        top = max(a.top_degree, b.top_degree) + 1
        for q in range(top):
            if a.free(q) > b.free(q):
                return replace(rep, measured=q, verdict=VIOLATED,
                               detail=f"dim H_{q} drops from {a.free(q)} to {b.free(q)} at k={k}")
            if q <= s and a.free(q) != b.free(q):
                return replace(rep, measured=q, verdict=VIOLATED,
                               detail=f"dim H_{q} changes at k={k} inside the stable range q <= {s}")
    return replace(rep, verdict=CONSISTENT)


def mod2_cohdim_euclidean(k: int, d: int) -> int:
    """(k - α(k))(d - 1), α = number of ones in binary: mod 2 cohdim of B(R^d, k)."""
    if k < 1 or d < 1:
        raise ValueError("need k, d >= 1")
    return (k - bin(k).count("1")) * (d - 1)

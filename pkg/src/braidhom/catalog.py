"""Known spaces and facts, each tagged with a verbatim source anchor.

The data lives in ``catalog.json`` next to this module; this module only
loads and indexes it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Any, Mapping

from .errors import CatalogError
from .groups import GradedAbelianGroup


@dataclass(frozen=True)
class Anchor:
    label: str
    quote: str


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    description: str
    anchor: Anchor
    checkable: bool
    payload: Mapping[str, Any]

    def instances(self) -> list[dict]:
        return list(self.payload.get("instances", []))

    def dims(self, **params) -> list[int]:
        """The F_2 dimension table of the instance with these parameters."""
        for inst in self.instances():
            if inst["params"] == params and "dims" in inst:
                return list(inst["dims"])
        raise CatalogError(f"{self.key}: no instance with parameters {params}")

    def groups(self, **params) -> GradedAbelianGroup:
        for inst in self.instances():
            if inst["params"] == params and "groups" in inst:
                return GradedAbelianGroup.from_json(inst["groups"])
        raise CatalogError(f"{self.key}: no instance with parameters {params}")

    def to_json(self) -> dict:
        return {"key": self.key, "description": self.description,
                "anchor": {"label": self.anchor.label, "quote": self.anchor.quote},
                "checkable": self.checkable, "payload": dict(self.payload)}


@lru_cache(maxsize=1)
def _load() -> dict[str, CatalogEntry]:
    text = resources.files("braidhom").joinpath("catalog.json").read_text(encoding="utf-8")
    data = json.loads(text)
    out = {}
    for e in data["entries"]:
        if e["key"] in out:
            raise CatalogError(f"duplicate catalog key {e['key']!r}")
        out[e["key"]] = CatalogEntry(e["key"], e["description"],
                                     Anchor(e["anchor"]["label"], e["anchor"]["quote"]),
                                     bool(e["checkable"]), e["payload"])
    return out


def keys() -> list[str]:
    return list(_load())


def entries() -> list[CatalogEntry]:
    return list(_load().values())


def lookup(name: str) -> CatalogEntry:
    try:
        return _load()[name]
    except KeyError:
        raise CatalogError(f"unknown catalog entry {name!r}; known: {', '.join(keys())}") from None

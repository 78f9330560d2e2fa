"""Shipped triangulations: the 6-pentachoron S^4 and Kuhnel's 9-vertex CP^2."""

from __future__ import annotations

from importlib import resources

from .triangulation import Triangulation, from_dict

BUILTIN_FILES = {
    "s4": "s4_boundary_delta5.json",
    "cp2": "cp2_kuhnel9.json",
}


def builtin_manifold(name: str) -> Triangulation:
    if name not in BUILTIN_FILES:
        raise KeyError(f"unknown builtin manifold {name!r}; have {sorted(BUILTIN_FILES)}")
    import json
    ref = resources.files("hexaform") / "data" / BUILTIN_FILES[name]
    doc = json.loads(ref.read_text(encoding="utf-8"))
    return from_dict(doc, source=BUILTIN_FILES[name])

"""On-disk formats for simplicial sets (.sset) and maps (.smap).

Files are JSON with sorted keys and a fixed layout, so save/load round-trips
are byte-identical.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .simplex import Simplex
from .sset import FinSSet, SMap, SSetError

PathLike = Union[str, Path]


def sset_to_dict(x: FinSSet) -> dict:
    return {
        "dim_bound": "exact" if x.dim_bound is None else x.dim_bound,
        "cells": {str(n): list(level) for n, level in enumerate(x.cells)},
        "faces": {
            c: [{"degen": list(f.word), "base": f.base} for f in fs]
            for c, fs in sorted(x.faces.items())
            if fs
        },
    }


def sset_from_dict(data: dict) -> FinSSet:
    bound = data.get("dim_bound", "exact")
    dim_bound = None if bound == "exact" else int(bound)
    cells = {int(n): tuple(level) for n, level in data.get("cells", {}).items()}
    faces = {
        c: tuple(Simplex(tuple(f["degen"]), f["base"]) for f in fs)
        for c, fs in data.get("faces", {}).items()
    }
    return FinSSet.make(cells, faces, dim_bound)


def dumps(data: dict) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def save_sset(x: FinSSet, path: PathLike) -> None:
    Path(path).write_text(dumps(sset_to_dict(x)))


def load_sset(path: PathLike, validate: bool = True) -> FinSSet:
    x = sset_from_dict(json.loads(Path(path).read_text()))
    if validate:
        x.assert_valid()
    return x


def smap_to_dict(m: SMap, source_path: str, target_path: str) -> dict:
    return {
        "source": source_path,
        "target": target_path,
        "assignment": {
            c: {"degen": list(s.word), "base": s.base}
            for c, s in sorted(m.assignment.items())
        },
    }


def save_smap(m: SMap, path: PathLike, source_path: str, target_path: str) -> None:
    Path(path).write_text(dumps(smap_to_dict(m, source_path, target_path)))


def load_smap(path: PathLike, validate: bool = True) -> SMap:
    path = Path(path)
    data = json.loads(path.read_text())
    src = load_sset(path.parent / data["source"], validate=validate)
    tgt = load_sset(path.parent / data["target"], validate=validate)
    assign = {
        c: Simplex(tuple(s["degen"]), s["base"]) for c, s in data["assignment"].items()
    }
    m = SMap(src, tgt, assign)
    if validate:
        m.assert_valid()
    return m

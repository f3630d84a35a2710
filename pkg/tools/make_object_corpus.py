#!/usr/bin/env python3
"""Generate the serialized object corpus under corpus/ssets and corpus/maps."""

from pathlib import Path

from ssetkit.kernel import (
    boundary,
    constant_map,
    horn,
    identity,
    nerve_j,
    std_simplex,
    terminal,
    terminal_map,
)
from ssetkit.kernel.serialize import save_smap, save_sset

ROOT = Path(__file__).resolve().parents[1]
SSETS = ROOT / "corpus" / "ssets"
MAPS = ROOT / "corpus" / "maps"


def main() -> None:
    SSETS.mkdir(parents=True, exist_ok=True)
    MAPS.mkdir(parents=True, exist_ok=True)

    objects = {
        "point": terminal(),
        "interval": std_simplex(1),
        "triangle": std_simplex(2),
        "tetrahedron": std_simplex(3),
        "endpoints": boundary(1)[0],
        "triangle_boundary": boundary(2)[0],
        "inner_horn_2_1": horn(2, 1)[0],
        "outer_horn_2_0": horn(2, 0)[0],
        "interval_groupoid_2": nerve_j(2),
        "interval_groupoid_3": nerve_j(3),
    }
    for name, x in objects.items():
        save_sset(x, SSETS / f"{name}.sset")

    maps = {
        "interval_identity": (identity(std_simplex(1)), "interval", "interval"),
        "interval_collapse": (terminal_map(std_simplex(1)), "interval", "point"),
        "triangle_collapse": (terminal_map(std_simplex(2)), "triangle", "point"),
        "endpoints_include": (boundary(1)[1], "endpoints", "interval"),
        "boundary_include": (boundary(2)[1], "triangle_boundary", "triangle"),
        "inner_horn_include": (horn(2, 1)[1], "inner_horn_2_1", "triangle"),
        "outer_horn_include": (horn(2, 0)[1], "outer_horn_2_0", "triangle"),
        "vertex_include": (
            constant_map(terminal(), std_simplex(1), "0"),
            "point",
            "interval",
        ),
        "groupoid_collapse": (
            terminal_map(nerve_j(2)),
            "interval_groupoid_2",
            "point",
        ),
    }
    for name, (m, src, tgt) in maps.items():
        save_smap(
            m, MAPS / f"{name}.smap", f"../ssets/{src}.sset", f"../ssets/{tgt}.sset"
        )
    print(f"ssets: {len(objects)}  maps: {len(maps)}")


if __name__ == "__main__":
    main()

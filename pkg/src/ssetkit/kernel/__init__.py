"""Kernel: finite simplicial sets, maps, and their categorical toolkit."""

from .simplex import Simplex, nondeg
from .sset import (
    EMPTY,
    FinSSet,
    SMap,
    SSetError,
    compose,
    constant_map,
    find_isomorphism,
    identity,
)
from .standard import (
    CategoryPresentation,
    boundary,
    delta_map,
    horn,
    interval_groupoid_skeleton,
    nerve,
    nerve_j,
    sigma_map,
    simplex_space_map,
    std_simplex,
    walking_iso_category,
    yoneda,
)
from .homs import count_maps, enumerate_maps, enumerate_sections
from .limits import (
    Coproduct,
    Product,
    Pullback,
    Pushout,
    coproduct,
    initial_map,
    product,
    pullback,
    pushout,
    terminal,
    terminal_map,
)
from .closed import Exponential, Pushforward, exponential, pushforward
from .serialize import load_smap, load_sset, save_smap, save_sset, sset_from_dict, sset_to_dict

__all__ = [name for name in dir() if not name.startswith("_")]

"""Lifting problems, generator families, classifiers, and the bounded
by-need small object argument.

Depth semantics: every check is relative to a family of generating maps cut
off at a declared dimension.  A failed lift is a sound refutation; a passed
check certifies the property "up to depth".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .kernel import (
    EMPTY,
    FinSSet,
    SMap,
    SSetError,
    Simplex,
    boundary,
    compose,
    enumerate_maps,
    horn,
    identity,
    interval_groupoid_skeleton,
    nondeg,
    pushout,
    std_simplex,
)

__all__ = [
    "LiftingProblem",
    "solve_lift",
    "GeneratorFamily",
    "kan_family",
    "inner_family",
    "trivial_family",
    "cat_family",
    "point_to_interval_groupoid",
    "lifting_problems",
    "has_rlp",
    "has_llp",
    "Classification",
    "classify",
    "CellAttachment",
    "CellFactorization",
    "factor_soa",
    "BudgetExhausted",
    "retract_argument",
    "leibniz",
    "QuasifibrationReport",
    "quasifibration_check",
    "identity_closure_check",
]


@dataclass(frozen=True)
class LiftingProblem:
    """A commuting square: left leg i, right leg p, top and bottom maps."""

    left: SMap  # i: A -> B
    right: SMap  # p: X -> Y
    top: SMap  # A -> X
    bottom: SMap  # B -> Y

    def validate(self) -> list[str]:
        problems = []
        if compose(self.right, self.top) != compose(self.bottom, self.left):
            problems.append("square does not commute")
        return problems


def solve_lift(problem: LiftingProblem, *, all_fillers: bool = False):
    """Find the lexicographically least filler B -> X, or None.

    With ``all_fillers`` returns the full list instead.
    """
    i, p, top, bottom = problem.left, problem.right, problem.top, problem.bottom
    forced: dict[str, Simplex] = {}
    ok = True
    for c in i.source.nondegenerate():
        img = i.apply_cell(c)
        if not img.word:
            want = top.apply_cell(c)
            prev = forced.get(img.base)
            if prev is not None and prev != want:
                ok = False
                break
            forced[img.base] = want
    if not ok:
        return [] if all_fillers else None

    def commutes(c: str, cand: Simplex) -> bool:
        return p.apply(cand) == bottom.apply_cell(c)

    gen = enumerate_maps(
        i.target, p.source, forced=forced, constraint=commutes,
        limit=None if all_fillers else 1,
    )
    # degenerate images of cells of A also constrain the filler, but only
    # through their bases, which the forced dict above already pins; cells of
    # A hitting degenerate simplices of B constrain nothing extra beyond
    # commutativity of the found map, so re-check.
    fillers = []
    for h in gen:
        if all(h.apply(i.apply_cell(c)) == top.apply_cell(c) for c in i.source.nondegenerate()):
            if not all_fillers:
                return h
            fillers.append(h)
    return fillers if all_fillers else None


@dataclass(frozen=True)
class GeneratorFamily:
    """A named family of generating maps with its depth."""

    name: str
    generators: tuple[SMap, ...]
    depth: int


@lru_cache(maxsize=None)
def kan_family(depth: int) -> GeneratorFamily:
    gens = tuple(horn(n, k)[1] for n in range(1, depth + 1) for k in range(n + 1))
    return GeneratorFamily("kan", gens, depth)


@lru_cache(maxsize=None)
def inner_family(depth: int) -> GeneratorFamily:
    gens = tuple(horn(n, k)[1] for n in range(2, depth + 1) for k in range(1, n))
    return GeneratorFamily("inner", gens, depth)


@lru_cache(maxsize=None)
def trivial_family(depth: int) -> GeneratorFamily:
    gens = tuple(boundary(n)[1] for n in range(0, depth + 1))
    return GeneratorFamily("trivial", gens, depth)


@lru_cache(maxsize=None)
def point_to_interval_groupoid(depth: int) -> SMap:
    """The vertex inclusion {0} -> skeleton of the classifying interval."""
    sk, _ = interval_groupoid_skeleton(depth)
    return SMap(std_simplex(0), sk, {"0": nondeg("n_a")})


@lru_cache(maxsize=None)
def cat_family(depth: int) -> GeneratorFamily:
    """Surrogate for categorical fibrations: inner horns plus the vertex
    inclusion into the (truncated) classifying interval."""
    gens = inner_family(depth).generators + (point_to_interval_groupoid(depth),)
    return GeneratorFamily("cat", gens, depth)


def family_by_name(name: str, depth: int) -> GeneratorFamily:
    table = {
        "kan": kan_family,
        "inner": inner_family,
        "trivial": trivial_family,
        "cat": cat_family,
    }
    if name not in table:
        raise SSetError(f"unknown generator family {name!r}")
    return table[name](depth)


def lifting_problems(gen: SMap, p: SMap) -> Iterator[LiftingProblem]:
    """All commuting squares from a generator to p, in deterministic order."""
    for u in enumerate_maps(gen.source, p.source):
        want = compose(p, u)
        forced = {}
        consistent = True
        for c in gen.source.nondegenerate():
            img = gen.apply_cell(c)
            if not img.word:
                w = want.apply_cell(c)
                if forced.setdefault(img.base, w) != w:
                    consistent = False
                    break
        if not consistent:
            continue
        for v in enumerate_maps(gen.target, p.target, forced=forced):
            if compose(v, gen) == want:
                yield LiftingProblem(gen, p, u, v)


def has_rlp(p: SMap, family: GeneratorFamily) -> tuple[bool, Optional[LiftingProblem]]:
    """Right lifting property against every generator; returns a
    counterexample square on failure."""
    for gen in family.generators:
        for prob in lifting_problems(gen, p):
            if solve_lift(prob) is None:
                return False, prob
    return True, None


def has_llp(i: SMap, tests: Sequence[SMap]) -> tuple[bool, Optional[LiftingProblem]]:
    """Left lifting property of i against a finite family of test maps."""
    for p in tests:
        for prob in lifting_problems(i, p):
            if solve_lift(prob) is None:
                return False, prob
    return True, None


@dataclass(frozen=True)
class Classification:
    kan_fib: bool
    inner_fib: bool
    trivial_fib: bool
    cat_fib: bool
    depth: int
    counterexamples: dict = field(default_factory=dict, compare=False)


def classify(p: SMap, depth: int) -> Classification:
    results = {}
    counter = {}
    for name in ("kan", "inner", "trivial", "cat"):
        ok, ce = has_rlp(p, family_by_name(name, depth))
        results[name] = ok
        if ce is not None:
            counter[name] = ce
    return Classification(
        kan_fib=results["kan"],
        inner_fib=results["inner"],
        trivial_fib=results["trivial"],
        cat_fib=results["cat"],
        depth=depth,
        counterexamples=counter,
    )


class BudgetExhausted(RuntimeError):
    """The by-need small object argument ran out of cell budget."""

    def __init__(self, message: str, partial: "CellFactorization"):
        super().__init__(message)
        self.partial = partial


@dataclass(frozen=True)
class CellAttachment:
    generator_index: int
    attaching: SMap  # generator source -> current middle object


@dataclass(frozen=True)
class CellFactorization:
    """Witness of f = right . left with left a relative cell map."""

    left: SMap
    right: SMap
    attachments: tuple[CellAttachment, ...]
    complete: bool  # True when no unsolved lifting problem remains at depth

    @property
    def middle(self) -> FinSSet:
        return self.left.target


def _unsolved_problem(
    r: SMap, family: GeneratorFamily
) -> Optional[tuple[int, LiftingProblem]]:
    for idx, gen in enumerate(family.generators):
        for prob in lifting_problems(gen, r):
            if solve_lift(prob) is None:
                return idx, prob
    return None


def factor_soa(f: SMap, family: GeneratorFamily, budget: int) -> CellFactorization:
    """Factor f as (relative cell map, map with RLP up to depth), by need.

    Attaches one generator cell per unsolved lifting problem, in deterministic
    order, until none remain or the budget runs out (raising BudgetExhausted
    with the partial factorization attached).
    """
    left = identity(f.source)
    right = f
    attachments: list[CellAttachment] = []
    while True:
        found = _unsolved_problem(right, family)
        if found is None:
            return CellFactorization(left, right, tuple(attachments), True)
        if len(attachments) >= budget:
            partial = CellFactorization(left, right, tuple(attachments), False)
            raise BudgetExhausted(
                f"cell budget {budget} exhausted with unsolved problems remaining", partial
            )
        idx, prob = found
        gen = family.generators[idx]
        po = pushout(gen, prob.top)
        step = po.inr  # middle -> new middle (cobase change of the generator)
        left = compose(step, left)
        right = po.induce(prob.bottom, right)
        attachments.append(CellAttachment(idx, prob.top))
    # unreachable


def retract_argument(f: SMap, g: SMap) -> Optional[tuple[SMap, SMap, SMap, SMap]]:
    """Search for a presentation of f as a retract of g.

    Returns (a, r, b, s) with a: A -> C, r: C -> A, b: B -> D, s: D -> B such
    that r.a = id, s.b = id, g.a = b.f and f.r = s.g.
    """
    A, B = f.source, f.target
    C, D = g.source, g.target
    ida, idb = identity(A), identity(B)
    for a in enumerate_maps(A, C):
        for r in enumerate_maps(C, A):
            if compose(r, a) != ida:
                continue
            for b in enumerate_maps(B, D):
                if compose(g, a) != compose(b, f):
                    continue
                for s in enumerate_maps(D, B):
                    if compose(s, b) != idb:
                        continue
                    if compose(f, r) == compose(s, g):
                        return a, r, b, s
    return None


def leibniz(i: SMap, j: SMap) -> tuple[SMap, "object"]:
    """Pushout-product of i: A -> B and j: U -> V.

    Returns (the induced map P -> B x V, the pushout structure), where P is
    the pushout of A x V <- A x U -> B x U.
    """
    from .kernel import product

    a, b = i.source, i.target
    u, v = j.source, j.target
    av = product(a, v)
    au = product(a, u)
    bu = product(b, u)
    bv = product(b, v)
    # A x U -> A x V and A x U -> B x U
    au_to_av = av.pair(au.proj1, compose(j, au.proj2))
    au_to_bu = bu.pair(compose(i, au.proj1), au.proj2)
    po = pushout(au_to_av, au_to_bu)
    # cocone into B x V
    av_to_bv = bv.pair(compose(i, av.proj1), av.proj2)
    bu_to_bv = bv.pair(bu.proj1, compose(j, bu.proj2))
    induced = po.induce(av_to_bv, bu_to_bv)
    return induced, po


@dataclass(frozen=True)
class QuasifibrationReport:
    ok: bool
    probe_results: tuple[tuple[int, bool], ...]
    factorization: CellFactorization
    detail: str = ""


def quasifibration_check(
    f: SMap,
    family: GeneratorFamily,
    probes: Sequence[SMap],
    tests: Sequence[SMap],
    budget: int,
) -> QuasifibrationReport:
    """Check f is a quasifibration relative to the given probes.

    Factors f = p . i with p having RLP up to depth; then for each probe
    z': Z' -> Z pulls the factorization back and demands the pulled-back left
    leg keep the left lifting property against the test fibrations.
    """
    from .kernel import pullback

    fac = factor_soa(f, family, budget)
    results = []
    all_ok = True
    for idx, probe in enumerate(probes):
        if probe.target != f.target:
            raise SSetError(f"probe {idx} does not land in the codomain of f")
        pb_y = pullback(fac.right, probe)  # Y xZ Z' -> Y
        pb_x = pullback(fac.left, pb_y.to_left)  # X xY Y' over the middle
        i_pulled = pb_x.to_right  # X' -> Y'
        ok, _ = has_llp(i_pulled, tests)
        results.append((idx, ok))
        all_ok = all_ok and ok
    return QuasifibrationReport(all_ok, tuple(results), fac)


@dataclass(frozen=True)
class IdentityClosureReport:
    ok: bool
    failures: tuple[int, ...]
    details: tuple[str, ...] = ()


def identity_closure_check(
    fibrations: Sequence[SMap],
    fine_family: GeneratorFamily,
    coarse_family: GeneratorFamily,
    budget: int,
) -> IdentityClosureReport:
    """For each fine-family fibration p: Y -> G, factor the relative diagonal
    Y -> Y xG Y over the coarse family and demand the right factor be a
    fine-family fibration again."""
    from .kernel import product, pullback

    failures = []
    details = []
    for idx, p in enumerate(fibrations):
        pb = pullback(p, p)
        diag = pb.pair(identity(p.source), identity(p.source))
        try:
            fac = factor_soa(diag, coarse_family, budget)
        except BudgetExhausted as exc:
            failures.append(idx)
            details.append(f"fibration {idx}: {exc}")
            continue
        ok, ce = has_rlp(fac.right, fine_family)
        if not ok:
            failures.append(idx)
            details.append(f"fibration {idx}: right factor fails fine-family RLP: {ce}")
    return IdentityClosureReport(not failures, tuple(failures), tuple(details))

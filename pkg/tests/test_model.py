"""Semantic layer: contexts, types-as-spans, formers, and the axiom audit."""

import pytest

from ssetkit.acceptance import split_substitution_suite
from ssetkit.corpus import discrete
from ssetkit.kernel import (
    compose,
    constant_map,
    identity,
    product,
    std_simplex,
    terminal,
    terminal_map,
)
from ssetkit.lifting import kan_family
from ssetkit.model import (
    FibClassSpec,
    LUContext,
    LUTerm,
    LUType,
    ModelError,
    SemifibCorpus,
    audit_semifib,
    ctx_extend,
    enumerate_terms,
    sigma_pair,
    sigma_proj1,
    sigma_proj2,
    sigma_type,
    subst,
    subst_term,
    unit_term,
    unit_type,
)

SPEC = FibClassSpec("kan", 2)


def constant_type(gamma: LUContext, fiber) -> LUType:
    return LUType(gamma, terminal_map(gamma.sset), terminal_map(fiber), SPEC)


# -- strict structure ----------------------------------------------------------


def test_type_equality_ignores_aux():
    gamma = LUContext(terminal())
    a = constant_type(gamma, discrete(2))
    b = LUType(gamma, a.r, a.p, SPEC, aux={"note": "different handles"})
    assert a == b


def test_type_rejects_misaligned_span():
    gamma = LUContext(std_simplex(1))
    with pytest.raises(ModelError):
        LUType(gamma, terminal_map(terminal()), terminal_map(discrete(2)), SPEC)


def test_term_must_live_over_classifier():
    gamma = LUContext(std_simplex(1))
    a = constant_type(gamma, discrete(2))
    good = LUTerm(a, constant_map(gamma.sset, discrete(2), "p0"))
    assert compose(a.p, good.section) == a.r
    with pytest.raises(ModelError):
        LUTerm(a, constant_map(terminal(), discrete(2), "p0"))


def test_subst_is_strictly_functorial():
    gamma = LUContext(std_simplex(1))
    delta = LUContext(terminal())
    a = constant_type(gamma, discrete(2))
    sigma = constant_map(delta.sset, gamma.sset, "0")
    assert subst(a, identity(gamma.sset)) == a
    assert subst(subst(a, sigma), identity(delta.sset)) == subst(a, sigma)
    tau = terminal_map(std_simplex(2))
    assert subst(subst(a, sigma), tau) == subst(a, compose(sigma, tau))


def test_extension_projection_and_variable():
    gamma = LUContext(std_simplex(1))
    a = constant_type(gamma, discrete(2))
    ext = ctx_extend(gamma, a)
    assert ext.proj.source == ext.ctx.sset
    assert ext.proj.target == gamma.sset
    # the generic variable is a section of the weakened type
    weak = ext.var.type
    assert weak.ctx == ext.ctx
    assert weak.r == compose(a.r, ext.proj)
    assert compose(weak.p, ext.var.section) == weak.r


# -- individual formers ---------------------------------------------------------


def test_unit_has_exactly_one_term():
    gamma = LUContext(std_simplex(1))
    u = unit_type(gamma, SPEC)
    terms = enumerate_terms(u)
    assert len(terms) == 1
    assert terms[0] == unit_term(u)


def test_sigma_projections_invert_pairing():
    gamma = LUContext(terminal())
    a = constant_type(gamma, discrete(2))
    ext = ctx_extend(gamma, a)
    b = constant_type(ext.ctx, discrete(2))
    s = sigma_type(a, b, ext)
    at = LUTerm(a, constant_map(gamma.sset, discrete(2), "p0"))
    sa = ext.pb.pair(identity(gamma.sset), at.section)
    bt = LUTerm(subst(b, sa), constant_map(gamma.sset, discrete(2), "p1"))
    pair = sigma_pair(s, at, bt)
    assert sigma_proj1(s, pair) == at
    assert sigma_proj2(s, pair).section == bt.section
    assert sigma_pair(s, sigma_proj1(s, pair), sigma_proj2(s, pair)) == pair


def test_term_substitution_is_precomposition():
    gamma = LUContext(std_simplex(1))
    delta = LUContext(terminal())
    sigma = constant_map(delta.sset, gamma.sset, "1")
    a = constant_type(gamma, discrete(2))
    t = LUTerm(a, constant_map(gamma.sset, discrete(2), "p1"))
    assert subst_term(t, sigma).section == compose(t.section, sigma)


# -- the full substitution/equation suite ----------------------------------------


def test_split_substitution_suite_holds():
    judgments = split_substitution_suite(depth=2, budget=300)
    assert len(judgments) == 33
    failures = [name for name, holds in judgments if not holds]
    for name, holds in judgments:
        print(f"[{'ok' if holds else 'FAIL'}] {name}")
    assert failures == []


# -- semantic-axiom audit ---------------------------------------------------------


def test_audit_passes_on_discrete_corpus():
    pt = terminal()
    pts2 = discrete(2)
    interval = std_simplex(1)
    corpus = SemifibCorpus(
        objects=(pt, pts2, interval),
        maps=(
            identity(pt),
            identity(pts2),
            identity(interval),
            terminal_map(pts2),
            constant_map(pt, pts2, "p0"),
            product(pts2, pts2).proj1,
        ),
    )
    report = audit_semifib(FibClassSpec("kan", 2), corpus, budget=300, depth=2)
    assert report.ok
    assert all(v.status == "pass" for v in report.verdicts)
    assert len(report.verdicts) >= 4

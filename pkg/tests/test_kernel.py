"""Kernel layer: simplicial identities, hom counting, (co)limits, serialization."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ssetkit.kernel import (
    Simplex,
    boundary,
    compose,
    coproduct,
    count_maps,
    delta_map,
    enumerate_sections,
    exponential,
    find_isomorphism,
    horn,
    identity,
    load_smap,
    load_sset,
    nerve_j,
    nondeg,
    product,
    pullback,
    pushforward,
    pushout,
    save_smap,
    save_sset,
    sigma_map,
    std_simplex,
    terminal,
    terminal_map,
    yoneda,
)
from ssetkit.corpus import discrete, random_sset, small_objects

seeds = st.integers(min_value=0, max_value=10**6)


# -- well-formedness ----------------------------------------------------------


@pytest.mark.parametrize("n", range(4))
def test_standard_simplices_validate(n):
    assert std_simplex(n).validate() == []


@pytest.mark.parametrize(
    "x",
    [boundary(1)[0], boundary(2)[0], horn(2, 1)[0], horn(3, 2)[0], nerve_j(2)],
    ids=["bd1", "bd2", "horn21", "horn32", "nervej2"],
)
def test_standard_complexes_validate(x):
    assert x.validate() == []


@given(seeds)
@settings(max_examples=60, deadline=None)
def test_random_sset_validates(seed):
    x = random_sset(random.Random(seed))
    assert x.validate() == []


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_simplicial_face_identities(seed):
    """d_i d_j = d_{j-1} d_i for i < j, on every nondegenerate simplex."""
    x = random_sset(random.Random(seed))
    for cell in x.nondegenerate():
        n = x.cell_dim(cell)
        if n < 2:
            continue
        s = nondeg(cell)
        for j in range(n + 1):
            for i in range(j):
                left = x.face(x.face(s, j), i)
                right = x.face(x.face(s, i), j - 1)
                assert left == right


def test_cosimplicial_identity():
    # delta_j . delta_i = delta_i . delta_{j-1} for i < j
    for n in (1, 2):
        for j in range(n + 2):
            for i in range(j):
                lhs = compose(delta_map(n + 1, j), delta_map(n, i))
                rhs = compose(delta_map(n + 1, i), delta_map(n, j - 1))
                assert lhs == rhs


def test_codegeneracy_section():
    for n in (0, 1):
        for i in range(n + 1):
            assert compose(sigma_map(n, i), delta_map(n + 1, i)) == identity(
                std_simplex(n)
            )


# -- hom counting and the Yoneda correspondence -------------------------------


@pytest.mark.parametrize("x", small_objects(), ids=lambda x: f"{x.size()}cells")
def test_yoneda_counts(x):
    for n in range(3):
        if x.dim_bound is not None and n > x.dim_bound:
            continue
        assert count_maps(std_simplex(n), x) == len(x.simplices(n))


def test_yoneda_classifier_is_a_map():
    x = horn(2, 1)[0]
    for cell in x.nondegenerate():
        m = yoneda(x, nondeg(cell))
        assert m.validate() == []
        assert m.apply(nondeg("_".join(str(i) for i in range(x.cell_dim(cell) + 1))))


def test_compose_associative():
    a = delta_map(2, 0)  # std(1) -> std(2)
    b = sigma_map(1, 0)  # std(2) -> std(1)
    c = terminal_map(std_simplex(1))
    assert compose(c, compose(b, a)) == compose(compose(c, b), a)


# -- universal properties -----------------------------------------------------


@pytest.mark.parametrize(
    "a,b", [(std_simplex(1), discrete(2)), (boundary(1)[0], std_simplex(1))]
)
def test_product_counts(a, b):
    p = product(a, b)
    for c in (terminal(), std_simplex(1)):
        assert count_maps(c, p.sset) == count_maps(c, a) * count_maps(c, b)


def test_product_projections_recover_pairing():
    from ssetkit.kernel import constant_map

    a, b = std_simplex(1), discrete(2)
    p = product(a, b)
    f = identity(a)
    g = compose(constant_map(terminal(), b, "p1"), terminal_map(a))
    h = p.pair(f, g)
    assert compose(p.proj1, h) == f
    assert compose(p.proj2, h) == g


def test_coproduct_counts():
    a, b = std_simplex(1), terminal()
    co = coproduct(a, b)
    for c in (discrete(2), std_simplex(1)):
        assert count_maps(co.sset, c) == count_maps(a, c) * count_maps(b, c)


def test_exponential_adjunction_counts():
    a, b, c = discrete(2), std_simplex(1), discrete(2)
    exp = exponential(c, b, depth=2)
    assert count_maps(product(a, b).sset, c) == count_maps(a, exp.sset)


def test_pushforward_sections_match_transpose():
    # sections of the pushforward along id correspond to sections of g
    f = identity(std_simplex(1))
    from ssetkit.kernel import constant_map

    g = product(std_simplex(1), discrete(2)).proj1
    pf = pushforward(f, g, depth=2)
    n_direct = sum(1 for _ in enumerate_sections(g, identity(std_simplex(1))))
    n_push = sum(1 for _ in enumerate_sections(pf.struct, identity(std_simplex(1))))
    assert n_direct == n_push


def test_pullback_cone():
    f = boundary(1)[1]
    g = terminal_map(std_simplex(1))
    pb = pullback(terminal_map(f.target), g)
    assert compose(terminal_map(f.target), pb.to_left) == compose(g, pb.to_right)
    assert pb.sset.validate() == []


def test_pushout_cocone_and_induce():
    from ssetkit.kernel import constant_map

    span_apex = terminal()
    f = constant_map(span_apex, std_simplex(1), "0")
    g = constant_map(span_apex, std_simplex(1), "1")
    po = pushout(f, g)
    assert compose(po.inl, f) == compose(po.inr, g)
    collapse = po.induce(terminal_map(std_simplex(1)), terminal_map(std_simplex(1)))
    assert collapse.validate() == []
    assert collapse.target == terminal()


# -- isomorphism search -------------------------------------------------------


def test_find_isomorphism_on_rename():
    x = horn(2, 1)[0]
    y = x.rename(lambda c: f"z_{c}")
    iso = find_isomorphism(x, y)
    assert iso is not None
    assert iso.validate() == []
    assert iso.is_mono()


def test_find_isomorphism_distinguishes():
    assert find_isomorphism(std_simplex(1), boundary(1)[0]) is None
    assert find_isomorphism(nerve_j(2), nerve_j(3)) is None


# -- serialization ------------------------------------------------------------


@given(seed=seeds)
@settings(max_examples=25, deadline=None)
def test_sset_round_trip(tmp_path_factory, seed):
    x = random_sset(random.Random(seed))
    path = tmp_path_factory.mktemp("ser") / "x.sset"
    save_sset(x, path)
    assert load_sset(path) == x
    first = path.read_bytes()
    save_sset(load_sset(path), path)
    assert path.read_bytes() == first


def test_smap_round_trip(tmp_path):
    x, incl = horn(2, 1)
    save_sset(x, tmp_path / "src.sset")
    save_sset(incl.target, tmp_path / "tgt.sset")
    save_smap(incl, tmp_path / "m.smap", "src.sset", "tgt.sset")
    assert load_smap(tmp_path / "m.smap") == incl


def test_corpus_files_load(corpus_dir):
    ssets = sorted((corpus_dir / "ssets").glob("*.sset"))
    maps = sorted((corpus_dir / "maps").glob("*.smap"))
    assert len(ssets) == 10 and len(maps) == 9
    for p in ssets:
        assert load_sset(p).validate() == []
    for p in maps:
        assert load_smap(p).validate() == []

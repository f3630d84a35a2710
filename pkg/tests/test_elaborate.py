"""Semantic interpretation of closed checked programs."""

import pytest

from ssetkit.corpus import discrete
from ssetkit.kernel import constant_map, identity, terminal, terminal_map
from ssetkit.lifting import kan_family
from ssetkit.model import FibClassSpec, LUContext, LUTerm, LUType, UnsupportedConstruction
from ssetkit.tt import syntax as S
from ssetkit.tt.checker import check_source
from ssetkit.tt.elaborate import Elaborator, ModelEnv, elaborate_term, elaborate_type
from ssetkit.tt.parser import parse_term, parse_type


def make_env(**kw) -> ModelEnv:
    spec = FibClassSpec("kan", 2)
    env = ModelEnv(spec, FibClassSpec("inner", 2), kan_family(2), budget=300, **kw)
    pt = LUContext(terminal())
    k = LUType(pt, terminal_map(terminal()), terminal_map(discrete(2)), spec)
    env.types["K"] = k
    env.terms["k0"] = LUTerm(k, constant_map(terminal(), discrete(2), "p0"))
    env.base_types["J"] = discrete(2)
    env.base_terms["j0"] = constant_map(terminal(), discrete(2), "p0")
    return env


def test_unit_round_trip():
    env = make_env()
    u = elaborate_type(env, S.TUnit())
    u.validate_fibration()
    t = elaborate_term(env, S.One(), S.TUnit())
    assert t.type == u


def test_constant_binding_is_used():
    env = make_env()
    k = elaborate_type(env, parse_type("K"))
    assert k.p == terminal_map(discrete(2))
    t = elaborate_term(env, parse_term("k0"), parse_type("K"))
    assert t.section == constant_map(terminal(), discrete(2), "p0")


def test_sigma_elaborates_and_projects():
    env = make_env()
    s = elaborate_type(env, parse_type("Sigma (x : K) One"))
    s.validate_fibration()
    pair = elaborate_term(env, parse_term("spair(k0, one)"), parse_type("Sigma (x : K) One"))
    first = elaborate_term(env, parse_term("fst(spair(k0, one))"), parse_type("K"))
    assert first.section == constant_map(terminal(), discrete(2), "p0")
    assert pair.type == s


def test_hom_identity_elaborates():
    env = make_env()
    h = elaborate_type(env, parse_type("Hom(K, K)"))
    h.validate_fibration()
    f = elaborate_term(env, parse_term("\\x . x"), parse_type("Hom(K, K)"))
    assert f.type == h


def test_pi_over_base_fiber():
    env = make_env()
    p = elaborate_type(env, parse_type("Pi (i : J) K"))
    p.validate_fibration()
    f = elaborate_term(env, parse_term("\\i . k0"), parse_type("Pi (i : J) K"))
    assert f.type == p


def test_coprod_over_base_fiber():
    env = make_env(stable_coproducts=True)
    c = elaborate_type(env, parse_type("Coprod (i : J) K"))
    c.validate_fibration()


def test_path_type_elaborates():
    env = make_env()
    p = elaborate_type(env, parse_type("Path(K, k0, k0)"))
    p.validate_fibration()


def test_id_type_elaborates():
    env = make_env()
    i = elaborate_type(env, parse_type("Id(K, k0, k0)"))
    i.validate_fibration()


# -- declared-out-of-scope constructions ----------------------------------------


def test_pushout_terms_are_out_of_scope():
    env = make_env()
    with pytest.raises(UnsupportedConstruction):
        elaborate_term(env, parse_term("pinl(k0)"), parse_type("K"))


def test_applied_type_constant_is_out_of_scope():
    env = make_env()
    with pytest.raises(UnsupportedConstruction):
        elaborate_type(env, parse_type("(P j0)"))


def test_interval_has_no_indexed_reading():
    env = make_env()
    with pytest.raises(UnsupportedConstruction):
        elaborate_type(env, S.TInterval())


def test_unbound_constant_reports():
    env = make_env()
    with pytest.raises(UnsupportedConstruction):
        elaborate_type(env, parse_type("Missing"))


# -- whole-declaration interpretation ---------------------------------------------


def test_elab_decl_on_checked_program():
    src = (
        "postulate K () | () : Type\n"
        "postulate k0 () | () : K\n"
        "def u () | () : One := one\n"
    )
    ck = check_source(src)
    env = make_env()
    el = Elaborator(env)
    t = el.elab_decl(ck.decls["u"])
    assert isinstance(t, LUTerm)
    with pytest.raises(UnsupportedConstruction):
        el.elab_decl(ck.decls["K"])

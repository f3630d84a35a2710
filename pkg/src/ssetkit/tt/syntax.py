"""AST for the two-zone type theory, with printing and substitution.

Terms and types are named (not de Bruijn); alpha-equivalence and
capture-avoiding substitution are provided here, and the printer is the
inverse of the parser on ASTs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Tuple, Union

__all__ = [
    "Type",
    "Term",
    "TConst",
    "TUnit",
    "TInterval",
    "THom",
    "TDepHom",
    "TPi",
    "TCoprod",
    "TSigma",
    "TId",
    "TPath",
    "TExt",
    "ExtClause",
    "TPushout",
    "Var",
    "Lam",
    "App",
    "HomLam",
    "HomApp",
    "EApp",
    "EAppClause",
    "One",
    "I0",
    "I1",
    "SPair",
    "Fst",
    "Snd",
    "Refl",
    "IdJ",
    "In",
    "CPair",
    "CoprodElim",
    "Pinl",
    "Pinr",
    "Pglue",
    "PushElim",
    "type_to_src",
    "term_to_src",
    "subst",
    "subst_type",
    "free_vars",
    "free_vars_type",
    "alpha_equal",
    "alpha_equal_type",
    "fresh",
]


# ---------------------------------------------------------------- types


@dataclass(frozen=True)
class TConst:
    """A declared type constant, possibly applied to telescope arguments."""

    name: str
    args: tuple = ()


@dataclass(frozen=True)
class TUnit:
    pass


@dataclass(frozen=True)
class TInterval:
    pass


@dataclass(frozen=True)
class THom:
    a: "Type"
    b: "Type"


@dataclass(frozen=True)
class TDepHom:
    """Hom((x1 : A1) ... . B): dependent Hom over an indexed telescope."""

    tele: tuple  # of (name, Type)
    b: "Type"


@dataclass(frozen=True)
class TPi:
    i: str
    itype: "Type"
    body: "Type"


@dataclass(frozen=True)
class TCoprod:
    i: str
    itype: "Type"
    body: "Type"


@dataclass(frozen=True)
class TSigma:
    x: str
    xtype: "Type"
    body: "Type"


@dataclass(frozen=True)
class TId:
    a: "Type"
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class TPath:
    a: "Type"
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class ExtClause:
    """One piece of the index decomposition: (x : U) j . a."""

    x: str
    u: "Type"
    j: "Term"  # comparison map, a term of V with x free
    body: "Term"  # a, a term of A[j x / y] with x free


@dataclass(frozen=True)
class TExt:
    """<Pi (y : V) A | (x1 : U1) j1 . a1, ...>: the extension type."""

    y: str
    v: "Type"
    a: "Type"
    clauses: tuple  # of ExtClause


@dataclass(frozen=True)
class TPushout:
    """Pushout(f, g) of a span given by two Hom-terms with a common domain."""

    f: "Term"
    g: "Term"


Type = Union[
    TConst, TUnit, TInterval, THom, TDepHom, TPi, TCoprod, TSigma, TId, TPath, TExt, TPushout
]


# ---------------------------------------------------------------- terms


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Lam:
    """\\x. b -- introduction for Hom, Pi, and extension types."""

    x: str
    body: "Term"


@dataclass(frozen=True)
class App:
    """f a -- elimination for Hom (indexed argument) and Pi (base argument)."""

    f: "Term"
    a: "Term"


@dataclass(frozen=True)
class HomLam:
    """lam(b): dependent-Hom introduction."""

    body: "Term"


@dataclass(frozen=True)
class HomApp:
    """f (): dependent-Hom elimination."""

    f: "Term"


@dataclass(frozen=True)
class EAppClause:
    x: str
    body: "Term"


@dataclass(frozen=True)
class EApp:
    """app{x1.a1, ...}(f, v): clause-annotated extension application."""

    clauses: tuple  # of EAppClause
    f: "Term"
    v: "Term"


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class I0:
    pass


@dataclass(frozen=True)
class I1:
    pass


@dataclass(frozen=True)
class SPair:
    a: "Term"
    b: "Term"


@dataclass(frozen=True)
class Fst:
    t: "Term"


@dataclass(frozen=True)
class Snd:
    t: "Term"


@dataclass(frozen=True)
class Refl:
    t: "Term"


@dataclass(frozen=True)
class IdJ:
    """idJ(z p. D, x. d, q): the standard identity eliminator."""

    z: str
    p: str
    dtype: "Type"
    x: str
    d: "Term"
    q: "Term"


@dataclass(frozen=True)
class In:
    """in(j, x): unstable coproduct introduction (x must be a variable)."""

    j: "Term"
    b: "Term"


@dataclass(frozen=True)
class CPair:
    """(j, b): stable coproduct introduction."""

    j: "Term"
    b: "Term"


@dataclass(frozen=True)
class CoprodElim:
    """coprod-elim(z. D, i x. d, t): eliminate the coproduct term t."""

    z: str
    dtype: "Type"
    i: str
    x: str
    d: "Term"
    scrut: "Term"


@dataclass(frozen=True)
class Pinl:
    t: "Term"


@dataclass(frozen=True)
class Pinr:
    t: "Term"


@dataclass(frozen=True)
class Pglue:
    t: "Term"
    r: "Term"


@dataclass(frozen=True)
class PushElim:
    """pelim(w. D, y. d1, z. d2, x i. d3, t)."""

    w: str
    dtype: "Type"
    y: str
    d1: "Term"
    z: str
    d2: "Term"
    x: str
    i: str
    d3: "Term"
    scrut: "Term"


Term = Union[
    Var, Lam, App, HomLam, HomApp, EApp, One, I0, I1, SPair, Fst, Snd, Refl, IdJ,
    In, CPair, CoprodElim, Pinl, Pinr, Pglue, PushElim,
]


# ---------------------------------------------------------------- printing


def _tele_src(tele) -> str:
    return " ".join(f"({n} : {type_to_src(t)})" for n, t in tele)


def type_to_src(t: Type) -> str:
    if isinstance(t, TConst):
        if t.args:
            return "(" + t.name + " " + " ".join(_atom_src(a) for a in t.args) + ")"
        return t.name
    if isinstance(t, TUnit):
        return "One"
    if isinstance(t, TInterval):
        return "I1"
    if isinstance(t, THom):
        return f"Hom({type_to_src(t.a)}, {type_to_src(t.b)})"
    if isinstance(t, TDepHom):
        return f"Hom({_tele_src(t.tele)} . {type_to_src(t.b)})"
    if isinstance(t, TPi):
        return f"Pi ({t.i} : {type_to_src(t.itype)}) {type_to_src(t.body)}"
    if isinstance(t, TCoprod):
        return f"Coprod ({t.i} : {type_to_src(t.itype)}) {type_to_src(t.body)}"
    if isinstance(t, TSigma):
        return f"Sigma ({t.x} : {type_to_src(t.xtype)}) {type_to_src(t.body)}"
    if isinstance(t, TId):
        return f"Id({type_to_src(t.a)}, {term_to_src(t.left)}, {term_to_src(t.right)})"
    if isinstance(t, TPath):
        return f"Path({type_to_src(t.a)}, {term_to_src(t.left)}, {term_to_src(t.right)})"
    if isinstance(t, TExt):
        cl = ", ".join(
            f"({c.x} : {type_to_src(c.u)}) {_atom_src(c.j)} . {term_to_src(c.body)}"
            for c in t.clauses
        )
        return f"<Pi ({t.y} : {type_to_src(t.v)}) {type_to_src(t.a)} | {cl}>"
    if isinstance(t, TPushout):
        return f"Pushout({term_to_src(t.f)}, {term_to_src(t.g)})"
    raise TypeError(f"not a type node: {t!r}")


def _atom_src(t: Term) -> str:
    s = term_to_src(t)
    if isinstance(t, (Var, One, I0, I1, HomApp)) or s.startswith("("):
        return s
    if isinstance(t, (SPair, CPair)):
        return s
    return f"({s})"


def term_to_src(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Lam):
        return f"\\{t.x}. {term_to_src(t.body)}"
    if isinstance(t, App):
        return f"{_head_src(t.f)} {_atom_src(t.a)}"
    if isinstance(t, HomLam):
        return f"lam({term_to_src(t.body)})"
    if isinstance(t, HomApp):
        return f"{_head_src(t.f)} ()"
    if isinstance(t, EApp):
        cl = ", ".join(f"{c.x}. {term_to_src(c.body)}" for c in t.clauses)
        return f"app{{{cl}}}({term_to_src(t.f)}, {term_to_src(t.v)})"
    if isinstance(t, One):
        return "one"
    if isinstance(t, I0):
        return "i0"
    if isinstance(t, I1):
        return "i1"
    if isinstance(t, SPair):
        return f"spair({term_to_src(t.a)}, {term_to_src(t.b)})"
    if isinstance(t, Fst):
        return f"fst({term_to_src(t.t)})"
    if isinstance(t, Snd):
        return f"snd({term_to_src(t.t)})"
    if isinstance(t, Refl):
        return f"refl({term_to_src(t.t)})"
    if isinstance(t, IdJ):
        return (
            f"idJ({t.z} {t.p}. {type_to_src(t.dtype)}, {t.x}. {term_to_src(t.d)}, "
            f"{term_to_src(t.q)})"
        )
    if isinstance(t, In):
        return f"in({term_to_src(t.j)}, {term_to_src(t.b)})"
    if isinstance(t, CPair):
        return f"({term_to_src(t.j)}, {term_to_src(t.b)})"
    if isinstance(t, CoprodElim):
        return (
            f"coprod-elim({t.z}. {type_to_src(t.dtype)}, {t.i} {t.x}. {term_to_src(t.d)}, "
            f"{term_to_src(t.scrut)})"
        )
    if isinstance(t, Pinl):
        return f"pinl({term_to_src(t.t)})"
    if isinstance(t, Pinr):
        return f"pinr({term_to_src(t.t)})"
    if isinstance(t, Pglue):
        return f"pglue({term_to_src(t.t)}, {term_to_src(t.r)})"
    if isinstance(t, PushElim):
        return (
            f"pelim({t.w}. {type_to_src(t.dtype)}, {t.y}. {term_to_src(t.d1)}, "
            f"{t.z}. {term_to_src(t.d2)}, {t.x} {t.i}. {term_to_src(t.d3)}, "
            f"{term_to_src(t.scrut)})"
        )
    raise TypeError(f"not a term node: {t!r}")


def _head_src(t: Term) -> str:
    # heads of applications: lambdas and eliminators need parentheses
    s = term_to_src(t)
    if isinstance(t, (Lam, HomLam, CoprodElim, IdJ, PushElim, In, CPair, EApp)):
        return f"({s})"
    return s


# ---------------------------------------------------------------- variables


def free_vars(t: Term) -> frozenset:
    if isinstance(t, Var):
        return frozenset([t.name])
    if isinstance(t, Lam):
        return free_vars(t.body) - {t.x}
    if isinstance(t, App):
        return free_vars(t.f) | free_vars(t.a)
    if isinstance(t, HomLam):
        return free_vars(t.body)
    if isinstance(t, HomApp):
        return free_vars(t.f)
    if isinstance(t, EApp):
        out = free_vars(t.f) | free_vars(t.v)
        for c in t.clauses:
            out |= free_vars(c.body) - {c.x}
        return out
    if isinstance(t, (One, I0, I1)):
        return frozenset()
    if isinstance(t, SPair):
        return free_vars(t.a) | free_vars(t.b)
    if isinstance(t, (Fst, Snd, Refl, Pinl, Pinr)):
        inner = t.t
        return free_vars(inner)
    if isinstance(t, IdJ):
        return (
            (free_vars_type(t.dtype) - {t.z, t.p})
            | (free_vars(t.d) - {t.x})
            | free_vars(t.q)
        )
    if isinstance(t, (In, CPair)):
        return free_vars(t.j) | free_vars(t.b)
    if isinstance(t, CoprodElim):
        return (
            (free_vars_type(t.dtype) - {t.z})
            | (free_vars(t.d) - {t.i, t.x})
            | free_vars(t.scrut)
        )
    if isinstance(t, Pglue):
        return free_vars(t.t) | free_vars(t.r)
    if isinstance(t, PushElim):
        return (
            (free_vars_type(t.dtype) - {t.w})
            | (free_vars(t.d1) - {t.y})
            | (free_vars(t.d2) - {t.z})
            | (free_vars(t.d3) - {t.x, t.i})
            | free_vars(t.scrut)
        )
    raise TypeError(f"not a term node: {t!r}")


def free_vars_type(t: Type) -> frozenset:
    if isinstance(t, TConst):
        out = frozenset()
        for a in t.args:
            out |= free_vars(a)
        return out
    if isinstance(t, (TUnit, TInterval)):
        return frozenset()
    if isinstance(t, THom):
        return free_vars_type(t.a) | free_vars_type(t.b)
    if isinstance(t, TDepHom):
        out = free_vars_type(t.b)
        for n, ty in reversed(t.tele):
            out = (out - {n}) | free_vars_type(ty)
        return out
    if isinstance(t, (TPi, TCoprod)):
        return free_vars_type(t.itype) | (free_vars_type(t.body) - {t.i})
    if isinstance(t, TSigma):
        return free_vars_type(t.xtype) | (free_vars_type(t.body) - {t.x})
    if isinstance(t, (TId, TPath)):
        return free_vars_type(t.a) | free_vars(t.left) | free_vars(t.right)
    if isinstance(t, TExt):
        out = free_vars_type(t.v) | (free_vars_type(t.a) - {t.y})
        for c in t.clauses:
            out |= free_vars_type(c.u) | (free_vars(c.j) - {c.x}) | (free_vars(c.body) - {c.x})
        return out
    if isinstance(t, TPushout):
        return free_vars(t.f) | free_vars(t.g)
    raise TypeError(f"not a type node: {t!r}")


def fresh(base: str, avoid) -> str:
    """A name not in ``avoid``, derived from ``base`` by priming."""
    name = base
    while name in avoid:
        name += "'"
    return name


# ---------------------------------------------------------------- substitution


def subst(t: Term, name: str, value: Term) -> Term:
    """Capture-avoiding substitution of ``value`` for ``name`` in a term."""
    fv = free_vars(value)

    def go(t: Term, bound: frozenset) -> Term:
        if isinstance(t, Var):
            return value if t.name == name else t
        if isinstance(t, Lam):
            if t.x == name:
                return t
            if t.x in fv:
                nx = fresh(t.x, fv | free_vars(t.body) | bound | {name})
                return Lam(nx, go(subst(t.body, t.x, Var(nx)), bound | {nx}))
            return Lam(t.x, go(t.body, bound | {t.x}))
        if isinstance(t, App):
            return App(go(t.f, bound), go(t.a, bound))
        if isinstance(t, HomLam):
            return HomLam(go(t.body, bound))
        if isinstance(t, HomApp):
            return HomApp(go(t.f, bound))
        if isinstance(t, EApp):
            cls = []
            for c in t.clauses:
                if c.x == name:
                    cls.append(c)
                elif c.x in fv:
                    nx = fresh(c.x, fv | free_vars(c.body) | bound | {name})
                    cls.append(EAppClause(nx, go(subst(c.body, c.x, Var(nx)), bound | {nx})))
                else:
                    cls.append(EAppClause(c.x, go(c.body, bound | {c.x})))
            return EApp(tuple(cls), go(t.f, bound), go(t.v, bound))
        if isinstance(t, (One, I0, I1)):
            return t
        if isinstance(t, SPair):
            return SPair(go(t.a, bound), go(t.b, bound))
        if isinstance(t, Fst):
            return Fst(go(t.t, bound))
        if isinstance(t, Snd):
            return Snd(go(t.t, bound))
        if isinstance(t, Refl):
            return Refl(go(t.t, bound))
        if isinstance(t, Pinl):
            return Pinl(go(t.t, bound))
        if isinstance(t, Pinr):
            return Pinr(go(t.t, bound))
        if isinstance(t, Pglue):
            return Pglue(go(t.t, bound), go(t.r, bound))
        if isinstance(t, IdJ):
            dt = t.dtype if name in (t.z, t.p) else subst_type(t.dtype, name, value)
            d = t.d if name == t.x else subst(t.d, name, value)
            return IdJ(t.z, t.p, dt, t.x, d, go(t.q, bound))
        if isinstance(t, In):
            return In(go(t.j, bound), go(t.b, bound))
        if isinstance(t, CPair):
            return CPair(go(t.j, bound), go(t.b, bound))
        if isinstance(t, CoprodElim):
            dt = t.dtype if name == t.z else subst_type(t.dtype, name, value)
            d = t.d if name in (t.i, t.x) else subst(t.d, name, value)
            return CoprodElim(t.z, dt, t.i, t.x, d, go(t.scrut, bound))
        if isinstance(t, PushElim):
            dt = t.dtype if name == t.w else subst_type(t.dtype, name, value)
            d1 = t.d1 if name == t.y else subst(t.d1, name, value)
            d2 = t.d2 if name == t.z else subst(t.d2, name, value)
            d3 = t.d3 if name in (t.x, t.i) else subst(t.d3, name, value)
            return PushElim(t.w, dt, t.y, d1, t.z, d2, t.x, t.i, d3, go(t.scrut, bound))
        raise TypeError(f"not a term node: {t!r}")

    return go(t, frozenset())


def subst_type(t: Type, name: str, value: Term) -> Type:
    """Capture-avoiding substitution into a type."""
    if isinstance(t, TConst):
        return TConst(t.name, tuple(subst(a, name, value) for a in t.args))
    if isinstance(t, (TUnit, TInterval)):
        return t
    if isinstance(t, THom):
        return THom(subst_type(t.a, name, value), subst_type(t.b, name, value))
    if isinstance(t, TDepHom):
        tele = []
        shadowed = False
        for n, ty in t.tele:
            tele.append((n, ty if shadowed else subst_type(ty, name, value)))
            if n == name:
                shadowed = True
        body = t.b if shadowed else subst_type(t.b, name, value)
        return TDepHom(tuple(tele), body)
    if isinstance(t, (TPi, TCoprod)):
        cls = TPi if isinstance(t, TPi) else TCoprod
        it = subst_type(t.itype, name, value)
        if t.i == name:
            return cls(t.i, it, t.body)
        fv = free_vars(value)
        if t.i in fv:
            ni = fresh(t.i, fv | free_vars_type(t.body) | {name})
            return cls(ni, it, subst_type(subst_type(t.body, t.i, Var(ni)), name, value))
        return cls(t.i, it, subst_type(t.body, name, value))
    if isinstance(t, TSigma):
        xt = subst_type(t.xtype, name, value)
        if t.x == name:
            return TSigma(t.x, xt, t.body)
        fv = free_vars(value)
        if t.x in fv:
            nx = fresh(t.x, fv | free_vars_type(t.body) | {name})
            return TSigma(nx, xt, subst_type(subst_type(t.body, t.x, Var(nx)), name, value))
        return TSigma(t.x, xt, subst_type(t.body, name, value))
    if isinstance(t, (TId, TPath)):
        cls = TId if isinstance(t, TId) else TPath
        return cls(
            subst_type(t.a, name, value),
            subst(t.left, name, value),
            subst(t.right, name, value),
        )
    if isinstance(t, TExt):
        v = subst_type(t.v, name, value)
        a = t.a if t.y == name else subst_type(t.a, name, value)
        cls = []
        for c in t.clauses:
            u = subst_type(c.u, name, value)
            if c.x == name:
                cls.append(ExtClause(c.x, u, c.j, c.body))
            else:
                cls.append(
                    ExtClause(c.x, u, subst(c.j, name, value), subst(c.body, name, value))
                )
        return TExt(t.y, v, a, tuple(cls))
    if isinstance(t, TPushout):
        return TPushout(subst(t.f, name, value), subst(t.g, name, value))
    raise TypeError(f"not a type node: {t!r}")


# ---------------------------------------------------------------- alpha


def alpha_equal(t: Term, u: Term, env: tuple = ()) -> bool:
    """Alpha-equivalence of terms; env pairs bound names left-to-right."""

    def look(n: str, side: int) -> object:
        for i, pair in enumerate(reversed(env)):
            if pair[side] == n:
                return ("b", i)
        return ("f", n)

    if type(t) is not type(u):
        return False
    if isinstance(t, Var):
        return look(t.name, 0) == look(u.name, 1)
    if isinstance(t, Lam):
        return alpha_equal(t.body, u.body, env + ((t.x, u.x),))
    if isinstance(t, App):
        return alpha_equal(t.f, u.f, env) and alpha_equal(t.a, u.a, env)
    if isinstance(t, HomLam):
        return alpha_equal(t.body, u.body, env)
    if isinstance(t, HomApp):
        return alpha_equal(t.f, u.f, env)
    if isinstance(t, EApp):
        if len(t.clauses) != len(u.clauses):
            return False
        for c, d in zip(t.clauses, u.clauses):
            if not alpha_equal(c.body, d.body, env + ((c.x, d.x),)):
                return False
        return alpha_equal(t.f, u.f, env) and alpha_equal(t.v, u.v, env)
    if isinstance(t, (One, I0, I1)):
        return True
    if isinstance(t, SPair):
        return alpha_equal(t.a, u.a, env) and alpha_equal(t.b, u.b, env)
    if isinstance(t, (Fst, Snd, Refl, Pinl, Pinr)):
        return alpha_equal(t.t, u.t, env)
    if isinstance(t, IdJ):
        return (
            alpha_equal_type(t.dtype, u.dtype, env + ((t.z, u.z), (t.p, u.p)))
            and alpha_equal(t.d, u.d, env + ((t.x, u.x),))
            and alpha_equal(t.q, u.q, env)
        )
    if isinstance(t, (In, CPair)):
        return alpha_equal(t.j, u.j, env) and alpha_equal(t.b, u.b, env)
    if isinstance(t, CoprodElim):
        return (
            alpha_equal_type(t.dtype, u.dtype, env + ((t.z, u.z),))
            and alpha_equal(t.d, u.d, env + ((t.i, u.i), (t.x, u.x)))
            and alpha_equal(t.scrut, u.scrut, env)
        )
    if isinstance(t, Pglue):
        return alpha_equal(t.t, u.t, env) and alpha_equal(t.r, u.r, env)
    if isinstance(t, PushElim):
        return (
            alpha_equal_type(t.dtype, u.dtype, env + ((t.w, u.w),))
            and alpha_equal(t.d1, u.d1, env + ((t.y, u.y),))
            and alpha_equal(t.d2, u.d2, env + ((t.z, u.z),))
            and alpha_equal(t.d3, u.d3, env + ((t.x, u.x), (t.i, u.i)))
            and alpha_equal(t.scrut, u.scrut, env)
        )
    raise TypeError(f"not a term node: {t!r}")


def alpha_equal_type(t: Type, u: Type, env: tuple = ()) -> bool:
    if type(t) is not type(u):
        return False
    if isinstance(t, TConst):
        return t.name == u.name and len(t.args) == len(u.args) and all(
            alpha_equal(a, b, env) for a, b in zip(t.args, u.args)
        )
    if isinstance(t, (TUnit, TInterval)):
        return True
    if isinstance(t, THom):
        return alpha_equal_type(t.a, u.a, env) and alpha_equal_type(t.b, u.b, env)
    if isinstance(t, TDepHom):
        if len(t.tele) != len(u.tele):
            return False
        e = env
        for (n1, t1), (n2, t2) in zip(t.tele, u.tele):
            if not alpha_equal_type(t1, t2, e):
                return False
            e = e + ((n1, n2),)
        return alpha_equal_type(t.b, u.b, e)
    if isinstance(t, (TPi, TCoprod)):
        return alpha_equal_type(t.itype, u.itype, env) and alpha_equal_type(
            t.body, u.body, env + ((t.i, u.i),)
        )
    if isinstance(t, TSigma):
        return alpha_equal_type(t.xtype, u.xtype, env) and alpha_equal_type(
            t.body, u.body, env + ((t.x, u.x),)
        )
    if isinstance(t, (TId, TPath)):
        return (
            alpha_equal_type(t.a, u.a, env)
            and alpha_equal(t.left, u.left, env)
            and alpha_equal(t.right, u.right, env)
        )
    if isinstance(t, TExt):
        if len(t.clauses) != len(u.clauses):
            return False
        if not alpha_equal_type(t.v, u.v, env):
            return False
        if not alpha_equal_type(t.a, u.a, env + ((t.y, u.y),)):
            return False
        for c, d in zip(t.clauses, u.clauses):
            if not alpha_equal_type(c.u, d.u, env):
                return False
            e = env + ((c.x, d.x),)
            if not alpha_equal(c.j, d.j, e) or not alpha_equal(c.body, d.body, e):
                return False
        return True
    if isinstance(t, TPushout):
        return alpha_equal(t.f, u.f, env) and alpha_equal(t.g, u.g, env)
    raise TypeError(f"not a type node: {t!r}")

"""Definitional equality: beta-normalization plus type-directed eta.

``normalize`` performs the beta-rules of every eliminator on untyped terms;
``equal_terms`` compares normal forms up to alpha, eta-expanding at the four
function-like formers (Hom, dependent Hom, Pi, extension types) when the
type at the comparison boundary is known.  The extension-type equation
``app(f, j u) = a[u/x]`` needs the comparison maps j from the type, so it
also fires inside ``equal_terms`` (and inside ``normalize`` for the built-in
path-type pieces i0/i1).
"""

from __future__ import annotations

from typing import Optional

from .syntax import (
    App,
    CoprodElim,
    CPair,
    EApp,
    EAppClause,
    Fst,
    HomApp,
    HomLam,
    I0,
    I1,
    IdJ,
    In,
    Lam,
    One,
    Pglue,
    Pinl,
    Pinr,
    PushElim,
    Refl,
    SPair,
    Snd,
    TDepHom,
    TExt,
    THom,
    TPath,
    TPi,
    TPushout,
    Term,
    Type,
    Var,
    alpha_equal,
    alpha_equal_type,
    free_vars,
    fresh,
    subst,
    subst_type,
)

__all__ = ["normalize", "equal_terms", "equal_types", "step", "unfold"]

Defs = Optional[dict]


def unfold(t: Term, defs: Defs) -> Term:
    """Replace global definitions (stored pre-unfolded) by their bodies."""
    if not defs:
        return t
    fv = free_vars(t)
    for name, body in defs.items():
        if name in fv:
            t = subst(t, name, body)
    return t


def _unfold_type(ty: Type, defs: Defs) -> Type:
    from . import syntax as S

    if not defs:
        return ty
    for name, body in defs.items():
        ty = S.subst_type(ty, name, body)
    return ty


def step(t: Term) -> Optional[Term]:
    """One beta step at the root, or None if the root is not a redex."""
    if isinstance(t, App) and isinstance(t.f, Lam):
        return subst(t.f.body, t.f.x, t.a)
    if isinstance(t, HomApp) and isinstance(t.f, HomLam):
        return t.f.body
    if isinstance(t, EApp):
        if isinstance(t.f, Lam):
            return subst(t.f.body, t.f.x, t.v)
        # built-in path pieces: app at an endpoint picks the matching clause
        if isinstance(t.v, I0) and len(t.clauses) == 2:
            return subst(t.clauses[0].body, t.clauses[0].x, One())
        if isinstance(t.v, I1) and len(t.clauses) == 2:
            return subst(t.clauses[1].body, t.clauses[1].x, One())
        return None
    if isinstance(t, Fst) and isinstance(t.t, SPair):
        return t.t.a
    if isinstance(t, Snd) and isinstance(t.t, SPair):
        return t.t.b
    if isinstance(t, IdJ) and isinstance(t.q, Refl):
        return subst(t.d, t.x, t.q.t)
    if isinstance(t, CoprodElim) and isinstance(t.scrut, (CPair, In)):
        return subst(subst(t.d, t.i, t.scrut.j), t.x, t.scrut.b)
    if isinstance(t, PushElim):
        s = t.scrut
        if isinstance(s, Pinl):
            return subst(t.d1, t.y, s.t)
        if isinstance(s, Pinr):
            return subst(t.d2, t.z, s.t)
        if isinstance(s, Pglue):
            return subst(subst(t.d3, t.x, s.t), t.i, s.r)
    return None


def normalize(t: Term, fuel: int = 10000) -> Term:
    """Full beta-normal form (the calculus is terminating on checked terms)."""
    while fuel > 0:
        red = step(t)
        if red is None:
            break
        t = red
        fuel -= 1
    # normalize subterms, then retry the root (an inner step may expose one)
    out = _map_sub(t, lambda u: normalize(u, fuel))
    red = step(out)
    if red is not None and fuel > 0:
        return normalize(red, fuel - 1)
    return out


def _map_sub(t: Term, f) -> Term:
    if isinstance(t, (Var, One, I0, I1)):
        return t
    if isinstance(t, Lam):
        return Lam(t.x, f(t.body))
    if isinstance(t, App):
        return App(f(t.f), f(t.a))
    if isinstance(t, HomLam):
        return HomLam(f(t.body))
    if isinstance(t, HomApp):
        return HomApp(f(t.f))
    if isinstance(t, EApp):
        return EApp(tuple(EAppClause(c.x, f(c.body)) for c in t.clauses), f(t.f), f(t.v))
    if isinstance(t, SPair):
        return SPair(f(t.a), f(t.b))
    if isinstance(t, Fst):
        return Fst(f(t.t))
    if isinstance(t, Snd):
        return Snd(f(t.t))
    if isinstance(t, Refl):
        return Refl(f(t.t))
    if isinstance(t, IdJ):
        return IdJ(t.z, t.p, t.dtype, t.x, f(t.d), f(t.q))
    if isinstance(t, In):
        return In(f(t.j), f(t.b))
    if isinstance(t, CPair):
        return CPair(f(t.j), f(t.b))
    if isinstance(t, CoprodElim):
        return CoprodElim(t.z, t.dtype, t.i, t.x, f(t.d), f(t.scrut))
    if isinstance(t, Pinl):
        return Pinl(f(t.t))
    if isinstance(t, Pinr):
        return Pinr(f(t.t))
    if isinstance(t, Pglue):
        return Pglue(f(t.t), f(t.r))
    if isinstance(t, PushElim):
        return PushElim(t.w, t.dtype, t.y, f(t.d1), t.z, f(t.d2), t.x, t.i, f(t.d3), f(t.scrut))
    raise TypeError(f"not a term node: {t!r}")


def _match_one_hole(pattern: Term, hole: str, value: Term) -> Optional[Term]:
    """Match ``value`` against ``pattern`` with ``hole`` as a linear variable."""
    found: list[Term] = []

    def walk(p: Term, v: Term) -> bool:
        if isinstance(p, Var) and p.name == hole:
            found.append(v)
            return True
        if type(p) is not type(v):
            return False
        if isinstance(p, Var):
            return p.name == v.name
        if isinstance(p, (One, I0, I1)):
            return True
        if isinstance(p, App):
            return walk(p.f, v.f) and walk(p.a, v.a)
        if isinstance(p, HomApp):
            return walk(p.f, v.f)
        if isinstance(p, (Pinl, Pinr, Fst, Snd, Refl)):
            return walk(p.t, v.t)
        if isinstance(p, (In, CPair)):
            return walk(p.j, v.j) and walk(p.b, v.b)
        if isinstance(p, Pglue):
            return walk(p.t, v.t) and walk(p.r, v.r)
        return alpha_equal(p, v)

    if not walk(pattern, value):
        return None
    if len(found) == 1:
        return found[0]
    return None


def _ext_beta(ty: TExt, t: EApp) -> Optional[Term]:
    """app_{x.a}(f, j u) = a[u/x], matching v against the type's pieces."""
    for c in ty.clauses:
        u = _match_one_hole(normalize(c.j), c.x, t.v)
        if u is not None:
            return subst(c.body, c.x, u)
    return None


def _glue_endpoint(ty: "TPushout", t: Term) -> Term:
    if isinstance(t, Pglue):
        if isinstance(t.r, I0):
            return normalize(Pinl(App(ty.f, t.t)))
        if isinstance(t.r, I1):
            return normalize(Pinr(App(ty.g, t.t)))
    return t


def equal_types(t: Type, u: Type, defs: Defs = None) -> bool:
    """Type equality: alpha after normalizing all embedded terms."""
    t, u = _unfold_type(t, defs), _unfold_type(u, defs)
    return alpha_equal_type(_norm_type(t), _norm_type(u))


def _norm_type(t: Type):
    from . import syntax as S

    if isinstance(t, S.TConst):
        return S.TConst(t.name, tuple(normalize(a) for a in t.args))
    if isinstance(t, (S.TUnit, S.TInterval)):
        return t
    if isinstance(t, S.THom):
        return S.THom(_norm_type(t.a), _norm_type(t.b))
    if isinstance(t, S.TDepHom):
        return S.TDepHom(tuple((n, _norm_type(ty)) for n, ty in t.tele), _norm_type(t.b))
    if isinstance(t, (S.TPi, S.TCoprod)):
        cls = S.TPi if isinstance(t, S.TPi) else S.TCoprod
        return cls(t.i, _norm_type(t.itype), _norm_type(t.body))
    if isinstance(t, S.TSigma):
        return S.TSigma(t.x, _norm_type(t.xtype), _norm_type(t.body))
    if isinstance(t, (S.TId, S.TPath)):
        cls = S.TId if isinstance(t, S.TId) else S.TPath
        return cls(_norm_type(t.a), normalize(t.left), normalize(t.right))
    if isinstance(t, S.TExt):
        return S.TExt(
            t.y,
            _norm_type(t.v),
            _norm_type(t.a),
            tuple(
                S.ExtClause(c.x, _norm_type(c.u), normalize(c.j), normalize(c.body))
                for c in t.clauses
            ),
        )
    if isinstance(t, S.TPushout):
        return S.TPushout(normalize(t.f), normalize(t.g))
    raise TypeError(f"not a type node: {t!r}")


def equal_terms(t: Term, u: Term, ty: Optional[Type] = None, defs: Defs = None) -> bool:
    """Definitional equality at a type: normalize, eta-expand, alpha-compare."""
    if defs:
        t, u = unfold(t, defs), unfold(u, defs)
        ty = _unfold_type(ty, defs) if ty is not None else None
    t, u = normalize(t), normalize(u)
    if ty is not None:
        avoid = free_vars(t) | free_vars(u)
        if isinstance(ty, THom):
            x = fresh("x", avoid)
            return equal_terms(App(t, Var(x)), App(u, Var(x)), ty.b)
        if isinstance(ty, TDepHom):
            return equal_terms(HomApp(t), HomApp(u), ty.b)
        if isinstance(ty, TPi):
            i = fresh("i", avoid)
            return equal_terms(
                App(t, Var(i)), App(u, Var(i)), subst_type(ty.body, ty.i, Var(i))
            )
        if isinstance(ty, TExt):
            # resolve app(f, j u) redexes visible only with the type in hand
            if isinstance(t, EApp):
                red = _ext_beta(ty, t)
                if red is not None:
                    return equal_terms(red, u, None)
            if isinstance(u, EApp):
                red = _ext_beta(ty, u)
                if red is not None:
                    return equal_terms(t, red, None)
            y = fresh("y", avoid)
            cl = tuple(EAppClause(c.x, c.body) for c in ty.clauses)
            ta = subst_type(ty.a, ty.y, Var(y))
            return equal_terms(EApp(cl, t, Var(y)), EApp(cl, u, Var(y)), ta)
        if isinstance(ty, TPath):
            y = fresh("y", avoid)
            cl = (EAppClause("u0", ty.left), EAppClause("u1", ty.right))
            return equal_terms(EApp(cl, t, Var(y)), EApp(cl, u, Var(y)), ty.a)
        if isinstance(ty, TPushout):
            # glue at an endpoint is the corresponding injection of the span leg
            t = _glue_endpoint(ty, t)
            u = _glue_endpoint(ty, u)
    if isinstance(t, EApp) and not isinstance(u, EApp):
        return False
    return alpha_equal(t, u)

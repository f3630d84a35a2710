"""Compositional interpretation of checked judgments into the model layer.

Postulated constants elaborate only when the environment binds them to
concrete semantic data over the empty telescope; telescoped postulates and
the pushout eliminator raise ``UnsupportedConstruction``.  The interpreter
carries the semantic base context (a simplicial set), base variables as
maps into their fibers, and indexed variables as generic terms of their
weakened types, so binders elaborate through the chosen-pullback
extensions and the equations established for the formers transfer
verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..kernel import (
    FinSSet,
    SMap,
    boundary,
    compose,
    constant_map,
    identity,
    product,
    std_simplex,
    terminal,
    terminal_map,
)
from ..lifting import GeneratorFamily
from ..model import (
    Extension,
    FibClassSpec,
    IndexedFamily,
    LUContext,
    LUTerm,
    LUType,
    UnsupportedConstruction,
    ctx_extend,
    dep_coprod,
    dep_coprod_intro,
    dep_prod,
    dep_prod_app,
    dep_prod_lam,
    extension_app,
    extension_lam,
    extension_type,
    hom_app,
    hom_lam,
    hom_type,
    id_refl,
    id_type,
    indexed_extend,
    over_cylinder,
    pi_app,
    pi_lam,
    pi_type,
    sigma_pair,
    sigma_proj1,
    sigma_proj2,
    sigma_type,
    subst,
    subst_term,
    unit_term,
    unit_type,
)
from . import syntax as S
from .equality import normalize

__all__ = ["ModelEnv", "SemCtx", "Elaborator", "elaborate_type", "elaborate_term"]


@dataclass
class ModelEnv:
    """Bindings of postulated constants to semantic data (closed judgments)."""

    spec: FibClassSpec
    base_spec: FibClassSpec
    family: GeneratorFamily
    budget: int = 300
    types: dict = field(default_factory=dict)  # name -> LUType over the point
    base_types: dict = field(default_factory=dict)  # name -> FinSSet (the fiber)
    terms: dict = field(default_factory=dict)  # name -> LUTerm over the point
    base_terms: dict = field(default_factory=dict)  # name -> SMap pt -> fiber
    stable_coproducts: bool = False


@dataclass
class SemCtx:
    """The semantic state of a two-zone context over a base simplicial set."""

    gamma: LUContext
    base_vars: dict = field(default_factory=dict)  # name -> SMap gamma -> fiber
    ind_vars: dict = field(default_factory=dict)  # name -> LUTerm over gamma

    def reindexed(self, sigma: SMap, new_gamma: LUContext) -> "SemCtx":
        return SemCtx(
            new_gamma,
            {n: compose(m, sigma) for n, m in self.base_vars.items()},
            {n: subst_term(t, sigma) for n, t in self.ind_vars.items()},
        )


class Elaborator:
    def __init__(self, env: ModelEnv):
        self.env = env

    def closed_ctx(self) -> SemCtx:
        return SemCtx(LUContext(terminal()))

    # ---------------------------------------------------------------- types

    def elab_type(self, ctx: SemCtx, ty: S.Type) -> LUType:
        env = self.env
        if isinstance(ty, S.TUnit):
            return unit_type(ctx.gamma, env.spec)
        if isinstance(ty, S.TConst):
            if ty.args:
                raise UnsupportedConstruction(
                    "applied type constants have no semantic binding form"
                )
            base = env.types.get(ty.name)
            if base is None:
                raise UnsupportedConstruction(
                    f"no semantic binding for type constant {ty.name}"
                )
            return subst(base, terminal_map(ctx.gamma.sset))
        if isinstance(ty, S.TSigma):
            a = self.elab_type(ctx, ty.xtype)
            ext = ctx_extend(ctx.gamma, a)
            inner = self._bind_ind(ctx, ext, ty.x)
            b = self.elab_type(inner, ty.body)
            return sigma_type(a, b, ext)
        if isinstance(ty, S.TId):
            a = self.elab_type(ctx, ty.a)
            left = self.elab_term(ctx, ty.left, a)
            right = self.elab_term(ctx, ty.right, a)
            return id_type(a, left, right, env.family, env.budget)
        if isinstance(ty, S.THom):
            pi = self._hom_pi(ctx, ty.a, "_", ty.b)
            return hom_type(pi, env.base_spec)
        if isinstance(ty, S.TDepHom):
            if len(ty.tele) > 1:
                raise UnsupportedConstruction(
                    "dependent Hom elaborates for indexed telescopes of length <= 1"
                )
            if len(ty.tele) == 1:
                (x, a_ty), = ty.tele
                pi = self._hom_pi(ctx, a_ty, x, ty.b)
                tele_var = x
            else:
                pi = self._hom_pi(ctx, S.TUnit(), "_", ty.b)
                tele_var = "_"
            hom = hom_type(pi, env.base_spec)
            hom.aux["tele_var"] = tele_var
            return hom
        if isinstance(ty, S.TPi):
            fam, _ = self._indexed_family(ctx, ty.i, ty.itype, ty.body)
            return dep_prod(fam)
        if isinstance(ty, S.TCoprod):
            fam, _ = self._indexed_family(ctx, ty.i, ty.itype, ty.body)
            variant = "stable" if env.stable_coproducts else "unstable"
            return dep_coprod(fam, env.family, env.budget, variant=variant)
        if isinstance(ty, S.TPath):
            return self._path_type(ctx, ty.a, ty.left, ty.right)
        if isinstance(ty, S.TExt):
            path = self._as_path(ty)
            if path is not None:
                return self._path_type(ctx, *path)
            raise UnsupportedConstruction(
                "extension types elaborate for the path-type decomposition"
            )
        if isinstance(ty, S.TPushout):
            raise UnsupportedConstruction(
                "pushout types have cell-level semantics only (pushout_cells)"
            )
        if isinstance(ty, S.TInterval):
            raise UnsupportedConstruction("I1 is base-side; it has no indexed interpretation")
        raise UnsupportedConstruction(f"no interpretation for {type(ty).__name__}")

    @staticmethod
    def _as_path(ty: S.TExt) -> Optional[tuple]:
        """Recognize the path decomposition: two One-pieces at i0 and i1."""
        if not isinstance(ty.v, S.TInterval) or len(ty.clauses) != 2:
            return None
        c0, c1 = ty.clauses
        if not (isinstance(c0.u, S.TUnit) and isinstance(c1.u, S.TUnit)):
            return None
        if not (isinstance(c0.j, S.I0) and isinstance(c1.j, S.I1)):
            return None
        if ty.y in S.free_vars_type(ty.a):
            return None
        return ty.a, c0.body, c1.body

    # ---------------------------------------------------------------- terms

    def elab_term(self, ctx: SemCtx, t: S.Term, expected: LUType) -> LUTerm:
        env = self.env
        if isinstance(t, S.One):
            return unit_term(expected)
        if isinstance(t, S.Var):
            hit = ctx.ind_vars.get(t.name)
            if hit is not None:
                return hit
            glob = env.terms.get(t.name)
            if glob is not None:
                sigma = terminal_map(ctx.gamma.sset)
                return LUTerm(subst(glob.type, sigma), compose(glob.section, sigma))
            raise UnsupportedConstruction(f"no semantic binding for {t.name}")
        if isinstance(t, S.SPair):
            at = self.elab_term(ctx, t.a, expected.aux["a"])
            sa = expected.aux["ext"].pb.pair(identity(ctx.gamma.sset), at.section)
            bt = self.elab_term(ctx, t.b, subst(expected.aux["b"], sa))
            return sigma_pair(expected, at, bt)
        if isinstance(t, S.Fst):
            inner = self._infer(ctx, t.t)
            return sigma_proj1(inner.type, inner)
        if isinstance(t, S.Snd):
            inner = self._infer(ctx, t.t)
            return sigma_proj2(inner.type, inner)
        if isinstance(t, S.Refl):
            base = self.elab_term(ctx, t.t, expected.aux["a"])
            return id_refl(expected, base)
        if isinstance(t, S.Lam):
            if "pi" in expected.aux:  # a Hom type
                pi = expected.aux["pi"]
                inner = self._bind_ind(ctx, pi.aux["ext"], t.x)
                body = self.elab_term(inner, t.body, pi.aux["b"])
                return hom_lam(expected, pi_lam(pi, body))
            if "fam" in expected.aux:  # a dependent product over a base type
                fam: IndexedFamily = expected.aux["fam"]
                inner = self._bind_base_pb(ctx, fam.pb, t.x)
                body = self.elab_term(inner, t.body, fam.b)
                return dep_prod_lam(expected, body)
            if "ev" in expected.aux:  # extension / path type
                a: LUType = expected.aux["a"]
                prod_gv = expected.aux["prod_gv"]
                inner = ctx.reindexed(prod_gv.proj1, LUContext(prod_gv.sset))
                inner.base_vars[t.x] = prod_gv.proj2
                body = self.elab_term(inner, t.body, a)
                return extension_lam(expected, body.section)
            raise UnsupportedConstruction(
                "lambda against a type with no semantic function structure"
            )
        if isinstance(t, S.HomLam):
            pi = expected.aux["pi"]
            name = expected.aux.get("tele_var", "_")
            inner = self._bind_ind(ctx, pi.aux["ext"], name)
            body = self.elab_term(inner, t.body, pi.aux["b"])
            return hom_lam(expected, pi_lam(pi, body))
        if isinstance(t, (S.App, S.HomApp, S.EApp)):
            return self._infer(ctx, t)
        if isinstance(t, (S.CPair, S.In)):
            fam: IndexedFamily = expected.aux["fam"]
            j = self._base_term(ctx, t.j, fam.i.total)
            sj = fam.pb.pair(identity(ctx.gamma.sset), j)
            bt = self.elab_term(ctx, t.b, subst(fam.b, sj))
            return dep_coprod_intro(expected, j, bt)
        if isinstance(t, (S.PushElim, S.Pinl, S.Pinr, S.Pglue)):
            raise UnsupportedConstruction(
                "the pushout eliminator and constructors are out of semantic scope"
            )
        raise UnsupportedConstruction(f"no interpretation for term {type(t).__name__}")

    # ---------------------------------------------------------------- helpers

    def _infer(self, ctx: SemCtx, t: S.Term) -> LUTerm:
        """Inference for elaborated eliminand positions."""
        if isinstance(t, S.Var):
            return self.elab_term(ctx, t, None)
        if isinstance(t, S.App):
            f = self._infer(ctx, t.f)
            ft = f.type
            if "pi" in ft.aux:  # Hom application
                pi = ft.aux["pi"]
                a = self.elab_term(ctx, t.a, pi.aux["a"])
                return pi_app(pi, hom_app(ft, f), a)
            if "fam" in ft.aux:  # dependent product application
                fam: IndexedFamily = ft.aux["fam"]
                j = self._base_term(ctx, t.a, fam.i.total)
                return dep_prod_app(ft, f, j)
            raise UnsupportedConstruction("application of a non-function semantic type")
        if isinstance(t, S.HomApp):
            f = self._infer(ctx, t.f)
            pi = f.type.aux["pi"]
            name = f.type.aux.get("tele_var", "_")
            arg = ctx.ind_vars.get(name)
            if arg is None:
                arg = unit_term(pi.aux["a"])
            return pi_app(pi, hom_app(f.type, f), arg)
        if isinstance(t, S.EApp):
            f = self._infer(ctx, t.f)
            v = self._base_term(ctx, t.v, std_simplex(1))
            a_base: LUType = f.type.aux["a_base"]
            return LUTerm(a_base, extension_app(f.type, f, v))
        raise UnsupportedConstruction(
            f"cannot infer a semantic type for {type(t).__name__}"
        )

    def _base_term(self, ctx: SemCtx, t: S.Term, fiber: FinSSet) -> SMap:
        """A base-zone term as a map from the context into its fiber."""
        if isinstance(t, S.Var):
            hit = ctx.base_vars.get(t.name)
            if hit is not None:
                return hit
            glob = self.env.base_terms.get(t.name)
            if glob is not None:
                return compose(glob, terminal_map(ctx.gamma.sset))
            raise UnsupportedConstruction(f"no semantic binding for base term {t.name}")
        if isinstance(t, S.I0):
            return constant_map(ctx.gamma.sset, std_simplex(1), "0")
        if isinstance(t, S.I1):
            return constant_map(ctx.gamma.sset, std_simplex(1), "1")
        if isinstance(t, S.One):
            return terminal_map(ctx.gamma.sset)
        raise UnsupportedConstruction(f"no base interpretation for {type(t).__name__}")

    def _bind_ind(self, ctx: SemCtx, ext: Extension, name: str) -> SemCtx:
        inner = ctx.reindexed(ext.proj, ext.ctx)
        inner.ind_vars[name] = ext.var
        return inner

    def _bind_base_pb(self, ctx: SemCtx, pb, name: str) -> SemCtx:
        inner = ctx.reindexed(pb.to_left, LUContext(pb.sset))
        inner.base_vars[name] = pb.to_right
        return inner

    def _base_type(self, ctx: SemCtx, ty: S.Type) -> FinSSet:
        if isinstance(ty, S.TInterval):
            return std_simplex(1)
        if isinstance(ty, S.TConst) and not ty.args:
            fib = self.env.base_types.get(ty.name)
            if fib is not None:
                return fib
        raise UnsupportedConstruction("base types elaborate for I1 and bound constants")

    def _indexed_family(self, ctx: SemCtx, i: str, itype: S.Type, body: S.Type):
        fiber = self._base_type(ctx, itype)
        i_type = LUType(
            LUContext(terminal()),
            identity(terminal()),
            terminal_map(fiber),
            self.env.base_spec,
        )
        delta_r = terminal_map(ctx.gamma.sset)
        pb = indexed_extend(i_type, delta_r)
        inner = self._bind_base_pb(ctx, pb, i)
        b = self.elab_type(inner, body)
        return IndexedFamily(i_type, delta_r, pb, b), inner

    def _hom_pi(self, ctx: SemCtx, a_ty: S.Type, x: str, b_ty: S.Type) -> LUType:
        a = self.elab_type(ctx, a_ty)
        ext = ctx_extend(ctx.gamma, a)
        inner = self._bind_ind(ctx, ext, x)
        b = self.elab_type(inner, b_ty)
        return pi_type(a, b, ext)

    def _path_type(self, ctx: SemCtx, a_ty: S.Type, left: S.Term, right: S.Term) -> LUType:
        interval = std_simplex(1)
        prod_gv = product(ctx.gamma.sset, interval)
        cyl_ctx = ctx.reindexed(prod_gv.proj1, LUContext(prod_gv.sset))
        a_cyl = self.elab_type(cyl_ctx, a_ty)
        a_over = over_cylinder(ctx.gamma, interval, a_cyl.r, a_cyl.p, a_cyl.spec, a_cyl.depth)
        a_base = self.elab_type(ctx, a_ty)
        lt = self.elab_term(ctx, left, a_base)
        rt = self.elab_term(ctx, right, a_base)
        bd, j_incl = boundary(1)
        prod_gu = product(ctx.gamma.sset, bd)
        partial = self._glue_endpoints(prod_gu, lt.section, rt.section, a_over.total)
        ext = extension_type(ctx.gamma, a_over, j_incl, partial, depth=a_cyl.depth)
        ext.aux["a_base"] = a_base
        return ext

    @staticmethod
    def _glue_endpoints(prod_gu, left_sec: SMap, right_sec: SMap, total: FinSSet) -> SMap:
        """The partial section gamma x boundary(1) -> E_A from the endpoints."""
        assign = {}
        for c in prod_gu.sset.nondegenerate():
            vtx = prod_gu.proj2.apply_cell(c)
            g = prod_gu.proj1.apply_cell(c)
            section = left_sec if vtx.base == "0" else right_sec
            assign[c] = section.apply(g)
        return SMap(prod_gu.sset, total, assign)

    # ------------------------------------------------------------ declarations

    def elab_decl(self, decl):
        """Interpret a checked declaration with empty telescopes."""
        if decl.btele or (decl.itele or ()):
            raise UnsupportedConstruction(
                "telescoped declarations elaborate only through environment bindings"
            )
        if decl.kind in ("ind-type", "base-type"):
            raise UnsupportedConstruction(
                "postulated type constants need environment bindings"
            )
        ctx = self.closed_ctx()
        ty = self.elab_type(ctx, decl.rhs)
        if decl.body is None:
            return ty
        return self.elab_term(ctx, normalize(decl.body), ty)


def elaborate_type(env: ModelEnv, ty: S.Type) -> LUType:
    el = Elaborator(env)
    return el.elab_type(el.closed_ctx(), ty)


def elaborate_term(env: ModelEnv, t: S.Term, ty: S.Type) -> LUTerm:
    el = Elaborator(env)
    sem = el.elab_type(el.closed_ctx(), ty)
    return el.elab_term(el.closed_ctx(), normalize(t), sem)

#!/usr/bin/env python3
"""Generate the golden .itt corpus under corpus/itt/.

Each file starts with an expectation header the test suite reads back:
``-- expect: ok`` or ``-- expect: error <rule>``.  The script re-checks
every program before writing it, so the shipped verdicts are honest.
"""

import sys
from pathlib import Path

from ssetkit.tt import CheckError, check_source
from ssetkit.tt.parser import ParseError

ROOT = Path(__file__).resolve().parents[1]
OUT = ROOT / "corpus" / "itt"

PRELUDE = """\
postulate A () | () : Type
postulate B () | () : Type
postulate D0 () | () : Type
postulate IB () : Base
postulate P (i : I1) | () : Type
postulate C () | (x : A) : Type
postulate a0 () | () : A
postulate a1 () | () : A
postulate b0 () | () : B
postulate d0 () | () : D0
postulate d4 () | () : D0
postulate j0 () : I1
postulate pf () | () : Pi (i : I1) (P i)
postulate hA () | () : Pi (i : I1) A
postulate hf () : Hom(A, B)
postulate hg () : Hom(A, D0)
postulate hx () : Hom(B, D0)
postulate cf () : Hom((x : A) . (C x))
postulate dh2 () : Hom((x : A) . A)
postulate ca () | () : (C a0)
postulate ff () | () : <Pi (y : I1) A | (x : I1) x . hA x>
postulate ps () | () : Pushout(hf, hg)
postulate sc () | () : Coprod (i : I1) A
postulate q01 () | () : Id(A, a0, a1)
postulate pth () | () : Path(A, a0, a0)
"""

GOOD = {
    "unit_intro": "def u () | () : One := one",
    "var_rule": "def v () | (x : A) : A := x",
    "hom_intro": "def hid () : Hom(A, A) := \\x. x",
    "hom_app": "def hid () : Hom(A, A) := \\x. x\ndef ap () | () : A := hid a0",
    "hom_beta": "def hid () : Hom(A, A) := \\x. x\n"
    "def e () | () : Id(A, hid a0, a0) := refl(a0)",
    "hom_const_body": "def hc () : Hom(A, D0) := \\x. hg x",
    "hom_unit_domain": "def hu () : Hom(One, A) := \\x. a0",
    "dephom_intro": "def dh () : Hom((x : A) . A) := lam(x)",
    "dephom_app": "def use () | (x : A) : (C x) := cf ()",
    "dephom_beta": "def dh () : Hom((x : A) . A) := lam(x)\n"
    "def dhb () | (x : A) : Id(A, dh (), x) := refl(x)",
    "pi_intro": "def plam () | () : Pi (i : I1) A := \\i. a0",
    "pi_intro_unit": "def p2 () | () : Pi (i : I1) One := \\i. one",
    "pi_intro_nested": "def p3 () | () : Pi (i : I1) Pi (k : I1) A := \\i. \\k. a0",
    "pi_app": "def papp () | () : (P j0) := pf j0",
    "pi_app_var": "def pav (k : I1) | () : (P k) := pf k",
    "pi_beta": "def plam () | () : Pi (i : I1) A := \\i. a0\n"
    "def pb () | () : Id(A, plam j0, a0) := refl(a0)",
    "pi_eta": "def pe () | () : Path(Pi (i : I1) (P i), pf, \\k. pf k) := \\y. pf",
    "sigma_intro": "def s1 () | () : Sigma (x : A) B := spair(a0, b0)",
    "sigma_fst": "def s1 () | () : Sigma (x : A) B := spair(a0, b0)\n"
    "def s2 () | () : A := fst(s1)",
    "sigma_snd": "def s1 () | () : Sigma (x : A) B := spair(a0, b0)\n"
    "def s3 () | () : B := snd(s1)",
    "sigma_beta": "def sb () | () : Id(A, fst(spair(a0, b0)), a0) := refl(a0)",
    "sigma_dependent": "def ds () | () : Sigma (x : A) (C x) := spair(a0, ca)",
    "sigma_nested": "def ns () | () : Sigma (x : A) Sigma (y : B) A"
    " := spair(a0, spair(b0, a0))",
    "sigma_id": "def is () | () : Id(Sigma (x : A) B, spair(a0, b0), spair(a0, b0))"
    " := refl(spair(a0, b0))",
    "id_refl": "def r () | () : Id(A, a0, a0) := refl(a0)",
    "id_j": "def jt () | () : B := idJ(z p. B, x. b0, q01)",
    "id_j_beta": "def jb () | () : Id(B, idJ(z p. B, x. b0, refl(a0)), b0)"
    " := refl(b0)",
    "coprod_in": "def ci (j : I1) | (x : A) : Coprod (i : I1) A := in(j, x)",
    "coprod_elim": "def ce () | () : B := coprod-elim(z. B, i x. b0, sc)",
    "coprod_stable": "#stable-coproducts\n"
    "def cp () | () : Coprod (i : I1) A := (j0, a0)",
    "coprod_beta": "#stable-coproducts\n"
    "def cp2 () | () : Coprod (i : I1) A := (j0, a0)\n"
    "def cb () | () : Id(B, coprod-elim(z. B, i x. b0, cp2), b0) := refl(b0)",
    "ext_intro": "def ef () | () : <Pi (y : I1) A | (x : I1) x . hA x> := \\y. hA y",
    "ext_app": "def ea () | () : A := app{x. hA x}(ff, j0)",
    "ext_beta": "def ef () | () : <Pi (y : I1) A | (x : I1) x . hA x> := \\y. hA y\n"
    "def eb () | () : Id(A, app{x. hA x}(ef, j0), hA j0) := refl(hA j0)",
    "path_intro": "def pi0 () | () : Path(A, a0, a0) := \\i. a0",
    "path_intro_b": "def pr2 () | () : Path(B, b0, b0) := \\i. b0",
    "path_app": "def pa () | () : A := app{u. a0, u. a0}(pth, i0)",
    "path_beta": "def pi0 () | () : Path(A, a0, a0) := \\i. a0\n"
    "def pb2 () | () : Id(A, app{u. a0, u. a0}(pi0, i1), a0) := refl(a0)",
    "pushout_inl": "def pl () | () : Pushout(hf, hg) := pinl(b0)",
    "pushout_inr": "def pr () | () : Pushout(hf, hg) := pinr(d0)",
    "pushout_glue": "def pg () | () : Pushout(hf, hg) := pglue(a0, j0)",
    "pushout_elim": "def pe2 () | () : D0"
    " := pelim(w. D0, y. d0, z. d0, x i. d0, ps)",
    "pushout_glue_eq": "def pq () | () :"
    " Id(Pushout(hf, hg), pglue(a0, i0), pinl(hf a0)) := refl(pinl(hf a0))",
    "applied_const": "postulate p0 () | () : (P j0)\n"
    "def pc () | () : (P j0) := p0",
    "indexed_const": "def ic () | (x : A) : (C x) := cf ()",
    "unit_hom": "def uh () : Hom(A, One) := \\x. one",
}

BAD = {
    "unbound_var": ("var", "def x () | () : A := zz"),
    "conv_mismatch": ("conv", "def x () | () : A := b0"),
    "conv_pi_arg_zone": ("conv", "def x () | () : (P a0) := a0"),
    "conv_pi_app": ("conv", "def x () | () : A := pf a0"),
    "lam_non_function": ("lam", "def x () | () : One := \\y. y"),
    "zone_one_base": ("zone", "postulate T2 (x : One) : Base"),
    "zone_i1_ind": ("zone", "def x () | () : I1 := j0"),
    "zone_base_const_ind": ("zone", "def x () | () : IB := a0"),
    "zone_ind_const_base": ("zone", "def x () : A := a0"),
    "zone_ind_in_btele": ("zone", "postulate T3 (y : A) : Base"),
    "hom_form_ind": ("Hom-form", "def x () | () : Hom(A, A) := \\y. y"),
    "dephom_form_ind": ("Hom-form", "def x () | () : Hom((y : A) . A) := lam(y)"),
    "pi_form_base": ("Pi-form", "def x () : Pi (i : I1) A := \\i. a0"),
    "coprod_form_base": ("Pi-form", "def x () : Coprod (i : I1) A := in(j0, a0)"),
    "sigma_form_base": ("Sigma-form", "def x () : Sigma (y : A) B := spair(a0, b0)"),
    "id_form_base": ("Id-form", "def x () : Id(A, a0, a0) := refl(a0)"),
    "path_form_base": ("Path-form", "def x () : Path(A, a0, a0) := \\i. a0"),
    "ext_form_base": ("Ext-form",
                      "def x () : <Pi (y : I1) A | (x : I1) x . hA x> := \\y. hA y"),
    "pushout_form_base": ("Pushout-form", "def x () : Pushout(hf, hg) := pinl(b0)"),
    "pushout_form_nonhom": ("Pushout-form",
                            "def x () | () : Pushout(a0, hg) := pinl(b0)"),
    "pushout_form_domains": ("Pushout-form",
                             "def x () | () : Pushout(hf, hx) := pinl(b0)"),
    "app_non_function": ("app", "def x () | () : A := a0 a0"),
    "dephom_app_short": ("dep-hom-app", "def x () | () : A := cf ()"),
    "dephom_app_mismatch": ("dep-hom-app", "def x () | (y : B) : A := dh2 ()"),
    "dephom_intro_wrong": ("dep-hom-intro", "def x () : Hom(A, A) := lam(a0)"),
    "sigma_intro_wrong": ("sigma-intro", "def x () | () : One := spair(a0, b0)"),
    "sigma_elim_wrong": ("sigma-elim", "def x () | () : A := fst(a0)"),
    "id_intro_endpoints": ("Id-intro", "def x () | () : Id(A, a0, a1) := refl(a0)"),
    "id_elim_wrong": ("Id-elim", "def x () | () : B := idJ(z p. B, y. b0, a0)"),
    "coprod_intro_nonvar": ("coprod-intro",
                            "def x (j : I1) | () :"
                            " Coprod (i : I1) Sigma (y : A) B := in(j, spair(a0, b0))"),
    "coprod_intro_pragma": ("coprod-intro",
                            "def x () | () : Coprod (i : I1) A := (j0, a0)"),
    "coprod_intro_wrong_base": ("conv",
                                "def x () | (y : A) : Coprod (i : I1) A := in(a0, y)"),
    "coprod_elim_scrut": ("coprod-elim",
                          "def x () | () : B := coprod-elim(z. B, i y. b0, a0)"),
    "ext_intro_restriction": ("ext-intro",
                              "def x () | () : <Pi (y : I1) A | (x : I1) x . hA x>"
                              " := \\y. a0"),
    "ext_app_annotation": ("ext-app", "def x () | () : A := app{x. a0}(ff, j0)"),
    "ext_app_non_ext": ("ext-app", "def x () | () : A := app{x. a0}(a0, j0)"),
    "path_intro_left": ("path-intro", "def x () | () : Path(A, a1, a0) := \\i. a0"),
    "path_intro_right": ("path-intro", "def x () | () : Path(A, a0, a1) := \\i. a0"),
    "path_app_clauses": ("ext-app", "def x () | () : A := app{u. a0}(pth, i0)"),
    "pushout_intro_wrong": ("pushout-intro", "def x () | () : One := pinl(b0)"),
    "pushout_intro_conv": ("conv", "def x () | () : Pushout(hf, hg) := pinl(d0)"),
    "pushout_elim_endpoint": ("pushout-elim",
                              "def x () | () : D0"
                              " := pelim(w. D0, y. d0, z. d4, x i. d0, ps)"),
    "pushout_elim_scrut": ("pushout-elim",
                           "def x () | () : D0"
                           " := pelim(w. D0, y. d0, z. d0, x i. d0, a0)"),
    "type_const_arity": ("type-const", "def x () | () : (P j0 j0) := a0"),
    "type_const_unknown": ("type-const", "def x () | () : (ZZ j0) := a0"),
    "decl_duplicate": ("decl", "def u () | () : One := one\n"
                       "def u () | () : One := one"),
    "decl_def_no_body": ("decl", "def x () | () : A"),
    "decl_type_with_body": ("decl", "postulate x () | () : Type := one"),
    "pragma_unknown": ("pragma", "#nonsense\ndef u () | () : One := one"),
    "infer_lambda_scrut": ("infer",
                           "def x () | () : B := coprod-elim(z. B, i y. b0, \\w. w)"),
    "parse_unbalanced": ("parse", "def x () | () : A := (a0"),
    "parse_bad_decl": ("parse", "definitely not a program"),
}


def main() -> int:
    OUT.mkdir(parents=True, exist_ok=True)
    failures = []
    for name, body in sorted(GOOD.items()):
        pragma = ""
        text = body
        if body.startswith("#"):
            pragma, text = body.split("\n", 1)
            pragma += "\n"
        src = f"-- expect: ok\n{pragma}{PRELUDE}{text}\n"
        try:
            check_source(src)
        except (CheckError, ParseError) as e:
            failures.append(f"{name}: expected ok, got {e}")
            continue
        (OUT / f"good_{name}.itt").write_text(src)
    for name, (rule, body) in sorted(BAD.items()):
        pragma = ""
        text = body
        if body.startswith("#"):
            pragma, text = body.split("\n", 1)
            pragma += "\n"
        src = f"-- expect: error {rule}\n{pragma}{PRELUDE}{text}\n"
        try:
            check_source(src)
            failures.append(f"{name}: expected error [{rule}], but it checked")
            continue
        except ParseError as e:
            got = "parse"
        except CheckError as e:
            got = e.rule
        if got != rule:
            failures.append(f"{name}: expected rule {rule}, got {got}")
            continue
        (OUT / f"bad_{name}.itt").write_text(src)
    print(f"well-typed: {len(GOOD)}  ill-typed: {len(BAD)}")
    for f in failures:
        print("MISMATCH:", f)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

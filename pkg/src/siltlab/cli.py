"""Command-line front end.

Exit codes: 0 true/success, 1 false/non-member, 2 input error, 3 undecided or
budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
import warnings
from typing import Any

from . import io as fio
from .algebra import algebra_info
from .bridge import (canonical_cotilting, canonical_tilting, classify, ext_transport, from_complex,
                     silting_to_tilting, tilting_to_silting, to_complex)
from .complexes import (ChainComplex, cohomology, hom_table, terms_injective, terms_projective,
                        validate_complex)
from .decompose import decompose
from .errors import (BudgetExceeded, DecompositionFailure, HypothesisUnmet, MalformedInput, NotInRepP,
                     NotNSilting, NotTilting, SiltlabError)
from .homological import ExceedsCap, ext_dim, pd
from .linalg import Field
from .minimal import minimal_model
from .modules import hom_space
from .silting import (aisle_witness, enumerate_two_term_silting, intermediate_window, is_cosilting,
                      is_presilting, is_silting, silting_class_member)
from .suites import SUITES, run_suite
from .tilting import is_cotilting, is_tilting

SUCCESS, FALSE, INPUT_ERROR, UNDECIDED = 0, 1, 2, 3


class Context:
    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.field = Field.parse(args.field) if args.field else None
        self.loader = fio.Loader(self.field)
        self.out_dir = os.path.dirname(args.out) if getattr(args, "out", None) else "."

    def ref(self, A) -> Any:
        return self.loader.reference(A, self.out_dir or ".")

    def complex_doc(self, X: ChainComplex) -> dict:
        return fio.complex_doc(X, self.ref(X.algebra))

    def rep_doc(self, M) -> dict:
        return fio.representation_doc(M, self.ref(M.algebra))

    def emit_object(self, doc: dict) -> dict:
        """Write ``doc`` to ``--out`` when given; otherwise return it for the report."""
        if getattr(self.args, "out", None):
            fio.write_json(self.args.out, doc)
            return {"written": self.args.out}
        return {"object": doc}

    def complex_algebra_for(self, M):
        B = self.loader.complex_algebra_of(M.algebra)
        if B is None:
            raise MalformedInput("module does not live over a complex algebra (use a sidecar reference)")
        return B


def _value(v) -> Any:
    return str(v) if isinstance(v, ExceedsCap) else v


def _verdict_code(verdict) -> int:
    if verdict is None:
        return UNDECIDED
    return SUCCESS if verdict else FALSE


def _support(X: ChainComplex) -> list[int]:
    return [] if X.is_zero() else [X.lo, X.hi]


# -- algebra ------------------------------------------------------------------------------

def cmd_algebra_info(ctx: Context):
    return SUCCESS, algebra_info(ctx.loader.algebra(ctx.args.algebra))


def cmd_algebra_build(ctx: Context):
    A = ctx.loader.algebra(ctx.args.algebra)
    info = algebra_info(A)
    report = {"dimension": info["dimension"], "pathsByLength": info["pathsByLength"]}
    report.update(ctx.emit_object(fio.algebra_doc(A)))
    return SUCCESS, report


# -- module ---------------------------------------------------------------------------------

def _rep(ctx: Context, path: str):
    return ctx.loader.representation(path)


def cmd_module_hom(ctx: Context):
    M, N = _rep(ctx, ctx.args.source), _rep(ctx, ctx.args.target)
    basis = hom_space(M, N)
    return SUCCESS, {"dim": len(basis), "basis": [fio.morphism_doc(f) for f in basis]}


def cmd_module_ext(ctx: Context):
    M, N = _rep(ctx, ctx.args.source), _rep(ctx, ctx.args.target)
    e = ext_dim(M, N, ctx.args.j, ctx.args.cap)
    return (UNDECIDED if isinstance(e, ExceedsCap) else SUCCESS), {"degree": ctx.args.j, "dim": _value(e)}


def cmd_module_pd(ctx: Context):
    p = pd(_rep(ctx, ctx.args.module), ctx.args.cap)
    return (UNDECIDED if isinstance(p, ExceedsCap) else SUCCESS), {"pd": _value(p)}


def cmd_module_decompose(ctx: Context):
    parts = decompose(_rep(ctx, ctx.args.module), ctx.args.seed)
    return SUCCESS, {"summands": [{"dimensionVector": list(X.dimension_vector()), "multiplicity": m,
                                   "module": fio.representation_doc(X)} for X, m in parts]}


def _tilting_report(r) -> dict:
    return {"verdict": r.verdict, "stage": r.stage, "pd": _value(r.pd), "coresolutionLength": len(r.coresolution)}


def cmd_module_tilting(ctx: Context):
    r = is_tilting(_rep(ctx, ctx.args.module), ctx.args.d, ctx.args.cap, ctx.args.seed)
    return _verdict_code(r.verdict), _tilting_report(r)


def cmd_module_cotilting(ctx: Context):
    r = is_cotilting(_rep(ctx, ctx.args.module), ctx.args.d, ctx.args.cap, ctx.args.seed)
    return _verdict_code(r.verdict), _tilting_report(r)


# -- complex --------------------------------------------------------------------------------

def _cx(ctx: Context, path: str) -> ChainComplex:
    return ctx.loader.complex(path)


def cmd_complex_check(ctx: Context):
    X = _cx(ctx, ctx.args.complex)
    ok = validate_complex(X)
    return (SUCCESS if ok else FALSE), {"valid": ok, "support": _support(X),
                                        "projectiveTerms": terms_projective(X), "injectiveTerms": terms_injective(X)}


def _shifts(text: str | None):
    if not text:
        return None
    lo, _, hi = text.partition(":")
    return range(int(lo), int(hi or lo) + 1)


def cmd_complex_hom(ctx: Context):
    X, Y = _cx(ctx, ctx.args.source), _cx(ctx, ctx.args.target)
    t = hom_table(X, Y, derived=ctx.args.derived, shifts=_shifts(ctx.args.shifts), with_basis=False)
    return SUCCESS, {"label": t.label, "dims": {str(k): v for k, v in t.dims().items()}}


def cmd_complex_cohomology(ctx: Context):
    X = _cx(ctx, ctx.args.complex)
    out = {}
    for i in X.degrees:
        H = cohomology(X, i)
        if H.dim:
            out[str(i)] = fio.representation_doc(H)["dims"]
    return SUCCESS, {"cohomology": out}


def cmd_complex_minimal(ctx: Context):
    m = minimal_model(_cx(ctx, ctx.args.complex), certificate=False)
    report = {"steps": m.steps, "support": _support(m.complex)}
    report.update(ctx.emit_object(ctx.complex_doc(m.complex)))
    return SUCCESS, report


# -- silting ---------------------------------------------------------------------------------

def _silting_report(r) -> dict:
    return {"verdict": r.verdict, "stage": r.stage,
            "certificate": {"steps": r.certificate.steps,
                            "presiltingShifts": r.certificate.presilting_window,
                            "cones": [_support(s.cone) for s in r.certificate.coresolution]}}


def cmd_silting_presilting(ctx: Context):
    v = is_presilting(_cx(ctx, ctx.args.complex))
    return _verdict_code(v), {"verdict": v}


def cmd_silting_check(ctx: Context):
    T = _cx(ctx, ctx.args.complex)
    r = is_silting(T, ctx.args.step_cap, ctx.args.seed)
    report = _silting_report(r)
    if r.verdict:
        report["window"] = list(intermediate_window(T))
    return _verdict_code(r.verdict), report


def cmd_silting_member(ctx: Context):
    r = silting_class_member(_cx(ctx, ctx.args.complex), _cx(ctx, ctx.args.object))
    return _verdict_code(r.member), {"member": r.member, "vanishing": {str(k): v for k, v in r.verdicts.items()}}


def cmd_silting_window(ctx: Context):
    w = intermediate_window(_cx(ctx, ctx.args.complex), ctx.args.n)
    return SUCCESS, {"window": list(w)}


def cmd_silting_aisle(ctx: Context):
    w = aisle_witness(_cx(ctx, ctx.args.complex), _cx(ctx, ctx.args.object), ctx.args.step_cap, ctx.args.seed)
    code = {"InAisle": SUCCESS, "NotInAisle": FALSE}.get(w.kind, UNDECIDED)
    return code, {"kind": w.kind, "shift": w.shift, "steps": len(w.steps)}


def cmd_silting_cosilting(ctx: Context):
    r = is_cosilting(_cx(ctx, ctx.args.complex), ctx.args.step_cap)
    return _verdict_code(r.verdict), _silting_report(r)


def cmd_silting_enumerate2(ctx: Context):
    A = ctx.loader.algebra(ctx.args.algebra)
    classes = enumerate_two_term_silting(A, budget=ctx.args.budget, seed=ctx.args.seed)
    return SUCCESS, {"count": len(classes), "classes": [ctx.complex_doc(X) for X in classes]}


# -- bridge ------------------------------------------------------------------------------------

def cmd_bridge_build(ctx: Context):
    B = ctx.loader.complex_algebra(ctx.args.algebra, n=ctx.args.n)
    report = {"dimension": B.algebra.dim, "n": B.n, "vertices": len(B.algebra.vertices),
              "arrows": len(B.algebra.quiver.arrows)}
    if ctx.args.out:
        fio.write_json(ctx.args.out, fio.algebra_doc(B.algebra))
        side = os.path.splitext(ctx.args.out)[0] + ".sidecar.json"
        fio.write_json(side, fio.sidecar_doc(B, ctx.ref(B.base)))
        report["written"] = [ctx.args.out, side]
    else:
        report["sidecar"] = fio.sidecar_doc(B, ctx.ref(B.base))
    return SUCCESS, report


def cmd_bridge_to_complex(ctx: Context):
    M = _rep(ctx, ctx.args.module)
    B = ctx.complex_algebra_for(M)
    X = to_complex(B, M)
    return SUCCESS, {"support": _support(X), **ctx.emit_object(ctx.complex_doc(X))}


def _complex_algebra_arg(ctx: Context, A):
    if ctx.loader.complex_algebra_of(A) is not None:
        raise MalformedInput("expected a complex over the base algebra")
    return ctx.loader.complex_algebra_over(A, ctx.args.n)


def cmd_bridge_from_complex(ctx: Context):
    X = _cx(ctx, ctx.args.complex)
    B = _complex_algebra_arg(ctx, X.algebra)
    M = from_complex(B, X)
    return SUCCESS, {"dimensionVector": list(M.dimension_vector()), **ctx.emit_object(ctx.rep_doc(M))}


def cmd_bridge_classify(ctx: Context):
    M = _rep(ctx, ctx.args.module)
    B = ctx.complex_algebra_for(M)
    return SUCCESS, classify(B, M, ctx.args.cap).as_dict()


def cmd_bridge_to_tilting(ctx: Context):
    X = _cx(ctx, ctx.args.complex)
    B = _complex_algebra_arg(ctx, X.algebra)
    T = silting_to_tilting(B, X)
    r = is_tilting(T, B.n - 1, ctx.args.cap, ctx.args.seed)
    report = {"isTilting": r.verdict, "dimensionVector": list(T.dimension_vector())}
    report.update(ctx.emit_object(ctx.rep_doc(T)))
    return _verdict_code(r.verdict), report


def cmd_bridge_to_silting(ctx: Context):
    T = _rep(ctx, ctx.args.module)
    B = ctx.complex_algebra_for(T)
    X = tilting_to_silting(B, T)
    return SUCCESS, {"support": _support(X), **ctx.emit_object(ctx.complex_doc(X))}


def cmd_bridge_canonical(ctx: Context):
    B = ctx.loader.complex_algebra(ctx.args.algebra, n=ctx.args.n)
    if ctx.args.cotilting:
        M = canonical_cotilting(B)
        r = is_cotilting(M, B.n - 1, ctx.args.cap, ctx.args.seed)
    else:
        M = canonical_tilting(B)
        r = is_tilting(M, B.n - 1, ctx.args.cap, ctx.args.seed)
    report = {"kind": "cotilting" if ctx.args.cotilting else "tilting", "verdict": r.verdict,
              "dimensionVector": list(M.dimension_vector())}
    report.update(ctx.emit_object(ctx.rep_doc(M)))
    return _verdict_code(r.verdict), report


def cmd_bridge_ext_transport(ctx: Context):
    M, N = _rep(ctx, ctx.args.source), _rep(ctx, ctx.args.target)
    B = ctx.complex_algebra_for(M)
    if N.algebra is not M.algebra:
        raise MalformedInput("modules live over different algebras")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", HypothesisUnmet)
        r = ext_transport(B, M, N, ctx.args.j, ctx.args.cap)
    return (SUCCESS if r.agree else FALSE), {"ext": _value(r.ext), "hom": r.hom,
                                             "hypothesisMet": r.hypothesis_met, "agree": r.agree}


# -- suites ------------------------------------------------------------------------------------

def cmd_suite(ctx: Context):
    r = run_suite(ctx.args.suite_name, ctx.field, ctx.args.seed)
    return (SUCCESS if r.passed else FALSE), r.as_dict()


# -- parser ------------------------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--field", help='override the field, "Fp:<p>" or "Q"')
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=None, help="resolution length cap (default SILTLAB_CAP or 32)")
    p.add_argument("--timing", action="store_true", help="add timingMs to the report")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="siltlab", description="Silting and tilting computations over bound quiver algebras.")
    groups = parser.add_subparsers(dest="group", required=True)

    def verb(group, name, func, help_=None):
        p = group.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    g = groups.add_parser("algebra").add_subparsers(dest="verb", required=True)
    verb(g, "info", cmd_algebra_info).add_argument("--algebra", required=True)
    p = verb(g, "build", cmd_algebra_build)
    p.add_argument("--algebra", required=True)
    p.add_argument("--out")

    g = groups.add_parser("module").add_subparsers(dest="verb", required=True)
    for name, func in (("hom", cmd_module_hom), ("ext", cmd_module_ext)):
        p = verb(g, name, func)
        p.add_argument("--source", required=True)
        p.add_argument("--target", required=True)
        if name == "ext":
            p.add_argument("-j", type=int, required=True)
    verb(g, "pd", cmd_module_pd).add_argument("--module", required=True)
    verb(g, "decompose", cmd_module_decompose).add_argument("--module", required=True)
    for name, func in (("tilting", cmd_module_tilting), ("cotilting", cmd_module_cotilting)):
        p = verb(g, name, func)
        p.add_argument("--module", required=True)
        p.add_argument("-d", type=int, required=True)

    g = groups.add_parser("complex").add_subparsers(dest="verb", required=True)
    verb(g, "check", cmd_complex_check).add_argument("--complex", required=True)
    p = verb(g, "hom", cmd_complex_hom)
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--derived", action="store_true")
    p.add_argument("--shifts", help="range lo:hi of shifts")
    verb(g, "cohomology", cmd_complex_cohomology).add_argument("--complex", required=True)
    p = verb(g, "minimal", cmd_complex_minimal)
    p.add_argument("--complex", required=True)
    p.add_argument("--out")

    g = groups.add_parser("silting").add_subparsers(dest="verb", required=True)
    verb(g, "presilting", cmd_silting_presilting).add_argument("--complex", required=True)
    for name, func in (("check", cmd_silting_check), ("cosilting", cmd_silting_cosilting)):
        p = verb(g, name, func)
        p.add_argument("--complex", required=True)
        p.add_argument("--step-cap", type=int, default=None)
    p = verb(g, "member", cmd_silting_member)
    p.add_argument("--complex", required=True)
    p.add_argument("--object", required=True)
    p = verb(g, "window", cmd_silting_window)
    p.add_argument("--complex", required=True)
    p.add_argument("-n", type=int, default=None)
    p = verb(g, "aisle", cmd_silting_aisle)
    p.add_argument("--complex", required=True)
    p.add_argument("--object", required=True)
    p.add_argument("--step-cap", type=int, default=None)
    p = verb(g, "enumerate2", cmd_silting_enumerate2)
    p.add_argument("--algebra", required=True)
    p.add_argument("--budget", type=int, default=10_000)

    g = groups.add_parser("bridge").add_subparsers(dest="verb", required=True)
    p = verb(g, "build", cmd_bridge_build)
    p.add_argument("--algebra", required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--out", help="algebra file to write; the sidecar goes next to it")
    for name, func in (("to-complex", cmd_bridge_to_complex), ("to-silting", cmd_bridge_to_silting),
                       ("classify", cmd_bridge_classify)):
        p = verb(g, name, func)
        p.add_argument("--module", required=True)
        if name != "classify":
            p.add_argument("--out")
    for name, func in (("from-complex", cmd_bridge_from_complex), ("to-tilting", cmd_bridge_to_tilting)):
        p = verb(g, name, func)
        p.add_argument("--complex", required=True)
        p.add_argument("-n", type=int, required=True)
        p.add_argument("--out")
    p = verb(g, "canonical", cmd_bridge_canonical)
    p.add_argument("--algebra", required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--cotilting", action="store_true")
    p.add_argument("--out")
    p = verb(g, "ext-transport", cmd_bridge_ext_transport)
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("-j", type=int, required=True)

    g = groups.add_parser("suite").add_subparsers(dest="suite_name", required=True)
    for name in SUITES:
        verb(g, name, cmd_suite)
    return parser


def render_text(report: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for k in sorted(report):
        v = report[k]
        if isinstance(v, dict) and v and not indent >= 1:
            lines.append(f"{pad}{k}:")
            lines.append(render_text(v, indent + 1))
        else:
            lines.append(f"{pad}{k}: {json.dumps(v, sort_keys=True, ensure_ascii=False)}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        ctx = Context(args)
        code, report = args.func(ctx)
    except (NotNSilting, NotTilting, NotInRepP) as exc:
        code, report = FALSE, {"error": type(exc).__name__, "message": str(exc)}
    except (BudgetExceeded, DecompositionFailure) as exc:
        code, report = UNDECIDED, {"error": type(exc).__name__, "message": str(exc)}
    except (SiltlabError, ValueError, KeyError) as exc:
        code, report = INPUT_ERROR, {"error": type(exc).__name__, "message": str(exc)}
    report = {k: _value(v) for k, v in report.items()}
    if args.timing:
        report["timingMs"] = round((time.perf_counter() - start) * 1000, 1)
    if args.format == "json":
        print(json.dumps({"schemaVersion": fio.SCHEMA_VERSION, **report}, sort_keys=True, indent=2,
                         ensure_ascii=False, default=_value))
    else:
        print(render_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())

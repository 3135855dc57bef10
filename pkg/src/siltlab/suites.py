"""Named verification suites over small fixed algebras.

Each suite returns a :class:`SuiteReport` whose ``checks`` map a short label to a
boolean; ``details`` holds the numbers behind them.  All randomness is drawn from a
generator seeded by ``seed``.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .algebra import BoundQuiverAlgebra, dual_numbers, linear_a2, semisimple
from .bridge import (ComplexAlgebra, canonical_cotilting, canonical_tilting, classify, complex_algebra,
                     ext_transport, from_complex, predicted_injdim, predicted_pd, random_rep_i, random_rep_p,
                     silting_to_tilting, strip_summands, tilting_to_silting)
from .complexes import (ChainComplex, cohomology, cone, direct_sum_complex, dualize_complex,
                        hom_table, random_chain_map, random_complex, resolution_complex, shift, stalk)
from .decompose import decompose, indecomposables_isomorphic, is_indecomposable, reps_isomorphic
from .homological import (ExceedsCap, ext_dim, ext_dim_via_injectives, global_dimension, injdim,
                          is_injective, is_projective, min_proj_resolution, pd)
from .linalg import Field
from .minimal import decompose_complex, minimal_model, same_summand_multiset
from .modules import (Representation, direct_sum, hom_space, identity, injective_cogenerator, projective_rep,
                      regular_module, standard_modules, validate_representation, zero_rep)
from .silting import (cosilting_class_member, enumerate_two_term_silting, intermediate_window, is_cosilting,
                      is_presilting, is_silting, silting_class_member)
from .tilting import is_cotilting, is_tilting


@dataclass
class SuiteReport:
    name: str
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def as_dict(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "checks": dict(self.checks), "details": self.details}


def _a2(field: Field | None) -> BoundQuiverAlgebra:
    return linear_a2(field)


def two_term_xpq(A: BoundQuiverAlgebra) -> ChainComplex:
    """``P(v0) -> P(v-1)`` in degrees ``-1, 0`` with the inclusion as differential."""
    sm = standard_modules(A)
    P, Q = sm.projectives["v0"], sm.projectives["v-1"]
    return ChainComplex(A, {-1: P, 0: Q}, {-1: hom_space(P, Q)[0]})


def ar_quiver_objects(B: ComplexAlgebra) -> dict[str, Representation]:
    """The eleven indecomposable morphisms between indecomposable modules over the
    path algebra of ``v-1 -> v0``, as modules over the length-two complex algebra."""
    A = B.base
    sm = standard_modules(A)
    P, Q, S = sm.projectives["v0"], sm.projectives["v-1"], sm.simples["v-1"]
    Z = zero_rep(A)
    inc, proj = hom_space(P, Q)[0], hom_space(Q, S)[0]

    def obj(left, right, d=None):
        return from_complex(B, ChainComplex(A, {-1: left, 0: right}, {-1: d} if d is not None else {}))

    return {
        "(0→P)": obj(Z, P), "(0→Q)": obj(Z, Q), "(P=P)": obj(P, P, identity(P)),
        "(P→Q)": obj(P, Q, inc), "(0→S)": obj(Z, S), "(Q=Q)": obj(Q, Q, identity(Q)),
        "(P→0)": obj(P, Z), "(Q→S)": obj(Q, S, proj), "(S=S)": obj(S, S, identity(S)),
        "(Q→0)": obj(Q, Z), "(S→0)": obj(S, Z),
    }


# -- suites -----------------------------------------------------------------------------

def ar_quiver_suite(field: Field | None = None, seed: int = 0) -> SuiteReport:
    rep = SuiteReport("ar-quiver")
    B = complex_algebra(_a2(field), 2)
    objs = ar_quiver_objects(B)
    names = list(objs)
    rep.checks["valid"] = all(validate_representation(M) for M in objs.values())
    rep.checks["indecomposable"] = all(is_indecomposable(M, seed) for M in objs.values())
    rep.checks["pairwise-non-isomorphic"] = all(
        not indecomposables_isomorphic(objs[a], objs[b]) for i, a in enumerate(names) for b in names[i + 1:])
    cls = {k: classify(B, M) for k, M in objs.items()}
    projs = [k for k in names if cls[k].is_projective]
    injs = [k for k in names if cls[k].is_injective]
    rep.checks["projectives"] = set(projs) == {"(0→P)", "(0→Q)", "(P=P)", "(Q=Q)"}
    rep.checks["injectives"] = set(injs) == {"(Q→0)", "(S→0)", "(Q=Q)", "(S=S)"}
    rep.checks["pd-formula"] = cls["(P→Q)"].in_rep_p and cls["(P→Q)"].pd == 1
    rep.checks["injdim-formula"] = cls["(Q→S)"].in_rep_i and cls["(Q→S)"].injdim == 1
    rep.details = {"objects": names, "count": len(names), "projectives": projs, "injectives": injs,
                   "algebraDim": B.algebra.dim}
    return rep


def _any_rep(B: ComplexAlgebra, rng: np.random.Generator) -> Representation:
    """Random object whose columns are drawn from the standard modules of the base."""
    sm = standard_modules(B.base)
    pool = list(sm.projectives.values()) + list(sm.simples.values()) + list(sm.injectives.values())
    terms = {}
    for j in B.columns:
        picks = [pool[i] for i in rng.integers(0, len(pool), size=rng.integers(0, 3))]
        terms[j] = direct_sum(picks) if picks else zero_rep(B.base)
    return from_complex(B, random_complex(terms, rng))


def ext_transport_suite(field: Field | None = None, seed: int = 0, count: int = 100) -> SuiteReport:
    rep = SuiteReport("ext-transport")
    rng = np.random.default_rng(seed)
    A = _a2(field)
    Bs = {2: complex_algebra(A, 2), 3: complex_algebra(A, 3)}
    agree, nonzero, mismatches = 0, 0, []
    for k in range(count):
        B = Bs[2 + k % 2]
        j = 1 + (k // 2) % 4
        if k % 3 == 0:
            M, N = random_rep_p(B, rng), _any_rep(B, rng)
        elif k % 3 == 1:
            M, N = _any_rep(B, rng), random_rep_i(B, rng)
        else:
            M, N = random_rep_p(B, rng), random_rep_i(B, rng)
        res = ext_transport(B, M, N, j)
        assert res.hypothesis_met
        agree += res.agree
        nonzero += res.ext > 0
        if not res.agree:
            mismatches.append({"instance": k, "ext": res.ext, "hom": res.hom})
    rep.checks["all-agree"] = agree == count
    rep.details = {"instances": count, "agree": agree, "nonzeroExt": nonzero, "mismatches": mismatches}
    return rep


def gldim_suite(field: Field | None = None, seed: int = 0) -> SuiteReport:
    rep = SuiteReport("gldim")
    cases = [("k", semisimple(field), 2), ("k", semisimple(field), 3), ("A2", _a2(field), 2), ("A2", _a2(field), 3)]
    rows = []
    for label, A, n in cases:
        base = global_dimension(A)
        got = global_dimension(complex_algebra(A, n).algebra)
        ok = not isinstance(got, ExceedsCap) and got == base + n - 1
        rep.checks[f"{label},n={n}"] = ok
        rows.append({"algebra": label, "n": n, "base": base, "value": got, "expected": base + n - 1})
    dn = global_dimension(complex_algebra(dual_numbers(field), 2).algebra, cap=16)
    rep.checks["dual-numbers-infinite"] = isinstance(dn, ExceedsCap)
    rows.append({"algebra": "k[x]/x^2", "n": 2, "value": str(dn)})
    rep.details = {"cases": rows}
    return rep


def dimension_formula_suite(field: Field | None = None, seed: int = 0, count: int = 50) -> SuiteReport:
    rep = SuiteReport("dimension-formulas")
    rng = np.random.default_rng(seed)
    A = _a2(field)
    Bs = {2: complex_algebra(A, 2), 3: complex_algebra(A, 3)}
    done = {"projective": 0, "injective": 0}
    bad = []
    k = 0
    while min(done.values()) < count:
        B = Bs[2 + (k // 2) % 2]
        side = "projective" if k % 2 == 0 else "injective"
        k += 1
        if done[side] >= count:
            continue
        if side == "projective":
            M = strip_summands(random_rep_p(B, rng), is_projective)
            if M is None:
                continue
            got, want = pd(M), predicted_pd(B, M)
        else:
            M = strip_summands(random_rep_i(B, rng), is_injective)
            if M is None:
                continue
            got, want = injdim(M), predicted_injdim(B, M)
        done[side] += 1
        if got != want:
            bad.append({"side": side, "n": B.n, "value": str(got), "predicted": want})
    rep.checks["pd-formula"] = not any(b["side"] == "projective" for b in bad)
    rep.checks["injdim-formula"] = not any(b["side"] == "injective" for b in bad)
    rep.details = {"instances": done, "samplesDrawn": k, "mismatches": bad}
    return rep


def _basic(M: Representation) -> Representation:
    return direct_sum([X for X, _ in decompose(M)])


def bijection_suite(field: Field | None = None, seed: int = 0) -> SuiteReport:
    rep = SuiteReport("bijection")
    A = _a2(field)
    B = complex_algebra(A, 2)
    classes = enumerate_two_term_silting(A, seed=seed)
    rep.checks["five-classes"] = len(classes) == 5
    tilts, tilting_ok, roundtrip_ok = [], [], []
    for X in classes:
        T = silting_to_tilting(B, X)
        tilts.append(T)
        tilting_ok.append(bool(is_tilting(T, 1).verdict))
        Y = tilting_to_silting(B, T)
        roundtrip_ok.append(same_summand_multiset(decompose_complex(X), decompose_complex(Y)))
    rep.checks["images-tilting"] = all(tilting_ok)
    rep.checks["roundtrip"] = all(roundtrip_ok)
    basics = [_basic(T) for T in tilts]
    rep.checks["injective"] = all(not reps_isomorphic(basics[i], basics[j])
                                  for i in range(len(basics)) for j in range(i + 1, len(basics)))
    rep.details = {"classes": [repr(X) for X in classes], "tilting": tilting_ok, "roundtrip": roundtrip_ok}
    return rep


def canonical_suite(field: Field | None = None, seed: int = 0) -> SuiteReport:
    rep = SuiteReport("canonical")
    A = _a2(field)
    for n in (2, 3):
        B = complex_algebra(A, n)
        rep.checks[f"tilting,n={n}"] = bool(is_tilting(canonical_tilting(B), n - 1).verdict)
        rep.checks[f"cotilting,n={n}"] = bool(is_cotilting(canonical_cotilting(B), n - 1).verdict)
    return rep


def silting_sanity_suite(field: Field | None = None, seed: int = 0) -> SuiteReport:
    rep = SuiteReport("silting-sanity")
    A = _a2(field)
    R = stalk(regular_module(A), 0)
    sm = standard_modules(A)
    xpq = two_term_xpq(A)
    rep.checks["regular-presilting"] = is_presilting(R)
    rep.checks["regular-plus-shift-not-presilting"] = not is_presilting(direct_sum_complex([R, shift(R, 1)]))
    r = is_silting(direct_sum_complex([xpq, stalk(sm.projectives["v-1"], 0)]))
    rep.checks["xpq-plus-q-silting"] = r.verdict is True and r.certificate.steps <= 2
    rep.checks["xpq-alone-not-silting"] = is_silting(xpq).verdict is not True
    rep.details = {"steps": r.certificate.steps, "xpqStage": is_silting(xpq).stage}
    return rep


def window_suite(field: Field | None = None, seed: int = 0) -> SuiteReport:
    rep = SuiteReport("windows")
    A = _a2(field)
    sm = standard_modules(A)
    tests = {**{f"P({v})": M for v, M in sm.projectives.items()},
             **{f"S({v})": M for v, M in sm.simples.items()},
             "A": regular_module(A), "DA": injective_cogenerator(A)}
    classes = enumerate_two_term_silting(A, seed=seed)
    windows = [intermediate_window(T, 2) for T in classes]
    rep.checks["windows"] = len(classes) == 5 and all(w == (-1, 0) for w in windows)
    members = all(silting_class_member(T, stalk(M, d)).member
                  for T in classes for M in tests.values() for d in (-1, -2, -3))
    rep.checks["low-stalks-members"] = members
    rep.checks["regular-in-degree-1-not-member"] = all(
        not silting_class_member(T, stalk(regular_module(A), 1)).member for T in classes)
    rep.details = {"windows": [list(w) for w in windows], "testModules": sorted(tests)}
    return rep


def duality_suite(field: Field | None = None, seed: int = 0, pairs: int = 20) -> SuiteReport:
    rep = SuiteReport("duality")
    rng = np.random.default_rng(seed)
    A = _a2(field)
    Aop = A.opposite()
    classes = enumerate_two_term_silting(A, seed=seed)
    duals = [dualize_complex(T) for T in classes]
    rep.checks["duals-cosilting"] = all(C.algebra is Aop and is_cosilting(C).verdict is True for C in duals)
    sm = standard_modules(Aop)
    pool = list(sm.projectives.values()) + list(sm.simples.values()) + list(sm.injectives.values())
    agree, members = 0, 0
    for k in range(pairs):
        i = k % len(classes)
        lo = int(rng.integers(-3, 2))
        terms = {}
        for d in range(lo, lo + 2):
            picks = [pool[x] for x in rng.integers(0, len(pool), size=rng.integers(1, 3))]
            terms[d] = direct_sum(picks)
        V = random_complex(terms, rng)
        a = cosilting_class_member(duals[i], V).member
        b = silting_class_member(classes[i], dualize_complex(V)).member
        agree += a == b
        members += a
    rep.checks["membership-agrees"] = agree == pairs
    rep.details = {"pairs": pairs, "agree": agree, "members": members}
    return rep


def _euler(F, X: ChainComplex, of_cohomology: bool) -> tuple:
    verts = X.algebra.vertices
    tot = [0] * len(verts)
    for i in X.degrees:
        M = cohomology(X, i) if of_cohomology else X.term(i)
        for n, v in enumerate(verts):
            tot[n] += (-1) ** (i % 2) * M.dims[v]
    return tuple(tot)


def _random_projective_complex(A: BoundQuiverAlgebra, rng: np.random.Generator, length: int = 3) -> ChainComplex:
    lo = int(rng.integers(-2, 1))
    terms = {d: projective_rep(A, [str(v) for v in rng.choice(A.vertices, size=rng.integers(0, 3))])
             for d in range(lo, lo + length)}
    return random_complex(terms, rng)


def cross_check_suite(field: Field | None = None, seed: int = 0, count: int = 50, cones: int = 20) -> SuiteReport:
    rep = SuiteReport("cross-checks")
    rng = np.random.default_rng(seed)
    A = _a2(field)
    B = complex_algebra(A, 2)
    ext_ok, ext_nonzero = 0, 0
    for k in range(count):
        M, N = _any_rep(B, rng), _any_rep(B, rng)
        if M.dim == 0:
            M = ar_quiver_objects(B)["(S→0)"]
        j = k % 4
        e = ext_dim(M, N, j)
        res = resolution_complex(min_proj_resolution(M))
        h = hom_table(res, stalk(N, 0), derived=True, shifts=[j], with_basis=False).dim(j)
        i = ext_dim_via_injectives(M, N, j)
        ext_ok += e == h == i
        ext_nonzero += e > 0
    rep.checks["ext-vs-resolution-hom"] = ext_ok == count
    euler_ok = 0
    for _ in range(cones):
        X, Y = _random_projective_complex(A, rng), _random_projective_complex(A, rng)
        f = random_chain_map(X, Y, rng)
        C = cone(f)
        terms = [a - b for a, b in zip(_euler(A.field, Y, False), _euler(A.field, X, False))]
        coh = [a - b for a, b in zip(_euler(A.field, Y, True), _euler(A.field, X, True))]
        euler_ok += list(_euler(A.field, C, False)) == terms and list(_euler(A.field, C, True)) == coh
    rep.checks["cone-euler"] = euler_ok == cones
    mm_ok, inv_ok = 0, 0
    for _ in range(cones):
        X, Y = _random_projective_complex(A, rng), _random_projective_complex(A, rng)
        X = direct_sum_complex([X, cone(random_chain_map(X, X, rng))])
        m1 = minimal_model(X)
        m2 = minimal_model(m1.complex)
        mm_ok += m2.steps == 0 and m2.complex.degrees == m1.complex.degrees and all(
            m2.complex.term(i).tops == m1.complex.term(i).tops for i in m1.complex.degrees)
        inv_ok += _same_nonzero(hom_table(X, Y, with_basis=False).dims(),
                                hom_table(m1.complex, Y, with_basis=False).dims())
    rep.checks["minimal-model-idempotent"] = mm_ok == cones
    rep.checks["hom-invariant-under-minimal-model"] = inv_ok == cones
    rep.details = {"extInstances": count, "extNonzero": ext_nonzero, "cones": cones}
    return rep


def _same_nonzero(a: dict, b: dict) -> bool:
    """Equal as functions on all shifts (absent shifts count as zero)."""
    keys = set(a) | set(b)
    return all(a.get(k, 0) == b.get(k, 0) for k in keys)


SUITES = {
    "ar-quiver": ar_quiver_suite,
    "ext-transport": ext_transport_suite,
    "gldim": gldim_suite,
    "dimension-formulas": dimension_formula_suite,
    "bijection": bijection_suite,
    "canonical": canonical_suite,
    "silting-sanity": silting_sanity_suite,
    "windows": window_suite,
    "duality": duality_suite,
    "cross-checks": cross_check_suite,
}


def run_suite(name: str, field: Field | None = None, seed: int = 0) -> SuiteReport:
    with warnings.catch_warnings():
        warnings.simplefilter("error", category=UserWarning)
        return SUITES[name](field, seed)

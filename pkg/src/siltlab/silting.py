"""Presilting, silting and cosilting predicates for perfect complexes.

Also: class membership for the positive-shift orthogonal of a silting complex,
its intermediate window, aisle witnesses, and enumeration of two-term silting
complexes.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import networkx as nx
import numpy as np

from .algebra import BoundQuiverAlgebra
from .complexes import (ChainComplex, ChainMap, HomComplex, cone, direct_sum_complex, dualize_complex,
                        hom_table, shift, stalk, terms_injective, terms_projective, zero_complex)
from .decompose import local_radical
from .errors import BudgetExceeded, NotNSilting, NotPerfect
from .minimal import (_chain_blocks, complexes_isomorphic_indecomposable, decompose_complex,
                      indecomposable_summands, minimal_model, same_summand_set,
                      summand_signature)
from .modules import RepMorphism, hom_space, projective_rep, regular_module


def _require_perfect(T: ChainComplex) -> None:
    if not terms_projective(T):
        raise NotPerfect("complex has a non-projective term")


def _signed_count(X: ChainComplex) -> np.ndarray:
    """Class in the Grothendieck group: alternating sum of top multiplicities."""
    A = X.algebra
    out = np.zeros(len(A.vertices), dtype=np.int64)
    for i, M in X.terms.items():
        for v in M.tops:
            out[A.vertex_index[v]] += -1 if i % 2 else 1
    return out


# -- presilting ----------------------------------------------------------------------

def is_presilting(T: ChainComplex) -> bool:
    """``Hom(T, T[i]) = 0`` for every ``i > 0``."""
    _require_perfect(T)
    M = minimal_model(T, certificate=False).complex
    if M.is_zero():
        return True
    shifts = range(1, M.hi - M.lo + 1)
    table = hom_table(M, M, derived=True, shifts=shifts, with_basis=False)
    return all(table.dim(k) == 0 for k in shifts)


# -- additive closures in the homotopy category ------------------------------------------

@dataclass
class ComplexAddFamily:
    """Pairwise non-isomorphic indecomposable minimal complexes, with radicals of their
    endomorphism rings (as chain maps) and spanning sets of endomorphisms."""

    parts: list[ChainComplex]
    radicals: list[list[ChainMap]]
    ends: list[list[ChainMap]]

    @classmethod
    def from_parts(cls, parts: Sequence[ChainComplex]) -> "ComplexAddFamily":
        parts = sorted(parts, key=lambda X: (X.lo, X.total_dim, summand_signature(X)))
        radicals, ends = [], []
        for X in parts:
            maps = HomComplex(X, X).chain_maps(0)
            J = local_radical(X.field, [f.total_matrix() for f in maps])
            radicals.append([_chain_blocks(X, r) for r in J])
            ends.append(maps)
        return cls(parts, radicals, ends)

    @classmethod
    def of(cls, T: ChainComplex, seed: int = 0) -> "ComplexAddFamily":
        return cls.from_parts([X for X, _ in decompose_complex(T, seed)])

    def shifted(self, k: int) -> "ComplexAddFamily":
        parts = [shift(X, k) for X in self.parts]
        radicals = [[_shift_map(f, Y, Y) for f in rs] for rs, Y in zip(self.radicals, parts)]
        ends = [[_shift_map(f, Y, Y) for f in es] for es, Y in zip(self.ends, parts)]
        return ComplexAddFamily(parts, radicals, ends)

    def __add__(self, other: "ComplexAddFamily") -> "ComplexAddFamily":
        return ComplexAddFamily(self.parts + other.parts, self.radicals + other.radicals, self.ends + other.ends)


def _shift_map(f: ChainMap, X: ChainComplex, Y: ChainComplex) -> ChainMap:
    """``f[k]`` for a degree-0 map, given the shifted source and target."""
    k = f.source.lo - X.lo if not X.is_zero() else 0
    return ChainMap(X, Y, {i - k: g for i, g in f.comps.items()})


def left_approximation(X: ChainComplex, family: ComplexAddFamily) -> ChainMap:
    """Minimal left approximation ``X -> T'`` with ``T'`` a sum of copies of ``family.parts``."""
    F = X.field
    homs = [HomComplex(X, Ti) for Ti in family.parts]
    reps = [H.class_representatives(0) for H in homs]
    copies: list[ChainComplex] = []
    comps: list[ChainMap] = []
    for i, Ti in enumerate(family.parts):
        if not reps[i]:
            continue
        H = homs[i]
        span = [H.class_coords(r.compose(h)) for r in family.radicals[i] for h in reps[i]]
        for j, Tj in enumerate(family.parts):
            if j != i and reps[j]:
                cross = HomComplex(Tj, Ti).class_representatives(0)
                span += [H.class_coords(g.compose(h)) for g in cross for h in reps[j]]
        q = len(reps[i])
        for c in range(q):
            e = F.zeros(q)
            e[c] = 1
            cols = np.stack(span, axis=1).astype(F.dtype) if span else F.zeros(q, 0)
            if F.in_span(cols, e):
                continue
            h = reps[i][c]
            copies.append(Ti)
            comps.append(h)
            span += [H.class_coords(t.compose(h)) for t in family.ends[i]]
    if not copies:
        return ChainMap(X, zero_complex(X.algebra), {})
    target = direct_sum_complex(copies)
    A = X.algebra
    out = {}
    for i in X.degrees:
        if not target.term(i).dim:
            continue
        maps = {}
        for v in A.vertices:
            blocks = [h.comp(i).maps[v] for h, Ti in zip(comps, copies) if Ti.term(i).dim]
            maps[v] = np.concatenate(blocks, axis=0) if blocks else F.zeros(0, X.term(i).dims[v])
        out[i] = RepMorphism(X.term(i), target.term(i), maps)
    return ChainMap(X, target, out)


def left_add_approx(X: ChainComplex, T: ChainComplex, seed: int = 0) -> ChainMap:
    """Minimal left ``add(T)``-approximation of ``X`` in the homotopy category."""
    _require_perfect(X)
    _require_perfect(T)
    return left_approximation(X, ComplexAddFamily.of(T, seed))


# -- silting ---------------------------------------------------------------------------

@dataclass
class CoresolutionStep:
    source: ChainComplex
    approximation: ChainMap
    cone: ChainComplex


@dataclass
class SiltingCertificate:
    presilting_window: list[int] = field(default_factory=list)
    coresolution: list[CoresolutionStep] = field(default_factory=list)
    steps: int = 0


@dataclass
class SiltingReport:
    """``verdict`` is ``True``, ``False`` or ``None`` (undecided within the step cap)."""

    verdict: bool | None
    stage: str
    certificate: SiltingCertificate

    @property
    def undecided(self) -> bool:
        return self.verdict is None

    def __bool__(self):
        return bool(self.verdict)


def default_step_cap(T: ChainComplex) -> int:
    return 4 * (T.width() + len(T.algebra.vertices))


def is_silting(T: ChainComplex, step_cap: int | None = None, seed: int = 0) -> SiltingReport:
    """Presilting, and ``A`` is reached by iterated cones of minimal left approximations.

    Starting from ``A`` in degree 0, each step approximates the current complex by
    ``add(T)`` and continues with the minimal model of the cone; reaching zero
    proves that ``T`` generates.  A presilting complex whose summands do not span
    the Grothendieck group is rejected outright.
    """
    _require_perfect(T)
    cert = SiltingCertificate()
    M = minimal_model(T, certificate=False).complex
    if M.is_zero():
        return SiltingReport(False, "zero-complex", cert)
    cert.presilting_window = list(range(1, M.hi - M.lo + 1))
    if not is_presilting(M):
        return SiltingReport(False, "not-presilting", cert)
    family = ComplexAddFamily.of(M, seed)
    classes = np.stack([_signed_count(X) for X in family.parts])
    if np.linalg.matrix_rank(classes.astype(float)) < len(T.algebra.vertices):
        return SiltingReport(False, "does-not-generate", cert)
    cap = default_step_cap(M) if step_cap is None else step_cap
    X = stalk(regular_module(T.algebra), 0)
    for _ in range(cap):
        phi = left_approximation(X, family)
        C = minimal_model(cone(phi, check=False), certificate=False).complex
        cert.coresolution.append(CoresolutionStep(X, phi, C))
        cert.steps += 1
        if C.is_zero():
            return SiltingReport(True, "coresolution", cert)
        X = C
    return SiltingReport(None, "step-cap", cert)


def is_n_silting(T: ChainComplex, n: int, step_cap: int | None = None) -> bool:
    rep = is_silting(T, step_cap)
    if not rep.verdict:
        return False
    M = minimal_model(T, certificate=False).complex
    return -n + 1 <= M.lo and M.hi <= 0


# -- class membership -------------------------------------------------------------------

@dataclass
class ClassMembershipReport:
    object: ChainComplex
    generator: ChainComplex
    verdicts: dict[int, bool]
    member: bool

    def __bool__(self):
        return self.member


def silting_class_member(T: ChainComplex, V: ChainComplex) -> ClassMembershipReport:
    """Is ``Hom(T, V[i]) = 0`` for all ``i > 0``?  ``verdicts[i]`` is True when it vanishes."""
    _require_perfect(T)
    H = HomComplex(T, V)
    lo, hi = H.window()
    verdicts = {k: H.dim(k) == 0 for k in range(max(lo, 1), hi + 1)}
    return ClassMembershipReport(V, T, verdicts, all(verdicts.values()))


def cosilting_class_member(C: ChainComplex, V: ChainComplex) -> ClassMembershipReport:
    """Is ``Hom(V, C[i]) = 0`` for all ``i > 0``?"""
    if not terms_injective(C):
        raise NotPerfect("cosilting complexes need injective terms")
    H = HomComplex(V, C)
    lo, hi = H.window()
    verdicts = {k: H.dim(k) == 0 for k in range(max(lo, 1), hi + 1)}
    return ClassMembershipReport(V, C, verdicts, all(verdicts.values()))


def intermediate_window(T: ChainComplex, n: int | None = None) -> tuple[int, int]:
    """Cohomological window ``(a, b)`` squeezing the silting class of ``T``.

    Without ``n`` this is the support of the minimal model of ``T``: every complex
    with cohomology in degrees ``<= a`` is a member, and members have cohomology
    in degrees ``<= b``.  With ``n`` the complex must be ``n``-silting and the
    window reported is ``(-n + 1, 0)``.
    """
    _require_perfect(T)
    if n is not None:
        if not is_n_silting(T, n):
            raise NotNSilting(f"complex is not {n}-silting")
        return (-n + 1, 0)
    M = minimal_model(T, certificate=False).complex
    if M.is_zero():
        raise NotNSilting("zero complex")
    return (M.lo, M.hi)


# -- aisle witnesses ---------------------------------------------------------------------

@dataclass
class AisleWitness:
    """``kind`` is ``"InAisle"``, ``"NotInAisle"`` or ``"Unknown"``.

    For ``InAisle`` the certificate lists the approximation triangles; for
    ``NotInAisle`` ``shift`` is a ``j >= 0`` with ``Hom(X, T[j]) != 0``.
    """

    kind: str
    shift: int | None = None
    steps: list[CoresolutionStep] = field(default_factory=list)


def aisle_witness(T: ChainComplex, X: ChainComplex, step_cap: int | None = None, seed: int = 0) -> AisleWitness:
    """Membership of ``X`` in the left orthogonal of the silting class of ``T``.

    ``T[j]`` lies in the class for every ``j >= 0``, so a nonzero ``Hom(X, T[j])``
    refutes membership.  Membership is certified by a finite tower of triangles
    ``X_m -> T_m -> X_{m+1}`` with ``T_m`` a sum of shifts ``T[-k]``, ``k >= 1``,
    ending in zero.
    """
    _require_perfect(T)
    _require_perfect(X)
    T = minimal_model(T, certificate=False).complex
    Xm = minimal_model(X, certificate=False).complex
    H = HomComplex(Xm, T)
    lo, hi = H.window()
    for j in range(max(lo, 0), hi + 1):
        if H.dim(j):
            return AisleWitness("NotInAisle", shift=j)
    base = ComplexAddFamily.of(T, seed)
    cap = default_step_cap(T) + Xm.width() if step_cap is None else step_cap
    steps: list[CoresolutionStep] = []
    cur = Xm
    for _ in range(cap):
        if cur.is_zero():
            return AisleWitness("InAisle", steps=steps)
        kmin = max(1, cur.lo - T.hi)
        kmax = cur.hi - T.lo
        family = None
        for k in range(kmin, kmax + 1):
            fam = base.shifted(-k)
            family = fam if family is None else family + fam
        if family is None:
            break
        phi = left_approximation(cur, family)
        C = minimal_model(cone(phi, check=False), certificate=False).complex
        steps.append(CoresolutionStep(cur, phi, C))
        cur = C
    if cur.is_zero():
        return AisleWitness("InAisle", steps=steps)
    return AisleWitness("Unknown", steps=steps)


# -- cosilting ---------------------------------------------------------------------------

def is_cosilting(C: ChainComplex, step_cap: int | None = None) -> SiltingReport:
    """Bounded complex of injectives whose dual over the opposite algebra is silting."""
    if not terms_injective(C):
        raise NotPerfect("cosilting complexes need injective terms")
    return is_silting(dualize_complex(C), step_cap)


# -- two-term enumeration ------------------------------------------------------------------

def _two_term(A: BoundQuiverAlgebra, low: list[str], high: list[str], coeffs_for_basis) -> ChainComplex:
    P1, P0 = projective_rep(A, low), projective_rep(A, high)
    basis = [f for f in hom_space(P1, P0)] if P1.dim and P0.dim else []
    terms = {-1: P1, 0: P0}
    if not basis:
        return ChainComplex(A, terms)
    coeffs = coeffs_for_basis(len(basis))
    d = RepMorphism(P1, P0)
    for c, f in zip(coeffs, basis):
        d = d + f.scale(c)
    return ChainComplex(A, terms, {-1: d})


def _tops(A: BoundQuiverAlgebra, mult: Sequence[int]) -> list[str]:
    return [v for v, m in zip(A.vertices, mult) for _ in range(m)]


def two_term_presilting_indecomposables(A: BoundQuiverAlgebra, max_mult: int = 2, seed: int = 0,
                                        budget: int = 10_000, tries: int = 3) -> list[ChainComplex]:
    """Indecomposable two-term presilting complexes, one per isomorphism class.

    Generic maps between sums of indecomposable projectives with disjoint tops are
    sampled for every pair of multiplicity vectors up to ``max_mult``.
    """
    rng = np.random.default_rng(seed)
    F = A.field
    n = len(A.vertices)
    choices = []
    for pattern in itertools.product(range(-max_mult, max_mult + 1), repeat=n):
        if any(pattern):
            choices.append(pattern)
    if len(choices) * tries > budget:
        raise BudgetExceeded(f"{len(choices) * tries} samples needed, budget {budget}")
    found: list[ChainComplex] = []
    for pattern in choices:
        low = _tops(A, [max(-m, 0) for m in pattern])
        high = _tops(A, [max(m, 0) for m in pattern])
        for _ in range(tries):
            X = _two_term(A, low, high, lambda k: F.random(rng, (k,)))
            if not is_presilting(X):
                continue
            for Y in indecomposable_summands(X, seed):
                if not any(complexes_isomorphic_indecomposable(Y, Z) for Z in found):
                    found.append(Y)
            break
    found.sort(key=lambda X: (X.lo, X.total_dim, summand_signature(X)))
    return found


def enumerate_two_term_silting(A: BoundQuiverAlgebra, budget: int = 10_000, max_mult: int = 2,
                               seed: int = 0) -> list[ChainComplex]:
    """All two-term silting complexes up to equivalence, as basic minimal complexes."""
    pieces = two_term_presilting_indecomposables(A, max_mult, seed, budget)
    G = nx.Graph()
    G.add_nodes_from(range(len(pieces)))
    for a, b in itertools.combinations(range(len(pieces)), 2):
        if is_presilting(direct_sum_complex([pieces[a], pieces[b]])):
            G.add_edge(a, b)
    out = []
    for clique in sorted(sorted(c) for c in nx.find_cliques(G)):
        T = direct_sum_complex([pieces[i] for i in clique])
        if not is_presilting(T):
            continue
        rep = is_silting(T)
        if rep.verdict:
            out.append(T)
    return out


def silting_equivalent(T: ChainComplex, U: ChainComplex) -> bool:
    """Same additive closure: equal sets of indecomposable summands of the minimal models."""
    return same_summand_set(indecomposable_summands(T), indecomposable_summands(U))

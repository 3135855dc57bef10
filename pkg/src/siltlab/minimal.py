"""Minimal models of complexes of projectives and their indecomposable summands."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complexes import ChainComplex, ChainMap, HomComplex, identity_map
from .decompose import DEFAULT_BUDGET, group_isomorphic, isomorphic_indecomposables, split_generic
from .errors import NotProjectiveTerms
from .homological import projective_cover
from .modules import Representation, RepMorphism, kernel, image, projective_layout, projective_rep


@dataclass
class MinimalModel:
    """``complex`` with chain maps ``include: complex -> X`` and ``project: X -> complex``.

    ``project o include`` is the identity and ``include o project`` is homotopic
    to the identity of ``X``.
    """

    complex: ChainComplex
    include: ChainMap
    project: ChainMap
    steps: int


def standardize(X: ChainComplex) -> tuple[ChainComplex, ChainMap, ChainMap]:
    """Isomorphic complex whose terms are standard projectives, with both isomorphisms."""
    A = X.algebra
    F = X.field
    covers = {}
    for i, M in X.terms.items():
        if M.tops is not None:
            covers[i] = None
            continue
        pi = projective_cover(M)
        if pi.source.dim != M.dim:
            raise NotProjectiveTerms(f"term in degree {i} is not projective")
        covers[i] = pi
    if all(c is None for c in covers.values()):
        idm = identity_map(X)
        return X, idm, idm
    terms = {i: (M if covers[i] is None else covers[i].source) for i, M in X.terms.items()}
    fwd = {i: (RepMorphism(terms[i], M, {v: F.eye(M.dims[v]) for v in A.vertices}) if covers[i] is None
               else covers[i]) for i, M in X.terms.items()}
    back = {i: (RepMorphism(M, terms[i], {v: F.eye(M.dims[v]) for v in A.vertices}) if covers[i] is None
                else covers[i].inverse()) for i, M in X.terms.items()}
    diffs = {i: back[i + 1].compose(d.compose(fwd[i])) for i, d in X.diffs.items()}
    Y = ChainComplex(A, terms, diffs)
    return Y, ChainMap(Y, X, fwd), ChainMap(X, Y, back)


def _positions(layout, gen):
    inside = {w: [p for p, (k, _) in enumerate(layout[w]) if k == gen] for w in layout}
    outside = {w: [p for p, (k, _) in enumerate(layout[w]) if k != gen] for w in layout}
    return inside, outside


def find_unit(X: ChainComplex):
    """First ``(i, k, l)`` such that ``d^i`` restricted to generator ``k`` of ``X^i`` and
    generator ``l`` of ``X^{i+1}`` is an isomorphism ``P(v) -> P(v)``."""
    A = X.algebra
    for i in X.degrees:
        d = X.diffs.get(i)
        if d is None:
            continue
        src, tgt = X.term(i), X.term(i + 1)
        ls, lt = projective_layout(A, src.tops), projective_layout(A, tgt.tops)
        for k, v in enumerate(src.tops):
            col = ls[v].index((k, A.idempotent(v)))
            for l, w in enumerate(tgt.tops):
                if w != v:
                    continue
                row = lt[v].index((l, A.idempotent(v)))
                if d.maps[v][row, col] != 0:
                    return i, k, l
    return None


def is_minimal(X: ChainComplex) -> bool:
    Y, _, _ = standardize(X)
    return find_unit(Y) is None


def _eliminate(X: ChainComplex, i: int, k: int, l: int):
    """Gaussian elimination of the unit component ``(k, l)`` of ``d^i``."""
    A = X.algebra
    F = X.field
    src, tgt = X.term(i), X.term(i + 1)
    ls, lt = projective_layout(A, src.tops), projective_layout(A, tgt.tops)
    Bi, Ci = _positions(ls, k)
    Bo, Do = _positions(lt, l)
    new_src = projective_rep(A, [t for j, t in enumerate(src.tops) if j != k])
    new_tgt = projective_rep(A, [t for j, t in enumerate(tgt.tops) if j != l])
    d = X.diff(i)
    eps, f_i, g_o = {}, {}, {}
    for w in A.vertices:
        m = d.maps[w]
        phi = m[np.ix_(Bo[w], Bi[w])]
        delta = m[np.ix_(Bo[w], Ci[w])]
        gamma = m[np.ix_(Do[w], Bi[w])]
        e = m[np.ix_(Do[w], Ci[w])]
        phi_inv = F.inv(phi)
        eps[w] = F.reduce(e - F.matmul(gamma, F.matmul(phi_inv, delta)))
        fm = F.zeros(src.dims[w], len(Ci[w]))
        fm[Bi[w], :] = F.reduce(-F.matmul(phi_inv, delta))
        fm[Ci[w], :] = F.eye(len(Ci[w]))
        f_i[w] = fm
        gm = F.zeros(len(Do[w]), tgt.dims[w])
        gm[:, Bo[w]] = F.reduce(-F.matmul(gamma, phi_inv))
        gm[:, Do[w]] = F.eye(len(Do[w]))
        g_o[w] = gm
    terms = dict(X.terms)
    terms[i], terms[i + 1] = new_src, new_tgt
    diffs = {}
    for j, dj in X.diffs.items():
        if j == i:
            diffs[j] = RepMorphism(new_src, new_tgt, eps)
        elif j == i - 1:
            diffs[j] = RepMorphism(X.term(j), new_src, {w: dj.maps[w][Ci[w], :] for w in A.vertices})
        elif j == i + 1:
            diffs[j] = RepMorphism(new_tgt, X.term(j + 1), {w: dj.maps[w][:, Do[w]] for w in A.vertices})
        else:
            diffs[j] = dj
    Y = ChainComplex(A, terms, diffs)
    inc, proj = {}, {}
    for j in X.degrees:
        if j == i:
            inc[j] = RepMorphism(Y.term(j), src, f_i)
            proj[j] = RepMorphism(src, Y.term(j), {w: _select(F, Ci[w], src.dims[w]) for w in A.vertices})
        elif j == i + 1:
            inc[j] = RepMorphism(Y.term(j), tgt, {w: _select(F, Do[w], tgt.dims[w]).T.copy() for w in A.vertices})
            proj[j] = RepMorphism(tgt, Y.term(j), g_o)
        else:
            M = X.term(j)
            inc[j] = RepMorphism(Y.term(j), M, {w: F.eye(M.dims[w]) for w in A.vertices})
            proj[j] = RepMorphism(M, Y.term(j), {w: F.eye(M.dims[w]) for w in A.vertices})
    return Y, ChainMap(Y, X, inc), ChainMap(X, Y, proj)


def _select(F, rows, n):
    """Matrix picking the coordinates ``rows`` out of ``F^n``."""
    m = F.zeros(len(rows), n)
    for r, c in enumerate(rows):
        m[r, c] = 1
    return m


def minimal_model(X: ChainComplex, certificate: bool = True) -> MinimalModel:
    """Strip contractible summands by repeated Gaussian elimination.

    Raises :class:`NotProjectiveTerms` if some term is not projective.
    """
    Y, inc, proj = standardize(X)
    steps = 0
    while True:
        u = find_unit(Y)
        if u is None:
            break
        Z, f, g = _eliminate(Y, *u)
        if certificate:
            inc, proj = inc.compose(f), g.compose(proj)
        Y = Z
        steps += 1
    if not certificate:
        inc = proj = None
    return MinimalModel(Y, inc, proj, steps)


# -- decomposition in the homotopy category ---------------------------------------------

def _end_basis(X: ChainComplex) -> list[np.ndarray]:
    return [f.total_matrix() for f in HomComplex(X, X).chain_maps(0)]


def _chain_blocks(X: ChainComplex, h: np.ndarray) -> ChainMap:
    """Diagonal blocks of a total matrix, read back as a degree-0 map ``X -> X``."""
    comps, pos = {}, 0
    for i in X.degrees:
        maps = {}
        for v in X.algebra.vertices:
            d = X.term(i).dims[v]
            maps[v] = h[pos : pos + d, pos : pos + d]
            pos += d
        comps[i] = RepMorphism(X.term(i), X.term(i), maps)
    return ChainMap(X, X, comps)


def _subcomplex(X: ChainComplex, subs: dict[int, tuple[Representation, RepMorphism]]) -> ChainComplex:
    F = X.field
    terms = {i: S for i, (S, _) in subs.items()}
    diffs = {}
    for i, d in X.diffs.items():
        if i not in subs or i + 1 not in subs:
            continue
        S, inc = subs[i]
        T, inc_t = subs[i + 1]
        if not S.dim or not T.dim:
            continue
        maps = {}
        for v in X.algebra.vertices:
            img = F.matmul(d.maps[v], inc.maps[v])
            maps[v] = F.solve(inc_t.maps[v], img) if T.dims[v] else F.zeros(0, S.dims[v])
        diffs[i] = RepMorphism(S, T, maps)
    return ChainComplex(X.algebra, terms, diffs)


def _split(X: ChainComplex, h: np.ndarray):
    f = _chain_blocks(X, h)
    ker = {i: kernel(f.comp(i)) for i in X.degrees}
    im = {i: image(f.comp(i)) for i in X.degrees}
    return standardize(_subcomplex(X, ker))[0], standardize(_subcomplex(X, im))[0]


def indecomposable_summands(X: ChainComplex, seed: int = 0, budget: int = DEFAULT_BUDGET) -> list[ChainComplex]:
    """Indecomposable summands of the minimal model of ``X``, with repetitions."""
    Y = minimal_model(X, certificate=False).complex
    return split_generic(Y, _end_basis, _split, lambda Z: Z.total_dim, X.field, seed, budget)


def complexes_isomorphic_indecomposable(X: ChainComplex, Y: ChainComplex) -> bool:
    """For indecomposable minimal complexes: isomorphic in the homotopy category."""
    if X.degrees != Y.degrees or any(X.term(i).dimension_vector() != Y.term(i).dimension_vector()
                                     for i in X.degrees):
        return False
    fs = [f.total_matrix() for f in HomComplex(X, Y).chain_maps(0)]
    gs = [g.total_matrix() for g in HomComplex(Y, X).chain_maps(0)]
    return isomorphic_indecomposables(X.field, fs, gs)


def decompose_complex(X: ChainComplex, seed: int = 0, budget: int = DEFAULT_BUDGET) -> list[tuple[ChainComplex, int]]:
    parts = indecomposable_summands(X, seed, budget)
    return group_isomorphic(parts, complexes_isomorphic_indecomposable)


def summand_signature(X: ChainComplex) -> tuple:
    """Cheap invariant of an indecomposable minimal complex (degrees and tops)."""
    return tuple((i, tuple(sorted(X.term(i).tops))) for i in X.degrees)


def same_summand_set(parts_a: list[ChainComplex], parts_b: list[ChainComplex]) -> bool:
    """Equal sets of isomorphism classes (multiplicities ignored)."""
    def covered(xs, ys):
        return all(any(complexes_isomorphic_indecomposable(x, y) for y in ys) for x in xs)
    return covered(parts_a, parts_b) and covered(parts_b, parts_a)


def same_summand_multiset(parts_a: list[tuple[ChainComplex, int]], parts_b: list[tuple[ChainComplex, int]]) -> bool:
    if len(parts_a) != len(parts_b):
        return False
    used = [False] * len(parts_b)
    for x, m in parts_a:
        for j, (y, k) in enumerate(parts_b):
            if not used[j] and m == k and complexes_isomorphic_indecomposable(x, y):
                used[j] = True
                break
        else:
            return False
    return True

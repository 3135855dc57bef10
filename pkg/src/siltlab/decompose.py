"""Splitting objects into indecomposables through their endomorphism algebras.

The engine works with any object whose endomorphism algebra is available as a
list of square matrices acting on one ambient vector space.  Splitting uses
Fitting decompositions ``V = ker h + im h`` for ``h = g(x)^N``, where ``g`` is an
irreducible factor of the minimal polynomial of some endomorphism ``x`` whose
minimal polynomial has at least two distinct irreducible factors.  Locality of
the endomorphism algebra is certified explicitly; otherwise a seeded random
search for a splitting element runs until a budget is exhausted.
"""
from __future__ import annotations

import itertools
from typing import Callable, Sequence, TypeVar

import numpy as np
import sympy

from .errors import DecompositionFailure, InconsistentSystem
from .linalg import Field
from .modules import Representation, RepMorphism, hom_space, image, kernel

DEFAULT_BUDGET = 1000
# finite fields: prove locality by checking every element when there are at most this many
EXHAUSTIVE_LIMIT = 4096

T = TypeVar("T")


# -- polynomials ------------------------------------------------------------

def minimal_polynomial(F: Field, x: np.ndarray) -> list:
    """Monic coefficients (constant term first) of the minimal polynomial of ``x``."""
    n = x.shape[0]
    powers = [F.eye(n).reshape(-1)]
    cur = F.eye(n)
    while True:
        cur = F.matmul(cur, x)
        stack = np.stack(powers, axis=1)
        try:
            c = F.solve(stack, cur.reshape(-1))
        except InconsistentSystem:
            powers.append(cur.reshape(-1))
            continue
        return [F.reduce(np.array([-ci], dtype=F.dtype))[0] for ci in c] + [F.elem(1)]


def _sympy_poly(F: Field, coeffs: Sequence):
    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(str(c)) * t**i for i, c in enumerate(coeffs))
    if F.characteristic:
        return sympy.Poly(expr, t, modulus=F.characteristic), t
    return sympy.Poly(expr, t, domain=sympy.QQ), t


def factor_polynomial(F: Field, coeffs: Sequence) -> list[tuple[list, int]]:
    """Irreducible factors with multiplicities; factors given as coefficient lists."""
    poly, _ = _sympy_poly(F, coeffs)
    _, facs = poly.factor_list()
    out = []
    for f, m in facs:
        cs = [F.elem(sympy.Rational(c).p) * F.inv_scalar(F.elem(sympy.Rational(c).q))
              if F.characteristic else F.elem(str(sympy.Rational(c)))
              for c in reversed(f.all_coeffs())]
        lead = cs[-1]
        inv = F.inv_scalar(lead)
        cs = [F.reduce(np.array([c * inv], dtype=F.dtype))[0] for c in cs]
        out.append((cs, int(m)))
    out.sort(key=lambda fm: (len(fm[0]), [int(c) if F.characteristic else float(c) for c in fm[0]]))
    return out


def poly_eval(F: Field, coeffs: Sequence, x: np.ndarray) -> np.ndarray:
    n = x.shape[0]
    out = F.zeros(n, n)
    for c in reversed(list(coeffs)):
        out = F.reduce(F.matmul(out, x) + F.eye(n) * c)
    return out


def mat_power(F: Field, x: np.ndarray, k: int) -> np.ndarray:
    out = F.eye(x.shape[0])
    base = x
    while k:
        if k & 1:
            out = F.matmul(out, base)
        base = F.matmul(base, base)
        k >>= 1
    return out


# -- locality / splitting ---------------------------------------------------------

def _fitting_element(F: Field, x: np.ndarray, factors) -> np.ndarray:
    g = factors[0][0]
    return mat_power(F, poly_eval(F, g, x), x.shape[0])


def _is_nilpotent_span(F: Field, gens: list[np.ndarray], n: int) -> bool:
    """True iff the (non-unital) algebra generated by ``gens`` is nilpotent."""
    gens = [g for g in gens if np.any(g)]
    if not gens:
        return True
    layer = _span_basis(F, gens)
    for _ in range(n):
        prods = [F.matmul(w, g) for w in layer for g in gens]
        prods = [p for p in prods if np.any(p)]
        if not prods:
            return True
        layer = _span_basis(F, prods)
    return False


def _span_basis(F: Field, mats: list[np.ndarray]) -> list[np.ndarray]:
    shape = mats[0].shape
    stack = np.stack([m.reshape(-1) for m in mats], axis=1)
    cols = F.colspace(stack)
    return [cols[:, k].reshape(shape) for k in range(cols.shape[1])]


def _trace_radical_dim(F: Field, basis: list[np.ndarray]) -> int:
    flat = np.stack([b.reshape(-1) for b in basis], axis=0)
    flat_t = np.stack([b.T.reshape(-1) for b in basis], axis=0)
    gram = F.matmul(flat, flat_t.T)
    return len(basis) - F.rank(gram)


def find_splitting(F: Field, basis: list[np.ndarray], rng: np.random.Generator,
                   budget: int = DEFAULT_BUDGET) -> np.ndarray | None:
    """An endomorphism ``h`` with ``V = ker h + im h`` nontrivially, or ``None`` if local.

    ``basis`` spans a unital subalgebra of ``End(V)``.
    """
    n = basis[0].shape[0] if basis else 0
    if n == 0:
        raise DecompositionFailure("zero object has no endomorphism algebra to test")
    degrees = []
    shifted = []
    for b in basis:
        facs = factor_polynomial(F, minimal_polynomial(F, b))
        if len(facs) >= 2:
            return _fitting_element(F, b, facs)
        g = facs[0][0]
        degrees.append(len(g) - 1)
        if len(g) == 2:
            shifted.append(F.reduce(b + F.eye(n) * g[0]))
    if all(d == 1 for d in degrees):
        if _is_nilpotent_span(F, shifted, n):
            return None
    elif F.characteristic == 0 or F.characteristic > n:
        q = len(basis) - _trace_radical_dim(F, _span_basis(F, basis))
        if q == 1 or q in degrees:
            return None
    if F.characteristic and F.characteristic ** len(basis) <= EXHAUSTIVE_LIMIT:
        # a non-local algebra has a nontrivial idempotent, whose minimal polynomial splits
        for coeffs in itertools.product(range(F.characteristic), repeat=len(basis)):
            x = F.zeros(n, n)
            for c, b in zip(coeffs, basis):
                x = F.reduce(x + b * c)
            facs = factor_polynomial(F, minimal_polynomial(F, x))
            if len(facs) >= 2:
                return _fitting_element(F, x, facs)
        return None
    for _ in range(budget):
        coeffs = F.random(rng, (len(basis),))
        x = F.zeros(n, n)
        for c, b in zip(coeffs, basis):
            x = F.reduce(x + b * c)
        facs = factor_polynomial(F, minimal_polynomial(F, x))
        if len(facs) >= 2:
            return _fitting_element(F, x, facs)
    raise DecompositionFailure(f"no splitting element found within budget {budget}")


def split_generic(obj: T, end_basis: Callable[[T], list[np.ndarray]], split: Callable[[T, np.ndarray], tuple[T, T]],
                  size: Callable[[T], int], field: Field, seed: int = 0,
                  budget: int = DEFAULT_BUDGET) -> list[T]:
    """Indecomposable pieces of ``obj`` (with repetitions, in a deterministic order)."""
    rng = np.random.default_rng(seed)
    out, stack = [], [obj]
    while stack:
        X = stack.pop()
        if size(X) == 0:
            continue
        h = find_splitting(field, end_basis(X), rng, budget)
        if h is None:
            out.append(X)
        else:
            a, b = split(X, h)
            stack.extend([b, a])
    return out


def group_isomorphic(parts: list[T], is_iso: Callable[[T, T], bool]) -> list[tuple[T, int]]:
    groups: list[list] = []
    for p in parts:
        for g in groups:
            if is_iso(g[0], p):
                g[1] += 1
                break
        else:
            groups.append([p, 1])
    return [(g[0], g[1]) for g in groups]


def isomorphic_indecomposables(F: Field, forward: list[np.ndarray], backward: list[np.ndarray]) -> bool:
    """For indecomposables: some ``g f`` is invertible (non-units form the radical)."""
    for f in forward:
        for g in backward:
            gf = F.matmul(g, f)
            if F.rank(gf) == gf.shape[0]:
                return True
    return False


# -- representations -------------------------------------------------------------

def _rep_end_basis(M: Representation) -> list[np.ndarray]:
    return [f.total_matrix() for f in hom_space(M, M)]


def _blocks(M: Representation, h: np.ndarray) -> RepMorphism:
    maps, pos = {}, 0
    for v in M.algebra.vertices:
        d = M.dims[v]
        maps[v] = h[pos : pos + d, pos : pos + d]
        pos += d
    return RepMorphism(M, M, maps)


def _rep_split(M: Representation, h: np.ndarray):
    f = _blocks(M, h)
    return kernel(f)[0], image(f)[0]


def rep_indecomposable_parts(M: Representation, seed: int = 0, budget: int = DEFAULT_BUDGET) -> list[Representation]:
    return split_generic(M, _rep_end_basis, _rep_split, lambda X: X.dim, M.field, seed, budget)


def reps_isomorphic(M: Representation, N: Representation, seed: int = 0) -> bool:
    """Isomorphism test for arbitrary modules via multiset of indecomposable summands."""
    if M.dimension_vector() != N.dimension_vector():
        return False
    a = decompose(M, seed)
    b = decompose(N, seed)
    if len(a) != len(b):
        return False
    used = [False] * len(b)
    for X, m in a:
        for i, (Y, k) in enumerate(b):
            if not used[i] and k == m and indecomposables_isomorphic(X, Y):
                used[i] = True
                break
        else:
            return False
    return True


def indecomposables_isomorphic(X: Representation, Y: Representation) -> bool:
    if X.dimension_vector() != Y.dimension_vector():
        return False
    fs = [f.total_matrix() for f in hom_space(X, Y)]
    gs = [g.total_matrix() for g in hom_space(Y, X)]
    return isomorphic_indecomposables(X.field, fs, gs)


def decompose(M: Representation, seed: int = 0, budget: int = DEFAULT_BUDGET) -> list[tuple[Representation, int]]:
    """Pairwise non-isomorphic indecomposable summands with multiplicities."""
    parts = rep_indecomposable_parts(M, seed, budget)
    return group_isomorphic(parts, indecomposables_isomorphic)


def is_indecomposable(M: Representation, seed: int = 0, budget: int = DEFAULT_BUDGET) -> bool:
    if M.dim == 0:
        return False
    return find_splitting(M.field, _rep_end_basis(M), np.random.default_rng(seed), budget) is None


def local_radical(F: Field, basis: list[np.ndarray]) -> list[np.ndarray]:
    """A basis of the radical of a local algebra spanned by ``basis``."""
    n = basis[0].shape[0]
    basis = _span_basis(F, basis)
    shifted, split = [], True
    for b in basis:
        facs = factor_polynomial(F, minimal_polynomial(F, b))
        if len(facs) != 1:
            raise DecompositionFailure("algebra is not local")
        g = facs[0][0]
        if len(g) != 2:
            split = False
            break
        shifted.append(F.reduce(b + F.eye(n) * g[0]))
    if split:
        nonzero = [s for s in shifted if np.any(s)]
        return _span_basis(F, nonzero) if nonzero else []
    if F.characteristic and F.characteristic <= n:
        if F.characteristic ** len(basis) > EXHAUSTIVE_LIMIT:
            raise DecompositionFailure("radical of a non-split local algebra needs characteristic > dimension")
        # in a local algebra the radical is the set of nilpotent elements
        nil = []
        for coeffs in itertools.product(range(F.characteristic), repeat=len(basis)):
            x = F.zeros(n, n)
            for c, b in zip(coeffs, basis):
                x = F.reduce(x + b * c)
            if np.any(x) and F.is_zero(mat_power(F, x, n)):
                nil.append(x)
        return _span_basis(F, nil) if nil else []
    flat = np.stack([b.reshape(-1) for b in basis], axis=0)
    flat_t = np.stack([b.T.reshape(-1) for b in basis], axis=0)
    null = F.nullspace(F.matmul(flat, flat_t.T))
    out = []
    for k in range(null.shape[1]):
        m = F.zeros(n, n)
        for c, b in zip(null[:, k], basis):
            m = F.reduce(m + b * c)
        out.append(m)
    return out


def rep_endo_radical(M: Representation) -> list[RepMorphism]:
    """Radical of ``End(M)`` for an indecomposable ``M``."""
    return [_blocks(M, r) for r in local_radical(M.field, _rep_end_basis(M))]

"""Bounded cochain complexes of representations and graded Hom in the homotopy category.

Conventions: differentials raise degree; ``X[k]^i = X^{i+k}`` with differential
``(-1)^k d``; a degree-``k`` map ``f: X -> Y`` has components
``f_i: X^i -> Y^{i+k}`` and its Hom-complex differential is
``D(f) = d_Y f - (-1)^k f d_X``.  Cycles of degree ``k`` are exactly the chain
maps ``X -> Y[k]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .algebra import BoundQuiverAlgebra
from .errors import AlgebraMismatch, DerivedFlagRejected, NotChainMap, ShapeMismatch
from .homological import is_injective, is_projective
from .linalg import block_diag
from .modules import (Representation, RepMorphism, direct_sum, dualize,
                      hom_space, identity, kernel, quotient, zero_map, zero_rep)


class ChainComplex:
    """Terms ``terms[i]`` and differentials ``diffs[i]: terms[i] -> terms[i+1]``.

    Zero terms are dropped; a missing differential is the zero map.
    """

    def __init__(self, algebra: BoundQuiverAlgebra, terms: Mapping[int, Representation],
                 diffs: Mapping[int, RepMorphism] | None = None, name: str = ""):
        self.algebra = algebra
        self.terms: dict[int, Representation] = {}
        for i, M in sorted(terms.items()):
            if M.algebra is not algebra:
                raise AlgebraMismatch(f"term in degree {i} lives over another algebra")
            if M.dim:
                self.terms[int(i)] = M
        self.diffs: dict[int, RepMorphism] = {}
        for i, d in sorted((diffs or {}).items()):
            i = int(i)
            src, tgt = self.term(i), self.term(i + 1)
            if d.source.dimension_vector() != src.dimension_vector() or \
                    d.target.dimension_vector() != tgt.dimension_vector():
                raise ShapeMismatch(f"differential in degree {i} has the wrong shape")
            if src.dim and tgt.dim:
                self.diffs[i] = RepMorphism(src, tgt, d.maps)
        self.name = name

    @property
    def field(self):
        return self.algebra.field

    @property
    def degrees(self) -> list[int]:
        return sorted(self.terms)

    @property
    def lo(self) -> int | None:
        return min(self.terms) if self.terms else None

    @property
    def hi(self) -> int | None:
        return max(self.terms) if self.terms else None

    def is_zero(self) -> bool:
        return not self.terms

    def term(self, i: int) -> Representation:
        M = self.terms.get(i)
        return M if M is not None else zero_rep(self.algebra)

    def diff(self, i: int) -> RepMorphism:
        d = self.diffs.get(i)
        if d is not None:
            return d
        return RepMorphism(self.term(i), self.term(i + 1))

    @property
    def total_dim(self) -> int:
        return sum(M.dim for M in self.terms.values())

    def width(self) -> int:
        return 0 if self.is_zero() else self.hi - self.lo + 1

    def __repr__(self):
        label = self.name or "Complex"
        body = ", ".join(f"{i}:{M.dimension_vector()}" for i, M in self.terms.items())
        return f"<{label} {body}>"


def validate_complex(X: ChainComplex) -> bool:
    """True iff every differential is a module map and consecutive ones compose to zero."""
    for i, d in X.diffs.items():
        if not d.is_morphism():
            return False
        if i + 1 in X.diffs and not X.diffs[i + 1].compose(d).is_zero():
            return False
    return True


def zero_complex(A: BoundQuiverAlgebra) -> ChainComplex:
    return ChainComplex(A, {})


def stalk(M: Representation, degree: int = 0) -> ChainComplex:
    return ChainComplex(M.algebra, {degree: M}, name=f"{M.name}[{-degree}]" if M.name else "")


def resolution_complex(res) -> ChainComplex:
    """The deleted resolution ``... -> P_1 -> P_0`` of a :class:`Resolution`, ``P_k`` in degree ``-k``."""
    M = res.resolved
    terms = {-k: P for k, P in enumerate(res.terms)}
    diffs = {-k: res.maps[k] for k in range(1, len(res.terms))}
    return ChainComplex(M.algebra, terms, diffs)


def random_complex(terms: dict[int, Representation], rng: np.random.Generator) -> ChainComplex:
    """Random differentials between the given consecutive terms with ``d o d = 0``.

    Built from the right: each new differential is a random element of the space of
    maps whose composite with the previous differential vanishes.
    """
    degs = sorted(terms)
    A = terms[degs[0]].algebra
    F = A.field
    diffs: dict[int, RepMorphism] = {}
    for i in reversed(degs[:-1]):
        src, tgt = terms[i], terms[i + 1]
        basis = hom_space(src, tgt)
        if not basis:
            continue
        nxt = diffs.get(i + 1)
        if nxt is not None:
            comp = np.stack([nxt.compose(b).vector() for b in basis], axis=1)
            null = F.nullspace(comp)
        else:
            null = F.eye(len(basis))
        if null.shape[1] == 0:
            continue
        coeffs = F.matmul(null, F.random(rng, (null.shape[1],)).reshape(-1, 1)).reshape(-1)
        d = zero_map(src, tgt)
        for c, b in zip(coeffs, basis):
            d = d + b.scale(c)
        diffs[i] = d
    return ChainComplex(A, terms, diffs)


def shift(X: ChainComplex, k: int) -> ChainComplex:
    """``X[k]``: degree ``i`` holds ``X^{i+k}``, differential multiplied by ``(-1)^k``."""
    sign = -1 if k % 2 else 1
    terms = {i - k: M for i, M in X.terms.items()}
    diffs = {i - k: d.scale(sign) for i, d in X.diffs.items()}
    return ChainComplex(X.algebra, terms, diffs)


def direct_sum_complex(parts: Sequence[ChainComplex]) -> ChainComplex:
    A = parts[0].algebra
    degs = sorted({i for X in parts for i in X.terms})
    terms, diffs = {}, {}
    for i in degs:
        present = [X.term(i) for X in parts]
        terms[i] = direct_sum([M for M in present if M.dim]) if any(M.dim for M in present) else zero_rep(A)
    for i in degs:
        if i + 1 not in terms:
            continue
        # indices, not objects: the same complex may appear twice
        src = [k for k, X in enumerate(parts) if X.term(i).dim]
        tgt = [k for k, X in enumerate(parts) if X.term(i + 1).dim]
        F = A.field
        maps = {}
        for v in A.vertices:
            rows = []
            for l in tgt:
                Y = parts[l]
                row = [Y.diff(i).maps[v] if l == k else F.zeros(Y.term(i + 1).dims[v], parts[k].term(i).dims[v])
                       for k in src]
                rows.append(np.concatenate(row, axis=1) if row else F.zeros(Y.term(i + 1).dims[v], 0))
            maps[v] = np.concatenate(rows, axis=0) if rows else F.zeros(0, terms[i].dims[v])
        diffs[i] = RepMorphism(terms[i], terms[i + 1], maps)
    return ChainComplex(A, terms, diffs)


def complex_inclusions(parts: Sequence[ChainComplex], total: ChainComplex) -> list["ChainMap"]:
    """Canonical inclusions of the summands into :func:`direct_sum_complex` ``(parts)``."""
    F = total.field
    A = total.algebra
    out = []
    offs = {(i, v): 0 for i in total.degrees for v in A.vertices}
    for X in parts:
        comps = {}
        for i in X.degrees:
            maps = {}
            for v in A.vertices:
                m = F.zeros(total.term(i).dims[v], X.term(i).dims[v])
                o = offs[(i, v)]
                m[o : o + X.term(i).dims[v], :] = F.eye(X.term(i).dims[v])
                offs[(i, v)] += X.term(i).dims[v]
                maps[v] = m
            comps[i] = RepMorphism(X.term(i), total.term(i), maps)
        out.append(ChainMap(X, total, comps))
    return out


def complex_projections(parts: Sequence[ChainComplex], total: ChainComplex) -> list["ChainMap"]:
    return [ChainMap(total, inc.source, {i: RepMorphism(f.target, f.source, {v: m.T.copy() for v, m in f.maps.items()})
                                          for i, f in inc.comps.items()})
            for inc in complex_inclusions(parts, total)]


# -- chain maps ---------------------------------------------------------------------

class ChainMap:
    """A degree-``degree`` map: components ``comps[i]: source^i -> target^{i+degree}``."""

    def __init__(self, source: ChainComplex, target: ChainComplex,
                 comps: Mapping[int, RepMorphism] | None = None, degree: int = 0):
        self.source = source
        self.target = target
        self.degree = degree
        self.comps: dict[int, RepMorphism] = {}
        for i in source.degrees:
            if target.term(i + degree).dim == 0:
                continue
            f = (comps or {}).get(i)
            if f is None:
                f = RepMorphism(source.term(i), target.term(i + degree))
            else:
                f = RepMorphism(source.term(i), target.term(i + degree), f.maps)
            self.comps[i] = f

    @property
    def field(self):
        return self.source.field

    def comp(self, i: int) -> RepMorphism:
        f = self.comps.get(i)
        if f is not None:
            return f
        return RepMorphism(self.source.term(i), self.target.term(i + self.degree))

    def is_chain_map(self) -> bool:
        if not all(f.is_morphism() for f in self.comps.values()):
            return False
        return differential(self).is_zero_map()

    def compose(self, other: "ChainMap") -> "ChainMap":
        """``self o other`` (degrees add)."""
        k = other.degree
        comps = {i: self.comp(i + k).compose(other.comp(i)) for i in other.source.degrees}
        return ChainMap(other.source, self.target, comps, k + self.degree)

    def __add__(self, other: "ChainMap") -> "ChainMap":
        comps = {i: self.comp(i) + other.comp(i) for i in self.source.degrees}
        return ChainMap(self.source, self.target, comps, self.degree)

    def scale(self, c) -> "ChainMap":
        return ChainMap(self.source, self.target, {i: f.scale(c) for i, f in self.comps.items()}, self.degree)

    def __sub__(self, other):
        return self + other.scale(-1)

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.comps.values())

    def total_matrix(self) -> np.ndarray:
        """Block matrix on ``sum_i sum_v`` of the terms (degree-0 maps only)."""
        F = self.field
        rows = [(i, v) for i in self.target.degrees for v in self.source.algebra.vertices]
        cols = [(i, v) for i in self.source.degrees for v in self.source.algebra.vertices]
        rsz = [self.target.term(i).dims[v] for i, v in rows]
        csz = [self.source.term(i).dims[v] for i, v in cols]
        out = F.zeros(sum(rsz), sum(csz))
        roff = {key: int(o) for key, o in zip(rows, np.cumsum([0] + rsz[:-1]))}
        coff = {key: int(o) for key, o in zip(cols, np.cumsum([0] + csz[:-1]))}
        for i, f in self.comps.items():
            for v, m in f.maps.items():
                if m.size:
                    r, c = roff[(i + self.degree, v)], coff[(i, v)]
                    out[r : r + m.shape[0], c : c + m.shape[1]] = m
        return out

    def __repr__(self):
        return f"<ChainMap deg {self.degree}: {self.source!r} -> {self.target!r}>"


@dataclass
class _GradedMorphism:
    """Hom-complex element of degree ``degree``; used for the differential."""

    comps: dict[int, RepMorphism]
    degree: int

    def is_zero_map(self) -> bool:
        return all(f.is_zero() for f in self.comps.values())


def differential(f: ChainMap) -> _GradedMorphism:
    """``D(f) = d_Y f - (-1)^k f d_X`` as components ``X^i -> Y^{i+k+1}``."""
    X, Y, k = f.source, f.target, f.degree
    sign = -1 if k % 2 else 1
    out = {}
    for i in sorted(set(X.degrees) | {i - 1 for i in X.degrees}):
        src, tgt = X.term(i), Y.term(i + k + 1)
        if not src.dim or not tgt.dim:
            continue
        a = Y.diff(i + k).compose(f.comp(i)) if f.comp(i).target.dim else RepMorphism(src, tgt)
        b = f.comp(i + 1).compose(X.diff(i))
        out[i] = a - b.scale(sign)
    return _GradedMorphism(out, k + 1)


def identity_map(X: ChainComplex) -> ChainMap:
    return ChainMap(X, X, {i: identity(M) for i, M in X.terms.items()})


def zero_chain_map(X: ChainComplex, Y: ChainComplex, degree: int = 0) -> ChainMap:
    return ChainMap(X, Y, {}, degree)


def direct_sum_chain_map(fs: Sequence[ChainMap], source=None, target=None) -> ChainMap:
    src = source or direct_sum_complex([f.source for f in fs])
    tgt = target or direct_sum_complex([f.target for f in fs])
    F = src.field
    comps = {}
    for i in src.degrees:
        maps = {}
        for v in src.algebra.vertices:
            blocks = [f.comp(i).maps[v] for f in fs]
            maps[v] = block_diag(F, blocks)
        comps[i] = RepMorphism(src.term(i), tgt.term(i), maps)
    return ChainMap(src, tgt, comps)


# -- cone and cohomology --------------------------------------------------------------

def cone(f: ChainMap, check: bool = True) -> ChainComplex:
    """``cone(f)^i = X^{i+1} + Y^i`` with differential ``[[-d_X, 0], [f, d_Y]]``."""
    if f.degree != 0:
        raise NotChainMap("cone needs a degree-0 map")
    if check and not f.is_chain_map():
        raise NotChainMap("map is not a chain map")
    X, Y = f.source, f.target
    A = X.algebra
    F = A.field
    degs = sorted({i - 1 for i in X.degrees} | set(Y.degrees))
    terms = {}
    for i in degs:
        parts = [M for M in (X.term(i + 1), Y.term(i)) if M.dim]
        if parts:
            terms[i] = direct_sum(parts)
    diffs = {}
    for i in degs:
        if i not in terms or i + 1 not in terms:
            continue
        maps = {}
        for v in A.vertices:
            x1, y0 = X.term(i + 1).dims[v], Y.term(i).dims[v]
            x2, y1 = X.term(i + 2).dims[v], Y.term(i + 1).dims[v]
            m = F.zeros(x2 + y1, x1 + y0)
            if x2 and x1:
                m[:x2, :x1] = F.reduce(-X.diff(i + 1).maps[v])
            if y1 and x1:
                m[x2:, :x1] = f.comp(i + 1).maps[v]
            if y1 and y0:
                m[x2:, x1:] = Y.diff(i).maps[v]
            maps[v] = m
        diffs[i] = RepMorphism(terms[i], terms[i + 1], maps)
    return ChainComplex(A, terms, diffs)


def cone_maps(f: ChainMap, C: ChainComplex | None = None) -> tuple[ChainMap, ChainMap]:
    """The triangle maps ``Y -> cone(f)`` and ``cone(f) -> X[1]``."""
    X, Y = f.source, f.target
    C = C if C is not None else cone(f)
    F = X.field
    A = X.algebra
    into, out = {}, {}
    X1 = shift(X, 1)
    for i in C.degrees:
        x1, y0 = X.term(i + 1).dims, Y.term(i).dims
        into[i] = RepMorphism(Y.term(i), C.term(i),
                              {v: np.concatenate([F.zeros(x1[v], y0[v]), F.eye(y0[v])], axis=0) for v in A.vertices})
        out[i] = RepMorphism(C.term(i), X1.term(i),
                             {v: np.concatenate([F.eye(x1[v]), F.zeros(x1[v], y0[v])], axis=1) for v in A.vertices})
    return ChainMap(Y, C, {i: into[i] for i in Y.degrees if i in into}), ChainMap(C, X1, out)


def cohomology(X: ChainComplex, i: int) -> Representation:
    """``ker d^i / im d^{i-1}``."""
    F = X.field
    K, inc = kernel(X.diff(i))
    d_in = X.diff(i - 1)
    sub = {}
    for v in X.algebra.vertices:
        img = d_in.maps[v]
        kb = inc.maps[v]
        if K.dims[v] == 0:
            sub[v] = F.zeros(0, 0)
            continue
        cols = F.colspace(img) if img.size else F.zeros(kb.shape[0], 0)
        sub[v] = F.solve(kb, cols) if cols.shape[1] else F.zeros(K.dims[v], 0)
    return quotient(K, sub)[0]


def dualize_complex(X: ChainComplex) -> ChainComplex:
    """Vertexwise dual over the opposite algebra; degree ``i`` holds ``D(X^{-i})``."""
    op = X.algebra.opposite()
    terms = {-i: dualize(M) for i, M in X.terms.items()}
    diffs = {}
    for i, d in X.diffs.items():
        # d^i: X^i -> X^{i+1} dualizes to D X^{i+1} -> D X^i, i.e. degree -i-1 -> -i
        diffs[-i - 1] = RepMorphism(terms[-i - 1], terms[-i], {v: m.T.copy() for v, m in d.maps.items()})
    return ChainComplex(op, terms, diffs)


def dualize_chain_map(f: ChainMap, source: ChainComplex | None = None,
                      target: ChainComplex | None = None) -> ChainMap:
    """``D f: D(target) -> D(source)`` for a degree-0 map."""
    src = source if source is not None else dualize_complex(f.target)
    tgt = target if target is not None else dualize_complex(f.source)
    comps = {-i: RepMorphism(src.term(-i), tgt.term(-i), {v: m.T.copy() for v, m in g.maps.items()})
             for i, g in f.comps.items()}
    return ChainMap(src, tgt, comps)


# -- graded Hom -----------------------------------------------------------------------

class HomComplex:
    """The Hom complex ``Hom(X, Y)`` restricted to module maps, degree by degree.

    Elements of degree ``k`` are represented by coordinates in a basis made of
    ``hom_space(X^i, Y^{i+k})`` for all ``i``; ``ambient`` coordinates list the
    entries of all vertex matrices.
    """

    def __init__(self, X: ChainComplex, Y: ChainComplex):
        if X.algebra is not Y.algebra:
            raise AlgebraMismatch("complexes over different algebras")
        self.X, self.Y = X, Y
        self.field = X.field
        self._homs: dict[tuple[int, int], list[RepMorphism]] = {}
        self._cache: dict[int, dict] = {}

    def window(self) -> tuple[int, int]:
        X, Y = self.X, self.Y
        if X.is_zero() or Y.is_zero():
            return (0, -1)
        return (Y.lo - X.hi, Y.hi - X.lo)

    def _hom(self, i: int, j: int) -> list[RepMorphism]:
        key = (i, j)
        if key not in self._homs:
            self._homs[key] = hom_space(self.X.term(i), self.Y.term(j))
        return self._homs[key]

    def _layout(self, k: int):
        """Ambient blocks ``(i, v)`` with offsets and sizes for degree ``k``."""
        A = self.X.algebra
        blocks, pos = {}, 0
        for i in self.X.degrees:
            Yt = self.Y.term(i + k)
            if not Yt.dim:
                continue
            for v in A.vertices:
                sz = Yt.dims[v] * self.X.term(i).dims[v]
                blocks[(i, v)] = (pos, sz)
                pos += sz
        return blocks, pos

    def ambient(self, comps: Mapping[int, RepMorphism], k: int) -> np.ndarray:
        blocks, n = self._layout(k)
        vec = self.field.zeros(n)
        for (i, v), (o, sz) in blocks.items():
            f = comps.get(i)
            if f is not None and sz:
                vec[o : o + sz] = f.maps[v].reshape(-1)
        return vec

    def basis(self, k: int) -> list[tuple[int, RepMorphism]]:
        return [(i, f) for i in self.X.degrees for f in self._hom(i, i + k)]

    def basis_matrix(self, k: int) -> np.ndarray:
        F = self.field
        _, n = self._layout(k)
        cols = [self.ambient({i: f}, k) for i, f in self.basis(k)]
        return np.stack(cols, axis=1).astype(F.dtype) if cols else F.zeros(n, 0)

    def differential_matrix(self, k: int) -> np.ndarray:
        """Columns: ambient images in degree ``k+1`` of the degree-``k`` basis."""
        F = self.field
        X, Y = self.X, self.Y
        sign = -1 if k % 2 else 1
        _, n = self._layout(k + 1)
        cols = []
        for i, f in self.basis(k):
            comps = {}
            a = Y.diff(i + k).compose(f)
            if a.target.dim:
                comps[i] = a
            if X.term(i - 1).dim:
                b = f.compose(X.diff(i - 1)).scale(-sign)
                if i - 1 in comps:
                    comps[i - 1] = comps[i - 1] + b
                else:
                    comps[i - 1] = b
            comps = {j: g for j, g in comps.items() if Y.term(j + k + 1).dim}
            cols.append(self.ambient(comps, k + 1))
        return np.stack(cols, axis=1).astype(F.dtype) if cols else F.zeros(n, 0)

    def data(self, k: int) -> dict:
        if k in self._cache:
            return self._cache[k]
        F = self.field
        Bk = self.basis_matrix(k)
        nk = Bk.shape[1]
        Dk = self.differential_matrix(k)
        cycles = F.nullspace(Dk) if nk else F.zeros(0, 0)
        Dprev = self.differential_matrix(k - 1)
        if nk and Dprev.shape[1]:
            bound = F.colspace(F.solve(Bk, Dprev))
        else:
            bound = F.zeros(nk, 0)
        chosen = []
        span = bound
        for c in range(cycles.shape[1]):
            col = cycles[:, c]
            if not F.in_span(span, col):
                chosen.append(col)
                span = np.concatenate([span, col.reshape(-1, 1)], axis=1)
        classes = np.stack(chosen, axis=1).astype(F.dtype) if chosen else F.zeros(nk, 0)
        out = {"basis": Bk, "cycles": cycles, "boundaries": bound, "classes": classes}
        self._cache[k] = out
        return out

    def dim(self, k: int) -> int:
        return self.data(k)["classes"].shape[1]

    def to_chain_map(self, coords: np.ndarray, k: int) -> ChainMap:
        comps: dict[int, RepMorphism] = {}
        for c, (i, f) in zip(coords, self.basis(k)):
            if c == 0:
                continue
            g = f.scale(c)
            comps[i] = comps[i] + g if i in comps else g
        return ChainMap(self.X, self.Y, comps, k)

    def coords(self, f: ChainMap) -> np.ndarray:
        k = f.degree
        d = self.data(k)
        return self.field.solve(d["basis"], self.ambient(f.comps, k))

    def class_coords(self, f: ChainMap) -> np.ndarray:
        """Coordinates of the homotopy class of a cycle in the class basis."""
        d = self.data(f.degree)
        F = self.field
        q = d["classes"].shape[1]
        both = np.concatenate([d["classes"], d["boundaries"]], axis=1)
        x = F.solve(both, self.coords(f))
        return x[:q]

    def is_null_homotopic(self, f: ChainMap) -> bool:
        d = self.data(f.degree)
        return self.field.in_span(d["boundaries"], self.coords(f))

    def chain_maps(self, k: int) -> list[ChainMap]:
        """A basis of all chain maps ``X -> Y[k]`` (not modulo homotopy)."""
        cyc = self.data(k)["cycles"]
        return [self.to_chain_map(cyc[:, c], k) for c in range(cyc.shape[1])]

    def class_representatives(self, k: int) -> list[ChainMap]:
        cls = self.data(k)["classes"]
        return [self.to_chain_map(cls[:, c], k) for c in range(cls.shape[1])]


@dataclass
class HomEntry:
    dim: int
    basis: list[ChainMap] = field(default_factory=list)


@dataclass
class GradedHomTable:
    source: ChainComplex
    target: ChainComplex
    derived: bool
    entries: dict[int, HomEntry]

    @property
    def label(self) -> str:
        return "derived" if self.derived else "homotopy"

    def dim(self, k: int) -> int:
        e = self.entries.get(k)
        return e.dim if e else 0

    def dims(self) -> dict[int, int]:
        return {k: e.dim for k, e in sorted(self.entries.items())}


def terms_projective(X: ChainComplex) -> bool:
    return all(M.tops is not None or is_projective(M) for M in X.terms.values())


def terms_injective(X: ChainComplex) -> bool:
    return all(is_injective(M) for M in X.terms.values())


def hom_table(X: ChainComplex, Y: ChainComplex, derived: bool = False,
              shifts: Sequence[int] | None = None, with_basis: bool = True) -> GradedHomTable:
    """Dimensions and class bases of ``Hom_K(X, Y[k])`` for every ``k`` in the window.

    With ``derived=True`` the values are derived-category Hom groups; this needs
    projective terms in ``X`` or injective terms in ``Y``.
    """
    if derived and not (terms_projective(X) or terms_injective(Y)):
        raise DerivedFlagRejected("derived Hom needs projective terms on the left or injective terms on the right")
    H = HomComplex(X, Y)
    lo, hi = H.window()
    ks = range(lo, hi + 1) if shifts is None else [k for k in shifts if lo <= k <= hi]
    entries = {}
    for k in ks:
        basis = H.class_representatives(k) if with_basis else []
        entries[k] = HomEntry(H.dim(k), basis)
    return GradedHomTable(X, Y, derived, entries)


def hom_dim(X: ChainComplex, Y: ChainComplex, k: int) -> int:
    lo, hi = HomComplex(X, Y).window()
    if not lo <= k <= hi:
        return 0
    return HomComplex(X, Y).dim(k)


def is_homotopy_equivalence_pair(f: ChainMap, g: ChainMap) -> bool:
    """``g f`` and ``f g`` are homotopic to identities."""
    X, Y = f.source, f.target
    gf = g.compose(f) - identity_map(X)
    fg = f.compose(g) - identity_map(Y)
    return HomComplex(X, X).is_null_homotopic(gf) and HomComplex(Y, Y).is_null_homotopic(fg)


def random_chain_map(X: ChainComplex, Y: ChainComplex, rng: np.random.Generator, k: int = 0) -> ChainMap:
    """A random combination of a basis of chain maps ``X -> Y[k]``."""
    basis = HomComplex(X, Y).chain_maps(k)
    out = zero_chain_map(X, Y, k)
    if not basis:
        return out
    for c, f in zip(X.field.random(rng, (len(basis),)), basis):
        out = out + f.scale(c)
    return out

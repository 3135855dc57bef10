"""Representations of bound quiver algebras and their morphisms."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .algebra import BoundQuiverAlgebra, Path
from .errors import AlgebraMismatch, ShapeMismatch
from .linalg import block_diag


class Representation:
    """A module over ``algebra``: a vector space per vertex, a matrix per arrow.

    The matrix of an arrow ``a: v -> w`` has shape ``dims[w] x dims[v]``.
    ``tops`` is set only for the standard projective ``P(tops[0]) + P(tops[1]) + ...``
    whose basis at each vertex ``w`` is the list of pairs ``(k, path)`` with
    ``path`` a basis path from ``tops[k]`` to ``w``.
    """

    def __init__(self, algebra: BoundQuiverAlgebra, dims: Mapping[str, int],
                 maps: Mapping[str, np.ndarray] | None = None, *, tops: Sequence[str] | None = None,
                 name: str = ""):
        self.algebra = algebra
        F = algebra.field
        self.dims = {v: int(dims.get(v, 0)) for v in algebra.vertices}
        if any(d < 0 for d in self.dims.values()):
            raise ShapeMismatch("negative dimension")
        self.maps: dict[str, np.ndarray] = {}
        maps = maps or {}
        for a in algebra.quiver.arrows:
            shape = (self.dims[a.target], self.dims[a.source])
            m = maps.get(a.name)
            if m is None:
                m = F.zeros(*shape)
            else:
                m = F.reduce(np.asarray(m, dtype=F.dtype).reshape(shape) if np.size(m) == 0
                             else np.asarray(m, dtype=F.dtype))
                if m.shape != shape:
                    raise ShapeMismatch(f"arrow {a.name}: expected {shape}, got {m.shape}")
            m.setflags(write=False)
            self.maps[a.name] = m
        unknown = set(maps) - set(self.maps)
        if unknown:
            raise ShapeMismatch(f"unknown arrows {sorted(unknown)}")
        self.tops = tuple(tops) if tops is not None else None
        self.name = name
        self._path_cache: dict[int, np.ndarray] = {}

    # -- sizes ------------------------------------------------------------
    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self) -> int:
        return sum(self.dims.values())

    def dimension_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.algebra.vertices)

    def is_zero(self) -> bool:
        return self.dim == 0

    def offsets(self) -> dict[str, int]:
        out, pos = {}, 0
        for v in self.algebra.vertices:
            out[v] = pos
            pos += self.dims[v]
        return out

    # -- action ----------------------------------------------------------
    def path_matrix(self, idx: int) -> np.ndarray:
        """Action of the basis path ``algebra.basis[idx]``."""
        if idx not in self._path_cache:
            p = self.algebra.basis[idx]
            self._path_cache[idx] = self.sequence_matrix(p.source, p.arrows)
        return self._path_cache[idx]

    def sequence_matrix(self, source: str, arrows: Sequence[str]) -> np.ndarray:
        F = self.field
        m = F.eye(self.dims[source])
        for a in arrows:
            m = F.matmul(self.maps[a], m)
        return m

    def element_matrix(self, x: np.ndarray, source: str, target: str) -> np.ndarray:
        """Action ``M_source -> M_target`` of an algebra element (coordinate vector)."""
        F = self.field
        out = F.zeros(self.dims[target], self.dims[source])
        for i in self.algebra.paths(source, target):
            if x[i] != 0:
                out = F.reduce(out + x[i] * self.path_matrix(i))
        return out

    def __repr__(self):
        label = self.name or "Rep"
        return f"<{label} dims={self.dimension_vector()}>"


def validate_representation(M: Representation) -> bool:
    """True iff every relation of the algebra acts as zero."""
    F = M.field
    A = M.algebra
    for rel in A.relations:
        first = rel.terms[0][1]
        s = A.quiver.arrow(first[0]).source
        t = A.quiver.arrow(first[-1]).target
        acc = F.zeros(M.dims[t], M.dims[s])
        for c, arrows in rel.terms:
            acc = F.reduce(acc + F.elem(c) * M.sequence_matrix(s, arrows))
        if np.any(acc):
            return False
    return True


class RepMorphism:
    """Vertexwise matrices ``maps[v]: source_v -> target_v``."""

    def __init__(self, source: Representation, target: Representation,
                 maps: Mapping[str, np.ndarray] | None = None):
        if source.algebra is not target.algebra:
            raise AlgebraMismatch("morphism between modules over different algebras")
        self.source = source
        self.target = target
        F = source.field
        self.maps: dict[str, np.ndarray] = {}
        maps = maps or {}
        for v in source.algebra.vertices:
            shape = (target.dims[v], source.dims[v])
            m = maps.get(v)
            m = F.zeros(*shape) if m is None else F.reduce(np.asarray(m, dtype=F.dtype))
            if m.shape != shape:
                raise ShapeMismatch(f"vertex {v}: expected {shape}, got {m.shape}")
            self.maps[v] = m

    @property
    def field(self):
        return self.source.field

    @property
    def algebra(self):
        return self.source.algebra

    def compose(self, other: "RepMorphism") -> "RepMorphism":
        """``self o other``."""
        F = self.field
        return RepMorphism(other.source, self.target,
                           {v: F.matmul(self.maps[v], other.maps[v]) for v in self.maps})

    def __add__(self, other):
        F = self.field
        return RepMorphism(self.source, self.target,
                           {v: F.reduce(self.maps[v] + other.maps[v]) for v in self.maps})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "RepMorphism":
        F = self.field
        c = F.elem(c)
        return RepMorphism(self.source, self.target, {v: F.reduce(m * c) for v, m in self.maps.items()})

    def is_zero(self) -> bool:
        return all(not np.any(m) for m in self.maps.values())

    def is_morphism(self) -> bool:
        F = self.field
        for a in self.algebra.quiver.arrows:
            lhs = F.matmul(self.target.maps[a.name], self.maps[a.source])
            rhs = F.matmul(self.maps[a.target], self.source.maps[a.name])
            if not F.equal(lhs, rhs):
                return False
        return True

    def is_iso(self) -> bool:
        F = self.field
        for v, m in self.maps.items():
            if m.shape[0] != m.shape[1] or F.rank(m) != m.shape[0]:
                return False
        return True

    def inverse(self) -> "RepMorphism":
        F = self.field
        return RepMorphism(self.target, self.source, {v: F.inv(m) for v, m in self.maps.items()})

    def total_matrix(self) -> np.ndarray:
        return block_diag(self.field, [self.maps[v] for v in self.algebra.vertices])

    def vector(self) -> np.ndarray:
        """All entries, vertex by vertex, row-major."""
        F = self.field
        parts = [self.maps[v].reshape(-1) for v in self.algebra.vertices]
        return np.concatenate(parts) if parts else F.zeros(0)

    def __repr__(self):
        return f"<RepMorphism {self.source!r} -> {self.target!r}>"


def identity(M: Representation) -> RepMorphism:
    return RepMorphism(M, M, {v: M.field.eye(M.dims[v]) for v in M.algebra.vertices})


def zero_map(M: Representation, N: Representation) -> RepMorphism:
    return RepMorphism(M, N)


def zero_rep(A: BoundQuiverAlgebra) -> Representation:
    return Representation(A, {})


def morphism_from_vector(M: Representation, N: Representation, vec: np.ndarray) -> RepMorphism:
    maps, pos = {}, 0
    for v in M.algebra.vertices:
        r, c = N.dims[v], M.dims[v]
        maps[v] = vec[pos : pos + r * c].reshape(r, c)
        pos += r * c
    return RepMorphism(M, N, maps)


# -- Hom ---------------------------------------------------------------------

def hom_space(M: Representation, N: Representation) -> list[RepMorphism]:
    """A basis of ``Hom(M, N)``, solving the intertwining equations."""
    if M.algebra is not N.algebra:
        raise AlgebraMismatch("modules over different algebras")
    if M.tops is not None:
        return _hom_from_projective(M, N)
    A = M.algebra
    F = M.field
    offs, pos = {}, 0
    for v in A.vertices:
        offs[v] = pos
        pos += N.dims[v] * M.dims[v]
    n_unknowns = pos
    if n_unknowns == 0:
        return []
    blocks = []
    for a in A.quiver.arrows:
        v, w = a.source, a.target
        rows = N.dims[w] * M.dims[v]
        if rows == 0:
            continue
        eq = F.zeros(rows, n_unknowns)
        # N(a) f_v - f_w M(a) = 0, row-major vectorisation
        if N.dims[v]:
            eq[:, offs[v] : offs[v] + N.dims[v] * M.dims[v]] = F.kron(N.maps[a.name], F.eye(M.dims[v]))
        if M.dims[w]:
            sl = slice(offs[w], offs[w] + N.dims[w] * M.dims[w])
            eq[:, sl] = F.reduce(eq[:, sl] - F.kron(F.eye(N.dims[w]), M.maps[a.name].T))
        blocks.append(eq)
    if blocks:
        basis = F.nullspace(np.concatenate(blocks, axis=0))
    else:
        basis = F.eye(n_unknowns)
    return [morphism_from_vector(M, N, basis[:, k]) for k in range(basis.shape[1])]


def _hom_from_projective(P: Representation, N: Representation) -> list[RepMorphism]:
    """Yoneda: a map out of a standard projective is fixed by the images of its tops."""
    A = P.algebra
    F = P.field
    layout = projective_layout(A, P.tops)
    out = []
    for k, v in enumerate(P.tops):
        for e in range(N.dims[v]):
            maps = {}
            for w in A.vertices:
                m = F.zeros(N.dims[w], P.dims[w])
                for col, (kk, idx) in enumerate(layout[w]):
                    if kk == k:
                        m[:, col] = N.path_matrix(idx)[:, e]
                maps[w] = m
            out.append(RepMorphism(P, N, maps))
    return out


def hom_dim(M: Representation, N: Representation) -> int:
    return len(hom_space(M, N))


# -- standard modules ----------------------------------------------------------

def projective_layout(A: BoundQuiverAlgebra, tops: Sequence[str]) -> dict[str, list[tuple[int, int]]]:
    return {w: [(k, idx) for k, v in enumerate(tops) for idx in A.paths(v, w)] for w in A.vertices}


def projective_rep(A: BoundQuiverAlgebra, tops: Sequence[str], name: str = "") -> Representation:
    """The standard projective ``P(tops[0]) + P(tops[1]) + ...``."""
    F = A.field
    layout = projective_layout(A, tops)
    pos = {w: {key: i for i, key in enumerate(layout[w])} for w in A.vertices}
    maps = {}
    for a in A.quiver.arrows:
        m = F.zeros(len(layout[a.target]), len(layout[a.source]))
        arrow_idx = A.index.get(Path(a.source, (a.name,), a.target))
        for col, (k, idx) in enumerate(layout[a.source]):
            if arrow_idx is None:
                break
            prod = A.mult[arrow_idx, idx]
            for j in np.flatnonzero(prod):
                m[pos[a.target][(k, int(j))], col] = prod[j]
        maps[a.name] = m
    dims = {w: len(layout[w]) for w in A.vertices}
    return Representation(A, dims, maps, tops=tuple(tops), name=name or "+".join(f"P({v})" for v in tops))


def regular_module(A: BoundQuiverAlgebra) -> Representation:
    return projective_rep(A, list(A.vertices), name="A")


def simple_rep(A: BoundQuiverAlgebra, v: str) -> Representation:
    return Representation(A, {v: 1}, name=f"S({v})")


def injective_rep(A: BoundQuiverAlgebra, tops: Sequence[str], name: str = "") -> Representation:
    """``I(tops[0]) + ...``, the dual of projectives over the opposite algebra."""
    M = dualize(projective_rep(A.opposite(), tops))
    M.name = name or "+".join(f"I({v})" for v in tops)
    return M


def injective_cogenerator(A: BoundQuiverAlgebra) -> Representation:
    return injective_rep(A, list(A.vertices), name="DA")


@dataclass
class StandardModules:
    simples: dict[str, Representation]
    projectives: dict[str, Representation]
    injectives: dict[str, Representation]


def standard_modules(A: BoundQuiverAlgebra) -> StandardModules:
    return StandardModules(
        simples={v: simple_rep(A, v) for v in A.vertices},
        projectives={v: projective_rep(A, [v]) for v in A.vertices},
        injectives={v: injective_rep(A, [v]) for v in A.vertices},
    )


# -- duality ---------------------------------------------------------------------

def dualize(M: Representation) -> Representation:
    """Vertexwise dual over the opposite algebra (arrow matrices transposed)."""
    op = M.algebra.opposite()
    return Representation(op, M.dims, {a: m.T.copy() for a, m in M.maps.items()},
                          name=f"D({M.name})" if M.name else "")


def dualize_morphism(f: RepMorphism, source: Representation | None = None,
                     target: Representation | None = None) -> RepMorphism:
    """``D f: D(target) -> D(source)``."""
    src = source if source is not None else dualize(f.target)
    tgt = target if target is not None else dualize(f.source)
    return RepMorphism(src, tgt, {v: m.T.copy() for v, m in f.maps.items()})


# -- sums, sub- and quotient modules -----------------------------------------------

def direct_sum(reps: Sequence[Representation], name: str = "") -> Representation:
    if not reps:
        raise ValueError("empty direct sum needs an algebra; use zero_rep")
    A = reps[0].algebra
    F = A.field
    dims = {v: sum(r.dims[v] for r in reps) for v in A.vertices}
    maps = {a.name: block_diag(F, [r.maps[a.name] for r in reps]) for a in A.quiver.arrows}
    tops = None
    if all(r.tops is not None for r in reps):
        # concatenating standard layouts summand by summand is again standard
        tops = tuple(t for r in reps for t in r.tops)
    return Representation(A, dims, maps, tops=tops, name=name or "+".join(r.name for r in reps if r.name))


def inclusions(reps: Sequence[Representation], total: Representation) -> list[RepMorphism]:
    F = total.field
    out = []
    start = {v: 0 for v in total.algebra.vertices}
    for r in reps:
        maps = {}
        for v in total.algebra.vertices:
            m = F.zeros(total.dims[v], r.dims[v])
            m[start[v] : start[v] + r.dims[v], :] = F.eye(r.dims[v])
            maps[v] = m
            start[v] += r.dims[v]
        out.append(RepMorphism(r, total, maps))
    return out


def projections(reps: Sequence[Representation], total: Representation) -> list[RepMorphism]:
    return [RepMorphism(total, i.source, {v: m.T.copy() for v, m in i.maps.items()})
            for i in inclusions(reps, total)]


def direct_sum_morphism(fs: Sequence[RepMorphism], source=None, target=None) -> RepMorphism:
    src = source or direct_sum([f.source for f in fs])
    tgt = target or direct_sum([f.target for f in fs])
    F = src.field
    return RepMorphism(src, tgt, {v: block_diag(F, [f.maps[v] for f in fs]) for v in src.algebra.vertices})


def subrep(M: Representation, bases: Mapping[str, np.ndarray], name: str = "") -> tuple[Representation, RepMorphism]:
    """Submodule spanned vertexwise by the (independent) columns of ``bases``."""
    A = M.algebra
    F = M.field
    dims = {v: bases[v].shape[1] for v in A.vertices}
    maps = {}
    for a in A.quiver.arrows:
        img = F.matmul(M.maps[a.name], bases[a.source])
        maps[a.name] = F.solve(bases[a.target], img) if dims[a.target] else F.zeros(0, dims[a.source])
    S = Representation(A, dims, maps, name=name)
    return S, RepMorphism(S, M, {v: bases[v] for v in A.vertices})


def quotient(M: Representation, bases: Mapping[str, np.ndarray], name: str = "") -> tuple[Representation, RepMorphism]:
    """``M / U`` for the submodule spanned by ``bases``; returns the projection too."""
    A = M.algebra
    F = M.field
    forms = {v: F.left_annihilator(bases[v], M.dims[v]) for v in A.vertices}
    dims = {v: forms[v].shape[0] for v in A.vertices}
    maps = {}
    for a in A.quiver.arrows:
        v, w = a.source, a.target
        # forms[w] M(a) = X forms[v]
        rhs = F.matmul(forms[w], M.maps[a.name])
        if dims[v] == 0:
            maps[a.name] = F.zeros(dims[w], 0)
        else:
            maps[a.name] = F.solve(forms[v].T, rhs.T).T
    Qt = Representation(A, dims, maps, name=name)
    return Qt, RepMorphism(M, Qt, forms)


def kernel(f: RepMorphism) -> tuple[Representation, RepMorphism]:
    F = f.field
    return subrep(f.source, {v: F.nullspace(m) if m.shape[1] else F.zeros(0, 0) for v, m in f.maps.items()})


def image_bases(f: RepMorphism) -> dict[str, np.ndarray]:
    F = f.field
    return {v: F.colspace(m) if m.size else F.zeros(m.shape[0], 0) for v, m in f.maps.items()}


def image(f: RepMorphism) -> tuple[Representation, RepMorphism]:
    return subrep(f.target, image_bases(f))


def cokernel(f: RepMorphism) -> tuple[Representation, RepMorphism]:
    return quotient(f.target, image_bases(f))


def radical_bases(M: Representation) -> dict[str, np.ndarray]:
    """Vertexwise bases of ``rad M``, the sum of the images of all arrows."""
    A = M.algebra
    F = M.field
    out = {}
    for v in A.vertices:
        cols = [M.maps[a.name] for a in A.quiver.arrows if a.target == v and M.maps[a.name].size]
        if cols:
            out[v] = F.colspace(np.concatenate(cols, axis=1))
        else:
            out[v] = F.zeros(M.dims[v], 0)
    return out

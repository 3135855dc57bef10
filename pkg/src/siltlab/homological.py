"""Projective covers, minimal resolutions, projective dimension and Ext."""
from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from .algebra import BoundQuiverAlgebra
from .errors import ExceedsCapError
from .modules import (Representation, RepMorphism, dualize, dualize_morphism, hom_space,
                      projective_layout, projective_rep, radical_bases, simple_rep, kernel)

DEFAULT_CAP = 32


def default_cap() -> int:
    """Resolution cap, overridable through ``SILTLAB_CAP``."""
    env = os.environ.get("SILTLAB_CAP")
    return int(env) if env else DEFAULT_CAP


@dataclass(frozen=True)
class ExceedsCap:
    """Marker returned when a dimension is larger than the cap (possibly infinite)."""

    cap: int

    def __str__(self):
        return f"ExceedsCap({self.cap})"


def top_generators(M: Representation) -> dict[str, np.ndarray]:
    """Per vertex, columns spanning a complement of ``rad M``."""
    F = M.field
    rad = radical_bases(M)
    return {v: F.complement(rad[v], M.dims[v]) for v in M.algebra.vertices}


def projective_cover(M: Representation) -> RepMorphism:
    """Minimal epimorphism from a standard projective onto ``M``."""
    A = M.algebra
    F = M.field
    gens = top_generators(M)
    tops, vecs = [], []
    for v in A.vertices:
        for k in range(gens[v].shape[1]):
            tops.append(v)
            vecs.append(gens[v][:, k])
    P = projective_rep(A, tops)
    layout = projective_layout(A, tops)
    maps = {}
    for w in A.vertices:
        m = F.zeros(M.dims[w], P.dims[w])
        for col, (k, idx) in enumerate(layout[w]):
            m[:, col] = F.matmul(M.path_matrix(idx), vecs[k].reshape(-1, 1)).reshape(-1)
        maps[w] = m
    return RepMorphism(P, M, maps)


@dataclass
class Resolution:
    """``... -> terms[1] -> terms[0] -> resolved -> 0``.

    ``maps[0]`` is the augmentation ``terms[0] -> resolved`` and ``maps[k]``
    for ``k >= 1`` is the differential ``terms[k] -> terms[k-1]``.
    """

    resolved: Representation
    terms: list[Representation] = field(default_factory=list)
    maps: list[RepMorphism] = field(default_factory=list)
    complete: bool = False

    @property
    def length(self) -> int | None:
        if not self.complete:
            return None
        return max(len([t for t in self.terms if t.dim]) - 1, 0)


def min_proj_resolution(M: Representation, cap: int | None = None, steps: int | None = None) -> Resolution:
    """Minimal projective resolution, computed for at most ``steps`` terms beyond the cover.

    The result is ``complete`` when the last kernel vanished within ``cap`` steps.
    """
    cap = default_cap() if cap is None else cap
    limit = cap if steps is None else min(cap, steps)
    res = Resolution(M)
    if M.dim == 0:
        res.complete = True
        return res
    target = M
    prev_inclusion = None
    for k in range(limit + 1):
        cover = projective_cover(target)
        res.terms.append(cover.source)
        res.maps.append(cover if prev_inclusion is None else prev_inclusion.compose(cover))
        K, inc = kernel(cover)
        if K.dim == 0:
            res.complete = True
            return res
        target, prev_inclusion = K, inc
    return res


def pd(M: Representation, cap: int | None = None) -> int | ExceedsCap:
    cap = default_cap() if cap is None else cap
    res = min_proj_resolution(M, cap)
    if not res.complete:
        return ExceedsCap(cap)
    return res.length


def injdim(M: Representation, cap: int | None = None) -> int | ExceedsCap:
    return pd(dualize(M), cap)


def is_projective(M: Representation) -> bool:
    return projective_cover(M).source.dim == M.dim


def is_injective(M: Representation) -> bool:
    return is_projective(dualize(M))


def global_dimension(A: BoundQuiverAlgebra, cap: int | None = None) -> int | ExceedsCap:
    cap = default_cap() if cap is None else cap
    best = 0
    for v in A.vertices:
        d = pd(simple_rep(A, v), cap)
        if isinstance(d, ExceedsCap):
            return d
        best = max(best, d)
    return best


# -- Ext ---------------------------------------------------------------------------

def _yoneda_coords(f: RepMorphism) -> np.ndarray:
    """Coordinates of a map out of a standard projective: images of its tops."""
    P = f.source
    A = P.algebra
    layout = projective_layout(A, P.tops)
    parts = []
    for k, v in enumerate(P.tops):
        col = layout[v].index((k, A.idempotent(v)))
        parts.append(f.maps[v][:, col])
    return np.concatenate(parts) if parts else f.field.zeros(0)


def _coboundary(d: RepMorphism, N: Representation) -> np.ndarray:
    """Matrix of ``Hom(d.target, N) -> Hom(d.source, N)``, ``g -> g d``."""
    F = N.field
    basis = hom_space(d.target, N)
    cols = [_yoneda_coords(g.compose(d)) for g in basis]
    n_out = sum(N.dims[v] for v in d.source.tops)
    if not cols:
        return F.zeros(n_out, 0)
    return np.stack(cols, axis=1).astype(F.dtype)


def _rank(F, m: np.ndarray) -> int:
    return F.rank(m) if m.size else 0


def ext_dim(M: Representation, N: Representation, j: int, cap: int | None = None) -> int:
    """``dim Ext^j(M, N)`` from a minimal projective resolution of ``M``."""
    if j < 0:
        raise ValueError("negative Ext degree")
    cap = default_cap() if cap is None else cap
    if j > cap:
        raise ExceedsCapError(f"degree {j} beyond cap {cap}")
    F = M.field
    res = min_proj_resolution(M, cap, steps=j + 1)
    if j >= len(res.terms):
        if res.complete:
            return 0
        raise ExceedsCapError(f"resolution shorter than {j + 1} terms within cap {cap}")
    dim_hom = sum(N.dims[v] for v in res.terms[j].tops)
    # delta^j : Hom(P_j, N) -> Hom(P_{j+1}, N)
    rank_out = _rank(F, _coboundary(res.maps[j + 1], N)) if j + 1 < len(res.terms) else 0
    rank_in = _rank(F, _coboundary(res.maps[j], N)) if j >= 1 else 0
    return dim_hom - rank_out - rank_in


def injective_coresolution(N: Representation, cap: int | None = None, steps: int | None = None):
    """``0 -> N -> I^0 -> I^1 -> ...`` by dualizing a projective resolution of ``D N``."""
    res = min_proj_resolution(dualize(N), cap, steps)
    terms = [dualize(P) for P in res.terms]
    maps = []
    for k, d in enumerate(res.maps):
        src = N if k == 0 else terms[k - 1]
        maps.append(dualize_morphism(d, source=src, target=terms[k]))
    return terms, maps, res.complete


def ext_dim_via_injectives(M: Representation, N: Representation, j: int, cap: int | None = None) -> int:
    """``dim Ext^j(M, N)`` from an injective coresolution of ``N`` (independent route)."""
    cap = default_cap() if cap is None else cap
    F = M.field
    terms, maps, complete = injective_coresolution(N, cap, steps=j + 1)
    if j >= len(terms):
        if complete:
            return 0
        raise ExceedsCapError(f"coresolution shorter than {j + 1} terms within cap {cap}")

    def cochain(k):
        # Hom(M, I^k) -> Hom(M, I^{k+1})
        src = hom_space(M, terms[k])
        tgt = hom_space(M, terms[k + 1])
        if not src:
            return F.zeros(len(tgt), 0)
        if not tgt:
            return F.zeros(0, len(src))
        tb = np.stack([g.vector() for g in tgt], axis=1).astype(F.dtype)
        img = np.stack([maps[k + 1].compose(g).vector() for g in src], axis=1).astype(F.dtype)
        return F.solve(tb, img)

    dim_hom = len(hom_space(M, terms[j]))
    rank_out = _rank(F, cochain(j)) if j + 1 < len(terms) else 0
    rank_in = _rank(F, cochain(j - 1)) if j >= 1 else 0
    return dim_hom - rank_out - rank_in

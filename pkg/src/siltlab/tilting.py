"""Left approximations by additive closures and the tilting/cotilting predicates."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .decompose import decompose, rep_endo_radical
from .homological import ExceedsCap, ext_dim, pd
from .modules import (Representation, RepMorphism, cokernel, direct_sum, dualize, dualize_morphism,
                      hom_space, regular_module, zero_rep)


@dataclass
class AddClosure:
    """Indecomposable summands of a module with the radicals of their endomorphism rings."""

    parts: list[Representation]
    radicals: list[list[RepMorphism]]
    ends: list[list[RepMorphism]]

    @classmethod
    def of(cls, M: Representation, seed: int = 0) -> "AddClosure":
        parts = [X for X, _ in decompose(M, seed)]
        return cls(parts, [rep_endo_radical(X) for X in parts], [hom_space(X, X) for X in parts])


def left_approximation(X: Representation, add: AddClosure) -> RepMorphism:
    """Minimal left ``add``-approximation ``X -> M'``."""
    A = X.algebra
    F = X.field
    homs = [hom_space(X, Mi) for Mi in add.parts]
    copies: list[Representation] = []
    comps: list[RepMorphism] = []
    for i, Mi in enumerate(add.parts):
        if not homs[i]:
            continue
        span = [r.compose(h).vector() for r in add.radicals[i] for h in homs[i]]
        for j, Mj in enumerate(add.parts):
            if j != i and homs[j]:
                span += [g.compose(h).vector() for g in hom_space(Mj, Mi) for h in homs[j]]
        for h in homs[i]:
            cols = np.stack(span, axis=1).astype(F.dtype) if span else F.zeros(h.vector().size, 0)
            if F.in_span(cols, h.vector()):
                continue
            copies.append(Mi)
            comps.append(h)
            span += [e.compose(h).vector() for e in add.ends[i]]
    if not copies:
        return RepMorphism(X, zero_rep(A))
    target = direct_sum(copies)
    maps = {v: np.concatenate([c.maps[v] for c in comps], axis=0) if target.dims[v] else F.zeros(0, X.dims[v])
            for v in A.vertices}
    return RepMorphism(X, target, maps)


def is_injective_map(f: RepMorphism) -> bool:
    F = f.field
    return all(F.rank(m) == m.shape[1] for m in f.maps.values() if m.shape[1])


@dataclass
class TiltingReport:
    verdict: bool
    stage: str
    pd: int | ExceedsCap | None = None
    coresolution: list[RepMorphism] = field(default_factory=list)

    def __bool__(self):
        return self.verdict


def is_tilting(M: Representation, d: int, cap: int | None = None, seed: int = 0) -> TiltingReport:
    """Projective dimension at most ``d``, no self-extensions, and ``A`` has an
    ``add(M)``-coresolution with at most ``d + 1`` terms.

    The certificate lists the maps ``A -> M_0``, ``C_1 -> M_1``, ... where
    ``C_k`` is the cokernel of the previous map.
    """
    p = pd(M, cap)
    if isinstance(p, ExceedsCap) or p > d:
        return TiltingReport(False, "projective-dimension", p)
    for i in range(1, d + 1):
        if ext_dim(M, M, i, cap):
            return TiltingReport(False, f"self-extension-{i}", p)
    add = AddClosure.of(M, seed)
    X = regular_module(M.algebra)
    steps: list[RepMorphism] = []
    for _ in range(d + 1):
        phi = left_approximation(X, add)
        steps.append(phi)
        if not is_injective_map(phi):
            return TiltingReport(False, "approximation-not-injective", p, steps)
        X = cokernel(phi)[0]
        if X.dim == 0:
            return TiltingReport(True, "coresolution", p, steps)
    return TiltingReport(False, "coresolution-too-long", p, steps)


def is_cotilting(M: Representation, d: int, cap: int | None = None, seed: int = 0) -> TiltingReport:
    """Dual of :func:`is_tilting`; the certificate ends in the injective cogenerator."""
    rep = is_tilting(dualize(M), d, cap, seed)
    rep.coresolution = [dualize_morphism(f) for f in reversed(rep.coresolution)]
    return rep

"""Complexes of length ``n`` as modules over a bound quiver algebra, and back.

For a base algebra ``A`` and ``n >= 1``, :func:`complex_algebra` builds the algebra
whose representations are sequences ``M(-n+1) -> ... -> M(0)`` of ``A``-modules with
consecutive composites zero.  Vertices are named ``"v|j"``; copies of the base
arrows ``"a|j"`` run inside column ``j`` and ``"b_v|j"`` goes from ``v|j`` to
``v|j+1``.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .algebra import BoundQuiverAlgebra, Quiver, Relation, build_algebra
from .complexes import ChainComplex, HomComplex, hom_dim, identity_map, random_complex
from .decompose import decompose
from .errors import HypothesisUnmet, IndexOutOfRange, NotInRepP, NotNSilting, NotTilting, SupportOutOfRange
from .homological import ExceedsCap, ext_dim, injdim, is_injective, is_projective, pd
from .minimal import minimal_model
from .modules import (Representation, RepMorphism, direct_sum, injective_cogenerator, injective_rep, projective_rep,
                      regular_module)
from .silting import is_n_silting
from .tilting import is_tilting


def vertex_name(v: str, j: int) -> str:
    return f"{v}|{j}"


def horizontal_name(v: str, j: int) -> str:
    return f"b_{v}|{j}"


@dataclass
class ComplexAlgebra:
    base: BoundQuiverAlgebra
    n: int
    algebra: BoundQuiverAlgebra
    vertex_map: dict[tuple[str, int], str] = field(default_factory=dict)

    @property
    def columns(self) -> range:
        return range(-self.n + 1, 1)

    def sidecar(self) -> dict:
        return {"n": self.n,
                "vertexMap": [[v, j, name] for (v, j), name in sorted(self.vertex_map.items(),
                                                                      key=lambda kv: (kv[0][1], kv[0][0]))]}


def complex_algebra(A: BoundQuiverAlgebra, n: int) -> ComplexAlgebra:
    """The algebra of length-``n`` complexes of ``A``-modules."""
    if n < 1:
        raise ValueError("n must be positive")
    cols = list(range(-n + 1, 1))
    vertices = [vertex_name(v, j) for j in cols for v in A.vertices]
    arrows = []
    for j in cols:
        for a in A.quiver.arrows:
            arrows.append((f"{a.name}|{j}", vertex_name(a.source, j), vertex_name(a.target, j)))
    for j in cols[:-1]:
        for v in A.vertices:
            arrows.append((horizontal_name(v, j), vertex_name(v, j), vertex_name(v, j + 1)))
    rels = []
    for j in cols:
        for r in A.relations:
            rels.append(Relation(tuple((c, tuple(f"{a}|{j}" for a in p)) for c, p in r.terms)))
    for j in cols[:-1]:
        for a in A.quiver.arrows:
            rels.append(Relation(((1, (f"{a.name}|{j}", horizontal_name(a.target, j))),
                                  (-1, (horizontal_name(a.source, j), f"{a.name}|{j + 1}")))))
    for j in cols[:-2]:
        for v in A.vertices:
            rels.append(Relation(((1, (horizontal_name(v, j), horizontal_name(v, j + 1))),)))
    name = f"{A.name or 'A'}Q{n}"
    B = build_algebra(A.field, Quiver.make(vertices, arrows), rels, name=name)
    vmap = {(v, j): vertex_name(v, j) for j in cols for v in A.vertices}
    return ComplexAlgebra(A, n, B, vmap)


# -- conversions -----------------------------------------------------------------------

def column(B: ComplexAlgebra, M: Representation, j: int) -> Representation:
    A = B.base
    dims = {v: M.dims[vertex_name(v, j)] for v in A.vertices}
    maps = {a.name: M.maps[f"{a.name}|{j}"] for a in A.quiver.arrows}
    return Representation(A, dims, maps)


def to_complex(B: ComplexAlgebra, M: Representation) -> ChainComplex:
    """Columns become degrees and horizontal maps become differentials."""
    A = B.base
    terms = {j: column(B, M, j) for j in B.columns}
    diffs = {}
    for j in B.columns[:-1]:
        diffs[j] = RepMorphism(terms[j], terms[j + 1],
                               {v: M.maps[horizontal_name(v, j)] for v in A.vertices})
    return ChainComplex(A, terms, diffs)


def from_complex(B: ComplexAlgebra, X: ChainComplex) -> Representation:
    """Inverse of :func:`to_complex` on complexes supported in ``[-n+1, 0]``."""
    if not X.is_zero() and (X.lo < -B.n + 1 or X.hi > 0):
        raise SupportOutOfRange(f"support [{X.lo}, {X.hi}] not inside [{-B.n + 1}, 0]")
    A = B.base
    F = A.field
    dims, maps = {}, {}
    for j in B.columns:
        M = X.term(j)
        for v in A.vertices:
            dims[vertex_name(v, j)] = M.dims[v]
        for a in A.quiver.arrows:
            maps[f"{a.name}|{j}"] = M.maps[a.name]
    for j in B.columns[:-1]:
        d = X.diff(j)
        for v in A.vertices:
            maps[horizontal_name(v, j)] = d.maps[v] if d.maps[v].size else F.zeros(X.term(j + 1).dims[v], X.term(j).dims[v])
    return Representation(B.algebra, dims, maps)


def make_special(B: ComplexAlgebra, X: Representation, j: int, flavor: str = "lower") -> Representation:
    """``X`` placed in degrees ``j, j+1`` (lower) or ``j-1, j`` (upper) with identity
    differential; a stalk at the boundary column (``j = 0`` lower, ``j = -n+1`` upper)."""
    if j not in B.columns:
        raise IndexOutOfRange(f"column {j} outside [{-B.n + 1}, 0]")
    if flavor == "lower":
        degs = [j] if j == 0 else [j, j + 1]
    elif flavor == "upper":
        degs = [j] if j == -B.n + 1 else [j - 1, j]
    else:
        raise ValueError("flavor must be 'lower' or 'upper'")
    terms = {d: X for d in degs}
    diffs = {}
    if len(degs) == 2:
        diffs[degs[0]] = RepMorphism(X, X, {v: X.field.eye(X.dims[v]) for v in X.algebra.vertices})
    return from_complex(B, ChainComplex(X.algebra, terms, diffs))


def canonical_tilting(B: ComplexAlgebra) -> Representation:
    """Sum of the upper objects of the regular module over all columns."""
    A = regular_module(B.base)
    return direct_sum([make_special(B, A, j, "upper") for j in B.columns])


def canonical_cotilting(B: ComplexAlgebra) -> Representation:
    """Sum of the lower objects of the injective cogenerator over all columns."""
    E = injective_cogenerator(B.base)
    return direct_sum([make_special(B, E, j, "lower") for j in B.columns])


def random_rep_p(B: ComplexAlgebra, rng: np.random.Generator, max_tops: int = 2) -> Representation:
    """Random object with projective columns."""
    A = B.base
    terms = {j: projective_rep(A, [str(v) for v in rng.choice(A.vertices, size=rng.integers(0, max_tops + 1))])
             for j in B.columns}
    return from_complex(B, random_complex(terms, rng))


def random_rep_i(B: ComplexAlgebra, rng: np.random.Generator, max_tops: int = 2) -> Representation:
    """Random object with injective columns."""
    A = B.base
    terms = {j: injective_rep(A, [str(v) for v in rng.choice(A.vertices, size=rng.integers(0, max_tops + 1))])
             for j in B.columns}
    return from_complex(B, random_complex(terms, rng))


# -- classification ------------------------------------------------------------------------

def in_rep_p(B: ComplexAlgebra, M: Representation) -> bool:
    return all(is_projective(column(B, M, j)) for j in B.columns)


def in_rep_i(B: ComplexAlgebra, M: Representation) -> bool:
    return all(is_injective(column(B, M, j)) for j in B.columns)


def is_contractible(B: ComplexAlgebra, M: Representation) -> bool:
    X = to_complex(B, M)
    if X.is_zero():
        return True
    return HomComplex(X, X).is_null_homotopic(identity_map(X))


def _nonzero_columns(B: ComplexAlgebra, M: Representation) -> list[int]:
    return [j for j in B.columns if column(B, M, j).dim]


def predicted_pd(B: ComplexAlgebra, M: Representation) -> int | None:
    """``-j`` for the leftmost nonzero column ``j <= -1`` (objects of the projective-terms
    part without projective summands); ``None`` when that does not apply."""
    cols = [j for j in _nonzero_columns(B, M) if j <= -1]
    return -min(cols) if cols else None


def predicted_injdim(B: ComplexAlgebra, M: Representation) -> int | None:
    cols = [j for j in _nonzero_columns(B, M) if j >= -B.n + 2]
    return B.n - 1 + max(cols) if cols else None


@dataclass
class RepClassification:
    is_projective: bool
    is_injective: bool
    is_contractible: bool
    in_rep_p: bool
    in_rep_i: bool
    contractible_projective: bool
    contractible_injective: bool
    pd: int | ExceedsCap
    injdim: int | ExceedsCap
    pd_formula: int | None = None
    injdim_formula: int | None = None

    def as_dict(self) -> dict:
        """camelCase keys; capped dimensions as strings."""
        out = {}
        for k, v in self.__dict__.items():
            head, *rest = k.split("_")
            key = head + "".join(w.upper() if w in ("p", "i") else w.capitalize() for w in rest)
            out[key] = str(v) if isinstance(v, ExceedsCap) else v
        return out


def strip_summands(M: Representation, drop) -> Representation | None:
    """``M`` without the indecomposable summands satisfying ``drop``."""
    keep = []
    for X, m in decompose(M):
        if not drop(X):
            keep.extend([X] * m)
    return direct_sum(keep) if keep else None


def classify(B: ComplexAlgebra, M: Representation, cap: int | None = None) -> RepClassification:
    proj = is_projective(M)
    inj = is_injective(M)
    contr = is_contractible(B, M)
    rp, ri = in_rep_p(B, M), in_rep_i(B, M)
    out = RepClassification(
        is_projective=proj, is_injective=inj, is_contractible=contr, in_rep_p=rp, in_rep_i=ri,
        contractible_projective=proj and contr, contractible_injective=inj and contr,
        pd=pd(M, cap), injdim=injdim(M, cap))
    if rp and not any(is_projective(X) for X, _ in decompose(M)):
        out.pd_formula = predicted_pd(B, M)
    if ri and not any(is_injective(X) for X, _ in decompose(M)):
        out.injdim_formula = predicted_injdim(B, M)
    return out


# -- the correspondence ------------------------------------------------------------------------

def silting_to_tilting(B: ComplexAlgebra, X: ChainComplex) -> Representation:
    """Module of the minimal model of an ``n``-silting complex, plus one copy of each
    contractible projective ``A_j`` (``j < 0``)."""
    if X.algebra is not B.base:
        raise NotNSilting("complex lives over another algebra")
    if not is_n_silting(X, B.n):
        raise NotNSilting(f"complex is not {B.n}-silting")
    M = from_complex(B, minimal_model(X, certificate=False).complex)
    A = regular_module(B.base)
    extra = [make_special(B, A, j, "lower") for j in B.columns if j < 0]
    return direct_sum([M] + extra)


def tilting_to_silting(B: ComplexAlgebra, T: Representation, check: bool = True) -> ChainComplex:
    if not in_rep_p(B, T):
        raise NotInRepP("some column is not projective")
    if check and not is_tilting(T, B.n - 1).verdict:
        raise NotTilting(f"module is not {B.n - 1}-tilting")
    return minimal_model(to_complex(B, T), certificate=False).complex


@dataclass
class ExtTransport:
    ext: int
    hom: int
    hypothesis_met: bool

    @property
    def agree(self) -> bool:
        return self.ext == self.hom


def ext_transport(B: ComplexAlgebra, M: Representation, N: Representation, j: int,
                  cap: int | None = None) -> ExtTransport:
    """``dim Ext^j(M, N)`` over the complex algebra next to ``dim Hom(M, N[j])`` between the
    associated complexes in the homotopy category.

    For ``j > 0`` the two agree when ``M`` has projective columns or ``N`` has injective
    columns.  For ``j = 0`` the comparison is with all chain maps (not modulo homotopy),
    which always agrees and needs no hypothesis.
    """
    X, Y = to_complex(B, M), to_complex(B, N)
    e = ext_dim(M, N, j, cap)
    if j == 0:
        return ExtTransport(e, len(HomComplex(X, Y).chain_maps(0)), True)
    met = in_rep_p(B, M) or in_rep_i(B, N)
    if not met:
        warnings.warn("neither projective columns on the left nor injective columns on the right",
                      HypothesisUnmet, stacklevel=2)
    return ExtTransport(e, hom_dim(X, Y, j), met)

"""Quivers, admissible relations and finite-dimensional bound quiver algebras.

Composition convention: the arrow sequence ``(a1, ..., al)`` applies ``a1``
first, and the product ``p * q`` of two paths means "first ``q``, then ``p``".
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import MalformedRelation, NotFiniteDimensional
from .linalg import Field, PrimeField

DEFAULT_LENGTH_CAP = 64


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow names")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise ValueError(f"arrow {a.name} has an unknown endpoint")

    @classmethod
    def make(cls, vertices: Iterable[str], arrows: Iterable[Sequence[str]]) -> "Quiver":
        return cls(tuple(str(v) for v in vertices), tuple(Arrow(*map(str, a)) for a in arrows))

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise KeyError(name)

    def reversed(self) -> "Quiver":
        return Quiver(self.vertices, tuple(Arrow(a.name, a.target, a.source) for a in self.arrows))


@dataclass(frozen=True)
class Path:
    """A path given by its start vertex and arrow names (first arrow applied first)."""

    source: str
    arrows: tuple[str, ...] = ()
    target: str = ""

    def __len__(self):
        return len(self.arrows)

    def __str__(self):
        if not self.arrows:
            return f"e[{self.source}]"
        return "*".join(reversed(self.arrows))


@dataclass(frozen=True)
class Relation:
    """A linear combination of parallel paths of length at least two."""

    terms: tuple[tuple[object, tuple[str, ...]], ...]


def _paths_by_length(quiver: Quiver, max_len: int) -> list[list[Path]]:
    out = [[Path(v, (), v) for v in quiver.vertices]]
    outgoing: dict[str, list[Arrow]] = {v: [] for v in quiver.vertices}
    for a in quiver.arrows:
        outgoing[a.source].append(a)
    for _ in range(max_len):
        nxt = []
        for p in out[-1]:
            for a in outgoing[p.target]:
                nxt.append(Path(p.source, p.arrows + (a.name,), a.target))
        out.append(nxt)
    return out


def _sort_key(quiver: Quiver):
    vpos = {v: i for i, v in enumerate(quiver.vertices)}
    apos = {a.name: i for i, a in enumerate(quiver.arrows)}
    return lambda p: (len(p), vpos[p.source], vpos[p.target], tuple(apos[a] for a in p.arrows))


class BoundQuiverAlgebra:
    """``kQ/I`` with a computed path basis and structure constants.

    ``basis`` lists residue classes of paths, ``mult[i, j]`` is the coordinate
    vector of ``basis[i] * basis[j]`` (first ``basis[j]``, then ``basis[i]``).
    """

    def __init__(self, field: Field, quiver: Quiver, relations: Sequence[Relation],
                 basis: list[Path], normal_forms: dict, nilpotency: int, name: str = ""):
        self.field = field
        self.quiver = quiver
        self.relations = tuple(relations)
        self.basis = basis
        self.index = {p: i for i, p in enumerate(basis)}
        self.name = name
        self._normal_forms = normal_forms
        self._nilpotency = nilpotency
        self._opposite: BoundQuiverAlgebra | None = None
        self.vertex_index = {v: i for i, v in enumerate(quiver.vertices)}
        self.between: dict[tuple[str, str], list[int]] = {
            (s, t): [] for s in quiver.vertices for t in quiver.vertices}
        for i, p in enumerate(basis):
            self.between[(p.source, p.target)].append(i)
        self.mult = self._multiplication_table()
        self.mult.setflags(write=False)

    # -- basic data ----------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.quiver.vertices

    def idempotent(self, v: str) -> int:
        return self.index[Path(v, (), v)]

    def paths(self, source: str, target: str) -> list[int]:
        """Basis indices of paths from ``source`` to ``target``."""
        return self.between[(source, target)]

    def reduce_path(self, p: Path) -> np.ndarray:
        """Coordinates of an arbitrary path in the basis."""
        vec = self.field.zeros(self.dim)
        if len(p) >= self._nilpotency:
            return vec
        if p in self.index:
            vec[self.index[p]] = 1
            return vec
        for i, c in self._normal_forms.get(p, ()):
            vec[i] = c
        return vec

    def _multiplication_table(self) -> np.ndarray:
        d = self.dim
        m = np.zeros((d, d, d), dtype=self.field.dtype)
        for i, p in enumerate(self.basis):
            for j, q in enumerate(self.basis):
                if q.target != p.source:
                    continue
                prod = Path(q.source, q.arrows + p.arrows, p.target)
                m[i, j] = self.reduce_path(prod)
        return m

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Product of two elements given by coordinate vectors."""
        F = self.field
        if getattr(F, "p", 0) > 2**24:
            x, y = x.astype(object), y.astype(object)
        t = F.reduce(np.tensordot(x, self.mult, axes=([0], [0])))
        out = F.reduce(np.tensordot(y, t, axes=([0], [0])))
        return out.astype(F.dtype)

    def evaluate(self, rel: Relation) -> np.ndarray:
        F = self.field
        out = F.zeros(self.dim)
        for c, arrows in rel.terms:
            src = self.quiver.arrow(arrows[0]).source
            tgt = self.quiver.arrow(arrows[-1]).target
            out = F.reduce(out + F.elem(c) * self.reduce_path(Path(src, tuple(arrows), tgt)))
        return out

    # -- opposite ------------------------------------------------------
    def opposite(self) -> "BoundQuiverAlgebra":
        """Arrows and relation paths reversed.  ``A.opposite().opposite() is A``."""
        if self._opposite is None:
            rels = [Relation(tuple((c, tuple(reversed(p))) for c, p in r.terms)) for r in self.relations]
            op = build_algebra(self.field, self.quiver.reversed(), rels,
                               length_cap=max(self._nilpotency + 1, 2),
                               name=f"{self.name}^op" if self.name else "")
            op._opposite = self
            self._opposite = op
        return self._opposite

    def info(self) -> dict:
        return algebra_info(self)

    def __repr__(self):
        label = self.name or "algebra"
        return f"<{label} over {self.field}: {len(self.vertices)} vertices, dim {self.dim}>"


def _check_relation(quiver: Quiver, rel: Relation) -> tuple[str, str]:
    if not rel.terms:
        raise MalformedRelation("empty relation")
    ends = set()
    names = {a.name for a in quiver.arrows}
    for _, path in rel.terms:
        if len(path) < 2:
            raise MalformedRelation(f"relation path {path} has length < 2")
        for a in path:
            if a not in names:
                raise MalformedRelation(f"unknown arrow {a!r}")
        arrows = [quiver.arrow(a) for a in path]
        for x, y in zip(arrows, arrows[1:]):
            if x.target != y.source:
                raise MalformedRelation(f"path {path} is not composable")
        ends.add((arrows[0].source, arrows[-1].target))
    if len(ends) != 1:
        raise MalformedRelation("relation paths are not parallel")
    return ends.pop()


def build_algebra(field: Field, quiver: Quiver, relations: Sequence[Relation] = (),
                  length_cap: int = DEFAULT_LENGTH_CAP, name: str = "") -> BoundQuiverAlgebra:
    """Compute the path basis of ``kQ/I`` by row reduction, length by length.

    At level ``L`` the consequences ``u r w`` of the relations are reduced
    modulo paths longer than ``L``; once every path of length ``L`` is such a
    consequence, the ideal contains all paths of length ``L`` and the residue
    classes of the shorter surviving paths form the basis.
    """
    relations = [Relation(tuple((field.elem(c), tuple(p)) for c, p in r.terms)) for r in relations]
    ends = [_check_relation(quiver, r) for r in relations]
    key = _sort_key(quiver)

    for level in range(1, length_cap + 1):
        by_len = _paths_by_length(quiver, level)
        all_paths = [p for layer in by_len for p in layer]
        groups: dict[tuple[str, str], list[Path]] = {}
        for p in all_paths:
            groups.setdefault((p.source, p.target), []).append(p)
        into: dict[str, list[Path]] = {v: [] for v in quiver.vertices}
        outof: dict[str, list[Path]] = {v: [] for v in quiver.vertices}
        for p in all_paths:
            into[p.target].append(p)
            outof[p.source].append(p)

        # consequences u*r*w truncated at length `level`
        rows: dict[tuple[str, str], list[dict[Path, object]]] = {}
        for rel, (s, t) in zip(relations, ends):
            shortest = min(len(p) for _, p in rel.terms)
            for pre in into[s]:
                if len(pre) + shortest > level:
                    continue
                for post in outof[t]:
                    if len(pre) + shortest + len(post) > level:
                        continue
                    row: dict[Path, object] = {}
                    for c, arrows in rel.terms:
                        full = pre.arrows + arrows + post.arrows
                        if len(full) > level:
                            continue
                        p = Path(pre.source, full, post.target)
                        row[p] = field.reduce(np.array([row.get(p, 0) + c], dtype=field.dtype))[0]
                    rows.setdefault((pre.source, post.target), []).append(row)

        basis: list[Path] = []
        normal_forms: dict[Path, list] = {}
        survivors_at_top = False
        for (s, t), paths in groups.items():
            # longest paths first so that pivots eliminate long paths
            cols = sorted(paths, key=key, reverse=True)
            pos = {p: i for i, p in enumerate(cols)}
            cons = rows.get((s, t), [])
            pivots: list[int] = []
            red = None
            if cons:
                mat = field.zeros(len(cons), len(cols))
                for i, row in enumerate(cons):
                    for p, c in row.items():
                        mat[i, pos[p]] = c
                red, pivots = field.rref(mat)
            pivset = set(pivots)
            for i, p in enumerate(cols):
                if i not in pivset:
                    basis.append(p)
                    if len(p) == level:
                        survivors_at_top = True
            if red is not None:
                for r, pc in enumerate(pivots):
                    normal_forms[cols[pc]] = [
                        (cols[j], field.reduce(np.array([-red[r, j]], dtype=field.dtype))[0])
                        for j in range(len(cols)) if j not in pivset and red[r, j] != 0]
        if survivors_at_top:
            continue
        basis.sort(key=key)
        idx = {p: i for i, p in enumerate(basis)}
        nf = {p: [(idx[q], c) for q, c in terms] for p, terms in normal_forms.items()}
        alg = BoundQuiverAlgebra(field, quiver, relations, basis, nf, nilpotency=level, name=name)
        for rel in relations:
            if not field.is_zero(alg.evaluate(rel)):
                raise MalformedRelation("relation does not vanish; ideal is not admissible")
        return alg
    raise NotFiniteDimensional(f"paths of length {length_cap} survive the relations")


def opposite(A: BoundQuiverAlgebra) -> BoundQuiverAlgebra:
    return A.opposite()


def algebra_info(A: BoundQuiverAlgebra) -> dict:
    """Deterministic summary: dimension and basis paths grouped by endpoints and length."""
    listing = []
    for i, p in enumerate(A.basis):
        listing.append({"source": p.source, "target": p.target, "length": len(p), "path": str(p)})
    lengths: dict[int, int] = {}
    for p in A.basis:
        lengths[len(p)] = lengths.get(len(p), 0) + 1
    return {
        "field": A.field.name,
        "dimension": A.dim,
        "vertices": len(A.vertices),
        "arrows": len(A.quiver.arrows),
        "pathsByLength": {str(k): v for k, v in sorted(lengths.items())},
        "basis": listing,
    }


# -- common fixtures ---------------------------------------------------------

def default_field() -> Field:
    return PrimeField(101)


def linear_a2(field: Field | None = None) -> BoundQuiverAlgebra:
    """The path algebra of ``v-1 --a--> v0``."""
    F = field or default_field()
    return build_algebra(F, Quiver.make(["v-1", "v0"], [("a", "v-1", "v0")]), name="A2")


def semisimple(field: Field | None = None) -> BoundQuiverAlgebra:
    F = field or default_field()
    return build_algebra(F, Quiver.make(["v"], []), name="k")


def dual_numbers(field: Field | None = None) -> BoundQuiverAlgebra:
    """``k[x]/(x^2)`` as a one-loop bound quiver algebra."""
    F = field or default_field()
    q = Quiver.make(["v"], [("x", "v", "v")])
    return build_algebra(F, q, [Relation(((1, ("x", "x")),))], name="k[x]/x^2")

"""JSON file formats for algebras, representations, morphisms and complexes.

Algebra files carry ``field``, ``vertices``, ``arrows`` (``[name, source, target]``) and
``relations`` (lists of ``{"coeff": str, "path": [arrow, ...]}``, arrows in the order
they are traversed).  Representation files carry ``algebra`` (a path relative to the
file, or an inline algebra document), ``dims`` and ``matrices`` (row-major lists of
coefficient strings).  Two shorthands are accepted in place of ``dims``/``matrices``:
``{"projective": [v, ...]}`` and ``{"injective": [v, ...]}``.  Complex files carry
``terms`` and ``differentials`` keyed by decimal degree strings.  A complex algebra is
described by a sidecar ``{"baseAlgebra": ..., "n": ..., "vertexMap": ...}`` and may be
used wherever an algebra reference is expected.
"""
from __future__ import annotations

import json
import os
from typing import Any

import numpy as np

from .algebra import BoundQuiverAlgebra, Quiver, Relation, build_algebra
from .bridge import ComplexAlgebra, complex_algebra
from .complexes import ChainComplex, ChainMap
from .errors import MalformedInput
from .linalg import Field
from .modules import Representation, RepMorphism, injective_rep, projective_rep

SCHEMA_VERSION = 1


def read_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise MalformedInput(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path}: invalid JSON ({exc})") from exc


def write_json(path: str, doc: Any) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, sort_keys=True, indent=2)
        fh.write("\n")


def _require(doc: dict, key: str, where: str):
    if not isinstance(doc, dict) or key not in doc:
        raise MalformedInput(f"{where}: missing field {key!r}")
    return doc[key]


class Loader:
    """Reads documents, sharing one algebra object per distinct algebra reference.

    ``field`` overrides the field named in algebra files.
    """

    def __init__(self, field: Field | None = None):
        self.field = field
        self._algebras: dict[str, BoundQuiverAlgebra] = {}
        self._complex: dict[tuple[int, int], ComplexAlgebra] = {}
        self._origin: dict[int, tuple] = {}

    # -- algebras -------------------------------------------------------------
    def algebra(self, ref, base_dir: str = ".") -> BoundQuiverAlgebra:
        doc, key, base_dir = self._resolve(ref, base_dir)
        if key in self._algebras:
            return self._algebras[key]
        if isinstance(doc, dict) and "baseAlgebra" in doc:
            A = self.complex_algebra(doc, base_dir).algebra
        else:
            A = self._parse_algebra(doc, key)
            self._origin[id(A)] = ("file", key[5:]) if key.startswith("file:") else ("inline", doc)
        self._algebras[key] = A
        return A

    def complex_algebra(self, ref, base_dir: str = ".", n: int | None = None) -> ComplexAlgebra:
        """From a sidecar document, or from a base algebra reference plus ``n``."""
        doc, key, base_dir = self._resolve(ref, base_dir)
        if isinstance(doc, dict) and "baseAlgebra" in doc:
            base = self.algebra(doc["baseAlgebra"], base_dir)
            n = int(_require(doc, "n", key))
        else:
            if n is None:
                raise MalformedInput(f"{key}: not a complex algebra sidecar and no n given")
            base = self.algebra(ref, base_dir)
        return self.complex_algebra_over(base, n)

    def complex_algebra_over(self, base: BoundQuiverAlgebra, n: int) -> ComplexAlgebra:
        if n < 1:
            raise MalformedInput("n must be positive")
        ck = (id(base), n)
        if ck not in self._complex:
            B = complex_algebra(base, n)
            self._complex[ck] = B
            self._origin[id(B.algebra)] = ("complex", base, n)
        return self._complex[ck]

    def complex_algebra_of(self, A: BoundQuiverAlgebra) -> ComplexAlgebra | None:
        """The complex algebra whose underlying algebra is ``A``, if it was built here."""
        origin = self._origin.get(id(A))
        if origin is None or origin[0] != "complex":
            return None
        return self._complex[(id(origin[1]), origin[2])]

    def reference(self, A: BoundQuiverAlgebra, out_dir: str = ".") -> Any:
        """How a document written into ``out_dir`` should refer to ``A``."""
        origin = self._origin.get(id(A))
        if origin is None:
            return algebra_doc(A)
        if origin[0] == "file":
            return os.path.relpath(origin[1], os.path.abspath(out_dir))
        if origin[0] == "inline":
            return origin[1]
        return {"baseAlgebra": self.reference(origin[1], out_dir), "n": origin[2]}

    def _resolve(self, ref, base_dir: str):
        if isinstance(ref, str):
            path = os.path.normpath(os.path.join(base_dir, ref))
            return read_json(path), "file:" + os.path.abspath(path), os.path.dirname(path)
        if isinstance(ref, dict):
            return ref, "inline:" + json.dumps(ref, sort_keys=True), base_dir
        raise MalformedInput("algebra reference must be a path or an object")

    def _parse_algebra(self, doc, key: str) -> BoundQuiverAlgebra:
        where = key[:80]
        try:
            F = self.field or Field.parse(str(doc.get("field", "Fp:101")))
        except ValueError as exc:
            raise MalformedInput(f"{where}: {exc}") from exc
        vertices = [str(v) for v in _require(doc, "vertices", where)]
        arrows = _require(doc, "arrows", where)
        if not all(isinstance(a, list) and len(a) == 3 for a in arrows):
            raise MalformedInput(f"{where}: arrows must be [name, source, target]")
        rels = []
        for r in doc.get("relations", []):
            try:
                rels.append(Relation(tuple((F.parse_elem(t["coeff"]), tuple(t["path"])) for t in r)))
            except (KeyError, TypeError) as exc:
                raise MalformedInput(f"{where}: relation terms need coeff and path") from exc
        return build_algebra(F, Quiver.make(vertices, [tuple(map(str, a)) for a in arrows]), rels,
                             name=str(doc.get("name", "")))

    # -- modules ----------------------------------------------------------------
    def representation(self, ref, base_dir: str = ".", algebra: BoundQuiverAlgebra | None = None) -> Representation:
        if isinstance(ref, str):
            path = os.path.join(base_dir, ref)
            doc, base_dir = read_json(path), os.path.dirname(path)
        else:
            doc = ref
        if not isinstance(doc, dict):
            raise MalformedInput("representation must be an object")
        if "algebra" in doc:
            A = self.algebra(doc["algebra"], base_dir)
        elif algebra is not None:
            A = algebra
        else:
            raise MalformedInput("representation without algebra")
        if "projective" in doc:
            return projective_rep(A, self._vertices(A, doc["projective"]))
        if "injective" in doc:
            return injective_rep(A, self._vertices(A, doc["injective"]))
        dims = _require(doc, "dims", "representation")
        unknown = set(dims) - set(A.vertices)
        if unknown:
            raise MalformedInput(f"unknown vertices {sorted(unknown)}")
        F = A.field
        maps = {}
        for a, m in doc.get("matrices", {}).items():
            try:
                arr = A.quiver.arrow(a)
            except KeyError as exc:
                raise MalformedInput(f"unknown arrow {a!r}") from exc
            maps[a] = parse_matrix(F, m, int(dims.get(arr.target, 0)), int(dims.get(arr.source, 0)))
        return Representation(A, dims, maps, name=str(doc.get("name", "")))

    @staticmethod
    def _vertices(A: BoundQuiverAlgebra, vs) -> list[str]:
        vs = [str(v) for v in vs]
        bad = [v for v in vs if v not in A.vertices]
        if bad:
            raise MalformedInput(f"unknown vertices {bad}")
        return vs

    def morphism(self, ref, base_dir: str = ".", source: Representation | None = None,
                 target: Representation | None = None) -> RepMorphism:
        if isinstance(ref, str):
            path = os.path.join(base_dir, ref)
            doc, base_dir = read_json(path), os.path.dirname(path)
        else:
            doc = ref
        if source is None:
            source = self.representation(_require(doc, "source", "morphism"), base_dir)
        if target is None:
            target = self.representation(_require(doc, "target", "morphism"), base_dir,
                                         algebra=source.algebra)
        F = source.field
        maps = {v: parse_matrix(F, m, target.dims[v], source.dims[v])
                for v, m in _require(doc, "vertexMaps", "morphism").items()}
        return RepMorphism(source, target, maps)

    # -- complexes ----------------------------------------------------------------
    def complex(self, ref, base_dir: str = ".") -> ChainComplex:
        if isinstance(ref, str):
            path = os.path.join(base_dir, ref)
            doc, base_dir = read_json(path), os.path.dirname(path)
        else:
            doc = ref
        A = self.algebra(_require(doc, "algebra", "complex"), base_dir)
        terms = {}
        for k, t in _require(doc, "terms", "complex").items():
            terms[_degree(k)] = self.representation(t, base_dir, algebra=A)
        diffs = {}
        for k, d in doc.get("differentials", {}).items():
            i = _degree(k)
            if i not in terms or i + 1 not in terms:
                raise MalformedInput(f"differential in degree {i} between missing terms")
            diffs[i] = self.morphism(d, base_dir, terms[i], terms[i + 1])
        return ChainComplex(A, terms, diffs, name=str(doc.get("name", "")))

    def chain_map(self, ref, base_dir: str = ".") -> ChainMap:
        if isinstance(ref, str):
            path = os.path.join(base_dir, ref)
            doc, base_dir = read_json(path), os.path.dirname(path)
        else:
            doc = ref
        X = self.complex(_require(doc, "source", "chain map"), base_dir)
        Y = self.complex(_require(doc, "target", "chain map"), base_dir)
        k = int(doc.get("degree", 0))
        comps = {}
        for key, m in _require(doc, "components", "chain map").items():
            i = _degree(key)
            comps[i] = self.morphism(m, base_dir, X.term(i), Y.term(i + k))
        return ChainMap(X, Y, comps, k)


def _degree(key) -> int:
    try:
        return int(key)
    except ValueError as exc:
        raise MalformedInput(f"degree {key!r} is not an integer") from exc


def parse_matrix(F: Field, data, rows: int, cols: int) -> np.ndarray:
    flat = np.asarray(data, dtype=object).reshape(-1) if np.size(data) else []
    if len(flat) != rows * cols:
        raise MalformedInput(f"matrix needs {rows}x{cols} entries, got {len(flat)}")
    vals = [F.parse_elem(x) for x in flat]
    return F.reduce(np.array(vals, dtype=F.dtype).reshape(rows, cols)) if vals else F.zeros(rows, cols)


def format_matrix(F: Field, m: np.ndarray) -> list[list[str]]:
    return [[F.format_elem(x) for x in row] for row in np.asarray(m)]


# -- writers ---------------------------------------------------------------------------

def algebra_doc(A: BoundQuiverAlgebra) -> dict:
    F = A.field
    return {
        "name": A.name,
        "field": F.name,
        "vertices": list(A.vertices),
        "arrows": [[a.name, a.source, a.target] for a in A.quiver.arrows],
        "relations": [[{"coeff": F.format_elem(c), "path": list(p)} for c, p in r.terms] for r in A.relations],
    }


def representation_doc(M: Representation, algebra_ref=None) -> dict:
    F = M.field
    doc = {"dims": dict(M.dims),
           "matrices": {a: format_matrix(F, m) for a, m in M.maps.items()}}
    if algebra_ref is not None:
        doc["algebra"] = algebra_ref
    return doc


def morphism_doc(f: RepMorphism) -> dict:
    return {"vertexMaps": {v: format_matrix(f.field, m) for v, m in f.maps.items()}}


def complex_doc(X: ChainComplex, algebra_ref) -> dict:
    return {"algebra": algebra_ref,
            "terms": {str(i): representation_doc(M) for i, M in X.terms.items()},
            "differentials": {str(i): morphism_doc(d) for i, d in X.diffs.items()}}


def sidecar_doc(B: ComplexAlgebra, base_ref) -> dict:
    return {"baseAlgebra": base_ref, **B.sidecar()}

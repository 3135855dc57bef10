import json
from fractions import Fraction

import numpy as np
import pytest

from siltlab import io as fio
from siltlab.algebra import dual_numbers, linear_a2
from siltlab.bridge import make_special
from siltlab.complexes import validate_complex
from siltlab.decompose import reps_isomorphic
from siltlab.errors import MalformedInput
from siltlab.linalg import Field
from siltlab.modules import regular_module


@pytest.fixture()
def a2_file(tmp_path):
    path = tmp_path / "a2.json"
    fio.write_json(str(path), fio.algebra_doc(linear_a2()))
    return path


def test_algebra_round_trip(tmp_path):
    A = dual_numbers()
    path = tmp_path / "loop.json"
    fio.write_json(str(path), fio.algebra_doc(A))
    B = fio.Loader().algebra(str(path))
    assert B.dim == A.dim == 2
    assert B.vertices == A.vertices


def test_shared_algebra_objects(a2_file, tmp_path):
    (tmp_path / "p.json").write_text(json.dumps({"algebra": "a2.json", "projective": ["v0"]}))
    (tmp_path / "q.json").write_text(json.dumps({"algebra": "a2.json", "projective": ["v-1"]}))
    L = fio.Loader()
    P = L.representation(str(tmp_path / "p.json"))
    Q = L.representation(str(tmp_path / "q.json"))
    assert P.algebra is Q.algebra
    assert P.dimension_vector() == (0, 1) and Q.dimension_vector() == (1, 1)


def test_representation_round_trip(a2_file, tmp_path):
    L = fio.Loader()
    A = L.algebra(str(a2_file))
    M = regular_module(A)
    path = tmp_path / "m.json"
    fio.write_json(str(path), fio.representation_doc(M, "a2.json"))
    back = L.representation(str(path))
    assert back.algebra is A and reps_isomorphic(back, M)


def test_rational_entries(a2_file):
    L = fio.Loader(Field.parse("Q"))
    A = L.algebra(str(a2_file))
    arrow = A.quiver.arrows[0]
    doc = {"dims": {arrow.source: 1, arrow.target: 1}, "matrices": {arrow.name: [["3/4"]]}}
    M = L.representation(doc, algebra=A)
    assert M.maps[arrow.name][0, 0] == Fraction(3, 4)
    assert fio.format_matrix(A.field, M.maps[arrow.name]) == [["3/4"]]


def test_complex_round_trip_through_sidecar(a2_file, tmp_path):
    L = fio.Loader()
    A = L.algebra(str(a2_file))
    B = L.complex_algebra_over(A, 2)
    (tmp_path / "b2.sidecar.json").write_text(json.dumps(fio.sidecar_doc(B, "a2.json")))
    B2 = L.complex_algebra(str(tmp_path / "b2.sidecar.json"))
    assert B2 is B
    M = make_special(B, regular_module(A), -1, "lower")
    fio.write_json(str(tmp_path / "m.json"), fio.representation_doc(M, "b2.sidecar.json"))
    back = L.representation(str(tmp_path / "m.json"))
    assert back.algebra is B.algebra and reps_isomorphic(back, M)


def test_complex_documents(a2_file, tmp_path):
    doc = {"algebra": "a2.json",
           "terms": {"-1": {"projective": ["v0"]}, "0": {"projective": ["v-1"]}},
           "differentials": {"-1": {"vertexMaps": {"v-1": [], "v0": [["1"]]}}}}
    (tmp_path / "x.json").write_text(json.dumps(doc))
    X = fio.Loader().complex(str(tmp_path / "x.json"))
    assert X.degrees == [-1, 0] and validate_complex(X)
    again = fio.complex_doc(X, "a2.json")
    (tmp_path / "y.json").write_text(json.dumps(again))
    Y = fio.Loader().complex(str(tmp_path / "y.json"))
    assert np.array_equal(Y.diff(-1).maps["v0"], X.diff(-1).maps["v0"])


@pytest.mark.parametrize("doc", [
    {"dims": {"nope": 1}},
    {"dims": {"v-1": 1, "v0": 1}, "matrices": {"zz": [["1"]]}},
    {"dims": {"v-1": 1, "v0": 1}, "matrices": {"a": [["1", "2"]]}},
    {"projective": ["v7"]},
])
def test_malformed_representations(a2_file, doc):
    doc = dict(doc, algebra=str(a2_file))
    with pytest.raises(MalformedInput):
        fio.Loader().representation(doc)


def test_malformed_files(tmp_path):
    (tmp_path / "bad.json").write_text("{not json")
    with pytest.raises(MalformedInput):
        fio.read_json(str(tmp_path / "bad.json"))
    with pytest.raises(MalformedInput):
        fio.read_json(str(tmp_path / "missing.json"))
    with pytest.raises(MalformedInput):
        fio.Loader().algebra({"vertices": ["x"], "arrows": [["a", "x"]]})
    with pytest.raises(MalformedInput):
        fio.Loader().complex({"algebra": fio.algebra_doc(linear_a2()), "terms": {"zero": {"projective": []}}})

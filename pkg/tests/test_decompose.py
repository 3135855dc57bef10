import numpy as np
import pytest

from siltlab.algebra import Quiver, build_algebra, linear_a2
from siltlab.decompose import (decompose, factor_polynomial, indecomposables_isomorphic, is_indecomposable,
                               minimal_polynomial, rep_endo_radical, reps_isomorphic)
from siltlab.errors import DecompositionFailure
from siltlab.linalg import PrimeField, Rationals
from siltlab.modules import Representation, direct_sum, hom_space, standard_modules


def test_minimal_polynomial_and_factors():
    F = PrimeField(101)
    x = F.array([[0, 1], [0, 0]])
    assert minimal_polynomial(F, x) == [0, 0, 1]
    facs = factor_polynomial(F, [F.elem(-1), 0, 1])
    assert sorted(m for _, m in facs) == [1, 1] and len(facs) == 2
    # t^2 + 1 is irreducible over Q
    assert len(factor_polynomial(Rationals(), [Rationals().elem(1), 0, 1])) == 1


def test_indecomposables(mods, b2):
    assert is_indecomposable(mods["Q"])
    assert not is_indecomposable(mods["A"])
    from siltlab.suites import ar_quiver_objects
    assert is_indecomposable(ar_quiver_objects(b2)["(Q=Q)"])


def test_decompose_constructed_sum(mods):
    M = direct_sum([mods["P"], mods["S"]])
    parts = decompose(M)
    assert len(parts) == 2 and all(m == 1 for _, m in parts)
    assert any(indecomposables_isomorphic(X, mods["P"]) for X, _ in parts)
    assert any(indecomposables_isomorphic(X, mods["S"]) for X, _ in parts)


def test_decompose_multiplicity(mods):
    M = direct_sum([mods["Q"], mods["Q"], mods["S"]])
    parts = sorted(decompose(M), key=lambda xm: -xm[1])
    assert [m for _, m in parts] == [2, 1]


@pytest.mark.parametrize("F", [PrimeField(2), PrimeField(101), Rationals()], ids=str)
def test_decompose_over_fields(F):
    A = linear_a2(F)
    sm = standard_modules(A)
    M = direct_sum([sm.projectives["v0"], sm.projectives["v-1"], sm.simples["v-1"]])
    # scramble with a random automorphism so the summands are not coordinate-aligned
    rng = np.random.default_rng(3)
    while True:
        g = {v: F.random(rng, (M.dims[v], M.dims[v])) for v in A.vertices}
        if all(F.rank(g[v]) == M.dims[v] for v in A.vertices):
            break
    maps = {a.name: F.matmul(g[a.target], F.matmul(M.maps[a.name], F.inv(g[a.source]))) for a in A.quiver.arrows}
    N = Representation(A, M.dims, maps)
    assert reps_isomorphic(M, N)
    assert sorted(X.dimension_vector() for X, _ in decompose(N)) == [(0, 1), (1, 0), (1, 1)]


def test_kronecker_regular_module_non_split_local():
    # over F_2, the Kronecker module with x -> [[0,1],[1,1]] has End = F_4, local but not split
    F = PrimeField(2)
    A = build_algebra(F, Quiver.make(["1", "2"], [("x", "1", "2"), ("y", "1", "2")]), [])
    M = Representation(A, {"1": 2, "2": 2}, {"x": F.eye(2), "y": F.array([[0, 1], [1, 1]])})
    assert len(hom_space(M, M)) == 2
    assert is_indecomposable(M)
    assert decompose(M)[0][1] == 1


def test_radical_of_local_endomorphisms(mods, b2):
    from siltlab.suites import ar_quiver_objects
    for M in ar_quiver_objects(b2).values():
        assert rep_endo_radical(M) == []
    with pytest.raises(DecompositionFailure):
        rep_endo_radical(mods["A"])


def test_radical_non_split_local_small_field():
    F = PrimeField(2)
    A = build_algebra(F, Quiver.make(["1", "2"], [("x", "1", "2"), ("y", "1", "2")]), [])
    M = Representation(A, {"1": 2, "2": 2}, {"x": F.eye(2), "y": F.array([[0, 1], [1, 1]])})
    assert rep_endo_radical(M) == []
    N = Representation(A, {"1": 1, "2": 1}, {"x": F.eye(1), "y": F.zeros(1, 1)})
    assert rep_endo_radical(N) == []

import pytest

from siltlab.homological import (ExceedsCap, ext_dim, ext_dim_via_injectives, global_dimension, injdim,
                                 injective_coresolution, is_injective, is_projective, min_proj_resolution, pd)
from siltlab.modules import hom_dim, simple_rep, standard_modules


def test_pd_of_a2_modules(mods):
    assert pd(mods["S"]) == 1
    assert pd(mods["P"]) == 0 and pd(mods["Q"]) == 0
    res = min_proj_resolution(mods["S"])
    assert res.complete and [T.dimension_vector() for T in res.terms] == [(1, 1), (0, 1)]


def test_pd_infinite_for_dual_numbers(dual):
    r = pd(simple_rep(dual, "v"), cap=10)
    assert isinstance(r, ExceedsCap) and r.cap == 10
    assert str(r) == "ExceedsCap(10)"


def test_ext_values(mods):
    P, Q, S = mods["P"], mods["Q"], mods["S"]
    assert ext_dim(S, P, 1) == 1
    assert ext_dim(S, S, 1) == 0
    assert ext_dim(S, Q, 1) == 0
    for M in (P, Q, S):
        for N in (P, Q, S):
            assert ext_dim(M, N, 0) == hom_dim(M, N)
            assert ext_dim(M, N, 2) == 0


def test_ext_two_routes_agree(mods, b2):
    sm = standard_modules(b2.algebra)
    mods_b = list(sm.simples.values()) + list(sm.injectives.values())
    for M in mods_b:
        for N in mods_b:
            for j in range(3):
                assert ext_dim(M, N, j) == ext_dim_via_injectives(M, N, j)


def test_global_dimensions(a2, kfield, b2, dual):
    assert global_dimension(a2) == 1
    assert global_dimension(kfield) == 0
    assert global_dimension(b2.algebra) == 2
    assert isinstance(global_dimension(dual, cap=8), ExceedsCap)


def test_injective_side(mods):
    assert injdim(mods["P"]) == 1
    assert injdim(mods["S"]) == 0
    assert is_injective(mods["Q"]) and is_projective(mods["Q"])
    assert not is_injective(mods["P"]) and not is_projective(mods["S"])
    terms, maps, complete = injective_coresolution(mods["P"])
    assert complete and [T.dimension_vector() for T in terms] == [(1, 1), (1, 0)]
    assert all(f.is_morphism() for f in maps)


def test_cap_env(monkeypatch, dual):
    monkeypatch.setenv("SILTLAB_CAP", "5")
    r = pd(simple_rep(dual, "v"))
    assert isinstance(r, ExceedsCap) and r.cap == 5


@pytest.mark.parametrize("j", [0, 1, 2, 3])
def test_ext_b3_simples(b3, j):
    sm = standard_modules(b3.algebra)
    for M in sm.simples.values():
        for N in sm.simples.values():
            assert ext_dim(M, N, j) == ext_dim_via_injectives(M, N, j)

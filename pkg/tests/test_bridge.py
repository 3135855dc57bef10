import warnings

import numpy as np
import pytest

from siltlab.bridge import (canonical_cotilting, canonical_tilting, classify, column, complex_algebra, ext_transport,
                            from_complex, in_rep_i, in_rep_p, make_special, random_rep_i, random_rep_p,
                            silting_to_tilting, tilting_to_silting, to_complex)
from siltlab.complexes import stalk
from siltlab.decompose import decompose, reps_isomorphic
from siltlab.errors import HypothesisUnmet, IndexOutOfRange, NotInRepP, NotNSilting, NotTilting, SupportOutOfRange
from siltlab.homological import ext_dim, global_dimension, is_injective, is_projective
from siltlab.minimal import minimal_model
from siltlab.modules import hom_dim, injective_cogenerator, regular_module
from siltlab.suites import ar_quiver_objects
from siltlab.tilting import is_cotilting, is_tilting


def test_dimensions(a2, b2, b3, kfield, dual):
    assert b2.algebra.dim == 9 and b3.algebra.dim == 15
    assert len(b2.algebra.vertices) == 4
    for A in (a2, kfield, dual):
        for n in (1, 2, 3):
            assert complex_algebra(A, n).algebra.dim == A.dim * (2 * n - 1)


def test_over_field_is_a2_shape(kfield):
    B = complex_algebra(kfield, 2).algebra
    assert B.dim == 3 and len(B.vertices) == 2 and len(B.quiver.arrows) == 1
    assert global_dimension(B) == 1


def test_n_one_is_base(a2):
    B = complex_algebra(a2, 1)
    assert B.algebra.dim == a2.dim
    M = from_complex(B, stalk(regular_module(a2), 0))
    assert reps_isomorphic(column(B, M, 0), regular_module(a2))


def test_round_trips(b2, b3):
    rng = np.random.default_rng(4)
    for B in (b2, b3):
        for _ in range(10):
            M = random_rep_p(B, rng)
            X = to_complex(B, M)
            back = from_complex(B, X)
            assert back.dims == M.dims
            assert all(np.array_equal(back.maps[k], M.maps[k]) for k in M.maps)
            assert from_complex(B, to_complex(B, back)).dims == M.dims


def test_special_objects(b3, a2, mods):
    Q = mods["Q"]
    X = to_complex(b3, make_special(b3, Q, -1, "lower"))
    assert X.degrees == [-1, 0]
    assert np.array_equal(X.diff(-1).maps["v0"], np.eye(1, dtype=X.diff(-1).maps["v0"].dtype))
    assert to_complex(b3, make_special(b3, Q, 0, "lower")).degrees == [0]
    assert to_complex(b3, make_special(b3, Q, -1, "upper")).degrees == [-2, -1]
    assert to_complex(b3, make_special(b3, Q, -2, "upper")).degrees == [-2]
    with pytest.raises(IndexOutOfRange):
        make_special(b3, Q, 1)
    with pytest.raises(IndexOutOfRange):
        make_special(b3, Q, -3, "upper")


def test_projectives_and_injectives(b2, b3, a2):
    A, E = regular_module(a2), injective_cogenerator(a2)
    for B in (b2, b3):
        total = 0
        for j in B.columns:
            P = make_special(B, A, j, "lower")
            assert is_projective(P)
            total += P.dim
            assert is_injective(make_special(B, E, j, "upper"))
        # the lower objects of A are all the projectives
        assert total == B.algebra.dim
        assert classify(B, make_special(B, A, -1, "lower")).is_projective


def test_ar_quiver_flags(b2):
    objs = ar_quiver_objects(b2)
    assert len(objs) == 11
    proj = {k for k, M in objs.items() if classify(b2, M).is_projective}
    inj = {k for k, M in objs.items() if classify(b2, M).is_injective}
    assert proj == {"(0→P)", "(0→Q)", "(P=P)", "(Q=Q)"}
    assert inj == {"(Q=Q)", "(S=S)", "(Q→0)", "(S→0)"}
    c = classify(b2, objs["(P→Q)"]).as_dict()
    assert c["inRepP"] and c["pd"] == 1 and c["pdFormula"] == 1


def test_support_errors(b2, mods):
    with pytest.raises(SupportOutOfRange):
        from_complex(b2, stalk(mods["P"], 1))
    with pytest.raises(SupportOutOfRange):
        from_complex(b2, stalk(mods["P"], -2))


def test_canonical_objects(b2, b3):
    for B in (b2, b3):
        T = canonical_tilting(B)
        assert in_rep_p(B, T) and is_tilting(T, B.n - 1).verdict
        C = canonical_cotilting(B)
        assert in_rep_i(B, C) and is_cotilting(C, B.n - 1).verdict


def test_correspondence(b2, mods, xpq_q):
    A = regular_module(b2.base)
    T = silting_to_tilting(b2, stalk(A, -1))
    assert [m for _, m in decompose(T)] == [m for _, m in decompose(canonical_tilting(b2))]
    assert reps_isomorphic(T, canonical_tilting(b2))
    T2 = silting_to_tilting(b2, xpq_q)
    assert is_tilting(T2, 1).verdict
    X = tilting_to_silting(b2, T2)
    assert X.degrees == minimal_model(xpq_q, certificate=False).complex.degrees


def test_correspondence_errors(b2, xpq, mods, a2):
    with pytest.raises(NotNSilting):
        silting_to_tilting(b2, xpq)
    with pytest.raises(NotNSilting):
        silting_to_tilting(b2, stalk(regular_module(a2), 1))
    with pytest.raises(NotInRepP):
        tilting_to_silting(b2, make_special(b2, mods["S"], 0))
    with pytest.raises(NotTilting):
        tilting_to_silting(b2, make_special(b2, regular_module(a2), -1, "lower"))


def test_ext_transport(b2, a2):
    objs = ar_quiver_objects(b2)
    r = ext_transport(b2, objs["(P→Q)"], objs["(0→P)"], 1)
    assert r.hypothesis_met and r.agree
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        r = ext_transport(b2, objs["(S=S)"], objs["(0→P)"], 1)
    assert any(issubclass(w.category, HypothesisUnmet) for w in caught)
    assert not r.hypothesis_met


def test_ext_zero_counts_chain_maps(b2):
    rng = np.random.default_rng(8)
    objs = list(ar_quiver_objects(b2).values())
    for _ in range(10):
        M, N = random_rep_p(b2, rng), random_rep_i(b2, rng)
        r = ext_transport(b2, M, N, 0)
        assert r.ext == hom_dim(M, N) == r.hom
    # no hypothesis needed in degree 0
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        for M in objs:
            for N in objs:
                assert ext_transport(b2, M, N, 0).agree


def test_ext_transport_random(b3):
    rng = np.random.default_rng(3)
    for k in range(15):
        M = random_rep_p(b3, rng)
        N = random_rep_p(b3, rng) if k % 2 else random_rep_i(b3, rng)
        for j in (1, 2):
            assert ext_transport(b3, M, N, j).agree
            assert ext_dim(M, N, j) == ext_transport(b3, M, N, j).ext

import pytest

from siltlab.complexes import direct_sum_complex, shift, stalk
from siltlab.errors import NotNSilting, NotPerfect
from siltlab.minimal import complexes_isomorphic_indecomposable, decompose_complex
from siltlab.modules import injective_cogenerator, regular_module
from siltlab.silting import (aisle_witness, cosilting_class_member, enumerate_two_term_silting, intermediate_window,
                            is_cosilting, is_n_silting, is_presilting, is_silting, left_add_approx,
                            silting_class_member, silting_equivalent)


def test_presilting_examples(mods, xpq, xpq_q):
    P, A = mods["P"], mods["A"]
    assert is_presilting(stalk(A, 0))
    assert is_presilting(xpq)
    assert is_presilting(xpq_q)
    # the identity of P gives a nonzero map from the sum to its own shift
    assert not is_presilting(direct_sum_complex([stalk(P, 0), stalk(P, -1)]))
    assert not is_presilting(direct_sum_complex([xpq, stalk(P, 0)]))


def test_rejects_non_projective_terms(mods):
    with pytest.raises(NotPerfect):
        is_presilting(stalk(mods["S"], 0))


def test_left_approximation_lands_in_q(mods, xpq_q):
    phi = left_add_approx(stalk(mods["P"], 0), xpq_q)
    parts = decompose_complex(phi.target)
    assert len(parts) == 1 and parts[0][1] == 1
    assert complexes_isomorphic_indecomposable(parts[0][0], stalk(mods["Q"], 0))


def test_silting_verdicts(mods, xpq, xpq_q):
    rep = is_silting(stalk(mods["A"], 0))
    assert rep.verdict is True and rep.certificate.steps == 1
    rep = is_silting(xpq_q)
    assert rep.verdict is True and rep.certificate.steps <= 2
    rep = is_silting(xpq)
    assert rep.verdict is False and not rep.undecided
    assert is_silting(shift(stalk(mods["A"], 0), 1)).verdict is True


def test_n_silting(mods, xpq_q):
    A = stalk(mods["A"], 0)
    assert is_n_silting(A, 1)
    assert is_n_silting(xpq_q, 2)
    assert not is_n_silting(xpq_q, 1)
    # A in degree +1 lies outside every window ending at 0
    assert not is_n_silting(stalk(mods["A"], 1), 3)
    assert is_n_silting(stalk(mods["A"], -1), 2)


def test_class_membership(mods, xpq_q):
    A, P = mods["A"], mods["P"]
    T = stalk(A, 0)
    assert silting_class_member(T, stalk(A, -2))
    assert not silting_class_member(T, stalk(A, 1))
    assert silting_class_member(xpq_q, stalk(mods["Q"], 0))
    # identity on P gives a map XPQ -> P[1] that no homotopy Q -> P can kill
    rep = silting_class_member(xpq_q, stalk(P, 0))
    assert not rep.member and rep.verdicts == {1: False}


def test_windows(mods, xpq_q):
    A = stalk(mods["A"], 0)
    assert intermediate_window(A) == (0, 0)
    assert intermediate_window(xpq_q, 2) == (-1, 0)
    with pytest.raises(NotNSilting):
        intermediate_window(xpq_q, 1)


def test_aisle_witness(mods, xpq_q):
    P, Q = mods["P"], mods["Q"]
    w = aisle_witness(stalk(mods["A"], 0), stalk(P, 1))
    assert w.kind == "InAisle" and w.steps
    w = aisle_witness(xpq_q, stalk(Q, 0))
    assert w.kind == "NotInAisle" and w.shift == 0
    w = aisle_witness(stalk(mods["A"], 0), stalk(P, -1))
    assert w.kind == "NotInAisle"


def test_cosilting(a2):
    E = injective_cogenerator(a2)
    assert is_cosilting(stalk(E, 0)).verdict is True
    assert is_cosilting(direct_sum_complex([stalk(E, 0), stalk(E, -1)])).verdict is False
    assert cosilting_class_member(stalk(E, 0), stalk(E, 2))
    assert not cosilting_class_member(stalk(E, 0), stalk(E, -1))
    with pytest.raises(NotPerfect):
        is_cosilting(stalk(regular_module(a2), 0))


def test_enumeration_counts(a2, kfield, xpq_q, mods):
    found = enumerate_two_term_silting(a2)
    assert len(found) == 5
    assert all(is_n_silting(T, 2) for T in found)
    assert any(silting_equivalent(T, xpq_q) for T in found)
    assert any(silting_equivalent(T, stalk(mods["A"], 0)) for T in found)
    for i, T in enumerate(found):
        for U in found[i + 1:]:
            assert not silting_equivalent(T, U)
    assert len(enumerate_two_term_silting(kfield)) == 2

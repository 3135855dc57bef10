import pytest

from siltlab.algebra import Quiver, Relation, algebra_info, build_algebra, linear_a2, opposite, semisimple
from siltlab.errors import MalformedRelation, NotFiniteDimensional
from siltlab.linalg import PrimeField, Rationals

F = PrimeField(101)


def test_a2_basis(a2):
    assert a2.dim == 3
    assert [str(p) for p in a2.basis] == ["e[v-1]", "e[v0]", "a"]
    info = algebra_info(a2)
    assert info["dimension"] == 3 and info["pathsByLength"] == {"0": 2, "1": 1}


def test_truncated_loop():
    A = build_algebra(F, Quiver.make(["v"], [("x", "v", "v")]), [Relation(((1, ("x", "x")),))], length_cap=10)
    assert A.dim == 2


def test_free_loop_rejected():
    with pytest.raises(NotFiniteDimensional):
        build_algebra(F, Quiver.make(["v"], [("x", "v", "v")]), [], length_cap=10)


def test_malformed_relations():
    Qv = Quiver.make(["u", "v", "w"], [("a", "u", "v"), ("b", "v", "w"), ("c", "u", "w")])
    with pytest.raises(MalformedRelation):
        build_algebra(F, Qv, [Relation(((1, ("a",)),))])
    with pytest.raises(MalformedRelation):
        build_algebra(F, Qv, [Relation(((1, ("a", "b")), (1, ("a",))))])
    with pytest.raises(MalformedRelation):
        build_algebra(F, Qv, [Relation(((1, ("b", "a")),))])


def test_commutative_square():
    Qv = Quiver.make(["1", "2", "3", "4"], [("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")])
    A = build_algebra(F, Qv, [Relation(((1, ("a", "b")), (-1, ("c", "d"))))])
    assert A.dim == 9
    Z = build_algebra(F, Qv, [Relation(((1, ("a", "b")),)), Relation(((1, ("c", "d")),))])
    assert Z.dim == 8


def test_opposite_involution(a2, b2):
    op = opposite(a2)
    assert op.dim == 3
    arrow = op.quiver.arrows[0]
    assert (arrow.source, arrow.target) == ("v0", "v-1")
    assert opposite(op) is a2
    assert opposite(b2.algebra).dim == 9


def test_info_semisimple_and_b2(b2):
    assert algebra_info(semisimple())["dimension"] == 1
    info = algebra_info(b2.algebra)
    assert info["dimension"] == 9 and info["vertices"] == 4 and info["arrows"] == 4
    assert info["pathsByLength"]["2"] == 1


def test_multiplication_associative_and_unital(b2):
    A = b2.algebra
    n = A.dim
    import numpy as np
    rng = np.random.default_rng(0)
    one = A.field.zeros(n)
    for v in A.vertices:
        one[A.idempotent(v)] = 1
    for _ in range(10):
        x, y, z = (A.field.random(rng, (n,)) for _ in range(3))
        assert A.field.equal(A.multiply(A.multiply(x, y), z), A.multiply(x, A.multiply(y, z)))
        assert A.field.equal(A.multiply(one, x), x) and A.field.equal(A.multiply(x, one), x)


def test_rational_field_algebra():
    A = linear_a2(Rationals())
    assert A.dim == 3 and A.field == Rationals()

import pytest

from siltlab.algebra import dual_numbers, linear_a2, semisimple
from siltlab.bridge import complex_algebra
from siltlab.complexes import ChainComplex, direct_sum_complex, stalk
from siltlab.modules import hom_space, regular_module, standard_modules


@pytest.fixture(scope="session")
def a2():
    return linear_a2()


@pytest.fixture(scope="session")
def mods(a2):
    """P = P(v0) simple projective, Q = P(v-1) projective-injective, S = S(v-1)."""
    sm = standard_modules(a2)
    return {"P": sm.projectives["v0"], "Q": sm.projectives["v-1"], "S": sm.simples["v-1"],
            "A": regular_module(a2), "sm": sm}


@pytest.fixture(scope="session")
def xpq(a2, mods):
    P, Q = mods["P"], mods["Q"]
    return ChainComplex(a2, {-1: P, 0: Q}, {-1: hom_space(P, Q)[0]})


@pytest.fixture(scope="session")
def xpq_q(xpq, mods):
    return direct_sum_complex([xpq, stalk(mods["Q"], 0)])


@pytest.fixture(scope="session")
def b2(a2):
    return complex_algebra(a2, 2)


@pytest.fixture(scope="session")
def b3(a2):
    return complex_algebra(a2, 3)


@pytest.fixture(scope="session")
def kfield():
    return semisimple()


@pytest.fixture(scope="session")
def dual():
    return dual_numbers()

import numpy as np
import pytest

from siltlab.bridge import canonical_tilting, to_complex
from siltlab.complexes import (cone, direct_sum_complex, identity_map, is_homotopy_equivalence_pair,
                               random_chain_map, random_complex, stalk)
from siltlab.errors import NotProjectiveTerms
from siltlab.minimal import (complexes_isomorphic_indecomposable, decompose_complex, is_minimal, minimal_model,
                             same_summand_multiset)
from siltlab.modules import projective_rep


def test_strips_contractible(xpq, mods):
    X = direct_sum_complex([xpq, cone(identity_map(stalk(mods["Q"], 0)))])
    m = minimal_model(X)
    assert m.steps == 1
    assert complexes_isomorphic_indecomposable(m.complex, xpq)
    assert m.project.compose(m.include).total_matrix().tolist() == identity_map(m.complex).total_matrix().tolist()
    assert is_homotopy_equivalence_pair(m.include, m.project)


def test_idempotent(xpq):
    assert is_minimal(xpq)
    assert minimal_model(xpq).steps == 0


def test_canonical_tilting_complex(b2, mods):
    M = minimal_model(to_complex(b2, canonical_tilting(b2))).complex
    assert M.degrees == [-1]
    assert M.term(-1).dimension_vector() == mods["A"].dimension_vector()


def test_requires_projective_terms(mods):
    with pytest.raises(NotProjectiveTerms):
        minimal_model(stalk(mods["S"], 0))


def test_decompose_complex(xpq, mods, a2):
    parts = decompose_complex(xpq)
    assert len(parts) == 1 and parts[0][1] == 1
    parts = decompose_complex(stalk(mods["A"], 0))
    assert sorted(X.term(0).dimension_vector() for X, _ in parts) == [(0, 1), (1, 1)]
    parts = decompose_complex(direct_sum_complex([xpq, xpq]))
    assert [m for _, m in parts] == [2]


def test_random_certificates(a2):
    rng = np.random.default_rng(2)
    for _ in range(10):
        terms = {i: projective_rep(a2, [str(v) for v in rng.choice(a2.vertices, size=rng.integers(1, 4))])
                 for i in (-1, 0, 1)}
        X = random_complex(terms, rng)
        X = direct_sum_complex([X, cone(random_chain_map(X, X, rng))])
        m = minimal_model(X)
        assert is_minimal(m.complex)
        assert is_homotopy_equivalence_pair(m.include, m.project)
        again = minimal_model(m.complex)
        assert again.steps == 0
        assert same_summand_multiset(decompose_complex(m.complex), decompose_complex(X))

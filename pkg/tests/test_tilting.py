import numpy as np
import pytest

from siltlab.bridge import canonical_cotilting, canonical_tilting, random_rep_p
from siltlab.decompose import decompose
from siltlab.homological import ExceedsCap, ext_dim, pd
from siltlab.modules import direct_sum, dualize, injective_cogenerator, regular_module
from siltlab.tilting import is_cotilting, is_tilting


def test_regular_module_is_0_tilting(a2, b2):
    assert is_tilting(regular_module(a2), 0).verdict
    assert is_tilting(regular_module(b2.algebra), 0).verdict


def test_apr_tilt(mods):
    r = is_tilting(direct_sum([mods["Q"], mods["S"]]), 1)
    assert r.verdict and r.stage == "coresolution"
    assert [f.target.dimension_vector() for f in r.coresolution] == [(2, 2), (1, 0)]


def test_failure_stages(mods, a2):
    r = is_tilting(direct_sum([mods["P"], mods["S"]]), 1)
    assert not r.verdict and r.stage == "self-extension-1"
    r = is_tilting(mods["S"], 0)
    assert not r.verdict and r.stage == "projective-dimension"
    r = is_tilting(mods["Q"], 1)
    assert not r.verdict and r.stage in ("approximation-not-injective", "coresolution-too-long")


def test_cotilting(mods, a2):
    assert is_cotilting(injective_cogenerator(a2), 0).verdict
    M = direct_sum([mods["P"], mods["S"]])
    assert is_cotilting(M, 1).verdict == is_tilting(dualize(M), 1).verdict
    assert not is_cotilting(M, 1).verdict


@pytest.mark.parametrize("n", [2, 3])
def test_canonical_objects(a2, n):
    from siltlab.bridge import complex_algebra
    B = complex_algebra(a2, n)
    assert is_tilting(canonical_tilting(B), n - 1).verdict
    assert is_cotilting(canonical_cotilting(B), n - 1).verdict


def _classical_tilting_by_count(M, rank):
    """pd <= 1, no self-extension and as many indecomposable summands as simples."""
    p = pd(M)
    if isinstance(p, ExceedsCap) or p > 1:
        return False
    if ext_dim(M, M, 1) != 0:
        return False
    return len(decompose(M)) == rank


def test_tilting_matches_summand_count_on_random_modules(b2):
    rng = np.random.default_rng(11)
    rank = len(b2.algebra.vertices)
    agree, positives = 0, 0
    for _ in range(25):
        parts = [random_rep_p(b2, rng) for _ in range(3)]
        parts = [X for X in parts if X.dim]
        if not parts:
            continue
        M = direct_sum(parts + [canonical_tilting(b2)] if rng.integers(2) else parts)
        want = _classical_tilting_by_count(M, rank)
        got = bool(is_tilting(M, 1).verdict)
        agree += want == got
        positives += got
        assert want == got
    assert positives > 0

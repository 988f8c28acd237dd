"""Witness engines: frozen examples, hypothesis gates, exhaustive sweeps."""

import pytest
from hypothesis import given, settings, strategies as st

from repgrowth.dominance import HypothesisError, bracket, dominance_witness, is_good
from repgrowth.rootdata import root_datum
from repgrowth.witness import (
    a5_good_family,
    good_witness,
    incr_witness,
    m_good_witness,
    middle2_witness,
    middle_witness,
)


def centre(r):
    return (r - 1) // 2


def window(r, m):
    k = centre(r)
    return k - m + 1, r - k + m


# --- frozen examples --------------------------------------------------------
# Each row: engine inputs, expected witness, expected chain coefficients.
# The chain is re-verified through sub(source, root_combination(coeffs)), so
# the table only fixes values that integer arithmetic can recheck on the spot.

INCR_PINS = [
    (3, (3, 1, 0), 1, (1, 2, 0), (1, 0, 0)),
    (5, (0, 3, 0, 0, 1), 2, (1, 1, 1, 0, 1), (0, 1, 0, 0, 0)),
]

MIDDLE_PINS = [
    (5, (1, 0, 4, 0, 1), 1, (1, 1, 2, 1, 1), (0, 0, 1, 0, 0)),
    (7, (0, 0, 5, 5, 2, 0, 0), 2, (0, 1, 6, 1, 3, 1, 0), (0, 0, 1, 3, 1, 0, 0)),
]

M_GOOD_PINS = [
    (5, (3, 2, 4, 1, 2), 1, (3, 3, 2, 2, 2), (0, 0, 1, 0, 0)),
    (7, (2, 3, 1, 6, 1, 0, 2), 2, (2, 4, 2, 2, 2, 1, 2), (0, 0, 1, 3, 1, 0, 0)),
]

MIDDLE2_PINS = [
    (4, (2, 0, 0, 1), (0, 1, 0, 1), (1, 0, 0, 0)),
    (5, (1, 1, 0, 0, 2), (0, 0, 1, 0, 2), (1, 1, 0, 0, 0)),
]

GOOD_PINS = [
    (3, (3, 2, 2), (2, 1, 3), (1, 1, 0)),
    (4, (2, 3, 3, 2), (3, 2, 2, 3), (0, 1, 1, 0)),
    (5, (1, 2, 3, 2, 1), (3, 1, 1, 1, 3), (0, 2, 3, 2, 0)),
]


@pytest.mark.parametrize("rank,w,m,expect_mu,expect_coeffs", INCR_PINS)
def test_incr_pins(rank, w, m, expect_mu, expect_coeffs):
    datum = root_datum("A", rank)
    mu, chain = incr_witness(datum, w, m)
    assert mu == expect_mu
    assert chain.root_coeffs == expect_coeffs
    assert chain.verify(datum, w)
    assert bracket(datum, mu) == bracket(datum, w)
    assert mu[m] == w[m] + 1 and mu[m + 1:] == w[m + 1:]


@pytest.mark.parametrize("rank,w,m,expect_mu,expect_coeffs", MIDDLE_PINS)
def test_middle_pins(rank, w, m, expect_mu, expect_coeffs):
    datum = root_datum("A", rank)
    mu, chain = middle_witness(datum, w, m)
    assert mu == expect_mu
    assert chain.root_coeffs == expect_coeffs
    assert chain.verify(datum, w)
    lo, hi = window(rank, m)
    assert all(mu[i - 1] > 0 for i in range(lo, hi + 1))


@pytest.mark.parametrize("rank,w,m,expect_mu,expect_coeffs", M_GOOD_PINS)
def test_m_good_pins(rank, w, m, expect_mu, expect_coeffs):
    datum = root_datum("A", rank)
    mu, chain = m_good_witness(datum, w, m)
    assert mu == expect_mu
    assert chain.root_coeffs == expect_coeffs
    assert chain.verify(datum, w)
    lo, hi = window(rank, m)
    assert all(mu[i - 1] > 0 for i in range(lo, hi + 1))


@pytest.mark.parametrize("rank,w,expect_mu,expect_coeffs", MIDDLE2_PINS)
def test_middle2_pins(rank, w, expect_mu, expect_coeffs):
    datum = root_datum("A", rank)
    mu, chain = middle2_witness(datum, w)
    assert mu == expect_mu
    assert chain.root_coeffs == expect_coeffs
    assert chain.verify(datum, w)
    assert bracket(datum, mu) == bracket(datum, w)
    k = centre(rank)
    assert any(mu[t - 1] > 0 for t in (k + 1, rank - k))


def test_middle2_identity_when_centre_already_positive():
    datum = root_datum("A", 5)
    w = (4, 0, 1, 0, 0)
    mu, chain = middle2_witness(datum, w)
    assert mu == w
    assert chain.root_coeffs == (0, 0, 0, 0, 0)


@pytest.mark.parametrize("rank,w,expect_mu,expect_coeffs", GOOD_PINS)
def test_good_pins(rank, w, expect_mu, expect_coeffs):
    datum = root_datum("A", rank)
    mu, chain = good_witness(datum, w)
    assert mu == expect_mu
    assert chain.root_coeffs == expect_coeffs
    assert chain.verify(datum, w)
    assert is_good(mu)


# --- hypothesis gates -------------------------------------------------------

def test_incr_hypothesis_message():
    datum = root_datum("A", 3)
    with pytest.raises(HypothesisError, match="Σ i·a_i > m"):
        incr_witness(datum, (1, 1, 1), 1)


def test_middle_hypothesis_messages():
    with pytest.raises(HypothesisError, match=r"a_\(k\+1\) ≥ 2m\+1"):
        middle_witness(root_datum("A", 5), (4, 0, 2, 0, 4), 1)
    with pytest.raises(HypothesisError, match=r"a_\(k\+1\)\+a_\(k\+2\) ≥ 2m\+3"):
        middle_witness(root_datum("A", 4), (3, 1, 2, 3), 1)


def test_m_good_hypothesis_message():
    with pytest.raises(HypothesisError, match="bracket ≥"):
        m_good_witness(root_datum("A", 5), (1, 0, 0, 0, 1), 1)


def test_middle2_hypothesis_message():
    with pytest.raises(HypothesisError, match=r"bracket ≥ 2k\+1"):
        middle2_witness(root_datum("A", 5), (1, 0, 0, 0, 0))


def test_good_hypothesis_message():
    with pytest.raises(HypothesisError, match="2·bracket ≥"):
        good_witness(root_datum("A", 5), (1, 1, 1, 1, 1))


def test_window_parameter_bounds():
    a3 = root_datum("A", 3)
    for bad in (0, 2):
        with pytest.raises(HypothesisError, match="window parameter"):
            incr_witness(a3, (3, 1, 0), bad)
    with pytest.raises(HypothesisError, match="window parameter"):
        middle_witness(root_datum("A", 5), (0, 0, 9, 0, 0), 3)


def test_engines_require_type_a():
    datum = root_datum("B", 3)
    with pytest.raises(HypothesisError, match="type A only"):
        good_witness(datum, (1, 1, 1))


def test_engines_require_dominant():
    datum = root_datum("A", 3)
    with pytest.raises(HypothesisError, match="not dominant"):
        middle2_witness(datum, (1, -1, 3))


# --- exhaustive sweeps ------------------------------------------------------

def weights_up_to(rank, total):
    if rank == 0:
        yield ()
        return
    for head in range(total + 1):
        for tail in weights_up_to(rank - 1, total - head):
            yield (head,) + tail


def middle_hypothesis_holds(rank, w, m):
    k = centre(rank)
    if rank % 2:
        return w[k] >= 2 * m + 1
    return w[k] + w[k + 1] >= 2 * m + 3


def m_good_threshold(rank, m):
    k = centre(rank)
    if rank % 2:
        return 2 * m * (k + 1) + 2 * k + 1
    return (2 * m + 2) * (k + 1) + 2 * k + 1


def test_exhaustive_sweep_small_ranks():
    """Run every engine on every dominant weight with coefficient sum <= 8,
    ranks 3..5, and check chains plus the promised output shapes.  Chains are
    cross-checked against the independent linear-solve route."""
    hits = {"incr": 0, "middle": 0, "m-good": 0, "middle2": 0, "good": 0}
    for rank in (3, 4, 5):
        datum = root_datum("A", rank)
        k = centre(rank)
        for w in weights_up_to(rank, 8):
            br = bracket(datum, w)
            for m in range(1, k + 1):
                if sum(i * w[i - 1] for i in range(1, m + 1)) > m:
                    mu, chain = incr_witness(datum, w, m)
                    assert chain.verify(datum, w)
                    solved = dominance_witness(datum, w, mu)
                    assert solved is not None
                    assert solved.root_coeffs == chain.root_coeffs
                    assert bracket(datum, mu) == br
                    assert mu[m] == w[m] + 1
                    hits["incr"] += 1
                if middle_hypothesis_holds(rank, w, m):
                    mu, chain = middle_witness(datum, w, m)
                    assert chain.verify(datum, w)
                    lo, hi = window(rank, m)
                    assert all(mu[i - 1] > 0 for i in range(lo, hi + 1))
                    hits["middle"] += 1
                if br >= m_good_threshold(rank, m):
                    mu, chain = m_good_witness(datum, w, m)
                    assert chain.verify(datum, w)
                    lo, hi = window(rank, m)
                    assert all(mu[i - 1] > 0 for i in range(lo, hi + 1))
                    hits["m-good"] += 1
            if br >= 2 * k + 1:
                mu, chain = middle2_witness(datum, w)
                assert chain.verify(datum, w)
                assert any(mu[t - 1] > 0 for t in (k + 1, rank - k))
                assert bracket(datum, mu) == br
                hits["middle2"] += 1
            if 2 * br >= rank * rank + 2 * rank - 2:
                mu, chain = good_witness(datum, w)
                assert chain.verify(datum, w)
                assert is_good(mu)
                hits["good"] += 1
    # Every engine must actually have fired many times.
    assert all(count > 50 for count in hits.values()), hits


@settings(max_examples=150, deadline=None)
@given(st.integers(3, 9), st.data())
def test_good_witness_property(rank, data):
    datum = root_datum("A", rank)
    w = data.draw(st.tuples(*[st.integers(0, 2 * rank)] * rank))
    if 2 * bracket(datum, w) < rank * rank + 2 * rank - 2:
        with pytest.raises(HypothesisError):
            good_witness(datum, w)
        return
    mu, chain = good_witness(datum, w)
    assert chain.verify(datum, w)
    assert is_good(mu)


@settings(max_examples=150, deadline=None)
@given(st.integers(3, 9), st.data())
def test_middle2_property(rank, data):
    datum = root_datum("A", rank)
    k = centre(rank)
    w = data.draw(st.tuples(*[st.integers(0, 6)] * rank))
    if bracket(datum, w) < 2 * k + 1:
        with pytest.raises(HypothesisError):
            middle2_witness(datum, w)
        return
    mu, chain = middle2_witness(datum, w)
    assert chain.verify(datum, w)
    assert any(mu[t - 1] > 0 for t in (k + 1, rank - k))
    assert bracket(datum, mu) == bracket(datum, w)


# --- rank-5 good families ---------------------------------------------------

def test_a5_family_canonical_input():
    family = a5_good_family((0, 0, 25, 0, 0))
    assert len(family) == 243
    members = [mu for mu, _ in family]
    assert len(set(members)) == 243
    assert members[0] == (5, 5, 5, 5, 5)
    assert members[-1] == (3, 5, 5, 5, 3)
    datum = root_datum("A", 5)
    for mu, chain in family:
        assert is_good(mu)
        assert chain.verify(datum, (0, 0, 25, 0, 0))


def test_a5_family_orbit_total():
    # Good weights have trivial stabilizer, so each orbit has 720 elements.
    from repgrowth.dominance import orbit_length

    datum = root_datum("A", 5)
    family = a5_good_family((0, 0, 25, 0, 0))
    total = sum(orbit_length(datum, mu) for mu, _ in family)
    assert total == 243 * 720 == 174960


def test_a5_family_bracket_route():
    w = (20, 10, 1, 10, 20)
    family = a5_good_family(w)
    assert len(family) == 243
    datum = root_datum("A", 5)
    for mu, chain in family:
        assert is_good(mu)
        assert chain.verify(datum, w)


def test_a5_family_hypothesis_message():
    with pytest.raises(HypothesisError, match="bracket ≥ 77"):
        a5_good_family((0, 0, 24, 0, 0))

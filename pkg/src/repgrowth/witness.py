"""Constructive witnesses below a dominant weight in type A.

Each engine takes a dominant weight, checks a quoted hypothesis, and returns
a dominated dominant weight with the promised shape, together with the
WitnessChain of simple-root multiplicities that proves the dominance.  All
arithmetic is integer arithmetic on coefficient tuples; every returned chain
is re-verified before it leaves the module.

Throughout, r is the rank, coefficients are 1-based in the prose, and
k = floor((r-1)/2) marks the centre: index k+1 for odd r, indices k+1 and
k+2 for even r.
"""

from __future__ import annotations

from .dominance import HypothesisError, WitnessChain, bracket, is_good
from .rootdata import RootDatum, Weight, is_dominant, root_datum, sub


def _require_type_a(datum: RootDatum, w) -> Weight:
    if datum.family != "A":
        raise HypothesisError("witness engines are defined for type A only")
    w = datum.check_weight(w)
    if not is_dominant(w):
        raise HypothesisError(f"weight {w} is not dominant")
    return w


def _centre(r: int) -> int:
    return (r - 1) // 2


def _left_sum(a: list[int], m: int) -> int:
    """sum of i*a_i over 1 <= i <= m."""
    return sum(i * a[i - 1] for i in range(1, m + 1))


def _finish(datum: RootDatum, source: Weight, a: list[int],
            kvec: list[int]) -> tuple[Weight, WitnessChain]:
    mu = tuple(a)
    chain = WitnessChain(target=mu, root_coeffs=tuple(kvec))
    assert chain.verify(datum, source), "witness chain failed self-check"
    assert is_dominant(mu), f"engine produced non-dominant {mu}"
    return mu, chain


def _sub_consec(a: list[int], kvec: list[int], i: int, j: int) -> None:
    """Subtract alpha_i + ... + alpha_j (weight delta touches i-1, i, j, j+1)."""
    r = len(a)
    if i >= 2:
        a[i - 2] += 1
    a[i - 1] -= 1
    a[j - 1] -= 1
    if j <= r - 1:
        a[j] += 1
    for t in range(i, j + 1):
        kvec[t - 1] += 1


def _incr_step(a: list[int], kvec: list[int], m: int) -> None:
    """Raise a_{m+1} by one, keeping the bracket statistic fixed.

    Requires sum(i*a_i : i <= m) > m.  Walks the largest loaded index j <= m
    rightward: a heavy entry sheds a single alpha_j, a unit entry sheds the
    consecutive root run from the next loaded index below it.
    """
    if not _left_sum(a, m) > m:
        raise HypothesisError(
            f"hypothesis Σ i·a_i > m fails: "
            f"sum over i <= {m} is {_left_sum(a, m)}")
    while True:
        j = max(t for t in range(1, m + 1) if a[t - 1] > 0)
        if a[j - 1] >= 2:
            _sub_consec(a, kvec, j, j)
        else:
            i = max(t for t in range(1, j) if a[t - 1] > 0)
            _sub_consec(a, kvec, i, j)
        if j == m:
            return


def _reversed_incr_step(a: list[int], kvec: list[int], m: int) -> None:
    """Mirror image of _incr_step acting on the last m coefficients."""
    a.reverse()
    kvec.reverse()
    try:
        _incr_step(a, kvec, m)
    finally:
        a.reverse()
        kvec.reverse()


def incr_witness(datum: RootDatum, w, m: int) -> tuple[Weight, WitnessChain]:
    """Witness with the (m+1)-st coefficient raised by one and the bracket
    statistic preserved; coefficients beyond m+1 are untouched."""
    w = _require_type_a(datum, w)
    r, k = datum.rank, _centre(datum.rank)
    if not 1 <= m <= k:
        raise HypothesisError(f"window parameter m={m} outside 1..{k}")
    a = list(w)
    kvec = [0] * r
    _incr_step(a, kvec, m)
    mu, chain = _finish(datum, w, a, kvec)
    assert mu[m] == w[m] + 1 and mu[m + 1:] == w[m + 1:]
    assert bracket(datum, mu) == bracket(datum, w)
    return mu, chain


def _middle_kvec(r: int, a: list[int], m: int) -> list[int]:
    """Root multiplicities clearing the centre; a must satisfy the
    parity-dependent hypothesis.  Accepts m = 0 (centre rebalancing only)."""
    k = _centre(r)
    kv = [0] * r
    if r % 2:
        c = k + 1
        if a[c - 1] < 2 * m + 1:
            raise HypothesisError(
                f"hypothesis a_(k+1) ≥ 2m+1 fails: "
                f"a_{c} = {a[c - 1]} < {2 * m + 1}")
        for s in range(m):
            for t in range(c - s, c + s + 1):
                kv[t - 1] += m - s
    else:
        c1, c2 = k + 1, k + 2
        if a[c1 - 1] + a[c2 - 1] < 2 * m + 3:
            raise HypothesisError(
                f"hypothesis a_(k+1)+a_(k+2) ≥ 2m+3 fails: "
                f"{a[c1 - 1]}+{a[c2 - 1]} < {2 * m + 3}")
        # Rebalance when one centre entry is light: shed a staircase of
        # single roots walking away from the heavy side.
        if a[c2 - 1] <= m:
            s = m + 1 - a[c2 - 1]
            for t in range(s):
                kv[c1 - 1 - t] += s - t
        elif a[c1 - 1] <= m:
            s = m + 1 - a[c1 - 1]
            for t in range(s):
                kv[c2 - 1 + t] += s - t
        for s in range(m):
            for t in range(c1 - s, c2 + s + 1):
                kv[t - 1] += m - s
    return kv


def _window(r: int, m: int) -> tuple[int, int]:
    k = _centre(r)
    return k - m + 1, r - k + m


def middle_witness(datum: RootDatum, w, m: int) -> tuple[Weight, WitnessChain]:
    """Witness positive on the centred window of half-width m."""
    w = _require_type_a(datum, w)
    r, k = datum.rank, _centre(datum.rank)
    if not 1 <= m <= k:
        raise HypothesisError(f"window parameter m={m} outside 1..{k}")
    return _middle_apply(datum, w, m)


def _middle_apply(datum: RootDatum, w: Weight,
                  m: int) -> tuple[Weight, WitnessChain]:
    r = datum.rank
    a = list(w)
    kv = _middle_kvec(r, a, m)
    mu = sub(w, datum.root_combination(kv))
    lo, hi = _window(r, m)
    muL, chain = _finish(datum, w, list(mu), kv)
    assert all(muL[i - 1] > 0 for i in range(lo, hi + 1))
    return muL, chain


def _m_good_threshold(r: int, m: int) -> int:
    k = _centre(r)
    if r % 2:
        return 2 * m * (k + 1) + 2 * k + 1
    return (2 * m + 2) * (k + 1) + 2 * k + 1


def m_good_witness(datum: RootDatum, w, m: int) -> tuple[Weight, WitnessChain]:
    """Witness positive on the centred window of half-width m, obtained from
    the bracket-mass hypothesis alone."""
    w = _require_type_a(datum, w)
    k = _centre(datum.rank)
    if not 1 <= m <= k:
        raise HypothesisError(f"window parameter m={m} outside 1..{k}")
    return _m_good_apply(datum, w, m)


def _m_good_apply(datum: RootDatum, w: Weight,
                  m: int) -> tuple[Weight, WitnessChain]:
    r, k = datum.rank, _centre(datum.rank)
    br = bracket(datum, w)
    need = _m_good_threshold(r, m)
    if br < need:
        raise HypothesisError(
            f"hypothesis bracket ≥ {need} fails: bracket = {br}")
    a = list(w)
    kvec = [0] * r
    centre_need = 2 * m + 1 if r % 2 else 2 * m + 3
    while True:
        t = a[k] if r % 2 else a[k] + a[k + 1]
        if t >= centre_need:
            break
        # Bracket mass off the centre exceeds 2k, so one side can feed it.
        if _left_sum(a, k) > k:
            _incr_step(a, kvec, k)
        else:
            _reversed_incr_step(a, kvec, k)
    kv_mid = _middle_kvec(r, a, m)
    for i, x in enumerate(kv_mid):
        kvec[i] += x
    mu = sub(w, datum.root_combination(kvec))
    lo, hi = _window(r, m)
    muL, chain = _finish(datum, w, list(mu), kvec)
    assert all(muL[i - 1] > 0 for i in range(lo, hi + 1))
    return muL, chain


def middle2_witness(datum: RootDatum, w) -> tuple[Weight, WitnessChain]:
    """Witness with a positive coefficient at index k+1 or r-k, preserving
    the bracket statistic.  Needs bracket >= 2k+1."""
    w = _require_type_a(datum, w)
    r, k = datum.rank, _centre(datum.rank)
    br = bracket(datum, w)
    if br < 2 * k + 1:
        raise HypothesisError(
            f"hypothesis bracket ≥ 2k+1 fails: bracket = {br} < {2 * k + 1}")
    targets = (k + 1, r - k)
    if any(w[t - 1] > 0 for t in targets):
        return w, WitnessChain(target=w, root_coeffs=(0,) * r)
    # Both centre slots empty; r >= 3 here since small ranks always hit above.
    a = list(w)
    kvec = [0] * r
    if _left_sum(a, k) > k:
        _incr_step(a, kvec, k)
    else:
        _reversed_incr_step(a, kvec, k)
    mu, chain = _finish(datum, w, a, kvec)
    assert any(mu[t - 1] > 0 for t in targets)
    assert bracket(datum, mu) == br
    return mu, chain


def good_witness(datum: RootDatum, w) -> tuple[Weight, WitnessChain]:
    """Witness with every coefficient positive; needs
    2*bracket >= r^2 + 2r - 2."""
    w = _require_type_a(datum, w)
    r, k = datum.rank, _centre(datum.rank)
    br = bracket(datum, w)
    if 2 * br < r * r + 2 * r - 2:
        raise HypothesisError(
            f"hypothesis 2·bracket ≥ r²+2r−2 fails: "
            f"2·{br} < {r * r + 2 * r - 2}")
    # The threshold above equals the m-good threshold at m = k for both
    # parities, so the window engine applies verbatim with full window.
    mu, chain = _m_good_apply(datum, w, k)
    assert is_good(mu)
    return mu, chain


# ---------------------------------------------------------------------------
# Rank-5 good families.

_RANK5_BETA = (0, 1, 3, 1, 0)  # alpha_2 + 3*alpha_3 + alpha_4


def a5_good_family(w) -> list[tuple[Weight, WitnessChain]]:
    """243 distinct good weights dominated by w (rank 5), each with a chain.

    Requires either a_3 >= 25 already, or bracket(w) >= 77; in the latter
    case repeated bracket-preserving raises feed the middle coefficient
    until it reaches 25, then the family mu - 5*beta - delta is emitted for
    all delta with root coefficients in {0, 1, 2}.
    """
    datum = root_datum("A", 5)
    w = _require_type_a(datum, w)
    a = list(w)
    kvec = [0] * 5
    if a[2] < 25:
        if bracket(datum, w) < 77:
            raise HypothesisError(
                "hypothesis bracket ≥ 77 (or a_3 ≥ 25) fails: "
                f"bracket = {bracket(datum, w)}, a_3 = {a[2]}")
        while a[2] < 25:
            if a[0] + 2 * a[1] >= 3:
                _incr_step(a, kvec, 2)
            else:
                # bracket - 3*a_3 >= 5, so the right side carries >= 3
                _reversed_incr_step(a, kvec, 2)
    for i, x in enumerate(_RANK5_BETA):
        kvec[i] += 5 * x
    gamma = sub(w, datum.root_combination(kvec))
    assert all(c >= 5 for c in gamma)
    family = []
    for d1 in range(3):
        for d2 in range(3):
            for d3 in range(3):
                for d4 in range(3):
                    for d5 in range(3):
                        delta = (d1, d2, d3, d4, d5)
                        kv = tuple(k + d for k, d in zip(kvec, delta))
                        member = sub(w, datum.root_combination(kv))
                        assert is_good(member)
                        chain = WitnessChain(target=member, root_coeffs=kv)
                        assert chain.verify(datum, w)
                        family.append((member, chain))
    assert len({mu for mu, _ in family}) == 243
    return family

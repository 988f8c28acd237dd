"""Partition combinatorics and the symmetric/alternating growth arithmetic.

The sign-twist involution on p-regular partitions is computed through its
two-row symbol: strip boundary strips of length p (with the row-jump rule)
until the diagram is empty, complement the row-count line, and rebuild.  The
rebuild step inverts the stripping by a small exact search; every layer is
re-checked by stripping the candidate forward, so a wrong branch cannot
survive.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from mpmath import iv

from .bounds import (BoundReport, ExactValue, ExternalValue, Root2Power,
                     _inputs, _interval_value, _is_prime, f_interval)
from .dominance import HypothesisError
from .intervals import (Certificate, certify_cmp, exact, exact_compare_cert,
                        power)

Partition = tuple[int, ...]


def check_partition(lam) -> Partition:
    lam = tuple(int(x) for x in lam)
    if any(a <= 0 for a in lam):
        raise HypothesisError(f"parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise HypothesisError(f"parts must be weakly decreasing: {lam}")
    return lam


def _check_char(p: int) -> int:
    if p != 0 and not _is_prime(p):
        raise HypothesisError(f"characteristic {p} is neither 0 nor prime")
    return p


# ---------------------------------------------------------------------------
# Partition function, exact and enveloped.

_PCOUNT = [1]


def partition_count(n: int) -> int:
    """Exact p(n) by the pentagonal-number recurrence."""
    if n < 0:
        raise HypothesisError("partition function needs n >= 0")
    while len(_PCOUNT) <= n:
        m = len(_PCOUNT)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * _PCOUNT[m - g1]
            if g2 <= m:
                total += sign * _PCOUNT[m - g2]
            k += 1
        _PCOUNT.append(total)
    return _PCOUNT[n]


def partition_envelope_iv(n: int):
    """Interval value of exp(pi*sqrt(2n/3))."""
    return iv.exp(iv.pi * iv.sqrt(exact(Fraction(2 * n, 3))))


def partition_bound(n: int, bits: int = 256) -> BoundReport:
    """p(n) against its exponential envelope, certified."""
    if n < 1:
        raise HypothesisError("envelope comparison needs n >= 1")
    pn = partition_count(n)
    cert = certify_cmp(lambda: exact(pn), lambda: partition_envelope_iv(n),
                       strict=True)
    return BoundReport(
        name="partition-envelope",
        inputs=_inputs(n=n),
        value=_interval_value(lambda: partition_envelope_iv(n), bits),
        valid=cert.certified,
        guard_detail=f"exact p({n}) = {pn} compared against the envelope",
        certificates=(cert,),
    )


# ---------------------------------------------------------------------------
# Weighted-composition counting (the k-coefficient and its majorant).

def _k_weights(r: int) -> list[int]:
    return [min(i, r + 1 - i) for i in range(1, r + 1)]


def _k_table(r: int, cap: int) -> list[int]:
    dp = [0] * (cap + 1)
    dp[0] = 1
    for w in _k_weights(r):
        for t in range(w, cap + 1):
            dp[t] += dp[t - w]
    return dp


def k_count(r: int, s: int) -> int:
    """Tuples (x_1..x_r) of nonnegative integers with
    sum min(i, r+1-i)*x_i = s."""
    if r < 1 or s < 0:
        raise HypothesisError("need r >= 1 and s >= 0")
    return _k_table(r, s)[s]


def k_sum_exact(r: int, cap: int) -> int:
    if r < 1 or cap < 0:
        raise HypothesisError("need r >= 1 and cap >= 0")
    return sum(_k_table(r, cap))


def k_sum_majorant(cap: int) -> int:
    """Rank-independent exact majorant sum_{s<=cap} sum_a p(a)p(s-a): every
    weight value occurs at most twice among min(i, r+1-i)."""
    total = 0
    for s in range(cap + 1):
        total += sum(partition_count(a) * partition_count(s - a)
                     for a in range(s + 1))
    return total


def k_sum_bound(cap: int, bits: int = 256) -> BoundReport:
    """The ((N+1)(N+2)/2)*exp(2*pi*sqrt(N/3)) envelope over the cumulative
    coefficient sum, certified through the rank-independent majorant."""
    if cap < 0:
        raise HypothesisError("need cap >= 0")
    maj = k_sum_majorant(cap)

    def rhs():
        lead = exact(Fraction((cap + 1) * (cap + 2), 2))
        return lead * iv.exp(2 * iv.pi * iv.sqrt(exact(Fraction(cap, 3))))

    strict = cap > 0
    cert = certify_cmp(lambda: exact(maj), rhs, strict=strict)
    note = "" if strict else "; boundary cap = 0 compares non-strictly " \
                            "(both sides equal 1)"
    return BoundReport(
        name="coefficient-sum-envelope",
        inputs=_inputs(cap=cap),
        value=_interval_value(rhs, bits),
        valid=cert.certified,
        guard_detail=f"rank-independent majorant = {maj}{note}",
        certificates=(cert,),
    )


# ---------------------------------------------------------------------------
# p-regular partitions.

def is_p_regular(lam, p: int) -> bool:
    lam = check_partition(lam)
    _check_char(p)
    if p == 0:
        return True
    run = 0
    prev = None
    for a in lam:
        run = run + 1 if a == prev else 1
        if run >= p:
            return False
        prev = a
    return True


def _first_repeat(lam, p: int) -> int:
    run = 0
    prev = None
    for a in lam:
        run = run + 1 if a == prev else 1
        if run >= p:
            return a
        prev = a
    raise AssertionError


def p_regular_partitions(n: int, p: int):
    """All p-regular partitions of n, descending lexicographic order."""
    if n < 0:
        raise HypothesisError("need n >= 0")
    _check_char(p)
    acc: list[int] = []

    def gen(remaining: int, maxpart: int, last: int, run: int):
        if remaining == 0:
            yield tuple(acc)
            return
        for v in range(min(maxpart, remaining), 0, -1):
            new_run = run + 1 if v == last else 1
            if p and new_run >= p:
                continue
            acc.append(v)
            yield from gen(remaining - v, v, v, new_run)
            acc.pop()

    yield from gen(n, n, 0, 0)


def conjugate(lam) -> Partition:
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for a in lam if a >= j)
                 for j in range(1, lam[0] + 1))


# ---------------------------------------------------------------------------
# The boundary-strip symbol and the sign-twist involution.

def _rim_runs(nu: Partition) -> list[int]:
    # row i owns boundary columns max(nu[i+1], 1) .. nu[i]
    r = len(nu)
    return [nu[i] - max(nu[i + 1] if i + 1 < r else 0, 1) + 1
            for i in range(r)]


def _strip_levels(nu: Partition, p: int) -> list[int]:
    """Nodes removed per row by one boundary pass: segments of p along the
    boundary path, jumping to the next row after each full segment."""
    counts = []
    need = p
    for run in _rim_runs(nu):
        if run >= need:
            counts.append(need)
            need = p
        else:
            counts.append(run)
            need -= run
    return counts


def _strip_p_rim(nu: Partition, p: int) -> tuple[Partition, int]:
    counts = _strip_levels(nu, p)
    rows = [nu[i] - counts[i] for i in range(len(nu))]
    mu = tuple(a for a in rows if a > 0)
    assert len(mu) == sum(1 for a in rows if a > 0) and \
        all(rows[i] >= rows[i + 1] for i in range(len(rows) - 1)), \
        f"strip of {nu} left a non-partition {rows}"
    return mu, sum(counts)


def rim_symbol(lam, p: int) -> tuple[tuple[int, int], ...]:
    """Pairs (strip size, row count) from iterated boundary stripping."""
    lam = check_partition(lam)
    if p < 2:
        raise HypothesisError("stripping needs p >= 2")
    out = []
    cur = lam
    while cur:
        mu, a = _strip_p_rim(cur, p)
        out.append((a, len(cur)))
        cur = mu
    return tuple(out)


def _add_p_rim(mu: Partition, a: int, r: int, p: int) -> Partition:
    """The unique nu with r rows whose boundary strip has size a and leaves
    mu; found by an exact search over per-row removal counts, then verified
    by stripping forward.

    The search runs bottom row up, carrying (length of the row below, need
    entering the row below).  In each row the walk either completed a
    segment (count = entering need, the row below started fresh at p) or
    exhausted the row's boundary run mid-segment (possible only when the
    base row length is exactly one short of the row below).  A short final
    segment can occur only in the bottom row, and only on an empty base row.
    The need entering the top row must come out as p.
    """
    if len(mu) > r or not r <= a <= r * p:
        raise HypothesisError(
            f"no strip layer with size {a} on {r} rows over {mu}")
    pad = list(mu) + [0] * (r - len(mu))
    sols: list[tuple[int, ...]] = []

    def settle(i: int, c: int, h: int, counts: list[int],
               used: int) -> None:
        if i == 0:
            if h == p and used == a:
                sols.append(tuple(counts))
            return
        up(i - 1, pad[i] + c, h, counts, used)

    def up(i: int, nu_next: int, h_next: int, counts: list[int],
           used: int) -> None:
        budget = a - used
        if not i + 1 <= budget <= (i + 1) * p:
            return
        floor_next = max(nu_next, 1) - 1
        lo = max(1, nu_next - pad[i])
        # segment completed in row i; the row below started fresh
        if h_next == p and pad[i] >= floor_next:
            for c in range(lo, p + 1):
                settle(i, c, c, [c] + counts, used + c)
        # row i's run exhausted mid-segment
        if pad[i] == floor_next and h_next < p:
            for c in range(lo, p - h_next + 1):
                settle(i, c, c + h_next, [c] + counts, used + c)

    bottom = r - 1
    if pad[bottom] > 0:
        pairs = [(c, c) for c in range(1, p + 1)]
    else:
        pairs = [(c, h) for c in range(1, p + 1)
                 for h in range(c, p + 1)]
    for c, h in pairs:
        settle(bottom, c, h, [c], c)

    nus = {tuple(pad[i] + c[i] for i in range(r)) for c in sols}
    assert len(nus) == 1, \
        f"strip layer ({a}, {r}) over {mu} has {len(nus)} solutions"
    nu = nus.pop()
    back, size = _strip_p_rim(nu, p)
    assert back == mu and size == a and len(nu) == r
    return nu


def mullineux(lam, p: int) -> Partition:
    """The sign-twist involution on p-regular partitions; conjugation at
    p = 0, identity at p = 2."""
    lam = check_partition(lam)
    _check_char(p)
    if not is_p_regular(lam, p):
        raise HypothesisError(
            f"part {_first_repeat(lam, p)} repeats {p} times (p = {p})")
    if p == 0:
        return conjugate(lam)
    if p == 2 or not lam:
        return lam
    sym = rim_symbol(lam, p)
    twisted = []
    for a, rows in sym:
        eps = 0 if a % p == 0 else 1
        new_rows = a - rows + eps
        assert 1 <= new_rows <= a
        twisted.append((a, new_rows))
    nu: Partition = ()
    for a, rows in reversed(twisted):
        nu = _add_p_rim(nu, a, rows, p)
    assert rim_symbol(nu, p) == tuple(twisted)
    assert is_p_regular(nu, p)
    return nu


def m_p(lam, p: int) -> int:
    """max of the first part and the sign-twist image's first part (the
    first part alone at p = 2; the part count stands in at p = 0)."""
    lam = check_partition(lam)
    if not lam:
        return 0
    if not is_p_regular(lam, p):
        raise HypothesisError(f"{lam} is not {p}-regular")
    if p == 2:
        return lam[0]
    if p == 0:
        return max(lam[0], len(lam))
    return max(lam[0], mullineux(lam, p)[0])


def bound3_value(lam, p: int) -> BoundReport:
    """Dimension lower bound 2^((n - m_p)/2) as an exact half-power of 2."""
    lam = check_partition(lam)
    n = sum(lam)
    if n < 5:
        raise HypothesisError("the half-power bound needs |partition| >= 5")
    m = m_p(lam, p)
    return BoundReport(
        name="half-power-lower",
        inputs=_inputs(partition=",".join(map(str, lam)), p=p),
        value=Root2Power(halves=n - m),
        valid=True,
        guard_detail=f"statistic m = {m}; compare by squaring only",
    )


def hook_length_dim(lam) -> int:
    """Exact hook-length dimension count."""
    lam = check_partition(lam)
    n = sum(lam)
    conj = conjugate(lam)
    denom = 1
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            denom *= row + conj[j - 1] - i - j + 1
    q, rem = divmod(factorial(n), denom)
    assert rem == 0
    return q


# ---------------------------------------------------------------------------
# Symmetric / alternating growth arithmetic.

def b_iv(n: int):
    """Interval value of n^2.5/12.32 (exactly 25*n^2.5/308)."""
    return exact(Fraction(25, 308)) * power(n, Fraction(5, 2))


def _b_less_cert(value: int, n: int) -> Certificate:
    # value < 25*n^2.5/308, squared to stay in integers
    return exact_compare_cert((308 * value) ** 2, 625 * n ** 5)


def _a_combination_cert() -> Certificate:
    # (1 + 2^3.5) < 308/25, squared form of 2^3.5 < 283/25
    return exact_compare_cert(625 * 128, 283 ** 2)


_SYM_WINDOWS = ((677, 60), (172, 39), (53, 21))


def sym_rn_bound(r: int, n: int, p: int, group: str = "S",
                 bits: int = 256) -> BoundReport:
    """Certified count bound for irreducible representations of dimension
    at most n, for the symmetric group (S), the alternating group (A), or
    a double cover of either (cover)."""
    if group not in ("S", "A", "cover"):
        raise HypothesisError(f"group must be S, A, or cover, not {group!r}")
    if r < 5:
        raise HypothesisError("the growth statement needs r >= 5")
    if n < 1:
        raise HypothesisError("dimension cap must be >= 1")
    _check_char(p)
    inp = _inputs(r=r, n=n, p=p, group=group)
    if r <= 12:
        return BoundReport(
            name="small-rank-tables", inputs=inp,
            value=ExternalValue("5 <= r <= 12 checked against modular "
                                "character tables"),
            valid=True,
            guard_detail="external table fact; no certificate produced")
    if n == 1:
        return BoundReport(
            name="below-case-analysis", inputs=inp,
            value=ExternalValue("the case analysis assumes n >= 2"),
            valid=False,
            guard_detail="n = 1 sits below every branch of the argument")

    if group == "cover":
        thr = 2 ** ((r - 3) // 2)
        if n >= thr:
            val = 4 * partition_count(r)
            cert = exact_compare_cert(val * val, n ** 5)
            return BoundReport(
                name="cover-class-count", inputs=inp,
                value=ExactValue(val), valid=cert.certified,
                guard_detail=(f"n >= 2^((r-3)/2) = {thr}: the class count "
                              "4*p(r); certificate compares squares "
                              "against n^5"),
                certificates=(cert,))
        if n < 11:
            cert = exact_compare_cert(4, n ** 5)
            return BoundReport(
                name="below-min-degree", inputs=inp,
                value=ExactValue(2), valid=cert.certified,
                guard_detail=("n < 11 <= r - 2 <= minimal nontrivial "
                              "projective degree (external): at most the "
                              "two one-dimensional twists"),
                certificates=(cert,))
        cert = _a_combination_cert()
        return BoundReport(
            name="cover-reduction", inputs=inp,
            value=_interval_value(lambda: b_iv(n) + 2 * b_iv(2 * n), bits),
            valid=cert.certified,
            guard_detail=("n below 2^((r-3)/2): faithful spin "
                          "representations are excluded by an external "
                          "reduction; the larger quotient bound "
                          "(alternating combination) is reported"),
            certificates=(cert,))

    if group == "S":
        if n >= 1503:
            cert = certify_cmp(lambda: f_interval("f5", n),
                               lambda: b_iv(n), strict=True)
            return BoundReport(
                name="sym-sublinear", inputs=inp,
                value=_interval_value(lambda: b_iv(n), bits),
                valid=cert.certified,
                guard_detail=("n >= 1503: the sublinear envelope stays "
                              "below n^2.5/12.32"),
                certificates=(cert,))
        if 2 * n < r * r - 5 * r + 2:
            cert = exact_compare_cert(16, n ** 5)
            return BoundReport(
                name="sym-low-dimension", inputs=inp,
                value=ExactValue(4), valid=cert.certified,
                guard_detail=("n < (r^2-5r+2)/2: external low-degree "
                              "classification leaves at most 4 modules"),
                certificates=(cert,))
        for n_low, r_cap in _SYM_WINDOWS:
            if n >= n_low:
                assert r <= r_cap, "window forces the rank cap"
                val = partition_count(r)
                chain = exact_compare_cert(val, partition_count(r_cap),
                                           strict=False)
                bcert = _b_less_cert(partition_count(r_cap), n_low)
                return BoundReport(
                    name=f"sym-window-{n_low}", inputs=inp,
                    value=ExactValue(val),
                    valid=chain.certified and bcert.certified,
                    guard_detail=(f"window n >= {n_low} forces r <= {r_cap}"
                                  f"; p({r_cap}) certified below the "
                                  f"envelope at {n_low}, monotone in n"),
                    certificates=(chain, bcert))
        raise AssertionError("window dispatch must cover n >= 53")

    # group == "A"
    if n < 11:
        cert = exact_compare_cert(4, n ** 5)
        return BoundReport(
            name="below-min-degree", inputs=inp,
            value=ExactValue(2), valid=cert.certified,
            guard_detail=("n < 11 <= r - 2 <= minimal nontrivial degree "
                          "(external): at most the trivial module and one "
                          "companion"),
            certificates=(cert,))
    cert = _a_combination_cert()
    return BoundReport(
        name="alt-combination", inputs=inp,
        value=_interval_value(lambda: b_iv(n) + 2 * b_iv(2 * n), bits),
        valid=cert.certified,
        guard_detail=("restriction argument: count at n plus twice the "
                      "count at 2n for the symmetric group; the combined "
                      "coefficient (1+2^3.5)/12.32 is below 1"),
        certificates=(cert,))

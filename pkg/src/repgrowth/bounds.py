"""Dimension lower bounds and certified count upper bounds.

Counting arguments come in three flavors here: exact integers (products,
binomials, saturated-set sums), certified interval enclosures (anything built
from exp/log/zeta), and external facts (table lookups quoted by the source
material).  Reports keep the three strictly apart: a BoundReport's value is
tagged ExactValue, IntervalValue, or ExternalValue and downstream consumers
must not coerce one into another.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, isqrt, prod

from mpmath import iv

from . import intervals
from .dominance import (HypothesisError, _saturated_walk, orbit_length)
from .intervals import (Certificate, DEFAULT_CEILING_BITS, DEFAULT_START_BITS,
                        certify_cmp, certify_less, exact, power, zeta_iv)
from .rootdata import RootDatum, Weight, is_dominant, is_restricted, root_datum


class BudgetError(RuntimeError):
    """Enumeration exceeded its configured budget."""


# ---------------------------------------------------------------------------
# Report plumbing.

@dataclass(frozen=True)
class ExactValue:
    value: int

    kind = "exact"

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class IntervalValue:
    lo: str
    hi: str
    prec_bits: int

    kind = "interval"

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]@{self.prec_bits}b"


@dataclass(frozen=True)
class ExternalValue:
    note: str

    kind = "external"

    def __str__(self) -> str:
        return f"external: {self.note}"


@dataclass(frozen=True)
class Root2Power:
    """Exact power 2**(halves/2); compared by squaring, never by floats."""

    halves: int

    kind = "exact"

    def squared(self) -> int | Fraction:
        if self.halves >= 0:
            return 2 ** self.halves
        return Fraction(1, 2 ** (-self.halves))

    def le_int(self, n: int) -> bool:
        if n < 0:
            return False
        return self.squared() <= n * n

    def __str__(self) -> str:
        if self.halves % 2 == 0:
            return str(2 ** (self.halves // 2)) if self.halves >= 0 \
                else f"1/{2 ** (-self.halves // 2)}"
        return f"2^({self.halves}/2)"


@dataclass(frozen=True)
class BoundReport:
    name: str
    inputs: tuple[tuple[str, str], ...]
    value: ExactValue | IntervalValue | ExternalValue | Root2Power
    valid: bool
    guard_detail: str
    certificates: tuple[Certificate, ...] = ()


def _inputs(**kw) -> tuple[tuple[str, str], ...]:
    return tuple((k, str(v)) for k, v in kw.items())


def _interval_value(fn, bits: int) -> IntervalValue:
    lo, hi = intervals.enclosure(fn, bits)
    return IntervalValue(lo=lo, hi=hi, prec_bits=bits)


# ---------------------------------------------------------------------------
# Exact dimension lower bounds.

def n_lambda(datum: RootDatum, w) -> int:
    """Doubled-coefficient product lower bound for the module dimension."""
    if datum.family != "A":
        raise HypothesisError("product bound is stated for type A only")
    w = datum.check_weight(w)
    if not is_dominant(w):
        raise HypothesisError(f"weight {w} is not dominant")
    r = datum.rank
    return 1 + (r + 1) * (prod(1 + a // 2 for a in w) - 1)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f <= isqrt(p):
        if p % f == 0:
            return False
        f += 2
    return True


def premet_lower(datum: RootDatum, w, p: int, cap: int = 10 ** 7) -> int:
    """Saturated-set weight count: a dimension lower bound for restricted
    highest weights away from the excluded small characteristics."""
    w = datum.check_weight(w)
    if p != 0 and not _is_prime(p):
        raise HypothesisError(f"characteristic {p} is neither 0 nor prime")
    if datum.family in ("B", "C", "F", "G") and p == 2:
        raise HypothesisError(
            "characteristic 2 excluded for two root lengths")
    if datum.family == "G" and p == 3:
        raise HypothesisError("characteristic 3 excluded for G2")
    if not is_restricted(w, p):
        raise HypothesisError(f"weight {w} is not {p}-restricted")
    dominants, total = _saturated_walk(datum, w, cap)
    s = sum(orbit_length(datum, mu) for mu in dominants)
    assert s == total, "orbit sum disagrees with the walk count"
    return s


# ---------------------------------------------------------------------------
# Harmonic / product-tuple counting.

def harmonic(d) -> tuple[Fraction, Certificate | None]:
    """Exact truncated harmonic sum h(d); for d >= 2 also a certificate
    that h(d) < 1 + log d."""
    d = Fraction(d)
    if d < 1:
        raise HypothesisError("harmonic sum needs d >= 1")
    top = int(d)
    value = sum((Fraction(1, k) for k in range(1, top + 1)), Fraction(0))
    cert = None
    if d >= 2:
        cert = certify_less(lambda: exact(value),
                            lambda: 1 + iv.log(exact(d)))
    return value, cert


def g_count(r: int, d, budget: int = 10 ** 7) -> tuple[int, Fraction, bool]:
    """Number of r-tuples of positive integers with product <= d, plus the
    exact envelope d*h(d)^(r-1) and whether the count stays below it."""
    if r < 1:
        raise HypothesisError("tuple length must be >= 1")
    d = Fraction(d)
    if d < 1:
        raise HypothesisError("product cap must be >= 1")
    memo: dict[tuple[int, int], int] = {}
    steps = 0

    def rec(rr: int, top: int) -> int:
        nonlocal steps
        if rr == 1:
            return top
        key = (rr, top)
        if key in memo:
            return memo[key]
        acc = 0
        j = 1
        while j <= top:
            q = top // j
            j_last = top // q
            steps += 1
            if steps > budget:
                raise BudgetError(f"tuple count exceeded budget {budget}")
            acc += (j_last - j + 1) * rec(rr - 1, q)
            j = j_last + 1
        memo[key] = acc
        return acc

    count = rec(r, int(d))
    hval, _ = harmonic(d)
    envelope = d * hval ** (r - 1)
    return count, envelope, count <= envelope


def bound2_iv(r: int, n: int):
    """Interval value of 2^r * d * (1+log d)^(r-1), d = 1+(n-1)/(r+1)."""
    d = Fraction(1) + Fraction(n - 1, r + 1)
    dv = exact(d)
    return exact(2 ** r) * dv * (1 + iv.log(dv)) ** (r - 1)


def bound2_value(r: int, n: int, bits: int = 256) -> BoundReport:
    if r < 1 or n < 1:
        raise HypothesisError("rank and dimension cap must be positive")
    d = Fraction(1) + Fraction(n - 1, r + 1)
    return BoundReport(
        name="tuple-envelope",
        inputs=_inputs(r=r, n=n, d=d),
        value=_interval_value(lambda: bound2_iv(r, n), bits),
        valid=True,
        guard_detail=f"2^r*d*(1+log d)^(r-1) at d = {d}",
    )


# ---------------------------------------------------------------------------
# The rank-vs-log-ratio inequality and the exponential envelopes.

def ratio_iv(r: int, n: int):
    """(r+1) * loglog n / log n as an interval (needs log log n > 0)."""
    ln = iv.log(iv.mpf(n))
    return iv.mpf(r + 1) * iv.log(ln) / ln


def ratio_holds(r: int, n: int,
                start_bits: int = DEFAULT_START_BITS,
                ceiling_bits: int = DEFAULT_CEILING_BITS) -> Certificate:
    """Certificate for 5*(r+1)*loglog n < 9*log n (the exact form of the
    1.8-ratio inequality), on its stated domain n >= max(6, (r+1)!)."""
    if r < 1:
        raise HypothesisError("rank must be >= 1")
    if n < max(6, factorial(r + 1)):
        raise HypothesisError(
            f"ratio inequality needs n >= max(6, (r+1)!) = "
            f"{max(6, factorial(r + 1))}")
    return certify_less(
        lambda: iv.mpf(5 * (r + 1)) * iv.log(iv.log(iv.mpf(n))),
        lambda: iv.mpf(9) * iv.log(iv.mpf(n)),
        start_bits=start_bits, ceiling_bits=ceiling_bits)


def _pi2():
    return 2 * iv.pi


F_NAMES = ("f1", "f2", "f3", "f4", "f5")


def f_interval(name: str, arg: int):
    """Exponential count envelopes, evaluated at the working precision.

    f1..f3 take the rank, f4 the window parameter, f5 the dimension cap.
    """
    if name == "f1":
        r = arg
        if r < 1:
            raise HypothesisError("f1 needs rank >= 1")
        inner = Fraction(r * r, 6) + Fraction(r, 3) - Fraction(1, 2)
        return exact(Fraction((r + 1) ** 4, 8)) * iv.exp(
            _pi2() * iv.sqrt(exact(inner)))
    if name == "f2":
        r = arg
        if r < 1:
            raise HypothesisError("f2 needs rank >= 1")
        if r % 2:
            lead = Fraction((r * r + 11), 6) + r
            inner = Fraction(r * r - 1, 18) + Fraction(r, 3)
        else:
            lead = Fraction(r * r, 6) + 2 * r
            inner = Fraction(r * r, 18) + Fraction(2 * r - 2, 3)
        return exact(Fraction(1, 2)) * exact(lead) ** 2 * iv.exp(
            _pi2() * iv.sqrt(exact(inner)))
    if name == "f3":
        r = arg
        if r < 1:
            raise HypothesisError("f3 needs rank >= 1")
        return exact(8 * r * r) * iv.exp(
            _pi2() * iv.sqrt(exact(Fraction(4 * r - 2, 3))))
    if name == "f4":
        m = arg
        if m < 0:
            raise HypothesisError("f4 needs m >= 0")
        return exact(2 * (m + 1) ** 2) * iv.exp(
            _pi2() * iv.sqrt(exact(Fraction(2 * m, 3))))
    if name == "f5":
        n = arg
        if n < 2:
            raise HypothesisError("f5 needs n >= 2")
        lg = iv.log(iv.mpf(n)) / iv.log(iv.mpf(2))
        return 4 * lg * iv.exp(_pi2() * iv.sqrt(lg / 3))
    raise HypothesisError(f"unknown envelope {name!r}; choose from {F_NAMES}")


def f_function(name: str, arg: int, bits: int = 256) -> BoundReport:
    return BoundReport(
        name=f"envelope-{name}",
        inputs=_inputs(name=name, arg=arg),
        value=_interval_value(lambda: f_interval(name, arg), bits),
        valid=True,
        guard_detail="exponential envelope, interval enclosure",
    )


# Range thresholds used by the type-A dispatch and the suite checks.

def d1(r: int) -> int:
    """Middle binomial of r+1: the orbit size of a centre-supported weight."""
    k = (r - 1) // 2
    return comb(r + 1, k + 1)


def d2(r: int) -> int:
    return (r + 2) ** (2 * (r // 6))


def d3(r: int) -> int:
    k = (r - 1) // 2
    if k < 1:
        raise HypothesisError("threshold d3 needs rank >= 3")
    q, rem = divmod(factorial(r + 1), factorial(k - 1) ** 2)
    assert rem == 0
    return q


def d4(m: int) -> int:
    return 2 ** (m + 1)


# ---------------------------------------------------------------------------
# Characteristic 2 exact counting.

def char2_counts(r: int, m: int) -> tuple[int, int]:
    """(tail binomial sum from m, factorial ratio (r+1)!/(m+1)!); the first
    never exceeds the second."""
    if not 0 <= m <= r:
        raise HypothesisError(f"need 0 <= m <= r, got m={m}, r={r}")
    tail = sum(comb(r, j) for j in range(m, r + 1))
    ratio = factorial(r + 1) // factorial(m + 1)
    return tail, ratio


# ---------------------------------------------------------------------------
# The per-family certified count bound.

_MIN_DIM = {
    ("E", 6): 27, ("E", 7): 56, ("E", 8): 248, ("F", 4): 25,
}
_MIN_DIM_FAMILY = {"B": 7, "D": 8, "C": 4}


def _family_exponent(family: str, rank: int) -> Fraction:
    if family in ("C", "F", "G"):
        return Fraction(2)
    if family in ("B", "D"):
        return Fraction(9, 4)
    if family == "E":
        return Fraction(5, 2) if rank == 6 else Fraction(9, 4)
    raise HypothesisError(f"no dispatch for family {family}")


def rn_upper(family: str, rank: int, n: int, p: int,
             bits: int = 256) -> BoundReport:
    """Certified upper bound for the number of restricted irreducible
    modules of dimension at most n."""
    datum = root_datum(family, rank)
    if n < 1:
        raise HypothesisError("dimension cap must be >= 1")
    if not _is_prime(p):
        raise HypothesisError(f"characteristic {p} must be prime")
    base = dict(family=family, rank=rank, n=n, p=p)
    if n == 1:
        return BoundReport(name="trivial-one", inputs=_inputs(**base),
                           value=ExactValue(1), valid=True,
                           guard_detail="n = 1: only the trivial module")
    if p == 2:
        return BoundReport(
            name="char2-linear", inputs=_inputs(**base),
            value=ExactValue(n), valid=True,
            guard_detail=("characteristic 2: count bounded by n; "
                          "small-rank low-n cases rest on external tables"))
    if family == "A":
        if rank == 5:
            return BoundReport(
                name="a5-pow", inputs=_inputs(**base),
                value=_interval_value(lambda: power(n, Fraction(5, 2)), bits),
                valid=True,
                guard_detail=("rank-5 strengthening: n^2.5; n <= 2500 rests "
                              "on external tables"))
        big = factorial(rank + 1)
        if n >= big:
            return BoundReport(
                name="a-large", inputs=_inputs(**base),
                value=_interval_value(
                    lambda: power(n, Fraction(17, 5)) / exact(rank ** 3),
                    bits),
                valid=True,
                guard_detail=(f"large range n >= (r+1)! = {big}: "
                              "n^3.4/r^3; low-rank low-n windows rest on "
                              "external tables"))
        mid = n >= d1(rank)
        return BoundReport(
            name="a-general", inputs=_inputs(**base),
            value=_interval_value(lambda: power(n, Fraction(19, 5)), bits),
            valid=True,
            guard_detail=(f"{'mid' if mid else 'small'} range "
                          f"(d1 = {d1(rank)}): n^3.8; rank <= 10 and "
                          "table windows rest on external facts"))
    s = _family_exponent(family, rank)
    threshold = _MIN_DIM.get((family, rank)) or _MIN_DIM_FAMILY.get(family)
    if family == "G":
        guard = "rank-2 argument: n^2; no dimension threshold consumed"
    else:
        mark = "met" if threshold is not None and n >= threshold else "not met"
        guard = (f"display threshold n >= {threshold} "
                 f"(external minimal-degree fact) {mark}; bound holds "
                 "throughout by the recursion")
    if s == 2:
        value: ExactValue | IntervalValue = ExactValue(n * n)
    else:
        value = _interval_value(lambda: power(n, s), bits)
    return BoundReport(name=f"family-pow-{s}", inputs=_inputs(**base),
                       value=value, valid=True, guard_detail=guard)


# ---------------------------------------------------------------------------
# The zeta-sum displays.

def zeta_tail_check(s, extra, n0: int, double: bool = False,
                    start_bits: int = DEFAULT_START_BITS,
                    ceiling_bits: int = DEFAULT_CEILING_BITS) -> Certificate:
    """Certificate that the zeta-sum coefficient stays below 1 - n0^(-s).

    Simple form:  zeta(s) - 1 + E < 1 - n0^(-s)
    Double form:  zeta(s)*(zeta(s) - 1) + zeta(s)*E < 1 - n0^(-s)
    where E is `extra` (a Fraction) or 2^(-s) when extra == "2^-s".
    The right side increases in n0, so the certificate covers all n >= n0.
    """
    s = Fraction(s)
    if n0 < 2:
        raise HypothesisError("threshold n0 must be >= 2")

    def lhs():
        z = zeta_iv(s)
        e = power(2, -s) if extra == "2^-s" else exact(Fraction(extra))
        if double:
            return z * (z - 1) + z * e
        return z - 1 + e

    def rhs():
        return 1 - power(n0, -s)

    return certify_cmp(lhs, rhs, strict=True,
                       start_bits=start_bits, ceiling_bits=ceiling_bits)

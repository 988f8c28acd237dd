"""Dominance order, orbit sizes, and the saturated set of dominant weights.

lambda dominates mu when lambda - mu is a nonnegative integer combination of
simple roots; dominance is taken reflexively (the zero combination counts).
Every positive claim is carried by a WitnessChain that re-verifies itself by
integer arithmetic alone.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .rootdata import RootDatum, Weight, is_dominant, sub


class HypothesisError(ValueError):
    """A quoted hypothesis of one of the statements does not hold."""


class SaturationCapError(RuntimeError):
    """Saturated-set walk exceeded the configured weight cap."""


@dataclass(frozen=True)
class WitnessChain:
    """Certificate that source - sum(root_coeffs[i]*alpha_{i+1}) == target."""

    target: Weight
    root_coeffs: tuple[int, ...]

    def verify(self, datum: RootDatum, source: Weight) -> bool:
        if len(self.root_coeffs) != datum.rank:
            return False
        if any(k < 0 or not isinstance(k, int) for k in self.root_coeffs):
            return False
        drop = datum.root_combination(self.root_coeffs)
        return sub(source, drop) == self.target


def bracket(datum: RootDatum, w: Weight) -> int:
    """Coefficient sum weighted by min(i, r+1-i); type A, dominant input."""
    if datum.family != "A":
        raise HypothesisError("bracket statistic is defined for type A only")
    w = datum.check_weight(w)
    if not is_dominant(w):
        raise HypothesisError(f"weight {w} is not dominant")
    r = datum.rank
    return sum(min(i, r + 1 - i) * a for i, a in enumerate(w, start=1))


@lru_cache(maxsize=None)
def _cartan_inverse(datum: RootDatum) -> tuple[tuple[Fraction, ...], ...]:
    n = datum.rank
    aug = [[Fraction(datum.cartan[i][j]) for j in range(n)]
           + [Fraction(i == j) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(row for row in range(col, n) if aug[row][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for row in range(n):
            if row != col and aug[row][col] != 0:
                f = aug[row][col]
                aug[row] = [a - f * b for a, b in zip(aug[row], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def dominance_witness(datum: RootDatum, lam: Weight,
                      mu: Weight) -> WitnessChain | None:
    """Chain from lam down to mu, or None when lam does not dominate mu."""
    lam = datum.check_weight(lam)
    mu = datum.check_weight(mu)
    diff = sub(lam, mu)
    inv = _cartan_inverse(datum)
    coeffs = []
    for row in inv:
        k = sum(f * d for f, d in zip(row, diff))
        if k.denominator != 1 or k < 0:
            return None
        coeffs.append(int(k))
    chain = WitnessChain(target=mu, root_coeffs=tuple(coeffs))
    assert chain.verify(datum, lam)
    return chain


# ---------------------------------------------------------------------------
# Weyl group and stabilizer orders via the zero-coefficient subdiagram.

_FORK_ORDERS = {(1, 2, 2): 51840, (1, 2, 3): 2903040, (1, 2, 4): 696729600}


@lru_cache(maxsize=None)
def weyl_order(datum: RootDatum) -> int:
    return weyl_stabilizer_order(datum, datum.zero())


def _component_order(comp: list[int], adj: dict[int, list[tuple[int, int]]]) -> int:
    k = len(comp)
    mults = [m for u in comp for (v, m) in adj[u] if u < v]
    if any(m == 3 for m in mults):
        return 12
    if any(m == 2 for m in mults):
        if k == 4:
            (u, v) = next((u, v) for u in comp for (v, m) in adj[u]
                          if m == 2 and u < v)
            if len(adj[u]) == 2 and len(adj[v]) == 2:
                return 1152  # double bond between the two interior nodes
        return (2 ** k) * factorial(k)
    degs = {u: len(adj[u]) for u in comp}
    if all(d <= 2 for d in degs.values()):
        return factorial(k + 1)
    hub = next(u for u, d in degs.items() if d == 3)
    arms = []
    for first, _ in adj[hub]:
        length, prev, cur = 1, hub, first
        while True:
            nxt = [w for w, _ in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return (2 ** (k - 1)) * factorial(k)
    return _FORK_ORDERS[tuple(arms)]


def weyl_stabilizer_order(datum: RootDatum, w: Weight) -> int:
    """Order of the stabilizer: the parabolic over {i : coefficient i = 0}."""
    w = datum.check_weight(w)
    if not is_dominant(w):
        raise HypothesisError(f"weight {w} is not dominant")
    support = {i + 1 for i, c in enumerate(w) if c == 0}
    adj: dict[int, list[tuple[int, int]]] = {u: [] for u in support}
    for i, j, m in datum.edges:
        if i in support and j in support:
            adj[i].append((j, m))
            adj[j].append((i, m))
    order = 1
    left = set(support)
    while left:
        start = left.pop()
        comp, queue = [start], deque([start])
        while queue:
            u = queue.popleft()
            for v, _ in adj[u]:
                if v in left:
                    left.discard(v)
                    comp.append(v)
                    queue.append(v)
        order *= _component_order(comp, adj)
    return order


def orbit_length(datum: RootDatum, w: Weight) -> int:
    return weyl_order(datum) // weyl_stabilizer_order(datum, w)


# ---------------------------------------------------------------------------
# Saturated set below a dominant weight.

def _saturated_walk(datum: RootDatum, lam: Weight,
                    cap: int) -> tuple[list[Weight], int]:
    """All dominant members of the saturated set of lam, plus the total count.

    Walks every root string downward from each visited weight; by the string
    property this reaches the whole saturated set exactly once per weight.
    """
    lam = datum.check_weight(lam)
    if not is_dominant(lam):
        raise HypothesisError(f"weight {lam} is not dominant")
    roots = [datum.simple_root(i) for i in range(1, datum.rank + 1)]
    seen = {lam}
    queue = deque([lam])
    while queue:
        w = queue.popleft()
        for i, alpha in enumerate(roots):
            c = w[i]
            v = w
            for _ in range(c):
                v = sub(v, alpha)
                if v not in seen:
                    if len(seen) >= cap:
                        raise SaturationCapError(
                            f"saturated set of {lam} exceeds cap {cap}")
                    seen.add(v)
                    queue.append(v)
    dominants = sorted((w for w in seen if is_dominant(w)), reverse=True)
    return dominants, len(seen)


def saturated_dominant_set(datum: RootDatum, lam: Weight,
                           cap: int = 10 ** 7) -> list[tuple[Weight, WitnessChain]]:
    """Dominant weights dominated by lam, each with its chain, sorted
    descending-lexicographically (lam itself first)."""
    dominants, _ = _saturated_walk(datum, lam, cap)
    out = []
    for mu in dominants:
        chain = dominance_witness(datum, lam, mu)
        assert chain is not None
        out.append((mu, chain))
    return out


def saturated_weight_total(datum: RootDatum, lam: Weight,
                           cap: int = 10 ** 7) -> int:
    """Size of the full saturated set (all Weyl images included)."""
    return _saturated_walk(datum, lam, cap)[1]


def is_good(w: Weight) -> bool:
    """Every coefficient strictly positive (trivial stabilizer)."""
    return all(c > 0 for c in w)

"""Root-system tables for the simple families, in the fundamental-weight basis.

A weight is a plain tuple of integers: its coefficients against the
fundamental weights.  The Cartan matrix is stored so that column j holds the
fundamental-weight coefficients of the simple root alpha_{j+1}; converting a
nonnegative root combination to weight coordinates is then a single integer
matrix product.  Node numbering follows the Bourbaki convention everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

Weight = tuple[int, ...]

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")


class RootDataError(ValueError):
    """Unsupported family/rank combination or malformed weight."""


def _check_family_rank(family: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(family, False)
    if not ok:
        raise RootDataError(f"unsupported root datum {family}{rank}")


def _edges(family: str, rank: int) -> tuple[tuple[int, int, int], ...]:
    """Dynkin diagram as (i, j, bond multiplicity), 1-based, i < j."""
    path = [(i, i + 1, 1) for i in range(1, rank)]
    if family == "A":
        return tuple(path)
    if family in ("B", "C"):
        path[-1] = (rank - 1, rank, 2)
        return tuple(path)
    if family == "D":
        stem = [(i, i + 1, 1) for i in range(1, rank - 2)]
        return tuple(stem + [(rank - 2, rank - 1, 1), (rank - 2, rank, 1)])
    if family == "E":
        stem = [(1, 3, 1), (3, 4, 1), (2, 4, 1)]
        return tuple(stem + [(i, i + 1, 1) for i in range(4, rank)])
    if family == "F":
        return ((1, 2, 1), (2, 3, 2), (3, 4, 1))
    return ((1, 2, 3),)  # G2


def _cartan(family: str, rank: int,
            edges: tuple[tuple[int, int, int], ...]) -> tuple[tuple[int, ...], ...]:
    m = [[2 * (i == j) for j in range(rank)] for i in range(rank)]
    for i, j, _ in edges:
        m[i - 1][j - 1] = -1
        m[j - 1][i - 1] = -1
    # Asymmetric entries at multiple bonds: the column of a long root picks up
    # the bond multiplicity in the row of the adjacent short root.
    if family == "B":
        m[rank - 1][rank - 2] = -2  # alpha_r short
    elif family == "C":
        m[rank - 2][rank - 1] = -2  # alpha_r long
    elif family == "F":
        m[2][1] = -2                # alpha_3 short, alpha_2 long
    elif family == "G":
        m[0][1] = -3                # alpha_1 short, alpha_2 long
    return tuple(tuple(row) for row in m)


_HIGHEST_E = {
    6: (1, 2, 2, 3, 2, 1),
    7: (2, 2, 3, 4, 3, 2, 1),
    8: (2, 3, 4, 6, 5, 4, 3, 2),
}


def _highest(family: str, rank: int) -> tuple[int, ...]:
    """Coefficients of the highest root over the simple roots."""
    if family == "A":
        return (1,) * rank
    if family == "B":
        return (1,) + (2,) * (rank - 1)
    if family == "C":
        return (2,) * (rank - 1) + (1,)
    if family == "D":
        return (1,) + (2,) * (rank - 3) + (1, 1)
    if family == "E":
        return _HIGHEST_E[rank]
    if family == "F":
        return (2, 3, 4, 2)
    return (3, 2)  # G2


@dataclass(frozen=True)
class RootDatum:
    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    highest_root_coeffs: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]

    def __repr__(self) -> str:
        return f"RootDatum({self.family}{self.rank})"

    def check_weight(self, w) -> Weight:
        w = tuple(w)
        if len(w) != self.rank or not all(isinstance(c, int) for c in w):
            raise RootDataError(
                f"weight {w!r} is not an integer {self.rank}-tuple")
        return w

    def zero(self) -> Weight:
        return (0,) * self.rank

    def simple_root(self, i: int) -> Weight:
        """alpha_i in fundamental-weight coordinates (1-based i)."""
        if not 1 <= i <= self.rank:
            raise RootDataError(f"simple root index {i} out of range")
        return tuple(self.cartan[t][i - 1] for t in range(self.rank))

    def root_combination(self, coeffs) -> Weight:
        """sum_i coeffs[i]*alpha_{i+1} as a weight tuple."""
        coeffs = tuple(coeffs)
        if len(coeffs) != self.rank:
            raise RootDataError("coefficient vector has wrong length")
        return tuple(
            sum(self.cartan[t][j] * coeffs[j] for j in range(self.rank))
            for t in range(self.rank))


@lru_cache(maxsize=None)
def root_datum(family: str, rank: int) -> RootDatum:
    _check_family_rank(family, rank)
    edges = _edges(family, rank)
    return RootDatum(family=family, rank=rank,
                     cartan=_cartan(family, rank, edges),
                     highest_root_coeffs=_highest(family, rank),
                     edges=edges)


def simple_root_as_weight(datum: RootDatum, i: int) -> Weight:
    return datum.simple_root(i)


def highest_root_coeffs(datum: RootDatum) -> tuple[int, ...]:
    return datum.highest_root_coeffs


def is_dominant(w) -> bool:
    return all(c >= 0 for c in w)


def is_restricted(w, p: int) -> bool:
    """0 <= coefficients <= p-1; p = 0 means no upper restriction."""
    if p == 0:
        return is_dominant(w)
    return all(0 <= c <= p - 1 for c in w)


def add(u: Weight, v: Weight) -> Weight:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Weight, v: Weight) -> Weight:
    return tuple(a - b for a, b in zip(u, v))

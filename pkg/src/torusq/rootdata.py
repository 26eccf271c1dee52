"""Cartan data for the simply laced families A, D, E6 and E7.

All weights downstream are written in fundamental-weight coordinates: entry
``i`` of a weight vector is its pairing with the ``i``-th simple coroot.  In
that basis the ``i``-th simple root is row ``i`` of the Cartan matrix, so a
simple reflection is one integer row operation and no inner products are
ever needed.

Numbering of simple roots follows the standard tables: type A is the path
``1 - 2 - ... - n``; type D is the path ``1 - ... - (n-2)`` with both ``n-1``
and ``n`` attached to ``n-2``; in E6 and E7 node ``2`` hangs off node ``4``
of the path ``1 - 3 - 4 - 5 - 6 (- 7)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

Weight = tuple[int, ...]

FAMILIES = ("A", "D", "E6", "E7")


@dataclass(frozen=True)
class RootSystem:
    """A simply laced root system, identified by family and rank."""

    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]

    def pairing(self, i: int, j: int) -> int:
        """Cartan pairing of the simple roots ``i`` and ``j`` (1-based)."""
        return self.cartan[i - 1][j - 1]

    def simple_root(self, i: int) -> Weight:
        """Simple root ``alpha_i`` in fundamental-weight coordinates."""
        return self.cartan[i - 1]

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        if self.family in ("E6", "E7"):
            return self.family
        return f"{self.family}{self.rank}"


def _edges(family: str, rank: int) -> list[tuple[int, int]]:
    if family == "A":
        return [(i, i + 1) for i in range(1, rank)]
    if family == "D":
        path = [(i, i + 1) for i in range(1, rank - 2)]
        return path + [(rank - 2, rank - 1), (rank - 2, rank)]
    if family == "E6":
        return [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
    if family == "E7":
        return [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)]
    raise ValueError(f"unknown family {family!r}")


def _validate(family: str, rank: int) -> None:
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}, got {family!r}")
    if family == "A" and rank < 1:
        raise ValueError(f"type A needs rank >= 1, got {rank}")
    if family == "D" and rank < 4:
        raise ValueError(f"type D needs rank >= 4, got {rank}")
    if family == "E6" and rank != 6:
        raise ValueError(f"E6 has rank 6, got {rank}")
    if family == "E7" and rank != 7:
        raise ValueError(f"E7 has rank 7, got {rank}")


@lru_cache(maxsize=None)
def root_system(family: str, rank: int) -> RootSystem:
    """Build the (cached) root system of the given family and rank."""
    _validate(family, rank)
    adjacent = set()
    for a, b in _edges(family, rank):
        adjacent.add((a, b))
        adjacent.add((b, a))
    cartan = tuple(
        tuple(
            2 if i == j else (-1 if (i, j) in adjacent else 0)
            for j in range(1, rank + 1)
        )
        for i in range(1, rank + 1)
    )
    return RootSystem(family, rank, cartan)


def cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix as a tuple of rows."""
    return root_system(family, rank).cartan


def minuscule_weights(family: str, rank: int) -> frozenset[int]:
    """Indices of the minuscule fundamental weights of the system.

    Every fundamental weight of type A is minuscule; type D contributes the
    natural weight and the two spin weights; E6 has the two 27-dimensional
    ones and E7 a single 56-dimensional one.
    """
    _validate(family, rank)
    if family == "A":
        return frozenset(range(1, rank + 1))
    if family == "D":
        return frozenset({1, rank - 1, rank})
    if family == "E6":
        return frozenset({1, 6})
    return frozenset({7})


def fundamental_weight(system: RootSystem, i: int) -> Weight:
    """``omega_i`` in fundamental-weight coordinates (a unit vector)."""
    if not 1 <= i <= system.rank:
        raise ValueError(f"weight index {i} out of range 1..{system.rank}")
    return tuple(1 if j == i else 0 for j in range(1, system.rank + 1))


def reflect(system: RootSystem, mu: Weight, i: int) -> Weight:
    """Apply the simple reflection ``s_i`` to a weight.

    ``s_i(mu) = mu - <mu, alpha_i^vee> * alpha_i``; in fundamental-weight
    coordinates the pairing is just ``mu[i-1]``.
    """
    if len(mu) != system.rank:
        raise ValueError(f"weight has length {len(mu)}, expected {system.rank}")
    c = mu[i - 1]
    if c == 0:
        return tuple(mu)
    alpha = system.simple_root(i)
    return tuple(m - c * a for m, a in zip(mu, alpha))

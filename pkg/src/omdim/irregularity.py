"""Transmission and multiset-distance irregularity."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import DistanceMatrix, Graph, build_graph
from .multiset import DistanceMultiset


@dataclass(frozen=True)
class TransmissionProfile:
    values: tuple[int, ...]

    def __getitem__(self, v: int) -> int:
        return self.values[v]


def transmission_profile(dm: DistanceMatrix) -> TransmissionProfile:
    return TransmissionProfile(tuple(sum(row) for row in dm.dist))


def is_transmission_irregular(dm: DistanceMatrix) -> bool:
    values = transmission_profile(dm).values
    return len(set(values)) == len(values)


def full_multiset(dm: DistanceMatrix, v: int) -> DistanceMultiset:
    """Distances from ``v`` to every vertex, including the 0 to itself."""
    return DistanceMultiset.of(dm[v])


def is_multiset_distance_irregular(dm: DistanceMatrix) -> bool:
    keys = {tuple(sorted(row)) for row in dm.dist}
    return len(keys) == dm.n


def fixture_graph_X() -> Graph:
    """8-vertex graph that is multiset distance irregular but not transmission irregular.

    Bottom row ``v1..v5`` is vertices 0..4, top row ``v6..v8`` is 5..7.
    """
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (5, 6), (6, 7), (2, 6), (3, 6)]
    return build_graph(8, edges)

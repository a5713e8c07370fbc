"""Constructive heuristics over the conflict graph.

Both build a layout in a single greedy pass: walk the candidate placements
in some order and keep each one that does not conflict with anything kept
so far. The pass is greedy-complete, so returned layouts are maximal.

``close_corner`` orders placements by the distance of their nearest table
block to the room's origin corner. ``random_construct`` orders them by a
seeded random permutation; the paper-style protocol averages five runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .conflict import ConflictGraph
from .seating import SittingConfiguration

RNG_ALGORITHM = "python-mt19937"  # random.Random; recorded for reproducibility


@dataclass(frozen=True)
class Layout:
    selected: tuple[int, ...]  # placement ids in the order they were added
    value: int  # total seats


def _greedy_pack(order, graph: ConflictGraph) -> Layout:
    adj = graph.adjacency
    picked_mask = 0
    picked = []
    value = 0
    for u in order:
        if adj[u] & picked_mask == 0:
            picked_mask |= 1 << u
            picked.append(u)
            value += graph.weights[u]
    return Layout(selected=tuple(picked), value=value)


def corner_rank(cfg: SittingConfiguration) -> tuple[int, int, int]:
    """Sort key: nearest table block's squared distance to the origin corner,
    then more seats first, then id.

    Distances are compared as integers in quarter-block units, which makes
    ties exact: for a table block (r, c) the squared distance of its center
    to (0, 0) is proportional to (2c-1)^2 + (2r-1)^2.
    """
    d2 = min((2 * b.col - 1) ** 2 + (2 * b.row - 1) ** 2 for b in cfg.table_blocks)
    return (d2, -cfg.seats, cfg.id)


def close_corner(configs: list[SittingConfiguration], graph: ConflictGraph) -> Layout:
    """Deterministic corner-first greedy placement."""
    order = [c.id for c in sorted(configs, key=corner_rank)]
    return _greedy_pack(order, graph)


def random_construct(configs: list[SittingConfiguration], graph: ConflictGraph,
                     seed: int) -> Layout:
    """Greedy placement along a seeded uniformly random permutation."""
    order = list(range(graph.vertex_count))
    random.Random(seed).shuffle(order)
    return _greedy_pack(order, graph)


def random_average(configs: list[SittingConfiguration], graph: ConflictGraph,
                   base_seed: int, runs: int = 5) -> float:
    """Mean value of ``runs`` random constructions with seeds base_seed..+runs-1."""
    if runs < 1:
        raise ValueError(f"runs must be at least 1, got {runs}")
    total = 0
    for k in range(runs):
        total += random_construct(configs, graph, base_seed + k).value
    return total / runs

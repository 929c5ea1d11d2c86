"""Row sums of assembled matrices through partner chains.

Every working-form coboundary table is negative exactly twice per row
below the first: for chosen index i, row n carries -1 at columns i and
sigma_n(i), where sigma_n(i) is the index of g_n^{-1} g_i.  Multiplying
the tables of a subset S therefore makes row n negative exactly on the
symmetric difference of S and sigma_n(S): the heads and stepped-out
tails of the maximal sigma_n-chains inside S, two columns per chain.
Orbits fully contained in S cancel out.  Combining the chain count with
the fixed negatives of the representative product and the overlap
between the two gives the exact row sum without assembling anything.

sigma_n is written in index arithmetic only; the group product route
and full matrix assembly serve as oracles in the tests.  Rows 5..2t+2
decide the Hadamard property of the assembled matrix, the rest follow
by symmetry of the index ordering.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .cocyclic import CoboundarySubset, build_representative
from .group import GroupContext


class RowAdjacency(NamedTuple):
    """Decomposition of a subset under one row's partner map."""

    row: int
    chains: tuple[tuple[int, ...], ...]
    cycles: tuple[tuple[int, ...], ...]


class PathStats(NamedTuple):
    """Counts that settle one row sum: maximal chains inside the subset,
    fixed negatives of the representative product in the row, and how
    many chain-end columns land on fixed negatives."""

    row: int
    chains: int
    fixed_negatives: int
    overlap: int


# Residue classes of the columns where the representative product is
# negative, per row residue.  Rows congruent to 1 have none.
_FIXED_NEGATIVE_CLASSES = {
    1: frozenset(),
    2: frozenset({2, 0}),
    3: frozenset({3, 2}),
    0: frozenset({0, 3}),
}


def fixed_negative_classes(n: int) -> frozenset[int]:
    """Column residues mod 4 where row n of the representative product is -1."""
    return _FIXED_NEGATIVE_CLASSES[n % 4]


def path_partner(ctx: GroupContext, n: int, i: int) -> int:
    """Column paired with column i in row n: the index of g_n^{-1} g_i.

    Closed form in n and i alone, split by the residue of n; the column
    residue couplings are 1-1/2-2/3-3/0-0 for rows congruent to 1, then
    1-2/3-0, 1-3/2-0 and 1-0/3-2 for rows congruent to 2, 3 and 0.
    """
    order = ctx.order
    for value, name in ((n, "n"), (i, "i")):
        if not 1 <= value <= order:
            raise ValueError(f"{name}={value} outside [1, {order}]")
    r = n % 4
    if r == 1:
        j = i - n + 1
    elif r == 2:
        j = i - n + 2 - (-1) ** i
    elif r == 3:
        j = i - n + 3 - 2 * (-1) ** ((i % 4 + 1) // 2)
    else:
        j = i - n + 4 + (-1) ** i * (1 - 4 * (1 - (i % 4) // 2))
    return (j - 1) % order + 1


def row_adjacency(subset: CoboundarySubset, n: int) -> RowAdjacency:
    """Maximal sigma_n-chains and closed orbits inside the subset.

    Chains are listed head first; a head is a member no other member
    steps onto.  sigma_n is a bijection, so chains cannot merge or run
    into an orbit.
    """
    ctx = subset.ctx
    members = set(subset.indices)
    inside = {}
    for i in members:
        j = path_partner(ctx, n, i)
        if j in members:
            inside[i] = j
    targets = set(inside.values())
    seen: set[int] = set()
    chains = []
    for head in sorted(members - targets):
        path = [head]
        seen.add(head)
        while path[-1] in inside:
            path.append(inside[path[-1]])
            seen.add(path[-1])
        chains.append(tuple(path))
    cycles = []
    for start in sorted(members - seen):
        if start in seen:
            continue
        orbit = [start]
        seen.add(start)
        j = inside[start]
        while j != start:
            orbit.append(j)
            seen.add(j)
            j = inside[j]
        cycles.append(tuple(orbit))
    return RowAdjacency(n, tuple(chains), tuple(cycles))


def row_stats(subset: CoboundarySubset, n: int) -> PathStats:
    ctx = subset.ctx
    adjacency = row_adjacency(subset, n)
    negatives = set()
    for chain in adjacency.chains:
        negatives.add(chain[0])
        negatives.add(path_partner(ctx, n, chain[-1]))
    rep_row = build_representative(ctx).product[n - 1]
    fixed = int(np.count_nonzero(rep_row < 0))
    overlap = sum(1 for j in negatives if rep_row[j - 1] < 0)
    return PathStats(n, len(adjacency.chains), fixed, overlap)


def row_sum_via_paths(subset: CoboundarySubset, n: int) -> int:
    """Exact sum of row n of the assembled matrix, from counts alone.

    The row holds 2 * chains + fixed_negatives - 2 * overlap negative
    entries out of 4t.
    """
    stats = row_stats(subset, n)
    negatives = 2 * stats.chains + stats.fixed_negatives - 2 * stats.overlap
    return 4 * subset.ctx.t - 2 * negatives


def check_residue_one_rows(subset: CoboundarySubset) -> bool:
    """Rows congruent to 1 in [5, 2t+2] sum to zero exactly when the
    subset splits into t chains under each of their partner maps."""
    t = subset.ctx.t
    return all(
        len(row_adjacency(subset, n).chains) == t for n in range(5, 2 * t + 3, 4)
    )


def check_balance(subset: CoboundarySubset) -> bool:
    """Zero sums for rows 6..2t+2 outside residue 1, read off the chains.

    An odd-length chain puts one end column on a fixed-negative residue
    class and one off it, so it cancels on its own.  An even-length
    chain puts both end columns on its head's class; the row balances
    exactly when the even chains split half on, half off the row's
    fixed-negative classes.
    """
    for n in range(6, 2 * subset.ctx.t + 3):
        if n % 4 == 1:
            continue
        neg_classes = fixed_negative_classes(n)
        even = [ch for ch in row_adjacency(subset, n).chains if len(ch) % 2 == 0]
        on = sum(1 for ch in even if ch[0] % 4 in neg_classes)
        if 2 * on != len(even):
            return False
    return True


def is_hadamard_paths(subset: CoboundarySubset) -> bool:
    """Hadamard test for the assembled matrix via chain counts only."""
    return check_residue_one_rows(subset) and check_balance(subset)

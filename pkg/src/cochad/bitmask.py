"""Packed-bit kernels for row tests over coboundary subsets.

A coboundary subset splits by index residue mod 4 into four classes, and
each class is a subset of a t-cycle: index 4p + r sits at cycle position
p.  Each class subset is packed into an integer bitmask (bit p set means
position p selected), so every per-row quantity of the path machinery
becomes a table lookup:

  * within a class, the number of maximal chains under the step p -> p+m
    is popcount(S & ~rot_m(S)), the number of chain endings;
  * across a coupled class pair (a, b) the chain count is
    popcount(a & ~rot_m(b)) + popcount(b & ~rot_m(a)) and the overlap
    count against the fixed sign table is popcount(b ^ rot_{-m}(a)).

The zero-sum condition for a row of the assembled matrix is then a small
integer identity per rotation shift m (see row_test_batch).  These
kernels are the throughput path; the readable reference implementation
lives in the paths module, and the two are held equal by tests.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

# Class labels in column order within each block of four: residues mod 4.
CLASS_ORDER = (1, 2, 3, 0)

def forbidden_position(cls: int, t: int) -> int | None:
    """Cycle position canonical subsets must avoid in a class, or None.

    Position p of class r is index 4p + r, with r = 0 read as 4p + 4, so
    class 1 position 0 is index 1 and classes 3 and 0 position t-1 are
    indices 4t-1 and 4t.  Class 2 has no forbidden position.
    """
    if cls == 1:
        return 0
    if cls in (3, 0):
        return t - 1
    return None


class MaskTables:
    """Per-t lookup tables over all 2^t masks.

    pc[x]       popcount of x
    rot[m][x]   x rotated left by m within t bits, 1 <= m <= (t-1)/2
    irot[m][x]  x rotated right by m
    runs[m][x]  popcount(x & ~rot[m][x]), chain endings at shift m
    """

    def __init__(self, t: int) -> None:
        if t < 3 or t % 2 == 0:
            raise ValueError(f"t must be odd and >= 3, got {t}")
        self.t = t
        self.half = (t - 1) // 2
        size = 1 << t
        self.full = size - 1
        xs = np.arange(size, dtype=np.int64)
        self.pc = np.bitwise_count(xs).astype(np.int16)
        self.rot = np.zeros((self.half + 1, size), dtype=np.int64)
        self.irot = np.zeros((self.half + 1, size), dtype=np.int64)
        self.runs = np.zeros((self.half + 1, size), dtype=np.int16)
        for m in range(1, self.half + 1):
            self.rot[m] = ((xs << m) | (xs >> (t - m))) & self.full
            self.irot[m] = ((xs >> m) | (xs << (t - m))) & self.full
            self.runs[m] = self.pc[xs & ~self.rot[m] & self.full]


@lru_cache(maxsize=None)
def mask_tables(t: int) -> MaskTables:
    return MaskTables(t)


def mask_of(positions) -> int:
    mask = 0
    for p in positions:
        mask |= 1 << p
    return mask


def positions_of(mask: int, t: int) -> tuple[int, ...]:
    return tuple(p for p in range(t) if (mask >> p) & 1)


def rotate(mask: int, m: int, t: int) -> int:
    full = (1 << t) - 1
    m %= t
    return ((mask << m) | (mask >> (t - m))) & full


def split_classes(t: int, indices) -> dict[int, int]:
    """Pack a set of 1-based indices into four class masks keyed by residue."""
    masks = {1: 0, 2: 0, 3: 0, 0: 0}
    for i in indices:
        if not 1 <= i <= 4 * t:
            raise ValueError(f"index {i} outside [1, {4 * t}]")
        masks[i % 4] |= 1 << ((i - 1) // 4)
    return masks


def join_classes(t: int, masks: dict[int, int]) -> tuple[int, ...]:
    """Inverse of split_classes; indices come back sorted."""
    out = []
    for cls in CLASS_ORDER:
        base = cls if cls != 0 else 4
        for p in positions_of(masks[cls], t):
            out.append(4 * p + base)
    return tuple(sorted(out))


def ingredient_counts(tables: MaskTables, mask) -> np.ndarray:
    """Chain counts of one class mask at every shift m = 1..(t-1)/2.

    Entry m-1 is the number of maximal chains the mask contributes at the
    row 4m+1; a full cycle contributes zero everywhere.
    """
    mask = np.asarray(mask, dtype=np.int64)
    return np.stack([tables.runs[m][mask] for m in range(1, tables.half + 1)])


def pair_ci(tables: MaskTables, a, b, m: int):
    """Chains minus overlaps for the coupled class pair (a, b) at shift m.

    The overlap term counts shared negative columns against the fixed sign
    table; its orientation (second argument) is fixed by the row residue,
    so callers must pass arguments in the documented pair order.
    """
    c = (
        tables.pc[a & ~tables.rot[m][b] & tables.full]
        + tables.pc[b & ~tables.rot[m][a] & tables.full]
    )
    i = tables.pc[b ^ tables.irot[m][a]]
    return (c - i).astype(np.int32)


# Coupled pair order (first, second) per row residue.  At rows 4m+2 the
# classes chain as (1,2) and (3,0); at 4m+3 as (1,3) and (0,2); at 4m+4
# as (1,0) and (3,2).  The second element of each pair carries the
# overlap orientation.
PAIR_ORDER = {
    2: ((1, 2), (3, 0)),
    3: ((1, 3), (0, 2)),
    0: ((1, 0), (3, 2)),
}


def row_test_batch(tables: MaskTables, s1, s2, s3, s0):
    """Vectorized zero-row-sum test over rows 5..2t+2 for class masks.

    Accepts scalars or equal-length arrays (broadcasting applies) and
    returns a boolean scalar or array.  True means every tested row of
    the assembled matrix sums to zero, i.e. the subset is a Hadamard
    solution.
    """
    t = tables.t
    masks = {1: np.asarray(s1, dtype=np.int64), 2: np.asarray(s2, dtype=np.int64),
             3: np.asarray(s3, dtype=np.int64), 0: np.asarray(s0, dtype=np.int64)}
    ok = np.ones(np.broadcast(*masks.values()).shape, dtype=bool)
    for m in range(1, tables.half + 1):
        total = sum(tables.runs[m][masks[cls]].astype(np.int32) for cls in CLASS_ORDER)
        ok &= total == t
        for residue, pairs in PAIR_ORDER.items():
            v = sum(pair_ci(tables, masks[a], masks[b], m) for a, b in pairs)
            ok &= v == 0
    return ok if ok.shape else bool(ok)


def class_candidates(t: int, k: int, cls: int) -> np.ndarray:
    """All masks a canonical subset may use in one class for budget size k.

    Both sizes k and t-k realize the same per-row budget, and canonical
    subsets never use the class's forbidden position, so the candidate
    set is every mask of either size avoiding that position (every mask
    of either size when the class has no forbidden position).
    """
    if not 0 <= k <= t:
        raise ValueError(f"k={k} outside [0, {t}]")
    avoid = forbidden_position(cls, t)
    out = []
    for size in {k, t - k}:
        for combo in itertools.combinations(range(t), size):
            m = mask_of(combo)
            if avoid is not None and (m >> avoid) & 1:
                continue
            out.append(m)
    return np.array(sorted(out), dtype=np.int64)

"""Sign matrices over the indexed group and both Hadamard tests.

A candidate matrix is assembled as the pointwise product of a fixed
representative table (the product of three order-2 generator tables)
with one coboundary table per chosen index.  Each coboundary table
exists in two layers:

  * the point form, entry (r, s) = d(g_r) d(g_s) d(g_r g_s) where d is
    -1 exactly on the chosen element; the three boundary relations and
    the sign bookkeeping of canonicalize are exact identities in this
    layer;
  * the working form returned by build_coboundary, obtained from the
    point form by negating the chosen row, which leaves exactly two
    negative entries in every row below the first.

The two layers differ only by row negations, which never affect row
orthogonality, so all Hadamard predicates agree across them.  Subsets
of {1..4t} avoiding 1, 4t-1 and 4t are canonical: the three relations
rewrite any other subset into the canonical one at the cost of a global
sign.  Pointwise products are carried as XOR on boolean negativity
arrays (bit set means entry -1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

import numpy as np

from .group import GroupContext

# Dense square array with int8 entries +1 / -1.
SignMatrix = np.ndarray


class MatrixFormatError(ValueError):
    """Matrix text input violates the file format; message carries the line."""


def prohibited_indices(ctx: GroupContext) -> frozenset[int]:
    """Indices a canonical subset must avoid: 1, 4t-1 and 4t."""
    return frozenset((1, ctx.order - 1, ctx.order))


@dataclass(frozen=True)
class CoboundarySubset:
    """A choice of coboundary indices from {1..4t}, the search variable."""

    ctx: GroupContext
    indices: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "indices", frozenset(self.indices))
        bad = sorted(i for i in self.indices if not 1 <= i <= self.ctx.order)
        if bad:
            raise ValueError(f"indices {bad} outside [1, {self.ctx.order}]")

    @property
    def is_canonical(self) -> bool:
        return not (self.indices & prohibited_indices(self.ctx))

    def sorted_indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.indices))

    def residue_class(self, residue: int) -> frozenset[int]:
        """The subset's members congruent to residue mod 4."""
        return frozenset(i for i in self.indices if i % 4 == residue)


class RepresentativeTables(NamedTuple):
    """Order-2 generator tables and their pointwise product.

    bb(r, s) = (-1)**(b_r b_s), cc(r, s) = (-1)**(c_r c_s) and
    cb(r, s) = (-1)**(c_r b_s) in terms of the element bit coordinates;
    product is their pointwise product, the fixed factor of every
    assembled matrix.
    """

    bb: SignMatrix
    cc: SignMatrix
    cb: SignMatrix
    product: SignMatrix


@dataclass(frozen=True)
class RepresentationFamily:
    """The eight sign-equivalent subsets assembling one matrix."""

    members: tuple[tuple[CoboundarySubset, int], ...]

    def canonical_member(self) -> tuple[CoboundarySubset, int]:
        hits = [(s, sign) for s, sign in self.members if s.is_canonical]
        if len(hits) != 1:
            raise AssertionError(f"expected exactly one canonical member, got {len(hits)}")
        return hits[0]


def build_back_negacyclic(k: int) -> SignMatrix:
    """k x k matrix with entry (i, j) = +1 iff i + j <= k + 1 (1-based)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    i = np.arange(1, k + 1)
    return np.where(i[:, None] + i[None, :] <= k + 1, 1, -1).astype(np.int8)


@lru_cache(maxsize=None)
def _representative(t: int) -> RepresentativeTables:
    bn2 = build_back_negacyclic(2)

    def ones(n: int) -> np.ndarray:
        return np.ones((n, n), dtype=np.int8)

    bb = np.kron(ones(2 * t), bn2).astype(np.int8)
    cc = np.kron(np.kron(ones(t), bn2), ones(2)).astype(np.int8)
    # Within each 4x4 tile, -1 where the row has c = 1 and the column has b = 1.
    c_of = np.array([0, 0, 1, 1], dtype=np.int8)
    b_of = np.array([0, 1, 0, 1], dtype=np.int8)
    tile = (1 - 2 * np.outer(c_of, b_of)).astype(np.int8)
    cb = np.kron(ones(t), tile).astype(np.int8)
    return RepresentativeTables(bb, cc, cb, (bb * cc * cb).astype(np.int8))


def build_representative(ctx: GroupContext) -> RepresentativeTables:
    return _representative(ctx.t)


@lru_cache(maxsize=None)
def _product_index_table(t: int) -> np.ndarray:
    """mul[r, s] = 1-based index of the product of elements r+1 and s+1."""
    ii = np.arange(4 * t)
    a, off = np.divmod(ii, 4)
    b, c = off & 1, off >> 1
    a2 = (a[:, None] + a[None, :]) % t
    off2 = (b[:, None] ^ b[None, :]) | ((c[:, None] ^ c[None, :]) << 1)
    return (4 * a2 + off2 + 1).astype(np.int32)


@lru_cache(maxsize=None)
def _block_pattern(residue: int) -> np.ndarray:
    """4x4 tile with -1 where the column offset is the row offset XOR
    the offset of the residue class representative."""
    off_i = (residue - 1) % 4
    blk = np.ones((4, 4), dtype=np.int8)
    for o in range(4):
        blk[o, o ^ off_i] = -1
    return blk


def _coboundary_blocks(ctx: GroupContext, i: int) -> SignMatrix:
    """Point form via tile placement: the class tile runs down a back
    diagonal of 4x4 blocks starting at block column ceil(i/4), then row i
    and column i are negated."""
    t = ctx.t
    out = np.ones((4 * t, 4 * t), dtype=np.int8)
    blk = _block_pattern(i % 4)
    bc0 = (i + 3) // 4
    for br in range(t):
        bc = (bc0 - 1 - br) % t
        out[4 * br : 4 * br + 4, 4 * bc : 4 * bc + 4] = blk
    out[i - 1, :] *= -1
    out[:, i - 1] *= -1
    return out


def _coboundary_point(ctx: GroupContext, i: int) -> SignMatrix:
    """Point form via evaluation: entry (r, s) = d(g_r) d(g_s) d(g_r g_s)."""
    n = ctx.order
    d = np.ones(n + 1, dtype=np.int8)
    d[i] = -1
    mul = _product_index_table(ctx.t)
    dv = d[1:]
    return (dv[:, None] * dv[None, :] * d[mul]).astype(np.int8)


def build_coboundary(ctx: GroupContext, i: int, *, point_form: bool = False) -> SignMatrix:
    """Coboundary table of index i, cross-checked across both builds.

    The default working form has exactly two negative entries in every
    row but the first, at columns i and e with g_e = g_s^{-1} g_i for
    row s.  point_form=True returns the point-evaluation layer instead
    (row i negated relative to the working form).
    """
    if not 1 <= i <= ctx.order:
        raise ValueError(f"index {i} outside [1, {ctx.order}]")
    point = _coboundary_point(ctx, i)
    blocks = _coboundary_blocks(ctx, i)
    if not np.array_equal(point, blocks):
        raise AssertionError(f"coboundary builds disagree for t={ctx.t}, i={i}")
    if point_form:
        return point
    working = point.copy()
    working[i - 1] *= -1
    return working


def assemble_cocyclic(subset: CoboundarySubset, *, point_form: bool = False) -> SignMatrix:
    """Pointwise product of the subset's coboundary tables with the
    representative product table.

    Products are accumulated as XOR on negativity bits: the working-form
    coboundary of index i is negative at (r, s) exactly when membership
    of s and of the product index g_r g_s in the subset differ, so one
    table lookup assembles the whole product.  point_form=True uses the
    point layer instead, adding the row-membership bit.
    """
    ctx = subset.ctx
    n = ctx.order
    member = np.zeros(n + 1, dtype=bool)
    member[list(subset.indices)] = True
    mul = _product_index_table(ctx.t)
    cols = member[1 : n + 1]
    neg = cols[None, :] ^ member[mul]
    if point_form:
        neg = neg ^ cols[:, None]
    neg = neg ^ (build_representative(ctx).product < 0)
    return np.where(neg, np.int8(-1), np.int8(1))


@lru_cache(maxsize=None)
def _class_index_sets(t: int) -> dict[int, frozenset[int]]:
    base = {r: r if r else 4 for r in (1, 2, 3, 0)}
    return {r: frozenset(4 * p + base[r] for p in range(t)) for r in (1, 2, 3, 0)}


@lru_cache(maxsize=None)
def _relation_kernels(t: int) -> dict[int, frozenset[int]]:
    """Index set each prohibited index trades against, keyed by that index."""
    cls = _class_index_sets(t)
    return {
        1: cls[1] | cls[2],
        4 * t - 1: cls[3] | cls[2],
        4 * t: cls[0] | cls[2],
    }


def canonicalize(subset: CoboundarySubset) -> tuple[CoboundarySubset, int]:
    """Equivalent subset avoiding {1, 4t-1, 4t}, with the traded sign.

    Each prohibited index present is exchanged for the rest of its
    relation set (symmetric difference); only the exchange of index 1
    carries a sign.  In the point layer the assembled matrices satisfy
    assemble(result) = sign * assemble(input) exactly; in the working
    layer they differ further by row negations, which no Hadamard
    predicate sees.
    """
    ctx = subset.ctx
    idx = set(subset.indices)
    sign = 1
    for p, kern in _relation_kernels(ctx.t).items():
        if p in idx:
            idx ^= kern
            if p == 1:
                sign = -sign
    return CoboundarySubset(ctx, frozenset(idx)), sign


# Complement flags for classes (1, 2, 3, 0): the eight ways to express
# one assembled matrix, in the fixed listing order.
_REPRESENTATION_FLAGS = (
    (False, False, False, False),
    (True, True, False, False),
    (False, True, True, False),
    (False, True, False, True),
    (True, False, True, False),
    (True, False, False, True),
    (False, False, True, True),
    (True, True, True, True),
)


def expand_representations(subset: CoboundarySubset) -> RepresentationFamily:
    """All eight complement-pattern subsets with their relative signs.

    Exactly one member is canonical.  A member's sign is -1 exactly when
    class 1 is complemented (the only relation carrying a sign).
    """
    ctx = subset.ctx
    cls = _class_index_sets(ctx.t)
    members = []
    for flags in _REPRESENTATION_FLAGS:
        idx = set(subset.indices)
        for flag, r in zip(flags, (1, 2, 3, 0)):
            if flag:
                idx ^= cls[r]
        sign = -1 if flags[0] else 1
        members.append((CoboundarySubset(ctx, frozenset(idx)), sign))
    return RepresentationFamily(tuple(members))


def is_hadamard_direct(M: SignMatrix) -> bool:
    """Ground truth: M M^T equals order times the identity."""
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"matrix must be square, got shape {M.shape}")
    if not np.all(np.abs(M) == 1):
        raise ValueError("entries must be +1 or -1")
    n = M.shape[0]
    work = M.astype(np.int32)
    return np.array_equal(work @ work.T, n * np.eye(n, dtype=np.int32))


def is_hadamard_rowtest(M: SignMatrix, ctx: GroupContext) -> bool:
    """Row-sum test for assembled matrices: rows 5..2t+2 all sum to zero.

    Equivalent to is_hadamard_direct on every assembled input; rows 2..4
    sum to zero automatically and the remaining rows are covered by the
    inversion symmetry of the ordering.
    """
    sums = np.asarray(M)[4 : 2 * ctx.t + 2].sum(axis=1)
    return bool(np.all(sums == 0))


def format_matrix(t: int, M: SignMatrix) -> str:
    """Matrix text format: line 1 't=<t>', then 4t rows of 4t '+'/'-'."""
    rows = ["t=%d" % t]
    for row in np.asarray(M):
        rows.append("".join("+" if v > 0 else "-" for v in row))
    return "\n".join(rows) + "\n"


def parse_matrix(text: str) -> tuple[int, SignMatrix]:
    """Inverse of format_matrix; raises MatrixFormatError naming the line."""
    lines = text.splitlines()
    if not lines:
        raise MatrixFormatError("line 1: empty input, expected 't=<value>'")
    head = lines[0]
    if not head.startswith("t="):
        raise MatrixFormatError(f"line 1: expected 't=<value>', got {head!r}")
    try:
        t = int(head[2:])
    except ValueError:
        raise MatrixFormatError(f"line 1: {head[2:]!r} is not an integer") from None
    if t < 3 or t % 2 == 0:
        raise MatrixFormatError(f"line 1: t must be odd and >= 3, got {t}")
    n = 4 * t
    body = lines[1:]
    if len(body) < n:
        raise MatrixFormatError(f"line {len(lines) + 1}: expected {n} matrix rows, found {len(body)}")
    extra = [k for k, stray in enumerate(body[n:]) if stray.strip()]
    if extra:
        raise MatrixFormatError(f"line {n + 2 + extra[0]}: trailing content after {n} matrix rows")
    out = np.empty((n, n), dtype=np.int8)
    for k, line in enumerate(body[:n]):
        if len(line) != n:
            raise MatrixFormatError(f"line {k + 2}: expected {n} characters, found {len(line)}")
        stray = set(line) - {"+", "-"}
        if stray:
            raise MatrixFormatError(f"line {k + 2}: invalid characters {sorted(stray)!r}")
        out[k] = np.frombuffer(line.encode(), dtype=np.uint8) == ord("+")
    out = (2 * out.astype(np.int8) - 1).astype(np.int8)
    return t, out

"""Pruned exhaustive search, the raw baseline, and matrix file IO.

run_search walks the admissible budget distributions and, within each,
every distinct assignment of budgets to classes.  The row conditions
congruent to 1 and 2 factor through per-class head profiles plus one
coupling score of the (1, 2) and (3, 0) class pairs, so each half of
the candidate space packs into a single integer key per pair and the
halves meet in a sorted join.  Joined candidates are filtered by the
remaining residue-3 and residue-0 row conditions, and every survivor is
certified by the direct orthogonality test before it is reported.

brute_force takes no shortcuts: it scans all 2^(4t-3) canonical subsets
with the packed-bit row test, as an independent ground truth for small
t.  Matrices travel as plain text (see format_matrix) so results can be
exported, reloaded and re-verified.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from itertools import permutations
from pathlib import Path

import numpy as np

from .bitmask import class_candidates, join_classes, mask_tables, pair_ci, row_test_batch
from .cocyclic import (
    CoboundarySubset,
    assemble_cocyclic,
    format_matrix,
    is_hadamard_direct,
    parse_matrix,
)
from .distributions import Distribution, entry_class_size, enumerate_distributions
from .group import GroupContext
from .recipes import Recipe, distribution_ingredient_counts, enumerate_recipes, recipe_of

# The per-shift key fields need bases t+1 and 2t+1; ((t+1)(2t+1))^((t-1)/2)
# must stay below 2^63, which holds through t = 15 and fails at 17.
_JOIN_LIMIT_T = 15

# Upper bound on A-side pair rows materialized at once.
_CHUNK_ROWS = 1 << 21

# Raw scan cap: 2^25 canonical subsets (t = 7) is the supported ceiling.
_BRUTE_LIMIT_BITS = 25


class ResourceLimitError(RuntimeError):
    """The requested computation exceeds what this implementation supports."""


@dataclass(frozen=True)
class SolutionRecord:
    """One Hadamard subset together with the recipe its classes realize."""

    subset: CoboundarySubset
    recipe: Recipe


@dataclass(frozen=True)
class DistributionReport:
    """Search outcome for one budget distribution."""

    distribution: Distribution
    ingredient_counts: tuple[int, int, int, int]
    recipe_count: int
    solution_recipe_count: int
    solutions: tuple[SolutionRecord, ...]

    @property
    def hadamard_count(self) -> int:
        return len(self.solutions)


@dataclass(frozen=True)
class SearchReport:
    """Full search outcome; solutions are certified and deterministic."""

    t: int
    reports: tuple[DistributionReport, ...]
    candidates_checked: int

    @property
    def hadamard_count(self) -> int:
        return sum(r.hadamard_count for r in self.reports)

    def solutions(self) -> tuple[SolutionRecord, ...]:
        out: list[SolutionRecord] = []
        for report in self.reports:
            out.extend(report.solutions)
        return tuple(out)


@dataclass(frozen=True)
class BruteForceReport:
    """Outcome of the raw scan over all canonical subsets."""

    t: int
    space: int
    solutions: tuple[CoboundarySubset, ...]

    @property
    def hadamard_count(self) -> int:
        return len(self.solutions)

    def counts_by_distribution(self) -> dict[tuple[int, int, int, int], int]:
        """Solution counts keyed by descending budget entries."""
        out: dict[tuple[int, int, int, int], int] = {}
        for subset in self.solutions:
            sizes = (len(subset.residue_class(cls)) for cls in (1, 2, 3, 0))
            entries = tuple(sorted((k * (self.t - k) // 2 for k in sizes), reverse=True))
            out[entries] = out.get(entries, 0) + 1
        return out


def _validate_t(t: int) -> None:
    if t < 3 or t % 2 == 0:
        raise ValueError(f"t must be odd and >= 3, got {t}")


def _join_assignment(t, d1, d2, d3, d0):
    """Mask 4-tuples satisfying all row conditions for one assignment.

    Returns (solutions array of shape (n, 4), candidates checked).  The
    B side (class pairs 3, 0) is keyed and sorted once; the A side
    (class pairs 1, 2) streams through in chunks and joins by key.  A
    key packs, per shift m, the profile sum and the coupling score, so
    equal keys mean the residue-1 and residue-2 rows all balance.
    """
    tables = mask_tables(t)
    half = tables.half

    b3 = np.repeat(d3, len(d0))
    b0 = np.tile(d0, len(d3))
    bkey = np.zeros(len(b3), dtype=np.int64)
    ok_b = np.ones(len(b3), dtype=bool)
    for m in range(1, half + 1):
        ib = (t - tables.runs[m][b3] - tables.runs[m][b0]).astype(np.int64)
        ok_b &= ib >= 0
        cb = t - pair_ci(tables, b3, b0, m)
        bkey = bkey * (t + 1) + np.maximum(ib, 0)
        bkey = bkey * (2 * t + 1) + cb
    b3, b0, bkey = b3[ok_b], b0[ok_b], bkey[ok_b]
    order = np.argsort(bkey, kind="stable")
    bkey, b3, b0 = bkey[order], b3[order], b0[order]

    hits = []
    checked = 0
    rows_per = max(1, _CHUNK_ROWS // max(len(d2), 1))
    for start in range(0, len(d1), rows_per):
        c1 = d1[start : start + rows_per]
        a1 = np.repeat(c1, len(d2))
        a2 = np.tile(d2, len(c1))
        akey = np.zeros(len(a1), dtype=np.int64)
        ok_a = np.ones(len(a1), dtype=bool)
        for m in range(1, half + 1):
            ia = (tables.runs[m][a1] + tables.runs[m][a2]).astype(np.int64)
            ok_a &= ia <= t
            ca = pair_ci(tables, a1, a2, m) + t
            akey = akey * (t + 1) + np.minimum(ia, t)
            akey = akey * (2 * t + 1) + ca
        a1, a2, akey = a1[ok_a], a2[ok_a], akey[ok_a]
        lo = np.searchsorted(bkey, akey, side="left")
        hi = np.searchsorted(bkey, akey, side="right")
        cnt = hi - lo
        nz = np.nonzero(cnt)[0]
        if len(nz) == 0:
            continue
        reps = cnt[nz]
        total = int(reps.sum())
        q1 = np.repeat(a1[nz], reps)
        q2 = np.repeat(a2[nz], reps)
        offs = np.zeros(len(reps), dtype=np.int64)
        np.cumsum(reps[:-1], out=offs[1:])
        idx = np.repeat(lo[nz], reps) + (np.arange(total) - np.repeat(offs, reps))
        q3 = b3[idx]
        q0 = b0[idx]
        checked += total
        keep = np.ones(total, dtype=bool)
        for m in range(1, half + 1):
            keep &= pair_ci(tables, q1, q3, m) + pair_ci(tables, q0, q2, m) == 0
            keep &= pair_ci(tables, q1, q0, m) + pair_ci(tables, q3, q2, m) == 0
        hits.append(np.stack([q1[keep], q2[keep], q3[keep], q0[keep]], axis=1))
    if hits:
        masks = np.concatenate(hits)
    else:
        masks = np.empty((0, 4), dtype=np.int64)
    return masks, checked


def _search_distribution(t: int, distribution: Distribution):
    """All solution mask 4-tuples of one distribution, plus candidates checked."""
    candidates = {}
    for entry in set(distribution.entries):
        k = entry_class_size(t, entry)
        candidates[entry] = {cls: class_candidates(t, k, cls) for cls in (1, 2, 3, 0)}
    solutions: list[tuple[int, int, int, int]] = []
    checked = 0
    for assignment in sorted(set(permutations(distribution.entries)), reverse=True):
        masks, n = _join_assignment(
            t,
            candidates[assignment[0]][1],
            candidates[assignment[1]][2],
            candidates[assignment[2]][3],
            candidates[assignment[3]][0],
        )
        checked += n
        solutions.extend(map(tuple, masks.tolist()))
    if len(set(solutions)) != len(solutions):
        raise AssertionError("assignments produced overlapping candidates")
    return solutions, checked


def run_search(
    t: int, *, distribution: int | None = None, jobs: int = 1
) -> SearchReport:
    """Search all canonical subsets for t, pruned by budgets and profiles.

    distribution restricts the run to one distribution by its position
    in enumerate_distributions(t); jobs > 1 spreads distributions over
    worker processes.  Every reported solution is certified with the
    direct orthogonality test.
    """
    _validate_t(t)
    if t > _JOIN_LIMIT_T:
        raise ResourceLimitError(
            f"join keys overflow 64 bits beyond t={_JOIN_LIMIT_T}, got t={t}"
        )
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    everything = enumerate_distributions(t)
    if distribution is None:
        selected = everything
    else:
        if not 0 <= distribution < len(everything):
            raise ValueError(
                f"distribution index {distribution} outside [0, {len(everything)})"
            )
        selected = (everything[distribution],)

    if jobs > 1 and len(selected) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(partial(_search_distribution, t), selected))
    else:
        outcomes = [_search_distribution(t, dist) for dist in selected]

    ctx = GroupContext(t)
    reports = []
    total_checked = 0
    for dist, (mask_rows, checked) in zip(selected, outcomes):
        total_checked += checked
        records = []
        for row in mask_rows:
            chosen = dict(zip((1, 2, 3, 0), row))
            subset = CoboundarySubset(ctx, frozenset(join_classes(t, chosen)))
            if not is_hadamard_direct(assemble_cocyclic(subset)):
                raise AssertionError(f"candidate failed certification: {subset}")
            records.append(SolutionRecord(subset, recipe_of(subset)))
        records.sort(key=lambda rec: rec.subset.sorted_indices())
        reports.append(
            DistributionReport(
                distribution=dist,
                ingredient_counts=distribution_ingredient_counts(dist),
                recipe_count=len(enumerate_recipes(dist)),
                solution_recipe_count=len({rec.recipe for rec in records}),
                solutions=tuple(records),
            )
        )
    return SearchReport(t, tuple(reports), total_checked)


def brute_force(t: int) -> BruteForceReport:
    """Scan every canonical subset with the packed-bit row test.

    The space has 2^(4t-3) subsets (three indices are never used); the
    scan is capped at 2^25, i.e. t = 7.
    """
    _validate_t(t)
    bits = 4 * t - 3
    if bits > _BRUTE_LIMIT_BITS:
        raise ResourceLimitError(
            f"raw scan needs 2^{bits} subsets; the cap is 2^{_BRUTE_LIMIT_BITS} (t = 7)"
        )
    tables = mask_tables(t)
    ctx = GroupContext(t)
    xs = np.arange(1 << t, dtype=np.int64)
    no_first = xs[(xs & 1) == 0]
    no_last = xs[(xs >> (t - 1)) & 1 == 0]
    d1, d2, d3, d0 = no_first, xs, no_last, no_last
    grid3 = np.repeat(d3, len(d0))
    grid0 = np.tile(d0, len(d3))
    found: list[tuple[int, int, int, int]] = []
    for m1 in d1.tolist():
        ing1 = [int(tables.runs[m][m1]) for m in range(1, tables.half + 1)]
        for m2 in d2.tolist():
            # The residue-1 rows need profile sums of exactly t; classes 1
            # and 2 alone overshooting rules the whole slab out.
            if any(
                ing1[m - 1] + int(tables.runs[m][m2]) > t
                for m in range(1, tables.half + 1)
            ):
                continue
            ok = row_test_batch(tables, m1, m2, grid3, grid0)
            for m3, m0 in zip(grid3[ok].tolist(), grid0[ok].tolist()):
                found.append((m1, m2, m3, m0))
    subsets = [
        CoboundarySubset(ctx, frozenset(join_classes(t, dict(zip((1, 2, 3, 0), row)))))
        for row in found
    ]
    subsets.sort(key=CoboundarySubset.sorted_indices)
    return BruteForceReport(t, 1 << bits, tuple(subsets))


def verify_matrix_file(path) -> tuple[int, bool]:
    """Parse a matrix text file and run the direct orthogonality test.

    Returns (t, verdict).  A false verdict is a result, not an error;
    malformed input raises MatrixFormatError with the offending line.
    """
    text = Path(path).read_text()
    t, matrix = parse_matrix(text)
    return t, is_hadamard_direct(matrix)


def export_solutions(report: SearchReport, directory) -> list[Path]:
    """Write one matrix file per solution plus a run summary.

    File names carry t and a digest of the matrix text, so re-exporting
    the same report overwrites byte-identical files.  The summary holds
    the per-distribution table and totals, nothing time-dependent.
    """
    out_dir = Path(directory)
    out_dir.mkdir(parents=True, exist_ok=True)
    lines = [f"t={report.t}", f"candidates checked: {report.candidates_checked}"]
    for dist_report in report.reports:
        lines.append(
            "distribution {}: ingredients {}, recipes {}, solution recipes {}, hadamard {}".format(
                dist_report.distribution.entries,
                dist_report.ingredient_counts,
                dist_report.recipe_count,
                dist_report.solution_recipe_count,
                dist_report.hadamard_count,
            )
        )
    lines.append(f"total hadamard: {report.hadamard_count}")
    written = []
    for record in report.solutions():
        text = format_matrix(report.t, assemble_cocyclic(record.subset))
        digest = hashlib.sha256(text.encode()).hexdigest()[:16]
        target = out_dir / f"t{report.t:02d}-{digest}.txt"
        target.write_text(text)
        written.append(target)
    lines.append(f"matrices written: {len(written)}")
    (out_dir / "report.txt").write_text("\n".join(lines) + "\n")
    return written

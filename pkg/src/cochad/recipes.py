"""Ingredients and recipes: class masks grouped by head profile.

The rows congruent to 1 see a class mask only through its head counts:
counts[m - 1] is the number of mask positions whose shift by m lands
outside the mask, for m = 1 .. (t - 1) / 2.  Masks sharing the profile
are interchangeable on those rows, so candidates group into ingredients
(one profile, many masks) and a recipe picks one ingredient per class
such that every row collects exactly t heads.  Rotation and
complementation preserve profiles, so the size-k catalog serves size
t - k as well.  Recipes prune hard: the surviving candidate space is a
tiny slice of the raw subset lattice, and the remaining row conditions
are checked per candidate afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Iterator

from .bitmask import forbidden_position, ingredient_counts, join_classes, mask_tables
from .cocyclic import CoboundarySubset
from .distributions import Distribution, entry_class_size
from .group import GroupContext


@dataclass(frozen=True, order=True)
class Ingredient:
    """Head profile of a class mask: counts[m - 1] heads on row 4m + 1.

    Identity is the profile alone; k records the representative size
    that produced it and stays out of comparisons, because the sizes k
    and t - k realize exactly the same profiles.
    """

    counts: tuple[int, ...]
    k: int = field(compare=False)

    @property
    def total(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class IngredientCatalog:
    """Size-k masks of one class budget, grouped by head profile.

    Masks are stored for the representative size k = min(k, t - k); the
    bitwise complements realize the same profiles at size t - k.
    """

    t: int
    k: int
    entry: int
    groups: tuple[tuple[Ingredient, tuple[int, ...]], ...]

    @property
    def ingredient_count(self) -> int:
        return len(self.groups)

    def ingredients(self) -> tuple[Ingredient, ...]:
        return tuple(ing for ing, _ in self.groups)

    def masks_for(self, ingredient: Ingredient) -> tuple[int, ...]:
        for ing, masks in self.groups:
            if ing == ingredient:
                return masks
        raise KeyError(f"no such ingredient in catalog: {ingredient}")


def ingredient_of(t: int, positions: Iterable[int]) -> Ingredient:
    """Head profile of the mask holding the given positions in 0..t-1."""
    tables = mask_tables(t)
    pos = set(positions)
    bad = sorted(p for p in pos if not 0 <= p < t)
    if bad:
        raise ValueError(f"positions {bad} outside [0, {t})")
    mask = 0
    for p in pos:
        mask |= 1 << p
    counts = tuple(int(c) for c in ingredient_counts(tables, mask))
    return Ingredient(counts, min(len(pos), t - len(pos)))


@lru_cache(maxsize=None)
def enumerate_ingredients(t: int, k: int) -> IngredientCatalog:
    """Catalog of all size-min(k, t-k) masks, grouped by profile."""
    tables = mask_tables(t)
    if not 0 <= k <= t:
        raise ValueError(f"k must be in [0, {t}], got {k}")
    krep = min(k, t - k)
    groups: dict[Ingredient, list[int]] = {}
    for combo in combinations(range(t), krep):
        mask = 0
        for p in combo:
            mask |= 1 << p
        counts = tuple(int(c) for c in ingredient_counts(tables, mask))
        groups.setdefault(Ingredient(counts, krep), []).append(mask)
    ordered = tuple(sorted((ing, tuple(sorted(ms))) for ing, ms in groups.items()))
    return IngredientCatalog(t, krep, krep * (t - krep) // 2, ordered)


@dataclass(frozen=True, order=True)
class Recipe:
    """One head profile per class, in class order (1, 2, 3, 0), jointly
    giving every row congruent to 1 exactly t heads."""

    t: int
    ingredients: tuple[Ingredient, Ingredient, Ingredient, Ingredient]

    def entries(self) -> tuple[int, int, int, int]:
        return tuple(ing.total for ing in self.ingredients)


def enumerate_recipes(distribution: Distribution) -> tuple[Recipe, ...]:
    """All recipes consistent with the distribution, sorted.

    Runs over every distinct assignment of the budget entries to the
    classes and joins profile pairs on their per-row sums: classes 1
    and 2 from the left, classes 3 and 0 against the complement to t.
    """
    t = distribution.t
    catalogs = {
        entry: enumerate_ingredients(t, entry_class_size(t, entry))
        for entry in set(distribution.entries)
    }
    out = []
    for assignment in sorted(set(permutations(distribution.entries)), reverse=True):
        ing1, ing2, ing3, ing0 = (catalogs[e].ingredients() for e in assignment)
        left: dict[tuple[int, ...], list[tuple[Ingredient, Ingredient]]] = {}
        for a in ing1:
            for b in ing2:
                key = tuple(x + y for x, y in zip(a.counts, b.counts))
                left.setdefault(key, []).append((a, b))
        for c in ing3:
            for d in ing0:
                need = tuple(t - x - y for x, y in zip(c.counts, d.counts))
                for a, b in left.get(need, ()):
                    out.append(Recipe(t, (a, b, c, d)))
    out.sort()
    return tuple(out)


def distribution_ingredient_counts(distribution: Distribution) -> tuple[int, int, int, int]:
    """Distinct profiles available per budget entry, in entry order."""
    return tuple(
        enumerate_ingredients(distribution.t, k).ingredient_count
        for k in distribution.class_sizes()
    )


def recipe_of(subset: CoboundarySubset) -> Recipe:
    """Head profiles of the subset's four classes, in class order."""
    t = subset.ctx.t
    ings = tuple(
        ingredient_of(t, [(i - 1) // 4 for i in subset.residue_class(cls)])
        for cls in (1, 2, 3, 0)
    )
    return Recipe(t, ings)


def expand_recipe(recipe: Recipe, ctx: GroupContext) -> Iterator[CoboundarySubset]:
    """All canonical subsets whose classes realize the recipe's profiles.

    Each profile is tried at both sizes k and t - k, skipping masks that
    cover a prohibited index position; results stream in lexicographic
    mask order and satisfy the rows congruent to 1 by construction.
    """
    t = ctx.t
    if recipe.t != t:
        raise ValueError(f"recipe is for t={recipe.t}, context has t={t}")
    tables = mask_tables(t)
    per_class: list[list[int]] = []
    for cls, ing in zip((1, 2, 3, 0), recipe.ingredients):
        base = enumerate_ingredients(t, ing.k).masks_for(ing)
        masks = list(base) + [m ^ tables.full for m in base]
        forb = forbidden_position(cls, t)
        if forb is not None:
            masks = [m for m in masks if not (m >> forb) & 1]
        per_class.append(sorted(masks))
    for combo in product(*per_class):
        chosen = dict(zip((1, 2, 3, 0), combo))
        yield CoboundarySubset(ctx, frozenset(join_classes(t, chosen)))

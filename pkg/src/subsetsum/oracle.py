"""Independent correctness references for the tree-based solver.

The decision table and the brute-force enumerator use representations
unrelated to the heap-ordered trees (a bitset dynamic program and plain
itertools enumeration), so agreement between the two sides is meaningful
evidence. They exist to cross-check, never to be fast, and each refuses
inputs beyond an explicit capacity cap.
"""

from __future__ import annotations

import math
from itertools import combinations
from operator import itemgetter

from .model import CapacityError, IndexSubset, InputSet, OrderError, ScaledSet

DP_CELL_CAP = 10**7
BRUTE_FORCE_MAX_SIZE = 25
ENUMERATION_CAP = 10**6


def dp_decision(input_set: InputSet, cell_cap: int = DP_CELL_CAP) -> bool:
    """Decide whether some nonempty subset sums to the target.

    Classic reachable-sums dynamic program over [neg_total, pos_total],
    extended to negative values by indexing sums from neg_total upward.
    Rows are kept as bitsets; a separate nonempty-subset bitset masks out
    the empty subset so a target of 0 is only reported when a nonempty
    subset actually sums to 0.
    """
    values = input_set.values
    neg_total = sum(v for v in values if v < 0)
    pos_total = sum(v for v in values if v > 0)
    span = pos_total - neg_total + 1
    if span > cell_cap:
        raise CapacityError(f"decision table needs {span} cells per row, cap is {cell_cap}")
    target = input_set.target
    if not neg_total <= target <= pos_total:
        return False
    mask = (1 << span) - 1
    reachable = 1 << -neg_total
    nonempty = 0
    for v in values:
        shifted = (reachable << v) & mask if v >= 0 else reachable >> -v
        nonempty |= shifted
        reachable |= shifted
    return bool((nonempty >> (target - neg_total)) & 1)


def brute_force_solve(input_set: InputSet, max_size: int = BRUTE_FORCE_MAX_SIZE) -> tuple[int, ...] | None:
    """Exhaustively find a subset summing to the target, or None.

    Subsets are tried by increasing cardinality, then lexicographic index
    order, so any returned subset has minimum cardinality. Values are
    returned ascending. Refuses sets larger than max_size elements.
    """
    values = input_set.values
    if len(values) > max_size:
        raise CapacityError(f"brute force capped at {max_size} elements, got {len(values)}")
    target = input_set.target
    for size in range(1, len(values) + 1):
        for combo in combinations(range(len(values)), size):
            if sum(values[i] for i in combo) == target:
                return tuple(sorted(values[i] for i in combo))
    return None


def enumerate_sorted_sums(
    s: ScaledSet,
    n: int | None = None,
    cap: int = ENUMERATION_CAP,
) -> list[tuple[int, IndexSubset]]:
    """All length-n subsets (or all nonempty subsets when n is None), sum-sorted.

    Entries are (scaled sum, subset) in nondecreasing sum order; ties keep
    generation order (increasing cardinality, then lexicographic indices).
    This is the reference that rank selection is tested against.
    """
    size = s.size
    if n is not None and not 1 <= n <= size:
        raise OrderError(f"subset length {n} outside [1, {size}]")
    total = math.comb(size, n) if n is not None else (1 << size) - 1
    if total > cap:
        raise CapacityError(f"enumeration of {total} subsets exceeds cap {cap}")
    scaled = s.scaled_values
    entries: list[tuple[int, IndexSubset]] = []
    lengths = (n,) if n is not None else range(1, size + 1)
    for length in lengths:
        for combo in combinations(range(size), length):
            combo_sum = sum(scaled[i] for i in combo)
            entries.append((combo_sum, IndexSubset(combo, combo_sum)))
    entries.sort(key=itemgetter(0))
    return entries

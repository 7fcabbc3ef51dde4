"""Input normalization and the shared subset representation.

Every search structure in this package operates on a sorted, strictly
positive view of the input: all elements are shifted by a common
nonnegative offset chosen so the smallest scaled value is at least 1
(already-positive inputs keep offset 0 and are left untouched). Subsets
are stored as strictly increasing index tuples into the sorted sequence,
which keeps duplicate values distinct and makes "advance to the next
element" well defined.

All types here are immutable after construction and safe to share across
concurrent searches.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

I64_MIN = -(2**63)
I64_MAX = 2**63 - 1


class InputError(ValueError):
    """An input set, target, or argument violates the input contract."""


class CapacityError(ValueError):
    """An operation would exceed a checked arithmetic or memory bound."""


class RankError(ValueError):
    """A requested rank lies outside [1, number of subsets]."""


class OrderError(ValueError):
    """A requested subset length lies outside [1, N]."""


@dataclass(frozen=True, slots=True)
class InputSet:
    """A problem instance: integer values (any order, duplicates allowed) and a target sum."""

    values: tuple[int, ...]
    target: int

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise InputError("input set must contain at least one value")
        for v in values:
            if not isinstance(v, int) or not I64_MIN <= v <= I64_MAX:
                raise InputError(f"value {v!r} is not a 64-bit signed integer")
        if not isinstance(self.target, int) or not I64_MIN <= self.target <= I64_MAX:
            raise InputError(f"target {self.target!r} is not a 64-bit signed integer")


@dataclass(frozen=True, slots=True)
class ScaledSet:
    """Sorted original values plus the offset making every scaled value >= 1.

    scaled(i) == sorted_values[i] + offset, with offset == max(0, 1 - min).
    A set containing zero or negative values is therefore shifted just far
    enough to become strictly positive, and the worst-case subset sum
    N * max_scaled is checked against the 64-bit signed bound up front so
    no search can overflow mid-flight.
    """

    sorted_values: tuple[int, ...]
    offset: int
    scaled_values: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        values = tuple(self.sorted_values)
        object.__setattr__(self, "sorted_values", values)
        if not values:
            raise InputError("scaled set must contain at least one value")
        if any(a > b for a, b in zip(values, values[1:])):
            raise InputError("sorted_values must be nondecreasing")
        expected = max(0, 1 - values[0])
        if self.offset != expected:
            raise InputError(f"offset {self.offset} differs from max(0, 1 - min) = {expected}")
        scaled = tuple(v + self.offset for v in values)
        worst = len(values) * scaled[-1]
        if worst > I64_MAX:
            raise CapacityError(
                f"worst-case subset sum N*max_scaled = {worst} exceeds the 64-bit signed bound {I64_MAX}"
            )
        object.__setattr__(self, "scaled_values", scaled)

    @property
    def size(self) -> int:
        return len(self.sorted_values)

    def scaled(self, i: int) -> int:
        """Scaled value at sorted position i."""
        return self.scaled_values[i]


class IndexSubset(NamedTuple):
    """A subset as strictly increasing indices into a scaled set, plus its scaled sum."""

    indices: tuple[int, ...]
    cached_sum: int

    @classmethod
    def from_indices(cls, indices: Sequence[int], s: ScaledSet) -> "IndexSubset":
        """Build a subset from raw indices, computing and caching its scaled sum."""
        idx = tuple(indices)
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise InputError(f"indices must be strictly increasing, got {idx}")
        if idx and not (0 <= idx[0] and idx[-1] < s.size):
            raise InputError(f"indices {idx} out of range for a set of {s.size} values")
        return cls(idx, sum(s.scaled_values[i] for i in idx))


def normalize(input_set: InputSet) -> ScaledSet:
    """Sort the input values and shift them into a strictly positive scaled set.

    Deterministic for a given input; raises InputError on an empty set and
    CapacityError when the worst-case scaled sum would overflow 64 bits.
    """
    if not input_set.values:
        raise InputError("input set must contain at least one value")
    values = tuple(sorted(input_set.values))
    return ScaledSet(values, max(0, 1 - values[0]))


def unscale(subset: IndexSubset, s: ScaledSet) -> tuple[int, ...]:
    """Map an index subset back to its original values, ascending."""
    return tuple(s.sorted_values[i] for i in subset.indices)

"""Small-universe vertex sets backed by an integer bitmask."""
from __future__ import annotations

import typing as t

from domprism.errors import CapacityError, GraphError

# Largest supported universe, covers Q_12
CAPACITY = 4096


def popcount(mask: int) -> int:
    """Count set bits of a non-negative integer."""
    return bin(mask).count("1")


def iter_bits(mask: int) -> t.Iterator[int]:
    """Yield the indices of set bits in ascending order.

    Args:
        mask: Non-negative integer

    Yields:
        Bit index of every set bit
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def check_capacity(n: int) -> None:
    """Raise CapacityError if a universe of n vertices is not supported.

    Args:
        n: Requested universe size

    Raises:
        CapacityError if n exceeds CAPACITY
    """
    if n > CAPACITY:
        msg = f"Instance too large: {n} vertices exceeds capacity {CAPACITY}"
        raise CapacityError(msg)


class VertexSet:
    """Immutable set of vertex indices 0..universe_size-1."""

    __slots__ = ("_mask", "_universe_size")

    def __init__(self, universe_size: int, mask: int = 0) -> None:
        """Create a VertexSet.

        Args:
            universe_size: Count of addressable vertices
            mask: Membership bitmask, bit v set iff v is a member

        Raises:
            GraphError if mask has a bit outside the universe
            CapacityError if universe_size exceeds CAPACITY
        """
        check_capacity(universe_size)
        if universe_size < 0 or mask < 0 or mask >> universe_size:
            msg = f"Mask {mask:#x} does not fit a universe of {universe_size}"
            raise GraphError(msg)
        self._universe_size = universe_size
        self._mask = mask

    @classmethod
    def of(cls, universe_size: int, members: t.Iterable[int]) -> VertexSet:
        """Create a VertexSet from member indices.

        Args:
            universe_size: Count of addressable vertices
            members: Vertex indices, duplicates allowed

        Returns:
            VertexSet containing members

        Raises:
            GraphError if a member is outside 0..universe_size-1
        """
        mask = 0
        for v in members:
            if not 0 <= v < universe_size:
                msg = f"Vertex {v} outside universe of {universe_size}"
                raise GraphError(msg)
            mask |= 1 << v
        return cls(universe_size, mask)

    @classmethod
    def full(cls, universe_size: int) -> VertexSet:
        """Every vertex of the universe."""
        return cls(universe_size, (1 << universe_size) - 1)

    @property
    def universe_size(self) -> int:
        """Count of addressable vertices."""
        return self._universe_size

    @property
    def mask(self) -> int:
        """Membership bitmask."""
        return self._mask

    def __len__(self) -> int:
        """Cardinality, the popcount of the mask."""
        return popcount(self._mask)

    def __bool__(self) -> bool:
        """True if nonempty."""
        return self._mask != 0

    def __contains__(self, v: object) -> bool:
        """Constant-time membership."""
        if not isinstance(v, int) or v < 0:
            return False
        return bool(self._mask >> v & 1)

    def __iter__(self) -> t.Iterator[int]:
        """Members in ascending order."""
        return iter_bits(self._mask)

    def __eq__(self, obj: object) -> bool:
        """Equal if same universe and same members."""
        if not isinstance(obj, VertexSet):
            return NotImplemented
        return (
            self._universe_size == obj._universe_size and self._mask == obj._mask
        )

    def __hash__(self) -> int:
        """Hash of universe and mask."""
        return hash((self._universe_size, self._mask))

    def __repr__(self) -> str:
        """Representation debug string."""
        return f"<VertexSet {sorted(self)} of {self._universe_size}>"

    def _check(self, obj: VertexSet) -> None:
        if obj._universe_size != self._universe_size:
            msg = (
                "Universe mismatch "
                f"{self._universe_size} != {obj._universe_size}"
            )
            raise GraphError(msg)

    def __or__(self, obj: VertexSet) -> VertexSet:
        """Union."""
        self._check(obj)
        return VertexSet(self._universe_size, self._mask | obj._mask)

    def __and__(self, obj: VertexSet) -> VertexSet:
        """Intersection."""
        self._check(obj)
        return VertexSet(self._universe_size, self._mask & obj._mask)

    def __sub__(self, obj: VertexSet) -> VertexSet:
        """Difference."""
        self._check(obj)
        return VertexSet(self._universe_size, self._mask & ~obj._mask)

    def complement(self) -> VertexSet:
        """Vertices of the universe not in this set."""
        return VertexSet(
            self._universe_size,
            ((1 << self._universe_size) - 1) & ~self._mask,
        )

    def add(self, v: int) -> VertexSet:
        """Copy with v added."""
        if not 0 <= v < self._universe_size:
            msg = f"Vertex {v} outside universe of {self._universe_size}"
            raise GraphError(msg)
        return VertexSet(self._universe_size, self._mask | 1 << v)

    def issubset(self, obj: VertexSet) -> bool:
        """True if every member is also in obj."""
        self._check(obj)
        return self._mask & ~obj._mask == 0

    def isdisjoint(self, obj: VertexSet) -> bool:
        """True if no common member."""
        self._check(obj)
        return self._mask & obj._mask == 0

    def intersects(self, obj: VertexSet) -> bool:
        """True if at least one common member."""
        return not self.isdisjoint(obj)

    def min(self) -> int:
        """Smallest member.

        Raises:
            ValueError if empty
        """
        if not self._mask:
            msg = "min() of an empty VertexSet"
            raise ValueError(msg)
        return (self._mask & -self._mask).bit_length() - 1

    def to_list(self) -> t.List[int]:
        """Members as a sorted list."""
        return list(self)

"""Monotone lattice paths and the vertex-sharing counts everything else rests on.

A path is a word of unit steps E (east, +x) and N (north, +y) starting at a
lattice vertex. After t steps the coordinate sum is start.x + start.y + t, so
two equal-length paths with the same start can only share a vertex at the
same step index; every count below therefore reduces to comparing the two
vertex sequences position by position.

Three counting conventions coexist on purpose, one operation each, so no
caller can silently use the wrong one:

* ``intersections_interior``         -- shared vertices excluding both the
  common start and the common end (endpoints must coincide);
* ``intersections_excluding_origin`` -- shared vertices excluding the common
  origin; a shared final vertex counts (both paths must start at (0, 0));
* ``intersections_excluding_start``  -- shared vertices excluding the common
  start; a shared final vertex counts.

All values are immutable and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

Point = tuple[int, int]

EAST = "E"
NORTH = "N"

_VALID_STEPS = frozenset((EAST, NORTH))


@dataclass(frozen=True)
class PathNE:
    """A monotone lattice path stored as its step word.

    The step word is canonical; the vertex list is derived on demand and
    cached. ``start`` defaults to the origin.
    """

    steps: tuple[str, ...]
    start: Point = (0, 0)

    def __post_init__(self) -> None:
        bad = [s for s in self.steps if s not in _VALID_STEPS]
        if bad:
            raise ValueError(f"invalid steps {bad!r}: only {EAST!r} and {NORTH!r} are allowed")

    @classmethod
    def from_word(cls, word: str, start: Point = (0, 0)) -> "PathNE":
        return cls(tuple(word), start)

    @property
    def word(self) -> str:
        return "".join(self.steps)

    @property
    def n(self) -> int:
        """Total number of steps."""
        return len(self.steps)

    @property
    def east_steps(self) -> int:
        return sum(1 for s in self.steps if s == EAST)

    @cached_property
    def vertices(self) -> tuple[Point, ...]:
        x, y = self.start
        out = [(x, y)]
        for s in self.steps:
            if s == EAST:
                x += 1
            else:
                y += 1
            out.append((x, y))
        return tuple(out)

    @property
    def end(self) -> Point:
        return self.vertices[-1]

    def column_heights(self, x: int) -> tuple[int, ...]:
        """All y with (x, y) on the path, in increasing order."""
        return tuple(vy for vx, vy in self.vertices if vx == x)


@dataclass(frozen=True)
class PathPair:
    """Two same-start, same-length paths; ``ordered`` records whether the
    pair is counted as ordered."""

    first: PathNE
    second: PathNE
    ordered: bool = True

    def __post_init__(self) -> None:
        if self.first.n != self.second.n:
            raise ValueError(
                f"paths have different step counts: {self.first.n} vs {self.second.n}"
            )
        if self.first.start != self.second.start:
            raise ValueError(
                f"paths have different starts: {self.first.start} vs {self.second.start}"
            )

    def swapped(self) -> "PathPair":
        return PathPair(self.second, self.first, self.ordered)


def _stepwise_matches(pair: PathPair, lo: int, hi: int) -> int:
    """Number of indices t in [lo, hi] where the two vertex sequences agree.

    Same start + equal length means this equals the size of the vertex-set
    intersection restricted to those indices.
    """
    va = pair.first.vertices
    vb = pair.second.vertices
    return sum(1 for t in range(lo, hi + 1) if va[t] == vb[t])


def intersections_interior(pair: PathPair) -> int:
    """Shared vertices of a same-endpoints pair, excluding start and end."""
    if pair.first.end != pair.second.end:
        raise ValueError(
            f"interior count needs equal endpoints: {pair.first.end} vs {pair.second.end}"
        )
    return _stepwise_matches(pair, 1, pair.first.n - 1)


def intersections_excluding_origin(pair: PathPair) -> int:
    """Shared vertices of an origin-anchored pair, excluding the origin only.

    Endpoints may differ; a shared final vertex is counted.
    """
    if pair.first.start != (0, 0):
        raise ValueError(f"both paths must start at the origin, got {pair.first.start}")
    return _stepwise_matches(pair, 1, pair.first.n)


def intersections_excluding_start(pair: PathPair) -> int:
    """Shared vertices excluding the common start; a shared end is counted."""
    return _stepwise_matches(pair, 1, pair.first.n)

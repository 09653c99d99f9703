"""Exact word lengths by breadth-first search of the Cayley graph.

States are canonical serialized strings of reduced diagrams, so deduplication
is exact. Levels are expanded whole: every element of level k is known before
level k+1 starts, which makes enumeration order, ball sizes and reports
deterministic. Point queries meet in the middle to double the reachable
radius. Memory is capped by an approximate byte budget; exceeding it raises
a resource error naming the last completed radius.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .elements import Element
from .generators import GENERATOR_NAMES, GenSymbol, Word, generator_element

ENV_BUDGET = "THOMPSON_MEM_BUDGET_MB"
DEFAULT_BUDGET_MB = 512
_ENTRY_OVERHEAD = 120  # rough bytes of dict/bookkeeping per stored key


class ResourceLimitError(RuntimeError):
    """Search hit the memory budget; `completed_radius` levels are trusted."""

    def __init__(self, budget_mb: int, completed_radius: int):
        super().__init__(
            f"memory budget of {budget_mb} MB exceeded; completed radius {completed_radius}"
        )
        self.budget_mb = budget_mb
        self.completed_radius = completed_radius


def memory_budget_mb(budget_mb: int | None = None) -> int:
    if budget_mb is not None:
        return budget_mb
    env = os.environ.get(ENV_BUDGET)
    return int(env) if env else DEFAULT_BUDGET_MB


@dataclass(frozen=True)
class LengthResult:
    """Exact distance from the identity, or unknown beyond the radius."""

    length: int | None
    radius: int

    @property
    def known(self) -> bool:
        return self.length is not None

    def __str__(self) -> str:
        return str(self.length) if self.known else f"unknown beyond radius {self.radius}"


def moves() -> list[tuple[GenSymbol, Element]]:
    """The eight right-multiplication moves, in a fixed deterministic order."""
    out = []
    for exp in (1, -1):
        for name in GENERATOR_NAMES:
            out.append((GenSymbol(name, exp), generator_element(name) if exp == 1 else generator_element(name).inverse()))
    return out


class _Budget:
    def __init__(self, budget_mb: int):
        self.budget_mb = budget_mb
        self.limit = budget_mb << 20
        self.used = 0

    def charge(self, key: str, completed_radius: int) -> None:
        self.used += len(key) + _ENTRY_OVERHEAD
        if self.used > self.limit:
            raise ResourceLimitError(self.budget_mb, completed_radius)


@dataclass
class BallData:
    """Every element within the radius, grouped by exact distance."""

    radius: int
    levels: list[list[Element]]
    distance: dict[str, int]
    parent: dict[str, tuple[str, GenSymbol]] | None

    def sizes(self) -> list[int]:
        return [len(level) for level in self.levels]

    def total(self) -> int:
        return len(self.distance)

    def distance_of(self, x: Element) -> int | None:
        return self.distance.get(x.reduce().text())

    def witness_word(self, x: Element) -> Word | None:
        """A geodesic word for x, if x lies inside the ball."""
        if self.parent is None:
            raise ValueError("ball was enumerated without parent tracking")
        key = x.reduce().text()
        if key not in self.distance:
            return None
        symbols: list[GenSymbol] = []
        while True:
            step = self.parent.get(key)
            if step is None:
                break
            key, symbol = step
            symbols.append(symbol)
        return tuple(reversed(symbols))


def enumerate_ball(
    radius: int, budget_mb: int | None = None, track_parents: bool = True
) -> BallData:
    """Breadth-first levels 0..radius around the identity."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    budget = _Budget(memory_budget_mb(budget_mb))
    identity = Element.identity()
    key0 = identity.text()
    distance = {key0: 0}
    parent: dict[str, tuple[str, GenSymbol]] | None = {} if track_parents else None
    budget.charge(key0, 0)
    levels = [[identity]]
    level_keys = [[key0]]
    the_moves = moves()
    for d in range(1, radius + 1):
        frontier: list[Element] = []
        frontier_keys: list[str] = []
        for e, ek in zip(levels[d - 1], level_keys[d - 1]):
            for symbol, g in the_moves:
                p = e * g
                k = p.text()
                if k not in distance:
                    distance[k] = d
                    budget.charge(k, d - 1)
                    if parent is not None:
                        parent[k] = (ek, symbol)
                    frontier.append(p)
                    frontier_keys.append(k)
        levels.append(frontier)
        level_keys.append(frontier_keys)
        if not frontier:
            break
    return BallData(radius, levels, distance, parent)


def ball_sizes(radius: int, budget_mb: int | None = None) -> list[int]:
    """Count of distinct elements at each exact distance 0..radius."""
    return enumerate_ball(radius, budget_mb=budget_mb, track_parents=False).sizes()


def exact_word_length(
    x: Element,
    radius: int,
    budget_mb: int | None = None,
    bidirectional: bool = True,
) -> LengthResult:
    """Exact distance of x from the identity if it is at most `radius`.

    The bidirectional search grows balls around both endpoints one full level
    at a time (smaller frontier first) and meets in the middle; distances it
    reports are exact by the level-completeness argument.
    """
    if radius < 0:
        raise ValueError("radius must be non-negative")
    target = x.reduce()
    if target == Element.identity():
        return LengthResult(0, radius)
    if not bidirectional:
        ball = enumerate_ball(radius, budget_mb=budget_mb, track_parents=False)
        return LengthResult(ball.distance.get(target.text()), radius)

    budget = _Budget(memory_budget_mb(budget_mb))
    the_moves = moves()
    sides = []
    for root in (Element.identity(), target):
        key = root.text()
        budget.charge(key, 0)
        sides.append({"dist": {key: 0}, "frontier": [root], "depth": 0})

    best: int | None = None
    while sides[0]["depth"] + sides[1]["depth"] < radius and best is None:
        side = min(sides, key=lambda s: len(s["frontier"]))
        other = sides[1] if side is sides[0] else sides[0]
        depth = side["depth"] + 1
        frontier: list[Element] = []
        for e in side["frontier"]:
            for _, g in the_moves:
                p = e * g
                k = p.text()
                if k not in side["dist"]:
                    side["dist"][k] = depth
                    completed = sides[0]["depth"] + sides[1]["depth"]
                    budget.charge(k, completed)
                    frontier.append(p)
                    meet = other["dist"].get(k)
                    if meet is not None and (best is None or depth + meet < best):
                        best = depth + meet
        side["frontier"] = frontier
        side["depth"] = depth
    if best is not None and best <= radius:
        return LengthResult(best, radius)
    return LengthResult(None, radius)

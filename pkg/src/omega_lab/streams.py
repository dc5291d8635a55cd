"""Stream-presented sets and functions with truncation-only semantics.

Some constructions leave the eventually periodic universe (partial sums,
greedy choices, recursive slaloms).  Those are exposed as replayable
streams: every consumer gets a fresh generator from a factory, so a
truncation at a given depth is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import Callable, Iterator

from .errors import BudgetExceeded
from .qafuns import QAFun

DEFAULT_BUDGET = 10_000_000


class Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def tick(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise BudgetExceeded(f"stream exceeded its budget of {self.limit} steps")


class LazySet:
    """A strictly increasing stream of naturals.

    ``factory(budget)`` must return a fresh iterator; it may call
    ``budget.tick()`` for internal work, and every emitted element costs one
    step on top of that.
    """

    def __init__(self, name: str, params: str, factory: Callable[[Budget], Iterator[int]],
                 budget: int = DEFAULT_BUDGET):
        self.name = name
        self.params = params
        self.factory = factory
        self.budget = budget

    def stream(self) -> Iterator[int]:
        budget = Budget(self.budget)
        last = -1
        for x in self.factory(budget):
            budget.tick()
            if x <= last:
                raise RuntimeError(f"{self.name} emitted {x} after {last}")
            last = x
            yield x

    def __iter__(self) -> Iterator[int]:
        return self.stream()

    def truncate(self, depth: int) -> list[int]:
        out = []
        if depth <= 0:
            return out
        for x in self.stream():
            if x >= depth:
                break
            out.append(x)
        return out

    def snapshot(self, depth: int) -> Truncation:
        return Truncation(self.name, self.params, depth, tuple(self.truncate(depth)))

    def __repr__(self) -> str:
        return f"LazySet({self.name}, {self.params})"


class LazyFun:
    """A stream of values ``h(0), h(1), ...``."""

    def __init__(self, name: str, params: str, factory: Callable[[Budget], Iterator[int]],
                 budget: int = DEFAULT_BUDGET):
        self.name = name
        self.params = params
        self.factory = factory
        self.budget = budget

    def take(self, n: int) -> list[int]:
        budget = Budget(self.budget)
        out = []
        it = self.factory(budget)
        for _ in range(n):
            budget.tick()
            out.append(next(it))
        return out

    def __call__(self, n: int) -> int:
        return self.take(n + 1)[-1]

    def __repr__(self) -> str:
        return f"LazyFun({self.name}, {self.params})"


@dataclass(frozen=True)
class Truncation:
    """The serializable face of a lazy set: its elements below ``depth``."""

    name: str
    params: str
    depth: int
    elements: tuple

    def __str__(self) -> str:
        params = self.params.replace("\\", "\\\\").replace('"', '\\"')
        elems = ",".join(map(str, self.elements))
        return f'trunc(name="{self.name}",params="{params}",depth={self.depth},elems=[{elems}])'

    def to_json(self) -> dict:
        return {
            "type": "trunc",
            "name": self.name,
            "params": self.params,
            "depth": self.depth,
            "elems": list(self.elements),
        }


def truncate(a: LazySet, depth: int) -> list[int]:
    return a.truncate(depth)


def from_epset(a, budget: int = DEFAULT_BUDGET) -> LazySet:
    return LazySet("ep", str(a), lambda _b: iter(a), budget)


def baire_to_roth(f: QAFun, budget: int = DEFAULT_BUDGET) -> LazySet:
    """The set of partial sums ``f(0) + ... + f(n) + n``."""

    def gen(_budget):
        total = 0
        for n in count():
            total += f(n)
            yield total + n

    return LazySet("a_f", str(f), gen, budget)

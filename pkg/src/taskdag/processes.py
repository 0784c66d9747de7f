"""Seeded randomized processes for generating ordered task-dependency graphs.

Randomness comes from numpy's PCG64 generator; a run is fully determined by
its ProcessConfig (seed and sampling semantics included).  The default
permutation-order semantics draws one uniform permutation of all candidate
edges and makes a single pass: a proposal blocked once stays blocked forever
(blocking requires a source/sink count already at its cap, and caps are
absorbing), so one pass ends exactly when no move remains and the outcome
distribution matches unbounded rejection sampling.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Callable

import numpy as np

from .errors import ConfigError, GraphError
from .graph import OrderedDag, ordered_pairs

TraceFn = Callable[[int, str, int, int, int, int], None]
# trace arguments: round index, "add"/"remove", a, b, source count, sink count

MAX_SEED = 2**64 - 1


class ProcessKind(str, Enum):
    REMOVAL = "removal"
    ADDITION = "addition"
    COMBINED = "combined"
    RANDOM_TREE = "tree"


class SamplingSemantics(str, Enum):
    PERMUTATION_ORDER = "permutation"
    REJECTION_SAMPLING = "rejection"


class HaltReason(str, Enum):
    EXACT_TARGET_REACHED = "exact-target-reached"
    NO_MOVE_AVAILABLE = "no-move-available"
    EDGE_BUDGET_REACHED = "edge-budget-reached"


@dataclass(frozen=True)
class ProcessConfig:
    """Parameters of one process run.

    ``m`` is only meaningful for the combined process; the random tree ignores
    x, y and m entirely.
    """

    x: int
    y: int
    n: int
    kind: ProcessKind
    seed: int
    m: int | None = None
    semantics: SamplingSemantics = SamplingSemantics.PERMUTATION_ORDER

    def validate(self) -> None:
        if not isinstance(self.seed, int) or not 0 <= self.seed <= MAX_SEED:
            raise ConfigError(f"seed must be an integer in [0, 2^64), got {self.seed!r}")
        if not isinstance(self.n, int) or self.n < 1:
            raise ConfigError(f"n must be a positive integer, got {self.n!r}")
        if self.kind is ProcessKind.RANDOM_TREE:
            return
        if not (isinstance(self.x, int) and isinstance(self.y, int) and self.x >= 1 and self.y >= 1):
            raise ConfigError(f"requires x, y >= 1, got ({self.x!r}, {self.y!r})")
        if self.n < max(self.x, self.y):
            raise ConfigError(f"requires n >= max(x, y) = {max(self.x, self.y)}, got n = {self.n}")
        if self.kind is ProcessKind.COMBINED:
            if self.m is None:
                raise ConfigError("combined process requires a target edge count m")
            if self.n <= max(self.x, self.y) + 1:
                raise ConfigError(
                    f"combined process requires n > max(x, y) + 1, got n = {self.n}"
                )
            lo = 2 * self.n - self.x - self.y - 2
            k = max(0, self.x + self.y - self.n)
            hi = comb(self.n - k, 2) - comb(self.x - k, 2) - comb(self.y - k, 2)
            if not (isinstance(self.m, int) and lo <= self.m <= hi):
                raise ConfigError(f"m must lie in [{lo}, {hi}], got {self.m!r}")
        elif self.m is not None:
            raise ConfigError("m is only meaningful for the combined process")


@dataclass(frozen=True)
class ProcessOutcome:
    """Final graph plus bookkeeping; ``attempts`` counts proposals including
    cancelled ones and is reported only under rejection sampling."""

    graph: OrderedDag
    rounds: int
    attempts: int | None
    halt_reason: HaltReason
    is_target_xy: bool


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed))


def _check_kind(cfg: ProcessConfig, expected: ProcessKind) -> None:
    if cfg.kind is not expected:
        raise ConfigError(f"config kind is {cfg.kind.value!r}, expected {expected.value!r}")


class _State:
    """Mutable edge/degree bookkeeping shared by the process inner loops."""

    __slots__ = ("n", "pairs", "present", "indeg", "outdeg", "sources", "sinks", "edge_total", "rounds", "trace")

    def __init__(self, n: int, complete: bool, trace: TraceFn | None) -> None:
        self.n = n
        self.pairs = ordered_pairs(n)
        self.indeg = [0] * (n + 1)
        self.outdeg = [0] * (n + 1)
        self.present = [complete] * len(self.pairs)
        if complete:
            for a, b in self.pairs:
                self.indeg[b] += 1
                self.outdeg[a] += 1
        self.sources = sum(1 for v in range(1, n + 1) if self.indeg[v] == 0)
        self.sinks = sum(1 for v in range(1, n + 1) if self.outdeg[v] == 0)
        self.edge_total = len(self.pairs) if complete else 0
        self.rounds = 0
        self.trace = trace

    def removal_blocked(self, idx: int, x: int, y: int) -> bool:
        a, b = self.pairs[idx]
        return (self.indeg[b] == 1 and self.sources >= x) or (
            self.outdeg[a] == 1 and self.sinks >= y
        )

    def remove(self, idx: int) -> None:
        a, b = self.pairs[idx]
        self.present[idx] = False
        self.indeg[b] -= 1
        self.outdeg[a] -= 1
        self.sources += self.indeg[b] == 0
        self.sinks += self.outdeg[a] == 0
        self.edge_total -= 1
        self.rounds += 1
        if self.trace is not None:
            self.trace(self.rounds, "remove", a, b, self.sources, self.sinks)

    def addition_blocked(self, idx: int, x: int, y: int) -> bool:
        a, b = self.pairs[idx]
        return (self.indeg[b] == 0 and self.sources <= x) or (
            self.outdeg[a] == 0 and self.sinks <= y
        )

    def add(self, idx: int) -> None:
        a, b = self.pairs[idx]
        self.present[idx] = True
        self.sources -= self.indeg[b] == 0
        self.sinks -= self.outdeg[a] == 0
        self.indeg[b] += 1
        self.outdeg[a] += 1
        self.edge_total += 1
        self.rounds += 1
        if self.trace is not None:
            self.trace(self.rounds, "add", a, b, self.sources, self.sinks)

    def addition_neutral(self, idx: int) -> bool:
        a, b = self.pairs[idx]
        return self.indeg[b] > 0 and self.outdeg[a] > 0

    def graph(self) -> OrderedDag:
        g = OrderedDag(self.n)
        for idx, kept in enumerate(self.present):
            if kept:
                a, b = self.pairs[idx]
                g._edges.add((a, b))
        g._indeg = list(self.indeg)
        g._outdeg = list(self.outdeg)
        return g


def edge_removal_process(cfg: ProcessConfig, trace: TraceFn | None = None) -> ProcessOutcome:
    """Strip the complete graph down, never letting the source count exceed x
    or the sink count exceed y; halts when no edge can be removed."""
    _check_kind(cfg, ProcessKind.REMOVAL)
    cfg.validate()
    rng = _rng(cfg.seed)
    state = _State(cfg.n, complete=True, trace=trace)
    x, y = cfg.x, cfg.y
    attempts: int | None = None
    if cfg.semantics is SamplingSemantics.PERMUTATION_ORDER:
        for idx in rng.permutation(len(state.pairs)).tolist():
            if not state.removal_blocked(idx, x, y):
                state.remove(idx)
    else:
        attempts = 0
        alive = list(range(len(state.pairs)))
        while any(not state.removal_blocked(i, x, y) for i in alive):
            pos = int(rng.integers(0, len(alive)))
            idx = alive[pos]
            attempts += 1
            if state.removal_blocked(idx, x, y):
                continue
            alive[pos] = alive[-1]
            alive.pop()
            state.remove(idx)
    return ProcessOutcome(
        graph=state.graph(),
        rounds=state.rounds,
        attempts=attempts,
        halt_reason=HaltReason.NO_MOVE_AVAILABLE,
        is_target_xy=(state.sources, state.sinks) == (x, y),
    )


def edge_addition_process(cfg: ProcessConfig, trace: TraceFn | None = None) -> ProcessOutcome:
    """Grow the empty graph, never letting the source count drop below x or
    the sink count below y; halts the moment the profile is exactly (x, y) or
    when no edge can be added."""
    _check_kind(cfg, ProcessKind.ADDITION)
    cfg.validate()
    rng = _rng(cfg.seed)
    state = _State(cfg.n, complete=False, trace=trace)
    x, y = cfg.x, cfg.y
    attempts: int | None = None
    halt = HaltReason.NO_MOVE_AVAILABLE
    if (state.sources, state.sinks) == (x, y):  # only possible when x = y = n
        halt = HaltReason.EXACT_TARGET_REACHED
    elif cfg.semantics is SamplingSemantics.PERMUTATION_ORDER:
        for idx in rng.permutation(len(state.pairs)).tolist():
            if state.addition_blocked(idx, x, y):
                continue
            state.add(idx)
            if state.sources == x and state.sinks == y:
                halt = HaltReason.EXACT_TARGET_REACHED
                break
    else:
        attempts = 0
        absent = list(range(len(state.pairs)))
        while True:
            if not any(not state.addition_blocked(i, x, y) for i in absent):
                break
            pos = int(rng.integers(0, len(absent)))
            idx = absent[pos]
            attempts += 1
            if state.addition_blocked(idx, x, y):
                continue
            absent[pos] = absent[-1]
            absent.pop()
            state.add(idx)
            if state.sources == x and state.sinks == y:
                halt = HaltReason.EXACT_TARGET_REACHED
                break
    return ProcessOutcome(
        graph=state.graph(),
        rounds=state.rounds,
        attempts=attempts,
        halt_reason=halt,
        is_target_xy=(state.sources, state.sinks) == (x, y),
    )


def combined_process(cfg: ProcessConfig, trace: TraceFn | None = None) -> ProcessOutcome:
    """Addition to termination, then random neutral additions or capped
    removals until exactly m edges remain.

    The adjustment phases keep the profile pinned at (x, y); if the addition
    phase misses the target (possible when x != y) the run stops there with
    is_target_xy False.
    """
    _check_kind(cfg, ProcessKind.COMBINED)
    cfg.validate()
    rng = _rng(cfg.seed)
    state = _State(cfg.n, complete=False, trace=trace)
    x, y, m = cfg.x, cfg.y, cfg.m
    rejection = cfg.semantics is SamplingSemantics.REJECTION_SAMPLING
    attempts = 0 if rejection else None

    # phase 1: the plain addition process
    if (state.sources, state.sinks) != (x, y):
        if not rejection:
            for idx in rng.permutation(len(state.pairs)).tolist():
                if state.addition_blocked(idx, x, y):
                    continue
                state.add(idx)
                if state.sources == x and state.sinks == y:
                    break
        else:
            absent = list(range(len(state.pairs)))
            while True:
                if not any(not state.addition_blocked(i, x, y) for i in absent):
                    break
                pos = int(rng.integers(0, len(absent)))
                idx = absent[pos]
                attempts += 1
                if state.addition_blocked(idx, x, y):
                    continue
                absent[pos] = absent[-1]
                absent.pop()
                state.add(idx)
                if state.sources == x and state.sinks == y:
                    break
    if (state.sources, state.sinks) != (x, y):
        return ProcessOutcome(
            graph=state.graph(),
            rounds=state.rounds,
            attempts=attempts,
            halt_reason=HaltReason.NO_MOVE_AVAILABLE,
            is_target_xy=False,
        )

    # phase 2: adjust the edge count to exactly m
    halt = HaltReason.EDGE_BUDGET_REACHED
    if state.edge_total < m:
        # neutral additions leave every vertex's source/sink status unchanged
        if not rejection:
            for idx in rng.permutation(len(state.pairs)).tolist():
                if state.edge_total == m:
                    break
                if state.present[idx] or not state.addition_neutral(idx):
                    continue
                state.add(idx)
            if state.edge_total != m:
                halt = HaltReason.NO_MOVE_AVAILABLE
        else:
            absent = [i for i in range(len(state.pairs)) if not state.present[i]]
            while state.edge_total < m:
                if not any(state.addition_neutral(i) for i in absent):
                    halt = HaltReason.NO_MOVE_AVAILABLE
                    break
                pos = int(rng.integers(0, len(absent)))
                idx = absent[pos]
                attempts += 1
                if not state.addition_neutral(idx):
                    continue
                absent[pos] = absent[-1]
                absent.pop()
                state.add(idx)
    elif state.edge_total > m:
        # capped removals from an exact (x, y) graph keep the profile exact,
        # and a minimal graph has at most 2n - x - y - 2 <= m edges, so the
        # sweep always reaches m
        if not rejection:
            for idx in rng.permutation(len(state.pairs)).tolist():
                if state.edge_total == m:
                    break
                if not state.present[idx] or state.removal_blocked(idx, x, y):
                    continue
                state.remove(idx)
        else:
            alive = [i for i in range(len(state.pairs)) if state.present[i]]
            while state.edge_total > m:
                if not any(not state.removal_blocked(i, x, y) for i in alive):
                    break
                pos = int(rng.integers(0, len(alive)))
                idx = alive[pos]
                attempts += 1
                if state.removal_blocked(idx, x, y):
                    continue
                alive[pos] = alive[-1]
                alive.pop()
                state.remove(idx)
        if state.edge_total != m:
            raise AssertionError("removal adjustment failed to reach the edge budget")
    return ProcessOutcome(
        graph=state.graph(),
        rounds=state.rounds,
        attempts=attempts,
        halt_reason=halt,
        is_target_xy=(state.sources, state.sinks) == (x, y),
    )


def random_directed_tree(n: int, seed: int) -> OrderedDag:
    """Attach vertex s+1 to a uniformly random earlier vertex, for s = 1..n-1.

    The result has exactly n - 1 edges, its underlying graph is a tree, and
    vertex 1 is the unique source.
    """
    if not isinstance(n, int) or n < 1:
        raise GraphError(f"vertex count must be a positive integer, got {n!r}")
    if not isinstance(seed, int) or not 0 <= seed <= MAX_SEED:
        raise ConfigError(f"seed must be an integer in [0, 2^64), got {seed!r}")
    g = OrderedDag(n)
    if n == 1:
        return g
    draws = _rng(seed).random(n - 1)
    for s in range(1, n):
        parent = int(draws[s - 1] * s) + 1  # uniform on 1..s
        g.add_edge(parent, s + 1)
    return g


def run_process(cfg: ProcessConfig, trace: TraceFn | None = None) -> ProcessOutcome:
    """Dispatch a configuration to the matching process."""
    if cfg.kind is ProcessKind.REMOVAL:
        return edge_removal_process(cfg, trace)
    if cfg.kind is ProcessKind.ADDITION:
        return edge_addition_process(cfg, trace)
    if cfg.kind is ProcessKind.COMBINED:
        return combined_process(cfg, trace)
    if cfg.kind is ProcessKind.RANDOM_TREE:
        cfg.validate()
        g = random_directed_tree(cfg.n, cfg.seed)
        return ProcessOutcome(
            graph=g,
            rounds=g.edge_count,
            attempts=None,
            halt_reason=HaltReason.NO_MOVE_AVAILABLE,
            is_target_xy=g.profile().matches(cfg.x, cfg.y),
        )
    raise ConfigError(f"unknown process kind {cfg.kind!r}")

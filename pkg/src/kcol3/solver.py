"""Exact k-colorability by complete backtracking search.

This is the ground-truth oracle for every equivalence test, so it is
deliberately independent of the SAT-route module. The search uses:

* most-constrained-vertex-first ordering (fewest remaining feasible
  colors, ties broken by lowest index);
* forward pruning of uncolored neighbors' color sets;
* a pair-propagation rule: two adjacent uncolored vertices sharing the
  same two-color domain must use both colors, so their common neighbors
  lose both (cascaded to a fixpoint after every assignment);
* symmetry breaking: the first colored vertex is fixed to color 0 and
  new colors are introduced in ascending order.

Deterministic: identical inputs yield identical outcomes, witnesses and
node counts.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass

from .errors import InvariantViolation, SolveTimeout
from .graphs import Coloring, Graph, is_proper_coloring

__all__ = ["SolveOutcome", "solve", "decide", "DEFAULT_BUDGET"]

DEFAULT_BUDGET = 10.0


@dataclass(frozen=True)
class SolveOutcome:
    status: str  # "colorable" | "uncolorable" | "timeout"
    witness: Coloring | None
    nodes: int
    wall_time: float


class _Timeout(Exception):
    pass


def solve(g: Graph, k: int, budget: float = DEFAULT_BUDGET) -> SolveOutcome:
    """Decide k-colorability of g within a wall-clock budget (seconds)."""
    if k < 1:
        raise ValueError(f"palette size must be positive, got {k}")
    start = time.perf_counter()
    n = g.n
    if n == 0:
        return SolveOutcome("colorable", Coloring(k, ()), 0, time.perf_counter() - start)
    if budget <= 0:
        return SolveOutcome("timeout", None, 0, 0.0)
    if sys.getrecursionlimit() < n + 200:
        sys.setrecursionlimit(n + 200)
    adj = g.adjacency()
    adj_sets = [set(row) for row in adj]
    common_cache: dict[tuple[int, int], tuple[int, ...]] = {}

    def common_neighbors(u: int, v: int) -> tuple[int, ...]:
        key = (u, v) if u < v else (v, u)
        hit = common_cache.get(key)
        if hit is None:
            hit = tuple(w for w in adj[u] if w in adj_sets[v])
            common_cache[key] = hit
        return hit

    full = (1 << k) - 1
    domains = [full] * n
    assignment = [-1] * n
    nodes = 0

    def propagate(start_vertex: int, bit: int, trail: list[tuple[int, int]]) -> bool:
        """Prune `bit` from start_vertex's uncolored neighbors, then chase
        the pair rule to a fixpoint. Records every removal on the trail;
        returns False on a wiped-out domain."""
        pairs = []  # vertices whose domain just shrank to two colors
        for w in adj[start_vertex]:
            if assignment[w] < 0 and domains[w] & bit:
                domains[w] &= ~bit
                trail.append((w, bit))
                if domains[w] == 0:
                    return False
                if domains[w].bit_count() == 2:
                    pairs.append(w)
        while pairs:
            v = pairs.pop()
            dom = domains[v]
            if assignment[v] >= 0 or dom.bit_count() != 2:
                continue
            for w in adj[v]:
                if assignment[w] < 0 and domains[w] == dom:
                    for u in common_neighbors(v, w):
                        if assignment[u] < 0 and domains[u] & dom:
                            removed = domains[u] & dom
                            domains[u] &= ~dom
                            trail.append((u, removed))
                            if domains[u] == 0:
                                return False
                            if domains[u].bit_count() == 2:
                                pairs.append(u)
        return True

    def search(colored: int, used: int) -> bool:
        nonlocal nodes
        if colored == n:
            return True
        best, best_count = -1, k + 1
        for v in range(n):
            if assignment[v] < 0:
                c = domains[v].bit_count()
                if c < best_count:
                    best, best_count = v, c
                    if c <= 1:
                        break
        candidates = domains[best] & ((1 << min(k, used + 1)) - 1)
        while candidates:
            bit = candidates & -candidates
            candidates ^= bit
            color = bit.bit_length() - 1
            nodes += 1
            if nodes % 256 == 0 and time.perf_counter() - start > budget:
                raise _Timeout
            assignment[best] = color
            trail: list[tuple[int, int]] = []
            if propagate(best, bit, trail) and search(colored + 1, max(used, color + 1)):
                return True
            for w, removed in trail:
                domains[w] |= removed
            assignment[best] = -1
        return False

    try:
        found = search(0, 0)
    except _Timeout:
        return SolveOutcome("timeout", None, nodes, time.perf_counter() - start)
    elapsed = time.perf_counter() - start
    if not found:
        return SolveOutcome("uncolorable", None, nodes, elapsed)
    witness = Coloring(k, tuple(assignment))
    if not is_proper_coloring(g, witness):
        raise InvariantViolation("search produced an improper witness")
    return SolveOutcome("colorable", witness, nodes, elapsed)


def decide(g: Graph, k: int, budget: float = DEFAULT_BUDGET) -> bool:
    """Boolean convenience wrapper; a timeout raises SolveTimeout instead
    of being coerced to either answer."""
    outcome = solve(g, k, budget)
    if outcome.status == "timeout":
        raise SolveTimeout(f"no decision for (n={g.n}, k={k}) within {budget}s")
    return outcome.status == "colorable"

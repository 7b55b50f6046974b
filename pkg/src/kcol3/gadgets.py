"""Color-copying gadget builders and their exhaustive semantics oracle.

The base gadget joins two input vertices x, y and an output vertex z
through two fresh internal vertices a (touching x) and b (touching y):
edges x-a, y-b, a-b, a-z, b-z. In any proper 3-coloring, if x and y share
a color then z is forced to that same color; every other boundary
coloring extends. The chained gadget propagates the same constraint
across k inputs by composing base gadgets left to right.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import ConstructionError, ExtensionError
from .graphs import Graph

__all__ = [
    "GraphBuilder",
    "GadgetInstance",
    "GadgetSemantics",
    "attach_base_gadget",
    "attach_chain_gadget",
    "semantics_by_brute_force",
    "extend_coloring",
]


class GraphBuilder:
    """Mutable graph under construction; single-writer."""

    def __init__(self, n: int = 0):
        self.n = n
        self.edges: set[tuple[int, int]] = set()

    @classmethod
    def from_graph(cls, g: Graph) -> "GraphBuilder":
        b = cls(g.n)
        b.edges.update(g.edges)
        return b

    def add_vertex(self) -> int:
        v = self.n
        self.n += 1
        return v

    def add_edge(self, u: int, v: int) -> tuple[int, int]:
        if u == v:
            raise ValueError(f"self-loop at {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"edge ({u},{v}) out of range")
        edge = (u, v) if u < v else (v, u)
        self.edges.add(edge)
        return edge

    def to_graph(self) -> Graph:
        return Graph(self.n, tuple(self.edges))


@dataclass(frozen=True)
class GadgetInstance:
    """Record of one attached gadget: boundary, fresh internals, new edges."""

    boundary: tuple[int, ...]  # inputs x_1..x_k, then output z
    internal_start: int
    internal_len: int
    added_edges: tuple[tuple[int, int], ...]

    @property
    def internal(self) -> range:
        return range(self.internal_start, self.internal_start + self.internal_len)

    @property
    def arity(self) -> int:
        return len(self.boundary) - 1


@dataclass(frozen=True)
class GadgetSemantics:
    """Exhaustive table: boundary coloring -> does a proper extension exist."""

    arity: int
    table: dict[tuple[int, ...], bool]


def _check_boundary(builder: GraphBuilder, vertices: list[int]):
    for v in vertices:
        if not (0 <= v < builder.n):
            raise ConstructionError(f"boundary vertex {v} does not exist")
    if len(set(vertices)) != len(vertices):
        raise ConstructionError(f"boundary vertices must be distinct, got {vertices}")


def attach_base_gadget(builder: GraphBuilder, x: int, y: int, z: int) -> GadgetInstance:
    """Attach the two-input gadget; always +2 vertices, +5 edges."""
    _check_boundary(builder, [x, y, z])
    a = builder.add_vertex()
    b = builder.add_vertex()
    added = tuple(builder.add_edge(*e) for e in ((x, a), (y, b), (a, b), (a, z), (b, z)))
    return GadgetInstance((x, y, z), a, 2, added)


def attach_chain_gadget(builder: GraphBuilder, inputs: list[int], z: int) -> GadgetInstance:
    """Attach the k-input chain; +3k-4 vertices, +5(k-1) edges.

    For k = 2 this is exactly the base gadget. For k > 2 the chain runs
    left to right through intermediates y_1..y_{k-2}, each intermediate
    allocated just before the sub-gadget that outputs it.
    """
    k = len(inputs)
    if k < 2:
        raise ConstructionError(f"chain gadget needs at least 2 inputs, got {k}")
    _check_boundary(builder, list(inputs) + [z])
    internal_start = builder.n
    added: list[tuple[int, int]] = []
    prev = inputs[0]
    for i in range(1, k):
        out = z if i == k - 1 else builder.add_vertex()
        sub = attach_base_gadget(builder, prev, inputs[i], out)
        added.extend(sub.added_edges)
        prev = out
    return GadgetInstance(tuple(inputs) + (z,), internal_start, builder.n - internal_start, tuple(added))


def _extension_search(instance: GadgetInstance, boundary_colors: tuple[int, ...]):
    """Deterministic backtracking over internal vertices in allocation
    order, lowest color first. Returns {vertex: color} or None."""
    if len(boundary_colors) != len(instance.boundary):
        raise ValueError("boundary coloring arity mismatch")
    if any(c not in (0, 1, 2) for c in boundary_colors):
        raise ValueError("boundary colors must be in 0..2")
    colors = dict(zip(instance.boundary, boundary_colors))
    order = list(instance.internal)
    neighbors: dict[int, list[int]] = {v: [] for v in order}
    for u, v in instance.added_edges:
        if u in neighbors:
            neighbors[u].append(v)
        if v in neighbors:
            neighbors[v].append(u)

    def bt(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for c in (0, 1, 2):
            if any(colors.get(w) == c for w in neighbors[v]):
                continue
            colors[v] = c
            if bt(i + 1):
                return True
            del colors[v]
        return False

    if not bt(0):
        return None
    return {v: colors[v] for v in order}


def extend_coloring(instance: GadgetInstance, boundary_colors: tuple[int, ...]) -> dict[int, int]:
    """Proper 3-coloring of the gadget internals for an extendable boundary."""
    ext = _extension_search(instance, boundary_colors)
    if ext is None:
        raise ExtensionError(
            f"boundary coloring {boundary_colors} of gadget at {instance.boundary} is not extendable"
        )
    return ext


def semantics_by_brute_force(k: int) -> GadgetSemantics:
    """Exhaustively decide extendability of every boundary coloring of the
    k-input chain gadget. Supported for 2 <= k <= 6."""
    if not (2 <= k <= 6):
        raise ValueError(f"arity {k} outside supported range 2..6")
    builder = GraphBuilder(k + 1)
    instance = attach_chain_gadget(builder, list(range(k)), k)
    table = {
        boundary: _extension_search(instance, boundary) is not None
        for boundary in product((0, 1, 2), repeat=k + 1)
    }
    return GadgetSemantics(k, table)

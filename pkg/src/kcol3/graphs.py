"""Core graph and coloring types, DIMACS .col I/O, seeded random graphs.

Vertices are dense indices 0..n-1 internally; DIMACS 1-indexing is confined
to the parse/emit boundary. Graphs are simple and undirected: edges are
canonical pairs (u, v) with u < v, deduplicated, no self-loops.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParseError

__all__ = [
    "Graph",
    "Coloring",
    "is_proper_coloring",
    "parse_dimacs_col",
    "emit_dimacs_col",
    "gen_gnp",
    "complete_graph",
    "cycle_graph",
]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"negative vertex count {self.n}")
        canon = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            canon.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must cover every vertex")

    @property
    def e(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        """Sorted neighbor lists, one per vertex."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for row in adj:
            row.sort()
        return adj


@dataclass(frozen=True)
class Coloring:
    """Total assignment of colors 0..palette_size-1 to vertices 0..len-1."""

    palette_size: int
    assignment: tuple[int, ...]

    def __post_init__(self):
        if self.palette_size < 1:
            raise ValueError(f"palette size must be positive, got {self.palette_size}")
        object.__setattr__(self, "assignment", tuple(self.assignment))
        for v, c in enumerate(self.assignment):
            if not (0 <= c < self.palette_size):
                raise ValueError(f"vertex {v} has color {c} outside palette 0..{self.palette_size - 1}")

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def __len__(self) -> int:
        return len(self.assignment)


def is_proper_coloring(g: Graph, c: Coloring) -> bool:
    """True iff no edge of g is monochromatic under c."""
    if len(c.assignment) != g.n:
        raise ValueError(f"coloring covers {len(c.assignment)} vertices, graph has {g.n}")
    a = c.assignment
    return all(a[u] != a[v] for u, v in g.edges)


def parse_dimacs_col(text: str | bytes) -> Graph:
    """Parse DIMACS .col text into a canonical Graph.

    Accepts `c` comment lines, exactly one `p edge <n> <e>` line, and
    `e <u> <v>` lines with 1-indexed endpoints. Duplicate edges are
    collapsed; self-loops are rejected.
    """
    if isinstance(text, bytes):
        text = text.decode("ascii")
    n = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate p line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"malformed problem line {line!r}", lineno)
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise ParseError(f"non-integer counts in {line!r}", lineno) from None
            if n < 0:
                raise ParseError(f"negative vertex count {n}", lineno)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge line before p line", lineno)
            if len(parts) != 3:
                raise ParseError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"non-integer endpoint in {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"endpoint out of range 1..{n} in {line!r}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            u, v = u - 1, v - 1
            edges.add((u, v) if u < v else (v, u))
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno)
    if n is None:
        raise ParseError("missing p line", 1)
    return Graph(n, tuple(edges))


def emit_dimacs_col(g: Graph) -> str:
    """Canonical DIMACS .col text: header, then sorted 1-indexed edge lines."""
    lines = [f"p edge {g.n} {g.e}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


_MASK64 = (1 << 64) - 1


def _splitmix64(state: int):
    """One step of the splitmix64 generator (Steele, Lea & Flood constants)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    z ^= z >> 31
    return state, z


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), bit-for-bit reproducible from the seed.

    Uses splitmix64 seeded with `seed`; one draw per candidate edge in
    lexicographic (u, v) order, edge included iff draw/2^53 < p.
    """
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"probability out of range: {p}")
    state = seed & _MASK64
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            state, z = _splitmix64(state)
            if (z >> 11) * 2.0 ** -53 < p:
                edges.append((u, v))
    return Graph(n, tuple(edges))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("need at least one vertex")
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))

"""Baseline detour route: k-coloring -> CNF -> 3-coloring.

Measured for size comparison against the direct graph-to-graph reduction.
The coloring-to-CNF step is the standard direct encoding (at-least-one,
pairwise at-most-one, per-edge conflict clauses) rather than a literal
Cook-Levin machine tableau; the CNF-to-3-coloring step reuses the chain
gadget in its disjunction role: literal vertices are forced to the T or F
color by a base-vertex triangle, and each clause's chain output is pinned
to T, which is achievable exactly when some literal is T.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product

from .errors import ParseError
from .gadgets import GraphBuilder, attach_chain_gadget
from .graphs import Graph
from .reduction import reduce_to_3col
from .solver import DEFAULT_BUDGET, solve

__all__ = [
    "CnfFormula",
    "CnfGraphMap",
    "encode_col_as_cnf",
    "encode_cnf_as_3col",
    "emit_dimacs_cnf",
    "parse_dimacs_cnf",
    "cnf_satisfiable_brute_force",
    "compare_routes",
]


@dataclass(frozen=True)
class CnfFormula:
    """CNF over variables 1..var_count; literals are signed indices."""

    var_count: int
    clauses: tuple[tuple[int, ...], ...]
    # variable -> (source vertex, color); bookkeeping only, excluded from equality
    annotation: tuple[tuple[int, tuple[int, int]], ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(cl) for cl in self.clauses))
        for cl in self.clauses:
            if not cl:
                raise ValueError("empty clause")
            for lit in cl:
                if lit == 0 or abs(lit) > self.var_count:
                    raise ValueError(f"literal {lit} outside variables 1..{self.var_count}")


def encode_col_as_cnf(g: Graph, k: int) -> CnfFormula:
    """Direct encoding: variable x_{i,j} means 'vertex i has color j'.

    kn variables; n at-least-one clauses, n*C(k,2) at-most-one clauses,
    ke conflict clauses.
    """
    if k < 2:
        raise ValueError(f"palette size must be at least 2, got {k}")

    def var(i: int, j: int) -> int:
        return i * k + j + 1

    clauses: list[tuple[int, ...]] = []
    for i in range(g.n):
        clauses.append(tuple(var(i, j) for j in range(k)))
    for i in range(g.n):
        for j1 in range(k):
            for j2 in range(j1 + 1, k):
                clauses.append((-var(i, j1), -var(i, j2)))
    for u, v in g.edges:
        for c in range(k):
            clauses.append((-var(u, c), -var(v, c)))
    annotation = tuple((var(i, j), (i, j)) for i in range(g.n) for j in range(k))
    return CnfFormula(g.n * k, tuple(clauses), annotation)


@dataclass(frozen=True)
class CnfGraphMap:
    """Locates the base triangle and literal vertices in the encoded graph."""

    t_vertex: int
    f_vertex: int
    b_vertex: int
    pos_literal: tuple[int, ...]  # [v-1] -> vertex for literal  v
    neg_literal: tuple[int, ...]  # [v-1] -> vertex for literal -v


def encode_cnf_as_3col(f: CnfFormula) -> tuple[Graph, CnfGraphMap]:
    """Standard satisfiability-to-3-coloring construction.

    Base triangle (T, F, B); per variable a complementary literal pair in
    a triangle with B; per clause a chain over its literal vertices whose
    output is joined to F and B (forcing it to take T's color).
    """
    b = GraphBuilder()
    t, fv, bv = b.add_vertex(), b.add_vertex(), b.add_vertex()
    b.add_edge(t, fv)
    b.add_edge(t, bv)
    b.add_edge(fv, bv)
    pos, neg = [], []
    for _ in range(f.var_count):
        p, q = b.add_vertex(), b.add_vertex()
        b.add_edge(p, q)
        b.add_edge(p, bv)
        b.add_edge(q, bv)
        pos.append(p)
        neg.append(q)
    for clause in f.clauses:
        lits = []
        for lit in clause:
            v = pos[lit - 1] if lit > 0 else neg[-lit - 1]
            if v not in lits:  # (x or x) collapses to (x)
                lits.append(v)
        if len(lits) == 1:
            b.add_edge(lits[0], fv)
            b.add_edge(lits[0], bv)
        else:
            out = b.add_vertex()
            attach_chain_gadget(b, lits, out)
            b.add_edge(out, fv)
            b.add_edge(out, bv)
    return b.to_graph(), CnfGraphMap(t, fv, bv, tuple(pos), tuple(neg))


def emit_dimacs_cnf(f: CnfFormula) -> str:
    lines = [f"p cnf {f.var_count} {len(f.clauses)}"]
    lines.extend(" ".join(str(lit) for lit in cl) + " 0" for cl in f.clauses)
    return "\n".join(lines) + "\n"


def parse_dimacs_cnf(text: str | bytes) -> CnfFormula:
    """Parse DIMACS CNF; clauses are 0-terminated integer runs and may
    span lines."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    var_count = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if var_count is not None:
                raise ParseError("duplicate p line", lineno)
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"malformed problem line {line!r}", lineno)
            try:
                var_count = int(parts[2])
                int(parts[3])
            except ValueError:
                raise ParseError(f"non-integer counts in {line!r}", lineno) from None
            continue
        if var_count is None:
            raise ParseError("clause before p line", lineno)
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise ParseError(f"bad literal {token!r}", lineno) from None
            if lit == 0:
                if not current:
                    raise ParseError("empty clause", lineno)
                clauses.append(tuple(current))
                current = []
            elif abs(lit) > var_count:
                raise ParseError(f"literal {lit} exceeds declared {var_count} variables", lineno)
            else:
                current.append(lit)
    if var_count is None:
        raise ParseError("missing p line", 1)
    if current:
        raise ParseError("unterminated clause at end of input", lineno)
    return CnfFormula(var_count, tuple(clauses))


def cnf_satisfiable_brute_force(f: CnfFormula, max_vars: int = 20) -> bool:
    """Exhaustive assignment enumeration; independent of any graph route."""
    if f.var_count > max_vars:
        raise ValueError(f"{f.var_count} variables exceeds brute-force limit {max_vars}")
    for values in product((False, True), repeat=f.var_count):
        if all(any(values[abs(l) - 1] == (l > 0) for l in cl) for cl in f.clauses):
            return True
    return False


def compare_routes(g: Graph, k: int, budget: float = DEFAULT_BUDGET, with_decisions: bool = True) -> dict:
    """Size (and optionally decision) comparison of the two routes.

    Returns a JSON-ready record; decisions are None when the solver
    budget runs out on that side.
    """
    gprime, _ = reduce_to_3col(g, k)
    cnf = encode_col_as_cnf(g, k)
    gsat, _ = encode_cnf_as_3col(cnf)
    record = {
        "sane": {"vertices": gprime.n, "edges": gprime.e},
        "sat_route": {
            "vars": cnf.var_count,
            "clauses": len(cnf.clauses),
            "vertices": gsat.n,
            "edges": gsat.e,
        },
        "ratios": {
            "vertices": gsat.n / gprime.n,
            "edges": gsat.e / gprime.e,
        },
        "decisions": {"sane": None, "sat_route": None},
    }
    if with_decisions:
        for name, graph in (("sane", gprime), ("sat_route", gsat)):
            outcome = solve(graph, 3, budget)
            if outcome.status != "timeout":
                record["decisions"][name] = outcome.status == "colorable"
    return record


def comparison_to_json(record: dict) -> str:
    return json.dumps(record, indent=2) + "\n"

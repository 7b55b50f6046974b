from itertools import combinations, product

import pytest

from kcol3 import (
    CnfFormula,
    Graph,
    ParseError,
    cnf_satisfiable_brute_force,
    compare_routes,
    complete_graph,
    decide,
    emit_dimacs_cnf,
    encode_cnf_as_3col,
    encode_col_as_cnf,
    gen_gnp,
    parse_dimacs_cnf,
    solve,
)


def all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))


def test_cnf_rejects_empty_clause():
    with pytest.raises(ValueError):
        CnfFormula(1, ((),))


def test_cnf_rejects_out_of_range_literal():
    with pytest.raises(ValueError):
        CnfFormula(1, ((2,),))


def test_encode_k2_counts():
    cnf = encode_col_as_cnf(complete_graph(2), 2)
    assert cnf.var_count == 4
    assert len(cnf.clauses) == 6


def test_encode_k3_counts():
    cnf = encode_col_as_cnf(complete_graph(3), 3)
    assert cnf.var_count == 9
    assert len(cnf.clauses) == 21


def test_encode_count_formula():
    for seed in range(8):
        g = gen_gnp(4, 0.5, seed)
        for k in (2, 3):
            cnf = encode_col_as_cnf(g, k)
            assert cnf.var_count == k * g.n
            assert len(cnf.clauses) == g.n + g.n * k * (k - 1) // 2 + k * g.e


def test_encode_rejects_small_k():
    with pytest.raises(ValueError):
        encode_col_as_cnf(complete_graph(2), 1)


def test_encode_annotation_is_total_and_injective():
    g = complete_graph(3)
    cnf = encode_col_as_cnf(g, 3)
    annotation = dict(cnf.annotation)
    assert sorted(annotation) == list(range(1, 10))
    assert len(set(annotation.values())) == 9


def test_cnf_satisfiability_matches_colorability():
    for n in range(1, 5):
        for g in all_graphs(n):
            for k in (2, 3):
                if k * n > 12:
                    continue
                cnf = encode_col_as_cnf(g, k)
                assert cnf_satisfiable_brute_force(cnf) == decide(g, k)


def test_unit_clause_graph_colorable():
    g, _ = encode_cnf_as_3col(CnfFormula(1, ((1,),)))
    assert solve(g, 3).status == "colorable"


def test_contradiction_graph_uncolorable():
    g, _ = encode_cnf_as_3col(CnfFormula(1, ((1,), (-1,))))
    assert solve(g, 3).status == "uncolorable"


def test_repeated_literal_clause():
    g, _ = encode_cnf_as_3col(CnfFormula(1, ((1, 1),)))
    assert solve(g, 3).status == "colorable"


def test_tautology_clause():
    g, _ = encode_cnf_as_3col(CnfFormula(1, ((1, -1),)))
    assert solve(g, 3).status == "colorable"


def test_micro_scale_soundness():
    """CNF satisfiability by assignment enumeration matches 3-colorability
    of the encoded graph, for every CNF produced from tiny instances."""
    for n in range(1, 4):
        for g in all_graphs(n):
            for k in (2, 3):
                if k * n > 12:
                    continue
                cnf = encode_col_as_cnf(g, k)
                encoded, _ = encode_cnf_as_3col(cnf)
                assert cnf_satisfiable_brute_force(cnf) == (solve(encoded, 3).status == "colorable")


def test_end_to_end_route_equivalence():
    cases = [(complete_graph(4), 3, False), (complete_graph(4), 4, True), (complete_graph(3), 3, True)]
    for g, k, expected in cases:
        encoded, _ = encode_cnf_as_3col(encode_col_as_cnf(g, k))
        assert (solve(encoded, 3).status == "colorable") == expected == decide(g, k)


def test_emit_dimacs_cnf():
    assert emit_dimacs_cnf(CnfFormula(1, ((1,),))) == "p cnf 1 1\n1 0\n"
    assert emit_dimacs_cnf(CnfFormula(2, ((-1, 2),))) == "p cnf 2 1\n-1 2 0\n"


def test_cnf_round_trip():
    for seed in range(6):
        g = gen_gnp(4, 0.5, seed)
        cnf = encode_col_as_cnf(g, 3)
        assert parse_dimacs_cnf(emit_dimacs_cnf(cnf)) == cnf


@pytest.mark.parametrize(
    "text",
    [
        "1 0\n",  # clause before header
        "p cnf 1 1\n2 0\n",  # literal out of range
        "p cnf 1 1\nx 0\n",  # bad token
        "p cnf 1 1\n1\n",  # unterminated clause
        "p cnf 1 1\np cnf 1 1\n1 0\n",  # duplicate header
        "p dnf 1 1\n1 0\n",  # wrong format word
    ],
)
def test_cnf_parse_errors(text):
    with pytest.raises(ParseError):
        parse_dimacs_cnf(text)


def test_brute_force_guardrail():
    with pytest.raises(ValueError):
        cnf_satisfiable_brute_force(CnfFormula(30, ((1,),)))


def test_compare_routes_record():
    record = compare_routes(complete_graph(3), 3)
    assert record["sane"] == {"vertices": 63, "edges": 132}
    assert record["sat_route"]["vars"] == 9
    assert record["sat_route"]["clauses"] == 21
    assert record["ratios"]["vertices"] > 1
    assert record["decisions"] == {"sane": True, "sat_route": True}


def test_compare_routes_decisions_agree():
    for g, k in [(complete_graph(3), 3), (complete_graph(4), 3)]:
        record = compare_routes(g, k)
        assert record["decisions"]["sane"] == record["decisions"]["sat_route"] == decide(g, k)


def test_sane_route_strictly_smaller():
    for seed in range(10):
        g = gen_gnp(3 + seed % 4, 0.6, seed)
        if g.e == 0:
            continue
        for k in (2, 3, 4):
            record = compare_routes(g, k, with_decisions=False)
            assert record["sane"]["vertices"] < record["sat_route"]["vertices"]

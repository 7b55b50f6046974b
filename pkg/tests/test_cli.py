import json

import pytest

from kcol3 import complete_graph, cycle_graph, emit_dimacs_col
from kcol3.cli import main


@pytest.fixture
def k3_file(tmp_path):
    path = tmp_path / "k3.col"
    path.write_text(emit_dimacs_col(complete_graph(3)))
    return path


@pytest.fixture
def k4_file(tmp_path):
    path = tmp_path / "k4.col"
    path.write_text(emit_dimacs_col(complete_graph(4)))
    return path


def test_reduce_writes_expected_header(tmp_path, k3_file):
    out = tmp_path / "out.col"
    rc = main(["reduce", "--k", "3", "--input", str(k3_file), "--output", str(out)])
    assert rc == 0
    assert out.read_text().splitlines()[0] == "p edge 63 132"


def test_reduce_writes_map_sidecar(tmp_path, k3_file):
    out, sidecar = tmp_path / "out.col", tmp_path / "map.json"
    rc = main(["reduce", "--k", "3", "--input", str(k3_file), "--output", str(out), "--map", str(sidecar)])
    assert rc == 0
    doc = json.loads(sidecar.read_text())
    assert (doc["k"], doc["n"], doc["e"]) == (3, 3, 3)
    assert (doc["t"], doc["f"], doc["r"]) == (0, 1, 2)
    assert len(doc["indicator"]) == 3 and all(len(row) == 3 for row in doc["indicator"])
    assert {g["tag"].split(":")[0] for g in doc["gadgets"]} == {"at-least-one", "at-most-one", "edge-conflict"}


def test_reduce_rejects_k1(tmp_path, k3_file):
    rc = main(["reduce", "--k", "1", "--input", str(k3_file), "--output", str(tmp_path / "o.col")])
    assert rc == 2


def test_reduce_deterministic(tmp_path, k3_file):
    a, b = tmp_path / "a.col", tmp_path / "b.col"
    main(["reduce", "--k", "3", "--input", str(k3_file), "--output", str(a)])
    main(["reduce", "--k", "3", "--input", str(k3_file), "--output", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_reduce_malformed_input(tmp_path):
    bad = tmp_path / "bad.col"
    bad.write_text("p edge 2 1\ne 1 1\n")
    rc = main(["reduce", "--k", "3", "--input", str(bad), "--output", str(tmp_path / "o.col")])
    assert rc == 2


def test_solve_exit_codes(tmp_path, k4_file):
    assert main(["solve", "--k", "3", "--input", str(k4_file)]) == 1
    assert main(["solve", "--k", "4", "--input", str(k4_file)]) == 0


def test_solve_witness_then_verify(tmp_path, k4_file):
    witness = tmp_path / "w.txt"
    assert main(["solve", "--k", "4", "--input", str(k4_file), "--witness", str(witness)]) == 0
    assert main(["verify", "--k", "4", "--input", str(k4_file), "--witness", str(witness)]) == 0


def test_verify_rejects_monochromatic_edge(tmp_path, k3_file):
    witness = tmp_path / "w.txt"
    witness.write_text("v 1 0\nv 2 0\nv 3 1\n")
    assert main(["verify", "--k", "3", "--input", str(k3_file), "--witness", str(witness)]) == 1


def test_verify_missing_vertex_is_usage_error(tmp_path, k3_file):
    witness = tmp_path / "w.txt"
    witness.write_text("v 1 0\nv 2 1\n")
    assert main(["verify", "--k", "3", "--input", str(k3_file), "--witness", str(witness)]) == 2


def test_solve_on_reduced_instance(tmp_path, k3_file):
    out = tmp_path / "out.col"
    main(["reduce", "--k", "3", "--input", str(k3_file), "--output", str(out)])
    assert main(["solve", "--k", "3", "--input", str(out)]) == 0


def test_roundtrip_colorable(k3_file):
    assert main(["roundtrip", "--k", "3", "--input", str(k3_file)]) == 0


def test_roundtrip_uncolorable(k4_file):
    assert main(["roundtrip", "--k", "3", "--input", str(k4_file)]) == 0


def test_roundtrip_timeout(tmp_path):
    big = tmp_path / "big.col"
    big.write_text(emit_dimacs_col(complete_graph(9)))
    assert main(["roundtrip", "--k", "5", "--input", str(big), "--timeout", "0"]) == 3


def test_compare_record(tmp_path, k3_file):
    out = tmp_path / "cmp.json"
    assert main(["compare", "--k", "3", "--input", str(k3_file), "--output", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["sane"]["vertices"] == 63
    assert set(doc) == {"sane", "sat_route", "ratios", "decisions"}


def test_compare_edgeless_single_vertex(tmp_path):
    src = tmp_path / "one.col"
    src.write_text("p edge 1 0\n")
    out = tmp_path / "cmp.json"
    assert main(["compare", "--k", "2", "--input", str(src), "--output", str(out)]) == 0
    assert json.loads(out.read_text())["sane"]["vertices"] == 9


def test_compare_malformed_input(tmp_path):
    bad = tmp_path / "bad.col"
    bad.write_text("hello\n")
    assert main(["compare", "--k", "3", "--input", str(bad), "--output", str(tmp_path / "o.json")]) == 2


def test_gen_extremes(tmp_path):
    empty, full = tmp_path / "e.col", tmp_path / "f.col"
    assert main(["gen", "--model", "gnp", "--n", "5", "--p", "0", "--seed", "1", "--output", str(empty)]) == 0
    assert empty.read_text() == "p edge 5 0\n"
    assert main(["gen", "--model", "gnp", "--n", "4", "--p", "1", "--seed", "1", "--output", str(full)]) == 0
    assert full.read_text() == emit_dimacs_col(complete_graph(4))


def test_gen_deterministic(tmp_path):
    a, b = tmp_path / "a.col", tmp_path / "b.col"
    for path in (a, b):
        main(["gen", "--model", "gnp", "--n", "8", "--p", "0.5", "--seed", "42", "--output", str(path)])
    assert a.read_bytes() == b.read_bytes()


def test_missing_input_file(tmp_path):
    assert main(["solve", "--k", "3", "--input", str(tmp_path / "nope.col")]) == 2


def test_solve_odd_cycle(tmp_path):
    path = tmp_path / "c5.col"
    path.write_text(emit_dimacs_col(cycle_graph(5)))
    assert main(["solve", "--k", "2", "--input", str(path)]) == 1
    assert main(["solve", "--k", "3", "--input", str(path)]) == 0

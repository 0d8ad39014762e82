import numpy as np
import pytest

from pathcompose import bench
from pathcompose.bench import (
    BenchRecord,
    bench_inputs,
    glue_first,
    query_pairs,
    read_csv,
    records_to_csv,
    run_bench,
)
from pathcompose.cli import _int_list


def test_inputs_are_seeded():
    m1, n1 = bench_inputs(8, 3)
    m2, n2 = bench_inputs(8, 3)
    assert m1 == m2 and n1 == n2
    assert m1 != bench_inputs(8, 4)[0]
    assert np.all(np.isinf(np.diag(m1.entries)))
    off = m1.entries[~np.eye(8, dtype=bool)]
    assert np.all((off >= 0) & (off <= 1))


def test_glue_first_identifies_leading_vertices():
    m, n = bench_inputs(5, 0)
    d = glue_first(m, n, 2)
    assert d.into_m.as_dict() == {"x0": "a0", "x1": "a1"}
    assert d.into_n.as_dict() == {"x0": "b0", "x1": "b1"}


def test_query_pairs_deterministic_per_k():
    labels = [f"v{i}" for i in range(30)]
    assert query_pairs(labels, 10, 1, 3) == query_pairs(labels, 10, 1, 3)
    assert query_pairs(labels, 10, 1, 3) != query_pairs(labels, 10, 1, 4)


def test_small_run_shape_and_csv_round_trip():
    recs = run_bench(15, [1, 2, 3], 4, seed=2)
    assert [(r.boundary_size, r.algorithm) for r in recs] == [
        (k, alg) for k in (1, 2, 3) for alg in ("compositional", "dijkstra")
    ]
    for r in recs:
        assert r.samples == 4 and r.graph_size == 15
        assert (r.precompile_seconds is None) == (r.algorithm == "dijkstra")
    text = records_to_csv(recs)
    assert text.splitlines()[0] == ",".join(bench.CSV_HEADER)
    back = read_csv(text)
    assert [(r.boundary_size, r.algorithm, r.samples) for r in back] == [
        (r.boundary_size, r.algorithm, r.samples) for r in recs
    ]
    assert all(abs(a.mean_seconds - b.mean_seconds) < 1e-12 for a, b in zip(back, recs))


def test_no_baseline():
    recs = run_bench(6, [1], 2, baseline=False)
    assert [r.algorithm for r in recs] == ["compositional"]


@pytest.mark.parametrize(
    "args",
    [(0, [1], 3), (5, [1], 0), (5, [5], 3), (5, [-1], 3)],
)
def test_run_bench_rejects_bad_parameters(args):
    with pytest.raises(ValueError):
        run_bench(*args)


def test_record_validation():
    with pytest.raises(ValueError):
        BenchRecord(1, 1, "dijkstra", 0.1, 0.0, 0)
    with pytest.raises(ValueError):
        BenchRecord(1, 1, "dijkstra", -0.1, 0.0, 1)


def test_boundary_list_syntax():
    assert _int_list("1-4") == [1, 2, 3, 4]
    assert _int_list("1,2,5") == [1, 2, 5]
    assert _int_list("3") == [3]

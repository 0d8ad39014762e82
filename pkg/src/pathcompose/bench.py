"""Timing harness: compositional queries against Dijkstra on the glued graph.

Two seeded complete directed graphs with uniform ``[0, 1]`` weights are
glued along their first ``k`` vertices for each requested ``k``. For every
``k`` the components are precompiled once; then the same random
source/target pairs are timed with ``query`` and with ``dijkstra``.
"""

from __future__ import annotations

import csv
import io
import statistics
import time
from dataclasses import astuple, dataclass, fields
from typing import Sequence

import numpy as np

from .compose import precompile, query
from .graphs import GluingDiagram, build_glued_space, pushout
from .oracle import dijkstra
from .semiring import INF, SquareMatrix

CSV_HEADER = (
    "graph_size",
    "boundary_size",
    "algorithm",
    "mean_seconds",
    "std_seconds",
    "samples",
    "precompile_seconds",
)


@dataclass(frozen=True)
class BenchRecord:
    graph_size: int
    boundary_size: int
    algorithm: str
    mean_seconds: float
    std_seconds: float
    samples: int
    precompile_seconds: float | None = None

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.mean_seconds < 0 or self.std_seconds < 0:
            raise ValueError("timings must be non-negative")


assert tuple(f.name for f in fields(BenchRecord)) == CSV_HEADER


def random_dense_graph(n: int, rng: np.random.Generator, prefix: str) -> SquareMatrix:
    """Complete directed graph without self-loops, weights uniform on ``[0, 1]``."""
    w = rng.uniform(0.0, 1.0, size=(n, n))
    np.fill_diagonal(w, INF)
    return SquareMatrix([f"{prefix}{i}" for i in range(n)], w)


def glue_first(m: SquareMatrix, n: SquareMatrix, k: int) -> GluingDiagram:
    """Identify the first ``k`` vertices of ``m`` with the first ``k`` of ``n``."""
    boundary = [f"x{i}" for i in range(k)]
    return GluingDiagram.from_dicts(
        m,
        n,
        boundary,
        {x: m.labels[i] for i, x in enumerate(boundary)},
        {x: n.labels[i] for i, x in enumerate(boundary)},
    )


def bench_inputs(nodes: int, seed: int):
    rng = np.random.default_rng(seed)
    m = random_dense_graph(nodes, rng, "a")
    n = random_dense_graph(nodes, rng, "b")
    return m, n


def query_pairs(labels: Sequence, samples: int, seed: int, k: int) -> list:
    rng = np.random.default_rng([seed, k])
    idx = rng.integers(0, len(labels), size=(samples, 2))
    return [(labels[i], labels[j]) for i, j in idx.tolist()]


def _stats(times: list) -> tuple[float, float]:
    mean = statistics.fmean(times)
    std = statistics.stdev(times) if len(times) > 1 else 0.0
    return mean, std


def run_bench(
    nodes: int,
    boundaries: Sequence[int],
    samples: int,
    seed: int = 0,
    baseline: bool = True,
) -> list[BenchRecord]:
    if nodes < 1 or samples < 1:
        raise ValueError("nodes and samples must be positive")
    for k in boundaries:
        if not 0 <= k < nodes:
            raise ValueError(f"boundary size {k} must lie in [0, {nodes})")
    m, n = bench_inputs(nodes, seed)
    clock = time.perf_counter
    records = []
    for k in boundaries:
        d = glue_first(m, n, k)
        t0 = clock()
        space = build_glued_space(d)
        pm, pn = precompile(d, space)
        precompile_seconds = clock() - t0
        pairs = query_pairs(space.labels, samples, seed, k)

        times = []
        for s, t in pairs:
            t0 = clock()
            query(pm, pn, s, t)
            times.append(clock() - t0)
        mean, std = _stats(times)
        records.append(
            BenchRecord(nodes, k, "compositional", mean, std, samples, precompile_seconds)
        )

        if baseline:
            glued = pushout(d, space)
            times = []
            for s, t in pairs:
                t0 = clock()
                dijkstra(glued, s, t)
                times.append(clock() - t0)
            mean, std = _stats(times)
            records.append(BenchRecord(nodes, k, "dijkstra", mean, std, samples))
    return records


def records_to_csv(records: Sequence[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        row = list(astuple(rec))
        if row[-1] is None:
            row[-1] = ""
        writer.writerow(row)
    return buf.getvalue()


def read_csv(text: str) -> list[BenchRecord]:
    rows = list(csv.DictReader(io.StringIO(text)))
    out = []
    for r in rows:
        pre = r["precompile_seconds"]
        out.append(
            BenchRecord(
                int(r["graph_size"]),
                int(r["boundary_size"]),
                r["algorithm"],
                float(r["mean_seconds"]),
                float(r["std_seconds"]),
                int(r["samples"]),
                float(pre) if pre else None,
            )
        )
    return out

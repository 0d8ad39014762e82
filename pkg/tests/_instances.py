"""Seeded random inputs shared by the test modules."""

import numpy as np

from pathcompose import GluingDiagram, SquareMatrix

# multiples of 2**-20 in [0, 10]: sums of a few dozen of these are exact in
# float64, so differently associated sums of the same path agree bit for bit
GRID = 2.0**-20


def random_weights(rng, shape, p_inf=0.5, hi=10.0, dyadic=True):
    if dyadic:
        w = rng.integers(0, int(hi / GRID) + 1, size=shape) * GRID
    else:
        w = rng.uniform(0.0, hi, size=shape)
    w = np.asarray(w, dtype=float)
    w[rng.random(shape) < p_inf] = np.inf
    return w


def random_matrix(rng, n, p_inf=0.5, prefix="v", dyadic=True):
    return SquareMatrix([f"{prefix}{i}" for i in range(n)], random_weights(rng, (n, n), p_inf, dyadic=dyadic))


# instance flavours cycled through by random_diagram
KINDS = (
    "plain",
    "empty_boundary",
    "single_boundary",
    "injective",
    "merge_in_m",
    "merge_in_n",
    "single_vertex",
    "all_inf",
)


def random_diagram(rng, kind="plain", max_size=20, max_boundary=6, dyadic=True):
    p = int(rng.integers(1, max_size + 1))
    q = int(rng.integers(1, max_size + 1))
    if kind == "single_vertex":
        p = 1
    m_inf = 1.0 if kind == "all_inf" else 0.5
    m = random_matrix(rng, p, m_inf, "a", dyadic)
    n = random_matrix(rng, q, 0.5, "b", dyadic)
    if kind == "empty_boundary":
        bsize = 0
    elif kind == "single_boundary":
        bsize = 1
    elif kind in ("merge_in_m", "merge_in_n"):
        bsize = int(rng.integers(2, max_boundary + 1))
    else:
        bsize = int(rng.integers(0, max_boundary + 1))
    boundary = [f"x{i}" for i in range(bsize)]
    if kind == "injective":
        bsize = min(bsize, p, q)
        boundary = boundary[:bsize]
        im = dict(zip(boundary, rng.permutation(p)[:bsize].tolist()))
        jn = dict(zip(boundary, rng.permutation(q)[:bsize].tolist()))
    else:
        im = {x: int(rng.integers(p)) for x in boundary}
        jn = {x: int(rng.integers(q)) for x in boundary}
    if kind == "merge_in_m" and q >= 2 and p >= 1:
        # two boundary points on one m vertex but distinct n vertices
        im[boundary[1]] = im[boundary[0]]
        if jn[boundary[1]] == jn[boundary[0]]:
            jn[boundary[1]] = (jn[boundary[0]] + 1) % q
    if kind == "merge_in_n" and p >= 2:
        jn[boundary[1]] = jn[boundary[0]]
        if im[boundary[1]] == im[boundary[0]]:
            im[boundary[1]] = (im[boundary[0]] + 1) % p
    return GluingDiagram.from_dicts(
        m,
        n,
        boundary,
        {x: m.labels[i] for x, i in im.items()},
        {x: n.labels[i] for x, i in jn.items()},
    )


def acceptance_instances(count=200, seed=20240917, dyadic=True):
    rng = np.random.default_rng(seed)
    return [random_diagram(rng, KINDS[i % len(KINDS)], dyadic=dyadic) for i in range(count)]


def chain_diagram():
    """a -> x (2) in m, x' -> b (3) in n, glued x ~ x' as boundary point p."""
    m = SquareMatrix.from_edges(["a", "x"], [("a", "x", 2)])
    n = SquareMatrix.from_edges(["x'", "b"], [("x'", "b", 3)])
    return GluingDiagram.from_dicts(m, n, ["p"], {"p": "x"}, {"p": "x'"})

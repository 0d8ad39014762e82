"""Shortest paths on a glued graph from the shortest paths of its pieces.

Three stages:

1. ``generate_symbols`` (memoised per boundary size) lists the block words.
2. ``precompile`` closes each component once, pushes the closure onto the
   glued vertex set and slices it into blocks. The result can be cached.
3. ``query`` evaluates the words for one source/target pair using only
   vector-matrix products over the blocks.

``compose_full`` computes every pair at once from the two pushed-forward
closures and is the reference path for the query engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .graphs import GluedSpace, GluingDiagram, build_glued_space, pushforward
from .semiring import INF, SquareMatrix, closure, minplus, vec_minplus
from .symbols import BLOCKS, M_BLOCKS, M_SIDE, N_BLOCKS, N_SIDE, generate_symbols


@dataclass(frozen=True, eq=False)
class PrecompiledComponent:
    """One side's pushed-forward closure, sliced into its four blocks.

    Rows/columns follow the glued space's group order: M-only labels, the
    boundary classes, N-only labels.
    """

    space: GluedSpace
    side: str
    blocks: dict

    def __post_init__(self):
        expected = M_BLOCKS if self.side == M_SIDE else N_BLOCKS
        if self.side not in (M_SIDE, N_SIDE):
            raise ValueError(f"side must be 'M' or 'N', not {self.side!r}")
        if set(self.blocks) != set(expected):
            raise ValueError(f"{self.side}-side blocks must be {expected}")
        sizes = {1: len(self.space.m_only), 2: self.space.k, 3: len(self.space.n_only)}
        frozen = {}
        for name in expected:
            arr = np.array(self.blocks[name], dtype=np.float64).reshape(
                sizes[BLOCKS[name][1]], sizes[BLOCKS[name][2]]
            )
            arr.flags.writeable = False
            frozen[name] = arr
        object.__setattr__(self, "blocks", frozen)

    def __eq__(self, other):
        if not isinstance(other, PrecompiledComponent):
            return NotImplemented
        return (
            self.side == other.side
            and self.space == other.space
            and all(np.array_equal(self.blocks[b], other.blocks[b]) for b in self.blocks)
        )

    __hash__ = None

    def assemble(self) -> SquareMatrix:
        """Put the blocks back into a full glued-size matrix (``inf`` elsewhere)."""
        groups = dict(zip((1, 2, 3), self.space.slices()))
        size = len(self.space.labels)
        out = np.full((size, size), INF)
        for name, arr in self.blocks.items():
            _, r, c = BLOCKS[name]
            out[groups[r], groups[c]] = arr
        return SquareMatrix(self.space.labels, out)


@dataclass(frozen=True)
class QueryResult:
    distance: float
    source: str
    target: str
    k_used: int
    words_evaluated: int


def _slice_blocks(F: np.ndarray, space: GluedSpace, side: str) -> dict:
    groups = dict(zip((1, 2, 3), space.slices()))
    names = M_BLOCKS if side == M_SIDE else N_BLOCKS
    return {
        name: F[groups[BLOCKS[name][1]], groups[BLOCKS[name][2]]] for name in names
    }


def precompile(
    d: GluingDiagram, space: GluedSpace | None = None
) -> tuple[PrecompiledComponent, PrecompiledComponent]:
    if space is None:
        space = build_glued_space(d)
    out = []
    for side, comp, leg in ((M_SIDE, d.m, space.from_m), (N_SIDE, d.n, space.from_n)):
        F = pushforward(closure(comp), leg).entries
        out.append(PrecompiledComponent(space, side, _slice_blocks(F, space, side)))
    return out[0], out[1]


def pushed_closures(d: GluingDiagram, space: GluedSpace) -> tuple[np.ndarray, np.ndarray]:
    FM = pushforward(closure(d.m), space.from_m).entries
    FN = pushforward(closure(d.n), space.from_n).entries
    return FM, FN


def iter_alternating_sums(FM: np.ndarray, FN: np.ndarray) -> Iterator[np.ndarray]:
    """Yield the running sum after words of 1, 2, 3, ... alternating factors.

    The n-th yielded matrix is the pointwise minimum of every product
    ``FM FN FM ...`` and ``FN FM FN ...`` with at most ``n`` factors.
    """
    from_m, from_n = FM.copy(), FN.copy()
    acc = np.minimum(from_m, from_n)
    yield acc.copy()
    while True:
        # each running product takes the opposite side next; swap afterwards
        from_m, from_n = minplus(from_m, FN), minplus(from_n, FM)
        FM, FN = FN, FM
        np.minimum(acc, from_m, out=acc)
        np.minimum(acc, from_n, out=acc)
        yield acc.copy()


def alternating_sum(FM: np.ndarray, FN: np.ndarray, n_terms: int) -> np.ndarray:
    if n_terms < 1:
        raise ValueError("need at least one term")
    for n, acc in enumerate(iter_alternating_sums(FM, FN), start=1):
        if n == n_terms:
            return acc
    raise AssertionError("unreachable")


def compose_full(d: GluingDiagram, extra_terms: int = 0) -> SquareMatrix:
    """All-pairs shortest paths of the glued graph from the component closures.

    Sums alternating products of the two pushed-forward closures with up to
    ``crossing_bound + 1`` factors. ``extra_terms`` lengthens the sum, which
    must not change the result.
    """
    space = build_glued_space(d)
    FM, FN = pushed_closures(d, space)
    n_terms = space.crossing_bound + 1 + extra_terms
    return SquareMatrix(space.labels, alternating_sum(FM, FN, n_terms))


def _local_index(space: GluedSpace, label) -> tuple[int, int]:
    i = space.index(label)
    group = space.block_of(label)
    start = space.slices()[group - 1].start
    return group, i - start


def evaluate_word(word, blocks: dict, s_local: int, t_local: int) -> float:
    """Cost of one block word from row ``s_local`` to column ``t_local``.

    The first factor contributes only the source's row and the last only the
    target's column, so the work is a chain of vector-matrix products.
    """
    first = blocks[word[0]]
    if len(word) == 1:
        return float(first[s_local, t_local])
    v = first[s_local]
    for tok in word[1:-1]:
        v = vec_minplus(v, blocks[tok])
    last = blocks[word[-1]][:, t_local]
    if v.shape[0] == 0:
        return INF
    return float(np.min(v + last))


def query(
    pm: PrecompiledComponent, pn: PrecompiledComponent, s, t
) -> QueryResult:
    if pm.side != M_SIDE or pn.side != N_SIDE:
        raise ValueError("expected the M-side then the N-side component")
    if pm.space != pn.space:
        raise ValueError("components were precompiled against different gluings")
    space = pm.space
    gs, si = _local_index(space, s)
    gt, ti = _local_index(space, t)
    depth = space.crossing_bound
    words = generate_symbols(depth).entries[(gs, gt)]
    blocks = {**pm.blocks, **pn.blocks}
    best = INF
    for word in words:
        best = min(best, evaluate_word(word, blocks, si, ti))
    return QueryResult(best, s, t, depth, len(words))

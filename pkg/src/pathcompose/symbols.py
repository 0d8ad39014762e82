"""Composition symbols: block-matrix words for shortest paths across a gluing.

The glued vertex set splits into three groups (1 = only in ``m``,
2 = boundary, 3 = only in ``n``). Each component's pushed-forward closure
then has four non-trivial blocks::

    F(M) = | MM  MX   .  |      F(N) = | .   .    .  |
           | XM  XXM  .  |             | .   XXN  XN |
           | .   .    .  |             | .   NX   NN |

A shortest path alternates between the two components, switching only at
boundary classes, so its cost is a product of blocks taken alternately from
each side. ``generate_symbols(k)`` lists every such product with at most
``k + 1`` factors (``k`` side switches) for each pair of groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Tuple

M_SIDE = "M"
N_SIDE = "N"

# token -> (side, row group, column group)
BLOCKS = {
    "MM": (M_SIDE, 1, 1),
    "MX": (M_SIDE, 1, 2),
    "XM": (M_SIDE, 2, 1),
    "XXM": (M_SIDE, 2, 2),
    "XXN": (N_SIDE, 2, 2),
    "XN": (N_SIDE, 2, 3),
    "NX": (N_SIDE, 3, 2),
    "NN": (N_SIDE, 3, 3),
}
M_BLOCKS = ("MM", "MX", "XM", "XXM")
N_BLOCKS = ("XXN", "XN", "NX", "NN")
GROUPS = (1, 2, 3)

Word = Tuple[str, ...]
SymbolExpr = FrozenSet[Word]


def side_of(token: str) -> str:
    return BLOCKS[token][0]


def is_composable(word: Word) -> bool:
    return all(BLOCKS[a][2] == BLOCKS[b][1] for a, b in zip(word, word[1:]))


def is_alternating(word: Word) -> bool:
    return all(side_of(a) != side_of(b) for a, b in zip(word, word[1:]))


@dataclass(frozen=True)
class SymbolMatrix:
    k: int
    entries: dict  # (row group, column group) -> SymbolExpr

    def __getitem__(self, key) -> SymbolExpr:
        return self.entries[key]

    def words(self):
        for key in sorted(self.entries):
            yield from self.entries[key]


def _extend(word: Word, group: int, side: str, remaining: int, out: dict, start: int):
    tokens = M_BLOCKS if side == M_SIDE else N_BLOCKS
    other = N_SIDE if side == M_SIDE else M_SIDE
    for tok in tokens:
        _, row, col = BLOCKS[tok]
        if row != group:
            continue
        w = word + (tok,)
        out[(start, col)].add(w)
        if remaining > 1:
            _extend(w, col, other, remaining - 1, out, start)


@lru_cache(maxsize=None)
def generate_symbols(k: int) -> SymbolMatrix:
    """All alternating block words with at most ``k + 1`` factors, by entry.

    ``k`` is the number of side switches a path may make; with ``k = 0``
    only single-factor words remain and the two components never meet.
    """
    if k < 0:
        raise ValueError("boundary size must be non-negative")
    out = {(i, j): set() for i in GROUPS for j in GROUPS}
    for side in (M_SIDE, N_SIDE):
        for start in GROUPS:
            _extend((), start, side, k + 1, out, start)
    return SymbolMatrix(k, {key: frozenset(words) for key, words in out.items()})


def word_sort_key(word: Word):
    return (len(word), word)


def render_expr(expr: SymbolExpr) -> str:
    if not expr:
        return "0"
    return " + ".join("*".join(w) for w in sorted(expr, key=word_sort_key))


def render_symbols(s: SymbolMatrix) -> str:
    lines = [
        f"Symbol({s.k},{i},{j}) = {render_expr(s.entries[(i, j)])}"
        for i in GROUPS
        for j in GROUPS
    ]
    return "\n".join(lines) + "\n"

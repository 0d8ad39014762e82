"""Min-plus weights and dense square matrices over ``[0, inf]``.

Weights are plain Python floats. ``min`` plays the role of addition (zero
element ``inf``) and ``+`` the role of multiplication (one element ``0``).
Matrices carry an ordered tuple of vertex labels alongside a read-only
``float64`` array, so that a matrix *is* a weighted graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .exceptions import DimensionError, InputError, LabelError

INF = math.inf
ZERO = INF  # additive identity
ONE = 0.0  # multiplicative identity

# Above this many scalar products, minplus() loops over the inner index
# instead of materialising the full 3-D broadcast.
_BROADCAST_LIMIT = 1 << 21


def check_weight(value) -> float:
    """Coerce ``value`` to a float weight, rejecting NaN and negatives."""
    w = float(value)
    if math.isnan(w):
        raise InputError("weight is NaN")
    if w < 0:
        raise InputError(f"negative weight {value!r}")
    return w


def w_add(a: float, b: float) -> float:
    return a if a <= b else b


def w_mul(a: float, b: float) -> float:
    # inf + x is already inf for x >= 0, but be explicit: there is no -inf
    # in the domain and nothing here may ever produce NaN.
    if a == INF or b == INF:
        return INF
    return a + b


def minplus(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Min-plus product of two (possibly rectangular) weight arrays.

    ``C[i, j] = min_k A[i, k] + B[k, j]``; an empty inner dimension gives
    ``inf`` everywhere. Every entry is a single addition followed by exact
    minima, so the result does not depend on the evaluation strategy.
    """
    n, m = A.shape
    m2, p = B.shape
    if m != m2:
        raise DimensionError(f"inner dimensions differ: {A.shape} x {B.shape}")
    if m == 0 or n == 0 or p == 0:
        return np.full((n, p), INF)
    if n * m * p <= _BROADCAST_LIMIT:
        return np.min(A[:, :, None] + B[None, :, :], axis=1)
    # one source row at a time against B transposed: the reduction then
    # runs along contiguous memory
    BT = np.ascontiguousarray(B.T)
    C = np.empty((n, p))
    buf = np.empty_like(BT)
    for i in range(n):
        np.add(A[i], BT, out=buf)
        np.min(buf, axis=1, out=C[i])
    return C


def vec_minplus(v: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Row vector times matrix in the min-plus semiring."""
    if B.shape[0] == 0:
        return np.full(B.shape[1], INF)
    return np.min(v[:, None] + B, axis=0)


@dataclass(frozen=True, eq=False)
class SquareMatrix:
    """A ``[0, inf]``-weighted graph on an ordered set of labelled vertices.

    ``entries[i, j]`` is the cost of the direct edge ``labels[i] -> labels[j]``.
    Instances are immutable; the underlying array is flagged read-only.
    """

    labels: tuple
    entries: np.ndarray

    def __post_init__(self):
        labels = tuple(self.labels)
        if len(set(labels)) != len(labels):
            raise InputError(f"duplicate labels in {list(labels)!r}")
        arr = np.array(self.entries, dtype=np.float64, copy=True)
        if arr.size == 0:
            arr = arr.reshape(len(labels), len(labels))
        if arr.ndim != 2 or arr.shape != (len(labels), len(labels)):
            raise DimensionError(
                f"entries of shape {arr.shape} do not match {len(labels)} labels"
            )
        if np.isnan(arr).any():
            raise InputError("NaN weight")
        if (arr < 0).any():
            raise InputError("negative weight")
        arr.flags.writeable = False
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "entries", arr)
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(labels)})

    @classmethod
    def from_edges(cls, labels: Sequence, edges: Iterable[tuple]) -> "SquareMatrix":
        """Build from ``(src, dst, weight)`` triples; parallel edges keep the minimum."""
        labels = tuple(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        arr = np.full((len(labels), len(labels)), INF)
        for src, dst, w in edges:
            i, j = index[src], index[dst]
            arr[i, j] = min(arr[i, j], check_weight(w))
        return cls(labels, arr)

    def __len__(self):
        return len(self.labels)

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise LabelError(f"unknown vertex {label!r}") from None

    def __getitem__(self, key) -> float:
        src, dst = key
        return float(self.entries[self.index(src), self.index(dst)])

    def allclose(self, other: "SquareMatrix", atol: float = 1e-9) -> bool:
        """Same labels and entries within ``atol`` (infinities must coincide)."""
        if self.labels != other.labels:
            return False
        a, b = self.entries, other.entries
        if not np.array_equal(np.isinf(a), np.isinf(b)):
            return False
        finite = ~np.isinf(a)
        return bool(np.all(np.abs(a[finite] - b[finite]) <= atol))

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(
            self.entries, other.entries
        )

    __hash__ = None

    def __repr__(self):
        return f"SquareMatrix(labels={list(self.labels)!r}, entries={self.entries.tolist()!r})"


def _check_same(A: SquareMatrix, B: SquareMatrix):
    if A.labels != B.labels:
        raise DimensionError(
            f"label mismatch: {list(A.labels)!r} vs {list(B.labels)!r}"
        )


def mat_add(A: SquareMatrix, B: SquareMatrix) -> SquareMatrix:
    _check_same(A, B)
    return SquareMatrix(A.labels, np.minimum(A.entries, B.entries))


def mat_mul(A: SquareMatrix, B: SquareMatrix) -> SquareMatrix:
    _check_same(A, B)
    return SquareMatrix(A.labels, minplus(A.entries, B.entries))


def identity(labels: Sequence) -> SquareMatrix:
    labels = tuple(labels)
    arr = np.full((len(labels), len(labels)), INF)
    np.fill_diagonal(arr, 0.0)
    return SquareMatrix(labels, arr)


def zeros(labels: Sequence) -> SquareMatrix:
    """The additive identity: every entry ``inf`` (a graph with no edges)."""
    labels = tuple(labels)
    return SquareMatrix(labels, np.full((len(labels), len(labels)), INF))


def _square_from_changes(A: np.ndarray, changed: np.ndarray) -> np.ndarray:
    """``A . A`` given that ``A`` is itself a square and ``changed`` marks
    the entries that differ from its root.

    A pair ``(A[i, k], A[k, j])`` in which neither factor changed was
    already minimised into ``A[i, j]``, and ``A[i, j] + A[j, j]`` with a zero
    diagonal keeps it, so only products touching a changed entry are
    formed. The result is bitwise equal to ``minplus(A, A)``.
    """
    C = A.copy()
    _relax_rows(C, A, changed)
    CT = np.ascontiguousarray(C.T)
    # the A . delta half is the delta . A half of the transposes
    _relax_rows(CT, np.ascontiguousarray(A.T), np.ascontiguousarray(changed.T))
    return np.minimum(C, CT.T)


def _relax_rows(C, A, changed):
    for k in np.flatnonzero(changed.any(axis=0)):
        rows = np.flatnonzero(changed[:, k])
        C[rows] = np.minimum(C[rows], A[rows, k, None] + A[k])


def closure_array(arr: np.ndarray) -> np.ndarray:
    """All-pairs shortest paths of a square weight array by repeated squaring.

    Squares ``I + M`` until it stops changing. After ``ceil(log2 n)``
    squarings every simple path is covered; any further squaring only
    settles floating-point ties, and stopping at an exact fixpoint makes
    the result idempotent under a second closure.
    """
    n = arr.shape[0]
    A = np.array(arr, dtype=np.float64, copy=True)
    if n == 0:
        return A
    np.fill_diagonal(A, 0.0)
    bound = max(1, math.ceil(math.log2(n))) + 16
    changed = None
    for _ in range(bound):
        # late rounds touch few entries; cost is ~2 * changes * n vs n**3
        if changed is not None and 4 * np.count_nonzero(changed) < n * n:
            A2 = _square_from_changes(A, changed)
        else:
            A2 = minplus(A, A)
        changed = A2 != A
        if not changed.any():
            break
        A = A2
    return A


def closure(M: SquareMatrix) -> SquareMatrix:
    """Shortest-path distances ``sum_{n>=0} M^n`` of a weighted graph."""
    return SquareMatrix(M.labels, closure_array(M.entries))


def mat_pow(M: SquareMatrix, n: int) -> SquareMatrix:
    """``M^n`` by repeated multiplication; ``M^0`` is the identity."""
    if n < 0:
        raise InputError("negative exponent")
    R = identity(M.labels)
    for _ in range(n):
        R = mat_mul(R, M)
    return R

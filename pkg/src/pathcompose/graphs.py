"""Weighted graphs as files, vertex maps, pushforwards and gluings.

A gluing diagram is two component graphs ``m`` and ``n`` together with a
boundary set ``X`` and maps ``X -> m`` and ``X -> n``. Gluing takes the
disjoint union of the components and identifies ``into_m(x)`` with
``into_n(x)`` for each ``x``; the glued weights are the pointwise minimum
of the two components transported onto the glued vertex set.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from .exceptions import DimensionError, InputError, LabelError, ParseError
from .semiring import INF, SquareMatrix, mat_add

M_PREFIX = "m:"
N_PREFIX = "n:"


@dataclass(frozen=True, eq=False)
class VertexMap:
    """A total function between two ordered label sets, stored by index."""

    source_labels: tuple
    target_labels: tuple
    mapping: np.ndarray

    def __post_init__(self):
        src = tuple(self.source_labels)
        tgt = tuple(self.target_labels)
        idx = np.asarray(self.mapping, dtype=np.intp).reshape(-1)
        if idx.shape[0] != len(src):
            raise InputError(
                f"map defines {idx.shape[0]} images for {len(src)} source labels"
            )
        if idx.size and (idx.min() < 0 or idx.max() >= len(tgt)):
            raise InputError("map image index out of range")
        idx.flags.writeable = False
        object.__setattr__(self, "source_labels", src)
        object.__setattr__(self, "target_labels", tgt)
        object.__setattr__(self, "mapping", idx)

    @classmethod
    def from_dict(cls, source_labels, target_labels, images: Mapping) -> "VertexMap":
        tindex = {lab: i for i, lab in enumerate(target_labels)}
        idx = []
        for lab in source_labels:
            if lab not in images:
                raise InputError(f"map is not total: no image for {lab!r}")
            try:
                idx.append(tindex[images[lab]])
            except KeyError:
                raise LabelError(f"unknown target vertex {images[lab]!r}") from None
        return cls(tuple(source_labels), tuple(target_labels), idx)

    @classmethod
    def identity(cls, labels) -> "VertexMap":
        labels = tuple(labels)
        return cls(labels, labels, np.arange(len(labels)))

    def __call__(self, label):
        try:
            i = self.source_labels.index(label)
        except ValueError:
            raise LabelError(f"unknown source vertex {label!r}") from None
        return self.target_labels[self.mapping[i]]

    def as_dict(self) -> dict:
        return {s: self.target_labels[t] for s, t in zip(self.source_labels, self.mapping)}

    def then(self, g: "VertexMap") -> "VertexMap":
        """The composite ``g . self``."""
        if self.target_labels != g.source_labels:
            raise DimensionError("maps are not composable")
        return VertexMap(self.source_labels, g.target_labels, g.mapping[self.mapping])

    def is_injective(self) -> bool:
        return len(np.unique(self.mapping)) == len(self.mapping)

    def __eq__(self, other):
        if not isinstance(other, VertexMap):
            return NotImplemented
        return (
            self.source_labels == other.source_labels
            and self.target_labels == other.target_labels
            and np.array_equal(self.mapping, other.mapping)
        )

    __hash__ = None


def pushforward(M: SquareMatrix, f: VertexMap) -> SquareMatrix:
    """Transport ``M`` along ``f``: each target entry is the min over its preimage pairs."""
    if f.source_labels != M.labels:
        raise DimensionError("map source labels differ from matrix labels")
    size = len(f.target_labels)
    out = np.full((size, size), INF)
    idx = f.mapping
    if idx.size:
        np.minimum.at(out, (idx[:, None], idx[None, :]), M.entries)
    return SquareMatrix(f.target_labels, out)


def is_morphism(f: VertexMap, M: SquareMatrix, N: SquareMatrix) -> bool:
    """True iff ``pushforward(M, f) >= N`` entrywise."""
    if f.target_labels != N.labels:
        raise DimensionError("map target labels differ from codomain labels")
    return bool(np.all(pushforward(M, f).entries >= N.entries))


@dataclass(frozen=True, eq=False)
class GluingDiagram:
    m: SquareMatrix
    n: SquareMatrix
    boundary: tuple
    into_m: VertexMap
    into_n: VertexMap

    def __post_init__(self):
        boundary = tuple(self.boundary)
        object.__setattr__(self, "boundary", boundary)
        if len(set(boundary)) != len(boundary):
            raise InputError("duplicate boundary names")
        if self.into_m.source_labels != boundary or self.into_n.source_labels != boundary:
            raise DimensionError("boundary maps must be defined on the boundary")
        if self.into_m.target_labels != self.m.labels:
            raise DimensionError("into_m does not land in m's vertices")
        if self.into_n.target_labels != self.n.labels:
            raise DimensionError("into_n does not land in n's vertices")

    @classmethod
    def from_dicts(cls, m, n, boundary, into_m: Mapping, into_n: Mapping):
        boundary = tuple(boundary)
        return cls(
            m,
            n,
            boundary,
            VertexMap.from_dict(boundary, m.labels, into_m),
            VertexMap.from_dict(boundary, n.labels, into_n),
        )

    def swapped(self) -> "GluingDiagram":
        return GluingDiagram(self.n, self.m, self.boundary, self.into_n, self.into_m)


@dataclass(frozen=True, eq=False)
class GluedSpace:
    """Vertex set of a gluing plus the quotient maps from each component.

    Labels are ordered boundary classes first, then vertices only in ``m``,
    then vertices only in ``n``, so each group is a contiguous index range.
    """

    labels: tuple
    from_m: VertexMap
    from_n: VertexMap
    boundary_classes: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "boundary_classes", tuple(self.boundary_classes))
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.labels)})

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise LabelError(f"unknown glued vertex {label!r}") from None

    @property
    def k(self) -> int:
        return len(self.boundary_classes)

    @property
    def m_only(self) -> tuple:
        return self.labels[self.k : self.k + self._m_count]

    @property
    def n_only(self) -> tuple:
        return self.labels[self.k + self._m_count :]

    @property
    def _m_count(self) -> int:
        return len(self.from_m.source_labels) - _merged_count(self.from_m, self.k)

    def slices(self) -> tuple[slice, slice, slice]:
        """Index ranges of the M-only, boundary and N-only groups."""
        k, p = self.k, self._m_count
        return slice(k, k + p), slice(0, k), slice(k + p, len(self.labels))

    def block_of(self, label) -> int:
        """1 for M-only vertices, 2 for boundary classes, 3 for N-only vertices."""
        i = self.index(label)
        if i < self.k:
            return 2
        if i < self.k + self._m_count:
            return 1
        return 3

    @property
    def crossing_bound(self) -> int:
        """Most component switches a shortest glued path can need.

        A simple path switches sides only at boundary classes it passes
        through, once per class, except at a class holding two or more
        vertices of the same component: entering at one and leaving at
        another costs a second switch through the other side's zero
        diagonal.
        """
        multi = np.zeros(self.k, dtype=bool)
        for f in (self.from_m, self.from_n):
            counts = np.bincount(f.mapping, minlength=len(self.labels))[: self.k]
            multi |= counts > 1
        return self.k + int(multi.sum())

    def __eq__(self, other):
        if not isinstance(other, GluedSpace):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.boundary_classes == other.boundary_classes
            and self.from_m == other.from_m
            and self.from_n == other.from_n
        )

    __hash__ = None


def _merged_count(f: VertexMap, k: int) -> int:
    # number of source vertices landing in the first k (boundary) targets
    return int(np.count_nonzero(f.mapping < k))


def build_glued_space(d: GluingDiagram) -> GluedSpace:
    ds = DisjointSet()
    m_nodes = [(0, lab) for lab in d.m.labels]
    n_nodes = [(1, lab) for lab in d.n.labels]
    for node in m_nodes + n_nodes:
        ds.add(node)
    for x in d.boundary:
        ds.merge((0, d.into_m(x)), (1, d.into_n(x)))

    names = {}  # class root -> glued label
    classes = []
    for x in d.boundary:
        root = ds[(0, d.into_m(x))]
        if root not in names:
            names[root] = x
            classes.append(x)
    labels = list(classes)
    for side, nodes, prefix in ((0, m_nodes, M_PREFIX), (1, n_nodes, N_PREFIX)):
        for node in nodes:
            root = ds[node]
            if root not in names:
                names[root] = prefix + str(node[1])
                labels.append(names[root])
    if len(set(labels)) != len(labels):
        raise InputError("boundary names collide with prefixed component vertex names")

    from_m = VertexMap.from_dict(
        d.m.labels, labels, {lab: names[ds[(0, lab)]] for lab in d.m.labels}
    )
    from_n = VertexMap.from_dict(
        d.n.labels, labels, {lab: names[ds[(1, lab)]] for lab in d.n.labels}
    )
    return GluedSpace(tuple(labels), from_m, from_n, tuple(classes))


def pushout(d: GluingDiagram, space: GluedSpace | None = None) -> SquareMatrix:
    """The glued graph: pointwise min of both components pushed onto the glued vertices."""
    if space is None:
        space = build_glued_space(d)
    return mat_add(pushforward(d.m, space.from_m), pushforward(d.n, space.from_n))


# -- file formats -----------------------------------------------------------


def encode_weight(w: float):
    if math.isinf(w):
        return "inf"
    return int(w) if float(w).is_integer() else float(w)


def decode_weight(value, where: str) -> float:
    if value == "inf":
        return INF
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{where}: weight must be a number or \"inf\", got {value!r}")
    w = float(value)
    if math.isnan(w) or math.isinf(w):
        raise ParseError(f"{where}: weight must be finite or the string \"inf\"")
    if w < 0:
        raise ParseError(f"{where}: negative weight {value!r}")
    return w


def format_weight(w: float) -> str:
    """Human-readable weight: ``inf``, integers without a trailing ``.0``."""
    if math.isinf(w):
        return "inf"
    return str(int(w)) if float(w).is_integer() else repr(float(w))


def _load_json(text, what: str):
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"{what}: not UTF-8 ({exc})") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{what}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _string_list(obj, key: str, what: str) -> list:
    if key not in obj:
        raise ParseError(f"{what}: missing field {key!r}")
    vals = obj[key]
    if not isinstance(vals, list) or not all(isinstance(v, str) for v in vals):
        raise ParseError(f"{what}: field {key!r} must be a list of strings")
    return vals


def parse_graph(text) -> SquareMatrix:
    """Parse a graph file into a matrix; absent pairs (and the diagonal) stay ``inf``."""
    obj = _load_json(text, "graph")
    if not isinstance(obj, dict):
        raise ParseError("graph: top level must be an object")
    vertices = _string_list(obj, "vertices", "graph")
    seen = set()
    for v in vertices:
        if v in seen:
            raise ParseError(f"graph: field 'vertices': duplicate vertex {v!r}")
        seen.add(v)
    edges = obj.get("edges", [])
    if not isinstance(edges, list):
        raise ParseError("graph: field 'edges' must be a list")
    index = {v: i for i, v in enumerate(vertices)}
    arr = np.full((len(vertices), len(vertices)), INF)
    for pos, edge in enumerate(edges):
        where = f"graph: edges[{pos}]"
        if not isinstance(edge, dict):
            raise ParseError(f"{where}: must be an object")
        for key in ("src", "dst", "weight"):
            if key not in edge:
                raise ParseError(f"{where}: missing field {key!r}")
        src, dst = edge["src"], edge["dst"]
        for key, v in (("src", src), ("dst", dst)):
            if v not in index:
                raise ParseError(f"{where}: field {key!r}: unknown vertex {v!r}")
        w = decode_weight(edge["weight"], f"{where}: field 'weight'")
        i, j = index[src], index[dst]
        arr[i, j] = min(arr[i, j], w)
    return SquareMatrix(tuple(vertices), arr)


def dump_graph(M: SquareMatrix, indent: int | None = None) -> str:
    """Serialise a matrix as a graph file, omitting ``inf`` entries."""
    edges = []
    rows, cols = np.nonzero(~np.isinf(M.entries))
    for i, j in zip(rows.tolist(), cols.tolist()):
        edges.append(
            {
                "src": M.labels[i],
                "dst": M.labels[j],
                "weight": encode_weight(float(M.entries[i, j])),
            }
        )
    return json.dumps({"vertices": list(M.labels), "edges": edges}, indent=indent)


def parse_gluing(text, m: SquareMatrix, n: SquareMatrix) -> GluingDiagram:
    obj = _load_json(text, "gluing")
    if not isinstance(obj, dict):
        raise ParseError("gluing: top level must be an object")
    boundary = _string_list(obj, "boundary", "gluing")
    if len(set(boundary)) != len(boundary):
        raise ParseError("gluing: field 'boundary': duplicate boundary name")
    legs = {}
    for key, comp in (("into_m", m), ("into_n", n)):
        leg = obj.get(key)
        if not isinstance(leg, dict):
            raise ParseError(f"gluing: field {key!r} must be an object")
        for x in boundary:
            if x not in leg:
                raise ParseError(f"gluing: field {key!r}: no image for boundary {x!r}")
            if leg[x] not in comp.labels:
                raise ParseError(f"gluing: field {key!r}: unknown vertex {leg[x]!r}")
        extra = set(leg) - set(boundary)
        if extra:
            raise ParseError(f"gluing: field {key!r}: keys not in boundary: {sorted(extra)!r}")
        legs[key] = leg
    return GluingDiagram.from_dicts(m, n, boundary, legs["into_m"], legs["into_n"])


def dump_gluing(d: GluingDiagram, indent: int | None = None) -> str:
    return json.dumps(
        {
            "boundary": list(d.boundary),
            "into_m": d.into_m.as_dict(),
            "into_n": d.into_n.as_dict(),
        },
        indent=indent,
    )


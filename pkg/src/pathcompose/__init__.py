"""Compositional shortest paths over the min-plus semiring.

Given two weighted graphs glued along a shared boundary, the all-pairs
shortest paths of the glued graph are assembled from the shortest paths of
each piece. Precompiled pieces answer single source/target queries with a
handful of small vector-matrix products.
"""

from .cache import read_cache, write_cache
from .compose import (
    PrecompiledComponent,
    QueryResult,
    compose_full,
    precompile,
    query,
)
from .exceptions import (
    CacheError,
    CacheVersionError,
    CorruptCacheError,
    DimensionError,
    InputError,
    LabelError,
    ParseError,
    PathComposeError,
)
from .graphs import (
    GluedSpace,
    GluingDiagram,
    VertexMap,
    build_glued_space,
    dump_graph,
    is_morphism,
    parse_gluing,
    parse_graph,
    pushforward,
    pushout,
)
from .oracle import brute_force_paths, dijkstra, floyd_warshall
from .semiring import (
    INF,
    SquareMatrix,
    closure,
    identity,
    mat_add,
    mat_mul,
    w_add,
    w_mul,
)
from .symbols import SymbolMatrix, generate_symbols, render_symbols

__version__ = "0.1.0"

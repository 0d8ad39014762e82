"""On-disk cache for precompiled components (JSON, written atomically)."""

from __future__ import annotations

import json
import os
import tempfile

import numpy as np

from .compose import PrecompiledComponent
from .exceptions import CacheError, CacheVersionError, CorruptCacheError
from .graphs import GluedSpace, VertexMap, decode_weight, encode_weight
from .symbols import BLOCKS, M_BLOCKS, M_SIDE, N_BLOCKS, N_SIDE

FORMAT_VERSION = 1


def _encode_block(arr: np.ndarray) -> list:
    return [[encode_weight(w) for w in row] for row in arr.tolist()]


def _encode_map(f: VertexMap) -> list:
    return [[s, f.target_labels[t]] for s, t in zip(f.source_labels, f.mapping)]


def cache_payload(pc: PrecompiledComponent) -> dict:
    space = pc.space
    return {
        "format_version": FORMAT_VERSION,
        "side": pc.side,
        "labels": list(space.labels),
        "boundary_classes": list(space.boundary_classes),
        "from_m": _encode_map(space.from_m),
        "from_n": _encode_map(space.from_n),
        "blocks": {name: _encode_block(arr) for name, arr in pc.blocks.items()},
    }


def write_cache(pc: PrecompiledComponent, path) -> None:
    path = os.fspath(path)
    text = json.dumps(cache_payload(pc), sort_keys=True)
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(prefix=".cache-", suffix=".json", dir=directory)
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(text)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    except OSError as exc:
        raise CacheError(f"cannot write cache {path}: {exc}") from exc


def _decode_map(entries, labels, what):
    if not isinstance(entries, list) or not all(
        isinstance(e, list) and len(e) == 2 for e in entries
    ):
        raise CorruptCacheError(f"{what} must be a list of [source, target] pairs")
    try:
        return VertexMap.from_dict([e[0] for e in entries], labels, dict(entries))
    except (KeyError, ValueError, TypeError) as exc:
        raise CorruptCacheError(f"{what}: {exc}") from None


def _decode_block(rows, shape, name):
    if not isinstance(rows, list) or len(rows) != shape[0]:
        raise CorruptCacheError(f"block {name} should have {shape[0]} rows")
    out = np.empty(shape)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != shape[1]:
            raise CorruptCacheError(f"block {name} row {i} should have {shape[1]} entries")
        for j, w in enumerate(row):
            try:
                out[i, j] = decode_weight(w, f"block {name}[{i}][{j}]")
            except ValueError as exc:
                raise CorruptCacheError(str(exc)) from None
    return out


def read_cache(path) -> PrecompiledComponent:
    path = os.fspath(path)
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise CacheError(f"cannot read cache {path}: {exc}") from exc
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise CorruptCacheError(f"cache {path} is not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise CorruptCacheError("cache top level must be an object")
    version = obj.get("format_version")
    if version != FORMAT_VERSION:
        raise CacheVersionError(
            f"cache format_version {version!r} is not supported (expected {FORMAT_VERSION})"
        )
    try:
        side = obj["side"]
        labels = obj["labels"]
        classes = obj["boundary_classes"]
        blocks = obj["blocks"]
        from_m_raw, from_n_raw = obj["from_m"], obj["from_n"]
    except KeyError as exc:
        raise CorruptCacheError(f"cache is missing field {exc.args[0]!r}") from None
    if side not in (M_SIDE, N_SIDE):
        raise CorruptCacheError(f"unknown side {side!r}")
    if list(labels[: len(classes)]) != list(classes):
        raise CorruptCacheError("boundary classes must lead the label list")
    space = GluedSpace(
        tuple(labels),
        _decode_map(from_m_raw, labels, "from_m"),
        _decode_map(from_n_raw, labels, "from_n"),
        tuple(classes),
    )
    sizes = {1: len(space.m_only), 2: space.k, 3: len(space.n_only)}
    names = M_BLOCKS if side == M_SIDE else N_BLOCKS
    if not isinstance(blocks, dict) or set(blocks) != set(names):
        raise CorruptCacheError(f"{side}-side cache needs exactly the blocks {names}")
    decoded = {
        name: _decode_block(blocks[name], (sizes[BLOCKS[name][1]], sizes[BLOCKS[name][2]]), name)
        for name in names
    }
    return PrecompiledComponent(space, side, decoded)

import json

import numpy as np
import pytest

from pathcompose import (
    CacheError,
    CacheVersionError,
    CorruptCacheError,
    precompile,
    query,
    read_cache,
    write_cache,
)

from _instances import KINDS, chain_diagram, random_diagram


def test_round_trip_three_vertex_component(tmp_path):
    pm, pn = precompile(chain_diagram())
    for pc, name in ((pm, "m.json"), (pn, "n.json")):
        write_cache(pc, tmp_path / name)
        assert read_cache(tmp_path / name) == pc


@pytest.mark.parametrize("kind", KINDS)
def test_round_trip_random(tmp_path, kind):
    rng = np.random.default_rng(KINDS.index(kind))
    d = random_diagram(rng, kind, dyadic=False)
    pm, pn = precompile(d)
    write_cache(pm, tmp_path / "m.json")
    write_cache(pn, tmp_path / "n.json")
    qm, qn = read_cache(tmp_path / "m.json"), read_cache(tmp_path / "n.json")
    assert qm == pm and qn == pn
    s, t = pm.space.labels[0], pm.space.labels[-1]
    assert query(qm, qn, s, t) == query(pm, pn, s, t)


def test_file_layout(tmp_path):
    pm, _ = precompile(chain_diagram())
    write_cache(pm, tmp_path / "m.json")
    obj = json.loads((tmp_path / "m.json").read_text())
    assert obj["format_version"] == 1
    assert obj["labels"] == ["p", "m:a", "n:b"]
    assert obj["boundary_classes"] == ["p"]
    assert set(obj["blocks"]) == {"MM", "MX", "XM", "XXM"}
    assert obj["blocks"]["XM"] == [["inf"]]
    assert not [p for p in tmp_path.iterdir() if p.name.startswith(".cache-")]


def _rewrite(path, mutate):
    obj = json.loads(path.read_text())
    mutate(obj)
    path.write_text(json.dumps(obj))


def test_wrong_version(tmp_path):
    pm, _ = precompile(chain_diagram())
    path = tmp_path / "m.json"
    write_cache(pm, path)
    _rewrite(path, lambda o: o.update(format_version=2))
    with pytest.raises(CacheVersionError):
        read_cache(path)


@pytest.mark.parametrize(
    "mutate",
    [
        lambda o: o["blocks"]["MM"].append([0]),
        lambda o: o["blocks"]["MX"][0].append(1),
        lambda o: o["blocks"].pop("XXM"),
        lambda o: o["blocks"]["MM"][0].__setitem__(0, -4),
        lambda o: o.pop("labels"),
        lambda o: o.update(side="Q"),
    ],
)
def test_corrupt_cache(tmp_path, mutate):
    pm, _ = precompile(chain_diagram())
    path = tmp_path / "m.json"
    write_cache(pm, path)
    _rewrite(path, mutate)
    with pytest.raises(CorruptCacheError):
        read_cache(path)


def test_not_json_and_missing_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    with pytest.raises(CorruptCacheError):
        read_cache(bad)
    with pytest.raises(CacheError):
        read_cache(tmp_path / "absent.json")


def test_write_into_missing_directory(tmp_path):
    pm, _ = precompile(chain_diagram())
    with pytest.raises(CacheError):
        write_cache(pm, tmp_path / "no" / "such" / "dir.json")

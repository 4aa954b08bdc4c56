import json
import random

import pytest

from flaghilb.cache import FORMAT_VERSION, Cache, CacheMismatch, cache_key


def test_key_is_stable_and_order_free():
    assert cache_key("matrix", {"n": 2, "k": 1}) == cache_key("matrix", {"k": 1, "n": 2})
    assert cache_key("matrix", {"n": 2, "k": 1}) != cache_key("matrix", {"n": 2, "k": 0})


def test_miss_then_hit(tmp_path):
    c = Cache(tmp_path, verify_rate=0.0)
    calls = []

    def compute():
        calls.append(1)
        return {"value": (1, 2)}

    first = c.get_or_compute("x", {"a": 1}, compute)
    second = c.get_or_compute("x", {"a": 1}, compute)
    assert first == second == {"value": [1, 2]}
    assert len(calls) == 1 and c.hits == 1 and c.misses == 1


def test_entry_layout(tmp_path):
    c = Cache(tmp_path)
    c.store("x", {"a": 1}, [1])
    key = cache_key("x", {"a": 1})
    entry = json.loads((tmp_path / key[:2] / f"{key}.json").read_text())
    assert entry["version"] == FORMAT_VERSION and entry["payload"] == [1]
    assert not list(tmp_path.rglob(".tmp-*"))


def test_stale_entry_detected(tmp_path):
    c = Cache(tmp_path, verify_rate=1.0, rng=random.Random(0))
    c.store("x", {"a": 1}, {"v": 1})
    with pytest.raises(CacheMismatch):
        c.get_or_compute("x", {"a": 1}, lambda: {"v": 2})


def test_corrupt_or_foreign_entries_ignored(tmp_path):
    c = Cache(tmp_path)
    key = cache_key("x", {})
    path = tmp_path / key[:2] / f"{key}.json"
    path.parent.mkdir(parents=True)
    path.write_text("{not json")
    assert c.load("x", {}) is None
    path.write_text(json.dumps({"version": FORMAT_VERSION + 1, "command": "x", "payload": 1}))
    assert c.load("x", {}) is None


def test_disabled_cache(tmp_path):
    c = Cache(tmp_path, enabled=False)
    c.get_or_compute("x", {}, lambda: 1)
    assert not any(tmp_path.iterdir())

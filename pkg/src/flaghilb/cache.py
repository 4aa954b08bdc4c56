"""Content-addressed disk cache for JSON results."""

from __future__ import annotations

import hashlib
import json
import os
import random
import tempfile
import time
from pathlib import Path
from typing import Any, Callable

FORMAT_VERSION = 1
ENV_VAR = "FLAGHILB_CACHE_DIR"


class CacheMismatch(RuntimeError):
    """A cached payload disagrees with a fresh recomputation."""


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "flaghilb"


def cache_key(command: str, params: dict) -> str:
    blob = json.dumps({"command": command, "params": params, "version": FORMAT_VERSION},
                      sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class Cache:
    def __init__(self, root: Path | str | None = None, enabled: bool = True,
                 verify_rate: float = 0.01, rng: random.Random | None = None):
        self.root = Path(root) if root is not None else default_cache_dir()
        self.enabled = enabled
        self.verify_rate = verify_rate
        self._rng = rng or random.Random()
        self.hits = 0
        self.misses = 0

    def _path(self, key: str) -> Path:
        return self.root / key[:2] / f"{key}.json"

    def load(self, command: str, params: dict) -> Any | None:
        if not self.enabled:
            return None
        path = self._path(cache_key(command, params))
        try:
            with open(path) as fh:
                entry = json.load(fh)
        except (FileNotFoundError, json.JSONDecodeError):
            return None
        if entry.get("version") != FORMAT_VERSION or entry.get("command") != command:
            return None
        return entry["payload"]

    def store(self, command: str, params: dict, payload: Any) -> None:
        if not self.enabled:
            return
        key = cache_key(command, params)
        path = self._path(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        entry = {"version": FORMAT_VERSION, "command": command, "params": params,
                 "created_at": time.time(), "payload": payload}
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(entry, fh, sort_keys=True)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def get_or_compute(self, command: str, params: dict, compute: Callable[[], Any]) -> Any:
        cached = self.load(command, params)
        if cached is not None:
            self.hits += 1
            if self._rng.random() < self.verify_rate:
                fresh = compute()
                if fresh != cached:
                    raise CacheMismatch(f"cache entry for {command} {params} is stale")
            return cached
        self.misses += 1
        payload = compute()
        # round-trip through JSON so hits and misses return identical objects
        payload = json.loads(json.dumps(payload, sort_keys=True))
        self.store(command, params, payload)
        return payload

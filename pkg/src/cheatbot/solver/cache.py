"""Advisory on-disk cache of solve verdicts, one JSON file per key."""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path
from typing import Optional

ENV_VAR = "CHEATBOT_CACHE_DIR"
SCHEMA = 1


def default_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "cheatbot"


class SolveCache:
    def __init__(self, directory: Optional[os.PathLike] = None, enabled: bool = True):
        self.dir = Path(directory) if directory is not None else default_dir()
        self.enabled = enabled

    @staticmethod
    def key(graph_hash: str, rules_key: str, k: int, push_budget: Optional[int] = None) -> str:
        raw = json.dumps([SCHEMA, graph_hash, rules_key, k, push_budget])
        return hashlib.sha256(raw.encode()).hexdigest()

    def _path(self, key: str) -> Path:
        return self.dir / f"{key}.json"

    def get(self, key: str) -> Optional[dict]:
        if not self.enabled:
            return None
        try:
            with open(self._path(key)) as fh:
                rec = json.load(fh)
        except (OSError, ValueError):
            return None
        return rec if rec.get("schema") == SCHEMA else None

    def put(self, key: str, record: dict) -> None:
        if not self.enabled:
            return
        try:
            self.dir.mkdir(parents=True, exist_ok=True)
            tmp = self._path(key).with_suffix(".tmp")
            with open(tmp, "w") as fh:
                json.dump({"schema": SCHEMA, **record}, fh)
            os.replace(tmp, self._path(key))
        except OSError:
            pass


NO_CACHE = SolveCache(enabled=False)

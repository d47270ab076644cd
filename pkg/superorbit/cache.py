"""
On-disk cache of built algebras, enabled by pointing SUPERORBIT_CACHE (mirrored to CACHE) at a
directory. Files are the JSON documents of `superalg.to_json`.
"""

import json
import os
import re
from collections.abc import Callable
from pathlib import Path

from .log import log
from .superalg import SuperAlgebra, from_json, to_json

CACHE_FORMAT = 1


def cache_directory() -> Path | None:
    if location := os.environ.get("SUPERORBIT_CACHE") or os.environ.get("CACHE"):
        return Path(location).expanduser()
    return None


def _cache_path(directory: Path, key: str) -> Path:
    safe = re.sub(r"[^A-Za-z0-9_.-]+", "_", key)
    return directory / f"{safe}.v{CACHE_FORMAT}.json"


def load_algebra(key: str) -> SuperAlgebra | None:
    directory = cache_directory()
    if directory is None:
        return None

    path = _cache_path(directory, key)
    if not path.exists():
        return None

    try:
        document = json.loads(path.read_text())
        algebra = from_json(document)
    except (ValueError, KeyError) as e:
        log.warning(f"ignoring unreadable cache entry {path}: {e}")
        return None

    log.debug(f"cache hit for {key}", path=str(path))
    return algebra


def store_algebra(key: str, algebra: SuperAlgebra):
    directory = cache_directory()
    if directory is None:
        return

    directory.mkdir(parents=True, exist_ok=True)
    path = _cache_path(directory, key)
    path.write_text(json.dumps(to_json(algebra), sort_keys=True, indent=2))
    log.debug(f"cached {key}", path=str(path))


def cached_algebra(key: str, build: Callable[[], SuperAlgebra]) -> SuperAlgebra:
    if (algebra := load_algebra(key)) is not None:
        return algebra
    algebra = build()
    store_algebra(key, algebra)
    return algebra

"""Optional on-disk cache of computed basis data.

Files are JSON with a schema version and a content digest; a version or
digest mismatch is reported as corruption rather than silently used.
The directory is taken from the QSUPER_CACHE_DIR environment variable;
without it everything stays in memory.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path
from typing import Optional

SCHEMA_VERSION = 1

ENV_VAR = "QSUPER_CACHE_DIR"


class CacheCorruption(Exception):
    pass


def cache_dir() -> Optional[Path]:
    value = os.environ.get(ENV_VAR)
    if not value:
        return None
    path = Path(value)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _digest(key, payload) -> str:
    return hashlib.sha256(
        _canonical([SCHEMA_VERSION, key, payload]).encode()
    ).hexdigest()


def _filename(key) -> str:
    h = hashlib.sha256(_canonical(key).encode()).hexdigest()[:24]
    return f"qsuper-{h}.json"


def store(key, payload) -> None:
    base = cache_dir()
    if base is None:
        return
    doc = {
        "schema_version": SCHEMA_VERSION,
        "key": key,
        "payload": payload,
        "digest": _digest(key, payload),
    }
    tmp = base / (_filename(key) + ".tmp")
    tmp.write_text(json.dumps(doc))
    tmp.replace(base / _filename(key))


def load(key):
    """Return the stored payload or None; raise CacheCorruption if the
    file exists but fails version, key, or digest validation."""
    base = cache_dir()
    if base is None:
        return None
    path = base / _filename(key)
    if not path.exists():
        return None
    try:
        doc = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CacheCorruption(f"unreadable cache file {path}: {exc}") from exc
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise CacheCorruption(
            f"cache file {path} has schema_version "
            f"{doc.get('schema_version')!r}, expected {SCHEMA_VERSION}")
    if doc.get("key") != json.loads(_canonical(key)):
        raise CacheCorruption(f"cache file {path} key mismatch")
    payload = doc.get("payload")
    if doc.get("digest") != _digest(doc.get("key"), payload):
        raise CacheCorruption(f"cache file {path} failed digest check")
    return payload

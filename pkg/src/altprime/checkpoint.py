"""Versioned run checkpoints with integrity digests.

A checkpoint is a JSON document: a schema version, the run state payload,
and a SHA-256 digest over the canonical dump of everything except the digest
itself. Loads refuse unknown versions and digest mismatches instead of
resuming from silently truncated or edited state.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path
from typing import Any

__all__ = ["SCHEMA_VERSION", "CheckpointError", "canonical_digest", "load_checkpoint", "save_checkpoint"]

SCHEMA_VERSION = 1


class CheckpointError(RuntimeError):
    """Checkpoint unusable: bad version, bad digest, or inconsistent state."""


def canonical_digest(doc: dict[str, Any]) -> str:
    """SHA-256 over the canonical JSON dump, digest field excluded."""
    trimmed = {k: v for k, v in doc.items() if k != "digest"}
    blob = json.dumps(trimmed, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def save_checkpoint(payload: dict[str, Any], path: Path) -> Path:
    """Write the payload as a digest-sealed checkpoint (atomic rename)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    doc = {"schema_version": SCHEMA_VERSION, "state": payload}
    doc["digest"] = canonical_digest(doc)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(json.dumps(doc, sort_keys=True) + "\n")
    os.replace(tmp, path)
    return path


def load_checkpoint(path: Path) -> dict[str, Any]:
    """Read and verify a checkpoint, returning the state payload."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CheckpointError(f"cannot read checkpoint {path}: {exc}") from exc
    if not isinstance(doc, dict) or "digest" not in doc or "state" not in doc:
        raise CheckpointError(f"checkpoint {path} is missing required fields")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise CheckpointError(
            f"checkpoint {path} has schema_version={version!r}, expected {SCHEMA_VERSION}"
        )
    expect = canonical_digest(doc)
    if doc["digest"] != expect:
        raise CheckpointError(
            f"checkpoint {path} failed integrity check "
            f"(digest {doc['digest'][:12]}.. != {expect[:12]}..)"
        )
    return doc["state"]

"""Disk cache for subgroup lattices, keyed by a hash of the group spec."""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .errors import CacheCorrupt
from .groups import FiniteGroup, GroupSpec
from .subgroups import (
    DEFAULT_SUBGROUP_CAP,
    Subgroup,
    enumerate_subgroups,
    subgroup_from_elements,
)

LATTICE_FORMAT = "cosetlab-lattice-v1"
DEFAULT_CACHE_DIR = ".cosetlab-cache"

log = logging.getLogger("cosetlab.cache")


@dataclass(frozen=True)
class CacheRecord:
    path: Path
    spec_hash: str
    status: str  # "cold" when computed this run, "warm" when read back
    subgroup_count: int


def spec_hash(spec: GroupSpec) -> str:
    return hashlib.sha256(spec.canonical_json().encode("utf-8")).hexdigest()


def lattice_path(cache_dir: Path | str, digest: str) -> Path:
    return Path(cache_dir) / f"lattice-{digest}.json"


def _require_spec(g: FiniteGroup) -> GroupSpec:
    if g.spec is None:
        raise ValueError(f"group {g.label} carries no spec and cannot be cached")
    return g.spec


def _payload_checksum(payload: dict) -> str:
    body = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(body.encode("utf-8")).hexdigest()


def store_lattice(g: FiniteGroup, subgroups: list[Subgroup], cache_dir: Path | str) -> Path:
    digest = spec_hash(_require_spec(g))
    payload = {
        "format": LATTICE_FORMAT,
        "spec_hash": digest,
        "order": g.n,
        "subgroups": [list(s.elements) for s in subgroups],
    }
    payload["checksum"] = _payload_checksum(
        {k: payload[k] for k in ("format", "spec_hash", "order", "subgroups")}
    )
    path = lattice_path(cache_dir, digest)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    return path


def load_lattice(g: FiniteGroup, cache_dir: Path | str) -> Optional[list[Subgroup]]:
    """Read a cached lattice back; None when absent, CacheCorrupt when damaged."""
    digest = spec_hash(_require_spec(g))
    path = lattice_path(cache_dir, digest)
    if not path.exists():
        return None
    try:
        payload = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CacheCorrupt(f"{path}: unreadable ({exc})") from exc
    if not isinstance(payload, dict) or payload.get("format") != LATTICE_FORMAT:
        raise CacheCorrupt(f"{path}: wrong format tag")
    expected = payload.get("checksum")
    body = {k: payload.get(k) for k in ("format", "spec_hash", "order", "subgroups")}
    if _payload_checksum(body) != expected:
        raise CacheCorrupt(f"{path}: checksum mismatch")
    if payload.get("order") != g.n or payload.get("spec_hash") != digest:
        raise CacheCorrupt(f"{path}: cached for a different group")
    subs = [
        subgroup_from_elements(g, elems, validate=False)
        for elems in payload["subgroups"]
    ]
    return subs


def cached_subgroups(
    g: FiniteGroup,
    cache_dir: Path | str,
    *,
    max_subgroups: int = DEFAULT_SUBGROUP_CAP,
) -> tuple[list[Subgroup], str]:
    """Lattice from cache when intact, else recomputed and stored.

    Corrupt cache entries are logged and silently replaced; they never fail
    the caller.
    """
    try:
        cached = load_lattice(g, cache_dir)
    except CacheCorrupt as exc:
        log.warning("discarding corrupt lattice cache: %s", exc)
        cached = None
    if cached is not None:
        return cached, "warm"
    subs = enumerate_subgroups(g, max_subgroups=max_subgroups)
    store_lattice(g, subs, cache_dir)
    return subs, "cold"


def cache_lattice(
    g: FiniteGroup,
    cache_dir: Path | str,
    *,
    max_subgroups: int = DEFAULT_SUBGROUP_CAP,
) -> CacheRecord:
    """Ensure the lattice for this group is cached; report what happened."""
    subs, status = cached_subgroups(g, cache_dir, max_subgroups=max_subgroups)
    digest = spec_hash(_require_spec(g))
    return CacheRecord(
        path=lattice_path(cache_dir, digest),
        spec_hash=digest,
        status=status,
        subgroup_count=len(subs),
    )

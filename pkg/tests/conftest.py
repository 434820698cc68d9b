from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import cosetlab as cl


@pytest.fixture(scope="session")
def lattice():
    """(group, subgroups) for a catalog name, computed once per session."""
    cache: dict[str, tuple[cl.FiniteGroup, list[cl.Subgroup]]] = {}

    def get(name: str) -> tuple[cl.FiniteGroup, list[cl.Subgroup]]:
        if name not in cache:
            g = cl.load_catalog_group(name)
            cache[name] = (g, cl.enumerate_subgroups(g))
        return cache[name]

    return get

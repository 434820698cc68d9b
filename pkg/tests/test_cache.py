from __future__ import annotations

import json
import logging

import pytest

import cosetlab as cl
from cosetlab.cache import (
    cache_lattice,
    cached_subgroups,
    lattice_path,
    load_lattice,
    spec_hash,
    store_lattice,
)
from cosetlab.errors import CacheCorrupt


def test_round_trip_yields_identical_lattice(tmp_path):
    g = cl.load_catalog_group("S4")
    direct = cl.enumerate_subgroups(g)
    first, status1 = cached_subgroups(g, tmp_path)
    second, status2 = cached_subgroups(g, tmp_path)
    assert (status1, status2) == ("cold", "warm")
    for other in (first, second):
        assert [s.elements for s in other] == [s.elements for s in direct]


def test_spec_hash_keys_by_content():
    a = cl.catalog_spec("C6")
    b = cl.catalog_spec("C7")
    assert spec_hash(a) != spec_hash(b)
    assert spec_hash(a) == spec_hash(cl.GroupSpec(kind="named", name="C6"))


def test_two_groups_share_a_directory(tmp_path):
    g1 = cl.load_catalog_group("C6")
    g2 = cl.load_catalog_group("Q8")
    s1, _ = cached_subgroups(g1, tmp_path)
    s2, _ = cached_subgroups(g2, tmp_path)
    r1, w1 = cached_subgroups(g1, tmp_path)
    r2, w2 = cached_subgroups(g2, tmp_path)
    assert (w1, w2) == ("warm", "warm")
    assert len(r1) == len(s1) == 4
    assert len(r2) == len(s2) == 6


def test_corrupt_file_detected_and_recomputed(tmp_path, caplog):
    g = cl.load_catalog_group("C12")
    subs = cl.enumerate_subgroups(g)
    path = store_lattice(g, subs, tmp_path)

    doc = json.loads(path.read_text())
    doc["subgroups"][0] = [3]
    path.write_text(json.dumps(doc))
    with pytest.raises(CacheCorrupt, match="checksum"):
        load_lattice(g, tmp_path)

    # the convenience wrapper logs and recovers instead of failing
    with caplog.at_level(logging.WARNING, logger="cosetlab.cache"):
        recovered, status = cached_subgroups(g, tmp_path)
    assert status == "cold"
    assert any("corrupt" in r.message for r in caplog.records)
    assert [s.elements for s in recovered] == [s.elements for s in subs]
    # and the rewrite healed the file
    assert load_lattice(g, tmp_path) is not None


def test_unparseable_file_is_corrupt(tmp_path):
    g = cl.load_catalog_group("C6")
    subs = cl.enumerate_subgroups(g)
    path = store_lattice(g, subs, tmp_path)
    path.write_text("{ not json")
    with pytest.raises(CacheCorrupt):
        load_lattice(g, tmp_path)


def test_wrong_format_tag_is_corrupt(tmp_path):
    g = cl.load_catalog_group("C6")
    subs = cl.enumerate_subgroups(g)
    path = store_lattice(g, subs, tmp_path)
    doc = json.loads(path.read_text())
    doc["format"] = "cosetlab-lattice-v0"
    path.write_text(json.dumps(doc))
    with pytest.raises(CacheCorrupt, match="format"):
        load_lattice(g, tmp_path)


def test_missing_file_returns_none(tmp_path):
    g = cl.load_catalog_group("C6")
    assert load_lattice(g, tmp_path) is None


def test_cache_lattice_record(tmp_path):
    g = cl.load_catalog_group("Q8")
    rec = cache_lattice(g, tmp_path)
    assert rec.status == "cold"
    assert rec.subgroup_count == 6
    assert rec.path == lattice_path(tmp_path, rec.spec_hash)
    assert rec.path.exists()
    again = cache_lattice(g, tmp_path)
    assert again.status == "warm"
    assert again.spec_hash == rec.spec_hash


def test_group_without_spec_rejected(tmp_path):
    base = cl.load_catalog_group("C4")
    bare = cl.FiniteGroup(base.n, base.mul, base.identity, base.inv, "bare", None)
    with pytest.raises(ValueError):
        cache_lattice(bare, tmp_path)

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import cosetlab as cl
from cosetlab.errors import GroupSpecError, NotAGroup, OrderCapExceeded, UnknownFamily
from cosetlab.groups import load_group

from helpers import brute_subgroups, is_subgroup_set

# Lattice sizes from the literature; these freeze the enumeration output.
KNOWN_SUBGROUP_COUNTS = {
    "C6": 4,
    "C12": 6,
    "S3": 6,
    "S4": 30,
    "S5": 156,
    "A4": 10,
    "A5": 59,
    "Q8": 6,
    "C2xC2": 5,
    "C2xC2xC2": 16,
    "D6": 16,
}

# Latin square with two-sided identity 0 and every element an involution.
# (1*2)*2 = 3*2 = 4 but 1*(2*2) = 1, so it is not associative; and no group
# of order 5 has involutions at all.
NONASSOC_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


def _cyclic_table(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def _num_divisors(n: int) -> int:
    return sum(1 for d in range(1, n + 1) if n % d == 0)


def test_known_subgroup_counts(lattice):
    for name, want in KNOWN_SUBGROUP_COUNTS.items():
        _, subs = lattice(name)
        assert len(subs) == want, name


@pytest.mark.parametrize("name", ["C6", "C12", "S3", "D4", "Q8", "A4", "C2xC2"])
def test_enumeration_matches_brute_force(lattice, name):
    g, subs = lattice(name)
    brute = brute_subgroups(g)
    assert {frozenset(s.elements) for s in subs} == brute
    for elems in brute:
        assert is_subgroup_set(g, elems)


def test_nonassociative_loop_rejected():
    spec = cl.GroupSpec(kind="cayley", order=5, table=tuple(map(tuple, NONASSOC_LOOP)))
    with pytest.raises(NotAGroup, match="associat"):
        load_group(spec)


def test_broken_latin_row_rejected():
    rows = _cyclic_table(4)
    rows[2][3] = rows[2][2]
    spec = cl.GroupSpec(kind="cayley", order=4, table=tuple(map(tuple, rows)))
    with pytest.raises(NotAGroup):
        load_group(spec)


def test_no_identity_rejected():
    # subtraction table: Latin both ways, but no row is the identity map
    rows = [[(i - j) % 3 for j in range(3)] for i in range(3)]
    spec = cl.GroupSpec(kind="cayley", order=3, table=tuple(map(tuple, rows)))
    with pytest.raises(NotAGroup):
        load_group(spec)


def test_cyclic_tables_accepted_and_orders():
    g = load_group(cl.GroupSpec(kind="cayley", order=6, table=tuple(map(tuple, _cyclic_table(6)))))
    assert g.n == 6
    assert g.identity == 0
    assert g.element_order(1) == 6
    assert g.element_order(2) == 3
    assert g.element_order(3) == 2


def test_product_c2_c3_is_cyclic_of_order_6():
    a = cl.load_catalog_group("C2")
    b = cl.load_catalog_group("C3")
    g = cl.direct_product(a, b)
    assert g.n == 6
    assert max(g.element_order(x) for x in range(g.n)) == 6


def test_s3_permutation_ids(lattice):
    # elements are sorted one-line permutations:
    # 0=(0,1,2) 1=(0,2,1) 2=(1,0,2) 3=(1,2,0) 4=(2,0,1) 5=(2,1,0)
    from cosetlab.bitset import bits_tuple

    g, subs = lattice("S3")
    a3 = next(s for s in subs if s.order == 3)
    assert a3.elements == (0, 3, 4)
    c = cl.coset_of(1, a3)
    assert bits_tuple(c.mask) == (1, 2, 5)


def test_dihedral_convention_order_2n():
    for m in (3, 5, 12):
        g = cl.load_catalog_group(f"D{m}")
        assert g.n == 2 * m


def test_d3_matches_s3_structure(lattice):
    _, d3subs = lattice("D3")
    _, s3subs = lattice("S3")
    assert sorted(s.order for s in d3subs) == sorted(s.order for s in s3subs)


def test_q8_has_unique_involution():
    g = cl.load_catalog_group("Q8")
    orders = sorted(g.element_order(x) for x in range(8))
    assert orders == [1, 2, 4, 4, 4, 4, 4, 4]


def test_alternating_and_symmetric_orders():
    assert cl.load_catalog_group("A4").n == 12
    assert cl.load_catalog_group("A5").n == 60
    assert cl.load_catalog_group("S5").n == 120


def test_inverse_law_everywhere():
    for name in ("S4", "Q8", "D7", "C15"):
        g = cl.load_catalog_group(name)
        for x in range(g.n):
            assert g.op(x, g.inverse(x)) == g.identity
            assert g.op(g.inverse(x), x) == g.identity


def test_perm_spec_closure():
    # (0 1) and the 4-cycle generate S4
    spec = cl.GroupSpec(
        kind="perm", degree=4, generators=((1, 0, 2, 3), (1, 2, 3, 0))
    )
    g = load_group(spec)
    assert g.n == 24


def test_perm_closure_order_cap():
    spec = cl.GroupSpec(
        kind="perm", degree=4, generators=((1, 0, 2, 3), (1, 2, 3, 0))
    )
    with pytest.raises(OrderCapExceeded):
        load_group(spec, 10)


def test_cayley_order_cap():
    spec = cl.GroupSpec(kind="cayley", order=6, table=tuple(map(tuple, _cyclic_table(6))))
    with pytest.raises(OrderCapExceeded):
        load_group(spec, 5)


def test_spec_roundtrip():
    spec = cl.catalog_spec("S3xC2")
    doc = spec.to_dict()
    assert doc["format"] == "groupspec-v1"
    back = cl.GroupSpec.from_dict(doc)
    assert back == spec
    assert back.canonical_json() == spec.canonical_json()


def test_spec_rejects_unknown_fields():
    with pytest.raises(GroupSpecError, match="unknown"):
        cl.GroupSpec.from_dict({"format": "groupspec-v1", "kind": "named", "name": "C4", "bogus": 1})


def test_spec_rejects_wrong_format():
    with pytest.raises(GroupSpecError, match="format"):
        cl.GroupSpec.from_dict({"format": "groupspec-v0", "kind": "named", "name": "C4"})


def test_unknown_family_strings():
    for bad in ("E8", "D2", "S9", "A0", "Q16", "C0", ""):
        with pytest.raises((UnknownFamily, GroupSpecError)):
            load_group(cl.GroupSpec(kind="named", name=bad))


@given(n=st.integers(min_value=1, max_value=40))
@settings(max_examples=40, deadline=None)
def test_cyclic_subgroup_count_is_divisor_count(n):
    g = load_group(cl.GroupSpec(kind="cayley", order=n, table=tuple(map(tuple, _cyclic_table(n)))))
    assert len(cl.enumerate_subgroups(g)) == _num_divisors(n)


@given(
    n=st.integers(min_value=2, max_value=12),
    data=st.data(),
)
@settings(max_examples=60, deadline=None)
def test_single_entry_corruption_rejected(n, data):
    rows = _cyclic_table(n)
    i = data.draw(st.integers(0, n - 1))
    j = data.draw(st.integers(0, n - 1))
    delta = data.draw(st.integers(1, n - 1))
    rows[i][j] = (rows[i][j] + delta) % n
    spec = cl.GroupSpec(kind="cayley", order=n, table=tuple(map(tuple, rows)))
    with pytest.raises(NotAGroup):
        load_group(spec)

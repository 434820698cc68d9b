"""Left cosets, product sets, and the operations the counting layer builds on."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .bitset import bits_tuple, lowest_bit
from .errors import ConsistencyError, EmptyCosetList, ParentMismatch
from .subgroups import Subgroup, _subgroup_from_mask, intersect_all


@dataclass(frozen=True, eq=False)
class LeftCoset:
    """A left coset x*H, canonically represented by its minimal element."""

    subgroup: Subgroup
    rep: int
    mask: int

    @property
    def elements(self) -> tuple[int, ...]:
        return bits_tuple(self.mask)

    @property
    def size(self) -> int:
        return self.subgroup.order

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LeftCoset)
            and other.subgroup == self.subgroup
            and other.mask == self.mask
        )

    def __hash__(self) -> int:
        return hash((id(self.subgroup.parent), self.subgroup.mask, self.mask))

    def __repr__(self) -> str:
        return f"<LeftCoset rep {self.rep} of {self.subgroup!r}>"


@dataclass(frozen=True, eq=False)
class ProductSet:
    """The element set H*K for two subgroups of the same parent."""

    left: Subgroup
    right: Subgroup
    mask: int
    is_subgroup: bool

    @property
    def elements(self) -> tuple[int, ...]:
        return bits_tuple(self.mask)

    @property
    def size(self) -> int:
        return self.mask.bit_count()


def coset_mask(x: int, h: Subgroup) -> int:
    row = h.parent.mul[x]
    m = 0
    for e in h.elements:
        m |= 1 << row[e]
    return m


def coset_of(x: int, h: Subgroup) -> LeftCoset:
    if not 0 <= x < h.parent.n:
        raise ValueError(f"element {x} outside 0..{h.parent.n - 1}")
    m = coset_mask(x, h)
    return LeftCoset(h, lowest_bit(m), m)


def left_cosets(h: Subgroup) -> list[LeftCoset]:
    """The coset partition of the parent group, sorted by representative."""
    n = h.parent.n
    covered = 0
    out = []
    for x in range(n):
        if covered >> x & 1:
            continue
        m = coset_mask(x, h)
        covered |= m
        out.append(LeftCoset(h, x, m))
    return out


def _pair_parent(h: Subgroup, k: Subgroup):
    if h.parent is not k.parent:
        raise ParentMismatch("subgroups belong to different groups")
    return h.parent


def _product_mask(h: Subgroup, k: Subgroup) -> int:
    mul = h.parent.mul
    k_elems = k.elements
    m = 0
    for a in h.elements:
        row = mul[a]
        for b in k_elems:
            m |= 1 << row[b]
    return m


def _closed_under_mul(parent, mask: int) -> bool:
    elems = bits_tuple(mask)
    mul = parent.mul
    for a in elems:
        row = mul[a]
        for b in elems:
            if not mask >> row[b] & 1:
                return False
    return True


def product_set(h: Subgroup, k: Subgroup) -> ProductSet:
    """Materialize H*K.  Closure under multiplication must agree with H*K = K*H."""
    parent = _pair_parent(h, k)
    hk = _product_mask(h, k)
    kh = _product_mask(k, h)
    closed = _closed_under_mul(parent, hk)
    if closed != (hk == kh):
        raise ConsistencyError(
            "product-set closure test disagrees with the commutation test"
        )
    return ProductSet(h, k, hk, closed)


def promote(p: ProductSet) -> Subgroup:
    """Turn a product set that is a subgroup into a Subgroup."""
    if not p.is_subgroup:
        raise ValueError("product set is not a subgroup")
    return _subgroup_from_mask(p.left.parent, p.mask)


def cosets_of_k_in_product(h: Subgroup, k: Subgroup) -> int:
    """How many left cosets of K tile H*K, counted by direct partition."""
    _pair_parent(h, k)
    remaining = _product_mask(h, k)
    count = 0
    while remaining:
        x = lowest_bit(remaining)
        remaining &= ~coset_mask(x, k)
        count += 1
    return count


def disjointable(h: Subgroup, k: Subgroup) -> bool:
    """Whether some left coset of H misses some left coset of K.

    Decided by |H*K| < |G|; the size comes from |H||K| / |H&K|, which the
    test suite cross-checks against the materialized product set.
    """
    parent = _pair_parent(h, k)
    overlap = (h.mask & k.mask).bit_count()
    return h.order * k.order // overlap < parent.n


def coset_meet(cosets: Sequence[LeftCoset]) -> Optional[LeftCoset]:
    """Intersection of finitely many cosets: empty or a coset of the meet subgroup."""
    if not cosets:
        raise EmptyCosetList("coset_meet needs at least one coset")
    parent = cosets[0].subgroup.parent
    for c in cosets[1:]:
        if c.subgroup.parent is not parent:
            raise ParentMismatch("cosets belong to different groups")
    m = cosets[0].mask
    for c in cosets[1:]:
        m &= c.mask
    if m == 0:
        return None
    meet_sub = intersect_all([c.subgroup for c in cosets])
    if m.bit_count() != meet_sub.order:
        raise ConsistencyError("nonempty coset meet is not a coset of the meet subgroup")
    return LeftCoset(meet_sub, lowest_bit(m), m)


def touching_count(h: Subgroup, k: Subgroup) -> int:
    """How many cosets of H intersect K, by direct scan over the partition."""
    _pair_parent(h, k)
    kmask = k.mask
    return sum(1 for c in left_cosets(h) if c.mask & kmask)

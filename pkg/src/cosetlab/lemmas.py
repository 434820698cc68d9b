"""Executable law suite over subgroup pairs, triples, and nested coset pairs.

Each law carries a stable string id that downstream reports key on.  The
suite runs exhaustively when the pair/triple spaces are small enough and
falls back to seeded sampling above the configured limits.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Optional, Sequence

from .bitset import full_mask, iter_bits, lowest_bit
from .cosets import (
    _closed_under_mul,
    _product_mask,
    coset_mask,
    cosets_of_k_in_product,
    disjointable,
    left_cosets,
    product_set,
    promote,
    touching_count,
)
from .counting import DEFAULT_CENSUS_CAP, census, check_triple_inequalities, r_strict_upper
from .errors import ConsistencyError
from .groups import FiniteGroup
from .subgroups import Subgroup, enumerate_subgroups

LEMMA_IDS = (
    "L2.1.i",
    "L2.1.ii",
    "L2.1.iii",
    "L2.1.iv",
    "L2.1.v",
    "L3.2",
    "L3.3",
    "R3.1",
    "E3.1",
    "E3.2",
    "E3.4",
)

DEFAULT_PAIR_LIMIT = 1600
DEFAULT_TRIPLE_LIMIT = 8000
DEFAULT_NESTED_ORDER_LIMIT = 24


@dataclass
class LemmaStats:
    checked: int = 0
    failed: int = 0
    examples: list[str] = field(default_factory=list)

    def record(self, ok: bool, desc: str = "") -> None:
        self.checked += 1
        if not ok:
            self.failed += 1
            if len(self.examples) < 5:
                self.examples.append(desc)


@dataclass
class LemmaSuiteResult:
    group_label: str
    group_order: int
    subgroup_count: int
    pair_mode: str
    triple_mode: str
    nested_mode: str
    pairs_run: int
    triples_run: int
    nested_quadruples_run: int
    samples: int
    seed: int
    stats: dict[str, LemmaStats]

    @property
    def failures(self) -> int:
        return sum(s.failed for s in self.stats.values())

    def to_json_dict(self) -> dict:
        return {
            "group_label": self.group_label,
            "group_order": self.group_order,
            "subgroup_count": self.subgroup_count,
            "modes": {
                "pairs": self.pair_mode,
                "triples": self.triple_mode,
                "nested": self.nested_mode,
            },
            "counts": {
                "pairs": self.pairs_run,
                "triples": self.triples_run,
                "nested_quadruples": self.nested_quadruples_run,
                "samples": self.samples,
            },
            "seed": self.seed,
            "stats": {
                lid: {
                    "checked": st.checked,
                    "failed": st.failed,
                    "examples": list(st.examples),
                }
                for lid, st in self.stats.items()
            },
            "failures": self.failures,
        }


def _check_pair(
    g: FiniteGroup, h: Subgroup, k: Subgroup, stats: dict[str, LemmaStats], full: int
) -> None:
    n = g.n
    overlap = (h.mask & k.mask).bit_count()
    tag = f"{g.label}: |H|={h.order} |K|={k.order}"

    p = product_set(h, k)
    kh = _product_mask(k, h)
    closed = _closed_under_mul(g, p.mask)
    stats["L2.1.i"].record(
        closed == (p.mask == kh) and p.is_subgroup == closed, tag
    )

    stats["L2.1.ii"].record(
        cosets_of_k_in_product(h, k) == h.order // overlap, tag
    )

    if math.gcd(h.index, k.index) == 1:
        stats["L2.1.iii"].record(p.mask == full, tag)

    h_cosets = left_cosets(h)
    k_cosets = left_cosets(k)
    scan_found = False
    for a in h_cosets:
        for b in k_cosets:
            if a.mask & b.mask == 0:
                scan_found = True
                break
        if scan_found:
            break
    stats["L2.1.iv"].record(disjointable(h, k) == scan_found, tag)

    if p.mask == kh:
        m = promote(p)
        for a in h_cosets:
            am = coset_mask(a.rep, m)
            for b in k_cosets:
                if a.mask & b.mask == 0:
                    stats["L2.1.v"].record(
                        am & coset_mask(b.rep, m) == 0, tag
                    )

    meeting = sum(
        1 for a in h_cosets for b in k_cosets if a.mask & b.mask
    )
    stats["L3.2"].record(meeting == n // overlap, tag)

    stats["L3.3"].record(touching_count(h, k) == k.order // overlap, tag)


def _check_triple(
    gi: Subgroup,
    gj: Subgroup,
    gk: Subgroup,
    stats: dict[str, LemmaStats],
    census_cap: int,
) -> None:
    tag = f"{gi.parent.label}: orders ({gi.order},{gj.order},{gk.order})"
    try:
        cen = census(gi, gj, gk, max_census=census_cap)
    except ConsistencyError as exc:
        stats["L3.2"].record(False, f"{tag}: {exc}")
        return
    if cen.enumerated:
        # The census already cross-checked the enumerated common-point count
        # against the intersection index, so reaching here means it held.
        stats["L3.2"].record(True, tag)

    diag = check_triple_inequalities(gi, gj, gk)
    stats["E3.1"].record(diag.pivot_bounds_ok, tag)
    stats["E3.4"].record(
        diag.divisibility_ok and diag.scaled_divisibility_ok in (None, True), tag
    )
    if (
        diag.common_gcd is not None
        and cen.enumerated
        and cen.n_disjoint is not None
        and cen.n_disjoint > 0
    ):
        rs = [rv.r for rv in diag.r_pair]
        bound = r_strict_upper(diag.common_gcd, rs[0], rs[1], rs[2])
        stats["E3.2"].record(
            diag.r_triple.r < bound,
            f"{tag}: r={diag.r_triple.r} bound={bound}",
        )


def _nested_instances(
    g: FiniteGroup,
    g1: Subgroup,
    h1: Subgroup,
    g2: Subgroup,
    h2: Subgroup,
    stats: dict[str, LemmaStats],
) -> int:
    """Check separation of distinct H1-cosets inside one G1-coset against H2 cosets.

    Requires H1&H2 == G1&G2 elementwise (the caller filters).  For distinct
    cosets A = a*H1 and B inside a single G1-coset and any b in B, the claim
    is that A misses b*H2 entirely.
    """
    count = 0
    tag = f"{g.label}: |G1|={g1.order} |H1|={h1.order} |G2|={g2.order} |H2|={h2.order}"
    for big in left_cosets(g1):
        parts = []
        remaining = big.mask
        while remaining:
            x = lowest_bit(remaining)
            pm = coset_mask(x, h1)
            parts.append(pm)
            remaining &= ~pm
        for am in parts:
            for bm in parts:
                if am == bm:
                    continue
                for b_elem in iter_bits(bm):
                    stats["R3.1"].record(am & coset_mask(b_elem, h2) == 0, tag)
                    count += 1
    return count


def _containment_lists(subs: Sequence[Subgroup]) -> list[list[int]]:
    out: list[list[int]] = []
    for i, big in enumerate(subs):
        out.append(
            [j for j, small in enumerate(subs) if small.mask & ~big.mask == 0]
        )
    return out


def run_lemma_suite(
    g: FiniteGroup,
    subgroups: Optional[Sequence[Subgroup]] = None,
    *,
    seed: int = 0,
    sample_target: int = 2000,
    exhaustive_pair_limit: int = DEFAULT_PAIR_LIMIT,
    exhaustive_triple_limit: int = DEFAULT_TRIPLE_LIMIT,
    census_cap: int = DEFAULT_CENSUS_CAP,
    nested_order_limit: int = DEFAULT_NESTED_ORDER_LIMIT,
) -> LemmaSuiteResult:
    """Run every law over one group, exhaustively where affordable.

    Ordered pairs run exhaustively when their count is at most
    ``exhaustive_pair_limit``; subgroup multisets of size three likewise
    against ``exhaustive_triple_limit``; otherwise seeded samples of size
    ``sample_target`` are drawn.  The nested-coset law enumerates fully up
    to ``nested_order_limit`` elements and samples above it.
    """
    subs = list(subgroups) if subgroups is not None else enumerate_subgroups(g)
    m = len(subs)
    full = full_mask(g.n)
    stats = {lid: LemmaStats() for lid in LEMMA_IDS}
    rng = random.Random(seed)
    samples = 0

    if m * m <= exhaustive_pair_limit:
        pair_mode = "exhaustive"
        pairs_run = 0
        for h in subs:
            for k in subs:
                _check_pair(g, h, k, stats, full)
                pairs_run += 1
    else:
        pair_mode = "sampled"
        pairs_run = sample_target
        for _ in range(sample_target):
            h = subs[rng.randrange(m)]
            k = subs[rng.randrange(m)]
            _check_pair(g, h, k, stats, full)
            samples += 1

    triple_total = math.comb(m + 2, 3)
    if triple_total <= exhaustive_triple_limit:
        triple_mode = "exhaustive"
        triples_run = 0
        for i, j, t in combinations_with_replacement(range(m), 3):
            _check_triple(subs[i], subs[j], subs[t], stats, census_cap)
            triples_run += 1
    else:
        triple_mode = "sampled"
        triples_run = sample_target
        for _ in range(sample_target):
            i, j, t = sorted(rng.randrange(m) for _ in range(3))
            _check_triple(subs[i], subs[j], subs[t], stats, census_cap)
            samples += 1

    contained = _containment_lists(subs)
    nested_run = 0
    if g.n <= nested_order_limit:
        nested_mode = "exhaustive"
        for i1, g1 in enumerate(subs):
            proper = [j for j in contained[i1] if subs[j].order < g1.order]
            for j1 in proper:
                h1 = subs[j1]
                for i2, g2 in enumerate(subs):
                    need = g1.mask & g2.mask
                    for j2 in contained[i2]:
                        h2 = subs[j2]
                        if h1.mask & h2.mask != need:
                            continue
                        _nested_instances(g, g1, h1, g2, h2, stats)
                        nested_run += 1
    else:
        nested_mode = "sampled"
        for _ in range(sample_target):
            i1 = rng.randrange(m)
            g1 = subs[i1]
            proper = [j for j in contained[i1] if subs[j].order < g1.order]
            if not proper:
                samples += 1
                continue
            h1 = subs[rng.choice(proper)]
            i2 = rng.randrange(m)
            g2 = subs[i2]
            h2 = subs[rng.choice(contained[i2])]
            samples += 1
            if h1.mask & h2.mask != g1.mask & g2.mask:
                continue
            _nested_instances(g, g1, h1, g2, h2, stats)
            nested_run += 1

    return LemmaSuiteResult(
        group_label=g.label,
        group_order=g.n,
        subgroup_count=m,
        pair_mode=pair_mode,
        triple_mode=triple_mode,
        nested_mode=nested_mode,
        pairs_run=pairs_run,
        triples_run=triples_run,
        nested_quadruples_run=nested_run,
        samples=samples,
        seed=seed,
        stats=stats,
    )

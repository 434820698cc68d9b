"""Search for pairwise disjoint coset families whose index gcds stay below k.

For k up to 4 no such family exists in any finite group, so every hit at
those sizes is treated as an implementation bug.  For k of 5 or more the
question is open and hits would be genuine discoveries.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .bitset import lowest_bit
from .cosets import coset_mask, disjointable, left_cosets
from .errors import CliqueCapExceeded, ConsistencyError, ParentMismatch
from .groups import FiniteGroup
from .subgroups import Subgroup, enumerate_subgroups, subgroup_from_elements

DEFAULT_CLIQUE_CAP = 10**6
K_MIN = 2
K_MAX = 6
OPEN_RANGE_NOTE = "conjecture open - absence of violations is evidence, not proof"


@dataclass(frozen=True)
class PairStats:
    """Compatibility facts for one unordered pair of lattice positions."""

    i: int
    j: int
    gcd_index: int
    disjointable: bool


@dataclass(frozen=True)
class Violation:
    """A family of pairwise disjoint cosets, one per listed subgroup."""

    k: int
    subgroup_elements: tuple[tuple[int, ...], ...]
    coset_reps: tuple[int, ...]
    gcd_matrix: tuple[tuple[int, ...], ...]

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "subgroups": [list(t) for t in self.subgroup_elements],
            "coset_reps": list(self.coset_reps),
            "gcd_matrix": [list(r) for r in self.gcd_matrix],
        }


@dataclass
class VerificationReport:
    """Outcome of one exhaustive run at a fixed family size k."""

    group_label: str
    group_order: int
    k: int
    subgroup_count: int
    candidate_clique_count: int
    tuples_examined: int
    violations: list[Violation]
    elapsed_seconds: float
    cache_status: str
    note: Optional[str] = None

    @property
    def confirmed(self) -> bool:
        return not self.violations

    def stable_dict(self) -> dict:
        d = {
            "k": self.k,
            "group_label": self.group_label,
            "group_order": self.group_order,
            "subgroup_count": self.subgroup_count,
            "candidate_cliques": self.candidate_clique_count,
            "tuples_examined": self.tuples_examined,
            "violations": [v.to_json_dict() for v in self.violations],
            "status": self.status,
        }
        if self.note is not None:
            d["note"] = self.note
        return d

    @property
    def status(self) -> str:
        if self.violations:
            return "violated" if self.k >= 5 else "violated (implementation bug suspected)"
        return "confirmed" if self.k <= 4 else "no violations found"


def pair_table(
    g: FiniteGroup, subgroups: Optional[Sequence[Subgroup]] = None
) -> list[PairStats]:
    """Index gcd and disjointability for every unordered subgroup pair."""
    subs = list(subgroups) if subgroups is not None else enumerate_subgroups(g)
    out = []
    for i, h in enumerate(subs):
        for j in range(i, len(subs)):
            k = subs[j]
            out.append(
                PairStats(i, j, math.gcd(h.index, k.index), disjointable(h, k))
            )
    return out


def candidate_cliques(
    g: FiniteGroup,
    k: int,
    *,
    subgroups: Optional[Sequence[Subgroup]] = None,
    pair_stats: Optional[Sequence[PairStats]] = None,
    max_cliques: int = DEFAULT_CLIQUE_CAP,
) -> list[tuple[int, ...]]:
    """Size-k subgroup multisets whose pairs all have gcd < k and are disjointable.

    Emitted in lexicographic order over sorted lattice positions.  Every
    multiset prefix the search visits counts against the cap, so the cap
    bounds work done, not only output size.
    """
    subs = list(subgroups) if subgroups is not None else enumerate_subgroups(g)
    m = len(subs)
    if pair_stats is None:
        pair_stats = pair_table(g, subs)
    compat = [[False] * m for _ in range(m)]
    for st in pair_stats:
        ok = st.gcd_index < k and st.disjointable
        compat[st.i][st.j] = ok
        compat[st.j][st.i] = ok

    out: list[tuple[int, ...]] = []
    visited = 0

    def extend(prefix: tuple[int, ...], start: int) -> None:
        nonlocal visited
        for j in range(start, m):
            row = compat[j]
            if all(row[p] for p in prefix):
                visited += 1
                if visited > max_cliques:
                    raise CliqueCapExceeded(
                        f"clique search in {g.label} passed {max_cliques} prefixes"
                    )
                cur = prefix + (j,)
                if len(cur) == k:
                    out.append(cur)
                else:
                    extend(cur, j)

    extend((), 0)
    return out


def _coset_data(sub: Subgroup) -> list[tuple[int, int]]:
    return [(c.rep, c.mask) for c in left_cosets(sub)]


def _search_reps(
    ordered: Sequence[Subgroup],
    coset_lists: Sequence[list[tuple[int, int]]],
) -> tuple[Optional[tuple[int, ...]], int]:
    """Backtracking over coset choices; slot 0 is pinned to the subgroup itself.

    Any disjoint family can be left-translated so its first coset contains
    the identity, so pinning loses nothing.  Returns the reps found (in the
    given slot order) and the number of coset placements attempted.
    """
    k = len(ordered)
    examined = 1  # the pinned slot
    first_mask = ordered[0].mask
    reps = [lowest_bit(first_mask)] + [0] * (k - 1)
    masks = [first_mask] + [0] * (k - 1)

    def place(slot: int) -> bool:
        nonlocal examined
        for rep, mask in coset_lists[slot]:
            examined += 1
            ok = True
            for prev in range(slot):
                if masks[prev] & mask:
                    ok = False
                    break
            if not ok:
                continue
            reps[slot] = rep
            masks[slot] = mask
            if slot + 1 == k or place(slot + 1):
                return True
        return False

    if k == 1 or place(1):
        return tuple(reps), examined
    return None, examined


def search_disjoint_tuple(subgroups: Sequence[Subgroup]) -> Optional[Violation]:
    """Find any family of pairwise disjoint cosets, one per given subgroup.

    Slots are searched largest subgroup first (fewest cosets first), but the
    returned family is expressed in the caller's slot order: coset_reps[i]
    is a representative for subgroups[i].  The family is re-verified for
    pairwise disjointness before it is returned.  The caller decides what
    the find means; no gcd filtering happens here.
    """
    found, _ = _search_with_count(subgroups)
    return found


def _search_with_count(
    subgroups: Sequence[Subgroup],
) -> tuple[Optional[Violation], int]:
    if not subgroups:
        raise ValueError("search needs at least one subgroup")
    parent = subgroups[0].parent
    for s in subgroups[1:]:
        if s.parent is not parent:
            raise ParentMismatch("search subgroups belong to different groups")
    order = sorted(range(len(subgroups)), key=lambda t: -subgroups[t].order)
    ordered = [subgroups[t] for t in order]
    coset_lists: list[list[tuple[int, int]]] = [[]]
    for sub in ordered[1:]:
        coset_lists.append(_coset_data(sub))
    found, examined = _search_reps(ordered, coset_lists)
    if found is None:
        return None, examined

    # undo the search permutation so reps line up with the caller's slots
    reps = [0] * len(subgroups)
    for slot, t in enumerate(order):
        reps[t] = found[slot]
    masks = [coset_mask(rep, sub) for rep, sub in zip(reps, subgroups)]
    for a in range(len(masks)):
        for b in range(a + 1, len(masks)):
            if masks[a] & masks[b]:
                raise ConsistencyError("search returned a non-disjoint family")
    k = len(subgroups)
    gcds = tuple(
        tuple(math.gcd(subgroups[a].index, subgroups[b].index) for b in range(k))
        for a in range(k)
    )
    violation = Violation(
        k=k,
        subgroup_elements=tuple(s.elements for s in subgroups),
        coset_reps=tuple(reps),
        gcd_matrix=gcds,
    )
    return violation, examined


# Worker-side state for the process pool, set once per worker by _init_worker.
_POOL_CTX: Optional[dict] = None


def _init_worker(payload) -> None:
    global _POOL_CTX
    n, mul, identity, inv, label, element_sets = payload
    group = FiniteGroup(n, mul, identity, inv, label)
    subs = [
        subgroup_from_elements(group, elems, validate=False) for elems in element_sets
    ]
    _POOL_CTX = {"subs": subs}


def _pool_task(clique: tuple[int, ...]) -> tuple[Optional[Violation], int]:
    assert _POOL_CTX is not None
    subs = [_POOL_CTX["subs"][i] for i in clique]
    return _search_with_count(subs)


def verify_group(
    g: FiniteGroup,
    k: int,
    *,
    subgroups: Optional[Sequence[Subgroup]] = None,
    pair_stats: Optional[Sequence[PairStats]] = None,
    max_cliques: int = DEFAULT_CLIQUE_CAP,
    jobs: int = 1,
    cache_status: str = "disabled",
) -> VerificationReport:
    """Exhaustively search one group for disjoint k-families below the gcd bar.

    The clique list is deterministic, searches run per clique in that order,
    and results merge positionally, so reports are identical across worker
    counts.
    """
    if not K_MIN <= k <= K_MAX:
        raise ValueError(f"k must lie in [{K_MIN}, {K_MAX}]")
    t0 = time.perf_counter()
    subs = list(subgroups) if subgroups is not None else enumerate_subgroups(g)
    stats = pair_stats if pair_stats is not None else pair_table(g, subs)
    cliques = candidate_cliques(
        g, k, subgroups=subs, pair_stats=stats, max_cliques=max_cliques
    )

    results: list[tuple[Optional[Violation], int]]
    if jobs > 1 and len(cliques) > 1:
        payload = (
            g.n,
            g.mul,
            g.identity,
            g.inv,
            g.label,
            [s.elements for s in subs],
        )
        chunk = max(1, len(cliques) // (jobs * 8))
        with ProcessPoolExecutor(
            max_workers=jobs, initializer=_init_worker, initargs=(payload,)
        ) as pool:
            results = list(pool.map(_pool_task, cliques, chunksize=chunk))
    else:
        results = [
            _search_with_count([subs[i] for i in clique]) for clique in cliques
        ]

    violations: list[Violation] = []
    examined_total = 0
    for violation, examined in results:
        examined_total += examined
        if violation is not None:
            off_diag = [
                violation.gcd_matrix[a][b]
                for a in range(k)
                for b in range(k)
                if a != b
            ]
            if any(v >= k for v in off_diag):
                raise ConsistencyError(
                    "candidate clique contained a pair at or above the gcd bar"
                )
            violations.append(violation)

    return VerificationReport(
        group_label=g.label,
        group_order=g.n,
        k=k,
        subgroup_count=len(subs),
        candidate_clique_count=len(cliques),
        tuples_examined=examined_total,
        violations=violations,
        elapsed_seconds=time.perf_counter() - t0,
        cache_status=cache_status,
        note=OPEN_RANGE_NOTE if k >= 5 and not violations else None,
    )

"""Exact search for interval partitions of a characteristic poset.

Computing the Stanley depth of I/J reduces to a covering problem: partition
the poset into divisibility intervals [u_i, v_i] so that every top v_i meets
the box ceiling in at least s coordinates, then maximize s.  The search here
is an exact-cover style backtracker over bitmask states:

* the branch bottom is always the lexicographically least uncovered element
  (lex order extends divisibility, so that element can only be covered by an
  interval starting at itself);
* candidate tops are tried in decreasing degree, then lex order;
* a sound counting prune cuts branches where some degree level cannot supply
  the forced degree-(d+1) elements of the intervals that still must start at
  degree d.

Feasibility at s = 0 (singletons) and, for up-closed posets, at s = 1
(fibers along the last coordinate) admit direct constructions, so the
backtracker only ever runs where real search is needed.  Every certificate
is re-checked by an independent marking verifier before it is returned.
"""

from __future__ import annotations

import itertools
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .monomials import (
    Monomial,
    MonomialIdeal,
    QuotientPresentation,
    contains,
    divides,
    maximal_power,
)
from .posets import CharPoset, build_poset, default_box


class SearchTimeout(Exception):
    """The wall-clock budget of a decision call ran out.

    Distinct from infeasibility: no conclusion about the target is implied.
    """

    def __init__(self, message: str, stats: "SearchStats"):
        super().__init__(message)
        self.stats = stats


class InternalVerificationError(AssertionError):
    """A solver result failed its own independent verifier (a bug guard)."""


@dataclass(frozen=True)
class Interval:
    bottom: Monomial
    top: Monomial


@dataclass(frozen=True)
class IntervalPartition:
    intervals: tuple[Interval, ...]

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)


@dataclass
class SearchStats:
    nodes: int = 0
    prunes: int = 0
    elapsed_s: float = 0.0

    def merge(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.prunes += other.prunes
        self.elapsed_s += other.elapsed_s


@dataclass(frozen=True)
class SdepthCertificate:
    """A witnessed Stanley depth value: s together with a partition whose
    interval tops all have rank at least s (and at least one exactly s)."""

    s: int
    partition: IntervalPartition
    stats: SearchStats
    poset: CharPoset


@dataclass(frozen=True)
class PartitionCheck:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class StanleyDecomposition:
    """Stanley spaces (m_i, Z_i): the monomial m_i times the polynomial
    subring on the 1-based variable indices Z_i."""

    arity: int
    spaces: tuple[tuple[Monomial, frozenset[int]], ...]

    @property
    def sdepth(self) -> int | None:
        if not self.spaces:
            return None
        return min(len(z) for _, z in self.spaces)


_FAILED_CACHE_MAX = 1 << 20


class _Searcher:
    """Per-poset bitmask machinery shared by all decision calls."""

    def __init__(self, poset: CharPoset):
        self.poset = poset
        elems = poset.elements
        self.m = len(elems)
        self.full_mask = (1 << self.m) - 1
        self.deg = [sum(u) for u in elems]
        self.rho = [poset.rho(u) for u in elems]
        self.up_closed = poset.is_up_closed()
        self._lower, self._up = self._link_masks()
        self._multiples_cache: dict[int, list[int]] = {}
        self._candidates_cache: dict[tuple[int, int], list[int]] = {}
        self._interval_cache: dict[tuple[int, int], int | None] = {}
        sys.setrecursionlimit(max(sys.getrecursionlimit(), 2 * self.m + 500))

    def _link_masks(self) -> tuple[list[int], list[int]]:
        """lower[i]: bitmask of the proper poset divisors of element i;
        up[i]: bitmask of its covers u*x_j inside the poset.  The lower
        masks are filled by dynamic programming over the whole box so that
        divisors remain visible across holes of quotient posets."""
        poset = self.poset
        n = poset.arity
        box_lower: dict[Monomial, int] = {}
        lower_by_elem: dict[Monomial, int] = {}
        for b in itertools.product(*(range(e + 1) for e in poset.g)):
            mask = 0
            for j in range(n):
                if b[j] > 0:
                    p = b[:j] + (b[j] - 1,) + b[j + 1:]
                    mask |= box_lower[p]
                    if p in poset:
                        mask |= 1 << poset.position(p)
            box_lower[b] = mask
            if b in poset:
                lower_by_elem[b] = mask
        lower = [lower_by_elem[u] for u in poset.elements]
        up = [0] * self.m
        for i, u in enumerate(poset.elements):
            mask = 0
            for j in range(n):
                if u[j] < poset.g[j]:
                    v = u[:j] + (u[j] + 1,) + u[j + 1:]
                    if v in poset:
                        mask |= 1 << poset.position(v)
            up[i] = mask
        return lower, up

    def _multiples(self, i: int) -> list[int]:
        """Element indices v with elems[i] | elems[v], sorted by decreasing
        degree then lex order (the candidate-top order)."""
        cached = self._multiples_cache.get(i)
        if cached is None:
            u = self.poset.elements[i]
            cached = [j for j, v in enumerate(self.poset.elements)
                      if divides(u, v)]
            cached.sort(key=lambda j: (-self.deg[j], self.poset.elements[j]))
            self._multiples_cache[i] = cached
        return cached

    def _candidates(self, i: int, s: int) -> list[int]:
        key = (i, s)
        cached = self._candidates_cache.get(key)
        if cached is None:
            cached = [j for j in self._multiples(i) if self.rho[j] >= s]
            self._candidates_cache[key] = cached
        return cached

    def interval_mask(self, i: int, j: int) -> int | None:
        """Bitmask of the box interval [elems[i], elems[j]], or None when
        some box monomial in between is missing from the poset."""
        key = (i, j)
        if key in self._interval_cache:
            return self._interval_cache[key]
        u = self.poset.elements[i]
        v = self.poset.elements[j]
        mask = 0
        for w in itertools.product(*(range(a, b + 1) for a, b in zip(u, v))):
            if w not in self.poset:
                mask = None
                break
            mask |= 1 << self.poset.position(w)
        self._interval_cache[key] = mask
        return mask

    def budget_feasible(self, uncovered: int, s: int) -> bool:
        """Counting prune.  Every element minimal in the uncovered set must
        start an interval, which forces at least s - rho(bottom) uncovered
        covers of it one degree up; the forced elements of distinct bottoms
        are distinct.  Returns False only when no completion can exist."""
        if s <= 0:
            return True
        level_count: dict[int, int] = {}
        needs: dict[int, int] = {}
        u = uncovered
        while u:
            low = u & -u
            i = low.bit_length() - 1
            u ^= low
            d = self.deg[i]
            level_count[d] = level_count.get(d, 0) + 1
            if self._lower[i] & uncovered == 0:
                need = s - self.rho[i]
                if need > 0:
                    if (self._up[i] & uncovered).bit_count() < need:
                        return False
                    needs[d] = needs.get(d, 0) + need
        for d, req in needs.items():
            if req > level_count.get(d + 1, 0):
                return False
        return True

    def decide(self, s: int, timeout_s: float, use_prune: bool,
               stats: SearchStats) -> list[tuple[int, int]] | None:
        """Exhaustive search for a full cover with all tops of rank >= s.
        Returns (bottom, top) index pairs or None if none exists."""
        deadline = time.monotonic() + timeout_s
        failed: set[int] = set()

        def rec(uncovered: int) -> list[tuple[int, int]] | None:
            if uncovered == 0:
                return []
            stats.nodes += 1
            if time.monotonic() > deadline:
                raise SearchTimeout(
                    f"decision at target {s} exceeded {timeout_s:g}s", stats)
            if use_prune and not self.budget_feasible(uncovered, s):
                stats.prunes += 1
                return None
            if uncovered in failed:
                return None
            w = (uncovered & -uncovered).bit_length() - 1
            for v in self._candidates(w, s):
                mask = self.interval_mask(w, v)
                if mask is None or mask & uncovered != mask:
                    continue
                rest = rec(uncovered & ~mask)
                if rest is not None:
                    rest.append((w, v))
                    return rest
            if len(failed) < _FAILED_CACHE_MAX:
                failed.add(uncovered)
            return None

        chosen = rec(self.full_mask)
        if chosen is None:
            return None
        chosen.reverse()
        return chosen

    def singleton_partition(self) -> list[tuple[int, int]]:
        return [(i, i) for i in range(self.m)]

    def fiber_partition(self) -> list[tuple[int, int]]:
        """Partition an up-closed poset into last-coordinate fibers; each
        fiber is a full interval whose top sits on the ceiling, so every
        top has rank >= 1."""
        assert self.up_closed
        poset = self.poset
        out: list[tuple[int, int]] = []
        i = 0
        elems = poset.elements
        while i < self.m:
            prefix = elems[i][:-1]
            j = i
            while j + 1 < self.m and elems[j + 1][:-1] == prefix:
                j += 1
            top = prefix + (poset.g[-1],)
            assert elems[j] == top and j - i == top[-1] - elems[i][-1]
            out.append((i, j))
            i = j + 1
        return out

    def intrinsic_upper_bound(self) -> int:
        """Largest s any partition could reach: each minimal poset element
        must start an interval, whose top is one of its valid candidates."""
        n = self.poset.arity
        if self.m == 0 or self.up_closed:
            return n
        ub = n
        for i in range(self.m):
            if self._lower[i]:
                continue
            best = 0
            for v in self._multiples(i):
                if self.rho[v] > best and self.interval_mask(i, v) is not None:
                    best = self.rho[v]
            ub = min(ub, best)
            if ub == 0:
                break
        return ub


def _get_searcher(poset: CharPoset) -> _Searcher:
    searcher = getattr(poset, "_searcher", None)
    if searcher is None:
        searcher = _Searcher(poset)
        poset._searcher = searcher
    return searcher


def _pairs_to_partition(poset: CharPoset,
                        pairs: list[tuple[int, int]]) -> IntervalPartition:
    elems = poset.elements
    return IntervalPartition(tuple(
        Interval(elems[i], elems[j]) for i, j in pairs))


def exists_partition(poset: CharPoset, s: int, *, timeout_s: float = 60.0,
                     use_prune: bool = True,
                     stats: SearchStats | None = None) -> IntervalPartition | None:
    """Exact decision: a partition with every top of rank >= s, or None.

    Raises SearchTimeout when the budget runs out, which is reported
    distinctly from infeasibility.
    """
    if not 0 <= s <= poset.arity:
        raise ValueError(f"target {s} outside [0, {poset.arity}]")
    if stats is None:
        stats = SearchStats()
    searcher = _get_searcher(poset)
    if searcher.m == 0:
        return IntervalPartition(())
    start = time.monotonic()
    try:
        if s == 0:
            pairs = searcher.singleton_partition()
        elif s == 1 and searcher.up_closed:
            pairs = searcher.fiber_partition()
        else:
            pairs = searcher.decide(s, timeout_s, use_prune, stats)
        if pairs is None:
            return None
        return _pairs_to_partition(poset, pairs)
    finally:
        stats.elapsed_s += time.monotonic() - start


def verify_partition(poset: CharPoset, partition: IntervalPartition,
                     s: int) -> PartitionCheck:
    """Independent certificate checker: interval containment in the poset,
    pairwise disjointness, exact cover, and min rank of tops >= s.  Linear
    in the poset size, by marking; never trusts solver internals."""
    seen: set[Monomial] = set()
    for interval in partition:
        bottom, top = tuple(interval.bottom), tuple(interval.top)
        if bottom not in poset:
            return PartitionCheck(False, f"bottom {bottom} is not a poset element")
        if top not in poset:
            return PartitionCheck(False, f"top {top} is not a poset element")
        if not divides(bottom, top):
            return PartitionCheck(False, f"bottom {bottom} does not divide top {top}")
        if poset.rho(top) < s:
            return PartitionCheck(
                False, f"top {top} has rank {poset.rho(top)} < {s}")
        for w in itertools.product(*(range(a, b + 1)
                                     for a, b in zip(bottom, top))):
            if w not in poset:
                return PartitionCheck(
                    False, f"interval [{bottom}, {top}] leaves the poset at {w}")
            if w in seen:
                return PartitionCheck(False, f"double cover at {w}")
            seen.add(w)
    if len(seen) != len(poset):
        missing = next(u for u in poset.elements if u not in seen)
        return PartitionCheck(False, f"uncovered element {missing}")
    return PartitionCheck(True)


def counting_prune(poset: CharPoset, s: int, uncovered) -> bool:
    """Public form of the level-budget feasibility test.

    `uncovered` is an iterable of monomials still to be covered; the result
    is False only when no completion with all top ranks >= s can exist.
    """
    if s <= 0:
        return True
    searcher = _get_searcher(poset)
    mask = 0
    for u in uncovered:
        mask |= 1 << poset.position(u)
    return searcher.budget_feasible(mask, s)


def sdepth_poset(poset: CharPoset, *, timeout_s: float = 60.0,
                 use_prune: bool = True, upper_bound: int | None = None,
                 threads: int = 1) -> SdepthCertificate:
    """Maximize s by descending scan from the upper bound; the first
    feasible target wins and its partition is the certificate."""
    if len(poset) == 0:
        raise ValueError("the poset is empty (the quotient module is zero)")
    searcher = _get_searcher(poset)
    ub = searcher.intrinsic_upper_bound()
    if upper_bound is not None:
        ub = min(ub, upper_bound)
    start = time.monotonic()
    total = SearchStats()
    if threads > 1:
        result = _scan_parallel(poset, ub, timeout_s, use_prune, threads, total)
    else:
        result = _scan_sequential(poset, ub, timeout_s, use_prune, total)
    s, partition = result
    total.elapsed_s = time.monotonic() - start
    check = verify_partition(poset, partition, s)
    if not check:
        raise InternalVerificationError(check.reason)
    witnessed = min(poset.rho(iv.top) for iv in partition)
    if witnessed != s:
        raise InternalVerificationError(
            f"scan found target {s} but the partition witnesses {witnessed}")
    return SdepthCertificate(s, partition, total, poset)


def _scan_sequential(poset, ub, timeout_s, use_prune, total):
    for s in range(ub, -1, -1):
        stats = SearchStats()
        try:
            partition = exists_partition(poset, s, timeout_s=timeout_s,
                                         use_prune=use_prune, stats=stats)
        finally:
            total.merge(stats)
        if partition is not None:
            return s, partition
    raise AssertionError("target 0 is always feasible on a nonempty poset")


def _scan_parallel(poset, ub, timeout_s, use_prune, threads, total):
    """Decide all targets concurrently.  The returned value and partition
    are identical to the sequential scan; only the stats may differ."""
    targets = list(range(ub, -1, -1))

    def run(s):
        stats = SearchStats()
        try:
            partition = exists_partition(poset, s, timeout_s=timeout_s,
                                         use_prune=use_prune, stats=stats)
            return s, partition, stats, None
        except SearchTimeout as exc:
            return s, None, stats, exc

    with ThreadPoolExecutor(max_workers=threads) as pool:
        outcomes = list(pool.map(run, targets))
    best: tuple[int, IntervalPartition] | None = None
    for s, partition, stats, exc in outcomes:
        total.merge(stats)
        if partition is not None and best is None:
            best = (s, partition)
        if exc is not None and (best is None or s > best[0]):
            # a timeout above the best feasible target leaves the maximum
            # unresolved, exactly as in the sequential scan
            raise exc
    if best is None:
        raise AssertionError("target 0 is always feasible on a nonempty poset")
    return best


def _pure_power_degree(ideal: MonomialIdeal) -> int | None:
    """k when the ideal is the k-th power of the maximal ideal, else None."""
    if ideal.is_zero or ideal.is_unit:
        return None
    k = sum(ideal.generators[0])
    if ideal.generators == maximal_power(ideal.arity, k).generators:
        return k
    return None


def sdepth_ideal(ideal: MonomialIdeal, *, g: Monomial | None = None,
                 timeout_s: float = 60.0, use_prune: bool = True,
                 threads: int = 1) -> SdepthCertificate:
    """Stanley depth of a nonzero monomial ideal, with certificate."""
    if ideal.is_zero:
        raise ValueError("the zero ideal has no Stanley depth")
    poset = build_poset(ideal, None, g)
    ub = ideal.arity
    k = _pure_power_degree(ideal)
    if k is not None:
        # scan from one above the conjectured value; the counting prune
        # settles the region above it immediately
        ub = min(ub, -(-ideal.arity // (k + 1)) + 1)
    return sdepth_poset(poset, timeout_s=timeout_s, use_prune=use_prune,
                        upper_bound=ub, threads=threads)


def sdepth_quotient(numerator: MonomialIdeal, denominator: MonomialIdeal, *,
                    g: Monomial | None = None, timeout_s: float = 60.0,
                    use_prune: bool = True, threads: int = 1) -> SdepthCertificate:
    """Stanley depth of I/J (S/I when the numerator is the unit ideal)."""
    QuotientPresentation(numerator, denominator)
    poset = build_poset(numerator, denominator, g)
    ub = numerator.arity
    if not denominator.is_zero and len(poset) > 0:
        ub -= 1  # a proper quotient has torsion, hence is not free
    return sdepth_poset(poset, timeout_s=timeout_s, use_prune=use_prune,
                        upper_bound=ub, threads=threads)


def to_stanley_decomposition(poset: CharPoset,
                             partition: IntervalPartition) -> StanleyDecomposition:
    """Convert a verified partition into Stanley spaces: interval [u, v]
    becomes u * K[Z] with Z the variables where v meets the ceiling."""
    check = verify_partition(poset, partition, 0)
    if not check:
        raise ValueError(f"refusing to convert an invalid partition: {check.reason}")
    spaces = []
    for interval in partition:
        z = frozenset(j + 1 for j in range(poset.arity)
                      if interval.top[j] == poset.g[j])
        spaces.append((interval.bottom, z))
    return StanleyDecomposition(poset.arity, tuple(spaces))


@dataclass(frozen=True)
class DecompositionCheck:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_stanley_decomposition(numerator: MonomialIdeal,
                                 denominator: MonomialIdeal,
                                 decomposition: StanleyDecomposition,
                                 cap: int) -> DecompositionCheck:
    """Degreewise check of the direct-sum property: inside the box of
    monomials with all coordinates <= cap, every monomial of I minus J must
    lie in exactly one space, and no other monomial in any."""
    n = numerator.arity
    g = default_box(numerator, denominator)
    if cap < sum(g):
        raise ValueError(f"cap {cap} is below the box degree {sum(g)}")
    cover: dict[Monomial, int] = {}
    for m, z in decomposition.spaces:
        if len(m) != n:
            return DecompositionCheck(False, f"space monomial {m} has wrong arity")
        if any(e > cap for e in m):
            continue  # no points inside the check box
        ranges = [range(m[j], cap + 1) if (j + 1) in z else (m[j],)
                  for j in range(n)]
        for w in itertools.product(*ranges):
            cover[w] = cover.get(w, 0) + 1
    for w in itertools.product(range(cap + 1), repeat=n):
        member = contains(numerator, w) and not contains(denominator, w)
        hits = cover.get(w, 0)
        if member and hits != 1:
            kind = "uncovered" if hits == 0 else f"covered {hits} times"
            return DecompositionCheck(False, f"module monomial {w} is {kind}")
        if not member and hits != 0:
            return DecompositionCheck(False, f"non-module monomial {w} is covered")
    return DecompositionCheck(True)

"""Brute-force ground truth over all labeled trees of a degree sequence.

Labeled trees on 1..n are in bijection with Prüfer codes of length n - 2,
and the trees realizing a fixed degree sequence correspond exactly to the
arrangements of the multiset that repeats label i exactly d_i - 1 times.
Enumerating the arrangements in lexicographic order therefore visits every
realization exactly once, in a deterministic order that can be split into
contiguous rank ranges for parallel processing.

Counts are exact arbitrary-precision integers throughout; nothing here is
approximate except the optional sampling mode of the conjecture scan, which
is clearly flagged as such in its report.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .degseq import DegreeSequence, bounds
from .errors import EnumerationCapExceeded, LabelOutOfRange
from .treegraph import Edge, LabeledTree, from_valid_edges

DEFAULT_ENUMERATION_CAP = 10**8
DEFAULT_SAMPLE_BUDGET = 10_000

PrueferCode = tuple[int, ...]

_MASK64 = (1 << 64) - 1


# ---------------------------------------------------------------------------
# Prüfer bijection
# ---------------------------------------------------------------------------


def _decode_edges(code: Sequence[int], n: int) -> list[Edge]:
    """Edges of the unique tree with this code (labels assumed valid).

    Pointer variant of the classic decode: the smallest current leaf is
    joined to the next code symbol; the final leaf is joined to n.
    """
    if n == 2:
        return [(1, 2)]
    deg = [1] * (n + 1)
    for x in code:
        deg[x] += 1
    ptr = 1
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    edges: list[Edge] = []
    for x in code:
        edges.append((leaf, x) if leaf < x else (x, leaf))
        deg[x] -= 1
        if x < ptr and deg[x] == 1:
            leaf = x
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n))
    return edges


def prufer_decode(code: Sequence[int], n: int) -> LabeledTree:
    """The unique labeled tree on 1..n with Prüfer code ``code``.

    Vertex i ends up with degree (occurrences of i in the code) + 1.
    """
    if n < 2:
        raise LabelOutOfRange(f"need n >= 2, got {n}")
    if len(code) != n - 2:
        raise LabelOutOfRange(f"code length {len(code)} != n - 2 = {n - 2}")
    for x in code:
        if not (1 <= x <= n):
            raise LabelOutOfRange(f"code symbol {x} outside 1..{n}")
    return from_valid_edges(n, _decode_edges(code, n))


def prufer_encode(tree: LabeledTree) -> PrueferCode:
    """Inverse of :func:`prufer_decode`: strip the smallest leaf, record its
    neighbor, repeat until two vertices remain."""
    n = tree.n
    if n == 2:
        return ()
    deg = [0] * (n + 1)
    alive = [True] * (n + 1)
    heap = []
    for v in range(1, n + 1):
        deg[v] = tree.degree(v)
        if deg[v] == 1:
            heap.append(v)
    heapq.heapify(heap)
    code = []
    for _ in range(n - 2):
        while True:
            v = heapq.heappop(heap)
            if alive[v] and deg[v] == 1:
                break
        u = next(w for w in tree.neighbors(v) if alive[w])
        code.append(u)
        alive[v] = False
        deg[u] -= 1
        if deg[u] == 1:
            heapq.heappush(heap, u)
    return tuple(code)


# ---------------------------------------------------------------------------
# Counting and the symbol multiset
# ---------------------------------------------------------------------------


def count_trees(s: DegreeSequence) -> int:
    """Number of labeled trees realizing ``s``: (n-2)! / prod (d_i - 1)!."""
    total = math.factorial(s.n - 2)
    for d in s.degrees:
        total //= math.factorial(d - 1)
    return total


def _symbol_multiset(s: DegreeSequence) -> list[int]:
    """Prüfer symbols for ``s``: label i repeated d_i - 1 times, ascending."""
    sym: list[int] = []
    for v, d in enumerate(s.degrees, start=1):
        sym.extend([v] * (d - 1))
    return sym


def _next_permutation(a: list[int]) -> bool:
    """Advance ``a`` to its lexicographic successor in place.

    Returns False (leaving ``a`` sorted descending) once the last
    arrangement has been reached.
    """
    i = len(a) - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(a) - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1 :] = a[: i : -1] if i >= 0 else a[::-1]
    return True


def _arrangements(counts: dict[int, int], length: int) -> int:
    total = math.factorial(length)
    for c in counts.values():
        total //= math.factorial(c)
    return total


def _unrank_permutation(s: DegreeSequence, rank: int) -> list[int]:
    """The arrangement of the symbol multiset at lexicographic ``rank``."""
    counts: dict[int, int] = {}
    for v, d in enumerate(s.degrees, start=1):
        if d > 1:
            counts[v] = d - 1
    length = s.n - 2
    out: list[int] = []
    for pos in range(length):
        for sym in sorted(counts):
            counts[sym] -= 1
            block = _arrangements(counts, length - pos - 1)
            if rank < block:
                out.append(sym)
                if counts[sym] == 0:
                    del counts[sym]
                break
            rank -= block
            counts[sym] += 1
        else:  # pragma: no cover - rank past the end
            raise ValueError("rank out of range")
    return out


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def enumerate_trees(
    s: DegreeSequence,
    visitor: Callable[[LabeledTree], None],
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> int:
    """Visit every labeled tree with degree sequence ``s`` exactly once.

    Trees arrive in the lexicographic order of their Prüfer codes.  The
    visitor must be pure.  Returns the number of trees visited.
    """
    total = count_trees(s)
    if total > cap:
        raise EnumerationCapExceeded(f"{total} trees exceed cap {cap}")
    n = s.n
    sym = _symbol_multiset(s)
    visited = 0
    while True:
        visitor(from_valid_edges(n, _decode_edges(sym, n)))
        visited += 1
        if not _next_permutation(sym):
            break
    return visited


def _matching_counts_for_range(
    degrees: tuple[int, ...], start_rank: int, count: int
) -> dict[int, int]:
    """Histogram of matching numbers over a contiguous rank range.

    Fuses the Prüfer decode with the greedy child-to-parent matching pass:
    decode removes vertices children-first, so matching each removed leaf to
    its neighbor whenever both are free yields the matching number exactly.
    """
    s = DegreeSequence(degrees)
    n = s.n
    by_matching: dict[int, int] = {}
    if n == 2:
        by_matching[1] = count
        return by_matching
    if start_rank == 0:
        sym = _symbol_multiset(s)
    else:
        sym = _unrank_permutation(s, start_rank)
    length = n - 2
    deg = [0] * (n + 1)
    matched = bytearray(n + 1)
    for _ in range(count):
        for v in range(1, n + 1):
            deg[v] = 1
            matched[v] = 0
        for x in sym:
            deg[x] += 1
        nu = 0
        ptr = 1
        while deg[ptr] != 1:
            ptr += 1
        leaf = ptr
        for x in sym:
            if not matched[leaf] and not matched[x]:
                matched[leaf] = 1
                matched[x] = 1
                nu += 1
            deg[x] -= 1
            if x < ptr and deg[x] == 1:
                leaf = x
            else:
                ptr += 1
                while deg[ptr] != 1:
                    ptr += 1
                leaf = ptr
        if not matched[leaf] and not matched[n]:
            nu += 1
        by_matching[nu] = by_matching.get(nu, 0) + 1
        # In-place lexicographic successor (inlined for speed).
        i = length - 2
        while i >= 0 and sym[i] >= sym[i + 1]:
            i -= 1
        if i < 0:
            break
        j = length - 1
        while sym[j] <= sym[i]:
            j -= 1
        sym[i], sym[j] = sym[j], sym[i]
        sym[i + 1 :] = sym[:i:-1]
    return by_matching


def _spectrum_worker(args: tuple[tuple[int, ...], int, int]) -> dict[int, int]:
    degrees, start_rank, count = args
    return _matching_counts_for_range(degrees, start_rank, count)


@dataclass(frozen=True)
class NullitySpectrum:
    """Exact histograms of nullity and matching number over all labeled
    trees realizing one degree sequence."""

    sequence: tuple[int, ...]
    total: int
    by_nullity: dict[int, int]
    by_matching: dict[int, int]

    def to_json_dict(self) -> dict:
        return {
            "sequence": list(self.sequence),
            "total": str(self.total),
            "by_nullity": {str(k): str(v) for k, v in sorted(self.by_nullity.items())},
            "by_matching": {str(k): str(v) for k, v in sorted(self.by_matching.items())},
        }


def spectrum(
    s: DegreeSequence,
    cap: int = DEFAULT_ENUMERATION_CAP,
    jobs: int = 1,
    progress: Callable[[int, int], None] | None = None,
) -> NullitySpectrum:
    """Exhaustive nullity / matching-number histograms for ``s``.

    With ``jobs > 1`` the lexicographic rank space is cut into contiguous
    ranges processed by a fork-based pool; the merged histograms are
    identical to a single-threaded run because addition is order-free.
    ``progress`` (single-threaded only) is called as progress(done, total)
    roughly every million trees.
    """
    total = count_trees(s)
    if total > cap:
        raise EnumerationCapExceeded(f"{total} trees exceed cap {cap}")
    degrees = s.degrees
    n = s.n
    if jobs > 1 and total > 1:
        jobs = min(jobs, total)
        cuts = [(w * total) // jobs for w in range(jobs + 1)]
        tasks = [
            (degrees, cuts[w], cuts[w + 1] - cuts[w])
            for w in range(jobs)
            if cuts[w + 1] > cuts[w]
        ]
        import multiprocessing

        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(processes=len(tasks)) as pool:
            parts = pool.map(_spectrum_worker, tasks)
        by_matching: dict[int, int] = {}
        for part in parts:
            for k, v in part.items():
                by_matching[k] = by_matching.get(k, 0) + v
    elif progress is None:
        by_matching = _matching_counts_for_range(degrees, 0, total)
    else:
        by_matching = {}
        done = 0
        step = 1_000_000
        while done < total:
            chunk = min(step, total - done)
            part = _matching_counts_for_range(degrees, done, chunk)
            for k, v in part.items():
                by_matching[k] = by_matching.get(k, 0) + v
            done += chunk
            progress(done, total)
    by_nullity = {n - 2 * nu: c for nu, c in by_matching.items()}
    return NullitySpectrum(
        sequence=degrees, total=total, by_nullity=by_nullity, by_matching=by_matching
    )


# ---------------------------------------------------------------------------
# Seeded uniform sampling
# ---------------------------------------------------------------------------


class _SplitMix64:
    """SplitMix64 stream; fixed here so seeds mean the same thing everywhere.

    state' = state + 0x9E3779B97F4A7C15 (mod 2^64); the output mixes state'
    by xor-shift-multiply with the constants below.  Bounded draws use
    rejection below the largest multiple of the bound, so they are exactly
    uniform.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = ((1 << 64) // bound) * bound
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound


def _shuffled_symbols(s: DegreeSequence, seed: int) -> list[int]:
    """Fisher-Yates shuffle of the symbol multiset, driven by SplitMix64.

    Descending index i = len-1 .. 1, j = draw below i + 1, swap a[i], a[j].
    A uniform arrangement of the multiset is a uniform labeled tree.
    """
    sym = _symbol_multiset(s)
    rng = _SplitMix64(seed)
    for i in range(len(sym) - 1, 0, -1):
        j = rng.below(i + 1)
        sym[i], sym[j] = sym[j], sym[i]
    return sym


def random_tree(s: DegreeSequence, seed: int) -> LabeledTree:
    """Uniform sample over all labeled trees with degree sequence ``s``.

    Reproducible per seed; see :func:`_shuffled_symbols` for the exact
    shuffle contract.
    """
    return from_valid_edges(s.n, _decode_edges(_shuffled_symbols(s, seed), s.n))


def random_degree_sequence(n: int, seed: int) -> DegreeSequence:
    """Random tree degree sequence of length n: degrees are the symbol
    counts (+1) of n - 2 SplitMix64 draws from 1..n."""
    counts = [0] * (n + 1)
    rng = _SplitMix64(seed)
    for _ in range(n - 2):
        counts[rng.below(n) + 1] += 1
    return DegreeSequence(tuple(c + 1 for c in counts[1:]))


# ---------------------------------------------------------------------------
# Conjecture scan: is every matching number between the extremes realized?
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConjectureScan:
    """Witness trees per matching number in [nu_min, nu_max].

    In exhaustive mode a gap is a genuine counterexample to the interval
    conjecture and is reported, never raised.  In sampling mode a gap only
    means the budget found no witness.
    """

    sequence: tuple[int, ...]
    nu_min: int
    nu_max: int
    exhaustive: bool
    witnesses: dict[int, tuple[Edge, ...] | None]
    samples: int | None = None
    seed: int | None = None

    @property
    def gaps(self) -> tuple[int, ...]:
        return tuple(k for k in sorted(self.witnesses) if self.witnesses[k] is None)

    @property
    def complete(self) -> bool:
        return not self.gaps

    def to_json_dict(self) -> dict:
        out: dict = {
            "sequence": list(self.sequence),
            "nu_min": self.nu_min,
            "nu_max": self.nu_max,
            "mode": "exhaustive" if self.exhaustive else "sampling",
            "witnesses": {
                str(k): (None if e is None else [list(p) for p in e])
                for k, e in sorted(self.witnesses.items())
            },
            "gaps": list(self.gaps),
            "complete": self.complete,
        }
        if not self.exhaustive:
            out["samples"] = self.samples
            out["seed"] = self.seed
        return out


def _nu_of_edges(edges: list[Edge], n: int) -> int:
    """Matching number from decode-ordered edges (children before parents)."""
    matched = bytearray(n + 1)
    nu = 0
    for u, v in edges:
        if not matched[u] and not matched[v]:
            matched[u] = 1
            matched[v] = 1
            nu += 1
    return nu


def _normalized(edges: list[Edge]) -> tuple[Edge, ...]:
    return tuple(sorted((min(u, v), max(u, v)) for u, v in edges))


_Found = dict[int, tuple[int, tuple[Edge, ...]]]


def _scan_exhaustive_range(
    args: tuple[tuple[int, ...], int, int, tuple[int, ...]]
) -> _Found:
    """First witness (by enumeration rank) per target over one rank range."""
    degrees, start, count, targets = args
    s = DegreeSequence(degrees)
    n = s.n
    sym = _unrank_permutation(s, start) if start else _symbol_multiset(s)
    missing = set(targets)
    found: _Found = {}
    rank = start
    for _ in range(count):
        edges = _decode_edges(sym, n)
        nu = _nu_of_edges(edges, n)
        if nu in missing:
            found[nu] = (rank, _normalized(edges))
            missing.discard(nu)
            if not missing:
                break
        if not _next_permutation(sym):
            break
        rank += 1
    return found


def _scan_sample_range(
    args: tuple[tuple[int, ...], int, int, int, tuple[int, ...]]
) -> _Found:
    """First witness (by sample index) per target over one index range."""
    degrees, seed, lo, hi, targets = args
    s = DegreeSequence(degrees)
    n = s.n
    missing = set(targets)
    found: _Found = {}
    for i in range(lo, hi):
        edges = _decode_edges(_shuffled_symbols(s, (seed + i) & _MASK64), n)
        nu = _nu_of_edges(edges, n)
        if nu in missing:
            found[nu] = (i, _normalized(edges))
            missing.discard(nu)
            if not missing:
                break
    return found


def _merge_first(parts: list[_Found], targets: range) -> dict[int, tuple[Edge, ...] | None]:
    witnesses: dict[int, tuple[Edge, ...] | None] = {k: None for k in targets}
    best: dict[int, int] = {}
    for part in parts:
        for k, (rank, edges) in part.items():
            if k not in best or rank < best[k]:
                best[k] = rank
                witnesses[k] = edges
    return witnesses


def _fan_out(worker, tasks: list) -> list[_Found]:
    if len(tasks) == 1:
        return [worker(tasks[0])]
    import multiprocessing

    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(processes=len(tasks)) as pool:
        return pool.map(worker, tasks)


def conjecture_scan(
    s: DegreeSequence,
    cap: int = DEFAULT_ENUMERATION_CAP,
    samples: int = DEFAULT_SAMPLE_BUDGET,
    seed: int = 0,
    jobs: int = 1,
) -> ConjectureScan:
    """Search for a tree of every matching number between the extremes.

    Exhaustive when the realization count fits under ``cap`` (stopping early
    once all targets have witnesses); otherwise draws ``samples`` seeded
    random trees.  The reported witness for each value is always the first
    in enumeration (or sample-index) order, so the output does not depend on
    how the work is partitioned across ``jobs``.
    """
    b = bounds(s)
    targets = range(b.nu_min, b.nu_max + 1)
    total = count_trees(s)
    if total <= cap:
        jobs = max(1, min(jobs, total))
        cuts = [(w * total) // jobs for w in range(jobs + 1)]
        tasks = [
            (s.degrees, cuts[w], cuts[w + 1] - cuts[w], tuple(targets))
            for w in range(jobs)
            if cuts[w + 1] > cuts[w]
        ]
        witnesses = _merge_first(_fan_out(_scan_exhaustive_range, tasks), targets)
        return ConjectureScan(
            sequence=s.degrees,
            nu_min=b.nu_min,
            nu_max=b.nu_max,
            exhaustive=True,
            witnesses=witnesses,
        )
    jobs = max(1, min(jobs, max(samples, 1)))
    cuts = [(w * samples) // jobs for w in range(jobs + 1)]
    tasks = [
        (s.degrees, seed, cuts[w], cuts[w + 1], tuple(targets))
        for w in range(jobs)
        if cuts[w + 1] > cuts[w]
    ]
    witnesses = (
        _merge_first(_fan_out(_scan_sample_range, tasks), targets)
        if tasks
        else {k: None for k in targets}
    )
    return ConjectureScan(
        sequence=s.degrees,
        nu_min=b.nu_min,
        nu_max=b.nu_max,
        exhaustive=False,
        witnesses=witnesses,
        samples=samples,
        seed=seed,
    )


# ---------------------------------------------------------------------------
# Exhaustive generation of tree degree sequences
# ---------------------------------------------------------------------------


def tree_degree_sequences(n: int) -> Iterator[DegreeSequence]:
    """All tree degree sequences of length n, in lexicographic order.

    These are exactly the partitions of 2n - 2 into n positive parts; every
    one of them is realized by at least one tree.
    """
    if n < 2:
        return

    def parts(remaining: int, slots: int, low: int):
        if slots == 1:
            if remaining >= low:
                yield (remaining,)
            return
        for p in range(low, remaining // slots + 1):
            for rest in parts(remaining - p, slots - 1, p):
                yield (p,) + rest

    for tup in parts(2 * n - 2, n, 1):
        yield DegreeSequence(tup)

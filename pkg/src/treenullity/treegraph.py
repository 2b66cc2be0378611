"""Labeled trees with exact matching, nullity, independence and rank.

Vertices are labeled 1..n.  Every operation is pure and exact: the matching
number comes from leaf stripping (exact on forests, so no blossom machinery
is needed), and the adjacency rank is computed over the integers by
fraction-free elimination so that no floating-point rank decision is ever
made.  For any tree, rank = 2 * nu, which makes the rank an independent
cross-check of the matching code and vice versa.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from .degseq import DegreeSequence
from .errors import (
    LabelOutOfRange,
    LoopOrDuplicate,
    NotConnected,
    ParseError,
    SizeLimitExceeded,
    WrongEdgeCount,
)

DEFAULT_RANK_LIMIT = 64

Edge = tuple[int, int]


@dataclass(frozen=True)
class Matching:
    """A set of pairwise non-adjacent edges, kept in sorted normal form."""

    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        canon = tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges))
        object.__setattr__(self, "edges", canon)

    @property
    def size(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def vertices(self) -> set[int]:
        return {v for e in self.edges for v in e}

    def is_valid_in(self, tree: "LabeledTree") -> bool:
        """Every edge belongs to the tree and no two edges share a vertex."""
        edge_set = set(tree.edges)
        seen: set[int] = set()
        for u, v in self.edges:
            if (u, v) not in edge_set:
                return False
            if u in seen or v in seen:
                return False
            seen.add(u)
            seen.add(v)
        return True


class LabeledTree:
    """Immutable labeled tree on vertices 1..n stored as an edge set."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Edge], _validated: bool = False):
        object.__setattr__(self, "n", n)
        canon = tuple(sorted((min(u, v), max(u, v)) for u, v in edges))
        object.__setattr__(self, "edges", canon)
        adj: list[list[int]] = [[] for _ in range(n + 1)]
        for u, v in canon:
            if not _validated:
                if not (1 <= u <= n and 1 <= v <= n):
                    raise LabelOutOfRange(f"edge ({u},{v}) outside 1..{n}")
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))
        if not _validated:
            self._validate()

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("LabeledTree is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LabeledTree)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"LabeledTree(n={self.n}, edges={list(self.edges)})"

    def _validate(self) -> None:
        n = self.n
        if len(set(self.edges)) != len(self.edges) or any(u == v for u, v in self.edges):
            raise LoopOrDuplicate("loops or repeated edges are not allowed")
        if len(self.edges) != n - 1:
            raise WrongEdgeCount(f"{len(self.edges)} edges, a tree on {n} vertices has {n - 1}")
        # n - 1 edges and connected <=> tree; check connectivity by BFS from 1.
        seen = [False] * (n + 1)
        seen[1] = True
        stack = [1]
        count = 1
        while stack:
            v = stack.pop()
            for w in self._adj[v]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        if count != n:
            raise NotConnected(f"only {count} of {n} vertices reachable")

    # -- basic accessors ---------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_label(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_label(v)
        return len(self._adj[v])

    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.n + 1) if len(self._adj[v]) == 1)

    def _check_label(self, v: int) -> None:
        if not (1 <= v <= self.n):
            raise LabelOutOfRange(f"label {v} outside 1..{self.n}")

    # -- derived quantities --------------------------------------------------

    def degree_multiset(self) -> DegreeSequence:
        return DegreeSequence(tuple(len(self._adj[v]) for v in range(1, self.n + 1)))

    def maximum_matching(self) -> Matching:
        """Maximum matching by repeated leaf matching.

        The current leaf with the smallest label is matched to its unique
        neighbor, both are removed, and the process repeats over the
        resulting forest.  Exact on forests; deterministic because leaves are
        always taken in ascending label order.
        """
        n = self.n
        deg = [0] * (n + 1)
        alive = [True] * (n + 1)
        adj = self._adj
        heap: list[int] = []
        for v in range(1, n + 1):
            deg[v] = len(adj[v])
            if deg[v] == 1:
                heap.append(v)
        heapq.heapify(heap)
        matched: list[Edge] = []
        while heap:
            v = heapq.heappop(heap)
            if not alive[v] or deg[v] != 1:
                continue
            partner = 0
            for u in adj[v]:
                if alive[u]:
                    partner = u
                    break
            if partner == 0:
                continue
            matched.append((min(v, partner), max(v, partner)))
            alive[v] = False
            alive[partner] = False
            for w in adj[partner]:
                if alive[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        heapq.heappush(heap, w)
        return Matching(tuple(matched))

    def nullity(self) -> int:
        """Multiplicity of the zero eigenvalue: n - 2 * nu for trees."""
        return self.n - 2 * self.maximum_matching().size

    def independence_number(self) -> int:
        """n - nu: minimum vertex cover equals nu in bipartite graphs, and
        the independent sets are exactly the cover complements."""
        return self.n - self.maximum_matching().size

    def adjacency_rank_exact(self, limit: int = DEFAULT_RANK_LIMIT) -> int:
        """Exact integer rank of the 0/1 adjacency matrix.

        Fraction-free (Bareiss) elimination with partial pivoting by absolute
        value; every division is exact, so the result is the true rank over
        the rationals.  Guarded by ``limit`` since this is a cross-check
        oracle, not a production path.
        """
        n = self.n
        if n > limit:
            raise SizeLimitExceeded(f"n={n} exceeds rank limit {limit}")
        rows = [[0] * n for _ in range(n)]
        for u, v in self.edges:
            rows[u - 1][v - 1] = 1
            rows[v - 1][u - 1] = 1
        rank = 0
        prev = 1
        for col in range(n):
            best = -1
            best_abs = 0
            for i in range(rank, n):
                a = rows[i][col]
                if a and abs(a) > best_abs:
                    best = i
                    best_abs = abs(a)
            if best < 0:
                continue
            if best != rank:
                rows[best], rows[rank] = rows[rank], rows[best]
            pivot_row = rows[rank]
            pivot = pivot_row[col]
            # The factor-zero rows are rescaled too; Bareiss divisibility
            # needs the update applied uniformly below the pivot.
            for i in range(rank + 1, n):
                row = rows[i]
                factor = row[col]
                for j in range(col + 1, n):
                    row[j] = (row[j] * pivot - factor * pivot_row[j]) // prev
                row[col] = 0
            prev = pivot
            rank += 1
        return rank

    def distance(self, u: int, v: int) -> int:
        """Edge count of the unique u-v path (breadth-first from u)."""
        self._check_label(u)
        self._check_label(v)
        if u == v:
            return 0
        dist = [-1] * (self.n + 1)
        dist[u] = 0
        frontier = [u]
        while frontier:
            nxt = []
            for x in frontier:
                for y in self._adj[x]:
                    if dist[y] < 0:
                        dist[y] = dist[x] + 1
                        if y == v:
                            return dist[y]
                        nxt.append(y)
            frontier = nxt
        raise NotConnected(f"no path from {u} to {v}")  # pragma: no cover

    def path_between(self, u: int, v: int) -> tuple[int, ...]:
        """Vertex list of the unique u-v path, endpoints included."""
        self._check_label(u)
        self._check_label(v)
        parent = [0] * (self.n + 1)
        parent[u] = u
        frontier = [u]
        while frontier and parent[v] == 0:
            nxt = []
            for x in frontier:
                for y in self._adj[x]:
                    if parent[y] == 0:
                        parent[y] = x
                        nxt.append(y)
            frontier = nxt
        path = [v]
        while path[-1] != u:
            path.append(parent[path[-1]])
        path.reverse()
        return tuple(path)

    def two_coloring(self) -> list[int]:
        """Proper 2-coloring (trees are bipartite); entry 0 is unused.

        Two vertices are at even distance exactly when they share a color.
        """
        color = [-1] * (self.n + 1)
        color[1] = 0
        frontier = [1]
        while frontier:
            nxt = []
            for x in frontier:
                for y in self._adj[x]:
                    if color[y] < 0:
                        color[y] = 1 - color[x]
                        nxt.append(y)
            frontier = nxt
        return color

    # -- serialization -------------------------------------------------------

    def to_edge_list(self) -> str:
        """First line n, then one "u v" line per edge, sorted."""
        lines = [str(self.n)]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"

    def to_dot(self) -> str:
        """Undirected DOT with node names v1..vn, edges in sorted order."""
        lines = ["graph {"]
        lines.extend(f"  v{u} -- v{v};" for u, v in self.edges)
        lines.append("}")
        return "\n".join(lines) + "\n"


def from_edges(n: int, pairs: Iterable[Edge]) -> LabeledTree:
    """Validated tree from an edge list over labels 1..n."""
    return LabeledTree(n, pairs)


def from_valid_edges(n: int, pairs: Sequence[Edge]) -> LabeledTree:
    """Construction fast path for edges already known to form a tree."""
    return LabeledTree(n, pairs, _validated=True)


def parse_edge_list(text: str) -> LabeledTree:
    """Inverse of :meth:`LabeledTree.to_edge_list`."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ParseError("empty edge-list input")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"first line must be the vertex count, got {lines[0]!r}") from None
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {ln!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"expected integers, got {ln!r}") from None
    return from_edges(n, pairs)

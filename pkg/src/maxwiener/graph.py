"""Trees, tree degree sequences and two independent Wiener-index oracles.

``wiener_pairwise`` sums BFS distances over every vertex pair; ``wiener_edgecut``
sums ``n1(e) * n2(e)`` over edges.  The two share no code beyond adjacency, so
each one checks the other.
"""

from __future__ import annotations

import random
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import networkx as nx

from .errors import InvalidTree, NotTreeGraphic, TooSmall, WienerOverflow

INT64_MAX = 2**63 - 1
MAX_VERTICES = 2_000_000


def check_int64(value: int, what: str = "value") -> int:
    """Return ``value`` unchanged, raising if it leaves the signed 64-bit range."""
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise WienerOverflow(f"{what} {value} exceeds the signed 64-bit range")
    return value


@dataclass(frozen=True)
class DegreeSequence:
    """A validated, nonincreasing tree degree sequence.

    Build instances with :func:`validate_degree_sequence`; the constructor
    assumes its input is already sorted and checked.
    """

    degrees: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def k(self) -> int:
        """Number of internal (degree >= 2) vertices."""
        return sum(1 for d in self.degrees if d >= 2)

    @property
    def internal_weights(self) -> tuple[int, ...]:
        """Nonincreasing weights ``d_i - 1`` of the internal vertices."""
        return tuple(d - 1 for d in self.degrees if d >= 2)

    def __str__(self) -> str:
        return ",".join(map(str, self.degrees))


def validate_degree_sequence(raw: Iterable[int]) -> DegreeSequence:
    """Sort ``raw`` nonincreasingly and check that some tree realizes it.

    A list of positive integers is the degree list of a tree iff it has at
    least two entries summing to ``2(n - 1)``.

    >>> validate_degree_sequence([1, 2, 1]).degrees
    (2, 1, 1)
    """
    degrees = tuple(sorted((int(d) for d in raw), reverse=True))
    if not degrees:
        raise TooSmall("degree sequence is empty")
    if degrees[-1] < 1:
        raise NotTreeGraphic(f"degree {degrees[-1]} < 1 in {degrees}")
    n = len(degrees)
    if n < 2:
        raise TooSmall(f"a tree degree sequence needs n >= 2, got n={n}")
    if n > MAX_VERTICES:
        raise WienerOverflow(f"n={n} exceeds the supported maximum {MAX_VERTICES}")
    total = sum(degrees)
    if total != 2 * (n - 1):
        raise NotTreeGraphic(f"degree sum {total} != 2(n-1) = {2 * (n - 1)}")
    return DegreeSequence(degrees)


@dataclass(frozen=True)
class Tree:
    """An unrooted tree on vertices ``0..n-1``; validated on construction."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidTree(f"tree needs at least one vertex, got n={self.n}")
        if self.n > MAX_VERTICES:
            raise WienerOverflow(f"n={self.n} exceeds the supported maximum {MAX_VERTICES}")
        norm = []
        seen = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidTree(f"edge ({u}, {v}) has a label outside 0..{self.n - 1}")
            if u == v:
                raise InvalidTree(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise InvalidTree(f"duplicate edge {e}")
            seen.add(e)
            norm.append(e)
        if len(norm) != self.n - 1:
            raise InvalidTree(f"a tree on {self.n} vertices has {self.n - 1} edges, got {len(norm)}")
        object.__setattr__(self, "edges", tuple(norm))
        # n-1 edges plus connectivity implies acyclic
        if len(_bfs_distances(self.adjacency, 0)) != self.n:
            raise InvalidTree("edge list is disconnected")

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(nb) for nb in adj)

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adjacency]

    def degree_sequence(self) -> DegreeSequence:
        return validate_degree_sequence(self.degrees())

    def is_caterpillar(self) -> bool:
        """True iff deleting every leaf leaves a path (or nothing)."""
        deg = self.degrees()
        inner = [v for v in range(self.n) if deg[v] >= 2]
        if len(inner) <= 1:
            return True
        inner_set = set(inner)
        inner_deg = [sum(1 for u in self.adjacency[v] if u in inner_set) for v in inner]
        # a tree's internal vertices always induce a subtree
        return max(inner_deg) <= 2

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


def _bfs_distances(adj: Sequence[Sequence[int]], source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if v not in dist:
                dist[v] = du
                queue.append(v)
    return dist


def wiener_pairwise(t: Tree) -> int:
    """Wiener index as the sum of BFS distances over all unordered pairs."""
    adj = t.adjacency
    total = 0
    for s in range(t.n):
        total += sum(_bfs_distances(adj, s).values())
    return check_int64(total // 2, "Wiener index")


def wiener_edgecut(t: Tree) -> int:
    """Wiener index of a tree as the sum over edges of the two component sizes."""
    n = t.n
    if n == 1:
        return 0
    adj = t.adjacency
    parent = [-1] * n
    order = []
    stack = [0]
    parent[0] = 0
    while stack:
        u = stack.pop()
        order.append(u)
        for v in adj[u]:
            if parent[v] == -1:
                parent[v] = u
                stack.append(v)
    size = [1] * n
    total = 0
    for u in reversed(order[1:]):
        total += size[u] * (n - size[u])
        size[parent[u]] += size[u]
    return check_int64(total, "Wiener index")


def path_tree(n: int) -> Tree:
    return Tree(n, tuple((i, i + 1) for i in range(n - 1)))


def star_tree(n: int) -> Tree:
    return Tree(n, tuple((0, i) for i in range(1, n)))


def tree_from_prufer(seq: Sequence[int], n: int | None = None) -> Tree:
    """Decode a Prüfer sequence over labels ``0..len(seq)+1``."""
    if n is None:
        n = len(seq) + 2
    if n == 1:
        return Tree(1, ())
    if n == 2:
        return Tree(2, ((0, 1),))
    g = nx.from_prufer_sequence(list(seq))
    return Tree(n, tuple(g.edges()))


def random_tree(n: int, rng: random.Random) -> Tree:
    """Uniformly random labelled tree on ``n`` vertices (random Prüfer code)."""
    return tree_from_prufer([rng.randrange(n) for _ in range(n - 2)], n)


def parse_tree(text: str) -> Tree:
    """Parse the tree file format: ``n`` on the first line, then ``u v`` per edge."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 1:
        raise InvalidTree("first line must hold the vertex count n")
    try:
        n = int(lines[0][0])
        edges = []
        for i, parts in enumerate(lines[1:], start=2):
            if len(parts) != 2:
                raise InvalidTree(f"line {i}: expected 'u v', got {' '.join(parts)!r}")
            edges.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        if isinstance(exc, InvalidTree):
            raise
        raise InvalidTree(f"non-integer token: {exc}") from None
    return Tree(n, tuple(edges))


def read_tree(path: str | Path) -> Tree:
    return parse_tree(Path(path).read_text())


def format_tree(t: Tree) -> str:
    return "\n".join([str(t.n), *(f"{u} {v}" for u, v in t.edges)]) + "\n"

"""Simple undirected graphs with dense vertex ids and bitmask adjacency."""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import GraphError

VertexSet = Iterable[int]


def _mask_of(vertices: VertexSet, n: int) -> int:
    m = 0
    for v in vertices:
        if not 0 <= v < n:
            raise GraphError(f"vertex {v} out of range for n={n}")
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Iterate the set bit positions of ``mask`` in ascending order."""
    while mask:
        b = mask & -mask
        mask ^= b
        yield b.bit_length() - 1


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Adjacency is one int bitmask per vertex, so membership tests and
    neighborhood algebra are O(1) words up to n ~ 64; larger graphs stay
    correct but degrade gracefully.  Instances are safe to share between
    concurrent workers; all mutation happens in constructors.
    """

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u} is not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "Graph":
        """Build from per-vertex adjacency masks (validated for symmetry)."""
        masks = tuple(masks)
        n = len(masks)
        g = object.__new__(cls)
        g.n = n
        g._adj = masks
        full = (1 << n) - 1
        for v, m in enumerate(masks):
            if m & ~full:
                raise GraphError(f"adjacency mask of {v} references vertices >= {n}")
            if (m >> v) & 1:
                raise GraphError(f"loop at vertex {v} is not allowed")
        for v, m in enumerate(masks):
            for u in bits(m):
                if not (masks[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        return g

    @classmethod
    def from_edge_code(cls, n: int, code: int) -> "Graph":
        """Decode an upper-triangle edge bitmap: bit k is the k-th pair
        (0,1),(0,2),...,(0,n-1),(1,2),... in i-major order."""
        adj = [0] * n
        k = 0
        for i in range(n):
            for j in range(i + 1, n):
                if (code >> k) & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                k += 1
        if code >> k:
            raise GraphError(f"edge code has bits beyond pair count {k}")
        g = object.__new__(cls)
        g.n = n
        g._adj = tuple(adj)
        return g

    def edge_code(self) -> int:
        code = 0
        k = 0
        adj = self._adj
        for i in range(self.n):
            row = adj[i]
            for j in range(i + 1, self.n):
                if (row >> j) & 1:
                    code |= 1 << k
                k += 1
        return code

    # -- queries ---------------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(a.bit_count() for a in self._adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"vertex pair ({u},{v}) out of range for n={self.n}")
        return bool((self._adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of v in ascending order."""
        return tuple(bits(self._adj[v]))

    def adjacency_mask(self, v: int) -> int:
        return self._adj[v]

    @property
    def masks(self) -> tuple[int, ...]:
        """The per-vertex adjacency masks (read-only)."""
        return self._adj

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            row = self._adj[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    yield (u, v)
                row >>= 1
                v += 1

    def min_degree(self) -> int:
        return min((a.bit_count() for a in self._adj), default=0)

    def max_degree(self) -> int:
        return max((a.bit_count() for a in self._adj), default=0)

    def is_complete(self) -> bool:
        return all(a.bit_count() == self.n - 1 for a in self._adj)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return mask_connected(self._adj, (1 << self.n) - 1)

    def vertex_mask(self, vertices: VertexSet) -> int:
        return _mask_of(vertices, self.n)

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def mask_connected(adj: tuple[int, ...], live: int) -> bool:
    """True iff the vertices in ``live`` induce a connected subgraph.

    The empty and one-vertex subgraphs count as connected.
    """
    if live == 0:
        return True
    comp = live & -live
    frontier = comp
    while frontier:
        reach = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            reach |= adj[b.bit_length() - 1]
        frontier = reach & live & ~comp
        comp |= frontier
    return comp == live


def component_of(adj: tuple[int, ...], live: int, v: int) -> int:
    """Mask of the connected component of ``v`` within ``live``."""
    comp = 1 << v
    frontier = comp
    while frontier:
        reach = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            reach |= adj[b.bit_length() - 1]
        frontier = reach & live & ~comp
        comp |= frontier
    return comp


def induced_subgraph(g: Graph, keep: VertexSet) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``keep``, relabeled to 0..|keep|-1.

    Returns the new graph and the old->new id map; relabeling preserves
    the ascending order of the kept ids.
    """
    kmask = _mask_of(keep, g.n)
    old_ids = list(bits(kmask))
    idmap = {old: new for new, old in enumerate(old_ids)}
    adj = []
    for old in old_ids:
        row = g._adj[old] & kmask
        new_row = 0
        for w in bits(row):
            new_row |= 1 << idmap[w]
        adj.append(new_row)
    h = object.__new__(Graph)
    h.n = len(old_ids)
    h._adj = tuple(adj)
    return h, idmap


def neighborhood(g: Graph, f: VertexSet) -> tuple[int, ...]:
    """N(F): vertices outside F adjacent to at least one vertex of F."""
    fmask = _mask_of(f, g.n)
    reach = 0
    for v in bits(fmask):
        reach |= g._adj[v]
    return tuple(bits(reach & ~fmask))


def frontier_complement(g: Graph, f: VertexSet) -> tuple[int, ...]:
    """The set of vertices outside F and not adjacent to F.

    Together with F and N(F) this partitions the vertex set.
    """
    fmask = _mask_of(f, g.n)
    reach = 0
    for v in bits(fmask):
        reach |= g._adj[v]
    full = (1 << g.n) - 1
    return tuple(bits(full & ~fmask & ~reach))

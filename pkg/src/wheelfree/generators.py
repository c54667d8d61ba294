"""Constructors for the named graphs used throughout the toolkit."""

from __future__ import annotations

from .errors import GraphError
from .graph import Graph


def complete(k: int) -> Graph:
    """K_k."""
    if k < 1:
        raise GraphError("complete(k) requires k >= 1")
    return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def complete_bipartite(a: int, b: int | None = None) -> Graph:
    """K_{a,b} with parts 0..a-1 and a..a+b-1; K_{a,a} when b is omitted."""
    if b is None:
        b = a
    if a < 1 or b < 1:
        raise GraphError("complete_bipartite requires positive part sizes")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle(n: int) -> Graph:
    """C_n."""
    if n < 3:
        raise GraphError("cycle(n) requires n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """P_n (path with n vertices)."""
    if n < 1:
        raise GraphError("path(n) requires n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    if leaves < 1:
        raise GraphError("star(leaves) requires leaves >= 1")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def circulant(n: int, offsets: tuple[int, ...]) -> Graph:
    """Circulant graph C_n(offsets): i ~ i +/- d (mod n) for each offset d."""
    if n < 3:
        raise GraphError("circulant(n, ...) requires n >= 3")
    edges = set()
    for d in offsets:
        d %= n
        if d == 0:
            raise GraphError("circulant offset 0 would create loops")
        for i in range(n):
            j = (i + d) % n
            edges.add((min(i, j), max(i, j)))
    return Graph(n, sorted(edges))


def petersen() -> Graph:
    """The Petersen graph: outer C_5 on 0..4, inner pentagram on 5..9."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph(10, edges)


def octahedron() -> Graph:
    """K_{2,2,2}: the 4-regular, 4-connected octahedron."""
    non_edges = {(0, 1), (2, 3), (4, 5)}
    return Graph(6, [(i, j) for i in range(6) for j in range(i + 1, 6) if (i, j) not in non_edges])


def icosahedron() -> Graph:
    """The icosahedron: 12 vertices, 30 edges, 5-regular, 5-connected."""
    edges = [(0, i) for i in range(1, 6)]                     # top pole to upper ring
    edges += [(1 + i, 1 + (i + 1) % 5) for i in range(5)]     # upper ring
    edges += [(6 + i, 6 + (i + 1) % 5) for i in range(5)]     # lower ring
    edges += [(11, 6 + i) for i in range(5)]                  # bottom pole
    for i in range(5):
        edges.append((1 + i, 6 + i))
        edges.append((1 + i, 6 + (i + 1) % 5))
    return Graph(12, edges)


def tight_example(k: int) -> Graph:
    """A k-wheel-free graph of chromatic number k on 2(k-2)+3 vertices.

    Two disjoint copies of K_{k-2} (ids 0..k-3 and k-2..2k-5), a vertex
    x = 2k-4 joined to both copies, and adjacent vertices a = 2k-3 and
    b = 2k-2 joined to the first and second copy respectively.
    """
    if k < 4:
        raise GraphError("tight_example(k) requires k >= 4")
    h1 = list(range(k - 2))
    h2 = list(range(k - 2, 2 * k - 4))
    x, a, b = 2 * k - 4, 2 * k - 3, 2 * k - 2
    edges = [(i, j) for i in h1 for j in h1 if i < j]
    edges += [(i, j) for i in h2 for j in h2 if i < j]
    edges += [(v, x) for v in h1 + h2]
    edges += [(v, a) for v in h1]
    edges += [(v, b) for v in h2]
    edges.append((a, b))
    return Graph(b + 1, edges)

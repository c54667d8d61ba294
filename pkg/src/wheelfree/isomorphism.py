"""Exact isomorphism testing and canonical forms for small graphs.

Both routines refine vertices by iterated neighbor-degree signatures and
then backtrack over class-respecting permutations; exact for the sizes
this toolkit enumerates (n <= ~10).
"""

from __future__ import annotations

from itertools import permutations

from .errors import GraphError
from .graph import Graph


def relabel(g: Graph, perm) -> Graph:
    """Image of g under the permutation ``perm`` (perm[v] = new id of v)."""
    perm = list(perm)
    if sorted(perm) != list(range(g.n)):
        raise GraphError("not a permutation of the vertex ids")
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        m = g.masks[v]
        while m:
            b = m & -m
            m ^= b
            row |= 1 << perm[b.bit_length() - 1]
        adj[perm[v]] = row
    return Graph.from_masks(adj)


def _refine(g: Graph) -> list[int]:
    """Stable vertex colors from iterated (color, sorted neighbor colors)."""
    n = g.n
    colors = [g.degree(v) for v in range(n)]
    while True:
        sigs = []
        for v in range(n):
            nbr = tuple(sorted(colors[u] for u in g.neighbors(v)))
            sigs.append((colors[v], nbr))
        order = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _classes(colors: list[int]) -> list[list[int]]:
    out: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        out.setdefault(c, []).append(v)
    return [out[c] for c in sorted(out)]


def canonical_code(g: Graph) -> int:
    """The smallest edge code over all relabelings of g.

    Graphs are isomorphic iff their canonical codes agree; the graph
    realizing the code is the canonical representative.
    """
    n = g.n
    if n == 0:
        return 0
    classes = _classes(_refine(g))
    best = None
    # positions are assigned class-block by class-block: any isomorphism
    # preserves the refinement classes, so this search space is complete
    blocks = [perms_of(c) for c in classes]

    def rec(idx: int, placed: list[int]):
        nonlocal best
        if idx == len(blocks):
            perm = [0] * n
            for pos, v in enumerate(placed):
                perm[v] = pos
            code = 0
            k = 0
            for i in range(n):
                row = g.masks[placed[i]]
                for j in range(i + 1, n):
                    if (row >> placed[j]) & 1:
                        code |= 1 << k
                    k += 1
            if best is None or code < best:
                best = code
            return
        for p in blocks[idx]:
            rec(idx + 1, placed + list(p))

    rec(0, [])
    return best


def perms_of(items):
    return list(permutations(items))


def canonical_form(g: Graph) -> Graph:
    return Graph.from_edge_code(g.n, canonical_code(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test via refinement plus backtracking."""
    if g.n != h.n or g.m != h.m:
        return False
    cg, ch = _refine(g), _refine(h)
    if sorted(cg) != sorted(ch):
        return False
    classes_g = _classes(cg)
    classes_h = _classes(ch)
    if [len(c) for c in classes_g] != [len(c) for c in classes_h]:
        return False
    # order g's vertices class by class and map into h's matching classes
    order = [v for cls in classes_g for v in cls]
    candidates = {}
    for cls_g, cls_h in zip(classes_g, classes_h):
        for v in cls_g:
            candidates[v] = cls_h

    n = g.n
    mapping = [-1] * n
    used = [False] * n

    def rec(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if ((g.masks[v] >> u) & 1) != ((h.masks[w] >> mapping[u]) & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if rec(i + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return rec(0)

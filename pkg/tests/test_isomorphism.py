"""Canonical codes and isomorphism testing against brute permutation search."""

import random
from itertools import permutations

from wheelfree import (
    Graph,
    canonical_code,
    canonical_form,
    complete,
    complete_bipartite,
    circulant,
    cycle,
    is_isomorphic,
    relabel,
)


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    for perm in permutations(range(g.n)):
        if all(
            g.has_edge(u, v) == h.has_edge(perm[u], perm[v])
            for u in range(g.n)
            for v in range(u + 1, g.n)
        ):
            return True
    return False


def test_exhaustive_pairs_n4():
    graphs = [Graph.from_edge_code(4, c) for c in range(64)]
    for i, g in enumerate(graphs):
        for h in graphs[i:]:
            assert is_isomorphic(g, h) == brute_isomorphic(g, h)
            assert (canonical_code(g) == canonical_code(h)) == brute_isomorphic(g, h)


def test_random_pairs_against_brute():
    rnd = random.Random(2024)
    for _ in range(150):
        n = rnd.randint(2, 6)
        g = Graph.from_edge_code(n, rnd.getrandbits(n * (n - 1) // 2))
        h = Graph.from_edge_code(n, rnd.getrandbits(n * (n - 1) // 2))
        assert is_isomorphic(g, h) == brute_isomorphic(g, h)


def test_relabelings_are_isomorphic():
    rnd = random.Random(5)
    for _ in range(60):
        n = rnd.randint(2, 8)
        g = Graph.from_edge_code(n, rnd.getrandbits(n * (n - 1) // 2))
        perm = list(range(n))
        rnd.shuffle(perm)
        h = relabel(g, perm)
        assert is_isomorphic(g, h)
        assert canonical_code(g) == canonical_code(h)
        assert canonical_form(g) == canonical_form(h)


def test_regular_non_isomorphic_pair():
    # both are 4-regular on 8 vertices but only one contains triangles
    a = circulant(8, (1, 2))
    b = complete_bipartite(4)
    assert not is_isomorphic(a, b)
    assert canonical_code(a) != canonical_code(b)


def test_k44_recognition_under_relabeling():
    rnd = random.Random(99)
    k44 = complete_bipartite(4)
    for _ in range(20):
        perm = list(range(8))
        rnd.shuffle(perm)
        assert is_isomorphic(relabel(k44, perm), k44)
    assert not is_isomorphic(complete(8), k44)
    assert not is_isomorphic(cycle(8), k44)

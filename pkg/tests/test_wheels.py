"""Cycle-through search, wheel detection, and cutset certificates."""

import pytest

from wheelfree import (
    Graph,
    GraphError,
    complete,
    complete_bipartite,
    cycle,
    find_cycle_through,
    find_cycle_through_edge,
    find_k_wheel,
    induced_subgraph,
    is_almost_4_wheel_free,
    is_k_wheel_free,
    is_wheel_center,
    petersen,
    tight_example,
    wheel_centers,
    wm_certificate,
)
from wheelfree.wheels import is_cycle, normalize_cycle


def k44_minus_y0() -> Graph:
    sub, _ = induced_subgraph(complete_bipartite(4), [0, 1, 2, 3, 5, 6, 7])
    return sub


def subdivided_k44() -> Graph:
    """K_{4,4} with edge x0-y0 replaced by the path x0-m-y0 (m = 8)."""
    edges = [(i, 4 + j) for i in range(4) for j in range(4) if not (i == 0 and j == 0)]
    edges += [(0, 8), (8, 4)]
    return Graph(9, edges)


# -- cycle searches ----------------------------------------------------------


def test_normalize_cycle():
    assert normalize_cycle([4, 0, 2, 3]) == (0, 2, 3, 4)
    assert normalize_cycle([0, 3, 1, 2]) == (0, 2, 1, 3)


def test_cycle_through_k4_all():
    cyc = find_cycle_through(complete(4), [0, 1, 2, 3])
    assert cyc is not None and len(cyc) == 4
    assert is_cycle(complete(4), cyc)


def test_cycle_through_c5_all():
    assert find_cycle_through(cycle(5), range(5)) == (0, 1, 2, 3, 4)


def test_cycle_through_absence():
    # four left-side vertices need four right-side connectors; only three remain
    assert find_cycle_through(k44_minus_y0(), [0, 1, 2, 3]) is None


def test_cycle_through_needs_target():
    with pytest.raises(GraphError):
        find_cycle_through(complete(4), [])


def test_cycle_through_edge_k4():
    cyc = find_cycle_through_edge(complete(4), (0, 1), [2])
    assert cyc == (0, 1, 2)
    assert is_cycle(complete(4), cyc)


def test_cycle_through_edge_c5():
    assert find_cycle_through_edge(cycle(5), (0, 1), [3]) == (0, 1, 2, 3, 4)


def test_cycle_through_edge_k44():
    g = complete_bipartite(4)
    cyc = find_cycle_through_edge(g, (0, 4), [1, 2, 3])
    assert cyc is not None
    assert is_cycle(g, cyc)
    edges = {tuple(sorted((cyc[i], cyc[(i + 1) % len(cyc)]))) for i in range(len(cyc))}
    assert (0, 4) in edges
    assert {1, 2, 3} <= set(cyc)


def test_cycle_through_edge_requires_edge():
    with pytest.raises(GraphError):
        find_cycle_through_edge(cycle(5), (0, 2), [3])


def test_cycle_through_agrees_with_cycle_enumeration():
    """Independent oracle: collect all cycle vertex sets by DFS enumeration,
    then compare coverage answers for every target set."""
    from itertools import combinations

    from wheelfree.oracles import _iter_cycles

    for n in range(3, 6):
        for code in range(1 << (n * (n - 1) // 2)):
            g = Graph.from_edge_code(n, code)
            cycle_masks = {mask for mask, _ in _iter_cycles(g.masks, n)}
            for size in range(1, min(n, 5) + 1):
                for xs in combinations(range(n), size):
                    req = sum(1 << v for v in xs)
                    expected = any(mask & req == req for mask in cycle_masks)
                    got = find_cycle_through(g, xs)
                    assert (got is not None) == expected, (n, code, xs)
                    if got is not None:
                        assert is_cycle(g, got) and set(xs) <= set(got)


# -- wheels --------------------------------------------------------------------


def test_wheel_center_k5():
    w = is_wheel_center(complete(5), 0, 4)
    assert w is not None
    assert w.center == 0
    assert w.rim == (1, 2, 3, 4)
    assert len(w.spokes) == 4
    w.validate(complete(5), 4)


def test_wheel_center_absent_k44():
    for v in range(8):
        assert is_wheel_center(complete_bipartite(4), v, 4) is None


def test_wheel_center_degree_bound():
    # 3-regular: spoke count is capped by the degree
    for v in range(10):
        assert is_wheel_center(petersen(), v, 4) is None


def test_wheel_centers():
    assert wheel_centers(complete(6), 4) == (0, 1, 2, 3, 4, 5)
    assert wheel_centers(complete_bipartite(4), 4) == ()
    assert wheel_centers(complete(5), 4) == (0, 1, 2, 3, 4)


def test_k_wheel_free():
    assert is_k_wheel_free(complete(4), 4)
    assert is_k_wheel_free(tight_example(4), 4)
    w = find_k_wheel(complete(5), 4)
    assert w is not None
    w.validate(complete(5), 4)


def test_almost_4_wheel_free():
    assert is_almost_4_wheel_free(complete_bipartite(4))  # W empty
    assert is_almost_4_wheel_free(complete(4))            # no wheels at all
    assert not is_almost_4_wheel_free(complete(6))        # W is everything


# -- Watkins-Mesner certificates --------------------------------------------------


def test_wm_k44():
    g = complete_bipartite(4)
    cert = wm_certificate(g, 4, [0, 1, 2, 3])
    assert cert.cutset == (5, 6, 7)
    assert cert.components == {0: (0,), 1: (1,), 2: (2,), 3: (3,)}
    cert.validate(g)


def test_wm_subdivided_k44():
    # components need not be singletons
    g = subdivided_k44()
    cert = wm_certificate(g, 5, [0, 1, 2, 3])
    assert cert.cutset == (4, 6, 7)
    assert cert.components[0] == (0, 8)
    cert.validate(g)


def test_wm_rejects_cycle_case():
    with pytest.raises(GraphError, match="cycle"):
        wm_certificate(complete(5), 0, [1, 2, 3, 4])


def test_wm_requires_neighbors():
    g = complete_bipartite(4)
    with pytest.raises(GraphError):
        wm_certificate(g, 4, [0, 1, 2, 5])  # 5 is not a neighbor of 4
    with pytest.raises(GraphError):
        wm_certificate(g, 4, [0, 1, 2])  # needs exactly four


def test_wm_validation_catches_bad_cutset():
    from wheelfree.errors import CertificateError
    from wheelfree.wheels import WMCertificate

    g = complete_bipartite(4)
    bad = WMCertificate(x=4, targets=(0, 1, 2, 3), cutset=(0, 5, 6), components={})
    with pytest.raises(CertificateError):
        bad.validate(g)


def test_wm_exhaustive_over_k44_apexes():
    """Every apex of K_{4,4} with its full neighborhood admits a certificate."""
    g = complete_bipartite(4)
    for x in range(8):
        targets = list(g.neighbors(x))
        cert = wm_certificate(g, x, targets)
        assert cert is not None
        cert.validate(g)

"""Twins, reduction witnesses, constructive coloring, statement checkers."""

import pytest

from wheelfree import (
    Graph,
    GraphError,
    LowDegree,
    Stuck,
    TwinPair,
    VerifyStatus,
    color4,
    complete,
    complete_bipartite,
    cycle,
    find_twins,
    induced_subgraph,
    petersen,
    reduction_witness,
    tight_example,
    verify_statement,
)
from wheelfree.oracles import brute_chromatic_number, brute_has_k_wheel


# -- twins --------------------------------------------------------------------


def test_twins_k44():
    assert find_twins(complete_bipartite(4)) == (0, 1)


def test_twins_c5_absent():
    assert find_twins(cycle(5)) is None


def test_twins_c4():
    assert find_twins(cycle(4)) == (0, 2)


# -- reduction witnesses ---------------------------------------------------------


def test_witness_petersen():
    assert reduction_witness(petersen(), 4) == LowDegree(vertex=0, bound=3)


def test_witness_k44_twins():
    assert reduction_witness(complete_bipartite(4), 4) == TwinPair(u=0, v=1)


def test_witness_k6_stuck():
    w = reduction_witness(complete(6), 4)
    assert isinstance(w, Stuck)
    w.wheel.validate(complete(6), 4)


def test_witness_k3_mode():
    # C_4 has min degree 2, so the k=3 mode stops at low degree first
    assert reduction_witness(cycle(4), 3) == LowDegree(vertex=0, bound=2)
    assert reduction_witness(complete_bipartite(3), 3) == TwinPair(u=0, v=1)
    w = reduction_witness(complete(4), 3)
    assert isinstance(w, Stuck)


def test_witness_mode_validation():
    with pytest.raises(GraphError):
        reduction_witness(complete(3), 5)
    with pytest.raises(GraphError):
        reduction_witness(Graph(0), 4)


# -- coloring ----------------------------------------------------------------------


def test_color4_k4_uses_four():
    result = color4(complete(4))
    assert result.succeeded
    assert result.coloring.colors_used == 4
    result.coloring.validate(complete(4))
    assert all(isinstance(s.witness, LowDegree) for s in result.trace)


def test_color4_k44_uses_two():
    result = color4(complete_bipartite(4))
    assert result.succeeded
    assert result.coloring.colors_used == 2
    result.coloring.validate(complete_bipartite(4))


def test_color4_tight_example():
    g = tight_example(4)
    result = color4(g)
    assert result.succeeded
    assert result.coloring.colors_used == 4
    result.coloring.validate(g)
    assert brute_chromatic_number(g) == 4  # four colors is optimal


def test_color4_stuck_on_k5():
    result = color4(complete(5))
    assert not result.succeeded
    assert result.coloring is None
    result.stuck.wheel.validate(complete(5), 4)


def test_color4_stuck_reports_original_ids():
    # K_6 plus a pendant vertex: the pendant is removed first, then the
    # reduction gets stuck inside the K_6 and the wheel must use original ids
    g = Graph(7, [(i, j) for i in range(6) for j in range(i + 1, 6)] + [(0, 6)])
    result = color4(g)
    assert not result.succeeded
    assert len(result.trace) == 1 and result.trace.steps[0].removed == 6
    result.stuck.wheel.validate(g, 4)


def test_color4_trace_matches_reduction_witness():
    """Each trace step is exactly what reduction_witness says on the
    corresponding induced subgraph (mapped back to original ids)."""
    import random

    rnd = random.Random(7)
    for _ in range(60):
        n = rnd.randint(1, 7)
        g = Graph.from_edge_code(n, rnd.getrandbits(n * (n - 1) // 2))
        result = color4(g)
        live = list(range(n))
        for step in result.trace:
            sub, idmap = induced_subgraph(g, live)
            back = {new: old for old, new in idmap.items()}
            w = reduction_witness(sub, 4)
            if isinstance(w, LowDegree):
                assert step.witness == LowDegree(vertex=back[w.vertex], bound=3)
            else:
                assert isinstance(w, TwinPair)
                assert step.witness == TwinPair(u=back[w.u], v=back[w.v])
            live.remove(step.removed)
        if result.succeeded:
            assert not live
            result.coloring.validate(g)
            assert result.coloring.colors_used <= 4


# -- tight constructions -------------------------------------------------------------


def test_tight_example_4_layout():
    g = tight_example(4)
    assert g.n == 7
    assert g.neighbors(4) == (0, 1, 2, 3)   # x over both cliques
    assert g.neighbors(5) == (0, 1, 6)      # a over H1 plus b
    assert g.neighbors(6) == (2, 3, 5)      # b over H2 plus a
    assert g.has_edge(0, 1) and g.has_edge(2, 3)


def test_tight_example_5():
    g = tight_example(5)
    assert g.n == 9
    assert brute_has_k_wheel(g, 5) is None
    assert brute_chromatic_number(g) == 5


def test_tight_example_rejects_small_k():
    with pytest.raises(GraphError):
        tight_example(3)


def test_tight_example_reduction_finds_low_degree():
    # a and b have degree k-1 = 3 for k=4
    g = tight_example(4)
    assert g.degree(5) == 3 and g.degree(6) == 3
    w = reduction_witness(g, 4)
    assert isinstance(w, LowDegree)


# -- statement verifiers ----------------------------------------------------------------


def test_verify_thm44_k44_passes():
    r = verify_statement(complete_bipartite(4), "thm-4.4")
    assert r.status is VerifyStatus.PASS


def test_verify_thm44_not_applicable():
    r = verify_statement(complete(6), "thm-4.4")
    assert r.status is VerifyStatus.NOT_APPLICABLE


def test_verify_thm48_petersen():
    r = verify_statement(petersen(), "thm-4.8")
    assert r.status is VerifyStatus.PASS


def test_verify_thm48_k5_not_applicable():
    r = verify_statement(complete(5), "thm-4.8")
    assert r.status is VerifyStatus.NOT_APPLICABLE


def test_verify_alias():
    r = verify_statement(petersen(), "thm-1.4")
    assert r.statement == "thm-1.4"
    assert r.status is VerifyStatus.PASS


def test_verify_lemma42():
    assert verify_statement(complete(6), "lemma-4.2").status is VerifyStatus.PASS
    assert verify_statement(cycle(5), "lemma-4.2").status is VerifyStatus.NOT_APPLICABLE


def test_verify_thm45_k4_vacuous():
    # K_4 has connectivity 3 but no ends at all
    r = verify_statement(complete(4), "thm-4.5")
    assert r.status is VerifyStatus.PASS


def test_verify_thm47_counts_branches():
    from wheelfree import ends

    g = cycle(5)
    r = verify_statement(g, "thm-4.7")
    assert r.status is VerifyStatus.PASS
    assert r.counters["low-degree-branch"] == len(ends(g))
    assert r.counters["k44-block-branch"] == 0


def test_verify_budget_exceeded_status():
    # a long cycle has connectivity 2 but exceeds the end-enumeration budget
    r = verify_statement(cycle(25), "thm-4.7")
    assert r.status is VerifyStatus.BUDGET_EXCEEDED
    # a big wheel has connectivity 3 and also exceeds the budget
    hub_and_rim = Graph(25, [(i, (i + 1) % 24) for i in range(24)] + [(24, i) for i in range(24)])
    r = verify_statement(hub_and_rim, "thm-4.5")
    assert r.status is VerifyStatus.BUDGET_EXCEEDED


def test_verify_unknown_statement():
    with pytest.raises(GraphError):
        verify_statement(complete(3), "thm-9.9")


def test_verify_cor15_on_wheel_graph():
    r = verify_statement(complete(5), "cor-1.5")
    assert r.status is VerifyStatus.NOT_APPLICABLE
    r = verify_statement(tight_example(4), "cor-1.5")
    assert r.status is VerifyStatus.PASS

"""Reduction witnesses, constructive 4-coloring, and checkable forms of
the structural statements about k-wheel-free graphs.

The reduction fact driving everything: a 4-wheel-free graph always has a
vertex of degree at most 3 or a pair of twins (non-adjacent vertices
with equal neighborhoods), and the analogous statement for 3-wheel-free
graphs with degree bound 2.  Peeling witnesses off and re-coloring on
the way back yields a proper coloring with at most 4 (resp. 3) colors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .connectivity import end_block, ends, vertex_connectivity
from .errors import (
    BudgetExceededError,
    CertificateError,
    GraphError,
    NoFragmentsError,
    TheoremViolationError,
)
from .generators import complete_bipartite
from .graph import Graph, bits, induced_subgraph
from .isomorphism import is_isomorphic
from .oracles import brute_chromatic_number
from .wheels import (
    Wheel,
    _almost_4_wheel_free_check,
    find_k_wheel,
    is_wheel_center,
    normalize_cycle,
)


# -------------------------------------------------------------------------
# witnesses
# -------------------------------------------------------------------------


@dataclass(frozen=True)
class TwinPair:
    """Non-adjacent u < v with N(u) = N(v)."""

    u: int
    v: int


@dataclass(frozen=True)
class LowDegree:
    """A vertex whose degree is at most the mode's bound (3 for k=4)."""

    vertex: int
    bound: int


@dataclass(frozen=True)
class Stuck:
    """Reduction cannot continue: the graph contains a k-wheel."""

    wheel: Wheel


ReductionWitness = TwinPair | LowDegree | Stuck


@dataclass(frozen=True)
class ReductionStep:
    removed: int
    witness: TwinPair | LowDegree


@dataclass
class ReductionTrace:
    """The elimination order: replaying the removals from the input graph
    reproduces each step's precondition."""

    steps: list[ReductionStep] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


def find_twins(g: Graph) -> tuple[int, int] | None:
    """The lexicographically first twin pair, or None.

    Equal adjacency masks already force non-adjacency (an adjacent pair
    with equal neighborhoods would need a loop).
    """
    adj = g.masks
    for u in range(g.n):
        au = adj[u]
        for v in range(u + 1, g.n):
            if adj[v] == au:
                return (u, v)
    return None


def reduction_witness(g: Graph, k: int = 4) -> ReductionWitness:
    """The first applicable witness: low degree, then twins, then a k-wheel.

    For k-wheel-free inputs one of the first two always exists; if no
    witness of any kind can be produced the impossible has happened and
    TheoremViolationError carries the graph out as a counterexample.
    """
    if k not in (3, 4):
        raise GraphError("reduction modes are k=3 and k=4")
    if g.n < 1:
        raise GraphError("reduction needs at least one vertex")
    bound = k - 1
    for v in range(g.n):
        if g.degree(v) <= bound:
            return LowDegree(vertex=v, bound=bound)
    tw = find_twins(g)
    if tw is not None:
        return TwinPair(u=tw[0], v=tw[1])
    wheel = find_k_wheel(g, k)
    if wheel is not None:
        return Stuck(wheel=wheel)
    raise TheoremViolationError(
        f"graph with min degree > {bound} and no twins contains no {k}-wheel", graph=g
    )


# -------------------------------------------------------------------------
# coloring
# -------------------------------------------------------------------------


@dataclass(frozen=True)
class Coloring:
    """A proper vertex coloring with colors drawn from 0..palette-1."""

    colors: tuple[int, ...]
    palette: int

    @property
    def colors_used(self) -> int:
        return len(set(self.colors))

    def validate(self, g: Graph) -> None:
        if len(self.colors) != g.n:
            raise CertificateError("coloring length differs from the vertex count")
        for c in self.colors:
            if not 0 <= c < self.palette:
                raise CertificateError(f"color {c} outside palette 0..{self.palette - 1}")
        for u, v in g.edges():
            if self.colors[u] == self.colors[v]:
                raise CertificateError(f"edge ({u},{v}) is monochromatic")


@dataclass
class ColoringResult:
    """Either a coloring with its full elimination trace, or the 4-wheel
    that stopped the reduction plus the partial trace."""

    coloring: Coloring | None
    trace: ReductionTrace
    stuck: Stuck | None = None

    @property
    def succeeded(self) -> bool:
        return self.coloring is not None


def color4(g: Graph) -> ColoringResult:
    """Constructive coloring by witness elimination, palette size 4.

    Low-degree vertices are removed and later given the least color
    missing from their neighborhood; the removed twin copies its
    partner's color.  Any subgraph of a 4-wheel-free graph is
    4-wheel-free, so on such inputs the reduction never gets stuck.
    """
    return _color_by_reduction(g, k=4)


def _color_by_reduction(g: Graph, k: int) -> ColoringResult:
    n = g.n
    adj = g.masks
    bound = k - 1
    live = (1 << n) - 1
    trace = ReductionTrace()
    while live:
        witness = None
        m = live
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            if (adj[v] & live).bit_count() <= bound:
                witness = LowDegree(vertex=v, bound=bound)
                break
        if witness is None:
            lv = list(bits(live))
            for i, u in enumerate(lv):
                au = adj[u] & live
                for v in lv[i + 1:]:
                    if adj[v] & live == au:
                        witness = TwinPair(u=u, v=v)
                        break
                if witness:
                    break
        if witness is None:
            sub_ids = list(bits(live))
            sub, idmap = induced_subgraph(g, sub_ids)
            wheel = find_k_wheel(sub, k)
            if wheel is None:
                raise TheoremViolationError(
                    f"no witness and no {k}-wheel in an irreducible graph", graph=g
                )
            back = {new: old for old, new in idmap.items()}
            rim = normalize_cycle([back[w] for w in wheel.rim])
            spokes = tuple(sorted((back[wheel.center], back[b]) for a, b in wheel.spokes))
            lifted = Wheel(center=back[wheel.center], rim=rim, spokes=spokes)
            return ColoringResult(coloring=None, trace=trace, stuck=Stuck(wheel=lifted))
        removed = witness.vertex if isinstance(witness, LowDegree) else witness.u
        trace.steps.append(ReductionStep(removed=removed, witness=witness))
        live &= ~(1 << removed)
    colors = [-1] * n
    for step in reversed(trace.steps):
        w = step.witness
        if isinstance(w, LowDegree):
            taken = {colors[u] for u in bits(adj[step.removed]) if colors[u] >= 0}
            c = 0
            while c in taken:
                c += 1
            colors[step.removed] = c
        else:
            colors[step.removed] = colors[w.v]
    return ColoringResult(coloring=Coloring(colors=tuple(colors), palette=k), trace=trace)


# -------------------------------------------------------------------------
# statement verifiers
# -------------------------------------------------------------------------


class VerifyStatus(Enum):
    PASS = "pass"
    NOT_APPLICABLE = "not-applicable"
    COUNTEREXAMPLE = "counterexample"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass
class VerifyResult:
    statement: str
    status: VerifyStatus
    detail: str = ""
    certificates: tuple = ()
    counters: dict[str, int] = field(default_factory=dict)

    @property
    def violated(self) -> bool:
        return self.status is VerifyStatus.COUNTEREXAMPLE


def _witness_statement(statement: str, g: Graph, k: int) -> VerifyResult:
    try:
        w = reduction_witness(g, k)
    except TheoremViolationError:
        return VerifyResult(
            statement,
            VerifyStatus.COUNTEREXAMPLE,
            detail=f"{k}-wheel-free graph with min degree > {k - 1} and no twins",
        )
    if isinstance(w, LowDegree):
        return VerifyResult(statement, VerifyStatus.PASS, detail=f"degree <= {w.bound} at {w.vertex}",
                            counters={"low-degree": 1})
    if isinstance(w, TwinPair):
        return VerifyResult(statement, VerifyStatus.PASS, detail=f"twins ({w.u},{w.v})",
                            counters={"twins": 1})
    return VerifyResult(statement, VerifyStatus.NOT_APPLICABLE,
                        detail=f"contains a {k}-wheel", certificates=(w.wheel,),
                        counters={"has-wheel": 1})


def _check_main_reduction(g: Graph) -> VerifyResult:
    return _witness_statement("thm-4.8", g, 4)


def _check_three_wheel_reduction(g: Graph) -> VerifyResult:
    return _witness_statement("thm-1.1", g, 3)


def _check_degree_bound(g: Graph) -> VerifyResult:
    """4-wheel-free graphs have a vertex of degree at most 4."""
    if g.n == 0:
        return VerifyResult("thm-1.2", VerifyStatus.NOT_APPLICABLE, detail="empty graph")
    if g.min_degree() <= 4:
        return VerifyResult("thm-1.2", VerifyStatus.PASS, detail="min degree <= 4")
    wheel = find_k_wheel(g, 4)
    if wheel is not None:
        return VerifyResult("thm-1.2", VerifyStatus.NOT_APPLICABLE,
                            detail="contains a 4-wheel", certificates=(wheel,))
    return VerifyResult("thm-1.2", VerifyStatus.COUNTEREXAMPLE,
                        detail="4-wheel-free with min degree > 4")


def _check_coloring(g: Graph) -> VerifyResult:
    """4-wheel-free graphs are 4-colorable, constructively and by oracle."""
    wheel = find_k_wheel(g, 4)
    if wheel is not None:
        return VerifyResult("cor-1.5", VerifyStatus.NOT_APPLICABLE,
                            detail="contains a 4-wheel", certificates=(wheel,))
    result = color4(g)
    if not result.succeeded:
        return VerifyResult("cor-1.5", VerifyStatus.COUNTEREXAMPLE,
                            detail="reduction got stuck on a 4-wheel-free graph",
                            certificates=(result.stuck.wheel,))
    try:
        result.coloring.validate(g)
    except CertificateError as exc:
        return VerifyResult("cor-1.5", VerifyStatus.COUNTEREXAMPLE,
                            detail=f"improper coloring: {exc}")
    if result.coloring.colors_used > 4:
        return VerifyResult("cor-1.5", VerifyStatus.COUNTEREXAMPLE,
                            detail=f"{result.coloring.colors_used} colors used")
    chi = brute_chromatic_number(g)
    if chi > 4:
        return VerifyResult("cor-1.5", VerifyStatus.COUNTEREXAMPLE,
                            detail=f"oracle chromatic number {chi} > 4")
    return VerifyResult("cor-1.5", VerifyStatus.PASS,
                        detail=f"colored with {result.coloring.colors_used}, oracle chi = {chi}")


_K44 = complete_bipartite(4)


def _check_four_connected(g: Graph) -> VerifyResult:
    """A 4-connected, almost-4-wheel-free graph is K_{4,4}."""
    if g.n < 1 or vertex_connectivity(g) < 4:
        return VerifyResult("thm-4.4", VerifyStatus.NOT_APPLICABLE, detail="not 4-connected")
    almost, centers = _almost_4_wheel_free_check(g)
    if not almost:
        return VerifyResult("thm-4.4", VerifyStatus.NOT_APPLICABLE,
                            detail=f"not almost 4-wheel-free ({len(centers)}+ centers)")
    if is_isomorphic(g, _K44):
        return VerifyResult("thm-4.4", VerifyStatus.PASS, detail="isomorphic to K_{4,4}")
    return VerifyResult("thm-4.4", VerifyStatus.COUNTEREXAMPLE,
                        detail=f"almost 4-wheel-free, 4-connected, centers {centers}, not K_{{4,4}}")


def _check_ends_of_3_connected(g: Graph, budget: int = 20) -> VerifyResult:
    """With connectivity exactly 3, ends avoiding all 4-wheel centers are trivial."""
    if g.n < 1 or vertex_connectivity(g) != 3:
        return VerifyResult("thm-4.5", VerifyStatus.NOT_APPLICABLE, detail="connectivity != 3")
    if g.n > budget:
        return VerifyResult("thm-4.5", VerifyStatus.BUDGET_EXCEEDED, detail=f"n={g.n} over budget")
    try:
        end_list = ends(g, budget=budget)
    except NoFragmentsError:
        return VerifyResult("thm-4.5", VerifyStatus.PASS, detail="no ends (complete graph)")
    for f in end_list:
        if len(f) == 1:
            continue
        if not any(is_wheel_center(g, v, 4) is not None for v in f):
            return VerifyResult("thm-4.5", VerifyStatus.COUNTEREXAMPLE,
                                detail=f"non-trivial end {f} with no 4-wheel center")
    return VerifyResult("thm-4.5", VerifyStatus.PASS, detail=f"{len(end_list)} ends checked")


def _check_two_degree_three(g: Graph) -> VerifyResult:
    """4-wheel-free graphs of connectivity 3 have two vertices of degree 3."""
    if g.n < 1 or vertex_connectivity(g) != 3:
        return VerifyResult("cor-4.6", VerifyStatus.NOT_APPLICABLE, detail="connectivity != 3")
    count = sum(1 for v in g.vertices() if g.degree(v) == 3)
    if count >= 2:
        return VerifyResult("cor-4.6", VerifyStatus.PASS, detail=f"{count} vertices of degree 3")
    wheel = find_k_wheel(g, 4)
    if wheel is not None:
        return VerifyResult("cor-4.6", VerifyStatus.NOT_APPLICABLE,
                            detail="contains a 4-wheel", certificates=(wheel,))
    return VerifyResult("cor-4.6", VerifyStatus.COUNTEREXAMPLE,
                        detail=f"4-wheel-free, kappa 3, only {count} vertices of degree 3")


def _check_ends_of_2_connected(g: Graph, budget: int = 20) -> VerifyResult:
    """4-wheel-free, connectivity 2: every end has a vertex of degree <= 3
    in the ambient graph, or its end block is K_{4,4}."""
    if g.n < 1 or vertex_connectivity(g) != 2:
        return VerifyResult("thm-4.7", VerifyStatus.NOT_APPLICABLE, detail="connectivity != 2")
    if g.n > budget:
        return VerifyResult("thm-4.7", VerifyStatus.BUDGET_EXCEEDED, detail=f"n={g.n} over budget")
    wheel = find_k_wheel(g, 4)
    if wheel is not None:
        return VerifyResult("thm-4.7", VerifyStatus.NOT_APPLICABLE,
                            detail="contains a 4-wheel", certificates=(wheel,))
    counters = {"low-degree-branch": 0, "k44-block-branch": 0}
    try:
        end_list = ends(g, budget=budget)
    except NoFragmentsError:
        return VerifyResult("thm-4.7", VerifyStatus.PASS, detail="no ends (complete graph)",
                            counters=counters)
    for f in end_list:
        if any(g.degree(v) <= 3 for v in f):
            counters["low-degree-branch"] += 1
            continue
        block = end_block(g, f, budget=budget)
        if is_isomorphic(block.graph, _K44):
            counters["k44-block-branch"] += 1
            continue
        return VerifyResult("thm-4.7", VerifyStatus.COUNTEREXAMPLE,
                            detail=f"end {f}: no low-degree vertex and block is not K_{{4,4}}",
                            counters=counters)
    return VerifyResult("thm-4.7", VerifyStatus.PASS,
                        detail=f"{len(end_list)} ends checked", counters=counters)


def _check_five_connected_centers(g: Graph) -> VerifyResult:
    """5-connected graphs: every vertex is a 4-wheel center."""
    if g.n < 1 or vertex_connectivity(g) < 5:
        return VerifyResult("lemma-4.2", VerifyStatus.NOT_APPLICABLE, detail="not 5-connected")
    missing = [v for v in g.vertices() if is_wheel_center(g, v, 4) is None]
    if missing:
        return VerifyResult("lemma-4.2", VerifyStatus.COUNTEREXAMPLE,
                            detail=f"vertices {missing} are not 4-wheel centers")
    return VerifyResult("lemma-4.2", VerifyStatus.PASS, detail="all vertices are centers")


def _check_triangle_centers(g: Graph) -> VerifyResult:
    """4-connected graphs: every vertex on a triangle is a 4-wheel center."""
    if g.n < 1 or vertex_connectivity(g) < 4:
        return VerifyResult("lemma-4.3", VerifyStatus.NOT_APPLICABLE, detail="not 4-connected")
    adj = g.masks
    in_triangle = [v for v in g.vertices()
                   if any(adj[u] & adj[v] & ~((1 << u) | (1 << v)) for u in bits(adj[v]))]
    if not in_triangle:
        return VerifyResult("lemma-4.3", VerifyStatus.PASS, detail="triangle-free (vacuous)")
    missing = [v for v in in_triangle if is_wheel_center(g, v, 4) is None]
    if missing:
        return VerifyResult("lemma-4.3", VerifyStatus.COUNTEREXAMPLE,
                            detail=f"triangle vertices {missing} are not centers")
    return VerifyResult("lemma-4.3", VerifyStatus.PASS,
                        detail=f"{len(in_triangle)} triangle vertices are all centers")


STATEMENTS = {
    "thm-4.8": ("4-wheel-free: twin pair or a vertex of degree <= 3", _check_main_reduction),
    "thm-1.4": ("alias of thm-4.8", _check_main_reduction),
    "thm-1.1": ("3-wheel-free: twin pair or a vertex of degree <= 2", _check_three_wheel_reduction),
    "thm-1.2": ("4-wheel-free: some vertex has degree <= 4", _check_degree_bound),
    "cor-1.5": ("4-wheel-free graphs are 4-colorable", _check_coloring),
    "thm-4.4": ("4-connected almost-4-wheel-free graphs are K_{4,4}", _check_four_connected),
    "thm-4.5": ("kappa=3: ends without 4-wheel centers are trivial", _check_ends_of_3_connected),
    "cor-4.6": ("4-wheel-free, kappa=3: two vertices of degree 3", _check_two_degree_three),
    "thm-4.7": ("4-wheel-free, kappa=2: low-degree vertex in each end or K_{4,4} block",
                _check_ends_of_2_connected),
    "lemma-4.2": ("5-connected: every vertex centers a 4-wheel", _check_five_connected_centers),
    "lemma-4.3": ("4-connected: triangle vertices center 4-wheels", _check_triangle_centers),
}


def verify_statement(g: Graph, statement: str) -> VerifyResult:
    """Run one statement checker; see STATEMENTS for the catalog.

    Returns pass, not-applicable (preconditions unmet, with evidence),
    budget-exceeded, or a counterexample report that would constitute a
    disproof.
    """
    try:
        _, checker = STATEMENTS[statement]
    except KeyError:
        raise GraphError(f"unknown statement {statement!r}; known: {sorted(STATEMENTS)}") from None
    try:
        result = checker(g)
    except BudgetExceededError as exc:
        return VerifyResult(statement, VerifyStatus.BUDGET_EXCEEDED, detail=str(exc))
    if statement == "thm-1.4":
        result.statement = "thm-1.4"
    return result

"""Wheel detection, cycles through prescribed vertices, and cutset
certificates for vertex sets that no cycle can cover.

The cycle searches are exact depth-first path searches with a
reachability prune; wheel detection reduces to "is there a cycle through
some k-subset of N(v) avoiding v".
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .connectivity import vertex_connectivity
from .errors import CertificateError, GraphError, TheoremViolationError
from .graph import Graph, VertexSet, bits, component_of, induced_subgraph


def normalize_cycle(seq) -> tuple[int, ...]:
    """Rotate to the smallest vertex and orient toward the smaller second."""
    seq = list(seq)
    k = seq.index(min(seq))
    seq = seq[k:] + seq[:k]
    if len(seq) > 2 and seq[-1] < seq[1]:
        seq = [seq[0]] + seq[:0:-1]
    return tuple(seq)


def is_cycle(g: Graph, seq) -> bool:
    """True iff ``seq`` lists the vertices of a cycle of g in order."""
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    return all(g.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))


def _cycle_through(adj: tuple[int, ...], req: int, forbidden: int) -> list[int] | None:
    """A cycle containing every vertex of ``req`` and avoiding ``forbidden``.

    Exact: returns None only when no such cycle exists.  Deterministic:
    neighbors are explored in ascending order.
    """
    if req & forbidden:
        return None
    start = (req & -req).bit_length() - 1
    startbit = 1 << start
    adj_start = adj[start]
    path = [start]
    visited = startbit
    iters = [adj_start & ~forbidden]
    while iters:
        m = iters[-1]
        if not m:
            iters.pop()
            visited ^= 1 << path.pop()
            continue
        b = m & -m
        iters[-1] = m ^ b
        w = b.bit_length() - 1
        nvis = visited | b
        if len(path) >= 2 and (adj[w] & startbit) and not req & ~nvis:
            path.append(w)
            return path
        cand = adj[w] & ~nvis & ~forbidden
        if not cand:
            continue
        # prune: the rest of the cycle lives in the unvisited region reachable
        # from w, and it must come back to a neighbor of the start
        reach = cand
        frontier = cand
        while frontier:
            nxt = 0
            mm = frontier
            while mm:
                bb = mm & -mm
                mm ^= bb
                nxt |= adj[bb.bit_length() - 1]
            frontier = nxt & ~nvis & ~forbidden & ~reach
            reach |= frontier
        if req & ~nvis & ~reach:
            continue
        if not (reach | b) & adj_start:
            continue
        path.append(w)
        visited = nvis
        iters.append(cand)
    return None


def _path_through(adj: tuple[int, ...], a: int, b: int, req: int, forbid_first: int) -> list[int] | None:
    """A simple path from a to b of length >= 2 edges covering ``req``,
    whose first step avoids the vertices in ``forbid_first``."""
    bbit = 1 << b
    path = [a]
    visited = 1 << a
    iters = [adj[a] & ~forbid_first & ~bbit]
    while iters:
        m = iters[-1]
        if not m:
            iters.pop()
            visited ^= 1 << path.pop()
            continue
        nb = m & -m
        iters[-1] = m ^ nb
        w = nb.bit_length() - 1
        nvis = visited | nb
        if (adj[w] & bbit) and not req & ~(nvis | bbit):
            path.append(w)
            path.append(b)
            return path
        cand = adj[w] & ~nvis & ~bbit
        if not cand:
            continue
        reach = cand
        frontier = cand
        while frontier:
            nxt = 0
            mm = frontier
            while mm:
                bb2 = mm & -mm
                mm ^= bb2
                nxt |= adj[bb2.bit_length() - 1]
            frontier = nxt & ~nvis & ~bbit & ~reach
            reach |= frontier
        if req & ~nvis & ~bbit & ~reach:
            continue
        if not (reach | nb) & adj[b]:
            continue
        path.append(w)
        visited = nvis
        iters.append(cand)
    return None


def find_cycle_through(g: Graph, targets: VertexSet) -> tuple[int, ...] | None:
    """A cycle of g through every vertex of ``targets``, or None.

    The search is exact, so None is a definitive absence.
    """
    req = g.vertex_mask(targets)
    if req == 0:
        raise GraphError("need at least one target vertex")
    found = _cycle_through(g.masks, req, 0)
    return normalize_cycle(found) if found else None


def find_cycle_through_edge(g: Graph, edge: tuple[int, int], targets: VertexSet) -> tuple[int, ...] | None:
    """A cycle using ``edge`` and passing through ``targets``, or None."""
    a, b = edge
    if not g.has_edge(a, b):
        raise GraphError(f"({a},{b}) is not an edge")
    req = g.vertex_mask(targets)
    # a cycle through the edge ab = edge ab plus an a-b path of >= 2 edges
    found = _path_through(g.masks, a, b, req & ~(1 << a) & ~(1 << b), 1 << b)
    return normalize_cycle(found) if found else None


# -------------------------------------------------------------------------
# wheels
# -------------------------------------------------------------------------


@dataclass(frozen=True)
class Wheel:
    """A cycle (the rim) plus a center outside it with spokes to the rim."""

    center: int
    rim: tuple[int, ...]
    spokes: tuple[tuple[int, int], ...]

    @property
    def k(self) -> int:
        return len(self.spokes)

    def validate(self, g: Graph, k: int = 3) -> None:
        if not is_cycle(g, self.rim):
            raise CertificateError(f"rim {self.rim} is not a cycle of the graph")
        if self.center in self.rim:
            raise CertificateError("center lies on the rim")
        rim_set = set(self.rim)
        seen = set()
        for u, v in self.spokes:
            if u != self.center or v not in rim_set:
                raise CertificateError(f"spoke ({u},{v}) is not center-to-rim")
            if not g.has_edge(u, v):
                raise CertificateError(f"spoke ({u},{v}) is not an edge")
            if v in seen:
                raise CertificateError(f"duplicate spoke to {v}")
            seen.add(v)
        if len(self.spokes) < k:
            raise CertificateError(f"only {len(self.spokes)} spokes, need {k}")


def _wheel_at(g: Graph, v: int, rim: list[int]) -> Wheel:
    rim = normalize_cycle(rim)
    rim_mask = 0
    for w in rim:
        rim_mask |= 1 << w
    spokes = tuple((v, w) for w in bits(g.masks[v] & rim_mask))
    return Wheel(center=v, rim=rim, spokes=spokes)


def is_wheel_center(g: Graph, v: int, k: int) -> Wheel | None:
    """A k-wheel centered at v, or None (exact).

    Enumerates k-subsets of N(v) and looks for a cycle through the
    subset avoiding v; a vertex of degree < k can never be a center.
    """
    if k < 3:
        raise GraphError("wheels need at least 3 spokes")
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    av = g.masks[v]
    if av.bit_count() < k:
        return None
    fb = 1 << v
    for sub in combinations(bits(av), k):
        req = 0
        for w in sub:
            req |= 1 << w
        rim = _cycle_through(g.masks, req, fb)
        if rim is not None:
            return _wheel_at(g, v, rim)
    return None


def wheel_centers(g: Graph, k: int = 4) -> tuple[int, ...]:
    """All vertices that are the center of some k-wheel."""
    return tuple(v for v in g.vertices() if is_wheel_center(g, v, k) is not None)


def find_k_wheel(g: Graph, k: int) -> Wheel | None:
    """Some k-wheel of g, or None if g is k-wheel-free (exact).

    High-degree vertices are tried first, which finds witnesses quickly
    in dense graphs without affecting exactness.
    """
    order = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    for v in order:
        w = is_wheel_center(g, v, k)
        if w is not None:
            return w
    return None


def is_k_wheel_free(g: Graph, k: int) -> bool:
    return find_k_wheel(g, k) is None


def _almost_4_wheel_free_check(g: Graph) -> tuple[bool, tuple[int, ...]]:
    """(verdict, centers found); bails out once four centers exist."""
    centers = []
    for v in g.vertices():
        if is_wheel_center(g, v, 4) is not None:
            centers.append(v)
            if len(centers) > 3:
                return False, tuple(centers)
    for i, a in enumerate(centers):
        for b in centers[i + 1:]:
            if not g.has_edge(a, b):
                return False, tuple(centers)
    return True, tuple(centers)


def is_almost_4_wheel_free(g: Graph) -> bool:
    """At most three 4-wheel centers, and those centers form a clique."""
    verdict, _ = _almost_4_wheel_free_check(g)
    return verdict


# -------------------------------------------------------------------------
# cutset certificates
# -------------------------------------------------------------------------


@dataclass
class WMCertificate:
    """Witness that no cycle of g - x covers the four targets: removing
    {x} + cutset leaves each target in its own connected component."""

    x: int
    targets: tuple[int, ...]
    cutset: tuple[int, ...]
    components: dict[int, tuple[int, ...]]

    def validate(self, g: Graph) -> None:
        tmask = g.vertex_mask(self.targets)
        smask = g.vertex_mask(self.cutset)
        if smask & tmask:
            raise CertificateError("cutset intersects the targets")
        if (smask >> self.x) & 1:
            raise CertificateError("cutset contains x")
        if (tmask >> self.x) & 1:
            raise CertificateError("targets contain x")
        live = (1 << g.n) - 1 & ~smask & ~(1 << self.x)
        seen = 0
        for t in self.targets:
            comp = component_of(g.masks, live, t)
            if comp & seen:
                raise CertificateError(f"target {t} shares a component with another target")
            seen |= comp
            stored = self.components.get(t)
            if stored is None or g.vertex_mask(stored) != comp:
                raise CertificateError(f"stored component of {t} is not the full component")


def wm_certificate(g: Graph, x: int, targets: VertexSet) -> WMCertificate | None:
    """Search for a 3-vertex cutset that scatters the four targets into
    distinct components of g - x.

    Requires the four targets to be neighbors of x with no cycle of
    g - x through all of them (a cycle makes the certificate
    meaningless and is rejected).  When g - x is 3-connected such a
    cutset always exists, so coming up empty there raises
    TheoremViolationError; for less connected inputs None is returned.
    """
    tmask = g.vertex_mask(targets)
    if tmask.bit_count() != 4:
        raise GraphError("exactly four target vertices are required")
    if not 0 <= x < g.n:
        raise GraphError(f"vertex {x} out of range")
    if (tmask >> x) & 1:
        raise GraphError("x must not be one of the targets")
    if tmask & ~g.masks[x]:
        raise GraphError("targets must all be neighbors of x")
    if _cycle_through(g.masks, tmask, 1 << x) is not None:
        raise GraphError("a cycle through the targets exists; no certificate applies")
    xs = tuple(bits(tmask))
    pool = [v for v in g.vertices() if v != x and not (tmask >> v) & 1]
    full = (1 << g.n) - 1
    for sset in combinations(pool, 3):
        smask = (1 << sset[0]) | (1 << sset[1]) | (1 << sset[2])
        live = full & ~smask & ~(1 << x)
        comps = {}
        seen = 0
        ok = True
        for t in xs:
            comp = component_of(g.masks, live, t)
            if comp & seen:
                ok = False
                break
            seen |= comp
            comps[t] = tuple(bits(comp))
        if ok:
            return WMCertificate(x=x, targets=xs, cutset=tuple(sset), components=comps)
    # guarantee regime: with g - x 3-connected a certificate must exist
    gx, _ = induced_subgraph(g, [v for v in g.vertices() if v != x])
    if gx.n >= 1 and vertex_connectivity(gx) >= 3:
        raise TheoremViolationError(
            "no scattering cutset found although one is guaranteed", graph=g
        )
    return None

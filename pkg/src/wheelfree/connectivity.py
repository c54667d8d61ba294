"""Vertex connectivity, fans of internally disjoint paths, and the
fragment / end / end-block decomposition.

Connectivity is computed exactly with unit-capacity vertex-split max
flow over non-adjacent vertex pairs; fragments and ends are enumerated
straight from their definitions over all vertex subsets, guarded by a
size budget.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BudgetExceededError,
    CertificateError,
    GraphError,
    NoFragmentsError,
    TheoremViolationError,
)
from .graph import Graph, VertexSet, bits, induced_subgraph, mask_connected


# -------------------------------------------------------------------------
# unit-capacity vertex-split flow
#
# Node layout: v_in = v, v_out = v + n; source is x_out, sinks vary.
# The residual graph is a list of int masks (bit j of res[i] = arc i->j).
# -------------------------------------------------------------------------


def _augment(res: list[int], src: int, snk: int, parent: list[int]) -> bool:
    """Push one unit along a shortest residual path; False if none exists."""
    visited = 1 << src
    queue = [src]
    qi = 0
    while qi < len(queue):
        u = queue[qi]
        qi += 1
        m = res[u] & ~visited
        if not m:
            continue
        visited |= m
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            parent[v] = u
            if v == snk:
                while v != src:
                    u = parent[v]
                    res[u] &= ~(1 << v)
                    res[v] |= 1 << u
                    v = u
                return True
            queue.append(v)
    return False


def _pair_flow_residual(adj: tuple[int, ...], n: int, s: int, t: int) -> list[int]:
    res = [0] * (2 * n)
    for v in range(n):
        if v != s and v != t:
            res[v] = 1 << (v + n)
    for u in range(n):
        res[u + n] |= adj[u]
    return res


def _st_connectivity(adj: tuple[int, ...], n: int, s: int, t: int, stop_at: int) -> int:
    """Internally disjoint s-t paths for non-adjacent s,t, capped at stop_at."""
    res = _pair_flow_residual(adj, n, s, t)
    src, snk = s + n, t
    flow = 0
    common = adj[s] & adj[t]
    while common and flow < stop_at:
        b = common & -common
        common ^= b
        w = b.bit_length() - 1
        res[src] &= ~(1 << w)
        res[w] &= ~(1 << (w + n))
        res[w] |= 1 << src
        res[w + n] &= ~(1 << snk)
        res[w + n] |= 1 << w
        res[snk] |= 1 << (w + n)
        flow += 1
    parent = [0] * (2 * n)
    while flow < stop_at and _augment(res, src, snk, parent):
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """The largest k such that g is k-connected.

    Complete graphs give n-1 (so a single vertex gives 0) and
    disconnected graphs give 0.  Exact: every non-adjacent pair is
    screened, with a common-neighborhood lower bound skipping pairs that
    cannot lower the running minimum.
    """
    n = g.n
    if n < 1:
        raise GraphError("vertex_connectivity requires at least one vertex")
    adj = g.masks
    degs = [a.bit_count() for a in adj]
    best = min(degs)
    if best == n - 1:
        return n - 1
    full = (1 << n) - 1
    if not mask_connected(adj, full):
        return 0
    # Some vertex of {v0} u N(v0) lies outside any minimum cutset, and every
    # vertex across that cutset from it is non-adjacent to it, so these pairs
    # suffice.
    v0 = degs.index(best)
    pairs = [(v0, u) for u in bits(full & ~adj[v0] & ~(1 << v0))]
    nbrs = list(bits(adj[v0]))
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1:]:
            if not (adj[a] >> b) & 1:
                pairs.append((a, b))
    for s, t in pairs:
        if best <= 1:
            break
        if (adj[s] & adj[t]).bit_count() >= best:
            continue
        f = _st_connectivity(adj, n, s, t, best)
        if f < best:
            best = f
    return best


# -------------------------------------------------------------------------
# fans
# -------------------------------------------------------------------------


@dataclass(frozen=True)
class Fan:
    """k internally disjoint paths from ``origin`` into ``targets``.

    Paths share only the origin, stop at their first target vertex, and
    are stored sorted for reproducibility.
    """

    origin: int
    targets: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.paths)

    @property
    def endpoints(self) -> tuple[int, ...]:
        return tuple(sorted(p[-1] for p in self.paths))

    def validate(self, g: Graph) -> None:
        tmask = 0
        for v in self.targets:
            tmask |= 1 << v
        if (tmask >> self.origin) & 1:
            raise CertificateError("fan origin lies in the target set")
        seen_internal = set()
        ends = set()
        for p in self.paths:
            if p[0] != self.origin:
                raise CertificateError(f"path {p} does not start at the origin")
            if len(set(p)) != len(p):
                raise CertificateError(f"path {p} repeats a vertex")
            for a, b in zip(p, p[1:]):
                if not g.has_edge(a, b):
                    raise CertificateError(f"path {p} uses the non-edge ({a},{b})")
            if not (tmask >> p[-1]) & 1:
                raise CertificateError(f"path {p} does not end in the target set")
            for v in p[1:-1]:
                if (tmask >> v) & 1:
                    raise CertificateError(f"internal vertex {v} of {p} lies in the targets")
            interior = set(p[1:])
            if interior & seen_internal:
                raise CertificateError("paths share a vertex other than the origin")
            seen_internal |= interior
            ends.add(p[-1])
        if len(ends) != len(self.paths):
            raise CertificateError("paths do not reach pairwise distinct targets")


def _fan_residual(adj: tuple[int, ...], n: int, x: int, ymask: int) -> list[int]:
    """Residual network for fans: sink node is 2n, target in-nodes feed it."""
    res = [0] * (2 * n + 1)
    sink_bit = 1 << (2 * n)
    for v in range(n):
        vb = 1 << v
        if ymask & vb:
            res[v] = sink_bit
        elif v != x:
            res[v] = 1 << (v + n)
    for u in range(n):
        res[u + n] |= adj[u]
    return res


def _apply_path(res: list[int], nodes: list[int]) -> None:
    for a, b in zip(nodes, nodes[1:]):
        res[a] &= ~(1 << b)
        res[b] |= 1 << a


def _extract_fan_paths(res: list[int], adj: tuple[int, ...], n: int, x: int, ymask: int) -> list[tuple[int, ...]]:
    """Decompose the flow recorded in ``res`` into origin-to-target paths."""
    fresh = _fan_residual(adj, n, x, ymask)
    src, sink = x + n, 2 * n
    paths = []
    used = fresh[src] & ~res[src]
    for b in sorted(bits(used)):
        node = b
        path = [x]
        while node != sink:
            path.append(node)  # node is always an in-node id == vertex id
            out = fresh[node] & ~res[node]
            nxt = (out & -out).bit_length() - 1
            if nxt == sink:
                break
            # in-node -> out-node, then follow the out-node's flow arc
            out2 = fresh[nxt] & ~res[nxt]
            node = (out2 & -out2).bit_length() - 1
        paths.append(tuple(path))
    return sorted(paths)


def find_k_fan(g: Graph, x: int, targets: VertexSet, k: int) -> Fan | None:
    """An exact k-fan from x into ``targets``, or None when none exists.

    Guaranteed to succeed whenever the graph is k-connected and the
    target set has at least k vertices.
    """
    n = g.n
    if not 0 <= x < n:
        raise GraphError(f"origin {x} out of range")
    ymask = g.vertex_mask(targets)
    if (ymask >> x) & 1:
        raise GraphError("origin must not lie in the target set")
    if k < 1:
        raise GraphError("fan size k must be positive")
    if ymask.bit_count() < k:
        raise GraphError(f"need at least {k} targets, got {ymask.bit_count()}")
    adj = g.masks
    res = _fan_residual(adj, n, x, ymask)
    src, sink = x + n, 2 * n
    flow = 0
    direct = adj[x] & ymask
    while direct and flow < k:
        b = direct & -direct
        direct ^= b
        y = b.bit_length() - 1
        _apply_path(res, [src, y, sink])
        flow += 1
    parent = [0] * (2 * n + 1)
    while flow < k and _augment(res, src, sink, parent):
        flow += 1
    if flow < k:
        return None
    paths = _extract_fan_paths(res, adj, n, x, ymask)
    return Fan(origin=x, targets=tuple(bits(ymask)), paths=tuple(paths))


def extend_fan(g: Graph, fan: Fan, k: int) -> Fan:
    """Grow ``fan`` into a k-fan over the same origin and targets whose
    endpoint set contains the endpoints of ``fan``.

    Requires a k-connected graph (k >= 2) and at least k targets; with
    those preconditions met a failure to extend cannot legitimately
    happen and raises TheoremViolationError.
    """
    if k < 2:
        raise GraphError("extend_fan requires k >= 2")
    if fan.k > k:
        raise GraphError(f"fan already has {fan.k} > {k} paths")
    fan.validate(g)
    if len(fan.targets) < k:
        raise GraphError(f"need at least {k} targets, got {len(fan.targets)}")
    if vertex_connectivity(g) < k:
        raise GraphError(f"graph is not {k}-connected")
    n = g.n
    adj = g.masks
    ymask = g.vertex_mask(fan.targets)
    res = _fan_residual(adj, n, fan.origin, ymask)
    src, sink = fan.origin + n, 2 * n
    for p in fan.paths:
        nodes = [src]
        for v in p[1:-1]:
            nodes.extend((v, v + n))
        nodes.extend((p[-1], sink))
        _apply_path(res, nodes)
    flow = fan.k
    parent = [0] * (2 * n + 1)
    while flow < k and _augment(res, src, sink, parent):
        flow += 1
    if flow < k:
        raise TheoremViolationError(
            f"could not extend a {fan.k}-fan to a {k}-fan in a {k}-connected graph",
            graph=g,
        )
    paths = _extract_fan_paths(res, adj, n, fan.origin, ymask)
    out = Fan(origin=fan.origin, targets=fan.targets, paths=tuple(paths))
    if not set(fan.endpoints) <= set(out.endpoints):
        raise TheoremViolationError("fan extension dropped an endpoint", graph=g)
    return out


# -------------------------------------------------------------------------
# fragments, ends, end blocks
# -------------------------------------------------------------------------


def _fragment_masks(adj: tuple[int, ...], n: int, kappa: int) -> list[int]:
    full = (1 << n) - 1
    out = []
    for smask in range(1, full):
        nb = 0
        m = smask
        while m:
            b = m & -m
            m ^= b
            nb |= adj[b.bit_length() - 1]
        nb &= ~smask
        if nb.bit_count() == kappa and full & ~smask & ~nb:
            out.append(smask)
    return out


def is_fragment(g: Graph, f: VertexSet) -> bool:
    """Definition check: |N(F)| equals the connectivity and F-bar is non-empty."""
    fmask = g.vertex_mask(f)
    if fmask == 0 or fmask == (1 << g.n) - 1:
        return False
    kappa = vertex_connectivity(g)
    nb = 0
    for v in bits(fmask):
        nb |= g.masks[v]
    nb &= ~fmask
    fbar = (1 << g.n) - 1 & ~fmask & ~nb
    return nb.bit_count() == kappa and fbar != 0


def fragments(g: Graph, budget: int = 20) -> list[tuple[int, ...]]:
    """All fragments, sorted lexicographically.

    Raises NoFragmentsError for complete graphs and the single vertex
    (which have none), and BudgetExceededError instead of guessing when
    the subset enumeration would be too large.
    """
    if g.n > budget:
        raise BudgetExceededError(f"fragment enumeration budget is n <= {budget}, got {g.n}")
    if g.n <= 1 or g.is_complete():
        raise NoFragmentsError("complete graphs and the single vertex have no fragments")
    kappa = vertex_connectivity(g)
    masks = _fragment_masks(g.masks, g.n, kappa)
    return sorted(tuple(bits(m)) for m in masks)


def ends(g: Graph, budget: int = 20) -> list[tuple[int, ...]]:
    """All ends (inclusion-minimal fragments), sorted lexicographically."""
    if g.n > budget:
        raise BudgetExceededError(f"end enumeration budget is n <= {budget}, got {g.n}")
    if g.n <= 1 or g.is_complete():
        raise NoFragmentsError("complete graphs and the single vertex have no fragments")
    kappa = vertex_connectivity(g)
    masks = _fragment_masks(g.masks, g.n, kappa)
    minimal = [f for f in masks if not any(h != f and h & ~f == 0 for h in masks)]
    return sorted(tuple(bits(m)) for m in minimal)


@dataclass
class EndBlock:
    """An end F, its attachment N(F), and the block graph on their union
    with N(F) completed into a clique.

    ``graph`` is relabeled to dense ids via ``vertex_map`` (original ->
    block id); ``marker_edges`` are the clique edges that had to be
    added, in original ids.
    """

    fragment: tuple[int, ...]
    attachment: tuple[int, ...]
    graph: Graph
    vertex_map: dict[int, int]
    marker_edges: tuple[tuple[int, int], ...]

    def validate(self, g: Graph) -> None:
        kappa = vertex_connectivity(g)
        if len(self.attachment) != kappa:
            raise CertificateError("attachment size differs from the graph connectivity")
        att = set(self.attachment)
        for u, v in self.marker_edges:
            if u not in att or v not in att:
                raise CertificateError(f"marker edge ({u},{v}) leaves the attachment")
            if g.has_edge(u, v):
                raise CertificateError(f"marker edge ({u},{v}) already exists in the graph")
        h = self.graph
        for u in self.attachment:
            for v in self.attachment:
                if u < v and not h.has_edge(self.vertex_map[u], self.vertex_map[v]):
                    raise CertificateError("attachment is not a clique in the block graph")
        for old_u, new_u in self.vertex_map.items():
            for old_v, new_v in self.vertex_map.items():
                if old_u < old_v and g.has_edge(old_u, old_v) and not h.has_edge(new_u, new_v):
                    raise CertificateError("block graph misses an original edge")


def end_block(g: Graph, f: VertexSet, verify: bool = False, budget: int = 20) -> EndBlock:
    """Build the end block of the end ``f``.

    With ``verify=True`` and a non-trivial end, also asserts that the
    block is strictly more connected than the ambient graph (raising
    TheoremViolationError if that ever failed).
    """
    fmask = g.vertex_mask(f)
    fverts = tuple(bits(fmask))
    if fverts not in ends(g, budget=budget):
        raise GraphError(f"{fverts} is not an end of the graph")
    nb = 0
    for v in fverts:
        nb |= g.masks[v]
    nb &= ~fmask
    attachment = tuple(bits(nb))
    keep = tuple(bits(fmask | nb))
    sub, idmap = induced_subgraph(g, keep)
    markers = []
    extra_edges = []
    for i, u in enumerate(attachment):
        for v in attachment[i + 1:]:
            if not g.has_edge(u, v):
                markers.append((u, v))
                extra_edges.append((idmap[u], idmap[v]))
    if extra_edges:
        masks = list(sub.masks)
        for a, b in extra_edges:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        sub = Graph.from_masks(masks)
    block = EndBlock(
        fragment=fverts,
        attachment=attachment,
        graph=sub,
        vertex_map=idmap,
        marker_edges=tuple(markers),
    )
    if verify and len(fverts) >= 2:
        kappa = vertex_connectivity(g)
        if vertex_connectivity(sub) < kappa + 1:
            raise TheoremViolationError(
                "end block of a non-trivial end is not more connected than the graph",
                graph=g,
            )
    return block

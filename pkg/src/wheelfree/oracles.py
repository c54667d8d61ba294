"""Independent brute-force ground truth and reproducible graph pools.

The oracles here deliberately share no search code with the fast paths
they cross-check: connectivity is settled by enumerating cutsets,
wheels by enumerating all cycles, colorability by plain backtracking.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterator

from .errors import BudgetExceededError, GraphError
from .graph import Graph, bits, mask_connected
from .isomorphism import canonical_code
from .wheels import Wheel, normalize_cycle

ORACLE_BUDGET = 12

_subset_masks_cache: dict[tuple[int, int], list[int]] = {}


def _subset_masks(n: int, size: int) -> list[int]:
    key = (n, size)
    if key not in _subset_masks_cache:
        out = []
        for combo in combinations(range(n), size):
            m = 0
            for v in combo:
                m |= 1 << v
            out.append(m)
        _subset_masks_cache[key] = out
    return _subset_masks_cache[key]


def _check_budget(g: Graph, what: str) -> None:
    if g.n > ORACLE_BUDGET:
        raise BudgetExceededError(f"{what} oracle budget is n <= {ORACLE_BUDGET}, got {g.n}")


# -------------------------------------------------------------------------
# chromatic number
# -------------------------------------------------------------------------


def _colorable(adj: tuple[int, ...], order: list[int], k: int) -> list[int] | None:
    """Backtracking k-colorability along ``order``; first vertex symmetry-broken."""
    n = len(order)
    colors = {}

    def rec(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        taken = set()
        m = adj[v]
        while m:
            b = m & -m
            m ^= b
            u = b.bit_length() - 1
            if u in colors:
                taken.add(colors[u])
        limit = min(k, used + 1)
        for c in range(limit):
            if c in taken:
                continue
            colors[v] = c
            if rec(i + 1, max(used, c + 1)):
                return True
            del colors[v]
        return False

    if rec(0, 0):
        return [colors[v] for v in sorted(colors)]
    return None


def brute_chromatic_number(g: Graph) -> int:
    """Exact chromatic number by backtracking over color classes."""
    _check_budget(g, "chromatic number")
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    adj = g.masks
    order = sorted(range(g.n), key=lambda v: -adj[v].bit_count())
    # greedy clique along the degree order gives a cheap lower bound
    clique = 0
    for v in order:
        if (clique & ~adj[v]) == 0:
            clique |= 1 << v
    lb = clique.bit_count()
    for k in range(max(lb, 2), g.n + 1):
        if _colorable(adj, order, k) is not None:
            return k
    return g.n


# -------------------------------------------------------------------------
# wheels via full cycle enumeration
# -------------------------------------------------------------------------


def _iter_cycles(adj: tuple[int, ...], n: int) -> Iterator[tuple[int, list[int]]]:
    """All cycles, each exactly once: start at the cycle's smallest vertex,
    extend through larger vertices only, and fix the direction by
    requiring the second vertex to be smaller than the last."""
    for s in range(n):
        above = -1 << (s + 1)
        adj_s = adj[s]
        path = [s]
        visited = 1 << s
        iters = [adj_s & above]
        while iters:
            m = iters[-1]
            if not m:
                iters.pop()
                visited ^= 1 << path.pop()
                continue
            b = m & -m
            iters[-1] = m ^ b
            w = b.bit_length() - 1
            visited |= b
            path.append(w)
            if len(path) >= 3 and (adj_s >> w) & 1 and path[1] < path[-1]:
                yield visited, path
            iters.append(adj[w] & above & ~visited)


def brute_has_k_wheel(g: Graph, k: int) -> Wheel | None:
    """Exhaustive wheel search: every cycle against every outside vertex."""
    _check_budget(g, "wheel")
    if k < 3:
        raise GraphError("wheels need at least 3 spokes")
    adj = g.masks
    full = (1 << g.n) - 1
    for cyc_mask, path in _iter_cycles(adj, g.n):
        outside = full & ~cyc_mask
        m = outside
        while m:
            b = m & -m
            m ^= b
            u = b.bit_length() - 1
            hits = adj[u] & cyc_mask
            if hits.bit_count() >= k:
                rim = normalize_cycle(path)
                spokes = tuple((u, w) for w in bits(hits))
                return Wheel(center=u, rim=rim, spokes=spokes)
    return None


# -------------------------------------------------------------------------
# connectivity via cutset enumeration
# -------------------------------------------------------------------------


def brute_vertex_connectivity(g: Graph) -> int:
    """Smallest size of a disconnecting vertex set; n-1 when none exists."""
    _check_budget(g, "connectivity")
    n = g.n
    if n < 1:
        raise GraphError("connectivity needs at least one vertex")
    adj = g.masks
    full = (1 << n) - 1
    for size in range(0, n - 1):
        for smask in _subset_masks(n, size):
            if not mask_connected(adj, full & ~smask):
                return size
    return n - 1


# -------------------------------------------------------------------------
# pools
# -------------------------------------------------------------------------


class SplitMix64:
    """splitmix64: a tiny public-domain PRNG with stable cross-platform
    output (increment 0x9E3779B97F4A7C15; mix constants
    0xBF58476D1CE4E5B9 and 0x94D049BB133111EB)."""

    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self._state = seed & self._MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & self._MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self._MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self._MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) / (1 << 53)


def _make_filter(min_degree: int | None, connectivity_at_least: int | None,
                 wheel_free: int | None) -> Callable[[Graph], bool]:
    def accept(g: Graph) -> bool:
        if min_degree is not None and g.min_degree() < min_degree:
            return False
        if connectivity_at_least is not None:
            from .connectivity import vertex_connectivity

            if g.n < 1 or vertex_connectivity(g) < connectivity_at_least:
                return False
        if wheel_free is not None and brute_has_k_wheel(g, wheel_free) is not None:
            return False
        return True

    return accept


class GraphPool:
    """A deterministic, re-iterable stream of graphs described by a
    human-readable descriptor string."""

    def __init__(self, descriptor: str, factory: Callable[[], Iterator[Graph]],
                 size: int | None = None):
        self.descriptor = descriptor
        self._factory = factory
        self.size = size

    def __iter__(self) -> Iterator[Graph]:
        return self._factory()

    def __repr__(self) -> str:
        return f"GraphPool({self.descriptor!r})"

    def dump(self, path) -> int:
        """Write the pool as a graph6 line file; returns the line count."""
        from .formats import to_graph6

        count = 0
        with open(path, "w") as fh:
            for g in self:
                fh.write(to_graph6(g) + "\n")
                count += 1
        return count

    @classmethod
    def from_graph6_file(cls, path) -> "GraphPool":
        def factory() -> Iterator[Graph]:
            from .formats import parse_graph6

            with open(path) as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        yield parse_graph6(line)

        return cls(f"file:{path}", factory)


def _filter_suffix(min_degree, connectivity_at_least, wheel_free) -> str:
    parts = []
    if min_degree is not None:
        parts.append(f"min-degree={min_degree}")
    if connectivity_at_least is not None:
        parts.append(f"connectivity-at-least={connectivity_at_least}")
    if wheel_free is not None:
        parts.append(f"wheel-free={wheel_free}")
    return ("," + ",".join(parts)) if parts else ""


def enumerate_graphs(n: int, *, min_degree: int | None = None,
                     connectivity_at_least: int | None = None,
                     wheel_free: int | None = None, dedup: bool = False) -> GraphPool:
    """All labeled graphs on n vertices (or all isomorphism classes with
    ``dedup``), streamed with cheap filters applied before expensive ones."""
    if n < 1:
        raise GraphError("enumeration needs n >= 1")
    if n > 8:
        raise GraphError("labeled-exhaustive enumeration is capped at n <= 8")
    accept = _make_filter(min_degree, connectivity_at_least, wheel_free)
    suffix = _filter_suffix(min_degree, connectivity_at_least, wheel_free)
    if dedup:
        def factory() -> Iterator[Graph]:
            for g in _nonisomorphic_graphs(n):
                if accept(g):
                    yield g

        return GraphPool(f"exhaustive:n={n},dedup{suffix}", factory)

    total = 1 << (n * (n - 1) // 2)

    def factory() -> Iterator[Graph]:
        for code in range(total):
            g = Graph.from_edge_code(n, code)
            if accept(g):
                yield g

    size = total if suffix == "" else None
    return GraphPool(f"exhaustive:n={n}{suffix}", factory, size=size)


_iso_classes_cache: dict[int, list[Graph]] = {}


def _nonisomorphic_graphs(n: int) -> list[Graph]:
    """Canonical representatives of all isomorphism classes on n vertices,
    built by extending the classes on n-1 vertices with every possible
    neighborhood of a new vertex and deduplicating by canonical code."""
    if n in _iso_classes_cache:
        return _iso_classes_cache[n]
    if n == 1:
        reps = [Graph(1)]
    else:
        seen = set()
        reps = []
        newbit = 1 << (n - 1)
        for base in _nonisomorphic_graphs(n - 1):
            for nbr in range(1 << (n - 1)):
                masks = [row | newbit if (nbr >> v) & 1 else row
                         for v, row in enumerate(base.masks)]
                masks.append(nbr)
                g = object.__new__(Graph)
                g.n = n
                g._adj = tuple(masks)
                canon = canonical_code(g)
                if canon not in seen:
                    seen.add(canon)
                    reps.append(Graph.from_edge_code(n, canon))
        reps.sort(key=lambda g: (g.m, g.edge_code()))
    _iso_classes_cache[n] = reps
    return reps


def random_pool(n: int, p: float, seed: int, count: int, *,
                min_degree: int | None = None, connectivity_at_least: int | None = None,
                wheel_free: int | None = None) -> GraphPool:
    """``count`` random G(n, p) graphs satisfying the filters, reproducible
    from the seed (splitmix64 edge draws; rejected graphs consume draws,
    so the accepted stream is still deterministic)."""
    if not 0.0 <= p <= 1.0:
        raise GraphError("edge probability must be in [0, 1]")
    if n < 1 or count < 0:
        raise GraphError("need n >= 1 and count >= 0")
    accept = _make_filter(min_degree, connectivity_at_least, wheel_free)
    suffix = _filter_suffix(min_degree, connectivity_at_least, wheel_free)

    def factory() -> Iterator[Graph]:
        rng = SplitMix64(seed)
        emitted = 0
        npairs = n * (n - 1) // 2
        while emitted < count:
            code = 0
            for k in range(npairs):
                if rng.random() < p:
                    code |= 1 << k
            g = Graph.from_edge_code(n, code)
            if accept(g):
                emitted += 1
                yield g

    return GraphPool(f"random:n={n},p={p},seed={seed},count={count}{suffix}", factory)


# -------------------------------------------------------------------------
# curated pools
# -------------------------------------------------------------------------


def _curated_graphs(name: str) -> list[Graph]:
    from . import generators as gen

    if name == "lemma42":
        return [gen.complete(6), gen.complete_bipartite(5), gen.icosahedron()]
    if name == "four-connected":
        return [
            gen.complete(5), gen.complete(6), gen.complete(7),
            gen.octahedron(), gen.complete_bipartite(4),
            gen.circulant(8, (1, 2)), gen.circulant(9, (1, 2)),
            gen.circulant(10, (1, 2)), gen.icosahedron(),
        ]
    if name == "wm":
        # 4-connected graphs on at most 8 vertices
        return [
            gen.complete(5), gen.complete(6), gen.complete(7), gen.complete(8),
            gen.complete_bipartite(4), gen.octahedron(),
            gen.circulant(7, (1, 2)), gen.circulant(8, (1, 2)),
            gen.circulant(8, (1, 2, 3)), gen.circulant(8, (1, 2, 4)),
        ]
    if name == "thm44-seeds":
        # 4-connected graphs on 8..10 vertices, K_{4,4} included
        return [
            gen.complete_bipartite(4), gen.complete_bipartite(4, 5),
            gen.complete_bipartite(4, 6), gen.complete_bipartite(5),
            gen.complete(8), gen.complete(9), gen.complete(10),
            gen.circulant(8, (1, 2)), gen.circulant(9, (1, 2)),
            gen.circulant(10, (1, 2)), gen.circulant(10, (1, 2, 3)),
            gen.circulant(9, (1, 2, 4)), gen.circulant(10, (1, 2, 5)),
        ]
    raise GraphError(f"unknown curated pool {name!r}")


def curated_pool(name: str) -> GraphPool:
    graphs = _curated_graphs(name)
    return GraphPool(f"curated:{name}", lambda: iter(graphs), size=len(graphs))


def parse_pool_descriptor(text: str) -> GraphPool:
    """Build a pool from its descriptor string, e.g. ``exhaustive:n=7``,
    ``random:n=8,p=0.5,seed=42,count=1000``, ``curated:wm`` or
    ``file:pool.g6``.  Filters append as ``min-degree=``,
    ``connectivity-at-least=`` and ``wheel-free=`` pairs."""
    kind, _, rest = text.partition(":")
    if kind == "curated":
        return curated_pool(rest)
    if kind == "file":
        return GraphPool.from_graph6_file(rest)
    opts: dict[str, str] = {}
    flags = set()
    for part in rest.split(","):
        if not part:
            continue
        if "=" in part:
            key, val = part.split("=", 1)
            opts[key] = val
        else:
            flags.add(part)
    filters = {
        "min_degree": int(opts["min-degree"]) if "min-degree" in opts else None,
        "connectivity_at_least": int(opts["connectivity-at-least"])
        if "connectivity-at-least" in opts else None,
        "wheel_free": int(opts["wheel-free"]) if "wheel-free" in opts else None,
    }
    try:
        if kind == "exhaustive":
            return enumerate_graphs(int(opts["n"]), dedup="dedup" in flags, **filters)
        if kind == "random":
            return random_pool(int(opts["n"]), float(opts["p"]), int(opts["seed"]),
                               int(opts["count"]), **filters)
    except KeyError as exc:
        raise GraphError(f"pool descriptor {text!r} is missing {exc}") from None
    raise GraphError(f"unknown pool kind {kind!r}")

"""Exact graph invariants: components, distances, girth, bipartiteness,
clique structure, and the neighborhood-disjointness checks for Z_2p.

Everything here is exact and deterministic; infinite values (diameter or
girth of disconnected/acyclic graphs) are the distinct INFINITE sentinel,
never a large integer stand-in.
"""

from __future__ import annotations

import sys
from collections import deque

from .bitsets import iter_bits
from .graph import WncGraph, neighborhood
from .rings import FiniteRing, Zn, is_prime


class _Infinite:
    """Singleton sentinel for infinite diameter/girth."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"


INFINITE = _Infinite()


# ---------------------------------------------------------------------------
# Connectivity and distances


def components(graph: WncGraph) -> list[int]:
    """Connected components as vertex bitsets, ordered by least vertex."""
    n = graph.vertex_count
    adj = graph.adjacency
    full = (1 << n) - 1
    seen = 0
    out = []
    for start in range(n):
        if seen >> start & 1:
            continue
        comp = 0
        frontier = 1 << start
        while frontier:
            comp |= frontier
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                m ^= low
                nxt |= adj[low.bit_length() - 1]
                if nxt | comp == full:
                    # every vertex is reached or about to be: one component
                    comp = full
                    m = 0
            frontier = nxt & ~comp
        seen |= comp
        out.append(comp)
    return out


def bfs_distances(graph: WncGraph, source: int) -> list[int]:
    """Hop distances from source; -1 where unreachable."""
    n = graph.vertex_count
    adj = graph.adjacency
    dist = [-1] * n
    frontier = 1 << source
    visited = 0
    d = 0
    while frontier:
        for v in iter_bits(frontier):
            dist[v] = d
        visited |= frontier
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~visited
        d += 1
    return dist


def _eccentricity(adjacency, source: int, full: int) -> int:
    """Levels of a bit-parallel BFS over a connected vertex set."""
    visited = 1 << source
    frontier = visited
    ecc = 0
    while True:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            m ^= low
            nxt |= adjacency[low.bit_length() - 1]
            if nxt | visited == full:
                m = 0  # the rest can only re-add known vertices
        frontier = nxt & ~visited
        if not frontier:
            return ecc
        visited |= frontier
        ecc += 1


def diameter(graph: WncGraph):
    """Max pairwise distance; INFINITE when the graph is disconnected."""
    n = graph.vertex_count
    if n <= 1:
        return 0
    if len(components(graph)) > 1:
        return INFINITE
    full = (1 << n) - 1
    return max(_eccentricity(graph.adjacency, v, full) for v in range(n))


# ---------------------------------------------------------------------------
# Girth with an explicit witness cycle


def _cycle_through(parent, dist, x, y):
    # join the BFS-tree paths of x and y at their lowest common ancestor;
    # the closing edge is (y, x)
    ax, ay = [x], [y]
    while dist[ax[-1]] > dist[ay[-1]]:
        ax.append(parent[ax[-1]])
    while dist[ay[-1]] > dist[ax[-1]]:
        ay.append(parent[ay[-1]])
    while ax[-1] != ay[-1]:
        ax.append(parent[ax[-1]])
        ay.append(parent[ay[-1]])
    return ax + ay[-2::-1]


def shortest_cycle(graph: WncGraph):
    """A shortest cycle as a vertex list, or None in an acyclic graph.

    Per-root BFS; every cross edge yields a genuine simple cycle through
    the tree paths' lowest common ancestor, and some root on a shortest
    cycle realizes the girth, so the minimum over roots is exact.
    """
    n = graph.vertex_count
    adj = graph.adjacency
    best = None
    best_len = n + 1
    for root in range(n):
        if best_len == 3:
            break  # a simple graph has no shorter cycle
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best_len:
                break  # deeper cross edges cannot beat the current best
            for y in iter_bits(adj[x]):
                if dist[y] == -1:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x] and parent[y] != x:
                    cycle = _cycle_through(parent, dist, x, y)
                    if len(cycle) < best_len:
                        best_len = len(cycle)
                        best = cycle
                        if best_len == 3:
                            return best  # nothing shorter exists
    return best


def girth(graph: WncGraph):
    """Length of a shortest cycle; INFINITE for forests."""
    cycle = shortest_cycle(graph)
    return INFINITE if cycle is None else len(cycle)


# ---------------------------------------------------------------------------
# Bipartiteness and stars


def is_bipartite(graph: WncGraph):
    """(True, 2-coloring list) or (False, odd cycle vertex list)."""
    n = graph.vertex_count
    adj = graph.adjacency
    color = [-1] * n
    dist = [-1] * n
    parent = [-1] * n
    for start in range(n):
        if color[start] >= 0:
            continue
        color[start] = 0
        dist[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in iter_bits(adj[x]):
                if color[y] == -1:
                    color[y] = color[x] ^ 1
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif color[y] == color[x]:
                    return False, _cycle_through(parent, dist, x, y)
    return True, color


def is_star(graph: WncGraph) -> bool:
    """True iff the graph is a star K_{1,n}: one center adjacent to every
    other vertex, all other vertices of degree 1 (K_2 counts as K_{1,1})."""
    n = graph.vertex_count
    if n == 0:
        return False
    if n == 1:
        return True
    degrees = [row.bit_count() for row in graph.adjacency]
    if degrees.count(n - 1) < 1:
        return False
    center = degrees.index(n - 1)
    return all(d == 1 for i, d in enumerate(degrees) if i != center)


# ---------------------------------------------------------------------------
# Cliques


def _greedy_color_order(adj, cand):
    """Greedy coloring of the candidate set; returns (vertices, color numbers)
    in assignment order. Used as the branch-and-bound upper bound."""
    order = []
    colors = []
    uncolored = cand
    c = 0
    while uncolored:
        c += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~(low | adj[v])
            uncolored ^= low
            order.append(v)
            colors.append(c)
    return order, colors


def _greedy_clique_size(adj, cand):
    """Size of the clique grown greedily from the lowest candidate; a cheap
    lower bound (and an instant certificate on dense graphs)."""
    size = 0
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        size += 1
        cand &= adj[v]
    return size


def _clique_number(adj, start_cand):
    best = _greedy_clique_size(adj, start_cand)  # a real clique: safe seed

    def expand(cand, size):
        nonlocal best
        if not cand:
            if size > best:
                best = size
            return
        order, colors = _greedy_color_order(adj, cand)
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= best:
                return
            v = order[i]
            bit = 1 << v
            cand &= ~bit
            expand(cand & adj[v], size + 1)

    expand(start_cand, 0)
    return best


def _exists_clique(adj, cand, need):
    """Decision version: does cand contain a clique of `need` vertices?"""
    if need <= 0:
        return True
    if cand.bit_count() < need:
        return False
    if _greedy_clique_size(adj, cand) >= need:
        return True
    found = False

    def expand(cand, size):
        nonlocal found
        if found:
            return
        if size >= need:
            found = True
            return
        order, colors = _greedy_color_order(adj, cand)
        for i in range(len(order) - 1, -1, -1):
            if found or size + colors[i] < need:
                return
            v = order[i]
            bit = 1 << v
            cand &= ~bit
            expand(cand & adj[v], size + 1)

    expand(cand, 0)
    return found


def max_clique(graph: WncGraph):
    """Exact maximum clique: (sorted vertex tuple, clique number).

    Branch and bound over bitset adjacency with a greedy-coloring bound;
    the witness returned is the lexicographically least maximum clique,
    rebuilt greedily once the clique number is known.
    """
    n = graph.vertex_count
    adj = graph.adjacency
    if n == 0:
        return (), 0
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, n + 1000))
    try:
        full = (1 << n) - 1
        omega = _clique_number(adj, full)
        clique = []
        cand = full
        for remaining in range(omega, 0, -1):
            for v in iter_bits(cand):
                above = cand & adj[v] & -(1 << (v + 1))
                if _exists_clique(adj, above, remaining - 1):
                    clique.append(v)
                    cand = above
                    break
            else:
                raise AssertionError("clique reconstruction lost the optimum")
    finally:
        sys.setrecursionlimit(old_limit)
    return tuple(clique), omega


def enumerate_k_cliques(graph: WncGraph, k: int) -> list[tuple[int, ...]]:
    """All k-vertex subsets inducing a complete subgraph, lexicographically.

    Enumerates complete subsets (not only maximal cliques)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = graph.vertex_count
    adj = graph.adjacency
    out = []
    prefix = []

    def extend(cand, depth):
        if depth == k:
            out.append(tuple(prefix))
            return
        if cand.bit_count() < k - depth:
            return
        for v in iter_bits(cand):
            prefix.append(v)
            extend(cand & adj[v] & -(1 << (v + 1)), depth + 1)
            prefix.pop()

    extend((1 << n) - 1, 0)
    return out


# ---------------------------------------------------------------------------
# Neighborhood disjointness in Z_2p


def neighborhood_disjointness_check(ring: FiniteRing, graph: WncGraph):
    """Check the three disjoint-neighborhood clauses for Z_2p, p >= 5 prime.

    Clause 1 pairs a with -a, clause 2 pairs a + b = 1, clause 3 pairs
    a + b = -1; each clause skips its stated exclusion set. Returns one
    verdict tuple (clause, a, b, disjoint) per tested pair.
    """
    spec = ring.spec
    if not (isinstance(spec, Zn) and spec.n % 2 == 0
            and is_prime(spec.n // 2) and spec.n // 2 >= 5):
        raise ValueError("neighborhood lemma check needs Z_2p with p >= 5 prime")
    if graph.vertex_count != ring.size:
        raise ValueError("graph does not match the ring")
    n = spec.n
    p = n // 2
    verdicts = []

    def disjoint(a, b):
        return (neighborhood(graph, a) & neighborhood(graph, b)) == 0

    excl1 = {0, 1, p, p + 1, (p + 1) // 2, (p - 1) // 2}
    for a in range(n):
        b = (-a) % n
        if a >= b or a in excl1 or b in excl1:
            continue
        verdicts.append((1, a, b, disjoint(a, b)))

    excl2 = {0, 1, p, p + 1, (p - 1) // 2, (p + 1) // 2, (p + 3) // 2,
             (3 * p - 1) // 2, (3 * p + 1) // 2, (3 * p + 3) // 2}
    for a in range(n):
        if a in excl2:
            continue
        b = (1 - a) % n
        verdicts.append((2, a, b, disjoint(a, b)))

    excl3 = {0, n - 1, p, p - 1, (p - 1) // 2, (p + 1) // 2, (3 * p - 3) // 2,
             (p - 3) // 2, (3 * p - 1) // 2, (3 * p + 1) // 2}
    for a in range(n):
        if a in excl3:
            continue
        b = (-1 - a) % n
        verdicts.append((3, a, b, disjoint(a, b)))

    return verdicts

"""Predicted-versus-computed verdicts for the structural facts the toolkit
mechanizes, plus the aggregated invariant report.

Each verdict compares a prediction derived from ring data against a value
computed from the constructed graph. A ring that fails a fact's hypothesis
gets NOT-APPLICABLE; a genuine mismatch is reported as DISAGREE, never
silently corrected. Some mismatches are charted: characteristic-2 fields
break the {0, 1, -1} triangle (girth, bipartite, star, field clique
number), and rings where 2x is always weakly nil clean have max degree
|WNC|-1, which breaks the class-1 argument (odd complete graphs are class
2). The `known_discrepancy` flag marks exactly those.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bitsets import iter_bits
from .classify import Classification, weakly_nil_clean_set
from .coloring import (UNKNOWN, chromatic_index_exact, sum_edge_coloring,
                       verify_proper_edge_coloring)
from .graph import (WncGraph, build_nc_graph, build_wnc_graph,
                    is_complete, max_degree)
from .invariants import (INFINITE, components, diameter, enumerate_k_cliques,
                         girth, is_bipartite, is_star, max_clique,
                         neighborhood_disjointness_check)
from .rings import (GF, FiniteRing, MatrixRing, Product, Zn, build_ring,
                    is_prime, nilradical_quotient)

AGREE = "AGREE"
DISAGREE = "DISAGREE"
NOT_APPLICABLE = "N-A"
UNDECIDED = "UNKNOWN"

THEOREM_IDS = (
    "completeness",
    "subgraph",
    "quotient-lifting",
    "degree-lemma",
    "connectedness",
    "girth",
    "not-bipartite",
    "not-star",
    "clique-zp",
    "clique-field",
    "clique-z2p",
    "four-cliques",
    "neighborhood-lemma",
    "diameter-2k3l",
    "diameter-zp",
    "diameter-z2p",
    "diameter-field",
    "diameter-product",
    "sum-coloring",
    "class-1",
)


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: str
    predicted: str
    computed: str
    status: str  # AGREE | DISAGREE | N-A | UNKNOWN
    known_discrepancy: bool = False


@dataclass(frozen=True)
class InvariantReport:
    component_sizes: list[int]
    diameter: object  # int or INFINITE
    girth: object  # int or INFINITE
    is_bipartite: bool
    max_degree: int
    clique_number: int
    four_cliques: list[tuple[int, ...]] | None
    sum_coloring_colors: int
    chromatic_index: object  # int or UNKNOWN
    vizing_class: object  # 1 | 2 | UNKNOWN
    theorem_verdicts: list[TheoremVerdict] = field(default_factory=list)


def _fmt(value) -> str:
    if value is INFINITE:
        return "inf"
    if value is UNKNOWN:
        return "unknown"
    return str(value)


def _is_2k3l(n: int) -> bool:
    while n % 2 == 0:
        n //= 2
    while n % 3 == 0:
        n //= 3
    return n == 1


def _zn_modulus(spec) -> int | None:
    return spec.n if isinstance(spec, Zn) else None


def _z2p_prime(spec) -> int | None:
    n = _zn_modulus(spec)
    if n is not None and n % 2 == 0 and n // 2 >= 5 and is_prime(n // 2):
        return n // 2
    return None


def _expected_four_cliques(p: int) -> list[tuple[int, ...]]:
    n = 2 * p
    raw = [
        {0, 1, n - 1, p},
        {0, 1, p, p - 1},
        {0, n - 1, p, p + 1},
        {0, p, p - 1, p + 1},
        {(p - 1) // 2, (p + 1) // 2, (3 * p - 1) // 2, (3 * p + 1) // 2},
    ]
    return sorted(tuple(sorted(s)) for s in raw)


class _Analysis:
    """One-shot computation of everything the verdicts and report share."""

    def __init__(self, ring: FiniteRing, classification: Classification,
                 graph: WncGraph, chi_budget: int):
        if classification.size != ring.size:
            raise ValueError("classification does not match the ring")
        if graph.vertex_count != ring.size or graph.clean_set != classification.wnc:
            raise ValueError("graph was not built from this ring and classification")
        self.ring = ring
        self.cls = classification
        self.graph = graph
        n = ring.size
        self.full = (1 << n) - 1
        self.is_wnc_ring = classification.wnc == self.full
        self.components = components(graph)
        self.diameter = diameter(graph)
        self.girth = girth(graph)
        self.bipartite, _ = is_bipartite(graph)
        self.star = is_star(graph)
        self.max_degree = max_degree(graph)
        self.clique, self.clique_number = max_clique(graph)
        self.sum_coloring = sum_edge_coloring(ring, graph)
        self.sum_colors = sorted(set(self.sum_coloring.values()))
        self.chromatic_index = chromatic_index_exact(
            graph, budget=chi_budget, hints=(self.sum_coloring,))
        if self.chromatic_index is UNKNOWN:
            self.vizing_class = UNKNOWN
        else:
            self.vizing_class = 1 if self.chromatic_index == self.max_degree else 2
        self.char2 = ring.neg(ring.one) == ring.one
        # the degree-lemma premise Delta = |WNC| fails exactly here
        self.degenerate_max_degree = (
            self.max_degree == classification.wnc.bit_count() - 1)


def _check_degree_lemma(a: _Analysis) -> bool:
    wnc = a.cls.wnc
    size_wnc = wnc.bit_count()
    for x in range(a.ring.size):
        expected = size_wnc - 1 if wnc >> a.ring.add(x, x) & 1 else size_wnc
        if a.graph.adjacency[x].bit_count() != expected:
            return False
    return True


def _check_subgraph(a: _Analysis) -> bool:
    nc_graph = build_nc_graph(a.ring, a.cls)
    return all(nc_row & ~wnc_row == 0 for nc_row, wnc_row
               in zip(nc_graph.adjacency, a.graph.adjacency))


def _check_quotient_lifting(a: _Analysis) -> bool:
    quotient, projection = nilradical_quotient(a.ring)
    q_cls = weakly_nil_clean_set(quotient)
    q_graph = build_wnc_graph(quotient, q_cls)
    cosets: dict[int, list[int]] = {}
    for x, q in enumerate(projection):
        cosets.setdefault(q, []).append(x)
    for qx in range(quotient.size):
        for qy in iter_bits(q_graph.adjacency[qx]):
            if qy < qx:
                continue
            for x in cosets[qx]:
                row = a.graph.adjacency[x]
                for y in cosets[qy]:
                    if x != y and not row >> y & 1:
                        return False
    return True


def theorem_suite(ring: FiniteRing, classification: Classification,
                  graph: WncGraph, chi_budget: int = 10_000_000,
                  analysis: "_Analysis | None" = None) -> list[TheoremVerdict]:
    """Evaluate every applicable fact against this ring and graph."""
    a = analysis or _Analysis(ring, classification, graph, chi_budget)
    spec = ring.spec
    n = ring.size
    out = []

    def emit(theorem, predicted, computed, agree, known=False):
        status = AGREE if agree else DISAGREE
        out.append(TheoremVerdict(theorem, predicted, computed, status,
                                  known_discrepancy=known and not agree))

    def skip(theorem, reason):
        out.append(TheoremVerdict(theorem, "-", reason, NOT_APPLICABLE))

    # completeness <=> weakly nil clean ring
    predicted = "complete" if a.is_wnc_ring else "incomplete"
    computed = "complete" if is_complete(graph) else "incomplete"
    emit("completeness", predicted, computed, predicted == computed)

    # the nil clean graph is always a subgraph
    ok = _check_subgraph(a)
    emit("subgraph", "nil clean graph is a subgraph",
         "subgraph" if ok else "edge outside the weakly nil clean graph", ok)

    # adjacency lifts from R/Nil(R)
    if ring.is_commutative:
        ok = _check_quotient_lifting(a)
        emit("quotient-lifting", "adjacent cosets lift to all element pairs",
             "holds" if ok else "fails", ok)
    else:
        skip("quotient-lifting", "noncommutative ring")

    # degree formula deg(x) = |WNC| - [2x in WNC]
    ok = _check_degree_lemma(a)
    emit("degree-lemma", "deg(x) = |WNC| - [2x weakly nil clean]",
         "holds" if ok else "fails", ok)

    # connectedness for Z_n and M_n(Z_n)
    applies = isinstance(spec, Zn) or (
        isinstance(spec, MatrixRing) and isinstance(spec.inner, Zn)
        and spec.k == spec.inner.n)
    if applies:
        connected = len(a.components) == 1
        emit("connectedness", "connected",
             "connected" if connected else f"{len(a.components)} components",
             connected)
    else:
        skip("connectedness", "stated for Z_n and M_n(Z_n) only")

    # girth 3 and its corollaries need |R| >= 3
    if n >= 3:
        emit("girth", "3", _fmt(a.girth), a.girth == 3, known=a.char2)
        emit("not-bipartite", "not bipartite",
             "bipartite" if a.bipartite else "not bipartite",
             not a.bipartite, known=a.char2)
        emit("not-star", "not a star", "star" if a.star else "not a star",
             not a.star, known=a.char2)
    else:
        skip("girth", "|R| < 3")
        skip("not-bipartite", "|R| < 3")
        skip("not-star", "|R| < 3")

    # clique numbers
    zn = _zn_modulus(spec)
    if zn is not None and zn >= 3 and is_prime(zn):
        emit("clique-zp", "3", str(a.clique_number), a.clique_number == 3)
    else:
        skip("clique-zp", "not Z_p for an odd prime p")
    if isinstance(spec, GF):
        emit("clique-field", "3", str(a.clique_number), a.clique_number == 3,
             known=a.char2)
    else:
        skip("clique-field", "not a field spec")
    p2 = _z2p_prime(spec)
    if p2 is not None:
        emit("clique-z2p", "4", str(a.clique_number), a.clique_number == 4)
        expected = _expected_four_cliques(p2)
        actual = sorted(enumerate_k_cliques(graph, 4))
        emit("four-cliques",
             "exactly " + ", ".join("{%s}" % ",".join(map(str, c)) for c in expected),
             ", ".join("{%s}" % ",".join(map(str, c)) for c in actual) or "none",
             actual == expected)
        verdicts = neighborhood_disjointness_check(ring, graph)
        bad = [v for v in verdicts if not v[3]]
        emit("neighborhood-lemma",
             "disjoint neighborhoods on all stated pairs",
             f"all {len(verdicts)} pairs disjoint" if not bad
             else f"{len(bad)} of {len(verdicts)} pairs intersect",
             not bad)
    else:
        skip("clique-z2p", "not Z_2p with p >= 5 prime")
        skip("four-cliques", "not Z_2p with p >= 5 prime")
        skip("neighborhood-lemma", "not Z_2p with p >= 5 prime")

    # diameters
    if zn is not None and _is_2k3l(zn):
        emit("diameter-2k3l", "1", _fmt(a.diameter), a.diameter == 1)
    else:
        skip("diameter-2k3l", "n is not of the form 2^k 3^l")
    if zn is not None and zn % 2 == 1 and is_prime(zn):
        want = (zn - 1) // 2
        emit("diameter-zp", str(want), _fmt(a.diameter), a.diameter == want)
    else:
        skip("diameter-zp", "not Z_p for an odd prime p")
    if p2 is not None:
        want = (p2 - 1) // 2
        emit("diameter-z2p", str(want), _fmt(a.diameter), a.diameter == want)
    else:
        skip("diameter-z2p", "not Z_2p with p >= 5 prime")
    if isinstance(spec, GF):
        want_inf = spec.k > 1
        got_inf = a.diameter is INFINITE
        emit("diameter-field", "inf" if want_inf else "finite",
             _fmt(a.diameter), want_inf == got_inf)
    else:
        skip("diameter-field", "not a field spec")
    if isinstance(spec, Product):
        left = build_ring(spec.left, cap=max(2, ring.size))
        right = build_ring(spec.right, cap=max(2, ring.size))
        lc = weakly_nil_clean_set(left)
        rc = weakly_nil_clean_set(right)
        lfull = (1 << left.size) - 1
        rfull = (1 << right.size) - 1
        hyp = (lc.wnc == lfull and lc.nc != lfull
               and rc.wnc == rfull and rc.nc != rfull)
        if hyp:
            emit("diameter-product", "2 or 3", _fmt(a.diameter),
                 a.diameter in (2, 3))
        else:
            skip("diameter-product",
                 "factors are not both weakly nil clean non nil clean")
    else:
        skip("diameter-product", "not a product spec")

    # sum coloring: proper, colors inside WNC(R)
    proper = verify_proper_edge_coloring(graph, a.sum_coloring)
    inside = all(a.cls.wnc >> c & 1 for c in a.sum_colors)
    ok = proper and inside
    emit("sum-coloring", "proper with colors among the weakly nil clean sums",
         ("proper" if proper else "improper") + ", "
         + f"{len(a.sum_colors)} colors"
         + ("" if inside else " outside the set"), ok)

    # class 1: chi' = max degree
    if a.vizing_class is UNKNOWN:
        out.append(TheoremVerdict("class-1", "class 1", "unknown (budget)",
                                  UNDECIDED))
    else:
        emit("class-1", "class 1", f"class {a.vizing_class}",
             a.vizing_class == 1, known=a.degenerate_max_degree)
    return out


def compute_report(ring: FiniteRing, classification: Classification,
                   graph: WncGraph, want_four_cliques: bool = False,
                   chi_budget: int = 10_000_000) -> InvariantReport:
    """Full invariant report with theorem verdicts."""
    a = _Analysis(ring, classification, graph, chi_budget)
    verdicts = theorem_suite(ring, classification, graph, chi_budget, analysis=a)
    four = sorted(enumerate_k_cliques(graph, 4)) if want_four_cliques else None
    return InvariantReport(
        component_sizes=sorted(c.bit_count() for c in a.components),
        diameter=a.diameter,
        girth=a.girth,
        is_bipartite=a.bipartite,
        max_degree=a.max_degree,
        clique_number=a.clique_number,
        four_cliques=four,
        sum_coloring_colors=len(a.sum_colors),
        chromatic_index=a.chromatic_index,
        vizing_class=a.vizing_class,
        theorem_verdicts=verdicts,
    )

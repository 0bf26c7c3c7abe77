"""Comparison measures: augmented Forman-Ricci, Ollivier-Ricci via exact
optimal transport, edge betweenness centrality, and Pearson correlation.

The transport solver works in exact rational arithmetic (successive shortest
paths with potentials), so tiny Wasserstein problems are solved to the exact
optimum rather than an approximation.
"""
from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (GraphValidationError, TransportInfeasibleError,
                     UnsupportedVariantError)
from .network import Edge, Network
from .paths import enumerate_triangles


def forman_augmented(net: Network, e: Edge) -> float:
    """Augmented Forman-Ricci curvature: 4 - deg(u) - deg(v) + 3*t(e).

    Defined for combinatorial undirected networks only.
    """
    if net.directed:
        raise UnsupportedVariantError("augmented Forman-Ricci is undirected-only")
    if net.has_weights:
        raise UnsupportedVariantError("weighted Forman-Ricci is not supported")
    u, v = net.require_edge(e)
    t = len(enumerate_triangles(net, (u, v)))
    return float(4 - net.degree(u) - net.degree(v) + 3 * t)


# -- exact optimal transport ------------------------------------------------

@dataclass(frozen=True)
class TransportProblem:
    """Marginal masses over two supports plus the cost matrix between them."""

    source_masses: tuple[float, ...]
    target_masses: tuple[float, ...]
    costs: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        a, b = sum(self.source_masses), sum(self.target_masses)
        if abs(a - 1.0) > 1e-9 or abs(b - 1.0) > 1e-9:
            raise GraphValidationError("mass vectors must each sum to 1 within 1e-9")
        if any(m < 0 for m in self.source_masses + self.target_masses):
            raise GraphValidationError("masses must be non-negative")
        if len(self.costs) != len(self.source_masses) or any(
                len(row) != len(self.target_masses) for row in self.costs):
            raise GraphValidationError("cost matrix shape mismatch")
        for row in self.costs:
            for c in row:
                if not (c >= 0) or (c != math.inf and not math.isfinite(c)):
                    raise GraphValidationError("costs must be non-negative (inf allowed)")


def solve_transport(problem: TransportProblem) -> float:
    """Exact minimum transport cost; inf-cost pairs are unusable arcs."""
    supplies = [Fraction(m) for m in problem.source_masses]
    demands = [Fraction(m) for m in problem.target_masses]
    total_a, total_b = sum(supplies), sum(demands)
    if total_b == 0:
        raise TransportInfeasibleError("empty target measure")
    if total_a != total_b:  # float marginals may disagree in the last ulp
        demands = [d * total_a / total_b for d in demands]
    costs = [[Fraction(c) if c != math.inf else None for c in row] for row in problem.costs]
    return float(_min_cost_transport(supplies, demands, costs))


def _min_cost_transport(supplies: list[Fraction], demands: list[Fraction],
                        costs: list[list[Optional[Fraction]]]) -> Fraction:
    """Successive shortest augmenting paths with potentials, all rational."""
    m, n = len(supplies), len(demands)
    n_nodes = m + n + 2
    src, snk = m + n, m + n + 1
    graph: list[list[list]] = [[] for _ in range(n_nodes)]  # [to, cap, cost, rev]

    def add_arc(a, b, cap, cost):
        graph[a].append([b, cap, cost, len(graph[b])])
        graph[b].append([a, Fraction(0), -cost, len(graph[a]) - 1])

    for i, s in enumerate(supplies):
        if s > 0:
            add_arc(src, i, s, Fraction(0))
    for j, d in enumerate(demands):
        if d > 0:
            add_arc(m + j, snk, d, Fraction(0))
    for i in range(m):
        for j in range(n):
            if costs[i][j] is not None and supplies[i] > 0 and demands[j] > 0:
                add_arc(i, m + j, sum(supplies), costs[i][j])

    need = sum(supplies)
    potential = [Fraction(0)] * n_nodes
    total = Fraction(0)
    pushed = Fraction(0)
    while pushed < need:
        dist: list[Optional[Fraction]] = [None] * n_nodes
        dist[src] = Fraction(0)
        prev_arc: list[Optional[tuple[int, int]]] = [None] * n_nodes
        heap = [(Fraction(0), src)]
        while heap:
            d, x = heapq.heappop(heap)
            if dist[x] is not None and d > dist[x]:
                continue
            for k, arc in enumerate(graph[x]):
                to, cap, cost, _ = arc
                if cap <= 0:
                    continue
                nd = d + cost + potential[x] - potential[to]
                if dist[to] is None or nd < dist[to]:
                    dist[to] = nd
                    prev_arc[to] = (x, k)
                    heapq.heappush(heap, (nd, to))
        if dist[snk] is None:
            raise TransportInfeasibleError("marginals cannot be coupled over finite costs")
        for x in range(n_nodes):
            if dist[x] is not None:
                potential[x] += dist[x]
        delta = need - pushed
        x = snk
        while x != src:
            px, pk = prev_arc[x]
            delta = min(delta, graph[px][pk][1])
            x = px
        x = snk
        while x != src:
            px, pk = prev_arc[x]
            arc = graph[px][pk]
            arc[1] -= delta
            graph[x][arc[3]][1] += delta
            total += delta * arc[2]
            x = px
        pushed += delta
    return total


def _neighbor_measure(net: Network, x: int, idleness: Fraction) -> dict[int, Fraction]:
    deg = net.degree(x)
    if deg == 0:
        raise GraphValidationError(f"vertex {x} has no neighbors")
    share = (1 - idleness) / deg
    measure = {y: share for y in net.neighbors(x)}
    if idleness > 0:
        measure[x] = measure.get(x, Fraction(0)) + idleness
    return measure


def _hop_distances_from(net: Network, source: int) -> list[float]:
    dist = [math.inf] * net.vertex_count
    dist[source] = 0.0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in net.neighbors(x):
            if dist[y] == math.inf:
                dist[y] = dist[x] + 1.0
                queue.append(y)
    return dist


def _weighted_distances_from(net: Network, source: int) -> list[float]:
    dist = [math.inf] * net.vertex_count
    dist[source] = 0.0
    heap = [(0.0, source)]
    while heap:
        d, x = heapq.heappop(heap)
        if d > dist[x]:
            continue
        for y in net.neighbors(x):
            nd = d + net.edge_weight(x, y)
            if nd < dist[y]:
                dist[y] = nd
                heapq.heappush(heap, (nd, y))
    return dist


def ollivier(net: Network, e: Edge, idleness: float = 0.0) -> float:
    """Ollivier-Ricci curvature 1 - W1(m_u, m_v) with uniform neighbor measures.

    m_x places (1 - idleness)/deg(x) on each neighbor and idleness on x itself;
    W1 is solved exactly over shortest-path costs.
    """
    if net.directed:
        raise UnsupportedVariantError("Ollivier-Ricci here is undirected-only")
    if not (0 <= idleness < 1):
        raise GraphValidationError("idleness must lie in [0, 1)")
    u, v = net.require_edge(e)
    idl = Fraction(idleness)
    mu = _neighbor_measure(net, u, idl)
    mv = _neighbor_measure(net, v, idl)
    sources = sorted(mu)
    targets = sorted(mv)
    dist_from = _weighted_distances_from if net.has_weights else _hop_distances_from
    costs: list[list[Optional[Fraction]]] = []
    for s in sources:
        d = dist_from(net, s)
        costs.append([Fraction(d[t]) if d[t] != math.inf else None for t in targets])
    w1 = _min_cost_transport([mu[s] for s in sources], [mv[t] for t in targets], costs)
    return float(1 - w1)


# -- edge betweenness -------------------------------------------------------

def edge_betweenness(net: Network, normalized: bool = False) -> dict[Edge, float]:
    """Shortest-path edge betweenness with fractional attribution.

    Undirected networks count unordered pairs, directed ones ordered pairs.
    Accumulation uses exact float summation so the result is independent of
    vertex labeling.
    """
    n = net.vertex_count
    contrib: dict[Edge, list[float]] = {}
    for s in range(n):
        order, sigma, preds = _brandes_sssp(net, s)
        delta_terms: dict[int, list[float]] = {w: [] for w in order}
        for w in reversed(order):
            dw = math.fsum(delta_terms[w])
            for p in preds[w]:
                c = (sigma[p] / sigma[w]) * (1.0 + dw)
                key = _edge_key(net, p, w)
                contrib.setdefault(key, []).append(c)
                delta_terms[p].append(c)
    scale = 1.0
    if not net.directed:
        scale *= 0.5
    if normalized and n > 1:
        scale *= (2.0 if not net.directed else 1.0) / (n * (n - 1))
    out = {}
    for u, v in net.edges:
        key = _edge_key(net, u, v)
        out[(u, v)] = scale * math.fsum(contrib.get(key, ()))
    return out


def _edge_key(net: Network, u: int, v: int) -> Edge:
    if net.directed:
        return (u, v) if net.has_arc(u, v) else (v, u)
    return (min(u, v), max(u, v))


def _brandes_sssp(net: Network, s: int):
    """Shortest-path DAG from s: visitation order, path counts, predecessors."""
    n = net.vertex_count
    sigma = [0] * n
    sigma[s] = 1
    preds: list[list[int]] = [[] for _ in range(n)]
    order = []
    if not net.has_weights:
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in net.successors(x):
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
                if dist[y] == dist[x] + 1:
                    sigma[y] += sigma[x]
                    preds[y].append(x)
    else:
        dist = [math.inf] * n
        dist[s] = 0.0
        seen = [False] * n
        heap = [(0.0, s)]
        while heap:
            d, x = heapq.heappop(heap)
            if seen[x]:
                continue
            seen[x] = True
            order.append(x)
            for y in net.successors(x):
                nd = d + net.edge_weight(x, y)
                if nd < dist[y]:
                    dist[y] = nd
                    sigma[y] = sigma[x]
                    preds[y] = [x]
                    heapq.heappush(heap, (nd, y))
                elif nd == dist[y] and not seen[y]:
                    sigma[y] += sigma[x]
                    preds[y].append(x)
    return order, sigma, preds


# -- correlation -------------------------------------------------------------

def pearson(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Product-moment correlation in [-1, 1]; nan when either side is constant."""
    if len(xs) != len(ys):
        raise GraphValidationError("vectors must have equal length")
    if len(xs) < 2:
        raise GraphValidationError("need at least two samples")
    n = len(xs)
    mx = math.fsum(xs) / n
    my = math.fsum(ys) / n
    sxx = math.fsum((x - mx) ** 2 for x in xs)
    syy = math.fsum((y - my) ** 2 for y in ys)
    if sxx == 0.0 or syy == 0.0:
        return math.nan
    sxy = math.fsum((x - mx) * (y - my) for x, y in zip(xs, ys))
    r = sxy / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))

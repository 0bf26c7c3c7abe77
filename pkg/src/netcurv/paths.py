"""Shortest paths, bounded simple-path enumeration, triangles, 2-cells, signs."""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import kernels
from .errors import GraphValidationError
from .network import Edge, Face, MetricContext, Network, PathRecord, edge_length


def shortest_path_length(net: Network, ctx: MetricContext, u: int, v: int) -> float:
    """Exact shortest-path distance under edge_length; math.inf when unreachable.

    Respects edge direction in directed networks.
    """
    _check_vertex(net, u)
    _check_vertex(net, v)
    if u == v:
        return 0.0
    adj = kernels.successor_adjacency(net, ctx)
    dist = {u: 0.0}
    heap = [(0.0, u)]
    while heap:
        d, x = heapq.heappop(heap)
        if x == v:
            return d
        if d > dist.get(x, math.inf):
            continue
        for y, ln in adj[x]:
            nd = d + ln
            if nd < dist.get(y, math.inf):
                dist[y] = nd
                heapq.heappush(heap, (nd, y))
    return math.inf


def shortest_path(net: Network, ctx: MetricContext, u: int, v: int) -> Optional[list[int]]:
    """Lexicographically smallest shortest path from u to v, or None if unreachable."""
    _check_vertex(net, u)
    _check_vertex(net, v)
    if u == v:
        return [u]
    adj = kernels.successor_adjacency(net, ctx)
    dist_to_v = _distances_to(net, ctx, v)
    total = None
    du = {u: 0.0}
    heap = [(0.0, u)]
    while heap:
        d, x = heapq.heappop(heap)
        if d > du.get(x, math.inf):
            continue
        for y, ln in adj[x]:
            nd = d + ln
            if nd < du.get(y, math.inf):
                du[y] = nd
                heapq.heappush(heap, (nd, y))
    total = du.get(v)
    if total is None:
        return None
    # Greedy prefix extension stays on some shortest path; ties resolved by
    # smallest vertex id. Tolerance absorbs float drift on weighted graphs.
    tol = 1e-12 * max(1.0, total)
    path = [u]
    cur, used = u, 0.0
    while cur != v:
        nxt = None
        for y, ln in adj[cur]:
            rest = dist_to_v[y]
            if rest == math.inf or y in path:
                continue
            if abs(used + ln + rest - total) <= tol:
                nxt = (y, ln)
                break
        if nxt is None:  # numeric dead end; cannot happen on exact metrics
            return None
        path.append(nxt[0])
        used += nxt[1]
        cur = nxt[0]
    return path


def _distances_to(net: Network, ctx: MetricContext, v: int) -> dict[int, float]:
    """Distances from every vertex to v (reverse Dijkstra)."""
    radj: list[list[tuple[int, float]]] = [[] for _ in range(net.vertex_count)]
    for x, row in enumerate(kernels.successor_adjacency(net, ctx)):
        for y, ln in row:
            radj[y].append((x, ln))
    dist = {v: 0.0}
    heap = [(0.0, v)]
    while heap:
        d, x = heapq.heappop(heap)
        if d > dist.get(x, math.inf):
            continue
        for y, ln in radj[x]:
            nd = d + ln
            if nd < dist.get(y, math.inf):
                dist[y] = nd
                heapq.heappush(heap, (nd, y))
    out = {x: dist.get(x, math.inf) for x in range(net.vertex_count)}
    return out


def enumerate_simple_paths(net: Network, ctx: MetricContext, u: int, v: int,
                           max_edges: int, exclude_direct_edge: bool = False
                           ) -> list[PathRecord]:
    """All simple u-v paths with <= max_edges edges, lexicographic order.

    Paths traverse the underlying undirected adjacency; in directed networks
    each record carries its orientation sign (+1 all-forward, -1 all-backward,
    0 mixed). With exclude_direct_edge the single-edge path is omitted so each
    returned path closes to an elementary cycle with the chord.
    """
    _check_vertex(net, u)
    _check_vertex(net, v)
    if u == v:
        raise GraphValidationError("path enumeration requires distinct endpoints")
    if max_edges < 1:
        raise GraphValidationError("max_edges must be >= 1")
    indptr, indices, ecode, elen = kernels.underlying_csr(net, ctx)
    flat, offsets, lengths, signs = kernels.path_vertices(
        indptr, indices, ecode, elen, u, v, max_edges, exclude_direct_edge,
        net.directed, None)
    out = []
    for i in range(len(lengths)):
        verts = tuple(int(x) for x in flat[offsets[i]:offsets[i + 1]])
        out.append(PathRecord(verts, float(lengths[i]), int(signs[i])))
    return out


def enumerate_triangles(net: Network, e: Edge) -> list[tuple[int, int, int]]:
    """Triples (u, v, w) for every w adjacent to both endpoints, sorted by w.

    Adjacency ignores direction; orientation signs are the business of
    cycle_sign.
    """
    u, v = net.require_edge(e)
    common = set(net.neighbors(u)) & set(net.neighbors(v))
    return [(u, v, w) for w in sorted(common)]


@dataclass(frozen=True)
class Cell:
    """A 2-cell adjacent to an edge: its boundary path oriented chord-first.

    path runs from u to v (the chord endpoints); declared cells carry their
    Face, implicit ones are elementary cycles found by path enumeration.
    """

    path: PathRecord
    weight: float = 1.0
    retrograde: bool = False
    face: Optional[Face] = None

    @property
    def declared(self) -> bool:
        return self.face is not None


def enumerate_cells(net: Network, ctx: MetricContext, e: Edge,
                    max_boundary_edges: int = 6) -> list[Cell]:
    """2-cells adjacent to e: declared faces when present, else elementary cycles.

    Declared faces are repeated per multiplicity; implicit cells are one per
    simple path from enumerate_simple_paths with the direct edge excluded.
    """
    if max_boundary_edges < 3:
        raise GraphValidationError("max_boundary_edges must be >= 3")
    u, v = net.require_edge(e)
    if net.faces is not None:
        cells = []
        for face in net.faces_through(u, v):
            path = _face_boundary_path(net, ctx, face, u, v)
            for _ in range(face.multiplicity):
                cells.append(Cell(path, face.weight, face.retrograde, face))
        return cells
    paths = enumerate_simple_paths(net, ctx, u, v, max_boundary_edges - 1,
                                   exclude_direct_edge=True)
    return [Cell(p) for p in paths]


def _face_boundary_path(net: Network, ctx: MetricContext, face: Face,
                        u: int, v: int) -> PathRecord:
    b = face.boundary
    k = len(b)
    pos = None
    for i in range(k):
        a, c = b[i], b[(i + 1) % k]
        if (a, c) == (u, v) or (a, c) == (v, u):
            pos = i
            break
    if pos is None:
        raise GraphValidationError(f"face {b} does not contain edge ({u},{v})")
    forward = b[pos] == v  # walking the cycle order runs v..u or u..v
    verts = [b[(pos + 1 + j) % k] for j in range(k)]  # cycle minus edge (b[pos], b[pos+1])
    if not forward:
        verts.reverse()
    lengths = [edge_length(net, ctx, (verts[j], verts[j + 1])) for j in range(k - 1)]
    sign = cycle_sign(net, (u, v), verts)
    return PathRecord(tuple(verts), math.fsum(lengths), sign)


def cycle_sign(net: Network, e: Edge, path: Sequence[int] | PathRecord) -> int:
    """Orientation of a u-v path relative to the chord u->v.

    +1 when every path edge runs coherently u toward v (feed-forward), -1 when
    every edge runs v toward u (chord plus path is a directed cycle), else 0.
    Undirected networks are +1 everywhere.
    """
    u, v = net.require_edge(e)
    verts = path.vertices if isinstance(path, PathRecord) else tuple(path)
    if verts[0] != u or verts[-1] != v:
        raise GraphValidationError(
            f"path endpoints {verts[0]},{verts[-1]} do not match edge ({u},{v})")
    for a, b in zip(verts, verts[1:]):
        if not net.has_edge(a, b):
            raise GraphValidationError(f"path step ({a},{b}) is not an edge")
    if not net.directed:
        return 1
    fwd = all(net.has_arc(a, b) for a, b in zip(verts, verts[1:]))
    if fwd:
        return 1
    bwd = all(net.has_arc(b, a) for a, b in zip(verts, verts[1:]))
    return -1 if bwd else 0


def path_stats(net: Network, ctx: MetricContext, u: int, v: int, max_edges: int,
               exclude_direct_edge: bool = True,
               forbidden: Optional[np.ndarray] = None):
    """(lengths, signs) arrays of qualifying simple u-v paths; the fast route."""
    indptr, indices, ecode, elen = kernels.underlying_csr(net, ctx)
    return kernels.path_stats(indptr, indices, ecode, elen, u, v, max_edges,
                              exclude_direct_edge, net.directed, forbidden)


def _check_vertex(net: Network, v: int) -> None:
    if not (0 <= v < net.vertex_count):
        raise GraphValidationError(f"vertex {v} out of range 0..{net.vertex_count - 1}")

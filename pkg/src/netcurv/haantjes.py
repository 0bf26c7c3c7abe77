"""Haantjes path curvature and the derived sectional/Ricci/scalar measures.

kappa^2 = (l(path) - l(chord)) / l(chord)^3, so a combinatorial path of n unit
edges over a unit chord has curvature sqrt(n-1). The strong (Gauss-Bonnet)
variant turns each 2-cell into K = 2*pi - kappa of its boundary path; the
simple variant sums kappa over chord-closing paths directly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (CurvatureDomainError, GraphValidationError, UnreachableError)
from .network import Edge, MetricContext, Network, PathRecord, edge_length
from .paths import (enumerate_cells, enumerate_simple_paths, enumerate_triangles,
                    path_stats, shortest_path, shortest_path_length)

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class HaantjesParams:
    """Cutoffs and variant switches for the Haantjes measures."""

    max_path_edges: int = 5
    variant: str = "simple"
    weighted_sign_rule: bool = False
    use_face_weights: bool = False

    def __post_init__(self):
        if self.max_path_edges < 1:
            raise GraphValidationError("max_path_edges must be >= 1")
        if self.variant not in ("simple", "strong"):
            raise GraphValidationError(f"variant must be 'simple' or 'strong', got {self.variant!r}")


DEFAULT_PARAMS = HaantjesParams()


@dataclass(frozen=True)
class CellCurvature:
    """Sectional curvature of one 2-cell relative to a chord edge."""

    boundary: PathRecord
    kappa: float
    strong: float
    sign: int


def haantjes_path(path_length: float, chord_length: float) -> float:
    """Curvature of a path over its chord: sqrt((l - c) / c^3); needs l >= c."""
    if chord_length <= 0:
        raise CurvatureDomainError("chord length must be positive")
    if path_length < chord_length:
        raise CurvatureDomainError(
            "path shorter than chord; use haantjes_weighted_signed for general weights")
    c3 = chord_length * chord_length * chord_length
    return math.sqrt((path_length - chord_length) / c3)


def haantjes_weighted_signed(path_length: float, chord_length: float) -> float:
    """Sign-reversing variant for general weights: negative when the path
    undercuts its chord, zero exactly at the splitting case l = c."""
    if chord_length <= 0 or path_length <= 0:
        raise CurvatureDomainError("lengths must be positive")
    diff = path_length - chord_length
    c3 = chord_length * chord_length * chord_length
    kappa = math.sqrt(abs(diff) / c3)
    if diff < 0:
        return -kappa
    if diff == 0:
        return 0.0
    return kappa


def _kappa_array(lengths: np.ndarray, chord: float, signed_rule: bool) -> np.ndarray:
    diff = lengths - chord
    if not signed_rule and diff.size and float(diff.min()) < 0:
        raise CurvatureDomainError(
            "a path is shorter than the chord; enable weighted_sign_rule")
    c3 = chord * chord * chord
    kappa = np.sqrt(np.abs(diff) / c3)
    if signed_rule:
        kappa = np.where(diff < 0, -kappa, kappa)
    return kappa


def haantjes_ricci_simple(net: Network, ctx: MetricContext, e: Edge,
                          params: HaantjesParams = DEFAULT_PARAMS) -> float:
    """Sum of signed path curvatures over the chord-closing paths of e.

    With declared faces the paths are the cell boundaries (per multiplicity,
    retrograde cells negated); otherwise all simple paths up to the cutoff,
    each weighted by its orientation sign on directed networks.
    """
    u, v = net.require_edge(e)
    chord = edge_length(net, ctx, (u, v))
    if net.faces is not None:
        terms = []
        for cell in enumerate_cells(net, ctx, (u, v)):
            if params.weighted_sign_rule:
                kappa = haantjes_weighted_signed(cell.path.length, chord)
            else:
                kappa = haantjes_path(cell.path.length, chord)
            sign = cell.path.sign * (-1 if cell.retrograde else 1)
            terms.append(sign * kappa)
        return math.fsum(terms)
    lengths, signs = path_stats(net, ctx, u, v, params.max_path_edges,
                                exclude_direct_edge=True)
    if not len(lengths):
        return 0.0
    kappa = _kappa_array(lengths, chord, params.weighted_sign_rule)
    return math.fsum(kappa * signs)


def haantjes_strong_sectional(boundary_path: PathRecord, chord_length: float,
                              face_weight: float = 1.0,
                              params: HaantjesParams = DEFAULT_PARAMS) -> CellCurvature:
    """Gauss-Bonnet sectional curvature of one cell: K = 2*pi - kappa(boundary),
    scaled by 1/face_weight when face weighting is enabled."""
    if params.weighted_sign_rule:
        kappa = haantjes_weighted_signed(boundary_path.length, chord_length)
    else:
        kappa = haantjes_path(boundary_path.length, chord_length)
    strong = TWO_PI - kappa
    if params.use_face_weights:
        strong = strong / face_weight
    return CellCurvature(boundary_path, kappa, strong, boundary_path.sign)


def haantjes_ricci_strong(net: Network, ctx: MetricContext, e: Edge,
                          params: HaantjesParams = DEFAULT_PARAMS) -> float:
    """Sum of signed strong sectional curvatures over the 2-cells adjacent to e.

    Cells come from declared faces when present, else from elementary cycles
    through e with boundary length <= max_path_edges + 1.
    """
    u, v = net.require_edge(e)
    chord = edge_length(net, ctx, (u, v))
    terms = []
    for cell in enumerate_cells(net, ctx, (u, v), params.max_path_edges + 1):
        cc = haantjes_strong_sectional(cell.path, chord, cell.weight, params)
        sign = cc.sign * (-1 if cell.retrograde else 1)
        terms.append(sign * cc.strong)
    return math.fsum(terms)


def haantjes_scalar(net: Network, ctx: MetricContext, v: int,
                    params: HaantjesParams = DEFAULT_PARAMS) -> float:
    """Sum of the selected Haantjes-Ricci variant over the edges incident to v."""
    if not (0 <= v < net.vertex_count):
        raise GraphValidationError(f"vertex {v} out of range")
    ric = haantjes_ricci_strong if params.variant == "strong" else haantjes_ricci_simple
    terms = []
    if net.directed:
        for y in net.successors(v):
            terms.append(ric(net, ctx, (v, y), params))
        for y in net.predecessors(v):
            terms.append(ric(net, ctx, (y, v), params))
    else:
        for y in net.neighbors(v):
            terms.append(ric(net, ctx, (v, y), params))
    return math.fsum(terms)


def haantjes_ricci_directional(net: Network, ctx: MetricContext, u: int, v: int,
                               params: HaantjesParams = DEFAULT_PARAMS) -> float:
    """Curvature in the direction u->v: variations of the shortest path.

    The base path is the lexicographically smallest shortest path pi_0; every
    other simple path meeting pi_0 only at u and v contributes
    sqrt((l(pi) - l(pi_0)) / l(pi_0)^3), signed on directed networks.
    """
    if u == v:
        raise GraphValidationError("directional curvature requires distinct endpoints")
    base = shortest_path(net, ctx, u, v)
    if base is None or len(base) - 1 > params.max_path_edges:
        raise UnreachableError(f"{u} and {v} are not connected within the cutoff")
    l0 = math.fsum(edge_length(net, ctx, (base[i], base[i + 1]))
                   for i in range(len(base) - 1))
    forbidden = None
    interior = base[1:-1]
    if interior:
        forbidden = np.zeros(net.vertex_count, dtype=np.uint8)
        forbidden[interior] = 1
    lengths, signs = path_stats(net, ctx, u, v, params.max_path_edges,
                                exclude_direct_edge=(len(base) == 2),
                                forbidden=forbidden)
    if not len(lengths):
        return 0.0
    diff = lengths - l0
    # Dijkstra guarantees diff >= 0 up to float noise on weighted graphs.
    tol = 1e-12 * max(1.0, l0)
    if float(diff.min()) < -tol:
        raise CurvatureDomainError("found a path shorter than the shortest path")
    diff = np.maximum(diff, 0.0)
    c3 = l0 * l0 * l0
    kappa = np.sqrt(diff / c3)
    return math.fsum(kappa * signs)


# -- excess and aspect-ratio proxies ---------------------------------------

def excess(d_uv: float, d_vw: float, d_uw: float) -> float:
    """Largest middle-vertex excess of a metric triple (perimeter minus twice
    the shortest side)."""
    _check_metric_triple(d_uv, d_vw, d_uw)
    return max(d_uv + d_vw - d_uw, d_vw + d_uw - d_uv, d_uw + d_uv - d_vw)


def aspect_ratio(d_uv: float, d_vw: float, d_uw: float) -> float:
    """Excess scaled by the triangle diameter."""
    _check_metric_triple(d_uv, d_vw, d_uw)
    diam = max(d_uv, d_vw, d_uw)
    if diam <= 0:
        raise CurvatureDomainError("zero-diameter triangle")
    return excess(d_uv, d_vw, d_uw) / diam


def _check_metric_triple(a: float, b: float, c: float) -> None:
    for s in (a, b, c):
        if not (s >= 0 and math.isfinite(s)):
            raise CurvatureDomainError(f"distances must be non-negative and finite: {(a, b, c)}")
    if a + b < c or b + c < a or c + a < b:
        raise CurvatureDomainError(f"triangle inequality violated: {(a, b, c)}")


def _triangle_distances(net: Network, ctx: MetricContext,
                        u: int, v: int, w: int) -> tuple[float, float, float]:
    return (shortest_path_length(net, ctx, u, v),
            shortest_path_length(net, ctx, v, w),
            shortest_path_length(net, ctx, u, w))


def edge_excess(net: Network, ctx: MetricContext, e: Edge) -> float:
    """Max excess over the triangles adjacent to e; nan when triangle-free."""
    u, v = net.require_edge(e)
    best = math.nan
    for _, _, w in enumerate_triangles(net, (u, v)):
        val = excess(*_triangle_distances(net, ctx, u, v, w))
        if math.isnan(best) or val > best:
            best = val
    return best


def edge_aspect_ratio(net: Network, ctx: MetricContext, e: Edge) -> float:
    """Min aspect ratio over the triangles adjacent to e; nan when triangle-free."""
    u, v = net.require_edge(e)
    best = math.nan
    for _, _, w in enumerate_triangles(net, (u, v)):
        val = aspect_ratio(*_triangle_distances(net, ctx, u, v, w))
        if math.isnan(best) or val < best:
            best = val
    return best


def triangle_extrema(net: Network, ctx: MetricContext) -> tuple[float, float]:
    """(max excess, min aspect ratio) over all triangles of the network."""
    max_exc = None
    min_ar = None
    for u, v in net.edges:
        a, b = min(u, v), max(u, v)
        for _, _, w in enumerate_triangles(net, (a, b)):
            if w < b:
                continue  # count each triangle once, a < b < w
            d = _triangle_distances(net, ctx, a, b, w)
            exc = excess(*d)
            ar = aspect_ratio(*d)
            if max_exc is None or exc > max_exc:
                max_exc = exc
            if min_ar is None or ar < min_ar:
                min_ar = ar
    if max_exc is None:
        raise GraphValidationError("network has no triangles")
    return max_exc, min_ar

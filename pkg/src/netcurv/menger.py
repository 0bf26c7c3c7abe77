"""Menger curvature of metric triangles and the derived network curvatures.

The triangle curvature follows the circumscribed-circle formulas in all three
background geometries, keeping the printed normalization constants 4 and 2 so
that the unit combinatorial triangle comes out at sqrt(3)/3 and the spherical
octant triangle at sqrt(2)/2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import (CurvatureDomainError, DegenerateTriangleError,
                     GeometryDomainError, GraphValidationError, UnreachableError)
from .network import Edge, MetricContext, Network, PathRecord, edge_length
from .paths import cycle_sign, enumerate_triangles, shortest_path_length


@dataclass(frozen=True)
class MetricTriangle:
    """A metric triple of side lengths; equality in the triangle inequality is
    allowed at construction and handled as the degenerate case by the curvature
    formulas."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for s in (self.a, self.b, self.c):
            if not (s > 0 and math.isfinite(s)):
                raise GraphValidationError(f"triangle sides must be positive and finite: {self}")
        if self.a + self.b < self.c or self.b + self.c < self.a or self.c + self.a < self.b:
            raise GraphValidationError(f"triangle inequality violated: {self}")

    def sides(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)


TriangleLike = Union[MetricTriangle, tuple]


def _as_triangle(t: TriangleLike) -> MetricTriangle:
    if isinstance(t, MetricTriangle):
        return t
    return MetricTriangle(*t)


def menger_triangle(t: TriangleLike, geometry: str = "euclidean") -> float:
    """Menger curvature of a metric triangle in the chosen background geometry.

    Degenerate (collinear) triples raise DegenerateTriangleError; spherical
    input must satisfy max side < pi and perimeter < 2*pi.
    """
    a, b, c = _as_triangle(t).sides()
    p = (a + b + c) / 2.0
    fa, fb, fc = p - a, p - b, p - c
    if geometry == "euclidean":
        if min(fa, fb, fc) <= 0:
            raise DegenerateTriangleError(f"collinear metric triple {(a, b, c)}")
        return a * b * c / (4.0 * math.sqrt(p * fa * fb * fc))
    if geometry == "spherical":
        if max(a, b, c) >= math.pi or 2.0 * p >= 2.0 * math.pi:
            raise GeometryDomainError(
                f"spherical triangle needs sides < pi and perimeter < 2*pi: {(a, b, c)}")
        if min(fa, fb, fc) <= 0:
            raise DegenerateTriangleError(f"collinear metric triple {(a, b, c)}")
        num = math.sqrt(math.sin(p) * math.sin(fa) * math.sin(fb) * math.sin(fc))
        den = 2.0 * math.sin(a / 2) * math.sin(b / 2) * math.sin(c / 2)
        return num / den
    if geometry == "hyperbolic":
        if min(fa, fb, fc) <= 0:
            raise DegenerateTriangleError(f"collinear metric triple {(a, b, c)}")
        num = math.sqrt(math.sinh(p) * math.sinh(fa) * math.sinh(fb) * math.sinh(fc))
        den = 2.0 * math.sinh(a / 2) * math.sinh(b / 2) * math.sinh(c / 2)
        return num / den
    raise GraphValidationError(f"unknown geometry {geometry!r}")


def menger_signed(net: Network, e: Edge, apex: int, kappa: float) -> float:
    """Directed sign applied to a triangle curvature: eps * kappa.

    eps is the cycle sign of the two-edge path u-apex-v against the chord u->v;
    +1 on undirected networks.
    """
    u, v = net.require_edge(e)
    if not (net.has_edge(u, apex) and net.has_edge(apex, v)):
        raise GraphValidationError(f"({u},{apex},{v}) is not a triangle")
    return cycle_sign(net, (u, v), (u, apex, v)) * kappa


def menger_ricci(net: Network, ctx: MetricContext, e: Edge) -> float:
    """Sum of signed triangle curvatures over all triangles adjacent to e."""
    u, v = net.require_edge(e)
    terms = []
    c = edge_length(net, ctx, (u, v))
    for _, _, w in enumerate_triangles(net, (u, v)):
        a = edge_length(net, ctx, (u, w))
        b = edge_length(net, ctx, (w, v))
        try:
            kappa = menger_triangle((a, b, c), ctx.geometry)
        except DegenerateTriangleError as exc:
            raise DegenerateTriangleError(
                f"triangle ({u},{v},{w}) is degenerate under the given metric: {exc}"
            ) from None
        terms.append(menger_signed(net, (u, v), w, kappa))
    return math.fsum(terms)


def menger_scalar(net: Network, ctx: MetricContext, v: int) -> float:
    """Sum of menger_ricci over the edges incident to v."""
    if not (0 <= v < net.vertex_count):
        raise GraphValidationError(f"vertex {v} out of range")
    terms = []
    if net.directed:
        for y in net.successors(v):
            terms.append(menger_ricci(net, ctx, (v, y)))
        for y in net.predecessors(v):
            terms.append(menger_ricci(net, ctx, (y, v)))
    else:
        for y in net.neighbors(v):
            terms.append(menger_ricci(net, ctx, (v, y)))
    return math.fsum(terms)


def menger_path(net: Network, ctx: MetricContext, path: PathRecord, k: int,
                geometry: str | None = None) -> float:
    """Menger curvature of the metric triangle obtained by splitting a path.

    The split vertex index k (1 <= k <= n-1) yields sides a = l(v_0..v_k),
    b = l(v_k..v_n); the chord is the edge (v_0, v_n) if present, else their
    shortest-path distance.
    """
    verts = path.vertices
    n = len(verts) - 1
    if not 1 <= k <= n - 1:
        raise GraphValidationError(f"split index must satisfy 1 <= k <= {n - 1}, got {k}")
    a = math.fsum(edge_length(net, ctx, (verts[i], verts[i + 1])) for i in range(k))
    b = math.fsum(edge_length(net, ctx, (verts[i], verts[i + 1])) for i in range(k, n))
    u, w = verts[0], verts[-1]
    if net.has_edge(u, w):
        c = edge_length(net, ctx, (u, w))
    else:
        c = shortest_path_length(net, ctx, u, w)
        if c == math.inf:
            raise UnreachableError(f"no chord between {u} and {w}")
    if c <= 0:
        raise CurvatureDomainError("chord length must be positive")
    return menger_triangle((a, b, c), geometry or ctx.geometry)

"""Polyhedron and polyhedral-complex builders (1-skeletons with declared faces).

Archimedean solids are produced by combinatorial truncation/rectification/
cantellation of hardcoded seeds, so face structure comes out of the machinery
instead of long literal tables. The two glued dodecahedral 3-manifolds are
modeled by their quotient incidence structure on K5: the complete graph's
twelve 5-cycles split into six complementary pairs, and taking 3 (or 5) pairs
gives every edge exactly 3 (or 5) pentagonal cells.
"""
from __future__ import annotations

import itertools
import math

from .errors import GraphValidationError
from .network import Face, Network

POLYHEDRON_NAMES = (
    "truncated_dodecahedron",
    "truncated_octahedron",
    "truncated_icosidodecahedron",
    "tetrahemihexahedron",
    "octahemoctahedron",
    "quasi_rhombicuboctahedron",
    "seifert_weber",
    "poincare_sphere",
)


def build_polyhedron(name: str) -> Network:
    """1-skeleton plus declared faces of the named polyhedron or complex."""
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise GraphValidationError(
            f"unknown polyhedron {name!r}; supported: {', '.join(POLYHEDRON_NAMES)}") from None
    return builder()


# -- assembly helpers ---------------------------------------------------------

def _canon_cycle(cycle):
    """Rotation/reflection-normalized form of a cyclic vertex sequence."""
    k = len(cycle)
    best = None
    for seq in (cycle, tuple(reversed(cycle))):
        for r in range(k):
            cand = tuple(seq[(r + j) % k] for j in range(k))
            if best is None or cand < best:
                best = cand
    return best


def _assemble(face_cycles, retrograde=None):
    """Network from face boundary cycles over arbitrary hashable labels."""
    labels = sorted({v for f in face_cycles for v in f})
    index = {lab: i for i, lab in enumerate(labels)}
    retrograde = retrograde or set()
    edges = set()
    faces = []
    for f in face_cycles:
        cyc = tuple(index[v] for v in f)
        for i in range(len(cyc)):
            a, b = cyc[i], cyc[(i + 1) % len(cyc)]
            edges.add((min(a, b), max(a, b)))
        faces.append(Face(_canon_cycle(cyc), retrograde=(f in retrograde)))
    faces.sort(key=lambda fc: (len(fc.boundary), fc.boundary))
    return Network(len(labels), sorted(edges), faces=faces)


def _edge_of(a, b):
    return (a, b) if a <= b else (b, a)


def _vertex_rotation(v, cycles):
    """Cyclic order of v's neighbors induced by the faces around v.

    Each face through v pairs two of its neighbors; for a closed complex the
    pairing closes into a single cycle.
    """
    links = {}
    for cyc in cycles:
        if v not in cyc:
            continue
        i = cyc.index(v)
        a, b = cyc[i - 1], cyc[(i + 1) % len(cyc)]
        links.setdefault(a, []).append(b)
        links.setdefault(b, []).append(a)
    start = min(links)
    rotation = [start]
    prev, cur = None, start
    while True:
        nxts = [x for x in links[cur] if x != prev]
        nxt = min(nxts) if prev is None else nxts[0]
        if nxt == start:
            break
        rotation.append(nxt)
        prev, cur = cur, nxt
    return rotation


def _truncate(face_cycles):
    """Combinatorial truncation: corners become vertices, originals widen."""
    new_faces = []
    for cyc in face_cycles:
        k = len(cyc)
        widened = []
        for i in range(k):
            v = cyc[i]
            widened.append((v, _edge_of(v, cyc[i - 1])))
            widened.append((v, _edge_of(v, cyc[(i + 1) % k])))
        new_faces.append(tuple(widened))
    vertices = {v for cyc in face_cycles for v in cyc}
    for v in sorted(vertices):
        rot = _vertex_rotation(v, face_cycles)
        new_faces.append(tuple((v, _edge_of(v, w)) for w in rot))
    return new_faces


def _rectify(face_cycles):
    """Combinatorial rectification: edge midpoints become the vertices."""
    new_faces = []
    for cyc in face_cycles:
        k = len(cyc)
        new_faces.append(tuple(_edge_of(cyc[i], cyc[(i + 1) % k]) for i in range(k)))
    vertices = {v for cyc in face_cycles for v in cyc}
    for v in sorted(vertices):
        rot = _vertex_rotation(v, face_cycles)
        new_faces.append(tuple(_edge_of(v, w) for w in rot))
    return new_faces


def _cantellate(face_cycles):
    """Combinatorial cantellation (expansion): one vertex per (vertex, face) flag."""
    face_ids = {cyc: n for n, cyc in enumerate(face_cycles)}
    by_edge = {}
    for cyc in face_cycles:
        for i in range(len(cyc)):
            by_edge.setdefault(_edge_of(cyc[i], cyc[(i + 1) % len(cyc)]), []).append(cyc)
    new_faces = []
    for cyc in face_cycles:
        new_faces.append(tuple((v, face_ids[cyc]) for v in cyc))
    vertices = {v for cyc in face_cycles for v in cyc}
    for v in sorted(vertices):
        rot = _vertex_rotation(v, face_cycles)
        ring = []
        for idx in range(len(rot)):
            e1 = _edge_of(v, rot[idx])
            e2 = _edge_of(v, rot[(idx + 1) % len(rot)])
            shared = [c for c in by_edge[e1] if c in by_edge[e2]]
            ring.append((v, face_ids[shared[0]]))
        new_faces.append(tuple(ring))
    for edge, (f1, f2) in ((e, tuple(cs)) for e, cs in by_edge.items()):
        u, v = edge
        new_faces.append(((u, face_ids[f1]), (u, face_ids[f2]),
                          (v, face_ids[f2]), (v, face_ids[f1])))
    return new_faces


# -- seed solids --------------------------------------------------------------

def _octahedron_faces():
    # vertices 0..5 = +x,-x,+y,-y,+z,-z; one triangle per octant
    xs, ys, zs = (0, 1), (2, 3), (4, 5)
    faces = []
    for sx, sy, sz in itertools.product(range(2), repeat=3):
        faces.append((xs[sx], ys[sy], zs[sz]))
    return [tuple(f) for f in faces]


def _cube_faces():
    # vertices are (sx, sy, sz) sign triples encoded 0..7
    def vid(sx, sy, sz):
        return sx * 4 + sy * 2 + sz

    return [
        (vid(0, 0, 0), vid(0, 0, 1), vid(0, 1, 1), vid(0, 1, 0)),
        (vid(1, 0, 0), vid(1, 1, 0), vid(1, 1, 1), vid(1, 0, 1)),
        (vid(0, 0, 0), vid(1, 0, 0), vid(1, 0, 1), vid(0, 0, 1)),
        (vid(0, 1, 0), vid(0, 1, 1), vid(1, 1, 1), vid(1, 1, 0)),
        (vid(0, 0, 0), vid(0, 1, 0), vid(1, 1, 0), vid(1, 0, 0)),
        (vid(0, 0, 1), vid(1, 0, 1), vid(1, 1, 1), vid(0, 1, 1)),
    ]


def _icosahedron_faces():
    """Faces are exactly the 3-cliques of the golden-rectangle unit-distance graph."""
    phi = (1 + math.sqrt(5)) / 2
    pts = []
    for a in (-1.0, 1.0):
        for b in (-phi, phi):
            pts += [(0.0, a, b), (a, b, 0.0), (b, 0.0, a)]
    pts = sorted(pts)
    n = len(pts)
    min_d2 = 4.0  # squared edge length: vertices at distance 2
    adj = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            d2 = sum((pts[i][t] - pts[j][t]) ** 2 for t in range(3))
            if abs(d2 - min_d2) < 1e-9:
                adj[i][j] = adj[j][i] = True
    faces = []
    for i in range(n):
        for j in range(i + 1, n):
            if not adj[i][j]:
                continue
            for k in range(j + 1, n):
                if adj[i][k] and adj[j][k]:
                    faces.append((i, j, k))
    return faces


def _dual(face_cycles):
    """Dual polyhedron: old faces become vertices, old vertices become faces."""
    face_ids = {cyc: n for n, cyc in enumerate(face_cycles)}
    by_edge = {}
    for cyc in face_cycles:
        for i in range(len(cyc)):
            by_edge.setdefault(_edge_of(cyc[i], cyc[(i + 1) % len(cyc)]), []).append(cyc)
    vertices = {v for cyc in face_cycles for v in cyc}
    new_faces = []
    for v in sorted(vertices):
        rot = _vertex_rotation(v, face_cycles)
        ring = []
        for idx in range(len(rot)):
            e1 = _edge_of(v, rot[idx])
            e2 = _edge_of(v, rot[(idx + 1) % len(rot)])
            shared = [c for c in by_edge[e1] if c in by_edge[e2]]
            ring.append(face_ids[shared[0]])
        new_faces.append(tuple(ring))
    return new_faces


def _dodecahedron_faces():
    return _dual(_icosahedron_faces())


def _cuboctahedron_vertices():
    pts = []
    for a in (-1.0, 1.0):
        for b in (-1.0, 1.0):
            pts += [(a, b, 0.0), (a, 0.0, b), (0.0, a, b)]
    return sorted(set(pts))


def _cuboctahedron_adjacency(pts):
    n = len(pts)
    adj = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            d2 = sum((pts[i][t] - pts[j][t]) ** 2 for t in range(3))
            if abs(d2 - 2.0) < 1e-9:
                adj[i][j] = adj[j][i] = True
    return adj


def _hexagon_cycle(members, adj):
    """Order a 6-vertex equator into its cycle using the adjacency relation."""
    start = members[0]
    cyc = [start]
    prev = None
    while len(cyc) < 6:
        nxts = sorted(m for m in members
                      if m != prev and m != cyc[-1] and adj[cyc[-1]][m])
        nxt = nxts[0]
        cyc.append(nxt)
        prev = cyc[-2]
    return tuple(cyc)


# -- named builders -----------------------------------------------------------

def _truncated_octahedron():
    return _assemble(_truncate(_octahedron_faces()))


def _truncated_dodecahedron():
    return _assemble(_truncate(_dodecahedron_faces()))


def _truncated_icosidodecahedron():
    return _assemble(_truncate(_rectify(_dodecahedron_faces())))


def _tetrahemihexahedron():
    # octahedron skeleton: 4 alternating triangles + 3 equatorial squares
    xs, ys, zs = (0, 1), (2, 3), (4, 5)
    triangles = [(xs[sx], ys[sy], zs[sz])
                 for sx, sy, sz in itertools.product(range(2), repeat=3)
                 if (sx + sy + sz) % 2 == 0]
    squares = [(xs[0], ys[0], xs[1], ys[1]),
               (xs[0], zs[0], xs[1], zs[1]),
               (ys[0], zs[0], ys[1], zs[1])]
    return _assemble(triangles + squares)


def _octahemoctahedron():
    # cuboctahedron skeleton: all 8 triangles + the 4 hexagonal equators
    pts = _cuboctahedron_vertices()
    adj = _cuboctahedron_adjacency(pts)
    n = len(pts)
    triangles = []
    for i in range(n):
        for j in range(i + 1, n):
            if not adj[i][j]:
                continue
            for k in range(j + 1, n):
                if adj[i][k] and adj[j][k]:
                    triangles.append((i, j, k))
    hexagons = []
    for d in ((1, 1, 1), (1, 1, -1), (1, -1, 1), (-1, 1, 1)):
        members = [i for i, p in enumerate(pts)
                   if abs(p[0] * d[0] + p[1] * d[1] + p[2] * d[2]) < 1e-9]
        hexagons.append(_hexagon_cycle(members, adj))
    return _assemble(triangles + hexagons)


def _quasi_rhombicuboctahedron():
    # combinatorially the cantellated cube; its 8 triangles are retrograde
    cells = _cantellate(_cube_faces())
    retro = {c for c in cells if len(c) == 3}
    return _assemble(cells, retrograde=retro)


def _k5_pentagon_pairs():
    """The 12 pentagons of K5 as 6 complementary (edge-disjoint) pairs."""
    cycles = set()
    for perm in itertools.permutations(range(1, 5)):
        cycles.add(_canon_cycle((0,) + perm))
    cycles = sorted(cycles)

    def edge_set(cyc):
        return frozenset(_edge_of(cyc[i], cyc[(i + 1) % 5]) for i in range(5))

    by_edges = {edge_set(c): c for c in cycles}
    all_edges = frozenset(_edge_of(a, b) for a in range(5) for b in range(a + 1, 5))
    pairs = []
    used = set()
    for c in cycles:
        if c in used:
            continue
        comp = by_edges[all_edges - edge_set(c)]
        pairs.append((c, comp))
        used.update((c, comp))
    return pairs


def _poincare_sphere():
    # quotient incidence model: 6 pentagonal cells, 3 through every edge
    pairs = _k5_pentagon_pairs()
    cells = [c for pair in pairs[:3] for c in pair]
    return _assemble(cells)


def _seifert_weber():
    # quotient incidence model: 10 pentagonal cells, 5 through every edge
    pairs = _k5_pentagon_pairs()
    cells = [c for pair in pairs[:5] for c in pair]
    return _assemble(cells)


_BUILDERS = {
    "truncated_dodecahedron": _truncated_dodecahedron,
    "truncated_octahedron": _truncated_octahedron,
    "truncated_icosidodecahedron": _truncated_icosidodecahedron,
    "tetrahemihexahedron": _tetrahemihexahedron,
    "octahemoctahedron": _octahemoctahedron,
    "quasi_rhombicuboctahedron": _quasi_rhombicuboctahedron,
    "seifert_weber": _seifert_weber,
    "poincare_sphere": _poincare_sphere,
}

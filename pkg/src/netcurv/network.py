"""Graph data model: networks, faces, metric contexts, path records, edge-list I/O.

Networks are immutable after construction and safe to share across threads.
Vertices are dense integers 0..V-1; loaders re-index arbitrary labels.
"""
from __future__ import annotations

import io
import math
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Optional, TextIO, Union

from .errors import EdgeListParseError, GraphValidationError

Edge = tuple[int, int]

LENGTH_SOURCES = ("combinatorial", "weights", "path_degree")
GEOMETRIES = ("euclidean", "spherical", "hyperbolic")


@dataclass(frozen=True)
class Face:
    """A 2-cell given by its boundary cycle.

    multiplicity > 1 means this many cells share the boundary (3-complex
    gluings); retrograde faces contribute with a negative orientation sign.
    """

    boundary: tuple[int, ...]
    weight: float = 1.0
    multiplicity: int = 1
    retrograde: bool = False

    def __post_init__(self):
        object.__setattr__(self, "boundary", tuple(self.boundary))
        if len(self.boundary) < 3:
            raise GraphValidationError(f"face needs >= 3 vertices, got {self.boundary}")
        if len(set(self.boundary)) != len(self.boundary):
            raise GraphValidationError(f"face boundary is not an elementary cycle: {self.boundary}")
        if not (self.weight > 0 and math.isfinite(self.weight)):
            raise GraphValidationError(f"face weight must be positive and finite, got {self.weight}")
        if self.multiplicity < 1:
            raise GraphValidationError(f"face multiplicity must be >= 1, got {self.multiplicity}")

    def edges(self) -> list[Edge]:
        b = self.boundary
        return [(b[i], b[(i + 1) % len(b)]) for i in range(len(b))]


@dataclass(frozen=True)
class MetricContext:
    """Choice of edge-length source plus background geometry for Menger curvature."""

    length_source: str = "combinatorial"
    geometry: str = "euclidean"

    def __post_init__(self):
        if self.length_source not in LENGTH_SOURCES:
            raise GraphValidationError(
                f"length_source must be one of {LENGTH_SOURCES}, got {self.length_source!r}")
        if self.geometry not in GEOMETRIES:
            raise GraphValidationError(
                f"geometry must be one of {GEOMETRIES}, got {self.geometry!r}")


@dataclass(frozen=True)
class PathRecord:
    """A simple path: ordered vertices, total length, and directed sign vs its chord."""

    vertices: tuple[int, ...]
    length: float
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphValidationError(f"path repeats a vertex: {self.vertices}")
        if self.sign not in (-1, 0, 1):
            raise GraphValidationError(f"path sign must be in {{-1,0,+1}}, got {self.sign}")

    @property
    def n_edges(self) -> int:
        return len(self.vertices) - 1


class Network:
    """Vertex/edge container with optional direction, weights, and declared 2-cells.

    Immutable. In undirected networks at most one edge per unordered pair; in
    directed ones at most one per ordered pair. No self-loops.
    """

    __slots__ = ("vertex_count", "edges", "directed", "_weights", "vertex_weights",
                 "faces", "_adj", "_succ", "_pred", "_arc_set", "_csr_cache",
                 "_faces_by_edge", "__weakref__")

    def __init__(self, vertex_count: int, edges: Iterable[Edge], directed: bool = False,
                 edge_weights: Optional[dict] = None, vertex_weights: Optional[dict] = None,
                 faces: Optional[Iterable[Face]] = None):
        if vertex_count < 0:
            raise GraphValidationError("vertex_count must be non-negative")
        self.vertex_count = int(vertex_count)
        self.directed = bool(directed)
        edge_list = []
        seen = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphValidationError(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphValidationError(f"edge ({u},{v}) out of range 0..{vertex_count - 1}")
            key = (u, v) if self.directed else (min(u, v), max(u, v))
            if key in seen:
                raise GraphValidationError(f"duplicate edge ({u},{v})")
            seen.add(key)
            edge_list.append((u, v))
        self.edges: tuple[Edge, ...] = tuple(edge_list)

        weights = {}
        if edge_weights:
            for (u, v), w in edge_weights.items():
                w = float(w)
                if not (w > 0 and math.isfinite(w)):
                    raise GraphValidationError(f"edge weight for ({u},{v}) must be positive and finite, got {w}")
                key = (u, v) if self.directed else (min(u, v), max(u, v))
                if key not in seen:
                    raise GraphValidationError(f"weight given for non-edge ({u},{v})")
                weights[key] = w
        self._weights = weights

        if vertex_weights:
            for v, w in vertex_weights.items():
                if not (w > 0 and math.isfinite(w)):
                    raise GraphValidationError(f"vertex weight for {v} must be positive and finite, got {w}")
            self.vertex_weights = dict(vertex_weights)
        else:
            self.vertex_weights = None

        adj = [set() for _ in range(vertex_count)]
        succ = [set() for _ in range(vertex_count)]
        pred = [set() for _ in range(vertex_count)]
        arc_set = set()
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
            succ[u].add(v)
            pred[v].add(u)
            arc_set.add((u, v))
            if not self.directed:
                arc_set.add((v, u))
        self._adj = tuple(tuple(sorted(s)) for s in adj)
        self._succ = tuple(tuple(sorted(s)) for s in succ)
        self._pred = tuple(tuple(sorted(s)) for s in pred)
        self._arc_set = frozenset(arc_set)
        self._csr_cache = {}

        if faces is not None:
            faces = tuple(faces)
            for f in faces:
                for a, b in f.edges():
                    if not self.has_edge(a, b):
                        raise GraphValidationError(
                            f"face {f.boundary} uses missing edge ({a},{b})")
            self.faces: Optional[tuple[Face, ...]] = faces
            by_edge: dict[Edge, list[Face]] = {}
            for f in faces:
                for a, b in f.edges():
                    key = (min(a, b), max(a, b))
                    by_edge.setdefault(key, []).append(f)
            self._faces_by_edge = by_edge
        else:
            self.faces = None
            self._faces_by_edge = None

    # -- structure queries ------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors in the underlying undirected graph, ascending."""
        return self._adj[v]

    def successors(self, v: int) -> tuple[int, ...]:
        return self._succ[v] if self.directed else self._adj[v]

    def predecessors(self, v: int) -> tuple[int, ...]:
        return self._pred[v] if self.directed else self._adj[v]

    def degree(self, v: int) -> int:
        """Degree in the underlying undirected graph."""
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        """True if the pair is connected, ignoring direction."""
        return (u, v) in self._arc_set or (v, u) in self._arc_set

    def has_arc(self, u: int, v: int) -> bool:
        """True if the edge exists in the direction u -> v (always for undirected)."""
        return (u, v) in self._arc_set

    def edge_weight(self, u: int, v: int) -> float:
        key = (u, v) if self.directed else (min(u, v), max(u, v))
        return self._weights.get(key, 1.0)

    @property
    def has_weights(self) -> bool:
        return bool(self._weights)

    def require_edge(self, e: Edge) -> Edge:
        u, v = e
        if not self.has_edge(u, v):
            raise GraphValidationError(f"({u},{v}) is not an edge of this network")
        return (int(u), int(v))

    def faces_through(self, u: int, v: int) -> list[Face]:
        """Declared faces whose boundary uses the edge (u,v); [] when none declared."""
        if self._faces_by_edge is None:
            return []
        return list(self._faces_by_edge.get((min(u, v), max(u, v)), ()))

    def with_faces(self, faces: Iterable[Face]) -> "Network":
        """Copy of this network with the given declared 2-cells."""
        weights = {k: w for k, w in self._weights.items()} or None
        return Network(self.vertex_count, self.edges, self.directed,
                       weights, self.vertex_weights, faces)

    def relabel(self, perm: list[int]) -> "Network":
        """Apply the vertex permutation v -> perm[v], carrying weights and faces."""
        edges = [(perm[u], perm[v]) for u, v in self.edges]
        weights = {(perm[u], perm[v]): w for (u, v), w in self._weights.items()} or None
        vw = {perm[v]: w for v, w in self.vertex_weights.items()} if self.vertex_weights else None
        faces = None
        if self.faces is not None:
            faces = [Face(tuple(perm[x] for x in f.boundary), f.weight, f.multiplicity,
                          f.retrograde) for f in self.faces]
        return Network(self.vertex_count, edges, self.directed, weights, vw, faces)

    def __repr__(self):
        kind = "directed" if self.directed else "undirected"
        return (f"Network({kind}, V={self.vertex_count}, E={len(self.edges)}, "
                f"weighted={self.has_weights}, faces={len(self.faces) if self.faces else 0})")


def edge_length(net: Network, ctx: MetricContext, e: Edge) -> float:
    """Length of an existing edge under the metric context.

    combinatorial -> 1; weights -> w(e); path_degree -> (deg(u)*deg(v))**-0.5
    with degrees taken in the underlying undirected graph.
    """
    u, v = net.require_edge(e)
    if ctx.length_source == "combinatorial":
        return 1.0
    if ctx.length_source == "weights":
        return net.edge_weight(u, v)
    if net.directed:
        raise GraphValidationError("path_degree metric requires an undirected network")
    return (net.degree(u) * net.degree(v)) ** -0.5


# -- edge-list and faces text formats -------------------------------------

def _lines(source: Union[str, TextIO, Iterable[str]]) -> Iterable[str]:
    if isinstance(source, str):
        return io.StringIO(source)
    return source


def load_edge_list(source, directed: bool = False, weighted: bool = False,
                   return_labels: bool = False):
    """Parse `u v [w]` lines into a Network.

    Vertices are re-indexed densely 0..V-1 in first-appearance order; `#`
    starts a comment. Duplicate edges keep the first weight and are counted
    in a single warning.
    """
    labels: dict[str, int] = {}
    edges: list[Edge] = []
    weights: dict[Edge, float] = {}
    seen: set[Edge] = set()
    duplicates = 0

    def vid(token: str) -> int:
        if token not in labels:
            labels[token] = len(labels)
        return labels[token]

    for line_no, raw in enumerate(_lines(source), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise EdgeListParseError(f"expected 'u v [w]', got {raw.strip()!r}", line_no)
        u, v = vid(parts[0]), vid(parts[1])
        if u == v:
            raise GraphValidationError(f"line {line_no}: self-loop {parts[0]!r}")
        w = None
        if weighted and len(parts) == 3:
            try:
                w = float(parts[2])
            except ValueError:
                raise EdgeListParseError(f"bad weight {parts[2]!r}", line_no) from None
            if not (w > 0 and math.isfinite(w)):
                raise GraphValidationError(f"line {line_no}: non-positive weight {parts[2]}")
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            duplicates += 1
            continue
        seen.add(key)
        edges.append((u, v))
        if w is not None:
            weights[(u, v)] = w

    if duplicates:
        warnings.warn(f"ignored {duplicates} duplicate edge line(s), kept first occurrences",
                      stacklevel=2)
    net = Network(len(labels), edges, directed=directed, edge_weights=weights or None)
    if return_labels:
        return net, {i: tok for tok, i in labels.items()}
    return net


def load_faces(source, net: Optional[Network] = None) -> tuple[Face, ...]:
    """Parse the faces sidecar: `F v0 v1 ... vk [w=<weight>] [m=<mult>] [r=1]` per line.

    Vertices are the dense indices of the accompanying edge list. The r= flag
    marks retrograde faces. When a network is given, boundaries are checked
    against its edges.
    """
    faces = []
    for line_no, raw in enumerate(_lines(source), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] != "F":
            raise EdgeListParseError(f"face lines start with 'F', got {raw.strip()!r}", line_no)
        verts = []
        weight, mult, retro = 1.0, 1, False
        for tok in parts[1:]:
            if "=" in tok:
                key, _, val = tok.partition("=")
                try:
                    if key == "w":
                        weight = float(val)
                    elif key == "m":
                        mult = int(val)
                    elif key == "r":
                        retro = bool(int(val))
                    else:
                        raise ValueError
                except ValueError:
                    raise EdgeListParseError(f"bad face option {tok!r}", line_no) from None
            else:
                try:
                    verts.append(int(tok))
                except ValueError:
                    raise EdgeListParseError(f"bad vertex index {tok!r}", line_no) from None
        try:
            face = Face(tuple(verts), weight, mult, retro)
        except GraphValidationError as exc:
            raise GraphValidationError(f"line {line_no}: {exc}") from None
        faces.append(face)
    out = tuple(faces)
    if net is not None:
        for f in out:
            for a, b in f.edges():
                if not (0 <= a < net.vertex_count and 0 <= b < net.vertex_count
                        and net.has_edge(a, b)):
                    raise GraphValidationError(f"face {f.boundary} uses missing edge ({a},{b})")
    return out


def write_edge_list(net: Network, stream: TextIO) -> None:
    for u, v in net.edges:
        if net.has_weights:
            stream.write(f"{u} {v} {net.edge_weight(u, v)!r}\n")
        else:
            stream.write(f"{u} {v}\n")


def write_faces(faces: Iterable[Face], stream: TextIO) -> None:
    for f in faces:
        parts = ["F"] + [str(v) for v in f.boundary]
        if f.weight != 1.0:
            parts.append(f"w={f.weight!r}")
        if f.multiplicity != 1:
            parts.append(f"m={f.multiplicity}")
        if f.retrograde:
            parts.append("r=1")
        stream.write(" ".join(parts) + "\n")

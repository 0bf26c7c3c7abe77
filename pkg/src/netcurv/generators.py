"""Model-network generators and constant-curvature lattice builders.

Generation is driven by numpy's PCG64 so identical specs reproduce identical
edge lists across platforms; one generator instance is consumed sequentially
per spec (no hidden global state).
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import GraphValidationError
from .network import Face, Network, load_edge_list

BA_EPSILON = 1e-9  # keeps degree-0 seed vertices attachable


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters of one random-graph draw (er, ws or ba)."""

    kind: str
    n: int
    p: Optional[float] = None
    k: Optional[int] = None
    beta: Optional[float] = None
    m0: Optional[int] = None
    m: Optional[int] = None
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise GraphValidationError("n must be positive")
        if not 0 <= self.seed < 2 ** 64:
            raise GraphValidationError("seed must be an unsigned 64-bit integer")
        if self.kind == "er":
            if self.p is None or not 0 <= self.p <= 1:
                raise GraphValidationError("er requires 0 <= p <= 1")
        elif self.kind == "ws":
            if self.k is None or self.k % 2 != 0 or not 0 < self.k < self.n:
                raise GraphValidationError("ws requires even k with 0 < k < n")
            if self.beta is None or not 0 <= self.beta <= 1:
                raise GraphValidationError("ws requires 0 <= beta <= 1")
        elif self.kind == "ba":
            if self.m0 is None or self.m is None or not 1 <= self.m <= self.m0 < self.n:
                raise GraphValidationError("ba requires 1 <= m <= m0 < n")
        else:
            raise GraphValidationError(f"unknown generator kind {self.kind!r}")


def generate(spec: GeneratorSpec) -> Network:
    """Draw an undirected simple graph for the spec; same spec, same graph."""
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    if spec.kind == "er":
        edges = _erdos_renyi(spec.n, spec.p, rng)
    elif spec.kind == "ws":
        edges = _watts_strogatz(spec.n, spec.k, spec.beta, rng)
    else:
        edges = _barabasi_albert(spec.n, spec.m0, spec.m, rng)
    return Network(spec.n, edges)


def _erdos_renyi(n, p, rng):
    """Independent Bernoulli(p) per unordered pair."""
    if n < 2:
        return []
    iu, ju = np.triu_indices(n, k=1)
    mask = rng.random(len(iu)) < p
    return list(zip(iu[mask].tolist(), ju[mask].tolist()))


def _watts_strogatz(n, k, beta, rng):
    """Ring lattice with k/2 neighbors per side, each spoke rewired w.p. beta."""
    edge_set = set()
    for j in range(1, k // 2 + 1):
        for i in range(n):
            edge_set.add((min(i, (i + j) % n), max(i, (i + j) % n)))
    edges = sorted(edge_set)
    if beta > 0:
        current = set(edges)
        for idx, (u, v) in enumerate(edges):
            if rng.random() >= beta:
                continue
            # rewire the far endpoint, keeping the graph simple
            for _ in range(4 * n):
                w = int(rng.integers(n))
                if w != u and (min(u, w), max(u, w)) not in current:
                    current.discard((u, v))
                    current.add((min(u, w), max(u, w)))
                    edges[idx] = (min(u, w), max(u, w))
                    break
        edges = [e for e in edges if e in current]
    return edges


def _barabasi_albert(n, m0, m, rng):
    """Growth with preferential attachment over a path-connected seed."""
    edges = [(i, i + 1) for i in range(m0 - 1)]
    weight = np.zeros(n, dtype=np.float64)
    weight[:m0] += BA_EPSILON
    for u, v in edges:
        weight[u] += 1
        weight[v] += 1
    if m0 == 1:
        weight[0] = BA_EPSILON
    for new in range(m0, n):
        candidates = weight[:new].copy()
        chosen = []
        for _ in range(m):
            total = candidates.sum()
            cum = np.cumsum(candidates)
            r = rng.random() * total
            pick = int(np.searchsorted(cum, r, side="right"))
            pick = min(pick, new - 1)
            chosen.append(pick)
            candidates[pick] = 0.0
        for t in chosen:
            edges.append((t, new))
            weight[t] += 1
            weight[new] += 1
        weight[new] += BA_EPSILON
    return edges


@dataclass(frozen=True)
class LatticeSpec:
    """A tessellation patch: triangular, square, hexagonal or cubic; wrap makes
    it toroidal so every edge is interior."""

    kind: str
    dims: tuple[int, ...]
    wrap: bool = False

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        expected = 3 if self.kind == "cubic" else 2
        if self.kind not in ("triangular", "square", "hexagonal", "cubic"):
            raise GraphValidationError(f"unknown lattice kind {self.kind!r}")
        if len(self.dims) != expected:
            raise GraphValidationError(f"{self.kind} lattice needs {expected} dims")
        if any(d < 2 for d in self.dims):
            raise GraphValidationError("lattice dims must be >= 2")
        if self.wrap and any(d < 3 for d in self.dims):
            raise GraphValidationError("wrapped lattices need dims >= 3 per axis")
        if self.kind == "hexagonal" and self.wrap and any(d % 2 for d in self.dims):
            raise GraphValidationError("wrapped hexagonal lattices need even dims")


def build_lattice(spec: LatticeSpec) -> Network:
    """The named tessellation with all 2-cells declared as faces."""
    builder = {
        "square": _square_lattice,
        "triangular": _triangular_lattice,
        "hexagonal": _hexagonal_lattice,
        "cubic": _cubic_lattice,
    }[spec.kind]
    return builder(spec.dims, spec.wrap)


def _square_lattice(dims, wrap):
    d0, d1 = dims

    def vid(i, j):
        return (i % d0) * d1 + (j % d1)

    edges = set()
    faces = []
    for i in range(d0):
        for j in range(d1):
            if wrap or i + 1 < d0:
                edges.add(tuple(sorted((vid(i, j), vid(i + 1, j)))))
            if wrap or j + 1 < d1:
                edges.add(tuple(sorted((vid(i, j), vid(i, j + 1)))))
            if wrap or (i + 1 < d0 and j + 1 < d1):
                faces.append(Face((vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1))))
    return Network(d0 * d1, sorted(edges), faces=faces)


def _triangular_lattice(dims, wrap):
    d0, d1 = dims

    def vid(i, j):
        return (i % d0) * d1 + (j % d1)

    edges = set()
    faces = []
    for i in range(d0):
        for j in range(d1):
            if wrap or i + 1 < d0:
                edges.add(tuple(sorted((vid(i, j), vid(i + 1, j)))))
            if wrap or j + 1 < d1:
                edges.add(tuple(sorted((vid(i, j), vid(i, j + 1)))))
            if wrap or (i + 1 < d0 and j + 1 < d1):
                edges.add(tuple(sorted((vid(i, j), vid(i + 1, j + 1)))))
                faces.append(Face((vid(i, j), vid(i + 1, j), vid(i + 1, j + 1))))
                faces.append(Face((vid(i, j), vid(i + 1, j + 1), vid(i, j + 1))))
    return Network(d0 * d1, sorted(edges), faces=faces)


def _hexagonal_lattice(dims, wrap):
    # Brick-wall honeycomb: all horizontal edges, vertical struts where i+j is
    # even; every vertex then has degree 3 and every hexagon is a brick.
    d0, d1 = dims

    def vid(i, j):
        return (i % d0) * d1 + (j % d1)

    edges = set()
    faces = []
    for i in range(d0):
        for j in range(d1):
            if wrap or j + 1 < d1:
                edges.add(tuple(sorted((vid(i, j), vid(i, j + 1)))))
            if (i + j) % 2 == 0 and (wrap or i + 1 < d0):
                edges.add(tuple(sorted((vid(i, j), vid(i + 1, j)))))
            if (i + j) % 2 == 0 and (wrap or (i + 1 < d0 and j + 2 < d1)):
                faces.append(Face((vid(i, j), vid(i, j + 1), vid(i, j + 2),
                                   vid(i + 1, j + 2), vid(i + 1, j + 1), vid(i + 1, j))))
    return Network(d0 * d1, sorted(edges), faces=faces)


def _cubic_lattice(dims, wrap):
    d0, d1, d2 = dims

    def vid(i, j, k):
        return ((i % d0) * d1 + (j % d1)) * d2 + (k % d2)

    edges = set()
    faces = []
    for i in range(d0):
        for j in range(d1):
            for k in range(d2):
                if wrap or i + 1 < d0:
                    edges.add(tuple(sorted((vid(i, j, k), vid(i + 1, j, k)))))
                if wrap or j + 1 < d1:
                    edges.add(tuple(sorted((vid(i, j, k), vid(i, j + 1, k)))))
                if wrap or k + 1 < d2:
                    edges.add(tuple(sorted((vid(i, j, k), vid(i, j, k + 1)))))
                if wrap or (i + 1 < d0 and j + 1 < d1):
                    faces.append(Face((vid(i, j, k), vid(i + 1, j, k),
                                       vid(i + 1, j + 1, k), vid(i, j + 1, k))))
                if wrap or (i + 1 < d0 and k + 1 < d2):
                    faces.append(Face((vid(i, j, k), vid(i + 1, j, k),
                                       vid(i + 1, j, k + 1), vid(i, j, k + 1))))
                if wrap or (j + 1 < d1 and k + 1 < d2):
                    faces.append(Face((vid(i, j, k), vid(i, j + 1, k),
                                       vid(i, j + 1, k + 1), vid(i, j, k + 1))))
    return Network(d0 * d1 * d2, sorted(edges), faces=faces)


# -- real datasets -----------------------------------------------------------

KNOWN_DATASETS = {
    # name: (vertices, edges, directed)
    "karate": (34, 78, False),
    "euroroad": (1174, 1417, False),
    "yeast_protein": (1870, 2277, False),
    "us_power_grid": (4941, 6594, False),
    "air_traffic_control": (1226, 2613, True),
    "ecoli_trn": (3073, 7853, True),
}


def fetch_real_network(name: str, path) -> Network:
    """Parse a locally supplied edge-list file for a named dataset.

    For known names the vertex/edge counts are checked against the published
    figures; mismatches warn rather than fail. Nothing is downloaded.
    """
    meta = KNOWN_DATASETS.get(name)
    directed = meta[2] if meta else False
    with open(path, "r", encoding="utf-8") as fh:
        net = load_edge_list(fh, directed=directed)
    if meta:
        v_exp, e_exp, _ = meta
        if net.vertex_count != v_exp or len(net.edges) != e_exp:
            warnings.warn(
                f"{name}: expected {v_exp} vertices / {e_exp} edges, "
                f"got {net.vertex_count} / {len(net.edges)}", stacklevel=2)
    return net

"""Kernel backend selection and CSR adjacency construction.

The bounded simple-path DFS is the hot loop of every Haantjes computation, so
it lives in a compiled extension (netcurv._pathkernel) with a pure-Python twin
(netcurv._pathkernel_py) selected at import time. Set NETCURV_PURE_PYTHON=1 to
force the fallback; both backends return bit-identical results.
"""
import os

import numpy as np

from .errors import GraphValidationError
from .network import MetricContext, Network, edge_length

if os.environ.get("NETCURV_PURE_PYTHON") == "1":
    from . import _pathkernel_py as _impl
else:
    try:
        from . import _pathkernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pathkernel_py as _impl

BACKEND = _impl.BACKEND

path_stats = _impl.path_stats
path_vertices = _impl.path_vertices
hop_distances = _impl.hop_distances


def backend_name() -> str:
    return BACKEND


def underlying_csr(net: Network, ctx: MetricContext):
    """CSR view of the underlying undirected adjacency with per-step metadata.

    Returns (indptr, indices, ecode, elen): neighbor lists ascending, ecode
    bit0/bit1 flag forward/backward arc existence, elen the traversal length
    of the step under the metric context.
    """
    key = ("und", ctx.length_source)
    cached = net._csr_cache.get(key)
    if cached is not None:
        return cached
    if ctx.length_source == "path_degree" and net.directed:
        raise GraphValidationError("path_degree metric requires an undirected network")
    n = net.vertex_count
    indptr = np.zeros(n + 1, dtype=np.int64)
    counts = [len(net.neighbors(x)) for x in range(n)]
    indptr[1:] = np.cumsum(counts)
    nnz = int(indptr[-1])
    indices = np.empty(nnz, dtype=np.int32)
    ecode = np.empty(nnz, dtype=np.uint8)
    elen = np.empty(nnz, dtype=np.float64)
    pos = 0
    for x in range(n):
        for y in net.neighbors(x):
            indices[pos] = y
            code = (1 if net.has_arc(x, y) else 0) | (2 if net.has_arc(y, x) else 0)
            ecode[pos] = code
            if ctx.length_source == "combinatorial":
                ln = 1.0
            elif ctx.length_source == "weights":
                ln = net.edge_weight(x, y) if net.has_arc(x, y) else net.edge_weight(y, x)
            else:
                ln = (net.degree(x) * net.degree(y)) ** -0.5
            elen[pos] = ln
            pos += 1
    out = (indptr, indices, ecode, elen)
    net._csr_cache[key] = out
    return out


def successor_adjacency(net: Network, ctx: MetricContext):
    """Per-vertex [(succ, length), ...] lists respecting direction (for Dijkstra)."""
    key = ("succ", ctx.length_source)
    cached = net._csr_cache.get(key)
    if cached is not None:
        return cached
    rows = []
    for x in range(net.vertex_count):
        row = [(y, edge_length(net, ctx, (x, y))) for y in net.successors(x)]
        rows.append(tuple(row))
    out = tuple(rows)
    net._csr_cache[key] = out
    return out

"""Pure-Python twin of the compiled path-enumeration kernel.

Same contract as netcurv._pathkernel, selected at import time by
netcurv.kernels when the extension is unavailable (or NETCURV_PURE_PYTHON=1).
Paths are produced in lexicographic vertex-sequence order; lengths accumulate
in path order so both backends agree bit for bit.
"""
from collections import deque

import numpy as np

BACKEND = "python"


def hop_distances(indptr, indices, source, n_vertices):
    """BFS hop counts from source over the CSR adjacency; -1 marks unreachable."""
    dist = np.full(n_vertices, -1, dtype=np.int32)
    ip = indptr.tolist()
    idx = indices.tolist()
    dist_l = [-1] * n_vertices
    dist_l[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist_l[x]
        for j in range(ip[x], ip[x + 1]):
            y = idx[j]
            if dist_l[y] < 0:
                dist_l[y] = dx + 1
                queue.append(y)
    dist[:] = dist_l
    return dist


def _dfs(indptr, indices, ecode, elen, u, v, max_edges, exclude_direct, directed,
         forbidden, collect_vertices):
    ip = indptr.tolist()
    idx = indices.tolist()
    codes = ecode.tolist()
    lens = elen.tolist()
    n = len(ip) - 1
    hop = hop_distances(indptr, indices, v, n).tolist()
    forb = forbidden.tolist() if forbidden is not None else None

    lengths = []
    signs = []
    flat = []
    offsets = [0]
    visited = [False] * n
    visited[u] = True
    path = [u]

    def sign_of(fwd, bwd):
        if not directed:
            return 1
        if fwd:
            return 1
        if bwd:
            return -1
        return 0

    def rec(x, depth, length, fwd, bwd):
        for j in range(ip[x], ip[x + 1]):
            y = idx[j]
            code = codes[j]
            if y == v:
                if depth + 1 == 1 and exclude_direct:
                    continue
                lengths.append(length + lens[j])
                signs.append(sign_of(fwd and (code & 1), bwd and (code & 2)))
                if collect_vertices:
                    flat.extend(path)
                    flat.append(v)
                    offsets.append(len(flat))
                continue
            if depth + 1 >= max_edges:
                continue
            if visited[y]:
                continue
            if forb is not None and forb[y]:
                continue
            if hop[y] < 0 or hop[y] > max_edges - (depth + 1):
                continue
            visited[y] = True
            path.append(y)
            rec(y, depth + 1, length + lens[j], fwd and (code & 1), bwd and (code & 2))
            path.pop()
            visited[y] = False

    if max_edges >= 1 and u != v:
        rec(u, 0, 0.0, True, True)

    lengths_arr = np.asarray(lengths, dtype=np.float64)
    signs_arr = np.asarray(signs, dtype=np.int8)
    if collect_vertices:
        return (np.asarray(flat, dtype=np.int32),
                np.asarray(offsets, dtype=np.int64), lengths_arr, signs_arr)
    return lengths_arr, signs_arr


def path_stats(indptr, indices, ecode, elen, u, v, max_edges,
               exclude_direct, directed, forbidden=None):
    """Lengths and directed signs of all simple u-v paths with <= max_edges edges."""
    return _dfs(indptr, indices, ecode, elen, u, v, max_edges, exclude_direct,
                directed, forbidden, collect_vertices=False)


def path_vertices(indptr, indices, ecode, elen, u, v, max_edges,
                  exclude_direct, directed, forbidden=None):
    """Like path_stats but also materializes the vertex sequences (flat + offsets)."""
    return _dfs(indptr, indices, ecode, elen, u, v, max_edges, exclude_direct,
                directed, forbidden, collect_vertices=True)

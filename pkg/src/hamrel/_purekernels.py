"""Reference implementations of the hot kernels.

These are used when the compiled ``_kernels`` extension is unavailable (or
``HAMREL_PURE=1`` is set) and must return exactly what the compiled versions
return.
"""

from __future__ import annotations

from collections import deque

import numpy as np

_CHUNK_BITS = 16


def count_pathsets(n: int, edges: list[tuple[int, int]]) -> list[int]:
    """Number of connected spanning edge subsets of each cardinality.

    Plain enumeration of all ``2**m`` subsets, vectorized over chunks of
    subset masks.  Component labels are merged edge by edge.
    """
    m = len(edges)
    counts = [0] * (m + 1)
    if n == 1:
        # every subset is connected
        from math import comb
        return [comb(m, i) for i in range(m + 1)]
    if m == 0:
        return counts
    total = 1 << m
    chunk = min(total, 1 << _CHUNK_BITS)
    base_labels = np.arange(n, dtype=np.int8 if n < 127 else np.int16)
    for start in range(0, total, chunk):
        masks = np.arange(start, start + chunk, dtype=np.int64)
        labels = np.tile(base_labels, (chunk, 1))
        for i, (u, v) in enumerate(edges):
            sel = ((masks >> i) & 1).astype(bool)
            if not sel.any():
                continue
            sub = labels[sel]
            lu = sub[:, u][:, None]
            lv = sub[:, v][:, None]
            labels[sel] = np.where(sub == lv, lu, sub)
        connected = (labels == labels[:, :1]).all(axis=1)
        pop = np.zeros(chunk, dtype=np.int64)
        for i in range(m):
            pop += (masks >> i) & 1
        hist = np.bincount(pop[connected], minlength=m + 1)
        for i in range(m + 1):
            counts[i] += int(hist[i])
    return counts


def refine_simple(
    adj: list[int], cells: list[list[int]], splitters: list[int]
) -> tuple[list[list[int]], list[int]]:
    """Refine an ordered partition to an equitable one.

    ``adj`` holds neighbor bitmasks, ``cells`` the ordered partition and
    ``splitters`` the indices of cells to split against first.  Each split
    cell is replaced in place by its pieces ordered by ascending neighbor
    count; every piece is queued as a new splitter.  Returns the refined
    partition and a trace of integers that depends only on the isomorphism
    class of (graph, partition).
    """
    n = sum(len(c) for c in cells)
    cells = [list(c) for c in cells]
    queue: deque[int] = deque()
    for i in splitters:
        mask = 0
        for v in cells[i]:
            mask |= 1 << v
        queue.append(mask)
    trace: list[int] = []
    while queue and len(cells) < n:
        w = queue.popleft()
        out: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            cnt = [(adj[v] & w).bit_count() for v in c]
            lo = min(cnt)
            if lo == max(cnt):
                out.append(c)
                continue
            groups: dict[int, list[int]] = {}
            for v, k in zip(c, cnt):
                groups.setdefault(k, []).append(v)
            trace.append(len(out))
            for k in sorted(groups):
                piece = groups[k]
                trace.append(k)
                trace.append(len(piece))
                out.append(piece)
                mask = 0
                for v in piece:
                    mask |= 1 << v
                queue.append(mask)
        cells = out
    trace.append(len(cells))
    return cells, trace

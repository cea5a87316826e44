"""Pure-Python (numpy) implementations of the enumeration hot loops.

Same contracts as the compiled kernels in _ckernels.pyx; used as the
fallback when the extension is not built, and as the reference side of the
backend-agreement tests.
"""

from __future__ import annotations

import math

import numpy as np

BACKEND = "python"


def bfs_closure(gens: np.ndarray, cap: int) -> tuple[np.ndarray, bool]:
    """Breadth-first closure of the generator set under right multiplication.

    gens: (g, n) int32 array of permutation images.
    Returns (table, complete).  table rows are in BFS discovery order,
    starting from the identity; complete is False when the cap was hit,
    in which case table holds the partial closure.
    """
    g, n = gens.shape
    gens = np.ascontiguousarray(gens, dtype=np.int32)
    ident = np.arange(n, dtype=np.int32)
    rows = [ident]
    seen = {ident.tobytes(): 0}
    head = 0
    while head < len(rows):
        batch_end = len(rows)
        frontier = np.stack(rows[head:batch_end])
        for j in range(g):
            # (x . gen)(p) = x[gen[p]] for every frontier row x at once
            prods = frontier[:, gens[j]]
            for row in prods:
                key = row.tobytes()
                if key not in seen:
                    if len(rows) >= cap:
                        return np.stack(rows), False
                    seen[key] = len(rows)
                    rows.append(row)
        head = batch_end
    return np.stack(rows), True


def element_orders(table: np.ndarray) -> np.ndarray:
    """Order of every permutation row: lcm of its cycle lengths.

    Vectorized by iterated powering: P_{k+1}[i] = P_1[i] o P_k[i], stopping
    once every row has hit the identity.
    """
    table = np.ascontiguousarray(table, dtype=np.int32)
    nelem, n = table.shape
    ident = np.arange(n, dtype=np.int32)
    orders = np.zeros(nelem, dtype=np.int64)
    alive = np.flatnonzero(orders == 0)
    power = table.copy()
    k = 1
    max_k = _order_bound(n)
    while alive.size:
        done = alive[np.all(power[alive] == ident, axis=1)]
        orders[done] = k
        alive = np.flatnonzero(orders == 0)
        if not alive.size:
            break
        k += 1
        if k > max_k:
            raise AssertionError("order iteration exceeded Landau bound; corrupt table")
        rows = table[alive]
        power[alive] = np.take_along_axis(rows, power[alive], axis=1)
    return orders


def _order_bound(n: int) -> int:
    # crude over-estimate of Landau's g(n); only guards against bad input
    return max(4, int(math.exp(1.2 * math.sqrt(n * math.log(max(n, 2))))))


def perm_order_single(image) -> int:
    """Cycle-lcm order of one permutation given as a sequence of ints."""
    n = len(image)
    visited = [False] * n
    order = 1
    for start in range(n):
        if visited[start]:
            continue
        length = 0
        p = start
        while not visited[p]:
            visited[p] = True
            p = image[p]
            length += 1
        order = order * length // math.gcd(order, length)
    return order

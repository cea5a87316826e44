# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled hot loops: BFS closure of a permutation generator set and the
per-element order scan.  Mirrors _pykernels exactly."""

import numpy as np

cimport numpy as cnp
from libcpp.string cimport string
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector

cnp.import_array()

BACKEND = "cython"


def bfs_closure(gens, long cap):
    """Closure under right multiplication; see _pykernels.bfs_closure."""
    cdef cnp.ndarray[cnp.int32_t, ndim=2, mode="c"] g_arr = \
        np.ascontiguousarray(gens, dtype=np.int32)
    cdef long ngens = g_arr.shape[0]
    cdef long n = g_arr.shape[1]
    cdef vector[cnp.int32_t] flat
    cdef unordered_map[string, long] seen
    cdef vector[cnp.int32_t] buf
    cdef long head = 0, count = 1, i, j, p
    cdef bint complete = True
    cdef cnp.int32_t* gp
    cdef string key

    buf.resize(n)
    flat.reserve(1024 * n)
    for p in range(n):
        flat.push_back(<cnp.int32_t> p)
    key = string(<char*> &flat[0], n * sizeof(cnp.int32_t))
    seen[key] = 0

    while head < count:
        for j in range(ngens):
            gp = &g_arr[j, 0]
            for p in range(n):
                buf[p] = flat[head * n + gp[p]]
            key = string(<char*> &buf[0], n * sizeof(cnp.int32_t))
            if seen.find(key) == seen.end():
                if count >= cap:
                    complete = False
                    head = count  # force outer loop exit
                    break
                seen[key] = count
                for p in range(n):
                    flat.push_back(buf[p])
                count += 1
        else:
            head += 1
            continue
        break

    cdef cnp.ndarray[cnp.int32_t, ndim=2, mode="c"] out = \
        np.empty((count, n), dtype=np.int32)
    for i in range(count):
        for p in range(n):
            out[i, p] = flat[i * n + p]
    return out, complete


def element_orders(table):
    """lcm-of-cycle-lengths order for every row of the element table."""
    cdef cnp.ndarray[cnp.int32_t, ndim=2, mode="c"] t_arr = \
        np.ascontiguousarray(table, dtype=np.int32)
    cdef long nelem = t_arr.shape[0]
    cdef long n = t_arr.shape[1]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] orders = np.empty(nelem, dtype=np.int64)
    cdef vector[cnp.int8_t] visited
    cdef long i, start, p, length
    cdef long long order, g, a, b
    visited.resize(n)
    for i in range(nelem):
        for p in range(n):
            visited[p] = 0
        order = 1
        for start in range(n):
            if visited[start]:
                continue
            length = 0
            p = start
            while not visited[p]:
                visited[p] = 1
                p = t_arr[i, p]
                length += 1
            a = order
            b = length
            while b:
                g = a % b
                a = b
                b = g
            order = order // a * length
        orders[i] = order
    return orders

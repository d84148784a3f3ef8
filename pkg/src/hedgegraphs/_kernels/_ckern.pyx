# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled component-counting kernel.

Same contract as ``pure.py``: flattened union pairs per hedge, union-find
sweep restricted to a subset of hedges.
"""

import numpy as np
cimport numpy as cnp

NAME = "cython"


def component_count(int n,
                    cnp.int32_t[::1] ptr,
                    cnp.int32_t[::1] pu,
                    cnp.int32_t[::1] pv,
                    cnp.int32_t[::1] hedges):
    cdef cnp.int32_t[::1] parent = np.arange(n, dtype=np.int32)
    cdef int comps = n
    cdef Py_ssize_t k, i
    cdef int e, a, b
    for k in range(hedges.shape[0]):
        e = hedges[k]
        for i in range(ptr[e], ptr[e + 1]):
            a = pu[i]
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            b = pv[i]
            while parent[b] != b:
                parent[b] = parent[parent[b]]
                b = parent[b]
            if a != b:
                parent[a] = b
                comps -= 1
    return comps


def component_labels(int n,
                     cnp.int32_t[::1] ptr,
                     cnp.int32_t[::1] pu,
                     cnp.int32_t[::1] pv,
                     cnp.int32_t[::1] hedges):
    cdef cnp.int32_t[::1] parent = np.arange(n, dtype=np.int32)
    cdef Py_ssize_t k, i
    cdef int e, a, b, v, r
    for k in range(hedges.shape[0]):
        e = hedges[k]
        for i in range(ptr[e], ptr[e + 1]):
            a = pu[i]
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            b = pv[i]
            while parent[b] != b:
                parent[b] = parent[parent[b]]
                b = parent[b]
            if a != b:
                parent[a] = b
    smallest = {}
    labels = [0] * n
    for v in range(n):
        r = v
        while parent[r] != r:
            r = parent[r]
        if r not in smallest:
            smallest[r] = v
        labels[v] = smallest[r]
    return labels

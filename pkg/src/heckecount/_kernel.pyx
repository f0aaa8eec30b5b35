# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled product kernel; same contract as ``_kernel_py.row_products``."""
import numpy as np

from libcpp.vector cimport vector
from libcpp.algorithm cimport sort

cdef extern from *:
    """
    static inline int hk_add_overflow(long long a, long long b, long long *out) {
        return __builtin_add_overflow(a, b, out);
    }
    """
    int hk_add_overflow(long long a, long long b, long long *out) nogil


def row_products(word, succ, rises, Py_ssize_t ndeg):
    """
    Compute T_u T_v for one u and every basis element v.

    See ``heckecount._kernel_py.row_products`` for the array layout.
    """
    cdef int[::1] wd = np.ascontiguousarray(word, dtype=np.int32)
    cdef int[:, ::1] sc = np.ascontiguousarray(succ, dtype=np.int32)
    cdef unsigned char[:, ::1] rs = np.ascontiguousarray(rises, dtype=np.uint8)
    cdef Py_ssize_t nperm = sc.shape[1]
    cdef Py_ssize_t nletters = wd.shape[0]
    if nletters >= ndeg:
        raise ValueError("ndeg must exceed the word length")

    cdef vector[long long] acc
    acc.resize(nperm * ndeg, 0)
    cdef vector[int] mark
    mark.resize(nperm, -1)
    cdef vector[int] cur_idx, nxt_idx
    cdef vector[long long] cur_c
    cdef vector[long long] offsets
    cdef vector[int] targets
    cdef vector[long long] coeffs

    cdef int epoch = 0
    cdef bint overflow = False
    cdef Py_ssize_t v, step, k, d, w, t, base_src, base_dst
    cdef int g
    cdef long long x
    cdef bint nonzero

    offsets.push_back(0)
    with nogil:
        for v in range(nperm):
            if nletters == 0:
                targets.push_back(<int>v)
                coeffs.push_back(1)
                for d in range(1, ndeg):
                    coeffs.push_back(0)
                offsets.push_back(targets.size())
                continue

            cur_idx.clear()
            cur_c.clear()
            cur_idx.push_back(<int>v)
            cur_c.push_back(1)
            for d in range(1, ndeg):
                cur_c.push_back(0)

            for step in range(nletters - 1, -1, -1):
                g = wd[step]
                epoch += 1
                nxt_idx.clear()
                for k in range(<Py_ssize_t>cur_idx.size()):
                    w = cur_idx[k]
                    base_src = k * ndeg
                    t = sc[g, w]
                    if mark[t] != epoch:
                        mark[t] = epoch
                        nxt_idx.push_back(<int>t)
                        for d in range(ndeg):
                            acc[t * ndeg + d] = 0
                    base_dst = t * ndeg
                    for d in range(ndeg):
                        if hk_add_overflow(acc[base_dst + d], cur_c[base_src + d], &x):
                            overflow = True
                        acc[base_dst + d] = x
                    if not rs[g, w]:
                        if mark[w] != epoch:
                            mark[w] = epoch
                            nxt_idx.push_back(<int>w)
                            for d in range(ndeg):
                                acc[w * ndeg + d] = 0
                        base_dst = w * ndeg
                        for d in range(ndeg - 1):
                            if hk_add_overflow(acc[base_dst + d + 1], cur_c[base_src + d], &x):
                                overflow = True
                            acc[base_dst + d + 1] = x
                if step > 0:
                    cur_idx.swap(nxt_idx)
                    cur_c.resize(cur_idx.size() * ndeg)
                    for k in range(<Py_ssize_t>cur_idx.size()):
                        base_src = cur_idx[k] * ndeg
                        for d in range(ndeg):
                            cur_c[k * ndeg + d] = acc[base_src + d]

            sort(nxt_idx.begin(), nxt_idx.end())
            for k in range(<Py_ssize_t>nxt_idx.size()):
                base_src = nxt_idx[k] * ndeg
                nonzero = False
                for d in range(ndeg):
                    if acc[base_src + d] != 0:
                        nonzero = True
                        break
                if nonzero:
                    targets.push_back(nxt_idx[k])
                    for d in range(ndeg):
                        coeffs.push_back(acc[base_src + d])
            offsets.push_back(targets.size())

    if overflow:
        raise OverflowError("structure constant exceeds int64")

    cdef Py_ssize_t nnz = targets.size()
    out_offsets = np.empty(nperm + 1, dtype=np.int64)
    out_targets = np.empty(nnz, dtype=np.int32)
    out_coeffs = np.empty((nnz, ndeg), dtype=np.int64)
    cdef long long[::1] oo = out_offsets
    cdef int[::1] ot = out_targets
    cdef long long[:, ::1] oc = out_coeffs
    for k in range(nperm + 1):
        oo[k] = offsets[k]
    for k in range(nnz):
        ot[k] = targets[k]
        for d in range(ndeg):
            oc[k, d] = coeffs[k * ndeg + d]
    return out_offsets, out_targets, out_coeffs

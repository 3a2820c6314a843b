# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops; results identical to ``_pykernels``."""
from libc.stdlib cimport malloc, free


def surface_hom_count(const int[:, ::1] mul, const int[::1] inv, int g):
    cdef Py_ssize_t n = mul.shape[0]
    cdef Py_ssize_t npairs = n * n
    cdef Py_ssize_t a, b, i, pos
    cdef long long count = 0
    if g == 0:
        return 1
    cdef int *comm = <int *> malloc(npairs * sizeof(int))
    cdef Py_ssize_t *idx = <Py_ssize_t *> malloc(g * sizeof(Py_ssize_t))
    cdef int *prefix = <int *> malloc((g + 1) * sizeof(int))
    if comm == NULL or idx == NULL or prefix == NULL:
        free(comm); free(idx); free(prefix)
        raise MemoryError()
    try:
        for a in range(n):
            for b in range(n):
                comm[a * n + b] = mul[mul[a, b], mul[inv[a], inv[b]]]
        prefix[0] = 0
        for i in range(g):
            idx[i] = 0
            prefix[i + 1] = mul[prefix[i], comm[0]]
        while True:
            if prefix[g] == 0:
                count += 1
            pos = g - 1
            while pos >= 0:
                idx[pos] += 1
                if idx[pos] < npairs:
                    break
                idx[pos] = 0
                pos -= 1
            if pos < 0:
                break
            for i in range(pos, g):
                prefix[i + 1] = mul[prefix[i], comm[idx[i]]]
    finally:
        free(comm); free(idx); free(prefix)
    return count


cdef int _canonical(int **gens, int k, int s, int base, int *label, int *order, unsigned char *out) nogil:
    """Fill ``out`` with the canonical key from ``base``; return 0 if not transitive."""
    cdef int i, j, x, y, n
    for i in range(s):
        label[i] = -1
    order[0] = base
    label[base] = 0
    n = 1
    i = 0
    while i < n:
        x = order[i]
        for j in range(k):
            y = gens[j][x]
            if label[y] < 0:
                label[y] = n
                order[n] = y
                n += 1
        i += 1
    if n < s:
        return 0
    for j in range(k):
        for i in range(s):
            out[j * s + i] = <unsigned char> label[gens[j][order[i]]]
    return 1


def pointed_keys(const int[:, ::1] a_gens, const int[:, :, ::1] b_homs, int s):
    cdef int ka = a_gens.shape[0]
    cdef int kb = b_homs.shape[1]
    cdef Py_ssize_t m = b_homs.shape[0]
    cdef int k = ka + kb
    cdef Py_ssize_t h
    cdef int j, base
    keys = set()
    cdef int **gens = <int **> malloc((k + 1) * sizeof(int *))
    cdef int *label = <int *> malloc(s * sizeof(int))
    cdef int *order = <int *> malloc(s * sizeof(int))
    cdef unsigned char *out = <unsigned char *> malloc(k * s + 1)
    if gens == NULL or label == NULL or order == NULL or out == NULL:
        free(gens); free(label); free(order); free(out)
        raise MemoryError()
    try:
        for j in range(ka):
            gens[j] = <int *> &a_gens[j, 0]
        for h in range(m):
            for j in range(kb):
                gens[ka + j] = <int *> &b_homs[h, j, 0]
            if not _canonical(gens, k, s, 0, label, order, out):
                continue
            for base in range(s):
                _canonical(gens, k, s, base, label, order, out)
                keys.add(out[:k * s])
    finally:
        free(gens); free(label); free(order); free(out)
    return keys

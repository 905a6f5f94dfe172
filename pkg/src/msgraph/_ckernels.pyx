# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels. Same contracts as ``msgraph._purekernels``."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free, malloc

BACKEND = "cython"


cdef uint64_t* _matrix(int n, object edges) except NULL:
    cdef uint64_t* mat = <uint64_t*> calloc(<size_t> n * n, sizeof(uint64_t))
    cdef int u, v, k = 0
    cdef uint64_t b
    if mat == NULL:
        raise MemoryError()
    if len(edges) != n * (n - 1) // 2:
        free(mat)
        raise ValueError("edge count does not match n")
    for u in range(n):
        for v in range(u + 1, n):
            b = edges[k]
            mat[u * n + v] = b
            mat[v * n + u] = b
            k += 1
    return mat


# Open-addressing tally keyed by multisign bits.
cdef struct Tally:
    uint64_t* keys
    uint64_t* counts
    char* used
    size_t cap
    size_t size


cdef int _tally_init(Tally* t, size_t cap) nogil:
    t.cap = cap
    t.size = 0
    t.keys = <uint64_t*> calloc(cap, sizeof(uint64_t))
    t.counts = <uint64_t*> calloc(cap, sizeof(uint64_t))
    t.used = <char*> calloc(cap, sizeof(char))
    if t.keys == NULL or t.counts == NULL or t.used == NULL:
        return -1
    return 0


cdef void _tally_free(Tally* t) nogil:
    free(t.keys)
    free(t.counts)
    free(t.used)
    t.keys = NULL
    t.counts = NULL
    t.used = NULL


cdef inline size_t _slot(uint64_t key, size_t mask) nogil:
    key ^= key >> 33
    key *= 0xff51afd7ed558ccdULL
    key ^= key >> 33
    return <size_t> key & mask


cdef int _tally_add(Tally* t, uint64_t key, uint64_t count) nogil:
    cdef size_t mask, i, j
    cdef Tally grown
    if 2 * (t.size + 1) > t.cap:
        if _tally_init(&grown, t.cap * 2) != 0:
            _tally_free(&grown)
            return -1
        for j in range(t.cap):
            if t.used[j]:
                _tally_add(&grown, t.keys[j], t.counts[j])
        _tally_free(t)
        t[0] = grown
    mask = t.cap - 1
    i = _slot(key, mask)
    while t.used[i]:
        if t.keys[i] == key:
            t.counts[i] += count
            return 0
        i = (i + 1) & mask
    t.used[i] = 1
    t.keys[i] = key
    t.counts[i] = count
    t.size += 1
    return 0


cdef int _ham_rec(int n, const uint64_t* mat, char* used, int* path, int depth,
                  int last, uint64_t acc, Tally* t) nogil:
    cdef int v
    cdef const uint64_t* row
    if depth == n:
        if path[1] < last:
            return _tally_add(t, acc ^ mat[last * n], 1)
        return 0
    row = mat + last * n
    for v in range(1, n):
        if not used[v]:
            used[v] = 1
            path[depth] = v
            if _ham_rec(n, mat, used, path, depth + 1, v, acc ^ row[v], t) != 0:
                return -1
            used[v] = 0
    return 0


def hamiltonian_tally(int n, edges):
    cdef uint64_t* mat = _matrix(n, edges)
    cdef char* used = <char*> calloc(n, sizeof(char))
    cdef int* path = <int*> calloc(n, sizeof(int))
    cdef Tally t
    cdef int rc
    cdef size_t j
    if _tally_init(&t, 16) != 0 or used == NULL or path == NULL:
        _tally_free(&t)
        free(mat)
        free(used)
        free(path)
        raise MemoryError()
    used[0] = 1
    with nogil:
        rc = _ham_rec(n, mat, used, path, 1, 0, 0, &t)
    free(mat)
    free(used)
    free(path)
    if rc != 0:
        _tally_free(&t)
        raise MemoryError()
    out = {}
    for j in range(t.cap):
        if t.used[j]:
            out[t.keys[j]] = t.counts[j]
    _tally_free(&t)
    return out


def triangle_sweep(int n, edges):
    cdef uint64_t* mat = _matrix(n, edges)
    cdef uint64_t first = mat[1] ^ mat[n + 2] ^ mat[2]
    cdef uint64_t ab
    cdef int a, b, c
    cdef int fa = -1, fb = -1, fc = -1
    with nogil:
        for a in range(n):
            for b in range(a + 1, n):
                ab = mat[a * n + b]
                for c in range(b + 1, n):
                    if ab ^ mat[b * n + c] ^ mat[a * n + c] != first:
                        fa = a
                        fb = b
                        fc = c
                        break
                if fa >= 0:
                    break
            if fa >= 0:
                break
    free(mat)
    if fa < 0:
        return first, None
    return first, (fa, fb, fc)


def potential_violation(int n, edges):
    cdef uint64_t* mat = _matrix(n, edges)
    cdef int u, v
    cdef int fu = -1, fv = -1
    with nogil:
        for u in range(1, n):
            for v in range(u + 1, n):
                if mat[u * n + v] != mat[u] ^ mat[v]:
                    fu = u
                    fv = v
                    break
            if fu >= 0:
                break
    free(mat)
    if fu < 0:
        return None
    return fu, fv

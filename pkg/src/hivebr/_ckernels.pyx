# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the kernels in ``_pykernels``. Values are C ``long long``;
the dispatcher in ``kernels`` only routes here when every label fits."""

from libc.stdlib cimport malloc, free


def row_insert(word):
    cdef Py_ssize_t n = len(word)
    if n == 0:
        return []
    cdef long long *buf = <long long *> malloc(n * n * sizeof(long long))
    cdef Py_ssize_t *lens = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t nrows = 0, r, lo, hi, mid, i
    cdef long long x, y
    try:
        for i in range(n):
            x = word[i]
            r = 0
            while True:
                if r == nrows:
                    buf[r * n] = x
                    lens[r] = 1
                    nrows += 1
                    break
                lo = 0
                hi = lens[r]
                while lo < hi:
                    mid = (lo + hi) >> 1
                    if buf[r * n + mid] <= x:
                        lo = mid + 1
                    else:
                        hi = mid
                if lo == lens[r]:
                    buf[r * n + lo] = x
                    lens[r] += 1
                    break
                y = buf[r * n + lo]
                buf[r * n + lo] = x
                x = y
                r += 1
        return [[buf[r * n + i] for i in range(lens[r])] for r in range(nrows)]
    finally:
        free(buf)
        free(lens)


def fill_hives(values, order, cons_ptr, cons, count_only):
    cdef Py_ssize_t nv = len(values), K = len(order), nc = len(cons)
    cdef Py_ssize_t i, k, t, b, level, cell
    cdef long long rest, lo, hi, count = 0
    cdef bint has_lo, has_hi, only = count_only
    if K == 0:
        return 1 if only else [tuple(values)]
    cdef long long *v = <long long *> malloc(nv * sizeof(long long))
    cdef long long *his = <long long *> malloc(K * sizeof(long long))
    cdef Py_ssize_t *ordr = <Py_ssize_t *> malloc(K * sizeof(Py_ssize_t))
    cdef Py_ssize_t *ptr = <Py_ssize_t *> malloc((K + 1) * sizeof(Py_ssize_t))
    cdef long long *c = <long long *> malloc((nc + 1) * sizeof(long long))
    found = []
    try:
        for i in range(nv):
            v[i] = values[i]
        for i in range(K):
            ordr[i] = order[i]
        for i in range(K + 1):
            ptr[i] = cons_ptr[i]
        for i in range(nc):
            c[i] = cons[i]
        level = 0
        while True:
            # entering `level`: compute bounds
            has_lo = False
            has_hi = False
            lo = 0
            hi = 0
            for t in range(ptr[level], ptr[level + 1]):
                b = 7 * t
                rest = c[b + 2] * v[c[b + 1]] + c[b + 4] * v[c[b + 3]] + c[b + 6] * v[c[b + 5]]
                if c[b] > 0:
                    if not has_lo or -rest > lo:
                        lo = -rest
                        has_lo = True
                else:
                    if not has_hi or rest < hi:
                        hi = rest
                        has_hi = True
            if not (has_lo and has_hi):
                raise RuntimeError(f"cell {ordr[level]} is not bounded on both sides")
            his[level] = hi
            v[ordr[level]] = lo
            # advance until we can descend or we are done
            while True:
                cell = ordr[level]
                if v[cell] > his[level]:
                    level -= 1
                    if level < 0:
                        break
                    v[ordr[level]] += 1
                    continue
                if level == K - 1:
                    if only:
                        count += his[level] - v[cell] + 1
                        v[cell] = his[level] + 1
                    else:
                        found.append(tuple([v[i] for i in range(nv)]))
                        v[cell] += 1
                    continue
                level += 1
                break
            if level < 0:
                break
        return count if only else found
    finally:
        free(v)
        free(his)
        free(ordr)
        free(ptr)
        free(c)

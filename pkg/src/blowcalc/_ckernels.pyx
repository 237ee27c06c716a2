# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the routines in ``_kernels_py``.

Values stay Python integers (determinants outgrow machine words quickly); the
gain comes from typed loop indices and avoiding interpreter dispatch.
"""


def det_pair(tuple seq):
    cdef Py_ssize_t k
    cur = 1
    nxt = 0
    for k in range(len(seq) - 1, -1, -1):
        cur, nxt = -seq[k] * cur - nxt, cur
    return cur, nxt


def det_index(tuple seq, Py_ssize_t i):
    cdef Py_ssize_t n = len(seq)
    cdef Py_ssize_t k
    if i > n:
        return 0
    cur = 1
    nxt = 0
    for k in range(n - 1, i - 1, -1):
        cur, nxt = -seq[k] * cur - nxt, cur
    return cur


def bareiss_det(rows):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k, r
    cdef int sign = 1
    cdef list a, rk, ri
    if n == 0:
        return 1
    a = [list(row) for row in rows]
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        rk = a[k]
        akk = rk[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def seq_neighbors(tuple seq, bint left, bint right):
    cdef Py_ssize_t n = len(seq)
    cdef Py_ssize_t i
    cdef list out = []
    cdef list s
    if n == 0:
        if left and right:
            out.append((-1,))
        return out
    s = list(seq)
    if left:
        out.append(tuple([-1, s[0] - 1] + s[1:]))
    for i in range(n - 1):
        out.append(tuple(s[:i] + [s[i] - 1, -1, s[i + 1] - 1] + s[i + 2:]))
    if right:
        out.append(tuple(s[:n - 1] + [s[n - 1] - 1, -1]))
    for i in range(n):
        if s[i] != -1:
            continue
        if n == 1:
            if left and right:
                out.append(())
        elif i == 0:
            if left:
                out.append(tuple([s[1] + 1] + s[2:]))
        elif i == n - 1:
            if right:
                out.append(tuple(s[:n - 2] + [s[n - 2] + 1]))
        else:
            out.append(tuple(s[:i - 1] + [s[i - 1] + 1, s[i + 1] + 1] + s[i + 2:]))
    return out

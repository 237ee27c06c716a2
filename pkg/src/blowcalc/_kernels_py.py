"""Pure-Python hot loops.  ``_ckernels.pyx`` mirrors these signatures."""

from __future__ import annotations


def det_pair(seq: tuple[int, ...]) -> tuple[int, int]:
    """(det_0, det_1) of a sequence by the right-to-left three-term recursion."""
    cur, nxt = 1, 0  # det_n, det_{n+1}
    for x in reversed(seq):
        cur, nxt = -x * cur - nxt, cur
    return cur, nxt


def det_index(seq: tuple[int, ...], i: int) -> int:
    n = len(seq)
    if i > n:
        return 0
    cur, nxt = 1, 0
    for k in range(n - 1, i - 1, -1):
        cur, nxt = -seq[k] * cur - nxt, cur
    return cur


def bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
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
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def seq_neighbors(seq: tuple[int, ...], left: bool, right: bool) -> list[tuple[int, ...]]:
    """All one-move neighbours of a sequence.

    Interior moves are always allowed; ``left``/``right`` switch on the moves
    that create or remove the first/last term.
    """
    n = len(seq)
    out: list[tuple[int, ...]] = []
    if n == 0:
        if left and right:
            out.append((-1,))
        return out
    s = list(seq)
    if left:
        out.append((-1, s[0] - 1, *s[1:]))
    for i in range(n - 1):
        out.append((*s[:i], s[i] - 1, -1, s[i + 1] - 1, *s[i + 2 :]))
    if right:
        out.append((*s[:-1], s[-1] - 1, -1))
    for i in range(n):
        if s[i] != -1:
            continue
        if n == 1:
            if left and right:
                out.append(())
        elif i == 0:
            if left:
                out.append((s[1] + 1, *s[2:]))
        elif i == n - 1:
            if right:
                out.append((*s[:-2], s[-2] + 1))
        else:
            out.append((*s[: i - 1], s[i - 1] + 1, s[i + 1] + 1, *s[i + 2 :]))
    return out

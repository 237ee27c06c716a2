"""Independent brute-force references used by the enumeration tests.

Nothing here calls the parametrized constructions; families are found by
searching over chains and testing the contraction condition directly.
"""

from __future__ import annotations

from functools import lru_cache


def det(xs):
    a, b = 1, 0
    for x in reversed(xs):
        a, b = -x * a - b, a
    return a


def admissible_upto(dmax):
    """All admissible chains (every term <= -2) with determinant <= dmax."""
    out = [()]

    def grow(prefix):
        for t in range(-2, -dmax - 2, -1):
            cand = prefix + (t,)
            if det(cand) > dmax:
                break
            out.append(cand)
            grow(cand)

    grow(())
    return out


def _down(xs, i):
    n = len(xs)
    if n == 1:
        return ()
    if i == 0:
        return (xs[1] + 1,) + xs[2:]
    if i == n - 1:
        return xs[:-2] + (xs[-2] + 1,)
    return xs[: i - 1] + (xs[i - 1] + 1, xs[i + 1] + 1) + xs[i + 2 :]


@lru_cache(maxsize=None)
def reaches(xs, target, keep_left, keep_right):
    """Whether blow-downs avoiding the kept ends turn ``xs`` into ``target``."""
    if xs == target:
        return True
    if len(xs) <= len(target):
        return False
    n = len(xs)
    for i, t in enumerate(xs):
        if t != -1:
            continue
        if (keep_left and i == 0) or (keep_right and i == n - 1):
            continue
        if reaches(_down(xs, i), target, keep_left, keep_right):
            return True
    return False


def e_family(c_max, n_max):
    """Pairs (X, Y) of admissible chains with (X, -1, Y) contracting to nothing.

    Returns a set of (X, Y, n, p, c), where c = det(Y), p = c - det(Y minus its
    last term) and n = (det(X) - p) / c.
    """
    xs = admissible_upto(n_max * c_max + c_max)
    ys = [y for y in admissible_upto(c_max) if det(y) <= c_max]
    out = set()
    for x in xs:
        for y in ys:
            if reaches(x + (-1,) + y, (), False, False):
                c = det(y)
                p = c - det(y[:-1]) if y else 0
                if not y:
                    p = 1
                n, rem = divmod(det(x) - p, c)
                assert rem == 0 and n >= 0, (x, y)
                if n <= n_max:
                    out.add((x, y, n, p, c))
    return out


def e_alpha_family(alpha, side, c_max, n_max, t_range=range(-12, 13)):
    """Pairs for the one-sided families whose kept end contracts to ``alpha``.

    ``side`` is "right" (X admissible, Y ends in the kept term) or "left" (the
    mirror image).  Returns (X, Y) pairs whose parameters respect the bounds.
    """
    inner = admissible_upto(n_max * c_max + c_max)
    outer = [a for a in admissible_upto(c_max) if det(a) <= c_max]
    out = set()
    for a in outer:
        c = det(a)
        p = c - det(a[1:]) if a else 1
        for nseq in inner:
            n, rem = divmod(det(nseq) - p, c)
            for t in t_range:
                if t == -1:
                    continue
                if side == "right":
                    x, y = a, nseq + (t,)
                    ok = reaches(x + (-1,) + y, (alpha,), False, True)
                else:
                    x, y = (t,) + nseq, tuple(reversed(a))
                    ok = reaches(x + (-1,) + y, (alpha,), True, False)
                if not ok:
                    continue
                assert rem == 0 and n >= 0, (x, y)
                if n <= n_max:
                    out.add((x, y))
    return out

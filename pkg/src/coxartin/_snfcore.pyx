# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Smith normal form over int64 with explicit overflow guards.

Mirrors the pure Python reference. Every multiply-subtract is checked
against a 2^61 working bound; crossing it raises OverflowError and the
caller falls back to the big-int path, so exactness is never at risk.
"""

cdef long long LIMIT = (<long long> 1) << 61


cdef inline long long _llabs(long long v):
    return -v if v < 0 else v


cdef inline long long _round_div(long long v, long long p):
    cdef long long q = v / p
    cdef long long r = v - q * p
    if 2 * _llabs(r) > _llabs(p):
        q += 1 if (r > 0) == (p > 0) else -1
    return q


def snf_int64(long long[:, :] a):
    """Diagonalize in place; return (divisor chain list, rank)."""
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t t = 0, i, j, pi, pj
    cdef long long best, v, q, piv, prod
    cdef bint dirty, found

    for i in range(m):
        for j in range(n):
            v = a[i, j]
            if v > LIMIT or v < -LIMIT:
                raise OverflowError("entry outside the int64 working range")

    # Re-select the globally smallest pivot after every reduction sweep;
    # leftover remainders are at most half the pivot, so the pivot at
    # least halves between sweeps and entry growth stays tame.
    while t < m and t < n:
        found = False
        best = 0
        pi = pj = -1
        for i in range(t, m):
            for j in range(t, n):
                v = _llabs(a[i, j])
                if v != 0 and (not found or v < best):
                    found = True
                    best = v
                    pi = i
                    pj = j
                    if best == 1:
                        break
            if found and best == 1:
                break
        if not found:
            break
        if pi != t:
            for j in range(n):
                v = a[pi, j]
                a[pi, j] = a[t, j]
                a[t, j] = v
        if pj != t:
            for i in range(m):
                v = a[i, pj]
                a[i, pj] = a[i, t]
                a[i, t] = v
        piv = a[t, t]
        dirty = False
        for i in range(t + 1, m):
            if a[i, t] != 0:
                q = _round_div(a[i, t], piv)
                if q != 0:
                    for j in range(t, n):
                        v = a[t, j]
                        if v != 0 and _llabs(q) > LIMIT / _llabs(v):
                            raise OverflowError("row update overflow")
                        prod = q * v
                        v = a[i, j] - prod
                        if v > LIMIT or v < -LIMIT:
                            raise OverflowError("row update overflow")
                        a[i, j] = v
                if a[i, t] != 0:
                    dirty = True
        for j in range(t + 1, n):
            if a[t, j] != 0:
                q = _round_div(a[t, j], piv)
                if q != 0:
                    for i in range(m):
                        v = a[i, t]
                        if v != 0 and _llabs(q) > LIMIT / _llabs(v):
                            raise OverflowError("column update overflow")
                        prod = q * v
                        v = a[i, j] - prod
                        if v > LIMIT or v < -LIMIT:
                            raise OverflowError("column update overflow")
                        a[i, j] = v
                if a[t, j] != 0:
                    dirty = True
        if not dirty:
            t += 1

    cdef list vals = []
    for i in range(t):
        v = a[i, i]
        vals.append(-v if v < 0 else v)

    # Positive diagonal to divisor chain: gcd/lcm passes until stable.
    cdef long long x, y, g, l
    cdef bint changed = True
    cdef Py_ssize_t r = len(vals)
    while changed:
        changed = False
        for i in range(r):
            for j in range(i + 1, r):
                x = vals[i]
                y = vals[j]
                if y % x != 0:
                    g = x
                    l = y
                    while l != 0:
                        g, l = l, g % l
                    x = x // g
                    if x != 0 and x > LIMIT / y:
                        raise OverflowError("divisor chain overflow")
                    vals[i] = g
                    vals[j] = x * y
                    changed = True
    vals.sort()
    return vals, t

# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled word kernels; same contract as ``_pykernels``."""


cpdef tuple merge(tuple a, tuple b):
    cdef Py_ssize_t na = len(a), nb = len(b), i = 0, j = 0
    cdef long x, y
    if na == 0:
        return b
    if nb == 0:
        return a
    out = []
    while i < na and j < nb:
        x = a[i]
        y = b[j]
        if x <= y:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    while i < na:
        out.append(a[i])
        i += 1
    while j < nb:
        out.append(b[j])
        j += 1
    return tuple(out)


cdef tuple _sorted_head_rest(tuple w):
    # sorted((w[0],) + w[2:]) where w[2:] is ascending
    cdef long h = w[0]
    cdef Py_ssize_t n = len(w), i = 2
    out = []
    while i < n and <long>w[i] < h:
        out.append(w[i])
        i += 1
    out.append(w[0])
    while i < n:
        out.append(w[i])
        i += 1
    return tuple(out)


cpdef list mul_word_tail(tuple w, tuple t):
    cdef long b, c, a1
    if len(t) == 0:
        return [(w, 1)]
    b = t[0]
    if len(w) == 1:
        c = w[0]
        if c > b:
            return [((w[0],) + t, 1)]
        if c < b:
            return [((t[0], w[0]) + t[1:], -1)]
        return []
    a1 = w[1]
    if b >= a1:
        return [((w[0],) + merge(w[1:], t), 1)]
    return [
        ((w[0],) + merge(w[1:], t), 1),
        ((w[1],) + merge(t, _sorted_head_rest(w)), -1),
    ]


cpdef object tail_diff(tuple big, tuple small):
    cdef Py_ssize_t i = 0, n = len(big), j, m = len(small)
    cdef long x
    out = []
    for j in range(m):
        x = small[j]
        while i < n and <long>big[i] < x:
            out.append(big[i])
            i += 1
        if i == n or <long>big[i] != x:
            return None
        i += 1
    while i < n:
        out.append(big[i])
        i += 1
    return tuple(out)


cpdef tuple tail_lcm(tuple a, tuple b):
    cdef Py_ssize_t i = 0, j = 0, na = len(a), nb = len(b)
    cdef long x, y
    out = []
    while i < na and j < nb:
        x = a[i]
        y = b[j]
        if x == y:
            out.append(a[i])
            i += 1
            j += 1
        elif x < y:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    while i < na:
        out.append(a[i])
        i += 1
    while j < nb:
        out.append(b[j])
        j += 1
    return tuple(out)


cpdef object strict_remove(tuple w, long d):
    cdef Py_ssize_t n = len(w), i
    cdef long x, first
    if n < 3:
        return None
    for i in range(1, n):
        x = w[i]
        if x == d:
            first = w[2] if i == 1 else w[1]
            if first < <long>w[0]:
                return w[:i] + w[i + 1:]
            return None
        if x > d:
            return None
    return None


cpdef bint is_subword_tail(tuple big, tuple small):
    cdef Py_ssize_t i = 0, n = len(big), j, m = len(small)
    cdef long x
    for j in range(m):
        x = small[j]
        while i < n and <long>big[i] < x:
            i += 1
        if i == n or <long>big[i] != x:
            return False
        i += 1
    return True

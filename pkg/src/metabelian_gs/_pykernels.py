"""Pure-Python word kernels.

Every function here has a drop-in twin in ``_ckernels.pyx``; both operate
on words encoded as tuples of generator ranks with ascending tails.
"""


def merge(a, b):
    """Merge two ascending tuples into one ascending tuple."""
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b))


def mul_word_tail(w, t):
    """Left-normed product ``w t1 t2 ... tm`` for an ascending tuple ``t``.

    Returns a list of ``(word, sign)`` pairs with ``sign`` in {1, -1}.  After
    the first (smallest) letter every later letter is >= the tail minimum, so
    the expansion never has more than two words.
    """
    if not t:
        return [(w, 1)]
    b = t[0]
    if len(w) == 1:
        c = w[0]
        if c > b:
            return [((c,) + t, 1)]
        if c < b:
            return [((b, c) + t[1:], -1)]
        return []
    a1 = w[1]
    if b >= a1:
        return [((w[0],) + merge(w[1:], t), 1)]
    return [
        ((w[0],) + merge(w[1:], t), 1),
        ((a1,) + merge(t, tuple(sorted((w[0],) + w[2:]))), -1),
    ]


def tail_diff(big, small):
    """Multiset difference ``big - small`` of ascending tuples, or None if
    ``small`` is not contained in ``big``."""
    out = []
    i = 0
    n = len(big)
    for x in small:
        while i < n and big[i] < x:
            out.append(big[i])
            i += 1
        if i == n or big[i] != x:
            return None
        i += 1
    out.extend(big[i:])
    return tuple(out)


def tail_lcm(a, b):
    """Multiset union with maximal multiplicities."""
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        if a[i] == b[j]:
            out.append(a[i])
            i += 1
            j += 1
        elif a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def strict_remove(w, d):
    """If the letter ``d`` is a strict subword of the R-word ``w``, return the
    R-word obtained by deleting one copy of ``d``; otherwise None."""
    n = len(w)
    if n < 3:
        return None
    t = w[1:]
    for i in range(len(t)):
        if t[i] == d:
            rest = t[:i] + t[i + 1:]
            if rest[0] < w[0]:
                return (w[0],) + rest
            return None
        if t[i] > d:
            return None
    return None


def is_subword_tail(big, small):
    """True when ``small`` is a sub-multiset of ``big`` (both ascending)."""
    i = 0
    n = len(big)
    for x in small:
        while i < n and big[i] < x:
            i += 1
        if i == n or big[i] != x:
            return False
        i += 1
    return True

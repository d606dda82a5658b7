"""Pure-Python hot kernels on Kreweras words.

These mirror :mod:`kreweras._speedups` function for function; words are
plain ``str`` over ``"ABC"`` and inputs are assumed to be valid.
"""


def iota(w):
    a = b = c = 0
    for k, x in enumerate(w):
        if x == "A":
            a += 1
        elif x == "B":
            b += 1
        else:
            c += 1
        if a == b or a == c:
            return k + 1
    raise ValueError("no balanced prefix (empty or invalid word)")


def promote(w):
    t = iota(w)
    return w[1 : t - 1] + "A" + w[t:] + w[t - 1]


def promote_power(w, k):
    for _ in range(k):
        w = promote(w)
    return w


def _prefix_counts(w):
    """counts[i] = (a, b, c) of the prefix of length i."""
    a = b = c = 0
    out = [(0, 0, 0)]
    for x in w:
        if x == "A":
            a += 1
        elif x == "B":
            b += 1
        else:
            c += 1
        out.append((a, b, c))
    return out


def _swap_ok(y, a, b, c):
    # prefix (a, b, c) extended by y must still satisfy the ballot condition
    return y == "A" or (y == "B" and a > b) or (y == "C" and a > c)


def _sweep_up(s, start, stop, a, b, c):
    """Apply tau_start, ..., tau_stop (1-based, in that order) to list ``s``.

    ``(a, b, c)`` are the counts of the untouched prefix of length start-1.
    """
    for i in range(start, stop + 1):
        x = s[i - 1]
        y = s[i]
        if x != y and _swap_ok(y, a, b, c):
            s[i - 1] = y
            s[i] = x
            x = y
        if x == "A":
            a += 1
        elif x == "B":
            b += 1
        else:
            c += 1


def promote_by_taus(w):
    s = list(w)
    _sweep_up(s, 1, len(s) - 1, 0, 0, 0)
    return "".join(s)


def promote_inverse(w):
    # tau_1 o tau_2 o ... o tau_{m-1}: the prefix left of i is never touched
    s = list(w)
    pc = _prefix_counts(w)
    for i in range(len(s) - 1, 0, -1):
        x = s[i - 1]
        y = s[i]
        if x != y and _swap_ok(y, *pc[i - 1]):
            s[i - 1] = y
            s[i] = x
    return "".join(s)


def evacuate(w):
    s = list(w)
    for k in range(len(s) - 1, 0, -1):
        _sweep_up(s, 1, k, 0, 0, 0)
    return "".join(s)


def dual_evacuate(w):
    s = list(w)
    m = len(s)
    pc = _prefix_counts(w)
    for k in range(m - 1, 0, -1):
        a, b, c = pc[k - 1]
        _sweep_up(s, k, m - 1, a, b, c)
    return "".join(s)


def is_kreweras(w):
    a = b = c = 0
    for x in w:
        if x == "A":
            a += 1
        elif x == "B":
            b += 1
            if b > a:
                return False
        elif x == "C":
            c += 1
            if c > a:
                return False
        else:
            return False
    return a == b == c


def is_connected(w):
    m = len(w)
    for s in range(m):
        a = b = c = 0
        for e in range(s, m):
            x = w[e]
            if x == "A":
                a += 1
            elif x == "B":
                b += 1
                if b > a:
                    break
            else:
                c += 1
                if c > a:
                    break
            if a == b == c and e - s + 1 < m:
                return False
    return True


def enumerate_words(n):
    """All Kreweras words of length 3n in lexicographic order."""
    out = []
    buf = []

    def rec(a, b, c):
        if c == n and b == n and a == n:
            out.append("".join(buf))
            return
        if a < n:
            buf.append("A")
            rec(a + 1, b, c)
            buf.pop()
        if b < a:
            buf.append("B")
            rec(a, b + 1, c)
            buf.pop()
        if c < a:
            buf.append("C")
            rec(a, b, c + 1)
            buf.pop()

    rec(0, 0, 0)
    return out


def orbit_size(w):
    if not w:
        return 1
    k = 1
    u = promote(w)
    while u != w:
        u = promote(u)
        k += 1
    return k

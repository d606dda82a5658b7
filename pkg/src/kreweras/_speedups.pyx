# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels on Kreweras words.

Same API and semantics as :mod:`kreweras._purepy`; words travel as ASCII
``str`` and are handled internally as byte buffers.
"""

from libc.stdlib cimport malloc, free


cdef inline bint _swap_ok(unsigned char y, int a, int b, int c) noexcept nogil:
    return y == 65 or (y == 66 and a > b) or (y == 67 and a > c)


cdef int _iota(const unsigned char* s, Py_ssize_t m) noexcept nogil:
    cdef int a = 0, b = 0, c = 0
    cdef Py_ssize_t k
    for k in range(m):
        if s[k] == 65:
            a += 1
        elif s[k] == 66:
            b += 1
        else:
            c += 1
        if a == b or a == c:
            return <int>(k + 1)
    return -1


cdef void _sweep_up(unsigned char* s, Py_ssize_t start, Py_ssize_t stop,
                    int a, int b, int c) noexcept nogil:
    cdef Py_ssize_t i
    cdef unsigned char x, y
    for i in range(start, stop + 1):
        x = s[i - 1]
        y = s[i]
        if x != y and _swap_ok(y, a, b, c):
            s[i - 1] = y
            s[i] = x
            x = y
        if x == 65:
            a += 1
        elif x == 66:
            b += 1
        else:
            c += 1


cdef void _promote(unsigned char* s, Py_ssize_t m) noexcept nogil:
    cdef int t = _iota(s, m)
    cdef unsigned char last = s[t - 1]
    cdef Py_ssize_t k
    for k in range(t - 2):
        s[k] = s[k + 1]
    s[t - 2] = 65
    for k in range(t - 1, m - 1):
        s[k] = s[k + 1]
    s[m - 1] = last


def iota(str w):
    cdef bytes raw = w.encode("ascii")
    cdef int t = _iota(raw, len(raw))
    if t < 0:
        raise ValueError("no balanced prefix (empty or invalid word)")
    return t


def promote(str w):
    cdef bytearray buf = bytearray(w.encode("ascii"))
    cdef Py_ssize_t m = len(buf)
    cdef unsigned char* s = buf
    if _iota(s, m) < 0:
        raise ValueError("no balanced prefix (empty or invalid word)")
    _promote(s, m)
    return buf.decode("ascii")


def promote_power(str w, long k):
    cdef bytearray buf = bytearray(w.encode("ascii"))
    cdef Py_ssize_t m = len(buf)
    cdef unsigned char* s = buf
    cdef long j
    if k > 0 and _iota(s, m) < 0:
        raise ValueError("no balanced prefix (empty or invalid word)")
    for j in range(k):
        _promote(s, m)
    return buf.decode("ascii")


def promote_by_taus(str w):
    cdef bytearray buf = bytearray(w.encode("ascii"))
    cdef unsigned char* s = buf
    _sweep_up(s, 1, len(buf) - 1, 0, 0, 0)
    return buf.decode("ascii")


cdef void _prefix_counts(const unsigned char* s, Py_ssize_t m, int* pa, int* pb, int* pc) noexcept nogil:
    cdef Py_ssize_t k
    pa[0] = pb[0] = pc[0] = 0
    for k in range(m):
        pa[k + 1] = pa[k] + (s[k] == 65)
        pb[k + 1] = pb[k] + (s[k] == 66)
        pc[k + 1] = pc[k] + (s[k] == 67)


def promote_inverse(str w):
    cdef bytearray buf = bytearray(w.encode("ascii"))
    cdef Py_ssize_t m = len(buf)
    cdef unsigned char* s = buf
    cdef int* counts = <int*> malloc(3 * (m + 1) * sizeof(int))
    cdef Py_ssize_t i
    cdef unsigned char x, y
    if counts == NULL:
        raise MemoryError()
    try:
        _prefix_counts(s, m, counts, counts + m + 1, counts + 2 * (m + 1))
        for i in range(m - 1, 0, -1):
            x = s[i - 1]
            y = s[i]
            if x != y and _swap_ok(y, counts[i - 1], counts[m + 1 + i - 1],
                                   counts[2 * (m + 1) + i - 1]):
                s[i - 1] = y
                s[i] = x
    finally:
        free(counts)
    return buf.decode("ascii")


def evacuate(str w):
    cdef bytearray buf = bytearray(w.encode("ascii"))
    cdef Py_ssize_t m = len(buf)
    cdef unsigned char* s = buf
    cdef Py_ssize_t k
    for k in range(m - 1, 0, -1):
        _sweep_up(s, 1, k, 0, 0, 0)
    return buf.decode("ascii")


def dual_evacuate(str w):
    cdef bytearray buf = bytearray(w.encode("ascii"))
    cdef Py_ssize_t m = len(buf)
    cdef unsigned char* s = buf
    cdef int* counts = <int*> malloc(3 * (m + 1) * sizeof(int))
    cdef Py_ssize_t k
    if counts == NULL:
        raise MemoryError()
    try:
        _prefix_counts(s, m, counts, counts + m + 1, counts + 2 * (m + 1))
        for k in range(m - 1, 0, -1):
            _sweep_up(s, k, m - 1, counts[k - 1], counts[m + 1 + k - 1],
                      counts[2 * (m + 1) + k - 1])
    finally:
        free(counts)
    return buf.decode("ascii")


def is_kreweras(str w):
    cdef int a = 0, b = 0, c = 0
    cdef Py_UCS4 x
    for x in w:
        if x == u"A":
            a += 1
        elif x == u"B":
            b += 1
            if b > a:
                return False
        elif x == u"C":
            c += 1
            if c > a:
                return False
        else:
            return False
    return a == b and b == c


def is_connected(str w):
    cdef bytes raw = w.encode("ascii")
    cdef const unsigned char* s = raw
    cdef Py_ssize_t m = len(raw), st, e
    cdef int a, b, c
    for st in range(m):
        a = b = c = 0
        for e in range(st, m):
            if s[e] == 65:
                a += 1
            elif s[e] == 66:
                b += 1
                if b > a:
                    break
            else:
                c += 1
                if c > a:
                    break
            if a == b and b == c and e - st + 1 < m:
                return False
    return True


def enumerate_words(int n):
    cdef list out = []
    cdef Py_ssize_t m = 3 * n
    cdef bytearray buf = bytearray(m)
    cdef unsigned char* s = buf
    # explicit backtracking stack: choice[k] is the letter tried at depth k
    cdef int* choice = <int*> malloc((m + 1) * sizeof(int))
    cdef int a = 0, b = 0, c = 0, depth = 0, x
    if choice == NULL:
        raise MemoryError()
    if m == 0:
        free(choice)
        return [""]
    try:
        choice[0] = 64
        while depth >= 0:
            # undo previous letter at this depth
            x = choice[depth]
            if x == 65:
                a -= 1
            elif x == 66:
                b -= 1
            elif x == 67:
                c -= 1
            x += 1
            while x <= 67:
                if (x == 65 and a < n) or (x == 66 and b < a) or (x == 67 and c < a):
                    break
                x += 1
            if x > 67:
                depth -= 1
                continue
            choice[depth] = x
            s[depth] = <unsigned char> x
            if x == 65:
                a += 1
            elif x == 66:
                b += 1
            else:
                c += 1
            if depth == m - 1:
                out.append(buf.decode("ascii"))
            else:
                depth += 1
                choice[depth] = 64
    finally:
        free(choice)
    return out


def orbit_size(str w):
    cdef bytes raw = w.encode("ascii")
    cdef bytearray buf = bytearray(raw)
    cdef Py_ssize_t m = len(buf)
    cdef unsigned char* s = buf
    cdef const unsigned char* orig = raw
    cdef long k = 0
    cdef Py_ssize_t j
    cdef bint same
    if m == 0:
        return 1
    if _iota(s, m) < 0:
        raise ValueError("no balanced prefix (empty or invalid word)")
    while True:
        _promote(s, m)
        k += 1
        same = True
        for j in range(m):
            if s[j] != orig[j]:
                same = False
                break
        if same:
            return k

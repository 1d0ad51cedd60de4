# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled MCFE search. Same contract as ``fibersurf._mcfe_py.mcfe_search``.

Coefficients are held as C ``long long``; callers must route inputs with
``|c| >= 2**62`` to the Python implementation.
"""
from libc.stdlib cimport malloc, free


cdef struct _State:
    Py_ssize_t n
    long long *a
    int *e
    char *moved


cdef inline long long _settled(_State *s, Py_ssize_t i) nogil:
    cdef long long v = s.a[i]
    if i > 0 and s.moved[i - 1]:
        v += s.e[i - 1]
    if i + 1 < s.n and s.moved[i + 1]:
        v += s.e[i + 1]
    return v


cdef inline bint _ok(_State *s, Py_ssize_t i) nogil:
    cdef long long v
    if s.moved[i]:
        return True
    v = _settled(s, i)
    return v >= 2 or v <= -2


cdef object _emit(_State *s, bint positions):
    cdef Py_ssize_t i
    cdef long long reps, j
    out = []
    if positions:
        for i in range(s.n):
            if s.moved[i]:
                out.append(i)
        return tuple(out)
    for i in range(s.n):
        if s.moved[i]:
            reps = (s.a[i] if s.a[i] > 0 else -s.a[i]) - 1
            for j in range(reps):
                out.append(2 * s.e[i])
        else:
            out.append(_settled(s, i))
    return tuple(out)


cdef void _visit(_State *s, Py_ssize_t i, list results, bint positions) except *:
    cdef int choice
    if i == s.n:
        if _ok(s, s.n - 1):
            results.append(_emit(s, positions))
        return
    for choice in range(2):
        if choice and (s.a[i] == 0 or s.moved[i - 1]):
            continue
        s.moved[i] = choice
        if _ok(s, i - 1):
            _visit(s, i + 1, results, positions)
    s.moved[i] = 0


def mcfe_search(coeffs, bint positions=False):
    cdef Py_ssize_t n = len(coeffs)
    cdef Py_ssize_t i
    cdef _State s
    results = []
    if n == 0:
        return [()]
    s.n = n
    s.a = <long long *> malloc(n * sizeof(long long))
    s.e = <int *> malloc(n * sizeof(int))
    s.moved = <char *> malloc(n * sizeof(char))
    if s.a == NULL or s.e == NULL or s.moved == NULL:
        free(s.a); free(s.e); free(s.moved)
        raise MemoryError()
    try:
        for i in range(n):
            s.a[i] = coeffs[i]
            s.e[i] = 1 if s.a[i] < 0 else -1
            s.moved[i] = 0
        _visit(&s, 1, results, positions)
    finally:
        free(s.a)
        free(s.e)
        free(s.moved)
    return results

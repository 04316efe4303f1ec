# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Jaro-Winkler kernel; arithmetic order mirrors ``_jwpy`` exactly."""
from libc.stdlib cimport calloc, free

cdef double PREFIX_SCALE = 0.1
cdef int PREFIX_CAP = 4


cdef double _jaro(str a, str b) except -1.0:
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef Py_ssize_t window, i, j, lo, hi, k
    cdef Py_ssize_t matches = 0, half = 0, transpositions
    cdef Py_UCS4 ch
    cdef char *a_used
    cdef char *b_used
    if la == 0 and lb == 0:
        return 1.0
    if la == 0 or lb == 0:
        return 0.0
    window = (la if la > lb else lb) // 2 - 1
    if window < 0:
        window = 0
    a_used = <char *> calloc(la, 1)
    b_used = <char *> calloc(lb, 1)
    if a_used == NULL or b_used == NULL:
        free(a_used)
        free(b_used)
        raise MemoryError()
    try:
        for i in range(la):
            ch = a[i]
            lo = i - window if i > window else 0
            hi = i + window + 1
            if hi > lb:
                hi = lb
            for j in range(lo, hi):
                if not b_used[j] and b[j] == ch:
                    a_used[i] = 1
                    b_used[j] = 1
                    matches += 1
                    break
        if matches == 0:
            return 0.0
        k = 0
        for i in range(la):
            if a_used[i]:
                while not b_used[k]:
                    k += 1
                if a[i] != b[k]:
                    half += 1
                k += 1
    finally:
        free(a_used)
        free(b_used)
    transpositions = half // 2
    return (<double> matches / la + <double> matches / lb
            + <double> (matches - transpositions) / matches) / 3.0


cpdef double jaro_similarity(str a, str b) except -1.0:
    return _jaro(a, b)


cpdef double jaro_winkler_similarity(str a, str b) except -1.0:
    cdef double sim = _jaro(a, b)
    cdef Py_ssize_t n = min(min(len(a), len(b)), PREFIX_CAP)
    cdef Py_ssize_t prefix = 0
    while prefix < n and a[prefix] == b[prefix]:
        prefix += 1
    return sim + prefix * PREFIX_SCALE * (1.0 - sim)


cpdef double jaro_winkler_distance(str a, str b) except -1.0:
    if a == b:
        return 0.0
    return 1.0 - jaro_winkler_similarity(a, b)


cpdef double min_distance(str value, seeds) except -1.0:
    cdef double best = 1.0, d
    cdef str seed
    for seed in seeds:
        d = jaro_winkler_distance(value, seed)
        if d < best:
            best = d
            if best == 0.0:
                break
    return best

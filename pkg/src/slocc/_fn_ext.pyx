# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled loops for the n-qubit semi-invariant F.

Pairs (i, j) with i < j sharing a key (i + j, i ^ j) are generated directly:
with x = i ^ j and c = i & j (so c & x == 0), the pairs are i = c | sub,
j = c | (x ^ sub) for every submask ``sub`` of x that lacks the top bit of x,
and ascending ``sub`` gives ascending i.

In the inner loops w < y < z < v index the pairs (i,j), (k,l), (p,q), (r,s)
of a quadruple; lo[t] / hi[t] record whether j-d / j+d is a valid index.
"""
from libc.math cimport hypot
from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef int _popcount(unsigned int v) nogil:
    cdef int c = 0
    while v:
        v &= v - 1
        c += 1
    return c


cdef int _submasks(unsigned int x, unsigned int* out) nogil:
    """Ascending submasks of x without its top bit; returns their count."""
    cdef unsigned int top = 1
    while top <= x:
        top <<= 1
    top >>= 1
    cdef unsigned int mask = x & ~top
    cdef unsigned int sub = 0
    cdef int m = 0
    while True:
        out[m] = sub
        m += 1
        sub = (sub - mask) & mask
        if sub == 0:
            break
    return m


def count_quadruples(int n):
    """Number of admissible index quadruples for n qubits."""
    cdef unsigned int N = 1u << n
    cdef unsigned int x, c
    cdef int m, t, d, w, y, z, v
    cdef unsigned int* subs = <unsigned int*> malloc(N * sizeof(unsigned int))
    cdef int* lo = <int*> malloc(N * sizeof(int))
    cdef int* hi = <int*> malloc(N * sizeof(int))
    cdef i64 total = 0
    try:
        for x in range(1, N):
            if _popcount(x) < 3:
                continue
            m = _submasks(x, subs)
            d = 1 if (x & 1) else 2
            for c in range(N):
                if c & x:
                    continue
                for t in range(m):
                    lo[t] = <int>(c | (x ^ subs[t])) - d >= 0
                    hi[t] = <int>(c | (x ^ subs[t])) + d < <int>N
                for w in range(m):
                    if not lo[w]:
                        continue
                    for y in range(w + 1, m):
                        if not hi[y]:
                            continue
                        for z in range(y + 1, m):
                            if not lo[z]:
                                continue
                            for v in range(z + 1, m):
                                if hi[v]:
                                    total += 1
    finally:
        free(subs); free(lo); free(hi)
    return total


def fn_float(const double complex[:] a, int n):
    """Sum of |term| over all quadruples (F without the leading factor 4)."""
    cdef unsigned int N = 1u << n
    if a.shape[0] != N:
        raise ValueError("amplitude vector has the wrong length")
    cdef unsigned int x, c, i, j
    cdef int m, t, d, w, y, z, v
    cdef unsigned int* subs = <unsigned int*> malloc(N * sizeof(unsigned int))
    cdef double complex* P = <double complex*> malloc(N * sizeof(double complex))
    cdef double complex* Lm = <double complex*> malloc(N * sizeof(double complex))
    cdef double complex* Rp = <double complex*> malloc(N * sizeof(double complex))
    cdef int* lo = <int*> malloc(N * sizeof(int))
    cdef int* hi = <int*> malloc(N * sizeof(int))
    cdef double total = 0.0
    cdef double complex s1, u, term
    try:
        with nogil:
            for x in range(1, N):
                if _popcount(x) < 3:
                    continue
                m = _submasks(x, subs)
                d = 1 if (x & 1) else 2
                for c in range(N):
                    if c & x:
                        continue
                    for t in range(m):
                        i = c | subs[t]
                        j = c | (x ^ subs[t])
                        P[t] = a[i] * a[j]
                        lo[t] = <int>j - d >= 0
                        hi[t] = <int>j + d < <int>N
                        Lm[t] = a[i] * a[j - d] if lo[t] else 0
                        Rp[t] = a[i] * a[j + d] if hi[t] else 0
                    for w in range(m):
                        if not lo[w]:
                            continue
                        for y in range(w + 1, m):
                            if not hi[y]:
                                continue
                            for z in range(y + 1, m):
                                if not lo[z]:
                                    continue
                                s1 = P[w] + P[y] - P[z]
                                u = Lm[w] - Lm[z]
                                for v in range(z + 1, m):
                                    if hi[v]:
                                        term = (s1 - P[v]) * (s1 - P[v]) - 4 * u * (Rp[y] - Rp[v])
                                        total += hypot(term.real, term.imag)
    finally:
        free(subs); free(P); free(Lm); free(Rp); free(lo); free(hi)
    return total


def fn_int(const i64[:] re, const i64[:] im, int n):
    """Exact Gaussian-integer terms: returns (sum of |term| as float, nonzero count).

    The caller guarantees components small enough that no intermediate
    exceeds 64 bits (|component| <= 8192 suffices).
    """
    cdef unsigned int N = 1u << n
    if re.shape[0] != N or im.shape[0] != N:
        raise ValueError("amplitude vectors have the wrong length")
    cdef unsigned int x, c, i, j, jj
    cdef int m, t, d, w, y, z, v
    cdef unsigned int* subs = <unsigned int*> malloc(N * sizeof(unsigned int))
    cdef i64* Pr = <i64*> malloc(N * sizeof(i64))
    cdef i64* Pi = <i64*> malloc(N * sizeof(i64))
    cdef i64* Lr = <i64*> malloc(N * sizeof(i64))
    cdef i64* Li = <i64*> malloc(N * sizeof(i64))
    cdef i64* Rr = <i64*> malloc(N * sizeof(i64))
    cdef i64* Ri = <i64*> malloc(N * sizeof(i64))
    cdef int* lo = <int*> malloc(N * sizeof(int))
    cdef int* hi = <int*> malloc(N * sizeof(int))
    cdef double total = 0.0
    cdef i64 nonzero = 0
    cdef i64 sr, si, ur, ui, er, ei, vr, vi, tr, ti
    try:
        with nogil:
            for x in range(1, N):
                if _popcount(x) < 3:
                    continue
                m = _submasks(x, subs)
                d = 1 if (x & 1) else 2
                for c in range(N):
                    if c & x:
                        continue
                    for t in range(m):
                        i = c | subs[t]
                        j = c | (x ^ subs[t])
                        Pr[t] = re[i] * re[j] - im[i] * im[j]
                        Pi[t] = re[i] * im[j] + im[i] * re[j]
                        lo[t] = <int>j - d >= 0
                        hi[t] = <int>j + d < <int>N
                        Lr[t] = 0; Li[t] = 0; Rr[t] = 0; Ri[t] = 0
                        if lo[t]:
                            jj = j - d
                            Lr[t] = re[i] * re[jj] - im[i] * im[jj]
                            Li[t] = re[i] * im[jj] + im[i] * re[jj]
                        if hi[t]:
                            jj = j + d
                            Rr[t] = re[i] * re[jj] - im[i] * im[jj]
                            Ri[t] = re[i] * im[jj] + im[i] * re[jj]
                    for w in range(m):
                        if not lo[w]:
                            continue
                        for y in range(w + 1, m):
                            if not hi[y]:
                                continue
                            for z in range(y + 1, m):
                                if not lo[z]:
                                    continue
                                ur = Lr[w] - Lr[z]
                                ui = Li[w] - Li[z]
                                for v in range(z + 1, m):
                                    if not hi[v]:
                                        continue
                                    sr = Pr[w] + Pr[y] - Pr[z] - Pr[v]
                                    si = Pi[w] + Pi[y] - Pi[z] - Pi[v]
                                    vr = Rr[y] - Rr[v]
                                    vi = Ri[y] - Ri[v]
                                    tr = sr * sr - si * si - 4 * (ur * vr - ui * vi)
                                    ti = 2 * sr * si - 4 * (ur * vi + ui * vr)
                                    if tr != 0 or ti != 0:
                                        nonzero += 1
                                        total += hypot(<double>tr, <double>ti)
    finally:
        free(subs); free(Pr); free(Pi); free(Lr); free(Li); free(Rr); free(Ri); free(lo); free(hi)
    return total, nonzero

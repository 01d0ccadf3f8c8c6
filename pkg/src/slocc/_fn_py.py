"""Pure-Python (numpy) implementation of the n-qubit F loops.

Same contract as the compiled module: ``fn_float``, ``fn_int`` and
``count_quadruples``.  For each pair group the first pair is looped over in
Python and the remaining three are handled as one vectorised batch of index
triples.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def _triples(m: int):
    """All (y, z, v) with y < z < v < m, sorted, plus the start offset per y."""
    y, z, v = [], [], []
    for a in range(m):
        for b in range(a + 1, m):
            y.extend([a] * (m - b - 1))
            z.extend([b] * (m - b - 1))
            v.extend(range(b + 1, m))
    y = np.array(y, dtype=np.intp)
    starts = np.searchsorted(y, np.arange(m + 1))
    return y, np.array(z, dtype=np.intp), np.array(v, dtype=np.intp), starts


def _submasks(x: int) -> list[int]:
    top = 1 << (x.bit_length() - 1)
    mask = x & ~top
    out, sub = [], 0
    while True:
        out.append(sub)
        sub = (sub - mask) & mask
        if sub == 0:
            return out


def groups(n: int):
    """Yield (x, c, d, I, J) for every pair group with at least four pairs."""
    N = 1 << n
    for x in range(1, N):
        if bin(x).count("1") < 3:
            continue
        subs = np.array(_submasks(x), dtype=np.intp)
        d = 1 if x & 1 else 2
        for c in range(N):
            if c & x:
                continue
            yield x, c, d, c | subs, c | (x ^ subs)


def count_quadruples(n: int) -> int:
    N = 1 << n
    total = 0
    for _, _, d, I, J in groups(n):
        for _, y, _, _ in _batches(I, J, d, N):
            total += len(y)
    return total


def _batches(I, J, d, N):
    """Index batches (w, y, z, v) of admissible quadruples within one group.

    ``w`` is a scalar (first pair), the others are arrays.
    """
    lo = J - d >= 0
    hi = J + d < N
    y, z, v, starts = _triples(len(I))
    ok = hi[y] & lo[z] & hi[v]
    for w in np.nonzero(lo)[0]:
        sl = slice(starts[w + 1], None)
        keep = ok[sl]
        if keep.any():
            yield w, y[sl][keep], z[sl][keep], v[sl][keep]


def _offsets(I, J, d, N):
    lo = J - d >= 0
    hi = J + d < N
    return np.where(lo, J - d, 0), lo, np.where(hi, J + d, 0), hi


def fn_float(a, n: int) -> float:
    a = np.asarray(a, dtype=np.complex128)
    N = 1 << n
    if a.shape != (N,):
        raise ValueError("amplitude vector has the wrong length")
    total = 0.0
    for _, _, d, I, J in groups(n):
        jm, lo, jp, hi = _offsets(I, J, d, N)
        P = a[I] * a[J]
        Lm = np.where(lo, a[I] * a[jm], 0)
        Rp = np.where(hi, a[I] * a[jp], 0)
        for w, y, z, v in _batches(I, J, d, N):
            s = P[w] + P[y] - P[z] - P[v]
            t = s * s - 4 * (Lm[w] - Lm[z]) * (Rp[y] - Rp[v])
            total += float(np.abs(t).sum())
    return total


def fn_int(re, im, n: int):
    re = np.asarray(re, dtype=np.int64)
    im = np.asarray(im, dtype=np.int64)
    N = 1 << n
    if re.shape != (N,) or im.shape != (N,):
        raise ValueError("amplitude vectors have the wrong length")
    total = 0.0
    nonzero = 0

    def mul(i, j):
        return re[i] * re[j] - im[i] * im[j], re[i] * im[j] + im[i] * re[j]

    for _, _, d, I, J in groups(n):
        jm, lo, jp, hi = _offsets(I, J, d, N)
        Pr, Pi = mul(I, J)
        Lr, Li = (np.where(lo, x, 0) for x in mul(I, jm))
        Rr, Ri = (np.where(hi, x, 0) for x in mul(I, jp))
        for w, y, z, v in _batches(I, J, d, N):
            sr = Pr[w] + Pr[y] - Pr[z] - Pr[v]
            si = Pi[w] + Pi[y] - Pi[z] - Pi[v]
            ur, ui = Lr[w] - Lr[z], Li[w] - Li[z]
            vr, vi = Rr[y] - Rr[v], Ri[y] - Ri[v]
            tr = sr * sr - si * si - 4 * (ur * vr - ui * vi)
            ti = 2 * sr * si - 4 * (ur * vi + ui * vr)
            nz = (tr != 0) | (ti != 0)
            nonzero += int(nz.sum())
            total += float(np.hypot(tr[nz].astype(float), ti[nz].astype(float)).sum())
    return total, nonzero

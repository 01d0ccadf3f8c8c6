"""The n-qubit semi-invariant F and its index quadruples.

A quadruple is four pairs ``(i,j), (k,l), (p,q), (r,s)`` of basis indices
with ``i<j`` etc., ``i<k<p<r``, a common sum ``i+j`` and a common bitwise
xor ``i^j``.  The offset ``d`` is 1 when the sum is odd and 2 when it is
even, and the quadruple is admissible only if ``j-d``, ``l+d``, ``q-d`` and
``s+d`` are valid indices.  Each admissible quadruple contributes

    | (a_i a_j + a_k a_l - a_p a_q - a_r a_s)^2
      - 4 (a_i a_{j-d} - a_p a_{q-d}) (a_k a_{l+d} - a_r a_{s+d}) |

and F is four times the sum of these magnitudes.
"""
from __future__ import annotations

import math
from collections import defaultdict
from functools import lru_cache
from itertools import combinations
from typing import Iterator, NamedTuple

import numpy as np

from . import _kernels
from .exact import GaussianRational
from .state import PureState, make_state

__all__ = [
    "IndexQuadruple",
    "enumerate_quadruples",
    "iter_quadruples",
    "count_quadruples",
    "admissible_sums",
    "f_n",
    "f_n_nonzero_terms",
    "f_n_reference",
    "ghz_n",
    "w_n",
    "compare_with_aggregate",
    "N_MIN",
    "N_MAX",
]

N_MIN, N_MAX = 2, 8
_INT64_SAFE = 8192  # |component| bound keeping every intermediate in 64 bits


class IndexQuadruple(NamedTuple):
    i: int
    j: int
    k: int
    l: int
    p: int
    q: int
    r: int
    s: int
    odd: bool

    @property
    def offset(self) -> int:
        return 1 if self.odd else 2

    @property
    def key(self) -> tuple[int, int]:
        return self.i + self.j, self.i ^ self.j


def _check_n(n: int):
    if not isinstance(n, int) or not N_MIN <= n <= N_MAX:
        raise ValueError(f"n must be in {N_MIN}..{N_MAX}, got {n!r}")


def iter_quadruples(n: int) -> Iterator[IndexQuadruple]:
    """Brute-force enumeration: group all pairs by (sum, xor), take every
    4-subset in ascending order, keep those whose offsets stay in range.

    Keys are visited in ascending (sum, xor) order."""
    _check_n(n)
    N = 1 << n
    groups = defaultdict(list)
    for i in range(N):
        for j in range(i + 1, N):
            groups[(i + j, i ^ j)].append((i, j))
    for key in sorted(groups):
        pairs = groups[key]
        if len(pairs) < 4:
            continue
        odd = key[0] % 2 == 1
        d = 1 if odd else 2
        for (i, j), (k, l), (p, q), (r, s) in combinations(pairs, 4):
            if j - d < 0 or q - d < 0 or l + d >= N or s + d >= N:
                continue
            yield IndexQuadruple(i, j, k, l, p, q, r, s, odd)


@lru_cache(maxsize=5)
def _cached(n: int) -> tuple:
    return tuple(iter_quadruples(n))


def enumerate_quadruples(n: int) -> tuple[IndexQuadruple, ...]:
    """All admissible quadruples for n qubits, in deterministic order.

    Cached per n.  Sizes grow quickly (78 for n=4, about 1.3 million for
    n=7, about 25.8 million for n=8); prefer :func:`iter_quadruples` or
    :func:`count_quadruples` for large n.
    """
    _check_n(n)
    return _cached(n)


def count_quadruples(n: int) -> int:
    _check_n(n)
    return int(_kernels.count_quadruples(n))


def admissible_sums(n: int) -> list[int]:
    """Sorted distinct values of ``i+j`` over admissible quadruples."""
    return sorted({qd.i + qd.j for qd in iter_quadruples(n)})


def _term(a, qd: IndexQuadruple):
    i, j, k, l, p, q, r, s, _ = qd
    d = qd.offset
    x = a[i] * a[j] + a[k] * a[l] - a[p] * a[q] - a[r] * a[s]
    return x * x - 4 * (a[i] * a[j - d] - a[p] * a[q - d]) * (a[k] * a[l + d] - a[r] * a[s + d])


def _integer_components(s: PureState):
    """Scale exact amplitudes to Gaussian integers.

    Returns ``(re, im, den)`` with amplitude ``(re + i*im) / (den*sqrt(root))``.
    """
    den = 1
    for a in s.amps:
        den = math.lcm(den, int(a.re.denominator), int(a.im.denominator))
    re = [int(a.re * den) for a in s.amps]
    im = [int(a.im * den) for a in s.amps]
    return re, im, den


def _exact_terms(s: PureState):
    """(sum of |term| in integer units, nonzero count, integer scale)."""
    re, im, den = _integer_components(s)
    bound = max(max(map(abs, re)), max(map(abs, im)))
    if bound <= _INT64_SAFE:
        total, nonzero = _kernels.fn_int(np.array(re, dtype=np.int64), np.array(im, dtype=np.int64), s.n)
        return float(total), int(nonzero), den
    # big-integer fallback, slow but exact
    a = [GaussianRational(x, y) for x, y in zip(re, im)]
    total, nonzero = 0.0, 0
    for qd in iter_quadruples(s.n):
        t = _term(a, qd)
        if t:
            nonzero += 1
            total += math.hypot(t.re, t.im)
    return total, nonzero, den


def f_n(s: PureState) -> float:
    """F of an n-qubit state (2 <= n <= 8).

    Exact states are evaluated in exact integer arithmetic, so a zero result
    is a true zero; the magnitudes are then summed in floating point.
    """
    _check_n(s.n)
    if s.exact:
        total, _, den = _exact_terms(s)
        return 4.0 * total / (float(den) ** 4 * float(s.root) ** 2)
    return 4.0 * float(_kernels.fn_float(s.vector(), s.n))


def f_n_nonzero_terms(s: PureState) -> int:
    """Number of quadruples whose term does not vanish (exact states only)."""
    _check_n(s.n)
    if not s.exact:
        raise ValueError("exact state required")
    return _exact_terms(s)[1]


def f_n_reference(s: PureState) -> float:
    """Straight transcription over :func:`iter_quadruples`, for testing."""
    _check_n(s.n)
    a = s.values()
    return 4.0 * sum(abs(_term(a, qd)) for qd in iter_quadruples(s.n))


def ghz_n(n: int) -> PureState:
    """Unnormalized n-qubit GHZ: amplitude 1 at |0...0> and |1...1>."""
    if n < 2:
        raise ValueError("n >= 2 required")
    return make_state(n, [(0, 1), ((1 << n) - 1, 1)])


def w_n(n: int) -> PureState:
    """Unnormalized n-qubit W: amplitude 1 at every |2^j>."""
    if n < 2:
        raise ValueError("n >= 2 required")
    return make_state(n, [(1 << j, 1) for j in range(n)])


def compare_with_aggregate(s: PureState) -> tuple[float, float]:
    """(n-qubit F, four-qubit aggregate F) for a four-qubit state.

    The two are different polynomials in general; this reports both so the
    relation can be measured.
    """
    from .invariants import f_aggregate

    if s.n != 4:
        raise ValueError("four-qubit state required")
    return f_n(s), f_aggregate(s)

"""Arithmetic and rank computations over the prime field Z/pZ."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from .errors import DimensionMismatch, NotOdd, NotPrime, PrimeTooLarge, ZeroInverse

DEFAULT_PRIME_LIMIT = 97


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def check_prime(p: int, limit: int = DEFAULT_PRIME_LIMIT) -> int:
    """Return ``p`` if it is an odd prime not above ``limit``, else raise."""
    if isinstance(p, bool) or not isinstance(p, int):
        raise NotPrime(f"p must be an integer, got {p!r}")
    if not is_prime(p):
        raise NotPrime(f"p = {p} is not prime")
    if p == 2:
        raise NotOdd("p = 2 is not an odd prime")
    if p > limit:
        raise PrimeTooLarge(f"p = {p} exceeds the configured limit {limit}")
    return p


def mod_inverse(x: int, p: int) -> int:
    x %= p
    if x == 0:
        raise ZeroInverse(f"0 has no inverse modulo {p}")
    return pow(x, -1, p)


def rank_mod_p(vectors: Sequence[Sequence[int]], p: int) -> int:
    """Rank of the span of ``vectors`` over Z/pZ.

    Plain Gaussian elimination, first nonzero entry of each column as pivot.
    """
    if len(vectors) == 0:
        return 0
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise DimensionMismatch("vectors have unequal lengths")
    A = np.array(vectors, dtype=np.int64).reshape(len(vectors), n) % p
    m = A.shape[0]
    r = 0
    for c in range(n):
        rows = np.nonzero(A[r:, c])[0]
        if rows.size == 0:
            continue
        piv = r + int(rows[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = (A[r] * mod_inverse(int(A[r, c]), p)) % p
        below = A[r + 1:, c].copy()
        A[r + 1:] = (A[r + 1:] - np.outer(below, A[r])) % p
        r += 1
        if r == m:
            break
    return r

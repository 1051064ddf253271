"""Exact integer sequences and triangles behind the dimension formulas."""

from functools import lru_cache
from math import comb, factorial, prod

from .errors import DomainError

ALL = "all"


@lru_cache(maxsize=None)
def stirling2(n, k):
    if n == k:
        return 1
    if n == 0 or k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def stirling2_min2(n, k):
    """Partitions of [n] into k blocks, each of size at least 2."""
    if n == 0 and k == 0:
        return 1
    if n <= 0 or k <= 0:
        return 0
    return k * stirling2_min2(n - 1, k) + (n - 1) * stirling2_min2(n - 2, k - 1)


def bell(n):
    return sum(stirling2(n, k) for k in range(n + 1))


def count_set_partitions(n, k=ALL, min_block=1):
    if min_block not in (1, 2):
        raise DomainError("min_block must be 1 or 2")
    f = stirling2 if min_block == 1 else stirling2_min2
    if k == ALL or k is None:
        return sum(f(n, j) for j in range(n + 1))
    return f(n, k)


def double_factorial(m):
    """m!! with (-1)!! = 1."""
    if m < -1:
        raise DomainError("double factorial undefined for %d" % m)
    return prod(range(m, 0, -2)) if m > 0 else 1


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def catalan_triangle(N, k):
    """C_{N,k} = binom(N+k, k) - binom(N+k, k-1)."""
    if k < 0 or k > N:
        raise DomainError("need 0 <= k <= N")
    return comb(N + k, k) - (comb(N + k, k - 1) if k > 0 else 0)


@lru_cache(maxsize=None)
def _motzkin(n, k):
    if k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    return _motzkin(n - 1, k - 1) + _motzkin(n - 1, k) + _motzkin(n - 1, k + 1)


@lru_cache(maxsize=None)
def _riordan(n, k):
    if k < 0 or k > n:
        return 0
    if k == n:
        return 1
    if k == 0:
        return _riordan(n - 1, 1)
    return _riordan(n - 1, k + 1) + _riordan(n - 1, k) + _riordan(n - 1, k - 1)


def triangle(kind, n, k):
    if k < 0 or k > n:
        raise DomainError("need 0 <= k <= n, got n=%d k=%d" % (n, k))
    if kind == "catalan":
        return catalan_triangle(n, k)
    if kind == "motzkin":
        return _motzkin(n, k)
    if kind == "riordan":
        return _riordan(n, k)
    raise DomainError("unknown triangle %r" % kind)


def motzkin(n):
    return _motzkin(n, 0)


def riordan(n):
    return _riordan(n, 0)


def fuss_catalan(r, n):
    if r < 1 or n < 0:
        raise DomainError("need r >= 1, n >= 0")
    return comb((r + 1) * n, n) // (r * n + 1)


@lru_cache(maxsize=None)
def odd_partitions(n, k):
    """Set partitions of [n] into k blocks of odd size."""
    if n < 0 or k < 0:
        return 0
    if n <= 1:
        return 1 if n == k else 0
    return odd_partitions(n - 2, k - 2) + k * k * odd_partitions(n - 2, k)


@lru_cache(maxsize=None)
def even_partitions(n, k):
    """Set partitions of [n] into k blocks of even size."""
    if n % 2 or n < 0 or k < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    return (2 * k - 1) * even_partitions(n - 2, k - 1) + k * k * even_partitions(n - 2, k)


def parity_block_counts(kind, n, k):
    if kind == "odd":
        return odd_partitions(n, k)
    if kind == "even":
        return even_partitions(n, k)
    raise DomainError("kind must be 'odd' or 'even'")


def partitions(k, max_part=None):
    """Integer partitions of k, largest first (reverse lexicographic)."""
    if max_part is None:
        max_part = k
    if k == 0:
        yield ()
        return
    for first in range(min(k, max_part), 0, -1):
        for rest in partitions(k - first, first):
            yield (first,) + rest


def check_partition(lam):
    lam = tuple(lam)
    if any(p <= 0 for p in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise DomainError("not a partition: %r" % (lam,))
    return lam


def compositions(k, parts=None):
    """Compositions of k, optionally with parts restricted to `parts`."""
    if k == 0:
        yield ()
        return
    for first in range(1, k + 1):
        if parts is not None and first not in parts:
            continue
        for rest in compositions(k - first, parts):
            yield (first,) + rest


def num_standard_tableaux(lam):
    lam = check_partition(lam)
    k = sum(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(k) // hooks

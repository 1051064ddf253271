"""Specht modules over the rationals via polytabloids and Garnir relations.

A tableau is a tuple of rows, each a tuple of entries. Vectors are dicts
from standard tableaux to Fractions.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .combinatorics import check_partition
from .errors import DimensionError, DomainError


def shape_of(t):
    return tuple(len(r) for r in t)


def _fill(shape, word):
    rows, i = [], 0
    for length in shape:
        rows.append(tuple(word[i:i + length]))
        i += length
    return tuple(rows)


@lru_cache(maxsize=None)
def standard_tableaux(lam):
    """Standard tableaux of shape lam, sorted by row reading word."""
    lam = check_partition(lam)
    k = sum(lam)
    out = []
    rows = [[] for _ in lam]

    def rec(v):
        if v > k:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i, length in enumerate(lam):
            if len(rows[i]) < length and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(v)
                rec(v + 1)
                rows[i].pop()

    rec(1)
    out.sort(key=lambda t: sum(t, ()))
    return tuple(out)


@lru_cache(maxsize=None)
def tableau_index(lam):
    return {t: i for i, t in enumerate(standard_tableaux(lam))}


def is_standard(t):
    for r in t:
        if any(a >= b for a, b in zip(r, r[1:])):
            return False
    for i in range(1, len(t)):
        if any(t[i][j] <= t[i - 1][j] for j in range(len(t[i]))):
            return False
    return True


def perm_sign(images):
    """Sign of the permutation given as a list of images of 0..m-1."""
    seen = [False] * len(images)
    sign = 1
    for i in range(len(images)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = images[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def _sort_columns(t):
    rows = [list(r) for r in t]
    sign = 1
    for j in range(len(t[0]) if t else 0):
        col = [rows[i][j] for i in range(len(rows)) if len(rows[i]) > j]
        order = sorted(range(len(col)), key=lambda i: col[i])
        sign *= perm_sign(order)
        for i, src in enumerate(order):
            rows[i][j] = col[src]
    return tuple(tuple(r) for r in rows), sign


@lru_cache(maxsize=None)
def straighten(t):
    """Expand the polytabloid e_t in the standard basis, as a tuple of (tableau, coeff)."""
    t, sign = _sort_columns(t)
    if is_standard(t):
        return ((t, sign),)
    # first row descent after sorting columns
    for i, r in enumerate(t):
        for j in range(len(r) - 1):
            if r[j] > r[j + 1]:
                break
        else:
            continue
        break
    a_cells = [(x, j) for x in range(i, len(t)) if len(t[x]) > j]
    b_cells = [(x, j + 1) for x in range(0, i + 1)]
    cells = a_cells + b_cells
    vals = [t[x][y] for x, y in cells]
    pool = sorted(vals)
    out = {}
    for chosen in combinations(pool, len(a_cells)):
        rest = [v for v in pool if v not in chosen]
        new_vals = list(chosen) + rest
        if sorted(new_vals[:len(a_cells)]) == sorted(vals[:len(a_cells)]):
            continue  # identity coset
        rows = [list(r) for r in t]
        for (x, y), v in zip(cells, new_vals):
            rows[x][y] = v
        pos = {v: p for p, v in enumerate(vals)}
        s = perm_sign([pos[v] for v in new_vals])
        for u, c in straighten(tuple(tuple(r) for r in rows)):
            out[u] = out.get(u, 0) - s * c
    return tuple((u, sign * c) for u, c in sorted(out.items()) if c)


def relabel(t, sigma):
    """Apply sigma (one-line, 1-based) to the entries of t."""
    return tuple(tuple(sigma[v - 1] for v in r) for r in t)


def act(sigma, v):
    """Permutation action on a Specht vector."""
    sigma = tuple(sigma)
    out = {}
    for t, c in v.items():
        if len(sigma) != sum(shape_of(t)):
            raise DimensionError("permutation degree %d, tableau size %d" % (len(sigma), sum(shape_of(t))))
        for u, e in straighten(relabel(t, sigma)):
            out[u] = out.get(u, 0) + c * e
    return {u: Fraction(c) for u, c in out.items() if c}


def compose_perm(s1, s2):
    """(s1 s2)(i) = s1(s2(i))."""
    return tuple(s1[s2[i] - 1] for i in range(len(s2)))


def inverse_perm(s):
    out = [0] * len(s)
    for i, x in enumerate(s):
        out[x - 1] = i + 1
    return tuple(out)


def _column_group(t):
    """Yield (sign, permuted tableau) over the column stabiliser of t."""
    from itertools import permutations
    cols = []
    for j in range(len(t[0]) if t else 0):
        cols.append([t[i][j] for i in range(len(t)) if len(t[i]) > j])
    results = [((), 1)]
    for col in cols:
        new = []
        for prefix, s in results:
            for p in permutations(range(len(col))):
                new.append((prefix + (tuple(col[x] for x in p),), s * perm_sign(list(p))))
        results = new
    for colsets, s in results:
        rows = [list(r) for r in t]
        for j, col in enumerate(colsets):
            for i, v in enumerate(col):
                rows[i][j] = v
        yield s, tuple(tuple(r) for r in rows)


def tabloid(t):
    return tuple(frozenset(r) for r in t)


@lru_cache(maxsize=None)
def polytabloid(t):
    """e_t as a dict tabloid -> sign."""
    out = {}
    for s, u in _column_group(t):
        key = tabloid(u)
        out[key] = out.get(key, 0) + s
    return {k: c for k, c in out.items() if c}


def specht_form(lam, T, sigma, U):
    """<e_T, sigma . e_U> with tabloids orthonormal."""
    lam = check_partition(lam)
    if shape_of(T) != lam or shape_of(U) != lam:
        raise DomainError("tableau shapes differ from %r" % (lam,))
    if len(sigma) != sum(lam):
        raise DimensionError("permutation of wrong degree")
    a = polytabloid(T)
    b = polytabloid(relabel(U, tuple(sigma)))
    return Fraction(sum(c * b.get(k, 0) for k, c in a.items()))


def basis_vector(t):
    return {t: Fraction(1)}

import random
from fractions import Fraction
from itertools import permutations

import pytest
import sympy

from diagramalg.combinatorics import num_standard_tableaux, partitions
from diagramalg.errors import DimensionError, DomainError
from diagramalg.specht import (act, compose_perm, inverse_perm, is_standard, relabel, specht_form,
                               standard_tableaux, straighten)


def tabloid_vector(t):
    """Oracle: e_t as {tabloid: coeff} by summing over the column group directly."""
    cols = [[t[i][j] for i in range(len(t)) if len(t[i]) > j] for j in range(len(t[0]))]
    out = {}

    def rec(j, rows, sign):
        if j == len(cols):
            key = tuple(frozenset(r) for r in rows)
            out[key] = out.get(key, 0) + sign
            return
        for p in permutations(range(len(cols[j]))):
            inv = sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])
            new = [list(r) for r in rows]
            for i, x in enumerate(p):
                new[i].append(cols[j][x])
            rec(j + 1, new, sign * (-1) ** inv)

    rec(0, [[] for _ in t], 1)
    return {k: v for k, v in out.items() if v}


def solve_in_standard_basis(lam, t):
    std = standard_tableaux(lam)
    vecs = [tabloid_vector(s) for s in std]
    target = tabloid_vector(t)
    keys = sorted(set(target).union(*vecs), key=repr)
    M = sympy.Matrix([[v.get(k, 0) for v in vecs] for k in keys])
    b = sympy.Matrix([target.get(k, 0) for k in keys])
    sol, params = M.gauss_jordan_solve(b)
    assert not params.free_symbols
    return {s: Fraction(int(c.p), int(c.q)) for s, c in zip(std, sol) if c != 0}


def fill(lam, word):
    rows, i = [], 0
    for length in lam:
        rows.append(tuple(word[i:i + length]))
        i += length
    return tuple(rows)


def test_standard_tableaux_counts():
    for k in range(8):
        for lam in partitions(k):
            ts = standard_tableaux(lam)
            assert len(ts) == num_standard_tableaux(lam)
            assert all(is_standard(t) for t in ts)
    assert standard_tableaux((2, 1)) == (((1, 2), (3,)), ((1, 3), (2,)))


@pytest.mark.parametrize("k", range(1, 7))
def test_straighten_matches_tabloid_oracle(k):
    rng = random.Random(k)
    for lam in partitions(k):
        words = list(permutations(range(1, k + 1)))
        if len(words) > 40:
            words = rng.sample(words, 40)
        for w in words:
            t = fill(lam, w)
            assert dict(straighten(t)) == solve_in_standard_basis(lam, t)


@pytest.mark.parametrize("k", range(1, 7))
def test_gram_nonsingular(k):
    for lam in partitions(k):
        ts = standard_tableaux(lam)
        ident = tuple(range(1, k + 1))
        G = sympy.Matrix([[specht_form(lam, a, ident, b) for b in ts] for a in ts])
        assert G == G.T
        assert G.det() != 0
        assert all(G[i, i] > 0 for i in range(len(ts)))


def test_gram_21():
    ts = standard_tableaux((2, 1))
    G = [[specht_form((2, 1), a, (1, 2, 3), b) for b in ts] for a in ts]
    # e_T has two signed tabloids; the two polytabloids share {2,3}|{1}
    assert G == [[2, 1], [1, 2]]


@pytest.mark.parametrize("k", range(1, 5))
def test_action_is_homomorphism(k):
    gens = [tuple(range(1, i)) + (i + 1, i) + tuple(range(i + 2, k + 1)) for i in range(1, k)]
    perms = list(permutations(range(1, k + 1)))
    for lam in partitions(k):
        for t in standard_tableaux(lam):
            v = {t: Fraction(1)}
            for g in gens:
                for s in perms:
                    assert act(g, act(s, v)) == act(compose_perm(g, s), v)


def test_form_is_invariant():
    lam = (3, 2)
    ts = standard_tableaux(lam)
    rng = random.Random(3)
    for _ in range(30):
        s = tuple(rng.sample(range(1, 6), 5))
        a, b = rng.choice(ts), rng.choice(ts)
        lhs = sum(c * specht_form(lam, u, (1, 2, 3, 4, 5), b) for u, c in act(s, {a: 1}).items())
        rhs = sum(c * specht_form(lam, a, (1, 2, 3, 4, 5), u) for u, c in act(inverse_perm(s), {b: 1}).items())
        assert lhs == rhs


def test_relabel_and_errors():
    t = ((1, 2), (3,))
    assert relabel(t, (2, 1, 3)) == ((2, 1), (3,))
    with pytest.raises(DimensionError):
        act((1, 2), {t: 1})
    with pytest.raises(DomainError):
        specht_form((2, 1), ((1,), (2,)), (1, 2), ((1,), (2,)))

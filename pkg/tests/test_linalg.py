from fractions import Fraction

import pytest
import sympy

from diagramalg.diagram import Diagram, HalfDiagram, identity, split
from diagramalg.errors import DimensionError, DomainError, UnsupportedError
from diagramalg.families import CellBasisElement, FamilySpec, cell_labels, enumerate_basis, enumerate_cell_basis
from diagramalg.linalg import (Element, Params, Poly, act_on_cell, basis_element, gram_det_poly, gram_matrix,
                               interpolate, is_semisimple_at, multiply, one, pair_halves, phi, rank_det,
                               verify_family)

BETAS = [Fraction(2), Fraction(-3, 4), Fraction(5, 7)]


def D(n, *blocks):
    return Diagram(n, tuple(tuple(b) for b in blocks))


def H(n, blocks, defects):
    return CellBasisElement(HalfDiagram(n, tuple(map(tuple, blocks)), tuple(map(tuple, defects))))


def test_tl2_idempotent_scaling():
    spec = FamilySpec("temperley_lieb", 2)
    e = basis_element(spec, D(2, [1, 2], [-1, -2]))
    assert multiply(e, e, Params(3)) == e.scale(3)
    assert multiply(one(spec), e, Params(3)) == e


def test_element_rejects_foreign_diagram():
    with pytest.raises(DomainError):
        basis_element(FamilySpec("temperley_lieb", 2), D(2, [1], [2], [-1], [-2]))
    with pytest.raises(DimensionError):
        basis_element(FamilySpec("temperley_lieb", 2), identity(3))


def test_product_scalar(rho, tau):
    spec = FamilySpec("partition", 8)
    x, y = basis_element(spec, rho), basis_element(spec, tau)
    out = multiply(x, y, Params(2))
    assert out.terms == {D(8, [1, 2, 4, 8], [3, 5, 6, -2, -5, -6], [7], [-1, -3, -4], [-7], [-8]): 4}


def test_act_on_cell_tl3():
    spec = FamilySpec("temperley_lieb", 3)
    e1 = D(3, [1, 2], [-1, -2], [3, -3])
    v = H(3, [[1], [2, 3]], [[1]])
    w = H(3, [[1, 2], [3]], [[3]])
    idx = enumerate_cell_basis(spec, 1).index(w)
    assert act_on_cell(spec, 1, e1, {v: 1}, Params(2)) == {idx: 1}
    # the cap on w closes a loop
    assert act_on_cell(spec, 1, e1, {w: 1}, Params(2)) == {idx: 2}
    assert act_on_cell(spec, 1, identity(3), {v: 1}, Params(2)) == {1 - idx: 1}
    # a diagram with a single through strand kills the 3-defect module
    assert act_on_cell(spec, 3, e1, {0: 1}, Params(2)) == {}


def test_worked_pairings(tau):
    spec = FamilySpec("partition", 8)
    T = split(tau).lower
    U = split(tau).upper
    U1 = HalfDiagram(8, ((2,), (3, 5), (8,), (1,), (4, 7), (6,)), ((2,), (3, 5), (8,)))
    U2 = HalfDiagram(8, ((3, 5, 6), (4,), (8,), (1,), (2,), (7,)), ((3, 5, 6), (4,), (8,)))
    assert pair_halves(T, U) is None
    assert pair_halves(T, U1) == ((0, 1, 2), 0, 0)
    # one interior component (through the singleton 7') and the transposition of the first two slots
    assert pair_halves(T, U2) == ((1, 0, 2), 0, 1)
    lam = (2, 1)
    t1 = ((1, 2), (3,))
    for b in BETAS:
        p = Params(b)
        e = lambda h: CellBasisElement(h, (t1,))
        assert phi(spec, lam, e(T), e(U), p) == 0
        assert phi(spec, lam, e(T), e(U1), p) == 2  # identity: <e_t, e_t> = 2
        # (1 2) e_t = {12|3} - {13|2}, which meets e_t = {12|3} - {23|1} in one tabloid
        assert phi(spec, lam, e(T), e(U2), p) == b


def test_planar_pairing_beta5():
    lower = H(21, [[1, 2, 4], [3], [5, 7, 12], [6], [8, 11], [9], [10], [13, 17], [14, 15], [16],
                   [18, 21], [19], [20]], [[1, 2, 4], [5, 7, 12], [18, 21]])
    upper = H(21, [[1], [2], [3], [4, 9], [5], [6, 8], [7], [10, 12], [11], [13, 21], [14, 15, 19],
                   [16], [17, 18], [20]], [[2], [10, 12], [13, 21]])
    spec = FamilySpec("planar_partition", 21)
    for b in BETAS:
        assert phi(spec, 3, upper, lower, Params(b)) == b ** 5
        assert phi(spec, 3, lower, upper, Params(b)) == b ** 5


def test_planar_rook_gram_is_diagonal():
    for n in range(1, 5):
        spec = FamilySpec("planar_rook", n)
        for lam in cell_labels(spec):
            g = gram_matrix(spec, lam, Params(3))
            for i, row in enumerate(g.matrix):
                for j, x in enumerate(row):
                    assert x == (3 ** lam if i == j else 0)


def test_gram_det_poly_examples():
    assert gram_det_poly(FamilySpec("temperley_lieb", 2), 0) == Poly((0, 1))
    assert gram_det_poly(FamilySpec("planar_rook", 2), 1) == Poly((0, 0, 1))
    p = gram_det_poly(FamilySpec("temperley_lieb", 3), 1)
    assert p == Poly((-1, 0, 1))
    assert p.rational_roots() == [-1, 1]
    assert str(p) == "1*b^2 + -1"


@pytest.mark.parametrize("family,n", [("temperley_lieb", 4), ("motzkin", 3), ("brauer", 3), ("rook_brauer", 3)])
def test_gram_det_poly_against_direct(family, n):
    spec = FamilySpec(family, n)
    for lam in cell_labels(spec):
        poly = gram_det_poly(spec, lam)
        for x in (Fraction(-7, 3), Fraction(1, 5), Fraction(11, 2), Fraction(-1, 9), Fraction(100)):
            m = sympy.Matrix(gram_matrix(spec, lam, Params(x)).matrix)
            assert poly(x) == Fraction(str(m.det()))


def test_rank_det():
    assert rank_det([[1, 2], [2, 4]]) == (1, 0)
    assert rank_det([[Fraction(1, 2), 1], [1, 3]]) == (2, Fraction(1, 2))
    assert rank_det([[0, 0], [0, 0]]) == (0, 0)
    assert rank_det([[1, 2, 3]])[0] == 1


def test_interpolate():
    p = interpolate([0, 1, 2, 3], [1, 2, 9, 28])
    assert p == Poly((1, 0, 0, 1))
    assert Poly((0, 6, -5, 1)).rational_roots() == [0, 2, 3]


def test_semisimple_examples():
    r = is_semisimple_at(FamilySpec("planar_rook", 3), Params(0))
    assert not r.semisimple and r.surviving == [0]
    assert is_semisimple_at(FamilySpec("planar_rook", 3), Params(1)).semisimple
    assert not is_semisimple_at(FamilySpec("temperley_lieb", 3), Params(1)).semisimple
    assert is_semisimple_at(FamilySpec("temperley_lieb", 3), Params(0)).semisimple
    assert not is_semisimple_at(FamilySpec("temperley_lieb", 2), Params(0)).semisimple


def trace_form_det(spec, b):
    """Oracle: det of the trace form tr(L_x L_y); nonzero iff semisimple in characteristic 0."""
    basis = list(enumerate_basis(spec))
    idx = {d: i for i, d in enumerate(basis)}
    p = Params(b)
    L = []
    for x in basis:
        m = sympy.zeros(len(basis))
        for j, y in enumerate(basis):
            for d, c in multiply(basis_element(spec, x), basis_element(spec, y), p).terms.items():
                m[idx[d], j] += sympy.Rational(c.numerator, c.denominator)
        L.append(m)
    return sympy.Matrix(len(basis), len(basis), lambda i, j: (L[i] * L[j]).trace()).det()


@pytest.mark.parametrize("family,n,b", [("temperley_lieb", 3, 0), ("temperley_lieb", 3, 1),
                                        ("temperley_lieb", 4, 0), ("planar_rook", 2, 0),
                                        ("motzkin", 2, 2), ("rook", 2, 0)])
def test_semisimple_matches_trace_form(family, n, b):
    spec = FamilySpec(family, n)
    assert is_semisimple_at(spec, Params(b)).semisimple == (trace_form_det(spec, b) != 0)


def test_verify_small():
    for spec, dim in [(FamilySpec("temperley_lieb", 3), 5), (FamilySpec("parity_matching", 2), 4),
                      (FamilySpec("partition", 2), 15)]:
        rep = verify_family(spec)
        assert rep.ok, rep.checks
        assert len(enumerate_basis(spec)) == dim


def test_index_only_unsupported():
    spec = FamilySpec("partial_tl_index", 2)
    with pytest.raises(UnsupportedError):
        gram_matrix(spec, (0, 1), Params(1))
    with pytest.raises(UnsupportedError):
        multiply(Element(spec, {identity(2): 1}), Element(spec, {identity(2): 1}), Params(1))
    assert verify_family(FamilySpec("quasi_partition_index", 2)).ok


def test_gamma_separates_paths():
    spec = FamilySpec("motzkin", 1)
    s = basis_element(spec, D(1, [1], [-1]))
    assert multiply(s, s, Params(2, 5)) == s.scale(5)

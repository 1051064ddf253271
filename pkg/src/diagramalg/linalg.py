"""Algebra arithmetic, cell modules and Gram forms over exact rationals."""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import families as fam
from .diagram import HalfDiagram, _UF, compose, identity, involute
from .errors import DimensionError, DomainError, UnsupportedError
from .specht import act as specht_act, specht_form


@dataclass(frozen=True)
class Params:
    beta: Fraction
    gamma: Fraction = None

    def __post_init__(self):
        object.__setattr__(self, "beta", Fraction(self.beta))
        g = self.beta if self.gamma is None else Fraction(self.gamma)
        object.__setattr__(self, "gamma", g)

    def weight(self, loops, paths):
        return self.beta ** loops * self.gamma ** paths


# ---------------------------------------------------------------- elements

@dataclass
class Element:
    spec: object
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for d, c in self.terms.items():
            c = Fraction(c)
            if d.n != self.spec.n:
                raise DimensionError("diagram on n=%d in %s" % (d.n, self.spec))
            if c:
                if not fam.contains(self.spec, d):
                    raise DomainError("%s is not a basis diagram of %s" % (d, self.spec))
                clean[d] = clean.get(d, 0) + c
        self.terms = {d: c for d, c in clean.items() if c}

    def __add__(self, other):
        _same(self, other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, 0) + c
        return Element(self.spec, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return Element(self.spec, {d: v * Fraction(c) for d, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, Element) and self.spec == other.spec and self.terms == other.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: t[0].blocks)


def _same(x, y):
    if x.spec != y.spec:
        raise DomainError("elements of %s and %s" % (x.spec, y.spec))


def basis_element(spec, d, c=1):
    return Element(spec, {d: c})


def one(spec):
    return Element(spec, {identity(spec.n): 1})


def product_diagrams(x, y):
    """x.y places y on top of x: returns (diagram, loops, paths)."""
    return compose(y, x)


def multiply(x, y, p):
    _same(x, y)
    if x.spec.index_only:
        raise UnsupportedError("%s has no diagram multiplication" % x.spec.family)
    out = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            d, loops, paths = product_diagrams(a, b)
            w = ca * cb * p.weight(loops, paths)
            if w:
                out[d] = out.get(d, 0) + w
    return Element(x.spec, out)


def involute_element(x):
    return Element(x.spec, {involute(d): c for d, c in x.terms.items()})


# ---------------------------------------------------------------- halves

def half_action(d, h):
    """Glue h (a half diagram on the primed row) on top of d.

    Returns None when the result loses a defect, else
    (new half, slot map, loops, paths) where slot map[i] is the new
    position (0-based, by minimum) of old defect i.
    """
    n = d.n
    if h.n != n:
        raise DimensionError("half diagram on n=%d, diagram on n=%d" % (h.n, n))
    uf = _UF(2 * n)
    single = [False] * n
    for b in d.blocks:
        ids = [v - 1 if v > 0 else n - v - 1 for v in b]
        if len(b) == 1 and b[0] > 0:
            single[b[0] - 1] = True
        for x in ids[1:]:
            uf.union(ids[0], x)
    defect_of = {}
    for i, b in enumerate(h.defects):
        for v in b:
            defect_of[v] = i
    for b in h.blocks:
        if len(b) == 1:
            single[b[0] - 1] = True
        for v in b[1:]:
            uf.union(b[0] - 1, v - 1)
    comps = {}
    for x in range(2 * n):
        comps.setdefault(uf.find(x), []).append(x)
    loops = paths = 0
    new_blocks, through = [], []
    for members in comps.values():
        bottom = tuple(x - n + 1 for x in members if x >= n)
        ds = {defect_of[x + 1] for x in members if x < n and x + 1 in defect_of}
        if len(ds) > 1 or (ds and not bottom):
            return None
        if bottom:
            new_blocks.append(bottom)
            if ds:
                through.append((ds.pop(), bottom))
        elif any(single[x] for x in members):
            paths += 1
        else:
            loops += 1
    h2 = HalfDiagram(n, tuple(new_blocks), tuple(b for _, b in through))
    pos = {b: j for j, b in enumerate(h2.defects)}
    slot = [0] * h.k
    for i, b in through:
        slot[i] = pos[b]
    return h2, slot, loops, paths


def pair_halves(h1, h2):
    """Connect h1 with the reflection of h2.

    Returns None when the defects are not matched one-to-one, else
    (sigma, loops, paths) with sigma[j] = slot of h1 joined to slot j of h2.
    """
    n = h1.n
    if h2.n != n:
        raise DimensionError("halves on different n")
    uf = _UF(n)
    single = [False] * n
    for h in (h1, h2):
        for b in h.blocks:
            if len(b) == 1:
                single[b[0] - 1] = True
            for v in b[1:]:
                uf.union(b[0] - 1, v - 1)
    d1 = {v: i for i, b in enumerate(h1.defects) for v in b}
    d2 = {v: i for i, b in enumerate(h2.defects) for v in b}
    comps = {}
    for x in range(n):
        comps.setdefault(uf.find(x), []).append(x + 1)
    sigma = [None] * h2.k
    loops = paths = 0
    for members in comps.values():
        a = {d1[v] for v in members if v in d1}
        b = {d2[v] for v in members if v in d2}
        if len(a) != len(b) or len(a) > 1:
            return None
        if a:
            sigma[b.pop()] = a.pop()
        elif any(single[v - 1] for v in members):
            paths += 1
        else:
            loops += 1
    return tuple(sigma), loops, paths


# ---------------------------------------------------------------- cell modules

def _slot_index(spec, h):
    """(group, position in group) for each defect of h, in order of h.defects."""
    groups = fam.slot_groups(spec, h)
    where = {}
    for g, blocks in enumerate(groups):
        for j, b in enumerate(blocks):
            where[b] = (g, j)
    return [where.get(b) for b in h.defects]


@lru_cache(maxsize=256)
def _basis_index(spec, lam):
    return {e: i for i, e in enumerate(fam.enumerate_cell_basis(spec, lam))}


def act_on_basis(spec, lam, d, e, p):
    """Action of the diagram d on one cell-basis element; returns {element: coeff}."""
    res = half_action(d, e.half)
    if res is None:
        return {}
    h2, slot, loops, paths = res
    w = p.weight(loops, paths)
    if not w:
        return {}
    if spec.planar:
        return {fam.CellBasisElement(h2): w}
    old = _slot_index(spec, e.half)
    new = _slot_index(spec, h2)
    parts = fam.label_parts(spec, lam)
    perms = [[0] * sum(pt) for pt in parts]
    for i, where in enumerate(old):
        if where is None:
            continue
        g, j = where
        g2, j2 = new[slot[i]]
        if g2 != g:
            raise AssertionError("defect changed type under %s" % (d,))
        perms[g][j] = j2 + 1
    vecs = [{(): Fraction(1)}]
    for g, t in enumerate(e.tableaux):
        image = specht_act(tuple(perms[g]), {t: Fraction(1)})
        vecs = [{key + (u,): c * cu for key, c in vec.items() for u, cu in image.items()} for vec in vecs]
    return {fam.CellBasisElement(h2, key): w * c for key, c in vecs[0].items()}


def act_on_cell(spec, lam, x, v, p):
    """Apply x (Element or Diagram) to v ({CellBasisElement or index: coeff}); returns {index: coeff}."""
    if spec.index_only:
        raise UnsupportedError("%s is index-only" % spec.family)
    basis = fam.enumerate_cell_basis(spec, lam)
    index = _basis_index(spec, lam)
    terms = x.terms if isinstance(x, Element) else {x: Fraction(1)}
    out = {}
    for d, cd in terms.items():
        if not fam.contains(spec, d):
            raise DomainError("%s not in %s" % (d, spec))
        for key, cv in v.items():
            e = basis[key] if isinstance(key, int) else key
            for e2, c in act_on_basis(spec, lam, d, e, p).items():
                j = index[e2]
                out[j] = out.get(j, 0) + cd * cv * c
    return {j: c for j, c in out.items() if c}


def phi(spec, lam, e1, e2, p):
    """Cell form on two basis elements."""
    res = pair_halves(e1.half, e2.half)
    if res is None:
        return Fraction(0)
    sigma, loops, paths = res
    w = p.weight(loops, paths)
    if not w or spec.planar:
        return Fraction(w)
    s1, s2 = _slot_index(spec, e1.half), _slot_index(spec, e2.half)
    parts = fam.label_parts(spec, lam)
    perms = [[0] * sum(pt) for pt in parts]
    for j, where in enumerate(s2):
        if where is None:
            continue
        g, jj = where
        g1, ii = s1[sigma[j]]
        if g1 != g:
            return Fraction(0)
        perms[g][jj] = ii + 1
    val = Fraction(w)
    for g, pt in enumerate(parts):
        val *= specht_form(pt, e1.tableaux[g], tuple(perms[g]), e2.tableaux[g])
        if not val:
            break
    return val


# ---------------------------------------------------------------- exact linear algebra

def rank_det(rows):
    """Rank and determinant (0 unless square and nonsingular) by Bareiss elimination."""
    m = [[Fraction(x) for x in r] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    # clear denominators row by row, then eliminate over the integers
    scale = Fraction(1)
    ints = []
    for r in m:
        den = 1
        for x in r:
            den = den * x.denominator // _gcd(den, x.denominator)
        scale /= den
        ints.append([int(x * den) for x in r])
    a = ints
    sign, prev, rank = 1, 1, 0
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if a[i][col]), None)
        if piv is None:
            continue
        if piv != rank:
            a[piv], a[rank] = a[rank], a[piv]
            sign = -sign
        for i in range(rank + 1, nrows):
            for j in range(col + 1, ncols):
                a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) // prev
            a[i][col] = 0
        prev = a[rank][col]
        rank += 1
    if nrows == ncols and rank == nrows:
        det = Fraction(sign * (prev if nrows else 1)) * scale
    else:
        det = Fraction(0)
    return rank, det


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@dataclass(frozen=True)
class GramReport:
    label: object
    matrix: tuple
    rank: int
    det: Fraction

    @property
    def dim(self):
        return len(self.matrix)

    @property
    def nondegenerate(self):
        return self.rank == self.dim


def gram_matrix(spec, lam, p):
    if spec.index_only:
        raise UnsupportedError("%s is an index-only family" % spec.family)
    basis = fam.enumerate_cell_basis(spec, lam)
    m = [[None] * len(basis) for _ in basis]
    for i, a in enumerate(basis):
        for j in range(i, len(basis)):
            m[i][j] = m[j][i] = phi(spec, lam, a, basis[j], p)
    rank, det = rank_det(m)
    return GramReport(lam, tuple(tuple(r) for r in m), rank, det)


# ---------------------------------------------------------------- polynomials

@dataclass(frozen=True)
class Poly:
    """Univariate polynomial with Fraction coefficients, lowest degree first."""
    coeffs: tuple

    def __post_init__(self):
        c = [Fraction(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def rational_roots(self):
        """Distinct rational roots (with multiplicity dropped)."""
        if not self.coeffs:
            raise DomainError("zero polynomial")
        c = list(self.coeffs)
        den = 1
        for x in c:
            den = den * x.denominator // _gcd(den, x.denominator)
        ints = [int(x * den) for x in c]
        roots = set()
        if ints[0] == 0:
            roots.add(Fraction(0))
        while ints and ints[0] == 0:
            ints.pop(0)
        if len(ints) <= 1:
            return sorted(roots)
        a0, an = abs(ints[0]), abs(ints[-1])
        for p in _divisors(a0):
            for q in _divisors(an):
                for s in (1, -1):
                    x = Fraction(s * p, q)
                    if self(x) == 0:
                        roots.add(x)
        return sorted(roots)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append("%s%s" % (c, "" if i == 0 else "*b" if i == 1 else "*b^%d" % i))
        return " + ".join(reversed(terms)) or "0"


def _divisors(m):
    return [d for d in range(1, m + 1) if m % d == 0]


def interpolate(xs, ys):
    """Coefficients of the unique polynomial of degree < len(xs) through the points."""
    xs = [Fraction(x) for x in xs]
    coef = [Fraction(y) for y in ys]
    k = len(xs)
    for j in range(1, k):
        for i in range(k - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # Newton form to monomial basis
    out = [Fraction(0)] * k
    for i in range(k - 1, -1, -1):
        # out = out * (x - xs[i]) + coef[i]
        new = [Fraction(0)] * k
        for d in range(k - 1):
            new[d + 1] += out[d]
            new[d] -= out[d] * xs[i]
        new[0] += coef[i]
        out = new
    return Poly(tuple(out))


def gram_det_poly(spec, lam, gamma=None):
    """Determinant of the Gram matrix as a polynomial in beta.

    gamma=None ties gamma to beta; otherwise gamma is held at the given rational.
    Entries have beta-degree at most n, so n*dim + 1 sample points suffice.
    """
    dim = len(fam.enumerate_cell_basis(spec, lam))
    deg = spec.n * dim * (1 if gamma is not None else 1)
    xs = list(range(1, deg + 2))
    ys = [gram_matrix(spec, lam, Params(x, gamma)).det for x in xs]
    return interpolate(xs, ys)


# ---------------------------------------------------------------- reports

@dataclass(frozen=True)
class SemisimpleReport:
    semisimple: bool
    reports: tuple

    @property
    def degenerate(self):
        return [r.label for r in self.reports if not r.nondegenerate]

    @property
    def surviving(self):
        """Labels whose form is not identically zero (they index simple modules)."""
        return [r.label for r in self.reports if r.rank > 0]


def is_semisimple_at(spec, p):
    reps = tuple(gram_matrix(spec, lam, p) for lam in fam.cell_labels(spec))
    return SemisimpleReport(all(r.nondegenerate for r in reps), reps)


@dataclass
class VerifyReport:
    spec: object
    checks: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(ok for ok, _ in self.checks.values())

    def record(self, name, ok, detail=""):
        self.checks[name] = (bool(ok), detail)


def _pairs(items, limit, rng):
    total = len(items) ** 2
    if total <= limit:
        return [(a, b) for a in items for b in items]
    return [(rng.choice(items), rng.choice(items)) for _ in range(limit)]


def verify_family(spec, p=None, limit=2000, seed=0):
    """Run the structural checks on one family instance."""
    rng = random.Random(seed)
    p = p or Params(Fraction(7, 3), Fraction(-5, 2))
    if spec.family not in fam.SIZE_LE_2 and spec.family not in ("planar_rook",):
        # beyond size-2 blocks the two-parameter product is only associative at beta = gamma
        p = Params(p.beta)
    rep = VerifyReport(spec)
    basis = list(fam.enumerate_basis(spec))
    labels = fam.cell_labels(spec)
    dims = {lam: fam.cell_dim(spec, lam) for lam in labels}
    counted = {lam: len(fam.enumerate_cell_basis(spec, lam)) for lam in labels}
    total = fam.algebra_dim(spec)
    rep.record("dimension", len(basis) == total == sum(v * v for v in dims.values()) and dims == counted,
               "basis=%d closed=%d cells=%d" % (len(basis), total, sum(v * v for v in dims.values())))
    bset = set(basis)
    rep.record("involution_invariant", all(involute(d) in bset for d in basis))
    pairs = _pairs(basis, limit, rng)
    bad_anti = bad_filt = bad_close = None
    for a, b in pairs:
        d, lo, pa = product_diagrams(a, b)
        d2, lo2, pa2 = product_diagrams(involute(b), involute(a))
        if (involute(d), lo, pa) != (d2, lo2, pa2) and bad_anti is None:
            bad_anti = (a, b)
        if d.propagating_count > min(a.propagating_count, b.propagating_count) and bad_filt is None:
            bad_filt = (a, b)
        if not spec.index_only and d not in bset and bad_close is None:
            bad_close = (a, b)
    rep.record("anti_automorphism", bad_anti is None, str(bad_anti or ""))
    rep.record("filtration", bad_filt is None, str(bad_filt or ""))
    if spec.index_only:
        return rep
    rep.record("closure", bad_close is None, str(bad_close or ""))
    bad = None
    for _ in range(min(limit, len(basis) ** 3) // 10 + 1):
        x, y, z = (basis_element(spec, rng.choice(basis)) for _ in range(3))
        if multiply(multiply(x, y, p), z, p) != multiply(x, multiply(y, z, p), p):
            bad = (x, y, z)
            break
    rep.record("associativity", bad is None, str(bad or ""))
    bad_mod = bad_inv = bad_sym = None
    for lam in labels:
        cb_ = fam.enumerate_cell_basis(spec, lam)
        for _ in range(max(1, limit // (10 * len(labels)))):
            d1, d2 = rng.choice(basis), rng.choice(basis)
            i, j = rng.randrange(len(cb_)), rng.randrange(len(cb_))
            v = {i: Fraction(1)}
            lhs = act_on_cell(spec, lam, d1, act_on_cell(spec, lam, d2, v, p), p)
            rhs = act_on_cell(spec, lam, multiply(basis_element(spec, d1), basis_element(spec, d2), p), v, p)
            if lhs != rhs and bad_mod is None:
                bad_mod = (lam, d1, d2, i)
            left = sum(c * phi(spec, lam, cb_[k], cb_[j], p) for k, c in act_on_cell(spec, lam, d1, v, p).items())
            right = sum(c * phi(spec, lam, cb_[i], cb_[k], p)
                        for k, c in act_on_cell(spec, lam, involute(d1), {j: Fraction(1)}, p).items())
            if left != right and bad_inv is None:
                bad_inv = (lam, d1, i, j)
            if phi(spec, lam, cb_[i], cb_[j], p) != phi(spec, lam, cb_[j], cb_[i], p) and bad_sym is None:
                bad_sym = (lam, i, j)
    rep.record("module_law", bad_mod is None, str(bad_mod or ""))
    rep.record("form_invariance", bad_inv is None, str(bad_inv or ""))
    rep.record("form_symmetry", bad_sym is None, str(bad_sym or ""))
    return rep

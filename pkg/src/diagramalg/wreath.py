"""Cellular wreath products A wr S for diagram families S with blocks of size at most 2.

A decoration algebra A is given by structure constants on a basis
e_0..e_{b-1}, a unit index, a trace functional and a split cell datum
(label -> cell dimension). Every block of an S-diagram carries a basis
index of A. Multiplying stacks the diagrams and multiplies decorations
along each strand; a closed loop carrying a scores beta*trace(a), a
contractible path gamma*trace(a).

Text format for a decoration algebra (one directive per line, # comments):

    basis 2
    unit 0             # optional; omit when no basis element is the unit
    mul 1 1 0 1        # e_1 e_1 = 1 * e_0 ; unlisted products are 0
    trace 0 1          # trace(e_0) = 1 ; unlisted traces are 0
    cell triv 1        # cell label and cell dimension
    cell sign 1
    star 1 1 1         # anti-involution star(e_1) = 1 * e_1 ; default is the identity

A strand read against the orientation of a block (from its first vertex in
canonical order to its second; a singleton points away from its vertex)
picks up star of the decoration.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import factorial, prod

from . import families as fam
from .combinatorics import num_standard_tableaux, partitions
from .diagram import Diagram, compose, identity
from .errors import DimensionError, DomainError, UnsupportedError

NONPLANAR_BASES = ("brauer", "rook_brauer", "rook")
PLANAR_BASES = ("temperley_lieb", "motzkin", "planar_rook")


class DecorationAlgebra:
    def __init__(self, b, table, unit=0, trace=None, cells=None, star=None):
        self.b = int(b)
        if self.b < 1:
            raise DomainError("basis size must be positive")
        self.table = {}
        for (i, j), vec in table.items():
            self._check(i, j, *vec)
            vec = {k: Fraction(c) for k, c in vec.items() if c}
            if vec:
                self.table[(i, j)] = vec
        self.unit = unit
        if unit is not None:
            self._check(unit)
        tr = trace if trace is not None else {unit: 1}
        self.trace_values = [Fraction(tr.get(i, 0)) for i in range(self.b)]
        self.star_map = {i: {j: Fraction(c) for j, c in v.items()} for i, v in (star or {}).items()}
        self.cells = dict(cells) if cells else {"*": 1} if self.b == 1 else None
        if self.cells is not None and sum(d * d for d in self.cells.values()) != self.b:
            raise DomainError("cell dimensions squared must sum to the basis size")
        self._validate()

    def _check(self, *idx):
        for i in idx:
            if not 0 <= i < self.b:
                raise DomainError("basis index %r out of range" % (i,))

    def mul_basis(self, i, j):
        return self.table.get((i, j), {})

    def mul(self, u, v):
        out = {}
        for i, a in u.items():
            for j, c in v.items():
                for k, e in self.mul_basis(i, j).items():
                    out[k] = out.get(k, 0) + a * c * e
        return {k: c for k, c in out.items() if c}

    def star(self, u):
        """Anti-involution, identity on basis indices it does not list."""
        out = {}
        for i, c in u.items():
            for j, e in self.star_map.get(i, {i: 1}).items():
                out[j] = out.get(j, 0) + c * e
        return {k: c for k, c in out.items() if c}

    def trace(self, u):
        return sum((c * self.trace_values[i] for i, c in u.items()), Fraction(0))

    def _validate(self):
        e = lambda i: {i: Fraction(1)}
        for i in range(self.b if self.unit is not None else 0):
            if self.mul(e(self.unit), e(i)) != e(i) or self.mul(e(i), e(self.unit)) != e(i):
                raise DomainError("index %d is not a unit" % self.unit)
        for i in range(self.b):
            for j in range(self.b):
                ij = self.mul(e(i), e(j))
                for k in range(self.b):
                    if self.mul(ij, e(k)) != self.mul(e(i), self.mul(e(j), e(k))):
                        raise DomainError("structure constants are not associative at %d,%d,%d" % (i, j, k))
                if self.star(ij) != self.mul(self.star(e(j)), self.star(e(i))):
                    raise DomainError("star is not an anti-automorphism at %d,%d" % (i, j))
            if self.star(self.star(e(i))) != e(i):
                raise DomainError("star is not an involution at %d" % i)

    @property
    def dim(self):
        return self.b


def cyclic_group(r):
    """Group algebra of Z_r, trace = coefficient of the identity, r one-dimensional cells."""
    table = {(i, j): {(i + j) % r: 1} for i in range(r) for j in range(r)}
    return DecorationAlgebra(r, table, 0, {0: 1}, {"chi%d" % i: 1 for i in range(r)})


def matrix_algebra(m):
    """m x m matrix units E_ij (index i*m + j), trace = matrix trace, one cell of dimension m."""
    table = {}
    for i in range(m):
        for j in range(m):
            for k in range(m):
                table[(i * m + j, j * m + k)] = {i * m + k: 1}
    unit = 0 if m == 1 else None
    star = {i * m + j: {j * m + i: 1} for i in range(m) for j in range(m)}
    return DecorationAlgebra(m * m, table, unit, {i * m + i: 1 for i in range(m)}, {"M%d" % m: m}, star)


def parse_algebra(text):
    b, unit, table, trace, cells, star = None, None, {}, {}, {}, {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        key, args = line[0], line[1:]
        try:
            if key == "basis":
                b = int(args[0])
            elif key == "unit":
                unit = int(args[0])
            elif key == "mul":
                i, j, k = map(int, args[:3])
                table.setdefault((i, j), {})[k] = Fraction(args[3])
            elif key == "trace":
                trace[int(args[0])] = Fraction(args[1])
            elif key == "star":
                star.setdefault(int(args[0]), {})[int(args[1])] = Fraction(args[2])
            elif key == "cell":
                cells[args[0]] = int(args[1])
            else:
                raise DomainError("unknown directive %r" % key)
        except (IndexError, ValueError) as exc:
            raise DomainError("line %d: %s" % (lineno, exc))
    if b is None:
        raise DomainError("missing 'basis' line")
    return DecorationAlgebra(b, table, unit, trace, cells or None, star)


# ---------------------------------------------------------------- decorated diagrams

@dataclass(frozen=True)
class WreathDiagram:
    base: Diagram
    decoration: tuple  # basis index per block, aligned with base.blocks

    def __post_init__(self):
        if len(self.decoration) != len(self.base.blocks):
            raise DimensionError("one decoration per block required")

    @classmethod
    def from_map(cls, base, deco):
        return cls(base, tuple(deco[b] for b in base.blocks))

    def as_map(self):
        return dict(zip(self.base.blocks, self.decoration))


def _check_base(spec):
    if spec.family not in NONPLANAR_BASES + PLANAR_BASES:
        raise UnsupportedError("wreath products need a family with blocks of size at most 2")


def _strands(n, top, bottom):
    """Walk the strands of top stacked over bottom.

    Yields (ends, [(side, block index, reversed), ...]) per component in walking order.
    ends lists the outer vertices in the final numbering, [] for a
    contractible path and None for a loop. Outer strands are walked from
    their top-row end when they have one.
    """
    edges = []  # (side, block index, vertex ids)
    inc = {}
    for side, d, shift in (("t", top, (0, n)), ("b", bottom, (n, 2 * n))):
        for bi, blk in enumerate(d.blocks):
            ids = tuple(shift[0] + v - 1 if v > 0 else shift[1] - v - 1 for v in blk)
            edges.append((side, bi, ids))
            for x in ids:
                inc.setdefault(x, []).append(len(edges) - 1)
    used = [False] * len(edges)

    def is_outer(x):
        return x < n or x >= 2 * n

    def walk(e, v):
        # enter block e through vertex v (None: start at a singleton)
        seq = []
        while True:
            used[e] = True
            ids = edges[e][2]
            seq.append(edges[e][:2] + (v is None or (len(ids) == 2 and v != ids[0]),))
            if len(ids) == 2:
                out = ids[1] if ids[0] == v else ids[0]
            elif v is None:
                out = ids[0]
            else:
                return seq, None
            if is_outer(out):
                return seq, out
            nxt = [f for f in inc[out] if not used[f]]
            if not nxt:
                return seq, out
            e, v = nxt[0], out

    def name(x):
        return x + 1 if x < n else -(x - 2 * n + 1)

    for x in list(range(n)) + list(range(2 * n, 3 * n)):
        e = inc[x][0]
        if used[e]:
            continue
        seq, end = walk(e, x)
        yield [name(x)] + ([name(end)] if end is not None else []), seq
    for e, (_, _, ids) in enumerate(edges):
        if not used[e] and len(ids) == 1:
            yield [], walk(e, None)[0]
    for e, (_, _, ids) in enumerate(edges):
        if not used[e]:
            yield None, walk(e, ids[0])[0]


def wreath_product_terms(spec, A, x, y, p):
    """x.y for decorated diagrams x, y (y placed on top); returns {WreathDiagram: coeff}."""
    _check_base(spec)
    base, _, _ = compose(y.base, x.base)
    deco = {"t": y.decoration, "b": x.decoration}
    n = spec.n
    coeff = Fraction(1)
    slots = {}
    for ends, seq in _strands(n, y.base, x.base):
        vec = None
        for side, bi, rev in seq:
            e = {deco[side][bi]: Fraction(1)}
            if rev:
                e = A.star(e)
            vec = e if vec is None else A.mul(vec, e)
        if ends is None:
            coeff *= p.beta * A.trace(vec)
        elif not ends:
            coeff *= p.gamma * A.trace(vec)
        else:
            slots[ends[0]] = vec
        if not coeff:
            return {}
    vecs = []
    for blk in base.blocks:
        vecs.append(list(slots[blk[0]].items()))
    out = {}
    for choice in product(*vecs):
        c = coeff * prod((cv for _, cv in choice), start=Fraction(1))
        if c:
            w = WreathDiagram(base, tuple(i for i, _ in choice))
            out[w] = out.get(w, 0) + c
    return out


def wreath_multiply(spec, A, x, y, p):
    """Bilinear product of weighted sums {WreathDiagram: coeff}."""
    out = {}
    for a, ca in x.items():
        for b, cb in y.items():
            for w, c in wreath_product_terms(spec, A, a, b, p).items():
                out[w] = out.get(w, 0) + Fraction(ca) * Fraction(cb) * c
    return {w: c for w, c in out.items() if c}


def wreath_basis(spec, A):
    _check_base(spec)
    out = []
    for d in fam.enumerate_basis(spec):
        for deco in product(range(A.b), repeat=len(d.blocks)):
            out.append(WreathDiagram(d, deco))
    return out


def wreath_unit(spec, A):
    if A.unit is None:
        raise DomainError("decoration algebra has no basis unit")
    return {WreathDiagram(identity(spec.n), (A.unit,) * spec.n): Fraction(1)}


def wreath_dim(spec, b):
    """Number of decorated basis diagrams: sum over d of b^(#blocks of d)."""
    _check_base(spec)
    b = b.b if isinstance(b, DecorationAlgebra) else int(b)
    return sum(b ** len(d.blocks) for d in fam.enumerate_basis(spec))


# ---------------------------------------------------------------- cell datum

@dataclass(frozen=True)
class WreathLabel:
    defects: int
    L: tuple  # sequence of A-labels (planar bases) or multipartition (non-planar bases)


def _multipartitions(k, m):
    """Tuples of m partitions with total size k."""
    for sizes in _compositions_weak(k, m):
        for parts in product(*(list(partitions(s)) for s in sizes)):
            yield parts


def _compositions_weak(k, m):
    if m == 0:
        if k == 0:
            yield ()
        return
    for first in range(k + 1):
        for rest in _compositions_weak(k - first, m - 1):
            yield (first,) + rest


def _defect_halves(spec):
    out = {}
    for h in fam.enumerate_halves(spec):
        out.setdefault(h.k, []).append(h)
    return out


def wreath_cell_labels(spec, A):
    """Cell labels of A wr S with the size of each cell basis.

    Returns a list of (WreathLabel, |M|). Planar bases label the strands by
    sequences of A-labels; non-planar bases by multipartitions indexed by
    the A-labels, since the symmetric group then permutes the strands.
    A non-defect block carries a full element of A, i.e. dim A choices.
    """
    _check_base(spec)
    if A.cells is None:
        raise DomainError("decoration algebra has no cell datum")
    names = sorted(A.cells)
    halves = _defect_halves(spec)
    out = []
    for k in sorted(halves):
        free = sum(A.dim ** (len(h.blocks) - h.k) for h in halves[k])
        if spec.family in PLANAR_BASES:
            for L in product(names, repeat=k):
                out.append((WreathLabel(k, L), free * prod(A.cells[x] for x in L)))
        else:
            for mp in _multipartitions(k, len(names)):
                sizes = [sum(lam) for lam in mp]
                mult = factorial(k)
                for s in sizes:
                    mult //= factorial(s)
                size = mult * prod(num_standard_tableaux(lam) * A.cells[nm] ** sum(lam)
                                   for lam, nm in zip(mp, names))
                out.append((WreathLabel(k, mp), free * size))
    return out


def multiset_labels(spec, A):
    """The label set with strand labels taken as multisets, for comparison."""
    halves = _defect_halves(spec)
    return [WreathLabel(k, L) for k in sorted(halves)
            for L in combinations_with_replacement(sorted(A.cells), k)]

"""Set-partition diagrams on [n] u [n]'.

A vertex i of the top row is the integer i, the bottom vertex i' is -i.
"""

import json
from dataclasses import dataclass

from .errors import DefectError, DimensionError, DomainError


def _block_key(block):
    return tuple(v for v in block if v > 0) + tuple(-v for v in block if v < 0)


def _sort_block(block):
    top = sorted(v for v in block if v > 0)
    bot = sorted((v for v in block if v < 0), reverse=True)
    return tuple(top + bot)


def _blocks_order(block):
    if block[0] > 0:
        return (0, block[0])
    return (1, -block[0])


def canonical_blocks(blocks):
    return tuple(sorted((_sort_block(b) for b in blocks), key=_blocks_order))


@dataclass(frozen=True)
class Diagram:
    n: int
    blocks: tuple

    def __post_init__(self):
        blocks = canonical_blocks(self.blocks)
        seen = [v for b in blocks for v in b]
        want = set(range(1, self.n + 1)) | set(range(-self.n, 0))
        if any(len(b) == 0 for b in blocks) or len(seen) != len(set(seen)) or set(seen) != want:
            raise DomainError("blocks must partition {1..%d} u {1'..%d'}" % (self.n, self.n))
        object.__setattr__(self, "blocks", blocks)

    @property
    def propagating_count(self):
        return sum(1 for b in self.blocks if b[0] > 0 and b[-1] < 0)

    def to_json(self):
        return json.dumps([list(b) for b in self.blocks], separators=(",", ":"))

    def __str__(self):
        def name(v):
            return str(v) if v > 0 else "%d'" % -v
        return "{" + ", ".join("{" + ",".join(name(v) for v in b) + "}" for b in self.blocks) + "}"


def identity(n):
    return Diagram(n, tuple((i, -i) for i in range(1, n + 1)))


def from_json(text, n=None):
    blocks = json.loads(text) if isinstance(text, str) else text
    blocks = [tuple(int(v) for v in b) for b in blocks]
    if n is None:
        n = max((abs(v) for b in blocks for v in b), default=0)
    return Diagram(n, tuple(blocks))


def block_of(d):
    """Map vertex -> index of its block."""
    out = {}
    for i, b in enumerate(d.blocks):
        for v in b:
            out[v] = i
    return out


class _UF:
    __slots__ = ("p",)

    def __init__(self, size):
        self.p = list(range(size))

    def find(self, x):
        p = self.p
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.p[b] = a


def compose(top, bottom):
    """Stack `top` over `bottom`, gluing top's j' to bottom's j.

    Returns (diagram, loops, paths). An interior component is a loop when
    every middle vertex in it sits in a block of size >= 2 in both diagrams,
    otherwise it is a path.
    """
    if top.n != bottom.n:
        raise DimensionError("cannot compose n=%d with n=%d" % (top.n, bottom.n))
    n = top.n
    # ids: top row 0..n-1, middle n..2n-1, bottom row 2n..3n-1
    uf = _UF(3 * n)
    single = [False] * n
    for b in top.blocks:
        ids = [v - 1 if v > 0 else n - v - 1 for v in b]
        if len(b) == 1 and b[0] < 0:
            single[-b[0] - 1] = True
        for x in ids[1:]:
            uf.union(ids[0], x)
    for b in bottom.blocks:
        ids = [n + v - 1 if v > 0 else 2 * n - v - 1 for v in b]
        if len(b) == 1 and b[0] > 0:
            single[b[0] - 1] = True
        for x in ids[1:]:
            uf.union(ids[0], x)
    comps = {}
    for x in range(3 * n):
        comps.setdefault(uf.find(x), []).append(x)
    blocks = []
    loops = paths = 0
    for members in comps.values():
        outer = [x + 1 if x < n else -(x - 2 * n + 1) for x in members if x < n or x >= 2 * n]
        if outer:
            blocks.append(outer)
        elif any(single[x - n] for x in members):
            paths += 1
        else:
            loops += 1
    return Diagram(n, tuple(blocks)), loops, paths


def involute(d):
    return Diagram(d.n, tuple(tuple(-v for v in b) for b in d.blocks))


def _noncrossing(n_points, blocks):
    """Blocks given as lists of positions 0..n_points-1."""
    owner = [0] * n_points
    last = {}
    for i, b in enumerate(blocks):
        for x in b:
            owner[x] = i
        last[i] = max(b)
    stack = []
    opened = set()
    for x in range(n_points):
        i = owner[x]
        if i in opened:
            if stack[-1] != i:
                return False
            if last[i] == x:
                stack.pop()
        elif last[i] != x:
            opened.add(i)
            stack.append(i)
    return True


def is_planar(d):
    n = d.n
    pos = [[v - 1 if v > 0 else 2 * n + v for v in b] for b in d.blocks]
    return _noncrossing(2 * n, pos)


@dataclass(frozen=True)
class HalfDiagram:
    """Set partition of one row (vertices 1..n) with chosen defect blocks."""
    n: int
    blocks: tuple
    defects: tuple

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        defects = tuple(sorted(tuple(sorted(b)) for b in self.defects))
        flat = [v for b in blocks for v in b]
        if sorted(flat) != list(range(1, self.n + 1)) or any(len(b) == 0 for b in blocks):
            raise DomainError("half diagram blocks must partition {1..%d}" % self.n)
        if not set(defects) <= set(blocks):
            raise DomainError("defects must be blocks")
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "defects", defects)

    @property
    def k(self):
        return len(self.defects)

    def is_defect(self, block):
        return block in self.defects

    def to_json(self):
        return json.dumps({"blocks": [list(b) for b in self.blocks],
                           "defects": [list(b) for b in self.defects]}, separators=(",", ":"))


@dataclass(frozen=True)
class SplitData:
    lower: HalfDiagram
    perm: tuple
    upper: HalfDiagram


def split(d):
    """Decompose d into (lower half on the unprimed row, perm, upper half).

    perm[i-1] = j when the i-th lower defect (ordered by minimum) is wired
    to the j-th upper defect.
    """
    low_blocks, up_blocks, through = [], [], []
    for b in d.blocks:
        top = tuple(v for v in b if v > 0)
        bot = tuple(sorted(-v for v in b if v < 0))
        if top:
            low_blocks.append(top)
        if bot:
            up_blocks.append(bot)
        if top and bot:
            through.append((top, bot))
    lower = HalfDiagram(d.n, tuple(low_blocks), tuple(t for t, _ in through))
    upper = HalfDiagram(d.n, tuple(up_blocks), tuple(b for _, b in through))
    slot = {b: i + 1 for i, b in enumerate(upper.defects)}
    wire = dict(through)
    perm = tuple(slot[wire[t]] for t in lower.defects)
    return SplitData(lower, perm, upper)


def join(s):
    lower, upper, perm = s.lower, s.upper, tuple(s.perm)
    if lower.n != upper.n:
        raise DimensionError("halves on different n")
    if lower.k != upper.k or len(perm) != lower.k or sorted(perm) != list(range(1, lower.k + 1)):
        raise DefectError("defect counts do not match: %d, %d, perm of length %d"
                          % (lower.k, upper.k, len(perm)))
    blocks = []
    used = set()
    for t, j in zip(lower.defects, perm):
        u = upper.defects[j - 1]
        used.add(u)
        blocks.append(t + tuple(-v for v in u))
    blocks.extend(b for b in lower.blocks if b not in lower.defects)
    blocks.extend(tuple(-v for v in b) for b in upper.blocks if b not in used)
    return Diagram(lower.n, tuple(blocks))


def set_partitions(items):
    """All set partitions of the list `items`, as lists of lists (restricted growth order)."""
    items = list(items)
    if not items:
        yield []
        return
    out = []

    def rec(i):
        if i == len(items):
            yield [list(b) for b in out]
            return
        x = items[i]
        for b in out:
            b.append(x)
            yield from rec(i + 1)
            b.pop()
        out.append([x])
        yield from rec(i + 1)
        out.pop()

    yield from rec(0)


def all_diagrams(n):
    verts = list(range(1, n + 1)) + list(range(-1, -n - 1, -1))
    for p in set_partitions(verts):
        yield Diagram(n, tuple(tuple(b) for b in p))

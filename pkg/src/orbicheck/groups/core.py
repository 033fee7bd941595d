"""Finite groups given by Cayley tables, with an optional matrix realization.

Subgroups are represented as frozensets of element indices of the parent
group.  All enumeration results come out in a deterministic order.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from ..errors import CapExceededError, NotNormalError
from ..exactnum import CycMatrix, block_diag

Subgroup = frozenset

DEFAULT_CAP = 64
DEFAULT_SECTION_CAP = 10**6


class FiniteGroup:
    """Group on indices 0..n-1 with a total multiplication table."""

    table: tuple[tuple[int, ...], ...]
    identity: int

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        e = self.identity
        return tuple(row.index(e) for row in self.table)

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, g: int, h: int) -> int:
        """g h g^-1"""
        return self.table[self.table[g][h]][self.inverses[g]]

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        out = []
        for a in range(self.order):
            k, x = 1, a
            while x != self.identity:
                x = self.table[x][a]
                k += 1
            out.append(k)
        return tuple(out)

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def center(self) -> Subgroup:
        t = self.table
        return frozenset(a for a in range(self.order)
                         if all(t[a][b] == t[b][a] for b in range(self.order)))

    def closure(self, gens: Iterable[int]) -> Subgroup:
        """Smallest subgroup containing ``gens``."""
        elems = {self.identity}
        frontier = [self.identity]
        gens = list(dict.fromkeys(gens))
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = self.table[x][s]
                    if y not in elems:
                        elems.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(elems)

    def is_subgroup(self, h: Iterable[int]) -> bool:
        h = frozenset(h)
        if self.identity not in h:
            return False
        return all(self.table[a][self.inverses[b]] in h for a in h for b in h)

    def generating_set(self, subset: Iterable[int] | None = None) -> list[int]:
        """Greedy small generating set, preferring elements of large order."""
        pool = sorted(range(self.order) if subset is None else subset,
                      key=lambda a: (-self.element_orders[a], a))
        target = len(pool) if subset is not None else self.order
        gens: list[int] = []
        current = frozenset([self.identity])
        for a in pool:
            if len(current) == target:
                break
            if a not in current:
                gens.append(a)
                current = self.closure(gens)
        return gens


class AbstractGroup(FiniteGroup):
    """Group given only by its Cayley table; the identity is element 0."""

    def __init__(self, table: Sequence[Sequence[int]], labels: Sequence[str] | None = None,
                 validate: bool = True):
        self.table = tuple(tuple(row) for row in table)
        self.identity = 0
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(len(table)))
        if validate:
            self._validate()

    def _validate(self):
        n = self.order
        t = self.table
        if any(len(row) != n or any(not 0 <= x < n for x in row) for row in t):
            raise ValueError("Cayley table is not a total n x n table")
        if any(t[0][a] != a or t[a][0] != a for a in range(n)):
            raise ValueError("element 0 is not the identity")
        if any(0 not in row for row in t):
            raise ValueError("some element has no inverse")
        for a in range(n):
            ta = t[a]
            for b in range(n):
                tab = t[ta[b]]
                tb = t[b]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        raise ValueError(f"table is not associative at ({a}, {b}, {c})")

    def __repr__(self):
        return f"AbstractGroup(order={self.order})"


class MatrixGroup(FiniteGroup):
    """Finite group of invertible matrices with its Cayley table.

    Elements are sorted by their canonical matrix encoding, so two runs over
    the same generators produce identical indexing.
    """

    def __init__(self, dim: int, elements: Sequence[CycMatrix], table: Sequence[Sequence[int]],
                 components: Sequence[tuple[int, int]] | None = None):
        self.dim = dim
        self.elements = tuple(elements)
        self.table = tuple(tuple(r) for r in table)
        self.identity = next(i for i, m in enumerate(self.elements) if m.is_identity())
        self.components = tuple(components) if components is not None else None
        self._index = {m: i for i, m in enumerate(self.elements)}

    def index(self, m: CycMatrix) -> int:
        try:
            return self._index[m]
        except KeyError:
            raise KeyError(f"matrix {m} is not an element of this group") from None

    def __contains__(self, m: CycMatrix) -> bool:
        return m in self._index

    def __getitem__(self, i: int) -> CycMatrix:
        return self.elements[i]

    def subgroup_group(self, h: Iterable[int]) -> tuple[MatrixGroup, list[int]]:
        """The subgroup ``h`` as a matrix group in its own right, plus the index map into self."""
        idx = sorted(h)
        pos = {p: i for i, p in enumerate(idx)}
        table = [[pos[self.table[a][b]] for b in idx] for a in idx]
        return MatrixGroup(self.dim, [self.elements[i] for i in idx], table), idx

    def __repr__(self):
        return f"MatrixGroup(dim={self.dim}, order={self.order})"


class GroupHom:
    """Homomorphism between finite groups given by its table of images."""

    def __init__(self, source: FiniteGroup, target: FiniteGroup, images: Sequence[int],
                 validate: bool = True):
        self.source = source
        self.target = target
        self.images = tuple(images)
        if validate:
            bad = self.violation()
            if bad is not None:
                raise ValueError(f"not a homomorphism at elements {bad}")

    def violation(self) -> tuple[int, int] | None:
        s, t, im = self.source.table, self.target.table, self.images
        if len(im) != self.source.order:
            return (-1, -1)
        if im[self.source.identity] != self.target.identity:
            return (self.source.identity, self.source.identity)
        for a in range(self.source.order):
            for b in range(self.source.order):
                if im[s[a][b]] != t[im[a]][im[b]]:
                    return (a, b)
        return None

    def __call__(self, a: int) -> int:
        return self.images[a]

    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.target.order

    def kernel(self) -> Subgroup:
        e = self.target.identity
        return frozenset(a for a, b in enumerate(self.images) if b == e)

    def image(self) -> Subgroup:
        return frozenset(self.images)

    def __eq__(self, other):
        if not isinstance(other, GroupHom):
            return NotImplemented
        return (self.source is other.source and self.target is other.target
                and self.images == other.images)

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"GroupHom({list(self.images)})"


def generate(gens: Sequence[CycMatrix], cap: int = DEFAULT_CAP, dim: int | None = None) -> MatrixGroup:
    """Close a list of invertible square matrices into a finite matrix group."""
    gens = list(gens)
    if not gens:
        if dim is None:
            raise ValueError("cannot infer dimension from an empty generator list")
        gens = [CycMatrix.identity(dim)]
    n = gens[0].nrows
    if dim is not None and n != dim:
        raise ValueError(f"generator of size {n} in dimension {dim}")
    for g in gens:
        if not g.is_square or g.nrows != n:
            raise ValueError(f"generators must be square of size {n}, got {g.shape}")
        if g.rank() != n:
            raise ValueError(f"generator {g} is not invertible")
    order = 1
    for g in gens:
        o = g.order
        order = order * o // _gcd(order, o)
    gens = [g.lift(order) for g in gens]

    ident = CycMatrix.identity(n).lift(order)
    elems = [ident]
    seen = {ident: 0}
    right: list[list[int]] = []
    parent: list[tuple[int, int] | None] = [None]
    i = 0
    while i < len(elems):
        x = elems[i]
        row = []
        for si, s in enumerate(gens):
            y = x @ s
            j = seen.get(y)
            if j is None:
                if len(elems) >= cap:
                    raise CapExceededError(f"group not finite within cap {cap}")
                j = len(elems)
                seen[y] = j
                elems.append(y)
                parent.append((i, si))
            row.append(j)
        right.append(row)
        i += 1

    # table[g][e] with e = p*s  ->  (g*p)*s
    m = len(elems)
    table = [[0] * m for _ in range(m)]
    for g in range(m):
        tg = table[g]
        tg[0] = g
        for e in range(1, m):
            p, s = parent[e]
            tg[e] = right[tg[p]][s]

    perm = sorted(range(m), key=lambda k: elems[k].key())
    pos = [0] * m
    for new, old in enumerate(perm):
        pos[old] = new
    sorted_table = [[pos[table[a][b]] for b in perm] for a in perm]
    return MatrixGroup(n, [elems[k] for k in perm], sorted_table)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def subgroups(g: FiniteGroup, cap: int = DEFAULT_CAP) -> list[Subgroup]:
    """All subgroups, ordered by size then by sorted element indices.

    Every subgroup is a join of cyclic subgroups, so joins are taken
    repeatedly starting from the cyclic ones until nothing new appears.
    """
    if g.order > cap:
        raise CapExceededError(f"subgroup enumeration limited to order {cap}, got {g.order}")
    cyclic = {g.closure([a]) for a in range(g.order)}
    found = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        new = set()
        for h in frontier:
            for c in cyclic:
                if c <= h:
                    continue
                j = g.closure(h | c)
                if j not in found:
                    new.add(j)
        found |= new
        frontier = new
    return sorted(found, key=lambda h: (len(h), sorted(h)))


def normality_witness(g: FiniteGroup, h: Subgroup) -> tuple[int, int] | None:
    """(x, y) with y in h and x y x^-1 not in h, or None if h is normal."""
    for x in range(g.order):
        for y in sorted(h):
            if g.conj(x, y) not in h:
                return (x, y)
    return None


def is_normal(g: FiniteGroup, h: Subgroup) -> bool:
    return normality_witness(g, h) is None


def cosets(g: FiniteGroup, n: Subgroup) -> list[frozenset]:
    """Left cosets x*n, the identity coset first, then by smallest element."""
    seen: set[int] = set()
    out = []
    for x in [g.identity] + list(range(g.order)):
        if x in seen:
            continue
        c = frozenset(g.table[x][y] for y in n)
        seen |= c
        out.append(c)
    return out


def quotient(g: FiniteGroup, n: Subgroup) -> tuple[AbstractGroup, GroupHom]:
    """The quotient group g/n and the projection homomorphism."""
    w = normality_witness(g, n)
    if w is not None:
        x, y = w
        raise NotNormalError(f"subgroup is not normal: conjugating {y} by {x} leaves it", w)
    cs = cosets(g, n)
    which = [0] * g.order
    for k, c in enumerate(cs):
        for x in c:
            which[x] = k
    reps = [min(c) for c in cs]
    table = [[which[g.table[a][b]] for b in reps] for a in reps]
    q = AbstractGroup(table, labels=[f"{r}N" for r in reps])
    return q, GroupHom(g, q, which)


def find_complement(g: FiniteGroup, n: Subgroup, candidates: Sequence[Subgroup] | None = None
                    ) -> Subgroup | None:
    """A subgroup h with h & n trivial and |h||n| = |g|, or None after exhausting all."""
    return complement_search(g, n, candidates)[0]


def complement_search(g: FiniteGroup, n: Subgroup, candidates: Sequence[Subgroup] | None = None
                      ) -> tuple[Subgroup | None, int]:
    """Like :func:`find_complement`, also returning how many subgroups were examined."""
    if not is_normal(g, n):
        raise NotNormalError("complement search needs a normal subgroup", normality_witness(g, n))
    want = g.order // len(n)
    if candidates is None:
        candidates = subgroups(g, cap=max(DEFAULT_CAP, g.order))
    examined = 0
    for h in candidates:
        examined += 1
        if len(h) == want and len(h & n) == 1:
            return h, examined
    return None, examined


def section_from_complement(q: GroupHom, h: Subgroup) -> GroupHom:
    """The section of q whose image is the complement h."""
    images = [None] * q.target.order
    for x in sorted(h):
        images[q(x)] = x
    return GroupHom(q.target, q.source, images)


def find_sections(q: GroupHom, n: Subgroup | None = None, cap: int = DEFAULT_SECTION_CAP
                  ) -> list[GroupHom]:
    """Every homomorphic section s of the surjection q (q(s(x)) = x).

    Exhaustive over the choice of one representative per fibre of q.
    """
    if not q.is_surjective():
        raise ValueError("sections need a surjective homomorphism")
    if n is None:
        n = q.kernel()
    elif frozenset(n) != q.kernel():
        raise ValueError("given subgroup is not the kernel of q")
    quot, g = q.target, q.source
    fibres = [[] for _ in range(quot.order)]
    for x in range(g.order):
        fibres[q(x)].append(x)
    total = len(n) ** quot.order
    if total > cap:
        raise CapExceededError(f"section search needs {total} candidates, cap is {cap}")
    out = []
    for choice in product(*fibres):
        s = GroupHom(quot, g, choice, validate=False)
        if s.violation() is None:
            out.append(s)
    return out


def homomorphisms(src: FiniteGroup, dst: FiniteGroup, cap: int = DEFAULT_SECTION_CAP
                  ) -> list[GroupHom]:
    """All homomorphisms src -> dst, by assigning images to a generating set."""
    gens = src.generating_set()
    options = [[y for y in range(dst.order) if src.element_orders[x] % dst.element_orders[y] == 0]
               for x in gens]
    total = 1
    for o in options:
        total *= len(o)
    if total > cap:
        raise CapExceededError(f"homomorphism search needs {total} candidates, cap is {cap}")
    out = []
    for choice in product(*options):
        images = _extend(src, dst, gens, choice)
        if images is not None:
            h = GroupHom(src, dst, images, validate=False)
            if h.violation() is None:
                out.append(h)
    return out


def _extend(src: FiniteGroup, dst: FiniteGroup, gens, targets) -> list[int] | None:
    images: list[int | None] = [None] * src.order
    images[src.identity] = dst.identity
    queue = deque([src.identity])
    while queue:
        x = queue.popleft()
        for s, t in zip(gens, targets):
            y = src.table[x][s]
            v = dst.table[images[x]][t]
            if images[y] is None:
                images[y] = v
                queue.append(y)
            elif images[y] != v:
                return None
    return images


def isomorphism(a: FiniteGroup, b: FiniteGroup) -> GroupHom | None:
    """Some isomorphism a -> b, or None (brute force over generator images)."""
    if a.order != b.order or sorted(a.element_orders) != sorted(b.element_orders):
        return None
    gens = a.generating_set()
    options = [[y for y in range(b.order) if b.element_orders[y] == a.element_orders[x]]
               for x in gens]
    for choice in product(*options):
        if len(set(choice)) != len(choice):
            continue
        images = _extend(a, b, gens, choice)
        if images is None or len(set(images)) != a.order:
            continue
        h = GroupHom(a, b, images, validate=False)
        if h.violation() is None:
            return h
    return None


def direct_product(g: MatrixGroup, h: MatrixGroup) -> MatrixGroup:
    """Block-diagonal realization of g x h acting on the direct sum."""
    pairs = [(a, b) for a in range(g.order) for b in range(h.order)]
    order = g.elements[0].order * h.elements[0].order
    order //= _gcd(g.elements[0].order, h.elements[0].order)
    mats = [block_diag(g.elements[a], h.elements[b]).lift(order) for a, b in pairs]
    keys = [m.key() for m in mats]
    perm = sorted(range(len(pairs)), key=lambda k: keys[k])
    pos = {pairs[old]: new for new, old in enumerate(perm)}
    table = []
    for old in perm:
        a1, b1 = pairs[old]
        table.append([pos[(g.table[a1][pairs[o2][0]], h.table[b1][pairs[o2][1]])] for o2 in perm])
    return MatrixGroup(g.dim + h.dim, [mats[k] for k in perm], table,
                       components=[pairs[k] for k in perm])


def diagonal_subgroup(p: MatrixGroup) -> Subgroup:
    """{(x, x)} inside a product group p = g x g built by :func:`direct_product`."""
    if p.components is None:
        raise ValueError("group was not built as a direct product")
    return frozenset(i for i, (a, b) in enumerate(p.components) if a == b)

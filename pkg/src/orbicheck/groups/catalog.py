"""Names for the groups of order at most 16.

Each catalog entry is built from an explicit multiplication rule; a group is
named by brute-force isomorphism against the entries of its order.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import Callable, Hashable

from .core import AbstractGroup, FiniteGroup, isomorphism

MAX_CATALOG_ORDER = 16


def _from_rule(elements: list[Hashable], mul: Callable, identity: Hashable) -> AbstractGroup:
    elements = [identity] + [x for x in elements if x != identity]
    pos = {x: i for i, x in enumerate(elements)}
    table = [[pos[mul(a, b)] for b in elements] for a in elements]
    return AbstractGroup(table, labels=[str(x) for x in elements])


def cyclic(n: int) -> AbstractGroup:
    return _from_rule(list(range(n)), lambda a, b: (a + b) % n, 0)


def abelian(*ns: int) -> AbstractGroup:
    elems = list(product(*(range(n) for n in ns)))
    return _from_rule(elems, lambda a, b: tuple((x + y) % n for x, y, n in zip(a, b, ns)),
                      (0,) * len(ns))


def metacyclic(m: int, n: int, r: int) -> AbstractGroup:
    """Z_m x| Z_n where the generator of Z_n acts on Z_m by multiplication by r."""
    def mul(a, b):
        return ((a[0] + pow(r, a[1], m) * b[0]) % m, (a[1] + b[1]) % n)
    return _from_rule(list(product(range(m), range(n))), mul, (0, 0))


def dihedral(n: int) -> AbstractGroup:
    """Symmetries of the n-gon, order 2n."""
    return metacyclic(n, 2, n - 1)


def dicyclic(n: int) -> AbstractGroup:
    """<a, x | a^2n, x^2 = a^n, x a x^-1 = a^-1>, order 4n."""
    m = 2 * n

    def mul(p, q):
        (k, e), (l, f) = p, q
        s = -1 if e else 1
        return ((k + s * l + (n if e and f else 0)) % m, e ^ f)
    return _from_rule(list(product(range(m), range(2))), mul, (0, 0))


def pauli() -> AbstractGroup:
    """Central product Z4 o D4: elements i^a X^b Z^c with ZX = -XZ."""
    def mul(p, q):
        a, b, c = p
        a2, b2, c2 = q
        return ((a + a2 + 2 * c * b2) % 4, (b + b2) % 2, (c + c2) % 2)
    return _from_rule(list(product(range(4), range(2), range(2))), mul, (0, 0, 0))


def klein_by_z4() -> AbstractGroup:
    """(Z2 x Z2) x| Z4 with the generator swapping the two factors."""
    def act(k, v):
        return (v[1], v[0]) if k % 2 else v

    def mul(p, q):
        (v, k), (w, l) = p, q
        w2 = act(k, w)
        return (((v[0] + w2[0]) % 2, (v[1] + w2[1]) % 2), (k + l) % 4)
    elems = [((a, b), k) for a in range(2) for b in range(2) for k in range(4)]
    return _from_rule(elems, mul, ((0, 0), 0))


def alternating4() -> AbstractGroup:
    def parity(p):
        inv = sum(1 for i in range(4) for j in range(i) if p[j] > p[i])
        return inv % 2
    elems = [p for p in permutations(range(4)) if parity(p) == 0]
    return _from_rule(elems, lambda a, b: tuple(a[b[i]] for i in range(4)), (0, 1, 2, 3))


def direct(g: AbstractGroup, h: AbstractGroup) -> AbstractGroup:
    elems = list(product(range(g.order), range(h.order)))
    return _from_rule(elems, lambda a, b: (g.table[a[0]][b[0]], h.table[a[1]][b[1]]), (0, 0))


def _builders() -> dict[int, list[tuple[str, Callable[[], AbstractGroup]]]]:
    return {
        1: [("1", lambda: cyclic(1))],
        2: [("Z2", lambda: cyclic(2))],
        3: [("Z3", lambda: cyclic(3))],
        4: [("Z4", lambda: cyclic(4)), ("Z2xZ2", lambda: abelian(2, 2))],
        5: [("Z5", lambda: cyclic(5))],
        6: [("Z6", lambda: cyclic(6)), ("S3", lambda: dihedral(3))],
        7: [("Z7", lambda: cyclic(7))],
        8: [("Z8", lambda: cyclic(8)), ("Z4xZ2", lambda: abelian(4, 2)),
            ("Z2xZ2xZ2", lambda: abelian(2, 2, 2)), ("D4", lambda: dihedral(4)),
            ("Q8", lambda: dicyclic(2))],
        9: [("Z9", lambda: cyclic(9)), ("Z3xZ3", lambda: abelian(3, 3))],
        10: [("Z10", lambda: cyclic(10)), ("D5", lambda: dihedral(5))],
        11: [("Z11", lambda: cyclic(11))],
        12: [("Z12", lambda: cyclic(12)), ("Z6xZ2", lambda: abelian(6, 2)),
             ("A4", alternating4), ("D6", lambda: dihedral(6)), ("Dic3", lambda: dicyclic(3))],
        13: [("Z13", lambda: cyclic(13))],
        14: [("Z14", lambda: cyclic(14)), ("D7", lambda: dihedral(7))],
        15: [("Z15", lambda: cyclic(15))],
        16: [("Z16", lambda: cyclic(16)), ("Z8xZ2", lambda: abelian(8, 2)),
             ("Z4xZ4", lambda: abelian(4, 4)), ("Z4xZ2xZ2", lambda: abelian(4, 2, 2)),
             ("Z2xZ2xZ2xZ2", lambda: abelian(2, 2, 2, 2)), ("D8", lambda: dihedral(8)),
             ("SD16", lambda: metacyclic(8, 2, 3)), ("Q16", lambda: dicyclic(4)),
             ("M16", lambda: metacyclic(8, 2, 5)), ("Z2xD4", lambda: direct(cyclic(2), dihedral(4))),
             ("Z2xQ8", lambda: direct(cyclic(2), dicyclic(2))), ("Z4oD4", pauli),
             ("Z4:Z4", lambda: metacyclic(4, 4, 3)), ("(Z2xZ2):Z4", klein_by_z4)],
    }


@lru_cache(maxsize=None)
def catalog(order: int) -> tuple[tuple[str, AbstractGroup], ...]:
    """Named representatives of every isomorphism class of the given order."""
    return tuple((name, build()) for name, build in _builders().get(order, []))


def _signature(g: FiniteGroup) -> tuple:
    return (g.order, tuple(sorted(g.element_orders)), g.is_abelian(), len(g.center()))


def iso_classify(g: FiniteGroup) -> str:
    """Catalog name of g, or ``unknown(order=n)`` outside the catalog."""
    if g.order > MAX_CATALOG_ORDER:
        return f"unknown(order={g.order})"
    sig = _signature(g)
    for name, rep in catalog(g.order):
        if _signature(rep) == sig and isomorphism(g, rep) is not None:
            return name
    return f"unknown(order={g.order})"

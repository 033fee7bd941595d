"""Full, saturated and split deciders, and the embeddability verdict.

Saturation on a linear subchart V.  For an ambient element g, the points of
V that g sends back into V form the subspace W = V & g^-1 V.  Saturation asks
that every y in W satisfy g y = l y for some l in lambda, i.e. that W is the
union of the subspaces {y in W : (g - l) y = 0}.  A vector space over an
infinite field is never a finite union of proper subspaces, so this holds iff
one single l agrees with g on all of W.

On a graph v = p(u) the same reasoning applies with polynomial identities in
the curve parameter t: if g maps the graph onto itself a single l must agree
with g identically; otherwise the return points are the roots of a nonzero
polynomial f, and each must be a root of some agreement polynomial g_l.
Only real roots are points of the graph, so the part of rad(f) left over
after removing the common roots with the g_l must have no real root (a
Sturm count).  When every root of f is real this is the plain divisibility
rad(f) | rad(g_1 ... g_k).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import InternalConsistencyError
from ..exactnum import (
    ZERO,
    CycMatrix,
    RatPoly,
    agree_on,
    apply,
    count_real_roots,
    intersect,
    poly_gcd,
    squarefree_part,
)
from ..groups import (
    GroupHom,
    complement_search,
    find_sections,
    section_from_complement,
    subgroups,
)
from .charts import (
    IsotropyData,
    LinearSubspace,
    Subchart,
    graph_agreement,
    graph_image,
    graph_return_poly,
    isotropy_data,
)


@dataclass(frozen=True)
class SaturationWitness:
    """Ambient element ``gamma`` sends ``point`` back into the shape, off its lambda-orbit.

    ``point`` is None when the offending parameters are irrational real
    roots of ``locus`` (graph subcharts only).
    """

    gamma: int
    point: tuple | None
    locus: RatPoly | None = None

    def describe(self, sub: Subchart) -> str:
        m = sub.chart.group.elements[self.gamma]
        if self.point is not None:
            y = "(" + ", ".join(str(x) for x in self.point) + ")"
        else:
            y = f"the graph point at a real root of {self.locus}"
        return f"gamma={m} maps y={y} into the subchart outside its lambda-orbit"


@dataclass(frozen=True)
class SaturationResult:
    saturated: bool
    witness: SaturationWitness | None = None

    def __bool__(self):
        return self.saturated


@dataclass(frozen=True)
class SplitResult:
    """Split verdict with a section, or the number of subgroups exhausted."""

    split: bool
    section: GroupHom | None
    complement: frozenset | None
    examined: int

    def __bool__(self):
        return self.split


def is_full(sub: Subchart) -> bool:
    return sub.lam == frozenset(range(sub.chart.group.order))


# ---------------------------------------------------------------- saturation

def is_saturated(sub: Subchart) -> SaturationResult:
    if isinstance(sub.shape, LinearSubspace):
        return _saturated_linear(sub)
    return _saturated_graph(sub)


def _saturated_linear(sub: Subchart) -> SaturationResult:
    g = sub.chart.group
    v = sub.shape.space
    lam = sorted(sub.lam)
    for k in range(g.order):
        if k in sub.lam:
            continue
        w = intersect(v, apply(g.elements[g.inv(k)], v))
        if w.is_zero():
            continue
        gk = g.elements[k]
        if any(agree_on(gk, g.elements[l], w) for l in lam):
            continue
        return SaturationResult(False, SaturationWitness(k, _off_orbit_point(sub, k, w)))
    return SaturationResult(True)


def _off_orbit_point(sub: Subchart, k: int, w) -> tuple:
    """Smallest convenient y in w with g_k y outside the lambda-orbit of y.

    Tries basis vectors, then points on the moment curve sum c^i b_i: a
    proper subspace meets that curve in fewer than dim(w) points, so the
    search ends within |lambda| * dim(w) + 1 steps.
    """
    g = sub.chart.group
    gk = g.elements[k]
    lams = [g.elements[l] for l in sorted(sub.lam)]

    def off(y):
        gy = gk @ y
        return all(m @ y != gy for m in lams)

    for b in w.basis:
        if off(b):
            return b
    c = 1
    while True:
        c += 1
        y = tuple(sum((b[j] * c ** i for i, b in enumerate(w.basis)), ZERO)
                  for j in range(w.ambient_dim))
        if off(y):
            return y


def _saturated_graph(sub: Subchart) -> SaturationResult:
    g = sub.chart.group
    p = sub.shape.poly
    lam = sorted(sub.lam)
    for k in range(g.order):
        if k in sub.lam:
            continue
        gk = g.elements[k]
        f = graph_return_poly(gk, p)
        agreements = []
        for l in lam:
            dx, dy = graph_agreement(gk, g.elements[l], p)
            agreements.append(RatPoly() if dx.is_zero() and dy.is_zero() else poly_gcd(dx, dy))
        if f.is_zero():
            # g maps the whole graph onto itself: some lambda must match identically
            if any(a.is_zero() for a in agreements):
                continue
            t = _avoid_roots(agreements)
            return SaturationResult(False, SaturationWitness(k, (t, p(t))))
        if f.degree == 0:
            continue
        if any(a.is_zero() for a in agreements):
            continue
        covered = RatPoly.const(1)
        for a in agreements:
            covered = covered * a
        rad_f = squarefree_part(f)
        if rad_f.divides(squarefree_part(covered)):
            continue
        bad = rad_f // poly_gcd(rad_f, covered)
        if count_real_roots(bad) == 0:
            continue  # the uncovered return parameters are all non-real
        roots = bad.rational_roots()
        if roots:
            t = roots[0]
            return SaturationResult(False, SaturationWitness(k, (t, p(t)), bad))
        return SaturationResult(False, SaturationWitness(k, None, bad))
    return SaturationResult(True)


def _avoid_roots(polys: list[RatPoly]) -> Fraction:
    t = Fraction(1)
    while any(not a.is_zero() and a(t) == 0 for a in polys):
        t += 1
    return t


# ---------------------------------------------------------------- split

def is_split(sub: Subchart, iso: IsotropyData | None = None) -> SplitResult:
    """Split iff omega has a complement in lambda; the section comes from it."""
    iso = iso or isotropy_data(sub)
    lam_g = iso.lam_group
    h, examined = complement_search(lam_g, iso.omega_local, subgroups(lam_g))
    if h is None:
        return SplitResult(False, None, None, examined)
    section = section_from_complement(iso.projection, h)
    return SplitResult(True, section, frozenset(iso.lam_index[i] for i in h), examined)


def split_by_sections(iso: IsotropyData) -> list[GroupHom]:
    """Every section of lambda -> gamma_p (independent route to the split verdict)."""
    return find_sections(iso.projection, iso.omega_local)


# ---------------------------------------------------------------- verdicts

@dataclass
class EmbeddingData:
    """Chart-local data of a complete embedding realizing the subchart.

    ``theta`` maps gamma_p into the chart group; ``lift`` is the inclusion of
    the subchart, as a basis-column matrix (linear) or the parametrization
    t -> (t, p(t)) (graph).
    """

    theta: GroupHom
    lift: CycMatrix | tuple[RatPoly, RatPoly]
    section: GroupHom


@dataclass
class Verdict:
    is_suborbifold: bool
    full: bool
    saturation: SaturationResult
    splitting: SplitResult
    isotropy: IsotropyData
    embedding: EmbeddingData | None = None

    def __post_init__(self):
        if self.full and not self.saturated:
            raise InternalConsistencyError("full subchart reported as not saturated")
        if self.embeddable_completely and self.embedding is None:
            raise InternalConsistencyError("completely embeddable verdict without embedding data")
        o = self.isotropy.orders
        if o["lambda"] != o["omega"] * o["gamma_p"]:
            raise InternalConsistencyError("|lambda| != |omega| * |gamma_p|")

    @property
    def saturated(self) -> bool:
        return self.saturation.saturated

    @property
    def split(self) -> bool:
        return self.splitting.split

    @property
    def embeddable_topologically(self) -> bool:
        return self.saturated

    @property
    def embeddable_completely(self) -> bool:
        return self.saturated and self.split


def build_embedding(sub: Subchart, section: GroupHom, iso: IsotropyData | None = None) -> EmbeddingData:
    """theta = inclusion o section, checked for equivariance and injectivity."""
    iso = iso or isotropy_data(sub)
    g = sub.chart.group
    images = [iso.lam_index[section(x)] for x in range(iso.gamma_p.order)]
    theta = GroupHom(iso.gamma_p, g, images)
    if not theta.is_injective():
        raise InternalConsistencyError("theta is not injective")
    # theta(q(l)) must act on the subchart exactly like l
    for local, l in enumerate(iso.lam_index):
        t = g.elements[theta(iso.projection(local))]
        m = g.elements[l]
        if isinstance(sub.shape, LinearSubspace):
            ok = agree_on(t, m, sub.shape.space)
        else:
            ok = graph_image(t, sub.shape.poly) == graph_image(m, sub.shape.poly)
        if not ok:
            raise InternalConsistencyError(f"inclusion is not theta-equivariant at {m}")
    if isinstance(sub.shape, LinearSubspace):
        lift = sub.shape.space.basis_matrix()
    else:
        lift = (RatPoly.t(), sub.shape.poly)
    return EmbeddingData(theta, lift, section)


def embeddability(sub: Subchart) -> Verdict:
    iso = isotropy_data(sub)
    full = is_full(sub)
    sat = is_saturated(sub)
    spl = is_split(sub, iso)
    emb = build_embedding(sub, spl.section, iso) if sat.saturated and spl.split else None
    return Verdict(True, full, sat, spl, iso, emb)

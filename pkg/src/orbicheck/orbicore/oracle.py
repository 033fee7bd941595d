"""Randomized check of saturation straight from its definition.

For sampled points y of the subchart, the ambient orbit of y is computed in
full, intersected with the subchart by exact membership, and compared with
the lambda-orbit of y.

Uniform samples of V almost never land where another ambient element maps
them back into V, so points are also drawn from each return locus
V & g^-1 V (linear) and from the rational return parameters (graphs).
Irrational return parameters on a graph are located by sign changes of the
return function along a grid and bisected in exact rationals; there the
lambda-orbit test uses a tolerance, since the point itself is approximate.
"""

from __future__ import annotations

import random
from fractions import Fraction

from ..exactnum import ZERO, Subspace, apply, intersect, member
from .charts import LinearSubspace, Subchart, graph_return_poly, rational_entries


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 5))


def _random_point(space: Subspace, rng: random.Random) -> tuple:
    coeffs = [_random_rational(rng) for _ in space.basis]
    return tuple(sum((c * b[j] for c, b in zip(coeffs, space.basis)), ZERO)
                 for j in range(space.ambient_dim))


def _linear_trial_points(sub: Subchart, trials: int, rng: random.Random) -> list[tuple]:
    g = sub.chart.group
    v = sub.shape.space
    loci = [v]
    for k in range(g.order):
        w = intersect(v, apply(g.elements[g.inv(k)], v))
        if not w.is_zero() and w not in loci:
            loci.append(w)
    points = []
    for i in range(trials):
        points.append(_random_point(loci[i % len(loci)], rng))
    return points


def _orbit_check_linear(sub: Subchart, y: tuple) -> int | None:
    g = sub.chart.group
    v = sub.shape.space
    lam_orbit = {tuple(g.elements[l] @ y) for l in sub.lam}
    for k, m in enumerate(g.elements):
        z = tuple(m @ y)
        if member(z, v) and z not in lam_orbit:
            return k
    return None


def _graph_trial_points(sub: Subchart, trials: int, rng: random.Random) -> list[Fraction]:
    g = sub.chart.group
    p = sub.shape.poly
    special = []
    for m in g.elements:
        f = graph_return_poly(m, p)
        if f and f.degree > 0:
            special.extend(r for r in f.rational_roots() if r not in special)
    points = list(special)
    while len(points) < max(trials, len(special)):
        points.append(_random_rational(rng))
    return points


def _orbit_check_graph(sub: Subchart, t: Fraction) -> int | None:
    g = sub.chart.group
    p = sub.shape.poly
    y = (t, p(t))
    lam_orbit = {_act(g.elements[l], y) for l in sub.lam}
    for k, m in enumerate(g.elements):
        z = _act(m, y)
        if z[1] == p(z[0]) and z not in lam_orbit:
            return k
    return None


GRID = [Fraction(k, 8) for k in range(-80, 81)]
BISECTIONS = 120
TOLERANCE = Fraction(1, 2 ** 40)


def _act(m, y):
    (a, b), (c, d) = rational_entries(m)
    return (a * y[0] + b * y[1], c * y[0] + d * y[1])


def _bracketed_returns(sub: Subchart, extra: list[Fraction]) -> tuple[int, tuple] | None:
    """First (gamma index, approximate point) at a sign change of a return function."""
    g = sub.chart.group
    p = sub.shape.poly
    ts = sorted(set(GRID) | set(extra))
    lams = [g.elements[l] for l in sorted(sub.lam)]
    for k, m in enumerate(g.elements):
        if k in sub.lam:
            continue

        def h(t, m=m):
            x, y = _act(m, (t, p(t)))
            return p(x) - y

        values = [h(t) for t in ts]
        for lo, hi, vlo, vhi in zip(ts, ts[1:], values, values[1:]):
            if vlo * vhi >= 0:
                continue
            for _ in range(BISECTIONS):
                mid = (lo + hi) / 2
                vm = h(mid)
                if vm == 0:
                    lo = hi = mid
                    break
                if (vm > 0) == (vlo > 0):
                    lo, vlo = mid, vm
                else:
                    hi = mid
            t = (lo + hi) / 2
            y = (t, p(t))
            gy = _act(m, y)
            if all(max(abs(u - v) for u, v in zip(_act(l, y), gy)) > TOLERANCE for l in lams):
                return k, y
    return None


def sampling_oracle(sub: Subchart, trials: int = 100, seed: int = 0
                    ) -> tuple[bool, tuple[int, tuple] | None]:
    """(saturated?, first counterexample (gamma index, point) or None)."""
    rng = random.Random(seed)
    if isinstance(sub.shape, LinearSubspace):
        for y in _linear_trial_points(sub, trials, rng):
            k = _orbit_check_linear(sub, y)
            if k is not None:
                return False, (k, y)
        return True, None
    p = sub.shape.poly
    points = _graph_trial_points(sub, trials, rng)
    for t in points:
        k = _orbit_check_graph(sub, t)
        if k is not None:
            return False, (k, (t, p(t)))
    found = _bracketed_returns(sub, points)
    if found is not None:
        return False, found
    return True, None

"""Linear orbifold charts, subcharts and their isotropy data."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Union

from ..errors import ShapeError
from ..exactnum import CycMatrix, RatPoly, Subspace, apply, restriction_is_identity, vector
from ..groups import AbstractGroup, GroupHom, MatrixGroup, iso_classify, quotient


@dataclass(frozen=True, eq=False)
class Chart:
    """A finite matrix group acting linearly (hence fixing the origin) on K^dim."""

    group: MatrixGroup
    name: str = ""

    def __post_init__(self):
        ids = [i for i, m in enumerate(self.group.elements) if m.is_identity()]
        if len(ids) != 1:
            raise ShapeError(f"action is not effective: {len(ids)} elements act as the identity")
        for m in self.group.elements:
            if m.shape != (self.group.dim, self.group.dim):
                raise ShapeError(f"element of shape {m.shape} in a chart of dimension {self.dim}")

    @property
    def dim(self) -> int:
        return self.group.dim

    def __repr__(self):
        return f"Chart({self.name or '?'}, dim={self.dim}, order={self.group.order})"


@dataclass(frozen=True)
class LinearSubspace:
    space: Subspace

    def __str__(self):
        return str(self.space)


@dataclass(frozen=True)
class Graph2D:
    """The curve v = p(u) in a 2-dimensional chart; p(0) = 0."""

    poly: RatPoly

    def __post_init__(self):
        if self.poly(Fraction(0)) != 0:
            raise ShapeError(f"graph of {self.poly} does not pass through the origin")

    def point(self, t) -> tuple:
        return (t, self.poly(t))

    def __str__(self):
        return f"graph(v = {self.poly})"


@dataclass(frozen=True)
class Ray:
    """Half-line through ``direction``; only meaningful as a recognition target."""

    direction: tuple

    def __str__(self):
        return "ray(" + ", ".join(str(x) for x in self.direction) + ")"


Shape = Union[LinearSubspace, Graph2D]


# ---------------------------------------------------------------- graph helpers

def rational_entries(m: CycMatrix) -> tuple[tuple[Fraction, ...], ...]:
    if not all(x.is_rational() for row in m.rows for x in row):
        raise ShapeError(f"graph subcharts need rational matrices, got {m}")
    return tuple(tuple(x.to_rational() for x in row) for row in m.rows)


def graph_image(m: CycMatrix, p: RatPoly) -> tuple[RatPoly, RatPoly]:
    """Coordinates of m applied to the graph point (t, p(t)), as polynomials in t."""
    (a, b), (c, d) = rational_entries(m)
    t = RatPoly.t()
    return (t * a + p * b, t * c + p * d)


def graph_return_poly(m: CycMatrix, p: RatPoly) -> RatPoly:
    """Zero exactly at the parameters t whose graph point m maps back onto the graph."""
    x, y = graph_image(m, p)
    return p.compose(x) - y


def graph_agreement(a: CycMatrix, b: CycMatrix, p: RatPoly) -> tuple[RatPoly, RatPoly]:
    """Coordinate differences of a and b on the graph point (t, p(t))."""
    xa, ya = graph_image(a, p)
    xb, yb = graph_image(b, p)
    return (xa - xb, ya - yb)


# ---------------------------------------------------------------- invariance

def maps_shape_onto_itself(m: CycMatrix, shape: Shape) -> bool:
    if isinstance(shape, LinearSubspace):
        return apply(m, shape.space) == shape.space
    return graph_return_poly(m, shape.poly).is_zero()


def fixes_shape_pointwise(m: CycMatrix, shape: Shape) -> bool:
    if isinstance(shape, LinearSubspace):
        return restriction_is_identity(m, shape.space)
    x, y = graph_image(m, shape.poly)
    return x == RatPoly.t() and y == shape.poly


def setwise_stabilizer(chart: Chart, shape: Shape) -> frozenset:
    """Indices of the chart elements mapping the shape onto itself."""
    _check_shape(chart, shape)
    return frozenset(i for i, m in enumerate(chart.group.elements) if maps_shape_onto_itself(m, shape))


def _check_shape(chart: Chart, shape: Shape) -> None:
    if isinstance(shape, LinearSubspace):
        if shape.space.ambient_dim != chart.dim:
            raise ShapeError(f"subspace of ambient dimension {shape.space.ambient_dim} "
                             f"in a chart of dimension {chart.dim}")
    elif isinstance(shape, Graph2D):
        if chart.dim != 2:
            raise ShapeError(f"graph subcharts need a 2-dimensional chart, got {chart.dim}")
        for m in chart.group.elements:
            rational_entries(m)
    else:
        raise ShapeError(f"unsupported subchart shape {shape!r}")


# ---------------------------------------------------------------- subcharts

@dataclass(eq=False)
class Subchart:
    """An invariant shape in a chart together with the subgroup preserving it."""

    chart: Chart
    shape: Shape
    lam: frozenset
    name: str = ""

    def __post_init__(self):
        _check_shape(self.chart, self.shape)
        g = self.chart.group
        self.lam = frozenset(self.lam)
        if not g.is_subgroup(self.lam):
            raise ShapeError("lambda is not a subgroup of the chart group")
        for i in sorted(self.lam):
            if not maps_shape_onto_itself(g.elements[i], self.shape):
                raise ShapeError(f"element {g.elements[i]} of lambda does not preserve {self.shape}")

    @classmethod
    def build(cls, chart: Chart, shape: Shape, lam: str | Iterable = "auto", name: str = "") -> Subchart:
        """``lam`` is "auto" (the setwise stabilizer), "all", or generators as indices or matrices."""
        g = chart.group
        if isinstance(lam, str):
            if lam == "auto":
                return cls(chart, shape, setwise_stabilizer(chart, shape), name)
            if lam == "all":
                return cls(chart, shape, frozenset(range(g.order)), name)
            raise ShapeError(f"unknown lambda specification {lam!r}")
        gens = []
        for x in lam:
            if isinstance(x, CycMatrix):
                if x not in g:
                    raise ShapeError(f"lambda generator {x} is not in the chart group")
                gens.append(g.index(x))
            else:
                gens.append(int(x))
        return cls(chart, shape, g.closure(gens), name)

    @property
    def dim(self) -> int:
        if isinstance(self.shape, LinearSubspace):
            return self.shape.space.dim
        return 1

    def __repr__(self):
        return f"Subchart({self.name or '?'}, {self.shape}, |lambda|={len(self.lam)})"


@dataclass
class IsotropyData:
    """The exact sequence 1 -> omega -> lambda -> gamma_p -> 1 of a subchart.

    ``omega`` and ``lam`` are index sets in the chart group.  ``lam_group`` is
    lambda as a group of its own, ``lam_index`` maps its indices to chart
    indices, and ``projection`` is the quotient map lam_group -> gamma_p.
    """

    omega: frozenset
    lam: frozenset
    lam_group: MatrixGroup
    lam_index: list[int]
    omega_local: frozenset
    gamma_p: AbstractGroup
    projection: GroupHom
    names: dict[str, str] = field(default_factory=dict)

    @property
    def orders(self) -> dict[str, int]:
        return {"omega": len(self.omega), "lambda": len(self.lam), "gamma_p": self.gamma_p.order}

    def sequence(self) -> str:
        n = self.names
        return f"1 -> {n['omega']} -> {n['lambda']} -> {n['gamma_p']} -> 1"


def isotropy_data(sub: Subchart) -> IsotropyData:
    g = sub.chart.group
    for i in sorted(sub.lam):
        if not maps_shape_onto_itself(g.elements[i], sub.shape):
            raise ShapeError(f"lambda element {g.elements[i]} does not preserve {sub.shape}")
    omega = frozenset(i for i in sub.lam if fixes_shape_pointwise(g.elements[i], sub.shape))
    lam_group, lam_index = g.subgroup_group(sub.lam)
    local = {c: k for k, c in enumerate(lam_index)}
    omega_local = frozenset(local[i] for i in omega)
    gamma_p, q = quotient(lam_group, omega_local)
    names = {"omega": iso_classify(lam_group.subgroup_group(omega_local)[0]),
             "lambda": iso_classify(lam_group),
             "gamma_p": iso_classify(gamma_p)}
    return IsotropyData(omega, sub.lam, lam_group, lam_index, omega_local, gamma_p, q, names)


def span_shape(vectors, dim: int) -> LinearSubspace:
    return LinearSubspace(Subspace.span([vector(v) for v in vectors], dim))

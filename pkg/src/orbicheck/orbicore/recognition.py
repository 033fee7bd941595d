"""Search for subchart structures realizing a target set in a chart."""

from __future__ import annotations

from ..exactnum import Subspace, vector
from ..groups import subgroups
from .charts import (
    Chart,
    Graph2D,
    IsotropyData,
    LinearSubspace,
    Ray,
    Shape,
    Subchart,
    isotropy_data,
    setwise_stabilizer,
)
from .deciders import is_saturated


def recognize_suborbifold(chart: Chart, target: Shape | Ray, required_gamma_p: str | None = None
                          ) -> list[tuple[Subchart, IsotropyData]]:
    """Every (shape, lambda) presenting the target as a saturated subchart.

    A ray is lifted to the full line through it, and lambda must then contain
    an element reversing the line, so that the line modulo lambda is the
    half-line.  An empty result means the target is not a suborbifold with
    the requested intrinsic isotropy.
    """
    g = chart.group
    folding = None
    if isinstance(target, Ray):
        v = vector(target.direction)
        shape: Shape = LinearSubspace(Subspace.span([v], chart.dim))
        neg = tuple(-x for x in v)
        folding = frozenset(k for k, m in enumerate(g.elements) if tuple(m @ v) == neg)
    elif isinstance(target, (LinearSubspace, Graph2D)):
        shape = target
    else:
        raise TypeError(f"unsupported recognition target {target!r}")

    stab = setwise_stabilizer(chart, shape)
    stab_group, stab_index = g.subgroup_group(stab)
    out = []
    for h in subgroups(stab_group):
        lam = frozenset(stab_index[i] for i in h)
        if folding is not None and not (lam & folding):
            continue
        sub = Subchart(chart, shape, lam)
        if not is_saturated(sub):
            continue
        iso = isotropy_data(sub)
        if required_gamma_p is not None and iso.names["gamma_p"] != required_gamma_p:
            continue
        out.append((sub, iso))
    return out

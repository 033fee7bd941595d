"""Homomorphisms making a fixed linear chart map equivariant."""

from __future__ import annotations

from ..exactnum import CycMatrix
from ..groups import DEFAULT_SECTION_CAP, GroupHom, homomorphisms
from .charts import Chart


def enumerate_equivariant_homs(src: Chart, dst: Chart, lift: CycMatrix,
                               cap: int = DEFAULT_SECTION_CAP) -> list[GroupHom]:
    """All theta: src.group -> dst.group with theta(g) @ lift == lift @ g.

    ``lift`` is a dst.dim x src.dim injective matrix.  Every homomorphism is
    enumerated and then filtered; injectivity is left to the caller to read
    off each result.
    """
    if lift.shape != (dst.dim, src.dim):
        raise ValueError(f"lift of shape {lift.shape} between dimensions {src.dim} and {dst.dim}")
    if lift.rank() != src.dim:
        raise ValueError("lift is not injective")
    gs, gd = src.group, dst.group
    after = [lift @ m for m in gs.elements]
    out = []
    for theta in homomorphisms(gs, gd, cap=cap):
        if all(gd.elements[theta(k)] @ lift == after[k] for k in range(gs.order)):
            out.append(theta)
    return out

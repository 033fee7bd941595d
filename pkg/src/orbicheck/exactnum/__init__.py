"""Exact cyclotomic numbers, linear algebra over them, and rational polynomials."""

from .cyclotomic import ONE, ZERO, CycNum, cyclotomic_poly, euler_phi
from .linalg import (
    CycMatrix,
    DimensionError,
    Subspace,
    agree_on,
    apply,
    as_cyc,
    block_diag,
    intersect,
    kernel,
    member,
    restriction_is_identity,
    solve,
    vector,
)
from .poly import PolynomialError, RatPoly, count_real_roots, poly_gcd, squarefree_part


def cyc_arith(a: CycNum, b: CycNum, op: str) -> CycNum:
    """Binary field operation by name: add, sub, mul or div."""
    try:
        fn = {"add": CycNum.__add__, "sub": CycNum.__sub__,
              "mul": CycNum.__mul__, "div": CycNum.__truediv__}[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(as_cyc(a), as_cyc(b))


def rotation(k: int) -> CycMatrix:
    """2x2 rotation by 2*pi/k with exact entries.

    cos and sin are (z + 1/z)/2 and (z - 1/z)/(2i) with z = zeta(k), so the
    entries live in Q(zeta(lcm(k, 4))).
    """
    if k < 1:
        raise ValueError(f"rotation order must be positive, got {k}")
    z = CycNum.zeta(k)
    zi = z.inverse()
    c = (z + zi) / 2
    s = (z - zi) / (CycNum.zeta(4) * 2)
    return CycMatrix([[c, -s], [s, c]])


__all__ = [
    "ONE", "ZERO", "CycNum", "CycMatrix", "DimensionError", "PolynomialError", "RatPoly",
    "Subspace", "agree_on", "apply", "as_cyc", "block_diag", "count_real_roots", "cyc_arith",
    "cyclotomic_poly", "euler_phi", "intersect", "kernel", "member", "poly_gcd", "restriction_is_identity",
    "rotation", "solve", "squarefree_part", "vector",
]

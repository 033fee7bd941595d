"""Parser for the scalar, matrix and polynomial expressions used in scenario files.

Scalars: integers, ``p/q``, ``zeta(N)``, ``zeta(N)^k``, ``i`` (= zeta(4)),
combined with ``+ - * / ^`` and parentheses.  Matrix builders:

    rotation(k)            2x2 rotation by 2*pi/k
    reflection(axis[, n])  diagonal matrix negating coordinate ``axis`` (n defaults to 2)
    diag(a, b, ...)        diagonal matrix
    identity(n)
    permutation(p0, ...)   permutation matrix sending e_j to e_{p_j}
    blockdiag(A, B, ...)

Polynomials in the graph variable ``t`` use the same operators.
"""

from __future__ import annotations

import ast
from fractions import Fraction

from ..errors import ScenarioError
from ..exactnum import CycMatrix, CycNum, RatPoly, block_diag, rotation


def _reflection(axis, dim=2):
    axis, dim = _int(axis), _int(dim)
    if not 0 <= axis < dim:
        raise ValueError(f"reflection axis {axis} outside dimension {dim}")
    return CycMatrix.diag([-1 if j == axis else 1 for j in range(dim)])


def _permutation(*images):
    p = [_int(x) for x in images]
    n = len(p)
    if sorted(p) != list(range(n)):
        raise ValueError(f"{p} is not a permutation of 0..{n - 1}")
    return CycMatrix([[1 if p[j] == i else 0 for j in range(n)] for i in range(n)])


def _int(x) -> int:
    if isinstance(x, int) and not isinstance(x, bool):
        return x
    if isinstance(x, CycNum):
        q = x.to_rational()
        if q.denominator == 1:
            return int(q)
    raise ValueError(f"expected an integer, got {x}")


SCALAR_FUNCS = {"zeta": lambda n: CycNum.zeta(_int(n))}
MATRIX_FUNCS = {
    "rotation": lambda k: rotation(_int(k)),
    "reflection": _reflection,
    "diag": lambda *xs: CycMatrix.diag(list(xs)),
    "identity": lambda n: CycMatrix.identity(_int(n)),
    "permutation": _permutation,
    "blockdiag": lambda *ms: block_diag(*ms),
}


class _Evaluator:
    def __init__(self, names: dict, funcs: dict, const):
        self.names = names
        self.funcs = funcs
        self.const = const

    def eval(self, node):
        method = getattr(self, "_" + type(node).__name__, None)
        if method is None:
            raise ScenarioError(f"unsupported syntax {type(node).__name__}",
                                line=getattr(node, "lineno", None),
                                column=getattr(node, "col_offset", None))
        try:
            return method(node)
        except ScenarioError:
            raise
        except (ValueError, TypeError, ZeroDivisionError, ArithmeticError) as exc:
            raise ScenarioError(str(exc), line=node.lineno, column=node.col_offset) from None

    def _Expression(self, node):
        return self.eval(node.body)

    def _Constant(self, node):
        if isinstance(node.value, bool) or not isinstance(node.value, int):
            raise ScenarioError(f"unsupported literal {node.value!r}", line=node.lineno,
                                column=node.col_offset)
        return self.const(node.value)

    def _Name(self, node):
        if node.id not in self.names:
            raise ScenarioError(f"unknown name {node.id!r}", line=node.lineno, column=node.col_offset)
        return self.names[node.id]

    def _UnaryOp(self, node):
        v = self.eval(node.operand)
        if isinstance(node.op, ast.USub):
            return -v
        if isinstance(node.op, ast.UAdd):
            return v
        raise ScenarioError("unsupported unary operator", line=node.lineno, column=node.col_offset)

    def _BinOp(self, node):
        a, b = self.eval(node.left), self.eval(node.right)
        op = node.op
        if isinstance(op, ast.Add):
            return a + b
        if isinstance(op, ast.Sub):
            return a - b
        if isinstance(op, ast.Mult):
            if isinstance(a, CycMatrix) and isinstance(b, CycMatrix):
                return a @ b
            return a * b if not isinstance(b, CycMatrix) else b * a
        if isinstance(op, ast.Div):
            if isinstance(a, RatPoly):
                return a * (1 / _fraction(b))
            return a / b
        if isinstance(op, ast.Pow):
            return a ** _int(b) if not isinstance(b, RatPoly) else a ** _int(_poly_const(b))
        raise ScenarioError("unsupported operator", line=node.lineno, column=node.col_offset)

    def _Call(self, node):
        if not isinstance(node.func, ast.Name) or node.func.id not in self.funcs:
            name = getattr(node.func, "id", "?")
            raise ScenarioError(f"unknown function {name!r}", line=node.lineno, column=node.col_offset)
        if node.keywords:
            raise ScenarioError("keyword arguments are not supported", line=node.lineno,
                                column=node.col_offset)
        args = [self.eval(a) for a in node.args]
        return self.funcs[node.func.id](*args)


def _fraction(x) -> Fraction:
    if isinstance(x, RatPoly):
        return _poly_const(x).to_rational()
    return x.to_rational()


def _poly_const(p: RatPoly) -> CycNum:
    if p.degree > 0:
        raise ValueError(f"expected a constant, got {p}")
    return CycNum.rational(p.coeffs[0] if p.coeffs else 0)


def _parse(text: str):
    if not isinstance(text, str):
        text = str(text)
    try:
        return ast.parse(text.strip().replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ScenarioError(f"cannot parse expression {text!r}: {exc.msg}", line=exc.lineno,
                            column=exc.offset) from None


def parse_scalar(text) -> CycNum:
    """Exact value of a scalar expression such as ``(zeta(8)+zeta(8)^-1)/2``."""
    if isinstance(text, bool):
        raise ScenarioError(f"expected a scalar, got {text!r}")
    if isinstance(text, int):
        return CycNum.rational(text)
    v = _Evaluator({"i": CycNum.zeta(4)}, SCALAR_FUNCS, CycNum.rational).eval(_parse(text))
    if not isinstance(v, CycNum):
        raise ScenarioError(f"expression {text!r} is not a scalar")
    return v


def parse_matrix(spec) -> CycMatrix:
    """A matrix from a builder expression string or a list of rows of scalars."""
    if isinstance(spec, str):
        v = _Evaluator({"i": CycNum.zeta(4)}, {**SCALAR_FUNCS, **MATRIX_FUNCS},
                       CycNum.rational).eval(_parse(spec))
        if not isinstance(v, CycMatrix):
            raise ScenarioError(f"expression {spec!r} is not a matrix")
        return v
    if isinstance(spec, list) and spec and all(isinstance(r, list) for r in spec):
        try:
            return CycMatrix([[parse_scalar(x) for x in row] for row in spec])
        except ValueError as exc:
            raise ScenarioError(str(exc)) from None
    raise ScenarioError(f"cannot read a matrix from {spec!r}")


def parse_poly(text) -> RatPoly:
    """Rational polynomial in ``t``, e.g. ``t^2/2``; a coefficient list is also accepted."""
    if isinstance(text, list):
        return RatPoly(parse_scalar(c).to_rational() for c in text)
    v = _Evaluator({"t": RatPoly.t()}, {}, RatPoly.const).eval(_parse(str(text)))
    return v if isinstance(v, RatPoly) else RatPoly.const(v)

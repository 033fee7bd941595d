import cmath
import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbicheck.exactnum import (
    ONE,
    ZERO,
    CycMatrix,
    CycNum,
    PolynomialError,
    RatPoly,
    Subspace,
    apply,
    count_real_roots,
    cyc_arith,
    cyclotomic_poly,
    euler_phi,
    intersect,
    kernel,
    member,
    poly_gcd,
    rotation,
    solve,
    squarefree_part,
)

# complex embedding used as an independent floating-point cross-check
FLOAT_TOL = 1e-9

ORDERS = [1, 3, 4, 5, 6, 8, 12]


@st.composite
def cycnums(draw, orders=ORDERS):
    n = draw(st.sampled_from(orders))
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6),
                           min_size=n, max_size=n))
    return sum((c * CycNum.zeta(n, k) for k, c in enumerate(coeffs)), ZERO)


def close(a, b):
    return abs(complex(a) - complex(b)) < FLOAT_TOL


# ---------------------------------------------------------------- fixed values

def test_i_squared_is_minus_one():
    i = CycNum.zeta(4)
    assert cyc_arith(i, i, "mul") == -1


def test_zeta8_fourth_power():
    assert CycNum.zeta(8) ** 4 == -1


def test_sqrt2_from_zeta8():
    z = CycNum.zeta(8)
    assert (z + z ** -1) ** 2 == 2


def test_division_by_zero_is_an_error():
    with pytest.raises(ZeroDivisionError):
        cyc_arith(ONE, ZERO, "div")


def test_cyclotomic_polynomials_small():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    for n in range(1, 25):
        assert len(cyclotomic_poly(n)) - 1 == euler_phi(n)


def test_mixed_orders_lift_to_lcm():
    a = CycNum.zeta(3) + CycNum.zeta(4)
    assert a.order == 12
    assert close(a, cmath.exp(2j * cmath.pi / 3) + 1j)


def test_zeta2_is_rational():
    assert CycNum.zeta(2) == -1
    assert CycNum.zeta(2).order == 1


def test_equality_across_orders_and_hash():
    half = CycNum.rational(Fraction(1, 2))
    lifted = half.lift(8)
    assert lifted == half
    assert hash(lifted) == hash(half)
    assert CycNum.zeta(4) == CycNum.zeta(8) ** 2
    assert hash(CycNum.zeta(4)) == hash(CycNum.zeta(8) ** 2)


def test_str_round_trips_through_the_scalar_parser():
    from orbicheck.cli import parse_scalar
    for x in [CycNum.zeta(8), (CycNum.zeta(8) + CycNum.zeta(8) ** 7) / 2, CycNum.rational(-3)]:
        assert parse_scalar(str(x)) == x


# ---------------------------------------------------------------- properties

@settings(max_examples=60, deadline=None)
@given(cycnums(), cycnums(), cycnums())
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@settings(max_examples=60, deadline=None)
@given(cycnums(), cycnums())
def test_arithmetic_matches_complex_embedding(a, b):
    assert close(a + b, complex(a) + complex(b))
    assert close(a * b, complex(a) * complex(b))
    assert close(a.conjugate(), complex(a).conjugate())


@settings(max_examples=60, deadline=None)
@given(cycnums())
def test_inverse(a):
    if a:
        assert a * a.inverse() == ONE
        assert close(a.inverse(), 1 / complex(a))
    else:
        assert complex(a) == 0


@settings(max_examples=40, deadline=None)
@given(cycnums(orders=[1, 3, 4]), st.sampled_from([2, 3, 5]))
def test_lift_preserves_value_and_hash(a, m):
    lifted = a.lift(a.order * m)
    assert lifted == a and hash(lifted) == hash(a)


# ---------------------------------------------------------------- rotations

@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6, 8, 12])
def test_rotation_has_order_k(k):
    r = rotation(k)
    assert (r ** k).is_identity()
    assert all(not (r ** j).is_identity() for j in range(1, k))
    assert close(r[0, 0], cmath.cos(2 * cmath.pi / k))
    assert close(r[1, 0], cmath.sin(2 * cmath.pi / k))


def test_rotation4_entries_are_integers():
    assert rotation(4) == CycMatrix([[0, -1], [1, 0]])


def test_rotation8_squares_to_rotation4():
    assert rotation(8) @ rotation(8) == rotation(4)


# ---------------------------------------------------------------- subspaces

def test_kernel_examples():
    assert kernel(CycMatrix.identity(2)).is_zero()
    assert kernel(CycMatrix.zeros(2, 2)).is_whole()
    assert kernel(CycMatrix.diag([1, 0])) == Subspace.span([(0, 1)], 2)


def test_intersection_examples():
    e1, e2 = Subspace.span([(1, 0)], 2), Subspace.span([(0, 1)], 2)
    assert intersect(e1, e2).is_zero()
    assert intersect(e1, e1) == e1
    assert intersect(Subspace.span([(1, 1)], 2), Subspace.span([(1, -1)], 2)).is_zero()


def test_apply_and_member():
    assert apply(rotation(4), Subspace.span([(1, 0)], 2)) == Subspace.span([(0, 1)], 2)
    diag = Subspace.span([(1, 1)], 2)
    assert member((1, 1), diag)
    assert not member((1, 0), diag)


def test_canonical_form_ignores_spanning_set():
    a = Subspace.span([(1, 2, 3), (0, 1, 1)], 3)
    b = Subspace.span([(1, 3, 4), (2, 4, 6), (1, 1, 2)], 3)
    assert a == b


def test_solve_inconsistent_returns_none():
    m = CycMatrix([[1, 1], [1, 1]])
    assert solve(m, (1, 2)) is None
    x = solve(m, (2, 2))
    assert m @ x == (2, 2)


def _rank_by_minors(rows):
    """Largest k with a nonzero k x k minor (determinants by permutation expansion)."""
    n, m = len(rows), len(rows[0])
    for k in range(min(n, m), 0, -1):
        for ri in itertools.combinations(range(n), k):
            for ci in itertools.combinations(range(m), k):
                det = Fraction(0)
                for perm in itertools.permutations(range(k)):
                    sign = 1
                    for a, b in itertools.combinations(range(k), 2):
                        if perm[a] > perm[b]:
                            sign = -sign
                    term = Fraction(sign)
                    for a in range(k):
                        term *= rows[ri[a]][ci[perm[a]]]
                    det += term
                if det:
                    return k
    return 0


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-2, 2), min_size=3, max_size=3), min_size=2, max_size=3))
def test_rank_nullity_against_minors(rows):
    m = CycMatrix(rows)
    r = _rank_by_minors([[Fraction(x) for x in row] for row in rows])
    k = kernel(m)
    assert m.rank() == r
    assert k.dim == 3 - r
    for b in k.basis:
        assert all(x == 0 for x in m @ b)


# ---------------------------------------------------------------- polynomials

t = RatPoly.t()


def test_gcd_examples():
    assert poly_gcd(t ** 2 - 1, t - 1) == t - 1
    assert poly_gcd(t ** 3 - t, t ** 2) == t
    with pytest.raises(PolynomialError):
        poly_gcd(RatPoly(), RatPoly())


def test_squarefree_part():
    assert squarefree_part(t ** 2) == t
    assert squarefree_part((t - 1) ** 3 * (t + 2)) == (t - 1) * (t + 2)


def test_rational_roots():
    p = (2 * t - 1) * (t + 3) * (t ** 2 + 1)
    assert p.rational_roots() == [Fraction(-3), Fraction(1, 2)]


@pytest.mark.parametrize("p, expected", [
    (t ** 2 + 1, 0),
    (t ** 2 - 2, 2),
    ((t - 1) ** 2 * (t + 1), 2),
    (t ** 3 - t, 3),
    (t ** 2 - 2 * t + 2, 0),
    (RatPoly.const(5), 0),
])
def test_count_real_roots(p, expected):
    assert count_real_roots(p) == expected

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dihedral_soergel.bipoly import BiPoly
from dihedral_soergel.qnum import (
    BinomialIntegrityError,
    Color,
    assumption_check,
    sigma_power,
    specialize,
    two_color_binomial,
    two_color_quantum,
)
from dihedral_soergel.realizations import CATALOG, FINITE_CATALOG, catalog
from dihedral_soergel.symalg import validate_realization

X, Y = BiPoly.X, BiPoly.Y
q = two_color_quantum
colors = st.sampled_from(list(Color))


def _scalar(m, x, y, coef=None):
    coef = coef or {"kind": "integers"}
    return validate_realization(
        {"name": "scalar", "m": m, "coef": coef, "rank": 2,
         "alpha_s": [1, 0], "alpha_t": [0, 1],
         "covector_s": [2, -x], "covector_t": [-y, 2]}
    )


def test_small_quantum_numbers():
    assert q(2, Color.X) == X
    assert q(0, Color.X) == 0 and q(0, Color.Y) == 0
    assert q(1, Color.Y) == 1
    assert q(3, Color.X) == X * Y - 1
    assert q(4, Color.X) == X * X * Y - 2 * X
    assert str(q(4, "X")) == "X^2*Y - 2*X"


def test_sigma_power():
    assert sigma_power(Color.X, 1) is Color.Y
    assert sigma_power(Color.X, 2) is Color.X
    assert sigma_power(Color.Y, -3) is Color.X


def test_color_parse():
    assert Color.parse("y") is Color.Y
    with pytest.raises(ValueError):
        Color.parse("Z")


def test_binomial_examples():
    for m in range(6):
        for c in Color:
            assert two_color_binomial(m, 0, c) == 1
            if m:
                assert two_color_binomial(m, 1, c) == q(m, c)
    assert two_color_binomial(4, 2, Color.X) == (X * Y - 1) * (X * Y - 2)
    with pytest.raises(ValueError):
        two_color_binomial(3, 5, Color.X)


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        q(-1, Color.X)


def test_binomial_error_type_is_arithmetic():
    assert issubclass(BinomialIntegrityError, ArithmeticError)


@given(st.integers(1, 40), colors)
def test_recursion(n, c):
    # [n+1]_Z = Z [n]_{σZ} - [n-1]_Z with [2]_X = X, [2]_Y = Y
    z = X if c is Color.X else Y
    assert q(n + 1, c) == z * q(n, c.swap()) - q(n - 1, c)


@given(st.integers(0, 30), colors)
def test_shift(n, c):
    assert q(n, c) == q(n, sigma_power(c, n))


@given(st.integers(0, 30))
def test_parity(n):
    if n % 2:
        assert q(n, Color.X) == q(n, Color.Y)
    else:
        dx, dy = q(n, Color.X).exact_div(X), q(n, Color.Y).exact_div(Y)
        assert dx is not None and dx == dy


@given(st.integers(0, 14), st.integers(0, 14), colors)
def test_binomials_are_quotients_of_products(m, n, c):
    if n > m:
        return
    b = two_color_binomial(m, n, c)
    num = BiPoly.const(1)
    den = BiPoly.const(1)
    for i in range(1, n + 1):
        num = num * q(m - i + 1, c)
        den = den * q(i, c)
    assert b * den == num


def test_specialize_examples():
    assert specialize(q(4, Color.X), _scalar(4, 1, 2)) == 0
    assert specialize(q(3, Color.X), _scalar(3, 1, 1)) == 0
    for name in CATALOG:
        assert specialize(BiPoly.const(1), catalog(name)) == 1


def test_assumption_examples():
    assert assumption_check(_scalar(3, 1, 1)).holds
    deg = assumption_check(_scalar(4, 0, 0))
    assert not deg.holds
    assert (2, Color.X, 2) in [(k, c, v.payload) for k, c, v in deg.witnesses]
    assert assumption_check(_scalar(4, 0, 0, {"kind": "prime_field", "p": 2})).holds


@pytest.mark.parametrize("name", FINITE_CATALOG)
def test_assumption_conditions_agree(name):
    report = assumption_check(catalog(name))
    assert report.conditions_agree
    assert report.holds == (name != "m4-degenerate")


def test_assumption_rejects_universal():
    with pytest.raises(ValueError, match="universal"):
        assumption_check(catalog("universal"))


@pytest.mark.parametrize("name", FINITE_CATALOG)
def test_catalog_quantum_m_vanishes(name):
    r = catalog(name)
    for c in Color:
        assert specialize(q(r.m, c), r).is_zero()


class _Ints:
    add = staticmethod(lambda a, b: a + b)
    mul = staticmethod(lambda a, b: a * b)
    from_int = staticmethod(int)


def test_quantum_at_two_is_n():
    for n in range(25):
        for c in Color:
            assert q(n, c).evaluate(_Ints, 2, 2) == n

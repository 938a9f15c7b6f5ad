from hypothesis import given
from hypothesis import strategies as st

from dihedral_soergel.bipoly import BiPoly

X, Y = BiPoly.X, BiPoly.Y

terms = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-5, 5), max_size=6)


def test_rendering_order():
    assert str(X * X * Y - 2 * X) == "X^2*Y - 2*X"
    assert str(BiPoly.const(0)) == "0"
    assert str(-X + 1) == "-X + 1"
    assert str((X * Y - 1) * (X * Y - 2)) == "X^2*Y^2 - 3*X*Y + 2"


def test_zero_coefficients_dropped():
    p = BiPoly({(1, 0): 2, (0, 1): 0})
    assert p.terms == [(1, 0, 2)]
    assert X - X == BiPoly.const(0)


def test_exact_division():
    assert (X * X * Y - 2 * X).exact_div(X) == X * Y - 2
    assert (X + 1).exact_div(X) is None


@given(terms, terms)
def test_division_inverts_multiplication(a, b):
    pa, pb = BiPoly(a), BiPoly(b)
    if not pb:
        return
    assert (pa * pb).exact_div(pb) == pa


@given(terms, terms, terms)
def test_ring_laws(a, b, c):
    pa, pb, pc = BiPoly(a), BiPoly(b), BiPoly(c)
    assert pa * (pb + pc) == pa * pb + pa * pc
    assert (pa * pb) * pc == pa * (pb * pc)
    assert pa - pb == -(pb - pa)
    assert hash(pa + pb) == hash(pb + pa)


def test_swap():
    assert (X * X * Y).swap() == X * Y * Y

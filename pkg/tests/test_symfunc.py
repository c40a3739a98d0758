from hypothesis import (
    given,
    strategies as st,
)
import pytest

from qtsym import symfunc
from qtsym.errors import BasisError, QtSymError
from qtsym.scalars import ONE, ZERO, q, t
from qtsym.shapes import partitions
from qtsym.symfunc import SymFunc, elementary, homogeneous, monomial, power_sum, schur

ALL_SHAPES = [mu for size in range(1, 4) for mu in partitions(size)]

combinations = st.dictionaries(st.sampled_from(ALL_SHAPES), st.integers(min_value=-3, max_value=3), max_size=4)


def _from_dict(basis, terms):
    return SymFunc(basis, {mu: c for mu, c in terms.items()})


def test_basis_changes_in_degree_two():
    assert symfunc.convert(homogeneous(2), 's') == schur((2, ))
    assert symfunc.convert(elementary(2), 's') == schur((1, 1))
    assert symfunc.convert(power_sum(2), 's') == schur((2, )) - schur((1, 1))
    assert symfunc.convert(homogeneous((1, 1)), 's') == schur((2, )) + schur((1, 1))
    assert symfunc.convert(schur((2, 1)), 'm') == monomial((2, 1)) + monomial((1, 1, 1)) * 2
    assert symfunc.convert(power_sum(2), 'm') == monomial((2, ))


def test_transition_matrix():
    assert symfunc.transition_matrix(2, 's', 'm') == [[ONE, ONE], [ZERO, ONE]]
    assert symfunc.transition_matrix(3, 'h', 'h')[1] == [ZERO, ONE, ZERO]


def test_equality_across_bases():
    assert elementary(2) == schur((1, 1))
    assert elementary(2) != schur((2, ))
    assert SymFunc.constant(3, 'h') == 3
    assert SymFunc('e') == 0
    assert SymFunc.constant(q + t, 'h') == q + t
    assert schur((1, )) != q


def test_hall_scalar_product():
    assert symfunc.hall(schur((2, 1)), schur((2, 1))) == ONE
    assert symfunc.hall(power_sum(2), power_sum(2)) == 2 * ONE
    assert symfunc.hall(power_sum((1, 1)), power_sum((1, 1))) == 2 * ONE
    assert symfunc.hall(homogeneous((2, 1)), monomial((2, 1))) == ONE
    assert symfunc.hall(homogeneous((2, 1)), monomial((3, ))) == ZERO


def test_omega():
    assert symfunc.omega(schur((3, 1))) == schur((2, 1, 1))
    assert symfunc.omega(homogeneous(3)) == elementary(3)
    assert symfunc.omega(power_sum(2)) == -power_sum(2)


@given(combinations)
def test_omega_is_an_involution(terms):
    f = _from_dict('s', terms)

    assert symfunc.omega(symfunc.omega(symfunc.convert(f, 'm'))) == f


@given(combinations, st.sampled_from(['m', 'e', 'h', 'p', 'f']))
def test_conversion_roundtrip(terms, basis):
    f = _from_dict('s', terms)

    assert symfunc.convert(symfunc.convert(f, basis), 's').terms == f.terms


def test_skewing():
    assert symfunc.skew(schur((1, )), schur((2, 1))) == schur((2, )) + schur((1, 1))
    assert symfunc.skew(power_sum(1), power_sum((1, 1))) == power_sum(1) * 2
    assert symfunc.skew_schur((2, 1), (1, )) == schur((2, )) + schur((1, 1))
    assert symfunc.skew(schur((2, )), schur((1, ))) == 0


def test_kronecker_product():
    f = schur((2, 1)) + schur((1, 1, 1)) * q

    assert symfunc.kronecker(schur((3, )), f) == f
    assert symfunc.kronecker(schur((1, 1)), schur((2, ))) == schur((1, 1))


def test_products():
    assert schur((1, )) * schur((1, )) == schur((2, )) + schur((1, 1))
    assert symfunc.schur_product((1, ), (1, )) == schur((2, )) + schur((1, 1))
    assert symfunc.lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert symfunc.lr_coefficient((1, ), (1, ), (3, )) == 0
    assert symfunc.pieri_h(1, (1, )) == schur((2, )) + schur((1, 1))
    assert symfunc.pieri_e(2, (1, )) == schur((2, 1)) + schur((1, 1, 1))
    assert schur((1, ))**2 == homogeneous((1, 1))


def test_determinants():
    assert symfunc.jacobi_trudi((2, 1)) == homogeneous((2, 1)) - homogeneous(3)
    assert symfunc.jacobi_trudi((2, 1), dual=True) == schur((2, 1))
    assert symfunc.hankel(1, 3) == homogeneous(3)
    assert symfunc.p_in_h_determinant(2) == power_sum(2)
    assert symfunc.p_in_h_determinant(3) == power_sum(3)


def test_pi_basis():
    assert symfunc.pi_n(1) == schur((1, ))
    assert symfunc.pi_n(2) == schur((1, 1)) - schur((2, )) / (q * t)
    assert symfunc.pi_n(3).coefficient((3, )) == 1 / (q * t)**2
    assert symfunc.expand_in_pi(symfunc.pi_n(2)) == {(2, ): ONE}

    with pytest.raises(QtSymError, match='k >= 1'):
        symfunc.pi_n(0)


def test_schur_positivity():
    assert symfunc.is_schur_positive(schur((1, )) * schur((2, ))) == (True, None)
    assert symfunc.is_schur_positive(schur((2, )) - schur((1, 1))) == (False, ((1, 1), -ONE))
    assert symfunc.is_schur_positive(schur((2, )) * (q + t))[0]


def test_degrees():
    f = schur((2, )) + schur((1, )) * 3 + 1

    assert symfunc.degrees(f) == [0, 1, 2]
    assert not symfunc.is_homogeneous(f)
    assert symfunc.degree_component(f, 1) == schur((1, )) * 3
    assert symfunc.map_coefficients(schur((1, )) * q, lambda c: c * t) == schur((1, )) * (q * t)


def test_render_and_parse():
    f = schur((1, 1)) * (q + t) + schur((2, )) - 1

    assert symfunc.render(f) == '-1+s[2]+(q+t)*s[1,1]'
    assert symfunc.render(SymFunc('h')) == '0'
    assert symfunc.parse(symfunc.render(f)) == f
    assert symfunc.parse('3/2*h[2]-p[1]') == homogeneous(2) * 3 / 2 - power_sum(1)
    assert symfunc.label(schur((2, 1))) == 's21'


def test_errors():
    with pytest.raises(BasisError, match='Unknown basis'):
        SymFunc('x')

    with pytest.raises(QtSymError, match='Division by a symmetric function'):
        schur((1, )) / schur((1, ))

    with pytest.raises(QtSymError, match='Negative powers'):
        schur((1, ))**-1

    with pytest.raises(QtSymError, match='Cannot read'):
        symfunc.parse('')


def test_expansion_caches_are_bounded():
    assert symfunc._in_p.cache_info().maxsize == symfunc.EXPANSION_CACHE_SIZE
    assert symfunc._from_p_block.cache_info().maxsize == symfunc.BLOCK_CACHE_SIZE

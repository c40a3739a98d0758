import pytest

from qtsym import macdonald, rectangular, scalars
from qtsym.scalars import ONE, q, t
from qtsym.shapes import hook_count, partitions
from qtsym.symfunc import SymFunc, elementary, hall, schur

NABLA_E2 = schur((2, )) + schur((1, 1)) * (q + t)


def test_bracket_words():
    assert rectangular.q_operator(4, 3).render() == '(1/M^6)[[p1,D0],[[p1,D0],[[p1,D0],D0]]]'
    assert rectangular.q_operator(6, 3).render() == '(1/M^8)[[p1,D0],[[[p1,D0],D0],[[[p1,D0],D0],D0]]]'


def test_split_independence():
    expected = schur((2, )) + schur((1, 1)) * (1 + q + t)

    assert rectangular.q_operator(2, 2).apply(ONE) == expected
    assert rectangular.q_operator(2, 2, choice=1).apply(ONE) == expected


@pytest.mark.slow
@pytest.mark.parametrize('m, n', [(3, 3), (4, 2)])
def test_split_independence_all_choices(m, n):
    values = [rectangular.q_operator(m, n, choice=i).apply(ONE) for i in range(len(rectangular.all_splits(m, n)))]

    assert len(values) > 1
    assert all(value == values[0] for value in values)


def test_seed_gives_nabla():
    assert rectangular.e_mn(2, 2) == NABLA_E2
    assert rectangular.e_mn(2, 2) == macdonald.nabla(elementary(2))


def test_seed_degenerate_direction():
    assert rectangular.seed_family(elementary(2), 0, 1) == elementary(2)
    assert rectangular.seed_family(schur((2, 1)), 0, 1) == schur((2, 1))


def test_neighbouring_slopes():
    assert rectangular.e_mn(3, 2) == NABLA_E2
    assert rectangular.hat_h_mn(2, 2) == rectangular.e_mn(1, 2)


@pytest.mark.slow
def test_neighbouring_slopes_degree_3():
    assert rectangular.e_mn(4, 3) == rectangular.e_mn(3, 3)
    assert rectangular.hat_h_mn(3, 3) == rectangular.e_mn(2, 3)


def _conjugation_cases(fast, slow):
    cases = []
    for directions, sizes, marks in ((fast, (0, 1, 2), ()), (slow, (0, 1, 2, 3), (pytest.mark.slow, )), (fast, (3, ), (pytest.mark.slow, ))):
        for a, b in directions:
            for size in sizes:
                cases += [pytest.param(a, b, mu, marks=marks, id=f'{a}{b}-{mu}') for mu in partitions(size)]
    return cases


@pytest.mark.parametrize('a, b, mu', _conjugation_cases([(0, 1), (1, 1)], [(1, 2)]))
def test_nabla_conjugation(a, b, mu):
    before = rectangular.q_operator(a, b)
    after = rectangular.q_operator(a + b, b)
    g = schur(mu)

    assert macdonald.nabla(before.apply(macdonald.nabla(g, power=-1))) == after.apply(g)


def test_nabla_powers():
    assert hall(macdonald.nabla(elementary(2), power=2), elementary(2)) == q**2 + q * t + t**2


@pytest.mark.slow
def test_seed_gives_nabla_degree_3():
    assert rectangular.e_mn(3, 3) == macdonald.nabla(elementary(3))


@pytest.mark.parametrize('size', [1, 2, 3])
def test_e_n_in_H(size):
    total = SymFunc('s')
    for mu in partitions(size):
        weight = macdonald.M * macdonald.B_mu(mu) * macdonald.Pi_mu(mu) / macdonald.w_mu(mu)
        total = total + macdonald.macdonald_H(mu) * weight
    assert total == elementary(size)


@pytest.mark.parametrize('mu', partitions(3))
def test_qt_kostka_at_one(mu):
    for lam in partitions(3):
        value = scalars.substitute(macdonald.qt_kostka(lam, mu), {'q': 1, 't': 1})
        assert value == hook_count(lam)

import math

from hypothesis import (
    given,
    strategies as st,
)
import pytest

from qtsym import scalars, shapes
from qtsym.errors import InvalidBiword, InvalidShape, InvalidTableau, SizeMismatch
from qtsym.scalars import ONE, q
from qtsym.shapes import Biword, Partition, Tableau

ORDER4 = [(4, ), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

# rows λ, columns μ, both in ORDER4
KOSTKA4 = [
    [1, 1, 1, 1, 1],
    [0, 1, 1, 2, 3],
    [0, 0, 1, 1, 2],
    [0, 0, 0, 1, 3],
    [0, 0, 0, 0, 1],
]

QKOSTKA4 = [
    ['1', 'q', 'q^2', 'q^3', 'q^6'],
    ['0', '1', 'q', 'q^2+q', 'q^5+q^4+q^3'],
    ['0', '0', '1', 'q', 'q^4+q^2'],
    ['0', '0', '0', '1', 'q^3+q^2+q'],
    ['0', '0', '0', '0', '1'],
]

words = st.lists(st.integers(min_value=1, max_value=4), max_size=8)


def test_partition_construction():
    assert Partition('321') == (3, 2, 1)
    assert Partition([3, 0, 2]) == (3, 2)
    assert Partition() == ()
    assert shapes.parse_partition('[10,2]') == (10, 2)
    assert shapes.parse_partition('3,2,1') == (3, 2, 1)
    assert shapes.parse_partition('0') == ()
    assert shapes.render_partition(Partition((10, 2))) == '[10,2]'
    assert shapes.render_partition(Partition((2, 1))) == '21'
    assert shapes.render_partition(Partition()) == '0'

    with pytest.raises(InvalidShape, match='weakly decrease'):
        Partition([1, 2])

    with pytest.raises(InvalidShape, match='Negative part'):
        Partition([2, -1])


def test_partition_statistics():
    assert shapes.conjugate((4, 2, 1)) == (3, 2, 1, 1)
    assert shapes.z_mu((2, 1, 1)) == 4
    assert shapes.z_mu((2, 2)) == 8
    assert shapes.n_mu((2, 1, 1)) == 3
    assert shapes.cell_data((3, 1))[(0, 0)] == (2, 1, 4)
    assert sorted(shapes.hooks((3, 1))) == [1, 1, 2, 4]


def test_dominance():
    assert shapes.dominates((3, 1), (2, 2))
    assert not shapes.dominates((2, 2), (3, 1))
    assert shapes.dominates((2, 2), (2, 2))

    with pytest.raises(SizeMismatch, match='dominance'):
        shapes.dominates((3, ), (2, 2))


def test_partition_enumeration():
    assert shapes.partitions(4) == ORDER4
    assert len(shapes.partitions(7)) == 15
    assert shapes.partitions(0) == [()]
    assert shapes.subpartitions((2, 1)) == [(), (1, ), (2, ), (1, 1), (2, 1)]


def test_young_lattice():
    assert shapes.corners((3, 1)) == [(2, 0), (0, 1)]
    assert shapes.outer_corners((3, 1)) == [(3, 0), (1, 1), (0, 2)]
    assert shapes.add_cell((3, 1), (1, 1)) == (3, 2)
    assert shapes.remove_cell((3, 1), (2, 0)) == (2, 1)

    with pytest.raises(InvalidShape, match='not a corner'):
        shapes.remove_cell((3, 1), (1, 0))


def test_strips():
    assert set(shapes.horizontal_strips((2, 1), 1)) == {(3, 1), (2, 2), (2, 1, 1)}
    assert set(shapes.vertical_strips((1, ), 2)) == {(2, 1), (1, 1, 1)}
    assert shapes.is_horizontal_strip((3, 1), (2, ))
    assert not shapes.is_horizontal_strip((2, 2), (1, 1))
    assert shapes.is_vertical_strip((2, 2), (1, 1))
    assert shapes.skew_cells((3, 1), (1, )) == [(1, 0), (2, 0), (0, 1)]


def test_tableau_reading_word_and_content():
    tau = Tableau([[1, 3, 4, 6], [2, 5, 8], [7]])

    assert tau.reading_word() == (7, 2, 5, 8, 1, 3, 4, 6)
    assert tau.is_standard()
    assert tau.shape.outer == (4, 3, 1)
    assert Tableau([[1, 1, 2], [2]]).content() == (2, 2)
    assert Tableau([[1, 1, 2], [2]]).standardize() == Tableau([[1, 2, 4], [3]])


def test_tableau_rejects_non_shapes():
    with pytest.raises(InvalidTableau, match='do not fill a skew shape'):
        Tableau([[1], [2, 3]])


def test_semistandard_enumeration():
    assert len(shapes.ssyt((2, 1), content=(1, 1, 1))) == 2
    assert len(shapes.ssyt((2, 1), max_entry=3)) == 8
    assert len(shapes.ssyt(((3, 1), (1, )), content=(2, 1))) == 2
    assert all(tau.is_semistandard() for tau in shapes.ssyt((3, 2), max_entry=3))


def test_kostka_matrix():
    for i, lam in enumerate(ORDER4):
        for j, mu in enumerate(ORDER4):
            assert shapes.kostka(lam, mu) == KOSTKA4[i][j]

    with pytest.raises(SizeMismatch):
        shapes.kostka((3, ), (2, 2))


def test_kostka_foulkes_matrix():
    for i, lam in enumerate(ORDER4):
        for j, mu in enumerate(ORDER4):
            value = shapes.kostka_foulkes(lam, mu)
            assert value == scalars.parse(QKOSTKA4[i][j])
            assert scalars.substitute(value, {'q': 1}) == KOSTKA4[i][j] * ONE


def test_minimize_and_cocharge():
    tau = Tableau([[1, 2, 6, 7], [3, 4, 8], [5, 9]])

    assert shapes.minimize(tau) == Tableau([[0, 0, 2, 2], [1, 1, 3], [2, 4]])
    assert shapes.cocharge(tau) == 15
    assert shapes.charge(tau) == 36 - 15
    assert shapes.cocharge(Tableau([[1, 2, 3, 4]])) == 0
    assert shapes.cocharge(Tableau([[1], [2], [3], [4]])) == 6


def test_charge_of_semistandard_tableaux():
    assert shapes.charge(Tableau([[1, 1, 2], [2]])) == 1
    assert shapes.charge(Tableau([[1, 1, 2, 2]])) == 2
    assert shapes.charge(Tableau([[1, 1], [2, 2]])) == 0
    assert shapes.word_charge((3, 1, 1, 2)) == 2

    with pytest.raises(InvalidTableau, match='not semistandard'):
        shapes.charge(Tableau([[2, 1]]))

    with pytest.raises(InvalidTableau, match='not a partition'):
        shapes.charge(Tableau([[1, 2, 2]]))


@pytest.mark.parametrize('mu', [(3, 1), (2, 2), (3, 2), (2, 2, 1), (4, 3, 1)])
def test_hook_length_formula(mu):
    tableaux = shapes.standard_tableaux(mu)

    assert len(tableaux) == shapes.hook_count(mu)
    assert sum((q**shapes.cocharge(tau) for tau in tableaux), scalars.ZERO) == shapes.hook_count_q(mu)


def test_hook_counts():
    assert shapes.hook_count((4, 3, 1)) == 70
    assert shapes.hook_count_q((3, 1)) == q + q**2 + q**3
    assert shapes.hook_count_q((5, )) == ONE


@pytest.mark.parametrize('size', range(1, 7))
def test_frobenius_sums(size):
    counts = [shapes.hook_count(mu) for mu in shapes.partitions(size)]

    assert sum(counts) == shapes.involution_count(size)
    assert sum(c * c for c in counts) == math.factorial(size)


def test_q_analogues():
    assert shapes.q_binomial(4, 2) == 1 + q + 2 * q**2 + q**3 + q**4
    assert shapes.q_factorial(3) == (1 + q) * (1 + q + q**2)
    assert shapes.qt_integer(2) == q + scalars.t
    assert shapes.q_catalan_square(3) == 1 + q + 2 * q**2 + q**3
    assert shapes.q_catalan_square(4) == shapes.subpartition_poly((3, 2, 1))


@pytest.mark.parametrize('size,expected', [(1, 1), (2, 2), (3, 9), (4, 560), (5, 480480)])
def test_bpr_denominator(size, expected):
    assert shapes.bpr_denominator(size) == expected


def test_row_insertion():
    tableau, cell = shapes.insert(Tableau([[1, 1, 1, 2, 3, 3], [2, 3, 3], [3, 5, 5]]), 1)

    assert tableau == Tableau([[1, 1, 1, 1, 3, 3], [2, 2, 3], [3, 3, 5], [5]])
    assert cell == (0, 3)
    assert shapes.insert_word((2, 1, 1, 3, 2, 4, 1, 2), Tableau([[1, 3], [2]])) == Tableau([[1, 1, 1, 1, 2], [2, 2, 2, 4], [3, 3]])


def test_rsk_of_a_word():
    p_tab, q_tab = shapes.rsk((2, 3, 1))

    assert p_tab == Tableau([[1, 3], [2]])
    assert q_tab == Tableau([[1, 2], [3]])


def test_biword_inverse():
    biword = Biword((3, 4, 5, 1, 4, 1, 4, 1, 2, 2), (1, 1, 1, 2, 2, 3, 3, 4, 4, 4))
    inverse = biword.inverse()

    assert inverse.bottom == (1, 1, 1, 2, 2, 3, 4, 4, 4, 5)
    assert inverse.top == (2, 3, 4, 4, 4, 1, 1, 2, 3, 1)

    p_tab, q_tab = shapes.rsk(biword)
    assert shapes.rsk(inverse) == (q_tab, p_tab)
    assert shapes.unrsk(p_tab, q_tab) == biword


def test_biword_must_be_lexicographic():
    with pytest.raises(InvalidBiword, match='lexicographic'):
        Biword((1, 2), (2, 1))


@given(words)
def test_rsk_roundtrip(word):
    p_tab, q_tab = shapes.rsk(word)

    assert p_tab.shape == q_tab.shape
    assert q_tab.is_standard() or not word
    assert shapes.unrsk(p_tab, q_tab) == Biword.from_word(word)


def test_multinomial_and_strips():
    assert shapes.multinomial(4, (2, 1, 1)) == 12
    assert shapes.multinomial(4, (2, 1)) == 0
    assert shapes.riser_sequence((2, 2), 3) == (1, 0, 2)
    assert shapes.strip_shape((1, ), 2).outer == (2, 1)

    with pytest.raises(InvalidShape):
        shapes.riser_sequence((1, 1, 1), 2)

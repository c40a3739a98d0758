"""
Tamari order on (m,n)-Dyck paths

Paths are encoded as step words (0 east, 1 north) that stay weakly left of the
staircase word. A cover moves the east step at a valley past the shortest
subpath that returns to the same horizontal distance from the staircase. The
staircase is the bottom element, the path with every north step first the top.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache
from itertools import groupby

import numpy

from qtsym import scalars
from qtsym.errors import InvalidShape, QtSymError
from qtsym.rectangular import DyckPath, dyck_paths, staircase, staircase_rows
from qtsym.shapes import Partition, partitions, z_mu
from qtsym.symfunc import SymFunc, convert, power_sum


def level_list(m, n):
    """
    lvl[y] = the largest abscissa a path may reach at height y
    """

    rows = staircase_rows(m, n)
    return [rows[n - 1 - y] for y in range(n)] + [m]


def path_word(path):
    return path.word()


def path_from_word(m, n, word):
    """
    The DyckPath whose step word is word
    """

    word = tuple(int(step) for step in word)
    if any(step not in (0, 1) for step in word) or word.count(0) != m or word.count(1) != n:
        raise InvalidShape(f'{word} is not a word of {m} east and {n} north steps')

    abscissas = []
    x = 0
    for step in word:
        if step:
            abscissas.append(x)
        else:
            x += 1
    return DyckPath(m, n, reversed(abscissas))


def _swap(word, valley, lvl):
    position = [word[:valley + 1].count(0), word[:valley + 1].count(1)]
    distance = lvl[position[1]] - position[0]

    end = valley + 1
    for end in range(valley + 1, len(word)):
        position[word[end]] += 1
        if lvl[position[1]] - position[0] == distance:
            break

    moved = list(word)
    for i in range(valley, end):
        moved[i] = moved[i + 1]
    moved[end] = 0
    return tuple(moved)


def cover_words(word, lvl):
    return [_swap(word, p, lvl) for p in range(len(word) - 1) if word[p] == 0 and word[p + 1] == 1]


class TamariPoset:
    """
    The (m,n) Tamari poset with its reachability matrix

    reach[i, j] is true when elements[i] <= elements[j].
    """

    def __init__(self, m, n, workers=None):
        self.m = m
        self.n = n
        self.lvl = level_list(m, n)

        # tops first, so every cover is placed before the element it covers
        self.elements = dyck_paths(m, n)
        self.index = {path: i for i, path in enumerate(self.elements)}
        self.covers = {}
        for path in self.elements:
            above = [path_from_word(m, n, w) for w in cover_words(path.word(), self.lvl)]
            self.covers[path] = above
        logging.debug('Built (%d,%d) Tamari poset: %d elements, %d cover edges', m, n, len(self.elements), self.edge_count())

        size = len(self.elements)
        self.reach = numpy.zeros((size, size), dtype=bool)
        # covers shrink |μ|, so a layer only reads rows of earlier layers
        with ThreadPoolExecutor(max_workers=workers) as executor:
            for _, layer in groupby(range(size), key=lambda i: self.elements[i].mu.size):
                layer = list(layer)
                for i, row in zip(layer, executor.map(self._reach_row, layer)):
                    self.reach[i] = row

    def _reach_row(self, i):
        path = self.elements[i]
        row = numpy.zeros(len(self.elements), dtype=bool)
        row[i] = True
        for above in self.covers[path]:
            if above.mu.size >= path.mu.size:
                raise QtSymError(f'Cover {above} of {path} does not shrink the partition')
            row |= self.reach[self.index[above]]
        return row

    def __len__(self):
        return len(self.elements)

    @property
    def bottom(self):
        return DyckPath(self.m, self.n, staircase(self.m, self.n))

    @property
    def top(self):
        return DyckPath(self.m, self.n)

    def edges(self):
        """
        Hasse diagram edges (lower, upper)
        """

        return [(path, above) for path in self.elements for above in self.covers[path]]

    def edge_count(self):
        return sum(len(above) for above in self.covers.values())

    def leq(self, lower, upper):
        return bool(self.reach[self.index[lower], self.index[upper]])

    def interval_count(self):
        return int(self.reach.sum())

    def upper_counts(self):
        """
        For each element, the number of elements below or equal to it
        """

        return self.reach.sum(axis=0)

    def decorated_count(self):
        weights = numpy.array([path.parking_count() for path in self.elements], dtype=object)
        return int(sum(int(c) * w for c, w in zip(self.upper_counts(), weights)))

    def interval_strip_sum(self):
        """
        Σ_{ν <= μ} s_{(μ + 1^n)/μ}
        """

        result = SymFunc('e')
        for path, count in zip(self.elements, self.upper_counts()):
            result = result + path.strip_schur() * int(count)
        return convert(result, 's')

    def _bound(self, a, b, axis):
        if axis == 'up':
            common = self.reach[a] & self.reach[b]
            candidates = numpy.flatnonzero(common)
            best = [c for c in candidates if (self.reach[c] >= common).all()]
        else:
            common = self.reach[:, a] & self.reach[:, b]
            candidates = numpy.flatnonzero(common)
            best = [c for c in candidates if (self.reach[:, c] >= common).all()]
        return best[0] if best else None

    def join(self, lower, upper):
        found = self._bound(self.index[lower], self.index[upper], 'up')
        return None if found is None else self.elements[found]

    def meet(self, lower, upper):
        found = self._bound(self.index[lower], self.index[upper], 'down')
        return None if found is None else self.elements[found]

    def is_lattice(self):
        size = len(self.elements)
        for a in range(size):
            for b in range(a + 1, size):
                if self._bound(a, b, 'up') is None or self._bound(a, b, 'down') is None:
                    logging.debug('No join or meet for %s and %s', self.elements[a], self.elements[b])
                    return False
        return True

    def is_partial_order(self):
        """
        Antisymmetry of the reachability relation
        """

        both = self.reach & self.reach.T
        return bool((both == numpy.eye(len(self.elements), dtype=bool)).all())


POSET_CACHE_SIZE = 16


@lru_cache(maxsize=POSET_CACHE_SIZE)
def tamari_poset(m, n):
    return TamariPoset(m, n)


def covers(path):
    """
    The paths covering path in the Tamari order
    """

    lvl = level_list(path.m, path.n)
    return [path_from_word(path.m, path.n, w) for w in cover_words(path.word(), lvl)]


def interval_count(m, n):
    return tamari_poset(m, n).interval_count()


def decorated_count(m, n):
    return tamari_poset(m, n).decorated_count()


def interval_strip_sum(m, n):
    return tamari_poset(m, n).interval_strip_sum()


def export_dot(poset):
    """
    Graphviz DOT text of the Hasse diagram, nodes labelled by their partition word
    """

    lines = [f'digraph "tamari_{poset.m}_{poset.n}" {{']
    for path in poset.elements:
        lines.append(f'    "{path}";')
    for lower, upper in poset.edges():
        lines.append(f'    "{lower}" -> "{upper}";')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def _p_sum(size, base, factor):
    result = SymFunc('p')
    for lam in partitions(size):
        length = len(lam)
        coefficient = Fraction((-1)**(size - length), z_mu(lam)) * Fraction(base)**(length - 2)
        coefficient *= math.prod(factor(k) for k in lam)
        result = result + power_sum(Partition(lam)) * scalars.scalar(coefficient)
    return convert(result, 's')


def e_mn_3(r, n):
    """
    Closed form of the interval strip sum for m = rn+1
    """

    return _p_sum(n, r * n + 1, lambda k: math.comb((r + 1) * k, k))


def h_mn_3(r, n):
    """
    Closed form of the interval strip sum for m = rn-1
    """

    if r * n < 2:
        raise QtSymError(f'm = rn-1 must be positive, got r={r}, n={n}')
    return _p_sum(n, (r + 1) * n - 1, lambda k: math.comb(k * (r + 1) - 1, k))


def _exact(value, what):
    if value.denominator != 1:
        raise QtSymError(f'{what} is not an integer: {value}')
    return int(value)


def interval_formula(r, n):
    """
    Number of intervals for m = rn+1
    """

    value = Fraction(r + 1, n * (r * n + 1)) * math.comb((r + 1)**2 * n + r, n - 1)
    return _exact(value, f'Interval formula at r={r}, n={n}')


def decorated_formula(r, n):
    """
    Number of decorated intervals for m = rn+1
    """

    value = Fraction(r + 1)**n * Fraction(r * n + 1)**(n - 2)
    return _exact(value, f'Decorated formula at r={r}, n={n}')

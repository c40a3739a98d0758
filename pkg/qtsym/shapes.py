"""
Partitions, skew diagrams, tableaux, RSK and charge

Cells follow the French convention: a cell is (x, y) with x the column and y the
row, both zero-based, rows counted from the bottom.
"""

import logging
import math
from bisect import bisect_left, bisect_right
from collections import Counter, namedtuple
from functools import lru_cache
from itertools import accumulate

from qtsym.errors import InvalidBiword, InvalidShape, InvalidTableau, SizeMismatch
from qtsym.scalars import ONE, ZERO, divide_exact, q, t

CellData = namedtuple('CellData', ['arm', 'leg', 'hook'])
PartitionStats = namedtuple('PartitionStats', ['size', 'length', 'z', 'n'])


class Partition(tuple):
    """
    A weakly decreasing tuple of positive parts; () is the partition 0
    """

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        if isinstance(parts, str):
            parts = _parse_parts(parts)

        try:
            values = tuple(int(p) for p in parts)
        except (TypeError, ValueError) as exc:
            raise InvalidShape(f'Cannot read a partition from {parts!r}') from exc

        if any(p < 0 for p in values):
            raise InvalidShape(f'Negative part in {values}')
        values = tuple(p for p in values if p)
        if any(a < b for a, b in zip(values, values[1:])):
            raise InvalidShape(f'Parts must weakly decrease, got {values}')
        return super().__new__(cls, values)

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def part(self, y):
        """
        The y-th part, zero past the end
        """

        return self[y] if 0 <= y < len(self) else 0

    def conjugate(self):
        return conjugate(self)

    def __repr__(self):
        return f'Partition({render_partition(self)})'

    def __str__(self):
        return render_partition(self)


def _parse_parts(text):
    text = text.strip()
    if text in ('', '0', '[]', '()'):
        return ()
    if text[0] in '[(' and text[-1] in '])':
        text = text[1:-1]
    if ',' in text:
        return tuple(int(p) for p in text.split(',') if p.strip())
    if text.isdigit():
        return tuple(int(c) for c in text)
    raise InvalidShape(f'Cannot read a partition from {text!r}')


def parse_partition(text):
    """
    Read "321", "[10,2]", "3,2,1" or "0"
    """

    return Partition(_parse_parts(text))


def render_partition(mu):
    """
    Digit word when every part is at most 9, bracketed list otherwise
    """

    if not mu:
        return '0'
    if all(p <= 9 for p in mu):
        return ''.join(str(p) for p in mu)
    return '[' + ','.join(str(p) for p in mu) + ']'


@lru_cache(maxsize=None)
def _conjugate(mu):
    if not mu:
        return mu
    return Partition(sum(1 for p in mu if p > j) for j in range(mu[0]))


def conjugate(mu):
    """
    μ'_j = #{i : μ_i > j}
    """

    return _conjugate(Partition(mu))


def cells(mu):
    """
    Cells of the diagram in reading order within rows, bottom row first
    """

    return [(x, y) for y, row in enumerate(Partition(mu)) for x in range(row)]


def cell_data(mu):
    """
    Map each cell (x, y) to its arm, leg and hook length
    """

    return dict(_cell_data(Partition(mu)))


@lru_cache(maxsize=None)
def _cell_data(mu):
    mu_c = conjugate(mu)
    data = {}
    for x, y in cells(mu):
        arm = mu[y] - x - 1
        leg = mu_c[x] - y - 1
        data[(x, y)] = CellData(arm, leg, arm + leg + 1)
    return data


def hooks(mu):
    return [d.hook for d in _cell_data(Partition(mu)).values()]


def z_mu(mu):
    """
    z_μ = ∏ i^{d_i} d_i! where d_i is the multiplicity of the part i
    """

    result = 1
    for part, mult in Counter(Partition(mu)).items():
        result *= part**mult * math.factorial(mult)
    return result


def n_mu(mu):
    """
    n(μ) = Σ y μ_y, the sum of the row indices of the cells
    """

    return sum(y * p for y, p in enumerate(Partition(mu)))


def stats(mu):
    mu = Partition(mu)
    return PartitionStats(mu.size, mu.length, z_mu(mu), n_mu(mu))


def dominates(mu, lam):
    """
    True when every prefix sum of λ is bounded by that of μ
    """

    mu = Partition(mu)
    lam = Partition(lam)
    if mu.size != lam.size:
        raise SizeMismatch(f'Cannot compare {mu} and {lam} in dominance order: sizes {mu.size} and {lam.size}')
    length = max(len(mu), len(lam))
    mu_sums = accumulate(mu.part(i) for i in range(length))
    lam_sums = accumulate(lam.part(i) for i in range(length))
    return all(b <= a for a, b in zip(mu_sums, lam_sums))


def contains(outer, inner):
    """
    Cellwise containment inner ⊆ outer
    """

    outer = Partition(outer)
    inner = Partition(inner)
    return len(inner) <= len(outer) and all(b <= a for a, b in zip(outer, inner))


def _bounded(size, max_part, row, bound):
    if size == 0:
        yield ()
        return
    for first in range(min(size, max_part, bound(row)), 0, -1):
        for rest in _bounded(size - first, first, row + 1, bound):
            yield (first, ) + rest


@lru_cache(maxsize=None)
def _partitions(size, outer, max_len):
    def bound(row):
        if max_len is not None and row >= max_len:
            return 0
        if outer is not None:
            return outer.part(row)
        return size

    return tuple(Partition(p) for p in _bounded(size, size, 0, bound))


def partitions(size, outer=None, max_len=None):
    """
    Partitions of size in decreasing lexicographic order, optionally inside outer
    and with at most max_len parts
    """

    if size < 0:
        return []
    outer = Partition(outer) if outer is not None else None
    return list(_partitions(size, outer, max_len))


def subpartitions(outer):
    """
    Every ν ⊆ outer, by increasing size
    """

    outer = Partition(outer)
    return [nu for size in range(outer.size + 1) for nu in partitions(size, outer=outer)]


def corners(mu):
    """
    Cells whose removal leaves a partition
    """

    mu = Partition(mu)
    return [(mu[y] - 1, y) for y in range(len(mu)) if mu.part(y + 1) < mu[y]]


def outer_corners(mu):
    """
    Cells whose addition leaves a partition
    """

    mu = Partition(mu)
    return [(mu.part(y), y) for y in range(len(mu) + 1) if y == 0 or mu[y - 1] > mu.part(y)]


def add_cell(mu, cell):
    mu = Partition(mu)
    x, y = cell
    parts = list(mu) + [0]
    if parts[y] != x:
        raise InvalidShape(f'Cell {cell} is not an outer corner of {mu}')
    parts[y] += 1
    return Partition(parts)


def remove_cell(mu, cell):
    mu = Partition(mu)
    x, y = cell
    if (x, y) not in corners(mu):
        raise InvalidShape(f'Cell {cell} is not a corner of {mu}')
    parts = list(mu)
    parts[y] -= 1
    return Partition(parts)


class SkewShape(namedtuple('SkewShape', ['outer', 'inner'])):
    """
    The skew diagram outer/inner
    """

    def __new__(cls, outer, inner=()):
        outer = Partition(outer)
        inner = Partition(inner)
        if not contains(outer, inner):
            raise InvalidShape(f'{inner} is not contained in {outer}')
        return super().__new__(cls, outer, inner)

    @property
    def size(self):
        return self.outer.size - self.inner.size

    @property
    def is_straight(self):
        return not self.inner

    def cells(self):
        return skew_cells(self.outer, self.inner)

    def __str__(self):
        if self.is_straight:
            return str(self.outer)
        return f'{self.outer}/{self.inner}'


def skew_cells(outer, inner=()):
    outer = Partition(outer)
    inner = Partition(inner)
    return [(x, y) for y, row in enumerate(outer) for x in range(inner.part(y), row)]


def is_horizontal_strip(outer, inner):
    """
    At most one cell per column
    """

    outer = Partition(outer)
    inner = Partition(inner)
    return contains(outer, inner) and all(outer.part(y) <= inner.part(y - 1) for y in range(1, len(outer)))


def is_vertical_strip(outer, inner):
    """
    At most one cell per row
    """

    outer = Partition(outer)
    inner = Partition(inner)
    return contains(outer, inner) and all(outer[y] - inner.part(y) <= 1 for y in range(len(outer)))


def _strip_rows(inner, size, outer, y):
    if size == 0:
        yield ()
        return
    if y > len(inner):
        return
    low = inner.part(y)
    high = low + size if y == 0 else min(inner[y - 1], low + size)
    if outer is not None:
        high = min(high, outer.part(y))
    for row in range(high, low - 1, -1):
        for rest in _strip_rows(inner, size - (row - low), outer, y + 1):
            yield (row - low, ) + rest


def horizontal_strips(inner, size, outer=None):
    """
    Partitions θ ⊇ inner with θ/inner a horizontal strip of the given size, θ ⊆ outer
    """

    inner = Partition(inner)
    outer = Partition(outer) if outer is not None else None
    result = []
    for added in _strip_rows(inner, size, outer, 0):
        parts = [inner.part(y) + a for y, a in enumerate(added)] + list(inner[len(added):])
        result.append(Partition(parts))
    return result


def vertical_strips(inner, size, outer=None):
    """
    Partitions θ ⊇ inner with θ/inner a vertical strip of the given size, θ ⊆ outer
    """

    outer_c = conjugate(Partition(outer)) if outer is not None else None
    return [conjugate(theta) for theta in horizontal_strips(conjugate(Partition(inner)), size, outer_c)]


class Tableau:
    """
    A filling of a (skew) shape, stored as rows bottom-up; row y starts at column inner_y
    """

    __slots__ = ('inner', 'rows')

    def __init__(self, rows, inner=()):
        rows = [tuple(int(v) for v in row) for row in rows]
        while rows and not rows[-1]:
            rows.pop()
        self.rows = tuple(rows)
        self.inner = Partition(inner)
        try:
            self.shape
        except InvalidShape as exc:
            raise InvalidTableau(f'Rows {self.to_lists()} over {self.inner} do not fill a skew shape') from exc

    @property
    def outer(self):
        height = max(len(self.rows), len(self.inner))
        return Partition(self.inner.part(y) + (len(self.rows[y]) if y < len(self.rows) else 0) for y in range(height))

    @property
    def shape(self):
        return SkewShape(self.outer, self.inner)

    @property
    def size(self):
        return sum(len(row) for row in self.rows)

    def entry(self, x, y):
        return self.rows[y][x - self.inner.part(y)]

    def cells(self):
        """
        (x, y, entry) triples, bottom row first
        """

        return [(self.inner.part(y) + i, y, v) for y, row in enumerate(self.rows) for i, v in enumerate(row)]

    def entries(self):
        return {(x, y): v for x, y, v in self.cells()}

    def reading_word(self):
        """
        Rows read left to right from the top row down
        """

        return tuple(v for row in reversed(self.rows) for v in row)

    def content(self):
        """
        Multiplicities of the entries 1, 2, ..., max
        """

        counts = Counter(v for row in self.rows for v in row)
        if not counts:
            return ()
        return tuple(counts.get(i, 0) for i in range(1, max(counts) + 1))

    def is_semistandard(self):
        filling = self.entries()
        for (x, y), v in filling.items():
            if v < 1:
                return False
            if (x - 1, y) in filling and filling[(x - 1, y)] > v:
                return False
            if (x, y - 1) in filling and filling[(x, y - 1)] >= v:
                return False
        return True

    def is_standard(self):
        values = sorted(v for row in self.rows for v in row)
        return self.is_semistandard() and values == list(range(1, len(values) + 1))

    def standardize(self):
        """
        Number equal entries left to right
        """

        order = sorted(self.cells(), key=lambda c: (c[2], c[0]))
        label = {(x, y): i + 1 for i, (x, y, _) in enumerate(order)}
        return Tableau([[label[(self.inner.part(y) + i, y)] for i in range(len(row))] for y, row in enumerate(self.rows)], self.inner)

    def to_lists(self):
        return [list(row) for row in self.rows]

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows and self.inner == other.inner

    def __hash__(self):
        return hash((self.rows, self.inner))

    def __repr__(self):
        return f'Tableau({self.to_lists()}, inner={self.inner!r})' if self.inner else f'Tableau({self.to_lists()})'

    def __str__(self):
        text = '[' + ','.join('[' + ','.join(str(v) for v in row) + ']' for row in self.rows) + ']'
        return f'{text}/{self.inner}' if self.inner else text


def reading_word(tau):
    return tau.reading_word()


def content(tau):
    return tau.content()


def standardize(tau):
    return tau.standardize()


def _as_shape(shape):
    if isinstance(shape, SkewShape):
        return shape
    if isinstance(shape, tuple) and len(shape) == 2 and all(isinstance(s, (tuple, list, str)) for s in shape):
        return SkewShape(*shape)
    return SkewShape(shape)


def _chain_to_tableau(chain, inner):
    outer = chain[-1]
    rows = []
    for y in range(len(outer)):
        row = []
        for x in range(inner.part(y), outer[y]):
            value = next(i for i, theta in enumerate(chain) if x < theta.part(y))
            row.append(value)
        rows.append(row)
    return Tableau(rows, inner)


def _content_chains(current, outer, sizes):
    if not sizes:
        if current == outer:
            yield (current, )
        return
    for theta in horizontal_strips(current, sizes[0], outer):
        for rest in _content_chains(theta, outer, sizes[1:]):
            yield (current, ) + rest


def _bounded_chains(current, outer, steps):
    if steps == 0:
        if current == outer:
            yield (current, )
        return
    remaining = outer.size - current.size
    for size in range(remaining + 1):
        for theta in horizontal_strips(current, size, outer):
            for rest in _bounded_chains(theta, outer, steps - 1):
                yield (current, ) + rest


def ssyt(shape, content=None, max_entry=None):
    """
    Semistandard tableaux of a straight or skew shape, with a given content or with
    entries at most max_entry, sorted by reading word

    Built as chains of horizontal strips: the cells holding i form θ_i/θ_{i-1}.
    """

    shape = _as_shape(shape)
    if content is not None:
        sizes = tuple(int(c) for c in content)
        if sum(sizes) != shape.size:
            return []
        chains = _content_chains(shape.inner, shape.outer, sizes)
    elif max_entry is not None:
        chains = _bounded_chains(shape.inner, shape.outer, max_entry)
    else:
        chains = _content_chains(shape.inner, shape.outer, (1, ) * shape.size)

    tableaux = [_chain_to_tableau(chain, shape.inner) for chain in chains]
    tableaux.sort(key=lambda tau: tau.reading_word())
    return tableaux


def standard_tableaux(mu):
    mu = Partition(mu)
    return ssyt(mu, content=(1, ) * mu.size)


def hook_count(mu):
    """
    Number of standard tableaux, n!/∏ hooks
    """

    mu = Partition(mu)
    return math.factorial(mu.size) // math.prod(hooks(mu))


def q_integer(k, x=q):
    """
    [k]_x = 1 + x + ... + x^{k-1}
    """

    return sum((x**i for i in range(k)), ZERO)


def qt_integer(k):
    """
    [k]_{q,t} = (q^k - t^k)/(q - t)
    """

    return sum((q**i * t**(k - 1 - i) for i in range(k)), ZERO)


def q_factorial(k):
    return math.prod((q_integer(i) for i in range(1, k + 1)), start=ONE)


def q_pochhammer(k, x=q):
    """
    (x;x)_k = ∏_{i=1..k} (1 - x^i)
    """

    return math.prod((1 - x**i for i in range(1, k + 1)), start=ONE)


@lru_cache(maxsize=None)
def q_binomial(top, bottom):
    """
    Gaussian binomial by the q-Pascal recursion
    """

    if bottom < 0 or bottom > top or top < 0:
        return ZERO
    if bottom in (0, top):
        return ONE
    return q**bottom * q_binomial(top - 1, bottom) + q_binomial(top - 1, bottom - 1)


def hook_count_q(mu):
    """
    Cocharge generating polynomial of the standard tableaux of shape μ

    Equals q^{n(μ)} (q;q)_n / ∏ (1 - q^hook).
    """

    mu = Partition(mu)
    numerator = q**n_mu(mu) * q_pochhammer(mu.size)
    denominator = math.prod((1 - q**h for h in hooks(mu)), start=ONE)
    return divide_exact(numerator, denominator)


def subpartition_poly(mu):
    """
    Σ q^{|ν|} over ν ⊆ μ
    """

    return sum((q**nu.size for nu in subpartitions(mu)), ZERO)


@lru_cache(maxsize=None)
def q_catalan_square(size):
    """
    Σ q^{|μ|} over μ inside the staircase (size-1, ..., 1, 0), by first return
    """

    if size == 0:
        return ONE
    return sum((q**(j * (size - j)) * q_catalan_square(j - 1) * q_catalan_square(size - j) for j in range(1, size + 1)), ZERO)


@lru_cache(maxsize=None)
def q_catalan_area(size):
    """
    Σ q^{area} over μ inside the staircase, area = |staircase| - |μ|

    This is q^{binom(n,2)} q_catalan_square(n) at q -> 1/q, and the polynomial
    paired with e_n by ∇ at t = 1.
    """

    if size == 0:
        return ONE
    return sum((q**(j - 1) * q_catalan_area(j - 1) * q_catalan_area(size - j) for j in range(1, size + 1)), ZERO)


@lru_cache(maxsize=None)
def _kostka_chains(current, lam, sizes):
    if not sizes:
        return 1 if current == lam else 0
    return sum(_kostka_chains(theta, lam, sizes[1:]) for theta in horizontal_strips(current, sizes[0], lam))


def kostka(lam, mu):
    """
    Number of semistandard tableaux of shape λ and content μ
    """

    lam = Partition(lam)
    sizes = tuple(int(c) for c in mu)
    if lam.size != sum(sizes):
        raise SizeMismatch(f'Kostka number needs |λ| = |μ|, got {lam} and {render_partition(Partition(sorted(sizes, reverse=True)))}')
    return _kostka_chains(Partition(), lam, sizes)


def _require_straight_ssyt(tau):
    if tau.inner:
        raise InvalidTableau(f'Expected a straight shape, got {tau.shape}')
    if not tau.is_semistandard():
        raise InvalidTableau(f'{tau} is not semistandard')


def minimize(tau):
    """
    Relabel the standardization of τ: 1 gets 0, and i+1 keeps the value of i when it
    sits strictly right of i, otherwise it gets one more

    For a standard tableau the entries sum to its cocharge.
    """

    _require_straight_ssyt(tau)
    std = tau.standardize()
    where = {v: (x, y) for x, y, v in std.cells()}
    value = {}
    for i in range(1, len(where) + 1):
        if i == 1:
            value[i] = 0
        elif where[i][0] > where[i - 1][0]:
            value[i] = value[i - 1]
        else:
            value[i] = value[i - 1] + 1
    return Tableau([[value[v] for v in row] for row in std.rows])


def word_charge(word):
    """
    Charge of a word whose content is a partition

    Standard subwords are peeled off by scanning leftward, cyclically, for 1, 2, ...
    starting from the right end; a letter found by wrapping around sits right of its
    predecessor and raises the index by one.
    """

    remaining = list(word)
    total = 0
    while remaining:
        size = len(remaining)
        cursor = size
        index = 0
        picked = set()
        for letter in range(1, max(remaining) + 1):
            found = next((k % size for k in range(cursor - 1, cursor - 1 - size, -1) if remaining[k % size] == letter), None)
            if found is None:
                raise InvalidTableau(f'Content of {tuple(word)} is not a partition')
            if found > cursor:
                index += 1
            total += index
            picked.add(found)
            cursor = found
        remaining = [v for k, v in enumerate(remaining) if k not in picked]
    return total


def _weight(tau):
    content = tau.content()
    if any(a < b for a, b in zip(content, content[1:])):
        raise InvalidTableau(f'Content {content} of {tau} is not a partition')
    return Partition(content)


def charge(tau):
    """
    Charge of the reading word
    """

    _require_straight_ssyt(tau)
    _weight(tau)
    return word_charge(tau.reading_word())


def cocharge(tau):
    """
    n(content) - charge
    """

    _require_straight_ssyt(tau)
    return n_mu(_weight(tau)) - word_charge(tau.reading_word())


def kostka_foulkes(lam, mu):
    """
    K_{λμ}(q) = Σ q^{charge} over semistandard tableaux of shape λ and content μ
    """

    lam = Partition(lam)
    mu = Partition(mu)
    if lam.size != mu.size:
        raise SizeMismatch(f'Kostka-Foulkes polynomial needs |λ| = |μ|, got {lam} and {mu}')
    return sum((q**charge(tau) for tau in ssyt(lam, content=mu)), ZERO)


def bpr_denominator(size):
    """
    ∏_{λ ⊢ n} Σ_{μ ⊢ n} K_{λμ}

    Each factor is the m-coefficient sum of s_λ, so the product is the volume
    ratio of the m-positive simplex to its Schur positive part.
    """

    shapes = partitions(size)
    return math.prod(sum(kostka(lam, mu) for mu in shapes) for lam in shapes)


@lru_cache(maxsize=None)
def involution_count(size):
    if size < 2:
        return 1
    return involution_count(size - 1) + (size - 1) * involution_count(size - 2)


def insert(tableau, value):
    """
    Row insertion of value into a semistandard tableau

    Returns the new tableau and the cell (x, y) added to its shape.
    """

    tableau = tableau if isinstance(tableau, Tableau) else Tableau(tableau)
    _require_straight_ssyt(tableau)
    rows = [list(row) for row in tableau.rows]
    y = 0
    while True:
        if y == len(rows):
            rows.append([value])
            return Tableau(rows), (0, y)
        row = rows[y]
        idx = bisect_right(row, value)
        if idx == len(row):
            row.append(value)
            return Tableau(rows), (idx, y)
        value, row[idx] = row[idx], value
        y += 1


def insert_word(word, tableau=None):
    """
    (tableau ← w_1 ← w_2 ← ...), starting from the empty tableau by default
    """

    result = tableau if tableau is not None else Tableau([])
    for value in word:
        result, _ = insert(result, value)
    return result


class Biword:
    """
    A two-row array with columns in lexicographic order (bottom row major)
    """

    __slots__ = ('bottom', 'top')

    def __init__(self, top, bottom):
        self.top = tuple(int(a) for a in top)
        self.bottom = tuple(int(b) for b in bottom)
        if len(self.top) != len(self.bottom):
            raise InvalidBiword(f'Rows of different lengths: {len(self.top)} and {len(self.bottom)}')
        pairs = list(zip(self.bottom, self.top))
        if any(a > b for a, b in zip(pairs, pairs[1:])):
            raise InvalidBiword(f'Columns are not in lexicographic order: {self}')

    @classmethod
    def from_word(cls, word):
        """
        The biword with bottom row 1..n above the word
        """

        word = tuple(word)
        return cls(word, range(1, len(word) + 1))

    @classmethod
    def from_pairs(cls, pairs):
        """
        Sort (bottom, top) pairs into a biword
        """

        ordered = sorted(pairs)
        return cls([a for _, a in ordered], [b for b, _ in ordered])

    def pairs(self):
        return list(zip(self.bottom, self.top))

    def inverse(self):
        return Biword.from_pairs((a, b) for b, a in self.pairs())

    def __len__(self):
        return len(self.top)

    def __eq__(self, other):
        return isinstance(other, Biword) and self.top == other.top and self.bottom == other.bottom

    def __hash__(self):
        return hash((self.top, self.bottom))

    def __repr__(self):
        return f'Biword({list(self.top)}, {list(self.bottom)})'

    def __str__(self):
        return ' '.join(f'{b}:{a}' for b, a in self.pairs())


def rsk(biword):
    """
    Insert the top row, recording the bottom row: w ↦ (P, Q)
    """

    if not isinstance(biword, Biword):
        biword = Biword.from_word(biword)
    p_tab = Tableau([])
    q_rows = []
    for b, a in biword.pairs():
        p_tab, (x, y) = insert(p_tab, a)
        if y == len(q_rows):
            q_rows.append([])
        q_rows[y].append(b)
        if len(q_rows[y]) != x + 1:
            raise InvalidBiword(f'Recording tableau out of step at cell {(x, y)}')
    return p_tab, Tableau(q_rows)


def unrsk(p_tab, q_tab):
    """
    Inverse of rsk on a pair of semistandard tableaux of the same shape
    """

    p_tab = p_tab if isinstance(p_tab, Tableau) else Tableau(p_tab)
    q_tab = q_tab if isinstance(q_tab, Tableau) else Tableau(q_tab)
    if p_tab.shape != q_tab.shape or p_tab.inner:
        raise InvalidBiword(f'P and Q need the same straight shape, got {p_tab.shape} and {q_tab.shape}')
    for tab in (p_tab, q_tab):
        if not tab.is_semistandard():
            raise InvalidBiword(f'{tab} is not semistandard')

    p_rows = [list(row) for row in p_tab.rows]
    q_rows = [list(row) for row in q_tab.rows]
    pairs = []
    while q_rows:
        top_value = max(row[-1] for row in q_rows)
        y = max((y for y, row in enumerate(q_rows) if row[-1] == top_value), key=lambda y: len(q_rows[y]))
        q_rows[y].pop()
        value = p_rows[y].pop()
        for row in reversed(p_rows[:y]):
            idx = bisect_left(row, value) - 1
            value, row[idx] = row[idx], value
        if not q_rows[y]:
            del q_rows[y]
            del p_rows[y]
        pairs.append((top_value, value))

    pairs.reverse()
    logging.debug('unrsk recovered %d columns', len(pairs))
    return Biword([a for _, a in pairs], [b for b, _ in pairs])


def multinomial(total, parts):
    """
    total! / ∏ part!
    """

    parts = [p for p in parts if p]
    if sum(parts) != total:
        return 0
    result = math.factorial(total)
    for p in parts:
        result //= math.factorial(p)
    return result


def strip_shape(mu, height):
    """
    The vertical strip (μ + 1^height)/μ
    """

    mu = Partition(mu)
    if len(mu) > height:
        raise InvalidShape(f'{mu} has more than {height} parts')
    return SkewShape([mu.part(y) + 1 for y in range(height)], mu)


def riser_sequence(mu, height):
    """
    Column heights of (μ + 1^height)/μ from left to right, zeros included
    """

    mu = Partition(mu)
    if len(mu) > height:
        raise InvalidShape(f'{mu} has more than {height} parts')
    counts = Counter(mu.part(y) for y in range(height))
    top = max(counts) if counts else 0
    return tuple(counts.get(x, 0) for x in range(top + 1))

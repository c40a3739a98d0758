#!/usr/bin/env python
"""
Command line front end: evaluate expressions, query the combinatorial
enumerations and reproduce the reference tables
"""

import argparse
import json
import logging
import os
import sys
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

import chevron

from qtsym import expr, macdonald, rectangular, scalars, shapes, symfunc, tamari
from qtsym.errors import BasisError, ParseError, QtSymError
from qtsym.shapes import Partition, partitions
from qtsym.symfunc import SymFunc

PACKAGE_DIR = os.path.dirname(os.path.abspath(__file__))
GOLDEN_DIR = os.path.join(PACKAGE_DIR, 'data', 'golden')
TEMPLATE_DIR = os.path.join(PACKAGE_DIR, 'templates')

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_EVALUATION = 3
EXIT_MISMATCH = 4

OutputRecord = namedtuple('OutputRecord', ['request', 'kind', 'text', 'terms'])


def symfunc_terms(f):
    """
    Structured terms of a SymFunc in canonical order
    """

    return [{
        'basis': f.basis,
        'partition': list(mu),
        'coefficient': scalars.render(c)
    } for mu, c in sorted(f.terms.items(), key=lambda kv: (kv[0].size, tuple(-p for p in kv[0])))]


def make_record(request, value):
    if isinstance(value, SymFunc):
        return OutputRecord(request, 'symfunc', symfunc.render(value), symfunc_terms(value))
    return OutputRecord(request, 'scalar', scalars.render(scalars.scalar(value)), [])


def record_to_json(record):
    return dict(record._asdict())


def parse_bindings(text):
    """
    Read q=1,t=1/q into {'q': 1, 't': 1/q}
    """

    bindings = {}
    if not text:
        return bindings
    column = 1
    for piece in text.split(','):
        if '=' not in piece:
            raise ParseError(1, column, f'Expected name=value, found {piece!r}')
        name, value = (part.strip() for part in piece.split('=', 1))
        if name not in scalars.PARAMETERS:
            raise ParseError(1, column, f'Unknown parameter {name!r}')
        try:
            bindings[name] = scalars.parse(value)
        except QtSymError as exc:
            raise ParseError(1, column + piece.index('=') + 1, f'Cannot read {value!r}') from exc
        column += len(piece) + 1
    return bindings


def specialize(value, bindings):
    if not bindings:
        return value
    if isinstance(value, SymFunc):
        return symfunc.map_coefficients(value, lambda c: scalars.substitute(c, bindings))
    return scalars.substitute(value, bindings)


class Evaluator:
    """
    Runs a single request and turns its value into an OutputRecord
    """
    def __init__(self, config):
        self.config = config
        self.bindings = parse_bindings(getattr(config, 'at', None))
        self.basis = getattr(config, 'basis', None)
        macdonald.set_max_degree(getattr(config, 'max_degree', macdonald.DEFAULT_MAX_DEGREE))

    def finish(self, request, value):
        """
        Apply --basis and --at, then wrap the value
        """

        if isinstance(value, SymFunc) and self.basis:
            if self.basis == 'pi' and self.bindings:
                raise BasisError('The π basis depends on q and t; drop --at or pick another basis')
            value = symfunc.convert(value, self.basis)
        value = specialize(value, self.bindings)
        logging.debug('Finished %s', request)
        return make_record(request, value)

    def evaluate_text(self, text):
        return expr.evaluate(expr.parse(text))

    def run(self, command):
        handler = getattr(self, f'cmd_{command}', None)
        if handler is None:
            raise QtSymError(f'Unknown command {command}')
        return handler()

    def cmd_eval(self):
        return self.finish(self.config.expression, self.evaluate_text(self.config.expression))

    def cmd_convert(self):
        value = self.evaluate_text(self.config.expression)
        if not isinstance(value, SymFunc):
            value = SymFunc.constant(value)
        return self.finish(f'convert({self.config.expression},{self.config.target})', symfunc.convert(value, self.config.target))

    def cmd_scalar(self):
        left = self._symfunc(self.config.left)
        right = self._symfunc(self.config.right)
        if self.config.qt:
            value = macdonald.qt_scalar(left, right)
        else:
            value = symfunc.hall(left, right)
        return self.finish(f'scalar({self.config.left},{self.config.right})', value)

    def cmd_nabla(self):
        value = macdonald.nabla(self._symfunc(self.config.expression), power=self.config.power)
        return self.finish(f'nabla({self.config.expression})', value)

    def cmd_delta(self):
        value = macdonald.delta_f(self._symfunc(self.config.function), self._symfunc(self.config.expression))
        return self.finish(f'delta({self.config.function},{self.config.expression})', value)

    def cmd_macdonald(self):
        mu = shapes.parse_partition(self.config.partition)
        value = macdonald.macdonald_P(mu) if self.config.kind == 'P' else macdonald.macdonald_H(mu)
        return self.finish(f'{self.config.kind}[{",".join(str(p) for p in mu)}]', value)

    def cmd_qtkostka(self):
        lam = shapes.parse_partition(self.config.lam)
        mu = shapes.parse_partition(self.config.mu)
        return self.finish(f'qtkostka({lam},{mu})', macdonald.qt_kostka(lam, mu))

    def cmd_catalan(self):
        m, n = self.config.m, self.config.n
        if self.config.q:
            value = rectangular.cat_q_constant_term(m, n) if self.config.formula else rectangular.cat_q(m, n)
        elif self.config.formula:
            value = rectangular.bizley_cat(m, n)
        else:
            value = len(rectangular.dyck_paths(m, n))
        return self.finish(f'catalan({m},{n})', value)

    def cmd_parking(self):
        m, n = self.config.m, self.config.n
        if self.config.list:
            lines = []
            for path in rectangular.dyck_paths(m, n):
                words = ' '.join(str(pf) for pf in rectangular.parking_enumerate(path))
                lines.append(f'{path}: {words}')
            return OutputRecord(f'parking({m},{n})', 'text', '\n'.join(lines), [])
        value = rectangular.bizley_park(m, n) if self.config.formula else rectangular.parking_count(m, n)
        return self.finish(f'parking({m},{n})', value)

    def cmd_qmn(self):
        m, n = self.config.m, self.config.n
        operator = rectangular.q_operator(m, n, self.config.split)
        if self.config.word:
            return OutputRecord(f'qmn({m},{n})', 'text', operator.render(), [])
        return self.finish(f'qmn({m},{n})', operator.apply(scalars.ONE))

    def cmd_seed(self):
        g = self._symfunc(self.config.expression)
        value = rectangular.seed_family(g, self.config.a, self.config.b)
        return self.finish(f'seed({self.config.expression},{self.config.a},{self.config.b})', value)

    def cmd_tamari(self):
        m, n = self.config.m, self.config.n
        poset = tamari.tamari_poset(m, n)
        if self.config.export_dot:
            return OutputRecord(f'tamari({m},{n})', 'text', tamari.export_dot(poset), [])
        if self.config.decorated:
            return self.finish(f'tamari({m},{n})', poset.decorated_count())
        return self.finish(f'tamari({m},{n})', poset.interval_count())

    def _symfunc(self, text):
        value = self.evaluate_text(text)
        return value if isinstance(value, SymFunc) else SymFunc.constant(value)


TableSpec = namedtuple('TableSpec', ['title', 'template', 'corner', 'rows', 'columns', 'cell'])

_KOSTKA_ORDER = tuple(partitions(4))

TABLES = {
    'table1': TableSpec(
        'Number of (m,n)-Dyck paths', 'table.mustache', 'n\\m', range(1, 8), lambda n: range(1, 10),
        lambda n, m: len(rectangular.dyck_paths(m, n))
    ),
    'table2': TableSpec(
        'Number of (m,n)-parking functions', 'table.mustache', 'n\\m', range(1, 8), lambda n: range(1, 9),
        lambda n, m: rectangular.parking_count(m, n)
    ),
    'table3': TableSpec(
        'Number of intervals', 'table.mustache', 'n\\m', range(1, 8), lambda n: range(1, n + 1),
        lambda n, m: tamari.interval_count(m, n)
    ),
    'table4': TableSpec(
        'Number of decorated intervals', 'table.mustache', 'n\\m', range(1, 8), lambda n: range(1, n + 1),
        lambda n, m: tamari.decorated_count(m, n)
    ),
    'kostka4': TableSpec(
        'Kostka numbers K(λ,μ), n=4', 'matrix.mustache', 'λ\\μ', _KOSTKA_ORDER, lambda lam: _KOSTKA_ORDER,
        shapes.kostka
    ),
    'qkostka4': TableSpec(
        'q-Kostka polynomials K(λ,μ;q), n=4', 'matrix.mustache', 'λ\\μ', _KOSTKA_ORDER, lambda lam: _KOSTKA_ORDER,
        shapes.kostka_foulkes
    ),
    'qtkostka4': TableSpec(
        'q,t-Kostka polynomials, row μ holds H_μ in the Schur basis, n=4', 'matrix.mustache', 'μ\\λ', _KOSTKA_ORDER,
        lambda mu: _KOSTKA_ORDER, lambda mu, lam: macdonald.qt_kostka(lam, mu)
    ),
}


def load_golden(name, directory=GOLDEN_DIR):
    """
    Rows of a golden file: whitespace separated cells, '#' starts a comment
    """

    path = os.path.join(directory, f'{name}.txt')
    if not os.path.isfile(path):
        raise QtSymError(f'Cannot find golden file {path}')
    rows = []
    with open(path, 'r', encoding='UTF-8') as ifh:
        for line in ifh:
            line = line.split('#', 1)[0].strip()
            if line:
                rows.append(line.split())
    return rows


def _label(value):
    return shapes.render_partition(value) if isinstance(value, Partition) else str(value)


class Reproducer:
    """
    Recomputes the reference tables and diffs them against the golden values
    """
    def __init__(self, config):
        self.config = config
        self.templates = {}
        for name in ('table.mustache', 'matrix.mustache'):
            template = os.path.join(config.templates, name)
            if not os.path.isfile(template):
                raise QtSymError(f'Cannot find template file {template}')
            with open(template, 'r', encoding='UTF-8') as ifh:
                self.templates[name] = ifh.read()
        self.manifest = {'tables': []}
        macdonald.set_max_degree(getattr(config, 'max_degree', macdonald.DEFAULT_MAX_DEGREE))

    def compute(self, spec):
        jobs = [(row, col) for row in spec.rows for col in spec.columns(row)]
        with ThreadPoolExecutor(max_workers=self.config.workers) as executor:
            values = list(executor.map(lambda job: spec.cell(*job), jobs))
        grid = {}
        for (row, col), value in zip(jobs, values):
            grid[(row, col)] = scalars.scalar(value)
        return grid

    def compare(self, name, spec, grid):
        golden = load_golden(name, getattr(self.config, 'golden', None) or GOLDEN_DIR)
        mismatches = []
        rows = list(spec.rows)
        if len(golden) != len(rows):
            mismatches.append(f'{name}: expected {len(rows)} golden rows, found {len(golden)}')
            return mismatches
        for row, cells in zip(rows, golden):
            columns = list(spec.columns(row))
            if len(cells) != len(columns):
                mismatches.append(f'{name} row {_label(row)}: expected {len(columns)} cells, found {len(cells)}')
                continue
            for col, text in zip(columns, cells):
                expected = scalars.parse(text)
                got = grid[(row, col)]
                if expected != got:
                    mismatches.append(
                        f'{name} ({_label(row)},{_label(col)}): expected {scalars.render(expected)}, got {scalars.render(got)}'
                    )
        return mismatches

    def render(self, name, spec, grid, mismatches):
        header = max((list(spec.columns(row)) for row in spec.rows), key=len)
        texts = {key: scalars.render(value) for key, value in grid.items()}
        width = max([len(t) for t in texts.values()] + [len(_label(c)) for c in header] + [1])
        label_width = max([len(_label(r)) for r in spec.rows] + [len(spec.corner)])
        data = {
            'title': spec.title,
            'corner': spec.corner.ljust(label_width),
            'header': [{'text': _label(c).rjust(width)} for c in header],
            'rows': [{
                'label': _label(row).ljust(label_width),
                'cells': [{'text': texts[(row, col)].rjust(width)} for col in spec.columns(row)]
            } for row in spec.rows],
            'mismatches': [{'text': m} for m in mismatches],
            'ok': not mismatches
        }
        return chevron.render(template=self.templates[spec.template], data=data)

    def reproduce(self, name):
        if name not in TABLES:
            raise QtSymError(f'Unknown table {name}; choose from {", ".join(TABLES)}')
        spec = TABLES[name]
        logging.info('Reproducing %s', name)
        grid = self.compute(spec)
        mismatches = self.compare(name, spec, grid)
        for mismatch in mismatches:
            logging.warning(mismatch)
        text = self.render(name, spec, grid, mismatches)
        rows = [[scalars.render(grid[(row, col)]) for col in spec.columns(row)] for row in spec.rows]
        self.manifest['tables'].append({'name': name, 'ok': not mismatches, 'mismatches': mismatches, 'rows': rows})
        return OutputRecord(name, 'table', text, []), mismatches

    def write_manifest(self):
        if self.config.output:
            with open(self.config.output, 'w', encoding='UTF-8') as ofh:
                json.dump(self.manifest, ofh, indent=4)


def emit(record, as_json):
    if as_json:
        print(json.dumps(record_to_json(record), indent=4, ensure_ascii=False))
    else:
        print(record.text)


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', dest='json', action='store_true', help='print a JSON record; default is plain text', default=False)
    common.add_argument('--at', dest='at', metavar='BINDINGS', help='specialize parameters, e.g. q=1,t=1', default=None)
    common.add_argument('--basis', dest='basis', choices=symfunc.BASES, help='basis of symmetric function output', default=None)
    common.add_argument(
        '--max-degree',
        dest='max_degree',
        type=int,
        metavar='N',
        help=f'largest degree of the Macdonald cache; default is {macdonald.DEFAULT_MAX_DEGREE}',
        default=macdonald.DEFAULT_MAX_DEGREE
    )
    common.add_argument(
        '-v',
        '--verbose',
        dest='verbose',
        action='store_true',
        help='enable chatty logging; default is false',
        default=False
    )
    return common


def build_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(prog='qtsym', description='Symmetric functions over Q(q,t,u)')
    commands = parser.add_subparsers(dest='command', required=True)

    sub = commands.add_parser('eval', parents=[common], help='evaluate an expression')
    sub.add_argument('expression')

    sub = commands.add_parser('convert', parents=[common], help='rewrite in another basis')
    sub.add_argument('expression')
    sub.add_argument('target', choices=symfunc.BASES)

    sub = commands.add_parser('scalar', parents=[common], help='Hall or q,t scalar product')
    sub.add_argument('left')
    sub.add_argument('right')
    sub.add_argument('--qt', dest='qt', action='store_true', help='use the q,t scalar product', default=False)

    sub = commands.add_parser('nabla', parents=[common], help='apply nabla')
    sub.add_argument('expression')
    sub.add_argument('--power', dest='power', type=int, help='power of nabla; default is 1', default=1)

    sub = commands.add_parser('delta', parents=[common], help='apply Delta_f')
    sub.add_argument('function')
    sub.add_argument('expression')

    sub = commands.add_parser('macdonald', parents=[common], help='a Macdonald polynomial')
    sub.add_argument('partition')
    sub.add_argument('--kind', dest='kind', choices=('H', 'P'), help='H (modified) or P; default is H', default='H')

    sub = commands.add_parser('qtkostka', parents=[common], help='a q,t-Kostka polynomial')
    sub.add_argument('lam')
    sub.add_argument('mu')

    for name, text in (('catalan', 'count (m,n)-Dyck paths'), ('parking', 'count (m,n)-parking functions')):
        sub = commands.add_parser(name, parents=[common], help=text)
        sub.add_argument('m', type=int)
        sub.add_argument('n', type=int)
        sub.add_argument('--formula', dest='formula', action='store_true', help='use the closed formula', default=False)
        if name == 'catalan':
            sub.add_argument('--q', dest='q', action='store_true', help='the area q-analogue', default=False)
        else:
            sub.add_argument('--list', dest='list', action='store_true', help='list the parking words', default=False)

    sub = commands.add_parser('qmn', parents=[common], help='Q_mn applied to 1')
    sub.add_argument('m', type=int)
    sub.add_argument('n', type=int)
    sub.add_argument('--word', dest='word', action='store_true', help='print the bracket word instead', default=False)
    sub.add_argument('--split', dest='split', type=int, help='index of the split to use; default is 0', default=0)

    sub = commands.add_parser('seed', parents=[common], help='the (a,b) seed family of a function')
    sub.add_argument('expression')
    sub.add_argument('a', type=int)
    sub.add_argument('b', type=int)

    sub = commands.add_parser('tamari', parents=[common], help='Tamari interval enumeration')
    sub.add_argument('m', type=int)
    sub.add_argument('n', type=int)
    group = sub.add_mutually_exclusive_group()
    group.add_argument('--intervals', dest='intervals', action='store_true', help='count intervals (default)', default=False)
    group.add_argument('--decorated', dest='decorated', action='store_true', help='count decorated intervals', default=False)
    group.add_argument('--export-dot', dest='export_dot', action='store_true', help='print the Hasse diagram', default=False)

    sub = commands.add_parser('reproduce', parents=[common], help='recompute a reference table')
    sub.add_argument('tables', nargs='+', choices=list(TABLES) + ['all'])
    sub.add_argument(
        '-t',
        '--templates',
        dest='templates',
        metavar='PATH',
        help='template file directory; default is the packaged templates',
        default=TEMPLATE_DIR
    )
    sub.add_argument(
        '-g',
        '--golden',
        dest='golden',
        metavar='PATH',
        help='golden file directory; default is the packaged golden tables',
        default=GOLDEN_DIR
    )
    sub.add_argument('-o', '--output', dest='output', metavar='PATH', help='JSON manifest path', default=None)
    sub.add_argument('-w', '--workers', dest='workers', type=int, help='worker threads; default is 4', default=4)
    return parser


def run(args):
    """
    Execute parsed arguments, returning the exit code
    """

    try:
        if args.command == 'reproduce':
            reproducer = Reproducer(args)
            names = list(TABLES) if 'all' in args.tables else args.tables
            failed = False
            for name in names:
                record, mismatches = reproducer.reproduce(name)
                failed = failed or bool(mismatches)
                emit(record, args.json)
            reproducer.write_manifest()
            return EXIT_MISMATCH if failed else EXIT_OK

        emit(Evaluator(args).run(args.command), args.json)
        return EXIT_OK
    except ParseError as exc:
        logging.error(exc)
        return EXIT_PARSE
    except QtSymError as exc:
        logging.error(exc)
        return EXIT_EVALUATION


def main(argv=None):
    """
    Script main entry point
    """

    args = build_parser().parse_args(argv)

    if args.verbose:
        logging.basicConfig(level=logging.DEBUG)
    else:
        logging.basicConfig(level=logging.INFO)

    sys.exit(run(args))


if __name__ == '__main__':
    main()

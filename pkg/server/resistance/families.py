# -*- coding: utf-8 -*-
"""
Declarative Laplacian matrix families and the minor algebra built on them.

A family is described by one pattern per diagonal. Each pattern is a list
of head overrides, a periodic core and a list of tail overrides; position i
(1-based) of a diagonal of length L reads head[i-1] when i falls inside the
head, the matching tail value when it falls inside the last len(tail)
positions, and core[(i-1) % len(core)] otherwise. The head wins when head
and tail overlap on tiny instances.

Fan and wheel graphs add a dense border: the patterns then describe the
leading (N-1)x(N-1) block, the last row and column hold `value` and the
corner holds N + corner_offset.
"""
import json
import logging
from collections import namedtuple

from resistance.errors import InvalidFamilyDefinition, SizeTooSmall, UnknownFamily

logger = logging.getLogger(__name__)

LAST = 'n'
PROBE_SPAN = 4


class Pattern(namedtuple('Pattern', 'head core tail')):
    __slots__ = ()

    def __new__(cls, core=(0,), head=(), tail=()):
        if not core:
            raise InvalidFamilyDefinition("a pattern needs a non-empty periodic core")
        return super(Pattern, cls).__new__(cls, tuple(head), tuple(core), tuple(tail))

    def value(self, i, length):
        if i <= len(self.head):
            return self.head[i - 1]
        if i > length - len(self.tail):
            return self.tail[i - (length - len(self.tail)) - 1]
        return self.core[(i - 1) % len(self.core)]

    def to_dict(self):
        data = {'core': list(self.core)}
        if self.head:
            data['head'] = list(self.head)
        if self.tail:
            data['tail'] = list(self.tail)
        return data

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(core=[int(v) for v in data.get('core', [0])],
                       head=[int(v) for v in data.get('head', [])],
                       tail=[int(v) for v in data.get('tail', [])])
        except (AttributeError, TypeError, ValueError) as exc:
            raise InvalidFamilyDefinition("bad pattern %r: %s" % (data, exc))


Border = namedtuple('Border', 'value corner_offset')


def _index(k, size):
    return size + k if k < 0 else k - 1


def drop(matrix, rows, cols):
    """
    Minor of `matrix` with the 1-based `rows` and `cols` removed.
    """
    rows, cols = set(rows), set(cols)
    return tuple(
        tuple(v for j, v in enumerate(line, 1) if j not in cols)
        for i, line in enumerate(matrix, 1) if i not in rows)


def transpose(matrix):
    return tuple(zip(*matrix))


class FamilySpec(object):
    """
    Rule producing the N x N Laplacian of a graph family.

    `min_size` is the probe size used by the expansion engine. `graph_step`
    is a (modulus, residue) pair selecting the sizes N at which the pattern
    is the Laplacian of an actual graph (the ladder only exists for even N).
    """

    def __init__(self, name, diag, offdiags=None, border=None, entries=(), min_size=5,
                 graph_step=(1, 0), denominator='first', denominator_strategy='shared',
                 asymptotic_shifts=None, description=''):
        self.name = name
        self.diag = diag
        self.offdiags = dict((int(k), p) for k, p in (offdiags or {}).items())
        self.border = border
        self.entries = tuple(tuple(int(v) for v in e) for e in entries)
        self.min_size = int(min_size)
        self.graph_step = tuple(graph_step)
        self.denominator = denominator
        self.denominator_strategy = denominator_strategy
        self.asymptotic_shifts = dict(asymptotic_shifts or {})
        self.description = description
        self._validate()

    def _validate(self):
        if self.min_size < 1:
            raise InvalidFamilyDefinition("%s: min_size must be positive" % self.name)
        if any(k < 1 for k in self.offdiags):
            raise InvalidFamilyDefinition("%s: off-diagonal offsets start at 1" % self.name)
        if self.denominator not in ('first', 'last'):
            raise InvalidFamilyDefinition("%s: denominator must be first or last" % self.name)
        if self.denominator_strategy not in ('shared', 'expand', 'fixture'):
            raise InvalidFamilyDefinition(
                "%s: unknown denominator strategy %r" % (self.name, self.denominator_strategy))
        if any(len(e) != 3 or 0 in e[:2] for e in self.entries):
            raise InvalidFamilyDefinition("%s: entries are [row, col, value] triples" % self.name)

    def __repr__(self):
        return "<FamilySpec %s>" % self.name

    def is_graph_size(self, size):
        modulus, residue = self.graph_step
        return size >= self.min_size and size % modulus == residue % modulus

    def laplacian(self, size):
        if size < 1:
            raise SizeTooSmall("%s: size must be positive, got %d" % (self.name, size))
        m = [[0] * size for _ in range(size)]
        block = size - 1 if self.border else size
        for i in range(1, block + 1):
            m[i - 1][i - 1] = self.diag.value(i, block)
        for k, pattern in self.offdiags.items():
            length = block - k
            for i in range(1, length + 1):
                v = pattern.value(i, length)
                m[i - 1][i - 1 + k] = v
                m[i - 1 + k][i - 1] = v
        if self.border:
            for j in range(size - 1):
                m[size - 1][j] = m[j][size - 1] = self.border.value
            m[size - 1][size - 1] = size + self.border.corner_offset
        for r, c, v in self.entries:
            rr, cc = _index(r, size), _index(c, size)
            if 0 <= rr < size and 0 <= cc < size:
                m[rr][cc] = m[cc][rr] = v
        return tuple(tuple(line) for line in m)

    def to_dict(self):
        data = {
            'name': self.name,
            'diag': self.diag.to_dict(),
            'offdiags': dict((str(k), p.to_dict()) for k, p in sorted(self.offdiags.items())),
            'min_size': self.min_size,
            'graph_step': list(self.graph_step),
            'denominator': self.denominator,
            'denominator_strategy': self.denominator_strategy,
        }
        if self.border:
            data['border'] = {'value': self.border.value, 'corner_offset': self.border.corner_offset}
        if self.entries:
            data['entries'] = [list(e) for e in self.entries]
        if self.asymptotic_shifts:
            data['asymptotic_shifts'] = dict(self.asymptotic_shifts)
        if self.description:
            data['description'] = self.description
        return data

    @classmethod
    def from_dict(cls, data):
        try:
            border = data.get('border')
            return cls(
                name=data['name'],
                diag=Pattern.from_dict(data['diag']),
                offdiags=dict((k, Pattern.from_dict(p)) for k, p in data.get('offdiags', {}).items()),
                border=Border(int(border['value']), int(border['corner_offset'])) if border else None,
                entries=data.get('entries', ()),
                min_size=data.get('min_size', 5),
                graph_step=data.get('graph_step', (1, 0)),
                denominator=data.get('denominator', 'first'),
                denominator_strategy=data.get('denominator_strategy', 'shared'),
                asymptotic_shifts=data.get('asymptotic_shifts'),
                description=data.get('description', ''),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidFamilyDefinition("bad family definition: %s" % exc)


class FamilyHandle(object):
    """
    A rule n -> square integer matrix. Instances are cached per handle.
    """
    min_size = 1

    def __init__(self):
        self._instances = {}

    def dimension(self, n):
        raise NotImplementedError

    def _build(self, n):
        raise NotImplementedError

    def describe(self):
        raise NotImplementedError

    def instantiate(self, n):
        if n < self.min_size:
            raise SizeTooSmall("%s needs n >= %d, got %d" % (self.describe(), self.min_size, n))
        if n not in self._instances:
            self._instances[n] = self._build(n)
        return self._instances[n]

    def __repr__(self):
        return "<%s %s>" % (self.__class__.__name__, self.describe())


class RootHandle(FamilyHandle):
    """
    n -> spec(n + offset) with `rows` and `cols` deleted; LAST names the
    last index of the instance.
    """

    def __init__(self, spec, rows=(), cols=(), offset=0):
        super(RootHandle, self).__init__()
        if len(rows) != len(cols):
            raise InvalidFamilyDefinition("a minor must delete as many rows as columns")
        self.spec = spec
        self.rows = tuple(rows)
        self.cols = tuple(cols)
        self.offset = int(offset)
        explicit = [k for k in self.rows + self.cols if k != LAST]
        smallest = max([len(self.rows) + 1] + explicit)
        self.min_size = max(1, smallest - self.offset)

    def _resolve(self, indices, size):
        return [size if k == LAST else k for k in indices]

    def dimension(self, n):
        return n + self.offset - len(self.rows)

    def _build(self, n):
        size = n + self.offset
        matrix = self.spec.laplacian(size)
        return drop(matrix, self._resolve(self.rows, size), self._resolve(self.cols, size))

    def by_dimension(self):
        """
        The same family re-indexed so that the parameter equals the matrix dimension.
        """
        return RootHandle(self.spec, self.rows, self.cols, offset=len(self.rows))

    def describe(self):
        def fmt(indices):
            return ','.join(str(k) for k in indices)
        shift = '' if not self.offset else ('%+d' % self.offset)
        return "%s[n%s](%s|%s)" % (self.spec.name, shift, fmt(self.rows), fmt(self.cols))


class DerivedHandle(FamilyHandle):
    """
    n -> parent(n + 1) with row `row` and column `col` removed.
    """

    def __init__(self, parent, row, col):
        super(DerivedHandle, self).__init__()
        self.parent = parent
        self.row = int(row)
        self.col = int(col)
        slack = parent.dimension(parent.min_size) - parent.min_size
        self.min_size = max(parent.min_size, max(self.row, self.col) - 1 - slack)

    def dimension(self, n):
        return self.parent.dimension(n + 1) - 1

    def _build(self, n):
        return drop(self.parent.instantiate(n + 1), [self.row], [self.col])

    def describe(self):
        return "%s(%d|%d)" % (self.parent.describe(), self.row, self.col)


def bapat_handles(spec, denom_choice=None):
    """
    Numerator L({1,n}|{1,n}) and denominator L(1|1) or L(n|n), both indexed
    by the graph size n.
    """
    if denom_choice in (None, 'auto'):
        denom_choice = spec.denominator
    numerator = RootHandle(spec, (1, LAST), (1, LAST))
    if denom_choice == 'first':
        denominator = RootHandle(spec, (1,), (1,))
    elif denom_choice == 'last':
        denominator = RootHandle(spec, (LAST,), (LAST,))
    else:
        raise InvalidFamilyDefinition("denominator choice must be first, last or auto")
    return numerator, denominator


def dimension_handles(spec, denom_choice=None):
    numerator, denominator = bapat_handles(spec, denom_choice)
    return numerator.by_dimension(), denominator.by_dimension()


class LineProfile(namedtuple('LineProfile', 'row_nonzeros col_nonzeros row col')):
    __slots__ = ()

    @property
    def mode(self):
        return 'C' if self.col_nonzeros < self.row_nonzeros else 'R'


def first_line_profile(handle, probe_size):
    matrix = handle.instantiate(probe_size)
    row = tuple(matrix[0]) if matrix else ()
    col = tuple(line[0] for line in matrix)
    return LineProfile(sum(1 for v in row if v), sum(1 for v in col if v), row, col)


def match_orientation(a, b, sizes):
    """
    'direct' or 'transpose' when every instance of a equals the instance of b
    (or its transpose, consistently) at all `sizes`, else None.
    """
    direct = transposed = True
    for n in sizes:
        if n < a.min_size or n < b.min_size:
            return None
        ma, mb = a.instantiate(n), b.instantiate(n)
        if len(ma) != len(mb):
            return None
        direct = direct and ma == mb
        transposed = transposed and ma == transpose(mb)
        if not (direct or transposed):
            return None
    return 'direct' if direct else 'transpose'


def families_equal(a, b, min_size):
    return match_orientation(a, b, range(min_size, min_size + PROBE_SPAN)) is not None


BUILTIN_FAMILIES = dict((spec.name, spec) for spec in [
    FamilySpec(
        'path',
        diag=Pattern(head=[1], core=[2], tail=[1]),
        offdiags={1: Pattern(core=[-1])},
        min_size=3,
        description="path graph on n nodes"),
    FamilySpec(
        'linear2tree',
        diag=Pattern(head=[2, 3], core=[4], tail=[3, 2]),
        offdiags={1: Pattern(core=[-1]), 2: Pattern(core=[-1])},
        min_size=5,
        description="straight linear 2-tree"),
    FamilySpec(
        'linear3tree',
        diag=Pattern(head=[3, 4, 5], core=[6], tail=[5, 4, 3]),
        offdiags={1: Pattern(core=[-1]), 2: Pattern(core=[-1]), 3: Pattern(core=[-1])},
        min_size=8,
        asymptotic_shifts={'numerator': 8, 'denominator': 11},
        description="straight linear 3-tree"),
    FamilySpec(
        'ladder',
        diag=Pattern(head=[2, 2], core=[3], tail=[2, 2]),
        offdiags={1: Pattern(core=[-1, 0]), 2: Pattern(core=[-1])},
        min_size=5,
        graph_step=(2, 0),
        description="ladder with rungs (2k-1, 2k), n = 2m nodes"),
    FamilySpec(
        'fan',
        diag=Pattern(head=[2], core=[3], tail=[2]),
        offdiags={1: Pattern(core=[-1])},
        border=Border(-1, -1),
        min_size=4,
        denominator='last',
        denominator_strategy='expand',
        description="path on k-1 nodes joined to a hub k"),
    FamilySpec(
        'wheel',
        diag=Pattern(core=[3]),
        offdiags={1: Pattern(core=[-1])},
        border=Border(-1, -1),
        entries=[(1, -2, -1)],
        min_size=4,
        denominator='last',
        denominator_strategy='fixture',
        description="cycle on k-1 nodes joined to a hub k"),
    FamilySpec(
        'corrugated2tree',
        diag=Pattern(head=[2, 3, 5, 3], core=[3, 6, 3], tail=[5, 3, 3, 2]),
        offdiags={
            1: Pattern(core=[-1]),
            2: Pattern(head=[-1, -1, -1], core=[0, -1, 0]),
            3: Pattern(head=[0, 0, -1], core=[0, -1, 0]),
            4: Pattern(head=[0, 0, 0], core=[0, -1, 0]),
        },
        min_size=9,
        graph_step=(3, 2),
        description="corrugated 2-tree, n = 3m + 2 nodes"),
])

STRETCH_FAMILIES = ('corrugated2tree',)


def get_family(name):
    try:
        return BUILTIN_FAMILIES[name]
    except KeyError:
        raise UnknownFamily(name)


def load_family_file(path):
    """
    Family specs from a JSON file holding one definition or a list of them.
    """
    with open(path) as handle:
        try:
            data = json.load(handle)
        except ValueError as exc:
            raise InvalidFamilyDefinition("%s: %s" % (path, exc))
    if isinstance(data, dict):
        data = [data]
    specs = [FamilySpec.from_dict(item) for item in data]
    logger.debug("loaded %d family definitions from %s", len(specs), path)
    return specs

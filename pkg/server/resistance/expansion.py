# -*- coding: utf-8 -*-
"""
Iterated first-row / first-column cofactor expansion over matrix families.

Expanding family M(p) at probe size along its first row (or column) gives
Det M(p)(n) = sum_i (-1)^(i+1) e_i Det M(p)(n)(1|i), and M(p)(n)(1|i) is the
instance at n-1 of the derived family (p, 1, i). Each such child is
registered as a new family unless it matches an existing one, in which
case an alias row is written. The ledger rows are the seven-column P
table; the identity system Q collects Det M(i) = sum_j Q[i][j] Det M(j)
with Y standing for the one-step size shift.
"""
import logging
from collections import namedtuple

from resistance.errors import CapExceeded, SizeTooSmall
from resistance.families import DerivedHandle, families_equal, first_line_profile
from resistance.oracle import det_exact
from resistance.shift_poly import ShiftPoly

logger = logging.getLogger(__name__)

DEFAULT_FAMILY_CAP = 2048

PUBLISHED = 'published'
EXHAUSTIVE = 'exhaustive'
POLICIES = (PUBLISHED, EXHAUSTIVE)

ALIAS_MODE = '0'


class LedgerRow(namedtuple('LedgerRow', 'id pending mode parent del_row del_col coeff')):
    """
    One row of the expansion ledger. Family ids are 1-based and parent 0
    marks the root row.
    """
    __slots__ = ()

    @property
    def is_alias(self):
        return self.mode == ALIAS_MODE

    def to_dict(self):
        return {
            'id': self.id, 'pending': self.pending, 'mode': self.mode, 'parent': self.parent,
            'del_row': self.del_row, 'del_col': self.del_col, 'coeff': str(self.coeff),
        }

    @classmethod
    def from_dict(cls, data):
        return cls(int(data['id']), int(data['pending']), data['mode'], int(data['parent']),
                   int(data['del_row']), int(data['del_col']), ShiftPoly.parse(data['coeff']))


class IdentitySystem(object):
    """
    Square array of ShiftPoly entries; row i (1-based) states
    Det M(i) = sum_j self[i, j] Det M(j).
    """

    def __init__(self, entries):
        self.entries = [list(row) for row in entries]
        if any(len(row) != len(self.entries) for row in self.entries):
            raise ValueError("identity system must be square")

    @classmethod
    def zeros(cls, size):
        return cls([[ShiftPoly() for _ in range(size)] for _ in range(size)])

    @property
    def size(self):
        return len(self.entries)

    def __getitem__(self, key):
        i, j = key
        return self.entries[i - 1][j - 1]

    def __setitem__(self, key, value):
        i, j = key
        self.entries[i - 1][j - 1] = value

    def __eq__(self, other):
        if not isinstance(other, IdentitySystem):
            return NotImplemented
        return self.entries == other.entries

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def copy(self):
        return IdentitySystem(self.entries)

    def row(self, i):
        return list(self.entries[i - 1])

    def support(self):
        """
        1-based indices of columns holding a nonzero entry.
        """
        return [j + 1 for j in range(self.size) if any(row[j] for row in self.entries)]

    def to_dict(self):
        return {'size': self.size, 'entries': [[str(p) for p in row] for row in self.entries]}

    @classmethod
    def from_dict(cls, data):
        return cls([[ShiftPoly.parse(p) for p in row] for row in data['entries']])


class ExpansionResult(object):

    def __init__(self, root, probe_size, policy, ledger, families, degenerate):
        self.root = root
        self.probe_size = probe_size
        self.policy = policy
        self.ledger = ledger
        self.families = families
        self.degenerate = degenerate
        self.Q = ledger_to_Q(ledger, len(families))

    @property
    def deduplicated(self):
        """
        Only the exhaustive policy guarantees that no two retained families
        are equal; the published policy keeps some equal pairs apart.
        """
        return self.policy == EXHAUSTIVE

    @property
    def expansions(self):
        return len(self.ledger)

    def __iter__(self):
        return iter((self.ledger, self.families, self.Q))


def lowest_pending(pending):
    return min(pending)


class LaplaceExpander(object):
    """
    Runs the expansion loop from `root`. `queue` picks the next family to
    expand from the set of pending ids.
    """

    def __init__(self, root, min_size, family_cap=DEFAULT_FAMILY_CAP, policy=PUBLISHED,
                 queue=lowest_pending):
        if policy not in POLICIES:
            raise ValueError("unknown deduplication policy %r" % policy)
        if family_cap < 1:
            raise ValueError("family cap must be at least 1")
        if min_size < root.min_size:
            raise SizeTooSmall("%s is not defined at probe size %d" % (root.describe(), min_size))
        self.root = root
        self.probe = min_size
        self.family_cap = family_cap
        self.policy = policy
        self.queue = queue

    def _candidates(self, families, parent, mode, position):
        if self.policy == EXHAUSTIVE:
            return range(len(families))
        if mode == 'R' and position > 1:
            return range(0)
        return range(min(parent, len(families)))

    def _find(self, child, families, parent, mode, position):
        for k in self._candidates(families, parent, mode, position):
            if families_equal(child, families[k], self.probe):
                return k + 1
        return None

    def run(self):
        families = [self.root]
        modes = [first_line_profile(self.root, self.probe).mode]
        ledger = [LedgerRow(1, 0, modes[0], 0, 0, 0, ShiftPoly())]
        pending = set([1])
        degenerate = []

        while pending:
            parent = self.queue(pending)
            pending.discard(parent)
            handle, mode = families[parent - 1], modes[parent - 1]
            profile = first_line_profile(handle, self.probe)
            line = profile.row if mode == 'R' else profile.col
            if not any(line):
                logger.warning("family %d (%s) has an empty first line; treated as zero",
                               parent, handle.describe())
                degenerate.append(parent)
                continue

            for position, entry in enumerate(line, 1):
                if not entry:
                    continue
                row, col = (1, position) if mode == 'R' else (position, 1)
                coeff = ShiftPoly.monomial((1 if position % 2 else -1) * entry, 1)
                child = DerivedHandle(handle, row, col)
                existing = self._find(child, families, parent, mode, position)
                if existing is not None:
                    ledger.append(LedgerRow(existing, 0, ALIAS_MODE, parent, row, col, coeff))
                    continue
                if len(families) >= self.family_cap:
                    raise CapExceeded(self.family_cap, len(ledger))
                families.append(child)
                modes.append(first_line_profile(child, self.probe).mode)
                pending.add(len(families))
                ledger.append(LedgerRow(len(families), 0, modes[-1], parent, row, col, coeff))
            logger.debug("expanded family %d along %s, %d families, %d ledger rows",
                         parent, 'row' if mode == 'R' else 'column', len(families), len(ledger))

        logger.info("expansion of %s: %d ledger rows, %d families",
                    self.root.describe(), len(ledger), len(families))
        return ExpansionResult(self.root, self.probe, self.policy, ledger, families, degenerate)


def laplace_expand(root, min_size, family_cap=DEFAULT_FAMILY_CAP, policy=PUBLISHED):
    return LaplaceExpander(root, min_size, family_cap=family_cap, policy=policy).run()


def equal_family_pairs(families, min_size):
    """
    1-based (a, b), a < b, of retained families equal at the probe sizes.
    """
    return [(a + 1, b + 1) for a in range(len(families)) for b in range(a + 1, len(families))
            if families_equal(families[a], families[b], min_size)]


def ledger_to_Q(ledger, size=None):
    """
    Q[parent][child] += coeff over all non-root ledger rows.
    """
    if size is None:
        size = max([row.id for row in ledger] + [row.parent for row in ledger] + [0])
    q = IdentitySystem.zeros(size)
    for row in ledger:
        if row.parent:
            q[row.parent, row.id] = q[row.parent, row.id] + row.coeff
    return q


def shifted_value(poly, values, n):
    """
    sum_k c_k * values(n - k), reading Y^k as the k-step size shift.
    """
    return sum(c * values(n - k) for k, c in enumerate(poly.coeffs) if c)


def verify_identities(system, families, sizes):
    """
    Check every row of `system` against oracle determinants of `families`
    at each size in `sizes`. Returns (row, n, lhs, rhs) for each failure.
    """
    cache = {}

    def det(k, n):
        if (k, n) not in cache:
            cache[k, n] = det_exact(families[k - 1].instantiate(n))
        return cache[k, n]

    failures = []
    for i in range(1, system.size + 1):
        row = system.row(i)
        if not any(row):
            continue
        for n in sizes:
            rhs = sum(shifted_value(poly, lambda m, j=j: det(j, m), n)
                      for j, poly in enumerate(row, 1) if poly)
            lhs = det(i, n)
            if lhs != rhs:
                failures.append((i, n, lhs, rhs))
    return failures

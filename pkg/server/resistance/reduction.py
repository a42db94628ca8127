# -*- coding: utf-8 -*-
"""
Elimination of the identity system Q and extraction of an annihilator
common to all of its determinant families.
"""
import logging
from collections import namedtuple

from resistance.errors import DegenerateSystem, SupportTooLarge, VacuousSystem
from resistance.expansion import IdentitySystem
from resistance.shift_poly import ShiftPoly

logger = logging.getLogger(__name__)

DEFAULT_MAX_SUPPORT = 32

ONE = ShiftPoly([1])


class ReducedSystem(object):

    def __init__(self, R, eliminated):
        self.R = R
        self.eliminated = list(eliminated)

    @property
    def support(self):
        return self.R.support()

    def to_dict(self):
        data = self.R.to_dict()
        data['support'] = self.support
        data['eliminated'] = self.eliminated
        return data


def system_reduce(q, on_step=None):
    """
    For k = 2..K in order, a family whose row does not structurally refer to
    itself is substituted into every row referring to it, and its column is
    cleared. Structural incidence is tracked separately from the polynomial
    entries, so a self-coefficient that cancels to zero still counts.
    `on_step(k, system)` sees the system after each substitution.
    """
    size = q.size
    m = [list(row) for row in q.entries]
    incidence = [[bool(p) for p in row] for row in m]
    eliminated = []

    for k in range(1, size):
        if incidence[k][k]:
            continue
        source, source_incidence = m[k], incidence[k]
        for i in range(size):
            if i == k or not incidence[i][k]:
                continue
            factor = m[i][k]
            row, row_incidence = m[i], incidence[i]
            for j in range(size):
                if j == k:
                    continue
                if factor and source[j]:
                    row[j] = row[j] + factor * source[j]
                row_incidence[j] = row_incidence[j] or source_incidence[j]
            row[k] = ShiftPoly()
            row_incidence[k] = False
        eliminated.append(k + 1)
        logger.debug("substituted row %d", k + 1)
        if on_step is not None:
            on_step(k + 1, IdentitySystem(m))

    reduced = ReducedSystem(IdentitySystem(m), eliminated)
    logger.info("reduced %dx%d system, support %s", size, size, reduced.support)
    return reduced


def annihilator_1x1(ap, bp):
    """
    A'x = B'x is annihilated by A' - B'.
    """
    result = ap - bp
    if result.is_zero():
        raise VacuousSystem("A' - B' vanishes identically")
    return result


def annihilator_2x2(ap, bp, cp, dp, ep, fp):
    """
    A'x = B'x + C'y, D'y = E'x + F'y: both x and y are annihilated by
    (D' - F')(A' - B') - C'E'.
    """
    return (dp - fp) * (ap - bp) - cp * ep


def annihilator_3x3(a, b, c, d, e, f, g, h, i):
    """
    x = Ax + By + Cz, y = Dx + Ey + Fz, z = Gx + Hy + Iz, with y eliminated
    into the two-variable form above.
    """
    pivot = ONE - e
    return annihilator_2x2(
        pivot,
        pivot * a + b * d,
        pivot * c + b * f,
        pivot,
        pivot * g + h * d,
        pivot * i + h * f,
    )


def eliminate_last(system):
    """
    Drop the last variable of x = Ax, scaling every other row by (1 - A_nn).
    """
    last = len(system) - 1
    tail = system[last]
    pivot = ONE - tail[last]
    return [
        [pivot * system[r][j] + system[r][last] * tail[j] + (tail[last] if r == j else ShiftPoly())
         for j in range(last)]
        for r in range(last)
    ]


def solve_identity_system(reduced, max_support=DEFAULT_MAX_SUPPORT):
    """
    An annihilator of every family in the reduced system, normalized.
    """
    support = reduced.support
    if not support:
        raise DegenerateSystem("reduced system has no nonzero column")
    if len(support) > max_support:
        raise SupportTooLarge("support of %d columns exceeds the cap of %d" % (len(support), max_support))

    system = [[reduced.R[a, b] for b in support] for a in support]
    while len(system) > 3:
        logger.debug("eliminating support column %d", support[len(system) - 1])
        system = eliminate_last(system)

    if len(system) == 3:
        (a, b, c), (d, e, f), (g, h, i) = system
        result = annihilator_3x3(a, b, c, d, e, f, g, h, i)
    elif len(system) == 2:
        (a, b), (c, d) = system
        result = annihilator_2x2(ONE, a, b, ONE, c, d)
    else:
        result = annihilator_1x1(ONE, system[0][0])

    if result.is_zero():
        raise VacuousSystem("the reduced system annihilates nothing")
    return result.normalized()


WheelFixture = namedtuple('WheelFixture', 'annihilator validity provenance')


def wheel_denominator_fixture():
    """
    Annihilator of Det L(n|n) for the wheel. Expanding that minor produces
    (-1)^n coefficients, which the expansion engine does not handle, so the
    result of the manual derivation is recorded here.
    """
    annihilator = (ShiftPoly.parse('Y^2 - 3*Y + 1') * ShiftPoly.parse('Y - 1')).normalized()
    return WheelFixture(
        annihilator, 6,
        "manual expansion of L(n|n) for the wheel: A = A(1|1)(3Y - 2Y^2) - 2Y, "
        "the (-1)^n terms cancelling after substitution")

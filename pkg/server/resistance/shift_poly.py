# -*- coding: utf-8 -*-
"""
Integer polynomials in the backward shift operator Y, where Y maps the
term G(n) of a sequence to G(n-1).

Coefficients are kept in ascending order (index i holds the coefficient of
Y^i) and the arithmetic is delegated to sympy's dense univariate routines,
which work on descending coefficient lists over ZZ.
"""
from sympy import Poly, Symbol
from sympy.parsing.sympy_parser import parse_expr
from sympy.polys.densearith import dup_add, dup_div, dup_mul, dup_neg, dup_sub
from sympy.polys.densetools import dup_primitive
from sympy.polys.domains import ZZ
from sympy.polys.polyerrors import CoercionFailed, PolynomialError

from resistance.errors import DivisionByZeroPolynomial, IndexUnderflow

Y = Symbol('Y')
X = Symbol('X')


def _strip(coeffs):
    coeffs = [int(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _render(coeffs, var):
    if not coeffs:
        return '0'
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = var if k == 1 else '%s^%d' % (var, k)
            body = power if mag == 1 else '%d*%s' % (mag, power)
        if not terms:
            terms.append(body if c > 0 else '-' + body)
        else:
            terms.append(('+ ' if c > 0 else '- ') + body)
    return ' '.join(terms)


def _parse(text, symbol):
    try:
        expr = parse_expr(text.replace('^', '**'), local_dict={symbol.name: symbol})
        poly = Poly(expr, symbol, domain=ZZ)
    except (CoercionFailed, PolynomialError, SyntaxError, TypeError) as exc:
        raise ValueError("not an integer polynomial in %s: %r (%s)" % (symbol, text, exc))
    return tuple(reversed([int(c) for c in poly.all_coeffs()]))


class ShiftPoly(object):
    """
    Immutable polynomial sum(coeffs[i] * Y^i) with arbitrary precision
    integer coefficients. The zero polynomial has no coefficients.
    """
    __slots__ = ('coeffs',)

    def __init__(self, coeffs=()):
        object.__setattr__(self, 'coeffs', _strip(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("ShiftPoly is immutable")

    @classmethod
    def monomial(cls, coeff, power):
        return cls([0] * power + [coeff])

    @classmethod
    def parse(cls, text):
        return cls(_parse(text, Y))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    __nonzero__ = __bool__

    def _dup(self):
        return [ZZ(c) for c in reversed(self.coeffs)]

    @classmethod
    def _from_dup(cls, f):
        return cls(reversed([int(c) for c in f]))

    @staticmethod
    def _coerce(other):
        if isinstance(other, ShiftPoly):
            return other
        if isinstance(other, int):
            return ShiftPoly([other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._from_dup(dup_add(self._dup(), other._dup(), ZZ))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._from_dup(dup_sub(self._dup(), other._dup(), ZZ))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return self._from_dup(dup_neg(self._dup(), ZZ))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ShiftPoly()
        return self._from_dup(dup_mul(self._dup(), other._dup(), ZZ))

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(('ShiftPoly', self.coeffs))

    def __repr__(self):
        return "ShiftPoly(%r)" % (list(self.coeffs),)

    def __str__(self):
        return _render(self.coeffs, 'Y')

    def divides(self, other):
        """
        Exact division test over the integers: returns (True, q) when
        other == self * q, otherwise (False, None).
        """
        if not self.coeffs:
            raise DivisionByZeroPolynomial("division by the zero polynomial")
        q, r = dup_div(other._dup(), self._dup(), ZZ)
        if r:
            return False, None
        return True, self._from_dup(q)

    @property
    def content(self):
        if not self.coeffs:
            return 0
        return int(dup_primitive(self._dup(), ZZ)[0])

    def normalized(self):
        """
        Content 1 and a positive leading coefficient.
        """
        if not self.coeffs:
            return self
        prim = ShiftPoly._from_dup(dup_primitive(self._dup(), ZZ)[1])
        return -prim if prim.coeffs[-1] < 0 else prim

    def apply(self, seq, at):
        """
        Value of sum(a_i * seq[at - i]).
        """
        if at - self.degree < seq.start:
            raise IndexUnderflow(
                "applying a degree %d operator at %d needs index %d, sequence starts at %d"
                % (self.degree, at, at - self.degree, seq.start))
        return sum(c * seq[at - i] for i, c in enumerate(self.coeffs) if c)

    def as_poly(self, symbol=Y):
        return Poly(list(reversed(self.coeffs)) or [0], symbol, domain=ZZ)

    def to_char(self):
        return CharPoly(tuple(reversed(self.coeffs)), order=self.degree)

    def to_dict(self):
        return {'Y': str(self), 'X': str(self.to_char()), 'coeffs': [str(c) for c in self.coeffs]}


class CharPoly(object):
    """
    Characteristic (X-form) polynomial. `order` is the degree d of the
    Y-form it came from, so that C(X) = X^d * A(1/X) survives leading zeros.
    """
    __slots__ = ('coeffs', 'order')

    def __init__(self, coeffs=(), order=None):
        coeffs = _strip(coeffs)
        object.__setattr__(self, 'coeffs', coeffs)
        object.__setattr__(self, 'order', len(coeffs) - 1 if order is None else order)

    def __setattr__(self, name, value):
        raise AttributeError("CharPoly is immutable")

    @classmethod
    def parse(cls, text):
        return cls(_parse(text, X))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if not isinstance(other, CharPoly):
            return NotImplemented
        return self.coeffs == other.coeffs and self.order == other.order

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(('CharPoly', self.coeffs, self.order))

    def __repr__(self):
        return "CharPoly(%r, order=%d)" % (list(self.coeffs), self.order)

    def __str__(self):
        return _render(self.coeffs, 'X')

    def as_poly(self, symbol=X):
        return Poly(list(reversed(self.coeffs)) or [0], symbol, domain=ZZ)

    def from_char(self):
        padded = list(self.coeffs) + [0] * (self.order + 1 - len(self.coeffs))
        return ShiftPoly(reversed(padded))


class IndexedSequence(object):
    """
    Finite window of an integer (or rational) sequence starting at index `start`.
    """
    __slots__ = ('start', 'values')

    def __init__(self, start, values):
        object.__setattr__(self, 'start', int(start))
        object.__setattr__(self, 'values', tuple(values))

    def __setattr__(self, name, value):
        raise AttributeError("IndexedSequence is immutable")

    @property
    def stop(self):
        return self.start + len(self.values) - 1

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        if not isinstance(other, IndexedSequence):
            return NotImplemented
        return (self.start, self.values) == (other.start, other.values)

    def __hash__(self):
        return hash((self.start, self.values))

    def __repr__(self):
        return "IndexedSequence(start=%d, values=%r)" % (self.start, list(self.values))

    def __getitem__(self, n):
        if n < self.start:
            raise IndexUnderflow("index %d precedes sequence start %d" % (n, self.start))
        if n > self.stop:
            raise IndexError("index %d beyond sequence end %d" % (n, self.stop))
        return self.values[n - self.start]

    def indices(self):
        return range(self.start, self.stop + 1)

    def items(self):
        return zip(self.indices(), self.values)

    def window(self, first, last=None):
        first = max(first, self.start)
        last = self.stop if last is None else min(last, self.stop)
        return IndexedSequence(first, self.values[first - self.start:last - self.start + 1])

    def subsequence(self, stride, residue=None):
        """
        Terms whose index is congruent to `residue` modulo `stride`,
        re-indexed from 0.
        """
        if residue is None:
            residue = self.start % stride
        first = self.start + (residue - self.start) % stride
        return IndexedSequence(0, self.values[first - self.start::stride])

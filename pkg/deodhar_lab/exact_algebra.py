# python
# pylint: disable=too-many-public-methods
#
# This file is part of the deodharLab distribution.
# Copyright (c) 2025 Oliver Albold.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, version 3.
#
# This program is distributed in the hope that it will be useful, but
# WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the GNU
# General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program. If not, see <http://www.gnu.org/licenses/>.
#
"""
Exact arithmetic: coefficient domains (rationals and prime fields), sparse
multivariate Laurent polynomials with named variables, exact matrices,
maximal minors and the elementary matrices used by the parametrizations.

Every object here supports the plain python operators, so the network code
can run unchanged over symbols (LaurentRing) or numbers (a domain).
"""

import itertools
import logging
import re
from fractions import Fraction

import numpy as np

from deodhar_lab.errors import (
    DomainMismatchError,
    NonMonomialDivisionError,
    ParameterError,
)

#
# global constants
#
LOG = logging.getLogger("deodhar_lab.exact_algebra")
NATURAL_SPLIT = re.compile(r"(\d+)")
RANDOM_BOUND = 9  # numerators and denominators of random rationals


def natural_key(name):
    """Sort key that orders b2 before b10"""
    return tuple(int(part) if part.isdigit() else part for part in NATURAL_SPLIT.split(name) if part)


#
# coefficient domains
#
class RationalField:
    """Arbitrary precision rationals based on fractions.Fraction"""

    name = "rat"
    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def coerce(self, value):
        """Convert an int, Fraction or numeric string into a field element"""
        if isinstance(value, FieldElement):
            raise DomainMismatchError(f"prime field element {value!r} used as rational")
        if isinstance(value, LaurentPolynomial):
            if not value.is_constant():
                raise DomainMismatchError(f"polynomial {value} is not a scalar")
            return value.constant_value()
        return Fraction(value)

    @staticmethod
    def is_zero(value):
        """True for the zero element"""
        return value == 0

    def random_element(self, rng, nonzero=False):
        """Random small rational drawn from a numpy generator"""
        while True:
            value = Fraction(
                int(rng.integers(-RANDOM_BOUND, RANDOM_BOUND + 1)),
                int(rng.integers(1, RANDOM_BOUND + 1)),
            )
            if value != 0 or not nonzero:
                return value

    def random_positive(self, rng):
        """Random positive rational"""
        return Fraction(int(rng.integers(1, RANDOM_BOUND + 1)), int(rng.integers(1, RANDOM_BOUND + 1)))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return "RationalField()"


class FieldElement:
    """Element of the prime field F_p"""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.p = p
        self.value = value % p

    def _other_value(self, other):
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise DomainMismatchError(f"F{self.p} and F{other.p} elements combined")
            return other.value
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise ZeroDivisionError(f"{other} has no image in F{self.p}")
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        if isinstance(other, int):
            return other % self.p
        return None

    def __add__(self, other):
        value = self._other_value(other)
        if value is None:
            return NotImplemented
        return FieldElement(self.value + value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        value = self._other_value(other)
        if value is None:
            return NotImplemented
        return FieldElement(self.value - value, self.p)

    def __rsub__(self, other):
        value = self._other_value(other)
        if value is None:
            return NotImplemented
        return FieldElement(value - self.value, self.p)

    def __mul__(self, other):
        value = self._other_value(other)
        if value is None:
            return NotImplemented
        return FieldElement(self.value * value, self.p)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via Fermat"""
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F{self.p}")
        return FieldElement(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        value = self._other_value(other)
        if value is None:
            return NotImplemented
        return self * FieldElement(value, self.p).inverse()

    def __rtruediv__(self, other):
        value = self._other_value(other)
        if value is None:
            return NotImplemented
        return FieldElement(value, self.p) * self.inverse()

    def __neg__(self):
        return FieldElement(-self.value, self.p)

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FieldElement(pow(self.value, exponent, self.p), self.p)

    def __eq__(self, other):
        value = self._other_value(other) if not isinstance(other, LaurentPolynomial) else None
        if value is None:
            return NotImplemented
        return self.value == value

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"F{self.p}({self.value})"

    def __str__(self):
        return str(self.value)


class PrimeField:
    """The prime field F_p with elements of type FieldElement"""

    characteristic = None

    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ParameterError(f"{p} is not a prime")
        self.p = p
        self.characteristic = p
        self.name = f"q{p}"
        self.zero = FieldElement(0, p)
        self.one = FieldElement(1, p)

    def coerce(self, value):
        """Convert ints, Fractions and elements of this field"""
        if isinstance(value, FieldElement):
            if value.p != self.p:
                raise DomainMismatchError(f"F{value.p} element used in F{self.p}")
            return value
        if isinstance(value, LaurentPolynomial):
            if not value.is_constant():
                raise DomainMismatchError(f"polynomial {value} is not a scalar")
            return self.coerce(value.constant_value())
        if isinstance(value, Fraction):
            return self.one * value
        return FieldElement(int(value), self.p)

    @staticmethod
    def is_zero(value):
        """True for the zero element"""
        return value == 0

    def elements(self):
        """All field elements, zero first"""
        return [FieldElement(v, self.p) for v in range(self.p)]

    def units(self):
        """All nonzero field elements"""
        return [FieldElement(v, self.p) for v in range(1, self.p)]

    def random_element(self, rng, nonzero=False):
        """Uniform element (or unit) drawn from a numpy generator"""
        return FieldElement(int(rng.integers(1 if nonzero else 0, self.p)), self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"PrimeField({self.p})"


RATIONALS = RationalField()


def parse_domain(text):
    """Parse the command line field notation: 'rat' or 'q<p>'"""
    text = text.strip().lower()
    if text in ("rat", "q", "rational"):
        return RATIONALS
    if text.startswith("q") and text[1:].isdigit():
        return PrimeField(int(text[1:]))
    raise ParameterError(f"unknown field '{text}', use rat or q<p>")


#
# Laurent polynomials
#
def _monomial(powers):
    """Canonical monomial tuple from a name -> exponent mapping"""
    return tuple(sorted(((name, exp) for name, exp in powers.items() if exp != 0), key=lambda item: natural_key(item[0])))


def _monomial_mul(left, right):
    if not left:
        return right
    if not right:
        return left
    powers = dict(left)
    for name, exp in right:
        powers[name] = powers.get(name, 0) + exp
    return _monomial(powers)


def _monomial_sort_key(mono):
    return (-sum(exp for _, exp in mono), tuple((natural_key(name), -exp) for name, exp in mono))


class LaurentPolynomial:
    """
    Sparse Laurent polynomial: map from monomials to nonzero coefficients.

    A monomial is a tuple of (variable name, nonzero exponent) pairs in natural
    name order. Division is only defined by monomials.
    """

    __slots__ = ("terms", "domain")

    def __init__(self, terms=None, domain=RATIONALS):
        self.domain = domain
        self.terms = {}
        for mono, coef in (terms or {}).items():
            coef = domain.coerce(coef)
            if not domain.is_zero(coef):
                self.terms[mono] = coef

    @classmethod
    def _raw(cls, terms, domain):
        poly = cls.__new__(cls)
        poly.domain = domain
        poly.terms = terms
        return poly

    def _lift(self, other):
        if isinstance(other, LaurentPolynomial):
            if other.domain != self.domain:
                raise DomainMismatchError(f"{self.domain!r} and {other.domain!r} polynomials combined")
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            return LaurentPolynomial({(): other}, self.domain)
        return None

    # arithmetic
    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for mono, coef in other.terms.items():
            value = terms.get(mono, self.domain.zero) + coef
            if value == 0:
                terms.pop(mono, None)
            else:
                terms[mono] = value
        return LaurentPolynomial._raw(terms, self.domain)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw({mono: -coef for mono, coef in self.terms.items()}, self.domain)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = {}
        for mono_a, coef_a in self.terms.items():
            for mono_b, coef_b in other.terms.items():
                mono = _monomial_mul(mono_a, mono_b)
                value = terms.get(mono, self.domain.zero) + coef_a * coef_b
                if value == 0:
                    terms.pop(mono, None)
                else:
                    terms[mono] = value
        return LaurentPolynomial._raw(terms, self.domain)

    __rmul__ = __mul__

    def inverse(self):
        """Inverse of a monomial, NonMonomialDivisionError otherwise"""
        if not self.is_monomial():
            raise NonMonomialDivisionError(f"cannot invert '{self}'")
        ((mono, coef),) = self.terms.items()
        inv_mono = tuple((name, -exp) for name, exp in mono)
        return LaurentPolynomial._raw({inv_mono: self.domain.one / coef}, self.domain)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = LaurentPolynomial._raw({(): self.domain.one}, self.domain)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if not self.terms:
            return hash(0)
        if self.is_constant():
            return hash(self.terms[()])
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # inspection
    def is_zero(self):
        """True for the zero polynomial"""
        return not self.terms

    def is_monomial(self):
        """True if exactly one term is stored"""
        return len(self.terms) == 1

    def is_constant(self):
        """True for zero and for pure scalars"""
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self):
        """Coefficient of the empty monomial"""
        return self.terms.get((), self.domain.zero)

    def variables(self):
        """Names of all variables occurring with nonzero exponent"""
        return {name for mono in self.terms for name, _ in mono}

    def degree(self, var):
        """Largest exponent of var over all terms (0 for the zero polynomial)"""
        return max((dict(mono).get(var, 0) for mono in self.terms), default=0)

    def min_degree(self, var):
        """Smallest exponent of var over all terms (0 for the zero polynomial)"""
        return min((dict(mono).get(var, 0) for mono in self.terms), default=0)

    def coefficient_in(self, var, exponent):
        """Part of the polynomial with var^exponent, var removed"""
        terms = {}
        for mono, coef in self.terms.items():
            powers = dict(mono)
            if powers.pop(var, 0) == exponent:
                terms[_monomial(powers)] = coef
        return LaurentPolynomial._raw(terms, self.domain)

    def monomial_parts(self):
        """List of single-term polynomials in canonical order"""
        return [
            LaurentPolynomial._raw({mono: self.terms[mono]}, self.domain)
            for mono in sorted(self.terms, key=_monomial_sort_key)
        ]

    # evaluation
    def substitute(self, mapping):
        """Replace variables by polynomials or scalars of the same domain"""
        result = LaurentPolynomial._raw({}, self.domain)
        for mono, coef in self.terms.items():
            term = LaurentPolynomial._raw({(): coef}, self.domain)
            rest = {}
            for name, exp in mono:
                if name in mapping:
                    value = self._lift(mapping[name])
                    term = term * value**exp
                else:
                    rest[name] = exp
            if rest:
                term = term * LaurentPolynomial._raw({_monomial(rest): self.domain.one}, self.domain)
            result = result + term
        return result

    def evaluate(self, values, domain=None):
        """Evaluate at scalar values given per variable name, in domain"""
        domain = domain or self.domain
        total = domain.zero
        for mono, coef in self.terms.items():
            term = domain.coerce(coef)
            for name, exp in mono:
                if name not in values:
                    raise ParameterError(f"no value for variable '{name}'")
                term = term * domain.coerce(values[name]) ** exp
            total = total + term
        return total

    def map_domain(self, domain):
        """Same polynomial with coefficients coerced into another domain"""
        return LaurentPolynomial({mono: domain.coerce(coef) for mono, coef in self.terms.items()}, domain)

    # rendering
    def __str__(self):
        if not self.terms:
            return "0"
        text = ""
        for mono in sorted(self.terms, key=_monomial_sort_key):
            coef = self.terms[mono]
            mono_text = "*".join(name if exp == 1 else f"{name}^{exp}" for name, exp in mono)
            if not mono_text:
                term = str(coef)
            elif coef == 1:
                term = mono_text
            elif coef == -1:
                term = "-" + mono_text
            else:
                term = f"{coef}*{mono_text}"
            if not text:
                text = term
            elif term.startswith("-"):
                text += " - " + term[1:]
            else:
                text += " + " + term
        return text

    def __repr__(self):
        return f"LaurentPolynomial('{self}')"

    def to_json(self):
        """Term list [[[name, exp], ...], coefficient string] in canonical order"""
        return [
            [[list(item) for item in mono], str(self.terms[mono])]
            for mono in sorted(self.terms, key=_monomial_sort_key)
        ]


class LaurentRing:
    """Laurent polynomials over a coefficient domain, used as matrix ring"""

    def __init__(self, domain=RATIONALS):
        self.domain = domain
        self.zero = LaurentPolynomial({}, domain)
        self.one = LaurentPolynomial({(): domain.one}, domain)

    def symbol(self, name):
        """The polynomial consisting of the single variable name"""
        return LaurentPolynomial({((name, 1),): self.domain.one}, self.domain)

    def constant(self, value):
        """Scalar as constant polynomial"""
        return LaurentPolynomial({(): value}, self.domain)

    def coerce(self, value):
        """Accept polynomials of this ring and scalars"""
        if isinstance(value, LaurentPolynomial):
            if value.domain != self.domain:
                raise DomainMismatchError(f"polynomial over {value.domain!r} used in ring over {self.domain!r}")
            return value
        return self.constant(value)

    @staticmethod
    def is_zero(value):
        """True for the zero polynomial"""
        return value == 0

    def __eq__(self, other):
        return isinstance(other, LaurentRing) and other.domain == self.domain

    def __hash__(self):
        return hash(("laurent", self.domain))

    def __repr__(self):
        return f"LaurentRing({self.domain!r})"


SYMBOLIC = LaurentRing(RATIONALS)


def symbol(name):
    """Rational Laurent polynomial consisting of one variable"""
    return SYMBOLIC.symbol(name)


def constant(value):
    """Rational constant Laurent polynomial"""
    return SYMBOLIC.constant(value)


#
# matrices
#
class ExactMatrix:
    """
    Rectangular matrix over a ring (a domain or a LaurentRing).
    Indexing with [i, j] is 0-based, entry(i, j) is 1-based.
    """

    def __init__(self, rows, ring):
        self.ring = ring
        self.rows = [[ring.coerce(value) for value in row] for row in rows]
        widths = {len(row) for row in self.rows}
        if len(widths) > 1:
            raise ParameterError("matrix rows differ in length")
        self.nrows = len(self.rows)
        self.ncols = widths.pop() if widths else 0

    @classmethod
    def identity(cls, size, ring):
        """size x size identity"""
        return cls([[ring.one if i == j else ring.zero for j in range(size)] for i in range(size)], ring)

    @classmethod
    def zeros(cls, nrows, ncols, ring):
        """Zero matrix"""
        return cls([[ring.zero] * ncols for _ in range(nrows)], ring)

    def __getitem__(self, index):
        row, col = index
        return self.rows[row][col]

    def entry(self, row, col):
        """1-based access"""
        return self.rows[row - 1][col - 1]

    def copy(self):
        """Shallow copy with fresh row lists"""
        return ExactMatrix([list(row) for row in self.rows], self.ring)

    def __mul__(self, other):
        if self.ncols != other.nrows:
            raise ParameterError(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        result = []
        for row in self.rows:
            out = [self.ring.zero] * other.ncols
            for k, value in enumerate(row):
                if value == 0:
                    continue
                for j, other_value in enumerate(other.rows[k]):
                    if other_value != 0:
                        out[j] = out[j] + value * other_value
            result.append(out)
        return ExactMatrix(result, self.ring)

    def __add__(self, other):
        return ExactMatrix([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)], self.ring)

    def __sub__(self, other):
        return ExactMatrix([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)], self.ring)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    __hash__ = None

    def transpose(self):
        """Transposed matrix"""
        return ExactMatrix([list(col) for col in zip(*self.rows)] if self.rows else [], self.ring)

    def select_rows(self, labels):
        """Rows with the given 1-based labels, in the given order"""
        return ExactMatrix([list(self.rows[label - 1]) for label in labels], self.ring)

    def select_columns(self, labels):
        """Columns with the given 1-based labels, in the given order"""
        return ExactMatrix([[row[label - 1] for label in labels] for row in self.rows], self.ring)

    def scale_row(self, row, factor):
        """Copy with 0-based row multiplied by factor"""
        result = self.copy()
        result.rows[row] = [value * factor for value in result.rows[row]]
        return result

    def times_transvection(self, i, j, value):
        """self * X_(i,j)(value): column j gains value times column i (1-based)"""
        result = self.copy()
        if value == 0:
            return result
        for row in result.rows:
            if row[i - 1] != 0:
                row[j - 1] = row[j - 1] + value * row[i - 1]
        return result

    def map(self, func, ring=None):
        """Entry-wise image under func, optionally into another ring"""
        return ExactMatrix([[func(value) for value in row] for row in self.rows], ring or self.ring)

    def substitute(self, mapping):
        """Entry-wise Laurent substitution"""
        return self.map(lambda value: value.substitute(mapping))

    def evaluate(self, values, domain):
        """Entry-wise evaluation into a scalar domain"""
        return self.map(lambda value: value.evaluate(values, domain), domain)

    def is_identity(self):
        """Square with ones on the diagonal and zeros elsewhere"""
        return self == ExactMatrix.identity(self.nrows, self.ring) if self.nrows == self.ncols else False

    def is_zero(self):
        """All entries zero"""
        return all(value == 0 for row in self.rows for value in row)

    def to_json(self):
        """Entries rendered as strings"""
        return [[str(value) for value in row] for row in self.rows]

    def __str__(self):
        return "\n".join("[" + ", ".join(str(value) for value in row) + "]" for row in self.rows)

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols} over {self.ring!r})"


def _expand(matrix, row, remaining, memo):
    if row == matrix.nrows:
        return matrix.ring.one
    key = (row, remaining)
    if key in memo:
        return memo[key]
    total = matrix.ring.zero
    for pos, col in enumerate(remaining):
        value = matrix.rows[row][col]
        if value == 0:
            continue
        term = value * _expand(matrix, row + 1, remaining[:pos] + remaining[pos + 1:], memo)
        total = total - term if pos % 2 else total + term
    memo[key] = total
    return total


def minor(matrix, columns, memo=None):
    """Maximal minor Delta_I for a set of 1-based column labels (Laplace expansion)"""
    cols = tuple(sorted(label - 1 for label in columns))
    if len(cols) != matrix.nrows or len(set(cols)) != len(cols):
        raise ParameterError(f"minor needs {matrix.nrows} distinct columns, got {sorted(columns)}")
    if cols and (cols[0] < 0 or cols[-1] >= matrix.ncols):
        raise ParameterError(f"columns {sorted(columns)} out of range 1..{matrix.ncols}")
    return _expand(matrix, 0, cols, {} if memo is None else memo)


def plucker_vector(matrix):
    """All maximal minors, keyed by increasing 1-based column tuples"""
    memo = {}
    return {
        subset: minor(matrix, subset, memo)
        for subset in itertools.combinations(range(1, matrix.ncols + 1), matrix.nrows)
    }


def projective_normal_form(vector):
    """Plücker vector divided by its first nonzero coordinate, as a tuple"""
    keys = sorted(vector)
    pivot = next((vector[key] for key in keys if vector[key] != 0), None)
    if pivot is None:
        return tuple(vector[key] for key in keys)
    return tuple(vector[key] / pivot for key in keys)


#
# elementary matrices
#
def transvection(size, i, j, value, ring):
    """X_(i,j)(value): identity plus value at 1-based position (i, j)"""
    if i == j:
        raise ParameterError(f"transvection needs i != j, got ({i},{j})")
    result = ExactMatrix.identity(size, ring)
    result.rows[i - 1][j - 1] = ring.coerce(value)
    return result


def weyl_factor(size, i, j, value, ring):
    """W_(i,j)(value) = X_(i,j)(value) X_(j,i)(-1/value) X_(i,j)(value)"""
    value = ring.coerce(value)
    if value == 0:
        raise ParameterError("weyl factor needs an invertible parameter")
    forward = transvection(size, i, j, value, ring)
    return forward * transvection(size, j, i, -ring.one / value, ring) * forward


def phi_embed(size, i, block, ring):
    """Place a 2x2 block on rows/columns n-i, n-i+1 (counted from the bottom)"""
    result = ExactMatrix.identity(size, ring)
    top = size - i - 1
    for r in range(2):
        for c in range(2):
            result.rows[top + r][top + c] = ring.coerce(block[r][c])
    return result


def s_dot(size, i, ring):
    """Lift of the simple reflection s_i"""
    return phi_embed(size, i, [[0, -1], [1, 0]], ring)


def s_dot_inverse(size, i, ring):
    """Inverse lift of s_i"""
    return phi_embed(size, i, [[0, 1], [-1, 0]], ring)


def x_generator(size, i, value, ring):
    """x_i(value): upper unipotent generator"""
    return phi_embed(size, i, [[1, value], [0, 1]], ring)


def y_generator(size, i, value, ring):
    """y_i(value): lower unipotent generator"""
    return phi_embed(size, i, [[1, 0], [value, 1]], ring)


def gaussian_binomial(n, k, memo=None):
    """[n choose k]_q as a polynomial in q via the q-Pascal rule"""
    memo = {} if memo is None else memo
    if k < 0 or k > n:
        return SYMBOLIC.zero
    if k in (0, n):
        return SYMBOLIC.one
    if (n, k) not in memo:
        memo[(n, k)] = gaussian_binomial(n - 1, k - 1, memo) + symbol("q") ** k * gaussian_binomial(n - 1, k, memo)
    return memo[(n, k)]


#
# conjugation and commutator identities
#
def _identity_cases(i, j, k, beta, gamma, ring):
    size = 3

    def x_mat(a, b, value):
        return transvection(size, a, b, value, ring)

    def w_mat(value):
        return weyl_factor(size, i, j, value, ring)

    return {
        1: (w_mat(-beta) * w_mat(beta), ExactMatrix.identity(size, ring)),
        2: (w_mat(-beta) * x_mat(j, k, gamma) * w_mat(beta), x_mat(i, k, -beta * gamma)),
        3: (w_mat(-beta) * x_mat(i, k, gamma) * w_mat(beta), x_mat(j, k, gamma / beta)),
        4: (w_mat(-beta) * x_mat(k, i, gamma) * w_mat(beta), x_mat(k, j, beta * gamma)),
        5: (w_mat(-beta) * x_mat(k, j, gamma) * w_mat(beta), x_mat(k, i, -gamma / beta)),
        6: (
            x_mat(i, j, -gamma) * x_mat(j, k, -beta) * x_mat(i, j, gamma) * x_mat(j, k, beta),
            x_mat(i, k, beta * gamma),
        ),
        7: (
            x_mat(i, j, -gamma) * x_mat(k, i, -beta) * x_mat(i, j, gamma) * x_mat(k, i, beta),
            x_mat(k, j, -beta * gamma),
        ),
    }


def verify_identities(domain=None, trials=20, seed=2024):
    """
    Check the seven transvection/Weyl identities for every ordering of
    distinct (i, j, k) in {1,2,3}: symbolically and on random points of
    domain. Returns a mapping identity number -> bool.
    """
    report = {number: True for number in range(1, 8)}
    for i, j, k in itertools.permutations((1, 2, 3)):
        cases = _identity_cases(i, j, k, symbol("b"), symbol("g"), SYMBOLIC)
        for number, (left, right) in cases.items():
            if left != right:
                LOG.warning("identity %d fails symbolically for (i,j,k)=(%d,%d,%d)", number, i, j, k)
                report[number] = False
    if domain is not None:
        rng = np.random.default_rng(seed)
        for _ in range(trials):
            beta = domain.random_element(rng, nonzero=True)
            gamma = domain.random_element(rng, nonzero=True)
            for i, j, k in itertools.permutations((1, 2, 3)):
                for number, (left, right) in _identity_cases(i, j, k, beta, gamma, domain).items():
                    if left != right:
                        LOG.warning("identity %d fails at b=%s g=%s", number, beta, gamma)
                        report[number] = False
    return report

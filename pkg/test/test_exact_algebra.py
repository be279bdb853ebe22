# python
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
Tests of the coefficient domains, Laurent polynomials and exact matrices
"""

import os
import sys
from fractions import Fraction

import pytest

# import test object
sys.path.append(os.path.abspath("./"))
from deodhar_lab import exact_algebra as EA  # pylint: disable=wrong-import-position
from deodhar_lab.errors import (  # pylint: disable=wrong-import-position
    DomainMismatchError,
    NonMonomialDivisionError,
    ParameterError,
)

b = EA.symbol("b")
g = EA.symbol("g")
q = EA.symbol("q")


def test_prime_field_arithmetic():
    """F_7 wraps around and inverts units"""
    field = EA.PrimeField(7)
    three = field.coerce(3)
    assert three + field.coerce(5) == 1
    assert three * three.inverse() == 1
    assert field.coerce(Fraction(1, 3)) == 5
    assert len(field.units()) == 6
    with pytest.raises(ParameterError):
        EA.PrimeField(9)


def test_domains_do_not_mix():
    """Elements of F_5 and F_7 cannot be combined"""
    with pytest.raises(DomainMismatchError):
        _ = EA.PrimeField(5).coerce(1) + EA.PrimeField(7).coerce(1)
    with pytest.raises(DomainMismatchError):
        EA.RATIONALS.coerce(EA.PrimeField(5).coerce(2))


def test_parse_domain():
    """rat and q<p> notation"""
    assert EA.parse_domain("rat") == EA.RATIONALS
    assert EA.parse_domain("q11") == EA.PrimeField(11)
    with pytest.raises(ParameterError):
        EA.parse_domain("real")


def test_laurent_arithmetic():
    """Sums, products and monomial division cancel exactly"""
    poly = (b + g) * (b - g)
    assert poly == b**2 - g**2
    assert (b * g) / g == b
    assert b**-2 * b**2 == 1
    assert (b + 1) - b == 1
    assert str(2 * b * g**-1 - 3) == "-3 + 2*b*g^-1"


def test_division_by_sum_fails():
    """Only monomials are invertible"""
    with pytest.raises(NonMonomialDivisionError):
        _ = b / (b + g)
    assert isinstance(NonMonomialDivisionError("x"), ZeroDivisionError)


def test_degrees_and_coefficients():
    """degree, min_degree and coefficient_in on a Laurent polynomial in g"""
    poly = b * g + 3 + b**2 / g
    assert poly.degree("g") == 1
    assert poly.min_degree("g") == -1
    assert poly.coefficient_in("g", 1) == b
    assert poly.coefficient_in("g", 0) == 3
    assert poly.coefficient_in("g", -1) == b**2
    assert poly.coefficient_in("g", 2) == 0


def test_substitute_and_evaluate():
    """Substitution stays symbolic, evaluation lands in the domain"""
    poly = b * g + g**-1
    assert poly.substitute({"g": b}) == b**2 + b**-1
    assert poly.evaluate({"b": 2, "g": Fraction(1, 2)}) == 3
    field = EA.PrimeField(5)
    assert poly.evaluate({"b": 1, "g": 2}, field) == field.coerce(2 + 3)
    with pytest.raises(ParameterError):
        poly.evaluate({"b": 1})


def test_matrix_product_and_minor():
    """Transvections multiply as column operations and have determinant 1"""
    ring = EA.SYMBOLIC
    left = EA.transvection(3, 2, 1, b, ring)
    assert left.entry(2, 1) == b
    assert EA.ExactMatrix.identity(3, ring).times_transvection(2, 1, b) == left
    product = left * EA.transvection(3, 1, 2, g, ring)
    assert product.entry(2, 2) == b * g + 1
    assert EA.minor(product, (1, 2, 3)) == 1
    with pytest.raises(ParameterError):
        EA.minor(product, (1, 2))


def test_plucker_vector_of_rref():
    """Maximal minors of a 2 x 4 echelon matrix"""
    ring = EA.SYMBOLIC
    matrix = EA.ExactMatrix([[1, 0, b, g], [0, 1, 1, 0]], ring)
    vector = EA.plucker_vector(matrix)
    assert vector[(1, 2)] == 1
    assert vector[(1, 3)] == 1
    assert vector[(2, 3)] == -b
    assert vector[(3, 4)] == -g
    assert len(vector) == 6


def test_weyl_factor_is_inverted_by_its_negative():
    """W(-b) W(b) = 1"""
    ring = EA.SYMBOLIC
    assert (EA.weyl_factor(3, 2, 1, -b, ring) * EA.weyl_factor(3, 2, 1, b, ring)).is_identity()


def test_s_dot_lifts():
    """s_dot and its inverse multiply to the identity, the block sits at the bottom for i = 1"""
    ring = EA.SYMBOLIC
    lift = EA.s_dot(4, 1, ring)
    assert (lift * EA.s_dot_inverse(4, 1, ring)).is_identity()
    assert lift.entry(3, 4) == -1
    assert lift.entry(4, 3) == 1


def test_gaussian_binomial():
    """[4 choose 2]_q"""
    assert EA.gaussian_binomial(4, 2) == q**4 + q**3 + 2 * q**2 + q + 1
    assert EA.gaussian_binomial(5, 0) == 1
    assert EA.gaussian_binomial(3, 4) == 0


def test_transvection_identities():
    """All seven conjugation and commutator identities hold symbolically and over F_13"""
    report = EA.verify_identities(EA.PrimeField(13), trials=5)
    assert report == {number: True for number in range(1, 8)}

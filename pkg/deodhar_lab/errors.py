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
Exception hierarchy of the deodhar_lab package.

Library code raises these exceptions; only the command line front end
turns them into exit codes.
"""


class DeodharLabError(Exception):
    """Base class of all errors raised by deodhar_lab"""


class InvalidPartitionError(DeodharLabError, ValueError):
    """Partition does not fit into the k x (n-k) box or is not decreasing"""


class InvalidDiagramError(DeodharLabError, ValueError):
    """Filling or stone diagram is malformed or not a Go-diagram"""


class InvalidReadingError(DeodharLabError, ValueError):
    """Cell labels do not form a valid reading order"""


class GuardExceededError(DeodharLabError):
    """An exhaustive computation would exceed its configured size guard"""


class ParameterError(DeodharLabError, ValueError):
    """Parameter assignment violates the constraints of its family"""


class NonMonomialDivisionError(DeodharLabError, ZeroDivisionError):
    """Laurent polynomial division by something that is not a monomial"""


class DistortionError(DeodharLabError):
    """The distortion process reached a state its invariants forbid"""


class ClosureHypothesisError(DeodharLabError, ValueError):
    """Closure instance does not satisfy the hypotheses of the check"""


class DomainMismatchError(DeodharLabError, ValueError):
    """Values from two different coefficient domains were combined"""

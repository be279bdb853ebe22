# python
# pylint: disable=too-many-instance-attributes,too-many-locals,too-many-branches
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
Closure relations between Deodhar components.

Given a Go-diagram D' with a crossing-uncrossing pair (c, c') of adjacent
pipes i, i+1, the promoted diagram D has elbows at c and c'. The product
formula of R~_D is conjugated between c and c' by W_(i+1,i)(g_c); the
excited factors this produces are then moved left to their cooling sites
(black cells of D'). Solving the resulting triangular system for the
parameters of D shows lim_{g_c -> oo} R_D = R_D'.

Padding reduces the general case to pi(D') = identity. The census and the
conjecture scan are finite-field companions.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from deodhar_lab.diagram_core import (
    Cell,
    DiagramKind,
    Filling,
    GoDiagram,
    Partition,
    ReadingOrder,
    Stone,
    Tile,
    _trace,
    all_partitions,
    crossing_pairs,
    enumerate_diagrams,
    precedes,
    subexpression_word,
)
from deodhar_lab.errors import (
    ClosureHypothesisError,
    DistortionError,
    GuardExceededError,
    InvalidDiagramError,
    NonMonomialDivisionError,
)
from deodhar_lab.exact_algebra import (
    RATIONALS,
    SYMBOLIC,
    ExactMatrix,
    PrimeField,
    gaussian_binomial,
    plucker_vector,
    symbol,
    transvection,
)
from deodhar_lab.networks import Family, ParamAssignment, product_formula_matrix, restricted_weight_matrix
from deodhar_lab.pluecker_toggle import nonzero_pluckers

#
# global constants
#
LOG = logging.getLogger("deodhar_lab.closure")
MAX_CLOSURE_CELLS = 9
MAX_CENSUS_N = 8
CHECK_FIELD = PrimeField(13)
HEURISTIC_NOTE = "heuristic evidence from Plücker vanishing patterns, not a proof"


#
# crossing pairs and cooling sites
#
@dataclass
class ClosureInstance:
    """D', the pair (c, c'), the pipes i, i+1 and the promoted diagram D"""

    d_prime: GoDiagram
    c: Cell
    c_prime: Cell
    i: int
    diagram: GoDiagram
    reading: ReadingOrder

    @property
    def gamma_c(self):
        """Name of the parameter sent to infinity"""
        return f"g{self.reading.label(self.c)}"


def _find_pair(d_prime, c, c_prime):
    for pair in crossing_pairs(d_prime):
        if pair.c == c and pair.c_prime == c_prime:
            return pair
    raise ClosureHypothesisError(f"({c}) and ({c_prime}) are not a crossing-uncrossing pair")


def promote(d_prime, c, c_prime, require_adjacent=True):
    """Replace the white stone at c and the black stone at c' by Plus"""
    c, c_prime = Cell(*c), Cell(*c_prime)
    pair = _find_pair(d_prime, c, c_prime)
    if require_adjacent and not pair.adjacent:
        raise ClosureHypothesisError(f"pipes {pair.i} and {pair.j} are not adjacent")
    diagram = d_prime.with_tiles({c: Tile.ELBOW, c_prime: Tile.ELBOW})
    if pair.adjacent:
        changed = [
            cell
            for cell in d_prime.shape.cells()
            if cell not in (c, c_prime) and diagram.stone(cell) is not d_prime.stone(cell)
        ]
        if changed:
            raise ClosureHypothesisError(f"promotion changed the stone at {changed[0]}")
    return diagram


def closure_instance(d_prime, c, c_prime, reading=None):
    """Validate the identity-case hypotheses and build the instance"""
    c, c_prime = Cell(*c), Cell(*c_prime)
    if not d_prime.perm.is_identity():
        raise ClosureHypothesisError(f"pi(D') = {d_prime.perm} is not the identity")
    diagram = promote(d_prime, c, c_prime)
    pair = _find_pair(d_prime, c, c_prime)
    reading = reading or ReadingOrder.row_major(d_prime.shape)
    return ClosureInstance(d_prime, c, c_prime, pair.i, diagram, reading)


def cooling_site(d_prime, b, pair, reading=None):
    """(d, d'): the uncrossing d' closest to b with jump coordinate pair and the crossing before b"""
    reading = reading or ReadingOrder.row_major(d_prime.shape)
    b = Cell(*b)
    pair = tuple(pair)
    blacks = [
        cell
        for cell in d_prime.cells_with(Stone.BLACK)
        if d_prime.sigma(cell) == pair and precedes(b, cell)
    ]
    if not blacks:
        raise ClosureHypothesisError(f"no black cell with jump coordinate {pair} north-west of {b}")
    d_prime_cell = min(blacks, key=reading.label)
    whites = [
        cell
        for cell in d_prime.cells_with(Stone.WHITE)
        if d_prime.sigma(cell) == (pair[1], pair[0]) and precedes(cell, b)
    ]
    if not whites:
        raise ClosureHypothesisError(f"no white cell with jump coordinate {pair[::-1]} south-east of {b}")
    return max(whites, key=reading.label), d_prime_cell


#
# factor tables
#
@dataclass
class Factor:
    """X_pair(entry), possibly excited and heading to a cooling cell"""

    pair: tuple
    entry: object
    excited: bool = False
    cooling: Cell = None

    def __str__(self):
        text = f"X{self.pair[0]},{self.pair[1]}({self.entry})"
        return f"[{text}]" if self.excited else text


@dataclass
class FactorTable:
    """Factors per cell; cells listed left to right (decreasing labels)"""

    cells: list
    slots: dict

    def product(self, values, domain, size):
        """Evaluate the full product over a scalar domain"""
        result = ExactMatrix.identity(size, domain)
        for cell in self.cells:
            for factor in self.slots[cell]:
                value = factor.entry.evaluate(values, domain)
                if value != 0:
                    result = result * transvection(size, factor.pair[0], factor.pair[1], value, domain)
        return result

    def leftmost_excited(self):
        """(cell index, slot index) of the first excited factor, or None"""
        for index, cell in enumerate(self.cells):
            for slot, factor in enumerate(self.slots[cell]):
                if factor.excited:
                    return index, slot
        return None

    def rows(self, shape):
        """Text of every cell arranged like the shape"""
        return [
            [" ".join(str(factor) for factor in self.slots[Cell(r, c)]) or "1" for c in range(shape.parts[r])]
            for r in range(shape.k)
        ]

    def snapshot(self):
        """cell -> list of (pair, entry text, excited)"""
        return {
            str(cell): [(list(f.pair), str(f.entry), f.excited) for f in self.slots[cell]] for cell in self.cells
        }


def distortion_bound(position):
    """a_1 = 0, a_k = k + a_1 + ... + a_(k-1)"""
    bounds = [0]
    for k in range(2, position + 1):
        bounds.append(k + sum(bounds))
    return bounds[position - 1] if position >= 1 else 0


def _conjugated(pair, entry, i, gamma_c):
    """W_(i+1,i)(-g) X_pair(entry) W_(i+1,i)(g)"""
    p, q = pair
    if p == i:
        return (i + 1, q), -gamma_c * entry
    if p == i + 1:
        return (i, q), entry / gamma_c
    if q == i + 1:
        return (p, i), gamma_c * entry
    if q == i:
        return (p, i + 1), -entry / gamma_c
    return pair, entry


def initial_table(instance):
    """Product formula of R~_D with conjugation between c and c' applied"""
    d_prime, diagram, reading = instance.d_prime, instance.diagram, instance.reading
    i = instance.i
    gamma_c = symbol(instance.gamma_c)
    low, high = reading.label(instance.c), reading.label(instance.c_prime)
    cells = reading.cells_left_to_right()
    slots = {}
    for cell in cells:
        label = reading.label(cell)
        if diagram.stone(cell) is Stone.WHITE:
            entry = SYMBOLIC.zero
        else:
            entry = symbol(f"g{label}")
        pair = diagram.sigma(cell)
        if cell == instance.c_prime:
            slots[cell] = [
                Factor((i + 1, i), entry + gamma_c),
                Factor((i, i + 1), -1 / gamma_c),
                Factor((i + 1, i), gamma_c),
            ]
        elif cell == instance.c:
            slots[cell] = [
                Factor((i + 1, i), -gamma_c, excited=True, cooling=instance.c_prime),
                Factor((i, i + 1), 1 / gamma_c),
            ]
        elif low < label < high:
            if set(pair) == {i, i + 1}:
                raise ClosureHypothesisError(f"cell {cell} between c and c' carries the pair {pair}")
            new_pair, new_entry = _conjugated(pair, entry, i, gamma_c)
            if new_entry != 0 and new_pair != d_prime.sigma(cell):
                raise ClosureHypothesisError(f"conjugated pair {new_pair} at {cell} is not sigma_D'")
            slots[cell] = [Factor(new_pair, new_entry)]
        else:
            slots[cell] = [Factor(pair, entry)]
    return FactorTable(cells, slots)


class Distortion:
    """Moves the leftmost excited factor until no excited factor remains"""

    def __init__(self, instance, check=True, record=False, seed=2024):
        self.instance = instance
        self.table = initial_table(instance)
        self.check = check
        self.record = record
        self.created = 0
        self.moves = 0
        self.history = [self.table.snapshot()] if record else []
        size = instance.d_prime.shape.n
        if check:
            rng = np.random.default_rng(seed)
            self.values = {
                f"g{instance.reading.label(cell)}": CHECK_FIELD.random_element(rng, nonzero=True)
                for cell in instance.d_prime.shape.cells()
            }
            self.reference = self.table.product(self.values, CHECK_FIELD, size)
            gammas = ParamAssignment(
                Family.GAMMA,
                instance.diagram,
                {
                    cell: self.values[f"g{instance.reading.label(cell)}"]
                    for cell in instance.diagram.shape.cells()
                    if instance.diagram.stone(cell) is not Stone.WHITE
                },
                CHECK_FIELD,
                instance.reading,
            )
            original = product_formula_matrix(instance.diagram, gammas, instance.reading)
            if original != self.reference:
                raise DistortionError("conjugated table does not reproduce the product formula")

    def _verify(self, what):
        self.moves += 1
        if self.check:
            current = self.table.product(self.values, CHECK_FIELD, self.instance.d_prime.shape.n)
            if current != self.reference:
                raise DistortionError(f"product changed after {what}")

    def _move(self, index, slot):
        table = self.table
        while True:
            cell = table.cells[index]
            factors = table.slots[cell]
            moving = factors[slot]
            if slot == 0:
                if cell == moving.cooling:
                    raise DistortionError(f"X{moving.pair} left its cooling site {cell}")
                if index == 0:
                    raise DistortionError(f"X{moving.pair} passed the left end of the table")
                factors.pop(0)
                index -= 1
                table.slots[table.cells[index]].append(moving)
                slot = len(table.slots[table.cells[index]]) - 1
                continue
            left = factors[slot - 1]
            if cell == moving.cooling and left.pair == moving.pair and not left.excited:
                merged = left.entry + moving.entry
                factors.pop(slot)
                if merged == 0 and len(factors) > 1:
                    factors.pop(slot - 1)
                else:
                    left.entry = merged
                LOG.debug("X%s cooled at %s", moving.pair, cell)
                self._verify(f"merge at {cell}")
                return
            if left.entry == 0 or (left.pair[1] != moving.pair[0] and moving.pair[1] != left.pair[0]):
                factors[slot - 1], factors[slot] = moving, left
                slot -= 1
                self._verify(f"swap at {cell}")
                continue
            if left.pair == moving.pair[::-1]:
                raise DistortionError(f"X{moving.pair} meets its transpose at {cell}")
            if left.pair[1] == moving.pair[0]:
                new = Factor((left.pair[0], moving.pair[1]), left.entry * moving.entry, excited=True)
            else:
                new = Factor((moving.pair[0], left.pair[1]), -(left.entry * moving.entry), excited=True)
            if new.pair[0] < new.pair[1]:
                raise DistortionError(f"excited factor X{new.pair} is not lower triangular")
            try:
                _, new.cooling = cooling_site(self.instance.d_prime, cell, new.pair, self.instance.reading)
            except ClosureHypothesisError as error:
                raise DistortionError(f"no cooling site for X{new.pair} created at {cell}") from error
            factors[slot - 1 : slot + 1] = [moving, left, new]
            slot -= 1
            self.created += 1
            LOG.debug("X%s at %s created X%s heading to %s", moving.pair, cell, new.pair, new.cooling)
            self._verify(f"commutator at {cell}")

    def run(self):
        """Distort until no excited factor is left, return the table"""
        while (position := self.table.leftmost_excited()) is not None:
            self._move(*position)
            if self.record:
                self.history.append(self.table.snapshot())
        return self.table


def distort(d_prime, c, c_prime, reading=None, check=True, record=False):
    """D'-distortion of R~_D as a finished Distortion"""
    engine = Distortion(closure_instance(d_prime, c, c_prime, reading), check=check, record=record)
    engine.run()
    return engine


#
# parameters and limits
#
def solve_gamma(engine):
    """g_b in terms of the b-parameters of D' and g_c, solved in increasing label"""
    instance = engine.instance
    reading = instance.reading
    d_prime, diagram = instance.d_prime, instance.diagram
    gamma_c = symbol(instance.gamma_c)
    solved = {}
    for cell in reading.cells_by_label():
        label = reading.label(cell)
        if cell == instance.c:
            solved[cell] = gamma_c
            continue
        if diagram.stone(cell) is Stone.WHITE:
            solved[cell] = SYMBOLIC.zero
            continue
        beta = SYMBOLIC.zero if d_prime.stone(cell) is Stone.WHITE else symbol(f"b{label}")
        factors = engine.table.slots[cell]
        if cell == instance.c_prime:
            solved[cell] = beta - gamma_c
            continue
        if len(factors) != 1 or factors[0].pair != d_prime.sigma(cell):
            raise ClosureHypothesisError(f"cell {cell} does not hold a single X{d_prime.sigma(cell)} factor")
        entry = factors[0].entry.substitute({f"g{reading.label(other)}": value for other, value in solved.items()})
        var = f"g{label}"
        if entry.degree(var) != 1 or entry.min_degree(var) < 0:
            raise ClosureHypothesisError(f"entry {entry} at {cell} is not linear in {var}")
        coefficient = entry.coefficient_in(var, 1)
        try:
            solved[cell] = (beta - entry.coefficient_in(var, 0)) / coefficient
        except NonMonomialDivisionError as error:
            raise ClosureHypothesisError(f"system is not triangular at {cell}: {error}") from error
    return solved


def gamma_equations(engine):
    """Text 'entry = target' per cell, the system solved by solve_gamma"""
    instance = engine.instance
    equations = []
    for cell in reversed(instance.reading.cells_by_label()):
        if cell == instance.c or instance.diagram.stone(cell) is Stone.WHITE:
            continue
        label = instance.reading.label(cell)
        entry = engine.table.slots[cell][0].entry
        equations.append((cell, f"{entry} = b{label}"))
    return equations


@dataclass
class ClosureReport:
    """Outcome of a closure verification"""

    ok: bool
    instance: ClosureInstance = None
    witness: str = None
    limit: ExactMatrix = None
    steps: tuple = ()
    notes: list = field(default_factory=list)
    engine: Distortion = None


def _gamma_params(instance, solved):
    values = {cell: value for cell, value in solved.items() if instance.diagram.stone(cell) is not Stone.WHITE}
    return ParamAssignment(Family.GAMMA, instance.diagram, values, SYMBOLIC, instance.reading)


def verify_closure_identity_case(d_prime, c, c_prime, reading=None, check=True, record=False):
    """Distort, solve and take the degree-0 part in g_c of R~_D"""
    engine = distort(d_prime, c, c_prime, reading, check=check, record=record)
    instance = engine.instance
    between = instance.reading.label(instance.c_prime) - instance.reading.label(instance.c) - 1
    bound = distortion_bound(between)
    if engine.created > bound:
        witness = f"{engine.created} excited factors exceed the bound {bound}"
        return ClosureReport(False, instance, witness, engine=engine)
    solved = solve_gamma(engine)
    full, _ = restricted_weight_matrix(instance.diagram, _gamma_params(instance, solved))
    target, _ = restricted_weight_matrix(d_prime, ParamAssignment.symbolic(d_prime, Family.BETA, instance.reading))
    var = instance.gamma_c
    limit_rows = []
    for r, (row, target_row) in enumerate(zip(full.rows, target.rows)):
        limit_row = []
        for col, (value, expected) in enumerate(zip(row, target_row)):
            if value.degree(var) > 0:
                witness = f"entry ({r + 1},{col + 1}) = {value} grows with {var}"
                return ClosureReport(False, instance, witness, engine=engine)
            constant_part = value.coefficient_in(var, 0)
            if constant_part != expected:
                witness = f"entry ({r + 1},{col + 1}) tends to {constant_part}, expected {expected}"
                return ClosureReport(False, instance, witness, engine=engine)
            limit_row.append(constant_part)
        limit_rows.append(limit_row)
    limit = ExactMatrix(limit_rows, SYMBOLIC).select_rows(d_prime.trace.west_labels)
    LOG.info("closure %s -> %s verified with %d excited factors", c, c_prime, engine.created)
    return ClosureReport(True, instance, limit=limit, engine=engine)


def numeric_limit(d_prime, c, c_prime, m_max=6, seed=2024):
    """Distance of R_D at g_c = 10^m to R_D' for m = 1..m_max over the rationals"""
    engine = distort(d_prime, c, c_prime, check=False)
    instance = engine.instance
    solved = solve_gamma(engine)
    rng = np.random.default_rng(seed)
    betas = {
        f"b{instance.reading.label(cell)}": RATIONALS.random_element(rng, nonzero=True)
        for cell in d_prime.shape.cells()
        if d_prime.stone(cell) is not Stone.WHITE
    }
    _, target = restricted_weight_matrix(d_prime, ParamAssignment.symbolic(d_prime, Family.BETA, instance.reading))
    target = target.evaluate(betas, RATIONALS)
    _, moving = restricted_weight_matrix(instance.diagram, _gamma_params(instance, solved))
    distances = []
    for exponent in range(1, m_max + 1):
        values = dict(betas)
        values[instance.gamma_c] = Fraction(10) ** exponent
        point = moving.evaluate(values, RATIONALS)
        distances.append(max((abs(a - b) for ra, rb in zip(point.rows, target.rows) for a, b in zip(ra, rb)), default=0))
    return distances


#
# padding and truncation
#
def _pad_once(diagram, where):
    """Add a column on the left, a row on top or both, new tiles chosen to avoid configuration B"""
    shape = diagram.shape
    top = where in ("top", "both")
    left = where in ("left", "both")
    k = shape.k + (1 if top else 0)
    n = shape.n + (1 if top else 0) + (1 if left else 0)
    width = n - k
    parts = ([width] if top else []) + [p + (1 if left else 0) for p in shape.parts]
    new_shape = Partition(tuple(parts), k, n)
    offset_row, offset_col = (1 if top else 0), (1 if left else 0)

    def tile_of(cell, east_in, south_in):
        old = Cell(cell.row - offset_row, cell.col - offset_col)
        if shape.has_cell(old.row, old.col) and old.row >= 0 and old.col >= 0:
            return diagram.filling.tile(old)
        return Tile.CROSSING if east_in > south_in else Tile.ELBOW

    _, tiles = _trace(new_shape, tile_of)
    rows = tuple(tuple(tiles[Cell(r, c)] for c in range(new_shape.parts[r])) for r in range(k))
    return GoDiagram(Filling(new_shape, rows))


def padding_steps(perm, width):
    """Next padding position read off the smallest descent of pi, or None"""
    descents = perm.descents()
    if not descents:
        return None
    i = min(descents)
    if i >= width + 1:
        return "left"
    if i + 1 <= width:
        return "top"
    return "both"


def pad(diagram):
    """(padded diagram, steps): pad until pi is the identity"""
    steps = []
    current = diagram
    while (where := padding_steps(current.perm, current.shape.width)) is not None:
        before = current.perm.length()
        current = _pad_once(current, where)
        if current.perm.length() >= before:
            raise InvalidDiagramError(f"padding {where} did not shorten {current.perm}")
        steps.append(where)
        LOG.debug("padded %s, pi now %s", where, current.perm)
    return current, tuple(steps)


def pad_with(diagram, steps):
    """Apply a fixed padding sequence"""
    for where in steps:
        diagram = _pad_once(diagram, where)
    return diagram


def truncate(diagram, side):
    """Remove the leftmost column ('left-column') or the top row ('top-row')"""
    shape = diagram.shape
    tiles = diagram.filling.tiles
    if side == "top-row":
        if shape.k == 0 or shape.parts[0] != shape.width:
            raise InvalidDiagramError("top row is not full")
        new_shape = Partition(shape.parts[1:], shape.k - 1, shape.n - 1)
        rows = tiles[1:]
    elif side == "left-column":
        if shape.k == 0 or shape.parts[-1] == 0 or shape.width == 0:
            raise InvalidDiagramError("some row does not reach the leftmost column")
        new_shape = Partition(tuple(p - 1 for p in shape.parts), shape.k, shape.n - 1)
        rows = tuple(row[1:] for row in tiles)
    else:
        raise InvalidDiagramError(f"unknown side '{side}'")
    return GoDiagram(Filling(new_shape, rows))


def unpad(diagram, steps):
    """Undo a padding sequence by truncation"""
    for where in reversed(steps):
        if where in ("left", "both"):
            diagram = truncate(diagram, "left-column")
        if where in ("top", "both"):
            diagram = truncate(diagram, "top-row")
    return diagram


def _shift(cell, steps):
    rows = sum(1 for where in steps if where in ("top", "both"))
    cols = sum(1 for where in steps if where in ("left", "both"))
    return Cell(cell.row + rows, cell.col + cols)


def verify_closure_general(d_prime, c, c_prime, kind="row", check=True, record=False):
    """Pad D' and D identically, verify the identity case and descend by truncation

    kind names the reading order (row or col); it is rebuilt on the padded shape.
    """
    c, c_prime = Cell(*c), Cell(*c_prime)
    diagram = promote(d_prime, c, c_prime)
    if d_prime.perm.is_identity():
        reading = ReadingOrder.from_kind(d_prime.shape, kind)
        return verify_closure_identity_case(d_prime, c, c_prime, reading, check=check, record=record)
    padded_prime, steps = pad(d_prime)
    padded = pad_with(diagram, steps)
    if not padded.perm.is_identity():
        raise ClosureHypothesisError("D and D' need different paddings")
    c_pad, c_prime_pad = _shift(c, steps), _shift(c_prime, steps)
    if promote(padded_prime, c_pad, c_prime_pad) != padded:
        raise ClosureHypothesisError("padding does not commute with promotion")
    reading = ReadingOrder.from_kind(padded_prime.shape, kind)
    report = verify_closure_identity_case(padded_prime, c_pad, c_prime_pad, reading, check=check, record=record)
    report.steps = steps
    report.notes.append(f"padded by {', '.join(steps)}; closure descends to D' by truncation of rows and columns")
    return report


#
# point counts
#
@dataclass
class CensusReport:
    """Sum of (q-1)^plus q^black over all Go-diagrams against the q-binomial"""

    n: int
    k: int
    total: object
    expected: object

    @property
    def ok(self):
        """Both polynomials agree"""
        return self.total == self.expected

    def __str__(self):
        return f"{self.total}  {'OK' if self.ok else 'MISMATCH ' + str(self.expected)}"


def cell_weight(diagram):
    """(q-1)^#Plus q^#Black"""
    q = symbol("q")
    return (q - 1) ** len(diagram.cells_with(Stone.PLUS)) * q ** len(diagram.cells_with(Stone.BLACK))


def fq_cell_census(n, k, max_n=MAX_CENSUS_N):
    """Deodhar components of every shape counted over F_q"""
    if n > max_n:
        raise GuardExceededError(f"n={n} exceeds the census guard of {max_n}")
    total = SYMBOLIC.zero
    for shape in all_partitions(k, n):
        for diagram in enumerate_diagrams(shape, DiagramKind.GO, max_cells=shape.size):
            total = total + cell_weight(diagram)
    return CensusReport(n, k, total, gaussian_binomial(n, k))


def r_polynomial(v, w, memo=None):
    """Kazhdan-Lusztig R-polynomial R_{v,w}(q) by descent recursion"""
    memo = {} if memo is None else memo
    key = (v.images, w.images)
    if key in memo:
        return memo[key]
    if v == w:
        result = SYMBOLIC.one
    elif not v.bruhat_le(w):
        result = SYMBOLIC.zero
    else:
        s = min(w.descents())
        ws = w.times_simple(s)
        vs = v.times_simple(s)
        if vs.length() < v.length():
            result = r_polynomial(vs, ws, memo)
        else:
            q = symbol("q")
            result = (q - 1) * r_polynomial(v, ws, memo) + q * r_polynomial(vs, ws, memo)
    memo[key] = result
    return result


def richardson_census(shape, reading=None):
    """v -> (sum of Go-diagram weights with value v, R_{v,w_lambda})"""
    w_lambda = subexpression_word(Filling.all_crossings(shape), reading).value
    sums = {}
    for diagram in enumerate_diagrams(shape, DiagramKind.GO, max_cells=shape.size):
        value = subexpression_word(diagram.filling, reading).value
        sums[value] = sums.get(value, SYMBOLIC.zero) + cell_weight(diagram)
    memo = {}
    return {value: (total, r_polynomial(value, w_lambda, memo)) for value, total in sums.items()}


#
# exploratory scan
#
@dataclass
class ScanEntry:
    """One crossing pair examined by the conjecture scan"""

    d_prime: GoDiagram
    c: Cell
    c_prime: Cell
    pipes: tuple
    hypothesis: str
    missing: tuple  # Plücker indices nonzero on D' but zero on D

    @property
    def consistent(self):
        """Vanishing pattern allows containment"""
        return not self.missing


def _between(c, x, c_prime):
    return precedes(c, x) and precedes(x, c_prime)


def _middle_pipe_interferes(d_prime, pair, all_pairs):
    for other in all_pairs:
        pipes = {other.i, other.j}
        middle = [k for k in pipes if pair.i < k < pair.j]
        if not middle or not pipes & {pair.i, pair.j}:
            continue
        if _between(pair.c, other.c, pair.c_prime) or _between(pair.c, other.c_prime, pair.c_prime):
            return True
    return False


def sampled_support(diagram, rng, domain, samples=3):
    """Plücker indices nonzero at random F_p points of the component"""
    support = set()
    for _ in range(samples):
        params = ParamAssignment.random(diagram, Family.BETA, domain, rng)
        _, point = restricted_weight_matrix(diagram, params)
        support |= {subset for subset, value in plucker_vector(point).items() if value != 0}
    return support


def conjecture_scan(shape, mode="conj1", include_adjacent=False, seed=2024, max_cells=MAX_CLOSURE_CELLS):
    """Plücker vanishing check on non-adjacent crossing pairs, labelled heuristic"""
    if shape.size > max_cells:
        raise GuardExceededError(f"{shape.size} cells exceed the closure guard of {max_cells}")
    if mode not in ("conj1", "conj2"):
        raise ClosureHypothesisError(f"unknown scan mode '{mode}'")
    rng = np.random.default_rng(seed)
    field_p = PrimeField(11)
    entries = []
    for d_prime in enumerate_diagrams(shape, DiagramKind.GO, max_cells):
        pairs = crossing_pairs(d_prime)
        for pair in pairs:
            if pair.adjacent:
                if not include_adjacent:
                    continue
                hypothesis = "adjacent"
            else:
                interferes = _middle_pipe_interferes(d_prime, pair, pairs)
                if (mode == "conj1") == interferes:
                    continue
                hypothesis = mode
            try:
                diagram = promote(d_prime, pair.c, pair.c_prime, require_adjacent=False)
            except InvalidDiagramError:
                continue
            support = nonzero_pluckers(diagram)
            support_prime = nonzero_pluckers(d_prime) | sampled_support(d_prime, rng, field_p)
            missing = tuple(sorted(support_prime - support))
            entries.append(ScanEntry(d_prime, pair.c, pair.c_prime, (pair.i, pair.j), hypothesis, missing))
    LOG.info("%s scan of %s: %d instances (%s)", mode, shape, len(entries), HEURISTIC_NOTE)
    return entries


def identity_instances(shape, max_cells=MAX_CLOSURE_CELLS):
    """(D', c, c') for every adjacent pair in identity-permutation Go-diagrams of a shape"""
    if shape.size > max_cells:
        raise GuardExceededError(f"{shape.size} cells exceed the closure guard of {max_cells}")
    for d_prime in enumerate_diagrams(shape, DiagramKind.GO, max_cells):
        if not d_prime.perm.is_identity():
            continue
        for pair in crossing_pairs(d_prime):
            if pair.adjacent:
                yield d_prime, pair.c, pair.c_prime


def general_instances(shape, max_cells=MAX_CLOSURE_CELLS):
    """(D', c, c') for every adjacent pair in every Go-diagram of a shape"""
    for d_prime in enumerate_diagrams(shape, DiagramKind.GO, max_cells):
        for pair in crossing_pairs(d_prime):
            if pair.adjacent:
                yield d_prime, pair.c, pair.c_prime


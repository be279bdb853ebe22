# python
# pylint: disable=too-many-arguments,too-many-locals
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
Parametrizations of Deodhar components.

Restricted paths walk a pipe backward (north-west to south-east) and may
jump at Plus and Black cells to the lower pipe; dual paths jump to the
higher pipe. The same walker computes the corner-weighted matrices of the
grid network. The Talaska-Williams network is a networkx DiGraph.
"""

import enum
import logging
from dataclasses import dataclass

import networkx as nx
import numpy as np

from deodhar_lab.diagram_core import (
    Cell,
    InvalidDiagramError,
    JClass,
    ReadingOrder,
    Stone,
    sort_sign,
    subexpression_word,
)
from deodhar_lab.errors import ParameterError
from deodhar_lab.exact_algebra import (
    RATIONALS,
    SYMBOLIC,
    ExactMatrix,
    plucker_vector,
    s_dot,
    s_dot_inverse,
    x_generator,
    y_generator,
)

#
# global constants
#
LOG = logging.getLogger("deodhar_lab.networks")


class Family(enum.Enum):
    """Parameter families attached to the cells of a Go-diagram"""

    BETA = "beta"
    BETA_STAR = "beta_star"
    ALPHA = "alpha"
    TW = "tw"
    GAMMA = "gamma"


PREFIX = {Family.BETA: "b", Family.BETA_STAR: "bs", Family.ALPHA: "al", Family.GAMMA: "g"}


#
# parameter assignments
#
@dataclass(frozen=True)
class ParamAssignment:
    """Values of one parameter family, keyed by cell"""

    family: Family
    diagram: object
    values: dict
    ring: object
    reading: ReadingOrder

    def __post_init__(self):
        for cell in self.diagram.shape.cells():
            value = self.values.get(cell, self.ring.zero)
            stone = self.diagram.stone(cell)
            if stone is Stone.WHITE and value != 0:
                raise ParameterError(f"{self.family.value} parameter at white cell {cell} must be 0")
            if stone is Stone.PLUS and value == 0:
                raise ParameterError(f"{self.family.value} parameter at plus cell {cell} must be invertible")

    def __getitem__(self, cell):
        return self.values.get(cell, self.ring.zero)

    @staticmethod
    def name(family, diagram, cell, reading):
        """Variable name of a cell, for example b9 or c5"""
        label = reading.label(cell)
        if family is Family.TW:
            return ("a" if diagram.stone(cell) is Stone.PLUS else "c") + str(label)
        return PREFIX[family] + str(label)

    @classmethod
    def symbolic(cls, diagram, family, reading=None, ring=SYMBOLIC):
        """One symbol per Plus and Black cell, 0 at White cells"""
        reading = reading or ReadingOrder.row_major(diagram.shape)
        values = {
            cell: ring.symbol(cls.name(family, diagram, cell, reading))
            for cell in diagram.shape.cells()
            if diagram.stone(cell) is not Stone.WHITE
        }
        return cls(family, diagram, values, ring, reading)

    @classmethod
    def random(cls, diagram, family, domain, rng, reading=None):
        """Units at Plus cells, arbitrary elements at Black cells"""
        reading = reading or ReadingOrder.row_major(diagram.shape)
        values = {}
        for cell in diagram.shape.cells():
            stone = diagram.stone(cell)
            if stone is not Stone.WHITE:
                values[cell] = domain.random_element(rng, nonzero=stone is Stone.PLUS)
        return cls(family, diagram, values, domain, reading)

    @classmethod
    def from_values(cls, diagram, family, values, ring, reading=None):
        """Validate explicit values"""
        reading = reading or ReadingOrder.row_major(diagram.shape)
        return cls(family, diagram, {cell: ring.coerce(value) for cell, value in values.items()}, ring, reading)

    def symbol_values(self):
        """variable name -> value, for evaluating symbolic matrices of the same diagram"""
        return {
            self.name(self.family, self.diagram, cell, self.reading): self[cell]
            for cell in self.diagram.shape.cells()
            if self.diagram.stone(cell) is not Stone.WHITE
        }

    def negated(self, family):
        """Same values with opposite sign, relabelled to another family"""
        return ParamAssignment(family, self.diagram, {cell: -v for cell, v in self.values.items()}, self.ring, self.reading)


#
# restricted path walker
#
class JumpWeights:
    """wt: a jump at b contributes the parameter of b"""

    def __init__(self, params):
        self.params = params
        self.ring = params.ring

    def step(self, cell, entry, exit_side, jumped):  # pylint: disable=unused-argument
        """Weight of passing one cell"""
        return self.params[cell] if jumped else self.ring.one


class CornerWeights:
    """wt': alpha at lower-left corners, -1/alpha at upper-right corners"""

    def __init__(self, params, ring=None):
        self.params = params
        self.ring = ring or params.ring

    def step(self, cell, entry, exit_side, jumped):  # pylint: disable=unused-argument
        """Weight of passing one cell"""
        if entry == "L" and exit_side == "S":
            return self.params[cell]
        if entry == "T" and exit_side == "E":
            return -self.ring.one / self.params[cell]
        return self.ring.one


def _jump_target(diagram, step, dual):
    """Pipe a path on this route step may jump to, or None"""
    if diagram.stone(step.cell) is Stone.WHITE:
        return None
    info = diagram.trace.cells[step.cell]
    if not dual and step.exited == "W":
        return info.north_out
    if dual and step.exited == "N":
        return info.west_out
    return None


def _positions(trace):
    return {(label, step.cell): idx for label, route in trace.routes.items() for idx, step in enumerate(route)}


def _path_sums(diagram, weighting, dual=False):
    """n x n matrix of weighted path sums from every source pipe to every sink"""
    trace = diagram.trace
    ring = weighting.ring
    position = _positions(trace)
    memo = {}

    def walk(pipe, index):
        key = (pipe, index)
        if key in memo:
            return memo[key]
        result = {}
        if index < 0:
            result[pipe] = ring.one
        else:
            step = trace.routes[pipe][index]
            entry = "L" if step.exited == "W" else "T"
            options = [(pipe, index, step.entered, False)]
            target = _jump_target(diagram, step, dual)
            if target is not None:
                target_index = position[(target, step.cell)]
                options.append((target, target_index, trace.routes[target][target_index].entered, True))
            for next_pipe, next_index, exit_side, jumped in options:
                weight = weighting.step(step.cell, entry, exit_side, jumped)
                if weight == 0:
                    continue
                for sink, value in walk(next_pipe, next_index - 1).items():
                    result[sink] = result.get(sink, ring.zero) + weight * value
        memo[key] = result
        return result

    size = diagram.shape.n
    rows = []
    for source in range(1, size + 1):
        sums = walk(source, len(trace.routes[source]) - 1)
        rows.append([sums.get(sink, ring.zero) for sink in range(1, size + 1)])
    return ExactMatrix(rows, ring)


def _check_family(params, *families):
    if params.family not in families:
        raise ParameterError(f"expected {[f.value for f in families]} parameters, got {params.family.value}")


def restricted_weight_matrix(diagram, beta):
    """(R~_D, R_D): restricted path sums and the rows of the west boundary labels"""
    _check_family(beta, Family.BETA, Family.GAMMA)
    full = _path_sums(diagram, JumpWeights(beta))
    return full, full.select_rows(diagram.trace.west_labels)


def dual_weight_matrix(diagram, beta_star):
    """(R~*_D, R*_D): dual path sums and the rows of the north labels right to left"""
    _check_family(beta_star, Family.BETA_STAR)
    full = _path_sums(diagram, JumpWeights(beta_star), dual=True)
    return full, full.select_rows(tuple(reversed(diagram.trace.north_labels)))


def wtprime_weight_matrix(diagram, alpha):
    """(S~_D, S_D): corner weighted path sums"""
    _check_family(alpha, Family.ALPHA)
    full = _path_sums(diagram, CornerWeights(alpha))
    return full, full.select_rows(diagram.trace.west_labels)


def product_formula_matrix(diagram, params, reading=None, dual=False):
    """Product of X_sigma(b)(param_b) over all cells, higher labels to the left"""
    reading = reading or ReadingOrder.row_major(diagram.shape)
    result = ExactMatrix.identity(diagram.shape.n, params.ring)
    for cell in reading.cells_left_to_right():
        i, j = diagram.sigma_star(cell) if dual else diagram.sigma(cell)
        result = result.times_transvection(i, j, params[cell])
    return result


def dual_point(diagram, beta):
    """R*_D for beta*_b = -beta_b"""
    _, dual = dual_weight_matrix(diagram, beta.negated(Family.BETA_STAR))
    return dual


#
# explicit paths and path systems
#
@dataclass(frozen=True)
class Move:
    """A path passing one cell: entered from L or T, left through E or S"""

    cell: Cell
    entry: str
    exit: str
    jumped: bool


@dataclass(frozen=True)
class RestrictedPath:
    """Source to sink path with its moves, jump sites and weight"""

    source: int
    sink: int
    moves: tuple
    weight: object

    @property
    def nodes(self):
        """Occupied cell entries plus the sink"""
        return frozenset([(move.cell, move.entry) for move in self.moves] + [("sink", self.sink)])

    @property
    def jumps(self):
        """Cells where the path changes pipe"""
        return tuple(move.cell for move in self.moves if move.jumped)


def enumerate_paths(diagram, source, weighting, dual=False):
    """All restricted (or dual) paths starting on pipe source, with weights"""
    trace = diagram.trace
    ring = weighting.ring
    position = _positions(trace)

    def walk(pipe, index):
        if index < 0:
            yield pipe, (), ring.one
            return
        step = trace.routes[pipe][index]
        entry = "L" if step.exited == "W" else "T"
        options = [(pipe, index, step.entered, False)]
        target = _jump_target(diagram, step, dual)
        if target is not None:
            target_index = position[(target, step.cell)]
            options.append((target, target_index, trace.routes[target][target_index].entered, True))
        for next_pipe, next_index, exit_side, jumped in options:
            weight = weighting.step(step.cell, entry, exit_side, jumped)
            if weight == 0:
                continue
            move = Move(step.cell, entry, exit_side, jumped)
            for sink, moves, rest in walk(next_pipe, next_index - 1):
                yield sink, (move,) + moves, weight * rest

    return [
        RestrictedPath(source, sink, moves, weight)
        for sink, moves, weight in walk(source, len(trace.routes[source]) - 1)
    ]


@dataclass(frozen=True)
class PathSystem:
    """Vertex-disjoint paths, one per source in source order"""

    paths: tuple

    @property
    def sinks(self):
        """Sink of each path in source order"""
        return tuple(path.sink for path in self.paths)

    @property
    def sign(self):
        """Sign of the permutation sorting the sinks"""
        return sort_sign(self.sinks)

    @property
    def weight(self):
        """Product of the path weights"""
        result = self.paths[0].weight if self.paths else 1
        for path in self.paths[1:]:
            result = result * path.weight
        return result

    @property
    def jumps(self):
        """All jump sites"""
        return frozenset(cell for path in self.paths for cell in path.jumps)


def path_systems(paths_by_source, sinks):
    """Backtracking over per-source path lists for disjoint systems hitting sinks"""
    sinks = frozenset(sinks)
    if len(sinks) != len(paths_by_source):
        return []
    systems = []

    def extend(index, chosen, used_nodes, used_sinks):
        if index == len(paths_by_source):
            systems.append(PathSystem(tuple(chosen)))
            return
        for path in paths_by_source[index]:
            if path.sink not in sinks or path.sink in used_sinks:
                continue
            nodes = path.nodes
            if nodes & used_nodes:
                continue
            extend(index + 1, chosen + [path], used_nodes | nodes, used_sinks | {path.sink})

    extend(0, [], frozenset(), frozenset())
    return systems


#
# grid network parameters and the transform to jump parameters
#
def path_weight_after(diagram, alpha, pipe, cell, ring=None):
    """wt' of pipe followed backward from just after cell, without jumps"""
    weighting = CornerWeights(alpha, ring)
    route = diagram.trace.routes[pipe]
    index = _positions(diagram.trace)[(pipe, cell)]
    weight = weighting.ring.one
    for step in reversed(route[:index]):
        entry = "L" if step.exited == "W" else "T"
        weight = weight * weighting.step(step.cell, entry, step.entered, False)
    return weight


def _transfer_ratio(diagram, alpha, cell, ring=None):
    info = diagram.trace.cells[cell]
    return path_weight_after(diagram, alpha, info.north_out, cell, ring) / path_weight_after(
        diagram, alpha, info.west_out, cell, ring
    )


def params_alpha_to_beta(diagram, alpha):
    """beta_b = t_b * wt'(lower pipe after b) / wt'(upper pipe after b)"""
    _check_family(alpha, Family.ALPHA)
    values = {}
    for cell in diagram.shape.cells():
        stone = diagram.stone(cell)
        if stone is Stone.WHITE:
            continue
        ratio = _transfer_ratio(diagram, alpha, cell)
        if stone is Stone.PLUS:
            values[cell] = ratio / alpha[cell]
        else:
            values[cell] = alpha[cell] * ratio
    return ParamAssignment(Family.BETA, diagram, values, alpha.ring, alpha.reading)


def params_beta_to_alpha(diagram, beta):
    """Recursive inverse of params_alpha_to_beta, south-east cells first"""
    _check_family(beta, Family.BETA)
    values = {}
    order = ReadingOrder.row_major(diagram.shape).cells_by_label()
    for cell in order:
        stone = diagram.stone(cell)
        if stone is Stone.WHITE:
            continue
        ratio = _transfer_ratio(diagram, values, cell, beta.ring)
        if stone is Stone.PLUS:
            values[cell] = ratio / beta[cell]
        else:
            values[cell] = beta[cell] / ratio
    return ParamAssignment(Family.ALPHA, diagram, values, beta.ring, beta.reading)


#
# Talaska-Williams network
#
def chi(diagram, cell):
    """Nearest Plus cell strictly to the right in the same row, None for the boundary"""
    for col in range(cell.col + 1, diagram.shape.parts[cell.row]):
        if diagram.stone(Cell(cell.row, col)) is Stone.PLUS:
            return Cell(cell.row, col)
    return None


def sources_between(diagram, low, high):
    """Number of sources (row labels) strictly between two labels"""
    low, high = min(low, high), max(low, high)
    return sum(1 for label in diagram.shape.row_labels if low < label < high)


def rho(diagram, cell):
    """Sources strictly between the row label and the column label of a cell"""
    shape = diagram.shape
    return sources_between(diagram, shape.row_labels[cell.row], shape.col_labels[cell.col])


def tw_network(diagram, tw):
    """Weighted DiGraph M_D with ('src', s), ('cell', r, c) and ('snk', t) vertices"""
    _check_family(tw, Family.TW)
    shape = diagram.shape
    graph = nx.DiGraph()
    for row in range(shape.k):
        graph.add_node(("src", shape.row_labels[row]))
    for col in range(shape.width):
        graph.add_node(("snk", shape.col_labels[col]))
    for row in range(shape.k):
        current = ("src", shape.row_labels[row])
        for col in reversed(range(shape.parts[row])):
            cell = Cell(row, col)
            stone = diagram.stone(cell)
            if stone is Stone.WHITE:
                continue
            graph.add_edge(current, ("cell", row, col), weight=tw[cell])
            if stone is Stone.PLUS:
                current = ("cell", row, col)
    for cell in shape.cells():
        if diagram.stone(cell) is Stone.WHITE:
            continue
        below = next(
            (
                Cell(row, cell.col)
                for row in range(cell.row + 1, shape.k)
                if shape.has_cell(row, cell.col) and diagram.stone(Cell(row, cell.col)) is Stone.PLUS
            ),
            None,
        )
        target = ("cell", below.row, below.col) if below else ("snk", shape.col_labels[cell.col])
        graph.add_edge(("cell", cell.row, cell.col), target, weight=tw.ring.one)
    return graph


def tw_weight_matrix(diagram, tw):
    """W_D: signed path sums of M_D, rows by sources in increasing label"""
    shape = diagram.shape
    graph = tw_network(diagram, tw)
    ring = tw.ring
    order = list(nx.topological_sort(graph))
    rows = []
    for source in sorted(shape.row_labels):
        value = {("src", source): ring.one}
        for node in order:
            if node not in value:
                continue
            for succ in graph.successors(node):
                value[succ] = value.get(succ, ring.zero) + value[node] * graph.edges[node, succ]["weight"]
        row = [ring.zero] * shape.n
        row[source - 1] = ring.one
        for col_label in shape.col_labels:
            total = value.get(("snk", col_label), ring.zero)
            row[col_label - 1] = -total if sources_between(diagram, source, col_label) % 2 else total
        rows.append(row)
    return ExactMatrix(rows, ring)


def tw_path_weight(graph, vertices):
    """Product of edge weights along a vertex path"""
    weight = None
    for head, tail in zip(vertices, vertices[1:]):
        if not graph.has_edge(head, tail):
            raise InvalidDiagramError(f"{head} -> {tail} is not an edge of the network")
        edge = graph.edges[head, tail]["weight"]
        weight = edge if weight is None else weight * edge
    return weight


def _signed_ratio(diagram, cell):
    anchor = chi(diagram, cell)
    exponent = rho(diagram, cell) - (rho(diagram, anchor) if anchor else 0)
    return anchor, -1 if exponent % 2 else 1


def params_alpha_to_tw(diagram, alpha):
    """a_b, c_b = (-1)^(rho(b) - rho(chi(b))) alpha_b / alpha_chi(b)"""
    _check_family(alpha, Family.ALPHA)
    values = {}
    for cell in diagram.shape.cells():
        if diagram.stone(cell) is Stone.WHITE:
            continue
        anchor, sign = _signed_ratio(diagram, cell)
        denominator = alpha[anchor] if anchor else alpha.ring.one
        values[cell] = sign * alpha[cell] / denominator
    return ParamAssignment(Family.TW, diagram, values, alpha.ring, alpha.reading)


def params_tw_to_alpha(diagram, tw):
    """Inverse of params_alpha_to_tw, each row from right to left"""
    _check_family(tw, Family.TW)
    values = {}
    shape = diagram.shape
    for row in range(shape.k):
        for col in reversed(range(shape.parts[row])):
            cell = Cell(row, col)
            if diagram.stone(cell) is Stone.WHITE:
                continue
            anchor, sign = _signed_ratio(diagram, cell)
            factor = values[anchor] if anchor else tw.ring.one
            values[cell] = sign * tw[cell] * factor
    return ParamAssignment(Family.ALPHA, diagram, values, tw.ring, tw.reading)


#
# bijection between grid network systems and network paths
#
def lgv_sinks(diagram, h):
    """Sink set {v_2, ..., v_k, h} of the systems matched with paths v_1 -> h"""
    labels = diagram.shape.row_labels
    if not labels or h not in diagram.shape.col_labels or h <= labels[0]:
        raise ParameterError(f"h={h} must be a column label bigger than v_1")
    return tuple(labels[1:]) + (h,)


def lgv_systems(diagram, h, alpha):
    """All corner weighted systems from the west sources to {v_2..v_k, h}"""
    weighting = CornerWeights(alpha)
    paths = [enumerate_paths(diagram, source, weighting) for source in diagram.trace.west_labels]
    return path_systems(paths, lgv_sinks(diagram, h))


def lgv_tau_sign(diagram, h, system):
    """sign(tau) of a system, d_tau(1) = h and d_tau(i) = v_i with d_j the sink of the j-th path"""
    targets = (h,) + lgv_sinks(diagram, h)[:-1]
    return sort_sign([system.sinks.index(target) + 1 for target in targets])


def lgv_forward(diagram, h, system):
    """f(P): read the columns where the system moves down and build the M_D path"""
    shape = diagram.shape
    v1 = shape.row_labels[0]
    depth = sources_between(diagram, v1, h)
    columns = []
    for row in range(depth + 1):
        downs = {
            move.cell.col for path in system.paths for move in path.moves if move.cell.row == row and move.exit == "S"
        }
        if len(downs) != 1:
            raise InvalidDiagramError(f"system moves down {len(downs)} times out of row {row}")
        columns.append(downs.pop())

    def plus(row, col):
        return shape.has_cell(row, col) and diagram.stone(Cell(row, col)) is Stone.PLUS

    vertices = [("src", v1)]
    vertices += [("cell", 0, col) for col in range(shape.parts[0] - 1, columns[0], -1) if plus(0, col)]
    vertices.append(("cell", 0, columns[0]))
    for row in range(1, depth + 1):
        if plus(row, columns[row - 1]):
            vertices.append(("cell", row, columns[row - 1]))
        if columns[row] < columns[row - 1]:
            vertices += [("cell", row, col) for col in range(columns[row - 1] - 1, columns[row], -1) if plus(row, col)]
            vertices.append(("cell", row, columns[row]))
    vertices.append(("snk", h))
    return tuple(vertices)


def lgv_inverse(diagram, h, vertices, alpha, systems=None):
    """f^-1(Q): the unique system whose image is the network path Q"""
    systems = lgv_systems(diagram, h, alpha) if systems is None else systems
    matches = [system for system in systems if lgv_forward(diagram, h, system) == tuple(vertices)]
    if len(matches) != 1:
        raise InvalidDiagramError(f"{len(matches)} systems map to the given path")
    return matches[0]


def network_paths(diagram, tw, h):
    """All vertex paths v_1 -> h in M_D"""
    graph = tw_network(diagram, tw)
    source = ("src", diagram.shape.row_labels[0])
    if ("snk", h) not in graph:
        return []
    return [tuple(path) for path in nx.all_simple_paths(graph, source, ("snk", h))]


#
# generator matrices and other points of the Grassmannian
#
def marsh_rietsch_matrix(size, word, jclass, p_values, q_values, ring):
    """g_1 ... g_m: s_dot at increases, y(p) at unchanged and x(q) s_dot^-1 at decreases"""
    p_values, q_values = list(p_values), list(q_values)
    expected_p = sum(1 for cls in jclass if cls is JClass.SAME)
    expected_q = sum(1 for cls in jclass if cls is JClass.DECREASE)
    if len(p_values) != expected_p or len(q_values) != expected_q:
        raise ParameterError(f"need {expected_p} p and {expected_q} q parameters")
    result = ExactMatrix.identity(size, ring)
    p_iter, q_iter = iter(p_values), iter(q_values)
    for index, cls in zip(word, jclass):
        if cls is JClass.INCREASE:
            factor = s_dot(size, index, ring)
        elif cls is JClass.SAME:
            value = next(p_iter)
            if value == 0:
                raise ParameterError("p parameters must be nonzero")
            factor = y_generator(size, index, value, ring)
        else:
            factor = x_generator(size, index, next(q_iter), ring) * s_dot_inverse(size, index, ring)
        result = result * factor
    return result


def marsh_rietsch_point(diagram, p_values, q_values, ring, reading=None):
    """k x n representative: first k columns of g, transposed, columns reversed"""
    shape = diagram.shape
    sub = subexpression_word(diagram.filling, reading)
    full = marsh_rietsch_matrix(shape.n, sub.parent_word, sub.jclass, p_values, q_values, ring)
    return ExactMatrix([[full.rows[shape.n - j][i] for j in range(1, shape.n + 1)] for i in range(shape.k)], ring)


def schubert_rref(shape, ring=SYMBOLIC):
    """Reduced row echelon pattern of the Schubert cell, free entries as symbols"""
    pivots = shape.subset()
    rows = []
    for row, pivot in enumerate(pivots):
        entries = [ring.zero] * shape.n
        entries[pivot - 1] = ring.one
        for col in range(pivot + 1, shape.n + 1):
            if col not in pivots:
                entries[col - 1] = ring.symbol(f"z{row + 1}c{col}")
        rows.append(entries)
    return ExactMatrix(rows, ring)


def le_positivity_check(diagram, samples=10, seed=2024):
    """All maximal minors of W_D are >= 0 for random positive a on a Le-diagram"""
    if not diagram.is_le():
        raise InvalidDiagramError("positivity check needs a Le-diagram")
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        values = {cell: RATIONALS.random_positive(rng) for cell in diagram.cells_with(Stone.PLUS)}
        tw = ParamAssignment.from_values(diagram, Family.TW, values, RATIONALS)
        vector = plucker_vector(tw_weight_matrix(diagram, tw))
        negative = [subset for subset, value in vector.items() if value < 0]
        if negative:
            LOG.warning("negative minor %s for %s", negative[0], values)
            return False
    return True


def minors_proportional(left, right):
    """True if two Plücker vectors agree up to one nonzero scalar"""
    keys = sorted(left)
    pivot = next((key for key in keys if left[key] != 0), None)
    if pivot is None or right[pivot] == 0:
        return pivot is None and all(value == 0 for value in right.values())
    return all(left[key] * right[pivot] == right[key] * left[pivot] for key in keys)


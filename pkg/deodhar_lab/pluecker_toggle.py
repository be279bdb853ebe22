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
Plücker coordinates of R_D three ways: determinants, sums over
non-intersecting restricted path systems and sums over restricted
diagrams reached from D by toggling moves.
"""

import itertools
import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from deodhar_lab.diagram_core import Stone, Tile, precedes, sort_sign, trace
from deodhar_lab.errors import GuardExceededError, InvalidDiagramError, ParameterError
from deodhar_lab.exact_algebra import minor
from deodhar_lab.networks import (
    Family,
    JumpWeights,
    Move,
    ParamAssignment,
    PathSystem,
    RestrictedPath,
    enumerate_paths,
    path_systems,
    restricted_weight_matrix,
)

#
# global constants
#
LOG = logging.getLogger("deodhar_lab.pluecker_toggle")
MAX_TOGGLE_CELLS = 12
METHODS = ("minor", "lgv", "toggle")


def _sources(diagram, dual):
    tracing = diagram.trace
    return tuple(reversed(tracing.north_labels)) if dual else tracing.west_labels


def _default_params(diagram, dual):
    return ParamAssignment.symbolic(diagram, Family.BETA_STAR if dual else Family.BETA)


def nonintersecting_systems(diagram, subset, params=None, dual=False):
    """Vertex-disjoint (dual) restricted path systems from the boundary sources to subset"""
    params = params or _default_params(diagram, dual)
    weighting = JumpWeights(params)
    paths = [enumerate_paths(diagram, source, weighting, dual) for source in _sources(diagram, dual)]
    return path_systems(paths, subset)


def all_systems(diagram, params=None, dual=False):
    """Every non-intersecting system, over all sink sets"""
    size = len(_sources(diagram, dual))
    systems = []
    for subset in itertools.combinations(range(1, diagram.shape.n + 1), size):
        systems.extend(nonintersecting_systems(diagram, subset, params, dual))
    return systems


#
# restricted diagrams
#
@dataclass(frozen=True)
class RestrictedDiagram:
    """A (+, o) filling reached from D together with its toggled cells"""

    base: object
    toggled: frozenset

    @cached_property
    def filling(self):
        """Decoloured D with the toggled tiles flipped"""
        flip = {Tile.CROSSING: Tile.ELBOW, Tile.ELBOW: Tile.CROSSING}
        return self.base.filling.with_tiles({cell: flip[self.base.filling.tile(cell)] for cell in self.toggled})

    @cached_property
    def trace(self):
        """Pipe trace of the filling (configuration B allowed)"""
        return trace(self.filling)

    @property
    def boundary(self):
        """West boundary labels top to bottom"""
        return self.trace.west_labels

    @property
    def subset(self):
        """I_E"""
        return tuple(sorted(self.boundary))

    @property
    def sign(self):
        """sign(pi_E)"""
        return sort_sign(self.boundary)

    def weight(self, params):
        """Product of the parameters on the toggled cells"""
        result = params.ring.one
        for cell in self.toggled:
            result = result * params[cell]
        return result

    def toggle(self, cell):
        """E^p"""
        return RestrictedDiagram(self.base, self.toggled | {cell})

    def __str__(self):
        rows = []
        for r, row in enumerate(self.filling.tiles):
            rows.append(
                "".join(
                    ("x" if tile is Tile.CROSSING else "e").upper() if (r, c) in self.toggled else tile.value
                    for c, tile in enumerate(row)
                )
            )
        return "\n".join(rows)


def toggle_pipes(diagram_e, cell):
    """(b, c): the entering pipes ending on the west and on the north boundary, or None"""
    info = diagram_e.trace.cells[cell]
    west = set(diagram_e.trace.west_labels)
    north = set(diagram_e.trace.north_labels)
    for b, c in ((info.east_in, info.south_in), (info.south_in, info.east_in)):
        if b in west and c in north:
            return b, c
    return None


def togglable_cells(diagram_e):
    """Cells that may be toggled next, in row-major order"""
    base = diagram_e.base
    result = []
    for cell in base.shape.cells():
        if cell in diagram_e.toggled or base.stone(cell) is Stone.WHITE:
            continue
        pipes = toggle_pipes(diagram_e, cell)
        if pipes is None:
            continue
        b, c = pipes
        if c >= b:
            continue
        if any(precedes(other, cell) for other in diagram_e.toggled):
            continue
        result.append(cell)
    return result


@dataclass
class ToggleGraph:
    """D(D) as a networkx DiGraph keyed by toggled cell sets"""

    root: RestrictedDiagram
    graph: nx.DiGraph

    @property
    def diagrams(self):
        """All restricted diagrams, breadth-first order"""
        return [self.graph.nodes[key]["diagram"] for key in self.graph.nodes]

    def by_subset(self):
        """I_E -> restricted diagrams"""
        groups = {}
        for diagram_e in self.diagrams:
            groups.setdefault(diagram_e.subset, []).append(diagram_e)
        return groups

    def __len__(self):
        return self.graph.number_of_nodes()


def toggle_graph(diagram, max_cells=MAX_TOGGLE_CELLS):
    """Breadth-first closure of D under toggling moves"""
    if diagram.shape.size > max_cells:
        raise GuardExceededError(f"{diagram.shape.size} cells exceed the toggle guard of {max_cells}")
    root = RestrictedDiagram(diagram, frozenset())
    graph = nx.DiGraph()
    graph.add_node(root.toggled, diagram=root)
    queue = deque([root])
    while queue:
        current = queue.popleft()
        for cell in togglable_cells(current):
            child = current.toggle(cell)
            if child.toggled not in graph:
                graph.add_node(child.toggled, diagram=child)
                queue.append(child)
            graph.add_edge(current.toggled, child.toggled, cell=cell)
    LOG.debug("toggle graph of %s: %d vertices", diagram.shape, graph.number_of_nodes())
    return ToggleGraph(root, graph)


def _pipe_path(diagram_e, label, source, params, dual):
    moves = []
    weight = params.ring.one
    for step in reversed(diagram_e.trace.routes[label]):
        jumped = step.cell in diagram_e.toggled
        entry = "L" if step.exited == "W" else "T"
        moves.append(Move(step.cell, entry, step.entered, jumped))
        if jumped:
            weight = weight * params[step.cell]
    return RestrictedPath(source, label, tuple(moves), weight)


def boundary_paths(diagram_e, params=None, dual_params=None):
    """(f1(E), f2(E)): the west ending pipes as restricted paths, the north ending ones as dual paths"""
    base = diagram_e.base
    params = params or _default_params(base, False)
    dual_params = dual_params or _default_params(base, True)
    west = PathSystem(
        tuple(
            _pipe_path(diagram_e, label, source, params, False)
            for label, source in zip(diagram_e.trace.west_labels, base.trace.west_labels)
        )
    )
    north = PathSystem(
        tuple(
            _pipe_path(diagram_e, label, source, dual_params, True)
            for label, source in zip(reversed(diagram_e.trace.north_labels), _sources(base, True))
        )
    )
    return west, north


def diagram_from_system(diagram, system):
    """f1^-1: toggle the jump sites of a restricted system"""
    jumps = [cell for path in system.paths for cell in path.jumps]
    if len(jumps) != len(set(jumps)):
        raise InvalidDiagramError("two paths jump at the same cell")
    return RestrictedDiagram(diagram, frozenset(jumps))


#
# Plücker coordinates
#
def plucker_toggle_sum(diagram, params, subset, graph=None):
    """Sum of sign(pi_E) wt(E) over restricted diagrams with I_E = subset"""
    graph = graph or toggle_graph(diagram)
    subset = tuple(sorted(subset))
    total = params.ring.zero
    for diagram_e in graph.by_subset().get(subset, []):
        term = diagram_e.weight(params)
        total = total + (term if diagram_e.sign > 0 else -term)
    return total


def plucker_lgv_sum(diagram, params, subset):
    """Signed sum of weights of the non-intersecting systems ending in subset"""
    total = params.ring.zero
    for system in nonintersecting_systems(diagram, subset, params):
        total = total + (system.weight if system.sign > 0 else -system.weight)
    return total


def plucker_coordinate(diagram, params, subset, method="minor"):
    """Delta_I(R_D) by determinant, LGV or toggle sum"""
    subset = tuple(sorted(subset))
    if len(subset) != diagram.shape.k or not all(1 <= label <= diagram.shape.n for label in subset):
        raise ParameterError(f"{subset} is not a {diagram.shape.k}-subset of [{diagram.shape.n}]")
    if method == "minor":
        _, truncated = restricted_weight_matrix(diagram, params)
        return minor(truncated, subset)
    if method == "lgv":
        return plucker_lgv_sum(diagram, params, subset)
    if method == "toggle":
        return plucker_toggle_sum(diagram, params, subset)
    raise ParameterError(f"unknown method '{method}', use one of {METHODS}")


def nonzero_pluckers(diagram, params=None):
    """Subsets I whose toggle sum is not identically zero"""
    params = params or _default_params(diagram, False)
    graph = toggle_graph(diagram)
    return {
        subset
        for subset in graph.by_subset()
        if plucker_toggle_sum(diagram, params, subset, graph) != 0
    }

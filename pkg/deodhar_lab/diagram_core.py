# python
# pylint: disable=too-many-instance-attributes
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
Shape and filling combinatorics: partitions in the k x (n-k) box, reading
orders, pipe tracing, configurations A-D, Go- and Le-diagrams,
subexpressions of the Grassmannian permutation, jump coordinates and
crossing-uncrossing pairs.

Cells are (row, col) pairs, 0-based from the north-west corner. Pipes enter
at the south-east boundary (labels 1..n) and are traced to the north-west
boundary.
"""

import enum
import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from deodhar_lab.errors import (
    GuardExceededError,
    InvalidDiagramError,
    InvalidPartitionError,
    InvalidReadingError,
)

#
# global constants
#
LOG = logging.getLogger("deodhar_lab.diagram_core")
MAX_ENUMERATE_CELLS = 20


class Tile(enum.Enum):
    """Pipe dream tile"""

    CROSSING = "x"
    ELBOW = "e"


class Stone(enum.Enum):
    """Decoration of a Go-diagram cell"""

    PLUS = "+"
    WHITE = "o"
    BLACK = "*"


class Config(enum.Enum):
    """Local state of the two pipes entering a cell"""

    A = "A"  # elbow, not inverted
    B = "B"  # elbow, inverted (forbidden in Go-diagrams)
    C = "C"  # crossing, not inverted
    D = "D"  # crossing, inverted


class JClass(enum.Enum):
    """Effect of a word position on the length of the prefix product"""

    INCREASE = "o"
    SAME = "+"
    DECREASE = "*"


class DiagramKind(enum.Enum):
    """Result classes of classify() and filters of enumerate_diagrams()"""

    ALL = "all"
    NOT_GO = "notgo"
    GO = "go"
    LE = "le"


STONE_OF_CONFIG = {Config.A: Stone.PLUS, Config.C: Stone.WHITE, Config.D: Stone.BLACK}


class Cell(NamedTuple):
    """Box of a Young diagram"""

    row: int
    col: int

    def __str__(self):
        return f"{self.row},{self.col}"


def weakly_northwest(c, b):
    """True if cell c is weakly north-west of cell b"""
    return c.row <= b.row and c.col <= b.col


def precedes(b, c):
    """b precedes c: c is weakly north-west of b and c != b"""
    return b != c and weakly_northwest(c, b)


#
# partitions and permutations
#
@dataclass(frozen=True)
class Partition:
    """Partition inside the k x (n-k) box, parts padded with zeros to length k"""

    parts: tuple
    k: int
    n: int

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if self.k < 0 or self.n < self.k:
            raise InvalidPartitionError(f"need 0 <= k <= n, got k={self.k} n={self.n}")
        while len(parts) > self.k and parts[-1] == 0:
            parts = parts[:-1]
        if len(parts) > self.k:
            raise InvalidPartitionError(f"{parts} has more than k={self.k} parts")
        parts = parts + (0,) * (self.k - len(parts))
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidPartitionError(f"{parts} is not weakly decreasing")
        if parts and parts[0] > self.n - self.k:
            raise InvalidPartitionError(f"{parts} does not fit into width n-k={self.n - self.k}")
        object.__setattr__(self, "parts", parts)

    @property
    def width(self):
        """Box width n-k"""
        return self.n - self.k

    @property
    def size(self):
        """Number of cells"""
        return sum(self.parts)

    def has_cell(self, row, col):
        """True if (row, col) is a cell of the shape"""
        return 0 <= row < self.k and 0 <= col < self.parts[row]

    def cells(self):
        """All cells in row-major order"""
        return [Cell(r, c) for r in range(self.k) for c in range(self.parts[r])]

    def contains(self, other):
        """Containment of Young diagrams"""
        return all(a >= b for a, b in zip(self.parts, other.parts))

    @cached_property
    def _boundary(self):
        row_labels = [0] * self.k
        col_labels = [0] * self.width
        x, y = self.width, 0
        for label in range(1, self.n + 1):
            if y < self.k and self.parts[y] == x:
                row_labels[y] = label
                y += 1
            else:
                col_labels[x - 1] = label
                x -= 1
        return tuple(row_labels), tuple(col_labels)

    @property
    def row_labels(self):
        """Label of the south-east boundary edge at the east end of each row"""
        return self._boundary[0]

    @property
    def col_labels(self):
        """Label of the south-east boundary edge at the bottom of each column"""
        return self._boundary[1]

    def subset(self):
        """The k-subset I of vertical boundary labels"""
        return tuple(sorted(self.row_labels))

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def shape_from_subset(subset, k, n):
    """Partition whose vertical south-east boundary steps carry the labels in subset"""
    labels = set(subset)
    if len(labels) != k or len(subset) != k:
        raise InvalidPartitionError(f"subset {sorted(subset)} does not have {k} distinct elements")
    if any(label < 1 or label > n for label in labels):
        raise InvalidPartitionError(f"subset {sorted(subset)} not inside 1..{n}")
    parts = []
    x = n - k
    for label in range(1, n + 1):
        if label in labels:
            parts.append(x)
        else:
            x -= 1
    return Partition(tuple(parts), k, n)


def subset_from_shape(shape):
    """Inverse of shape_from_subset"""
    return shape.subset()


def all_partitions(k, n):
    """Every partition in the k x (n-k) box, ordered by subset"""
    return [shape_from_subset(subset, k, n) for subset in itertools.combinations(range(1, n + 1), k)]


@dataclass(frozen=True)
class Permutation:
    """Permutation in one-line notation"""

    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidDiagramError(f"{images} is not a permutation")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n):
        """Identity of S_n"""
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self):
        """Degree"""
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def __mul__(self, other):
        """Composition (self o other)"""
        return Permutation(tuple(self.images[i - 1] for i in other.images))

    def times_simple(self, i):
        """Right multiplication by s_i: swap positions i and i+1"""
        images = list(self.images)
        images[i - 1], images[i] = images[i], images[i - 1]
        return Permutation(tuple(images))

    def inverse(self):
        """Inverse permutation"""
        images = [0] * self.n
        for position, value in enumerate(self.images, start=1):
            images[value - 1] = position
        return Permutation(tuple(images))

    def length(self):
        """Number of inversions"""
        return sum(1 for a, b in itertools.combinations(self.images, 2) if a > b)

    def sign(self):
        """+1 or -1"""
        return -1 if self.length() % 2 else 1

    def descents(self):
        """Positions i with w(i) > w(i+1)"""
        return [i for i in range(1, self.n) if self.images[i - 1] > self.images[i]]

    def is_identity(self):
        """True for the identity"""
        return self.images == tuple(range(1, self.n + 1))

    def bruhat_le(self, other):
        """Bruhat order via the sorted prefix (tableau) criterion"""
        for i in range(1, self.n):
            mine = sorted(self.images[:i])
            theirs = sorted(other.images[:i])
            if any(a > b for a, b in zip(mine, theirs)):
                return False
        return True

    def __str__(self):
        if self.n < 10:
            return "".join(str(v) for v in self.images)
        return " ".join(str(v) for v in self.images)


def sort_sign(values):
    """Sign of the permutation sorting a sequence of distinct values"""
    inversions = sum(1 for a, b in itertools.combinations(values, 2) if a > b)
    return -1 if inversions % 2 else 1


#
# reading orders
#
@dataclass(frozen=True)
class ReadingOrder:
    """Labelling of the cells by 1..|shape|, decreasing along rows and down columns"""

    shape: Partition
    labels: dict

    def __post_init__(self):
        cells = set(self.shape.cells())
        if set(self.labels) != cells:
            raise InvalidReadingError("labels do not cover the shape exactly")
        if sorted(self.labels.values()) != list(range(1, len(cells) + 1)):
            raise InvalidReadingError("labels are not 1..|shape|")
        for (row, col), label in self.labels.items():
            right = Cell(row, col + 1)
            below = Cell(row + 1, col)
            if right in cells and self.labels[right] >= label:
                raise InvalidReadingError(f"labels do not decrease to the right of {row},{col}")
            if below in cells and self.labels[below] >= label:
                raise InvalidReadingError(f"labels do not decrease below {row},{col}")

    @classmethod
    def row_major(cls, shape):
        """Top row gets the biggest labels, decreasing left to right"""
        cells = shape.cells()
        return cls(shape, {cell: shape.size - pos for pos, cell in enumerate(cells)})

    @classmethod
    def col_major(cls, shape):
        """Leftmost column gets the biggest labels, top first"""
        cells = sorted(shape.cells(), key=lambda cell: (cell.col, cell.row))
        return cls(shape, {cell: shape.size - pos for pos, cell in enumerate(cells)})

    @classmethod
    def from_kind(cls, shape, kind):
        """'row' or 'col'"""
        if kind == "row":
            return cls.row_major(shape)
        if kind == "col":
            return cls.col_major(shape)
        raise InvalidReadingError(f"unknown reading order '{kind}'")

    def label(self, cell):
        """Label of a cell"""
        return self.labels[cell]

    def cells_by_label(self):
        """Cells sorted by increasing label"""
        return sorted(self.labels, key=self.labels.get)

    def cells_left_to_right(self):
        """Cells in word order, highest label first"""
        return sorted(self.labels, key=self.labels.get, reverse=True)


def reflection_index(shape, cell):
    """Index i of the simple reflection s_i attached to a cell"""
    return shape.width - cell.col + cell.row


@dataclass(frozen=True)
class GrassmannianData:
    """I_lambda, w_lambda and a reduced word of w_lambda"""

    subset: tuple
    permutation: Permutation
    word: tuple  # reflection index per word position 1..|shape|
    reflections: dict  # cell -> reflection index


def grassmannian_data(shape, reading=None):
    """Subset, Grassmannian permutation and reduced word read off the shape"""
    reading = reading or ReadingOrder.row_major(shape)
    subset = shape.subset()
    complement = [label for label in range(1, shape.n + 1) if label not in subset]
    permutation = Permutation(tuple(complement) + subset)
    reflections = {cell: reflection_index(shape, cell) for cell in shape.cells()}
    word = tuple(reflections[cell] for cell in reading.cells_by_label())
    return GrassmannianData(subset, permutation, word, reflections)


#
# fillings and tracing
#
@dataclass(frozen=True)
class Filling:
    """Pipe dream: one tile per cell of the shape"""

    shape: Partition
    tiles: tuple  # rows of Tile

    def __post_init__(self):
        tiles = tuple(tuple(row) for row in self.tiles)
        if len(tiles) < self.shape.k:
            tiles = tiles + ((),) * (self.shape.k - len(tiles))
        if tuple(len(row) for row in tiles) != self.shape.parts:
            raise InvalidDiagramError(f"tile rows do not match shape {self.shape}")
        object.__setattr__(self, "tiles", tiles)

    @classmethod
    def from_crossings(cls, shape, crossings):
        """Filling with crossings exactly at the given cells"""
        crossings = set(crossings)
        return cls(
            shape,
            tuple(
                tuple(Tile.CROSSING if Cell(r, c) in crossings else Tile.ELBOW for c in range(shape.parts[r]))
                for r in range(shape.k)
            ),
        )

    @classmethod
    def all_elbows(cls, shape):
        """Filling without crossings"""
        return cls.from_crossings(shape, ())

    @classmethod
    def all_crossings(cls, shape):
        """Filling with a crossing in every cell"""
        return cls.from_crossings(shape, shape.cells())

    def tile(self, cell):
        """Tile at a cell"""
        return self.tiles[cell.row][cell.col]

    def crossings(self):
        """Cells carrying a crossing"""
        return {cell for cell in self.shape.cells() if self.tile(cell) is Tile.CROSSING}

    def with_tiles(self, changes):
        """Copy with some tiles replaced"""
        rows = [list(row) for row in self.tiles]
        for cell, tile in changes.items():
            rows[cell.row][cell.col] = tile
        return Filling(self.shape, tuple(tuple(row) for row in rows))

    def rows_text(self):
        """One 'x'/'e' string per row"""
        return ["".join(tile.value for tile in row) for row in self.tiles]


@dataclass(frozen=True)
class CellTrace:
    """Labels of the pipes entering and leaving one cell"""

    east_in: int
    south_in: int
    west_out: int
    north_out: int
    config: Config

    @property
    def inverted(self):
        """The entering pipes are inverted"""
        return self.east_in > self.south_in

    @property
    def sigma(self):
        """Jump coordinate (west exit, north exit)"""
        return (self.west_out, self.north_out)


class RouteStep(NamedTuple):
    """One cell on a pipe route: entered from E or S, left through W or N"""

    cell: Cell
    entered: str
    exited: str


@dataclass(frozen=True)
class PipeTrace:
    """All pipe routes of a filling"""

    shape: Partition
    cells: dict  # cell -> CellTrace
    routes: dict  # pipe label -> tuple of RouteStep, south-east to north-west
    north_labels: tuple  # per column 0..n-k-1
    west_labels: tuple  # per row 0..k-1, top to bottom
    perm: Permutation

    def configs(self):
        """cell -> Config"""
        return {cell: info.config for cell, info in self.cells.items()}


def _trace(shape, tile_of):
    """Trace all pipes, choosing each tile from (cell, east_in, south_in)"""
    cells = {}
    tiles = {}
    steps = {label: [] for label in range(1, shape.n + 1)}
    row_labels, col_labels = shape.row_labels, shape.col_labels
    for row in reversed(range(shape.k)):
        for col in reversed(range(shape.parts[row])):
            cell = Cell(row, col)
            if col == shape.parts[row] - 1:
                east_in = row_labels[row]
            else:
                east_in = cells[Cell(row, col + 1)].west_out
            if shape.has_cell(row + 1, col):
                south_in = cells[Cell(row + 1, col)].north_out
            else:
                south_in = col_labels[col]
            tile = tile_of(cell, east_in, south_in)
            tiles[cell] = tile
            inverted = east_in > south_in
            if tile is Tile.CROSSING:
                west_out, north_out = east_in, south_in
                config = Config.D if inverted else Config.C
            else:
                west_out, north_out = south_in, east_in
                config = Config.B if inverted else Config.A
            cells[cell] = CellTrace(east_in, south_in, west_out, north_out, config)
            steps[east_in].append(RouteStep(cell, "E", "W" if west_out == east_in else "N"))
            steps[south_in].append(RouteStep(cell, "S", "W" if west_out == south_in else "N"))
    north_labels = tuple(
        cells[Cell(0, col)].north_out if shape.has_cell(0, col) else col_labels[col] for col in range(shape.width)
    )
    west_labels = tuple(
        cells[Cell(row, 0)].west_out if shape.parts[row] > 0 else row_labels[row] for row in range(shape.k)
    )
    perm = Permutation(tuple(reversed(north_labels)) + west_labels)
    trace_result = PipeTrace(
        shape, cells, {label: tuple(route) for label, route in steps.items()}, north_labels, west_labels, perm
    )
    return trace_result, tiles


def trace(filling):
    """Route every pipe of a filling to the north-west boundary"""
    result, _ = _trace(filling.shape, lambda cell, east_in, south_in: filling.tile(cell))
    return result


#
# Go-diagrams
#
@dataclass(frozen=True)
class GoDiagram:
    """A filling without configuration B, decorated with stones"""

    filling: Filling

    def __post_init__(self):
        bad = [cell for cell, config in self.trace.configs().items() if config is Config.B]
        if bad:
            raise InvalidDiagramError(f"configuration B at cell {min(bad)}: not a Go-diagram")

    @cached_property
    def trace(self):
        """Pipe trace of the underlying filling"""
        return trace(self.filling)

    @classmethod
    def from_filling(cls, filling):
        """Go-diagram of a filling, InvalidDiagramError if configuration B occurs"""
        return cls(filling)

    @classmethod
    def from_stones(cls, shape, rows):
        """Rebuild from stone rows ('+', 'o', '*') and validate by re-tracing"""
        try:
            stones = [[Stone(symbol) for symbol in row] for row in rows]
        except ValueError as error:
            raise InvalidDiagramError(f"unknown stone symbol: {error}") from error
        if len(stones) < shape.k:
            stones += [[] for _ in range(shape.k - len(stones))]
        if tuple(len(row) for row in stones) != shape.parts:
            raise InvalidDiagramError(f"stone rows do not match shape {shape}")
        crossings = [
            Cell(r, c) for r in range(shape.k) for c in range(shape.parts[r]) if stones[r][c] is not Stone.PLUS
        ]
        diagram = cls(Filling.from_crossings(shape, crossings))
        for cell in shape.cells():
            if diagram.stone(cell) is not stones[cell.row][cell.col]:
                raise InvalidDiagramError(
                    f"stone at {cell} should be {diagram.stone(cell).value}, got {stones[cell.row][cell.col].value}"
                )
        return diagram

    @property
    def shape(self):
        """Underlying partition"""
        return self.filling.shape

    @property
    def perm(self):
        """pi(D)"""
        return self.trace.perm

    def stone(self, cell):
        """Stone derived from the configuration of a cell"""
        return STONE_OF_CONFIG[self.trace.cells[cell].config]

    def cells_with(self, stone):
        """Row-major list of cells carrying a stone"""
        return [cell for cell in self.shape.cells() if self.stone(cell) is stone]

    def sigma(self, cell):
        """Jump coordinate sigma_D"""
        return self.trace.cells[cell].sigma

    def sigma_star(self, cell):
        """Dual jump coordinate, the reversed pair"""
        west, north = self.trace.cells[cell].sigma
        return (north, west)

    def is_le(self):
        """No black stones"""
        return not self.cells_with(Stone.BLACK)

    def stone_rows(self):
        """Rows of stone symbols"""
        return ["".join(self.stone(Cell(r, c)).value for c in range(self.shape.parts[r])) for r in range(self.shape.k)]

    def with_tiles(self, changes):
        """Go-diagram with some tiles replaced (re-traced)"""
        return GoDiagram(self.filling.with_tiles(changes))

    def __str__(self):
        return "\n".join(self.stone_rows())


@dataclass(frozen=True)
class Classification:
    """Outcome of classify()"""

    kind: DiagramKind
    witness: Cell = None
    diagram: GoDiagram = None


def classify(filling):
    """NOT_GO with the first configuration-B cell, GO, or LE"""
    configs = trace(filling).configs()
    bad = sorted(cell for cell, config in configs.items() if config is Config.B)
    if bad:
        return Classification(DiagramKind.NOT_GO, witness=bad[0])
    diagram = GoDiagram(filling)
    kind = DiagramKind.LE if diagram.is_le() else DiagramKind.GO
    return Classification(kind, diagram=diagram)


def component_dimension(diagram):
    """(#Plus, #Black): the component is (F*)^plus x F^black"""
    return len(diagram.cells_with(Stone.PLUS)), len(diagram.cells_with(Stone.BLACK))


#
# subexpressions
#
@dataclass(frozen=True)
class Subexpression:
    """Subexpression of a reduced word of w_lambda"""

    parent_word: tuple
    entries: tuple  # reflection index or None per word position
    jclass: tuple  # JClass per word position
    prefixes: tuple  # v_(0), ..., v_(m)
    is_distinguished: bool
    is_positive_distinguished: bool

    @property
    def value(self):
        """v = v_(m)"""
        return self.prefixes[-1]


def subexpression_word(filling, reading=None):
    """Subexpression of the reading word defined by the crossings of a filling"""
    shape = filling.shape
    reading = reading or ReadingOrder.row_major(shape)
    if reading.shape != shape:
        raise InvalidReadingError("reading order belongs to another shape")
    data = grassmannian_data(shape, reading)
    current = Permutation.identity(shape.n)
    prefixes = [current]
    entries, classes = [], []
    distinguished = True
    for cell, index in zip(reading.cells_by_label(), data.word):
        candidate = current.times_simple(index)
        lowers = candidate.length() < current.length()
        if filling.tile(cell) is Tile.CROSSING:
            entries.append(index)
            classes.append(JClass.DECREASE if lowers else JClass.INCREASE)
            current = candidate
        else:
            entries.append(None)
            classes.append(JClass.SAME)
            if lowers:
                distinguished = False
        prefixes.append(current)
    positive = distinguished and JClass.DECREASE not in classes
    return Subexpression(data.word, tuple(entries), tuple(classes), tuple(prefixes), distinguished, positive)


#
# jump coordinates and crossing pairs
#
def jump_coords(diagram):
    """cell -> (sigma_D, sigma*_D)"""
    return {cell: (diagram.sigma(cell), diagram.sigma_star(cell)) for cell in diagram.shape.cells()}


@dataclass(frozen=True)
class CrossingPair:
    """Pipes i < j cross at c (white) and next uncross at c_prime (black)"""

    c: Cell
    c_prime: Cell
    i: int
    j: int

    @property
    def adjacent(self):
        """The two pipes carry consecutive labels"""
        return self.j == self.i + 1


def crossing_pairs(diagram):
    """All crossing-uncrossing pairs of a Go-diagram"""
    meetings = {}
    for cell, info in diagram.trace.cells.items():
        if diagram.filling.tile(cell) is Tile.CROSSING:
            pair = (min(info.east_in, info.south_in), max(info.east_in, info.south_in))
            meetings.setdefault(pair, []).append(cell)
    pairs = []
    for (i, j), cells in meetings.items():
        route_order = [step.cell for step in diagram.trace.routes[i] if step.cell in cells]
        for first, second in zip(route_order, route_order[1:]):
            if diagram.stone(first) is Stone.WHITE and diagram.stone(second) is Stone.BLACK:
                pairs.append(CrossingPair(first, second, i, j))
    return sorted(pairs, key=lambda pair: (pair.c, pair.c_prime))


#
# enumeration
#
def enumerate_fillings(shape, max_cells=MAX_ENUMERATE_CELLS):
    """All 2^|shape| fillings in a deterministic order"""
    if shape.size > max_cells:
        raise GuardExceededError(f"{shape.size} cells exceed the enumeration guard of {max_cells}")
    cells = shape.cells()
    for choice in itertools.product((False, True), repeat=len(cells)):
        yield Filling.from_crossings(shape, [cell for cell, crossed in zip(cells, choice) if crossed])


def enumerate_diagrams(shape, kind=DiagramKind.GO, max_cells=MAX_ENUMERATE_CELLS):
    """Fillings (ALL) or Go-diagrams (GO, LE) of a shape"""
    for filling in enumerate_fillings(shape, max_cells):
        if kind is DiagramKind.ALL:
            yield filling
            continue
        result = classify(filling)
        if result.kind is DiagramKind.LE or (kind is DiagramKind.GO and result.kind is DiagramKind.GO):
            yield result.diagram


def all_go_diagrams(k, n, max_cells=MAX_ENUMERATE_CELLS):
    """Go-diagrams of every shape in the k x (n-k) box"""
    for shape in all_partitions(k, n):
        yield from enumerate_diagrams(shape, DiagramKind.GO, max_cells)

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
Tests of the D'-distortion, the closure verification, padding and the point counts

test/golden/distortion.json holds the 5 x 4 Go-diagram D' of Gr(5,9) with its
crossing pair c = (4,3), c' = (1,1) on the pipes 5 and 6.
"""

import json
import os
import sys

import pytest

# import test object
sys.path.append(os.path.abspath("./"))
from deodhar_lab import closure as CL  # pylint: disable=wrong-import-position
from deodhar_lab import diagram_core as DC  # pylint: disable=wrong-import-position
from deodhar_lab import diagram_io as DIO  # pylint: disable=wrong-import-position
from deodhar_lab import exact_algebra as EA  # pylint: disable=wrong-import-position
from deodhar_lab.errors import (  # pylint: disable=wrong-import-position
    ClosureHypothesisError,
    GuardExceededError,
    InvalidDiagramError,
)

#
# global constants
#
DISTORTION_FILE = "test/golden/distortion.json"
RUNNING_FILE = "test/golden/running.json"
C = DC.Cell(4, 3)
C_PRIME = DC.Cell(1, 1)

g = {label: EA.symbol(f"g{label}") for label in range(1, 21)}
b = {label: EA.symbol(f"b{label}") for label in range(1, 21)}
q = EA.symbol("q")


def golden():
    """Parsed distortion example"""
    with open(DISTORTION_FILE, encoding="utf-8") as handle:
        return json.load(handle)


def example_d_prime():
    """D' of the distortion example"""
    return DIO.load_diagram(DISTORTION_FILE)


def factors(table, cell):
    """(pair, entry) per factor of a cell"""
    return [(factor.pair, factor.entry) for factor in table.slots[cell]]


def test_example_jump_coordinates():
    """sigma_D' and sigma_D of the promoted diagram"""
    data = golden()
    d_prime = example_d_prime()
    instance = CL.closure_instance(d_prime, C, C_PRIME)
    for row in range(5):
        for col in range(4):
            cell = DC.Cell(row, col)
            assert list(d_prime.sigma(cell)) == data["sigma_d_prime"][row][col]
            assert list(instance.diagram.sigma(cell)) == data["sigma_d"][row][col]
    assert instance.i == data["i"]
    assert instance.gamma_c == "g1"
    assert instance.reading.label(C_PRIME) == 15
    assert d_prime.perm.is_identity()


def test_promotion_keeps_other_stones():
    """Only c and c' change, both become Plus"""
    d_prime = example_d_prime()
    diagram = CL.promote(d_prime, C, C_PRIME)
    assert diagram.stone(C) is DC.Stone.PLUS
    assert diagram.stone(C_PRIME) is DC.Stone.PLUS
    changed = [cell for cell in d_prime.shape.cells() if diagram.stone(cell) is not d_prime.stone(cell)]
    assert changed == sorted([C, C_PRIME])


def test_promotion_needs_a_crossing_pair():
    """Cells that are not a white/black pair of one pipe pair are refused"""
    d_prime = example_d_prime()
    with pytest.raises(ClosureHypothesisError):
        CL.promote(d_prime, DC.Cell(0, 0), DC.Cell(1, 0))


def test_initial_conjugated_table():
    """Conjugation by W_(6,5)(g1) between c and c'"""
    instance = CL.closure_instance(example_d_prime(), C, C_PRIME)
    table = CL.initial_table(instance)
    assert factors(table, DC.Cell(1, 2)) == [((6, 3), -g[14] * g[1])]
    assert factors(table, DC.Cell(1, 3)) == [((6, 2), -g[13] * g[1])]
    assert factors(table, DC.Cell(3, 1)) == [((7, 5), g[7] * g[1])]
    assert factors(table, DC.Cell(3, 2)) == [((5, 4), g[6] / g[1])]
    assert factors(table, DC.Cell(4, 2)) == [((7, 5), g[2] * g[1])]
    assert factors(table, C_PRIME) == [((6, 5), g[15] + g[1]), ((5, 6), -1 / g[1]), ((6, 5), g[1])]
    assert factors(table, C) == [((6, 5), -g[1]), ((5, 6), 1 / g[1])]
    assert table.slots[C][0].excited
    assert table.slots[C][0].cooling == C_PRIME
    assert factors(table, DC.Cell(0, 0)) == [((5, 4), g[20])]


def test_final_distortion():
    """Every excited factor has cooled down, the product is unchanged"""
    engine = CL.distort(example_d_prime(), C, C_PRIME)
    table = engine.table
    assert table.leftmost_excited() is None
    assert factors(table, DC.Cell(0, 0)) == [((5, 4), g[20] - g[6] / g[1])]
    assert factors(table, DC.Cell(1, 0)) == [((6, 4), g[16] - g[6] * g[15] / g[1])]
    assert factors(table, C_PRIME) == [((6, 5), g[15] + g[1]), ((5, 6), -1 / g[1])]
    assert factors(table, DC.Cell(1, 2)) == [((6, 3), -g[14] * g[1] - g[6] * g[10])]
    assert factors(table, DC.Cell(1, 3)) == [((6, 2), -g[13] * g[1])]
    assert factors(table, DC.Cell(3, 1)) == [((7, 5), g[7] * g[1])]
    assert factors(table, DC.Cell(3, 2)) == [((5, 4), g[6] / g[1])]
    assert factors(table, DC.Cell(4, 2)) == [((7, 5), g[2] * g[1])]
    assert factors(table, C) == [((5, 6), 1 / g[1])]
    assert factors(table, DC.Cell(0, 1)) == [((5, 3), g[19])]
    assert factors(table, DC.Cell(4, 0)) == [((9, 8), g[4])]
    assert engine.moves > 0


def test_solved_parameters():
    """g_b in terms of the parameters b of D' and g1"""
    solved = CL.solve_gamma(CL.distort(example_d_prime(), C, C_PRIME, check=False))
    assert solved[C] == g[1]
    assert solved[C_PRIME] == b[15] - g[1]
    assert solved[DC.Cell(3, 2)] == b[6] * g[1]
    assert solved[DC.Cell(0, 0)] == b[20] + b[6]
    assert solved[DC.Cell(1, 0)] == b[16] + b[6] * b[15] - b[6] * g[1]
    assert solved[DC.Cell(1, 2)] == -b[14] / g[1] - b[6] * b[10]
    assert solved[DC.Cell(1, 3)] == -b[13] / g[1]
    assert solved[DC.Cell(3, 1)] == b[7] / g[1]
    assert solved[DC.Cell(4, 2)] == b[2] / g[1]
    assert solved[DC.Cell(2, 1)] == 0


def test_solved_parameters_of_running_example():
    """Entries like g1*g2 are linear in g2 and get solved"""
    d_prime = DIO.load_diagram(RUNNING_FILE)
    engine = CL.distort(d_prime, DC.Cell(2, 2), DC.Cell(1, 1), check=False)
    assert str(engine.table.slots[DC.Cell(2, 1)][0].entry) == str(g[1] * g[2])
    solved = CL.solve_gamma(engine)
    assert solved[DC.Cell(2, 2)] == g[1]
    assert solved[DC.Cell(2, 1)] == b[2] / g[1]


def test_cooling_sites_of_example():
    """Excited X(6,4) cools at the g16 cell, X(6,3) at the g14 cell"""
    d_prime = example_d_prime()
    assert CL.cooling_site(d_prime, DC.Cell(3, 2), (6, 4)) == (DC.Cell(3, 3), DC.Cell(1, 0))
    assert CL.cooling_site(d_prime, DC.Cell(2, 2), (6, 3)) == (DC.Cell(2, 3), DC.Cell(1, 2))
    assert CL.cooling_site(d_prime, C_PRIME, (5, 4)) == (DC.Cell(2, 1), DC.Cell(0, 0))
    with pytest.raises(ClosureHypothesisError):
        CL.cooling_site(d_prime, DC.Cell(0, 0), (6, 4))


def snapshot_cell(snapshot, cell):
    """(pair, entry text, excited) of one cell of a recorded table"""
    return [(tuple(pair), entry, excited) for pair, entry, excited in snapshot[str(cell)]]


def test_intermediate_distortion_tables():
    """Tables after each excited factor reached its cooling site"""
    engine = CL.distort(example_d_prime(), C, C_PRIME, record=True)
    history = engine.history
    assert len(history) == 6
    assert engine.created == 4
    assert engine.created <= CL.distortion_bound(13)
    c_prime_plain = [((6, 5), str(g[15] + g[1]), False), ((5, 6), str(-1 / g[1]), False)]

    # X(6,5)(-g1) cancelled at c', X(6,4)(g6) excited at the g6 cell
    first = history[1]
    assert snapshot_cell(first, C) == [((5, 6), str(1 / g[1]), False)]
    assert snapshot_cell(first, C_PRIME) == c_prime_plain
    assert snapshot_cell(first, DC.Cell(3, 2)) == [((5, 4), str(g[6] / g[1]), False), ((6, 4), str(g[6]), True)]

    second = history[2]
    assert snapshot_cell(second, DC.Cell(1, 0)) == [((6, 4), str(g[16] + g[6]), False)]
    assert snapshot_cell(second, DC.Cell(2, 2)) == [((4, 3), str(g[10]), False), ((6, 3), str(-g[6] * g[10]), True)]
    assert snapshot_cell(second, C_PRIME) == c_prime_plain + [((5, 4), str(-g[6] / g[1]), True)]
    assert snapshot_cell(second, DC.Cell(3, 2)) == [((5, 4), str(g[6] / g[1]), False)]

    third = history[3]
    assert snapshot_cell(third, DC.Cell(0, 0)) == [((5, 4), str(g[20] - g[6] / g[1]), False)]
    assert snapshot_cell(third, C_PRIME) == [
        c_prime_plain[0],
        ((6, 4), str((g[15] + g[1]) * (-g[6] / g[1])), True),
        c_prime_plain[1],
    ]

    fourth = history[4]
    assert snapshot_cell(fourth, DC.Cell(1, 0)) == [((6, 4), str(g[16] - g[6] * g[15] / g[1]), False)]
    assert snapshot_cell(fourth, C_PRIME) == c_prime_plain

    last = history[5]
    assert snapshot_cell(last, DC.Cell(1, 2)) == [((6, 3), str(-g[14] * g[1] - g[6] * g[10]), False)]
    assert snapshot_cell(last, DC.Cell(2, 2)) == [((4, 3), str(g[10]), False)]
    assert last == engine.table.snapshot()


def test_gamma_equations_of_example():
    """One equation per non-white cell of D except c"""
    engine = CL.distort(example_d_prime(), C, C_PRIME, check=False)
    equations = dict(CL.gamma_equations(engine))
    assert len(equations) == 16
    assert C not in equations
    assert DC.Cell(2, 1) not in equations
    assert equations[C_PRIME] == f"{g[15] + g[1]} = b15"
    assert equations[DC.Cell(0, 0)] == f"{g[20] - g[6] / g[1]} = b20"
    assert equations[DC.Cell(1, 2)] == f"{-g[14] * g[1] - g[6] * g[10]} = b14"
    assert equations[DC.Cell(3, 2)] == f"{g[6] / g[1]} = b6"
    assert equations[DC.Cell(4, 2)] == f"{g[2] * g[1]} = b2"
    assert equations[DC.Cell(4, 0)] == f"{g[4]} = b4"


def test_closure_of_example():
    """R_D tends to R_D' when g1 grows"""
    d_prime = example_d_prime()
    report = CL.verify_closure_identity_case(d_prime, C, C_PRIME, record=True)
    assert report.ok, report.witness
    assert report.limit.nrows == 5
    assert len(report.engine.history) > 1


def test_numeric_limit_shrinks():
    """Distance to R_D' decreases as g1 = 10^m grows"""
    distances = CL.numeric_limit(example_d_prime(), C, C_PRIME, m_max=6)
    assert len(distances) == 6
    assert distances[-1] * 100 < distances[0]


def test_closure_of_running_example():
    """The 3 x 3 running example lies in the closure of the all-elbow component"""
    d_prime = DIO.load_diagram(RUNNING_FILE)
    report = CL.verify_closure_identity_case(d_prime, DC.Cell(2, 2), DC.Cell(1, 1))
    assert report.ok, report.witness
    assert report.engine.created == 0
    promoted = report.instance.diagram
    assert all(promoted.stone(cell) is DC.Stone.PLUS for cell in promoted.shape.cells())


def closure_shapes():
    """Every shape of Gr(2,4), Gr(2,5) and Gr(3,6), at most 9 cells"""
    return [shape for k, n in ((2, 4), (2, 5), (3, 6)) for shape in DC.all_partitions(k, n)]


@pytest.mark.parametrize("shape", closure_shapes(), ids=str)
def test_identity_case_on_all_small_shapes(shape):
    """Every adjacent pair of an identity Go-diagram passes the closure check"""
    for d_prime, c, c_prime in CL.identity_instances(shape):
        report = CL.verify_closure_identity_case(d_prime, c, c_prime)
        assert report.ok, f"{d_prime.stone_rows()} {c} {c_prime}: {report.witness}"
        between = report.instance.reading.label(c_prime) - report.instance.reading.label(c) - 1
        assert report.engine.created <= CL.distortion_bound(between)


def test_identity_instances_exist():
    """The 3 x 3 box holds identity Go-diagrams with adjacent pairs"""
    assert list(CL.identity_instances(DC.Partition((3, 3, 3), 3, 6)))


def test_closure_general_on_identity_diagram():
    """No padding is needed for an identity permutation"""
    d_prime = DIO.load_diagram(RUNNING_FILE)
    report = CL.verify_closure_general(d_prime, DC.Cell(2, 2), DC.Cell(1, 1))
    assert report.ok
    assert report.steps == ()


def test_closure_needs_identity_permutation():
    """The identity case refuses other permutations"""
    shape = DC.Partition((1,), 1, 2)
    diagram = DC.GoDiagram(DC.Filling.all_crossings(shape))
    with pytest.raises(ClosureHypothesisError):
        CL.closure_instance(diagram, DC.Cell(0, 0), DC.Cell(0, 0))


def test_distortion_bound():
    """a_1 = 0, a_2 = 2, a_3 = 5, a_4 = 11"""
    assert [CL.distortion_bound(k) for k in range(1, 5)] == [0, 2, 5, 11]


def test_pad_and_unpad():
    """A single crossing is padded on top and left to reach the identity"""
    shape = DC.Partition((1,), 1, 2)
    diagram = DC.GoDiagram(DC.Filling.all_crossings(shape))
    assert diagram.perm == DC.Permutation((2, 1))
    padded, steps = CL.pad(diagram)
    assert steps == ("both",)
    assert padded.shape == DC.Partition((2, 2), 2, 4)
    assert padded.perm.is_identity()
    assert padded.stone_rows() == ["*+", "+o"]
    assert CL.unpad(padded, steps) == diagram
    assert CL.pad_with(diagram, steps) == padded
    assert CL.pad(padded) == (padded, ())


def test_truncate_errors():
    """Only full top rows and complete left columns can be removed"""
    diagram = DC.GoDiagram(DC.Filling.all_elbows(DC.Partition((1,), 1, 3)))
    with pytest.raises(InvalidDiagramError):
        CL.truncate(diagram, "top-row")
    with pytest.raises(InvalidDiagramError):
        CL.truncate(diagram, "diagonal")
    assert CL.truncate(diagram, "left-column").shape == DC.Partition((0,), 1, 2)


def test_closure_general_on_small_boxes():
    """Every adjacent pair of every Go-diagram up to the 3 x 3 box, padding where needed"""
    padded = 0
    for shape in closure_shapes():
        for d_prime, c, c_prime in CL.general_instances(shape):
            report = CL.verify_closure_general(d_prime, c, c_prime, check=False)
            assert report.ok, f"{d_prime.stone_rows()} {c} {c_prime}: {report.witness}"
            if not d_prime.perm.is_identity():
                assert report.steps
                assert report.instance.d_prime.perm.is_identity()
                assert CL.unpad(report.instance.d_prime, report.steps) == d_prime
                padded += 1
    assert padded > 0


def test_padding_round_trip_on_3x3_box():
    """Padding reaches the identity, depends only on the shape and pi, and truncation undoes it"""
    seen = {}
    for shape in DC.all_partitions(3, 6):
        for diagram in DC.enumerate_diagrams(shape, DC.DiagramKind.GO):
            padded, steps = CL.pad(diagram)
            assert padded.perm.is_identity()
            assert CL.unpad(padded, steps) == diagram
            assert CL.pad_with(diagram, steps) == padded
            known = seen.setdefault((shape, diagram.perm), (steps, padded.shape))
            assert known == (steps, padded.shape)
    assert any(steps for steps, _ in seen.values())


def test_truncate_padded_single_crossing():
    """Left column first, then the top row"""
    shape = DC.Partition((1,), 1, 2)
    diagram = DC.GoDiagram(DC.Filling.all_crossings(shape))
    padded, _ = CL.pad(diagram)
    without_column = CL.truncate(padded, "left-column")
    assert without_column.shape == DC.Partition((1, 1), 2, 3)
    assert CL.truncate(without_column, "top-row") == diagram


@pytest.mark.parametrize("n", range(1, 7))
def test_fq_census(n):
    """Deodhar components count the F_q points of Gr(k,n)"""
    for k in range(0, n + 1):
        report = CL.fq_cell_census(n, k)
        assert report.ok, str(report)


def test_fq_census_text_and_guard():
    """Gr(2,4) has [4 choose 2]_q points, big n is refused"""
    report = CL.fq_cell_census(4, 2)
    assert report.total == q**4 + q**3 + 2 * q**2 + q + 1
    assert str(report).endswith("  OK")
    with pytest.raises(GuardExceededError):
        CL.fq_cell_census(9, 3)


def test_r_polynomials():
    """R-polynomials of S_3"""
    identity = DC.Permutation.identity(3)
    longest = DC.Permutation((3, 2, 1))
    assert CL.r_polynomial(longest, longest) == 1
    assert CL.r_polynomial(identity, DC.Permutation((2, 1, 3))) == q - 1
    assert CL.r_polynomial(identity, DC.Permutation((2, 3, 1))) == (q - 1) ** 2
    assert CL.r_polynomial(identity, longest) == (q - 1) ** 3 + q * (q - 1)
    assert CL.r_polynomial(DC.Permutation((1, 3, 2)), DC.Permutation((2, 1, 3))) == 0


def test_richardson_census_single_cell():
    """Shape (1): the crossing has value s_1, the elbow the identity"""
    census = CL.richardson_census(DC.Partition((1,), 1, 2))
    assert census[DC.Permutation((2, 1))] == (1, 1)
    assert census[DC.Permutation((1, 2))] == (q - 1, q - 1)


@pytest.mark.parametrize("kind", ["row", "col"])
def test_richardson_census_matches_r_polynomials(kind):
    """Weights of the Go-diagrams with value v add up to R_{v,w_lambda}"""
    for parts, k, n in (((2, 2), 2, 4), ((3, 2, 1), 3, 6)):
        shape = DC.Partition(parts, k, n)
        census = CL.richardson_census(shape, DC.ReadingOrder.from_kind(shape, kind))
        for total, expected in census.values():
            assert total == expected


def test_conjecture_scan():
    """Adjacent pairs never lose Plücker coordinates, the scan is reproducible"""
    shape = DC.Partition((3, 2, 1), 3, 6)
    entries = CL.conjecture_scan(shape, "conj1", include_adjacent=True)
    again = CL.conjecture_scan(shape, "conj1", include_adjacent=True)
    assert [(e.c, e.c_prime, e.pipes, e.missing) for e in entries] == [
        (e.c, e.c_prime, e.pipes, e.missing) for e in again
    ]
    adjacent = [entry for entry in entries if entry.hypothesis == "adjacent"]
    assert adjacent
    assert all(entry.consistent for entry in adjacent)
    assert all(entry.hypothesis in ("adjacent", "conj1") for entry in entries)
    with pytest.raises(ClosureHypothesisError):
        CL.conjecture_scan(shape, "conj3")
    with pytest.raises(GuardExceededError):
        CL.conjecture_scan(DC.Partition((3, 3, 3), 3, 6), max_cells=4)

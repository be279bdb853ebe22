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
Render fillings as ASCII grids, canonical JSON or SVG pictures.
"""

import io
import logging

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # pylint: disable=wrong-import-position
from matplotlib.patches import Arc  # pylint: disable=wrong-import-position

from deodhar_lab.diagram_core import Cell, GoDiagram, Tile, classify, trace  # pylint: disable=wrong-import-position
from deodhar_lab.diagram_io import dump_json  # pylint: disable=wrong-import-position
from deodhar_lab.errors import ParameterError  # pylint: disable=wrong-import-position

#
# global constants
#
LOG = logging.getLogger("deodhar_lab.render")
FORMATS = ("ascii", "json", "svg")
CELL_WIDTH = 4
LOW_PIPE_COLOUR = "tab:blue"
HIGH_PIPE_COLOUR = "tab:orange"
SVG_SALT = "deodharLab"


def _as_filling(diagram):
    return diagram.filling if isinstance(diagram, GoDiagram) else diagram


def render_ascii(diagram):
    """Tile/stone grid with north-west exit labels and south-east entry labels"""
    filling = _as_filling(diagram)
    shape = filling.shape
    tracing = trace(filling)
    go = classify(filling).diagram
    lines = [" " * CELL_WIDTH + "".join(f"{label:^{CELL_WIDTH}}" for label in tracing.north_labels)]
    for row in range(shape.k):
        cells = ""
        for col in range(shape.parts[row]):
            glyph = filling.tile(Cell(row, col)).value
            if go is not None:
                glyph += go.stone(Cell(row, col)).value
            cells += f"{glyph:^{CELL_WIDTH}}"
        lines.append(f"{tracing.west_labels[row]:>{CELL_WIDTH - 1}} " + cells + f" {shape.row_labels[row]}")
    lines.append(" " * CELL_WIDTH + "".join(f"{label:^{CELL_WIDTH}}" for label in shape.col_labels))
    return "\n".join(line.rstrip() for line in lines) + "\n"


def _pipe_colours(info):
    low = min(info.east_in, info.south_in)
    return {
        info.east_in: LOW_PIPE_COLOUR if info.east_in == low else HIGH_PIPE_COLOUR,
        info.south_in: LOW_PIPE_COLOUR if info.south_in == low else HIGH_PIPE_COLOUR,
    }


def _draw_cell(axes, filling, tracing, cell, go):
    x0, top = cell.col, -cell.row
    info = tracing.cells[cell]
    colour = _pipe_colours(info)
    axes.add_patch(plt.Rectangle((x0, top - 1), 1, 1, fill=False, linewidth=0.5, edgecolor="grey"))
    if filling.tile(cell) is Tile.CROSSING:
        axes.plot([x0, x0 + 1], [top - 0.5, top - 0.5], color=colour[info.east_in], linewidth=2)
        axes.plot([x0 + 0.5, x0 + 0.5], [top - 1, top], color=colour[info.south_in], linewidth=2)
    else:
        axes.add_patch(Arc((x0, top - 1), 1, 1, theta1=0, theta2=90, color=colour[info.south_in], linewidth=2))
        axes.add_patch(Arc((x0 + 1, top), 1, 1, theta1=180, theta2=270, color=colour[info.east_in], linewidth=2))
    if go is not None:
        stone = go.stone(cell).value
        if stone == "o":
            axes.plot(x0 + 0.5, top - 0.5, marker="o", markersize=9, markerfacecolor="white", color="black")
        elif stone == "*":
            axes.plot(x0 + 0.5, top - 0.5, marker="o", markersize=9, color="black")


def render_svg(diagram):
    """SVG picture; pipes coloured per cell, lower label blue; stable output"""
    filling = _as_filling(diagram)
    shape = filling.shape
    tracing = trace(filling)
    go = classify(filling).diagram
    plt.rcParams["svg.hashsalt"] = SVG_SALT
    figure, axes = plt.subplots(figsize=(1 + shape.width, 1 + shape.k))
    for cell in shape.cells():
        _draw_cell(axes, filling, tracing, cell, go)
    for col, label in enumerate(tracing.north_labels):
        axes.text(col + 0.5, 0.15, str(label), ha="center", va="bottom")
    for row, label in enumerate(tracing.west_labels):
        axes.text(-0.15, -row - 0.5, str(label), ha="right", va="center")
    for row, label in enumerate(shape.row_labels):
        axes.text(shape.parts[row] + 0.15, -row - 0.5, str(label), ha="left", va="center")
    for col, label in enumerate(shape.col_labels):
        depth = sum(1 for part in shape.parts if part > col)
        axes.text(col + 0.5, -depth - 0.15, str(label), ha="center", va="top")
    axes.set_xlim(-1, shape.width + 1)
    axes.set_ylim(-shape.k - 1, 1)
    axes.set_aspect("equal")
    axes.axis("off")
    buffer = io.BytesIO()
    figure.savefig(buffer, format="svg", metadata={"Date": None, "Creator": "deodharLab"})
    plt.close(figure)
    LOG.debug("rendered svg for shape %s", shape)
    return buffer.getvalue().decode("utf-8")


def render(diagram, fmt="ascii"):
    """Dispatch on the output format"""
    if fmt == "ascii":
        return render_ascii(diagram)
    if fmt == "json":
        return dump_json(_as_filling(diagram))
    if fmt == "svg":
        return render_svg(diagram)
    raise ParameterError(f"unknown format '{fmt}', use one of {FORMATS}")

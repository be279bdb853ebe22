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
Reading and writing diagrams.

JSON is the interchange format:

    {"k": 3, "n": 6, "parts": [3, 3, 3], "stones": ["+++", "+*+", "++o"]}

"tiles" rows ('x' crossing, 'e' elbow) may be given instead of "stones".
The inline text form used on the command line is "k,n:row/row/...", rows of
stones or tiles, "-" for an empty row.
"""

import json
import logging
import os

from deodhar_lab.diagram_core import Cell, Filling, GoDiagram, Partition, Stone, Tile, classify
from deodhar_lab.errors import InvalidDiagramError

#
# global constants
#
LOG = logging.getLogger("deodhar_lab.diagram_io")
STONE_SYMBOLS = {stone.value for stone in Stone}
TILE_SYMBOLS = {tile.value for tile in Tile}


def _rows_to_filling(shape, rows):
    """Filling from tile rows, or the Go-diagram of stone rows"""
    symbols = set("".join(rows))
    if symbols <= TILE_SYMBOLS:
        crossings = [
            Cell(r, c) for r, row in enumerate(rows) for c, symbol in enumerate(row) if symbol == Tile.CROSSING.value
        ]
        if tuple(len(row) for row in rows) + (0,) * (shape.k - len(rows)) != shape.parts:
            raise InvalidDiagramError(f"tile rows do not match shape {shape}")
        return Filling.from_crossings(shape, crossings)
    if symbols <= STONE_SYMBOLS:
        return GoDiagram.from_stones(shape, rows).filling
    raise InvalidDiagramError(f"rows mix unknown symbols: {''.join(sorted(symbols))}")


def filling_from_dict(data):
    """Filling described by a parsed JSON object"""
    try:
        k, n = int(data["k"]), int(data["n"])
        rows = data["stones"] if "stones" in data else data["tiles"]
    except KeyError as error:
        raise InvalidDiagramError(f"diagram entry {error} missing") from error
    except (TypeError, ValueError) as error:
        raise InvalidDiagramError(f"malformed diagram: {error}") from error
    rows = [str(row) for row in rows]
    parts = data.get("parts", [len(row) for row in rows])
    shape = Partition(tuple(parts), k, n)
    return _rows_to_filling(shape, rows)


def parse_inline(text):
    """Filling of 'k,n:row/row/...'"""
    try:
        head, body = text.split(":", 1)
        k, n = (int(value) for value in head.split(","))
    except ValueError as error:
        raise InvalidDiagramError(f"inline diagram '{text}' is not of the form k,n:rows") from error
    rows = [] if not body.strip() else ["" if row.strip() == "-" else row.strip() for row in body.split("/")]
    shape = Partition(tuple(len(row) for row in rows), k, n)
    return _rows_to_filling(shape, rows)


def parse_text(text):
    """Filling of a JSON document or an inline string"""
    text = text.strip()
    if text.startswith("{"):
        try:
            return filling_from_dict(json.loads(text))
        except json.JSONDecodeError as error:
            raise InvalidDiagramError(f"invalid JSON: {error}") from error
    return parse_inline(text)


def load_filling(path):
    """Read a diagram file"""
    if not os.path.exists(path):
        raise InvalidDiagramError(f"diagram file not found '{path}'")
    with open(path, encoding="utf-8") as handle:
        text = handle.read()
    LOG.debug("read %d bytes from %s", len(text), path)
    return parse_text(text)


def load_diagram(path):
    """Read a Go-diagram file, InvalidDiagramError if it has configuration B"""
    result = classify(load_filling(path))
    if result.diagram is None:
        raise InvalidDiagramError(f"configuration B at cell {result.witness}: not a Go-diagram")
    return result.diagram


def filling_to_dict(filling):
    """Plain JSON object; Go-diagrams also carry their stones"""
    data = {
        "k": filling.shape.k,
        "n": filling.shape.n,
        "parts": list(filling.shape.parts),
        "tiles": filling.rows_text(),
    }
    result = classify(filling)
    if result.diagram is not None:
        data["stones"] = result.diagram.stone_rows()
    return data


def dump_json(filling):
    """Canonical JSON text of a filling"""
    if isinstance(filling, GoDiagram):
        filling = filling.filling
    return json.dumps(filling_to_dict(filling), sort_keys=True, indent=2) + "\n"


def to_inline(filling):
    """Inline form with tile rows"""
    if isinstance(filling, GoDiagram):
        filling = filling.filling
    rows = [row or "-" for row in filling.rows_text()]
    return f"{filling.shape.k},{filling.shape.n}:" + "/".join(rows)

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
Command line front end of deodharLab
"""

import argparse
import json
import signal
import sys

import numpy as np

from deodhar_lab import closure
from deodhar_lab import diagram_core as DC
from deodhar_lab import diagram_io as DIO
from deodhar_lab import networks as NW
from deodhar_lab import pluecker_toggle as PT
from deodhar_lab.base_lab import BaseLab
from deodhar_lab.errors import DeodharLabError, InvalidDiagramError, ParameterError
from deodhar_lab.exact_algebra import parse_domain
from deodhar_lab.render import render

#
# global constants
#
CONFIG_FILE = "deodharLab.ini"  # name of the ini file
COMMANDS = ("enumerate", "classify", "trace", "weights", "plucker", "toggles", "dual", "closure-check", "census", "render")
WEIGHT_FAMILIES = ("beta", "dual", "alpha", "tw", "product")
EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE = 2


def _int_list(text):
    try:
        return tuple(int(value) for value in text.split(",") if value.strip())
    except ValueError as error:
        raise argparse.ArgumentTypeError(f"'{text}' is not a comma separated list of integers") from error


def _cell_pair(text):
    try:
        first, second = text.split(":")
        return DC.Cell(*_int_list(first)), DC.Cell(*_int_list(second))
    except (ValueError, TypeError) as error:
        raise argparse.ArgumentTypeError(f"'{text}' is not of the form r1,c1:r2,c2") from error


def compact(polynomial):
    """q^4 + 2*q^2 + 1 -> q^4+2q^2+1"""
    return str(polynomial).replace(" ", "").replace("*", "")


def build_parser():
    """argparse parser with one sub parser per command"""
    parser = argparse.ArgumentParser(prog="deodhar_lab_cli", description="Go-diagrams and Deodhar components")
    parser.add_argument("--config", default=CONFIG_FILE, help="ini file")
    parser.add_argument("--field", default=None, help="rat or q<p>")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--reading", choices=("row", "col"), default=None)
    parser.add_argument("--format", dest="fmt", choices=("text", "json", "svg", "ascii"), default="text")
    parser.add_argument("--out", default=None, help="output file, stdout if missing")
    parser.add_argument("--max-cells", type=int, default=None, help="overrides every cell guard")
    commands = parser.add_subparsers(dest="command", required=True)

    def with_input(name, help_text):
        sub = commands.add_parser(name, help=help_text)
        source = sub.add_mutually_exclusive_group(required=True)
        source.add_argument("--in", dest="infile", help="diagram file, '-' for stdin")
        source.add_argument("--inline", help="k,n:row/row/...")
        return sub

    sub = commands.add_parser("enumerate", help="list fillings or Go-diagrams")
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--parts", type=_int_list, default=None, help="one shape, every shape if missing")
    sub.add_argument("--kind", choices=("all", "go", "le"), default="go")

    with_input("classify", "NOT_GO, GO or LE")
    with_input("trace", "pipe routes, permutation and jump coordinates")

    sub = with_input("weights", "weight matrices of a Go-diagram")
    sub.add_argument("--family", choices=WEIGHT_FAMILIES, default="beta")
    sub.add_argument("--random", action="store_true", help="random values in --field instead of symbols")

    sub = with_input("plucker", "one Plücker coordinate of R_D")
    sub.add_argument("--I", dest="subset", type=_int_list, required=True)
    sub.add_argument("--method", choices=PT.METHODS, default="minor")
    sub.add_argument("--random", action="store_true")

    with_input("toggles", "toggle graph of restricted diagrams")
    sub = with_input("dual", "dual point R*_D with beta* = -beta")
    sub.add_argument("--random", action="store_true")

    sub = with_input("closure-check", "closure of a crossing-uncrossing pair")
    sub.add_argument("--pair", type=_cell_pair, default=None, help="r1,c1:r2,c2")
    mode = sub.add_mutually_exclusive_group()
    mode.add_argument("--general", action="store_true")
    mode.add_argument("--identity", action="store_true")
    sub.add_argument("--trace", action="store_true", help="dump every factor table")
    sub.add_argument("--exploratory", choices=("conj1", "conj2"), default=None)
    sub.add_argument("--include-adjacent", action="store_true")

    sub = commands.add_parser("census", help="F_q point count against the Gaussian binomial")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)

    with_input("render", "draw a filling")
    return parser


#
# class definitions
#
class DeodharLabCli(BaseLab):
    """Runs one command per call of run()"""

    def __init__(self, config_file=CONFIG_FILE):
        super().__init__(config_file)
        self.args = None
        self.rng = None

    def apply_arguments(self, args):
        """Command line options win over ini file and environment"""
        self.args = args
        if args.field is not None:
            self.field_name = args.field
            self.field = parse_domain(args.field)
        if args.seed is not None:
            self.seed = args.seed
        if args.reading is not None:
            self.reading = args.reading
        if args.max_cells is not None:
            for key in ("maxEnumerateCells", "maxToggleCells", "maxClosureCells"):
                self.override_guard(key, args.max_cells)
        self.rng = np.random.default_rng(self.seed)

    #
    # input helpers
    #
    def read_filling(self):
        """Filling from --in, stdin or --inline"""
        if getattr(self.args, "inline", None):
            return DIO.parse_inline(self.args.inline)
        if self.args.infile == "-":
            return DIO.parse_text(sys.stdin.read())
        return DIO.load_filling(self.args.infile)

    def read_diagram(self):
        """Go-diagram of the input"""
        result = DC.classify(self.read_filling())
        if result.diagram is None:
            raise InvalidDiagramError(f"configuration B at cell {result.witness}: not a Go-diagram")
        return result.diagram

    def reading_order(self, shape):
        """Reading order selected in ini file or on the command line"""
        return DC.ReadingOrder.from_kind(shape, self.reading)

    def params(self, diagram, family):
        """Symbols, or random values of the configured field with --random"""
        reading = self.reading_order(diagram.shape)
        if getattr(self.args, "random", False):
            return NW.ParamAssignment.random(diagram, family, self.field, self.rng, reading)
        return NW.ParamAssignment.symbolic(diagram, family, reading)

    #
    # commands
    #
    def cmd_enumerate(self):
        """Diagrams of one shape or of all shapes"""
        args = self.args
        kind = {"all": DC.DiagramKind.ALL, "go": DC.DiagramKind.GO, "le": DC.DiagramKind.LE}[args.kind]
        shapes = [DC.Partition(args.parts, args.k, args.n)] if args.parts is not None else DC.all_partitions(args.k, args.n)
        entries = []
        for shape in shapes:
            for item in DC.enumerate_diagrams(shape, kind, self.guards["maxEnumerateCells"]):
                filling = item if kind is DC.DiagramKind.ALL else item.filling
                entries.append(DIO.filling_to_dict(filling))
        if self.args.fmt == "json":
            return json.dumps(entries, sort_keys=True, indent=2) + "\n"
        lines = [f"{len(entries)} diagrams"]
        for entry in entries:
            rows = entry.get("stones", entry["tiles"])
            lines.append(f"{tuple(entry['parts'])}: " + " / ".join(row or "-" for row in rows))
        return "\n".join(lines) + "\n"

    def cmd_classify(self):
        """NOT_GO with witness, GO or LE with the stone grid"""
        result = DC.classify(self.read_filling())
        if result.diagram is None:
            text = {"kind": "NotGo", "witness": list(result.witness)}
        else:
            kind = "Le" if result.kind is DC.DiagramKind.LE else "Go"
            text = {"kind": kind, "stones": result.diagram.stone_rows()}
        if self.args.fmt == "json":
            return json.dumps(text, sort_keys=True, indent=2) + "\n"
        if result.diagram is None:
            return f"NotGo at {result.witness}\n"
        return text["kind"] + "\n" + "\n".join(text["stones"]) + "\n"

    def cmd_trace(self):
        """Permutation, boundary labels and per-cell data"""
        filling = self.read_filling()
        tracing = DC.trace(filling)
        cells = {
            str(cell): {
                "config": info.config.value,
                "sigma": list(info.sigma),
            }
            for cell, info in sorted(tracing.cells.items())
        }
        data = {
            "perm": list(tracing.perm.images),
            "north": list(tracing.north_labels),
            "west": list(tracing.west_labels),
            "cells": cells,
        }
        if self.args.fmt == "json":
            return json.dumps(data, sort_keys=True, indent=2) + "\n"
        lines = [f"pi = {tracing.perm}", f"north = {data['north']}", f"west = {data['west']}"]
        lines += [f"{cell}: {info['config']} sigma={tuple(info['sigma'])}" for cell, info in cells.items()]
        return "\n".join(lines) + "\n"

    def _matrix_output(self, matrix, title):
        if self.args.fmt == "json":
            return json.dumps({"matrix": matrix.to_json(), "title": title}, sort_keys=True, indent=2) + "\n"
        return f"{title}\n{matrix}\n"

    def cmd_weights(self):
        """R_D, R*_D, S_D, W_D or the product formula"""
        diagram = self.read_diagram()
        family = self.args.family
        if family == "beta":
            _, matrix = NW.restricted_weight_matrix(diagram, self.params(diagram, NW.Family.BETA))
            return self._matrix_output(matrix, "R_D")
        if family == "dual":
            _, matrix = NW.dual_weight_matrix(diagram, self.params(diagram, NW.Family.BETA_STAR))
            return self._matrix_output(matrix, "R*_D")
        if family == "alpha":
            _, matrix = NW.wtprime_weight_matrix(diagram, self.params(diagram, NW.Family.ALPHA))
            return self._matrix_output(matrix, "S_D")
        if family == "tw":
            matrix = NW.tw_weight_matrix(diagram, self.params(diagram, NW.Family.TW))
            return self._matrix_output(matrix, "W_D")
        params = self.params(diagram, NW.Family.BETA)
        matrix = NW.product_formula_matrix(diagram, params, self.reading_order(diagram.shape))
        return self._matrix_output(matrix, "R~_D (product formula)")

    def cmd_plucker(self):
        """Delta_I(R_D)"""
        diagram = self.read_diagram()
        params = self.params(diagram, NW.Family.BETA)
        if self.args.method == "toggle" and diagram.shape.size > self.guards["maxToggleCells"]:
            raise ParameterError(f"{diagram.shape.size} cells exceed the toggle guard")
        value = PT.plucker_coordinate(diagram, params, self.args.subset, self.args.method)
        if self.args.fmt == "json":
            return json.dumps({"subset": list(self.args.subset), "value": str(value)}, sort_keys=True) + "\n"
        return f"{value}\n"

    def cmd_toggles(self):
        """Vertices, edges and boundary subsets of the toggle graph"""
        diagram = self.read_diagram()
        graph = PT.toggle_graph(diagram, self.guards["maxToggleCells"])
        groups = graph.by_subset()
        data = {
            "vertices": len(graph),
            "edges": graph.graph.number_of_edges(),
            "subsets": {",".join(str(v) for v in subset): len(group) for subset, group in sorted(groups.items())},
        }
        if self.args.fmt == "json":
            return json.dumps(data, sort_keys=True, indent=2) + "\n"
        lines = [f"{data['vertices']} restricted diagrams, {data['edges']} toggle moves"]
        lines += [f"I = {{{key}}}: {count}" for key, count in data["subsets"].items()]
        return "\n".join(lines) + "\n"

    def cmd_dual(self):
        """R*_D at beta* = -beta"""
        diagram = self.read_diagram()
        return self._matrix_output(NW.dual_point(diagram, self.params(diagram, NW.Family.BETA)), "R*_D")

    def cmd_closure_check(self):
        """Identity or general closure verification, or the exploratory scan"""
        args = self.args
        d_prime = self.read_diagram()
        if args.exploratory:
            entries = closure.conjecture_scan(
                d_prime.shape,
                args.exploratory,
                include_adjacent=args.include_adjacent,
                seed=self.seed,
                max_cells=self.guards["maxClosureCells"],
            )
            lines = [f"# {closure.HEURISTIC_NOTE}"]
            for entry in entries:
                verdict = "consistent" if entry.consistent else f"missing {list(entry.missing)}"
                stones = "/".join(entry.d_prime.stone_rows())
                lines.append(f"{stones} {entry.c}->{entry.c_prime} pipes {entry.pipes} {entry.hypothesis}: {verdict}")
            return "\n".join(lines) + "\n"
        if args.pair is None:
            raise ParameterError("closure-check needs --pair r1,c1:r2,c2")
        c, c_prime = args.pair
        if args.identity:
            report = closure.verify_closure_identity_case(
                d_prime, c, c_prime, self.reading_order(d_prime.shape), record=args.trace
            )
        else:
            report = closure.verify_closure_general(d_prime, c, c_prime, kind=self.reading, record=args.trace)
        data = {
            "ok": report.ok,
            "witness": report.witness,
            "steps": list(report.steps),
            "notes": report.notes,
            "created": report.engine.created if report.engine else 0,
        }
        if report.limit is not None:
            data["limit"] = report.limit.to_json()
        if args.trace and report.engine:
            data["trace"] = report.engine.history
        if args.fmt == "json":
            return json.dumps(data, sort_keys=True, indent=2) + "\n"
        lines = ["OK" if report.ok else f"FAILED: {report.witness}"]
        lines += report.notes
        if args.trace and report.engine:
            for step, snapshot in enumerate(report.engine.history):
                lines.append(f"-- step {step}")
                lines += [f"{cell}: " + " ".join(f"X{p[0]},{p[1]}({e})" for p, e, _ in factors) for cell, factors in snapshot.items()]
        return "\n".join(lines) + "\n"

    def cmd_census(self):
        """Point count of all Deodhar components"""
        report = closure.fq_cell_census(self.args.n, self.args.k, self.guards["maxCensusN"])
        if self.args.fmt == "json":
            data = {"total": compact(report.total), "expected": compact(report.expected), "ok": report.ok}
            return json.dumps(data, sort_keys=True) + "\n"
        status = "OK" if report.ok else "MISMATCH " + compact(report.expected)
        return f"{compact(report.total)}  {status}\n"

    def cmd_render(self):
        """ascii (text), json or svg"""
        fmt = {"text": "ascii"}.get(self.args.fmt, self.args.fmt)
        return render(self.read_filling(), fmt)

    def run(self, argv=None):
        """Parse argv, run the command and write the output; returns the exit status"""
        parser = build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as stop:
            return EXIT_OK if stop.code == 0 else EXIT_USAGE
        try:
            self.apply_arguments(args)
            self.log.info("Command %s started", args.command)
            output = getattr(self, "cmd_" + args.command.replace("-", "_"))()
        except DeodharLabError as error:
            self.log.error("%s failed: %s", args.command, error)
            print(f"error: {error}", file=sys.stderr)
            return EXIT_DOMAIN_ERROR
        if args.out:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(output)
        else:
            sys.stdout.write(output)
        self.log.info("Command %s finished", args.command)
        return EXIT_OK


CLI = None


def lab_cli():
    """
    main function to create the front end, bound to CLI for the signal handler
    """
    global CLI  # pylint: disable=global-statement
    CLI = DeodharLabCli(CONFIG_FILE)
    return CLI


def signal_term_handler(sig, frame):  # pylint: disable=unused-argument
    """
    Call back to handle OS SIGTERM signal to terminate a long run.
    """
    if CLI is not None:
        CLI.log.warning("Received SIGTERM. Stop...")
    sys.exit(0)


if __name__ == "__main__":
    signal.signal(signal.SIGTERM, signal_term_handler)
    sys.exit(lab_cli().run())

#-------------------------------------------------------------------------------
#
#  Seatplan command - benchmark
#
# Project: Seatplan
#
#-------------------------------------------------------------------------------
# Copyright (C) 2021 Seatplan contributors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies of this Software or works derived from this Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.
#-------------------------------------------------------------------------------

from seatplan.bench import bench_sweep
from seatplan.config import SolverConfigReader
from seatplan.geometry import INCHES
from seatplan.util import parse_list
from seatplan.solvers.plan import METHODS, load_units
from .._common import Subcommand
from .common import (
    DistanceArgumentsMixIn, distance_in_inches, library_errors,
    read_floorplan, write_output,
)


class BenchSubcommand(DistanceArgumentsMixIn, Subcommand):
    name = "bench"
    help = "Compare allocation methods over a range of social distances."
    description = (
        "Run the allocation methods at each of the social distances and "
        "print the allocated workspace counts as a table."
    )

    def add_arguments(self, parser):
        parser.add_argument(
            "floorplan", help="Workspace JSON document ('-' for stdin)."
        )
        parser.add_argument(
            "--distances", type=lambda v: parse_list(v, float), required=True,
            help="Comma-separated strictly increasing social distances."
        )
        self.add_units_argument(parser)
        parser.add_argument(
            "--methods", type=parse_list, default=list(METHODS),
            help="Comma-separated methods. Defaults to %s." % ",".join(METHODS)
        )
        parser.add_argument("--seed", type=int, default=None)
        parser.add_argument("--restarts", type=int, default=None)
        parser.add_argument("--component-cap", type=int, default=None)
        parser.add_argument(
            "--units-file", default=None,
            help="JSON document with the business units."
        )
        parser.add_argument(
            "-o", "--out", default=None, help="Output report JSON file."
        )
        parser.add_argument(
            "--runtime", action="store_true", default=False,
            help="Include run times in the JSON report."
        )

    def handle(self, floorplan, **kwargs):
        with library_errors():
            floorplan = read_floorplan(floorplan).to_units(INCHES)
            config = SolverConfigReader().solver_config(
                seed=kwargs["seed"],
                restarts=kwargs["restarts"],
                component_cap=kwargs["component_cap"],
            )
            units = None
            if kwargs["units_file"]:
                units, _ = load_units(kwargs["units_file"])
            report = bench_sweep(
                floorplan,
                [
                    distance_in_inches(distance, kwargs["unit_system"])
                    for distance in kwargs["distances"]
                ],
                kwargs["methods"], config, units,
            )

        write_output(report.to_text())
        if kwargs["out"]:
            write_output(report.to_json(kwargs["runtime"]), kwargs["out"])

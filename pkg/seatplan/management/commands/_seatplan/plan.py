#-------------------------------------------------------------------------------
#
#  Seatplan command - workspace allocation
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

from seatplan.config import SolverConfigReader
from seatplan.exceptions import InfeasiblePlanError, UsageError
from seatplan.geometry import INCHES
from seatplan.graph import build_constraint_graph
from seatplan.render import render_allocation
from seatplan.solvers import solve, validate_plan
from seatplan.solvers.plan import (
    METHODS, MODES, MODE_PRESERVE, load_prior, load_units,
)
from .._common import Subcommand
from .common import (
    DistanceArgumentsMixIn, distance_in_inches, library_errors,
    read_floorplan, write_output,
)


class PlanSubcommand(DistanceArgumentsMixIn, Subcommand):
    name = "plan"
    help = "Allocate workspaces of a floorplan."
    description = (
        "Allocate the workspaces of a workspace JSON document under the "
        "given social distance and write the allocation plan as JSON and "
        "optionally as an SVG document."
    )

    def add_arguments(self, parser):
        parser.add_argument(
            "floorplan", help="Workspace JSON document ('-' for stdin)."
        )
        parser.add_argument(
            "--distance", type=float, default=None,
            help="Social distance. Defaults to the configured 72 inches."
        )
        self.add_units_argument(parser)
        parser.add_argument(
            "--method", default=None,
            help="Allocation method: %s." % ", ".join(METHODS)
        )
        parser.add_argument("--mode", choices=MODES, default=None)
        parser.add_argument(
            "--penalty", type=float, default=None,
            help="Penalty of changes to the prior plan (preserve mode)."
        )
        parser.add_argument("--seed", type=int, default=None)
        parser.add_argument("--restarts", type=int, default=None)
        parser.add_argument("--component-cap", type=int, default=None)
        parser.add_argument(
            "--units-file", default=None, help=(
                "JSON document with the business units and optionally the "
                "prior plan."
            )
        )
        parser.add_argument(
            "--prior", default=None, help="Prior allocation plan JSON."
        )
        parser.add_argument(
            "-o", "--out", default=None,
            help="Output allocation plan JSON file. Defaults to stdout."
        )
        parser.add_argument("--svg", default=None, help="Output SVG document.")
        parser.add_argument(
            "--color-units", action="store_true", default=False,
            help="Colour the allocated workspaces by business unit."
        )
        parser.add_argument(
            "--graph", default=None,
            help="Output debug JSON of the graph of constraints."
        )

    def handle(self, floorplan, **kwargs):
        with library_errors():
            floorplan = read_floorplan(floorplan).to_units(INCHES)
            config = SolverConfigReader().solver_config(
                d=(
                    None if kwargs["distance"] is None else
                    distance_in_inches(kwargs["distance"], kwargs["unit_system"])
                ),
                penalty_c=kwargs["penalty"],
                seed=kwargs["seed"],
                restarts=kwargs["restarts"],
                component_cap=kwargs["component_cap"],
                mode=kwargs["mode"],
                method=kwargs["method"],
            )

            units, prior = None, None
            if kwargs["units_file"]:
                units, prior = load_units(kwargs["units_file"])
            if kwargs["prior"]:
                prior = load_prior(kwargs["prior"])
            if config.mode == MODE_PRESERVE and units is None:
                raise UsageError("The preserve mode requires --units-file!")
            if prior and config.mode != MODE_PRESERVE:
                self.warning("Prior plan ignored in the %s mode.", config.mode)

            graph = build_constraint_graph(floorplan, config.d)
            self.logger.info("%r", graph)
            plan = solve(graph, config, units, prior)

            violations = validate_plan(graph, plan, units)
            if violations:
                for violation in violations:
                    self.error("%s", violation)
                raise InfeasiblePlanError("Infeasible allocation plan!")

        write_output(plan.to_json(), kwargs["out"])
        if kwargs["svg"]:
            write_output(
                render_allocation(
                    floorplan, plan, units, color_units=kwargs["color_units"]
                ),
                kwargs["svg"],
            )
        if kwargs["graph"]:
            write_output(graph.to_json(), kwargs["graph"])

        self.info(
            "%d of %d workspaces allocated at %g inches (%s, %s mode).",
            plan.allocated_count, len(floorplan), config.d,
            config.method, config.mode,
        )

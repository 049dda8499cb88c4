#-------------------------------------------------------------------------------
#
#  Allocation benchmark over a range of social distances
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

import json
import logging
from collections import namedtuple

from seatplan.exceptions import UsageError
from seatplan.geometry import INCHES
from seatplan.graph import build_constraint_graph
from seatplan.perf_util import Timer
from seatplan.solvers import solve
from seatplan.solvers.plan import MODE_COUNT, parse_method

logger = logging.getLogger(__name__)

JSON_OPTS = {
    'sort_keys': False,
    'indent': 2,
    'separators': (',', ': '),
}

BenchRow = namedtuple("BenchRow", ["distance", "method", "allocated", "runtime_ms"])


class BenchReport():
    """ Allocated workspaces per social distance and allocation method. """

    def __init__(self, rows, floorplan_size):
        self.rows = list(rows)
        self.floorplan_size = floorplan_size

    @property
    def distances(self):
        return list(dict.fromkeys(row.distance for row in self.rows))

    @property
    def methods(self):
        return list(dict.fromkeys(row.method for row in self.rows))

    def column(self, method):
        """ Allocated counts of a method in the distance order. """
        return [row.allocated for row in self.rows if row.method == method]

    def to_text(self):
        """ Fixed-width table with distances as rows and methods as columns.
        """
        methods = self.methods
        width = max([12] + [len(method) + 2 for method in methods])
        allocated = {(row.distance, row.method): row.allocated for row in self.rows}
        lines = [
            "Workspaces: %d" % self.floorplan_size,
            "%-10s" % "distance" + "".join(
                "%*s" % (width, method) for method in methods
            ),
        ]
        for distance in self.distances:
            lines.append("%-10s" % format(distance, "g") + "".join(
                "%*d" % (width, allocated[(distance, method)])
                for method in methods
            ))
        return "\n".join(lines) + "\n"

    def to_dict(self, include_runtime=False):
        def _row(row):
            data = {
                "distance": row.distance,
                "method": row.method,
                "allocated": row.allocated,
            }
            if include_runtime:
                data["runtime_ms"] = row.runtime_ms
            return data

        return {
            "floorplan_size": self.floorplan_size,
            "rows": [_row(row) for row in self.rows],
        }

    def to_json(self, include_runtime=False):
        return json.dumps(self.to_dict(include_runtime), **JSON_OPTS)


def bench_sweep(floorplan, distances, methods, config, units=None):
    """ Run every method at every distance in inches, rebuilding the graph
    of constraints for each distance.
    """
    distances = [float(distance) for distance in distances]
    if not distances:
        raise UsageError("No social distance given!")
    if any(d0 >= d1 for d0, d1 in zip(distances[:-1], distances[1:])):
        raise UsageError("Social distances must be strictly increasing!")
    methods = [parse_method(method) for method in methods]
    if not methods:
        raise UsageError("No allocation method given!")
    floorplan = floorplan.to_units(INCHES)

    rows = []
    timer = Timer()
    for distance in distances:
        graph = build_constraint_graph(floorplan, distance)
        for method in methods:
            timer.reset()
            plan = solve(graph, config._replace(
                d=distance, method=method, mode=MODE_COUNT,
            ), units)
            rows.append(BenchRow(
                distance, method, plan.allocated_count, timer.milliseconds,
            ))
            logger.info(
                "d=%g %s: %d of %d workspaces allocated in %dms",
                distance, method, plan.allocated_count, len(floorplan),
                rows[-1].runtime_ms,
            )

    return BenchReport(rows, len(floorplan))

#-------------------------------------------------------------------------------
#
#  Allocation engines
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

from seatplan.exceptions import UsageError
from seatplan.solvers.plan import (
    METHOD_EXACT, METHOD_PARTITION, METHOD_RANDOM_WALK, MODE_PRESERVE,
    AllocationPlan, BusinessUnit, SolverConfig, assign_units, validate_plan,
)
from seatplan.solvers.random_walk import random_walk
from seatplan.solvers.partition import candidate_h, partition, space_selection
from seatplan.solvers.exact import solve_exact_count
from seatplan.solvers.preserve import retention_threshold, solve_exact_preserve
from seatplan.solvers.oracle import brute_force_oracle

__all__ = [
    "AllocationPlan", "BusinessUnit", "SolverConfig", "validate_plan",
    "random_walk", "candidate_h", "partition", "space_selection",
    "solve_exact_count", "solve_exact_preserve", "retention_threshold",
    "brute_force_oracle", "solve",
]


def solve(graph, config, units=None, prior=None):
    """ Run the allocation engine selected by the solver configuration. """
    if config.mode == MODE_PRESERVE:
        if config.method != METHOD_EXACT:
            raise UsageError("The preserve mode requires the exact method!")
        if units is None:
            raise UsageError("The preserve mode requires business units!")
        return solve_exact_preserve(
            graph, units, prior, config.penalty_c, config.component_cap,
        )

    if config.method == METHOD_EXACT:
        return solve_exact_count(graph, units, config.component_cap)

    if config.method == METHOD_RANDOM_WALK:
        plan = random_walk(graph, config.seed, config.restarts)
    elif config.method == METHOD_PARTITION:
        plan = space_selection(graph, config.seed)
    else:
        raise UsageError("Unknown allocation method %r!" % (config.method,))

    return plan if units is None else assign_units(plan, units)

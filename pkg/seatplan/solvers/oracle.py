#-------------------------------------------------------------------------------
#
#  Exhaustive reference allocation for small instances
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

import logging
from functools import lru_cache
import networkx as nx

from seatplan.exceptions import OracleSizeError
from seatplan.util import sorted_ids
from seatplan.solvers.plan import AllocationPlan, parse_prior
from seatplan.solvers.preserve import SeatValues

logger = logging.getLogger(__name__)

ORACLE_SIZE_LIMIT = 20

METHOD_ORACLE = "oracle"


def brute_force_oracle(graph, units, prior=None, penalty_c=0.0):
    """ Best allocation found by exhaustive enumeration.

    Every maximal independent set is tried with every capacity-feasible
    distribution of its seats among the units. Without prior plan the
    objective is the allocated count.
    """
    if len(graph) > ORACLE_SIZE_LIMIT:
        raise OracleSizeError(
            "The oracle is limited to %d workspaces, got %d."
            % (ORACLE_SIZE_LIMIT, len(graph))
        )
    units = list(units)
    prior = parse_prior(prior or {}, graph, units)
    values = SeatValues(units, prior, float(penalty_c))

    best_value, best_assignments = None, {}
    for seats in _maximal_independent_sets(graph):
        groups = {}
        for seat in sorted_ids(seats):
            groups.setdefault(values.seat_class(seat), []).append(seat)
        classes = sorted(groups, key=repr)
        value, distribution = _best_distribution(
            tuple(len(groups[class_]) for class_ in classes),
            tuple(classes), values,
        )
        if best_value is None or value > best_value:
            best_value = value
            best_assignments = _realize(groups, classes, distribution, units)

    if prior:
        objective = values.objective(best_assignments)
    else:
        objective = len(best_assignments)

    return AllocationPlan(
        graph.nodes, best_assignments, objective=objective,
        method=METHOD_ORACLE, d=graph.d,
    )


def _maximal_independent_sets(graph):
    if not len(graph):
        yield []
        return
    complement = nx.complement(graph.graph)
    for clique in nx.find_cliques(complement):
        yield clique


def _best_distribution(sizes, classes, values):
    """ Exhaustive search over the numbers of seats of each class assigned
    to each unit. Returns the best value and the per-class unit counts.
    """
    units = values.units

    @lru_cache(maxsize=None)
    def _class_options(class_index, remaining):
        # all ways to place up to sizes[class_index] seats into units
        options = []

        def _place(unit_index, left, capacity, counts, value):
            if unit_index == len(units):
                options.append((value, tuple(counts), tuple(capacity)))
                return
            gain = values.gain(classes[class_index], units[unit_index].id)
            for count in range(min(left, capacity[unit_index]) + 1):
                capacity_next = list(capacity)
                capacity_next[unit_index] -= count
                _place(
                    unit_index + 1, left - count, capacity_next,
                    counts + [count], value + count * gain,
                )

        _place(0, sizes[class_index], list(remaining), [], 0.0)
        return options

    @lru_cache(maxsize=None)
    def _solve(class_index, remaining):
        if class_index == len(classes):
            return 0.0, ()
        best = None
        for value, counts, capacity in _class_options(class_index, remaining):
            rest_value, rest = _solve(class_index + 1, capacity)
            if best is None or value + rest_value > best[0]:
                best = (value + rest_value, (counts,) + rest)
        return best

    return _solve(0, tuple(unit.headcount for unit in units))


def _realize(groups, classes, distribution, units):
    assignments = {}
    for class_, counts in zip(classes, distribution):
        seats = iter(groups[class_])
        for unit, count in zip(units, counts):
            for _, seat in zip(range(count), seats):
                assignments[seat] = unit.id
    return assignments

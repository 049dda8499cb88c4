#-------------------------------------------------------------------------------
#
#  Exact allocation preserving a prior plan
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
from collections import Counter

from seatplan.perf_util import ElapsedTimeLogger
from seatplan.util import id_key, sorted_ids
from seatplan.solvers.assignment import EPSILON, max_gain_assignment
from seatplan.solvers.exact import DEFAULT_COMPONENT_CAP, check_component_sizes
from seatplan.solvers.plan import (
    METHOD_EXACT, AllocationPlan, parse_prior, total_headcount,
)

logger = logging.getLogger(__name__)


def retention_threshold(graph):
    """ Penalty above which keeping a prior assignment outweighs any number
    of additional seats.
    """
    return float(len(graph))


class SeatValues():
    """ Value of a seat assigned to a business unit.

    A seat is worth 1, plus the penalty if it keeps its prior unit, or
    minus the penalty if it was allocated before and moves to another unit
    of the prior plan. Seats of the same prior unit (or with no prior unit)
    form a class of equally valued seats.
    """

    def __init__(self, units, prior, penalty_c):
        self.units = list(units)
        self.prior = prior
        self.prior_units = set(prior.values())
        self.penalty_c = penalty_c

    def seat_class(self, seat):
        return self.prior.get(seat)

    def gain(self, class_, unit_id):
        if class_ is None:
            return 1.0
        if unit_id == class_:
            return 1.0 + self.penalty_c
        if unit_id in self.prior_units:
            return 1.0 - self.penalty_c
        return 1.0

    def best_gain(self, class_):
        return max(
            [0.0] + [self.gain(class_, unit.id) for unit in self.units]
        )

    def objective(self, assignments):
        """ Objective of an assignment including the penalty terms. """
        kept = moved = 0
        for seat, unit_id in assignments.items():
            class_ = self.seat_class(seat)
            if class_ is None:
                continue
            if unit_id == class_:
                kept += 1
            elif unit_id in self.prior_units:
                moved += 1
        return len(assignments) + self.penalty_c * (kept - moved)


def solve_exact_preserve(graph, units, prior, penalty_c=0.0,
                         component_cap=DEFAULT_COMPONENT_CAP):
    """ Maximize the allocated workspaces rewarding kept and penalizing
    moved prior assignments.

    Branch and bound over seat inclusion; every complete selection is
    assigned to the units optimally by `max_gain_assignment`.
    """
    check_component_sizes(graph, component_cap)
    units = list(units)
    prior = parse_prior(prior or {}, graph, units)
    values = SeatValues(units, prior, float(penalty_c))

    with ElapsedTimeLogger(
        "Plan-preserving allocation finished in", logger, logging.DEBUG
    ):
        search = _PreservingSearch(graph, values)
        selected, counts = search.solve()

    assignments = {}
    for class_, seats in _group_by_class(selected, values).items():
        seats = iter(seats)
        for unit in units:
            for _, seat in zip(range(counts.get((class_, unit.id), 0)), seats):
                assignments[seat] = unit.id

    logger.debug(
        "Plan-preserving allocation of %d of %d workspaces after %d leaves.",
        len(assignments), len(graph), search.leaves,
    )

    return AllocationPlan(
        graph.nodes, assignments, objective=values.objective(assignments),
        method=METHOD_EXACT, d=graph.d,
    )


def _group_by_class(seats, values):
    groups = {}
    for seat in sorted_ids(seats):
        groups.setdefault(values.seat_class(seat), []).append(seat)
    return groups


class _PreservingSearch():

    def __init__(self, graph, values):
        self.adjacency = graph.adjacency
        self.nodes = graph.nodes
        self.values = values
        self.capacity = total_headcount(values.units)
        self.classes = {node: values.seat_class(node) for node in self.nodes}
        self.class_index = {
            class_: index for index, class_ in enumerate(
                sorted(set(self.classes.values()), key=repr)
            )
        }
        self.best_gain = {
            class_: values.best_gain(class_) for class_ in self.class_index
        }
        self.cache = {}
        self.leaves = 0
        self.best = ([], {})
        self.best_value = 0.0

    def solve(self):
        self._branch([], set(self.nodes))
        return self.best

    def evaluate(self, seats):
        """ Best assignment value of the selected seats. """
        sizes = Counter(self.classes[seat] for seat in seats)
        key = tuple(sorted(
            (self.class_index[class_], size) for class_, size in sizes.items()
        ))
        if key not in self.cache:
            counts = max_gain_assignment(
                sizes, self.values.units, self.values.gain
            )
            value = sum(
                count * self.values.gain(class_, unit_id)
                for (class_, unit_id), count in counts.items()
            )
            self.cache[key] = (value, counts)
        return self.cache[key]

    def _neighbors(self, node, nodes):
        return self.adjacency[node] & nodes

    def _reduce(self, chosen, undecided):
        changed = True
        while changed:
            changed = False
            for node in sorted_ids(undecided):
                if node not in undecided:
                    continue
                neighbors = self._neighbors(node, undecided)
                if not neighbors:
                    chosen.append(node)
                    undecided.discard(node)
                    changed = True
                    continue
                closed = neighbors | {node}
                for neighbor in sorted_ids(neighbors):
                    if self.classes[neighbor] != self.classes[node]:
                        continue
                    if closed <= self._neighbors(neighbor, undecided) | {neighbor}:
                        undecided.discard(neighbor)
                        changed = True
                        break

    def _upper_bound(self, chosen, undecided):
        items = [self.best_gain[self.classes[seat]] for seat in chosen]
        cliques = []
        for node in sorted(undecided, key=lambda item: (
                -len(self._neighbors(item, undecided)), id_key(item)
        )):
            neighbors = self._neighbors(node, undecided)
            gain = self.best_gain[self.classes[node]]
            for clique in cliques:
                if clique[0] <= neighbors:
                    clique[0].add(node)
                    clique[1] = max(clique[1], gain)
                    break
            else:
                cliques.append([{node}, gain])
        items.extend(gain for _, gain in cliques)
        items = sorted((item for item in items if item > 0), reverse=True)
        return sum(items[:self.capacity])

    def _branch(self, chosen, undecided):
        chosen = list(chosen)
        self._reduce(chosen, undecided)

        if not undecided:
            self.leaves += 1
            value, counts = self.evaluate(chosen)
            if value > self.best_value + EPSILON:
                self.best, self.best_value = (list(chosen), counts), value
            return

        if self._upper_bound(chosen, undecided) <= self.best_value + EPSILON:
            return

        node = min(undecided, key=lambda item: (
            -len(self._neighbors(item, undecided)), id_key(item)
        ))
        self._branch(
            chosen + [node],
            undecided - self._neighbors(node, undecided) - {node},
        )
        self._branch(chosen, undecided - {node})

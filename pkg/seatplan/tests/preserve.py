#-------------------------------------------------------------------------------
#
#  Plan-preserving allocation and reference oracle tests.
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
# pylint: disable=missing-docstring

import unittest
from seatplan.exceptions import InvalidPriorError, OracleSizeError
from seatplan.graph import build_constraint_graph
from seatplan.solvers import (
    BusinessUnit, brute_force_oracle, random_walk, retention_threshold,
    solve_exact_count, solve_exact_preserve,
)
from seatplan.solvers.plan import assign_units
from seatplan.tests import (
    PlanMixIn, graph_from_edges, path_graph, random_floorplan, random_prior,
    random_units, seeded_rng,
)

PENALTIES = (0.0, 0.5, 2.0, 10.0)


def random_instance(rng, max_size=20):
    graph = build_constraint_graph(
        random_floorplan(rng, int(rng.integers(1, max_size + 1))),
        float(rng.uniform(40, 150)),
    )
    units = random_units(rng)
    prior = random_prior(rng, graph, units) if rng.random() < 0.5 else None
    penalty = PENALTIES[int(rng.integers(len(PENALTIES)))]
    return graph, units, prior, penalty


class TestSolveExactPreserve(PlanMixIn, unittest.TestCase):

    def test_keep_prior_seat(self):
        graph = graph_from_edges(["desk1", "desk2"], [("desk1", "desk2")])
        units = [BusinessUnit("A", 1), BusinessUnit("B", 1)]
        plan = solve_exact_preserve(graph, units, {"desk1": "A"}, 10)
        self.assertEqual(plan.assignments, {"desk1": "A"})
        self.assertEqual(plan.objective, 11)

    def test_feasible_prior_retained(self):
        graph = path_graph(6)
        units = [BusinessUnit("A", 2), BusinessUnit("B", 2)]
        prior = {0: "A", 2: "B", 4: "A"}
        plan = solve_exact_preserve(graph, units, prior, 10)
        for seat, unit_id in prior.items():
            self.assertEqual(plan.assignments.get(seat), unit_id)
        self.assertEqual(plan.objective, 33)

    def test_moved_seat_penalized(self):
        graph = graph_from_edges([0, 1], [])
        units = [BusinessUnit("A", 0), BusinessUnit("B", 2)]
        plan = solve_exact_preserve(graph, units, {0: "A", 1: "B"}, 2)
        # moving seat 0 to B would cost more than it gains
        self.assertEqual(plan.assignments, {1: "B"})
        self.assertEqual(plan.objective, 3)

    def test_zero_penalty(self):
        rng = seeded_rng(10)
        for _ in range(50):
            graph, units, prior, _ = random_instance(rng, 30)
            self.assertEqual(
                solve_exact_preserve(graph, units, prior, 0).allocated_count,
                solve_exact_count(graph, units).allocated_count,
            )

    def test_feasible(self):
        rng = seeded_rng(11)
        for _ in range(50):
            graph, units, prior, penalty = random_instance(rng, 30)
            plan = solve_exact_preserve(graph, units, prior, penalty)
            self.assertFeasible(graph, plan, units)

    def test_retention_threshold(self):
        rng = seeded_rng(12)
        for seed in range(30):
            graph, units, _, _ = random_instance(rng)
            prior = assign_units(random_walk(graph, seed, 1), units).assignments
            penalty = retention_threshold(graph) + 1
            plan = solve_exact_preserve(graph, units, prior, penalty)
            for seat, unit_id in prior.items():
                self.assertEqual(plan.assignments.get(seat), unit_id)

    def test_invalid_prior(self):
        graph = path_graph(3)
        units = [BusinessUnit("A", 1)]
        with self.assertRaises(InvalidPriorError):
            solve_exact_preserve(graph, units, {0: "X"}, 1)
        with self.assertRaises(InvalidPriorError):
            solve_exact_preserve(graph, units, [(0, "A"), (0, "B")], 1)


class TestBruteForceOracle(unittest.TestCase):

    def test_empty_graph(self):
        graph = graph_from_edges([], [])
        plan = brute_force_oracle(graph, [BusinessUnit("A", 0)])
        self.assertEqual(plan.allocated_count, 0)

    def test_single_node(self):
        graph = graph_from_edges(["A"], [])
        plan = brute_force_oracle(graph, [BusinessUnit("U", 1)])
        self.assertEqual(plan.assignments, {"A": "U"})

    def test_zero_headcount(self):
        self.assertEqual(brute_force_oracle(
            path_graph(4), [BusinessUnit("U", 0)]
        ).allocated_count, 0)

    def test_size_limit(self):
        with self.assertRaises(OracleSizeError):
            brute_force_oracle(path_graph(21), [BusinessUnit("U", 1)])

    def test_count_mode_equivalence(self):
        rng = seeded_rng(20)
        for _ in range(200):
            graph, units, _, _ = random_instance(rng)
            self.assertEqual(
                solve_exact_count(graph, units).objective,
                brute_force_oracle(graph, units).objective,
            )

    def test_preserve_mode_equivalence(self):
        rng = seeded_rng(21)
        for _ in range(200):
            graph, units, prior, penalty = random_instance(rng)
            self.assertEqual(
                solve_exact_preserve(graph, units, prior, penalty).objective,
                brute_force_oracle(graph, units, prior, penalty).objective,
            )


if __name__ == "__main__":
    unittest.main()

#-------------------------------------------------------------------------------
#
#  End-to-end allocation tests on larger synthetic floorplans.
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
from math import sqrt
from seatplan.graph import build_constraint_graph
from seatplan.render import render_allocation
from seatplan.solvers import solve
from seatplan.solvers.plan import METHODS, SolverConfig
from seatplan.perf_util import Timer
from seatplan.discovery.floorplan import Floorplan
from seatplan.discovery.synthetic import GridSpec, generate_synthetic
from seatplan.discovery.vector import parse_vector
from seatplan.tests import (
    PlanMixIn, random_floorplan, random_prior, random_units, seeded_rng,
)

# 15 rows of 20 desks with an aisle after every 5 columns
OFFICE = GridSpec(
    15, 20, pitch_x=60.0, desk_w=60.0, aisle_every=5, aisle_width=60.0,
    jitter=0.25,
)

# social distance cap of the random instances above this size
LARGE_SIZE = 60
LARGE_MAX_DISTANCE = 110.0


def count_allocated(graph, method, seed=0):
    return solve(graph, SolverConfig(
        d=graph.d, method=method, seed=seed, restarts=20,
    )).allocated_count


def random_distance(rng, size):
    high = LARGE_MAX_DISTANCE if size > LARGE_SIZE else 150.0
    return float(rng.uniform(40.0, high))


class TestOfficeLayout(PlanMixIn, unittest.TestCase):

    def test_partition_vs_exact(self):
        below = {72: 0, 84: 0, 96: 0, 108: 0}
        for seed in range(20):
            floorplan = generate_synthetic(OFFICE, seed)
            self.assertEqual(len(floorplan), 300)
            for distance in below:
                graph = build_constraint_graph(floorplan, distance)
                exact = count_allocated(graph, "exact")
                partition = count_allocated(graph, "partition", seed)
                walk = count_allocated(graph, "random-walk", seed)
                self.assertLessEqual(partition, exact)
                self.assertLessEqual(walk, exact)
                below[distance] += partition < exact

        self.assertLessEqual(below[72], 4)
        self.assertLessEqual(below[84], 4)
        self.assertGreaterEqual(below[96] + below[108], below[72] + below[84])

    def test_exact_column_non_increasing(self):
        floorplan = generate_synthetic(OFFICE, 1)
        counts = [
            count_allocated(build_constraint_graph(floorplan, distance), "exact")
            for distance in (36, 72, 84, 96, 108)
        ]
        self.assertEqual(counts[0], 300)
        self.assertEqual(counts[1], 152)
        self.assertEqual(counts[3], 96)
        self.assertTrue(all(a >= b for a, b in zip(counts[:-1], counts[1:])))


class TestLargeFloorplan(PlanMixIn, unittest.TestCase):

    def setUp(self):
        floorplan = generate_synthetic(GridSpec(
            27, 25, aisle_every=5, aisle_width=60.0, jitter=0.25,
        ), seed=4)
        self.floorplan = Floorplan(
            floorplan.workspaces[:653], source=floorplan.source
        )

    def test_exact(self):
        graph = build_constraint_graph(self.floorplan, 72)
        timer = Timer()
        plan = solve(graph, SolverConfig(d=72))
        self.assertLess(timer(), 60)
        self.assertFeasible(graph, plan)
        self.assertMaximal(graph, plan)
        self.assertGreater(plan.allocated_count, 653 // 2)

    def test_pipeline(self):
        graph = build_constraint_graph(self.floorplan, 72)
        plan = solve(graph, SolverConfig(d=72))
        parsed = parse_vector(render_allocation(self.floorplan, plan))
        self.assertEqual(len(parsed), 653)
        self.assertEqual(len(build_constraint_graph(parsed, 72)), 653)


class TestFeasibility(PlanMixIn, unittest.TestCase):

    def test_random_instances(self):
        rng = seeded_rng(42)
        for _ in range(1000):
            size = int(rng.integers(1, 301))
            floorplan = random_floorplan(rng, size, extent=60.0 * sqrt(size))
            graph = build_constraint_graph(floorplan, random_distance(rng, size))
            units = random_units(rng) if rng.random() < 0.5 else None
            seed = int(rng.integers(0, 1000))
            for method in METHODS:
                plan = solve(graph, SolverConfig(
                    d=graph.d, method=method, seed=seed, restarts=5,
                ), units)
                self.assertFeasible(graph, plan, units)

    def test_large_instances_with_units(self):
        rng = seeded_rng(44)
        for _ in range(20):
            floorplan = random_floorplan(rng, 300, extent=60.0 * sqrt(300))
            graph = build_constraint_graph(floorplan, random_distance(rng, 300))
            units = random_units(rng, max_units=5, max_headcount=80)
            headcount = sum(unit.headcount for unit in units)
            for method in METHODS:
                plan = solve(graph, SolverConfig(
                    d=graph.d, method=method, seed=int(rng.integers(0, 1000)),
                    restarts=5,
                ), units)
                self.assertFeasible(graph, plan, units)
                if method == "exact":
                    self.assertEqual(plan.allocated_count, min(
                        count_allocated(graph, "exact"), headcount
                    ))

    def test_preserve_instances(self):
        rng = seeded_rng(43)
        for _ in range(100):
            size = int(rng.integers(1, 31))
            floorplan = random_floorplan(rng, size, extent=60.0 * sqrt(size))
            graph = build_constraint_graph(
                floorplan, float(rng.uniform(40.0, 150.0))
            )
            units = random_units(rng)
            plan = solve(graph, SolverConfig(
                d=graph.d, mode="preserve", penalty_c=float(rng.uniform(0, 5)),
            ), units, random_prior(rng, graph, units))
            self.assertFeasible(graph, plan, units)


class TestDeterminism(unittest.TestCase):

    def test_plans(self):
        floorplan = generate_synthetic(OFFICE, 7)
        for distance in (72, 96):
            for method in METHODS:
                config = SolverConfig(d=distance, method=method, seed=11)
                outputs = [
                    solve(
                        build_constraint_graph(floorplan, distance), config
                    ).to_json()
                    for _ in range(2)
                ]
                self.assertEqual(outputs[0], outputs[1])


if __name__ == "__main__":
    unittest.main()

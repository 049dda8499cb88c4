#-------------------------------------------------------------------------------
#
#  Graph of constraints tests.
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

import json
import unittest
from seatplan.exceptions import ContractViolation, UnknownWorkspaceError
from seatplan.geometry import BoundingBox
from seatplan.graph import (
    Bicoloring, OddCycle, bicolor, build_constraint_graph, components,
    cycle_basis,
)
from seatplan.discovery.floorplan import Floorplan, Workspace
from seatplan.tests import (
    complete_graph, cycle_graph, figure_graph, graph_from_edges, grid,
    path_graph, random_floorplan, seeded_rng,
)


def pair(offset):
    return Floorplan([
        Workspace("A", BoundingBox((0, 0), (60, 60))),
        Workspace("B", BoundingBox((offset, 0), (offset + 60, 60))),
    ])


class TestBuildConstraintGraph(unittest.TestCase):

    def test_beyond_distance(self):
        self.assertEqual(build_constraint_graph(pair(100), 72).number_of_edges, 0)

    def test_within_distance(self):
        graph = build_constraint_graph(pair(60), 72)
        self.assertEqual(graph.edges, [("A", "B", 60.0)])

    def test_strict_distance(self):
        self.assertEqual(build_constraint_graph(pair(72), 72).number_of_edges, 0)

    def test_grid(self):
        self.assertEqual(build_constraint_graph(grid(5, 5), 72).number_of_edges, 40)
        self.assertEqual(build_constraint_graph(grid(5, 5), 85).number_of_edges, 72)

    def test_isolated_nodes(self):
        graph = build_constraint_graph(grid(3, 3, pitch=200), 72)
        self.assertEqual(len(graph), 9)
        self.assertEqual(graph.number_of_edges, 0)

    def test_brute_force_equivalence(self):
        rng = seeded_rng(1)
        for _ in range(50):
            floorplan = random_floorplan(rng, int(rng.integers(2, 80)))
            distance = float(rng.uniform(10, 150))
            self.assertEqual(
                build_constraint_graph(floorplan, distance, "kdtree").edges,
                build_constraint_graph(floorplan, distance, "brute").edges,
            )

    def test_weights(self):
        graph = build_constraint_graph(grid(4, 4), 100)
        for _, _, weight in graph.edges:
            self.assertLess(weight, 100)

    def test_from_edges(self):
        with self.assertRaises(UnknownWorkspaceError):
            graph_from_edges([1, 2], [(1, 3)])
        with self.assertRaises(ContractViolation):
            graph_from_edges([1, 2], [(1, 1)])

    def test_json(self):
        data = json.loads(build_constraint_graph(pair(60), 72).to_json())
        self.assertEqual(data, {
            "d": 72, "nodes": ["A", "B"], "edges": [["A", "B", 60.0]],
        })


class TestComponents(unittest.TestCase):

    def test_connected_grid(self):
        result = components(build_constraint_graph(grid(5, 5), 72))
        self.assertEqual([len(component) for component in result], [25])

    def test_singletons(self):
        result = components(build_constraint_graph(grid(2, 3), 10))
        self.assertEqual([len(component) for component in result], [1] * 6)
        self.assertEqual(
            [component.nodes[0] for component in result],
            ["r0c0", "r0c1", "r0c2", "r1c0", "r1c1", "r1c2"],
        )

    def test_clusters(self):
        floorplan = Floorplan([
            Workspace("%s%d" % (name, index), BoundingBox(
                (x + dx, y), (x + dx + 60, y + 60)
            ))
            for name, dx in [("a", 0), ("b", 1000)]
            for index, (x, y) in enumerate([(0, 0), (60, 0), (0, 60), (60, 60)])
        ])
        result = components(build_constraint_graph(floorplan, 72))
        self.assertEqual(
            [component.nodes for component in result],
            [["a0", "a1", "a2", "a3"], ["b0", "b1", "b2", "b3"]],
        )


class TestCycleBasis(unittest.TestCase):

    def assertValidBasis(self, graph, basis):
        # pylint: disable=invalid-name
        self.assertEqual(
            len(basis),
            graph.number_of_edges - len(graph) + len(components(graph)),
        )
        for cycle in basis:
            self.assertGreaterEqual(len(cycle), 3)
            self.assertEqual(len(set(cycle)), len(cycle))
            for node_a, node_b in zip(cycle, cycle[1:] + cycle[:1]):
                self.assertTrue(graph.has_edge(node_a, node_b))

    def test_tree(self):
        self.assertEqual(len(cycle_basis(path_graph(6))), 0)

    def test_triangle(self):
        basis = cycle_basis(complete_graph(3))
        self.assertEqual(len(basis), 1)
        self.assertEqual(len(basis.cycles[0]), 3)

    def test_complete_graph(self):
        graph = complete_graph(4)
        basis = cycle_basis(graph)
        self.assertEqual(len(basis), 3)
        self.assertValidBasis(graph, basis)

    def test_figure_graph(self):
        basis = cycle_basis(figure_graph())
        self.assertEqual(
            sorted(sorted(cycle) for cycle in basis.odd()),
            [[30, 55, 62], [30, 62, 68]],
        )

    def test_random_graphs(self):
        rng = seeded_rng(2)
        for _ in range(30):
            graph = build_constraint_graph(
                random_floorplan(rng, int(rng.integers(3, 40))),
                float(rng.uniform(40, 150)),
            )
            self.assertValidBasis(graph, cycle_basis(graph))

    def test_deterministic(self):
        graph = build_constraint_graph(grid(4, 4), 85)
        self.assertEqual(cycle_basis(graph), cycle_basis(graph))


class TestBicolor(unittest.TestCase):

    def test_path(self):
        coloring = bicolor(path_graph(4))
        self.assertIsInstance(coloring, Bicoloring)
        self.assertEqual(coloring, (frozenset([0, 2]), frozenset([1, 3])))

    def test_triangle(self):
        result = bicolor(complete_graph(3))
        self.assertIsInstance(result, OddCycle)
        self.assertEqual(sorted(result.cycle), [0, 1, 2])

    def test_even_cycle(self):
        coloring = bicolor(cycle_graph(6))
        self.assertEqual((len(coloring.U), len(coloring.V)), (3, 3))

    def test_odd_cycle_witness(self):
        graph = cycle_graph(7)
        result = bicolor(graph)
        self.assertIsInstance(result, OddCycle)
        self.assertEqual(len(result.cycle) % 2, 1)
        for node_a, node_b in zip(result.cycle, result.cycle[1:] + result.cycle[:1]):
            self.assertTrue(graph.has_edge(node_a, node_b))

    def test_grid(self):
        graph = build_constraint_graph(grid(5, 5), 72)
        coloring = bicolor(graph)
        self.assertEqual((len(coloring.U), len(coloring.V)), (13, 12))
        for node_a, node_b, _ in graph.edges:
            self.assertNotEqual(node_a in coloring.U, node_b in coloring.U)


if __name__ == "__main__":
    unittest.main()

#-------------------------------------------------------------------------------
#
#  Unit tests.
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

import os
import django
from numpy import abs as aabs
from numpy.random import default_rng

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "seatplan.settings")
django.setup()

# pylint: disable=wrong-import-position
from seatplan.geometry import BoundingBox
from seatplan.graph import ConstraintGraph
from seatplan.discovery.floorplan import Floorplan, Workspace
from seatplan.discovery.synthetic import GridSpec, generate_synthetic
from seatplan.solvers.plan import BusinessUnit, validate_plan

# two odd cycles {68, 30, 62} and {55, 62, 30} sharing nodes 30 and 62
FIGURE_NODES = [68, 30, 62, 55, 38, 47]
FIGURE_EDGES = [
    (30, 68), (30, 62), (30, 55), (62, 68), (62, 55), (68, 38), (55, 47),
]


class ArrayMixIn():
    """ Mix-in class adding handy array assertions. """
    # pylint: disable=invalid-name

    def assertAllTrue(self, arr):
        self.assertTrue(arr.all())

    def assertAllEqual(self, arr0, arr1):
        self.assertAllTrue(arr0 == arr1)

    def assertAllAlmostEqual(self, arr0, arr1, delta=1e-7):
        self.assertAllTrue(aabs(arr0 - arr1) <= delta)


class PlanMixIn():
    """ Mix-in class adding allocation plan assertions. """
    # pylint: disable=invalid-name

    def assertFeasible(self, graph, plan, units=None):
        self.assertEqual(validate_plan(graph, plan, units), [])

    def assertMaximal(self, graph, plan):
        allocated = set(plan.assignments)
        for node in graph.nodes:
            if node not in allocated:
                self.assertTrue(graph.adjacency[node] & allocated, node)


def grid(rows, cols, pitch=60.0, **options):
    """ Grid floorplan of 60x60 desks. """
    return generate_synthetic(GridSpec(
        rows, cols, pitch_x=pitch, desk_w=60.0, **options
    ))


def graph_from_edges(nodes, edges):
    return ConstraintGraph.from_edges(nodes, edges)


def path_graph(size):
    return graph_from_edges(
        range(size), [(index, index + 1) for index in range(size - 1)]
    )


def cycle_graph(size):
    return graph_from_edges(
        range(size), [(index, (index + 1) % size) for index in range(size)]
    )


def complete_graph(size):
    return graph_from_edges(range(size), [
        (index_a, index_b)
        for index_a in range(size) for index_b in range(index_a + 1, size)
    ])


def figure_graph():
    return graph_from_edges(FIGURE_NODES, FIGURE_EDGES)


def random_floorplan(rng, size, extent=300.0, side=30.0):
    """ Floorplan of desks placed uniformly at random. """
    centres = rng.uniform(0.0, extent, (size, 2))
    return Floorplan([
        Workspace("ws-%d" % index, BoundingBox(
            (x - side / 2, y - side / 2), (x + side / 2, y + side / 2)
        ))
        for index, (x, y) in enumerate(centres.tolist())
    ])


def random_units(rng, max_units=3, max_headcount=8):
    return [
        BusinessUnit("bu-%d" % index, int(rng.integers(0, max_headcount + 1)))
        for index in range(int(rng.integers(1, max_units + 1)))
    ]


def random_prior(rng, graph, units, share=0.5):
    """ Random prior plan, not necessarily conflict-free. """
    return {
        node: units[int(rng.integers(len(units)))].id
        for node in graph.nodes if rng.random() < share
    }


def seeded_rng(seed=0):
    return default_rng(seed)

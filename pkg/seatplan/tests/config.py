#-------------------------------------------------------------------------------
#
#  Configuration reader tests.
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
from django.core.exceptions import ImproperlyConfigured
from django.test import override_settings
from seatplan.exceptions import UsageError
from seatplan.config import DiscoveryConfigReader, SolverConfigReader
from seatplan.discovery.floorplan import SizeFilter
from seatplan.solvers.plan import SolverConfig


class TestSolverConfigReader(unittest.TestCase):

    def test_defaults(self):
        self.assertEqual(SolverConfigReader().solver_config(), SolverConfig())

    def test_empty_section(self):
        with override_settings(SEATPLAN_SOLVER=None):
            self.assertEqual(SolverConfigReader().restarts, 100)

    def test_settings(self):
        with override_settings(SEATPLAN_SOLVER={
                "distance": "96", "method": "partition", "seed": 5,
        }):
            config = SolverConfigReader().solver_config()
        self.assertEqual(config.d, 96.0)
        self.assertEqual(config.method, "partition")
        self.assertEqual(config.seed, 5)
        self.assertEqual(config.restarts, 100)

    def test_overrides(self):
        config = SolverConfigReader({"distance": 96}).solver_config(
            d=None, seed=3, mode="preserve",
        )
        self.assertEqual((config.d, config.seed, config.mode), (96.0, 3, "preserve"))

    def test_invalid_value(self):
        with self.assertRaises(ImproperlyConfigured):
            SolverConfigReader({"restarts": "many"}).solver_config()
        with self.assertRaises(UsageError):
            SolverConfigReader({"method": "simplex"}).solver_config()

    def test_invalid_section(self):
        with override_settings(SEATPLAN_SOLVER=[72]):
            with self.assertRaises(ImproperlyConfigured):
                SolverConfigReader()


class TestDiscoveryConfigReader(unittest.TestCase):

    def test_defaults(self):
        config = DiscoveryConfigReader()
        self.assertEqual(config.size_filter(), SizeFilter(20, 120))
        self.assertEqual(config.size_filter(max_side=80), SizeFilter(20, 80))
        self.assertEqual(config.rotations, [0, 90, 180, 270])
        self.assertEqual(config.keep_tags, ["WORKSPACE"])
        self.assertEqual(config.threshold, 0.95)

    def test_settings(self):
        with override_settings(SEATPLAN_DISCOVERY={
                "rotations": "0,180", "keep_tags": "DESK,WORKSPACE",
                "max_overlap": 0.5,
        }):
            config = DiscoveryConfigReader()
            self.assertEqual(config.rotations, [0, 180])
            self.assertEqual(config.keep_tags, ["DESK", "WORKSPACE"])
            self.assertEqual(config.max_overlap, 0.5)
            self.assertEqual(config.min_side, 20.0)


if __name__ == "__main__":
    unittest.main()

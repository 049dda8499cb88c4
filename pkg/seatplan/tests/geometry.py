#-------------------------------------------------------------------------------
#
#  Geometry tests.
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
from numpy.random import default_rng
from seatplan.exceptions import GeometryError, InvalidTransformError
from seatplan.geometry import (
    CENTIMETERS, INCHES, BoundingBox, Point, ScaleTransform,
    centroid, distance, rescale, to_inches, unit_transform,
)


class TestBoundingBox(unittest.TestCase):

    def test_valid(self):
        bbox = BoundingBox((10, 20), (70, 50))
        self.assertEqual(bbox.width, 60)
        self.assertEqual(bbox.height, 30)
        self.assertEqual(bbox.as_list(), [10, 20, 70, 50])

    def test_zero_area(self):
        self.assertEqual(BoundingBox((5, 5), (5, 5)).area, 0)

    def test_inverted(self):
        with self.assertRaises(GeometryError):
            BoundingBox((10, 0), (0, 10))

    def test_non_finite(self):
        with self.assertRaises(GeometryError):
            Point(float("nan"), 0)
        with self.assertRaises(GeometryError):
            BoundingBox((0, 0), (float("inf"), 1))

    def test_from_corners(self):
        self.assertEqual(
            BoundingBox.from_corners(70, 50, 10, 20),
            BoundingBox((10, 20), (70, 50)),
        )

    def test_iou(self):
        bbox_a = BoundingBox((0, 0), (10, 10))
        self.assertEqual(bbox_a.iou(bbox_a), 1.0)
        self.assertEqual(bbox_a.iou(BoundingBox((20, 20), (30, 30))), 0.0)
        self.assertAlmostEqual(
            bbox_a.iou(BoundingBox((5, 0), (15, 10))), 50.0 / 150.0
        )


class TestCentroid(unittest.TestCase):

    def test_centroid(self):
        self.assertEqual(centroid(BoundingBox((0, 0), (60, 60))), (30, 30))
        self.assertEqual(centroid(BoundingBox((10, 20), (70, 50))), (40, 35))
        self.assertEqual(centroid(BoundingBox((5, 5), (5, 5))), (5, 5))

    def test_corner_order(self):
        self.assertEqual(
            centroid(BoundingBox.from_corners(70, 50, 10, 20)),
            centroid(BoundingBox.from_corners(10, 20, 70, 50)),
        )


class TestRescale(unittest.TestCase):

    def test_rescale(self):
        self.assertEqual(rescale(Point(100, 200), (1, 1)), (100, 200))
        self.assertEqual(rescale(Point(100, 200), (0.5, 0.5)), (50, 100))
        self.assertEqual(rescale(Point(10, 10), (2, 0.5)), (20, 5))

    def test_invalid_transform(self):
        for factors in [(0, 1), (1, -1), (float("nan"), 1)]:
            with self.assertRaises(InvalidTransformError):
                rescale(Point(1, 1), factors)

    def test_uniform_scale(self):
        self.assertEqual(ScaleTransform(2), (2.0, 2.0))

    def test_units(self):
        self.assertAlmostEqual(to_inches(2.54, CENTIMETERS), 1.0)
        self.assertEqual(to_inches(72, INCHES), 72)
        self.assertAlmostEqual(unit_transform(INCHES, CENTIMETERS).sx, 2.54)
        with self.assertRaises(GeometryError):
            unit_transform("furlongs")


class TestDistance(unittest.TestCase):

    def test_distance(self):
        self.assertEqual(distance(Point(0, 0), Point(0, 0)), 0)
        self.assertEqual(distance(Point(0, 0), Point(3, 4)), 5)
        self.assertAlmostEqual(
            distance(Point(0, 0), Point(60, 60)), 60 * sqrt(2), delta=1e-12
        )

    def test_properties(self):
        rng = default_rng(0)
        for _ in range(200):
            point_a, point_b, point_c = (
                Point(*xy) for xy in rng.uniform(-1e3, 1e3, (3, 2)).tolist()
            )
            self.assertEqual(
                distance(point_a, point_b), distance(point_b, point_a)
            )
            self.assertLessEqual(
                distance(point_a, point_c),
                distance(point_a, point_b) + distance(point_b, point_c) + 1e-9
            )
            scale = float(rng.uniform(0.1, 10))
            self.assertAlmostEqual(
                distance(rescale(point_a, (scale, scale)),
                         rescale(point_b, (scale, scale))),
                scale * distance(point_a, point_b), delta=1e-9 * scale * 3e3,
            )


if __name__ == "__main__":
    unittest.main()

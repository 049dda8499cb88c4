#-------------------------------------------------------------------------------
#
#  Floorplan geometry - points, bounding boxes, rescaling and distances
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

from collections import namedtuple
from math import hypot, isfinite

from seatplan.exceptions import GeometryError, InvalidTransformError

INCHES = "inches"
CENTIMETERS = "centimeters"

# conversion factors to the canonical internal unit
UNIT_TO_INCHES = {
    INCHES: 1.0,
    CENTIMETERS: 1.0 / 2.54,
}

# CLI unit system labels
UNIT_SYSTEMS = {
    "imperial": INCHES,
    "metric": CENTIMETERS,
}


class Point(namedtuple("Point", ["x", "y"])):
    """ Point in the floorplan coordinates. """
    __slots__ = ()

    def __new__(cls, x, y):
        x, y = float(x), float(y)
        if not (isfinite(x) and isfinite(y)):
            raise GeometryError(
                "Invalid point coordinates (%r, %r)." % (x, y)
            )
        return super().__new__(cls, x, y)


class BoundingBox(namedtuple("BoundingBox", ["min", "max"])):
    """ Axis-aligned bounding box. Zero-area boxes are allowed. """
    __slots__ = ()

    def __new__(cls, min_, max_):
        min_, max_ = Point(*min_), Point(*max_)
        if min_.x > max_.x or min_.y > max_.y:
            raise GeometryError(
                "Invalid bounding box (%g, %g)-(%g, %g)."
                % (min_.x, min_.y, max_.x, max_.y)
            )
        return super().__new__(cls, min_, max_)

    @classmethod
    def from_corners(cls, x0, y0, x1, y1):
        """ Create bounding box from two opposite corners given in any order.
        """
        return cls((min(x0, x1), min(y0, y1)), (max(x0, x1), max(y0, y1)))

    @classmethod
    def from_points(cls, points):
        """ Get the bounding box of a non-empty sequence of (x, y) points. """
        points = list(points)
        if not points:
            raise GeometryError("Cannot bound an empty point sequence.")
        xs = [float(x) for x, _ in points]
        ys = [float(y) for _, y in points]
        return cls((min(xs), min(ys)), (max(xs), max(ys)))

    @property
    def width(self):
        return self.max.x - self.min.x

    @property
    def height(self):
        return self.max.y - self.min.y

    @property
    def area(self):
        return self.width * self.height

    def as_list(self):
        """ Get the box as [x0, y0, x1, y1] list. """
        return [self.min.x, self.min.y, self.max.x, self.max.y]

    def intersection_area(self, other):
        width = min(self.max.x, other.max.x) - max(self.min.x, other.min.x)
        height = min(self.max.y, other.max.y) - max(self.min.y, other.min.y)
        return max(0.0, width) * max(0.0, height)

    def iou(self, other):
        """ Intersection over union of two boxes (0 for two empty boxes). """
        intersection = self.intersection_area(other)
        union = self.area + other.area - intersection
        return intersection / union if union > 0 else 0.0


class ScaleTransform(namedtuple("ScaleTransform", ["sx", "sy"])):
    """ Linear rescaling along the x and y axes (units per pixel). """
    __slots__ = ()

    def __new__(cls, sx=1.0, sy=None):
        sx = float(sx)
        sy = sx if sy is None else float(sy)
        for value in (sx, sy):
            if not (isfinite(value) and value > 0):
                raise InvalidTransformError(
                    "Invalid scale factors (%r, %r)." % (sx, sy)
                )
        return super().__new__(cls, sx, sy)


IDENTITY = ScaleTransform(1.0, 1.0)


def centroid(bbox):
    """ Get the centre of a bounding box. """
    return Point(
        0.5 * (bbox.min.x + bbox.max.x),
        0.5 * (bbox.min.y + bbox.max.y),
    )


def rescale(point, transform):
    """ Rescale point by the given scale transform. """
    transform = ScaleTransform(*transform)
    return Point(point.x * transform.sx, point.y * transform.sy)


def rescale_bbox(bbox, transform):
    """ Rescale both corners of a bounding box. """
    return BoundingBox(rescale(bbox.min, transform), rescale(bbox.max, transform))


def distance(point_a, point_b):
    """ Euclidean distance of two points. """
    return hypot(point_a.x - point_b.x, point_a.y - point_b.y)


def unit_transform(units_from, units_to=INCHES):
    """ Get scale transform converting lengths between two length units. """
    try:
        factor = UNIT_TO_INCHES[units_from] / UNIT_TO_INCHES[units_to]
    except KeyError as error:
        raise GeometryError("Unknown length unit %s!" % error) from None
    return ScaleTransform(factor, factor)


def to_inches(value, units=INCHES):
    """ Convert length to inches. """
    return value * unit_transform(units, INCHES).sx

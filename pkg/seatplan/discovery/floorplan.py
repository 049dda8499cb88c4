#-------------------------------------------------------------------------------
#
#  Workspaces and floorplans
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
from collections import namedtuple

from seatplan.exceptions import (
    DuplicateIdError, EmptyFloorplanError, GeometryError,
    InvalidDocumentError, UnknownWorkspaceError,
)
from seatplan.geometry import (
    INCHES, UNIT_TO_INCHES, BoundingBox, centroid, rescale_bbox,
    unit_transform,
)

SOURCE_VECTOR = "vector"
SOURCE_RASTER = "raster"
SOURCE_METADATA = "metadata"
SOURCE_SYNTHETIC = "synthetic"
SOURCES = (SOURCE_VECTOR, SOURCE_RASTER, SOURCE_METADATA, SOURCE_SYNTHETIC)

WORKSPACE_TAG = "WORKSPACE"

JSON_OPTS = {
    'sort_keys': False,
    'indent': 2,
    'separators': (',', ': '),
}


class Workspace(namedtuple("Workspace", ["id", "bbox", "tag"])):
    """ Single workspace (seat or desk) of a floorplan. """
    __slots__ = ()

    def __new__(cls, id, bbox, tag=None):
        # pylint: disable=redefined-builtin
        if not isinstance(bbox, BoundingBox):
            bbox = BoundingBox.from_corners(*bbox)
        return super().__new__(cls, id, bbox, tag)

    @property
    def centroid(self):
        return centroid(self.bbox)

    def rescaled(self, transform):
        return Workspace(self.id, rescale_bbox(self.bbox, transform), self.tag)

    def to_dict(self):
        point = self.centroid
        return {
            "id": self.id,
            "bbox": self.bbox.as_list(),
            "centroid": [point.x, point.y],
            "tag": self.tag,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(data["id"], data["bbox"], data.get("tag"))


class SizeFilter(namedtuple("SizeFilter", ["min_side", "max_side"])):
    """ Accepted range of the bounding-box sides of a likely workspace. """
    __slots__ = ()

    def __new__(cls, min_side, max_side):
        min_side, max_side = float(min_side), float(max_side)
        if not 0 < min_side <= max_side:
            raise GeometryError(
                "Invalid size filter [%g, %g]." % (min_side, max_side)
            )
        return super().__new__(cls, min_side, max_side)

    def accepts(self, bbox):
        return (
            self.min_side <= bbox.width <= self.max_side and
            self.min_side <= bbox.height <= self.max_side
        )


DEFAULT_SIZE_FILTER = SizeFilter(20.0, 120.0)


class Floorplan():
    """ Ordered collection of workspaces sharing the same length units.

    The optional background is a dictionary holding a reference to the
    original document (`href`) and its extent (`bbox`) in the floorplan units.
    """

    def __init__(self, workspaces, units=INCHES, source=SOURCE_SYNTHETIC,
                 background=None):
        self.workspaces = list(workspaces)
        if not self.workspaces:
            raise EmptyFloorplanError()
        if units not in UNIT_TO_INCHES:
            raise GeometryError("Unknown length unit %r!" % units)
        self.units = units
        self.source = source
        self.background = background
        self._index = {}
        for workspace in self.workspaces:
            if workspace.id in self._index:
                raise DuplicateIdError(workspace.id)
            self._index[workspace.id] = workspace

    def __len__(self):
        return len(self.workspaces)

    def __iter__(self):
        return iter(self.workspaces)

    def __contains__(self, identifier):
        return identifier in self._index

    def __getitem__(self, identifier):
        try:
            return self._index[identifier]
        except KeyError:
            raise UnknownWorkspaceError(identifier) from None

    @property
    def ids(self):
        return [workspace.id for workspace in self.workspaces]

    def extent(self):
        """ Get bounding box of all workspaces (and the background). """
        boxes = [workspace.bbox for workspace in self.workspaces]
        if self.background and self.background.get("bbox"):
            boxes.append(BoundingBox.from_corners(*self.background["bbox"]))
        return BoundingBox.from_points(
            [corner for box in boxes for corner in box]
        )

    def to_units(self, units):
        """ Get copy of the floorplan converted to the given length units. """
        if units == self.units:
            return self
        transform = unit_transform(self.units, units)
        background = self.background
        if background and background.get("bbox"):
            background = dict(
                background, bbox=rescale_bbox(
                    BoundingBox.from_corners(*background["bbox"]), transform
                ).as_list()
            )
        return Floorplan(
            [workspace.rescaled(transform) for workspace in self.workspaces],
            units=units, source=self.source, background=background,
        )

    def to_dict(self):
        data = {
            "units": self.units,
            "source": self.source,
            "workspaces": [
                workspace.to_dict() for workspace in self.workspaces
            ],
        }
        if self.background:
            data["background"] = self.background
        return data

    def to_json(self):
        return json.dumps(self.to_dict(), **JSON_OPTS)

    @classmethod
    def from_dict(cls, data):
        try:
            workspaces = [
                Workspace.from_dict(item) for item in data["workspaces"]
            ]
        except (KeyError, TypeError, ValueError) as error:
            raise InvalidDocumentError(
                "Invalid workspace document! %s" % error
            ) from None
        return cls(
            workspaces,
            units=data.get("units", INCHES),
            source=data.get("source", SOURCE_SYNTHETIC),
            background=data.get("background"),
        )

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except ValueError as error:
            raise InvalidDocumentError(
                "Invalid workspace document! %s" % error
            ) from None
        return cls.from_dict(data)

    def __repr__(self):
        return "<Floorplan %s: %d workspaces in %s>" % (
            self.source, len(self.workspaces), self.units
        )


def load_floorplan(path):
    """ Load floorplan from a workspace JSON file. """
    with open(path, encoding="utf-8") as file_:
        return Floorplan.from_json(file_.read())

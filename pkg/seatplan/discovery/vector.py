#-------------------------------------------------------------------------------
#
#  Workspace discovery in vector (SVG) floorplan documents
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

import os
import re
import logging
from xml.etree import ElementTree

from seatplan.exceptions import EmptyFloorplanError, VectorParseError
from seatplan.geometry import (
    INCHES, IDENTITY, BoundingBox, rescale_bbox,
)
from seatplan.discovery.floorplan import (
    DEFAULT_SIZE_FILTER, SOURCE_VECTOR, Floorplan, Workspace,
)

logger = logging.getLogger(__name__)

SVG_NS = "http://www.w3.org/2000/svg"

# sub-trees which are not rendered directly
SKIPPED_ELEMENTS = {
    "defs", "clipPath", "mask", "marker", "pattern", "symbol", "title",
    "desc", "metadata", "style", "script",
}

RE_FLOAT = r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?"
RE_NUMBER = re.compile(RE_FLOAT)
RE_LENGTH = re.compile(r"^\s*(%s)\s*(px)?\s*$" % RE_FLOAT)
RE_TRANSFORM = re.compile(r"\s*([A-Za-z]+)\s*\(([^)]*)\)\s*,?")
RE_PATH_TOKEN = re.compile(r"([MmLlHhVvCcSsQqTtAaZz])|(%s)|([^\s,])" % RE_FLOAT)

# number of arguments of the path commands
PATH_ARGUMENTS = {
    "M": 2, "L": 2, "T": 2, "H": 1, "V": 1, "C": 6, "S": 4, "Q": 4, "A": 7,
    "Z": 0,
}


def parse_vector(document, size_filter=DEFAULT_SIZE_FILTER,
                 transform=IDENTITY, units=INCHES, background=None):
    """ Extract workspaces from a vector floorplan document.

    Every closed rectangle, polygon, polyline or (sub-)path is a candidate.
    Candidates are numbered in document order and the ones whose rescaled
    bounding box passes the size filter become workspaces 'ws-<number>'.
    Curved segments are bounded by their control polygons.

    The document is either the XML content (str or bytes), a file-like
    object or a path to the file.
    """
    root, href = _read_document(document)
    if background is None:
        background = href

    workspaces = []
    candidates = 0
    for points, tag in _iter_closed_shapes(root):
        bbox = rescale_bbox(BoundingBox.from_points(points), transform)
        if size_filter is None or size_filter.accepts(bbox):
            workspaces.append(Workspace("ws-%d" % candidates, bbox, tag))
        candidates += 1

    logger.debug(
        "%d of %d closed shapes accepted as workspaces.",
        len(workspaces), candidates
    )

    if not workspaces:
        raise EmptyFloorplanError(
            "None of %d closed shapes passed the size filter." % candidates
        )

    return Floorplan(
        workspaces, units=units, source=SOURCE_VECTOR,
        background=_get_background(root, background, transform),
    )


def _read_document(document):
    href = None
    if hasattr(document, "read"):
        document = document.read()
    elif isinstance(document, os.PathLike) or (
            isinstance(document, str) and not document.lstrip().startswith("<")
    ):
        href = os.fspath(document)
        try:
            with open(href, "rb") as file_:
                document = file_.read()
        except OSError as error:
            raise VectorParseError(
                "Failed to read %s! %s" % (href, error)
            ) from None
    try:
        return ElementTree.fromstring(document), href
    except ElementTree.ParseError as error:
        raise VectorParseError("Malformed vector document! %s" % error) from None


def _get_background(root, href, transform):
    if href is None:
        return None
    background = {"href": href}
    extent = _get_document_extent(root)
    if extent is not None:
        background["bbox"] = rescale_bbox(extent, transform).as_list()
    return background


def _get_document_extent(root):
    view_box = root.get("viewBox")
    if view_box:
        values = [float(v) for v in RE_NUMBER.findall(view_box)]
        if len(values) == 4 and values[2] >= 0 and values[3] >= 0:
            x0, y0, width, height = values
            return BoundingBox((x0, y0), (x0 + width, y0 + height))
    try:
        width = _parse_length(root.get("width"))
        height = _parse_length(root.get("height"))
    except VectorParseError:
        return None
    return BoundingBox((0, 0), (width, height))


def _local_name(tag):
    return tag.rpartition("}")[2] if isinstance(tag, str) else None


def _iter_closed_shapes(element, offset=(0.0, 0.0)):
    """ Yield (points, tag) tuples of the closed shapes in document order. """
    name = _local_name(element.tag)
    if name in SKIPPED_ELEMENTS or name is None:
        return

    offset = _apply_transform(element.get("transform"), offset)
    tag = element.get("data-tag")

    if name == "rect":
        points = _rect_points(element)
        yield _translate(points, offset), tag
    elif name == "polygon":
        points = _parse_points(element.get("points", ""))
        if len(points) >= 3:
            yield _translate(points, offset), tag
    elif name == "polyline":
        points = _parse_points(element.get("points", ""))
        if len(points) >= 3 and points[0] == points[-1]:
            yield _translate(points, offset), tag
    elif name == "path":
        for points, closed in _parse_path(element.get("d", "")):
            if closed:
                yield _translate(points, offset), tag

    for child in element:
        yield from _iter_closed_shapes(child, offset)


def _translate(points, offset):
    dx, dy = offset
    return [(x + dx, y + dy) for x, y in points]


def _apply_transform(value, offset):
    """ Accumulate translation. Other transformations are not supported. """
    if not value:
        return offset
    dx, dy = offset
    position = 0
    for match in RE_TRANSFORM.finditer(value):
        if match.start() != position:
            break
        position = match.end()
        operation, arguments = match.groups()
        arguments = [float(v) for v in RE_NUMBER.findall(arguments)]
        if operation != "translate" or len(arguments) not in (1, 2):
            raise VectorParseError(
                "Unsupported transformation %r!" % match.group(0).strip()
            )
        dx += arguments[0]
        dy += arguments[1] if len(arguments) == 2 else 0.0
    if value[position:].strip():
        raise VectorParseError("Invalid transformation %r!" % value)
    return dx, dy


def _parse_length(value, default=None):
    if value is None:
        if default is None:
            raise VectorParseError("Missing length attribute!")
        return default
    match = RE_LENGTH.match(value)
    if not match:
        raise VectorParseError("Unsupported length %r!" % value)
    return float(match.group(1))


def _rect_points(element):
    x0 = _parse_length(element.get("x"), 0.0)
    y0 = _parse_length(element.get("y"), 0.0)
    width = _parse_length(element.get("width"))
    height = _parse_length(element.get("height"))
    if width < 0 or height < 0:
        raise VectorParseError("Negative rectangle size!")
    return [(x0, y0), (x0 + width, y0 + height)]


def _parse_points(value):
    values = [float(v) for v in RE_NUMBER.findall(value)]
    if len(values) % 2:
        raise VectorParseError("Odd number of point coordinates!")
    return list(zip(values[0::2], values[1::2]))


def _tokenize_path(data):
    for command, number, invalid in RE_PATH_TOKEN.findall(data):
        if invalid:
            raise VectorParseError("Invalid path data %r!" % invalid)
        yield command or float(number)


def _parse_path(data):
    """ Split path data to sub-paths.

    Returns list of (points, closed) pairs where points include the explicit
    control points of the curved segments.
    """
    # pylint: disable=too-many-branches
    subpaths = []
    points, closed = [], False
    current = start = (0.0, 0.0)
    command = None
    tokens = list(_tokenize_path(data))
    index = 0

    def _finish():
        if points:
            subpaths.append((list(points), closed or (
                len(points) > 2 and points[0] == points[-1]
            )))

    while index < len(tokens):
        if isinstance(tokens[index], str):
            command = tokens[index]
            index += 1
        elif command is None:
            raise VectorParseError("Missing path command!")

        upper = command.upper()
        relative = command != upper
        size = PATH_ARGUMENTS[upper]
        args = tokens[index:index + size]
        if len(args) != size or any(isinstance(v, str) for v in args):
            raise VectorParseError("Invalid arguments of the %r command!" % command)
        index += size
        x0, y0 = current if relative else (0.0, 0.0)

        if upper == "M":
            _finish()
            current = start = (x0 + args[0], y0 + args[1])
            points, closed = [current], False
            # subsequent coordinate pairs are implicit line-to commands
            command = "l" if relative else "L"
        elif upper == "Z":
            closed = True
            _finish()
            current = start
            points, closed = [], False
            command = None
        else:
            if not points:
                points = [current]
            if upper == "H":
                current = (x0 + args[0], current[1])
                new_points = [current]
            elif upper == "V":
                current = (current[0], y0 + args[0])
                new_points = [current]
            elif upper == "A":
                # arcs are bounded by their end points
                current = (x0 + args[5], y0 + args[6])
                new_points = [current]
            else:
                new_points = [
                    (x0 + args[i], y0 + args[i + 1])
                    for i in range(0, size, 2)
                ]
                current = new_points[-1]
            points.extend(new_points)

    _finish()
    return subpaths

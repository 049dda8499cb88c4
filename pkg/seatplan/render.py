#-------------------------------------------------------------------------------
#
#  Rendering of floorplans and allocation plans
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
from xml.etree import ElementTree

from seatplan.util import sorted_ids

logger = logging.getLogger(__name__)

SVG_NS = "http://www.w3.org/2000/svg"
XLINK_NS = "http://www.w3.org/1999/xlink"

ALLOCATED_COLOR = "#1f77b4"
UNALLOCATED_COLOR = "#ffb6c1"
NEUTRAL_COLOR = "#ffffff"
STROKE_COLOR = "#000000"

UNIT_COLORMAP = "tab10"


def unit_colors(unit_ids):
    """ Get distinct colours of the business units (cycling 'tab10'). """
    # pylint: disable=import-outside-toplevel
    from matplotlib import colormaps
    from matplotlib.colors import to_hex
    colormap = colormaps[UNIT_COLORMAP]
    return {
        unit_id: to_hex(colormap(index % colormap.N))
        for index, unit_id in enumerate(unit_ids)
    }


def render_allocation(floorplan, plan, units=None, color_units=False):
    """ Render the allocation plan as an SVG document.

    Allocated workspaces are blue, unallocated pink. With `color_units`
    the allocated workspaces are coloured by their business unit instead.
    """
    for workspace_id in plan.assignments:
        floorplan[workspace_id]  # pylint: disable=pointless-statement

    if color_units:
        unit_ids = (
            [unit.id for unit in units] if units is not None else
            sorted(set(plan.assignments.values()), key=str)
        )
        colors = unit_colors(unit_ids)
    else:
        colors = {}

    def _style(workspace):
        unit_id = plan.assignments.get(workspace.id)
        if unit_id is None:
            return UNALLOCATED_COLOR, {"class": "unallocated"}
        return colors.get(unit_id, ALLOCATED_COLOR), {
            "class": "allocated", "data-unit": str(unit_id),
        }

    return _render(floorplan, _style)


def render_floorplan(floorplan):
    """ Render the workspaces of a floorplan as an SVG document. """
    return _render(floorplan, lambda workspace: (NEUTRAL_COLOR, {}))


def _render(floorplan, style):
    extent = floorplan.extent()
    root = ElementTree.Element("svg", {
        "xmlns": SVG_NS,
        "xmlns:xlink": XLINK_NS,
        "version": "1.1",
        "width": _number(extent.width),
        "height": _number(extent.height),
        "viewBox": " ".join(_number(value) for value in (
            extent.min.x, extent.min.y, extent.width, extent.height
        )),
        "data-units": floorplan.units,
    })

    background = floorplan.background
    if background and background.get("href") and background.get("bbox"):
        x0, y0, x1, y1 = background["bbox"]
        ElementTree.SubElement(root, "image", {
            "xlink:href": background["href"],
            "x": _number(x0), "y": _number(y0),
            "width": _number(x1 - x0), "height": _number(y1 - y0),
        })

    group = ElementTree.SubElement(root, "g", {"id": "workspaces"})
    for workspace_id in sorted_ids(floorplan.ids):
        workspace = floorplan[workspace_id]
        fill, attributes = style(workspace)
        bbox = workspace.bbox
        element = ElementTree.SubElement(group, "rect", {
            "id": str(workspace.id),
            "x": _number(bbox.min.x), "y": _number(bbox.min.y),
            "width": _number(bbox.width), "height": _number(bbox.height),
            "fill": fill, "stroke": STROKE_COLOR,
        })
        for key, value in attributes.items():
            element.set(key, value)
        if workspace.tag:
            element.set("data-tag", str(workspace.tag))

    ElementTree.indent(root)
    document = ElementTree.tostring(root, encoding="unicode")

    logger.debug("%d workspaces rendered.", len(floorplan))

    return '<?xml version="1.0" encoding="UTF-8"?>\n%s\n' % document


def _number(value):
    return format(float(value), ".10g")

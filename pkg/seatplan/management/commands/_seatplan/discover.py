#-------------------------------------------------------------------------------
#
#  Seatplan command - workspace discovery
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

from seatplan.config import DiscoveryConfigReader
from seatplan.exceptions import UsageError
from seatplan.geometry import IDENTITY, UNIT_SYSTEMS, BoundingBox, rescale_bbox
from seatplan.util import parse_list
from seatplan.discovery.vector import parse_vector
from seatplan.discovery.metadata import load_metadata, read_metadata_csv
from seatplan.discovery.raster import (
    detections_to_floorplan, load_gray_image, match_template, suppress,
)
from .._common import Subcommand
from .common import library_errors, scale_transform, write_output

SOURCE_TYPES = ("vector", "raster", "csv")


class DiscoverSubcommand(Subcommand):
    name = "discover"
    help = "Discover workspaces in a floorplan."
    description = (
        "Extract workspaces from a vector floorplan document, a raster "
        "floorplan image (template matching) or a CSV metadata table and "
        "write them as a workspace JSON document."
    )

    def add_arguments(self, parser):
        parser.add_argument("source_type", choices=SOURCE_TYPES)
        parser.add_argument("input", help="Input file.")
        parser.add_argument(
            "-o", "--out", default=None,
            help="Output workspace JSON file. Defaults to stdout."
        )
        parser.add_argument(
            "--floorplan-units", choices=tuple(UNIT_SYSTEMS),
            default="imperial", help=(
                "Length units of the rescaled floorplan coordinates. "
                "Defaults to imperial (inches)."
            )
        )
        parser.add_argument(
            "--scale", type=scale_transform, default=IDENTITY, help=(
                "Floorplan units per document unit or pixel as SX[,SY]. "
                "Defaults to 1."
            )
        )
        parser.add_argument(
            "--min-side", type=float, default=None,
            help="Minimum workspace side (floorplan units)."
        )
        parser.add_argument(
            "--max-side", type=float, default=None,
            help="Maximum workspace side (floorplan units)."
        )
        parser.add_argument(
            "-t", "--template", dest="templates", action="append",
            default=[], help="Raster workspace template (repeatable)."
        )
        parser.add_argument(
            "--threshold", type=float, default=None,
            help="Minimum normalized cross-correlation of a match."
        )
        parser.add_argument(
            "--max-overlap", type=float, default=None,
            help="Maximum intersection over union of two detections."
        )
        parser.add_argument(
            "--rotations", type=lambda v: parse_list(v, int), default=None,
            help="Comma-separated template rotations in degrees."
        )
        parser.add_argument(
            "--workers", type=int, default=None,
            help="Number of template matching threads."
        )
        parser.add_argument(
            "--keep-tags", type=parse_list, default=None,
            help="Comma-separated workspace tags of the metadata rows."
        )

    def handle(self, source_type, input, **kwargs):
        # pylint: disable=redefined-builtin
        config = DiscoveryConfigReader()
        units = UNIT_SYSTEMS[kwargs["floorplan_units"]]

        with library_errors():
            size_filter = config.size_filter(
                kwargs["min_side"], kwargs["max_side"]
            )
            if source_type == "vector":
                floorplan = parse_vector(
                    input, size_filter, kwargs["scale"], units
                )
            elif source_type == "raster":
                floorplan = self._discover_raster(
                    input, kwargs, config, units
                )
            else:
                floorplan = load_metadata(
                    read_metadata_csv(input),
                    _default(kwargs["keep_tags"], config.keep_tags),
                    units,
                )

        write_output(floorplan.to_json(), kwargs["out"])
        self.info("%d workspaces discovered in %s.", len(floorplan), input)

    def _discover_raster(self, path, kwargs, config, units):
        if not kwargs["templates"]:
            raise UsageError("At least one raster template is required!")

        image = load_gray_image(path)
        detections = []
        for template_path in kwargs["templates"]:
            detections.extend(match_template(
                image, load_gray_image(template_path),
                threshold=_default(kwargs["threshold"], config.threshold),
                rotations=_default(kwargs["rotations"], config.rotations),
                name=template_path, workers=kwargs["workers"],
            ))
        self.logger.info("%d matching windows found.", len(detections))
        detections = suppress(
            detections, _default(kwargs["max_overlap"], config.max_overlap),
        )
        background = {
            "href": path,
            "bbox": rescale_bbox(
                BoundingBox((0, 0), (image.width, image.height)),
                kwargs["scale"],
            ).as_list(),
        }
        return detections_to_floorplan(
            detections, kwargs["scale"], units, background
        )


def _default(value, default):
    return default if value is None else value

#-------------------------------------------------------------------------------
#
#  Seatplan command - synthetic floorplan generator
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

from seatplan.render import render_floorplan
from seatplan.discovery.synthetic import GridSpec, generate_synthetic
from .._common import Subcommand
from .common import library_errors, write_output


class GenerateSubcommand(Subcommand):
    name = "generate"
    help = "Generate synthetic grid floorplan."
    description = (
        "Generate a seeded grid of desks and write it as a workspace JSON "
        "document and optionally as an SVG document. Lengths are in inches."
    )

    def add_arguments(self, parser):
        parser.add_argument("--rows", type=int, required=True)
        parser.add_argument("--cols", type=int, required=True)
        parser.add_argument("--pitch-x", type=float, default=60.0)
        parser.add_argument("--pitch-y", type=float, default=None)
        parser.add_argument("--desk-width", type=float, default=60.0)
        parser.add_argument("--desk-height", type=float, default=None)
        parser.add_argument(
            "--aisle-every", type=int, default=0,
            help="Insert an aisle after every N columns (0 = no aisles)."
        )
        parser.add_argument("--aisle-width", type=float, default=0.0)
        parser.add_argument(
            "--row-aisle-every", type=int, default=0,
            help="Insert an aisle after every N rows (0 = no aisles)."
        )
        parser.add_argument("--row-aisle-width", type=float, default=0.0)
        parser.add_argument(
            "--jitter", type=float, default=0.0,
            help="Maximum random displacement of a desk on each axis."
        )
        parser.add_argument(
            "--vacancy", type=float, default=0.0,
            help="Probability that a desk is left out."
        )
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument(
            "-o", "--out", default=None,
            help="Output workspace JSON file. Defaults to stdout."
        )
        parser.add_argument(
            "--svg", default=None, help="Output SVG document."
        )

    def handle(self, **kwargs):
        with library_errors():
            spec = GridSpec(
                rows=kwargs["rows"],
                cols=kwargs["cols"],
                pitch_x=kwargs["pitch_x"],
                pitch_y=kwargs["pitch_y"],
                desk_w=kwargs["desk_width"],
                desk_h=kwargs["desk_height"],
                aisle_every=kwargs["aisle_every"],
                aisle_width=kwargs["aisle_width"],
                row_aisle_every=kwargs["row_aisle_every"],
                row_aisle_width=kwargs["row_aisle_width"],
                jitter=kwargs["jitter"],
                vacancy=kwargs["vacancy"],
            )
            floorplan = generate_synthetic(spec, kwargs["seed"])

        write_output(floorplan.to_json(), kwargs["out"])
        if kwargs["svg"]:
            write_output(render_floorplan(floorplan), kwargs["svg"])
        self.info("%d workspaces generated.", len(floorplan))

#-------------------------------------------------------------------------------
#
#  Seatplan command - common utilities
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

import sys
from contextlib import contextmanager
from django.core.management.base import CommandError

from seatplan.exceptions import SeatplanError
from seatplan.geometry import UNIT_SYSTEMS, ScaleTransform, to_inches
from seatplan.util import parse_list
from seatplan.discovery.floorplan import Floorplan, load_floorplan


@contextmanager
def library_errors():
    """ Convert library errors to command errors with the matching exit
    code.
    """
    try:
        yield
    except SeatplanError as error:
        raise CommandError(str(error), returncode=error.exit_code) from error


def read_floorplan(path):
    """ Read workspace JSON document from a file or from stdin ('-'). """
    if path == "-":
        return Floorplan.from_json(sys.stdin.read())
    try:
        return load_floorplan(path)
    except OSError as error:
        raise CommandError(
            "Failed to read %s! %s" % (path, error), returncode=3,
        ) from None


def write_output(text, path=None):
    """ Write text to the given file or to stdout. """
    if path is None or path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    with open(path, "w", encoding="utf-8") as file_:
        file_.write(text)
        if not text.endswith("\n"):
            file_.write("\n")


def scale_transform(value):
    """ Parse 'SX[,SY]' scale factors. """
    factors = parse_list(value, float)
    if len(factors) not in (1, 2):
        raise ValueError("Expected one or two scale factors!")
    try:
        return ScaleTransform(*factors)
    except SeatplanError as error:
        raise ValueError(str(error)) from None


def distance_in_inches(value, unit_system):
    return to_inches(value, UNIT_SYSTEMS[unit_system])


class DistanceArgumentsMixIn():
    """ Social-distance related CLI options. """

    @staticmethod
    def add_units_argument(parser):
        parser.add_argument(
            "--units", dest="unit_system", choices=tuple(UNIT_SYSTEMS),
            default="imperial", help=(
                "Units of the social distance, inches (imperial) or "
                "centimeters (metric). Defaults to imperial."
            )
        )

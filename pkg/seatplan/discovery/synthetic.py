#-------------------------------------------------------------------------------
#
#  Seeded synthetic floorplan generator
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

import logging
from collections import namedtuple
from math import isfinite
from numpy.random import default_rng

from seatplan.exceptions import InvalidSpecError
from seatplan.geometry import INCHES, BoundingBox
from seatplan.util import normalize_seed
from seatplan.discovery.floorplan import (
    SOURCE_SYNTHETIC, WORKSPACE_TAG, Floorplan, Workspace,
)

logger = logging.getLogger(__name__)


class GridSpec(namedtuple("GridSpec", [
    "rows", "cols", "pitch_x", "pitch_y", "desk_w", "desk_h",
    "aisle_every", "aisle_width", "row_aisle_every", "row_aisle_width",
    "jitter", "vacancy",
])):
    """ Regular desk grid.

    An extra gap of `aisle_width` is inserted after every `aisle_every`
    columns (and `row_aisle_width` after every `row_aisle_every` rows).
    Zero `*_every` disables the aisles. `jitter` is the maximum absolute
    per-desk displacement on each axis and `vacancy` the probability that
    a desk is left out.
    """
    __slots__ = ()

    def __new__(cls, rows, cols, pitch_x=60.0, pitch_y=None, desk_w=60.0,
                desk_h=None, aisle_every=0, aisle_width=0.0,
                row_aisle_every=0, row_aisle_width=0.0, jitter=0.0,
                vacancy=0.0):
        pitch_y = pitch_x if pitch_y is None else pitch_y
        desk_h = desk_w if desk_h is None else desk_h
        try:
            spec = super().__new__(
                cls, int(rows), int(cols), float(pitch_x), float(pitch_y),
                float(desk_w), float(desk_h), int(aisle_every),
                float(aisle_width), int(row_aisle_every),
                float(row_aisle_width), float(jitter), float(vacancy),
            )
        except (TypeError, ValueError) as error:
            raise InvalidSpecError("Invalid grid spec! %s" % error) from None
        spec._validate()
        return spec

    def _validate(self):
        def _check(condition, message):
            if not condition:
                raise InvalidSpecError("Invalid grid spec! %s" % message)

        _check(all(isfinite(value) for value in self[2:]),
               "Non-finite parameter.")
        _check(self.rows >= 1 and self.cols >= 1,
               "At least one row and one column required.")
        _check(self.desk_w > 0 and self.desk_h > 0,
               "Desk sides must be positive.")
        _check(self.pitch_x >= self.desk_w and self.pitch_y >= self.desk_h,
               "Pitch must not be smaller than the desk.")
        _check(self.aisle_every >= 0 and self.row_aisle_every >= 0,
               "Negative aisle period.")
        _check(self.aisle_width >= 0 and self.row_aisle_width >= 0,
               "Negative aisle width.")
        _check(self.jitter >= 0, "Negative jitter.")
        _check(0 <= self.vacancy < 1, "Vacancy must be within [0, 1).")

    def column_offset(self, col):
        offset = self.desk_w / 2 + col * self.pitch_x
        if self.aisle_every:
            offset += (col // self.aisle_every) * self.aisle_width
        return offset

    def row_offset(self, row):
        offset = self.desk_h / 2 + row * self.pitch_y
        if self.row_aisle_every:
            offset += (row // self.row_aisle_every) * self.row_aisle_width
        return offset


def generate_synthetic(spec, seed=0, units=INCHES):
    """ Generate a grid floorplan. Workspaces 'r<row>c<col>' are listed
    row by row. The seed drives the jitter and the vacancies only.
    """
    if not isinstance(spec, GridSpec):
        spec = GridSpec(**spec)

    rng = default_rng(normalize_seed(seed))
    size = (spec.rows, spec.cols)
    offsets = (
        rng.uniform(-spec.jitter, spec.jitter, size + (2,))
        if spec.jitter > 0 else None
    )
    vacant = (
        rng.random(size) < spec.vacancy if spec.vacancy > 0 else None
    )

    half_w, half_h = spec.desk_w / 2, spec.desk_h / 2
    workspaces = []
    for row in range(spec.rows):
        y_centre = spec.row_offset(row)
        for col in range(spec.cols):
            if vacant is not None and vacant[row, col]:
                continue
            x_centre = spec.column_offset(col)
            if offsets is not None:
                x_centre += float(offsets[row, col, 0])
                y_centre_desk = y_centre + float(offsets[row, col, 1])
            else:
                y_centre_desk = y_centre
            workspaces.append(Workspace(
                "r%dc%d" % (row, col),
                BoundingBox(
                    (x_centre - half_w, y_centre_desk - half_h),
                    (x_centre + half_w, y_centre_desk + half_h),
                ),
                WORKSPACE_TAG,
            ))

    logger.debug(
        "%d synthetic workspaces generated (%dx%d grid, seed %s).",
        len(workspaces), spec.rows, spec.cols, seed,
    )

    return Floorplan(workspaces, units=units, source=SOURCE_SYNTHETIC)

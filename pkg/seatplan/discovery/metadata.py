#-------------------------------------------------------------------------------
#
#  Workspaces from the tabular metadata of a space management system
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

import csv
import logging
from math import isfinite

from seatplan.exceptions import (
    DuplicateIdError, EmptyFloorplanError, GeometryError, MetadataRowError,
)
from seatplan.geometry import INCHES, BoundingBox
from seatplan.discovery.floorplan import (
    SOURCE_METADATA, WORKSPACE_TAG, Floorplan, Workspace,
)

logger = logging.getLogger(__name__)

COLUMNS = ("id", "x", "y", "width", "height", "tag")


def read_metadata_csv(source):
    """ Read metadata rows from a UTF-8 comma-separated file with a header.

    The source is either a path or an open text file.
    """
    if hasattr(source, "read"):
        return _read_rows(source)
    with open(source, encoding="utf-8", newline="") as file_:
        return _read_rows(file_)


def _read_rows(file_):
    reader = csv.DictReader(file_)
    missing = set(COLUMNS) - set(reader.fieldnames or ())
    if missing:
        raise MetadataRowError(0, "Missing columns: %s" % ", ".join(
            column for column in COLUMNS if column in missing
        ))
    return list(reader)


def load_metadata(records, keep_tags=(WORKSPACE_TAG,), units=INCHES,
                  size_filter=None):
    """ Create floorplan from the metadata rows.

    The rows are (id, x, y, width, height, tag) tuples or mappings with
    these keys, coordinates already in the floorplan units. Rows whose tag
    is not among the kept tags are skipped. Row indices in the raised errors
    are zero-based and count the data rows only.
    """
    keep_tags = set(keep_tags)
    workspaces = []
    identifiers = set()
    for row_index, record in enumerate(records):
        identifier, x0, y0, width, height, tag = _parse_record(row_index, record)
        if identifier in identifiers:
            raise DuplicateIdError(identifier)
        identifiers.add(identifier)
        if tag not in keep_tags:
            continue
        bbox = BoundingBox((x0, y0), (x0 + width, y0 + height))
        if size_filter is not None and not size_filter.accepts(bbox):
            logger.debug("Workspace %s rejected by the size filter.", identifier)
            continue
        workspaces.append(Workspace(identifier, bbox, tag))

    if not workspaces:
        raise EmptyFloorplanError("No workspace matched the metadata filter.")

    logger.debug("%d workspaces loaded from metadata.", len(workspaces))

    return Floorplan(workspaces, units=units, source=SOURCE_METADATA)


def _parse_record(row_index, record):
    try:
        if hasattr(record, "keys"):
            values = [record[column] for column in COLUMNS]
        else:
            values = list(record)
            if len(values) != len(COLUMNS):
                raise ValueError("Expected %d fields." % len(COLUMNS))
        identifier, x0, y0, width, height, tag = values
        identifier = str(identifier).strip()
        if not identifier:
            raise ValueError("Empty identifier.")
        x0, y0, width, height = (float(v) for v in (x0, y0, width, height))
        if not all(isfinite(v) for v in (x0, y0, width, height)):
            raise ValueError("Non-finite coordinate.")
        if width < 0 or height < 0:
            raise ValueError("Negative workspace size.")
    except (KeyError, TypeError, ValueError, GeometryError) as error:
        raise MetadataRowError(row_index, str(error)) from None
    tag = tag.strip() if isinstance(tag, str) else tag
    return identifier, x0, y0, width, height, tag

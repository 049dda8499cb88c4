#-------------------------------------------------------------------------------
#
#  Workspace detection in raster floorplans by template matching
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
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor
import numpy as np
from scipy.signal import fftconvolve

from seatplan.exceptions import (
    EmptyFloorplanError, InvalidDocumentError, InvalidTemplateError,
    RasterSizeError, UsageError,
)
from seatplan.geometry import INCHES, IDENTITY, BoundingBox, rescale_bbox
from seatplan.perf_util import ElapsedTimeLogger
from seatplan.discovery.floorplan import (
    SOURCE_RASTER, WORKSPACE_TAG, Floorplan, Workspace,
)

logger = logging.getLogger(__name__)

ROTATIONS = (0, 90, 180, 270)

# windows with a smaller variance per pixel are treated as flat
VARIANCE_EPSILON = 1e-9


class GrayImage():
    """ Grayscale raster with luminance values in [0, 1].

    The pixels are held by a (height, width) numpy array.
    """

    def __init__(self, width, height, data):
        try:
            data = np.asarray(data, dtype="float64").reshape(
                (int(height), int(width))
            )
        except ValueError as error:
            raise InvalidDocumentError("Invalid raster data! %s" % error) from None
        if data.size == 0:
            raise InvalidDocumentError("Empty raster image!")
        if not np.all(np.isfinite(data)) or data.min() < 0 or data.max() > 1:
            raise InvalidDocumentError(
                "Raster luminance values must be within [0, 1]!"
            )
        self.data = data

    @classmethod
    def from_array(cls, array):
        """ Create image from a 2D array. """
        array = np.asarray(array)
        if array.ndim != 2:
            raise InvalidDocumentError(
                "Expected a 2D raster array, got shape %s!" % (array.shape,)
            )
        height, width = array.shape
        return cls(width, height, array)

    @property
    def width(self):
        return self.data.shape[1]

    @property
    def height(self):
        return self.data.shape[0]

    @property
    def shape(self):
        return self.data.shape

    def rotated(self, rotation):
        """ Get copy rotated counter-clockwise by a multiple of 90 degrees. """
        if rotation not in ROTATIONS:
            raise InvalidTemplateError(
                "Unsupported template rotation %r!" % (rotation,)
            )
        return GrayImage.from_array(np.rot90(self.data, rotation // 90))

    def __repr__(self):
        return "<GrayImage %dx%d>" % (self.width, self.height)


class Detection(namedtuple("Detection", ["bbox", "score", "template", "rotation"])):
    """ Template match. The bounding box is in pixel coordinates. """
    __slots__ = ()

    def __new__(cls, bbox, score, template=None, rotation=0):
        if not isinstance(bbox, BoundingBox):
            bbox = BoundingBox.from_corners(*bbox)
        return super().__new__(cls, bbox, float(score), template, rotation)

    @property
    def sort_key(self):
        """ Score-descending, position-ascending (x, then y) order. """
        return (-self.score, self.bbox.min.x, self.bbox.min.y)


def load_gray_image(path):
    """ Read raster file and convert it to a gray-scale image. """
    # pylint: disable=import-outside-toplevel
    from PIL import Image, UnidentifiedImageError
    try:
        with Image.open(path) as image:
            data = np.asarray(image.convert("L"), dtype="float64") / 255.0
    except (UnidentifiedImageError, OSError) as error:
        raise InvalidDocumentError(
            "Failed to read raster image %s! %s" % (path, error)
        ) from None
    return GrayImage.from_array(data)


def normalized_cross_correlation(image, template):
    """ Get the normalized cross-correlation of the template with every
    window of the image (valid positions only) as (rows, columns) array.

    Windows of zero variance score 0.
    """
    image, template = _as_array(image), _as_array(template)
    t_height, t_width = template.shape
    if t_height > image.shape[0] or t_width > image.shape[1]:
        raise RasterSizeError(
            "Template %dx%d is larger than the image %dx%d!" % (
                t_width, t_height, image.shape[1], image.shape[0]
            )
        )

    size = template.size
    template = template - template.mean()
    template_norm = np.sqrt(np.square(template).sum())
    if template_norm <= np.sqrt(VARIANCE_EPSILON * size):
        raise InvalidTemplateError("Template has zero variance!")

    numerator = fftconvolve(image, template[::-1, ::-1], mode="valid")

    window_sum = _window_sums(image, template.shape)
    window_sum2 = _window_sums(np.square(image), template.shape)
    window_variance = window_sum2 - np.square(window_sum) / size

    flat = window_variance <= VARIANCE_EPSILON * size
    denominator = np.sqrt(np.where(flat, 1.0, window_variance)) * template_norm
    score = np.where(flat, 0.0, numerator / denominator)
    return np.clip(score, -1.0, 1.0)


def _as_array(image):
    return image.data if isinstance(image, GrayImage) else np.asarray(
        image, dtype="float64"
    )


def _window_sums(data, shape):
    """ Sums over all valid windows from the integral image. """
    height, width = shape
    integral = np.zeros((data.shape[0] + 1, data.shape[1] + 1))
    integral[1:, 1:] = data.cumsum(axis=0).cumsum(axis=1)
    return (
        integral[height:, width:] - integral[:-height, width:]
        - integral[height:, :-width] + integral[:-height, :-width]
    )


def match_template(image, template, threshold=0.95, rotations=(0,),
                   name=None, workers=None):
    """ Find all image windows matching the template or its rotations.

    Every window position whose score reaches the threshold yields one
    detection. The rotated templates may be matched in parallel threads;
    the result is always listed in the `Detection.sort_key` order.
    """
    if not isinstance(template, GrayImage):
        template = GrayImage.from_array(template)
    rotations = list(rotations)
    templates = [template.rotated(rotation) for rotation in rotations]

    def _match(rotated_template):
        scores = normalized_cross_correlation(image, rotated_template)
        return np.nonzero(scores >= threshold), scores

    with ElapsedTimeLogger(
        "Template %s matched in" % (name or "-"), logger, logging.DEBUG
    ):
        if workers and len(templates) > 1:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                results = list(executor.map(_match, templates))
        else:
            results = [_match(item) for item in templates]

    detections = []
    for rotation, rotated, ((rows, cols), scores) in zip(
            rotations, templates, results
    ):
        for row, col in zip(rows.tolist(), cols.tolist()):
            detections.append(Detection(
                (col, row, col + rotated.width, row + rotated.height),
                scores[row, col], name, rotation,
            ))

    detections.sort(key=lambda detection: detection.sort_key)

    logger.debug(
        "%d window positions matched template %s.", len(detections), name
    )

    return detections


def suppress(detections, max_overlap=0.3):
    """ Greedy non-maximum suppression.

    The best remaining detection is kept and all detections overlapping it
    with an intersection over union above `max_overlap` are discarded.
    """
    if not 0 <= max_overlap < 1:
        raise UsageError("Invalid maximum overlap %r!" % (max_overlap,))

    remaining = sorted(detections, key=lambda detection: detection.sort_key)
    if not remaining:
        return []

    boxes = np.array([detection.bbox.as_list() for detection in remaining])
    x0, y0, x1, y1 = boxes.T
    area = (x1 - x0) * (y1 - y0)

    index = np.arange(len(remaining))
    kept = []
    while index.size:
        best, others = index[0], index[1:]
        kept.append(remaining[best])
        width = np.maximum(
            0.0, np.minimum(x1[best], x1[others]) - np.maximum(x0[best], x0[others])
        )
        height = np.maximum(
            0.0, np.minimum(y1[best], y1[others]) - np.maximum(y0[best], y0[others])
        )
        intersection = width * height
        union = area[best] + area[others] - intersection
        with np.errstate(divide="ignore", invalid="ignore"):
            overlap = np.where(union > 0, intersection / union, 0.0)
        index = others[overlap <= max_overlap]

    logger.debug(
        "%d of %d detections kept after suppression.",
        len(kept), len(remaining)
    )

    return kept


def detections_to_floorplan(detections, transform=IDENTITY, units=INCHES,
                            background=None):
    """ Convert detections to a floorplan of workspaces 'det-<number>'. """
    detections = sorted(detections, key=lambda detection: detection.sort_key)
    if not detections:
        raise EmptyFloorplanError("No workspace detected.")
    workspaces = [
        Workspace(
            "det-%d" % index,
            rescale_bbox(detection.bbox, transform),
            WORKSPACE_TAG,
        )
        for index, detection in enumerate(detections)
    ]
    return Floorplan(
        workspaces, units=units, source=SOURCE_RASTER, background=background,
    )

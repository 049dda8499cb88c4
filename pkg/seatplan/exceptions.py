#-------------------------------------------------------------------------------
#
#  Exceptions
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

EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_INFEASIBLE = 4


class SeatplanError(Exception):
    """ Base class of all errors raised by the seatplan library. """
    code = 'SeatplanError'
    exit_code = EXIT_INPUT


class UsageError(SeatplanError):
    code = 'UsageError'
    exit_code = EXIT_USAGE


class ContractViolation(SeatplanError):
    code = 'ContractViolation'


class GeometryError(SeatplanError):
    code = 'InvalidGeometry'


class InvalidTransformError(GeometryError):
    code = 'InvalidTransform'


class InvalidDocumentError(SeatplanError):
    code = 'InvalidDocument'


class VectorParseError(InvalidDocumentError):
    code = 'VectorParseError'


class EmptyFloorplanError(SeatplanError):
    code = 'EmptyFloorplan'

    def __init__(self, message="No workspace found."):
        super().__init__(message)


class DuplicateIdError(SeatplanError):
    code = 'DuplicateId'

    def __init__(self, identifier):
        self.locator = identifier
        super().__init__("Duplicate workspace identifier %r." % identifier)


class MetadataRowError(SeatplanError):
    code = 'InvalidRow'

    def __init__(self, row, message):
        self.row = row
        super().__init__("Row %d: %s" % (row, message))


class InvalidSpecError(SeatplanError):
    code = 'InvalidSpec'


class RasterSizeError(SeatplanError):
    code = 'TemplateTooLarge'


class InvalidTemplateError(SeatplanError):
    code = 'InvalidTemplate'


class UnknownWorkspaceError(SeatplanError):
    code = 'UnknownWorkspace'

    def __init__(self, identifier):
        self.locator = identifier
        super().__init__("Unknown workspace %r." % identifier)


class InvalidPriorError(SeatplanError):
    code = 'InvalidPrior'


class SizeCapError(SeatplanError):
    code = 'SizeCapExceeded'
    exit_code = EXIT_INFEASIBLE

    def __init__(self, component, size, cap):
        self.component = component
        self.size = size
        self.cap = cap
        super().__init__(
            "Component %s has %d workspaces which exceeds the limit of %d."
            % (component, size, cap)
        )


class OracleSizeError(SeatplanError):
    code = 'OracleSizeExceeded'
    exit_code = EXIT_INFEASIBLE


class InfeasiblePlanError(SeatplanError):
    code = 'InfeasiblePlan'
    exit_code = EXIT_INFEASIBLE

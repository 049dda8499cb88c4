#-------------------------------------------------------------------------------
#
#  Business units, allocation plans and solver configuration
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

import json
import logging
from collections import Counter, namedtuple
from math import isfinite

from seatplan.exceptions import (
    InvalidDocumentError, InvalidPriorError, UsageError,
)
from seatplan.util import id_key, sorted_ids

logger = logging.getLogger(__name__)

# business unit used by the engines run without units
IMPLICIT_UNIT = "*"

METHOD_RANDOM_WALK = "random-walk"
METHOD_PARTITION = "partition"
METHOD_EXACT = "exact"
METHODS = (METHOD_RANDOM_WALK, METHOD_PARTITION, METHOD_EXACT)

MODE_COUNT = "count"
MODE_PRESERVE = "preserve"
MODES = (MODE_COUNT, MODE_PRESERVE)

JSON_OPTS = {
    'sort_keys': False,
    'indent': 2,
    'separators': (',', ': '),
}


def parse_method(label):
    """ Normalize engine label ('random_walk' is read as 'random-walk'). """
    method = str(label).strip().lower().replace("_", "-")
    if method not in METHODS:
        raise UsageError("Unknown allocation method %r!" % (label,))
    return method


class BusinessUnit(namedtuple("BusinessUnit", ["id", "headcount"])):
    """ Organisational unit and the number of its employees. """
    __slots__ = ()

    def __new__(cls, id, headcount):
        # pylint: disable=redefined-builtin
        try:
            headcount_int = int(headcount)
        except (TypeError, ValueError):
            headcount_int = None
        if headcount_int is None or headcount_int != headcount or headcount_int < 0:
            raise InvalidDocumentError(
                "Invalid headcount %r of business unit %r!" % (headcount, id)
            )
        return super().__new__(cls, id, headcount_int)

    def to_dict(self):
        return {"id": self.id, "headcount": self.headcount}


def total_headcount(units):
    return sum(unit.headcount for unit in units)


class SolverConfig(namedtuple("SolverConfig", [
    "d", "penalty_c", "seed", "restarts", "component_cap", "mode", "method",
])):
    """ Allocation engine parameters. The distance is in inches. """
    __slots__ = ()

    def __new__(cls, d=72.0, penalty_c=0.0, seed=0, restarts=100,
                component_cap=2000, mode=MODE_COUNT, method=METHOD_EXACT):
        d, penalty_c = float(d), float(penalty_c)
        if not (isfinite(d) and d > 0):
            raise UsageError("Invalid social distance %r!" % d)
        if not (isfinite(penalty_c) and penalty_c >= 0):
            raise UsageError("Invalid penalty %r!" % penalty_c)
        if int(seed) < 0:
            raise UsageError("Invalid seed %r!" % seed)
        if int(restarts) < 1:
            raise UsageError("Invalid number of restarts %r!" % restarts)
        if int(component_cap) < 1:
            raise UsageError("Invalid component size limit %r!" % component_cap)
        if mode not in MODES:
            raise UsageError("Unknown allocation mode %r!" % (mode,))
        return super().__new__(
            cls, d, penalty_c, int(seed), int(restarts), int(component_cap),
            mode, parse_method(method),
        )


class AllocationPlan():
    """ Assignment of workspaces to business units.

    Workspaces of the plan which are missing in the assignments are
    unallocated.
    """

    def __init__(self, workspaces, assignments, objective=None, method=None,
                 d=None):
        self.workspaces = sorted_ids(workspaces)
        self.assignments = {
            workspace: assignments[workspace]
            for workspace in sorted_ids(assignments)
        }
        self.objective = (
            self.allocated_count if objective is None else objective
        )
        self.method = method
        self.d = d

    @property
    def allocated_count(self):
        return len(self.assignments)

    @property
    def allocated(self):
        return list(self.assignments)

    @property
    def unallocated(self):
        return [
            workspace for workspace in self.workspaces
            if workspace not in self.assignments
        ]

    def unit_counts(self):
        return Counter(self.assignments.values())

    def to_dict(self):
        return {
            "method": self.method,
            "d": self.d,
            "objective": self.objective,
            "assignments": self.assignments,
            "unallocated": self.unallocated,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), **JSON_OPTS)

    @classmethod
    def from_dict(cls, data, workspaces=None):
        try:
            assignments = dict(data["assignments"])
            unallocated = list(data.get("unallocated", ()))
        except (KeyError, TypeError, ValueError) as error:
            raise InvalidDocumentError(
                "Invalid allocation plan! %s" % error
            ) from None
        if workspaces is None:
            workspaces = list(assignments) + unallocated
        return cls(
            workspaces, assignments, data.get("objective"),
            data.get("method"), data.get("d"),
        )

    def __repr__(self):
        return "<AllocationPlan %s: %d of %d allocated>" % (
            self.method, self.allocated_count, len(self.workspaces)
        )


def fill_units(seats, units=None):
    """ Assign seats in the natural order to the units in the input order.

    Seats exceeding the total headcount stay unallocated. Without units
    all seats are assigned to the implicit unit.
    """
    seats = sorted_ids(seats)
    if units is None:
        return {seat: IMPLICIT_UNIT for seat in seats}
    assignments = {}
    seats = iter(seats)
    for unit in units:
        for _, seat in zip(range(unit.headcount), seats):
            assignments[seat] = unit.id
    return assignments


def assign_units(plan, units):
    """ Re-assign the allocated seats of a plan to the given units. """
    assignments = fill_units(plan.allocated, units)
    return AllocationPlan(
        plan.workspaces, assignments, method=plan.method, d=plan.d,
    )


def validate_plan(graph, plan, units=None):
    """ List violations of the plan: unknown references, conflicting seats,
    exceeded headcounts.
    """
    violations = []
    for workspace in plan.assignments:
        if workspace not in graph:
            violations.append("Unknown workspace %r." % (workspace,))

    allocated = [seat for seat in plan.assignments if seat in graph]
    allocated_set = set(allocated)
    for seat in allocated:
        for neighbor in graph.neighbors(seat):
            if neighbor in allocated_set and id_key(seat) < id_key(neighbor):
                violations.append(
                    "Workspaces %r and %r are within social distance."
                    % (seat, neighbor)
                )

    if units is not None:
        headcounts = {unit.id: unit.headcount for unit in units}
        for unit_id, count in sorted(plan.unit_counts().items(), key=str):
            if unit_id not in headcounts:
                violations.append("Unknown business unit %r." % (unit_id,))
            elif count > headcounts[unit_id]:
                violations.append(
                    "Business unit %r exceeds its headcount %d with %d seats."
                    % (unit_id, headcounts[unit_id], count)
                )

    return violations


def parse_units(data):
    """ Parse list of business units from a list of {id, headcount}
    dictionaries.
    """
    try:
        units = [BusinessUnit(item["id"], item["headcount"]) for item in data]
    except (KeyError, TypeError) as error:
        raise InvalidDocumentError(
            "Invalid business units! %s" % error
        ) from None
    identifiers = [unit.id for unit in units]
    if len(set(identifiers)) != len(identifiers):
        raise InvalidDocumentError("Duplicate business unit identifier!")
    return units


def parse_prior(prior, workspaces, units):
    """ Check the prior plan and return it as a workspace-to-unit mapping.

    The prior is an `AllocationPlan`, a mapping or a sequence of
    (workspace, unit) pairs.
    """
    if isinstance(prior, AllocationPlan):
        pairs = list(prior.assignments.items())
    elif hasattr(prior, "items"):
        pairs = list(prior.items())
    else:
        pairs = [tuple(pair) for pair in prior]

    unit_ids = {unit.id for unit in units}
    mapping = {}
    for workspace, unit_id in pairs:
        if workspace not in workspaces:
            raise InvalidPriorError(
                "Prior plan references unknown workspace %r!" % (workspace,)
            )
        if unit_id not in unit_ids:
            raise InvalidPriorError(
                "Prior plan references unknown business unit %r!" % (unit_id,)
            )
        if mapping.setdefault(workspace, unit_id) != unit_id:
            raise InvalidPriorError(
                "Workspace %r is assigned to more than one business unit!"
                % (workspace,)
            )
    return mapping


def load_units(path):
    """ Load business units and the optional prior plan from a JSON file
    {units: [{id, headcount}], prior: {workspace: unit}}.
    """
    try:
        with open(path, encoding="utf-8") as file_:
            data = json.load(file_)
    except (OSError, ValueError) as error:
        raise InvalidDocumentError(
            "Invalid units document! %s" % error
        ) from None
    if not isinstance(data, dict) or "units" not in data:
        raise InvalidDocumentError("Missing business units!")
    return parse_units(data["units"]), data.get("prior")


def load_prior(path):
    """ Load prior plan from an allocation plan JSON file. """
    try:
        with open(path, encoding="utf-8") as file_:
            data = json.load(file_)
    except (OSError, ValueError) as error:
        raise InvalidDocumentError(
            "Invalid prior plan document! %s" % error
        ) from None
    if isinstance(data, dict) and "assignments" in data:
        return dict(data["assignments"])
    if isinstance(data, dict):
        return data
    raise InvalidDocumentError("Invalid prior plan document!")

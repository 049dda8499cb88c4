#-------------------------------------------------------------------------------
#
#  Configuration readers
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
# pylint: disable=missing-docstring, too-few-public-methods

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

from seatplan.util import parse_list
from seatplan.solvers.plan import SolverConfig
from seatplan.discovery.floorplan import SizeFilter


class Option():
    """ Typed option of a configuration section. """

    def __init__(self, type=str, default=None):
        # pylint: disable=redefined-builtin
        self.type = type
        self.default = default
        self.name = None

    def __set_name__(self, owner, name):
        self.name = name

    def __get__(self, instance, owner=None):
        if instance is None:
            return self
        value = instance.section_data.get(self.name, self.default)
        try:
            return self.type(value)
        except (TypeError, ValueError) as error:
            raise ImproperlyConfigured(
                "Invalid %s.%s value %r! %s"
                % (instance.section, self.name, value, error)
            ) from None


class Reader():
    """ Reader of a configuration section, i.e., a dictionary held by the
    Django settings.
    """
    section = None

    def __init__(self, section_data=None):
        if section_data is None:
            section_data = getattr(settings, self.section, None) or {}
        if not isinstance(section_data, dict):
            raise ImproperlyConfigured(
                "The %s setting must be a dictionary!" % self.section
            )
        self.section_data = section_data


class SolverConfigReader(Reader):
    section = "SEATPLAN_SOLVER"
    distance = Option(type=float, default=72.0)
    penalty = Option(type=float, default=0.0)
    seed = Option(type=int, default=0)
    restarts = Option(type=int, default=100)
    component_cap = Option(type=int, default=2000)
    mode = Option(type=str, default="count")
    method = Option(type=str, default="exact")

    def solver_config(self, **overrides):
        """ Get solver configuration with the non-None overrides applied. """
        options = {
            "d": self.distance,
            "penalty_c": self.penalty,
            "seed": self.seed,
            "restarts": self.restarts,
            "component_cap": self.component_cap,
            "mode": self.mode,
            "method": self.method,
        }
        options.update(
            (key, value) for key, value in overrides.items()
            if value is not None
        )
        return SolverConfig(**options)


class DiscoveryConfigReader(Reader):
    section = "SEATPLAN_DISCOVERY"
    min_side = Option(type=float, default=20.0)
    max_side = Option(type=float, default=120.0)
    threshold = Option(type=float, default=0.95)
    max_overlap = Option(type=float, default=0.3)
    rotations = Option(type=lambda v: parse_list(v, int), default="0,90,180,270")
    keep_tags = Option(type=parse_list, default="WORKSPACE")

    def size_filter(self, min_side=None, max_side=None):
        """ Get workspace size filter with the non-None overrides applied. """
        return SizeFilter(
            self.min_side if min_side is None else min_side,
            self.max_side if max_side is None else max_side,
        )

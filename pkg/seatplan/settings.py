#-------------------------------------------------------------------------------
#
#  Stand-alone Django settings of the seatplan command
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

SECRET_KEY = "seatplan-command-line-only"

DEBUG = False

INSTALLED_APPS = [
    "seatplan",
]

DATABASES = {}

USE_TZ = True

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "loggers": {
        "seatplan": {
            "level": "WARNING",
        },
    },
}

# allocation engine defaults
SEATPLAN_SOLVER = {
    "distance": 72.0,
    "penalty": 0.0,
    "seed": 0,
    "restarts": 100,
    "component_cap": 2000,
    "mode": "count",
    "method": "exact",
}

# workspace discovery defaults
SEATPLAN_DISCOVERY = {
    "min_side": 20.0,
    "max_side": 120.0,
    "threshold": 0.95,
    "max_overlap": 0.3,
    "rotations": "0,90,180,270",
    "keep_tags": "WORKSPACE",
}

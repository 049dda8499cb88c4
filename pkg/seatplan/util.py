#-------------------------------------------------------------------------------
#
#  Utilities
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

import re

RE_DIGITS = re.compile(r'(\d+)')

# random generator seeds are taken modulo 2^64
SEED_MODULUS = 2 ** 64


def id_key(identifier):
    """ Natural sort key of a workspace identifier.

    Integer identifiers and digit runs embedded in strings are compared
    numerically, so that 'ws-2' < 'ws-10' and 'r1c2' < 'r1c10'.
    """
    if isinstance(identifier, int):
        return ((0, identifier, ''),)
    return tuple(
        (0, int(chunk), chunk) if chunk.isdigit() else (1, 0, chunk)
        for chunk in RE_DIGITS.split(str(identifier)) if chunk
    )


def sorted_ids(identifiers):
    """ Sort identifiers in the natural order. """
    return sorted(identifiers, key=id_key)


def parse_list(value, type_=str, separator=','):
    """ Parse comma-separated list of values. """
    if isinstance(value, str):
        value = [item.strip() for item in value.split(separator)]
    return [type_(item) for item in value if item != '']


def normalize_seed(seed):
    """ Map any integer seed to the non-negative range accepted by numpy. """
    return int(seed) % SEED_MODULUS

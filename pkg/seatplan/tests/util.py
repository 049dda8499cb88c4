#-------------------------------------------------------------------------------
#
#  Utility tests.
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

import unittest
from seatplan.util import id_key, parse_list, sorted_ids


class TestUtil(unittest.TestCase):

    def test_natural_order(self):
        self.assertEqual(
            sorted_ids(["ws-10", "ws-2", "ws-1", "r1c10", "r1c2", "r10c0"]),
            ["r1c2", "r1c10", "r10c0", "ws-1", "ws-2", "ws-10"],
        )
        self.assertEqual(sorted_ids([10, 2, 33]), [2, 10, 33])
        self.assertLess(id_key("A1"), id_key("A1b"))

    def test_parse_list(self):
        self.assertEqual(parse_list("0, 90,,180", int), [0, 90, 180])
        self.assertEqual(parse_list(["a", "b"]), ["a", "b"])
        self.assertEqual(parse_list(""), [])


if __name__ == "__main__":
    unittest.main()

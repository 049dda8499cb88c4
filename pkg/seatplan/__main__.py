#-------------------------------------------------------------------------------
#
#  Console entry point
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

import os
import sys


def main(argv=None):
    """ Run the seatplan management command with the bundled settings. """
    # pylint: disable=import-outside-toplevel
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "seatplan.settings")
    from django.core.management import execute_from_command_line
    argv = sys.argv[1:] if argv is None else argv
    execute_from_command_line(["seatplan", "seatplan", *argv])


if __name__ == "__main__":
    main()

#-------------------------------------------------------------------------------
#
#  Performance measurement utilities.
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
# pylint: disable=too-few-public-methods

import time
import logging


class Timer():
    """ Object used to measure elapsed time in seconds. """

    def __init__(self):
        self._start = None
        self.reset()

    def __call__(self):
        """ Get elapsed time in seconds."""
        return time.perf_counter() - self._start

    def reset(self):
        """ Reset initial time."""
        self._start = time.perf_counter()

    @property
    def milliseconds(self):
        """ Elapsed time in whole milliseconds. """
        return int(round(1e3 * self()))


class ElapsedTimeLogger():
    """ Elapsed time logger.

    The message is logged with the elapsed time appended when the context
    is left.
    """
    format = "%s %.3gs"

    def __init__(self, message="", logger=None, level=logging.INFO):
        self.timer = Timer()
        self.message = message
        self.logger = logger or logging.getLogger(__name__)
        self.level = level

    def __enter__(self):
        self.timer.reset()
        return self

    def __exit__(self, exc_type, exc_value, exc_traceback):
        self.write(self.message)

    def write(self, message):
        """ Log the message with the elapsed time appended. """
        self.logger.log(self.level, self.format, message, self.timer())

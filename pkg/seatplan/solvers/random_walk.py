#-------------------------------------------------------------------------------
#
#  Random walk allocation heuristic
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
from numpy.random import SeedSequence, default_rng

from seatplan.perf_util import ElapsedTimeLogger
from seatplan.util import normalize_seed
from seatplan.solvers.plan import (
    METHOD_RANDOM_WALK, AllocationPlan, fill_units,
)

logger = logging.getLogger(__name__)


def random_walk(graph, seed=0, restarts=100):
    """ Greedy allocation in a seeded random order, repeated `restarts`
    times. The largest allocation wins, the earliest restart on a tie.

    Each restart visits all workspaces and adds a workspace if it does not
    conflict with any of the already added ones, i.e., the result is a
    maximal independent set of the graph.
    """
    best, best_restart = [], None
    with ElapsedTimeLogger(
        "%d random walk restarts finished in" % restarts, logger,
        logging.DEBUG,
    ):
        for restart in range(restarts):
            selected = _walk(graph, _restart_rng(seed, restart))
            if best_restart is None or len(selected) > len(best):
                best, best_restart = selected, restart

    logger.debug(
        "Random walk restart %s allocated %d of %d workspaces.",
        best_restart, len(best), len(graph)
    )

    return AllocationPlan(
        graph.nodes, fill_units(best), method=METHOD_RANDOM_WALK, d=graph.d,
    )


def _restart_rng(seed, restart):
    return default_rng(SeedSequence([normalize_seed(seed), restart]))


def _walk(graph, rng):
    nodes = graph.nodes
    blocked = set()
    selected = []
    for index in rng.permutation(len(nodes)).tolist():
        node = nodes[index]
        if node not in blocked:
            selected.append(node)
            blocked.add(node)
            blocked.update(graph.adjacency[node])
    return selected

#-------------------------------------------------------------------------------
#
#  Graph partition allocation heuristic
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
from collections import Counter
from numpy.random import default_rng

from seatplan.exceptions import ContractViolation
from seatplan.graph import (
    OddCycle, bicolor, components, cycle_basis,
)
from seatplan.perf_util import ElapsedTimeLogger
from seatplan.util import normalize_seed, sorted_ids
from seatplan.solvers.plan import (
    METHOD_PARTITION, AllocationPlan, fill_units,
)

logger = logging.getLogger(__name__)


def candidate_set(odd_cycles, graph):
    """ Nodes of the odd cycles with the highest participation in the
    cycles and, among these, the highest degree, in the natural order.
    """
    participation = Counter()
    for cycle in odd_cycles:
        participation.update(set(cycle))
    if not participation:
        raise ContractViolation("Empty odd cycle basis!")

    top_participation = max(participation.values())
    candidates = [
        node for node, count in participation.items()
        if count == top_participation
    ]
    top_degree = max(graph.degree(node) for node in candidates)
    return sorted_ids(
        node for node in candidates if graph.degree(node) == top_degree
    )


def candidate_h(odd_cycles, graph, rng=None):
    """ Pick a node for deletion at random from the `candidate_set`. """
    candidates = candidate_set(odd_cycles, graph)
    if rng is None:
        rng = default_rng(0)
    return candidates[int(rng.integers(len(candidates)))]


def partition(graph, seed=0, rng=None):
    """ Delete nodes from a component until no odd cycle is left.

    The cycle basis is recomputed after every deletion. Returns the
    remaining bipartite graph.
    """
    if rng is None:
        rng = default_rng(normalize_seed(seed))
    deleted = []
    while True:
        odd_cycles = cycle_basis(graph).odd()
        if not odd_cycles:
            break
        node = candidate_h(odd_cycles, graph, rng)
        deleted.append(node)
        graph = graph.without([node])

    if isinstance(bicolor(graph), OddCycle):
        raise ContractViolation("Partition left an odd cycle!")

    if deleted:
        logger.debug("Deleted nodes: %s", ", ".join(map(str, deleted)))

    return graph


def space_selection(graph, seed=0):
    """ Allocate the larger colour class of every bipartized component.

    Ties go to the class containing the smallest workspace identifier.
    """
    rng = default_rng(normalize_seed(seed))
    selected = []
    with ElapsedTimeLogger(
        "Graph partition finished in", logger, logging.DEBUG
    ):
        for component in components(graph):
            remainder = partition(component, rng=rng)
            for piece in components(remainder):
                coloring = bicolor(piece)
                if len(coloring.U) >= len(coloring.V):
                    selected.extend(coloring.U)
                else:
                    selected.extend(coloring.V)

    logger.debug(
        "Graph partition allocated %d of %d workspaces.",
        len(selected), len(graph)
    )

    return AllocationPlan(
        graph.nodes, fill_units(selected), method=METHOD_PARTITION, d=graph.d,
    )

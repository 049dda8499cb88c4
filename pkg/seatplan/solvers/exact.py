#-------------------------------------------------------------------------------
#
#  Exact maximum allocation by branch and bound
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
from collections import deque
import networkx as nx

from seatplan.exceptions import SizeCapError
from seatplan.graph import components
from seatplan.perf_util import ElapsedTimeLogger
from seatplan.util import id_key, sorted_ids
from seatplan.solvers.plan import (
    METHOD_EXACT, AllocationPlan, fill_units, total_headcount,
)

logger = logging.getLogger(__name__)

DEFAULT_COMPONENT_CAP = 2000


def check_component_sizes(graph, component_cap=DEFAULT_COMPONENT_CAP):
    """ Get components of the graph, raising `SizeCapError` if any of them
    exceeds the size limit.
    """
    result = components(graph)
    for component in result:
        if len(component) > component_cap:
            raise SizeCapError(component.nodes[0], len(component), component_cap)
    return result


def solve_exact_count(graph, units=None, component_cap=DEFAULT_COMPONENT_CAP):
    """ Allocate the maximum number of workspaces.

    A maximum independent set is found for each component, the union is
    trimmed to the total headcount, and the units are filled in the input
    order. Without units the headcount is unbounded.
    """
    selected = []
    with ElapsedTimeLogger("Exact allocation finished in", logger, logging.DEBUG):
        for component in check_component_sizes(graph, component_cap):
            selected.extend(maximum_independent_set(component))

    selected = sorted_ids(selected)
    if units is not None:
        selected = selected[:total_headcount(units)]

    logger.debug(
        "Exact allocation of %d of %d workspaces.", len(selected), len(graph)
    )

    return AllocationPlan(
        graph.nodes, fill_units(selected, units), method=METHOD_EXACT,
        d=graph.d,
    )


def maximum_independent_set(graph):
    """ Get a maximum independent set of the graph. """
    return sorted_ids(_MaximumIndependentSet(graph.adjacency).solve())


class _MaximumIndependentSet():
    """ Branch and bound search over an adjacency mapping.

    Every search node first applies the reductions (isolated node, degree-1
    node, dominated neighbour). Disconnected remainders are solved piece by
    piece, bipartite pieces by the Koenig theorem, the rest by branching on
    the highest degree node with a greedy clique cover as the upper bound.
    """

    def __init__(self, adjacency):
        self.adjacency = adjacency

    def solve(self):
        return self._search(set(self.adjacency), -1)

    def _neighbors(self, node, nodes):
        return self.adjacency[node] & nodes

    def _search(self, nodes, lower):
        """ Return independent set larger than `lower` or None. """
        taken = self._reduce(nodes)
        need = lower - len(taken)

        if not nodes:
            return taken if need < 0 else None

        if self._upper_bound(nodes) <= need:
            return None

        pieces = self._pieces(nodes)
        if len(pieces) > 1:
            found = []
            for piece in pieces:
                found.extend(self._search(piece, -1))
            return taken + found if len(found) > need else None

        colors = self._two_coloring(nodes)
        if colors is not None:
            found = self._bipartite(nodes, colors)
            return taken + found if len(found) > need else None

        node = min(
            nodes, key=lambda item: (
                -len(self._neighbors(item, nodes)), id_key(item)
            )
        )

        best = None
        found = self._search(
            nodes - self._neighbors(node, nodes) - {node}, need - 1
        )
        if found is not None:
            best = [node] + found
            need = len(best)
        found = self._search(nodes - {node}, need)
        if found is not None:
            best = found

        return None if best is None else taken + best

    def _reduce(self, nodes):
        """ Apply the reductions in place and return the taken nodes. """
        taken = []
        changed = True
        while changed:
            changed = False
            for node in sorted_ids(nodes):
                if node not in nodes:
                    continue
                neighbors = self._neighbors(node, nodes)
                if len(neighbors) <= 1:
                    taken.append(node)
                    nodes.discard(node)
                    nodes.difference_update(neighbors)
                    changed = True
                    continue
                closed = neighbors | {node}
                for neighbor in sorted_ids(neighbors):
                    if closed <= self._neighbors(neighbor, nodes) | {neighbor}:
                        # neighbor dominated by the node
                        nodes.discard(neighbor)
                        changed = True
                        break
        return taken

    def _pieces(self, nodes):
        pieces = []
        unvisited = set(nodes)
        for root in sorted_ids(nodes):
            if root not in unvisited:
                continue
            unvisited.discard(root)
            piece, queue = {root}, deque([root])
            while queue:
                for neighbor in self._neighbors(queue.popleft(), unvisited):
                    unvisited.discard(neighbor)
                    piece.add(neighbor)
                    queue.append(neighbor)
            pieces.append(piece)
        return pieces

    def _two_coloring(self, nodes):
        """ Colour a connected node set or return None if not bipartite. """
        root = min(nodes, key=id_key)
        colors = {root: 0}
        queue = deque([root])
        while queue:
            node = queue.popleft()
            for neighbor in self._neighbors(node, nodes):
                if neighbor not in colors:
                    colors[neighbor] = 1 - colors[node]
                    queue.append(neighbor)
                elif colors[neighbor] == colors[node]:
                    return None
        return colors

    def _bipartite(self, nodes, colors):
        """ Complement of a minimum vertex cover of a bipartite graph. """
        graph = nx.Graph()
        ordered = sorted_ids(nodes)
        graph.add_nodes_from(ordered)
        for node in ordered:
            for neighbor in sorted_ids(self._neighbors(node, nodes)):
                graph.add_edge(node, neighbor)
        top_nodes = {node for node in ordered if colors[node] == 0}
        matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes)
        cover = nx.bipartite.to_vertex_cover(graph, matching, top_nodes)
        return [node for node in ordered if node not in cover]

    def _upper_bound(self, nodes):
        """ Number of cliques of a greedy clique cover. """
        cliques = []
        for node in sorted(nodes, key=lambda item: (
                -len(self._neighbors(item, nodes)), id_key(item)
        )):
            neighbors = self._neighbors(node, nodes)
            for clique in cliques:
                if clique <= neighbors:
                    clique.add(node)
                    break
            else:
                cliques.append({node})
        return len(cliques)

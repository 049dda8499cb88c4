#-------------------------------------------------------------------------------
#
#  Graph of the social-distancing constraints
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
from collections import deque, namedtuple
from itertools import combinations
from math import isfinite
import numpy as np
import networkx as nx
from scipy.spatial import cKDTree

from seatplan.exceptions import (
    ContractViolation, UnknownWorkspaceError, UsageError,
)
from seatplan.geometry import distance
from seatplan.util import id_key, sorted_ids

logger = logging.getLogger(__name__)

EDGE_METHODS = ("kdtree", "brute")

# relative margin of the spatial pre-selection, the strict test follows
QUERY_MARGIN = 1e-9

JSON_OPTS = {
    'sort_keys': False,
    'indent': 2,
    'separators': (',', ': '),
}


class ConstraintGraph():
    """ Immutable conflict graph of workspaces.

    Nodes are workspace identifiers, edges join workspaces closer than
    the social distance `d` and carry their distance as the `weight`.
    """

    def __init__(self, graph, d):
        self.graph = nx.freeze(graph)
        self.d = d
        self.nodes = sorted_ids(graph.nodes)
        self.adjacency = {
            node: frozenset(graph.adj[node]) for node in self.nodes
        }

    @classmethod
    def from_edges(cls, nodes, edges, d=float("inf")):
        """ Build graph from explicit nodes and (node, node[, weight]) edges.
        The default weight is 0.
        """
        graph = nx.Graph()
        graph.add_nodes_from(nodes)
        for edge in edges:
            node_a, node_b, *weight = edge
            weight = float(weight[0]) if weight else 0.0
            for node in (node_a, node_b):
                if node not in graph:
                    raise UnknownWorkspaceError(node)
            if node_a == node_b:
                raise ContractViolation("Self-loop at %r." % (node_a,))
            if not weight < d:
                raise ContractViolation(
                    "Edge %r-%r of weight %g is not closer than %g."
                    % (node_a, node_b, weight, d)
                )
            graph.add_edge(node_a, node_b, weight=weight)
        return cls(graph, d)

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __contains__(self, node):
        return node in self.adjacency

    @property
    def number_of_edges(self):
        return self.graph.number_of_edges()

    @property
    def edges(self):
        """ Edges as sorted list of (node, node, weight) triplets. """
        edges = []
        for node_a, node_b, weight in self.graph.edges(data="weight"):
            if id_key(node_b) < id_key(node_a):
                node_a, node_b = node_b, node_a
            edges.append((node_a, node_b, weight))
        edges.sort(key=lambda edge: (id_key(edge[0]), id_key(edge[1])))
        return edges

    def neighbors(self, node):
        """ Neighbours in the natural identifier order. """
        return sorted_ids(self.adjacency[node])

    def degree(self, node):
        return len(self.adjacency[node])

    def has_edge(self, node_a, node_b):
        return node_b in self.adjacency.get(node_a, ())

    def subgraph(self, nodes):
        return ConstraintGraph(self.graph.subgraph(nodes).copy(), self.d)

    def without(self, nodes):
        """ Get copy of the graph with the given nodes removed. """
        graph = nx.Graph(self.graph)
        graph.remove_nodes_from(nodes)
        return ConstraintGraph(graph, self.d)

    def is_independent(self, nodes):
        nodes = set(nodes)
        return all(self.adjacency[node].isdisjoint(nodes) for node in nodes)

    def to_dict(self):
        return {
            "d": self.d if isfinite(self.d) else None,
            "nodes": self.nodes,
            "edges": [list(edge) for edge in self.edges],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), **JSON_OPTS)

    def __repr__(self):
        return "<ConstraintGraph d=%g: %d nodes, %d edges>" % (
            self.d, len(self.nodes), self.number_of_edges
        )


def build_constraint_graph(floorplan, d, method="kdtree"):
    """ Build graph of constraints joining workspaces whose centroids are
    closer than the social distance `d`.

    The spatially pruned `kdtree` method and the all-pairs `brute` method
    yield the same graph.
    """
    if not (isfinite(d) and d > 0):
        raise UsageError("Invalid social distance %r!" % (d,))
    if method not in EDGE_METHODS:
        raise UsageError("Invalid edge construction method %r!" % (method,))

    ids = sorted_ids(floorplan.ids)
    centroids = [floorplan[id_].centroid for id_ in ids]

    if method == "kdtree":
        tree = cKDTree(np.array(centroids, dtype="float64"))
        pairs = tree.query_pairs(r=d * (1 + QUERY_MARGIN), output_type="ndarray")
        pairs = sorted(map(tuple, pairs.tolist()))
    else:
        pairs = combinations(range(len(ids)), 2)

    graph = nx.Graph()
    graph.add_nodes_from(ids)
    for index_a, index_b in pairs:
        weight = distance(centroids[index_a], centroids[index_b])
        if weight < d:
            graph.add_edge(ids[index_a], ids[index_b], weight=weight)

    logger.debug(
        "Graph of constraints at d=%g: %d nodes, %d edges.",
        d, graph.number_of_nodes(), graph.number_of_edges(),
    )

    return ConstraintGraph(graph, d)


def components(graph):
    """ Get the connected components ordered by their smallest node. """
    result = [
        graph.subgraph(nodes)
        for nodes in nx.connected_components(graph.graph)
    ]
    result.sort(key=lambda component: id_key(component.nodes[0]))
    return result


class CycleBasis(namedtuple("CycleBasis", ["cycles"])):
    """ Fundamental cycles, each a tuple of consecutive nodes. """
    __slots__ = ()

    def __len__(self):
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def odd(self):
        return CycleBasis([cycle for cycle in self.cycles if len(cycle) % 2])


Bicoloring = namedtuple("Bicoloring", ["U", "V"])

# odd-cycle witness returned when two-colouring fails
OddCycle = namedtuple("OddCycle", ["cycle"])


class _SpanningForest():
    """ Breadth-first spanning forest, each tree rooted at its smallest node
    and grown in the natural neighbour order. The non-tree edges are
    recorded in the order of their discovery.
    """

    def __init__(self, graph):
        self.parent = {}
        self.depth = {}
        self.chords = []
        seen_chords = set()
        for root in graph.nodes:
            if root in self.parent:
                continue
            self.parent[root] = None
            self.depth[root] = 0
            queue = deque([root])
            while queue:
                node = queue.popleft()
                for neighbor in graph.neighbors(node):
                    if neighbor not in self.parent:
                        self.parent[neighbor] = node
                        self.depth[neighbor] = self.depth[node] + 1
                        queue.append(neighbor)
                    elif neighbor != self.parent[node] and \
                            self.parent[neighbor] != node:
                        chord = frozenset((node, neighbor))
                        if chord not in seen_chords:
                            seen_chords.add(chord)
                            self.chords.append((node, neighbor))

    def cycle(self, node_a, node_b):
        """ Cycle closed by a non-tree edge: node_a -> ... -> node_b. """
        head, tail = [node_a], [node_b]
        while self.depth[head[-1]] > self.depth[tail[-1]]:
            head.append(self.parent[head[-1]])
        while self.depth[tail[-1]] > self.depth[head[-1]]:
            tail.append(self.parent[tail[-1]])
        while head[-1] != tail[-1]:
            head.append(self.parent[head[-1]])
            tail.append(self.parent[tail[-1]])
        return tuple(head + tail[-2::-1])


def cycle_basis(graph):
    """ Fundamental cycle basis of a breadth-first spanning forest.
    The basis has |E| - |V| + (number of components) cycles.
    """
    forest = _SpanningForest(graph)
    return CycleBasis([forest.cycle(*chord) for chord in forest.chords])


def bicolor(graph):
    """ Two-colour the graph breadth-first from its smallest node.

    Returns `Bicoloring` with the smallest node in `U`, or `OddCycle`
    holding the witness cycle if the graph is not bipartite.
    """
    forest = _SpanningForest(graph)
    for node_a, node_b in forest.chords:
        if forest.depth[node_a] % 2 == forest.depth[node_b] % 2:
            return OddCycle(forest.cycle(node_a, node_b))
    return Bicoloring(
        frozenset(node for node in graph.nodes if forest.depth[node] % 2 == 0),
        frozenset(node for node in graph.nodes if forest.depth[node] % 2 == 1),
    )

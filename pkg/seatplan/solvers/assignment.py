#-------------------------------------------------------------------------------
#
#  Capacity-constrained seat-class to business-unit assignment
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

from collections import defaultdict

INFINITY = float("inf")

# tolerance of the path cost comparisons
EPSILON = 1e-12


class _Arc():
    __slots__ = ("target", "capacity", "cost", "reverse")

    def __init__(self, target, capacity, cost, reverse):
        self.target = target
        self.capacity = capacity
        self.cost = cost
        self.reverse = reverse


class FlowNetwork():
    """ Residual network solved by successive shortest augmenting paths
    (Bellman-Ford, negative arc costs allowed).
    """

    def __init__(self, size):
        self.arcs = [[] for _ in range(size)]

    def add_arc(self, source, target, capacity, cost=0.0):
        forward = _Arc(target, capacity, cost, len(self.arcs[target]))
        backward = _Arc(source, 0, -cost, len(self.arcs[source]))
        self.arcs[source].append(forward)
        self.arcs[target].append(backward)
        return forward

    def _shortest_path(self, source, sink):
        size = len(self.arcs)
        distance = [INFINITY] * size
        parent = [None] * size
        distance[source] = 0.0
        for _ in range(size - 1):
            updated = False
            for node in range(size):
                if distance[node] == INFINITY:
                    continue
                for arc in self.arcs[node]:
                    if arc.capacity > 0 and \
                            distance[node] + arc.cost < distance[arc.target] - EPSILON:
                        distance[arc.target] = distance[node] + arc.cost
                        parent[arc.target] = (node, arc)
                        updated = True
            if not updated:
                break
        return distance[sink], parent

    def min_cost_flow(self, source, sink):
        """ Augment while the cheapest path has a negative cost. """
        total_cost = 0.0
        while True:
            cost, parent = self._shortest_path(source, sink)
            if cost == INFINITY or cost >= -EPSILON:
                break
            path = []
            node = sink
            while node != source:
                node, arc = parent[node]
                path.append(arc)
            amount = min(arc.capacity for arc in path)
            for arc in path:
                arc.capacity -= amount
                self.arcs[arc.target][arc.reverse].capacity += amount
            total_cost += amount * cost
        return total_cost


def max_gain_assignment(class_sizes, units, gain):
    """ Assign seats of seat classes to business units maximizing the total
    gain.

    `class_sizes` maps a seat class to its number of seats, `gain(class,
    unit_id)` is the gain of a single seat. Seats are left unassigned rather
    than assigned at a non-positive gain. Returns {(class, unit_id): count}.
    """
    classes = list(class_sizes)
    source, sink = 0, 1
    class_node = {class_: 2 + index for index, class_ in enumerate(classes)}
    unit_node = {
        unit.id: 2 + len(classes) + index for index, unit in enumerate(units)
    }
    network = FlowNetwork(2 + len(classes) + len(units))

    for class_ in classes:
        network.add_arc(source, class_node[class_], class_sizes[class_])
    links = {}
    for class_ in classes:
        for unit in units:
            value = gain(class_, unit.id)
            if value > 0:
                links[(class_, unit.id)] = network.add_arc(
                    class_node[class_], unit_node[unit.id],
                    class_sizes[class_], -value,
                )
    for unit in units:
        network.add_arc(unit_node[unit.id], sink, unit.headcount)

    network.min_cost_flow(source, sink)

    counts = defaultdict(int)
    for (class_, unit_id), arc in links.items():
        flow = class_sizes[class_] - arc.capacity
        if flow > 0:
            counts[(class_, unit_id)] = flow
    return dict(counts)

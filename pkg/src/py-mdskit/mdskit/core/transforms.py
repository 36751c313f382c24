# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Graph transforms: the incidence graph and the edge domination reduction."""

import collections

from .. import exceptions
from . import graph as _graph

Origin = collections.namedtuple("Origin", ["kind", "index"])
Origin.__doc__ = """Where an incidence graph vertex came from.

kind is "vertex" or "edge"; index is the original vertex or edge id.
"""

VERTEX = "vertex"
EDGE = "edge"


def incidence_graph(graph):
    """Subdivide every edge of ``graph`` once.

    Original vertices keep their ids; edge ``e`` becomes vertex ``n + e``,
    adjacent to both endpoints of ``e``.

    :param Graph graph: the graph
    :returns: ``(incidence, origin)`` where ``origin[x]`` is the
              :class:`Origin` of incidence vertex ``x``
    :rtype: tuple
    """

    n = graph.n
    edges = []
    for e, (u, v) in enumerate(graph.edges):
        edges.append((u, n + e))
        edges.append((v, n + e))

    origin = tuple(
        [Origin(VERTEX, v) for v in range(n)] +
        [Origin(EDGE, e) for e in range(graph.m)]
    )
    return _graph.Graph(n + graph.m, tuple(edges)), origin


def solution_from_incidence(graph, selected):
    """Map a vertex set of the incidence graph back to a MixedSolution."""

    n = graph.n
    return _graph.MixedSolution(
        frozenset(x for x in selected if x < n),
        frozenset(x - n for x in selected if x >= n),
    )


def incidence_vertices(graph, solution):
    """Map a MixedSolution to the corresponding incidence graph vertices."""

    return frozenset(solution.vertices) | frozenset(
        graph.n + e for e in solution.edge_ids
    )


def reduce_eds_to_mds(graph):
    """Reduce edge domination on ``graph`` to mixed domination.

    Adds a vertex ``x = n`` joined to every original vertex, and ``n + 2``
    leaves hanging from ``x``.  The reduced graph has an MDS of size
    ``k + 1`` iff ``graph`` has an edge dominating set of size ``k``.

    :raises InputError: if ``graph`` has no vertices
    """

    n = graph.n
    if n == 0:
        raise exceptions.InputError("cannot reduce the empty graph")

    apex = n
    edges = list(graph.edges)
    edges.extend((v, apex) for v in range(n))
    edges.extend((apex, apex + 1 + i) for i in range(n + 2))
    return _graph.Graph(n + 1 + (n + 2), tuple(edges))

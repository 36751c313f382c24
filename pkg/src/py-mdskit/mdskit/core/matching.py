# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Maximum matchings and minimum edge covers on general graphs."""

import networkx as nx


def _nx_subgraph(graph, within):
    result = nx.Graph()
    if within is None:
        result.add_nodes_from(graph.vertices())
        result.add_edges_from(graph.edges)
        return result

    within = frozenset(within)
    result.add_nodes_from(within)
    for v in within:
        for w in graph.neighbors(v):
            if v < w and w in within:
                result.add_edge(v, w)
    return result


def max_matching(graph, within=None):
    """Return a maximum-cardinality matching as a frozenset of edge ids.

    Odd cycles are handled by the blossom algorithm in networkx.

    :param Graph graph: the graph
    :param within: optional vertex set; match inside ``graph[within]`` only
    :rtype: frozenset
    """

    nx_graph = _nx_subgraph(graph, within)
    if nx_graph.number_of_edges() == 0:
        return frozenset()
    pairs = nx.max_weight_matching(nx_graph, maxcardinality=True)
    return frozenset(graph.edge_id(u, v) for u, v in pairs)


def min_edge_cover(graph, within=None):
    """Return a minimum edge cover as a frozenset of edge ids, or None.

    The cover is a maximum matching plus, for every unmatched vertex, the edge
    to its lowest-id neighbor; its size is ``n - ν``.  None signals that some
    vertex is isolated, so no edge cover exists.

    :param Graph graph: the graph
    :param within: optional vertex set; cover ``graph[within]`` instead
    """

    vertex_set = None if within is None else frozenset(within)
    vertices = graph.vertices() if vertex_set is None else vertex_set

    def local_neighbors(v):
        if vertex_set is None:
            return graph.neighbors(v)
        return graph.neighbors(v) & vertex_set

    if any(not local_neighbors(v) for v in vertices):
        return None

    matching = max_matching(graph, within)
    matched = graph.endpoints(matching)
    cover = set(matching)
    for v in sorted(vertices):
        if v in matched:
            continue
        cover.add(graph.edge_id(v, min(local_neighbors(v))))
    return frozenset(cover)


def incident_edge_cover(graph, within):
    """Return as few edges as possible touching every vertex of ``within``.

    The edges may leave ``within``: a maximum matching of ``graph[within]``
    plus, for every unmatched vertex, the edge to its lowest-id neighbor
    inside ``within`` or, failing that, anywhere in ``graph``.  The size is
    ``|within| - ν(graph[within])``.  None signals that some vertex of
    ``within`` has no neighbor at all.

    :param Graph graph: the graph
    :param within: the vertices to cover
    :rtype: frozenset
    """

    vertex_set = frozenset(within)
    if any(not graph.neighbors(v) for v in vertex_set):
        return None

    matching = max_matching(graph, vertex_set)
    matched = graph.endpoints(matching)
    cover = set(matching)
    for v in sorted(vertex_set - matched):
        inside = graph.neighbors(v) & vertex_set
        partner = min(inside) if inside else min(graph.neighbors(v))
        cover.add(graph.edge_id(v, partner))
    return frozenset(cover)

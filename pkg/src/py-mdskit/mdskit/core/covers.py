# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Vertex cover helpers."""

import networkx as nx


def is_vertex_cover(graph, cover):
    return all(u in cover or v in cover for u, v in graph.edges)


def is_minimal_vertex_cover(graph, cover):
    """True if ``cover`` covers every edge and no vertex can be dropped."""
    if not is_vertex_cover(graph, cover):
        return False
    # v is removable exactly when all of its neighbors are in the cover
    return all(not graph.neighbors(v) <= cover for v in cover)


def minimal_vertex_covers(graph):
    """Yield every minimal vertex cover of ``graph`` exactly once.

    Covers are the complements of maximal independent sets, which are the
    maximal cliques of the complement graph. Emission order is unspecified.

    :param Graph graph: the graph
    :rtype: iterator of frozenset
    """

    everything = frozenset(graph.vertices())
    if graph.n == 0:
        yield frozenset()
        return

    complement = nx.complement(graph.to_networkx())
    for independent in nx.find_cliques(complement):
        yield everything - frozenset(independent)

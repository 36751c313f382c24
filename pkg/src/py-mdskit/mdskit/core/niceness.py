# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Nice mixed dominating sets and their (D, P, I) partitions.

A solution (D, M) is nice when D and V(M) are disjoint and every vertex of D
has at least two private neighbors, i.e. vertices outside D ∪ V(M) whose only
neighbor in D is that vertex.  Its partition is D, P = V(M) and I = the rest.
"""

import dataclasses
import logging

from .. import exceptions
from . import (
    covers,
    graph as _graph,
    validation,
)


@dataclasses.dataclass(frozen=True)
class NicePartition:
    dominators: frozenset
    paired: frozenset
    independent: frozenset
    edge_ids: frozenset

    def solution(self):
        return _graph.MixedSolution(self.dominators, self.edge_ids)

    def cost(self):
        return _graph.Cost.of(self.dominators, self.paired)


def private_neighbors(graph, solution, u):
    """Return the private neighbors of ``u`` with respect to ``solution``."""
    dominators = solution.vertices
    covered = dominators | graph.endpoints(solution.edge_ids)
    return frozenset(
        w for w in graph.neighbors(u)
        if w not in covered and graph.neighbors(w) & dominators == {u}
    )


def _require_valid(graph, solution):
    report = validation.validate_mds(graph, solution)
    if not report.valid:
        raise exceptions.ContractViolationError(
            "not a mixed dominating set: {}".format(
                "; ".join(report.describe(one_indexed=False))
            )
        )


def nice_partition(graph, solution):
    """Return the NicePartition of a nice ``solution``, or None if not nice.

    :raises ContractViolationError: if ``solution`` is not a valid MDS
    """

    _require_valid(graph, solution)

    paired = graph.endpoints(solution.edge_ids)
    if not solution.vertices.isdisjoint(paired):
        return None
    for u in solution.vertices:
        if len(private_neighbors(graph, solution, u)) < 2:
            return None

    independent = (
        frozenset(graph.vertices()) - solution.vertices - paired
    )
    return NicePartition(
        solution.vertices, paired, independent, solution.edge_ids
    )


def is_nice(graph, solution):
    """True iff ``solution`` is nice.

    :raises ContractViolationError: if ``solution`` is not a valid MDS
    """
    return nice_partition(graph, solution) is not None


def _separate_dominators(graph, dominators, edge_ids):
    """Make D and V(M) disjoint without growing the solution.

    Each step removes one (D vertex, incident M edge) incidence: either the
    vertex leaves D, an incident edge leaves M, or an incident edge (u, w) is
    traded for an edge (w, x) with x outside D.
    """

    def valid(d, m):
        return validation.is_valid_mds(
            graph, _graph.MixedSolution(d, m)
        )

    while True:
        conflicts = sorted(dominators & graph.endpoints(edge_ids))
        if not conflicts:
            return dominators, edge_ids
        u = conflicts[0]

        if valid(dominators - {u}, edge_ids):
            dominators = dominators - {u}
            continue

        incident = sorted(e for e in edge_ids if u in graph.edges[e])
        dropped = next(
            (e for e in incident if valid(dominators, edge_ids - {e})),
            None
        )
        if dropped is not None:
            edge_ids = edge_ids - {dropped}
            continue

        replaced = None
        for e in incident:
            a, b = graph.edges[e]
            w = b if a == u else a
            for x in sorted(graph.neighbors(w) - dominators):
                swap = graph.edge_id(w, x)
                if swap in edge_ids:
                    continue
                candidate = (edge_ids - {e}) | {swap}
                if valid(dominators, candidate):
                    replaced = candidate
                    break
            if replaced is not None:
                break

        if replaced is None:
            raise exceptions.ContractViolationError(
                "could not separate vertex {} from V(M)".format(u)
            )
        edge_ids = replaced


def make_nice(graph, solution):
    """Turn a valid MDS into a nice one of no greater size.

    Ties are broken towards the lowest vertex id.

    :param Graph graph: a graph without isolated vertices
    :param MixedSolution solution: a valid mixed dominating set
    :rtype: MixedSolution
    :raises PreconditionError: if ``graph`` has an isolated vertex
    :raises ContractViolationError: if ``solution`` is not valid
    """

    isolated = graph.isolated_vertices()
    if isolated:
        raise exceptions.PreconditionError(
            "graph has isolated vertices: {}".format(list(isolated))
        )
    _require_valid(graph, solution)

    dominators, edge_ids = _separate_dominators(
        graph, solution.vertices, solution.edge_ids
    )

    rounds = 0
    while True:
        current = _graph.MixedSolution(dominators, edge_ids)
        target = None
        for u in sorted(dominators):
            private = private_neighbors(graph, current, u)
            if len(private) < 2:
                target = (u, private)
                break
        if target is None:
            break

        u, private = target
        rounds += 1
        if len(private) == 1:
            (v,) = private
            dominators = dominators - {u}
            edge_ids = edge_ids | {graph.edge_id(u, v)}
        elif graph.neighbors(u) <= dominators:
            dominators = dominators - {u}
        else:
            v = min(graph.neighbors(u) - dominators)
            dominators = dominators - {u}
            edge_ids = edge_ids | {graph.edge_id(u, v)}

    logging.debug(
        "make_nice: size %d -> %d in %d rounds",
        solution.size, len(dominators) + len(edge_ids), rounds
    )
    return _graph.MixedSolution(dominators, edge_ids)


def check_partition(graph, partition):
    """Raise ContractViolationError unless ``partition`` is a nice partition."""

    d, p, i = partition.dominators, partition.paired, partition.independent
    everything = frozenset(graph.vertices())
    if (d | p | i) != everything or (d & p) or (d & i) or (p & i):
        raise exceptions.ContractViolationError(
            "D, P and I do not partition the vertex set"
        )
    if graph.endpoints(partition.edge_ids) != p:
        raise exceptions.ContractViolationError("V(M) differs from P")
    for v in i:
        if graph.neighbors(v) & i:
            raise exceptions.ContractViolationError(
                "I is not independent at vertex {}".format(v)
            )
        if not graph.neighbors(v) & d:
            raise exceptions.ContractViolationError(
                "vertex {} of I has no neighbor in D".format(v)
            )
    for u in d:
        private = [
            w for w in graph.neighbors(u) & i
            if graph.neighbors(w) & d == {u}
        ]
        if len(private) < 2:
            raise exceptions.ContractViolationError(
                "vertex {} of D has fewer than two private neighbors".format(u)
            )


def sandwiched_minimal_vc(graph, partition):
    """Return a minimal vertex cover C with D ⊆ C ⊆ D ∪ P.

    D ∪ P is a vertex cover because I is independent; it is minimalized by a
    single pass in increasing id order, which never removes a vertex of D.

    :raises ContractViolationError: if ``partition`` is not a nice partition
    """

    check_partition(graph, partition)

    cover = set(partition.dominators | partition.paired)
    for v in sorted(cover):
        if graph.neighbors(v) <= cover:
            cover.discard(v)

    result = frozenset(cover)
    if not partition.dominators <= result:
        raise exceptions.ContractViolationError(
            "minimal cover dropped a vertex of D"
        )
    assert covers.is_minimal_vertex_cover(graph, result)
    return result

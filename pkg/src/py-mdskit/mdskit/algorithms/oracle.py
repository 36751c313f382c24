# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Small-scale ground-truth solvers.

These exist to referee the real solvers. They refuse inputs above the caps in
:class:`OracleLimits`.
"""

import dataclasses
import itertools

from .. import (
    core,
    exceptions,
)


@dataclasses.dataclass(frozen=True)
class OracleLimits:
    max_n_subset: int = 7
    max_n_partition: int = 18

    def __post_init__(self):
        if self.max_n_subset < 1 or self.max_n_partition < 1:
            raise exceptions.InputError("oracle caps must be positive")


DEFAULT_LIMITS = OracleLimits()


def _check_limit(graph, cap, name):
    if graph.n > cap:
        raise exceptions.OracleLimitError(
            "{} refuses graphs with more than {} vertices (got {})".format(
                name, cap, graph.n
            )
        )


@dataclasses.dataclass(frozen=True)
class IsolatedSplit:
    """A graph with its isolated vertices set aside.

    ``core`` is the graph induced on the remaining vertices and
    ``original_ids[i]`` is the id of core vertex ``i`` in ``graph``.
    """

    graph: core.Graph
    isolated: frozenset
    core: core.Graph
    original_ids: tuple

    def restore(self, core_solution):
        """Lift a solution of ``core`` to ``graph``, adding the isolated set."""

        ids = self.original_ids
        vertices = frozenset(ids[v] for v in core_solution.vertices)
        edge_ids = frozenset(
            self.graph.edge_id(ids[a], ids[b])
            for a, b in (self.core.edges[e] for e in core_solution.edge_ids)
        )
        return core.MixedSolution(vertices | self.isolated, edge_ids)


def split_isolated(graph):
    """Force isolated vertices into D and return the remaining core graph."""

    isolated = frozenset(graph.isolated_vertices())
    remaining = [v for v in graph.vertices() if v not in isolated]
    sub, original_ids = graph.induced_subgraph(remaining)
    return IsolatedSplit(graph, isolated, sub, original_ids)


def _masks(graph):
    neighbor_masks = [0] * graph.n
    for u, v in graph.edges:
        neighbor_masks[u] |= 1 << v
        neighbor_masks[v] |= 1 << u
    edge_masks = [(1 << u) | (1 << v) for u, v in graph.edges]
    return neighbor_masks, edge_masks


def brute_force_mds(graph, limits=DEFAULT_LIMITS):
    """Return a minimum mixed dominating set by exhaustive enumeration.

    Sizes s = 0, 1, ... are tried in turn and every (D, M) with
    ``|D| + |M| = s`` is checked; the first valid one is optimal.

    :raises OracleLimitError: if ``graph.n > limits.max_n_subset``
    """

    _check_limit(graph, limits.max_n_subset, "brute_force_mds")

    n, m = graph.n, graph.m
    full = (1 << n) - 1
    neighbor_masks, edge_masks = _masks(graph)

    for size in range(n + 1):
        for d_size in range(min(size, n), -1, -1):
            for dominators in itertools.combinations(range(n), d_size):
                d_mask = 0
                reach = 0
                for v in dominators:
                    d_mask |= 1 << v
                    reach |= neighbor_masks[v]
                for chosen in itertools.combinations(range(m), size - d_size):
                    covered = d_mask
                    for e in chosen:
                        covered |= edge_masks[e]
                    if (covered | reach) != full:
                        continue
                    chosen_set = frozenset(chosen)
                    if all(
                        e in chosen_set or edge_masks[e] & covered
                        for e in range(m)
                    ):
                        return core.MixedSolution(
                            frozenset(dominators), chosen_set
                        )

    raise AssertionError("D = V is always a mixed dominating set")


def brute_force_eds(graph, limits=DEFAULT_LIMITS):
    """Return a minimum edge dominating set as a frozenset of edge ids.

    :raises OracleLimitError: if ``graph.n > limits.max_n_subset``
    """

    _check_limit(graph, limits.max_n_subset, "brute_force_eds")

    _, edge_masks = _masks(graph)
    for size in range(graph.m + 1):
        for chosen in itertools.combinations(range(graph.m), size):
            covered = 0
            for e in chosen:
                covered |= edge_masks[e]
            if all(mask & covered for mask in edge_masks):
                return frozenset(chosen)

    return frozenset()


def brute_force_completion(graph, dominators, paired, max_size):
    """Return a smallest edge set M with (dominators, M) valid and paired ⊆ V(M).

    Only sets of at most ``max_size`` edges are tried; None means none of
    them works.
    """

    dominators = frozenset(dominators)
    paired = frozenset(paired)
    for size in range(max_size + 1):
        for chosen in itertools.combinations(range(graph.m), size):
            chosen = frozenset(chosen)
            if not paired <= graph.endpoints(chosen):
                continue
            if core.is_valid_mds(
                graph, core.MixedSolution(dominators, chosen)
            ):
                return chosen
    return None


def partition_oracle(graph, limits=DEFAULT_LIMITS):
    """Return a minimum MDS by searching (D, P, I) partitions.

    The search runs over partitions with I independent, I ⊆ N(D) and G[P]
    free of isolated vertices, with cost ``|D| + |min_edge_cover(G[P])|``.
    Isolated vertices go straight into D.  Partial assignments whose cost
    lower bound ``|D| + ceil(|P| / 2)`` cannot beat the incumbent are skipped.

    :raises OracleLimitError: if the non-isolated part has more than
                              ``limits.max_n_partition`` vertices
    """

    split = split_isolated(graph)
    g = split.core
    _check_limit(g, limits.max_n_partition, "partition_oracle")

    n = g.n
    # vertex w can be checked once every vertex up to last_seen[w] is assigned
    checks = [[] for _ in range(n)]
    for w in range(n):
        last_seen = max([w] + list(g.neighbors(w)))
        checks[last_seen].append(w)

    DOM, PAIR, FREE = 0, 1, 2
    state = [None] * n
    best = {"cost": n, "partition": (frozenset(range(n)), frozenset())}

    def settled(w):
        if state[w] == FREE:
            return any(state[x] == DOM for x in g.neighbors(w))
        if state[w] == PAIR:
            return any(state[x] == PAIR for x in g.neighbors(w))
        return True

    def search(v, d_count, p_count):
        if d_count + (p_count + 1) // 2 >= best["cost"]:
            return
        if v == n:
            paired = frozenset(x for x in range(n) if state[x] == PAIR)
            cover = core.min_edge_cover(g, paired)
            cost = d_count + len(cover)
            if cost < best["cost"]:
                dominators = frozenset(
                    x for x in range(n) if state[x] == DOM
                )
                best["cost"] = cost
                best["partition"] = (dominators, cover)
            return

        for label in (FREE, DOM, PAIR):
            if label == FREE and any(
                state[x] == FREE for x in g.neighbors(v) if x < v
            ):
                continue
            state[v] = label
            if all(settled(w) for w in checks[v]):
                search(
                    v + 1,
                    d_count + (label == DOM),
                    p_count + (label == PAIR),
                )
            state[v] = None

    search(0, 0, 0)

    dominators, cover = best["partition"]
    return split.restore(core.MixedSolution(dominators, cover))


def distance2_brute(graph, limits=DEFAULT_LIMITS):
    """Return a minimum distance-2 dominating set by subset enumeration.

    :raises OracleLimitError: if ``graph.n > limits.max_n_subset + 5``
    """

    _check_limit(graph, limits.max_n_subset + 5, "distance2_brute")

    n = graph.n
    full = (1 << n) - 1
    neighbor_masks, _ = _masks(graph)
    balls = []
    for v in range(n):
        ball = (1 << v) | neighbor_masks[v]
        for w in graph.neighbors(v):
            ball |= neighbor_masks[w]
        balls.append(ball)

    for size in range(n + 1):
        for chosen in itertools.combinations(range(n), size):
            reach = 0
            for v in chosen:
                reach |= balls[v]
            if reach == full:
                return frozenset(chosen)

    return frozenset(range(n))

# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Value types shared by every algorithm: graphs, mixed solutions and costs."""

import dataclasses
import fractions

import networkx as nx

from .. import exceptions


@dataclasses.dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Edges are stored as ``(u, v)`` pairs with ``u < v`` in the order they were
    given; the position of a pair in ``edges`` is its edge id.  Construction
    rejects self-loops, parallel edges and out of range endpoints with
    :class:`~mdskit.exceptions.InputError`.
    """

    n: int
    edges: tuple = ()

    adjacency: tuple = dataclasses.field(
        init=False, repr=False, compare=False
    )
    _neighbor_sets: tuple = dataclasses.field(
        init=False, repr=False, compare=False
    )
    _edge_index: dict = dataclasses.field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise exceptions.InputError(
                "vertex count must be a non-negative integer, got {!r}".format(
                    self.n
                )
            )

        canonical = []
        edge_index = {}
        neighbors = [set() for _ in range(self.n)]
        for pair in self.edges:
            u, v = pair
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise exceptions.InputError(
                    "edge {} references a vertex outside 0..{}".format(
                        (u, v), self.n - 1
                    )
                )
            if u == v:
                raise exceptions.InputError(
                    "self-loop on vertex {}".format(u)
                )
            key = (u, v) if u < v else (v, u)
            if key in edge_index:
                raise exceptions.InputError(
                    "parallel edge {}".format(key)
                )
            edge_index[key] = len(canonical)
            canonical.append(key)
            neighbors[u].add(v)
            neighbors[v].add(u)

        object.__setattr__(self, "edges", tuple(canonical))
        object.__setattr__(self, "_edge_index", edge_index)
        object.__setattr__(
            self, "_neighbor_sets", tuple(frozenset(s) for s in neighbors)
        )
        object.__setattr__(
            self, "adjacency", tuple(tuple(sorted(s)) for s in neighbors)
        )

    @property
    def m(self):
        return len(self.edges)

    def vertices(self):
        return range(self.n)

    def neighbors(self, v):
        """Return the neighbors of ``v`` as a frozenset."""
        return self._neighbor_sets[v]

    def degree(self, v):
        return len(self._neighbor_sets[v])

    def has_edge(self, u, v):
        return (min(u, v), max(u, v)) in self._edge_index

    def edge_id(self, u, v):
        """Return the id of edge ``{u, v}``.

        :raises InputError: if the edge is not in the graph.
        """
        try:
            return self._edge_index[(min(u, v), max(u, v))]
        except KeyError:
            raise exceptions.InputError(
                "({}, {}) is not an edge of the graph".format(u, v)
            )

    def endpoints(self, edge_ids):
        """Return V(M) for a collection of edge ids."""
        result = set()
        for e in edge_ids:
            result.update(self.edges[e])
        return frozenset(result)

    def isolated_vertices(self):
        return tuple(v for v in range(self.n) if not self._neighbor_sets[v])

    def induced_subgraph(self, vertices):
        """Return ``(subgraph, original_ids)``.

        Vertices of the subgraph are renumbered ``0..len(vertices)-1`` in
        increasing original id; ``original_ids[i]`` is the id in this graph.
        """
        original_ids = tuple(sorted(vertices))
        local = {v: i for i, v in enumerate(original_ids)}
        sub_edges = [
            (local[u], local[v])
            for (u, v) in self.edges
            if u in local and v in local
        ]
        return Graph(len(original_ids), tuple(sub_edges)), original_ids

    def to_networkx(self):
        result = nx.Graph()
        result.add_nodes_from(range(self.n))
        result.add_edges_from(self.edges)
        return result

    @classmethod
    def from_networkx(cls, nx_graph):
        """Build a Graph from a networkx graph, relabelling nodes in sorted order.

        Edges are emitted sorted, so equal networkx graphs give equal Graphs.
        """
        nodes = sorted(nx_graph.nodes())
        local = {v: i for i, v in enumerate(nodes)}
        pairs = sorted(
            (min(local[u], local[v]), max(local[u], local[v]))
            for u, v in nx_graph.edges()
        )
        return cls(len(nodes), tuple(pairs))


@dataclasses.dataclass(frozen=True)
class MixedSolution:
    """A set ``vertices`` (D) together with a set of ``edge_ids`` (M)."""

    vertices: frozenset = frozenset()
    edge_ids: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edge_ids", frozenset(self.edge_ids))

    @property
    def size(self):
        return len(self.vertices) + len(self.edge_ids)

    @classmethod
    def from_pairs(cls, graph, vertices, pairs):
        """Build a solution from vertex ids and ``(u, v)`` edge pairs."""
        return cls(
            frozenset(vertices),
            frozenset(graph.edge_id(u, v) for u, v in pairs),
        )

    def edge_pairs(self, graph):
        return sorted(graph.edges[e] for e in self.edge_ids)

    def check_ids(self, graph):
        """Raise InputError if any id does not belong to ``graph``."""
        for v in self.vertices:
            if not (isinstance(v, int) and 0 <= v < graph.n):
                raise exceptions.InputError(
                    "solution vertex {!r} is out of range 0..{}".format(
                        v, graph.n - 1
                    )
                )
        for e in self.edge_ids:
            if not (isinstance(e, int) and 0 <= e < graph.m):
                raise exceptions.InputError(
                    "solution edge id {!r} is out of range 0..{}".format(
                        e, graph.m - 1
                    )
                )

    def union(self, other):
        return MixedSolution(
            self.vertices | other.vertices,
            self.edge_ids | other.edge_ids,
        )


@dataclasses.dataclass(frozen=True, order=True)
class Cost:
    """``|D| + |P| / 2`` kept as an integer number of half-units."""

    halves: int = 0

    def __post_init__(self):
        if self.halves < 0:
            raise exceptions.InputError("cost cannot be negative")

    @classmethod
    def of(cls, dominators, paired):
        return cls(2 * len(dominators) + len(paired))

    @property
    def value(self):
        return fractions.Fraction(self.halves, 2)

    def __add__(self, other):
        return Cost(self.halves + other.halves)

    def exceeds(self, budget):
        """True when this cost is strictly above the integer ``budget``."""
        return self.halves > 2 * budget

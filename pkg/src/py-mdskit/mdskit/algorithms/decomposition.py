# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Tree decompositions: validation, heuristics, lifting and nice form."""

import dataclasses
import enum

import networkx as nx
from networkx.algorithms import approximation

from .. import exceptions


@dataclasses.dataclass(frozen=True)
class TreeDecomposition:
    """Bags over vertex ids plus the edges of the tree joining them.

    ``tree_edges`` holds pairs of bag indices.
    """

    bags: tuple
    tree_edges: tuple = ()

    def __post_init__(self):
        object.__setattr__(
            self, "bags", tuple(frozenset(b) for b in self.bags)
        )
        object.__setattr__(
            self,
            "tree_edges",
            tuple((min(a, b), max(a, b)) for a, b in self.tree_edges),
        )

    @property
    def width(self):
        return max((len(b) for b in self.bags), default=0) - 1

    def tree(self):
        result = nx.Graph()
        result.add_nodes_from(range(len(self.bags)))
        result.add_edges_from(self.tree_edges)
        return result


def validate_decomposition(td, graph):
    """Raise DecompositionError unless ``td`` is a tree decomposition of ``graph``.

    :raises DecompositionError: naming the first check that fails
    """

    if not td.bags:
        raise exceptions.DecompositionError("decomposition has no bags")
    for a, b in td.tree_edges:
        if not (0 <= a < len(td.bags) and 0 <= b < len(td.bags)) or a == b:
            raise exceptions.DecompositionError(
                "tree edge ({}, {}) does not join two bags".format(a, b)
            )

    tree = td.tree()
    if tree.number_of_edges() != len(td.tree_edges) or not nx.is_tree(tree):
        raise exceptions.DecompositionError("the bags do not form a tree")

    holders = [[] for _ in range(graph.n)]
    for index, bag in enumerate(td.bags):
        for v in bag:
            if not (isinstance(v, int) and 0 <= v < graph.n):
                raise exceptions.DecompositionError(
                    "bag {} holds unknown vertex {!r}".format(index, v)
                )
            holders[v].append(index)

    for v, bags in enumerate(holders):
        if not bags:
            raise exceptions.DecompositionError(
                "vertex {} is in no bag".format(v)
            )

    for u, v in graph.edges:
        if not any(v in td.bags[b] for b in holders[u]):
            raise exceptions.DecompositionError(
                "edge ({}, {}) is in no bag".format(u, v)
            )

    for v, bags in enumerate(holders):
        if not nx.is_connected(tree.subgraph(bags)):
            raise exceptions.DecompositionError(
                "the bags holding vertex {} are not connected".format(v)
            )


_HEURISTICS = {
    "min_fill": approximation.treewidth_min_fill_in,
    "min_degree": approximation.treewidth_min_degree,
}


def heuristic_decomposition(graph, heuristic="min_fill"):
    """Build a tree decomposition from an elimination ordering.

    :param Graph graph: the graph
    :param str heuristic: ``"min_fill"`` or ``"min_degree"``
    :rtype: TreeDecomposition
    :raises InputError: on an unknown heuristic
    """

    try:
        builder = _HEURISTICS[heuristic]
    except KeyError:
        raise exceptions.InputError(
            "unknown decomposition heuristic {!r}, expected one of {}".format(
                heuristic, sorted(_HEURISTICS)
            )
        )

    if graph.n == 0:
        return TreeDecomposition((frozenset(),))

    _, decomposition = builder(graph.to_networkx())
    bags = sorted(decomposition.nodes(), key=lambda b: (len(b), sorted(b)))
    index = {bag: i for i, bag in enumerate(bags)}
    tree_edges = sorted(
        (min(index[a], index[b]), max(index[a], index[b]))
        for a, b in decomposition.edges()
    )
    return TreeDecomposition(tuple(bags), tuple(tree_edges))


def lift_to_incidence(td, graph):
    """Turn a decomposition of ``graph`` into one of its incidence graph.

    For every edge e = (u, v) a bag {u, v, n + e} is hung off the first bag
    holding both endpoints.  The width becomes at most max(width, 2).

    :raises DecompositionError: if ``td`` does not decompose ``graph``
    """

    validate_decomposition(td, graph)

    bags = list(td.bags)
    tree_edges = list(td.tree_edges)
    for e, (u, v) in enumerate(graph.edges):
        anchor = next(
            i for i, bag in enumerate(td.bags) if u in bag and v in bag
        )
        bags.append(frozenset((u, v, graph.n + e)))
        tree_edges.append((anchor, len(bags) - 1))
    return TreeDecomposition(tuple(bags), tuple(tree_edges))


class NodeKind(enum.Enum):
    LEAF = "leaf"
    INTRODUCE_VERTEX = "introduce_vertex"
    INTRODUCE_EDGE = "introduce_edge"
    FORGET = "forget"
    JOIN = "join"


@dataclasses.dataclass(frozen=True)
class NiceNode:
    kind: NodeKind
    bag: frozenset
    children: tuple = ()
    vertex: int = None
    edge: tuple = None


@dataclasses.dataclass(frozen=True)
class NiceDecomposition:
    """Nodes listed children first; the last node is the root."""

    nodes: tuple

    @property
    def root(self):
        return len(self.nodes) - 1

    @property
    def width(self):
        return max((len(node.bag) for node in self.nodes), default=0) - 1

    def validate(self, graph):
        """Raise DecompositionError unless this is a nice decomposition of
        ``graph``."""

        def fail(index, message):
            raise exceptions.DecompositionError(
                "nice node {}: {}".format(index, message)
            )

        if not self.nodes:
            raise exceptions.DecompositionError("no nodes")
        if self.nodes[self.root].bag:
            fail(self.root, "root bag is not empty")

        parents = [0] * len(self.nodes)
        introduced = set()
        forgotten = set()
        for index, node in enumerate(self.nodes):
            for child in node.children:
                if not 0 <= child < index:
                    fail(index, "child {} is not listed before it".format(child))
                parents[child] += 1
            child_bags = [self.nodes[c].bag for c in node.children]

            if node.kind is NodeKind.LEAF:
                if node.children or node.bag:
                    fail(index, "leaf must be empty and childless")
            elif node.kind is NodeKind.JOIN:
                if len(child_bags) != 2 or any(
                    b != node.bag for b in child_bags
                ):
                    fail(index, "join needs two children with its bag")
            else:
                if len(child_bags) != 1:
                    fail(index, "needs exactly one child")
                (below,) = child_bags
                if node.kind is NodeKind.INTRODUCE_VERTEX:
                    if node.vertex in below or node.bag != below | {node.vertex}:
                        fail(index, "bad introduce of {}".format(node.vertex))
                elif node.kind is NodeKind.FORGET:
                    if node.vertex not in below or node.bag != below - {
                        node.vertex
                    }:
                        fail(index, "bad forget of {}".format(node.vertex))
                    if node.vertex in forgotten:
                        fail(index, "{} forgotten twice".format(node.vertex))
                    forgotten.add(node.vertex)
                else:
                    u, v = node.edge
                    if node.bag != below or u not in below or v not in below:
                        fail(index, "edge {} not inside the bag".format(
                            node.edge))
                    if not graph.has_edge(u, v):
                        fail(index, "{} is not an edge".format(node.edge))
                    key = (min(u, v), max(u, v))
                    if key in introduced:
                        fail(index, "edge {} introduced twice".format(key))
                    introduced.add(key)

        if any(count != 1 for count in parents[:-1]) or parents[-1]:
            raise exceptions.DecompositionError(
                "nodes do not form a single rooted tree"
            )
        if forgotten != set(graph.vertices()):
            raise exceptions.DecompositionError(
                "vertices never forgotten: {}".format(
                    sorted(set(graph.vertices()) - forgotten)
                )
            )
        if introduced != set(graph.edges):
            raise exceptions.DecompositionError(
                "edges never introduced: {}".format(
                    sorted(set(graph.edges) - introduced)
                )
            )


class _NiceBuilder:
    def __init__(self, graph):
        self.graph = graph
        self.nodes = []
        self.introduced = set()

    def _add(self, node):
        self.nodes.append(node)
        return len(self.nodes) - 1

    def leaf(self):
        return self._add(NiceNode(NodeKind.LEAF, frozenset()))

    def introduce(self, top, v):
        bag = self.nodes[top].bag | {v}
        return self._add(
            NiceNode(NodeKind.INTRODUCE_VERTEX, bag, (top,), vertex=v)
        )

    def forget(self, top, v):
        bag = self.nodes[top].bag
        for w in sorted(self.graph.neighbors(v) & bag):
            key = (min(v, w), max(v, w))
            if key in self.introduced:
                continue
            self.introduced.add(key)
            top = self._add(
                NiceNode(NodeKind.INTRODUCE_EDGE, bag, (top,), edge=key)
            )
        return self._add(
            NiceNode(NodeKind.FORGET, bag - {v}, (top,), vertex=v)
        )

    def join(self, left, right):
        bag = self.nodes[left].bag
        return self._add(NiceNode(NodeKind.JOIN, bag, (left, right)))

    def retarget(self, top, bag):
        """Forget then introduce until the top bag equals ``bag``."""

        for v in sorted(self.nodes[top].bag - bag):
            top = self.forget(top, v)
        for v in sorted(bag - self.nodes[top].bag):
            top = self.introduce(top, v)
        return top


def to_nice_decomposition(td, graph):
    """Convert ``td`` into a :class:`NiceDecomposition` of ``graph``.

    The tree is rooted at bag 0.  Every edge is introduced right before its
    first endpoint is forgotten, joins are binary and the root bag is empty.
    The width does not change.

    :raises DecompositionError: if ``td`` does not decompose ``graph``
    """

    validate_decomposition(td, graph)

    tree = td.tree()
    order = list(nx.dfs_postorder_nodes(tree, source=0))
    parent = {0: None}
    for a, b in nx.dfs_edges(tree, source=0):
        parent[b] = a

    builder = _NiceBuilder(graph)
    tops = {}
    pending = {t: [] for t in tree.nodes()}
    for t in order:
        bag = td.bags[t]
        branches = [builder.retarget(top, bag) for top in pending.pop(t)]
        if not branches:
            branches = [builder.retarget(builder.leaf(), bag)]
        top = branches[0]
        for other in branches[1:]:
            top = builder.join(top, other)
        tops[t] = top
        if parent[t] is not None:
            pending[parent[t]].append(top)

    builder.retarget(tops[0], frozenset())
    return NiceDecomposition(tuple(builder.nodes))

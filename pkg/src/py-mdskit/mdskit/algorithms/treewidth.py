# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Mixed domination over a tree decomposition.

A mixed dominating set of G is the same thing as a distance-2 dominating set
of its incidence graph I(G).  The decomposition of G is lifted to I(G), put
into nice form and a five-label table is run over it.
"""

import collections
import dataclasses
import enum
import logging
import time

from .. import (
    core,
    exceptions,
)
from . import decomposition


class D2Label(enum.IntEnum):
    """Per-vertex labels of the distance-2 table.

    ``D1`` vertices need a selected neighbor and ``D2`` vertices need a
    neighbor that is selected or ``D1``.  ``OK`` means that neighbor has
    already been seen across an introduced edge, ``PEND`` that it has not.
    """

    SEL = 0
    D1_OK = 1
    D1_PEND = 2
    D2_OK = 3
    D2_PEND = 4


_INTRODUCED_AS = (D2Label.SEL, D2Label.D1_PEND, D2Label.D2_PEND)
_FORGETTABLE = frozenset((D2Label.SEL, D2Label.D1_OK, D2Label.D2_OK))
_CLASS = {
    D2Label.SEL: 0,
    D2Label.D1_OK: 1,
    D2Label.D1_PEND: 1,
    D2Label.D2_OK: 2,
    D2Label.D2_PEND: 2,
}
_LABELS = len(D2Label)


def _upgrade(label, other):
    """The label after an edge to a vertex labelled ``other`` appears."""

    if label is D2Label.D1_PEND and other is D2Label.SEL:
        return D2Label.D1_OK
    if label is D2Label.D2_PEND and _CLASS[other] <= 1:
        return D2Label.D2_OK
    return label


def _combine(left, right):
    if left in (D2Label.D1_OK, D2Label.D2_OK):
        return left
    return right


@dataclasses.dataclass
class TreewidthStats:
    width: int = None
    lifted_width: int = None
    nice_nodes: int = 0
    max_table: int = 0
    wall_ms: float = 0.0

    def to_json(self):
        return dataclasses.asdict(self)


def _offer(table, key, cost, back):
    current = table.get(key)
    if current is None or cost < current[0]:
        table[key] = (cost, back)


def distance2_dp(h, nd, stats=None):
    """Return a minimum distance-2 dominating set of ``h``.

    Each table maps a label tuple over the sorted bag to ``(selected count,
    back pointer)``.  Among equal counts the first entry found is kept.

    :param Graph h: the graph
    :param NiceDecomposition nd: a nice decomposition of ``h``
    :rtype: frozenset
    :raises DecompositionError: if ``nd`` does not decompose ``h``
    """

    nd.validate(h)
    debug = core.debug_checks_enabled()
    NodeKind = decomposition.NodeKind

    tables = []
    orders = []
    for node in nd.nodes:
        order = tuple(sorted(node.bag))
        orders.append(order)
        table = collections.OrderedDict()

        if node.kind is NodeKind.LEAF:
            table[()] = (0, None)

        elif node.kind is NodeKind.INTRODUCE_VERTEX:
            (child,) = node.children
            at = order.index(node.vertex)
            for key, (cost, _) in tables[child].items():
                for label in _INTRODUCED_AS:
                    new_key = key[:at] + (label,) + key[at:]
                    _offer(
                        table,
                        new_key,
                        cost + (label is D2Label.SEL),
                        (key,),
                    )

        elif node.kind is NodeKind.INTRODUCE_EDGE:
            (child,) = node.children
            a, b = node.edge
            ia, ib = order.index(a), order.index(b)
            for key, (cost, _) in tables[child].items():
                labels = list(key)
                labels[ia] = _upgrade(key[ia], key[ib])
                labels[ib] = _upgrade(key[ib], key[ia])
                _offer(table, tuple(labels), cost, (key,))

        elif node.kind is NodeKind.FORGET:
            (child,) = node.children
            at = orders[child].index(node.vertex)
            for key, (cost, _) in tables[child].items():
                if key[at] not in _FORGETTABLE:
                    continue
                _offer(table, key[:at] + key[at + 1:], cost, (key,))

        else:
            left, right = node.children
            by_class = collections.defaultdict(list)
            for key, (cost, _) in tables[right].items():
                by_class[tuple(_CLASS[x] for x in key)].append((key, cost))
            for lkey, (lcost, _) in tables[left].items():
                signature = tuple(_CLASS[x] for x in lkey)
                shared = sum(1 for x in lkey if x is D2Label.SEL)
                for rkey, rcost in by_class.get(signature, ()):
                    merged = tuple(
                        _combine(x, y) for x, y in zip(lkey, rkey)
                    )
                    _offer(
                        table, merged, lcost + rcost - shared, (lkey, rkey)
                    )

        if debug and len(table) > _LABELS ** len(order):
            raise exceptions.ContractViolationError(
                "table of node {} has {} entries for a bag of {}".format(
                    len(tables), len(table), len(order)
                )
            )
        if stats is not None:
            stats.max_table = max(stats.max_table, len(table))
        tables.append(table)

    root = nd.root
    if () not in tables[root]:
        raise exceptions.ContractViolationError("the root table is empty")

    selected = set()
    stack = [(root, ())]
    while stack:
        index, key = stack.pop()
        node = nd.nodes[index]
        _, back = tables[index][key]
        if node.kind is NodeKind.LEAF:
            continue
        if node.kind is NodeKind.INTRODUCE_VERTEX:
            if key[orders[index].index(node.vertex)] is D2Label.SEL:
                selected.add(node.vertex)
        for child, child_key in zip(node.children, back):
            stack.append((child, child_key))

    return frozenset(selected)


def solve_treewidth(graph, td=None, heuristic="min_fill", stats=None):
    """Return a minimum mixed dominating set via the incidence graph.

    :param Graph graph: the graph
    :param TreeDecomposition td: a decomposition of ``graph``; computed with
                                 ``heuristic`` when omitted
    :param str heuristic: ``"min_fill"`` or ``"min_degree"``
    :param TreewidthStats stats: filled in when given
    :rtype: MixedSolution
    :raises DecompositionError: if ``td`` does not decompose ``graph``
    """

    stats = stats if stats is not None else TreewidthStats()
    started = time.perf_counter()

    if td is None:
        td = decomposition.heuristic_decomposition(graph, heuristic)
    else:
        decomposition.validate_decomposition(td, graph)

    h, _ = core.incidence_graph(graph)
    lifted = decomposition.lift_to_incidence(td, graph)
    nice = decomposition.to_nice_decomposition(lifted, h)
    selected = distance2_dp(h, nice, stats)
    result = core.solution_from_incidence(graph, selected)

    stats.width = td.width
    stats.lifted_width = lifted.width
    stats.nice_nodes = len(nice.nodes)
    stats.wall_ms = (time.perf_counter() - started) * 1000.0
    logging.debug(
        "solve_treewidth: n=%d width=%d nice_nodes=%d max_table=%d",
        graph.n, td.width, stats.nice_nodes, stats.max_table
    )
    return result

# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Ordinary graph families for tests and benchmarks."""

import itertools
import random

import networkx as nx

from .. import (
    core,
    exceptions,
)

KINDS = ("random", "path", "cycle", "tree", "star", "complete")


def _random(n, p, seed):
    if not 0.0 <= p <= 1.0:
        raise exceptions.InputError(
            "edge probability must be in [0, 1], got {}".format(p)
        )
    return nx.gnp_random_graph(n, p, seed=seed)


def _cycle(n):
    if n < 3:
        raise exceptions.InputError(
            "a cycle needs at least 3 vertices, got {}".format(n)
        )
    return nx.cycle_graph(n)


def _tree(n, seed):
    if n <= 2:
        return nx.path_graph(n)
    rng = random.Random(seed)
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    return nx.from_prufer_sequence(sequence)


def gen_instance(kind, n, p=0.5, seed=0):
    """Return a graph of the family ``kind`` on ``n`` vertices.

    ``random`` draws each edge independently with probability ``p``;
    ``tree`` decodes a random Prüfer sequence; ``star`` is K1,n-1.  The same
    seed always gives the same graph.

    :param str kind: one of :data:`KINDS`
    :param int n: vertex count
    :param float p: edge probability for ``random``
    :param int seed: random seed for ``random`` and ``tree``
    :rtype: Graph
    :raises InputError: if ``n < 1`` or ``kind`` is unknown
    """

    if n < 1:
        raise exceptions.InputError(
            "need at least one vertex, got {}".format(n)
        )

    if kind == "random":
        result = _random(n, p, seed)
    elif kind == "path":
        result = nx.path_graph(n)
    elif kind == "cycle":
        result = _cycle(n)
    elif kind == "tree":
        result = _tree(n, seed)
    elif kind == "star":
        result = nx.star_graph(n - 1)
    elif kind == "complete":
        result = nx.complete_graph(n)
    else:
        raise exceptions.InputError(
            "unknown instance kind {!r}, expected one of {}".format(
                kind, ", ".join(KINDS)
            )
        )
    return core.Graph.from_networkx(result)


def all_labeled_graphs(n):
    """Yield every graph on vertices 0..n-1, 2^(n choose 2) of them.

    The i-th graph keeps the pairs of ``itertools.combinations(range(n), 2)``
    whose bit is set in i.
    """

    if n < 0:
        raise exceptions.InputError("n must be non-negative")
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield core.Graph(
            n,
            tuple(pair for bit, pair in enumerate(pairs) if mask >> bit & 1),
        )

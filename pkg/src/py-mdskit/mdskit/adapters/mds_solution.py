# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Adapter for mixed dominating set solutions.

.. code-block:: text

    s mds <size>
    v <id>
    e <u> <v>

``v`` lines list D and ``e`` lines list M, 1-indexed.  Both directions need
the graph, passed as ``graph=``, to translate edge pairs.
"""

from .. import (
    core,
    exceptions,
)
from . import line_format_utils


def _require_graph(graph):
    if graph is None:
        raise exceptions.InputError(
            "the mds_solution adapter needs the graph (graph=...)"
        )


def read_from_string(input_str, graph=None):
    """Parse a solution of ``graph``.

    :rtype: MixedSolution
    :raises ParseError: on malformed input or ids outside the graph
    """

    _require_graph(graph)
    lines = line_format_utils.significant_lines(input_str)
    header_line, (size,) = line_format_utils.expect_header(
        lines, "s", "mds", 1
    )

    vertices = set()
    edge_ids = set()
    last_line = header_line
    for line, tokens in lines:
        last_line = line
        kind = tokens[0]
        if kind == "v" and len(tokens) == 2:
            vertices.add(
                line_format_utils.parse_int(
                    tokens[1], line, 1, graph.n, "vertex"
                ) - 1
            )
        elif kind == "e" and len(tokens) == 3:
            u, v = (
                line_format_utils.parse_int(t, line, 1, graph.n, "vertex") - 1
                for t in tokens[1:]
            )
            try:
                edge_ids.add(graph.edge_id(u, v))
            except exceptions.InputError:
                raise exceptions.ParseError(
                    "not an edge of the graph", line, " ".join(tokens[1:])
                )
        else:
            raise exceptions.ParseError(
                "expected 'v <id>' or 'e <u> <v>'", line, " ".join(tokens)
            )

    solution = core.MixedSolution(frozenset(vertices), frozenset(edge_ids))
    if solution.size != size:
        raise exceptions.ParseError(
            "header announces size {}, found {}".format(size, solution.size),
            last_line,
        )
    return solution


def write_to_string(input_obj, graph=None):
    """Serialize a MixedSolution of ``graph``."""

    _require_graph(graph)
    lines = ["s mds {}".format(input_obj.size)]
    lines.extend("v {}".format(v + 1) for v in sorted(input_obj.vertices))
    lines.extend(
        "e {} {}".format(u + 1, v + 1) for u, v in input_obj.edge_pairs(graph)
    )
    return "\n".join(lines) + "\n"

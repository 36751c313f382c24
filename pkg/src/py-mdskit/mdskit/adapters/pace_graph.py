# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Adapter for PACE-style graph files.

.. code-block:: text

    c a comment
    p mds <n> <m>
    <u> <v>
    ...

Vertices are 1-indexed in the file and 0-indexed in memory.
"""

from .. import (
    core,
    exceptions,
)
from . import line_format_utils


def read_from_string(input_str):
    """Parse a graph.

    :rtype: Graph
    :raises ParseError: on malformed input, naming the line and token
    """

    lines = line_format_utils.significant_lines(input_str)
    header_line, (n, m) = line_format_utils.expect_header(lines, "p", "mds", 2)

    edges = []
    seen = {}
    last_line = header_line
    for line, tokens in lines:
        last_line = line
        if len(tokens) != 2:
            raise exceptions.ParseError(
                "edge lines have two endpoints", line, " ".join(tokens)
            )
        u, v = (
            line_format_utils.parse_int(t, line, 1, n, "vertex")
            for t in tokens
        )
        if u == v:
            raise exceptions.ParseError("self-loop", line, tokens[0])
        key = (min(u, v), max(u, v))
        if key in seen:
            raise exceptions.ParseError(
                "parallel edge, first seen on line {}".format(seen[key]),
                line,
                " ".join(tokens),
            )
        seen[key] = line
        edges.append((u - 1, v - 1))

    if len(edges) != m:
        raise exceptions.ParseError(
            "header announces {} edges, found {}".format(m, len(edges)),
            last_line,
        )
    return core.Graph(n, tuple(edges))


def write_to_string(input_obj):
    """Serialize a Graph."""

    lines = ["p mds {} {}".format(input_obj.n, input_obj.m)]
    lines.extend("{} {}".format(u + 1, v + 1) for u, v in input_obj.edges)
    return "\n".join(lines) + "\n"

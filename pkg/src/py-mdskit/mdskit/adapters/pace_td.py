# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Adapter for PACE-style tree decomposition files.

.. code-block:: text

    s td <bags> <width + 1> <n>
    b <id> <v> ...
    <b1> <b2>

Bags and vertices are 1-indexed in the file.
"""

from .. import exceptions
from ..algorithms import decomposition
from . import line_format_utils


def read_from_string(input_str):
    """Parse a tree decomposition.

    Only the file's own consistency is checked here; use
    :func:`mdskit.algorithms.validate_decomposition` against a graph.

    :rtype: TreeDecomposition
    :raises ParseError: on malformed input
    """

    lines = line_format_utils.significant_lines(input_str)
    header_line, (count, largest, n) = line_format_utils.expect_header(
        lines, "s", "td", 3
    )

    bags = [None] * count
    tree_edges = []
    last_line = header_line
    for line, tokens in lines:
        last_line = line
        if tokens[0] == "b":
            if len(tokens) < 2:
                raise exceptions.ParseError("bag line needs an id", line, "b")
            index = line_format_utils.parse_int(
                tokens[1], line, 1, count, "bag id"
            ) - 1
            if bags[index] is not None:
                raise exceptions.ParseError("repeated bag id", line, tokens[1])
            members = frozenset(
                line_format_utils.parse_int(t, line, 1, n, "vertex") - 1
                for t in tokens[2:]
            )
            if len(members) > largest:
                raise exceptions.ParseError(
                    "bag larger than the announced {}".format(largest),
                    line,
                    tokens[1],
                )
            bags[index] = members
        elif len(tokens) == 2:
            a, b = (
                line_format_utils.parse_int(t, line, 1, count, "bag id") - 1
                for t in tokens
            )
            tree_edges.append((a, b))
        else:
            raise exceptions.ParseError(
                "expected a bag line or a tree edge", line, " ".join(tokens)
            )

    missing = [i + 1 for i, bag in enumerate(bags) if bag is None]
    if missing:
        raise exceptions.ParseError(
            "bags never listed: {}".format(missing), last_line
        )
    return decomposition.TreeDecomposition(tuple(bags), tuple(tree_edges))


def write_to_string(input_obj, n=None):
    """Serialize a TreeDecomposition.

    :param int n: vertex count for the header; the largest id + 1 if omitted
    """

    if n is None:
        n = max((max(bag) + 1 for bag in input_obj.bags if bag), default=0)
    lines = [
        "s td {} {} {}".format(len(input_obj.bags), input_obj.width + 1, n)
    ]
    for index, bag in enumerate(input_obj.bags):
        lines.append(
            " ".join(["b", str(index + 1)] + [str(v + 1) for v in sorted(bag)])
        )
    lines.extend("{} {}".format(a + 1, b + 1) for a, b in input_obj.tree_edges)
    return "\n".join(lines) + "\n"

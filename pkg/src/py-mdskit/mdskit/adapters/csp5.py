# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Adapter for q-CSP-5 instance files.

.. code-block:: text

    p csp5 <n> <m> <q>
    x <i1> ... <iq>
    a <v1> ... <vq>
    a ...

Each ``x`` line opens a constraint over 1-indexed variables and the ``a``
lines after it list its allowed values (0 to 4).
"""

from .. import exceptions
from ..generators import csp
from . import line_format_utils


def read_from_string(input_str):
    """Parse an instance; it is not normalized.

    :rtype: Csp5Instance
    :raises ParseError: on malformed input
    """

    lines = line_format_utils.significant_lines(input_str)
    header_line, (n, m, q) = line_format_utils.expect_header(
        lines, "p", "csp5", 3
    )

    constraints = []
    current = None
    last_line = header_line
    for line, tokens in lines:
        last_line = line
        kind, rest = tokens[0], tokens[1:]
        if kind == "x":
            if not 1 <= len(rest) <= q:
                raise exceptions.ParseError(
                    "a constraint has 1..{} variables".format(q),
                    line,
                    " ".join(tokens),
                )
            current = (
                tuple(
                    line_format_utils.parse_int(t, line, 1, n, "variable") - 1
                    for t in rest
                ),
                [],
            )
            constraints.append(current)
        elif kind == "a":
            if current is None:
                raise exceptions.ParseError(
                    "assignment before any 'x' line", line, "a"
                )
            if len(rest) != len(current[0]):
                raise exceptions.ParseError(
                    "assignment length differs from the constraint arity",
                    line,
                    " ".join(tokens),
                )
            current[1].append(
                tuple(
                    line_format_utils.parse_int(
                        t, line, 0, csp.ALPHABET - 1, "value"
                    )
                    for t in rest
                )
            )
        else:
            raise exceptions.ParseError(
                "expected an 'x' or 'a' line", line, kind
            )

    if len(constraints) != m:
        raise exceptions.ParseError(
            "header announces {} constraints, found {}".format(
                m, len(constraints)
            ),
            last_line,
        )
    try:
        return csp.Csp5Instance(
            n,
            q,
            tuple(
                csp.Constraint(variables, assignments)
                for variables, assignments in constraints
            ),
        )
    except exceptions.InputError as err:
        raise exceptions.ParseError(str(err))


def write_to_string(input_obj):
    """Serialize a Csp5Instance."""

    lines = ["p csp5 {} {} {}".format(input_obj.n, input_obj.m, input_obj.q)]
    for constraint in input_obj.constraints:
        lines.append(
            " ".join(["x"] + [str(v + 1) for v in constraint.variables])
        )
        for listed in constraint.assignments:
            lines.append(" ".join(["a"] + [str(x) for x in listed]))
    return "\n".join(lines) + "\n"

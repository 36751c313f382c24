# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Common utilities used by the line oriented text adapters."""

from .. import exceptions

COMMENT = "c"


def significant_lines(input_str):
    """Yield ``(line_number, tokens)`` for every non-blank, non-comment line.

    Line numbers are 1-indexed.
    """

    for number, raw in enumerate(input_str.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == COMMENT:
            continue
        yield number, tokens


def parse_int(token, line, low=None, high=None, what="value"):
    """Parse ``token`` as an integer in ``[low, high]``.

    :raises ParseError: naming ``line`` and ``token``
    """

    try:
        value = int(token)
    except ValueError:
        raise exceptions.ParseError(
            "expected an integer {}".format(what), line, token
        )
    if (low is not None and value < low) or (high is not None and value > high):
        raise exceptions.ParseError(
            "{} out of range {}..{}".format(
                what,
                low if low is not None else "",
                high if high is not None else "",
            ),
            line,
            token,
        )
    return value


def expect_header(lines, keyword, kind, count):
    """Return the integer fields of the ``keyword kind <count ints>`` header.

    :raises ParseError: if the first significant line is not that header
    """

    try:
        line, tokens = next(lines)
    except StopIteration:
        raise exceptions.ParseError(
            "missing '{} {}' header".format(keyword, kind)
        )
    if tokens[:2] != [keyword, kind]:
        raise exceptions.ParseError(
            "expected '{} {}' header".format(keyword, kind),
            line,
            " ".join(tokens[:2]),
        )
    if len(tokens) != 2 + count:
        raise exceptions.ParseError(
            "header needs {} fields".format(count), line, " ".join(tokens)
        )
    return line, [
        parse_int(t, line, low=0, what="header field") for t in tokens[2:]
    ]

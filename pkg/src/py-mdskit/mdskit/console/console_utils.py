# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Utilities for mdskit commandline modules."""

import json
import logging
import sys

# process exit codes
EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_SOLVER_FAILURE = 3


def configure_logging(verbose):
    """Send log records to stderr, DEBUG with ``verbose`` else WARNING."""

    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def json_line(obj):
    """One compact JSON object per line, keys sorted."""

    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def report_error(err):
    sys.stderr.write("error: {}\n".format(err))


def pretty_table(rows, columns):
    """Render ``rows`` (dicts) as an aligned text table over ``columns``."""

    cells = [[str(c) for c in columns]]
    for row in rows:
        cells.append(
            ["-" if row.get(c) is None else str(row.get(c)) for c in columns]
        )
    widths = [max(len(line[i]) for line in cells) for i in range(len(columns))]
    return "\n".join(
        "  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip()
        for line in cells
    ) + "\n"

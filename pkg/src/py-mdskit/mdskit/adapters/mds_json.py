# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Adapter for JSON documents: construction sidecars, reports and baselines."""

import json

from .. import exceptions


def read_from_string(input_str):
    """
    De-serializes a JSON document

    Args:
        input_str (str): A string containing json

    Returns:
        The decoded value
    """
    try:
        return json.loads(input_str)
    except ValueError as err:
        raise exceptions.ParseError(
            "invalid JSON: {}".format(err.msg),
            getattr(err, "lineno", None),
        )


def write_to_string(input_obj, indent=4, sort_keys=True):
    """
    Serializes a JSON-able value into a string

    Args:
        input_obj: the value
        indent (int): number of spaces for each json indentation level. Use\
            None for a single line.

    Returns:
        str: A json serialized string representation
    """

    return json.dumps(input_obj, indent=indent, sort_keys=sort_keys) + "\n"

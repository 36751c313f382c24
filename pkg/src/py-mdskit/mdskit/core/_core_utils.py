# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

import os

from .. import exceptions


def debug_checks_enabled():
    """True when ``MDSKIT_DEBUG`` is set to a non-empty value."""
    return bool(os.environ.get("MDSKIT_DEBUG"))


def thread_count(default=1):
    """Parse ``MDSKIT_THREADS``, the cap on worker processes."""

    raw = os.environ.get("MDSKIT_THREADS")
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        raise exceptions.InvalidEnvironmentVariableError(
            "MDSKIT_THREADS must be a positive integer, got: {!r}".format(raw)
        )
    return value

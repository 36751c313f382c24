# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Console scripts for mdskit"""

# flake8: noqa

# in dependency hierarchy
from . import (
    console_utils,
    report,
    mdstool,
)

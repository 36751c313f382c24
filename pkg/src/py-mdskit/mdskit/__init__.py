# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Exact and parameterized solvers for the mixed dominating set problem.

A mixed dominating set of a graph is a vertex set D plus an edge set M such
that every vertex outside D ∪ V(M) has a neighbor in D and every edge outside
M has an endpoint in D ∪ V(M).

.. moduleauthor:: Contributors to the mdskit project
"""

# flake8: noqa

# in dependency hierarchy
from . import (
    exceptions,
    core,
    plugins,
    adapters,
    algorithms,
    generators,
)

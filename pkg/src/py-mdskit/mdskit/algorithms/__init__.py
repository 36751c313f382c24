# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Solvers for mixed domination, plus small exhaustive oracles."""

# flake8: noqa
from .oracle import (
    OracleLimits,
    DEFAULT_LIMITS,
    IsolatedSplit,
    split_isolated,
    brute_force_mds,
    brute_force_eds,
    brute_force_completion,
    partition_oracle,
    distance2_brute,
)

from .exact import (
    ExactState,
    ExactRule,
    ExactStats,
    initial_state,
    measure_l,
    select_rule,
    expand,
    complete_exact,
    complete_leaf,
    solve_exact,
)

from .fpt import (
    FptState,
    FptRule,
    FptStats,
    measure_fpt,
    private_candidates,
    sanity_check,
    is_feasible_pair,
    is_compatible,
    select_rule_fpt,
    expand_fpt,
    complete_fpt,
    solve_fpt,
)

from .decomposition import (
    TreeDecomposition,
    NodeKind,
    NiceNode,
    NiceDecomposition,
    validate_decomposition,
    heuristic_decomposition,
    lift_to_incidence,
    to_nice_decomposition,
)

from .treewidth import (
    D2Label,
    TreewidthStats,
    distance2_dp,
    solve_treewidth,
)

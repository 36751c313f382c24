# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Graphs, mixed solutions and the kernels every solver builds on."""

from . graph import ( # noqa
    Graph,
    MixedSolution,
    Cost,
)

from . validation import ( # noqa
    ValidationReport,
    Violation,
    validate_mds,
    is_valid_mds,
)

from . niceness import ( # noqa
    NicePartition,
    private_neighbors,
    nice_partition,
    is_nice,
    make_nice,
    check_partition,
    sandwiched_minimal_vc,
)

from . matching import ( # noqa
    max_matching,
    min_edge_cover,
    incident_edge_cover,
)

from . covers import ( # noqa
    is_vertex_cover,
    is_minimal_vertex_cover,
    minimal_vertex_covers,
)

from . transforms import ( # noqa
    Origin,
    incidence_graph,
    solution_from_incidence,
    incidence_vertices,
    reduce_eds_to_mds,
)

from . _core_utils import ( # noqa
    debug_checks_enabled,
    thread_count,
)

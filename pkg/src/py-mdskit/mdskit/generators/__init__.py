# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Instance generators, including the lower-bound construction."""

# flake8: noqa
from .instances import (
    KINDS,
    gen_instance,
    all_labeled_graphs,
)

from .csp import (
    ALPHABET,
    Constraint,
    Csp5Instance,
    assignment_limit,
    normalize_csp,
    random_satisfiable_csp,
)

from .seth import (
    CheckerGadget,
    ConsistencyGadget,
    ConstructionOutput,
    budget,
    expected_vertex_count,
    build_seth_instance,
    build_witness_solution,
    emit_path_decomposition,
)

# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Checking mixed dominating sets."""

import collections
import dataclasses

MAX_VIOLATIONS = 100

Violation = collections.namedtuple("Violation", ["kind", "item"])
Violation.__doc__ = """An undominated element: kind is "vertex" or "edge".

For edges, item is the ``(u, v)`` pair.
"""


@dataclasses.dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple = ()
    violation_count: int = 0

    def __bool__(self):
        return self.valid

    def describe(self, one_indexed=True):
        """Return human readable lines, one per listed violation."""
        shift = 1 if one_indexed else 0
        lines = []
        for violation in self.violations:
            if violation.kind == "vertex":
                lines.append(
                    "vertex {} undominated".format(violation.item + shift)
                )
            else:
                u, v = violation.item
                lines.append(
                    "edge {} {} undominated".format(u + shift, v + shift)
                )
        hidden = self.violation_count - len(self.violations)
        if hidden > 0:
            lines.append("... and {} more".format(hidden))
        return lines


def validate_mds(graph, solution):
    """Check that ``solution`` is a mixed dominating set of ``graph``.

    Every vertex outside D ∪ V(M) needs a neighbor in D and every edge
    outside M needs an endpoint in D ∪ V(M).

    :param Graph graph: the graph
    :param MixedSolution solution: the candidate
    :returns: a report listing up to :data:`MAX_VIOLATIONS` violations
    :rtype: ValidationReport
    :raises InputError: if the solution references ids not in the graph
    """

    solution.check_ids(graph)

    dominators = solution.vertices
    covered = dominators | graph.endpoints(solution.edge_ids)

    violations = []
    count = 0
    for v in graph.vertices():
        if v in covered or not graph.neighbors(v).isdisjoint(dominators):
            continue
        count += 1
        if len(violations) < MAX_VIOLATIONS:
            violations.append(Violation("vertex", v))

    for e, (u, v) in enumerate(graph.edges):
        if e in solution.edge_ids or u in covered or v in covered:
            continue
        count += 1
        if len(violations) < MAX_VIOLATIONS:
            violations.append(Violation("edge", (u, v)))

    return ValidationReport(count == 0, tuple(violations), count)


def is_valid_mds(graph, solution):
    return validate_mds(graph, solution).valid

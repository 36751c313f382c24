# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Per-run reports printed by ``mdstool``."""

import dataclasses
import time

from .. import (
    algorithms,
    core,
    exceptions,
)

ALGOS = ("brute", "partition", "exact", "fpt", "treewidth")


@dataclasses.dataclass
class RunReport:
    """The outcome of one solver run.

    ``size`` is None when the fpt solver finds no solution within ``k``.
    ``valid`` is always recomputed with :func:`mdskit.core.validate_mds`.
    """

    algo: str
    instance: str
    size: int = None
    valid: bool = None
    stats: dict = dataclasses.field(default_factory=dict)
    wall_ms: float = 0.0
    seed: int = 0

    def to_json(self):
        result = dataclasses.asdict(self)
        result["size"] = "none" if self.size is None else self.size
        result["wall_ms"] = round(self.wall_ms, 3)
        return result


def run_solver(
    graph,
    algo,
    k=None,
    td=None,
    heuristic="min_fill",
    faithful=False,
    optimal=False,
    threads=1,
):
    """Run ``algo`` on ``graph``.

    :returns: the solution (None for a negative fpt decision) and the
              solver statistics as a JSON-able dict
    :raises InputError: for an unknown algorithm or a missing ``k``
    """

    if algo == "brute":
        return algorithms.brute_force_mds(graph), {}
    if algo == "partition":
        return algorithms.partition_oracle(graph), {}
    if algo == "exact":
        stats = algorithms.ExactStats()
        solution = algorithms.solve_exact(
            graph, faithful=faithful, threads=threads, stats=stats
        )
        return solution, stats.to_json()
    if algo == "fpt":
        if k is None:
            raise exceptions.InputError("--algo fpt needs --k")
        stats = algorithms.FptStats()
        solution = algorithms.solve_fpt(graph, k, optimal=optimal, stats=stats)
        return solution, stats.to_json()
    if algo == "treewidth":
        stats = algorithms.TreewidthStats()
        solution = algorithms.solve_treewidth(
            graph, td=td, heuristic=heuristic, stats=stats
        )
        return solution, stats.to_json()
    raise exceptions.InputError(
        "unknown algorithm {!r}, expected one of {}".format(
            algo, ", ".join(ALGOS)
        )
    )


def solve_and_report(graph, algo, instance, seed=0, **solver_args):
    """Run a solver and re-validate what it returns.

    :rtype: (MixedSolution or None, RunReport)
    """

    started = time.perf_counter()
    solution, stats = run_solver(graph, algo, **solver_args)
    report = RunReport(
        algo=algo,
        instance=instance,
        stats=stats,
        wall_ms=(time.perf_counter() - started) * 1000.0,
        seed=seed,
    )
    if solution is not None:
        report.size = solution.size
        report.valid = core.validate_mds(graph, solution).valid
    return solution, report

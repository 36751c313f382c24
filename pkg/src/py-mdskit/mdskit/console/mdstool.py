#!/usr/bin/env python
#
# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""mdstool solves, checks and generates mixed dominating set instances.

Subcommands:

    solve       run one solver on a graph file
    validate    check a solution file against a graph file
    gen         write generated instances (including the lower-bound graphs)
    bench       run several solvers over a corpus and compare their answers
    reduce-eds  apply the edge dominating set reduction to a graph file

Exit codes: 0 success, 1 negative answer (no solution within k, invalid
solution, solver disagreement), 2 input errors, 3 a solver returned an
invalid solution.
"""

import argparse
import concurrent.futures
import os
import sys

import mdskit

from . import (
    console_utils,
    report,
)

GRAPH_KINDS = ("random", "path", "cycle", "tree", "star", "complete")
INPUT_ERRORS = (
    mdskit.exceptions.InputError,
    mdskit.exceptions.OracleLimitError,
    mdskit.exceptions.DecompositionError,
    mdskit.exceptions.NoKnownAdapterForExtensionError,
    mdskit.exceptions.NotSupportedError,
    mdskit.exceptions.InvalidEnvironmentVariableError,
)
BENCH_COLUMNS = (
    "instance", "algo", "size", "branches", "wall_ms", "valid", "agree"
)


def _parsed_args(argv):
    """ parse commandline arguments with argparse """

    parser = argparse.ArgumentParser(
        prog="mdstool",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Log search statistics and plugin loading to stderr."
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    # solve
    solve = sub.add_parser("solve", help="Solve a graph file.")
    solve.add_argument("graph", help="graph file (.gr)")
    solve.add_argument(
        "--algo",
        choices=report.ALGOS,
        default="exact",
        help="Solver to run (default: %(default)s)."
    )
    _add_solver_arguments(solve)
    solve.add_argument(
        "--td",
        default=None,
        help="Tree decomposition file (.td) for --algo treewidth."
    )
    solve.add_argument(
        "-o",
        "--output",
        default=None,
        help="Write the solution here instead of stdout."
    )
    solve.set_defaults(func=cmd_solve)

    # validate
    validate = sub.add_parser(
        "validate", help="Check a solution against a graph."
    )
    validate.add_argument("graph", help="graph file (.gr)")
    validate.add_argument("solution", help="solution file (.sol)")
    validate.set_defaults(func=cmd_validate)

    # gen
    gen = sub.add_parser("gen", help="Generate instances.")
    kinds = gen.add_subparsers(dest="kind", metavar="kind")
    kinds.required = True
    for kind in GRAPH_KINDS:
        kind_parser = kinds.add_parser(kind, help="a {} graph".format(kind))
        kind_parser.add_argument("n", type=int, help="vertex count")
        if kind == "random":
            kind_parser.add_argument("p", type=float, help="edge probability")
        _add_gen_arguments(kind_parser)
    labeled = kinds.add_parser(
        "labeled", help="every labeled graph on n vertices, one file each"
    )
    labeled.add_argument("n", type=int, help="vertex count")
    _add_gen_arguments(labeled)
    csp = kinds.add_parser(
        "csp", help="a random satisfiable q-CSP-5 instance"
    )
    csp.add_argument("n", type=int, help="variable count")
    csp.add_argument("m", type=int, help="constraint count")
    csp.add_argument("q", type=int, help="arity")
    _add_gen_arguments(csp)
    seth = kinds.add_parser(
        "seth",
        help="the lower-bound graph, path decomposition and JSON sidecar"
        " of a q-CSP-5 instance"
    )
    seth.add_argument("csp", help="q-CSP-5 file")
    seth.add_argument(
        "--pendant",
        type=int,
        default=None,
        help="Pendant set size; the faithful 2k+1 when omitted."
    )
    _add_gen_arguments(seth)
    gen.set_defaults(func=cmd_gen)

    # bench
    bench = sub.add_parser(
        "bench", help="Run solvers over a directory of graph files."
    )
    bench.add_argument("corpus", help="directory of .gr files")
    bench.add_argument(
        "--algos",
        default="partition,exact,fpt,treewidth",
        help="Comma separated solvers (default: %(default)s)."
    )
    _add_solver_arguments(bench)
    bench.add_argument(
        "--pretty",
        action="store_true",
        help="Print an aligned table after the JSON lines."
    )
    bench.set_defaults(func=cmd_bench)

    # reduce-eds
    reduce_eds = sub.add_parser(
        "reduce-eds",
        help="Turn a graph into one whose MDS optimum is its EDS optimum + 1."
    )
    reduce_eds.add_argument("graph", help="graph file (.gr)")
    reduce_eds.add_argument(
        "-o",
        "--output",
        default=None,
        help="Write the reduced graph here instead of stdout."
    )
    reduce_eds.set_defaults(func=cmd_reduce_eds)

    return parser.parse_args(argv)


def _add_solver_arguments(parser):
    parser.add_argument(
        "--k",
        type=int,
        default=None,
        help="Budget for --algo fpt (bench: defaults to n)."
    )
    parser.add_argument(
        "--heuristic",
        choices=("min_fill", "min_degree"),
        default="min_fill",
        help="Decomposition heuristic for --algo treewidth without --td."
    )
    parser.add_argument(
        "--faithful",
        action="store_true",
        help="Disable branch-and-bound pruning in the exact solver."
    )
    parser.add_argument(
        "--optimal",
        action="store_true",
        help="Make the fpt solver return a minimum solution within k."
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=0,
        help="Seed recorded in the reports."
    )


def _add_gen_arguments(parser):
    parser.add_argument(
        "--seed",
        type=int,
        default=0,
        help="Random seed (default: %(default)s)."
    )
    parser.add_argument(
        "--out-dir",
        default=None,
        help="Write files into this directory instead of stdout."
    )


def _emit(text, filepath=None):
    if filepath is None:
        sys.stdout.write(text)
    else:
        with open(filepath, "w", encoding="utf-8") as fo:
            fo.write(text)


def _read_graph(filepath):
    return mdskit.adapters.read_from_file(filepath, adapter_name="pace_graph")


def cmd_solve(args):
    graph = _read_graph(args.graph)
    td = None
    if args.td is not None:
        td = mdskit.adapters.read_from_file(args.td, adapter_name="pace_td")

    solution, run = report.solve_and_report(
        graph,
        args.algo,
        args.graph,
        seed=args.seed,
        k=args.k,
        td=td,
        heuristic=args.heuristic,
        faithful=args.faithful,
        optimal=args.optimal,
        threads=mdskit.core.thread_count(),
    )

    if solution is not None:
        _emit(
            mdskit.adapters.write_to_string(
                solution, "mds_solution", graph=graph
            ),
            args.output,
        )
    sys.stdout.write(console_utils.json_line(run.to_json()) + "\n")

    if solution is None:
        return console_utils.EXIT_NEGATIVE
    if not run.valid:
        console_utils.report_error(
            "solver {} returned an invalid solution".format(args.algo)
        )
        return console_utils.EXIT_SOLVER_FAILURE
    return console_utils.EXIT_OK


def cmd_validate(args):
    graph = _read_graph(args.graph)
    solution = mdskit.adapters.read_from_file(
        args.solution, adapter_name="mds_solution", graph=graph
    )
    result = mdskit.core.validate_mds(graph, solution)
    if result.valid:
        sys.stdout.write("valid, size {}\n".format(solution.size))
        return console_utils.EXIT_OK
    sys.stdout.write("invalid\n")
    for line in result.describe():
        sys.stdout.write(line + "\n")
    return console_utils.EXIT_NEGATIVE


def _out_path(args, filename):
    return os.path.join(args.out_dir, filename)


def _require_out_dir(args):
    if args.out_dir is None:
        raise mdskit.exceptions.InputError(
            "gen {} writes several files and needs --out-dir".format(args.kind)
        )
    os.makedirs(args.out_dir, exist_ok=True)


def cmd_gen(args):
    if args.kind in GRAPH_KINDS:
        graph = mdskit.generators.gen_instance(
            args.kind, args.n, p=getattr(args, "p", 0.5), seed=args.seed
        )
        stem = "{}_{}".format(args.kind, args.n)
        if args.kind == "random":
            stem += "_p{}".format(args.p)
        if args.kind in ("random", "tree"):
            stem += "_s{}".format(args.seed)
        text = mdskit.adapters.write_to_string(graph, "pace_graph")
        if args.out_dir is None:
            _emit(text)
        else:
            os.makedirs(args.out_dir, exist_ok=True)
            _emit(text, _out_path(args, stem + ".gr"))
        return console_utils.EXIT_OK

    if args.kind == "labeled":
        _require_out_dir(args)
        for index, graph in enumerate(
            mdskit.generators.all_labeled_graphs(args.n)
        ):
            _emit(
                mdskit.adapters.write_to_string(graph, "pace_graph"),
                _out_path(args, "labeled_{}_{:05d}.gr".format(args.n, index)),
            )
        return console_utils.EXIT_OK

    if args.kind == "csp":
        instance, _ = mdskit.generators.random_satisfiable_csp(
            args.n, args.m, args.q, seed=args.seed
        )
        text = mdskit.adapters.write_to_string(instance, "csp5")
        if args.out_dir is None:
            _emit(text)
        else:
            os.makedirs(args.out_dir, exist_ok=True)
            _emit(
                text,
                _out_path(
                    args,
                    "csp_{}_{}_{}_s{}.csp".format(
                        args.n, args.m, args.q, args.seed
                    ),
                ),
            )
        return console_utils.EXIT_OK

    # seth
    _require_out_dir(args)
    instance = mdskit.adapters.read_from_file(args.csp, adapter_name="csp5")
    out = mdskit.generators.build_seth_instance(
        mdskit.generators.normalize_csp(instance),
        pendant_multiplier=args.pendant,
    )
    path_decomposition = mdskit.generators.emit_path_decomposition(out)
    stem = os.path.splitext(os.path.basename(args.csp))[0]
    mdskit.adapters.write_to_file(out.graph, _out_path(args, stem + ".gr"))
    mdskit.adapters.write_to_file(
        path_decomposition, _out_path(args, stem + ".td"), n=out.graph.n
    )
    sidecar = out.sidecar(path_decomposition)
    mdskit.adapters.write_to_file(sidecar, _out_path(args, stem + ".json"))
    sys.stdout.write(console_utils.json_line(sidecar) + "\n")
    return console_utils.EXIT_OK


def _bench_instance(job):
    """Run every requested solver on one instance; returns the report rows."""

    name, graph, algos, k, heuristic, faithful, seed = job
    rows = []
    for algo in algos:
        solver_args = dict(heuristic=heuristic, faithful=faithful)
        if algo == "fpt":
            solver_args.update(k=graph.n if k is None else k, optimal=True)
        _, run = report.solve_and_report(
            graph, algo, name, seed=seed, **solver_args
        )
        row = run.to_json()
        row["branches"] = run.stats.get("branches")
        del row["stats"]
        rows.append(row)

    sizes = {row["size"] for row in rows}
    for row in rows:
        row["agree"] = len(sizes) == 1
    return rows


def cmd_bench(args):
    if not os.path.isdir(args.corpus):
        raise mdskit.exceptions.CouldNotReadFileError(
            "corpus directory not found: {}".format(args.corpus)
        )
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    for algo in algos:
        if algo not in report.ALGOS:
            raise mdskit.exceptions.InputError(
                "unknown algorithm {!r} in --algos".format(algo)
            )

    jobs = []
    for filename in sorted(os.listdir(args.corpus)):
        if not filename.endswith(".gr"):
            continue
        graph = _read_graph(os.path.join(args.corpus, filename))
        jobs.append(
            (
                filename, graph, algos, args.k, args.heuristic,
                args.faithful, args.seed
            )
        )

    threads = mdskit.core.thread_count()
    if threads > 1 and len(jobs) > 1:
        with concurrent.futures.ProcessPoolExecutor(threads) as pool:
            results = list(pool.map(_bench_instance, jobs))
    else:
        results = [_bench_instance(job) for job in jobs]

    all_rows = []
    for rows in results:
        for row in rows:
            sys.stdout.write(console_utils.json_line(row) + "\n")
        all_rows.extend(rows)
    if args.pretty:
        sys.stdout.write(console_utils.pretty_table(all_rows, BENCH_COLUMNS))

    if any(row["valid"] is False for row in all_rows):
        console_utils.report_error("a solver returned an invalid solution")
        return console_utils.EXIT_SOLVER_FAILURE
    if not all(row["agree"] for row in all_rows):
        console_utils.report_error("solvers disagree")
        return console_utils.EXIT_NEGATIVE
    return console_utils.EXIT_OK


def cmd_reduce_eds(args):
    graph = _read_graph(args.graph)
    reduced = mdskit.core.reduce_eds_to_mds(graph)
    _emit(mdskit.adapters.write_to_string(reduced, "pace_graph"), args.output)
    return console_utils.EXIT_OK


def run(argv=None):
    """Run mdstool on ``argv`` and return the exit code."""

    args = _parsed_args(argv)
    console_utils.configure_logging(args.verbose)
    try:
        return args.func(args)
    except INPUT_ERRORS as err:
        console_utils.report_error(err)
        return console_utils.EXIT_INPUT
    except OSError as err:
        console_utils.report_error(err)
        return console_utils.EXIT_INPUT


def main():
    """  main entry point  """

    code = run()
    if code:
        sys.exit(code)


if __name__ == '__main__':
    main()

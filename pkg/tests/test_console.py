# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Unit tests for the 'console' module."""

import unittest
import sys
import os
import subprocess
import sysconfig
import platform
import json

import io

import tempfile

import mdskit
import mdskit.test_utils as mds_test_utils
import mdskit.console as mds_console

SAMPLE_DATA_DIR = os.path.join(os.path.dirname(__file__), "sample_data")
PATH7_GRAPH = os.path.join(SAMPLE_DATA_DIR, "path7.gr")
PATH7_TD = os.path.join(SAMPLE_DATA_DIR, "path7.td")
K2_GRAPH = os.path.join(SAMPLE_DATA_DIR, "k2.gr")
K2_SOLUTION = os.path.join(SAMPLE_DATA_DIR, "k2.sol")
P3_GRAPH = os.path.join(SAMPLE_DATA_DIR, "p3.gr")
P3_BAD_SOLUTION = os.path.join(SAMPLE_DATA_DIR, "p3_bad.sol")
P3_VERTEX9_SOLUTION = os.path.join(SAMPLE_DATA_DIR, "p3_vertex9.sol")
SELF_LOOP_GRAPH = os.path.join(SAMPLE_DATA_DIR, "self_loop.gr")


def CreateShelloutTest(cl):
    if os.environ.get("MDSKIT_DISABLE_SHELLOUT_TESTS"):
        newSuite = None
    else:
        class newSuite(cl):
            SHELL_OUT = True
        newSuite.__name__ = cl.__name__ + "_on_shell"

    return newSuite


class ConsoleTester(mds_test_utils.MDSAssertions):
    """ Base class for running console tests both by directly calling main() and
    by shelling out.
    """

    SHELL_OUT = False

    def setUp(self):
        self.saved_args = sys.argv
        self.old_stdout = sys.stdout
        self.old_stderr = sys.stderr
        sys.stdout = io.StringIO()
        sys.stderr = io.StringIO()

    def run_test(self):
        if self.SHELL_OUT:
            # make sure its on the path
            console_script = os.path.join(sysconfig.get_path('scripts'), sys.argv[0])
            if platform.system() == 'Windows':
                console_script += '.exe'

            if not os.path.exists(console_script):
                self.fail(
                    "Could not find '{}'.  Tests that explicitly shell"
                    " out can be disabled by setting the environment variable "
                    "MDSKIT_DISABLE_SHELLOUT_TESTS.".format(console_script)
                )

            # actually run the test (sys.argv is already populated correctly)
            proc = subprocess.Popen(
                sys.argv,
                stdout=subprocess.PIPE,
                stderr=subprocess.PIPE,
            )
            stdout, stderr = proc.communicate()

            sys.stdout.write(stdout.decode("utf-8"))
            sys.stderr.write(stderr.decode("utf-8"))

            if proc.returncode != 0:
                raise SystemExit(proc.returncode)
        else:
            self.test_module.main()

        # pre-fetch these strings for easy access
        stdout = sys.stdout.getvalue()
        stderr = sys.stderr.getvalue()

        if platform.system() == 'Windows':
            # Normalize line-endings for assertEqual(expected, actual)
            stdout = stdout.replace('\r\n', '\n')
            stderr = stderr.replace('\r\n', '\n')

        return stdout, stderr

    def run_failing_test(self, code):
        """Run, expecting the process to exit with ``code``."""

        with self.assertRaises(SystemExit) as cm:
            self.run_test()
        self.assertEqual(cm.exception.code, code)
        return sys.stdout.getvalue(), sys.stderr.getvalue()

    def last_report(self):
        """The JSON report printed on the last line of stdout."""

        return json.loads(sys.stdout.getvalue().strip().splitlines()[-1])

    def tearDown(self):
        sys.stdout = self.old_stdout
        sys.stderr = self.old_stderr
        sys.argv = self.saved_args


class MDSToolSolveTest(ConsoleTester, unittest.TestCase):
    test_module = mds_console.mdstool

    def test_exact(self):
        sys.argv = ['mdstool', 'solve', PATH7_GRAPH]
        stdout, _ = self.run_test()
        self.assertTrue(stdout.startswith("s mds 3\n"))
        run = self.last_report()
        self.assertEqual(run["algo"], "exact")
        self.assertEqual(run["size"], 3)
        self.assertTrue(run["valid"])
        self.assertIn("branches", run["stats"])

    def test_solution_is_readable(self):
        sys.argv = ['mdstool', 'solve', PATH7_GRAPH, '--algo', 'partition']
        stdout, _ = self.run_test()
        graph = mdskit.adapters.read_from_file(PATH7_GRAPH)
        text = "\n".join(stdout.splitlines()[:-1]) + "\n"
        solution = mdskit.adapters.read_from_string(
            text, "mds_solution", graph=graph
        )
        self.assertValidMDS(graph, solution, size=3)

    def test_fpt(self):
        sys.argv = ['mdstool', 'solve', PATH7_GRAPH, '--algo', 'fpt', '--k', '3']
        self.run_test()
        self.assertEqual(self.last_report()["size"], 3)

    def test_fpt_negative(self):
        sys.argv = ['mdstool', 'solve', PATH7_GRAPH, '--algo', 'fpt', '--k', '2']
        stdout, _ = self.run_failing_test(1)
        self.assertNotIn("s mds", stdout)
        self.assertEqual(self.last_report()["size"], "none")

    def test_fpt_needs_k(self):
        sys.argv = ['mdstool', 'solve', PATH7_GRAPH, '--algo', 'fpt']
        _, stderr = self.run_failing_test(2)
        self.assertIn("error: --algo fpt needs --k", stderr)

    def test_treewidth_with_td(self):
        sys.argv = [
            'mdstool', 'solve', PATH7_GRAPH,
            '--algo', 'treewidth',
            '--td', PATH7_TD,
        ]
        self.run_test()
        run = self.last_report()
        self.assertEqual(run["size"], 3)
        self.assertEqual(run["stats"]["width"], 1)
        self.assertEqual(run["stats"]["lifted_width"], 2)

    def test_output_file(self):
        with tempfile.TemporaryDirectory() as temp_dir:
            out_path = os.path.join(temp_dir, "path7.sol")
            sys.argv = ['mdstool', 'solve', K2_GRAPH, '-o', out_path]
            stdout, _ = self.run_test()
            self.assertNotIn("s mds", stdout)
            with open(out_path) as fi:
                self.assertTrue(fi.read().startswith("s mds 1\n"))

    def test_self_loop(self):
        sys.argv = ['mdstool', 'solve', SELF_LOOP_GRAPH]
        _, stderr = self.run_failing_test(2)
        self.assertIn("line 3", stderr)

    def test_missing_file(self):
        sys.argv = ['mdstool', 'solve', 'no_such_graph.gr']
        _, stderr = self.run_failing_test(2)
        self.assertIn("error:", stderr)

    def test_unknown_algo(self):
        sys.argv = ['mdstool', 'solve', PATH7_GRAPH, '--algo', 'magic']
        self.run_failing_test(2)


MDSToolSolveTest_ShellOut = CreateShelloutTest(MDSToolSolveTest)


class MDSToolValidateTest(ConsoleTester, unittest.TestCase):
    test_module = mds_console.mdstool

    def test_valid(self):
        sys.argv = ['mdstool', 'validate', K2_GRAPH, K2_SOLUTION]
        stdout, _ = self.run_test()
        self.assertEqual(stdout, "valid, size 1\n")

    def test_invalid(self):
        sys.argv = ['mdstool', 'validate', P3_GRAPH, P3_BAD_SOLUTION]
        stdout, _ = self.run_failing_test(1)
        self.assertTrue(stdout.startswith("invalid\n"))
        self.assertIn("vertex 3 undominated", stdout)

    def test_vertex_out_of_range(self):
        sys.argv = ['mdstool', 'validate', P3_GRAPH, P3_VERTEX9_SOLUTION]
        _, stderr = self.run_failing_test(2)
        self.assertIn("9", stderr)


MDSToolValidateTest_ShellOut = CreateShelloutTest(MDSToolValidateTest)


class MDSToolGenTest(ConsoleTester, unittest.TestCase):
    test_module = mds_console.mdstool

    def test_path_to_stdout(self):
        sys.argv = ['mdstool', 'gen', 'path', '4']
        stdout, _ = self.run_test()
        self.assertEqual(stdout, "p mds 4 3\n1 2\n2 3\n3 4\n")

    def test_random_to_directory(self):
        with tempfile.TemporaryDirectory() as temp_dir:
            sys.argv = [
                'mdstool', 'gen', 'random', '6', '0.5',
                '--seed', '3', '--out-dir', temp_dir,
            ]
            self.run_test()
            out_path = os.path.join(temp_dir, "random_6_p0.5_s3.gr")
            graph = mdskit.adapters.read_from_file(out_path)
            self.assertEqual(
                graph,
                mdskit.generators.gen_instance("random", 6, p=0.5, seed=3)
            )

    def test_labeled(self):
        with tempfile.TemporaryDirectory() as temp_dir:
            sys.argv = ['mdstool', 'gen', 'labeled', '3', '--out-dir', temp_dir]
            self.run_test()
            self.assertEqual(len(os.listdir(temp_dir)), 8)
            self.assertIn("labeled_3_00000.gr", os.listdir(temp_dir))

    def test_labeled_needs_out_dir(self):
        sys.argv = ['mdstool', 'gen', 'labeled', '3']
        _, stderr = self.run_failing_test(2)
        self.assertIn("--out-dir", stderr)

    def test_csp(self):
        sys.argv = ['mdstool', 'gen', 'csp', '3', '2', '2', '--seed', '1']
        stdout, _ = self.run_test()
        self.assertTrue(stdout.startswith("p csp5 3 2 2\n"))
        instance = mdskit.adapters.read_from_string(stdout, "csp5")
        self.assertEqual(instance.m, 2)

    def test_seth(self):
        with tempfile.TemporaryDirectory() as temp_dir:
            csp_path = os.path.join(temp_dir, "unary.csp")
            with open(csp_path, "w") as fo:
                fo.write("p csp5 1 1 1\nx 1\na 2\n")
            sys.argv = [
                'mdstool', 'gen', 'seth', csp_path,
                '--pendant', '1', '--out-dir', temp_dir,
            ]
            self.run_test()

            sidecar = self.last_report()
            self.assertEqual(sidecar["k"], 1562)
            self.assertEqual(sidecar["vertex_count"], 5058)
            self.assertFalse(sidecar["faithful"])

            graph = mdskit.adapters.read_from_file(
                os.path.join(temp_dir, "unary.gr")
            )
            self.assertEqual(graph.n, 5058)
            td = mdskit.adapters.read_from_file(
                os.path.join(temp_dir, "unary.td")
            )
            self.assertValidDecomposition(td, graph)
            self.assertEqual(td.width, sidecar["width"])
            with open(os.path.join(temp_dir, "unary.json")) as fi:
                self.assertEqual(json.load(fi), sidecar)

    def test_seth_bad_csp(self):
        with tempfile.TemporaryDirectory() as temp_dir:
            sys.argv = [
                'mdstool', 'gen', 'seth', P3_GRAPH, '--out-dir', temp_dir,
            ]
            self.run_failing_test(2)


MDSToolGenTest_ShellOut = CreateShelloutTest(MDSToolGenTest)


class MDSToolBenchTest(ConsoleTester, unittest.TestCase):
    test_module = mds_console.mdstool

    def setUp(self):
        super().setUp()
        self.temp_dir = tempfile.TemporaryDirectory()
        corpus = self.temp_dir.name
        mdskit.adapters.write_to_file(
            mdskit.generators.gen_instance("path", 5),
            os.path.join(corpus, "path5.gr")
        )
        mdskit.adapters.write_to_file(
            mdskit.generators.gen_instance("cycle", 4),
            os.path.join(corpus, "cycle4.gr")
        )
        with open(os.path.join(corpus, "notes.txt"), "w") as fo:
            fo.write("not a graph\n")

    def tearDown(self):
        self.temp_dir.cleanup()
        super().tearDown()

    def test_agreement(self):
        sys.argv = ['mdstool', 'bench', self.temp_dir.name]
        stdout, _ = self.run_test()
        rows = [json.loads(line) for line in stdout.splitlines()]
        self.assertEqual(len(rows), 8)
        self.assertEqual(
            [row["instance"] for row in rows[:4]], ["cycle4.gr"] * 4
        )
        for row in rows:
            self.assertTrue(row["agree"])
            self.assertTrue(row["valid"])
        self.assertEqual(
            {row["size"] for row in rows if row["instance"] == "path5.gr"},
            {2}
        )

    def test_pretty(self):
        sys.argv = [
            'mdstool', 'bench', self.temp_dir.name,
            '--algos', 'brute,exact', '--pretty',
        ]
        stdout, _ = self.run_test()
        table = stdout.splitlines()[4:]
        self.assertTrue(table[0].startswith("instance"))
        self.assertIn("branches", table[0])
        self.assertEqual(len(table), 5)

    def test_unknown_algo(self):
        sys.argv = ['mdstool', 'bench', self.temp_dir.name, '--algos', 'magic']
        self.run_failing_test(2)

    def test_missing_corpus(self):
        sys.argv = ['mdstool', 'bench', os.path.join(self.temp_dir.name, "x")]
        self.run_failing_test(2)


MDSToolBenchTest_ShellOut = CreateShelloutTest(MDSToolBenchTest)


class MDSToolReduceEdsTest(ConsoleTester, unittest.TestCase):
    test_module = mds_console.mdstool

    def test_basic(self):
        sys.argv = ['mdstool', 'reduce-eds', K2_GRAPH]
        stdout, _ = self.run_test()
        self.assertTrue(stdout.startswith("p mds 7 7\n"))
        reduced = mdskit.adapters.read_from_string(stdout, "pace_graph")
        self.assertEqual(mdskit.algorithms.partition_oracle(reduced).size, 2)


MDSToolReduceEdsTest_ShellOut = CreateShelloutTest(MDSToolReduceEdsTest)


if __name__ == '__main__':
    unittest.main()

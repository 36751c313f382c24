# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Tree decompositions and their nice form."""

import os
import unittest

import mdskit
import mdskit.test_utils as mds_test_utils
from mdskit.algorithms import NodeKind, TreeDecomposition
from tests import utils

PATH7_TD = os.path.join(utils.SAMPLE_DATA_DIR, "path7.td")


class ValidateDecompositionTests(
    mds_test_utils.MDSAssertions, unittest.TestCase
):
    def test_sample_file(self):
        td = mdskit.adapters.read_from_file(PATH7_TD)
        self.assertEqual(td.width, 1)
        self.assertEqual(len(td.bags), 6)
        self.assertValidDecomposition(td, utils.path(7))

    def test_failures(self):
        g = utils.path(3)
        cases = {
            "no bags": TreeDecomposition(()),
            "vertex missing": TreeDecomposition(({0, 1},)),
            "not a tree": TreeDecomposition(({0, 1}, {1, 2})),
            "edge missing": TreeDecomposition(({0, 1}, {2}), ((0, 1),)),
            "disconnected holders": TreeDecomposition(
                ({0, 1}, {2}, {1, 2}), ((0, 1), (1, 2))
            ),
            "bad tree edge": TreeDecomposition(({0, 1, 2},), ((0, 3),)),
            "unknown vertex": TreeDecomposition(({0, 1, 2, 7},)),
        }
        for name, td in cases.items():
            with self.subTest(case=name):
                with self.assertRaises(mdskit.exceptions.DecompositionError):
                    mdskit.algorithms.validate_decomposition(td, g)

    def test_tree_edges_are_canonical(self):
        td = TreeDecomposition(({0}, {0, 1}), ((1, 0),))
        self.assertEqual(td.tree_edges, ((0, 1),))
        self.assertEqual(td.bags[1], frozenset({0, 1}))


class HeuristicTests(mds_test_utils.MDSAssertions, unittest.TestCase):
    def test_widths(self):
        for heuristic in ("min_fill", "min_degree"):
            for g, width in (
                (utils.path(7), 1),
                (utils.cycle(5), 2),
                (utils.complete(4), 3),
                (mdskit.generators.gen_instance("tree", 9, seed=4), 1),
            ):
                with self.subTest(heuristic=heuristic, n=g.n, edges=g.edges):
                    td = mdskit.algorithms.heuristic_decomposition(
                        g, heuristic
                    )
                    self.assertValidDecomposition(td, g)
                    self.assertEqual(td.width, width)

    def test_edgeless_and_empty(self):
        for g in (mdskit.core.Graph(0), mdskit.core.Graph(3)):
            with self.subTest(n=g.n):
                td = mdskit.algorithms.heuristic_decomposition(g)
                self.assertValidDecomposition(td, g)

    def test_unknown_heuristic(self):
        with self.assertRaises(mdskit.exceptions.InputError):
            mdskit.algorithms.heuristic_decomposition(utils.path(3), "magic")


class LiftTests(mds_test_utils.MDSAssertions, unittest.TestCase):
    def test_lift(self):
        for g in (utils.path(4), utils.cycle(5), utils.complete(4)):
            with self.subTest(n=g.n, edges=g.edges):
                td = mdskit.algorithms.heuristic_decomposition(g)
                h, _ = mdskit.core.incidence_graph(g)
                lifted = mdskit.algorithms.lift_to_incidence(td, g)
                self.assertValidDecomposition(lifted, h)
                self.assertLessEqual(lifted.width, max(td.width, 2))
                self.assertEqual(len(lifted.bags), len(td.bags) + g.m)

    def test_lift_rejects(self):
        with self.assertRaises(mdskit.exceptions.DecompositionError):
            mdskit.algorithms.lift_to_incidence(
                TreeDecomposition(({0, 1},)), utils.path(3)
            )


class NiceDecompositionTests(unittest.TestCase):
    def test_conversion(self):
        for name, _, g in utils.small_corpus(max_n=7, seeds=(0, 1)):
            td = mdskit.algorithms.heuristic_decomposition(g)
            with self.subTest(instance=name, n=g.n):
                nice = mdskit.algorithms.to_nice_decomposition(td, g)
                nice.validate(g)
                self.assertEqual(nice.width, td.width)
                self.assertEqual(nice.nodes[nice.root].bag, frozenset())
                kinds = [node.kind for node in nice.nodes]
                self.assertEqual(
                    kinds.count(NodeKind.INTRODUCE_EDGE), g.m
                )
                self.assertEqual(kinds.count(NodeKind.FORGET), g.n)

    def test_join_nodes(self):
        # a star decomposition rooted at its center bag needs joins
        g = utils.star(3)
        td = TreeDecomposition(
            ({0}, {0, 1}, {0, 2}, {0, 3}), ((0, 1), (0, 2), (0, 3))
        )
        nice = mdskit.algorithms.to_nice_decomposition(td, g)
        nice.validate(g)
        joins = [n for n in nice.nodes if n.kind is NodeKind.JOIN]
        self.assertEqual(len(joins), 2)
        for node in joins:
            self.assertEqual(node.bag, frozenset({0}))

    def test_validate_rejects(self):
        g = utils.path(2)
        leaf = mdskit.algorithms.NiceNode(NodeKind.LEAF, frozenset())
        intro = mdskit.algorithms.NiceNode(
            NodeKind.INTRODUCE_VERTEX, frozenset({0}), (0,), vertex=0
        )
        forget = mdskit.algorithms.NiceNode(
            NodeKind.FORGET, frozenset(), (1,), vertex=0
        )
        # vertex 1 and edge (0, 1) never appear
        partial = mdskit.algorithms.NiceDecomposition((leaf, intro, forget))
        with self.assertRaises(mdskit.exceptions.DecompositionError):
            partial.validate(g)
        with self.assertRaises(mdskit.exceptions.DecompositionError):
            mdskit.algorithms.NiceDecomposition((intro,)).validate(g)


if __name__ == '__main__':
    unittest.main()

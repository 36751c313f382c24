# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

import unittest

import networkx as nx

import mdskit


class GenInstanceTests(unittest.TestCase):
    def test_families(self):
        gen = mdskit.generators.gen_instance
        self.assertEqual(gen("path", 5).m, 4)
        self.assertEqual(gen("cycle", 5).m, 5)
        self.assertEqual(gen("complete", 5).m, 10)
        star = gen("star", 5)
        self.assertEqual(star.degree(0), 4)
        tree = gen("tree", 12, seed=3)
        self.assertTrue(nx.is_tree(tree.to_networkx()))
        self.assertEqual(gen("random", 6, 0.0).m, 0)
        self.assertEqual(gen("random", 6, 1.0).m, 15)

    def test_seeded(self):
        gen = mdskit.generators.gen_instance
        for kind in ("random", "tree"):
            with self.subTest(kind=kind):
                self.assertEqual(
                    gen(kind, 10, seed=7), gen(kind, 10, seed=7)
                )
        self.assertNotEqual(
            gen("random", 12, 0.5, seed=1), gen("random", 12, 0.5, seed=2)
        )

    def test_small_trees(self):
        for n in (1, 2):
            self.assertEqual(
                mdskit.generators.gen_instance("tree", n).m, n - 1
            )

    def test_rejects(self):
        gen = mdskit.generators.gen_instance
        bad = [
            ("path", 0, {}),
            ("cycle", 2, {}),
            ("random", 4, {"p": 1.5}),
            ("wheel", 4, {}),
        ]
        for kind, n, extra in bad:
            with self.subTest(kind=kind, n=n):
                with self.assertRaises(mdskit.exceptions.InputError):
                    gen(kind, n, **extra)


class LabeledGraphTests(unittest.TestCase):
    def test_counts(self):
        for n, count in ((0, 1), (1, 1), (2, 2), (3, 8), (4, 64)):
            with self.subTest(n=n):
                graphs = list(mdskit.generators.all_labeled_graphs(n))
                self.assertEqual(len(graphs), count)
                self.assertEqual(len(set(graphs)), count)

    def test_order(self):
        graphs = list(mdskit.generators.all_labeled_graphs(3))
        self.assertEqual(graphs[0].m, 0)
        self.assertEqual(graphs[1].edges, ((0, 1),))
        self.assertEqual(graphs[-1].m, 3)

    def test_negative(self):
        with self.assertRaises(mdskit.exceptions.InputError):
            list(mdskit.generators.all_labeled_graphs(-1))


if __name__ == '__main__':
    unittest.main()

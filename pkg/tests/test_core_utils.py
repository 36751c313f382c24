# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Matchings, vertex covers, graph transforms and environment settings."""

import os
import unittest
from unittest import mock

import mdskit
from tests import utils


class MatchingTests(unittest.TestCase):
    def test_odd_cycle(self):
        g = utils.cycle(5)
        matching = mdskit.core.max_matching(g)
        self.assertEqual(len(matching), 2)
        self.assertEqual(len(g.endpoints(matching)), 4)

    def test_within(self):
        g = utils.path(4)
        self.assertEqual(
            mdskit.core.max_matching(g, within={0, 1}), frozenset({0})
        )
        self.assertEqual(mdskit.core.max_matching(g, within={0, 2}),
                         frozenset())

    def test_min_edge_cover_size(self):
        for n in range(2, 8):
            for g in (utils.path(n), utils.star(n - 1)):
                with self.subTest(n=n, edges=g.edges):
                    cover = mdskit.core.min_edge_cover(g)
                    nu = len(mdskit.core.max_matching(g))
                    self.assertEqual(len(cover), n - nu)
                    self.assertEqual(g.endpoints(cover), frozenset(range(n)))

    def test_min_edge_cover_isolated(self):
        self.assertIsNone(mdskit.core.min_edge_cover(utils.graph(3, (0, 1))))
        self.assertIsNone(
            mdskit.core.min_edge_cover(utils.path(4), within={0, 2})
        )
        self.assertEqual(
            mdskit.core.min_edge_cover(utils.path(4), within=()),
            frozenset()
        )

    def test_incident_edge_cover(self):
        g = utils.path(4)
        cover = mdskit.core.incident_edge_cover(g, {0, 2})
        self.assertEqual(len(cover), 2)
        self.assertLessEqual({0, 2}, g.endpoints(cover))
        self.assertEqual(
            mdskit.core.incident_edge_cover(g, {0, 1, 2, 3}),
            mdskit.core.min_edge_cover(g)
        )
        self.assertEqual(
            mdskit.core.incident_edge_cover(utils.path(3), {0}),
            frozenset({0})
        )
        self.assertIsNone(
            mdskit.core.incident_edge_cover(utils.graph(3, (0, 1)), {2})
        )


class CoverTests(unittest.TestCase):
    def test_minimal_covers_of_c4(self):
        covers = set(mdskit.core.minimal_vertex_covers(utils.cycle(4)))
        self.assertEqual(covers, {frozenset({0, 2}), frozenset({1, 3})})

    def test_minimal_covers_of_p3(self):
        covers = list(mdskit.core.minimal_vertex_covers(utils.path(3)))
        self.assertEqual(len(covers), 2)
        self.assertEqual(set(covers), {frozenset({1}), frozenset({0, 2})})

    def test_edgeless_and_empty(self):
        self.assertEqual(
            list(mdskit.core.minimal_vertex_covers(mdskit.core.Graph(0))),
            [frozenset()]
        )
        self.assertEqual(
            list(mdskit.core.minimal_vertex_covers(utils.graph(2))),
            [frozenset()]
        )

    def test_every_cover_is_minimal(self):
        for name, _, g in utils.small_corpus(max_n=6, seeds=(0,)):
            covers = list(mdskit.core.minimal_vertex_covers(g))
            with self.subTest(instance=name, n=g.n):
                self.assertEqual(len(covers), len(set(covers)))
                for cover in covers:
                    self.assertTrue(
                        mdskit.core.is_minimal_vertex_cover(g, cover)
                    )

    def test_non_minimal(self):
        g = utils.path(3)
        self.assertTrue(mdskit.core.is_vertex_cover(g, {0, 1}))
        self.assertFalse(mdskit.core.is_minimal_vertex_cover(g, {0, 1}))
        self.assertFalse(mdskit.core.is_vertex_cover(g, {0}))


class TransformTests(unittest.TestCase):
    def test_incidence_graph(self):
        g = utils.path(3)
        h, origin = mdskit.core.incidence_graph(g)
        self.assertEqual(h.n, 5)
        self.assertEqual(h.m, 4)
        self.assertEqual(h.neighbors(3), frozenset({0, 1}))
        self.assertEqual(h.neighbors(4), frozenset({1, 2}))
        self.assertEqual(origin[1], mdskit.core.Origin("vertex", 1))
        self.assertEqual(origin[4], mdskit.core.Origin("edge", 1))

    def test_incidence_solution_mapping(self):
        g = utils.path(4)
        solution = mdskit.core.MixedSolution.from_pairs(g, [0], [(2, 3)])
        selected = mdskit.core.incidence_vertices(g, solution)
        self.assertEqual(selected, frozenset({0, 6}))
        self.assertEqual(
            mdskit.core.solution_from_incidence(g, selected), solution
        )

    def test_reduce_eds_to_mds_shape(self):
        g = utils.path(2)
        reduced = mdskit.core.reduce_eds_to_mds(g)
        self.assertEqual(reduced.n, 7)
        self.assertEqual(reduced.m, 7)
        self.assertEqual(reduced.degree(2), 6)

    def test_reduce_eds_to_mds_sizes(self):
        for g in (utils.path(2), utils.path(3), utils.star(3), utils.cycle(4)):
            with self.subTest(edges=g.edges):
                eds = mdskit.algorithms.brute_force_eds(g)
                reduced = mdskit.core.reduce_eds_to_mds(g)
                mds = mdskit.algorithms.partition_oracle(reduced)
                self.assertEqual(mds.size, len(eds) + 1)

    def test_reduce_empty(self):
        with self.assertRaises(mdskit.exceptions.InputError):
            mdskit.core.reduce_eds_to_mds(mdskit.core.Graph(0))


class EnvironmentTests(unittest.TestCase):
    def test_thread_count(self):
        with mock.patch.dict(os.environ, {"MDSKIT_THREADS": "4"}):
            self.assertEqual(mdskit.core.thread_count(), 4)
        with mock.patch.dict(os.environ, {"MDSKIT_THREADS": ""}):
            self.assertEqual(mdskit.core.thread_count(default=2), 2)

    def test_thread_count_rejects(self):
        for raw in ("0", "-3", "many"):
            with mock.patch.dict(os.environ, {"MDSKIT_THREADS": raw}):
                with self.assertRaises(
                    mdskit.exceptions.InvalidEnvironmentVariableError
                ):
                    mdskit.core.thread_count()

    def test_debug_checks(self):
        with mock.patch.dict(os.environ, {"MDSKIT_DEBUG": "1"}):
            self.assertTrue(mdskit.core.debug_checks_enabled())
        with mock.patch.dict(os.environ, {"MDSKIT_DEBUG": ""}):
            self.assertFalse(mdskit.core.debug_checks_enabled())


if __name__ == '__main__':
    unittest.main()

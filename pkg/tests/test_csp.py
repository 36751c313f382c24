# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

import os
import unittest

import mdskit
from mdskit.generators import Constraint, Csp5Instance
from tests import utils


class Csp5InstanceTests(unittest.TestCase):
    def test_sample_file(self):
        instance = mdskit.adapters.read_from_file(
            os.path.join(utils.SAMPLE_DATA_DIR, "tiny.csp")
        )
        self.assertEqual((instance.n, instance.m, instance.q), (2, 1, 2))
        self.assertEqual(instance.constraints[0].variables, (0, 1))
        self.assertEqual(
            instance.constraints[0].assignments, ((0, 1), (2, 2))
        )
        self.assertFalse(instance.is_normalized())
        self.assertIsNone(instance.is_satisfied_by((2, 2)))
        self.assertEqual(instance.is_satisfied_by((1, 1)), 0)

    def test_rejects(self):
        bad = {
            "arity above q": Constraint((0, 1), [(0, 0)]),
            "repeated variable": Constraint((1, 1), [(0, 0)]),
            "unknown variable": Constraint((0, 5), [(0, 0)]),
            "short assignment": Constraint((0, 1), [(0,)]),
            "value outside the alphabet": Constraint((0, 1), [(0, 5)]),
        }
        for name, constraint in bad.items():
            with self.subTest(case=name):
                with self.assertRaises(mdskit.exceptions.InputError):
                    Csp5Instance(3, 1 if name == "arity above q" else 2,
                                 (constraint,))
        with self.assertRaises(mdskit.exceptions.InputError):
            Csp5Instance(2, 0)

    def test_agreeing(self):
        constraint = Constraint((0, 2), [(1, 1), (3, 4), (3, 4)])
        self.assertEqual(constraint.arity, 2)
        self.assertEqual(constraint.agreeing({0: 3, 1: 0, 2: 4}), 1)
        self.assertIsNone(constraint.agreeing((0, 0, 0)))
        self.assertTrue(constraint.allows((1, 4, 1)))

    def test_assignment_limit(self):
        self.assertEqual(mdskit.generators.assignment_limit(1), 4)
        self.assertEqual(mdskit.generators.assignment_limit(2), 24)
        self.assertEqual(Csp5Instance(3, 3).assignment_count, 124)


class NormalizeTests(unittest.TestCase):
    def test_pads_arity_and_list(self):
        instance = Csp5Instance(2, 2, (Constraint((1,), [(3,)]),))
        normal = mdskit.generators.normalize_csp(instance)
        self.assertTrue(normal.is_normalized())
        (constraint,) = normal.constraints
        self.assertEqual(constraint.variables, (1, 0))
        self.assertEqual(len(constraint.assignments), 24)
        self.assertEqual(
            set(constraint.assignments), {(3, x) for x in range(5)}
        )
        self.assertEqual(normal.n, 2)

    def test_fresh_padding_variables(self):
        instance = Csp5Instance(1, 2, (Constraint((0,), [(0,)]),))
        normal = mdskit.generators.normalize_csp(instance)
        self.assertEqual(normal.n, 2)
        self.assertEqual(normal.constraints[0].variables, (0, 1))

    def test_deduplicates(self):
        instance = Csp5Instance(1, 1, (Constraint((0,), [(2,), (2,), (4,)]),))
        (constraint,) = mdskit.generators.normalize_csp(instance).constraints
        self.assertEqual(constraint.assignments, ((2,), (4,), (2,), (2,)))

    def test_drops_trivial_constraints(self):
        everything = Constraint((0,), [(x,) for x in range(5)])
        instance = Csp5Instance(1, 1, (everything, Constraint((0,), [(1,)])))
        normal = mdskit.generators.normalize_csp(instance)
        self.assertEqual(normal.m, 1)
        self.assertEqual(normal.constraints[0].assignments[0], (1,))

    def test_empty_constraint(self):
        with self.assertRaises(mdskit.exceptions.InputError):
            mdskit.generators.normalize_csp(
                Csp5Instance(1, 1, (Constraint((0,), []),))
            )

    def test_already_normalized(self):
        instance, _ = mdskit.generators.random_satisfiable_csp(3, 2, 1, seed=5)
        self.assertIs(mdskit.generators.normalize_csp(instance), instance)


class RandomCspTests(unittest.TestCase):
    def test_planted_assignment(self):
        for seed in range(5):
            for n, m, q in ((1, 1, 1), (3, 4, 2), (4, 2, 3)):
                with self.subTest(seed=seed, n=n, m=m, q=q):
                    instance, planted = (
                        mdskit.generators.random_satisfiable_csp(
                            n, m, q, seed=seed
                        )
                    )
                    self.assertTrue(instance.is_normalized())
                    self.assertEqual(instance.m, m)
                    self.assertEqual(len(planted), n)
                    self.assertIsNone(instance.is_satisfied_by(planted))

    def test_deterministic(self):
        self.assertEqual(
            mdskit.generators.random_satisfiable_csp(3, 3, 2, seed=11),
            mdskit.generators.random_satisfiable_csp(3, 3, 2, seed=11),
        )

    def test_too_few_variables(self):
        with self.assertRaises(mdskit.exceptions.InputError):
            mdskit.generators.random_satisfiable_csp(1, 1, 2)


if __name__ == '__main__':
    unittest.main()

# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Constraint satisfaction instances over the alphabet {0, 1, 2, 3, 4}.

Variables are 0-indexed.  Each constraint lists the variables it involves and
its allowed assignments, one value per listed variable.
"""

import dataclasses
import itertools
import random

from .. import exceptions

ALPHABET = 5


def assignment_limit(q):
    """C = 5^q - 1, the list length of a normalized constraint."""
    return ALPHABET ** q - 1


@dataclasses.dataclass(frozen=True)
class Constraint:
    variables: tuple
    assignments: tuple

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(
            self, "assignments", tuple(tuple(a) for a in self.assignments)
        )

    @property
    def arity(self):
        return len(self.variables)

    def allows(self, assignment):
        values = tuple(assignment[v] for v in self.variables)
        return values in self.assignments

    def agreeing(self, assignment):
        """Index of the first listed assignment agreeing with ``assignment``."""

        values = tuple(assignment[v] for v in self.variables)
        for index, listed in enumerate(self.assignments):
            if listed == values:
                return index
        return None


@dataclasses.dataclass(frozen=True)
class Csp5Instance:
    """``n`` variables and constraints of arity at most ``q``.

    :raises InputError: on out of range variables or values, repeated
                        variables inside a constraint, or assignments of the
                        wrong length
    """

    n: int
    q: int
    constraints: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))
        if self.n < 0 or self.q < 1:
            raise exceptions.InputError(
                "need n >= 0 and q >= 1, got n={} q={}".format(self.n, self.q)
            )
        for index, constraint in enumerate(self.constraints):
            where = "constraint {}".format(index + 1)
            if not 1 <= constraint.arity <= self.q:
                raise exceptions.InputError(
                    "{} has arity {}, expected 1..{}".format(
                        where, constraint.arity, self.q
                    )
                )
            if len(set(constraint.variables)) != constraint.arity:
                raise exceptions.InputError(
                    "{} repeats a variable".format(where)
                )
            for v in constraint.variables:
                if not 0 <= v < self.n:
                    raise exceptions.InputError(
                        "{} uses unknown variable {}".format(where, v + 1)
                    )
            for listed in constraint.assignments:
                if len(listed) != constraint.arity:
                    raise exceptions.InputError(
                        "{} has an assignment of length {}".format(
                            where, len(listed)
                        )
                    )
                if any(not 0 <= x < ALPHABET for x in listed):
                    raise exceptions.InputError(
                        "{} has a value outside 0..4".format(where)
                    )

    @property
    def m(self):
        return len(self.constraints)

    @property
    def assignment_count(self):
        return assignment_limit(self.q)

    def is_normalized(self):
        limit = self.assignment_count
        return all(
            c.arity == self.q and len(c.assignments) == limit
            for c in self.constraints
        )

    def is_satisfied_by(self, assignment):
        """Return the index of the first violated constraint, or None.

        :param assignment: sequence or mapping from variable to value
        """

        for index, constraint in enumerate(self.constraints):
            if not constraint.allows(assignment):
                return index
        return None


def normalize_csp(instance):
    """Pad every constraint to arity q and to exactly C listed assignments.

    Short constraints are padded with the lowest unused variables, or with
    new variables when there are not enough; every value of a padding
    variable is allowed.  A constraint that ends up allowing all 5^q
    assignments is dropped.  Lists are deduplicated and then padded to C by
    repeating their first assignment.

    :rtype: Csp5Instance
    :raises InputError: if a constraint allows nothing
    """

    if instance.is_normalized():
        return instance

    q = instance.q
    limit = assignment_limit(q)
    n = instance.n
    constraints = []
    for index, constraint in enumerate(instance.constraints):
        if not constraint.assignments:
            raise exceptions.InputError(
                "constraint {} has no allowed assignment".format(index + 1)
            )

        missing = q - constraint.arity
        padding = [
            v for v in range(n) if v not in constraint.variables
        ][:missing]
        while len(padding) < missing:
            padding.append(n)
            n += 1

        listed = []
        seen = set()
        for base in constraint.assignments:
            for tail in itertools.product(range(ALPHABET), repeat=missing):
                full = tuple(base) + tail
                if full not in seen:
                    seen.add(full)
                    listed.append(full)

        if len(listed) > limit:
            continue
        listed.extend([listed[0]] * (limit - len(listed)))
        constraints.append(
            Constraint(tuple(constraint.variables) + tuple(padding), listed)
        )

    return Csp5Instance(n, q, tuple(constraints))


def random_satisfiable_csp(n, m, q, seed=0):
    """Return ``(instance, assignment)`` with ``assignment`` satisfying it.

    Each constraint involves ``q`` random variables and allows the planted
    assignment plus a random number of others.  The result is normalized.

    :raises InputError: if ``n < q``
    """

    if n < q:
        raise exceptions.InputError(
            "need at least q={} variables, got {}".format(q, n)
        )

    rng = random.Random(seed)
    planted = tuple(rng.randrange(ALPHABET) for _ in range(n))
    limit = assignment_limit(q)
    constraints = []
    for _ in range(m):
        variables = tuple(sorted(rng.sample(range(n), q)))
        allowed = [tuple(planted[v] for v in variables)]
        for _ in range(rng.randrange(limit)):
            allowed.append(
                tuple(rng.randrange(ALPHABET) for _ in range(q))
            )
        deduplicated = list(dict.fromkeys(allowed))[:limit]
        constraints.append(Constraint(variables, deduplicated))

    instance = normalize_csp(Csp5Instance(n, q, tuple(constraints)))
    return instance, planted

# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Lower-bound instances built from q-CSP-5 formulas.

The graph has one long path per variable (the main part), a checker gadget
per section that ties the paths to the allowed assignments of one
constraint, ``A`` copies of a consistency gadget per (variable, section) and
a hub vertex ``s`` with two leaves.  Vertex ids follow a fixed order: main
paths, then each section's checker gadget, then the consistency gadget
copies in (section, variable, copy) order, then ``s``, ``s1`` and ``s2``.
"""

import dataclasses

from .. import (
    core,
    exceptions,
)
from ..algorithms import decomposition

# copies of each consistency gadget
GADGET_COPIES = 12

# size of the A set and the number of B sets of a consistency gadget
A_SIZE = 8
B_SETS = 5


def section_count_factor(n):
    """F = (4n + 1)(2n + 1)"""
    return (4 * n + 1) * (2 * n + 1)


def budget(n, m, q):
    """k = 8AFmn + 2Fmn + 2Fmq(C - 1) + n + 1"""

    f = section_count_factor(n)
    c = 5 ** q - 1
    return (
        8 * GADGET_COPIES * f * m * n
        + 2 * f * m * n
        + 2 * f * m * q * (c - 1)
        + n + 1
    )


@dataclasses.dataclass(frozen=True)
class CheckerGadget:
    """Vertex ids of the checker gadget of one section.

    ``z[t]`` is the Z set of the t-th listed assignment; its vertices
    ``2p`` and ``2p + 1`` are reserved for the p-th variable of the
    constraint.
    """

    z: tuple
    w: tuple
    w_pendants: tuple


@dataclasses.dataclass(frozen=True)
class ConsistencyGadget:
    """Vertex ids of one copy of a consistency gadget.

    ``b[l]`` is the pair B_l; ``b[l][0]`` is the vertex wired to path
    position ``(l + 2) mod 5`` and ``b[l][1]`` the one wired to
    ``(l + 3) mod 5``.
    """

    a: tuple
    b: tuple
    a_pendants: tuple


@dataclasses.dataclass(frozen=True)
class ConstructionOutput:
    csp: object
    graph: core.Graph = dataclasses.field(repr=False)
    k: int
    f: int
    a: int
    c: int
    pendant_size: int
    pendant_multiplier: int
    main: tuple = dataclasses.field(repr=False)
    checkers: tuple = dataclasses.field(repr=False)
    gadgets: dict = dataclasses.field(repr=False)
    s: int = None
    s1: int = None
    s2: int = None

    @property
    def n(self):
        return self.csp.n

    @property
    def m(self):
        return self.csp.m

    @property
    def q(self):
        return self.csp.q

    @property
    def sections(self):
        return self.f * self.m

    @property
    def faithful(self):
        return self.pendant_multiplier is None

    def section_offsets(self):
        """First vertex id of each section's checker gadget."""
        return [checker.z[0][0] for checker in self.checkers]

    def leaves(self):
        """Vertices that become leaves once ``s`` is removed."""

        result = [self.s1, self.s2]
        for checker in self.checkers:
            for group in checker.w_pendants:
                result.extend(group)
        for key in sorted(self.gadgets):
            for group in self.gadgets[key].a_pendants:
                result.extend(group)
        return result

    def sidecar(self, path_decomposition=None):
        """The JSON-able summary of the construction.

        ``measured_width_constant`` (width minus n) is included when the
        emitted path decomposition is given.
        """

        result = {
            "n": self.n,
            "m": self.m,
            "q": self.q,
            "F": self.f,
            "A": self.a,
            "C": self.c,
            "k": self.k,
            "pendant_multiplier": self.pendant_multiplier,
            "pendant_size": self.pendant_size,
            "faithful": self.faithful,
            "vertex_count": self.graph.n,
            "section_offsets": self.section_offsets(),
        }
        if path_decomposition is not None:
            result["width"] = path_decomposition.width
            result["measured_width_constant"] = (
                path_decomposition.width - self.n
            )
        return result


def expected_vertex_count(n, m, q, pendant_size):
    """The closed-form vertex count of the construction."""

    f = section_count_factor(n)
    c = 5 ** q - 1
    sections = f * m
    main = 5 * sections * n
    checker = 2 * q * c + 2 * q * (c - 1) * (1 + pendant_size)
    gadget = A_SIZE * (1 + pendant_size) + 2 * B_SETS
    return 3 + main + sections * checker + sections * n * GADGET_COPIES * gadget


class _Ids:
    def __init__(self):
        self.count = 0

    def take(self, size):
        start = self.count
        self.count += size
        return tuple(range(start, start + size))


def build_seth_instance(csp, pendant_multiplier=None):
    """Build the lower-bound graph of a normalized q-CSP-5 instance.

    Pendant sets have 2k + 1 vertices unless ``pendant_multiplier`` is given,
    in which case they have that many and the output is marked unfaithful.

    :param Csp5Instance csp: a normalized instance
    :param int pendant_multiplier: optional pendant set size
    :rtype: ConstructionOutput
    :raises ContractViolationError: if ``csp`` is not normalized
    """

    if not csp.is_normalized():
        raise exceptions.ContractViolationError(
            "the construction needs a normalized instance"
        )
    if pendant_multiplier is not None and pendant_multiplier < 1:
        raise exceptions.InputError("pendant_multiplier must be positive")

    n, m, q = csp.n, csp.m, csp.q
    f = section_count_factor(n)
    c = csp.assignment_count
    k = budget(n, m, q)
    pendant_size = (
        2 * k + 1 if pendant_multiplier is None else pendant_multiplier
    )
    sections = f * m

    ids = _Ids()
    edges = []

    main = tuple(ids.take(5 * sections) for _ in range(n))
    for path in main:
        edges.extend(zip(path, path[1:]))

    checker_sections = []
    for j in range(sections):
        constraint = csp.constraints[j % m]
        z = tuple(ids.take(2 * q) for _ in range(c))
        w = ids.take(2 * q * (c - 1))
        w_pendants = tuple(ids.take(pendant_size) for _ in w)
        checker_sections.append(CheckerGadget(z, w, w_pendants))

        for t, listed in enumerate(constraint.assignments):
            for p, i in enumerate(constraint.variables):
                alpha = listed[p]
                z1, z2 = z[t][2 * p], z[t][2 * p + 1]
                base = 5 * j
                edges.append((main[i][base + alpha], z1))
                edges.append((main[i][base + alpha], z2))
                edges.append((main[i][base + (alpha + 2) % 5], z1))
                edges.append((main[i][base + (alpha + 3) % 5], z2))

        for t in range(c):
            for t2 in range(t + 1, c):
                edges.extend((x, y) for x in z[t] for y in z[t2])
        for x in w:
            edges.extend((x, y) for group in z for y in group)

    gadgets = {}
    for j in range(sections):
        for i in range(n):
            for r in range(GADGET_COPIES):
                a = ids.take(A_SIZE)
                b = tuple(ids.take(2) for _ in range(B_SETS))
                a_pendants = tuple(ids.take(pendant_size) for _ in a)
                gadgets[(i, j, r)] = ConsistencyGadget(a, b, a_pendants)

                for l1 in range(B_SETS):
                    for l2 in range(l1 + 1, B_SETS):
                        edges.extend((x, y) for x in b[l1] for y in b[l2])
                    edges.extend((x, y) for x in b[l1] for y in a)
                    base = 5 * j
                    edges.append((main[i][base + l1], b[l1][0]))
                    edges.append((main[i][base + l1], b[l1][1]))
                    edges.append((main[i][base + (l1 + 2) % 5], b[l1][0]))
                    edges.append((main[i][base + (l1 + 3) % 5], b[l1][1]))

    (s, s1, s2) = ids.take(3)
    edges.append((s, s1))
    edges.append((s, s2))
    for checker in checker_sections:
        for x, group in zip(checker.w, checker.w_pendants):
            for y in group:
                edges.append((x, y))
                edges.append((y, s))
    for key in sorted(gadgets):
        gadget = gadgets[key]
        for x, group in zip(gadget.a, gadget.a_pendants):
            for y in group:
                edges.append((x, y))
                edges.append((y, s))

    expected = expected_vertex_count(n, m, q, pendant_size)
    if ids.count != expected:
        raise exceptions.ContractViolationError(
            "built {} vertices, the closed form gives {}".format(
                ids.count, expected
            )
        )

    return ConstructionOutput(
        csp=csp,
        graph=core.Graph(ids.count, tuple(edges)),
        k=k,
        f=f,
        a=GADGET_COPIES,
        c=c,
        pendant_size=pendant_size,
        pendant_multiplier=pendant_multiplier,
        main=main,
        checkers=tuple(checker_sections),
        gadgets=gadgets,
        s=s,
        s1=s1,
        s2=s2,
    )


def _path_matching(path, usable):
    """Greedy maximum matching of the usable runs of a path.

    :returns: ``(pairs, unmatched)``
    """

    pairs = []
    unmatched = []
    run = []
    for v in list(path) + [None]:
        if v is not None and v in usable:
            run.append(v)
            continue
        for x in range(0, len(run) - 1, 2):
            pairs.append((run[x], run[x + 1]))
        if len(run) % 2:
            unmatched.append(run[-1])
        run = []
    return pairs, unmatched


def build_witness_solution(out, assignment):
    """Return the mixed dominating set a satisfying assignment induces.

    Variables missing from ``assignment`` (padding variables added by
    normalization) take value 0.

    :param ConstructionOutput out: the construction
    :param assignment: sequence or mapping from variable to value
    :rtype: MixedSolution
    :raises ContractViolationError: if ``assignment`` violates a constraint
    """

    values = []
    for v in range(out.n):
        try:
            values.append(assignment[v])
        except (IndexError, KeyError):
            values.append(0)

    violated = out.csp.is_satisfied_by(values)
    if violated is not None:
        raise exceptions.ContractViolationError(
            "assignment violates constraint {}: variables {}".format(
                violated + 1,
                [v + 1 for v in out.csp.constraints[violated].variables],
            )
        )

    graph = out.graph
    dominators = set()
    pairs = []

    for i, path in enumerate(out.main):
        selected = {path[5 * j + values[i]] for j in range(out.sections)}
        dominators.update(selected)
        blocked = set(selected)
        for v in selected:
            blocked.update(graph.neighbors(v))
        matched, unmatched = _path_matching(
            path, set(path) - blocked
        )
        pairs.extend(matched)
        dominators.update(unmatched)

    for j, checker in enumerate(out.checkers):
        constraint = out.csp.constraints[j % out.m]
        chosen = constraint.agreeing(values)
        others = [
            x
            for t, group in enumerate(checker.z) if t != chosen
            for x in group
        ]
        pairs.extend(zip(checker.w, others))

    for (i, _, _), gadget in out.gadgets.items():
        others = [
            x
            for ell, group in enumerate(gadget.b) if ell != values[i]
            for x in group
        ]
        pairs.extend(zip(gadget.a, others))

    dominators.add(out.s)
    return core.MixedSolution.from_pairs(graph, dominators, pairs)


def emit_path_decomposition(out, include_leaves=True):
    """Return a path decomposition of the construction.

    ``s`` is in every bag.  Each section starts with a bag holding its
    checker gadget and the first path vertex of every variable; per variable
    the five path vertices are added, each gadget copy is swept through in
    its own bag, and then only the last path vertex is kept.  Two transition
    bags per variable move from one section to the next.  Leaves (the
    vertices hanging off ``s``) each get a copy of a bag holding their
    neighbor; with ``include_leaves`` false they are left out and the
    result only decomposes the graph without them.

    :rtype: TreeDecomposition
    """

    s = out.s
    bags = []
    # leaf bags to insert after bag index -> list of leaves
    hang = {}

    def emit(bag, leaves=()):
        bags.append(frozenset(bag) | {s})
        if leaves:
            hang.setdefault(len(bags) - 1, []).extend(leaves)

    carry = set()
    for j, checker in enumerate(out.checkers):
        held = set(checker.w)
        for group in checker.z:
            held.update(group)

        first = {path[5 * j] for path in out.main}
        if j == 0:
            carry = set(first)
        w_leaves = [y for group in checker.w_pendants for y in group]
        emit(held | carry, w_leaves + ([out.s1, out.s2] if j == 0 else []))

        for i, path in enumerate(out.main):
            block = set(path[5 * j:5 * j + 5])
            emit(held | carry | block)
            for r in range(out.a):
                gadget = out.gadgets[(i, j, r)]
                inside = set(gadget.a)
                for pair in gadget.b:
                    inside.update(pair)
                a_leaves = [y for group in gadget.a_pendants for y in group]
                emit(held | carry | block | inside, a_leaves)
            carry = (carry - block) | {path[5 * j + 4]}
            emit(held | carry)

        if j + 1 < out.sections:
            for path in out.main:
                step = path[5 * (j + 1)]
                emit(carry | {step})
                carry = (carry - {path[5 * j + 4]}) | {step}
                emit(carry)

    if not bags:
        emit(set(), [out.s1, out.s2])

    if include_leaves:
        expanded = []
        for index, bag in enumerate(bags):
            expanded.append(bag)
            for leaf in hang.get(index, ()):
                expanded.append(bag | {leaf})
        bags = expanded

    tree_edges = tuple((x, x + 1) for x in range(len(bags) - 1))
    return decomposition.TreeDecomposition(tuple(bags), tree_edges)

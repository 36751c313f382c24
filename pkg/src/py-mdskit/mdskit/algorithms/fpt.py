# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Mixed domination parameterized by the solution size k.

A state fixes vertices into D_f (dominators) and P_f (endpoints of matching
edges).  Branching first empties U* = U \\ N(D_f), then reduces G[U] to
maximum degree one, and finally completes the state in polynomial time with a
matching computation on an auxiliary graph.
"""

import collections
import dataclasses
import enum
import itertools
import logging
import time

import networkx as nx

from .. import (
    core,
    exceptions,
)
from . import oracle


class FptRule(enum.Enum):
    """Rules in priority order."""

    SANITY = "SANITY"
    R1 = "R1"
    B1 = "B1"
    B2_1 = "B2_1"
    B2_2 = "B2_2"
    B3_1 = "B3_1"
    B3_2 = "B3_2"
    B3_3 = "B3_3"
    B4_1 = "B4_1"
    B4_2 = "B4_2"
    B5 = "B5"
    B6 = "B6"
    B7 = "B7"


# B6 branches over subsets of this many neighbors
B6_FANOUT = 9


@dataclasses.dataclass(frozen=True)
class FptState:
    graph: core.Graph = dataclasses.field(repr=False, compare=False)
    budget: int
    dominators: frozenset = frozenset()
    paired: frozenset = frozenset()

    undecided: frozenset = dataclasses.field(init=False, repr=False)
    undominated: frozenset = dataclasses.field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "dominators", frozenset(self.dominators))
        object.__setattr__(self, "paired", frozenset(self.paired))
        if self.dominators & self.paired:
            raise exceptions.ContractViolationError(
                "D_f and P_f must be disjoint"
            )

        dominated = set()
        for u in self.dominators:
            dominated.update(self.graph.neighbors(u))
        undecided = (
            frozenset(self.graph.vertices()) - self.dominators - self.paired
        )
        object.__setattr__(self, "undecided", undecided)
        object.__setattr__(self, "undominated", undecided - dominated)

    def n_u(self, v):
        """N_U(v)"""
        return self.graph.neighbors(v) & self.undecided

    def n_ustar(self, v):
        """N_{U*}(v)"""
        return self.graph.neighbors(v) & self.undominated

    def d_u(self, v):
        return len(self.n_u(v))

    def d_ustar(self, v):
        return len(self.n_ustar(v))

    def child(self, dominators=(), paired=()):
        """Return the state with the given vertices added, or None on conflict."""

        add_d = frozenset(dominators)
        add_p = frozenset(paired)
        if add_d & add_p:
            return None
        if (add_d | add_p) & (self.dominators | self.paired):
            return None
        return FptState(
            self.graph,
            self.budget,
            self.dominators | add_d,
            self.paired | add_p,
        )


def measure_fpt(st):
    """2k - 2|D_f| - |P_f|"""
    return 2 * st.budget - 2 * len(st.dominators) - len(st.paired)


def private_candidates(st, u):
    """Undecided neighbors of ``u`` whose only neighbor in D_f is ``u``.

    These are the vertices that can still end up as private neighbors of a
    dominator ``u``.
    """

    return frozenset(
        w for w in st.n_u(u)
        if st.graph.neighbors(w) & st.dominators == {u}
    )


def sanity_check(st):
    """Return True to accept ``st``, False to reject it."""

    if measure_fpt(st) < 0:
        return False
    return all(len(private_candidates(st, u)) >= 2 for u in st.dominators)


def is_feasible_pair(st, v1, v2):
    return (
        len(st.n_ustar(v1) - st.graph.neighbors(v2)) >= 2
        and len(st.n_ustar(v2) - st.graph.neighbors(v1)) >= 2
    )


def is_compatible(st, u, vi):
    """True if N_{U*}(vi) has two vertices outside the other neighbors of u
    and their neighborhoods."""

    others = st.n_u(u) - {vi}
    blocked = set(others)
    for vj in others:
        blocked.update(st.graph.neighbors(vj))
    return len(st.n_ustar(vi) - blocked) >= 2


def _ordered_neighbors(st, u):
    """N_U(u) with the U* vertices first, each part by id."""

    return sorted(st.n_u(u), key=lambda v: (v not in st.undominated, v))


def _feasible_pair_order(st, u):
    """The U*-first order with the first feasible pair moved to the front."""

    ordered = _ordered_neighbors(st, u)
    star_count = st.d_ustar(u)
    for i, j in itertools.combinations(range(star_count), 2):
        if is_feasible_pair(st, ordered[i], ordered[j]):
            front = [ordered[i], ordered[j]]
            rest = [v for v in ordered if v not in front]
            return front + rest
    return ordered


def _first(vertices, guard):
    for u in sorted(vertices):
        if guard(u):
            return u
    return None


def _find(st, rule):
    """Return the vertex ``rule`` branches on in ``st``, or None."""

    star = st.undominated
    if rule is FptRule.R1:
        return _first(star, lambda u: st.d_u(u) == 0)
    if rule is FptRule.B1:
        return _first(star, lambda u: st.d_u(u) == 1)
    if rule is FptRule.B2_1:
        return _first(
            star, lambda u: st.d_u(u) == 2 and st.d_ustar(u) <= 1
        )
    if rule is FptRule.B2_2:
        return _first(star, lambda u: st.d_u(u) == 2)
    if rule is FptRule.B3_1:
        return _first(
            star, lambda u: st.d_u(u) == 3 and st.d_ustar(u) <= 2
        )
    if rule is FptRule.B3_2:
        def two_feasible(u):
            if st.d_u(u) != 3:
                return False
            pairs = itertools.combinations(sorted(st.n_u(u)), 2)
            return sum(1 for a, b in pairs if is_feasible_pair(st, a, b)) >= 2
        return _first(star, two_feasible)
    if rule is FptRule.B3_3:
        return _first(star, lambda u: st.d_u(u) == 3)
    if rule is FptRule.B4_1:
        return _first(
            star,
            lambda u: (
                st.d_u(u) == 4
                and st.d_ustar(u) == 4
                and all(is_compatible(st, u, v) for v in st.n_u(u))
            ),
        )
    if rule is FptRule.B4_2:
        return _first(star, lambda u: st.d_u(u) == 4)
    if rule is FptRule.B5:
        candidates = [u for u in star if 5 <= st.d_u(u) <= 8]
        if not candidates:
            return None
        return min(candidates, key=lambda u: (st.d_u(u), u))
    if rule is FptRule.B6:
        return _first(star, lambda u: st.d_u(u) >= B6_FANOUT)
    if rule is FptRule.B7:
        if star:
            return None
        return _first(st.undecided, lambda u: st.d_u(u) >= 2)
    raise exceptions.ContractViolationError(
        "{} does not branch on a vertex".format(rule.value)
    )


_BRANCHING = [rule for rule in FptRule if rule is not FptRule.SANITY]


def select_rule_fpt(st):
    """Return the first applicable :class:`FptRule`, or None.

    None means U* is empty and G[U] has maximum degree at most one, so the
    state can be completed.

    :raises ContractViolationError: if no rule applies to a state that is
                                    not ready for completion
    """

    if not sanity_check(st):
        return FptRule.SANITY

    for rule in _BRANCHING:
        if _find(st, rule) is not None:
            return rule

    if st.undominated:
        raise exceptions.ContractViolationError(
            "no rule applies but U* is not empty: {}".format(
                sorted(st.undominated)
            )
        )
    if any(st.d_u(u) > 1 for u in st.undecided):
        raise exceptions.ContractViolationError(
            "no rule applies but G[U] has a vertex of degree above one"
        )
    return None


def _subset_children(group, include_empty=False):
    """(S into D_f, the rest into P_f) for every subset S of ``group``."""

    group = list(group)
    start = 0 if include_empty else 1
    for size in range(start, len(group) + 1):
        for chosen in itertools.combinations(group, size):
            yield dict(
                dominators=set(chosen),
                paired=set(group) - set(chosen),
            )


def _private_pair(st, u, *witnesses):
    """u into D_f with ``witnesses`` as its private neighbors."""

    paired = set()
    for v in witnesses:
        paired.update(st.n_u(v))
    paired.discard(u)
    return dict(dominators={u}, paired=paired)


def _raw_children(st, rule):
    u = _find(st, rule)
    if u is None:
        raise exceptions.ContractViolationError(
            "rule {} does not apply".format(rule.value)
        )

    if rule is FptRule.R1:
        return [dict(paired={u})]

    if rule is FptRule.B7:
        return [dict(paired={u}), dict(paired=st.n_u(u))]

    if rule is FptRule.B6:
        fanout = _ordered_neighbors(st, u)[:B6_FANOUT]
        specs = [dict(dominators={u}), dict(paired={u})]
        specs.extend(_subset_children(fanout, include_empty=True))
        return specs

    if rule in (FptRule.B4_2, FptRule.B5):
        ordered = _feasible_pair_order(st, u)
        star_count = st.d_ustar(u)
        specs = [dict(paired={u})]
        specs.extend(_subset_children(ordered))
        if star_count >= 2:
            specs.append(_private_pair(st, u, ordered[0], ordered[1]))
        for j in range(2, star_count):
            specs.append(_private_pair(st, u, ordered[j]))
        return specs

    ordered = _ordered_neighbors(st, u)
    specs = []
    if rule is FptRule.B2_2:
        specs.append(_private_pair(st, u, ordered[0], ordered[1]))
    elif rule is FptRule.B3_1:
        specs.append(_private_pair(st, u, ordered[0], ordered[1]))
    elif rule in (FptRule.B3_2, FptRule.B4_1):
        for a, b in itertools.combinations(ordered, 2):
            specs.append(_private_pair(st, u, a, b))
    elif rule is FptRule.B3_3:
        by_id = sorted(ordered)
        specs.append(_private_pair(st, u, by_id[0]))
        specs.append(_private_pair(st, u, by_id[1], by_id[2]))

    specs.append(dict(paired={u}))
    specs.extend(_subset_children(ordered))
    return specs


def _children(st, rule):
    result = []
    for spec in _raw_children(st, rule):
        child = st.child(**spec)
        if child is not None:
            result.append(child)
    return result


def expand_fpt(st, rule):
    """Return the children ``rule`` prescribes for ``st`` that pass the
    sanity check.

    :raises ContractViolationError: if ``rule`` does not apply to ``st``
    """

    if rule is FptRule.SANITY:
        raise exceptions.ContractViolationError(
            "a rejected state has no children"
        )
    return [child for child in _children(st, rule) if sanity_check(child)]


def _lowest_edge(graph, left, right):
    """The lowest (a, b) with a in ``left``, b in ``right`` and ab an edge."""

    for a in sorted(left):
        for b in sorted(graph.neighbors(a) & right):
            return graph.edge_id(a, b)
    return None


def complete_fpt(graph, st):
    """Complete a state whose U* is empty and whose G[U] is a matching.

    Each edge e of G[U] becomes a vertex x_e of an auxiliary graph H that
    also holds P_f.  A maximum matching of H is extended by one edge per
    unmatched P_f vertex and by e itself for every unmatched x_e; every H-edge
    stands for the lowest g-edge realizing it.

    :returns: a MixedSolution with D = D_f, or None if some P_f vertex has no
              neighbor at all
    :raises ContractViolationError: if the state is not ready for completion
    """

    if st.undominated:
        raise exceptions.ContractViolationError(
            "cannot complete: U* is not empty"
        )
    if any(st.d_u(u) > 1 for u in st.undecided):
        raise exceptions.ContractViolationError(
            "cannot complete: G[U] has a vertex of degree above one"
        )

    residual = sorted(
        e for e, (a, b) in enumerate(graph.edges)
        if a in st.undecided and b in st.undecided
    )
    paired = sorted(st.paired)

    h = nx.Graph()
    realized = {}
    h.add_nodes_from(("p", p) for p in paired)
    h.add_nodes_from(("x", e) for e in residual)

    def link(a, b, edge):
        if edge is not None and not h.has_edge(a, b):
            h.add_edge(a, b)
            realized[frozenset((a, b))] = edge

    for i, p in enumerate(paired):
        for q in paired[i + 1:]:
            if graph.has_edge(p, q):
                link(("p", p), ("p", q), graph.edge_id(p, q))
        for e in residual:
            ends = frozenset(graph.edges[e])
            link(("p", p), ("x", e), _lowest_edge(graph, {p}, ends))
    for i, e in enumerate(residual):
        ends_e = frozenset(graph.edges[e])
        for f in residual[i + 1:]:
            ends_f = frozenset(graph.edges[f])
            link(("x", e), ("x", f), _lowest_edge(graph, ends_e, ends_f))

    matching = nx.max_weight_matching(h, maxcardinality=True)
    chosen = set()
    matched = set()
    for a, b in matching:
        chosen.add(realized[frozenset((a, b))])
        matched.update((a, b))

    for p in paired:
        node = ("p", p)
        if node in matched:
            continue
        incident = sorted(h.neighbors(node))
        if incident:
            chosen.add(realized[frozenset((node, incident[0]))])
            continue
        if not graph.neighbors(p):
            return None
        chosen.add(graph.edge_id(p, min(graph.neighbors(p))))

    for e in residual:
        if ("x", e) not in matched:
            chosen.add(e)

    return core.MixedSolution(st.dominators, frozenset(chosen))


@dataclasses.dataclass
class FptStats:
    branches: int = 0
    leaves: int = 0
    sanity_rejections: int = 0
    completions: int = 0
    max_depth: int = 0
    best_size: int = None
    wall_ms: float = 0.0
    rules: collections.Counter = dataclasses.field(
        default_factory=collections.Counter
    )

    def to_json(self):
        result = dataclasses.asdict(self)
        result["rules"] = {k: v for k, v in sorted(self.rules.items())}
        return result


class _BudgetSearch:
    def __init__(self, graph, budget, stats, optimal):
        self.graph = graph
        self.budget = budget
        self.stats = stats
        self.optimal = optimal
        self.debug = core.debug_checks_enabled()
        self.best = None

    def done(self):
        return self.best is not None and not self.optimal

    def _bound(self, st):
        return len(st.dominators) + (len(st.paired) + 1) // 2

    def search(self, st, depth):
        stats = self.stats
        stats.max_depth = max(stats.max_depth, depth)
        if self.best is not None and self._bound(st) >= self.best.size:
            return

        rule = select_rule_fpt(st)
        if rule is FptRule.SANITY:
            stats.sanity_rejections += 1
            return

        if rule is None:
            stats.leaves += 1
            solution = complete_fpt(self.graph, st)
            if solution is None or solution.size > self.budget:
                return
            stats.completions += 1
            if self.debug and not core.is_valid_mds(self.graph, solution):
                raise exceptions.ContractViolationError(
                    "completion is not a mixed dominating set"
                )
            if self.best is None or solution.size < self.best.size:
                self.best = solution
            return

        stats.rules[rule.value] += 1
        if rule is not FptRule.R1:
            stats.branches += 1
        for child in _children(st, rule):
            if not sanity_check(child):
                stats.sanity_rejections += 1
                continue
            self.search(child, depth + 1)
            if self.done():
                return


def solve_fpt(graph, k, optimal=False, stats=None):
    """Return a mixed dominating set of size at most ``k``, or None.

    Isolated vertices are put in D up front and use up budget.  By default
    the first solution found is returned; with ``optimal`` the search goes
    on to a minimum one.

    :param Graph graph: the graph
    :param int k: the budget
    :param bool optimal: keep searching for the minimum
    :param FptStats stats: filled in with search statistics when given
    :rtype: MixedSolution or None
    :raises InputError: if ``k`` is negative
    """

    if k < 0:
        raise exceptions.InputError("k must be non-negative, got {}".format(k))

    stats = stats if stats is not None else FptStats()
    started = time.perf_counter()

    split = oracle.split_isolated(graph)
    budget = k - len(split.isolated)
    result = None
    if budget >= 0:
        search = _BudgetSearch(split.core, budget, stats, optimal)
        search.search(FptState(split.core, budget), 0)
        if search.best is not None:
            result = split.restore(search.best)

    stats.best_size = result.size if result is not None else None
    stats.wall_ms = (time.perf_counter() - started) * 1000.0
    logging.debug(
        "solve_fpt: n=%d k=%d leaves=%d found=%s",
        graph.n, k, stats.leaves, result is not None
    )
    return result

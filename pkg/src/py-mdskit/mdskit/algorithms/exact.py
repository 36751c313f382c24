# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Exact mixed domination by branching over minimal vertex covers.

Every minimal vertex cover C of the graph is tried in turn.  For a fixed C
the search looks for a nice partition with D ⊆ C ⊆ D ∪ P, deciding vertices
of C into D_f or P_f and vertices of Z = V \\ C into P_f'.  Once nothing is
left undecided, the partial assignment is completed with the fewest edges
touching every vertex of P_f ∪ P_f'.
"""

import collections
import concurrent.futures
import contextlib
import dataclasses
import enum
import logging
import multiprocessing
import time

from .. import (
    core,
    exceptions,
)
from . import oracle


class ExactRule(enum.Enum):
    """Rules in priority order."""

    R1 = "R1"
    R2 = "R2"
    B1 = "B1"
    B2_1 = "B2_1"
    B2_2 = "B2_2"
    B3_1 = "B3_1"
    B3_2 = "B3_2"
    B4 = "B4"
    B5 = "B5"
    B6 = "B6"


@dataclasses.dataclass(frozen=True)
class ExactState:
    """A partial assignment for a fixed minimal vertex cover.

    ``dominators`` is D_f, ``paired`` is P_f (inside the cover) and
    ``paired_outside`` is P_f' (outside it).  The undecided sets are derived:
    U = V minus the decided vertices minus the vertices of Z dominated by D_f.
    """

    graph: core.Graph = dataclasses.field(repr=False, compare=False)
    cover: frozenset
    dominators: frozenset = frozenset()
    paired: frozenset = frozenset()
    paired_outside: frozenset = frozenset()

    outside: frozenset = dataclasses.field(init=False, repr=False)
    undecided_cover: frozenset = dataclasses.field(init=False, repr=False)
    undecided_outside: frozenset = dataclasses.field(init=False, repr=False)

    def __post_init__(self):
        graph = self.graph
        for name in ("cover", "dominators", "paired", "paired_outside"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))

        outside = frozenset(graph.vertices()) - self.cover
        dominated = set()
        for u in self.dominators:
            dominated.update(graph.neighbors(u))

        object.__setattr__(self, "outside", outside)
        object.__setattr__(
            self,
            "undecided_cover",
            self.cover - self.dominators - self.paired,
        )
        object.__setattr__(
            self,
            "undecided_outside",
            outside - self.paired_outside - dominated,
        )

    @property
    def undecided(self):
        return self.undecided_cover | self.undecided_outside

    def check(self):
        """Raise ContractViolationError if the state is inconsistent."""

        d, p, q = self.dominators, self.paired, self.paired_outside
        if (d & p) or (d & q) or (p & q):
            raise exceptions.ContractViolationError(
                "D_f, P_f and P_f' must be pairwise disjoint"
            )
        if not (d | p) <= self.cover:
            raise exceptions.ContractViolationError(
                "D_f and P_f must lie inside the cover"
            )
        if not q <= self.outside:
            raise exceptions.ContractViolationError(
                "P_f' must lie outside the cover"
            )
        for v in self.outside:
            if self.graph.neighbors(v) & self.outside:
                raise exceptions.ContractViolationError(
                    "the complement of the cover is not independent"
                )

        recomputed = ExactState(
            self.graph, self.cover, d, p, q
        )
        if (
            recomputed.undecided_cover != self.undecided_cover
            or recomputed.undecided_outside != self.undecided_outside
        ):
            raise exceptions.ContractViolationError("stale undecided sets")

    def degree_outside(self, u):
        """d_{U_Z}(u)"""
        return len(self.graph.neighbors(u) & self.undecided_outside)

    def degree_cover(self, v):
        """d_{U_C}(v)"""
        return len(self.graph.neighbors(v) & self.undecided_cover)

    def child(self, dominators=(), paired=(), paired_outside=()):
        """Return the state with the given vertices added, or None on conflict."""

        add_d = frozenset(dominators)
        add_p = frozenset(paired)
        add_q = frozenset(paired_outside)
        if (add_d & add_p) or (add_d & add_q) or (add_p & add_q):
            return None
        decided = self.dominators | self.paired | self.paired_outside
        if (add_d | add_p | add_q) & decided:
            return None
        if not (add_d | add_p) <= self.cover or add_q & self.cover:
            return None
        return ExactState(
            self.graph,
            self.cover,
            self.dominators | add_d,
            self.paired | add_p,
            self.paired_outside | add_q,
        )


def initial_state(graph, cover):
    return ExactState(graph, frozenset(cover))


def measure_l(state):
    """Count undecided cover vertices with d_{U_Z} >= 2 plus undecided outside
    vertices with d_{U_C} >= 1."""

    return (
        sum(1 for u in state.undecided_cover if state.degree_outside(u) >= 2)
        + sum(
            1 for v in state.undecided_outside if state.degree_cover(v) >= 1
        )
    )


# each finder returns the chosen vertices for its rule, or None

def _find_r1(st):
    for u in sorted(st.undecided_cover):
        if st.degree_outside(u) <= 1:
            return (u,)
    return None


def _find_r2(st):
    for v in sorted(st.undecided_outside):
        if st.degree_cover(v) == 0:
            return (v,)
    return None


def _find_b1(st):
    for u in sorted(st.undecided_cover):
        if st.degree_outside(u) >= 4:
            return (u,)
    return None


def _find_b2_1(st):
    threes = [u for u in sorted(st.undecided_cover) if st.degree_outside(u) == 3]
    twos = [u for u in sorted(st.undecided_cover) if st.degree_outside(u) == 2]
    for u1 in threes:
        around = st.graph.neighbors(u1) & st.undecided_outside
        for u2 in twos:
            if st.graph.neighbors(u2) & around:
                return (u1, u2)
    return None


def _find_b2_2(st):
    for u in sorted(st.undecided_cover):
        if st.degree_outside(u) == 2:
            return (u,)
    return None


def _find_outside_with_degree(st, degree):
    for v in sorted(st.undecided_outside):
        around = st.graph.neighbors(v) & st.undecided_cover
        if len(around) == degree:
            return (v,) + tuple(sorted(around))
    return None


def _find_b3_1(st):
    return _find_outside_with_degree(st, 1)


def _find_b3_2(st):
    return _find_outside_with_degree(st, 2)


def _find_b4(st):
    ordered = sorted(st.undecided_cover)
    for i, u1 in enumerate(ordered):
        around = st.graph.neighbors(u1) & st.undecided_outside
        for u2 in ordered[i + 1:]:
            common = sorted(st.graph.neighbors(u2) & around)
            if len(common) >= 2:
                return (u1, u2, common[0], common[1])
    return None


def _find_b5(st):
    return _find_outside_with_degree(st, 3)


def _find_b6(st):
    if not st.undecided_cover:
        return None
    u = min(st.undecided_cover)
    return (u,) + tuple(
        sorted(st.graph.neighbors(u) & st.undecided_outside)
    )


_FINDERS = collections.OrderedDict([
    (ExactRule.R1, _find_r1),
    (ExactRule.R2, _find_r2),
    (ExactRule.B1, _find_b1),
    (ExactRule.B2_1, _find_b2_1),
    (ExactRule.B2_2, _find_b2_2),
    (ExactRule.B3_1, _find_b3_1),
    (ExactRule.B3_2, _find_b3_2),
    (ExactRule.B4, _find_b4),
    (ExactRule.B5, _find_b5),
    (ExactRule.B6, _find_b6),
])


def select_rule(state):
    """Return the first applicable :class:`ExactRule`, or None.

    None means no rule applies, which happens exactly when nothing is left
    undecided.

    :raises ContractViolationError: if the state is inconsistent
    """

    if core.debug_checks_enabled():
        state.check()

    for rule, finder in _FINDERS.items():
        if finder(state) is not None:
            return rule

    if state.undecided:
        raise exceptions.ContractViolationError(
            "no rule applies but U is not empty: {}".format(
                sorted(state.undecided)
            )
        )
    return None


def _shared_outside(st, u, v):
    """X_i: undecided cover vertices sharing a U_Z neighbor other than v with u."""

    others = (st.graph.neighbors(u) & st.undecided_outside) - {v}
    result = set()
    for w in others:
        result.update(st.graph.neighbors(w) & st.undecided_cover)
    return result


def expand(state, rule):
    """Return the child states ``rule`` prescribes for ``state``.

    Children that would put a vertex in two sets are discarded.

    :raises ContractViolationError: if ``rule`` does not apply to ``state``
    """

    chosen = _FINDERS[rule](state)
    if chosen is None:
        raise exceptions.ContractViolationError(
            "rule {} does not apply".format(rule.value)
        )

    st = state
    if rule is ExactRule.R1:
        specs = [dict(paired=chosen)]
    elif rule is ExactRule.R2:
        specs = [dict(paired_outside=chosen)]
    elif rule in (ExactRule.B1, ExactRule.B2_2):
        (u,) = chosen
        specs = [dict(dominators={u}), dict(paired={u})]
    elif rule in (ExactRule.B2_1, ExactRule.B4):
        u1, u2 = chosen[:2]
        specs = [dict(dominators={u1}, paired={u2}), dict(paired={u1})]
    elif rule is ExactRule.B3_1:
        _, u = chosen
        specs = [dict(dominators={u}), dict(paired={u})]
    elif rule is ExactRule.B3_2:
        _, u1, u2 = chosen
        specs = [
            dict(dominators={u1}),
            dict(dominators={u2}, paired={u1}),
            dict(paired={u1, u2}),
        ]
    elif rule is ExactRule.B5:
        v, u1, u2, u3 = chosen
        trio = (u1, u2, u3)
        shared = [_shared_outside(st, u, v) - set(trio) for u in trio]
        specs = [dict(paired=set(trio), paired_outside={v})]
        for i in range(3):
            specs.append(dict(
                dominators={trio[i]},
                paired=set(trio) - {trio[i]},
            ))
        for i, j in ((0, 1), (0, 2), (1, 2)):
            specs.append(dict(
                dominators={trio[i], trio[j]},
                paired=(set(trio) - {trio[i], trio[j]}) | shared[i] | shared[j],
            ))
        specs.append(dict(
            dominators=set(trio),
            paired=shared[0] | shared[1] | shared[2],
        ))
    else:
        u = chosen[0]
        v1, v2, v3 = chosen[1:4]
        graph = st.graph
        specs = [
            dict(paired={u}),
            dict(
                dominators={u},
                paired=(graph.neighbors(v1) & st.undecided_cover) - {u},
            ),
            dict(
                dominators={u},
                paired=(
                    (graph.neighbors(v2) | graph.neighbors(v3))
                    & st.undecided_cover
                ) - {u},
            ),
        ]

    children = []
    for spec in specs:
        child = st.child(**spec)
        if child is not None:
            children.append(child)
    return children


def complete_exact(graph, state):
    """Complete a fully decided state with a minimum edge cover of G[P_f ∪ P_f'].

    :returns: the MixedSolution, or None when that induced subgraph has an
              isolated vertex
    :raises ContractViolationError: if something is still undecided
    """

    if state.undecided:
        raise exceptions.ContractViolationError(
            "cannot complete: U is not empty"
        )
    cover = core.min_edge_cover(graph, state.paired | state.paired_outside)
    if cover is None:
        return None
    return core.MixedSolution(state.dominators, cover)


def complete_leaf(graph, state):
    """Complete a fully decided state, letting matching edges leave P_f ∪ P_f'.

    A vertex of P_f whose only partners are outside vertices already
    dominated by D_f is isolated in G[P_f ∪ P_f'], yet it can still be paired
    with one of them.  The edges come from
    :func:`mdskit.core.incident_edge_cover`, which is never larger than the
    minimum edge cover of the induced subgraph.

    :returns: the MixedSolution, or None when a paired vertex has no neighbor
    :raises ContractViolationError: if something is still undecided
    """

    if state.undecided:
        raise exceptions.ContractViolationError(
            "cannot complete: U is not empty"
        )
    cover = core.incident_edge_cover(
        graph, state.paired | state.paired_outside
    )
    if cover is None:
        return None
    return core.MixedSolution(state.dominators, cover)


@dataclasses.dataclass
class ExactStats:
    covers: int = 0
    branches: int = 0
    leaves: int = 0
    completions: int = 0
    infeasible_leaves: int = 0
    pruned: int = 0
    max_depth: int = 0
    best_size: int = None
    wall_ms: float = 0.0
    rules: collections.Counter = dataclasses.field(
        default_factory=collections.Counter
    )

    def merge(self, other):
        for name in (
            "covers", "branches", "leaves", "completions",
            "infeasible_leaves", "pruned",
        ):
            setattr(self, name, getattr(self, name) + getattr(other, name))
        self.max_depth = max(self.max_depth, other.max_depth)
        self.rules.update(other.rules)

    def to_json(self):
        result = dataclasses.asdict(self)
        result["rules"] = {k: v for k, v in sorted(self.rules.items())}
        return result


class _LocalIncumbent:
    def __init__(self, value):
        self.value = value

    def get_lock(self):
        return contextlib.nullcontext()


class _CoverSearch:
    """Depth-first search for one cover at a time, sharing an incumbent size."""

    def __init__(self, graph, incumbent, stats, faithful):
        self.graph = graph
        self.incumbent = incumbent
        self.stats = stats
        self.faithful = faithful
        self.debug = core.debug_checks_enabled()
        self.best = None

    def _bound(self, st):
        decided_pairs = len(st.paired) + len(st.paired_outside)
        return len(st.dominators) + (decided_pairs + 1) // 2

    def run(self, cover):
        self.stats.covers += 1
        self._search(initial_state(self.graph, cover), 0)

    def _search(self, st, depth):
        stats = self.stats
        stats.max_depth = max(stats.max_depth, depth)
        if not self.faithful and self._bound(st) >= self.incumbent.value:
            stats.pruned += 1
            return

        rule = select_rule(st)
        if rule is None:
            stats.leaves += 1
            solution = complete_leaf(self.graph, st)
            if solution is None:
                stats.infeasible_leaves += 1
                return
            stats.completions += 1
            if self.debug and not core.is_valid_mds(self.graph, solution):
                raise exceptions.ContractViolationError(
                    "leaf completion is not a mixed dominating set"
                )
            with self.incumbent.get_lock():
                improved = solution.size < self.incumbent.value
                if improved:
                    self.incumbent.value = solution.size
            if improved:
                self.best = solution
            return

        stats.rules[rule.value] += 1
        if rule not in (ExactRule.R1, ExactRule.R2):
            stats.branches += 1
        for child in expand(st, rule):
            self._search(child, depth + 1)


_WORKER_INCUMBENT = None


def _init_worker(incumbent):
    global _WORKER_INCUMBENT
    _WORKER_INCUMBENT = incumbent


def _solve_cover_batch(graph, covers, faithful):
    stats = ExactStats()
    search = _CoverSearch(graph, _WORKER_INCUMBENT, stats, faithful)
    for cover in covers:
        search.run(cover)
    return search.best, stats


def _batches(items, count):
    buckets = [[] for _ in range(count)]
    for i, item in enumerate(items):
        buckets[i % count].append(item)
    return [b for b in buckets if b]


def solve_exact(graph, faithful=False, threads=1, stats=None):
    """Return a minimum mixed dominating set of ``graph``.

    Isolated vertices are put in D up front.  With ``faithful`` the
    branch-and-bound pruning is switched off, so every leaf of every cover
    is visited.  With ``threads`` > 1 the covers are spread across worker
    processes that share only the incumbent size.

    :param Graph graph: the graph
    :param bool faithful: disable pruning
    :param int threads: worker process count
    :param ExactStats stats: filled in with search statistics when given
    :rtype: MixedSolution
    """

    stats = stats if stats is not None else ExactStats()
    started = time.perf_counter()

    split = oracle.split_isolated(graph)
    g = split.core
    fallback = core.MixedSolution(frozenset(g.vertices()), frozenset())

    if threads <= 1:
        incumbent = _LocalIncumbent(g.n + 1 if faithful else g.n)
        search = _CoverSearch(g, incumbent, stats, faithful)
        for cover in core.minimal_vertex_covers(g):
            search.run(cover)
        best = search.best
    else:
        covers = list(core.minimal_vertex_covers(g))
        shared = multiprocessing.Value("i", g.n + 1 if faithful else g.n)
        best = None
        with concurrent.futures.ProcessPoolExecutor(
            max_workers=threads,
            initializer=_init_worker,
            initargs=(shared,),
        ) as executor:
            futures = [
                executor.submit(_solve_cover_batch, g, batch, faithful)
                for batch in _batches(covers, threads)
            ]
            for future in futures:
                found, batch_stats = future.result()
                stats.merge(batch_stats)
                if found is not None and (
                    best is None or found.size < best.size
                ):
                    best = found

    if best is None or best.size > fallback.size:
        best = fallback

    result = split.restore(best)
    stats.best_size = result.size
    stats.wall_ms = (time.perf_counter() - started) * 1000.0
    logging.debug(
        "solve_exact: n=%d covers=%d leaves=%d size=%d",
        graph.n, stats.covers, stats.leaves, result.size
    )
    return result

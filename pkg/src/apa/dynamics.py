"""Persuasion dynamics: possible acts, transitions, reachable LTS.

An act (source, trigger, target) is possible at a state, with respect to a
reference set, when the source is visible, the trigger is visible or empty,
and no visible member of the reference set attacks the source. Any nonempty
subset of the possible acts may fire at once, dropping the triggers that
were converted and making every target visible; an argument both dropped
and (re)made visible in the same step stays visible (the effects offset).
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass

from .errors import EmptyGamma, TooLarge
from .model import APAFramework, PersuasionAct, State

#: Hard ceiling on explicit state enumeration (overridable per call).
DEFAULT_MAX_STATES = 4096

RefSet = frozenset  # reference sets are plain frozensets of argument ids


@dataclass(frozen=True)
class SelectorFamily:
    """A family of reference-set selectors for building an LTS.

    `selectors` is an ordered tuple of reference sets, or None for the
    wildcard family (all subsets of the arguments). The wildcard is
    realized by the single empty reference set: blocking only ever removes
    acts, so every transition possible under some reference set is also
    possible under the empty one.
    """

    selectors: tuple[frozenset[str], ...] | None = None

    @classmethod
    def wildcard(cls) -> "SelectorFamily":
        return cls(None)

    @classmethod
    def of(cls, *refsets) -> "SelectorFamily":
        return cls(tuple(frozenset(r) for r in refsets))

    @property
    def is_wildcard(self) -> bool:
        return self.selectors is None

    @property
    def effective(self) -> tuple[frozenset[str], ...]:
        """The selectors actually iterated during BFS."""
        if self.selectors is None:
            return (frozenset(),)
        return self.selectors


ALL = SelectorFamily.wildcard()


@dataclass(frozen=True)
class LTS:
    """Reachable states plus transitions labeled by selector index."""

    framework: APAFramework
    family: SelectorFamily
    states: tuple[State, ...]
    edges: tuple[tuple[State, int, State], ...]
    initial: State
    deadlocks: frozenset[State]

    def successors_of(self, state: State, selector_ids=None) -> frozenset[State]:
        """Successor states of `state`, optionally restricted to a set of
        selector indices."""
        return frozenset(
            t
            for (s, i, t) in self.edges
            if s == state and (selector_ids is None or i in selector_ids)
        )


def possible_acts(
    fw: APAFramework, refset: frozenset[str], state: State
) -> frozenset[PersuasionAct]:
    """Acts executable at `state` when screened by `refset`."""
    visible = state.visible
    blocked_sources = set()
    for (a, b) in fw.attacks:
        if a in refset and a in visible:
            blocked_sources.add(b)
    return frozenset(
        act
        for act in fw.persuasions
        if act.source in visible
        and (act.trigger is None or act.trigger in visible)
        and act.source not in blocked_sources
    )


def neg_set(state: State, gamma: frozenset[PersuasionAct]) -> frozenset[str]:
    """Visible arguments converted away by `gamma` (triggers of convert
    acts whose source is visible)."""
    visible = state.visible
    return frozenset(
        act.trigger
        for act in gamma
        if act.trigger is not None
        and act.trigger in visible
        and act.source in visible
    )


def pos_set(state: State, gamma: frozenset[PersuasionAct]) -> frozenset[str]:
    """Arguments made visible by `gamma`: every act target. Targets range
    over all declared arguments, not just the currently visible ones;
    otherwise nothing invisible could ever appear."""
    return frozenset(act.target for act in gamma)


def apply_acts(state: State, gamma: frozenset[PersuasionAct]) -> State:
    """The successor state of firing the nonempty act set `gamma`."""
    if not gamma:
        raise EmptyGamma("a transition needs at least one act")
    visible = (state.visible - neg_set(state, gamma)) | pos_set(state, gamma)
    return State(visible)


def successors(
    fw: APAFramework, refset: frozenset[str], state: State
) -> frozenset[tuple[frozenset[PersuasionAct], State]]:
    """All (act subset, successor) pairs at `state` under `refset`: one
    entry per nonempty subset of the possible acts."""
    acts = sorted(possible_acts(fw, refset, state), key=lambda a: a.sort_token)
    out = set()
    for mask in range(1, 1 << len(acts)):
        gamma = frozenset(a for i, a in enumerate(acts) if mask >> i & 1)
        out.add((gamma, apply_acts(state, gamma)))
    return frozenset(out)


@functools.lru_cache(maxsize=None)
def successor_states(
    fw: APAFramework, refset: frozenset[str], state: State
) -> frozenset[State]:
    """Deduplicated successor states (memoized; all inputs immutable)."""
    return frozenset(t for (_, t) in successors(fw, refset, state))


def reachable(
    fw: APAFramework,
    family: SelectorFamily = ALL,
    max_states: int = DEFAULT_MAX_STATES,
) -> LTS:
    """Breadth-first closure of the transition relation from the initial
    state, expanding under every selector of `family` at every state.

    The result is canonical: states sorted by their member-index tuples,
    edges sorted by (source, selector index, target). States with no
    outgoing edge under the family are flagged as deadlocks.
    """
    selectors = family.effective
    init = fw.initial_state
    seen = {init}
    queue = deque([init])
    edges: set[tuple[State, int, State]] = set()
    while queue:
        state = queue.popleft()
        for idx, refset in enumerate(selectors):
            for succ in successor_states(fw, refset, state):
                edges.add((state, idx, succ))
                if succ not in seen:
                    if len(seen) >= max_states:
                        raise TooLarge(
                            f"reachable state count exceeds {max_states}"
                        )
                    seen.add(succ)
                    queue.append(succ)
    states = tuple(sorted(seen, key=fw.state_key))
    sources = {s for (s, _, _) in edges}
    deadlocks = frozenset(s for s in states if s not in sources)
    edge_key = lambda e: (fw.state_key(e[0]), e[1], fw.state_key(e[2]))
    return LTS(
        framework=fw,
        family=family,
        states=states,
        edges=tuple(sorted(edges, key=edge_key)),
        initial=init,
        deadlocks=deadlocks,
    )

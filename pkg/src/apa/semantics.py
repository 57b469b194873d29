"""State-wise admissibility semantics.

A candidate set is admissible at a state when it is conflict-free among its
visible members, proper (a subset of the visible arguments), and defends
each of its members. Defendedness has two parts: every visible attacker of
a member is counter-attacked by a visible candidate member, and no
transition screened by the candidate itself can make the member invisible
(no elimination). Complete / preferred / stable / grounded refine this in
the usual way, with completeness closure restricted to visible arguments.
"""

from __future__ import annotations

import functools
from itertools import combinations

from . import dynamics
from .errors import TooLarge
from .model import APAFramework, State

LABELS = ("ad", "co", "pr", "st", "gr")

#: Refuse 2^n candidate enumeration beyond this many visible arguments.
DEFAULT_MAX_ENUM_ARGS = 20


def is_conflict_free(fw: APAFramework, candidate: frozenset[str], state: State) -> bool:
    """No attack between visible members of the candidate."""
    vis = candidate & state.visible
    return not any(a in vis and b in vis for (a, b) in fw.attacks)


def defends(fw: APAFramework, candidate: frozenset[str], arg: str, state: State) -> bool:
    """Whether `candidate`, used as a reference set, defends `arg` at
    `state`. Invisible arguments are defended vacuously."""
    if arg not in state.visible:
        return True
    helpers = candidate & state.visible
    for attacker in fw.attackers_of(state, arg):
        if not any((h, attacker) in fw.attacks for h in helpers):
            return False
    # no elimination: no transition screened by the candidate itself may
    # drop the argument
    for succ in dynamics.successor_states(fw, candidate, state):
        if arg not in succ.visible:
            return False
    return True


def is_defended(fw: APAFramework, candidate: frozenset[str], state: State) -> bool:
    return all(defends(fw, candidate, a, state) for a in candidate)


def is_proper(candidate: frozenset[str], state: State) -> bool:
    return candidate <= state.visible


@functools.lru_cache(maxsize=None)
def is_admissible(fw: APAFramework, candidate: frozenset[str], state: State) -> bool:
    return (
        is_proper(candidate, state)
        and is_conflict_free(fw, candidate, state)
        and is_defended(fw, candidate, state)
    )


@functools.lru_cache(maxsize=None)
def is_complete(fw: APAFramework, candidate: frozenset[str], state: State) -> bool:
    """Admissible and containing every *visible* argument it defends.

    Closure is restricted to visible arguments: any candidate defends every
    invisible argument by definition, so a literal closure would force
    invisible members and contradict properness.
    """
    if not is_admissible(fw, candidate, state):
        return False
    return all(
        a in candidate
        for a in state.visible
        if defends(fw, candidate, a, state)
    )


def _check_enum_bound(state: State, max_args: int) -> None:
    if len(state.visible) > max_args:
        raise TooLarge(
            f"{len(state.visible)} visible arguments exceed the enumeration "
            f"bound of {max_args}"
        )


@functools.lru_cache(maxsize=None)
def complete_sets(
    fw: APAFramework, state: State, max_args: int = DEFAULT_MAX_ENUM_ARGS
) -> tuple[frozenset[str], ...]:
    """All complete sets at `state`, in canonical order, by enumeration of
    the subsets of the visible arguments (properness makes this total)."""
    _check_enum_bound(state, max_args)
    vis = fw.sort_args(state.visible)
    found = []
    for r in range(len(vis) + 1):
        for combo in combinations(vis, r):
            cand = frozenset(combo)
            if is_complete(fw, cand, state):
                found.append(cand)
    return tuple(found)


def grounded_set(
    fw: APAFramework, state: State, max_args: int = DEFAULT_MAX_ENUM_ARGS
) -> frozenset[str]:
    """Intersection of all complete sets at `state` (at least one exists)."""
    sets = complete_sets(fw, state, max_args)
    if not sets:  # unreachable in theory; safeguard for the empty state
        return frozenset()
    out = set(sets[0])
    for s in sets[1:]:
        out &= s
    return frozenset(out)


def is_preferred(
    fw: APAFramework, candidate: frozenset[str], state: State,
    max_args: int = DEFAULT_MAX_ENUM_ARGS,
) -> bool:
    """Complete with no complete strict superset."""
    if not is_complete(fw, candidate, state):
        return False
    return not any(candidate < c for c in complete_sets(fw, state, max_args))


def is_stable(
    fw: APAFramework, candidate: frozenset[str], state: State,
    max_args: int = DEFAULT_MAX_ENUM_ARGS,
) -> bool:
    """Preferred and attacking every visible non-member."""
    if not is_preferred(fw, candidate, state, max_args):
        return False
    for other in state.visible - candidate:
        if not any((c, other) in fw.attacks for c in candidate):
            return False
    return True


def holds(
    fw: APAFramework, label: str, candidate: frozenset[str], state: State,
    max_args: int = DEFAULT_MAX_ENUM_ARGS,
) -> bool:
    """Evaluate one of the five semantics labels for `candidate` at
    `state`."""
    candidate = frozenset(candidate)
    if label == "ad":
        return is_admissible(fw, candidate, state)
    if label == "co":
        return is_complete(fw, candidate, state)
    if label == "pr":
        return is_preferred(fw, candidate, state, max_args)
    if label == "st":
        return is_stable(fw, candidate, state, max_args)
    if label == "gr":
        return candidate == grounded_set(fw, state, max_args)
    raise ValueError(f"unknown semantics label: {label!r}")


def extensions(
    fw: APAFramework, label: str, state: State,
    max_args: int = DEFAULT_MAX_ENUM_ARGS,
) -> tuple[frozenset[str], ...]:
    """All subsets of the visible set satisfying `label`, canonically
    ordered. The grounded label yields exactly one candidate."""
    _check_enum_bound(state, max_args)
    if label == "gr":
        return (grounded_set(fw, state, max_args),)
    if label == "co":
        return complete_sets(fw, state, max_args)
    if label == "pr":
        sets = complete_sets(fw, state, max_args)
        return tuple(c for c in sets if not any(c < d for d in sets))
    if label == "st":
        return tuple(
            c
            for c in extensions(fw, "pr", state, max_args)
            if is_stable(fw, c, state, max_args)
        )
    if label == "ad":
        vis = fw.sort_args(state.visible)
        found = []
        for r in range(len(vis) + 1):
            for combo in combinations(vis, r):
                cand = frozenset(combo)
                if is_admissible(fw, cand, state):
                    found.append(cand)
        return tuple(found)
    raise ValueError(f"unknown semantics label: {label!r}")

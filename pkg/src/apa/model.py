"""Core model: arguments, persuasion acts, frameworks and states.

Arguments are plain string ids; a framework fixes their declaration order,
which every set-valued output in the package is sorted by. A state is a
value object identified solely by its visible set; the attacks it induces
are always recomputed from the framework, never stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import (
    BadInitial,
    DuplicateArgument,
    UndeclaredArgument,
    ValidationError,
    ValidationIssue,
)

#: Reserved token for the empty trigger of an induce act. It can never be
#: declared as an argument.
EPSILON = "~"


@dataclass(frozen=True)
class PersuasionAct:
    """A persuasion triple (source, trigger, target).

    trigger is None for an induce act (the target is merely made visible)
    and an argument id for a convert act (the trigger is dropped in favour
    of the target).
    """

    source: str
    trigger: str | None
    target: str

    @property
    def is_induce(self) -> bool:
        return self.trigger is None

    @property
    def is_convert(self) -> bool:
        return self.trigger is not None

    @property
    def sort_token(self) -> tuple[str, str, str]:
        """Deterministic ordering key (the empty trigger sorts first)."""
        return (self.source, self.trigger or "", self.target)

    def __str__(self) -> str:
        if self.is_induce:
            return f"{self.source} => {self.target}"
        return f"{self.source} : {self.trigger} => {self.target}"


@dataclass(frozen=True)
class State:
    """A state of the dynamics: the set of currently visible arguments.

    Two states are equal iff their visible sets are equal; the induced
    attack relation is derived on demand (see APAFramework.induced_attacks).
    """

    visible: frozenset[str]

    def __contains__(self, arg: str) -> bool:
        return arg in self.visible


@dataclass(frozen=True)
class APAFramework:
    """The immutable input artifact: arguments, attacks, persuasion acts
    and the initially visible set.

    `arguments` fixes the declaration order; use `sort_args` to emit any
    argument collection canonically. Construct via `validate` or the
    `framework` convenience helper, which enforce the invariants.
    """

    arguments: tuple[str, ...]
    attacks: frozenset[tuple[str, str]]
    persuasions: frozenset[PersuasionAct]
    initial: frozenset[str]

    # -- canonical ordering ------------------------------------------------

    def index(self, arg: str) -> int:
        return self._index[arg]

    @property
    def _index(self) -> dict[str, int]:
        d = self.__dict__.get("_index_cache")
        if d is None:
            d = {a: i for i, a in enumerate(self.arguments)}
            object.__setattr__(self, "_index_cache", d)
        return d

    def sort_args(self, args: Iterable[str]) -> tuple[str, ...]:
        """Sort argument ids by declaration order."""
        return tuple(sorted(args, key=self._index.__getitem__))

    def state_key(self, state: State) -> tuple[int, ...]:
        """Canonical sort key for states: the tuple of member indices."""
        return tuple(sorted(self._index[a] for a in state.visible))

    # -- states ------------------------------------------------------------

    def state(self, visible: Iterable[str]) -> State:
        return State(frozenset(visible))

    @property
    def initial_state(self) -> State:
        return State(self.initial)

    def induced_attacks(self, state: State) -> frozenset[tuple[str, str]]:
        """The attack pairs with both endpoints visible in `state`."""
        v = state.visible
        return frozenset((a, b) for (a, b) in self.attacks if a in v and b in v)

    def attackers_of(self, state: State, arg: str) -> frozenset[str]:
        """Visible arguments attacking `arg` in `state`."""
        v = state.visible
        return frozenset(a for (a, b) in self.attacks if b == arg and a in v)

    def format_set(self, args: Iterable[str]) -> str:
        return "{" + ",".join(self.sort_args(args)) + "}"


def induced_state(fw: APAFramework, visible: Iterable[str]) -> State:
    """The state whose visible set is `visible` (attacks are derived)."""
    return fw.state(visible)


def validate(
    arguments: Iterable[tuple[str, int | None]],
    initial: Iterable[tuple[str, int | None]],
    attacks: Iterable[tuple[str, str, int | None]],
    induces: Iterable[tuple[str, str, int | None]],
    converts: Iterable[tuple[str, str, str, int | None]],
) -> APAFramework:
    """Validate a framework description and build the immutable framework.

    Every entry carries an optional source line for diagnostics. All
    violations are collected; on any violation a ValidationError listing
    every one of them is raised.
    """
    issues: list[ValidationIssue] = []
    order: list[str] = []
    seen: set[str] = set()
    for tok, line in arguments:
        if tok == EPSILON:
            # the empty-trigger token is reserved; declaring it collides
            # with the built-in name
            issues.append(DuplicateArgument(tok, line))
            continue
        if tok in seen:
            issues.append(DuplicateArgument(tok, line))
        else:
            seen.add(tok)
            order.append(tok)
    if not order and not issues:
        issues.append(UndeclaredArgument("<no arguments declared>", None))

    def known(tok: str, line: int | None, issue=UndeclaredArgument) -> bool:
        if tok not in seen:
            issues.append(issue(tok, line))
            return False
        return True

    init: set[str] = set()
    for tok, line in initial:
        if known(tok, line, BadInitial):
            init.add(tok)

    atk: set[tuple[str, str]] = set()
    for src, tgt, line in attacks:
        if known(src, line) & known(tgt, line):
            atk.add((src, tgt))

    acts: set[PersuasionAct] = set()
    for src, tgt, line in induces:
        if known(src, line) & known(tgt, line):
            acts.add(PersuasionAct(src, None, tgt))
    for src, trig, tgt, line in converts:
        ok = known(src, line) & known(trig, line) & known(tgt, line)
        if ok:
            acts.add(PersuasionAct(src, trig, tgt))

    if issues:
        raise ValidationError(issues)
    return APAFramework(
        arguments=tuple(order),
        attacks=frozenset(atk),
        persuasions=frozenset(acts),
        initial=frozenset(init),
    )


def framework(
    arguments: Iterable[str],
    attacks: Iterable[tuple[str, str]] = (),
    persuasions: Iterable[PersuasionAct | tuple] = (),
    initial: Iterable[str] = (),
) -> APAFramework:
    """Programmatic constructor; accepts acts as PersuasionAct or as
    (source, trigger, target) triples with trigger None for induce."""
    induces = []
    converts = []
    for act in persuasions:
        if isinstance(act, PersuasionAct):
            src, trig, tgt = act.source, act.trigger, act.target
        else:
            src, trig, tgt = act
        if trig is None:
            induces.append((src, tgt, None))
        else:
            converts.append((src, trig, tgt, None))
    return validate(
        [(a, None) for a in arguments],
        [(a, None) for a in initial],
        [(s, t, None) for (s, t) in attacks],
        induces,
        converts,
    )

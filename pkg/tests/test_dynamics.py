import random

import pytest

from apa import dynamics
from apa.dynamics import (
    ALL,
    SelectorFamily,
    apply_acts,
    neg_set,
    pos_set,
    possible_acts,
    reachable,
    successor_states,
    successors,
)
from apa.errors import EmptyGamma, TooLarge
from apa.model import PersuasionAct, State, framework
from apa.oracle import RandomInstanceSpec, random_framework

ELMA_ACT = PersuasionAct("a3", "a4", "a5")


def visible_sets(states):
    return {frozenset(s.visible) for s in states}


# -- possible_acts -----------------------------------------------------------


def test_possible_acts_alice(alice):
    acts = possible_acts(alice, frozenset(), alice.initial_state)
    assert acts == {
        PersuasionAct("a2", "a1", "a4"),
        PersuasionAct("a3", "a1", "a5"),
    }
    # no attacks at all, so any reference set yields the same acts
    acts = possible_acts(alice, frozenset(alice.arguments), alice.initial_state)
    assert len(acts) == 2


def test_possible_acts_blocked(elma):
    assert possible_acts(elma, frozenset(["a2"]), elma.initial_state) == frozenset()
    assert possible_acts(elma, frozenset(), elma.initial_state) == {ELMA_ACT}


def test_possible_acts_invisible_trigger(elma):
    state = elma.state(["a2", "a3", "a5"])
    assert possible_acts(elma, frozenset(), state) == frozenset()


def test_possible_acts_antitone_blocking(oscillator, elma):
    rng = random.Random(7)
    for fw in (oscillator, elma):
        args = list(fw.arguments)
        for _ in range(30):
            small = frozenset(a for a in args if rng.random() < 0.4)
            big = small | frozenset(a for a in args if rng.random() < 0.4)
            state = fw.state(a for a in args if rng.random() < 0.6)
            assert possible_acts(fw, big, state) <= possible_acts(fw, small, state)


# -- neg / pos / apply -------------------------------------------------------


def test_neg_set_elma(elma):
    assert neg_set(elma.initial_state, frozenset([ELMA_ACT])) == {"a4"}


def test_neg_set_induce_only():
    state = State(frozenset(["a1"]))
    gamma = frozenset([PersuasionAct("a1", None, "a2")])
    assert neg_set(state, gamma) == frozenset()
    assert neg_set(state, frozenset()) == frozenset()


def test_pos_set_elma(elma):
    assert pos_set(elma.initial_state, frozenset([ELMA_ACT])) == {"a5"}
    assert pos_set(elma.initial_state, frozenset()) == frozenset()


def test_pos_set_visible_target():
    state = State(frozenset(["a1"]))
    gamma = frozenset([PersuasionAct("a1", None, "a1")])
    assert pos_set(state, gamma) == {"a1"}


def test_apply_elma(elma):
    succ = apply_acts(elma.initial_state, frozenset([ELMA_ACT]))
    assert succ.visible == {"a2", "a3", "a5"}


def test_apply_offset():
    state = State(frozenset(["a1"]))
    succ = apply_acts(state, frozenset([PersuasionAct("a1", "a1", "a1")]))
    assert succ.visible == {"a1"}


def test_apply_simultaneous(oscillator):
    gamma = frozenset(
        [PersuasionAct("a1", "a2", "a4"), PersuasionAct("a2", "a1", "a3")]
    )
    succ = apply_acts(State(frozenset(["a1", "a2"])), gamma)
    assert succ.visible == {"a3", "a4"}


def test_apply_empty_gamma_rejected(elma):
    with pytest.raises(EmptyGamma):
        apply_acts(elma.initial_state, frozenset())


# -- successors --------------------------------------------------------------


def test_successors_elma(elma):
    out = successors(elma, frozenset(), elma.initial_state)
    assert out == {
        (frozenset([ELMA_ACT]), State(frozenset(["a2", "a3", "a5"])))
    }
    assert successors(elma, frozenset(["a2"]), elma.initial_state) == frozenset()


def test_successors_alice_three_branches(alice):
    states = successor_states(alice, frozenset(), alice.initial_state)
    assert visible_sets(states) == {
        frozenset(["a2", "a3", "a4"]),
        frozenset(["a2", "a3", "a5"]),
        frozenset(["a2", "a3", "a4", "a5"]),
    }


def test_successors_count_bound():
    rng = random.Random(11)
    for seed in range(20):
        fw = random_framework(
            RandomInstanceSpec(n_args=4, n_induce=2, n_convert=2, seed=seed)
        )
        state = fw.initial_state
        refset = frozenset(a for a in fw.arguments if rng.random() < 0.3)
        acts = possible_acts(fw, refset, state)
        assert len(successors(fw, refset, state)) <= 2 ** len(acts) - 1


def test_successor_visibility_accounting():
    # every visible argument of a successor either survived or is a target;
    # every dropped argument was converted away and not regenerated
    for seed in range(30):
        fw = random_framework(
            RandomInstanceSpec(n_args=5, n_induce=1, n_convert=3, seed=seed)
        )
        state = fw.initial_state
        for gamma, succ in successors(fw, frozenset(), state):
            neg = neg_set(state, gamma)
            pos = pos_set(state, gamma)
            for a in succ.visible:
                assert (a in state.visible and a not in neg) or a in pos
            for a in state.visible - succ.visible:
                assert a in neg and a not in pos


# -- reachable ---------------------------------------------------------------


def test_reachable_elma_all(elma):
    lts = reachable(elma, ALL)
    assert visible_sets(lts.states) == {
        frozenset(["a2", "a3", "a4"]),
        frozenset(["a2", "a3", "a5"]),
    }
    assert len(lts.edges) == 1
    assert lts.deadlocks == {State(frozenset(["a2", "a3", "a5"]))}


def test_reachable_elma_blocking_selector(elma):
    lts = reachable(elma, SelectorFamily.of({"a2", "a5"}))
    assert lts.states == (elma.initial_state,)
    assert lts.deadlocks == {elma.initial_state}


def test_reachable_static_framework(dung_ab):
    lts = reachable(dung_ab, ALL)
    assert lts.states == (dung_ab.initial_state,)
    assert lts.edges == ()


def test_reachable_oscillator(oscillator):
    lts = reachable(oscillator, ALL)
    assert len(lts.states) == 7
    assert visible_sets(lts.states) == {
        frozenset(["a1", "a2"]),
        frozenset(["a1", "a4"]),
        frozenset(["a2", "a3"]),
        frozenset(["a3", "a4"]),
        frozenset(["a2", "a3", "a4"]),
        frozenset(["a1", "a3", "a4"]),
        frozenset(["a1", "a2", "a3", "a4"]),
    }
    assert lts.deadlocks == frozenset()


def test_reachable_deterministic(oscillator):
    a = reachable(oscillator, ALL)
    b = reachable(oscillator, ALL)
    assert a.states == b.states
    assert a.edges == b.edges


def test_reachable_state_bound(oscillator):
    with pytest.raises(TooLarge):
        reachable(oscillator, ALL, max_states=3)


def test_state_count_bounded_by_powerset():
    for seed in range(20):
        fw = random_framework(
            RandomInstanceSpec(n_args=4, n_induce=2, n_convert=2, seed=100 + seed)
        )
        lts = reachable(fw, ALL)
        assert len(lts.states) <= 2 ** len(fw.arguments)


def test_selector_indices_label_edges(elma):
    family = SelectorFamily.of(set(), {"a2"})
    lts = reachable(elma, family)
    # selector 0 (empty refset) admits the act, selector 1 blocks it
    assert {(s.visible, i) for s, i, _ in lts.edges} == {
        (frozenset(["a2", "a3", "a4"]), 0)
    }

import pytest

from apa import semantics
from apa.dynamics import ALL, reachable
from apa.errors import TooLarge
from apa.model import State, framework
from apa.oracle import (
    RandomInstanceSpec,
    dung_extensions_bruteforce,
    random_framework,
)
from apa.semantics import (
    complete_sets,
    defends,
    extensions,
    grounded_set,
    holds,
    is_conflict_free,
)


def fs(*args):
    return frozenset(args)


# -- conflict-freeness -------------------------------------------------------


def test_conflict_free_elma(elma):
    init = elma.initial_state
    assert is_conflict_free(elma, fs("a2", "a4"), init)
    assert not is_conflict_free(elma, fs("a2", "a3"), init)
    assert is_conflict_free(elma, fs(), init)


def test_conflict_invisible_members_ignored(elma):
    # a2 invisible: the a2 -> a3 attack cannot fire inside the candidate
    state = elma.state(["a3", "a4"])
    assert is_conflict_free(elma, fs("a2", "a3"), state)


# -- defendedness ------------------------------------------------------------


def test_defends_no_elimination(elma):
    init = elma.initial_state
    # alone, a4 cannot stop the conversion that drops it
    assert not defends(elma, fs("a4"), "a4", init)
    # with a2 in the reference set the act is blocked
    assert defends(elma, fs("a2", "a4"), "a4", init)


def test_defends_invisible_vacuous(elma):
    init = elma.initial_state
    assert defends(elma, fs(), "a5", init)
    assert defends(elma, fs("a3"), "a5", init)


def test_defends_counter_attack(dung_ab):
    init = dung_ab.initial_state
    assert not defends(dung_ab, fs(), "b", init)  # attacker a unanswered
    assert defends(dung_ab, fs("a"), "a", init)


# -- holds / extensions ------------------------------------------------------


def test_admissible_elma(elma):
    init = elma.initial_state
    assert holds(elma, "ad", fs("a2", "a4"), init)
    assert holds(elma, "ad", fs(), init)
    assert not holds(elma, "ad", fs("a4"), init)  # elimination
    assert not holds(elma, "ad", fs("a5"), init)  # not proper


def test_admissible_extensions_elma(elma):
    exts = set(extensions(elma, "ad", elma.initial_state))
    assert exts == {fs(), fs("a2"), fs("a2", "a4")}
    assert all("a5" not in e for e in exts)


def test_dung_fixture_labels(dung_ab):
    init = dung_ab.initial_state
    assert set(extensions(dung_ab, "co", init)) == {fs("a")}
    assert set(extensions(dung_ab, "pr", init)) == {fs("a")}
    assert set(extensions(dung_ab, "st", init)) == {fs("a")}
    assert grounded_set(dung_ab, init) == fs("a")
    assert holds(dung_ab, "co", fs("a"), init)
    assert not holds(dung_ab, "co", fs(), init)


def test_grounded_elma(elma):
    # frozen from the enumeration oracle: {a2,a4} is the only complete set
    assert complete_sets(elma, elma.initial_state) == (fs("a2", "a4"),)
    assert grounded_set(elma, elma.initial_state) == fs("a2", "a4")
    assert holds(elma, "gr", fs("a2", "a4"), elma.initial_state)


def test_grounded_empty_state(elma):
    assert grounded_set(elma, State(frozenset())) == fs()


def test_grounded_extension_unique(elma, oscillator):
    for fw in (elma, oscillator):
        for state in reachable(fw, ALL).states:
            assert len(extensions(fw, "gr", state)) == 1


def test_enumeration_bound():
    fw = framework([f"a{i}" for i in range(25)], initial=[f"a{i}" for i in range(25)])
    with pytest.raises(TooLarge):
        extensions(fw, "ad", fw.initial_state)
    # override allows it on a small visible set
    assert extensions(fw, "ad", fw.state(["a0"]), max_args=1)


# -- order and inclusion properties ------------------------------------------


def test_empty_set_admissible_everywhere(oscillator):
    for state in reachable(oscillator, ALL).states:
        assert holds(oscillator, "ad", fs(), state)


def test_admissible_subset_of_visible(oscillator):
    for state in reachable(oscillator, ALL).states:
        for ext in extensions(oscillator, "ad", state):
            assert ext <= state.visible


def test_label_chain_on_random_instances():
    # st => pr => co => ad, and a complete set exists, at every state
    for seed in range(40):
        fw = random_framework(
            RandomInstanceSpec(n_args=4, attack_density=0.3, seed=1000 + seed)
        )
        for state in reachable(fw, ALL).states:
            ad = set(extensions(fw, "ad", state))
            co = set(extensions(fw, "co", state))
            pr = set(extensions(fw, "pr", state))
            st = set(extensions(fw, "st", state))
            assert st <= pr <= co <= ad
            assert co


def test_dung_coincidence_small():
    for seed in range(30):
        fw = random_framework(
            RandomInstanceSpec(
                n_args=4, attack_density=0.4, n_induce=0, n_convert=0,
                seed=2000 + seed,
            )
        )
        init = fw.initial_state
        sub_args = fw.sort_args(init.visible)
        sub_atk = fw.induced_attacks(init)
        reference = dung_extensions_bruteforce(sub_args, sub_atk)
        for label in semantics.LABELS:
            assert set(extensions(fw, label, init)) == set(reference[label])


def test_admissibility_not_preserved_by_transition(elma):
    # shipped witness: admissible before the unrestricted transition,
    # not admissible after it
    before = elma.initial_state
    after = elma.state(["a2", "a3", "a5"])
    assert holds(elma, "ad", fs("a2", "a4"), before)
    assert not holds(elma, "ad", fs("a2", "a4"), after)

import pytest
from hypothesis import given, settings

from machines import M_0STAR1, M_CYCLE2, M_EPS, M_ONESTAR, trim_dfas
from ordfa.dfa import Dfa, NotTrimError, trim
from ordfa.lexorder import NoMinimumError, min_word
from ordfa.oracle import naive_check, random_trim_dfa
from ordfa.wellorder import Witness, check, verify_witness, witness_chain, witness_failure

###############################################################################
# check
###############################################################################


def test_check_well_ordered_fixtures():
    for m in (M_ONESTAR, M_CYCLE2, M_EPS):
        result = check(m)
        assert result.well_ordered
        assert result.witness is None


def test_check_zero_star_one():
    result = check(M_0STAR1)
    assert not result.well_ordered
    assert result.witness == Witness(access="", loop="", tail="", state=0)


def test_check_all_words():
    m = Dfa(delta=((0, 0),), start=0, finals=frozenset({0}))
    result = check(m)
    assert not result.well_ordered
    assert result.witness == Witness(access="", loop="", tail="", state=0)


def test_check_nontrivial_witness_parts():
    # L = (00)*1, descending at the two-state 0-cycle
    m = Dfa(
        delta=((1, 2), (0, 3), (3, 3), (3, 3)),
        start=0,
        finals=frozenset({2}),
    )
    result = check(m)
    assert not result.well_ordered
    assert result.witness == Witness(access="", loop="0", tail="", state=0)
    assert witness_chain(result.witness, 2) == "00001"


def test_check_requires_trim():
    not_trim = Dfa(delta=((0, 1), (1, 1)), start=0, finals=frozenset())
    with pytest.raises(NotTrimError):
        check(not_trim)


def test_witness_chain_values():
    w = Witness(access="1", loop="01", tail="0", state=3)
    assert witness_chain(w, 0) == "110"
    assert witness_chain(w, 1) == "100110"
    assert witness_chain(w, 2) == "100100110"


###############################################################################
# verify_witness
###############################################################################


def test_verify_witness_accepts_real_witness():
    result = check(M_0STAR1)
    assert verify_witness(M_0STAR1, result.witness, 16)
    assert witness_failure(M_0STAR1, result.witness, 16) is None


def test_verify_witness_rejects_fabricated_witness():
    # 1* has no descending chain; 0^n 1 fails membership from n = 1 on
    fake = Witness(access="", loop="", tail="", state=0)
    assert not verify_witness(M_ONESTAR, fake, 16)
    assert witness_failure(M_ONESTAR, fake, 16) == "chain[1] = 01 is not accepted"


def test_verify_witness_depth_zero_checks_nothing():
    fake = Witness(access="", loop="", tail="", state=0)
    assert verify_witness(M_ONESTAR, fake, 0)


###############################################################################
# differential against the naive checker
###############################################################################


def test_matches_naive_on_fixtures():
    for m in (M_ONESTAR, M_CYCLE2, M_EPS, M_0STAR1):
        assert check(m) == naive_check(m)


def test_matches_naive_on_random_automata():
    for seed in range(1000):
        m = random_trim_dfa(seed, 8)
        assert check(m) == naive_check(m), f"seed {seed}"


@settings(max_examples=200)
@given(trim_dfas())
def test_matches_naive_property(m):
    assert check(m) == naive_check(m)


@settings(max_examples=200)
@given(trim_dfas())
def test_negative_verdicts_carry_verified_witnesses(m):
    result = check(m)
    if not result.well_ordered:
        assert verify_witness(m, result.witness, 32)


@settings(max_examples=200)
@given(trim_dfas())
def test_well_ordered_languages_have_minima(m):
    result = check(m)
    if result.well_ordered:
        try:
            min_word(m)
        except NoMinimumError:
            pytest.fail("well-ordered language reported without a least word")


@settings(max_examples=100)
@given(trim_dfas(max_states=6))
def test_well_ordering_is_hereditary(m):
    # every reachable state's own language stays well-ordered
    if not check(m).well_ordered:
        return
    for q in range(m.state_count):
        sub = trim(
            Dfa(delta=m.delta, start=q, finals=m.finals)
        ).trimmed
        assert check(sub).well_ordered, f"state {q}"

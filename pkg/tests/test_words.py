import itertools
import random
import re
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hybridalg.algebra import product, table_A
from hybridalg.words import (
    EngineOptions,
    SignedWord,
    contract_step,
    contraction_trace,
    evaluate_sum,
    evaluate_word,
    is_normal,
    normalize,
    parse_word,
)

from generators import random_word
from oracles import word_oracle

A = table_A()
e = A.basis_element
W = parse_word


def test_normalize_examples():
    assert normalize(W("cbcb")) == W("-ccbb")
    assert normalize(W("dcb")) == W("dcb")
    assert normalize(W("bcd")) == W("-dcb")


def test_normalize_absorbs_interior_a():
    # a c = -d; the word shortens.
    assert normalize(W("acb")) == W("-db")
    assert normalize(W("ba")) == W("ba")


def test_contract_step_examples():
    assert contract_step(W("cca")) == W("-cc")
    assert contract_step(W("-ccbb")) == W("cca")
    assert contract_step(W("dda")) == W("-dd")


def test_contract_step_preconditions():
    with pytest.raises(ValueError):
        contract_step(W("cb"))
    with pytest.raises(ValueError):
        contract_step(W("bcd"))


def test_published_chain_for_cbcb():
    trace = [str(w) for w in contraction_trace(W("cbcb"))]
    assert trace == ["cbcb", "-ccbb", "cca", "-cc", "-a"]


def test_anchor_words():
    assert evaluate_word(W("cbcb")) == -e("a")
    assert evaluate_word(W("bdbd")) == e("a")


def test_chirality_words_under_default_rules():
    # The literal rules give dcb = +a and bcd = -a; see the decisions ledger.
    assert evaluate_word(W("dcb")) == e("a")
    assert evaluate_word(W("bcd")) == -e("a")


def test_identity_sign_variant_reproduces_all_four_anchor_words():
    opts = EngineOptions(graded_sign="identity")
    assert evaluate_word(W("cbcb"), opts) == -e("a")
    assert evaluate_word(W("bdbd"), opts) == e("a")
    assert evaluate_word(W("dcb"), opts) == -e("a")
    assert evaluate_word(W("bcd"), opts) == e("a")


def test_signed_a_elimination_variant_differs_somewhere():
    opts = EngineOptions(signed_a_elimination=True)
    words = ["".join(p) for p in itertools.product("abcd", repeat=3)]
    assert any(evaluate_word(W(w)) != evaluate_word(W(w), opts) for w in words)


def test_unknown_option_rejected():
    with pytest.raises(ValueError):
        EngineOptions(graded_sign="other")


def test_two_letter_words_match_table():
    for x in "abcd":
        for y in "abcd":
            assert evaluate_word(W(x + y)) == product(e(x), e(y))


def test_single_letter_and_coefficient():
    assert evaluate_word(W("-3/2 d")) == e("d").scale(Fraction(-3, 2))
    assert evaluate_word(W("-3/2 dcba")) == evaluate_word(W("dcba")).scale(Fraction(-3, 2))


def test_evaluate_sum_examples():
    assert evaluate_sum([W("bd"), W("db")]).is_zero()
    assert evaluate_sum([W("cbcb")]) == -e("a")
    assert evaluate_sum([]) == A.zero()


def test_empty_word_rejected():
    with pytest.raises(ValueError):
        SignedWord(1, "")
    with pytest.raises(ValueError):
        SignedWord(1, "abx")
    with pytest.raises(ValueError):
        parse_word("2")


def test_word_text_round_trip():
    for text in ["cbcb", "-3/2 dcba", "2 ab", "-d"]:
        assert parse_word(str(parse_word(text))) == parse_word(text)


def test_words_nonvanishing_at_length_four():
    assert not evaluate_word(W("cbcb")).is_zero()


def test_engine_matches_step_by_step_oracle_exhaustively_to_length_five():
    for n in range(1, 6):
        for letters in itertools.product("abcd", repeat=n):
            w = "".join(letters)
            sign, letter = word_oracle(w)
            assert evaluate_word(W(w)) == e(letter).scale(sign), w


def test_fast_reduction_agrees_with_trace():
    for n in range(1, 7):
        for letters in itertools.product("abcd", repeat=n):
            w = SignedWord(1, "".join(letters))
            last = contraction_trace(w)[-1]
            assert evaluate_word(w) == e(last.letters).scale(last.coeff)


NORMAL_SHAPE = re.compile(r"^d*c*b*a?$")


def test_normalize_idempotent_and_shaped_on_seeded_words():
    rng = random.Random(0)
    for _ in range(10_000):
        w = W(random_word(rng))
        n = normalize(w)
        assert normalize(n) == n
        assert NORMAL_SHAPE.match(n.letters) and is_normal(n.letters)


def test_normalize_linear_on_seeded_words():
    rng = random.Random(1)
    for _ in range(2_000):
        w1, w2 = W(random_word(rng)), W(random_word(rng))
        p, q = Fraction(rng.randint(-5, 5), rng.randint(1, 4)), Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        lhs = evaluate_sum([w1.scaled(p), w2.scaled(q)])
        assert lhs == evaluate_word(w1).scale(p) + evaluate_word(w2).scale(q)


@given(st.text(alphabet="abcd", min_size=1, max_size=10))
def test_evaluation_is_a_signed_generator(letters):
    v = evaluate_word(W(letters))
    assert v.as_signed_generator() is not None

import pytest

from hybridalg.algebra import Parity, parity_of, pseudo_norm, table_A, table_from_rows, table_quaternions
from hybridalg.brackets import (
    ContractionOrder,
    SuperselectionError,
    WordAlgebraError,
    check_delta_jl_axioms,
    evaluate,
    expand_words,
    graded_bracket,
    grading_of_bracket,
    mixed_pair_sign,
)
from hybridalg.exprlang import parse
from hybridalg.jacobi import (
    IDENTITIES,
    check_all_jacobis,
    check_jacobi,
    jacobi_json,
    mixed_commutator_counterexample,
    residual_of,
)
from hybridalg.laws import verify_witness

from oracles import word_oracle

A = table_A()
e = A.basis_element
FITO, FOTI = ContractionOrder.FITO, ContractionOrder.FOTI

# Frozen engine value of the nonvanishing foti sums (published value: 2c).
FOTI_RESIDUAL = A.element([0, 0, 2, -2])


def test_graded_bracket_examples():
    assert graded_bracket(e("d"), e("c")).is_zero()
    assert graded_bracket(e("c"), e("a")) == e("c") - e("d")
    assert graded_bracket(e("a"), e("b")).is_zero()
    assert graded_bracket(e("c"), e("c")) == e("a").scale(2)


def test_grading_of_bracket():
    assert grading_of_bracket(e("c"), e("a")) == 1
    assert grading_of_bracket(e("c"), e("d")) == 0
    assert grading_of_bracket(e("a"), e("b")) == 0
    with pytest.raises(ValueError):
        grading_of_bracket(e("a") + e("c"), e("b"))


def test_bracket_grading_on_all_homogeneous_basis_pairs():
    for x in A.basis_elements():
        for y in A.basis_elements():
            br = graded_bracket(x, y)
            want = (A.parity[x.support()[0]] + A.parity[y.support()[0]]) % 2
            if not br.is_zero():
                assert parity_of(br) is (Parity.ODD if want else Parity.EVEN)


def test_superselection_under_fito():
    with pytest.raises(SuperselectionError):
        evaluate(parse("<(a+c), b>"), A)
    # Under foti words are expanded first; no error.
    evaluate(parse("<(a+c), b>"), A, FOTI)


def test_foti_and_words_need_the_alphabet_table():
    H = table_quaternions()
    with pytest.raises(WordAlgebraError, match="only for A"):
        evaluate(parse("[i, j]", H), H, FOTI)
    assert evaluate(parse("[i, j]", H), H) == H.basis_element("k").scale(2)


def test_fito_uses_plain_products():
    assert evaluate(parse("(a*(b*c))")) == e("c")
    assert evaluate(parse("((a*b)*c)")) == -e("d")


def test_foti_uses_word_rules():
    assert evaluate(parse("(a*(b*c))"), A, FOTI) == evaluate(parse("abc"))
    assert evaluate(parse("{c,b}"), A, FOTI) == evaluate(parse("cb + bc"))


@pytest.mark.parametrize("name", list(IDENTITIES))
def test_every_jacobi_vanishes_under_fito(name):
    assert residual_of(name, FITO).is_zero()
    assert check_jacobi(name, "fito").holds


def test_foti_residuals_are_frozen():
    nonzero = {"outer-3", "outer-4", "inner-3", "inner-4"}
    for name in IDENTITIES:
        want = FOTI_RESIDUAL if name in nonzero else A.zero()
        assert residual_of(name, FOTI) == want, name


def test_foti_inner_three_against_hand_expansion_and_word_oracle():
    # {a,{b,d}} + {b,{d,a}} + {d,[a,b]} opens to 2(abd + adb + bda + dab);
    # the dba and bad terms cancel.
    expanded = {"abd": 2, "adb": 2, "bda": 2, "dab": 2}
    total = A.zero()
    for word, mult in expanded.items():
        sign, letter = word_oracle(word)
        total = total + e(letter).scale(sign * mult)
    assert total == FOTI_RESIDUAL
    words = expand_words(parse(IDENTITIES["inner-3"]))
    counts: dict[str, int] = {}
    for w in words:
        counts[w.letters] = counts.get(w.letters, 0) + w.coeff
    assert {k: v for k, v in counts.items() if v} == expanded


def test_jacobi_reports():
    fito = check_all_jacobis("fito")
    assert fito.holds and fito.property == "jacobi(fito)"
    foti = check_all_jacobis(FOTI)
    assert not foti.holds
    assert verify_witness(foti.witness)
    data = jacobi_json(check_jacobi("inner-3", "foti"))
    assert data == {
        "identity": IDENTITIES["inner-3"],
        "order": "foti",
        "residual": ["0", "0", "2", "-2"],
        "holds": False,
    }


def test_mixed_commutator_counterexample():
    r = mixed_commutator_counterexample()
    assert r == e("a").scale(-4)
    assert pseudo_norm(r) == 16


def _toy():
    return table_from_rows(
        "toy",
        ("e1", "e2", "e3"),
        [("e2", "e3", "0"), ("-e3", "0", "0"), ("0", "0", "0")],
        parity=(1, 0, 1),
    )


@pytest.mark.parametrize("delta", [1, -1])
def test_alphabet_fails_delta_associativity_at_abc(delta):
    r = check_delta_jl_axioms(A, delta)
    assoc = r.part("delta-associativity")
    assert not assoc.holds
    w = assoc.witness
    assert w.args == (e("a"), e("b"), e("c"))
    assert verify_witness(w)
    assert r.part("bracket-antisymmetry").holds
    assert r.part("bracket-grading").holds


def test_antiassociative_toy_table():
    r = check_delta_jl_axioms(_toy(), -1)
    assert r.part("delta-associativity").holds
    assert r.part("four-products-vanish").holds
    units = r.part("no-idempotents-no-units")
    assert units.holds
    assert units.part("no-idempotents").holds and units.part("no-units").holds
    assert units.details["deduced_from_four_products"]


def test_toy_table_is_not_associative():
    assert not check_delta_jl_axioms(_toy(), 1).part("delta-associativity").holds


def test_delta_argument_checked():
    with pytest.raises(ValueError):
        check_delta_jl_axioms(A, 0)
    with pytest.raises(ValueError):
        check_delta_jl_axioms(table_quaternions(), 1)


def test_mixed_pair_sign():
    assert mixed_pair_sign(1, 0, 0) == -1
    assert mixed_pair_sign(1, 1, 1) == 1
    assert mixed_pair_sign(-1, 0, 1) == 1

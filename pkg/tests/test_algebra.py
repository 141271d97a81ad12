import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hybridalg.algebra import (
    IncompatibleAlgebrasError,
    MonomialTable,
    Parity,
    TableValidationError,
    as_scalar,
    load_table,
    parity_of,
    polar_form,
    product,
    pseudo_norm,
    save_table,
    table_A,
    table_from_rows,
    table_quaternions,
)

from oracles import A_COLS, A_ROWS, H_COLS, H_ROWS, naive_product, signed

A = table_A()
H = table_quaternions()
e = A.basis_element


def el(text: str):
    """Tiny helper: ``"b+c"`` or ``"d-c"`` over the alphabet."""
    x = A.zero()
    sign = 1
    for ch in text:
        if ch in "+-":
            sign = 1 if ch == "+" else -1
        else:
            x = x + e(ch).scale(sign)
    return x


def test_table_A_entries_match_published_rows():
    for x in A_COLS:
        for y in A_COLS:
            s, name = signed(A_ROWS[x][A_COLS.index(y)])
            assert product(e(x), e(y)) == e(name).scale(s)


def test_quaternion_entries_match_published_rows():
    for x in H_COLS:
        for y in H_COLS:
            s, name = signed(H_ROWS[x][H_COLS.index(y)])
            assert product(H.basis_element(x), H.basis_element(y)) == H.basis_element(name).scale(s)


def test_examples_from_the_table():
    assert product(e("a"), e("c")) == -e("d")
    assert product(e("b"), e("b")) == -e("a")
    assert product(e("a"), product(e("b"), e("c"))) == e("c")
    assert product(el("b+c"), el("b+c")).is_zero()
    i, j, k = (H.basis_element(n) for n in "ijk")
    assert product(i, j) == k and product(j, i) == -k


def test_a_is_right_identity_only():
    for x in A.basis_elements():
        assert product(x, e("a")) == x
    assert product(e("a"), e("c")) != e("c")


def test_grading_additivity():
    par = A.parity
    for i in range(4):
        for j in range(4):
            _, k = A.entries[i][j]
            assert par[k] == (par[i] + par[j]) % 2


def test_anticommutation_and_a_b_commute():
    for x in "bcd":
        for y in "bcd":
            if x != y:
                assert product(e(x), e(y)) == -product(e(y), e(x))
    assert product(e("a"), e("b")) == product(e("b"), e("a"))


def test_parity_of():
    assert parity_of(e("b")) is Parity.EVEN
    assert parity_of(el("c-d")) is Parity.ODD
    assert parity_of(el("b+c")) is Parity.MIXED
    assert parity_of(A.zero()) is Parity.ZERO
    with pytest.raises(ValueError):
        parity_of(H.basis_element("i"))


def test_pseudo_norm_examples():
    assert pseudo_norm(e("b")) == -1
    assert pseudo_norm(el("d+c")) == 0
    assert pseudo_norm(e("a")) == 1


def test_polar_form_diagonal_and_trace():
    diag = [polar_form(x, x) for x in A.basis_elements()]
    assert diag == [1, -1, 1, -1]
    assert sum(diag) == 0
    assert polar_form(e("b"), e("c")) == 0
    for i in range(4):
        for j in range(4):
            if i != j:
                assert polar_form(A.basis_element(i), A.basis_element(j)) == 0


def test_pseudo_norm_not_multiplicative_on_a_c():
    a, c = e("a"), e("c")
    assert pseudo_norm(product(a, c)) == -1
    assert pseudo_norm(a) * pseudo_norm(c) == 1


def test_even_subalgebra_is_complex_numbers():
    # a -> 1, b -> i; checked against complex multiplication on integer pairs.
    rng = random.Random(7)
    for _ in range(1000):
        p, q, r, s = (rng.randint(-9, 9) for _ in range(4))
        x = A.element([p, q, 0, 0])
        y = A.element([r, s, 0, 0])
        z = complex(p, q) * complex(r, s)
        assert product(x, y) == A.element([int(z.real), int(z.imag), 0, 0])


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
vectors = st.lists(rationals, min_size=4, max_size=4)


@settings(max_examples=50)
@given(vectors, vectors)
def test_polar_form_symmetric_and_diagonal_is_norm(u, v):
    x, y = A.element(u), A.element(v)
    assert polar_form(x, y) == polar_form(y, x)
    assert polar_form(x, x) == pseudo_norm(x)


@settings(max_examples=50)
@given(vectors, vectors)
def test_product_matches_naive_oracle(u, v):
    x, y = A.element(u), A.element(v)
    got = product(x, y)
    want = naive_product(dict(zip("abcd", x.coeffs)), dict(zip("abcd", y.coeffs)))
    assert {n: q for n, q in zip("abcd", got.coeffs) if q} == want


@settings(max_examples=50)
@given(vectors, vectors, vectors)
def test_product_is_bilinear(u, v, w):
    x, y, z = A.element(u), A.element(v), A.element(w)
    assert product(x + y, z) == product(x, z) + product(y, z)
    assert product(x, y + z) == product(x, y) + product(x, z)
    assert product(x.scale(3), y) == product(x, y).scale(3)


def test_mixing_tables_is_rejected():
    with pytest.raises(IncompatibleAlgebrasError):
        product(e("a"), H.basis_element("i"))
    with pytest.raises(IncompatibleAlgebrasError):
        e("a") + H.basis_element("i")


def test_scalars_are_exact():
    assert as_scalar("3/6") == Fraction(1, 2)
    with pytest.raises(TypeError):
        as_scalar(0.5)
    with pytest.raises(TypeError):
        as_scalar(True)


def test_element_text():
    assert str(A.element([0, 0, 2, -2])) == "2c - 2d"
    assert str(A.element([0, Fraction(-3, 2), 0, 0])) == "-3/2 b"
    assert str(A.zero()) == "0"
    assert str(-e("a")) == "-a"


def test_json_round_trip(tmp_path):
    path = tmp_path / "a.json"
    save_table(A, path)
    data = json.loads(path.read_text())
    assert data["dim"] == 4 and data["parity"] == [0, 0, 1, 1]
    assert data["table"][0][2] == {"sign": -1, "index": 3}
    assert load_table(path) == A


def test_loader_rejects_grading_violation():
    data = A.to_json()
    data["table"][0][0] = {"sign": 1, "index": 2}  # a*a = c breaks parity
    with pytest.raises(TableValidationError, match="grading"):
        MonomialTable.from_json(data)


def test_loader_rejects_bad_shape_and_index():
    data = A.to_json()
    data["table"][1] = data["table"][1][:3]
    with pytest.raises(TableValidationError):
        MonomialTable.from_json(data)
    data = A.to_json()
    data["table"][1][1] = {"sign": 1, "index": 9}
    with pytest.raises(TableValidationError):
        MonomialTable.from_json(data)
    with pytest.raises(TableValidationError):
        MonomialTable.from_json({"basis": ["x"]})


def test_table_from_rows_allows_zero_products():
    t = table_from_rows("z", ("u", "v"), [("v", "0"), ("0", "0")])
    assert product(t.basis_element("u"), t.basis_element("v")).is_zero()
    assert product(t.basis_element("u"), t.basis_element("u")) == t.basis_element("v")

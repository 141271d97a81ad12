"""Independent reference implementations used only by the tests.

Nothing here imports the package's product, word or doubling code; the
values are restated from the published tables and computed by deliberately
naive routes.
"""
from __future__ import annotations

from fractions import Fraction

# Published alphabet table, row = left factor.
A_ROWS = {
    "a": ["a", "b", "-d", "-c"],
    "b": ["b", "-a", "-d", "c"],
    "c": ["c", "d", "a", "-b"],
    "d": ["d", "-c", "b", "-a"],
}
A_COLS = "abcd"

H_ROWS = {
    "1": ["1", "i", "j", "k"],
    "i": ["i", "-1", "k", "-j"],
    "j": ["j", "-k", "-1", "i"],
    "k": ["k", "j", "-i", "-1"],
}
H_COLS = ["1", "i", "j", "k"]


def signed(cell: str) -> tuple[int, str]:
    return (-1, cell[1:]) if cell.startswith("-") else (1, cell)


def a_mul(x: str, y: str) -> tuple[int, str]:
    return signed(A_ROWS[x][A_COLS.index(y)])


def naive_product(x: dict[str, Fraction], y: dict[str, Fraction]) -> dict[str, Fraction]:
    out: dict[str, Fraction] = {}
    for u, p in x.items():
        for v, q in y.items():
            s, w = a_mul(u, v)
            out[w] = out.get(w, Fraction(0)) + s * p * q
    return {k: v for k, v in out.items() if v}


PAR = {"a": 0, "b": 0, "c": 1, "d": 1}
ORDER = "dcba"


def word_oracle(letters: str) -> tuple[int, str]:
    """Contract a word by replaying the rules one step at a time.

    Returns ``(sign, letter)``.
    """
    sign, w = 1, list(letters)
    while True:
        # Absorb the rightmost interior a into its right neighbour.
        changed = True
        while changed:
            changed = False
            for pos in range(len(w) - 2, -1, -1):
                if w[pos] == "a":
                    s, r = a_mul("a", w[pos + 1])
                    sign *= s
                    w[pos : pos + 2] = [r]
                    changed = True
                    break
        # Bubble sort into d, c, b order; each transposition of distinct letters flips the sign.
        for i in range(len(w)):
            for j in range(len(w) - 1 - i):
                if ORDER.index(w[j]) > ORDER.index(w[j + 1]):
                    w[j], w[j + 1] = w[j + 1], w[j]
                    sign = -sign
        if len(w) == 1:
            return sign, w[0]
        x, y = w[-2], w[-1]
        s, r = a_mul(x, y)
        sign *= s
        if len(w) >= 3 and PAR[x] != PAR[y]:
            sign = -sign
        w[-2:] = [r]


# Cayley-Dickson doubling on nested coefficient lists, no tables involved.
def cd_conj(x: list[Fraction]) -> list[Fraction]:
    return [x[0]] + [-v for v in x[1:]]


def cd_mul(x: list[Fraction], y: list[Fraction]) -> list[Fraction]:
    n = len(x)
    if n == 1:
        return [x[0] * y[0]]
    h = n // 2
    p, q, r, s = x[:h], x[h:], y[:h], y[h:]

    def add(u, v):
        return [a + b for a, b in zip(u, v)]

    def sub(u, v):
        return [a - b for a, b in zip(u, v)]

    # (p, q)(r, s) = (pr - s*q, sp + qr*)
    return sub(cd_mul(p, r), cd_mul(cd_conj(s), q)) + add(cd_mul(s, p), cd_mul(q, cd_conj(r)))


def cd_unit(n: int, i: int) -> list[int]:
    v = [0] * n
    v[i] = 1
    return v

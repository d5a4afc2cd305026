from fractions import Fraction
from itertools import permutations

from hypothesis import given, strategies as st

from hivebr.laurent import LaurentPolynomial, _perm_sign, symplectic_alternant


def inversions(p):
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def test_perm_sign_matches_inversions():
    for n in range(1, 6):
        for p in permutations(range(n)):
            assert _perm_sign(p) == (-1) ** inversions(p)


def det(M):
    M = [[Fraction(x) for x in row] for row in M]
    n, d = len(M), Fraction(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if M[r][i] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != i:
            M[i], M[piv] = M[piv], M[i]
            d = -d
        d *= M[i][i]
        for r in range(i + 1, n):
            f = M[r][i] / M[i][i]
            M[r] = [a - f * b for a, b in zip(M[r], M[i])]
    return d


def test_alternant_is_determinant():
    pts = [Fraction(2), Fraction(3, 2), Fraction(5)]
    for a in [(1,), (2, 1), (3, 1), (3, 2, 1), (5, 2, 1)]:
        n = len(a)
        x = pts[:n]
        want = det([[xj ** ai - xj ** (-ai) for xj in x] for ai in a])
        assert symplectic_alternant(a).evaluate(x) == want


def test_alternant_leading_term():
    A = symplectic_alternant((3, 2, 1))
    assert len(A) == 48
    assert max(A.terms) == (3, 2, 1) and A.coeff((3, 2, 1)) == 1


def test_arithmetic():
    x = LaurentPolynomial.monomial((1, 0))
    y = LaurentPolynomial.monomial((0, -1))
    one = LaurentPolynomial.constant(2, 1)
    p = (x + y) * (x - y)
    assert p.coeff((2, 0)) == 1 and p.coeff((0, -2)) == -1 and p.coeff((1, -1)) == 0
    assert (p - p).is_zero()
    assert p * one == p and 3 * one == one * 3
    assert hash(p) == hash((x + y) * (x - y))


polys = st.dictionaries(st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
                        st.integers(-5, 5), max_size=5).map(lambda d: LaurentPolynomial(2, d))


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    pt = (Fraction(2), Fraction(-3, 5))
    assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from siegeldim.numtheory import (
    Bracket,
    DomainError,
    NotSquarefreeError,
    PrimeFactorization,
    QuadraticField,
    bracket_eval,
    chi,
    factor_squarefree,
    is_prime,
    legendre,
    residue_class,
    squarefree_divisors_with_prime,
)

GAUSSIAN = QuadraticField.GAUSSIAN
EISENSTEIN = QuadraticField.EISENSTEIN
PRIMES = [p for p in range(2, 1000) if all(p % d for d in range(2, int(p**0.5) + 1))]
ODD_PRIMES = PRIMES[1:]


def legendre_by_squares(a, p):
    if a % p == 0:
        return 0
    return 1 if a % p in {x * x % p for x in range(1, p)} else -1


@pytest.mark.parametrize(
    "field, p, expected",
    [(GAUSSIAN, 5, 1), (GAUSSIAN, 2, 0), (EISENSTEIN, 2, -1), (EISENSTEIN, 3, 0)],
)
def test_chi_examples(field, p, expected):
    assert chi(field, p) == expected


@pytest.mark.parametrize("p", PRIMES[:60])
def test_chi_matches_splitting(p):
    # p splits in Q(sqrt(-1)) iff x^2 + 1 has a root mod p, etc.
    if p == 2:
        assert (chi(GAUSSIAN, 2), chi(EISENSTEIN, 2)) == (0, -1)
        return
    roots_i = sum(1 for x in range(p) if (x * x + 1) % p == 0)
    roots_w = sum(1 for x in range(p) if (x * x + x + 1) % p == 0)
    assert chi(GAUSSIAN, p) == roots_i - 1
    assert chi(EISENSTEIN, p) == roots_w - 1


def test_chi_ramified_only_at_field_prime():
    for p in PRIMES:
        assert (chi(GAUSSIAN, p) == 0) == (p == 2)
        assert (chi(EISENSTEIN, p) == 0) == (p == 3)


def test_chi_rejects_composite():
    with pytest.raises(DomainError):
        chi(GAUSSIAN, 15)


@pytest.mark.parametrize("a, p, expected", [(5, 5, 0), (2, 7, 1), (3, 5, -1)])
def test_legendre_examples(a, p, expected):
    assert legendre(a, p) == expected


@pytest.mark.parametrize("p", ODD_PRIMES[:40])
def test_legendre_against_squares(p):
    for a in range(-p, 2 * p):
        assert legendre(a, p) == legendre_by_squares(a, p)


@pytest.mark.parametrize("p", [2, 9, 1, 0])
def test_legendre_domain(p):
    with pytest.raises(DomainError):
        legendre(3, p)


@given(
    st.integers(-(10**6), 10**6),
    st.integers(-(10**6), 10**6),
    st.sampled_from(ODD_PRIMES),
)
def test_legendre_multiplicative(a, b, p):
    assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


@pytest.mark.parametrize(
    "values, n, expected",
    [((0, -1, 1), 5, 1), ((1, 0, 0, -1, 0), 3, -1), ((1, -1, 0), 0, 1)],
)
def test_bracket_examples(values, n, expected):
    assert bracket_eval(Bracket(values), n) == expected


def test_bracket_returns_exact_values():
    b = Bracket((Fraction(1, 2), 3))
    assert bracket_eval(b, 2) == Fraction(1, 2)
    assert isinstance(bracket_eval(b, 1), Fraction)


def test_bracket_rejects_bad_values():
    with pytest.raises(DomainError):
        Bracket(())
    with pytest.raises(DomainError):
        Bracket((0.5,))


@given(
    st.lists(st.integers(-50, 50), min_size=1, max_size=12),
    st.integers(0, 10**6),
)
def test_bracket_periodic(values, n):
    b = Bracket(values)
    assert b(n) == b(n + b.period) == values[n % len(values)]


@pytest.mark.parametrize("n, primes", [(6, (2, 3)), (1, ()), (210, (2, 3, 5, 7))])
def test_factor_squarefree_examples(n, primes):
    assert factor_squarefree(n).primes == primes


def test_factor_squarefree_reports_prime():
    with pytest.raises(NotSquarefreeError) as e:
        factor_squarefree(12)
    assert e.value.prime == 2
    with pytest.raises(NotSquarefreeError) as e:
        factor_squarefree(5 * 49)
    assert e.value.prime == 7


def test_factor_squarefree_rejects_nonpositive():
    with pytest.raises(DomainError):
        factor_squarefree(0)


@given(st.integers(1, 10**5))
def test_factor_squarefree_round_trip(n):
    try:
        f = factor_squarefree(n)
    except NotSquarefreeError as e:
        assert n % (e.prime**2) == 0
        return
    assert f.value == n
    assert all(is_prime(p) for p in f.primes)


@pytest.mark.parametrize(
    "primes, m, n, expected",
    [((2, 3, 5), 5, 12, {5}), ((2, 3), 11, 12, set()), ((2, 3, 7), 3, 4, {3, 7})],
)
def test_residue_class_examples(primes, m, n, expected):
    assert residue_class(primes, m, n) == expected


def test_residue_class_negative_residue():
    assert residue_class((19, 29, 11), -1, 5) == {19, 29}


@pytest.mark.parametrize(
    "base, q, expected",
    [((3,), 2, {1, 2, 3, 6}), ((2, 3), 2, {1, 2, 3, 6}), ((), 3, {1, 3})],
)
def test_squarefree_divisors_with_prime_examples(base, q, expected):
    got = squarefree_divisors_with_prime(PrimeFactorization(base), q)
    assert {f.value for f in got} == expected


@given(st.sets(st.sampled_from(PRIMES[:12]), max_size=5), st.sampled_from([2, 3]))
def test_squarefree_divisors_with_prime_count(base, q):
    base_f = PrimeFactorization(tuple(sorted(base)))
    got = squarefree_divisors_with_prime(base_f, q)
    top = q * base_f.value if q not in base else base_f.value
    assert len(got) == 2 ** len(base | {q})
    assert len({f.value for f in got}) == len(got)
    assert all(top % f.value == 0 for f in got)

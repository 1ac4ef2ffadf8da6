import pytest

from reciprodick import (
    DomainError,
    PadicDigits,
    binomial,
    binomial_mod_p_lucas,
    digits_base_p,
    divisibility_by_digit_dominance,
    is_power_of,
    is_prime,
    weight_base_p,
)


def reference_binomial(n, m):
    # independent running-product oracle with exact division at each step
    if m < 0 or m > n:
        return 0
    m = min(m, n - m)
    out = 1
    for i in range(1, m + 1):
        out = out * (n - m + i) // i
    return out


class TestBinomial:
    def test_examples(self):
        assert binomial(6, 3) == 20
        assert binomial(17, 0) == 1
        assert binomial(3, 5) == 0
        assert binomial(5, -1) == 0

    def test_negative_n(self):
        with pytest.raises(DomainError):
            binomial(-1, 0)

    def test_against_running_product(self):
        for n in range(0, 121):
            for m in range(-1, n + 2):
                assert binomial(n, m) == reference_binomial(n, m)

    def test_exceeds_64_bits(self):
        assert binomial(200, 100) == reference_binomial(200, 100) > 2**64


class TestPrimes:
    def test_is_prime(self):
        def sieve_prime(n):
            return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))

        for n in range(-2, 500):
            assert is_prime(n) == sieve_prime(n), n
        assert is_prime(104729)
        assert not is_prime(104730)
        assert is_prime(2**61 - 1)
        assert not is_prime(2**61 + 1)

    def test_is_power_of(self):
        assert is_power_of(9, 3) and is_power_of(3, 3) and is_power_of(128, 2)
        assert not is_power_of(1, 3)
        assert not is_power_of(12, 3)


class TestDigits:
    def test_examples(self):
        assert digits_base_p(10, 3) == PadicDigits(3, (1, 0, 1))
        assert digits_base_p(0, 7) == PadicDigits(7, ())
        assert digits_base_p(7, 2) == PadicDigits(2, (1, 1, 1))

    def test_value_reconstruction(self):
        for p in (2, 3, 5, 11):
            for n in range(0, 400, 7):
                d = digits_base_p(n, p)
                assert d.value() == n
                assert all(0 <= x < p for x in d.digits)
                assert not d.digits or d.digits[-1] != 0

    def test_rejects_bad_input(self):
        with pytest.raises(DomainError):
            digits_base_p(3, 4)
        with pytest.raises(DomainError):
            digits_base_p(-1, 3)


class TestWeight:
    def test_examples(self):
        assert weight_base_p(10, 3) == 2
        assert weight_base_p(0, 5) == 0
        assert weight_base_p(7, 2) == 3

    def test_prime_powers_have_weight_one(self):
        for p in (2, 3, 5, 7, 11):
            for l in range(0, 6):
                assert weight_base_p(p**l, p) == 1


class TestLucas:
    def test_examples(self):
        assert binomial_mod_p_lucas(10, 4, 3) == 0  # 210 = 2*3*5*7
        assert binomial_mod_p_lucas(7, 3, 2) == 1  # 35 is odd
        assert binomial_mod_p_lucas(42, 0, 5) == 1

    def test_matches_exact_binomial(self):
        for p in (2, 3, 5, 7, 11):
            for n in range(0, 121):
                for m in range(0, n + 1):
                    assert binomial_mod_p_lucas(n, m, p) == binomial(n, m) % p

    def test_dominance_examples(self):
        assert divisibility_by_digit_dominance(10, 4, 3) is True
        assert divisibility_by_digit_dominance(33, 0, 7) is False
        assert divisibility_by_digit_dominance(7, 3, 2) is False

    def test_dominance_iff_zero_residue(self):
        for p in (2, 3, 5, 7, 11):
            for n in range(0, 121):
                for m in range(0, n + 1):
                    dom = divisibility_by_digit_dominance(n, m, p)
                    assert dom == (binomial(n, m) % p == 0)

    def test_rejects_bad_input(self):
        with pytest.raises(DomainError):
            binomial_mod_p_lucas(5, 2, 6)
        with pytest.raises(DomainError):
            binomial_mod_p_lucas(-1, 0, 3)
        with pytest.raises(DomainError):
            divisibility_by_digit_dominance(5, -2, 3)

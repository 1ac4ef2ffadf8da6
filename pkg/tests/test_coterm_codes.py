import itertools

import pytest

from reciprodick import (
    CapacityError,
    CotermContext,
    DomainError,
    GF,
    HypothesisError,
    Poly,
    Z,
    build_cyclic_code,
    coterm_construct,
    coterm_from_self_reciprocal,
    f_family,
    factor_xm_minus_1,
    generates_reversible_code,
    is_coterm,
    monic_divisors,
    monic_reciprocal,
    self_reciprocal_divisors,
    verify_reversibility_by_enumeration,
)


def P(ring, *coeffs):
    return Poly(ring, coeffs)


def xm_minus_1(p, m):
    return Poly(GF(p), (-1,) + (0,) * (m - 1) + (1,))


class TestIsCoterm:
    def test_examples(self):
        assert is_coterm(P(Z, 2, 12), CotermContext(2, Z)) is True
        assert is_coterm(P(Z, 5), CotermContext(1, Z)) is True
        assert is_coterm(P(Z, 1, 2, 3), CotermContext(4, Z)) is False

    def test_constant_term_is_free(self):
        assert is_coterm(P(Z, 99, 1, 5, 1), CotermContext(4, Z)) is True

    def test_absent_coefficients_read_as_zero(self):
        assert is_coterm(P(Z, 1, 2), CotermContext(4, Z)) is False  # a_2 pairs with itself, a_1 with a_3 = 0
        assert is_coterm(P(Z, 1, 0, 7), CotermContext(4, Z)) is True

    def test_degree_must_stay_below_m(self):
        with pytest.raises(DomainError):
            is_coterm(P(Z, 1, 2, 3), CotermContext(2, Z))

    def test_ring_must_match(self):
        with pytest.raises(DomainError):
            is_coterm(P(Z, 1), CotermContext(3, GF(3)))

    def test_bad_modulus(self):
        with pytest.raises(DomainError):
            CotermContext(0, Z)


class TestFromSelfReciprocal:
    def test_examples(self):
        poly, ctx = coterm_from_self_reciprocal(P(Z, 2, 12, 2))
        assert poly == P(Z, 2, 12) and ctx == CotermContext(2, Z)
        poly, ctx = coterm_from_self_reciprocal(P(Z, 6, 20, 6))
        assert poly == P(Z, 6, 20) and ctx == CotermContext(2, Z)
        poly, ctx = coterm_from_self_reciprocal(P(GF(2), 1, 0, 1))
        assert poly == P(GF(2), 1) and ctx == CotermContext(2, GF(2))

    def test_result_is_coterm(self):
        for n in range(2, 80, 2):
            poly, ctx = coterm_from_self_reciprocal(f_family(n, 0))
            assert is_coterm(poly, ctx)

    def test_rejects_bad_input(self):
        with pytest.raises(DomainError):
            coterm_from_self_reciprocal(P(Z, 1, 2))  # not palindromic
        with pytest.raises(DomainError):
            coterm_from_self_reciprocal(P(Z, 5))  # constants have no leading term

    def test_all_scan_found_palindromes_give_coterms(self):
        from reciprodick import build, scan

        hits = 0
        for theorem, kwargs in (
            ("T2_1", {"n_max": 40}),
            ("T2_4", {"n_max": 39}),
            ("T2_3", {"n_max": 40}),
            ("T2_7", {"n_max": 39}),
            ("T3_1", {"n_max": 30, "p_list": (3, 5)}),
            ("T3_4", {"n_max": 29, "p_list": (3, 5)}),
            ("T4_1", {"n_max": 30}),
        ):
            for v in scan(theorem, **kwargs):
                if not v.observed:
                    continue
                poly = build(v.spec)
                if (poly.degree or 0) < 1:
                    continue
                trimmed, ctx = coterm_from_self_reciprocal(poly)
                assert is_coterm(trimmed, ctx), v.spec
                hits += 1
        assert hits > 100


class TestCotermConstruct:
    def test_z_examples(self):
        poly, ctx, degenerate = coterm_construct("T5_1", 4, 0, Z)
        assert (poly, ctx.m, degenerate) == (P(Z, 2, 12), 2, False)
        poly, ctx, degenerate = coterm_construct("T5_4", 5, 1, Z)
        assert (poly, ctx.m, degenerate) == (P(Z, 6, 20), 2, False)

    def test_degenerate_examples(self):
        poly, ctx, degenerate = coterm_construct("T5_9", 9, 1, GF(3))
        assert degenerate and poly == P(GF(3), 1) and ctx.m == 4
        poly, _, degenerate = coterm_construct("T5_7", 6, 0, GF(3))  # 6 = 2*3 has digit weight 2
        assert degenerate and poly == P(GF(3), 2)
        poly, _, degenerate = coterm_construct("T5_8", 10, 2, GF(3))  # 10 = 3^2 + 1
        assert degenerate and poly == P(GF(3), 2)
        poly, _, degenerate = coterm_construct("char2", 8, 1, GF(2))
        assert degenerate and poly == P(GF(2), 1)

    def test_non_degenerate_fp(self):
        poly, ctx, degenerate = coterm_construct("T5_7", 8, 0, GF(3))
        assert not degenerate and is_coterm(poly, ctx)

    def test_rule_name_normalization(self):
        assert coterm_construct("t5.1", 4, 0, Z) == coterm_construct("T5_1", 4, 0, Z)
        with pytest.raises(DomainError):
            coterm_construct("t5.6", 4, 0, Z)

    def test_hypothesis_errors_name_the_condition(self):
        with pytest.raises(HypothesisError, match="even n >= 4"):
            coterm_construct("T5_1", 3, 0, Z)
        with pytest.raises(HypothesisError, match="k = 0"):
            coterm_construct("T5_1", 4, 1, Z)
        with pytest.raises(HypothesisError, match="over Z"):
            coterm_construct("T5_1", 4, 0, GF(3))
        with pytest.raises(HypothesisError, match="p odd"):
            coterm_construct("T5_7", 4, 0, GF(2))
        with pytest.raises(HypothesisError, match="not dividing n"):
            coterm_construct("T5_8", 6, 2, GF(3))
        with pytest.raises(HypothesisError, match=r"n \+ 1"):
            coterm_construct("T5_9", 5, 1, GF(3))
        with pytest.raises(HypothesisError, match="odd n > 3"):
            coterm_construct("T5_4", 3, 1, Z)

    def test_every_rule_yields_coterm(self):
        for n in range(4, 41, 2):
            for rule in ("T5_1", "T5_3"):
                poly, ctx, _ = coterm_construct(rule, n, 0, Z)
                assert is_coterm(poly, ctx), (rule, n)
        for n in range(6, 41, 2):
            poly, ctx, _ = coterm_construct("T5_2", n, 2, Z)
            assert is_coterm(poly, ctx)
        for n in range(5, 41, 2):
            for rule in ("T5_4", "T5_5"):
                poly, ctx, _ = coterm_construct(rule, n, 1, Z)
                assert is_coterm(poly, ctx), (rule, n)


class TestFactorXmMinus1:
    def test_examples(self):
        assert factor_xm_minus_1(2, 3) == [(P(GF(2), 1, 1), 1), (P(GF(2), 1, 1, 1), 1)]
        assert factor_xm_minus_1(2, 7) == [
            (P(GF(2), 1, 1), 1),
            (P(GF(2), 1, 0, 1, 1), 1),
            (P(GF(2), 1, 1, 0, 1), 1),
        ]
        assert factor_xm_minus_1(3, 2) == [(P(GF(3), 1, 1), 1), (P(GF(3), 2, 1), 1)]

    def test_repeated_factors(self):
        assert factor_xm_minus_1(2, 4) == [(P(GF(2), 1, 1), 4)]
        assert factor_xm_minus_1(3, 6) == [(P(GF(3), 1, 1), 3), (P(GF(3), 2, 1), 3)]

    def test_product_reconstructs(self):
        for p in (2, 3, 5, 7):
            for m in range(1, 19):
                product = Poly.one(GF(p))
                for f, mult in factor_xm_minus_1(p, m):
                    product = product * f**mult
                assert product == xm_minus_1(p, m), (p, m)

    def test_factors_are_monic_irreducible(self):
        from reciprodick import is_irreducible

        for p in (2, 3, 5):
            for m in range(1, 16):
                for f, _ in factor_xm_minus_1(p, m):
                    assert f.is_monic()
                    assert is_irreducible(f, "trial"), (p, m, f)

    def test_matches_trial_division_oracle(self):
        # blind re-factorization by trial division over all monic polynomials
        def naive_factors(p, m):
            ring = GF(p)
            rem = xm_minus_1(p, m)
            out = []
            d = 1
            while rem.degree and rem.degree > 0:
                if rem.degree < 2 * d:
                    out.append((rem, 1))
                    break
                hit = None
                for tail in itertools.product(range(p), repeat=d):
                    cand = Poly(ring, tail + (1,))
                    if (rem % cand).is_zero():
                        hit = cand
                        break
                if hit is None:
                    d += 1
                    continue
                mult = 0
                while (rem % hit).is_zero():
                    rem = rem // hit
                    mult += 1
                out.append((hit, mult))
            return sorted(out, key=lambda fm: (len(fm[0].coeffs), fm[0].coeffs))

        for p in (2, 3, 5):
            for m in range(1, 13):
                assert factor_xm_minus_1(p, m) == naive_factors(p, m), (p, m)

    def test_capacity_and_domain_errors(self):
        with pytest.raises(CapacityError):
            factor_xm_minus_1(2, 33)
        with pytest.raises(CapacityError):
            factor_xm_minus_1(17, 4)
        with pytest.raises(DomainError):
            factor_xm_minus_1(4, 3)
        with pytest.raises(DomainError):
            factor_xm_minus_1(3, 0)

    def test_larger_scale(self):
        # worst allowed shape: two octic factors among smaller ones
        factors = factor_xm_minus_1(13, 32)
        assert sum(f.degree * mult for f, mult in factors) == 32
        product = Poly.one(GF(13))
        for f, mult in factors:
            product = product * f**mult
        assert product == xm_minus_1(13, 32)


class TestDivisors:
    def test_monic_divisor_count(self):
        assert len(monic_divisors(2, 3)) == 4
        assert len(monic_divisors(2, 7)) == 8
        assert len(monic_divisors(2, 4)) == 5  # (x+1)^e for e in 0..4

    def test_self_reciprocal_divisors_examples(self):
        ring = GF(2)
        assert self_reciprocal_divisors(2, 3) == [
            Poly.one(ring),
            P(ring, 1, 1),
            P(ring, 1, 1, 1),
            P(ring, 1, 0, 0, 1),
        ]
        sr7 = self_reciprocal_divisors(2, 7)
        assert [d.coeffs for d in sr7] == [
            (1,),
            (1, 1),
            (1, 1, 1, 1, 1, 1, 1),
            (1, 0, 0, 0, 0, 0, 0, 1),
        ]

    def test_odd_p_m1_only_trivial(self):
        # x - 1 is not palindromic over an odd-characteristic field
        for p in (3, 5, 7):
            assert self_reciprocal_divisors(p, 1) == [Poly.one(GF(p))]

    def test_every_divisor_divides(self):
        for p, m in ((2, 9), (3, 8), (5, 6)):
            modulus = xm_minus_1(p, m)
            for d in monic_divisors(p, m):
                assert (modulus % d).is_zero()

    def test_divisor_cap(self):
        with pytest.raises(CapacityError):
            monic_divisors(13, 24)  # 18 distinct factors give 2^18 divisors


class TestCyclicCodes:
    def test_build_examples(self):
        code = build_cyclic_code(2, 3, P(GF(2), 1, 1))
        assert code.dimension == 2 and code.reversible is True
        code = build_cyclic_code(2, 7, P(GF(2), 1, 1, 0, 1))
        assert code.dimension == 4 and code.reversible is False
        code = build_cyclic_code(3, 2, Poly.one(GF(3)))
        assert code.dimension == 2 and code.reversible is True

    def test_build_validation(self):
        with pytest.raises(DomainError):
            build_cyclic_code(2, 7, P(GF(2), 1, 1, 1))  # not a divisor
        with pytest.raises(DomainError):
            build_cyclic_code(3, 2, P(GF(3), 2, 2))  # not monic
        with pytest.raises(DomainError):
            build_cyclic_code(3, 2, P(GF(2), 1, 1))  # ring mismatch

    def test_json_shape(self):
        code = build_cyclic_code(2, 7, P(GF(2), 1, 1, 0, 1))
        assert code.to_json_dict(enumeration_checked=True) == {
            "p": 2,
            "m": 7,
            "generator": ["1", "1", "0", "1"],
            "dimension": 4,
            "reversible": False,
            "enumeration_checked": True,
        }

    def test_monic_reciprocal(self):
        # x - 1 = x + 2 over GF(3): reversal is 2x + 1, monic form is x + 2 again
        g = P(GF(3), 2, 1)
        assert g.reciprocal() == P(GF(3), 1, 2)
        assert monic_reciprocal(g) == g
        assert generates_reversible_code(g) is True
        assert not g.is_self_reciprocal()

    def test_enumeration_examples(self):
        assert verify_reversibility_by_enumeration(build_cyclic_code(2, 3, P(GF(2), 1, 1))) is True
        assert verify_reversibility_by_enumeration(build_cyclic_code(2, 7, P(GF(2), 1, 1, 0, 1))) is False
        full = build_cyclic_code(2, 5, xm_minus_1(2, 5))
        assert full.dimension == 0
        assert verify_reversibility_by_enumeration(full) is True

    def test_enumeration_cap(self):
        code = build_cyclic_code(2, 25, Poly.one(GF(2)))
        with pytest.raises(CapacityError):
            verify_reversibility_by_enumeration(code)

    def test_hamming_reversal_witness(self):
        # 1101000 reverses to 0001011 = x^3*(1 + x^2 + x^3); the other cubic
        # factor is coprime to the generator, so the reversal is no codeword
        g = P(GF(2), 1, 1, 0, 1)
        other = P(GF(2), 1, 0, 1, 1)
        assert (other % g).degree is not None and not (other % g).is_zero()

    def test_massey_iff_small(self):
        # enumeration agrees with the generator criterion on every divisor
        seen = {True: 0, False: 0}
        for p in (2, 3, 5):
            for m in range(1, 9):
                for g in monic_divisors(p, m):
                    code = build_cyclic_code(p, m, g)
                    result = verify_reversibility_by_enumeration(code)
                    assert result == code.reversible, (p, m, g)
                    seen[result] += 1
        assert seen[True] and seen[False]

    def test_palindromic_generators_always_reversible(self):
        for p in (2, 3, 5):
            for m in range(1, 9):
                for g in self_reciprocal_divisors(p, m):
                    assert generates_reversible_code(g)

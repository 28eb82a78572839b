from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbitkit.aw import WeightPair, aw_order, homotopy_equivalent
from orbitkit.errors import OrbitkitError, SearchBoundError
from orbitkit.families import (DistinctnessCertificate, M11Instance, M13Instance,
                               generate_m11_family, generate_m13_family, h4_m13,
                               m11_certified_distinct, m11_tensor_bounds, m13_instance)
from orbitkit.fgab import FgAbGroup
from orbitkit.numtheory import coprime_representations, is_prime


class TestM11:
    def test_tensor_bounds(self):
        inst = M11Instance.from_orders(7, 91)
        assert m11_tensor_bounds(inst, 7) == (2, 3)
        assert m11_tensor_bounds(inst, 13) == (1, 2)
        assert m11_tensor_bounds(inst, 3) == (0, 1)

    def test_family_of_three(self):
        fam = generate_m11_family(3)
        assert fam.primes == [7, 13, 19, 31, 37, 43]
        assert [(i.order1, i.order2) for i in fam.instances] == [(7, 91), (19, 589), (37, 1591)]
        assert [(str(i.orbit1), str(i.orbit2)) for i in fam.instances] == [
            ("W(1,2)", "W(1,9)"), ("W(2,3)", "W(7,20)"), ("W(3,4)", "W(14,31)")]
        assert fam.certificates[(0, 1)] == DistinctnessCertificate(7, (2, 3), (0, 1))
        assert fam.certificates[(0, 2)] == DistinctnessCertificate(7, (2, 3), (0, 1))
        assert fam.certificates[(1, 2)].prime == 19

    def test_family_conditions(self):
        fam = generate_m11_family(5)
        assert len(fam.certificates) == 10
        for k, inst in enumerate(fam.instances):
            r, s = fam.primes[2 * k], fam.primes[2 * k + 1]
            assert (inst.order1, inst.order2) == (r, r * s)
            assert is_prime(r) and is_prime(s) and r % 3 == s % 3 == 1
        for (i, j), cert in fam.certificates.items():
            assert cert.valid
            a, b = fam.instances[i], fam.instances[j]
            assert cert.interval_i == m11_tensor_bounds(a, cert.prime)
            assert cert.interval_j == m11_tensor_bounds(b, cert.prime)

    def test_not_separated_returns_none(self):
        a = M11Instance.from_orders(7, 91)
        assert m11_certified_distinct(a, a) is None

    def test_overlapping_intervals_not_separated(self):
        a, b = M11Instance.from_orders(7, 91), M11Instance.from_orders(13, 91)
        assert m11_tensor_bounds(a, 7) == (2, 3) and m11_tensor_bounds(b, 7) == (1, 2)
        assert m11_certified_distinct(a, b) is None

    def test_leading_prime_separates_each_member(self):
        fam = generate_m11_family(3)
        for i, inst in enumerate(fam.instances):
            l = fam.primes[2 * i]
            assert m11_tensor_bounds(inst, l)[0] >= 2
            for j, other in enumerate(fam.instances):
                if j != i:
                    assert m11_tensor_bounds(other, l)[1] <= 1

    def test_invalid_certificate(self):
        assert not DistinctnessCertificate(7, (1, 2), (2, 3)).valid

    def test_bad_size(self):
        with pytest.raises(OrbitkitError):
            generate_m11_family(0)

    def test_sieve_exhaustion(self):
        with pytest.raises(SearchBoundError):
            generate_m11_family(3, sieve_limit=30)


class TestH4M13:
    def test_example(self):
        assert h4_m13(WeightPair(1, 9), WeightPair(5, 6)) == FgAbGroup.cyclic(91)

    def test_order_one(self):
        assert h4_m13(WeightPair(0, 1), WeightPair(1, 0)).is_trivial

    def test_rejects_unequal_orders(self):
        with pytest.raises(OrbitkitError):
            h4_m13(WeightPair(1, 1), WeightPair(1, 2))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 300))
    def test_is_cyclic_of_order_r(self, n):
        reps = coprime_representations(n)
        if not reps:
            return
        assert h4_m13(reps[0], reps[-1]) == FgAbGroup.cyclic(n)


class TestM13:
    def test_first_instance(self):
        first = generate_m13_family(1)[0]
        assert first.order == 91
        assert (first.orbit1, first.orbit2) == (WeightPair(1, 9), WeightPair(5, 6))
        assert first.non_double
        assert first.h4 == FgAbGroup.cyclic(91)

    def test_family(self):
        fam = generate_m13_family(6)
        assert [x.order for x in fam] == [91, 133, 217, 247, 259, 301]
        for x in fam:
            assert aw_order(x.orbit1) == aw_order(x.orbit2) == x.order
            assert x.non_double == (not homotopy_equivalent(x.orbit1, x.orbit2))
            assert gcd(*x.orbit1) == gcd(*x.orbit2) == 1

    def test_distinct_orders_give_distinct_h4(self):
        groups = [x.h4 for x in generate_m13_family(8)]
        assert len(set(groups)) == len(groups)

    def test_double(self):
        inst = m13_instance(WeightPair(1, 2), WeightPair(1, 2))
        assert not inst.non_double

    def test_instance_validation(self):
        with pytest.raises(OrbitkitError):
            M13Instance(WeightPair(1, 2), WeightPair(1, 1), 7, FgAbGroup.cyclic(7), True)

    def test_sieve_exhaustion(self):
        with pytest.raises(SearchBoundError):
            generate_m13_family(50, sieve_limit=40)

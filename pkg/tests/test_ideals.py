import numpy as np
import pytest

import oracles
from conftest import catalog, ring
from zagraph.errors import CapacityError, InvalidQuotientError
from zagraph.ideals import (Ideal, all_ideals, classify_ideal, crt_decompose, ideal_algebra,
                            ideal_annihilator, ideal_label, ideal_span, principal_ideals,
                            quotient_ring, ring_predicates, spectrum)
from zagraph.ring import ElementSet, classify_elements, make_gf, make_zn, ring_axiom_audit


def ideal(r, members):
    return Ideal(r.label, ElementSet.from_indices(r.order, members))


def is_closed(r, I):
    m = I.members.members
    a = np.array(I.indices())
    add, mul = r.add_table, r.mul_table
    return (m[add[np.ix_(a, a)]].all() and m[mul[:, a]].all() and m[mul[a, :]].all()
            and m[0])


class TestSpan:
    def test_examples(self):
        z6, z12 = make_zn(6), make_zn(12)
        assert ideal_span(z6, [2]).indices() == [0, 2, 4]
        assert ideal_span(z6, []).indices() == [0]
        assert ideal_span(z6, [1]).is_whole
        assert ideal_span(z12, [4, 6]).indices() == [0, 2, 4, 6, 8, 10]

    def test_noncommutative_span_is_two_sided(self):
        m = ring("M2(Z2)")
        # M_n over a field is simple
        for x in range(1, m.order):
            assert ideal_span(m, [x]).is_whole

    def test_matches_oracle(self):
        for text in ["Z12", "Z2 x Z4", "Z2[x]/(x^3)", "M2(Z2)"]:
            r = ring(text)
            for x in range(r.order):
                assert set(ideal_span(r, [x]).indices()) == oracles.span(r, [x])


class TestLattice:
    def test_small_examples(self):
        assert [I.indices() for I in all_ideals(make_zn(6))] == [[0], [0, 3], [0, 2, 4], list(range(6))]
        assert len(all_ideals(make_zn(12))) == 6
        assert len(all_ideals(make_gf(2, 3))) == 2

    def test_oracle_equivalence_up_to_32(self):
        checked = 0
        for entry in catalog(32):
            r = entry.ring
            got = {frozenset(I.indices()) for I in all_ideals(r)}
            assert got == oracles.all_ideals(r), entry.provenance
            checked += 1
        assert checked > 50

    def test_every_ideal_is_closed(self):
        for entry in catalog(64):
            for I in all_ideals(entry.ring):
                assert is_closed(entry.ring, I), (entry.provenance, I)

    def test_sorted(self):
        lattice = all_ideals(ring("Z2 x Z2 x Z2"))
        assert lattice == sorted(lattice, key=Ideal.sort_key)
        assert len(lattice) == 8

    def test_cap(self):
        with pytest.raises(CapacityError):
            all_ideals(ring("Z2 x Z2 x Z2 x Z2"), max_ideals=10)

    def test_principal_subset(self):
        r = ring("Z2[x]/(x^2) x Z2[x]/(x^2)")
        assert set(principal_ideals(r)) <= set(all_ideals(r))
        # a finite local ring with non-principal maximal ideal
        s = ring("Z2 x Z2")
        assert set(principal_ideals(s)) == set(all_ideals(s))


class TestAlgebra:
    def test_z6(self):
        z6 = make_zn(6)
        alg = ideal_algebra(z6, ideal(z6, [0, 2, 4]), ideal(z6, [0, 3]))
        assert alg.sum.is_whole and alg.intersection.is_zero and alg.product.is_zero

    def test_zero_ideal(self):
        z12 = make_zn(12)
        I = ideal(z12, [0, 3, 6, 9])
        alg = ideal_algebra(z12, I, ideal(z12, [0]))
        assert alg.sum == I and alg.intersection.is_zero and alg.product.is_zero

    def test_z12(self):
        z12 = make_zn(12)
        alg = ideal_algebra(z12, ideal(z12, [0, 4, 8]), ideal(z12, [0, 6]))
        assert alg.intersection.is_zero
        assert alg.sum.indices() == [0, 2, 4, 6, 8, 10]

    def test_annihilators(self):
        z6 = make_zn(6)
        assert ideal_annihilator(z6, ideal(z6, [0, 2, 4])).indices() == [0, 3]
        assert ideal_annihilator(z6, ideal(z6, [0])).is_whole
        r = ring("Z5 x Z5")
        left = [x for x in range(25) if x % 5 == 0]  # F x 0
        right = list(range(5))  # 0 x F
        assert ideal_annihilator(r, ideal(r, left)).indices() == right


class TestClassification:
    def test_z12(self):
        z12 = make_zn(12)
        c = classify_ideal(z12, ideal(z12, [0, 2, 4, 6, 8, 10]))
        assert c.proper and c.prime and c.maximal
        c = classify_ideal(z12, ideal(z12, [0, 4, 8]))
        assert c.proper and not c.prime
        a, b = c.prime_witness
        assert z12.mul(a, b) in (0, 4, 8) and a not in (0, 4, 8) and b not in (0, 4, 8)
        assert not classify_ideal(z12, ideal(z12, range(12))).proper

    def test_spectrum_z12(self):
        z12 = make_zn(12)
        sp = spectrum(z12)
        names = sorted(ideal_label(z12, m) for m in sp.maximal_ideals)
        assert names == ["(2)", "(3)"]
        assert sorted(ideal_label(z12, m) for m in sp.minimal_primes) == ["(2)", "(3)"]
        assert sp.jacobson_radical.indices() == [0, 6]

    def test_spectrum_field(self):
        sp = spectrum(make_gf(2, 2))
        assert [m.indices() for m in sp.maximal_ideals] == [[0]]
        assert sp.jacobson_radical.is_zero

    def test_z6_minimal_primes_meet_trivially(self):
        z6 = make_zn(6)
        p, q = spectrum(z6).minimal_primes
        assert (p.members & q.members).is_zero_only()

    def test_jacobson_independent_characterisation(self):
        # x in Jac(R) iff 1 - r x is a unit for every r
        for entry in catalog(64):
            r = entry.ring
            units = classify_elements(r).units
            one = r.one_index
            jac = [x for x in range(r.order)
                   if all(int(r.sub(one, r.mul(s, x))) in units for s in range(r.order))]
            assert spectrum(r).jacobson_radical.indices() == jac, entry.provenance

    def test_primes_match_definition(self):
        for text in ["Z12", "Z2 x Z4", "Z8", "Z3 x Z3"]:
            r = ring(text)
            mul = r.mul_table
            for I in all_ideals(r):
                m = set(I.indices())
                expect = len(m) < r.order and all(
                    mul[a, b] not in m for a in range(r.order) for b in range(r.order)
                    if a not in m and b not in m)
                assert classify_ideal(r, I).prime == expect


class TestQuotient:
    def test_z12_by_4(self):
        z12 = make_zn(12)
        q = quotient_ring(z12, ideal(z12, [0, 4, 8]))
        assert q.order == 4 and ring_axiom_audit(q)
        assert q.same_tables(make_zn(4))

    def test_z12_by_3(self):
        # the ideal (3) has index 3, so the quotient is Z3
        z12 = make_zn(12)
        q = quotient_ring(z12, ideal(z12, [0, 3, 6, 9]))
        assert q.order == 3 and q.same_tables(make_zn(3))

    def test_z12_by_6(self):
        z12 = make_zn(12)
        q = quotient_ring(z12, ideal(z12, [0, 6]))
        assert q.order == 6 and q.same_tables(make_zn(6))

    def test_zero_ideal(self):
        r = ring("Z2 x Z4")
        assert quotient_ring(r, ideal(r, [0])).same_tables(r)

    def test_whole(self):
        z6 = make_zn(6)
        with pytest.raises(InvalidQuotientError):
            quotient_ring(z6, ideal(z6, range(6)))

    def test_maximal_quotients_are_fields(self):
        for entry in catalog(64):
            r = entry.ring
            for m in spectrum(r).maximal_ideals:
                q = quotient_ring(r, m)
                assert ring_axiom_audit(q)
                if r.commutative:
                    assert len(classify_elements(q).units) == q.order - 1, entry.provenance


class TestPredicates:
    def test_z8(self):
        p = ring_predicates(make_zn(8))
        assert p.local and p.chained and p.bezout and not p.reduced

    def test_field(self):
        p = ring_predicates(make_gf(3, 2))
        assert all(getattr(p, f) for f in p.__dataclass_fields__)

    def test_z6(self):
        p = ring_predicates(make_zn(6))
        assert p.semiprimitive and p.bezout and not p.local and p.reduced

    @pytest.mark.parametrize("n", range(2, 65))
    def test_zn_bezout(self, n):
        assert ring_predicates(make_zn(n)).bezout

    def test_non_bezout(self):
        # in Z4[x]/(x^2) the maximal ideal (2, x) needs two generators
        r = ring("Z4[x]/(x^2)")
        p = ring_predicates(r)
        assert p.local and not p.bezout and not p.chained
        (m,) = spectrum(r).maximal_ideals
        assert len(m) == 8 and m not in set(principal_ideals(r))


class TestCRT:
    def test_z6(self):
        assert [f.order for f in crt_decompose(make_zn(6))] == [2, 3]

    def test_z4(self):
        assert crt_decompose(make_zn(4)) is None

    def test_field(self):
        f = make_gf(2, 2)
        (q,) = crt_decompose(f)
        assert q.order == 4

    def test_reduced_catalog_rings_split(self):
        for entry in catalog(64):
            r = entry.ring
            if r.commutative and ring_predicates(r).reduced:
                factors = crt_decompose(r)
                assert factors is not None, entry.provenance
                assert np.prod([f.order for f in factors]) == r.order

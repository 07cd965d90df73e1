"""Core module arithmetic: construction, closure, lattice ops, annihilators,
quotients."""

import pytest
from hypothesis import given, settings, strategies as st

from lsg_lab.modules import (
    Caps,
    IncompatibleRingError,
    MismatchedModuleError,
    RingSpec,
    SizeCapError,
    annihilator_in_module,
    annihilator_in_ring,
    build_module,
    divisors,
    enumerate_submodules,
    format_module_spec,
    generate_submodule,
    parse_module_spec,
    quotient_module,
)

from conftest import POOL_SPECS, Z, make
from oracles import divisor_count, naive_closure, naive_submodule_sets_rank2


class TestBuild:
    def test_z2_z4(self, m24):
        assert m24.order == 8
        assert m24.exponent == 4
        assert m24.spec_string == "Z:2,4"
        assert len(m24.elements) == 8

    def test_simple(self):
        m = make(2)
        assert m.order == 2 and m.exponent == 2

    def test_mod_ring_accepts_dividing_exponent(self):
        m = build_module(RingSpec.integers_mod(12), [2, 4])
        assert m.order == 8 and m.exponent == 4

    def test_mod_ring_rejects_bad_exponent(self):
        with pytest.raises(IncompatibleRingError):
            build_module(RingSpec.integers_mod(6), [4])

    def test_element_cap(self):
        with pytest.raises(SizeCapError):
            build_module(Z, [101, 101])
        build_module(Z, [101, 101], Caps(max_elements=20000))

    def test_zero_module(self):
        m = build_module(Z, [])
        assert m.order == 1 and m.exponent == 1 and m.elements == ((),)

    def test_element_ordering_lexicographic(self, m24):
        assert m24.elements[:3] == ((0, 0), (0, 1), (0, 2))
        assert m24.elements == tuple(sorted(m24.elements))


class TestSpecStrings:
    @pytest.mark.parametrize(
        "text,modulus,orders",
        [("Z:2,4", 0, [2, 4]), ("Z:30", 0, [30]), ("Z/12:2,4", 12, [2, 4])],
    )
    def test_round_trip(self, text, modulus, orders):
        ring, parsed = parse_module_spec(text)
        assert ring.modulus == modulus and parsed == orders
        assert format_module_spec(ring, parsed) == text

    @pytest.mark.parametrize("bad", ["Z", "Q:2", "Z/1:2", "Z:x", "Z:1,2", "Z:"])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_module_spec(bad)


class TestGenerate:
    def test_z6_two(self, z6):
        sub = generate_submodule(z6, [(2,)])
        assert sub.elements == ((0,), (2,), (4,))
        assert sub.order == 3

    def test_empty_generators(self, z30):
        assert generate_submodule(z30, []).is_zero

    def test_z2_z4_diagonal(self, m24):
        sub = generate_submodule(m24, [(1, 1)])
        assert set(sub.elements) == {(0, 0), (1, 1), (0, 2), (1, 3)}
        assert sub.order == 4

    def test_rejects_foreign_element(self, z6):
        with pytest.raises(ValueError):
            generate_submodule(z6, [(7,)])

    def test_matches_naive_closure(self, module_pool):
        for m in module_pool:
            for g in m.elements[:: max(1, m.order // 6)]:
                assert (
                    generate_submodule(m, [g]).element_set
                    == naive_closure(m, [g])
                )

    def test_contains_generators_and_is_closed(self, m24):
        sub = generate_submodule(m24, [(1, 1), (0, 2)])
        assert all(g in sub for g in [(1, 1), (0, 2)])
        closure = {m24.add(a, b) for a in sub.elements for b in sub.elements}
        assert closure == set(sub.elements)


class TestEnumerate:
    def test_z6_counts(self, z6):
        assert [s.order for s in enumerate_submodules(z6)] == [1, 2, 3, 6]

    def test_klein_has_five(self, klein):
        assert len(enumerate_submodules(klein)) == 5

    def test_z2_z4_has_eight(self, m24):
        subs = enumerate_submodules(m24)
        assert len(subs) == 8
        assert {frozenset(s.elements) for s in subs} == naive_submodule_sets_rank2(m24)

    @pytest.mark.parametrize("n", [2, 7, 12, 24, 30, 60])
    def test_cyclic_matches_divisor_count(self, n):
        assert len(enumerate_submodules(make(n))) == divisor_count(n)

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_p_by_p_count(self, p):
        assert len(enumerate_submodules(make(p, p))) == p + 3

    def test_sorted_and_distinct(self, module_pool):
        for m in module_pool:
            subs = enumerate_submodules(m)
            keys = [(s.order, s.elements) for s in subs]
            assert keys == sorted(keys)
            assert len({s.elements for s in subs}) == len(subs)
            assert subs[0].is_zero and subs[-1].is_full

    def test_rank2_matches_pairwise_oracle(self, module_pool):
        for m in module_pool:
            if m.rank != 2:
                continue
            expected = naive_submodule_sets_rank2(m)
            assert {s.element_set for s in enumerate_submodules(m)} == expected

    def test_submodule_cap(self):
        m = build_module(Z, [6, 6], Caps(max_submodules=5))
        with pytest.raises(SizeCapError):
            enumerate_submodules(m)


class TestSumIntersect:
    def test_z30_coprime_join(self, z30):
        h2 = generate_submodule(z30, [(15,)])
        h3 = generate_submodule(z30, [(10,)])
        assert h2.sum(h3).order == 6

    def test_sum_identity(self, z30):
        n = generate_submodule(z30, [(10,)])
        assert n.sum(z30.zero_submodule()) is n

    def test_klein_join_in_z2_z4(self, m24):
        n2 = generate_submodule(m24, [(0, 2)])
        n3 = generate_submodule(m24, [(1, 0)])
        joined = n2.sum(n3)
        assert set(joined.elements) == {(0, 0), (0, 2), (1, 0), (1, 2)}

    def test_z12_coprime_meet(self, z12):
        a = generate_submodule(z12, [(4,)])
        b = generate_submodule(z12, [(6,)])
        assert a.intersect(b).is_zero

    def test_meet_idempotent(self, z12):
        a = generate_submodule(z12, [(4,)])
        assert a.intersect(a) is a

    def test_meet_in_z2_z4(self, m24):
        n1 = generate_submodule(m24, [(0, 1)])
        klein = generate_submodule(m24, [(0, 2), (1, 0)])
        assert set(n1.intersect(klein).elements) == {(0, 0), (0, 2)}

    def test_mismatched_parents(self, z6, z12):
        a = generate_submodule(z6, [(2,)])
        b = generate_submodule(z12, [(4,)])
        with pytest.raises(MismatchedModuleError):
            a.sum(b)
        with pytest.raises(MismatchedModuleError):
            a.intersect(b)

    def test_sum_matches_naive_closure(self, module_pool):
        for m in module_pool:
            subs = enumerate_submodules(m)
            step = max(1, len(subs) // 5)
            sample = subs[::step]
            for a in sample:
                for b in sample:
                    expected = naive_closure(m, list(a.elements) + list(b.elements))
                    assert a.sum(b).element_set == expected


class TestAnnihilators:
    def test_ann_of_zero_is_unit(self, z6):
        ideal = annihilator_in_ring(z6.zero_submodule())
        assert ideal.generator == 1 and ideal.is_unit

    def test_ann_of_order3_in_z6(self, z6):
        sub = generate_submodule(z6, [(2,)])
        assert annihilator_in_ring(sub).generator == 3

    def test_ann_of_full_z2_z4(self, m24):
        assert annihilator_in_ring(m24.full_submodule()).generator == 4

    def test_ann_generator_is_exponent(self, module_pool):
        for m in module_pool:
            for s in enumerate_submodules(m):
                assert annihilator_in_ring(s).generator == s.exponent

    def test_mod_ring_zero_ideal_is_modulus(self):
        m = build_module(RingSpec.integers_mod(12), [2, 6])
        full = m.full_submodule()
        ann = annihilator_in_ring(full)
        assert ann.generator == 6 and not ann.is_zero
        assert m.ring.ideal(0).is_zero and m.ring.ideal(0).generator == 12

    def test_kernel_of_two_in_z2_z4(self, m24):
        sub = annihilator_in_module(m24, Z.ideal(2))
        assert set(sub.elements) == {(0, 0), (1, 0), (0, 2), (1, 2)}

    def test_kernel_of_unit_is_zero(self, m24):
        assert annihilator_in_module(m24, Z.ideal(1)).is_zero

    def test_kernel_of_three_in_z6(self, z6):
        assert set(annihilator_in_module(z6, Z.ideal(3)).elements) == {(0,), (2,), (4,)}

    def test_kernel_of_zero_ideal_is_everything(self, z6):
        assert annihilator_in_module(z6, Z.ideal(0)).is_full


class TestQuotient:
    def test_z6_mod_order2(self, z6):
        q = quotient_module(z6, generate_submodule(z6, [(3,)]))
        assert q.module.order == 3

    def test_quotient_by_zero_keeps_order(self, m24):
        q = quotient_module(m24, m24.zero_submodule())
        assert q.module.order == m24.order

    def test_quotient_by_full_is_trivial(self, m24):
        q = quotient_module(m24, m24.full_submodule())
        assert q.module.order == 1

    def test_structure_of_z2_z4_quotients(self, m24):
        by_diag = quotient_module(m24, generate_submodule(m24, [(1, 2)]))
        assert by_diag.module.cyclic_orders == (4,)
        by_02 = quotient_module(m24, generate_submodule(m24, [(0, 2)]))
        assert by_02.module.cyclic_orders == (2, 2)

    def test_projection_is_homomorphism(self, module_pool):
        for m in module_pool[:8]:
            for sub in enumerate_submodules(m)[: 3]:
                q = quotient_module(m, sub)
                pi = q.project
                for a in m.elements[:: max(1, m.order // 5)]:
                    for b in m.elements[:: max(1, m.order // 5)]:
                        assert pi(m.add(a, b)) == q.module.add(pi(a), pi(b))

    def test_submodule_correspondence(self, z12, m24, z30):
        for m in (z12, m24, z30):
            for sub in enumerate_submodules(m):
                q = quotient_module(m, sub)
                above = [
                    s for s in enumerate_submodules(m)
                    if sub.element_set <= s.element_set
                ]
                projected = {q.project_submodule(s) for s in above}
                assert projected == set(enumerate_submodules(q.module))
                assert len(projected) == len(above)


class TestLatticeLaws:
    @settings(max_examples=60, deadline=None, derandomize=True)
    @given(
        spec=st.sampled_from(POOL_SPECS),
        data=st.data(),
    )
    def test_laws(self, spec, data):
        m = make(*spec)
        subs = enumerate_submodules(m)
        pick = lambda label: data.draw(
            st.sampled_from(subs), label=label
        )
        a, b, c = pick("a"), pick("b"), pick("c")
        assert a.sum(b) == b.sum(a)
        assert a.intersect(b) == b.intersect(a)
        assert a.sum(b).sum(c) == a.sum(b.sum(c))
        assert a.intersect(b).intersect(c) == a.intersect(b.intersect(c))
        assert a.sum(a) == a
        assert a.sum(a.intersect(b)) == a
        assert a.intersect(a.sum(b)) == a
        # Ann is containment-reversing: N <= K forces exp(N) | exp(K).
        small = a.intersect(b)
        assert a.exponent % small.exponent == 0

    def test_order_divides_module_order(self, module_pool):
        for m in module_pool:
            for s in enumerate_submodules(m):
                assert m.order % s.order == 0

    def test_generate_is_fixed_point_of_closure(self, module_pool):
        for m in module_pool:
            for s in enumerate_submodules(m):
                again = {m.add(a, b) for a in s.elements for b in s.elements}
                assert again == set(s.elements)

"""Module predicates: atoms, socle, largeness, uniform/cocyclic/second,
comultiplication."""

import itertools

import pytest

from lsg_lab.modules import (
    RingSpec,
    annihilator_in_module,
    annihilator_in_ring,
    build_module,
    enumerate_submodules,
    generate_submodule,
)
from lsg_lab.predicates import (
    comultiplication_witness,
    is_cocyclic,
    is_comultiplication,
    is_finitely_cogenerated,
    is_large,
    is_second,
    is_uniform,
    minimal_submodules,
    predicate_report,
    second_submodules,
    socle,
)

from conftest import Z, make
from oracles import naive_atoms, naive_is_large


class TestMinimalSubmodules:
    def test_z2_z4_atoms(self, m24):
        atoms = minimal_submodules(m24)
        assert {frozenset(a.elements) for a in atoms} == {
            frozenset({(0, 0), (0, 2)}),
            frozenset({(0, 0), (1, 0)}),
            frozenset({(0, 0), (1, 2)}),
        }

    def test_simple_module_is_its_own_atom(self):
        m = make(5)
        atoms = minimal_submodules(m)
        assert len(atoms) == 1 and atoms[0].is_full

    def test_z30_atom_orders(self, z30):
        assert sorted(a.order for a in minimal_submodules(z30)) == [2, 3, 5]

    def test_atoms_have_prime_order(self, module_pool):
        for m in module_pool:
            for a in minimal_submodules(m):
                assert all(a.order % d for d in range(2, a.order))

    def test_matches_naive_atoms(self, module_pool):
        for m in module_pool:
            sets = {s.element_set for s in enumerate_submodules(m)}
            assert {a.element_set for a in minimal_submodules(m)} == set(
                naive_atoms(sets)
            )

    def test_nonempty_for_nonzero(self, module_pool):
        for m in module_pool:
            assert minimal_submodules(m)


class TestSocle:
    def test_z12(self, z12):
        assert set(socle(z12).elements) == {(0,), (2,), (4,), (6,), (8,), (10,)}

    def test_z2_z4_socle_is_klein(self, m24):
        assert socle(m24).order == 4

    def test_z30_socle_is_everything(self, z30):
        assert socle(z30).is_full


class TestIsLarge:
    def test_klein_is_large_in_z2_z4(self, m24):
        klein = generate_submodule(m24, [(0, 2), (1, 0)])
        assert is_large(m24, klein)

    def test_full_module_is_large(self, m24):
        assert is_large(m24, m24.full_submodule())

    def test_order3_not_large_in_z12(self, z12):
        assert not is_large(z12, generate_submodule(z12, [(4,)]))

    def test_zero_not_large_in_nonzero(self, z6):
        assert not is_large(z6, z6.zero_submodule())

    def test_dual_route_agreement(self, module_pool):
        # Definitional largeness recomputed here from raw element sets.
        for m in module_pool:
            subs = enumerate_submodules(m)
            sets = [s.element_set for s in subs]
            soc = socle(m)
            for s in subs:
                definitional = naive_is_large(m, s.element_set, sets)
                by_socle = soc.element_set <= s.element_set
                assert definitional == by_socle
                assert is_large(m, s) == definitional


class TestUniformCocyclic:
    def test_values(self, z6, z8):
        assert is_uniform(z8) and is_cocyclic(z8)
        assert not is_uniform(z6) and not is_cocyclic(z6)
        assert is_cocyclic(make(7))

    def test_zero_module_degenerates(self):
        z0 = build_module(Z, [])
        report = predicate_report(z0)
        assert report.is_zero_module
        assert report.is_uniform          # vacuous
        assert not report.is_cocyclic     # zero socle is not simple
        assert report.is_comultiplication
        assert report.minimal_submodules == ()

    def test_uniform_iff_single_atom(self, module_pool):
        for m in module_pool:
            assert is_uniform(m) == (len(minimal_submodules(m)) == 1)

    def test_uniform_iff_cocyclic(self, module_pool):
        # Stated for comultiplication modules; in fact finiteness suffices,
        # so the scoped assertion is safe.
        for m in module_pool:
            if is_comultiplication(m):
                assert is_uniform(m) == is_cocyclic(m)


class TestSecond:
    def test_order3_in_z6(self, z6):
        assert is_second(z6, generate_submodule(z6, [(2,)]))

    def test_index2_in_z8_is_not(self, z8):
        assert not is_second(z8, generate_submodule(z8, [(2,)]))

    def test_zero_rejected(self, z6):
        with pytest.raises(ValueError):
            is_second(z6, z6.zero_submodule())

    def test_atoms_are_second(self, module_pool):
        for m in module_pool:
            for a in minimal_submodules(m):
                assert is_second(m, a)

    def test_join_prime_on_comultiplication(self, module_pool):
        # For second S: S <= N + K forces S <= N or S <= K.
        for m in module_pool:
            if not is_comultiplication(m):
                continue
            subs = enumerate_submodules(m)
            for s in second_submodules(m):
                for n, k in itertools.combinations(subs, 2):
                    if s.element_set <= n.sum(k).element_set:
                        assert (
                            s.element_set <= n.element_set
                            or s.element_set <= k.element_set
                        )


class TestAtomSums:
    def test_proper_atom_subsets_sum_nonlarge(self, module_pool):
        # On comultiplication modules with several atoms, summing any proper
        # nonempty subset of the atoms never reaches a large submodule.
        for m in module_pool:
            if not is_comultiplication(m):
                continue
            atoms = minimal_submodules(m)
            if len(atoms) < 2:
                continue
            for r in range(1, len(atoms)):
                for combo in itertools.combinations(atoms, r):
                    total = combo[0]
                    for sub in combo[1:]:
                        total = total.sum(sub)
                    assert not is_large(m, total)


class TestComultiplication:
    @pytest.mark.parametrize("n", list(range(2, 40)) + [97, 128, 210, 500])
    def test_cyclic_always(self, n):
        assert is_comultiplication(make(n))

    def test_z2_z4_fails(self, m24):
        assert not is_comultiplication(m24)
        witness = comultiplication_witness(m24)
        closure = annihilator_in_module(m24, annihilator_in_ring(witness))
        assert closure != witness
        assert witness.element_set < closure.element_set

    def test_klein_fails_with_order2_witness(self, klein):
        witness = comultiplication_witness(klein)
        assert witness is not None and witness.order == 2
        assert annihilator_in_ring(witness).generator == 2
        assert annihilator_in_module(klein, annihilator_in_ring(witness)).is_full

    def test_double_annihilator_identity_when_comultiplication(self, module_pool):
        for m in module_pool:
            if not is_comultiplication(m):
                continue
            for s in enumerate_submodules(m):
                assert annihilator_in_module(m, annihilator_in_ring(s)) == s

    def test_ring_variant_agrees(self):
        over_z = make(2, 4)
        over_mod = build_module(RingSpec.integers_mod(4), [2, 4])
        assert is_comultiplication(over_z) == is_comultiplication(over_mod) == False
        assert is_comultiplication(make(30)) and is_comultiplication(
            build_module(RingSpec.integers_mod(30), [30])
        )


class TestFinitelyCogenerated:
    def test_constant_true(self, module_pool, m24):
        assert all(is_finitely_cogenerated(m) for m in module_pool)
        assert is_finitely_cogenerated(build_module(Z, []))
        assert is_finitely_cogenerated(m24)


class TestReport:
    def test_bundle_consistency(self, m24):
        report = predicate_report(m24)
        assert report.socle == socle(m24)
        assert report.is_comultiplication is False
        assert report.comultiplication_witness is not None
        assert len(report.large) == 8
        large_count = sum(1 for flag in report.large.values() if flag)
        assert large_count == 2  # the socle (Klein) and the module itself

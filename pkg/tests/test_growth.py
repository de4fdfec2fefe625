import math

import pytest

from pairalg.errors import PreconditionError
from pairalg.growth import (base_check, build_model, commutative_model,
                            free_module_pair, free_words_model, gk_dimension,
                            growth_sequence, hilbert_series, is_semidomain,
                            matrix_units_model, module_morphisms, ore_witness,
                            poly_closed_form, rank, unit_vectors,
                            verify_module_pair)
from pairalg.pairs import SemiringPair
from pairalg.semirings import nat_plus_times


def test_free_module_pair_axioms(bool_pair):
    mp = free_module_pair(bool_pair, 2)
    assert verify_module_pair(mp, admissible=True).valid


def test_unit_vectors_form_base(bool_pair):
    mp = free_module_pair(bool_pair, 2)
    out = base_check(mp, unit_vectors(mp, 2))
    assert out["is_base"]


def test_proper_subset_does_not_span(bool_pair):
    mp = free_module_pair(bool_pair, 2)
    out = base_check(mp, unit_vectors(mp, 2)[:1])
    assert not out["spans"]


def test_rank_of_free_module(bool_pair):
    mp = free_module_pair(bool_pair, 2)
    assert rank(mp) == 2


def test_rank_submultiplicative(bool_pair):
    m1 = free_module_pair(bool_pair, 1)
    m2 = free_module_pair(bool_pair, 2)
    assert rank(m2) <= rank(m1) * 2


def test_module_morphism_count(bool_pair):
    m1 = free_module_pair(bool_pair, 1)
    morphs = module_morphisms(m1, m1)
    # identity and the zero map
    assert len(morphs) == 2


def test_free_growth_powers():
    prof = growth_sequence(free_words_model(2), 8)
    assert prof.d == [1] + [2 ** k for k in range(1, 9)]


def test_commutative_growth_matches_closed_form():
    for t in (1, 2, 3):
        prof = growth_sequence(commutative_model(t), 8)
        assert prof.d == poly_closed_form(t, 8)


def test_matrix_units_growth_stops():
    prof = growth_sequence(matrix_units_model(3), 6)
    assert prof.d == [1, 9, 0, 0, 0, 0, 0]


def test_hilbert_series_coefficients():
    prof = growth_sequence(free_words_model(2), 5)
    assert hilbert_series(prof)["coefficients"] == [2, 4, 8, 16, 32]


def test_gk_matrix_units_zero():
    est = gk_dimension(growth_sequence(matrix_units_model(2), 8))
    assert not est["divergent"]
    assert abs(est["estimate"]) <= 0.1


def test_gk_one_variable_near_one():
    est = gk_dimension(growth_sequence(commutative_model(1), 10))
    assert not est["divergent"]
    assert abs(est["estimate"] - 1.0) <= 0.25


def test_gk_free_flagged_divergent():
    est = gk_dimension(growth_sequence(free_words_model(2), 8))
    assert est["divergent"]


def test_build_model_rejects_unknown():
    with pytest.raises(PreconditionError):
        build_model("nope", 2)


def test_supertropical_is_semidomain(st_nat):
    assert is_semidomain(st_nat, window=10)


def test_ordinary_naturals_semidomain():
    s = nat_plus_times()
    p = SemiringPair(s, a0=lambda x: x == 0, tangibles=lambda x: x != 0,
                     name="nat")
    assert is_semidomain(p, window=10)


def test_ore_witness_supertropical(st_nat):
    v = ore_witness(st_nat, ("t", 1), ("t", 2), degree_bound=1, window=4)
    assert v
    b1, b2 = v.witness["b1"], v.witness["b2"]
    assert not st_nat.in_a0(b1) and not st_nat.in_a0(b2)
    c = st_nat.carrier
    combo = c.add(c.mul(b1, ("t", 1)), c.mul(b2, ("t", 2)))
    assert st_nat.in_a0(combo)
    assert (b1, b2) == (("t", 1), ("t", 0))

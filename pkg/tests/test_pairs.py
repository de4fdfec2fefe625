import pytest

from pairalg.pairs import (SemiringPair, check_weakly_bipotent, derive_negation,
                           is_shallow, property_n_status, verify_admissible,
                           verify_surpassing)
from pairalg.polynomials import build_polynomial_pair
from pairalg.semirings import nmax_trunc


def test_boolean_pair_admissible(bool_pair):
    assert verify_admissible(bool_pair).valid


def test_double_boolean_admissible(double_bool):
    assert verify_admissible(double_bool).valid


def test_supertropical3_admissible(st3):
    assert verify_admissible(st3).valid


def test_symbolic_supertropical_admissible(st_nat):
    assert verify_admissible(st_nat, window=8).valid


def test_shallow_fixtures(bool_pair, st3, double_bool):
    assert is_shallow(bool_pair)
    assert is_shallow(st3)
    assert is_shallow(double_bool)


def test_polynomial_pair_not_shallow(st3):
    # x + 1v has a tangible and a ghost coefficient: neither layer holds it
    pp = build_polynomial_pair(st3, nvars=1)
    f = pp.poly({(1,): st3.carrier.index("1"), (0,): st3.carrier.index("1v")})
    assert not pp.in_a0(f) and not pp.is_tangible(f)


def test_surpassing_axioms(bool_pair, st3, double_bool):
    for p in (bool_pair, st3, double_bool):
        assert verify_surpassing(p).valid, p.name


def test_shallow_forces_strong(st3):
    assert is_shallow(st3)
    assert verify_surpassing(st3, strong=True).valid


def test_symbolic_surpass_closed_form(st_nat):
    assert st_nat.surpasses(("t", 3), ("g", 3))
    assert st_nat.surpasses(("z",), ("g", 5))
    assert not st_nat.surpasses(("g", 3), ("t", 3))
    assert not st_nat.surpasses(("t", 3), ("t", 5))


def test_property_n_supertropical(st3):
    status = property_n_status(st3)
    assert status.property_n
    one = st3.carrier.index("1")
    assert one in status.partners[one]


def test_property_n_absent_on_plain_boolean(bool_pair):
    # 1 + 1 = 1 stays tangible, so no tangible quasi-negation exists
    assert property_n_status(bool_pair).status == "none"


def test_derive_negation_double(double_bool):
    neg = derive_negation(double_bool)
    c = double_bool.carrier
    e01 = c.labels.index("(0,1)")
    e10 = c.labels.index("(1,0)")
    assert neg(e01) == e10
    assert neg(e10) == e01


def test_derive_negation_supertropical_identity(st3):
    neg = derive_negation(st3)
    one = st3.carrier.index("1")
    assert neg(one) == one


def test_weakly_bipotent(st3, double_bool):
    assert check_weakly_bipotent(st3)
    assert check_weakly_bipotent(double_bool)


def test_not_weakly_bipotent_over_ordinary_naturals():
    from pairalg.semirings import nat_plus_times
    s = nat_plus_times()
    p = SemiringPair(s, a0=lambda x: x == 0, tangibles=lambda x: x != 0,
                     name="nat")
    v = check_weakly_bipotent(p, window=6)
    assert not v and v.witness == (1, 2)


def test_admissibility_violation_reported():
    n1 = nmax_trunc(1)
    # both layers claim the unit: disjointness fails
    p = SemiringPair(n1, a0=[n1.zero, n1.one], tangibles=[n1.one, 2])
    rep = verify_admissible(p)
    assert not rep.valid
    assert any(v.axiom == "a0-tangible-disjoint" for v in rep.violations)

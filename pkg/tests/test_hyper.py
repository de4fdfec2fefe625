import pytest

from pairalg.errors import PreconditionError
from pairalg.hyper import (A0_CONTAINS_ZERO, A0_SIZE_GE_TWO, find_isomorphism,
                           hyper_coset_quotient, krasner_hyperfield,
                           krasner_quotient, powerset_pair,
                           semiring_as_hyperring, verify_semihypergroup,
                           verify_semihyperring)
from pairalg.pairs import is_shallow, verify_admissible
from pairalg.semirings import FiniteSemiring


def mod_field(q):
    labels = [str(i) for i in range(q)]
    add = [[(i + j) % q for j in range(q)] for i in range(q)]
    mul = [[(i * j) % q for j in range(q)] for i in range(q)]
    return FiniteSemiring(labels, add, mul, zero=0, one=1, name="F%d" % q)


def test_krasner_hyperfield_valid(krasner):
    assert verify_semihyperring(krasner).valid
    assert krasner.hadd(1, 1) == frozenset({0, 1})
    assert krasner.hadd(0, 1) == frozenset({1})


def test_krasner_quotient_f3_is_krasner(krasner):
    h = krasner_quotient(mod_field(3), [1, 2])
    assert h.n == 2
    assert verify_semihyperring(h).valid
    assert find_isomorphism(h, krasner) is not None


def test_krasner_quotient_needs_subgroup():
    with pytest.raises(PreconditionError):
        krasner_quotient(mod_field(3), [0, 1])


def test_iterated_quotient_isomorphic_to_direct():
    # F7 by the full unit group directly, versus through the subgroup {1,6}
    f7 = mod_field(7)
    direct = krasner_quotient(f7, [1, 2, 3, 4, 5, 6])
    step1 = krasner_quotient(f7, [1, 6])
    units = [x for x in step1.elements() if x != step1.zero]
    step2 = hyper_coset_quotient(step1, units)
    assert find_isomorphism(step2, direct) is not None


def test_quotient_by_trivial_subgroup_recovers_base():
    f3 = mod_field(3)
    h = krasner_quotient(f3, [1])
    assert find_isomorphism(h, semiring_as_hyperring(f3)) is not None


def test_powerset_pair_contains_zero(krasner):
    p = powerset_pair(krasner, A0_CONTAINS_ZERO)
    assert verify_admissible(p).valid
    labels = {p.carrier.label(x) for x in p.carrier.elements()}
    assert labels == {"{0}", "{1}", "{0,1}"}


def test_powerset_pair_size_ge_two_shallow(krasner):
    p = powerset_pair(krasner, A0_SIZE_GE_TWO)
    assert verify_admissible(p).valid
    assert is_shallow(p)


def test_powerset_subset_surpassing(krasner):
    p = powerset_pair(krasner, A0_CONTAINS_ZERO)
    c = p.carrier
    by_label = {c.label(x): x for x in c.elements()}
    assert p.surpasses(by_label["{1}"], by_label["{0,1}"])
    assert not p.surpasses(by_label["{0,1}"], by_label["{1}"])


def test_semiring_as_hyperring_roundtrip(B):
    h = semiring_as_hyperring(B)
    assert verify_semihyperring(h).valid
    assert h.hadd(1, 1) == frozenset({1})

import itertools

import pytest

from pairalg.congruences import (NO_PAIR_CONGRUENCE, NoPairCongruence,
                                 classify_congruence, congruence_kernel,
                                 diagonal, enumerate_congruences,
                                 generate_congruence, generated_chain_probe,
                                 intersection_of_primes_above, is_prime,
                                 is_semiprime, levitzki_sequence,
                                 prime_spectrum_krull, principal_relation,
                                 quotient_pair, radical, twist_product,
                                 verify_pair_homomorphism)
from pairalg.pairs import SemiringPair, verify_admissible
from pairalg.semirings import boolean_semiring, nmax_trunc


def test_twist_product_formula(bool_pair):
    # (a1,a1')*(a2,a2') = (a1a2 + a1'a2', a1a2' + a1'a2)
    assert twist_product(bool_pair, (0, 1), (0, 1)) == (1, 0)
    assert twist_product(bool_pair, (1, 0), (0, 1)) == (0, 1)


def test_twist_associative_small_carriers(bool_pair, st3, double_bool):
    for p in (bool_pair, st3, double_bool):
        elems = list(p.elements())
        if len(elems) > 4:
            continue
        pts = list(itertools.product(elems, repeat=2))
        for x, y, z in itertools.product(pts, repeat=3):
            a = twist_product(p, twist_product(p, x, y), z)
            b = twist_product(p, x, twist_product(p, y, z))
            assert a == b


def test_diagonal_is_prime_on_boolean(bool_pair):
    d = diagonal(bool_pair)
    assert is_semiprime(d)
    assert is_prime(d)


def test_boolean_spectrum(bool_pair):
    spec = prime_spectrum_krull(bool_pair)
    assert len(spec["primes"]) == 1
    assert spec["krull_dimension"] == 0


def test_st3_diagonal_not_semiprime(st3):
    assert not is_semiprime(diagonal(st3))


def test_st3_radical_of_diagonal_is_marker(st3):
    d = diagonal(st3)
    congs = enumerate_congruences(st3)
    assert radical(d) == NO_PAIR_CONGRUENCE
    assert intersection_of_primes_above(d, congs) == NO_PAIR_CONGRUENCE


def test_double_boolean_has_no_primes(double_bool):
    spec = prime_spectrum_krull(double_bool)
    assert spec["primes"] == []
    assert spec["krull_dimension"] is None


def test_radical_matches_prime_intersection_everywhere(bool_pair, st3,
                                                       double_bool):
    for p in (bool_pair, st3, double_bool):
        congs = enumerate_congruences(p)
        for c in congs:
            assert radical(c) == intersection_of_primes_above(c, congs), p.name


def test_classify_prime_iff_semiprime_irreducible(bool_pair, st3):
    for p in (bool_pair, st3):
        congs = enumerate_congruences(p)
        for c in congs:
            rec = classify_congruence(c, congs)
            assert rec["prime"] == (rec["semiprime"] and rec["irreducible"])


def test_generate_congruence_blocked_by_tangible_a0_pair(st3):
    one = st3.carrier.index("1")
    ghost = st3.carrier.index("1v")
    with pytest.raises(NoPairCongruence):
        generate_congruence(st3, [(one, ghost)])


def test_principal_relation_matches_generated_closure():
    n1 = nmax_trunc(1)
    p = SemiringPair(n1, a0=[n1.zero], tangibles=[n1.one, 2], name="nmax1")
    for a in p.elements():
        seeded = generate_congruence(p, [(a, n1.zero)],
                                     require_admissible=False)
        formula = generate_congruence(p, principal_relation(p, a),
                                      require_admissible=False)
        assert seeded == formula


def test_quotient_pair_boolean(bool_pair):
    q = quotient_pair(bool_pair, diagonal(bool_pair))
    assert q.carrier.n == 2
    assert q.admissibility.valid


def test_congruence_kernel_of_sum_map(bool_pair, double_bool):
    B = bool_pair.carrier
    c = double_bool.carrier

    def f(i):
        a, b = c.labels[i][1:-1].split(",")
        return B.add(int(a), int(b))

    assert verify_pair_homomorphism(f, double_bool, bool_pair, check_a0=False)
    ker = congruence_kernel(f, double_bool, bool_pair, check_a0=False)
    assert not ker.admissible
    assert len(ker.relation) == 10


def test_levitzki_witness_exists_for_non_semiprime(st3):
    d = diagonal(st3)
    assert not is_semiprime(d)
    elems = list(st3.elements())
    found = False
    for start in itertools.product(elems, repeat=2):
        if d.contains(*start):
            continue
        out = levitzki_sequence(d, start)
        if out["terminated"] and out["witness"] is not None:
            found = True
            break
    assert found


def test_generated_chain_probe_collapses_on_truncation():
    n3 = nmax_trunc(3)
    p = SemiringPair(n3, a0=[n3.zero], tangibles=list(range(1, n3.n)),
                     name="nmax3-pair")
    seeds = [[(n3.index("0"), n3.index("1"))],
             [(n3.index("0"), n3.index("1")), (n3.index("0"), n3.index("2"))]]
    congs, verdicts = generated_chain_probe(p, seeds)
    assert len(congs) == 2
    assert congs[0] <= congs[1]

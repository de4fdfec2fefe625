import random
from fractions import Fraction as QFraction

import pytest

from pairalg.errors import PreconditionError
from pairalg.fractions import (LocalizationContext, build_fraction_pair,
                               check_ore, check_regular, common_denominator,
                               frac_add, frac_equiv, frac_in_a0,
                               frac_is_tangible, frac_mul)
from pairalg.pairs import SemiringPair
from pairalg.semirings import nat_plus_times


def dyadic_context(window=30):
    s = nat_plus_times()
    p = SemiringPair(s, a0=lambda x: x == 0, tangibles=lambda x: x != 0,
                     name="nat")
    powers = [2 ** k for k in range(8)]
    return LocalizationContext(p, powers,
                               s_member=lambda x: x > 0 and (x & (x - 1)) == 0,
                               window=window)


def test_regular_and_ore(bool_pair):
    assert check_regular(bool_pair, 1)
    assert check_ore(bool_pair, [1])


def test_central_shortcut():
    ctx = dyadic_context()
    assert ctx.central
    assert ctx.ore.detail == "central"


def test_frac_ops_match_rational_oracle():
    ctx = dyadic_context()
    rng = random.Random(3)
    for _ in range(300):
        x = ctx.fraction(rng.randrange(0, 40), 2 ** rng.randrange(0, 5))
        y = ctx.fraction(rng.randrange(0, 40), 2 ** rng.randrange(0, 5))
        s = frac_add(x, y)
        m = frac_mul(x, y)
        assert QFraction(s.b, s.s) == QFraction(x.b, x.s) + QFraction(y.b, y.s)
        assert QFraction(m.b, m.s) == QFraction(x.b, x.s) * QFraction(y.b, y.s)


def test_equivalence_is_unreduced():
    ctx = dyadic_context()
    x = ctx.fraction(3, 2)
    y = ctx.fraction(6, 4)
    assert x.b != y.b
    assert frac_equiv(x, y)
    assert not frac_equiv(x, ctx.fraction(5, 4))


def test_ops_well_defined_on_representatives():
    ctx = dyadic_context()
    rng = random.Random(9)
    for _ in range(100):
        b, s = rng.randrange(0, 20), 2 ** rng.randrange(0, 4)
        k = 2 ** rng.randrange(1, 3)
        x1 = ctx.fraction(b, s)
        x2 = ctx.fraction(b * k, s * k)
        y = ctx.fraction(rng.randrange(0, 20), 2 ** rng.randrange(0, 4))
        assert frac_equiv(frac_add(x1, y), frac_add(x2, y))
        assert frac_equiv(frac_mul(x1, y), frac_mul(x2, y))


def test_common_denominator():
    ctx = dyadic_context()
    x = ctx.fraction(3, 2)
    y = ctx.fraction(5, 8)
    (x2, y2) = common_denominator(x, y)
    assert x2.s == y2.s
    assert frac_equiv(x, x2) and frac_equiv(y, y2)


def test_membership_predicates():
    ctx = dyadic_context()
    assert frac_in_a0(ctx.fraction(0, 4))
    assert frac_is_tangible(ctx.fraction(3, 2))
    assert not frac_in_a0(ctx.fraction(3, 2))


def test_fraction_needs_denominator_in_s():
    ctx = dyadic_context()
    with pytest.raises(PreconditionError):
        ctx.fraction(1, 3)


def test_finite_fraction_pair(bool_pair):
    fp = build_fraction_pair(bool_pair, [1])
    assert fp.carrier.n == 2
    assert fp.admissibility.valid if hasattr(fp, "admissibility") else True

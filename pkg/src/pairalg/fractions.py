"""Ore localization of a pair at a multiplicative set of regular tangibles:
regularity and Ore checks, fraction equivalence, arithmetic, and the
localized pair."""

import itertools

from .errors import NO, PreconditionError, UNKNOWN, Verdict, YES
from .semirings import FiniteSemiring
from .pairs import SemiringPair


def check_regular(p, s, mode="left", window=30):
    """Cancellation of s: left mode cancels s on the right of products
    (b1 s = b2 s forces b1 = b2), right mode on the left, preceq_left
    relaxes equality to the surpassing order."""
    if not p.is_tangible(s):
        raise PreconditionError("regularity is defined for tangible elements")
    c = p.carrier
    sample = list(c.elements()) if c.finite else list(c.sample(window))
    for b1, b2 in itertools.combinations(sample, 2):
        if mode == "left":
            if c.mul(b1, s) == c.mul(b2, s):
                return Verdict(NO, witness=(b1, b2))
        elif mode == "right":
            if c.mul(s, b1) == c.mul(s, b2):
                return Verdict(NO, witness=(b1, b2))
        elif mode == "preceq_left":
            for x, y in ((b1, b2), (b2, b1)):
                lhs = p.surpasses(c.mul(x, s), c.mul(y, s))
                if lhs and p.surpasses(x, y) is False:
                    return Verdict(NO, witness=(x, y))
        else:
            raise PreconditionError("unknown mode %r" % mode)
    return Verdict(YES) if c.finite else Verdict(YES, bound=window,
                                                 detail="windowed")


def _is_central(p, S, sample):
    c = p.carrier
    return all(c.mul(s, b) == c.mul(b, s) for s in S for b in sample)


def check_ore(p, S, window=30, s_member=None):
    """Left Ore condition for S: common multiples s'b = b's exist, and
    right cancellation by s is witnessed by a left s'. Central S (in
    particular any commutative carrier) passes outright. For symbolic
    carriers S is a sample and s_member decides closure membership."""
    c = p.carrier
    S = list(S)
    member = s_member or (lambda x: x in S)
    for s in S:
        if not p.is_tangible(s):
            raise PreconditionError("S must consist of tangibles")
    for s1, s2 in itertools.product(S, repeat=2):
        if not member(c.mul(s1, s2)):
            raise PreconditionError("S not multiplicatively closed at %r" % ((s1, s2),))
    sample = list(c.elements()) if c.finite else list(c.sample(window))
    for s in S:
        v = check_regular(p, s, "left", window)
        if not v:
            return Verdict(NO, witness=("not regular", s, v.witness))
        v = check_regular(p, s, "right", window)
        if not v:
            return Verdict(NO, witness=("not regular", s, v.witness))
    if _is_central(p, S, sample):
        return Verdict(YES, detail="central")
    for b in sample:
        for s in S:
            if not any(c.mul(sp, b) == c.mul(bp, s)
                       for sp in S for bp in sample):
                verdict = NO if c.finite else UNKNOWN
                return Verdict(verdict, witness=("no common multiple", b, s))
    for b1, b2 in itertools.product(sample, repeat=2):
        for s in S:
            if c.mul(b1, s) == c.mul(b2, s):
                if not any(c.mul(sp, b1) == c.mul(sp, b2) for sp in S):
                    verdict = NO if c.finite else UNKNOWN
                    return Verdict(verdict, witness=("no left witness", b1, b2, s))
    return Verdict(YES) if c.finite else Verdict(YES, bound=window, detail="windowed")


class LocalizationContext:
    """Base pair plus a verified multiplicative set S of regular tangibles.
    For symbolic carriers S is given by an explicit sample list (kept
    multiplicatively closed by the caller) and membership predicate."""

    def __init__(self, pair, s_elements, s_member=None, window=30):
        self.pair = pair
        self.s_elements = list(s_elements)
        self.s_member = s_member or (lambda x: x in self.s_elements)
        self.window = window
        self.ore = check_ore(pair, self.s_elements, window, s_member=self.s_member)
        if self.ore.status == NO:
            raise PreconditionError("Ore condition fails: %r" % (self.ore.witness,))
        c = pair.carrier
        sample = list(c.elements()) if c.finite else list(c.sample(window))
        self.central = _is_central(pair, self.s_elements, sample)

    def tangible_sample(self):
        p = self.pair
        if p.carrier.finite:
            return list(p.tangible_elements())
        return list(p.tangible_elements(self.window))

    def fraction(self, b, s):
        if not self.s_member(s):
            raise PreconditionError("denominator %r not in S" % (s,))
        return Fraction(self, b, s)


class Fraction:
    """Unreduced pair (numerator, denominator); equality is always the
    witness search of frac_equiv."""

    __slots__ = ("ctx", "b", "s")

    def __init__(self, ctx, b, s):
        self.ctx = ctx
        self.b = b
        self.s = s

    def __repr__(self):
        lab = self.ctx.pair.carrier.label
        return "Fraction(%s / %s)" % (lab(self.b), lab(self.s))


def frac_equiv(x, y):
    """Search for a1, a2 in T with a1 b1 = a2 b2 and a1 s1 = a2 s2 in S.
    Exhaustive on finite carriers; three-valued on symbolic ones."""
    ctx = x.ctx
    if ctx is not y.ctx:
        raise PreconditionError("fractions from different localizations")
    c = ctx.pair.carrier
    tang = ctx.tangible_sample()
    for a1 in tang:
        for a2 in tang:
            if (c.mul(a1, x.b) == c.mul(a2, y.b)
                    and c.mul(a1, x.s) == c.mul(a2, y.s)
                    and ctx.s_member(c.mul(a1, x.s))):
                return Verdict(YES, witness=(a1, a2))
    if c.finite:
        return Verdict(NO)
    return Verdict(UNKNOWN, bound=len(tang), detail="no witness in window")


def common_denominator(x, y):
    """s = s' s1 = b' s2 in S with s' in S, b' in A; both fractions are
    rewritten over s. Fails loudly if no such s lands in S."""
    ctx = x.ctx
    c = ctx.pair.carrier
    if ctx.central:
        s = c.mul(y.s, x.s)
        if not ctx.s_member(s):
            raise PreconditionError("common denominator %r escaped S" % (s,))
        return ctx.fraction(c.mul(y.s, x.b), s), ctx.fraction(c.mul(x.s, y.b), s)
    sample = list(c.elements()) if c.finite else list(c.sample(ctx.window))
    for sp in ctx.s_elements:
        for bp in sample:
            s = c.mul(sp, x.s)
            if s == c.mul(bp, y.s) and ctx.s_member(s):
                return (ctx.fraction(c.mul(sp, x.b), s),
                        ctx.fraction(c.mul(bp, y.b), s))
    raise PreconditionError("no common denominator found within bound")


def frac_add(x, y):
    fx, fy = common_denominator(x, y)
    c = x.ctx.pair.carrier
    return x.ctx.fraction(c.add(fx.b, fy.b), fx.s)


def frac_mul(x, y):
    """s1^-1 b1 . s2^-1 b2 = (s' s1)^-1 (b' b2) with s' b1 = b' s2."""
    ctx = x.ctx
    c = ctx.pair.carrier
    if ctx.central:
        return ctx.fraction(c.mul(x.b, y.b), c.mul(x.s, y.s))
    sample = list(c.elements()) if c.finite else list(c.sample(ctx.window))
    for sp in ctx.s_elements:
        for bp in sample:
            if c.mul(sp, x.b) == c.mul(bp, y.s):
                return ctx.fraction(c.mul(bp, y.b), c.mul(sp, x.s))
    raise PreconditionError("no Ore witness for multiplication within bound")


def frac_in_a0(x, window=None):
    """Membership in S^-1 A0: equivalent to some fraction with quasi-zero
    numerator. The numerator of an equivalent representative suffices on
    central contexts; otherwise a bounded search runs."""
    ctx = x.ctx
    p = ctx.pair
    if p.in_a0(x.b):
        return Verdict(YES)
    c = p.carrier
    a0s = list(p.a0_elements()) if c.finite else list(p.a0_elements(window or ctx.window))
    for b0 in a0s:
        for s in ctx.s_elements:
            if frac_equiv(x, ctx.fraction(b0, s)):
                return Verdict(YES, witness=(b0, s))
    return Verdict(NO) if c.finite else Verdict(UNKNOWN, detail="bounded search")


def frac_is_tangible(x, window=None):
    ctx = x.ctx
    p = ctx.pair
    if p.is_tangible(x.b):
        return Verdict(YES)
    c = p.carrier
    tang = ctx.tangible_sample()
    for t in tang:
        for s in ctx.s_elements:
            if frac_equiv(x, ctx.fraction(t, s)):
                return Verdict(YES, witness=(t, s))
    return Verdict(NO) if c.finite else Verdict(UNKNOWN, detail="bounded search")


def build_fraction_pair(p, S, window=30, s_member=None):
    """Localized pair. On a finite carrier the equivalence classes are
    materialized into a table semiring and a SemiringPair is returned; on a
    symbolic carrier the LocalizationContext itself carries the arithmetic
    (fractions compared through frac_equiv)."""
    ctx = LocalizationContext(p, S, s_member=s_member, window=window)
    if not p.carrier.finite:
        return ctx
    c = p.carrier
    fracs = [ctx.fraction(b, s) for b in c.elements() for s in ctx.s_elements]
    classes = []
    for f in fracs:
        for cl in classes:
            if frac_equiv(f, cl[0]):
                cl.append(f)
                break
        else:
            classes.append([f])
    reps = [cl[0] for cl in classes]

    def cls_of(f):
        for i, cl in enumerate(classes):
            if frac_equiv(f, cl[0]):
                return i
        raise PreconditionError("fraction escaped the class list")

    add_table = [[cls_of(frac_add(a, b)) for b in reps] for a in reps]
    mul_table = [[cls_of(frac_mul(a, b)) for b in reps] for a in reps]
    labels = ["%s/%s" % (c.label(f.b), c.label(f.s)) for f in reps]
    one = next(s for s in ctx.s_elements)
    zero_i = cls_of(ctx.fraction(c.zero, one))
    one_i = cls_of(ctx.fraction(c.one, one))
    qcar = FiniteSemiring(labels, add_table, mul_table, zero_i, one_i,
                          name="S^-1(%s)" % getattr(c, "name", "A"))
    a0 = frozenset(i for i, cl in enumerate(classes)
                   if any(p.in_a0(f.b) for f in cl))
    tang = frozenset(i for i, cl in enumerate(classes)
                     if i not in a0 and any(p.is_tangible(f.b) for f in cl))
    out = SemiringPair(qcar, a0, tang, name=qcar.name)
    out.context = ctx
    return out

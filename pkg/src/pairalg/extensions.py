"""Centralizing extensions: integral / algebraic / congruence-algebraic
element predicates, and negated determinants for pairs with a negation map.
All searches are bounded and report three-valued verdicts."""

import itertools

from .errors import (AxiomReport, NO, PreconditionError, UNKNOWN, Verdict, YES)
from .polynomials import Polynomial, poly_eval


class ExtensionPair:
    """Base pair embedded in an extension pair. The embedding defaults to
    the identity (same carrier); centralizing means embedded tangibles
    commute with everything in the extension."""

    def __init__(self, base, ext, embed=None, name=""):
        self.base = base
        self.ext = ext
        self.embed = embed or (lambda a: a)
        self.name = name or "extension"

    def base_sample(self, window=30):
        c = self.base.carrier
        return list(c.elements()) if c.finite else list(c.sample(window))

    def ext_sample(self, window=30):
        c = self.ext.carrier
        return list(c.elements()) if c.finite else list(c.sample(window))

    def verify(self, window=20):
        report = AxiomReport(subject=self.name, window=window)
        eb, ee = self.base.carrier, self.ext.carrier
        base = self.base_sample(window)
        extn = self.ext_sample(window)
        f = self.embed
        if f(eb.zero) != ee.zero or f(eb.one) != ee.one:
            report.record("embedding-units", (eb.zero, eb.one))
        for a, b in itertools.product(base, repeat=2):
            report.checked += 1
            if f(eb.add(a, b)) != ee.add(f(a), f(b)):
                report.record("embedding-additive", (a, b))
            if f(eb.mul(a, b)) != ee.mul(f(a), f(b)):
                report.record("embedding-multiplicative", (a, b))
        for a in base:
            if self.base.is_tangible(a) and not self.ext.is_tangible(f(a)):
                report.record("tangibles-into-tangibles", (a,))
            if self.base.in_a0(a):
                if not self.ext.in_a0(f(a)):
                    report.record("quasi-zeros-into-quasi-zeros", (a,))
                for w in extn:
                    if not self.ext.in_a0(ee.mul(f(a), w)):
                        report.record("a0-action-inside-w0", (a, w))
        for a in base:
            if not self.base.is_tangible(a):
                continue
            for w in extn:
                report.checked += 1
                if ee.mul(f(a), w) != ee.mul(w, f(a)):
                    report.record("centralizing", (a, w))
        return report

    def eval_poly(self, coeffs, y):
        """sum coeffs[i] y^i inside the extension, coefficients from the base."""
        ee = self.ext.carrier
        total = ee.zero
        for i, a in enumerate(coeffs):
            total = ee.add(total, ee.mul(self.embed(a), ee.power(y, i)))
        return total


def is_integral(ext, y, degree_bound=3, window=20, tangible_only=False):
    """Search for a0..a_{n-1} in the base with sum a_i y^i below y^n in the
    surpassing order; minimal n, lexicographically first witness. The
    tangible_only variant restricts coefficients to T plus 0."""
    p = ext.ext
    if tangible_only:
        base = list(ext.base.tangible_elements() if ext.base.carrier.finite
                    else ext.base.tangible_elements(window))
        base = [ext.base.carrier.zero] + base
    else:
        base = ext.base_sample(window)
    complete = ext.base.carrier.finite
    unknown = False
    for n in range(1, degree_bound + 1):
        target = p.carrier.power(y, n)
        for coeffs in itertools.product(base, repeat=n):
            val = ext.eval_poly(coeffs, y)
            v = p.surpasses(val, target)
            if v:
                return Verdict(YES, witness={"degree": n, "coeffs": coeffs})
            if v is None:
                unknown = True
    if complete and not unknown:
        return Verdict(NO, bound=degree_bound)
    return Verdict(UNKNOWN, bound=degree_bound, detail="windowed coefficient scan")


def is_algebraic(ext, y, degree_bound=3, window=20):
    """Search for coefficients with nonzero leading term putting
    sum a_i y^i into the quasi-zeros of the extension. Degree-0 relations
    are excluded: a lone quasi-zero constant says nothing about y."""
    p = ext.ext
    base = ext.base_sample(window)
    zero = ext.base.carrier.zero
    for n in range(1, degree_bound + 1):
        for coeffs in itertools.product(base, repeat=n + 1):
            if coeffs[-1] == zero:
                continue
            if p.in_a0(ext.eval_poly(coeffs, y)):
                return Verdict(YES, witness={"degree": n, "coeffs": coeffs})
    if ext.base.carrier.finite:
        return Verdict(NO, bound=degree_bound)
    return Verdict(UNKNOWN, bound=degree_bound, detail="windowed coefficient scan")


def tangible_coefficient_representation(ext, y, s, degree_bound=3, window=20):
    """If s = sum b_i y^i is tangible and the base pair is shallow, a
    representation with coefficients in T plus 0 must exist; searched and
    returned."""
    p = ext.ext
    tang = list(ext.base.tangible_elements() if ext.base.carrier.finite
                else ext.base.tangible_elements(window))
    coeff_pool = [ext.base.carrier.zero] + tang
    for n in range(0, degree_bound + 1):
        for coeffs in itertools.product(coeff_pool, repeat=n + 1):
            if ext.eval_poly(coeffs, y) == s:
                return Verdict(YES, witness={"degree": n, "coeffs": coeffs})
    return Verdict(NO if ext.base.carrier.finite else UNKNOWN, bound=degree_bound)


def is_congruence_algebraic(ext, y, degree_bound=2, window=12, coeffs=None):
    """Transcendence test per the functional definition: y is congruence
    algebraic when some f1(y) dominating f2(y) fails to dominate at a base
    point. Returns the violating (f1, f2, b) as certificate."""
    p = ext.ext
    base_pair = ext.base
    pool = coeffs if coeffs is not None else ext.base_sample(window)
    base_pts = ext.base_sample(window)
    monos = [(k,) for k in range(degree_bound + 1)]
    unknown = False
    polys = []
    for choice in itertools.product(pool, repeat=len(monos)):
        polys.append(Polynomial(base_pair, 1, dict(zip(monos, choice))))

    def eval_ext(f, v_ext):
        coeff_list = [f.coeff((k,)) for k in range(degree_bound + 1)]
        return ext.eval_poly(coeff_list, v_ext)

    for f1 in polys:
        for f2 in polys:
            dom = p.surpasses(eval_ext(f2, y), eval_ext(f1, y))
            if dom is None:
                unknown = True
                continue
            if not dom:
                continue
            for b in base_pts:
                holds = base_pair.surpasses(poly_eval(f2, (b,)), poly_eval(f1, (b,)))
                if holds is False:
                    return Verdict(YES, witness={"f1": f1, "f2": f2, "point": b})
                if holds is None:
                    unknown = True
    if unknown or not (ext.base.carrier.finite and ext.ext.carrier.finite):
        return Verdict(UNKNOWN, bound=degree_bound, detail="transcendental at bound")
    return Verdict(NO, bound=degree_bound, detail="transcendental at bound")


# ---------------------------------------------------------------------------
# Negated determinants


def _permutations_with_sign(n):
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n)
                         if perm[i] > perm[j])
        yield perm, inversions % 2


def negated_determinant(p, matrix, negation):
    """Permutation expansion with (-)1 to the sign of the permutation:
    odd permutations contribute their product negated."""
    n = len(matrix)
    if n > 4:
        raise PreconditionError("permutation expansion capped at 4x4")
    if any(len(row) != n for row in matrix):
        raise PreconditionError("matrix is not square")
    c = p.carrier
    total = c.zero
    for perm, parity in _permutations_with_sign(n):
        prod = c.one
        for i in range(n):
            prod = c.mul(prod, matrix[i][perm[i]])
        if parity:
            prod = negation(prod)
        total = c.add(total, prod)
    return total


def negated_adjoint(p, matrix, negation):
    """Signed-cofactor transpose: entry (i, j) is the (j, i) minor's negated
    determinant, negated once more when i + j is odd."""
    n = len(matrix)
    c = p.carrier

    def minor(r, s):
        return [[matrix[i][j] for j in range(n) if j != s]
                for i in range(n) if i != r]

    adj = []
    for i in range(n):
        row = []
        for j in range(n):
            if n == 1:
                cof = c.one
            else:
                cof = negated_determinant(p, minor(j, i), negation)
            if (i + j) % 2:
                cof = negation(cof)
            row.append(cof)
        adj.append(row)
    return adj


def mat_vec(p, matrix, vec):
    c = p.carrier
    out = []
    for row in matrix:
        acc = c.zero
        for a, v in zip(row, vec):
            acc = c.add(acc, c.mul(a, v))
        out.append(acc)
    return out


def mat_mul(p, m1, m2):
    c = p.carrier
    n = len(m1)
    return [[c.sum(c.mul(m1[i][k], m2[k][j]) for k in range(n))
             for j in range(len(m2[0]))] for i in range(n)]


def det_chain_report(p, matrix, vec, negation):
    """Instance data for the determinant chain: given A v above 0, reports
    whether det(A) v and adj(A) A v stay above 0 coordinatewise."""
    av = mat_vec(p, matrix, vec)
    d = negated_determinant(p, matrix, negation)
    adj = negated_adjoint(p, matrix, negation)
    adj_av = mat_vec(p, adj, av)
    c = p.carrier
    zero = c.zero
    return {
        "Av_above_zero": [p.surpasses(zero, x) for x in av],
        "det": d,
        "det_v_above_zero": [p.surpasses(zero, c.mul(d, v)) for v in vec],
        "adjAv_above_zero": [p.surpasses(zero, x) for x in adj_av],
    }

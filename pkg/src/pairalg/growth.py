"""Module pairs, bases and rank, growth sequences of affine extensions,
Hilbert series, Gelfand-Kirillov estimates, and Ore-type common-multiple
witnesses over semidomain pairs."""

import itertools
import math
from statistics import linear_regression

from .errors import (AxiomReport, NO, PreconditionError, UNKNOWN, Verdict, YES)


class ModulePair:
    """Finite module M over a pair carrier, with a distinguished submodule
    image N (the quasi-zero layer) and optional tangible vectors."""

    def __init__(self, pair, elements, add, smul, zero, n_image,
                 tangibles=(), name=""):
        self.pair = pair
        self.elements = list(elements)
        self.add = add
        self.smul = smul
        self.zero = zero
        self.n_image = frozenset(n_image)
        self.tangibles = frozenset(tangibles)
        self.name = name or "module-pair"

    def surpasses(self, v1, v2):
        """v1 below v2: some quasi-zero vector tops v1 up to v2."""
        return any(self.add(v1, n) == v2 for n in self.n_image)

    def span(self, gens):
        """Closure of the generators plus N under addition and T-action."""
        current = set(self.n_image) | {self.zero} | set(gens)
        scalars = list(self.pair.carrier.elements())
        grown = True
        while grown:
            grown = False
            snapshot = list(current)
            for v in snapshot:
                for a in scalars:
                    w = self.smul(a, v)
                    if w not in current:
                        current.add(w)
                        grown = True
            snapshot = list(current)
            for v, w in itertools.product(snapshot, repeat=2):
                u = self.add(v, w)
                if u not in current:
                    current.add(u)
                    grown = True
        return current


def verify_module_pair(mp, admissible=False):
    report = AxiomReport(subject=mp.name)
    add, smul = mp.add, mp.smul
    c = mp.pair.carrier
    elems = mp.elements
    for v in elems:
        if add(mp.zero, v) != v:
            report.record("zero-neutral", (v,))
        if smul(c.one, v) != v:
            report.record("unit-action", (v,))
        if smul(c.zero, v) != mp.zero:
            report.record("zero-action", (v,))
    for v, w in itertools.product(elems, repeat=2):
        report.checked += 1
        if add(v, w) != add(w, v):
            report.record("add-commutative", (v, w))
    for a in c.elements():
        for v, w in itertools.product(elems, repeat=2):
            if smul(a, add(v, w)) != add(smul(a, v), smul(a, w)):
                report.record("action-distributive", (a, v, w))
    for a, b in itertools.product(list(c.elements()), repeat=2):
        for v in elems:
            if smul(c.mul(a, b), v) != smul(a, smul(b, v)):
                report.record("action-associative", (a, b, v))
            if smul(c.add(a, b), v) != add(smul(a, v), smul(b, v)):
                report.record("action-add-distributive", (a, b, v))
    for a in mp.pair.a0_elements():
        for v in elems:
            report.checked += 1
            if mp.smul(a, v) not in mp.n_image:
                report.record("a0-action-inside-image", (a, v))
    if admissible:
        reach = set([mp.zero]) | set(mp.tangibles)
        grown = True
        while grown:
            grown = False
            for v, w in itertools.product(list(reach), repeat=2):
                u = add(v, w)
                if u not in reach:
                    reach.add(u)
                    grown = True
        for v in elems:
            if v not in reach:
                report.record("tangible-spanning", (v,))
        for v in mp.tangibles:
            if v in mp.n_image:
                report.record("tangible-image-disjoint", (v,))
    return report


def free_module_pair(p, n):
    """(A^(n), A0^(n)) with componentwise operations over a finite pair."""
    if not p.carrier.finite:
        raise PreconditionError("free module pair materializes finite carriers only")
    c = p.carrier
    elems = list(itertools.product(c.elements(), repeat=n))

    def add(v, w):
        return tuple(c.add(a, b) for a, b in zip(v, w))

    def smul(a, v):
        return tuple(c.mul(a, x) for x in v)

    zero = tuple(c.zero for _ in range(n))
    n_image = [v for v in elems if all(p.in_a0(x) for x in v)]
    tang = [v for v in elems
            if sum(1 for x in v if x != c.zero) == 1
            and any(p.is_tangible(x) for x in v)]
    return ModulePair(p, elems, add, smul, zero, n_image, tang,
                      name="free^%d" % n)


def unit_vectors(mp, n):
    c = mp.pair.carrier
    return [tuple(c.one if j == i else c.zero for j in range(n))
            for i in range(n)]


def base_check(mp, S, coeff_pool=None):
    """Spanning: every vector tops some combination of S in the module
    order. Independence: dominated combinations force coefficientwise
    domination. Exhaustive over the coefficient pool."""
    S = list(S)
    pool = list(coeff_pool) if coeff_pool is not None else list(mp.pair.carrier.elements())
    c = mp.pair.carrier

    def combo(coeffs):
        acc = mp.zero
        for a, s in zip(coeffs, S):
            acc = mp.add(acc, mp.smul(a, s))
        return acc

    spans = True
    span_witness = None
    for v in mp.elements:
        if not any(mp.surpasses(combo(coeffs), v)
                   for coeffs in itertools.product(pool, repeat=len(S))):
            spans = False
            span_witness = v
            break
    independent = True
    indep_witness = None
    for c1 in itertools.product(pool, repeat=len(S)):
        for c2 in itertools.product(pool, repeat=len(S)):
            if mp.surpasses(combo(c1), combo(c2)):
                if not all(mp.pair.surpasses(a, b) for a, b in zip(c1, c2)):
                    independent = False
                    indep_witness = (c1, c2)
                    break
        if not independent:
            break
    return {
        "spans": spans, "span_witness": span_witness,
        "independent": independent, "independence_witness": indep_witness,
        "is_base": spans and independent,
    }


def rank(mp, gens_from=None, max_size=6, max_module=16):
    """[M : N]: minimal number of extra generators whose span together with
    N recovers all of M. Exhaustive by increasing cardinality."""
    if len(mp.elements) > max_module:
        raise PreconditionError("module beyond rank search cap (%d elements)"
                                % len(mp.elements))
    target = set(mp.elements)
    pool = list(gens_from) if gens_from is not None else mp.elements
    if mp.span([]) == target:
        return 0
    for k in range(1, max_size + 1):
        for combo in itertools.combinations(pool, k):
            if mp.span(combo) == target:
                return k
    raise PreconditionError("no generating set of size <= %d found" % max_size)


def module_morphisms(mp_src, mp_dst):
    """All maps commuting with addition and the action; exhaustive, for
    small modules only."""
    out = []
    src, dst = mp_src.elements, mp_dst.elements
    scalars = list(mp_src.pair.carrier.elements())
    for images in itertools.product(dst, repeat=len(src)):
        f = dict(zip(src, images))
        if f[mp_src.zero] != mp_dst.zero:
            continue
        ok = all(f[mp_src.add(v, w)] == mp_dst.add(f[v], f[w])
                 for v in src for w in src)
        ok = ok and all(f[mp_src.smul(a, v)] == mp_dst.smul(a, f[v])
                        for a in scalars for v in src)
        if ok:
            out.append(f)
    return out


# ---------------------------------------------------------------------------
# Growth of monoid semialgebras

FREE = "free"
COMMUTATIVE = "commutative"
MATRIX_UNITS = "matrix_units"


class MonoidModel:
    """Multiplicative monoid whose elements label a basis of the extension
    over the base pair. mul may return None for an absorbed (zero) product."""

    def __init__(self, generators, mul, unit, a0_generators=(), name=""):
        self.generators = list(generators)
        self.mul = mul
        self.unit = unit
        self.a0_generators = list(a0_generators)
        self.name = name or "monoid"


def free_words_model(t):
    letters = [("x%d" % i,) for i in range(1, t + 1)]
    return MonoidModel(letters, lambda u, v: u + v, (), name="free-%d" % t)


def commutative_model(t):
    gens = [tuple(1 if j == i else 0 for j in range(t)) for i in range(t)]

    def mul(u, v):
        return tuple(a + b for a, b in zip(u, v))

    return MonoidModel(gens, mul, tuple(0 for _ in range(t)),
                       name="poly-%d" % t)


def matrix_units_model(n):
    gens = [("e", i, j) for i in range(n) for j in range(n)]

    def mul(u, v):
        if u == ("1",):
            return v
        if v == ("1",):
            return u
        return ("e", u[1], v[2]) if u[2] == v[1] else None

    return MonoidModel(gens, mul, ("1",), name="matrix-units-%d" % n)


def build_model(kind, size):
    if kind == FREE:
        return free_words_model(size)
    if kind == COMMUTATIVE:
        return commutative_model(size)
    if kind == MATRIX_UNITS:
        return matrix_units_model(size)
    raise PreconditionError("unknown growth model %r" % kind)


class GrowthProfile:
    def __init__(self, model, d, cumulative, truncated=False):
        self.model = model
        self.d = list(d)  # d[0] is the degree-0 layer (the unit)
        self.cumulative = list(cumulative)
        self.truncated = truncated

    def as_json(self):
        return {"model": self.model.name, "d": self.d,
                "cumulative": self.cumulative, "truncated": self.truncated}


def growth_sequence(model, kmax, max_words=200000):
    """d_k = new basis words of length exactly k, discounting words already
    produced by the quasi-zero generators alone (the graded reading of the
    filtration quotient)."""
    seen = {model.unit}
    seen_a0 = {model.unit}
    level = [model.unit]
    level_a0 = [model.unit]
    d = [1]
    cumulative = [1]
    truncated = False
    for _ in range(kmax):
        nxt = []
        for w in level:
            for g in model.generators:
                u = model.mul(w, g)
                if u is not None and u not in seen:
                    seen.add(u)
                    nxt.append(u)
        nxt_a0 = []
        for w in level_a0:
            for g in model.a0_generators:
                u = model.mul(w, g)
                if u is not None and u not in seen_a0:
                    seen_a0.add(u)
                    nxt_a0.append(u)
        fresh = [u for u in nxt if u not in seen_a0]
        d.append(len(fresh))
        cumulative.append(cumulative[-1] + len(fresh))
        level, level_a0 = nxt, nxt_a0
        if len(seen) > max_words:
            truncated = True
            break
    return GrowthProfile(model, d, cumulative, truncated)


def binomial(n, k):
    return math.comb(n, k) if 0 <= k <= n else 0


def poly_closed_form(t, kmax):
    """Coefficients of 1/(1-lambda)^t up to degree kmax."""
    return [binomial(k + t - 1, t - 1) for k in range(kmax + 1)]


def hilbert_series(profile, kmax=None):
    d = profile.d if kmax is None else profile.d[:kmax + 1]
    return {"coefficients": d[1:], "d0": d[0], "model": profile.model.name}


def gk_dimension(profile):
    """Least-squares slope of log cumulative rank against log k over the
    top half of the profile; geometric cumulative growth raises the
    divergent flag instead of an estimate."""
    cum = profile.cumulative
    if len(cum) < 5:
        raise PreconditionError("need kmax >= 4 for a GK estimate")
    tail = cum[-4:]
    ratios = [b / a for a, b in zip(tail, tail[1:]) if a > 0]
    if ratios and min(ratios) >= 1.5:
        return {"divergent": True, "estimate": None, "kmax": len(cum) - 1}
    start = max(1, (len(cum) - 1) // 2)
    xs = [math.log(k) for k in range(start, len(cum)) if cum[k] > 0]
    ys = [math.log(cum[k]) for k in range(start, len(cum)) if cum[k] > 0]
    if len(set(xs)) < 2:
        raise PreconditionError("not enough usable points for the slope")
    slope, _ = linear_regression(xs, ys)
    return {"divergent": False, "estimate": slope, "kmax": len(cum) - 1}


# ---------------------------------------------------------------------------
# Semidomain and the common-multiple witness


def is_semidomain(p, window=20):
    """Every tangible regular over A0: t b or b t in the quasi-zeros forces
    b there already."""
    c = p.carrier
    tang = p.tangible_elements(window)
    elems = p.elements(window)
    for t in tang:
        for b in elems:
            if p.in_a0(b):
                continue
            if p.in_a0(c.mul(t, b)) or p.in_a0(c.mul(b, t)):
                return Verdict(NO, witness=(t, b))
    return Verdict(YES) if p.finite else Verdict(YES, bound=window, detail="windowed")


def ore_witness(p, a1, a2, degree_bound=2, window=8, require_semidomain=True):
    """Searches tangible-coefficient g, h with g(a1,a2) a1 + h(a1,a2) a2 in
    A0 while g(a1,a2) and h(a1,a2) stay outside; returns b1, b2."""
    if require_semidomain:
        sd = is_semidomain(p, window)
        if sd.status == NO:
            raise PreconditionError("not a semidomain pair: %r" % (sd.witness,))
    c = p.carrier
    pool = [c.zero] + p.tangible_elements(window)
    monos = [(i, j) for i in range(degree_bound + 1)
             for j in range(degree_bound + 1 - i)]

    for total in range(0, 2 * degree_bound + 1):
        for gdeg in range(min(total, degree_bound) + 1):
            hdeg = total - gdeg
            if hdeg > degree_bound:
                continue
            gmonos = [m for m in monos if m[0] + m[1] <= gdeg]
            hmonos = [m for m in monos if m[0] + m[1] <= hdeg]
            for gco in itertools.product(pool, repeat=len(gmonos)):
                b1 = value_at(p, gmonos, gco, a1, a2)
                if b1 is None or p.in_a0(b1):
                    continue
                for hco in itertools.product(pool, repeat=len(hmonos)):
                    b2 = value_at(p, hmonos, hco, a1, a2)
                    if b2 is None or p.in_a0(b2):
                        continue
                    s = c.add(c.mul(b1, a1), c.mul(b2, a2))
                    if p.in_a0(s):
                        return Verdict(YES, witness={"b1": b1, "b2": b2,
                                                     "g": dict(zip(gmonos, gco)),
                                                     "h": dict(zip(hmonos, hco))})
    return Verdict(UNKNOWN if not p.finite else NO, bound=degree_bound,
                   detail="no witness at degree bound")


def value_at(p, monos, coeffs, a1, a2):
    c = p.carrier
    if all(a == c.zero for a in coeffs):
        return None
    acc = c.zero
    for (i, j), a in zip(monos, coeffs):
        if a == c.zero:
            continue
        acc = c.add(acc, c.mul(a, c.mul(c.power(a1, i), c.power(a2, j))))
    return acc

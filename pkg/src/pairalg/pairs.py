"""Semiring pairs: a carrier with distinguished quasi-zeros A0 and tangible
monoid T, surpassing relations, Property N and negation maps, reversibility,
centers, and the degeneracy predicates."""

import itertools
from dataclasses import dataclass

from .errors import (
    NO,
    UNKNOWN,
    YES,
    AxiomReport,
    PreconditionError,
    UnsupportedStructureError,
    Verdict,
)

DEFAULT_WINDOW = 50


class SemiringPair:
    """Carrier semiring A with quasi-zero sub-semiring A0 and tangible monoid
    T. For finite carriers A0 and T are index sets; for symbolic ones they are
    membership predicates, with ``tangible_sample`` supplying a probe set."""

    def __init__(
        self,
        carrier,
        a0,
        tangibles,
        tangible_sample=None,
        surpass="precedes_zero",
        surpass_fn=None,
        negation_hint=None,
        name="",
    ):
        self.carrier = carrier
        self._a0 = a0
        self._tang = tangibles
        self._tangible_sample = tangible_sample
        self.surpass_kind = surpass
        self.surpass_fn = surpass_fn
        self.negation_hint = negation_hint
        self.name = name or ("pair(%s)" % getattr(carrier, "name", "?"))

    # -- carrier delegation

    @property
    def finite(self):
        return self.carrier.finite

    @property
    def zero(self):
        return self.carrier.zero

    @property
    def one(self):
        return self.carrier.one

    def add(self, x, y):
        return self.carrier.add(x, y)

    def mul(self, x, y):
        return self.carrier.mul(x, y)

    def power(self, x, k):
        return self.carrier.power(x, k)

    def label(self, x):
        return self.carrier.label(x)

    def elements(self, window=DEFAULT_WINDOW):
        if self.finite:
            return list(self.carrier.elements())
        return list(self.carrier.sample(window))

    # -- membership

    def in_a0(self, x):
        if callable(self._a0):
            return self._a0(x)
        return x in self._a0

    def is_tangible(self, x):
        if callable(self._tang):
            return self._tang(x)
        return x in self._tang

    def a0_elements(self, window=DEFAULT_WINDOW):
        if not callable(self._a0):
            return sorted(self._a0) if self.finite else list(self._a0)
        return [x for x in self.elements(window) if self.in_a0(x)]

    def tangible_elements(self, window=DEFAULT_WINDOW):
        if self._tangible_sample is not None and not self.finite:
            return list(self._tangible_sample(window))
        if not callable(self._tang):
            return sorted(self._tang)
        return [x for x in self.elements(window) if self.is_tangible(x)]

    # -- surpassing

    def surpasses(self, b1, b2, window=DEFAULT_WINDOW):
        """b1 <= b2 under the pair's surpassing relation. Returns True/False
        on finite carriers, and may return None (unknown within the witness
        window) on symbolic ones."""
        if self.surpass_fn is not None:
            return self.surpass_fn(b1, b2)
        if self.surpass_kind == "subset_inclusion":
            return frozenset_of(self, b1) <= frozenset_of(self, b2)
        # precedes_zero: exists y in A0 with b2 = b1 + y
        for y in self.a0_elements(window):
            if self.add(b1, y) == b2:
                return True
        return False if self.finite else None

    def __repr__(self):
        return "SemiringPair(%s)" % self.name


def frozenset_of(pair, x):
    # elements of power-set carriers are already frozensets of indices
    return x


# ---------------------------------------------------------------------------
# Admissibility and shallowness


def additive_closure(carrier, seeds):
    """Closure of ``seeds`` under the carrier's addition (finite only)."""
    reached = set(seeds)
    frontier = list(seeds)
    while frontier:
        x = frontier.pop()
        for y in list(reached):
            s = carrier.add(x, y)
            if s not in reached:
                reached.add(s)
                frontier.append(s)
    return reached


def verify_admissible(p, window=DEFAULT_WINDOW):
    """Check that (A, A0, T) is an admissible pair: A0 a sub-semiring, T a
    multiplicative monoid, the two disjoint, and T u {0} additively spanning A.
    Spanning is only decided for finite carriers; symbolic pairs carry it as
    construction metadata."""
    report = AxiomReport(subject=p.name)
    if not p.finite:
        report.window = window
    a0 = p.a0_elements(window)
    tang = p.tangible_elements(window)

    if not p.in_a0(p.zero):
        report.record("a0-contains-zero", (p.zero,))
    for x, y in itertools.product(a0, repeat=2):
        report.checked += 1
        if not p.in_a0(p.add(x, y)):
            report.record("a0-add-closed", (x, y))
        if not p.in_a0(p.mul(x, y)):
            report.record("a0-mul-closed", (x, y))

    if not p.is_tangible(p.one):
        report.record("tangibles-contain-one", (p.one,))
    for x, y in itertools.product(tang, repeat=2):
        report.checked += 1
        if not p.is_tangible(p.mul(x, y)):
            report.record("tangible-mul-closed", (x, y))

    for x in p.elements(window):
        if p.in_a0(x) and p.is_tangible(x):
            report.record("a0-tangible-disjoint", (x,))

    if p.finite:
        reached = additive_closure(p.carrier, set(tang) | {p.zero})
        for x in p.elements():
            if x not in reached:
                report.record("tangible-spanning", (x,))
    return report


def is_shallow(p, window=DEFAULT_WINDOW):
    """True iff every (sampled) carrier element is tangible or a quasi-zero."""
    return all(p.is_tangible(x) or p.in_a0(x) for x in p.elements(window))


# ---------------------------------------------------------------------------
# Surpassing relation verification


def verify_surpassing(p, strong=False, window=DEFAULT_WINDOW, assert_shallow_strong=True):
    """Check the surpassing axioms; with ``strong`` also the strengthened
    tangible-equality axiom. Shallow pairs are additionally held to the strong
    form, which is forced for them."""
    report = AxiomReport(subject="%s surpassing" % p.name)
    if not p.finite:
        report.window = window
    elems = p.elements(window)
    tang = p.tangible_elements(window)

    for c in p.a0_elements(window):
        if p.surpasses(p.zero, c, window) is False:
            report.record("zero-below-quasi-zero", (c,))

    # reflexivity and transitivity of the partial preorder, on samples
    limit = elems if p.finite else elems[: min(len(elems), 12)]
    for b in limit:
        if p.surpasses(b, b, window) is False:
            report.record("reflexive", (b,))
    for b1, b2, b3 in itertools.product(limit, repeat=3):
        report.checked += 1
        if (
            p.surpasses(b1, b2, window) is True
            and p.surpasses(b2, b3, window) is True
            and p.surpasses(b1, b3, window) is False
        ):
            report.record("transitive", (b1, b2, b3))

    # additivity (ii) and T-action (iii)
    for b1, b2, c1, c2 in itertools.product(limit, repeat=4):
        if p.surpasses(b1, b2, window) is True and p.surpasses(c1, c2, window) is True:
            if p.surpasses(p.add(b1, c1), p.add(b2, c2), window) is False:
                report.record("additive", (b1, b2, c1, c2))
    for a in tang:
        for b1, b2 in itertools.product(limit, repeat=2):
            if p.surpasses(b1, b2, window) is True:
                if p.surpasses(p.mul(a, b1), p.mul(a, b2), window) is False:
                    report.record("tangible-action", (a, b1, b2))

    # (iv) restriction to equality on tangibles
    for a, b in itertools.product(tang, repeat=2):
        if a != b and p.surpasses(a, b, window) is True:
            report.record("tangible-equality", (a, b))

    want_strong = strong or (assert_shallow_strong and is_shallow(p, window))
    if want_strong:
        for a in tang:
            for b in limit:
                if b != a and p.surpasses(b, a, window) is True:
                    report.record("strong-tangible-equality", (b, a))
    return report


# ---------------------------------------------------------------------------
# Property N, neg-compatibility, negation maps

PN_NONE = "none"
PN_PROPERTY_N = "property_n"
PN_NEG_COMPATIBLE = "neg_compatible"
PN_TANGIBLY_SEPARATING = "tangibly_separating"


@dataclass
class PropertyNStatus:
    status: str
    partners: dict
    property_n: bool = False
    neg_compatible: bool = False
    tangibly_separating: bool = False

    def as_json(self):
        return {
            "status": self.status,
            "property_n": self.property_n,
            "neg_compatible": self.neg_compatible,
            "tangibly_separating": self.tangibly_separating,
        }


def property_n_status(p, window=DEFAULT_WINDOW, separation_cap=20):
    """Classify the pair's quasi-negation behaviour on tangibles: Property N
    (every a has a tangible partner a' with a + a' in A0), neg-compatibility
    (that partner is unique), tangible separation. The reported status is the
    strongest property that holds; the flags carry the full picture."""
    tang = p.tangible_elements(window)
    partners = {}
    for a in tang:
        partners[a] = [a2 for a2 in tang if p.in_a0(p.add(a, a2))]
        if not partners[a]:
            return PropertyNStatus(PN_NONE, partners)
    unique = all(len(v) == 1 for v in partners.values())
    probe = tang if p.finite else tang[:separation_cap]
    separating = True
    for a in probe:
        for c in probe:
            if c == a:
                continue
            if not any(
                p.is_tangible(p.add(c, a2)) and p.in_a0(p.add(a, a2)) for a2 in probe
            ):
                separating = False
                break
        if not separating:
            break
    if separating:
        status = PN_TANGIBLY_SEPARATING
    elif unique:
        status = PN_NEG_COMPATIBLE
    else:
        status = PN_PROPERTY_N
    return PropertyNStatus(
        status,
        partners,
        property_n=True,
        neg_compatible=unique,
        tangibly_separating=separating,
    )


@dataclass
class NegationMap:
    """Additive involution standing in for minus: fn maps carrier elements,
    b + fn(b) lands in A0, and fn fixes A0 setwise."""

    pair: object
    fn: object

    def __call__(self, x):
        return self.fn(x)

    def verify(self, window=DEFAULT_WINDOW):
        p = self.pair
        report = AxiomReport(subject="%s negation" % p.name)
        elems = p.elements(window)
        for b in elems:
            nb = self.fn(b)
            if self.fn(nb) != b:
                report.record("involution", (b,))
            if not p.in_a0(p.add(b, nb)):
                report.record("quasi-zero-sum", (b,))
            if p.in_a0(b) != p.in_a0(nb):
                report.record("a0-stable", (b,))
        limit = elems if p.finite else elems[: min(len(elems), 15)]
        for b, b2 in itertools.product(limit, repeat=2):
            report.checked += 1
            if self.fn(p.add(b, b2)) != p.add(self.fn(b), self.fn(b2)):
                report.record("additive", (b, b2))
            lhs = self.fn(p.mul(b, b2))
            if lhs != p.mul(self.fn(b), b2) or lhs != p.mul(b, self.fn(b2)):
                report.record("multiplicative-slide", (b, b2))
        return report


def derive_negation(p, window=DEFAULT_WINDOW):
    """Extend the unique tangible quasi-negation additively over the carrier.
    Requires a neg-compatible pair; raises on inconsistent extensions."""
    cls = property_n_status(p, window)
    if not cls.neg_compatible:
        raise PreconditionError("pair is not neg-compatible (status: %s)" % cls.status)
    partners = cls.partners

    if not p.finite:
        if p.negation_hint is None:
            raise UnsupportedStructureError(
                "symbolic pair without a negation hint; cannot extend additively"
            )
        neg = NegationMap(p, p.negation_hint)
        rep = neg.verify(window)
        if not rep.valid:
            raise PreconditionError("negation hint fails axioms: %s" % rep.violations[:3])
        return neg

    mapping = {p.zero: p.zero}
    for a, (a2,) in ((a, tuple(v)) for a, v in partners.items()):
        mapping[a] = a2
    changed = True
    while changed:
        changed = False
        known = list(mapping.items())
        for (x, nx), (y, ny) in itertools.product(known, repeat=2):
            s = p.add(x, y)
            ns = p.add(nx, ny)
            if s in mapping:
                if mapping[s] != ns:
                    raise PreconditionError(
                        "inconsistent additive extension at %r: %r vs %r" % (s, mapping[s], ns)
                    )
            else:
                mapping[s] = ns
                changed = True
    missing = [x for x in p.elements() if x not in mapping]
    if missing:
        raise PreconditionError("negation extension does not reach %r" % missing[:3])
    neg = NegationMap(p, mapping.__getitem__)
    rep = neg.verify()
    if not rep.valid:
        raise PreconditionError("derived map fails negation axioms: %s" % rep.violations[:3])
    return neg


# ---------------------------------------------------------------------------
# Reversibility (plain and negated)


def _reversible_at(p, a, window, neg=None):
    unknown = False
    for b in p.elements(window):
        lhs = p.add(b, neg(a)) if neg is not None else p.add(b, a)
        above_zero = p.surpasses(p.zero, lhs, window)
        if above_zero is True:
            dominates = p.surpasses(a, b, window)
            if dominates is False:
                return Verdict(NO, witness=b)
            if dominates is None:
                unknown = True
        elif above_zero is None:
            unknown = True
    if unknown:
        return Verdict(UNKNOWN, bound=window)
    return Verdict(YES)


def check_reversibility(p, a=None, mode="plain", n_max=3, window=DEFAULT_WINDOW):
    """Reversibility: b + a above zero forces b above a. Modes: plain,
    power(n_max), tangible, neg_plain, neg_power."""
    neg = None
    if mode.startswith("neg"):
        neg = derive_negation(p, window)
    if mode == "tangible":
        for t in p.tangible_elements(window):
            v = _reversible_at(p, t, window)
            if v.status != YES:
                return Verdict(v.status, witness=(t, v.witness), bound=window)
        return Verdict(YES)
    if a is None:
        raise PreconditionError("element required for mode %r" % mode)
    if mode in ("plain", "neg_plain"):
        return _reversible_at(p, a, window, neg)
    if mode in ("power", "neg_power"):
        for n in range(1, n_max + 1):
            v = _reversible_at(p, p.power(a, n), window, neg)
            if v.status != YES:
                return Verdict(v.status, witness=(n, v.witness), bound=window)
        return Verdict(YES)
    raise PreconditionError("unknown reversibility mode %r" % mode)


# ---------------------------------------------------------------------------
# Center, weak bipotence, nondegeneracy


def compute_center(p, window=DEFAULT_WINDOW, symbolic_cap=15):
    """Elements z with yz surpassed by zy for every y. Also evaluates the
    cancellation hypothesis (w + y0 + y0' = w forces w + y0 = w) under which
    centrality transfers to the quotient constructions."""
    elems = p.elements(window)
    if not p.finite:
        elems = elems[:symbolic_cap]
    center = []
    for z in elems:
        if all(p.surpasses(p.mul(y, z), p.mul(z, y), window) is True for y in elems):
            center.append(z)
    hyp = True
    a0 = p.a0_elements(window)
    if not p.finite:
        a0 = a0[:symbolic_cap]
    for w in elems:
        for y0, y0p in itertools.product(a0, repeat=2):
            if p.add(p.add(w, y0), y0p) == w and p.add(w, y0) != w:
                hyp = False
                break
        if not hyp:
            break
    return {
        "center": center,
        "is_commutative": len(center) == len(elems),
        "cancellation_hypothesis": hyp,
    }


def check_weakly_bipotent(p, window=DEFAULT_WINDOW):
    """Each pair of tangibles a, a' has a + a' in {a, a'} or a^2 = a'^2."""
    tang = p.tangible_elements(window)
    for a, a2 in itertools.product(tang, repeat=2):
        s = p.add(a, a2)
        if s not in (a, a2) and p.power(a, 2) != p.power(a2, 2):
            return Verdict(NO, witness=(a, a2))
    return Verdict(YES)


def iter_monomials(n_vars, degree_bound):
    """Exponent vectors of total degree <= bound, degree-then-lex order."""
    out = []
    for total in range(degree_bound + 1):
        for combo in itertools.product(range(total + 1), repeat=n_vars):
            if sum(combo) == total:
                out.append(combo)
    return out


def _eval_terms(p, terms, point):
    acc = p.zero
    for expo, coeff in terms:
        val = coeff
        for b, e in zip(point, expo):
            val = p.mul(val, p.power(b, e))
        acc = p.add(acc, val)
    return acc


def check_nondegenerate(p, degree_bound=2, n_vars=1, window=8, max_coeffs=4):
    """Every tangible polynomial within the bounds takes a value outside A0
    at some tangible point. Returns NO with a degenerate polynomial witness
    otherwise. For shallow pairs a nondegenerate verdict simultaneously
    certifies that tangible polynomials attain a tangible value."""
    tang = p.tangible_elements(window)
    coeffs = tang if p.finite else tang[:max_coeffs]
    monos = iter_monomials(n_vars, degree_bound)
    points = list(itertools.product(tang, repeat=n_vars))
    shallow = is_shallow(p, window)
    for r in range(1, len(monos) + 1):
        for support in itertools.combinations(monos, r):
            for cs in itertools.product(coeffs, repeat=r):
                terms = list(zip(support, cs))
                hit = None
                for pt in points:
                    v = _eval_terms(p, terms, pt)
                    if not p.in_a0(v):
                        hit = (pt, v)
                        break
                if hit is None:
                    return Verdict(NO, witness=terms, bound=window)
                if shallow and not p.is_tangible(hit[1]):
                    return Verdict(
                        NO,
                        witness=(terms, hit),
                        detail="shallow pair: value outside A0 is not tangible",
                    )
    return Verdict(YES, bound=None if p.finite else window)

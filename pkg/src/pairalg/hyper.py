"""Semi-hypergroups and semi-hyperrings: multivalued addition, power-set
pairs, and coset quotients in the style of Krasner."""

import itertools

from .errors import AxiomReport, PreconditionError, StructureError
from .pairs import SemiringPair


class SemiHypergroup:
    """Finite set with a commutative, associative multivalued addition and a
    neutral hyperzero. Table entries are frozensets of element indices."""

    def __init__(self, labels, hyperadd, zero, name=""):
        n = len(labels)
        if len(hyperadd) != n or any(len(row) != n for row in hyperadd):
            raise StructureError("hyperadd table is not %dx%d" % (n, n))
        table = []
        for row in hyperadd:
            new = []
            for cell in row:
                fs = frozenset(cell)
                if not fs:
                    raise StructureError("empty hyperaddition value")
                if any(not (0 <= v < n) for v in fs):
                    raise StructureError("hyperadd entry out of range")
                new.append(fs)
            table.append(new)
        self.labels = list(labels)
        self.hyperadd = table
        self.zero = zero
        self.name = name or "semihypergroup"

    @property
    def n(self):
        return len(self.labels)

    def elements(self):
        return range(self.n)

    def hadd(self, x, y):
        return self.hyperadd[x][y]

    def hadd_sets(self, s1, s2):
        out = set()
        for a in s1:
            for b in s2:
                out |= self.hadd(a, b)
        return frozenset(out)

    def label(self, x):
        return self.labels[x]

    def index(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise StructureError("unknown element label %r" % (label,)) from None


class SemiHyperring(SemiHypergroup):
    """Semi-hypergroup plus single-valued multiplication with unit."""

    def __init__(self, labels, hyperadd, mul_table, zero, one, name=""):
        super().__init__(labels, hyperadd, zero, name or "semihyperring")
        n = self.n
        if len(mul_table) != n or any(len(row) != n for row in mul_table):
            raise StructureError("mul table is not %dx%d" % (n, n))
        self.mul_table = [list(r) for r in mul_table]
        self.one = one

    def mul(self, x, y):
        return self.mul_table[x][y]

    def mul_set(self, x, s):
        return frozenset(self.mul(x, b) for b in s)


def verify_semihypergroup(h):
    report = AxiomReport(subject=h.name)
    for a in h.elements():
        if h.hadd(h.zero, a) != frozenset([a]):
            report.record("hyperzero-neutral", (h.zero, a))
    for a, b in itertools.product(h.elements(), repeat=2):
        if h.hadd(a, b) != h.hadd(b, a):
            report.record("hyperadd-commutative", (a, b))
    for a, b, c in itertools.product(h.elements(), repeat=3):
        report.checked += 1
        if h.hadd_sets(h.hadd(a, b), {c}) != h.hadd_sets({a}, h.hadd(b, c)):
            report.record("hyperadd-associative", (a, b, c))
    return report


def verify_semihyperring(h):
    """Exhaustive check of the semi-hyperring axioms: everything from the
    hypergroup plus absorbing hyperzero and elementwise distributivity."""
    report = verify_semihypergroup(h)
    if not isinstance(h, SemiHyperring):
        raise PreconditionError("multiplication table required")
    for a in h.elements():
        if h.mul(h.zero, a) != h.zero or h.mul(a, h.zero) != h.zero:
            report.record("hyperzero-absorbing", (a,))
        if h.mul(h.one, a) != a or h.mul(a, h.one) != a:
            report.record("one-neutral", (a,))
    for a, b, c in itertools.product(h.elements(), repeat=3):
        report.checked += 1
        if h.mul(h.mul(a, b), c) != h.mul(a, h.mul(b, c)):
            report.record("mul-associative", (a, b, c))
        if h.mul_set(a, h.hadd(b, c)) != h.hadd_sets(h.mul_set(a, {b}), h.mul_set(a, {c})):
            report.record("left-distributive", (a, b, c))
        rhs = frozenset(h.mul(x, c) for x in h.hadd(a, b))
        if rhs != h.hadd_sets({h.mul(a, c)}, {h.mul(b, c)}):
            report.record("right-distributive", (a, b, c))
    return report


def krasner_hyperfield():
    """K = {0, 1} with 1 [+] 1 = {0, 1}."""
    return SemiHyperring(
        labels=["0", "1"],
        hyperadd=[[{0}, {1}], [{1}, {0, 1}]],
        mul_table=[[0, 0], [0, 1]],
        zero=0,
        one=1,
        name="krasner",
    )


# ---------------------------------------------------------------------------
# Power-set pair

A0_CONTAINS_ZERO = "contains_zero"
A0_SIZE_GE_TWO = "size_ge_two"


def powerset_pair(h, a0_choice=A0_CONTAINS_ZERO):
    """The pair on the additive closure of singletons inside the power set of
    a semi-hyperring. Addition is elementwise, tangibles are the nonzero
    singletons, surpassing is set inclusion. Only subsets reachable from
    singletons are materialized."""
    if not isinstance(h, SemiHyperring):
        raise PreconditionError("power-set pair needs multiplication on the base")
    rep = verify_semihyperring(h)
    if not rep.valid:
        raise PreconditionError("base fails semi-hyperring axioms: %s" % rep.violations[:3])

    singletons = [frozenset([a]) for a in h.elements()]
    carrier = set(singletons)
    frontier = list(singletons)
    while frontier:
        s = frontier.pop()
        for t in list(carrier):
            u = h.hadd_sets(s, t)
            if u not in carrier:
                carrier.add(u)
                frontier.append(u)
    elems = sorted(carrier, key=lambda s: (len(s), sorted(s)))

    class PowersetCarrier:
        finite = True
        name = "powerset(%s)" % h.name
        zero = frozenset([h.zero])
        one = frozenset([h.one])

        def elements(self):
            return list(elems)

        def sample(self, window=None):
            return list(elems)

        def add(self, x, y):
            return h.hadd_sets(x, y)

        def mul(self, x, y):
            return frozenset(h.mul(a, b) for a in x for b in y)

        def label(self, x):
            return "{%s}" % ",".join(h.label(a) for a in sorted(x))

        def sum(self, xs):
            acc = self.zero
            for x in xs:
                acc = self.add(acc, x)
            return acc

        def power(self, x, k):
            acc = self.one
            for _ in range(k):
                acc = self.mul(acc, x)
            return acc

    carrier_obj = PowersetCarrier()
    if a0_choice == A0_CONTAINS_ZERO:
        a0 = frozenset(s for s in elems if h.zero in s)
    elif a0_choice == A0_SIZE_GE_TWO:
        # the carrier zero {0} is kept in A0 so it stays a sub-semiring with 0
        a0 = frozenset(s for s in elems if len(s) >= 2 or s == carrier_obj.zero)
    else:
        raise PreconditionError("unknown a0 choice %r" % a0_choice)
    tangibles = frozenset(
        s for s in elems if len(s) == 1 and s != carrier_obj.zero and s not in a0
    )
    return SemiringPair(
        carrier_obj,
        a0,
        tangibles,
        surpass="subset_inclusion",
        name="%s[%s]" % (carrier_obj.name, a0_choice),
    )


# ---------------------------------------------------------------------------
# Coset quotients


def _check_subgroup(mul, one, elements, g):
    g = list(g)
    if one not in g:
        raise PreconditionError("subgroup must contain the unit")
    for a, b in itertools.product(g, repeat=2):
        if mul(a, b) not in g:
            raise PreconditionError("subgroup not multiplicatively closed at (%r, %r)" % (a, b))
    for a in g:
        if not any(mul(a, b) == one for b in g):
            raise PreconditionError("element %r has no inverse in subgroup" % (a,))
    return g


def krasner_quotient(r, g):
    """Coset semi-hyperring R/G of a finite commutative semiring by a
    multiplicative subgroup: [r] boxplus [r'] collects the cosets of all sums
    of representatives. Coset representative is the lowest element index."""
    if not r.finite:
        raise PreconditionError("symbolic carriers need sampled_krasner_quotient")
    g = _check_subgroup(r.mul, r.one, list(r.elements()), g)

    def coset(x):
        return frozenset(r.mul(x, a) for a in g)

    cosets = []
    seen = {}
    for x in r.elements():
        c = coset(x)
        if c not in seen:
            seen[c] = len(cosets)
            cosets.append(c)
    reps = [min(c) for c in cosets]

    def cidx(x):
        return seen[coset(x)]

    hyperadd = []
    for c1 in cosets:
        row = []
        for c2 in cosets:
            row.append(frozenset(cidx(r.add(x, y)) for x in c1 for y in c2))
        hyperadd.append(row)
    mul_table = [[cidx(r.mul(reps[i], reps[j])) for j in range(len(cosets))] for i in range(len(cosets))]
    labels = ["[%s]" % r.label(rep) for rep in reps]
    out = SemiHyperring(
        labels, hyperadd, mul_table,
        zero=cidx(r.zero), one=cidx(r.one),
        name="%s/G" % r.name,
    )
    rep_check = verify_semihyperring(out)
    if not rep_check.valid:
        raise PreconditionError("quotient fails axioms: %s" % rep_check.violations[:3])
    return out


def sampled_krasner_quotient(r, coset_of, sample):
    """Coset quotient of a symbolic semiring, given a computable coset-label
    map. The coset structure must close on finitely many labels within the
    sample; otherwise the construction is rejected."""
    reps = {}
    for x in sample:
        reps.setdefault(coset_of(x), x)
    labels = sorted(reps)
    pos = {lab: i for i, lab in enumerate(labels)}
    by_label = {lab: [x for x in sample if coset_of(x) == lab] for lab in labels}
    hyperadd = []
    for l1 in labels:
        row = []
        for l2 in labels:
            sums = set()
            for x in by_label[l1]:
                for y in by_label[l2]:
                    c = coset_of(r.add(x, y))
                    if c not in pos:
                        raise PreconditionError("coset structure does not close at %r" % (c,))
                    sums.add(pos[c])
            row.append(frozenset(sums))
        hyperadd.append(row)
    mul_table = []
    for l1 in labels:
        row = []
        for l2 in labels:
            c = coset_of(r.mul(reps[l1], reps[l2]))
            if c not in pos:
                raise PreconditionError("coset structure does not close at %r" % (c,))
            row.append(pos[c])
        mul_table.append(row)
    return SemiHyperring(
        [str(l) for l in labels], hyperadd, mul_table,
        zero=pos[coset_of(r.zero)], one=pos[coset_of(r.one)],
        name="%s/G(sampled)" % r.name,
    )


def hyper_coset_quotient(h, g):
    """Coset quotient of a finite semi-hyperring by a subgroup of its
    multiplicative monoid."""
    g = _check_subgroup(h.mul, h.one, list(h.elements()), g)

    def coset(x):
        return frozenset(h.mul(x, a) for a in g)

    cosets = []
    seen = {}
    for x in h.elements():
        c = coset(x)
        if c not in seen:
            seen[c] = len(cosets)
            cosets.append(c)
    reps = [min(c) for c in cosets]

    def cidx(x):
        return seen[coset(x)]

    hyperadd = []
    for c1 in cosets:
        row = []
        for c2 in cosets:
            out = set()
            for x in c1:
                for y in c2:
                    out |= {cidx(z) for z in h.hadd(x, y)}
            row.append(frozenset(out))
        hyperadd.append(row)
    mul_table = [[cidx(h.mul(reps[i], reps[j])) for j in range(len(cosets))] for i in range(len(cosets))]
    labels = ["[%s]" % h.label(rep) for rep in reps]
    out = SemiHyperring(
        labels, hyperadd, mul_table,
        zero=cidx(h.zero), one=cidx(h.one),
        name="%s/G" % h.name,
    )
    rep_check = verify_semihyperring(out)
    if not rep_check.valid:
        raise PreconditionError("quotient fails axioms: %s" % rep_check.violations[:3])
    return out


def find_isomorphism(h1, h2, max_size=6):
    """Exhaustive bijection search witnessing an isomorphism of finite
    semi-hyperrings; None if none exists."""
    if h1.n != h2.n:
        return None
    if h1.n > max_size:
        raise PreconditionError("isomorphism search capped at %d elements" % max_size)
    for perm in itertools.permutations(range(h2.n)):
        if perm[h1.zero] != h2.zero or perm[h1.one] != h2.one:
            continue
        ok = True
        for a, b in itertools.product(range(h1.n), repeat=2):
            if frozenset(perm[x] for x in h1.hadd(a, b)) != h2.hadd(perm[a], perm[b]):
                ok = False
                break
            if perm[h1.mul(a, b)] != h2.mul(perm[a], perm[b]):
                ok = False
                break
        if ok:
            return dict(enumerate(perm))
    return None


def semiring_as_hyperring(s):
    """View a finite semiring as a single-valued semi-hyperring."""
    hyperadd = [[frozenset([s.add(i, j)]) for j in s.elements()] for i in s.elements()]
    return SemiHyperring(
        list(s.labels), hyperadd, [list(r) for r in s.mul_table],
        zero=s.zero, one=s.one, name=s.name,
    )

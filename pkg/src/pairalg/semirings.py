"""Carrier semirings: finite table-based, symbolic infinite, and the named
constructions (Boolean, truncated max-plus, max-plus integers, supertropical
extensions, doubling)."""

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import AxiomReport, StructureError, UnsupportedStructureError
from .pairs import SemiringPair

DEFAULT_WINDOW = 50


class FiniteSemiring:
    """A finite carrier given by Cayley tables. Elements are indices into
    ``labels``; the constructor validates shape, not axioms."""

    finite = True

    def __init__(self, labels, add_table, mul_table, zero, one, name=""):
        n = len(labels)
        if len(set(labels)) != n:
            raise StructureError("duplicate element labels")
        for which, table in (("add", add_table), ("mul", mul_table)):
            if len(table) != n or any(len(row) != n for row in table):
                raise StructureError("%s table is not %dx%d" % (which, n, n))
            for row in table:
                for v in row:
                    if not (0 <= v < n):
                        raise StructureError("%s table entry %r out of range" % (which, v))
        if not (0 <= zero < n and 0 <= one < n):
            raise StructureError("zero/one index out of range")
        self.labels = list(labels)
        self.add_table = [list(r) for r in add_table]
        self.mul_table = [list(r) for r in mul_table]
        self.zero = zero
        self.one = one
        self.name = name or "semiring"

    @property
    def n(self):
        return len(self.labels)

    def elements(self):
        return range(self.n)

    def sample(self, window=None):
        return list(self.elements())

    def add(self, x, y):
        return self.add_table[x][y]

    def mul(self, x, y):
        return self.mul_table[x][y]

    def label(self, x):
        return self.labels[x]

    def index(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise StructureError("unknown element label %r" % (label,)) from None

    def sum(self, xs):
        acc = self.zero
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def prod(self, xs):
        acc = self.one
        for x in xs:
            acc = self.mul(acc, x)
        return acc

    def power(self, x, k):
        acc = self.one
        for _ in range(k):
            acc = self.mul(acc, x)
        return acc

    def __repr__(self):
        return "FiniteSemiring(%s, n=%d)" % (self.name, self.n)


@dataclass
class SymbolicSemiring:
    """An infinite carrier presented by rules. ``sample_fn(window)`` yields a
    finite probe set; axiom checks on such carriers are windowed, never
    exhaustive."""

    name: str
    add_fn: object
    mul_fn: object
    zero: object
    one: object
    sample_fn: object
    label_fn: object = repr
    finite: bool = field(default=False, init=False)

    def add(self, x, y):
        return self.add_fn(x, y)

    def mul(self, x, y):
        return self.mul_fn(x, y)

    def sample(self, window=DEFAULT_WINDOW):
        return self.sample_fn(window)

    def label(self, x):
        return self.label_fn(x)

    def sum(self, xs):
        acc = self.zero
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def prod(self, xs):
        acc = self.one
        for x in xs:
            acc = self.mul(acc, x)
        return acc

    def power(self, x, k):
        acc = self.one
        for _ in range(k):
            acc = self.mul(acc, x)
        return acc

    def __repr__(self):
        return "SymbolicSemiring(%s)" % self.name


def verify_semiring_axioms(s, window=DEFAULT_WINDOW, triples=2000, seed=0):
    """Check the semiring axioms on ``s``: exhaustively over all triples for a
    finite carrier, over sampled triples inside the window for a symbolic one."""
    report = AxiomReport(subject=getattr(s, "name", "semiring"))
    if s.finite:
        elems = list(s.elements())
        triple_iter = itertools.product(elems, repeat=3)
    else:
        elems = list(s.sample(window))
        rng = random.Random(seed)
        triple_iter = (tuple(rng.choice(elems) for _ in range(3)) for _ in range(triples))
        report.window = window

    for x in elems:
        if s.add(s.zero, x) != x or s.add(x, s.zero) != x:
            report.record("zero-neutral", (x,))
        if s.mul(s.one, x) != x or s.mul(x, s.one) != x:
            report.record("one-neutral", (x,))
        if s.mul(s.zero, x) != s.zero or s.mul(x, s.zero) != s.zero:
            report.record("zero-absorbing", (x,))
    if s.finite:
        for x, y in itertools.product(elems, repeat=2):
            if s.add(x, y) != s.add(y, x):
                report.record("add-commutative", (x, y))

    for x, y, z in triple_iter:
        report.checked += 1
        if not s.finite and s.add(x, y) != s.add(y, x):
            report.record("add-commutative", (x, y))
        if s.add(s.add(x, y), z) != s.add(x, s.add(y, z)):
            report.record("add-associative", (x, y, z))
        if s.mul(s.mul(x, y), z) != s.mul(x, s.mul(y, z)):
            report.record("mul-associative", (x, y, z))
        if s.mul(x, s.add(y, z)) != s.add(s.mul(x, y), s.mul(x, z)):
            report.record("left-distributive", (x, y, z))
        if s.mul(s.add(x, y), z) != s.add(s.mul(x, z), s.mul(y, z)):
            report.record("right-distributive", (x, y, z))
    return report


# ---------------------------------------------------------------------------
# Named carriers


def boolean_semiring():
    """B = {0,1} with 1+1 = 1."""
    return FiniteSemiring(
        labels=["0", "1"],
        add_table=[[0, 1], [1, 1]],
        mul_table=[[0, 0], [0, 1]],
        zero=0,
        one=1,
        name="boolean",
    )


def nmax_trunc(n):
    """Truncated max-plus: {-inf, 0, 1, ..., n} with max and saturating plus.
    Saturation at the top element keeps associativity on a finite table; this
    approximates N_max for closure experiments."""
    if n < 1:
        raise StructureError("truncation bound must be >= 1")
    labels = ["-inf"] + [str(i) for i in range(n + 1)]
    size = n + 2

    def val(i):
        return None if i == 0 else i - 1

    def idx(v):
        return 0 if v is None else min(v, n) + 1

    add = [[idx(max_opt(val(i), val(j))) for j in range(size)] for i in range(size)]
    mul = [
        [idx(None if val(i) is None or val(j) is None else val(i) + val(j)) for j in range(size)]
        for i in range(size)
    ]
    return FiniteSemiring(labels, add, mul, zero=0, one=1, name="nmax_trunc(%d)" % n)


def max_opt(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return max(a, b)


def zmax_symbolic():
    """Z_max: integers with -inf (None); addition is max, multiplication is +."""

    def add(x, y):
        return max_opt(x, y)

    def mul(x, y):
        return None if x is None or y is None else x + y

    def sample(window):
        return [None] + list(range(-window, window + 1))

    return SymbolicSemiring(
        name="zmax",
        add_fn=add,
        mul_fn=mul,
        zero=None,
        one=0,
        sample_fn=sample,
        label_fn=lambda x: "-inf" if x is None else str(x),
    )


def nat_plus_times():
    """The natural numbers with ordinary + and *."""
    return SymbolicSemiring(
        name="nat",
        add_fn=lambda x, y: x + y,
        mul_fn=lambda x, y: x * y,
        zero=0,
        one=1,
        sample_fn=lambda window: list(range(window + 1)),
        label_fn=str,
    )


def nonneg_rationals():
    """Q>=0 with ordinary arithmetic (used for coset quotient examples)."""

    def sample(window):
        out = {Fraction(0)}
        for p in range(1, min(window, 8) + 1):
            for q in range(1, 5):
                out.add(Fraction(p, q))
        return sorted(out)

    return SymbolicSemiring(
        name="nonneg_rationals",
        add_fn=lambda x, y: x + y,
        mul_fn=lambda x, y: x * y,
        zero=Fraction(0),
        one=Fraction(1),
        sample_fn=sample,
        label_fn=str,
    )


def build_named(name, n=None):
    """Build a named carrier. ``n`` is required for truncations."""
    if name == "boolean":
        return boolean_semiring()
    if name == "nmax_trunc":
        if n is None:
            raise StructureError("nmax_trunc needs a truncation bound")
        return nmax_trunc(n)
    if name == "zmax_symbolic":
        return zmax_symbolic()
    if name == "nat_plus_times":
        return nat_plus_times()
    raise StructureError("unknown named semiring %r" % name)


# ---------------------------------------------------------------------------
# Supertropical extension

# Symbolic supertropical elements: ("z",) is zero, ("t", v) tangible of value
# v, ("g", v) ghost of value v.
ST_ZERO = ("z",)


def st_label(x):
    if x == ST_ZERO:
        return "0"
    tag, v = x
    return str(v) + ("v" if tag == "g" else "")


@dataclass
class OrderedMonoid:
    """A totally ordered multiplicative monoid: finite element list in
    ascending order, or ``elements=None`` for the symbolic integers under +."""

    op: object
    unit: object
    elements: list | None = None

    def sample(self, window):
        if self.elements is not None:
            return list(self.elements)
        return list(range(-window, window + 1))


def trivial_monoid():
    return OrderedMonoid(op=lambda a, b: a, unit=1, elements=[1])


def max_plus_integers():
    return OrderedMonoid(op=lambda a, b: a + b, unit=0, elements=None)


def max_plus_naturals_monoid():
    # still symbolic (infinite); sampled on [0, window]
    m = OrderedMonoid(op=lambda a, b: a + b, unit=0, elements=None)
    m.sample = lambda window: list(range(window + 1))
    return m


def _st_add(m):
    def add(x, y):
        if x == ST_ZERO:
            return y
        if y == ST_ZERO:
            return x
        tx, vx = x
        ty, vy = y
        if vx == vy:
            return ("g", vx)
        return x if _gt(m, vx, vy) else y

    return add


def _gt(m, a, b):
    if m.elements is not None:
        return m.elements.index(a) > m.elements.index(b)
    return a > b


def _st_mul(m):
    def mul(x, y):
        if x == ST_ZERO or y == ST_ZERO:
            return ST_ZERO
        tx, vx = x
        ty, vy = y
        tag = "t" if tx == ty == "t" else "g"
        return (tag, m.op(vx, vy))

    return mul


def supertropical_extension(t):
    """The supertropical pair over a totally ordered multiplicative monoid:
    carrier T u Tv u {0}, ghosts a+a = av, quasi-zeros are the ghosts with 0."""
    if not isinstance(t, OrderedMonoid):
        raise UnsupportedStructureError("supertropical extension needs an ordered monoid")
    add = _st_add(t)
    mul = _st_mul(t)
    if t.elements is not None:
        vals = list(t.elements)
        elems = [ST_ZERO] + [("t", v) for v in vals] + [("g", v) for v in vals]
        pos = {e: i for i, e in enumerate(elems)}
        labels = [st_label(e) for e in elems]
        add_table = [[pos[add(a, b)] for b in elems] for a in elems]
        mul_table = [[pos[mul(a, b)] for b in elems] for a in elems]
        carrier = FiniteSemiring(
            labels, add_table, mul_table,
            zero=0, one=pos[("t", t.unit)],
            name="supertropical(%d)" % len(vals),
        )
        a0 = frozenset([0] + [pos[("g", v)] for v in vals])
        tang = frozenset(pos[("t", v)] for v in vals)
        return SemiringPair(carrier, a0, tang, name=carrier.name)

    def st_surpass(b1, b2):
        # b1 precedes b2 (witness y in A0) has a closed form here
        if b1 == b2:
            return True
        if b2 == ST_ZERO or b2[0] != "g":
            return False
        return b1 == ST_ZERO or not _gt(t, b1[1], b2[1])

    carrier = SymbolicSemiring(
        name="supertropical_symbolic",
        add_fn=add,
        mul_fn=mul,
        zero=ST_ZERO,
        one=("t", t.unit),
        sample_fn=lambda window: [ST_ZERO]
        + [("t", v) for v in t.sample(window)]
        + [("g", v) for v in t.sample(window)],
        label_fn=st_label,
    )
    return SemiringPair(
        carrier,
        a0=lambda x: x == ST_ZERO or x[0] == "g",
        tangibles=lambda x: x != ST_ZERO and x[0] == "t",
        tangible_sample=lambda window: [("t", v) for v in t.sample(window)],
        surpass_fn=st_surpass,
        negation_hint=lambda x: x,
        name=carrier.name,
    )


def supertropical_integers():
    """Supertropical pair over max-plus Z (symbolic)."""
    return supertropical_extension(max_plus_integers())


def supertropical_naturals():
    """Supertropical pair over max-plus N (symbolic)."""
    return supertropical_extension(max_plus_naturals_monoid())


# ---------------------------------------------------------------------------
# Doubling


def double(s):
    """Doubling of a carrier: A x A with componentwise addition and twist
    multiplication; the diagonal plays the quasi-zeros, the two axes (minus
    the origin, which admissibility excludes) are the tangibles."""
    if s.finite:
        pairs = list(itertools.product(s.elements(), repeat=2))
        pos = {p: i for i, p in enumerate(pairs)}
        labels = ["(%s,%s)" % (s.label(a), s.label(b)) for a, b in pairs]

        def tadd(x, y):
            return (s.add(x[0], y[0]), s.add(x[1], y[1]))

        def tmul(x, y):
            return (
                s.add(s.mul(x[0], y[0]), s.mul(x[1], y[1])),
                s.add(s.mul(x[0], y[1]), s.mul(x[1], y[0])),
            )

        add_table = [[pos[tadd(a, b)] for b in pairs] for a in pairs]
        mul_table = [[pos[tmul(a, b)] for b in pairs] for a in pairs]
        carrier = FiniteSemiring(
            labels, add_table, mul_table,
            zero=pos[(s.zero, s.zero)], one=pos[(s.one, s.zero)],
            name="double(%s)" % s.name,
        )
        a0 = frozenset(pos[(a, a)] for a in s.elements())
        tang = frozenset(
            pos[p]
            for p in pairs
            if (p[0] == s.zero) != (p[1] == s.zero)
        )
        return SemiringPair(carrier, a0, tang, name=carrier.name)

    def tadd(x, y):
        return (s.add(x[0], y[0]), s.add(x[1], y[1]))

    def tmul(x, y):
        return (
            s.add(s.mul(x[0], y[0]), s.mul(x[1], y[1])),
            s.add(s.mul(x[0], y[1]), s.mul(x[1], y[0])),
        )

    carrier = SymbolicSemiring(
        name="double(%s)" % s.name,
        add_fn=tadd,
        mul_fn=tmul,
        zero=(s.zero, s.zero),
        one=(s.one, s.zero),
        sample_fn=lambda window: [
            (a, b) for a in s.sample(window) for b in s.sample(window)
        ],
        label_fn=lambda x: "(%s,%s)" % (s.label(x[0]), s.label(x[1])),
    )
    return SemiringPair(
        carrier,
        a0=lambda x: x[0] == x[1],
        tangibles=lambda x: (x[0] == s.zero) != (x[1] == s.zero),
        tangible_sample=lambda window: [
            (a, s.zero) for a in s.sample(window) if a != s.zero
        ]
        + [(s.zero, a) for a in s.sample(window) if a != s.zero],
        negation_hint=lambda x: (x[1], x[0]),
        name=carrier.name,
    )

"""Formal polynomials over a pair carrier: convolution product, evaluation,
polynomial pairs, roots with quasi-zero values, twist substitution, and
geometric congruences on points."""

import itertools

from .errors import PreconditionError
from .pairs import iter_monomials


class Polynomial:
    """Finite-support map from exponent tuples to nonzero coefficients."""

    def __init__(self, pair, nvars, terms):
        self.pair = pair
        self.nvars = nvars
        zero = pair.carrier.zero
        self.terms = {}
        for exp, c in dict(terms).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise PreconditionError("exponent arity mismatch")
            if c != zero:
                self.terms[exp] = c

    @classmethod
    def constant(cls, pair, nvars, c):
        return cls(pair, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, pair, nvars, i=0):
        exp = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(pair, nvars, {exp: pair.carrier.one})

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def coeff(self, exp):
        return self.terms.get(tuple(exp), self.pair.carrier.zero)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]))

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        c = self.pair.carrier
        terms = dict(self.terms)
        for exp, v in other.terms.items():
            terms[exp] = c.add(terms[exp], v) if exp in terms else v
        return Polynomial(self.pair, self.nvars, terms)

    def __mul__(self, other):
        c = self.pair.carrier
        terms = {}
        for e1, v1 in self.terms.items():
            for e2, v2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                prod = c.mul(v1, v2)
                terms[exp] = c.add(terms[exp], prod) if exp in terms else prod
        return Polynomial(self.pair, self.nvars, terms)

    def scale(self, a):
        c = self.pair.carrier
        return Polynomial(self.pair, self.nvars,
                          {e: c.mul(a, v) for e, v in self.terms.items()})

    def __call__(self, point):
        return poly_eval(self, point)

    def __repr__(self):
        if not self.terms:
            return "Polynomial(0)"
        lab = self.pair.carrier.label
        bits = []
        for exp, v in self.sorted_terms():
            mono = "*".join("x%d^%d" % (i, k) for i, k in enumerate(exp) if k)
            bits.append(lab(v) + ("*" + mono if mono else ""))
        return "Polynomial(%s)" % " + ".join(bits)


def poly_eval(f, point):
    """Evaluation homomorphism at a carrier tuple."""
    point = tuple(point)
    if len(point) != f.nvars:
        raise PreconditionError("point arity mismatch")
    c = f.pair.carrier
    total = c.zero
    for exp, v in f.terms.items():
        term = v
        for b, k in zip(point, exp):
            if k:
                term = c.mul(term, c.power(b, k))
        total = c.add(total, term)
    return total


def functional_equal(f, g, domain):
    """Pointwise agreement over explicit tuples; formal inequality is common."""
    return all(poly_eval(f, pt) == poly_eval(g, pt) for pt in domain)


def is_tangible_poly(f):
    """All coefficients tangible; the zero polynomial does not qualify."""
    return bool(f.terms) and all(f.pair.is_tangible(v) for v in f.terms.values())


def find_preceq_roots(f, domain):
    """Tuples from the domain where the value lands in A0, in scan order."""
    pts = itertools.product(domain, repeat=f.nvars)
    return [pt for pt in pts if f.pair.in_a0(poly_eval(f, pt))]


# ---------------------------------------------------------------------------
# Polynomial pairs

COEFFWISE = "coeffwise"
SHALLOWIZED = "shallowized"


class PolynomialPair:
    """Pair structure on polynomials over a base pair. Quasi-zeros are the
    coefficientwise-A0 polynomials; the shallowized flavor throws in every
    sum of two or more monomials, which restores shallowness. Tangibles are
    the monomials with tangible coefficient either way."""

    def __init__(self, pair, nvars=1, flavor=COEFFWISE):
        if flavor not in (COEFFWISE, SHALLOWIZED):
            raise PreconditionError("unknown flavor %r" % flavor)
        self.base = pair
        self.nvars = nvars
        self.flavor = flavor
        self.carrier = PolynomialCarrier(self)
        self.name = "poly(%s)" % pair.name

    def poly(self, terms):
        return Polynomial(self.base, self.nvars, terms)

    def surpasses(self, f, g, window=None):
        """f below g via a coefficientwise quasi-zero top-up; decided
        coefficient by coefficient against the base relation."""
        exps = set(f.terms) | set(g.terms)
        zero = self.base.carrier.zero
        out = True
        for e in exps:
            v = self.base.surpasses(f.terms.get(e, zero), g.terms.get(e, zero))
            if v is False:
                return False
            if v is None:
                out = None
        return out

    def in_a0(self, f):
        if all(self.base.in_a0(v) for v in f.terms.values()):
            return True
        return self.flavor == SHALLOWIZED and len(f.terms) >= 2

    def is_tangible(self, f):
        return len(f.terms) == 1 and self.base.is_tangible(next(iter(f.terms.values())))

    def is_shallow_at(self, f):
        return self.in_a0(f) or self.is_tangible(f)

    def enumerate(self, degree, coeffs=None):
        """All polynomials of total degree <= degree with coefficients from
        the given list (defaults to the whole finite carrier)."""
        if coeffs is None:
            coeffs = list(self.base.carrier.elements())
        monos = [m for m in iter_monomials(self.nvars, degree) if sum(m) <= degree]
        for choice in itertools.product(coeffs, repeat=len(monos)):
            yield self.poly(dict(zip(monos, choice)))


class PolynomialCarrier:
    """Carrier view of a polynomial pair: delegates the semiring operations
    to formal polynomial arithmetic so code written against carriers works
    on polynomials too. Sampling enumerates low-degree polynomials."""

    finite = False

    def __init__(self, pp):
        self._pp = pp
        base = pp.base.carrier
        self.zero = Polynomial(pp.base, pp.nvars, {})
        exp0 = tuple(0 for _ in range(pp.nvars))
        self.one = Polynomial(pp.base, pp.nvars, {exp0: base.one})
        self.name = "poly(%s)" % getattr(base, "name", "?")

    def add(self, f, g):
        return f + g

    def mul(self, f, g):
        return f * g

    def power(self, f, k):
        acc = self.one
        for _ in range(k):
            acc = acc * f
        return acc

    def sample(self, window=8):
        pp = self._pp
        base = pp.base
        coeffs = (list(base.carrier.elements()) if base.carrier.finite
                  else list(base.carrier.sample(max(2, window // 4))))
        out = []
        for f in pp.enumerate(1, coeffs=coeffs):
            out.append(f)
            if len(out) >= window * window:
                break
        return out

    def label(self, f):
        return repr(f)


def build_polynomial_pair(p, nvars=1, flavor=COEFFWISE):
    return PolynomialPair(p, nvars, flavor)


# ---------------------------------------------------------------------------
# Twist substitution and geometric congruences


def twist_substitute(fpair, zpair):
    """(f1,f2) applied to a point pair: (f1(z1)+f2(z2), f1(z2)+f2(z1))."""
    f1, f2 = fpair
    z1, z2 = zpair
    c = f1.pair.carrier
    return (c.add(poly_eval(f1, z1), poly_eval(f2, z2)),
            c.add(poly_eval(f1, z2), poly_eval(f2, z1)))


def compose_star(f, g):
    """Substitution product f(g): on monomials, c lambda^k composed with
    d lambda^l gives c d^k lambda^(k l). This is the multiplication under
    which twist products interchange with twist substitution; the
    interchange law is exact on monomials. One variable only."""
    if f.nvars != 1 or g.nvars != 1:
        raise PreconditionError("composition product is single-variable")
    out = Polynomial(f.pair, 1, {})
    gp = Polynomial.constant(f.pair, 1, f.pair.carrier.one)
    k_prev = 0
    for (k,), v in sorted(f.terms.items()):
        for _ in range(k - k_prev):
            gp = gp * g
        k_prev = k
        out = out + gp.scale(v)
    return out


def twist_compose_product(x, y):
    f1, f2 = x
    f3, f4 = y
    return (compose_star(f1, f3) + compose_star(f2, f4),
            compose_star(f1, f4) + compose_star(f2, f3))


def check_mixed_associativity(fpair, gpair, z):
    """Compares ((f)*(g)) at z against f at (g at z). Returns "equal",
    "surpasses" when the combined side dominates coordinatewise in the
    surpassing order (ghost ties can strictly dominate), or "fails"."""
    lhs = twist_substitute(twist_compose_product(fpair, gpair), z)
    inner = twist_substitute(gpair, z)
    rhs = twist_substitute(fpair, ((inner[0],), (inner[1],)))
    if lhs == rhs:
        return "equal"
    p = fpair[0].pair
    if all(p.surpasses(r, l) for r, l in zip(rhs, lhs)):
        return "surpasses"
    return "fails"


def twist_conv_product(x, y):
    f1, f2 = x
    f3, f4 = y
    return (f1 * f3 + f2 * f4, f1 * f4 + f2 * f3)


class GeometricCongruence:
    """Pairs of polynomials whose twist substitution lands in A0 x A0 at
    every listed point pair. Membership is decided by evaluation, so it is
    not bounded by degree; enumeration of members is."""

    def __init__(self, p, points, nvars=1):
        self.pair = p
        self.nvars = nvars
        self.points = [(tuple(z1), tuple(z2)) for z1, z2 in points]

    def contains(self, f1, f2):
        for z in self.points:
            v1, v2 = twist_substitute((f1, f2), z)
            if not (self.pair.in_a0(v1) and self.pair.in_a0(v2)):
                return False
        return True

    def members_up_to(self, degree, coeffs=None):
        pp = PolynomialPair(self.pair, self.nvars)
        polys = list(pp.enumerate(degree, coeffs))
        return [(f1, f2) for f1 in polys for f2 in polys if self.contains(f1, f2)]

    def semiprime_check(self, degree, sandwich_degree=None, coeffs=None):
        """Element criterion over the truncated window, with convolution
        twist products: any excluded pair must admit a sandwich that stays
        out. Returns (holds, witness)."""
        if sandwich_degree is None:
            sandwich_degree = degree
        pp = PolynomialPair(self.pair, self.nvars)
        polys = list(pp.enumerate(degree, coeffs))
        mids = [(g1, g2) for g1 in pp.enumerate(sandwich_degree, coeffs)
                for g2 in pp.enumerate(sandwich_degree, coeffs)]
        for f1 in polys:
            for f2 in polys:
                if self.contains(f1, f2):
                    continue
                escaped = False
                for y in mids:
                    s1, s2 = twist_conv_product(twist_conv_product((f1, f2), y), (f1, f2))
                    if not self.contains(s1, s2):
                        escaped = True
                        break
                if not escaped:
                    return False, (f1, f2)
        return True, None


def geometric_congruence(p, points, nvars=1):
    return GeometricCongruence(p, points, nvars)


def check_polypair_semiprime(p, degree=1, sandwich_degree=None, coeffs=None):
    """Trivial-congruence semiprimeness of the truncated polynomial pair:
    every formally distinct pair (f1, f2) must have some convolution
    sandwich with distinct components. Returns a record with the base
    verdict and the polynomial-level verdict within the bound."""
    from .congruences import diagonal, is_semiprime

    base_semiprime = is_semiprime(diagonal(p))
    if sandwich_degree is None:
        sandwich_degree = degree
    pp = PolynomialPair(p, 1)
    polys = list(pp.enumerate(degree, coeffs))
    mids = [(g1, g2) for g1 in pp.enumerate(sandwich_degree, coeffs)
            for g2 in pp.enumerate(sandwich_degree, coeffs)]
    witness = None
    for f1 in polys:
        for f2 in polys:
            if f1 == f2:
                continue
            if all(twist_conv_product(twist_conv_product((f1, f2), y), (f1, f2))[0]
                   == twist_conv_product(twist_conv_product((f1, f2), y), (f1, f2))[1]
                   for y in mids):
                witness = (f1, f2)
                break
        if witness:
            break
    return {
        "base_semiprime": base_semiprime,
        "poly_semiprime": witness is None,
        "witness": witness,
        "degree": degree,
    }


# ---------------------------------------------------------------------------
# Literal parser


def parse_poly(p, text, var_names=("x", "y", "z")):
    """Parses literals like '2*x^2*y + 1v*x + 4'. Coefficient tokens are
    carrier labels; for supertropical carriers a trailing v marks a ghost
    and plain integers are tangible. Raises PreconditionError with the
    offending token."""
    text = text.replace(" ", "")
    if not text:
        raise PreconditionError("empty polynomial literal")
    var_index = {v: i for i, v in enumerate(var_names)}
    used = 0
    parsed = []
    for term in text.split("+"):
        if not term:
            raise PreconditionError("empty term in %r" % text)
        coeff_tok = None
        exps = {}
        for factor in term.split("*"):
            name, _, exp = factor.partition("^")
            if name in var_index:
                k = 1
                if exp:
                    try:
                        k = int(exp)
                    except ValueError:
                        raise PreconditionError("bad exponent %r" % exp) from None
                    if k < 0:
                        raise PreconditionError("negative exponent %r" % exp)
                i = var_index[name]
                exps[i] = exps.get(i, 0) + k
                used = max(used, i + 1)
            elif exp:
                raise PreconditionError("exponent on coefficient %r" % factor)
            elif coeff_tok is None:
                coeff_tok = name
            else:
                raise PreconditionError("two coefficients in term %r" % term)
        parsed.append((coeff_tok, exps))
    nvars = max(used, 1)
    terms = {}
    c = p.carrier
    for coeff_tok, exps in parsed:
        v = c.one if coeff_tok is None else _parse_coeff(p, coeff_tok)
        exp = tuple(exps.get(i, 0) for i in range(nvars))
        terms[exp] = c.add(terms[exp], v) if exp in terms else v
    return Polynomial(p, nvars, terms)


def _parse_coeff(p, tok):
    c = p.carrier
    if c.finite:
        try:
            return c.index(tok)
        except Exception:
            raise PreconditionError("unknown coefficient label %r" % tok) from None
    # symbolic supertropical convention: -inf, n, nv
    if tok == "-inf":
        return c.zero
    ghost = tok.endswith("v")
    body = tok[:-1] if ghost else tok
    try:
        n = int(body)
    except ValueError:
        raise PreconditionError("bad coefficient token %r" % tok) from None
    return ("g", n) if ghost else ("t", n)

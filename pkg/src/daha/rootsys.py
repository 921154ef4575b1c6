"""
Root data for reduced root systems of small rank.

Weights are integer tuples in the basis of fundamental weights
(``omega``-coordinates).  The form is normalized so that short roots have
squared length 2, hence ``nu_alpha = (alpha, alpha) / 2`` is 1 for short
roots and 2 or 3 for long roots.  Nodes follow the Bourbaki numbering,
0-based in code (node ``i`` is ``alpha_{i+1}``).
"""

from fractions import Fraction
from functools import cached_property
from itertools import product
from math import lcm

from .coeff import RatFunc

SUPPORTED = {"A": (1, 4), "B": (2, 4), "C": (2, 4), "D": (3, 4), "F": (4, 4), "G": (2, 2)}


class RootDatumError(ValueError):
    pass


def _dynkin(type_label, n):
    """Return (nu list, edge list) for the Dynkin diagram."""
    edges = [(i, i + 1) for i in range(n - 1)]
    if type_label == "A":
        nu = [1] * n
    elif type_label == "B":
        nu = [2] * (n - 1) + [1]
    elif type_label == "C":
        nu = [1] * (n - 1) + [2]
    elif type_label == "D":
        nu = [1] * n
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif type_label == "G":
        nu = [1, 3]
    elif type_label == "F":
        nu = [2, 2, 1, 1]
    return nu, edges


def _inverse(M):
    """Exact inverse of a square rational matrix (Gauss-Jordan)."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for c in range(n):
        p = next(r for r in range(c, n) if A[r][c] != 0)
        A[c], A[p] = A[p], A[c]
        piv = A[c][c]
        A[c] = [x / piv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vneg(a):
    return tuple(-x for x in a)


def vscale(c, a):
    return tuple(c * x for x in a)


def vint(a):
    """Convert a rational vector with integral entries to ints."""
    out = []
    for x in a:
        x = Fraction(x)
        if x.denominator != 1:
            raise ValueError("non-integral vector %s" % (a,))
        out.append(int(x))
    return tuple(out)


class Weyl:
    """
    An element of the finite Weyl group, stored as the integer matrix ``M``
    acting on row vectors of omega-coordinates: ``w(v) = v M``.
    """

    __slots__ = ("M",)

    def __init__(self, M):
        self.M = M

    def __call__(self, v):
        n = len(self.M)
        return tuple(sum(v[j] * self.M[j][k] for j in range(n)) for k in range(n))

    def __mul__(self, other):
        # (self * other)(v) = self(other(v)) = v M_other M_self
        n = len(self.M)
        A, B = other.M, self.M
        return Weyl(tuple(tuple(sum(A[i][j] * B[j][k] for j in range(n)) for k in range(n))
                          for i in range(n)))

    def __eq__(self, other):
        return isinstance(other, Weyl) and self.M == other.M

    def __hash__(self):
        return hash(self.M)

    def __repr__(self):
        return "Weyl(%s)" % (self.M,)


class KScalar:
    """
    A number ``c0 + cs * k_sht + cl * k_lng`` affine-linear in the
    parameters, with rational coefficients.
    """

    __slots__ = ("c0", "cs", "cl")

    def __init__(self, c0=0, cs=0, cl=0):
        self.c0 = Fraction(c0)
        self.cs = Fraction(cs)
        self.cl = Fraction(cl)

    def _lift(self, o):
        return o if isinstance(o, KScalar) else KScalar(o)

    def __add__(self, o):
        o = self._lift(o)
        return KScalar(self.c0 + o.c0, self.cs + o.cs, self.cl + o.cl)

    __radd__ = __add__

    def __neg__(self):
        return KScalar(-self.c0, -self.cs, -self.cl)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, c):
        if isinstance(c, KScalar):
            if c.is_const():
                c = c.c0
            elif self.is_const():
                return c * self.c0
            else:
                raise ValueError("product is quadratic in k")
        c = Fraction(c)
        return KScalar(self.c0 * c, self.cs * c, self.cl * c)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / Fraction(c))

    def is_const(self):
        return self.cs == 0 and self.cl == 0

    def as_tuple(self):
        return (self.c0, self.cs, self.cl)

    def __eq__(self, o):
        if not isinstance(o, KScalar):
            o = KScalar(o)
        return self.as_tuple() == o.as_tuple()

    def __hash__(self):
        return hash(self.as_tuple())

    def __repr__(self):
        parts = []
        if self.c0 or self.is_const():
            parts.append(str(self.c0))
        if self.cs:
            parts.append("%s*k_sht" % self.cs)
        if self.cl:
            parts.append("%s*k_lng" % self.cl)
        return " + ".join(parts)


class KVec:
    """A vector ``v0 + k_sht * vs + k_lng * vl`` with rational components."""

    __slots__ = ("v0", "vs", "vl")

    def __init__(self, v0, vs=None, vl=None):
        n = len(v0)
        self.v0 = tuple(Fraction(x) for x in v0)
        self.vs = tuple(Fraction(x) for x in vs) if vs is not None else (Fraction(0),) * n
        self.vl = tuple(Fraction(x) for x in vl) if vl is not None else (Fraction(0),) * n

    @staticmethod
    def lift(v):
        return v if isinstance(v, KVec) else KVec(v)

    def __add__(self, o):
        o = KVec.lift(o)
        return KVec(vadd(self.v0, o.v0), vadd(self.vs, o.vs), vadd(self.vl, o.vl))

    __radd__ = __add__

    def __neg__(self):
        return KVec(vneg(self.v0), vneg(self.vs), vneg(self.vl))

    def __sub__(self, o):
        return self + (-KVec.lift(o))

    def __rsub__(self, o):
        return KVec.lift(o) - self

    def scale(self, c):
        c = Fraction(c)
        return KVec(vscale(c, self.v0), vscale(c, self.vs), vscale(c, self.vl))

    def apply(self, w):
        return KVec(w(self.v0), w(self.vs), w(self.vl))

    def is_const(self):
        return not any(self.vs) and not any(self.vl)

    def __eq__(self, o):
        o = KVec.lift(o)
        return (self.v0, self.vs, self.vl) == (o.v0, o.vs, o.vl)

    def __hash__(self):
        return hash((self.v0, self.vs, self.vl))

    def __repr__(self):
        if self.is_const():
            return "KVec(%s)" % (tuple(str(x) for x in self.v0),)
        return "KVec(%s, k_sht*%s, k_lng*%s)" % tuple(
            tuple(str(x) for x in v) for v in (self.v0, self.vs, self.vl))


class RootDatum:
    """
    Root system data with a lattice ``Q <= B <= P``.

    EXAMPLES::

        >>> R = build_root_datum("G", 2, "Q")
        >>> R.nu_lng, R.to_alpha(R.theta), R.O_prime
        (3, (2, 1), ())
    """

    def __init__(self, type_label, rank, lattice="P"):
        if type_label not in SUPPORTED:
            raise RootDatumError("unsupported root system type %r" % (type_label,))
        lo, hi = SUPPORTED[type_label]
        if not lo <= rank <= hi:
            raise RootDatumError("unsupported rank %d for type %s" % (rank, type_label))
        self.type_label = type_label
        self.rank = n = rank
        nu, edges = _dynkin(type_label, n)
        self.nu_simple = tuple(nu)
        self.nu_lng = max(nu) if max(nu) > 1 else 2
        self.simply_laced = max(nu) == 1
        S = [[0] * n for _ in range(n)]
        for i in range(n):
            S[i][i] = 2 * nu[i]
        for i, j in edges:
            S[i][j] = S[j][i] = -max(nu[i], nu[j])
        self.sym_form = tuple(tuple(r) for r in S)
        # cartan[i][j] = (alpha_i, alpha_j^vee)
        self.cartan = tuple(tuple(2 * S[i][j] // S[j][j] for j in range(n)) for i in range(n))
        self.cartan_inv = _inverse(self.cartan)
        # gram[i][j] = (omega_i, omega_j)
        self.gram = tuple(tuple(self.cartan_inv[j][i] * nu[i] for j in range(n)) for i in range(n))
        self.simple_roots = tuple(tuple(self.cartan[j]) for j in range(n))
        self.fund_weights = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        self._build_roots()
        self._build_lattice(lattice)

    # basic linear algebra

    def pair(self, a, b):
        """The invariant form (a, b) of two rational vectors."""
        n = self.rank
        g = self.gram
        return sum(a[i] * g[i][j] * b[j] for i in range(n) if a[i] for j in range(n) if b[j])

    def nu(self, alpha):
        return Fraction(self.pair(alpha, alpha)) / 2

    def coroot(self, alpha):
        return vscale(1 / self.nu(alpha), alpha)

    def copair(self, b, alpha):
        """(b, alpha^vee)."""
        return self.pair(b, alpha) / self.nu(alpha)

    def to_alpha(self, v):
        """omega-coordinates -> simple-root coordinates."""
        n = self.rank
        out = tuple(sum(Fraction(v[j]) * self.cartan_inv[j][i] for j in range(n)) for i in range(n))
        return tuple(int(x) if x.denominator == 1 else x for x in out)

    def from_alpha(self, c):
        n = self.rank
        return tuple(sum(c[j] * self.cartan[j][i] for j in range(n)) for i in range(n))

    def reflect(self, i, v):
        ci = v[i]
        if not ci:
            return tuple(v)
        row = self.cartan[i]
        return tuple(v[j] - ci * row[j] for j in range(self.rank))

    def reflect_root(self, alpha, v):
        c = self.copair(v, alpha)
        return vsub(v, vscale(c, alpha)) if c else tuple(v)

    # roots

    def _build_roots(self):
        seen = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            nxt = []
            for a in frontier:
                for i in range(self.rank):
                    b = self.reflect(i, a)
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        pos = [a for a in seen if all(x >= 0 for x in self.to_alpha(a))]
        pos.sort(key=lambda a: (sum(self.to_alpha(a)), self.to_alpha(a)))
        self.positive_roots = tuple(pos)
        self.roots = tuple(pos) + tuple(vneg(a) for a in pos)
        self._pos_set = frozenset(pos)
        self._index = {a: k for k, a in enumerate(pos)}
        shorts = [a for a in pos if self.nu(a) == 1]
        longs = [a for a in pos if self.nu(a) != 1]
        self.theta = max(shorts, key=lambda a: sum(self.to_alpha(a)))
        self.theta_long = max(longs, key=lambda a: sum(self.to_alpha(a))) if longs else self.theta
        half = Fraction(1, 2)
        zero = (Fraction(0),) * self.rank
        self.rho_sht = vscale(half, tuple(map(sum, zip(zero, *shorts))))
        self.rho_lng = vscale(half, tuple(map(sum, zip(zero, *longs)))) if longs else zero
        self.rho = vint(vadd(self.rho_sht, self.rho_lng))
        self.coxeter_h = int(self.pair(self.rho, self.theta)) + 1
        self.O_prime = tuple(r for r in range(self.rank)
                             if all(self.copair(self.fund_weights[r], a) <= 1
                                    for a in self.positive_roots))

    def is_positive(self, alpha):
        return tuple(alpha) in self._pos_set

    def is_root(self, alpha):
        a = tuple(alpha)
        return a in self._pos_set or vneg(a) in self._pos_set

    def height(self, alpha):
        return sum(self.to_alpha(alpha))

    def is_long(self, alpha):
        return self.nu(alpha) != 1

    def root_index(self, alpha):
        return self._index[tuple(alpha)]

    # Weyl group

    def s(self, i):
        n = self.rank
        return Weyl(tuple(tuple(int(j == k) - (self.cartan[i][k] if j == i else 0)
                                for k in range(n)) for j in range(n)))

    @cached_property
    def identity(self):
        n = self.rank
        return Weyl(tuple(tuple(int(j == k) for k in range(n)) for j in range(n)))

    def weyl_from_images(self, images):
        """The Weyl element sending omega_j to images[j]."""
        return Weyl(tuple(tuple(int(x) for x in v) for v in images))

    def word_to_weyl(self, word):
        """s_{i_1} s_{i_2} ... s_{i_m} for word = (i_1, ..., i_m)."""
        w = self.identity
        for i in word:
            w = w * self.s(i)
        return w

    def weyl_inverse(self, w):
        return self.word_to_weyl(tuple(reversed(self.reduced_word(w))))

    def reduced_word(self, w):
        """A reduced word (i_1, ..., i_m) with w = s_{i_1} ... s_{i_m}."""
        word = []
        v = w(self.rho)
        # w(rho) determines w; peel left descents
        while True:
            for i in range(self.rank):
                if v[i] < 0:
                    v = self.reflect(i, v)
                    word.append(i)
                    break
            else:
                break
        return tuple(word)

    def length(self, w):
        return sum(1 for a in self.positive_roots if not self.is_positive(w(a)))

    def length_by_nu(self, w):
        """(l_sht(w), l_lng(w)): counts of inverted short / long positive roots."""
        ls = ll = 0
        for a in self.positive_roots:
            if not self.is_positive(w(a)):
                if self.nu(a) == 1:
                    ls += 1
                else:
                    ll += 1
        return ls, ll

    @cached_property
    def w0_word(self):
        word = []
        v = self.rho
        while True:
            for i in range(self.rank):
                if v[i] > 0:
                    v = self.reflect(i, v)
                    word.append(i)
                    break
            else:
                break
        return tuple(reversed(word))

    @cached_property
    def w0(self):
        return self.word_to_weyl(self.w0_word)

    @cached_property
    def weyl_group(self):
        """All elements of W, in order of increasing length."""
        seen = {self.identity: ()}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(self.rank):
                    x = w * self.s(i)
                    if x not in seen:
                        seen[x] = seen[w] + (i,)
                        nxt.append(x)
            frontier = nxt
        return tuple(seen)

    def orbit(self, b):
        out = {tuple(b)}
        frontier = [tuple(b)]
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(self.rank):
                    x = self.reflect(i, v)
                    if x not in out:
                        out.add(x)
                        nxt.append(x)
            frontier = nxt
        return sorted(out)

    def dominant(self, b):
        """(b_+, w) with w(b) = b_+ dominant."""
        word = []
        v = tuple(b)
        while True:
            for i in range(self.rank):
                if v[i] < 0:
                    v = self.reflect(i, v)
                    word.append(i)
                    break
            else:
                break
        return v, self.word_to_weyl(tuple(reversed(word)))

    def antidominant(self, b):
        """(b_-, u) with u(b) = b_- antidominant and u of minimal length."""
        word = []
        v = tuple(b)
        while True:
            for i in range(self.rank):
                if v[i] > 0:
                    v = self.reflect(i, v)
                    word.append(i)
                    break
            else:
                break
        return v, self.word_to_weyl(tuple(reversed(word)))

    def r_star(self, r):
        """The index r* with omega_{r*} = -w_0(omega_r); r = -1 stands for omega_0 = 0."""
        if r < 0:
            return r
        v = vneg(self.w0(self.fund_weights[r]))
        return v.index(1)

    # lattice B

    def _build_lattice(self, lattice):
        n = self.rank
        if lattice == "Q":
            gens = []
        elif lattice == "P":
            gens = [self.fund_weights[i] for i in range(n)]
        else:
            gens = [tuple(int(x) for x in g) for g in lattice]
            for g in gens:
                if len(g) != n:
                    raise RootDatumError("lattice generator %s has wrong length" % (g,))
        # classes of B/Q as fractional parts of alpha-coordinates
        classes = {self._frac((0,) * n)}
        for g in gens:
            classes.add(self._frac(g))
        changed = True
        while changed:
            changed = False
            for a in list(classes):
                for b in list(classes):
                    c = tuple((x + y) % 1 for x, y in zip(a, b))
                    if c not in classes:
                        classes.add(c)
                        changed = True
        self._B_classes = frozenset(classes)
        self.lattice_label = lattice if lattice in ("P", "Q") else "custom"
        self.lattice_gens = tuple(gens)
        basis = list(self.simple_roots) + list(gens)
        den = 1
        for a in basis:
            for b in basis:
                den = lcm(den, Fraction(self.pair(a, b)).denominator)
        self.m_tilde = den
        self.Pi_flat = tuple([-1] + [r for r in self.O_prime if self.in_B(self.fund_weights[r])])

    @staticmethod
    def _frac_of(c):
        return tuple(Fraction(x) % 1 for x in c)

    def _frac(self, v):
        return self._frac_of(self.to_alpha(v))

    def in_B(self, b):
        return self._frac(b) in self._B_classes

    def in_Q(self, b):
        return all(Fraction(x).denominator == 1 for x in self.to_alpha(b))

    def lattice_points(self, bound):
        """Elements of B with omega-coordinates bounded by ``bound`` in absolute value."""
        rng = range(-bound, bound + 1)
        return [b for b in product(rng, repeat=self.rank) if self.in_B(b)]

    def omega(self, r):
        """omega_r, with r = -1 for omega_0 = 0."""
        if r < 0:
            return (0,) * self.rank
        return self.fund_weights[r]

    def to_json(self):
        return {
            "schema": 1,
            "type": self.type_label,
            "rank": self.rank,
            "cartan": [list(r) for r in self.cartan],
            "simple_roots": [list(a) for a in self.simple_roots],
            "lattice": self.lattice_label,
            "lattice_generators": [list(g) for g in self.lattice_gens],
            "theta": list(self.theta),
            "m_tilde": self.m_tilde,
        }

    def __repr__(self):
        return "RootDatum(%s%d, B=%s)" % (self.type_label, self.rank, self.lattice_label)


_CACHE = {}


def build_root_datum(type_label, rank, lattice="P"):
    """Construct (and cache) the root datum of the given type, rank and lattice."""
    key = (type_label, rank, lattice if isinstance(lattice, str) else tuple(map(tuple, lattice)))
    if key not in _CACHE:
        R = RootDatum(type_label, rank, lattice)
        for g in R.lattice_gens:
            if not all(Fraction(x).denominator == 1 for x in g):
                raise RootDatumError("lattice generator %s not in P" % (g,))
        _CACHE[key] = R
    return _CACHE[key]


def positive_roots(datum):
    """List of (root, nu) for the positive roots."""
    return [(a, datum.nu(a)) for a in datum.positive_roots]


def h_form(datum, alpha):
    """h_alpha(k) = (rho_k, alpha^vee) + k_alpha as a KScalar."""
    cs = datum.copair(datum.rho_sht, alpha)
    cl = datum.copair(datum.rho_lng, alpha)
    if datum.nu(alpha) == 1:
        cs += 1
    else:
        cl += 1
    return KScalar(0, cs, cl)


def extreme_roots(datum, constraint="none"):
    """
    Short positive roots whose h_alpha(k) differs from every
    (rho_k, beta^vee), returned with h_alpha(k) as a KScalar.  ``constraint`` is one of
    "none", "k_lng=k_sht", "k_sht=0", "k_lng=0".
    """
    def key(x):
        if constraint == "none":
            return (x.cs, x.cl)
        if constraint == "k_lng=k_sht":
            return x.cs + x.cl
        if constraint == "k_sht=0":
            return x.cl
        if constraint == "k_lng=0":
            return x.cs
        raise ValueError("unknown constraint %r" % (constraint,))

    values = {key(KScalar(0, datum.copair(datum.rho_sht, b), datum.copair(datum.rho_lng, b)))
              for b in datum.positive_roots}
    out = []
    for a in datum.positive_roots:
        if datum.is_long(a):
            continue
        h = h_form(datum, a)
        if key(h) not in values:
            out.append((a, h))
    return out


def is_strongly_extreme(datum, alpha):
    return all(datum.pair(alpha, w) > 0 for w in datum.fund_weights)


class Params:
    """
    The parameters q, t_sht, t_lng.

    With ``k=None`` the parameters are formal: coefficients live in
    Q(v, s, l) with v = q^(1/grid), s = t_sht^(1/2), l = t_lng^(1/2), and
    grid = 2 * m_tilde.  With rational ``k`` (and optionally ``k_lng``) we
    set t_nu = q_nu^(k_nu) and the grid is enlarged so that every exponent
    of q that occurs is a multiple of 1/grid.
    """

    def __init__(self, datum, k=None, k_lng=None, grid=None):
        self.datum = datum
        R = datum
        if k is None:
            self.formal = True
            self.k_sht = self.k_lng = None
            G = 2 * R.m_tilde
        else:
            self.formal = False
            self.k_sht = Fraction(k)
            self.k_lng = Fraction(k_lng) if k_lng is not None else self.k_sht
            G = 2 * R.m_tilde
            nl = R.nu_lng
            vals = [self.k_sht / 2, self.k_lng * nl / 2]
            rk = self.rho_k.v0
            basis = list(R.simple_roots) + list(R.lattice_gens) + list(R.fund_weights)
            for a in basis:
                vals.append(R.pair(rk, a))
            vals.append(R.pair(rk, rk) / 2)
            for a in R.positive_roots:
                vals.append(R.pair(rk, a))
            for x in vals:
                G = lcm(G, Fraction(x).denominator)
        if grid is not None:
            if grid % G:
                raise ValueError("grid %d is not a multiple of %d" % (grid, G))
            G = grid
        self.grid = G

    @cached_property
    def rho_k(self):
        R = self.datum
        if self.formal:
            return KVec((0,) * R.rank, R.rho_sht, R.rho_lng)
        return KVec(vadd(vscale(self.k_sht, R.rho_sht), vscale(self.k_lng, R.rho_lng)))

    def k_of(self, alpha):
        """k_alpha as a KScalar."""
        long_ = self.datum.is_long(alpha)
        if self.formal:
            return KScalar(0, 0, 1) if long_ else KScalar(0, 1, 0)
        return KScalar(self.k_lng if long_ else self.k_sht)

    def normalize(self, x):
        if isinstance(x, KScalar):
            if self.formal:
                return x
            return KScalar(x.c0 + x.cs * self.k_sht + x.cl * self.k_lng)
        return KScalar(x)

    def pair(self, a, b):
        """(a, b) for plain vectors or KVecs, as a KScalar."""
        R = self.datum
        if not isinstance(a, KVec) and not isinstance(b, KVec):
            return KScalar(R.pair(a, b))
        a = KVec.lift(a)
        b = KVec.lift(b)
        if not (a.is_const() or b.is_const()):
            if not self.formal:
                raise AssertionError("specialized KVec carries k-components")
            raise ValueError("pairing is quadratic in k")
        if a.is_const():
            a, b = b, a
        # now b is constant
        v = b.v0
        return KScalar(R.pair(a.v0, v), R.pair(a.vs, v), R.pair(a.vl, v))

    def qpow(self, x):
        """The monomial q^x for a KScalar (or rational) exponent x."""
        x = self.normalize(x)
        e0 = x.c0 * self.grid
        if e0.denominator != 1:
            raise ValueError("exponent %s of q is off the 1/%d grid" % (x, self.grid))
        es = 2 * x.cs
        el = 2 * x.cl / self.datum.nu_lng
        if es.denominator != 1 or el.denominator != 1:
            raise ValueError("t-exponent %s is not half-integral" % (x,))
        return RatFunc.mono(int(e0), int(es), int(el))

    def t_half(self, alpha):
        """t_alpha^(1/2)."""
        nu = self.datum.nu(alpha)
        return self.qpow(self.k_of(alpha) * (nu / 2))

    def t(self, alpha):
        nu = self.datum.nu(alpha)
        return self.qpow(self.k_of(alpha) * nu)

    def q_alpha(self, alpha, j=1):
        return self.qpow(KScalar(self.datum.nu(alpha) * j))

    def X_at(self, alpha, z):
        """X_alpha(q^z) = q^((alpha, z)) for a vector (or KVec) z."""
        return self.qpow(self.pair(alpha, z))

    def __repr__(self):
        if self.formal:
            return "Params(%r, formal)" % self.datum
        return "Params(%r, k_sht=%s, k_lng=%s)" % (self.datum, self.k_sht, self.k_lng)

"""
The extended affine Weyl group ``B . W``.

An element is a pair ``(w, b)`` standing for the product ``w b'`` of a
finite Weyl element and a translation.  It acts on affine roots by

    (w b')[alpha, c] = [w(alpha), c - (alpha, b)]

and on points by ``(w b')<<z>> = w(b + z)``.  Affine roots are pairs
``(alpha, c)`` with ``c = nu_alpha * j``.
"""

from fractions import Fraction
from functools import lru_cache

from .rootsys import vadd, vneg, vsub


class AffineElement:
    """
    EXAMPLES::

        >>> from daha.rootsys import build_root_datum
        >>> R = build_root_datum("A", 1)
        >>> s0 = simple_reflection(R, -1)
        >>> s0.act((0,))
        (2,)
        >>> (s0 * s0).is_identity()
        True
    """

    __slots__ = ("datum", "w", "b", "_lam")

    def __init__(self, datum, w, b):
        self.datum = datum
        self.w = w
        self.b = tuple(b)
        self._lam = None

    @classmethod
    def identity(cls, datum):
        return cls(datum, datum.identity, (0,) * datum.rank)

    @classmethod
    def translation(cls, datum, b):
        return cls(datum, datum.identity, b)

    def __mul__(self, other):
        if other.datum is not self.datum:
            raise ValueError("elements over different root data")
        R = self.datum
        w2inv = R.weyl_inverse(other.w)
        return AffineElement(R, self.w * other.w, vadd(w2inv(self.b), other.b))

    def inverse(self):
        R = self.datum
        return AffineElement(R, R.weyl_inverse(self.w), vneg(self.w(self.b)))

    def __eq__(self, other):
        return isinstance(other, AffineElement) and self.w == other.w and self.b == other.b

    def __hash__(self):
        return hash((self.w, self.b))

    def is_identity(self):
        return self.w == self.datum.identity and not any(self.b)

    def act(self, z):
        """Affine action on a point (rational vector)."""
        return self.w(vadd(self.b, z))

    def act_kvec(self, z):
        """Affine action on a KVec point."""
        return (z + self.b).apply(self.w)

    def act_root(self, root):
        alpha, c = root
        return (self.w(alpha), c - self.datum.pair(alpha, self.b))

    def lambda_set(self):
        """lambda(w b') = positive affine roots sent to negative ones."""
        if self._lam is None:
            self._lam = _lambda(self.datum, self.w, self.b)
        return self._lam

    def length(self):
        return len(self.lambda_set())

    def reduced_word(self):
        """
        (r, word) with self = pi_r s_{word[-1]} ... s_{word[0]}; that is,
        ``word`` lists the simple reflections in the order they act.
        """
        return _reduced_word(self)

    def pi_index(self):
        """For a length-zero element, the r with self = pi_r (r = -1 for the identity)."""
        if self.length():
            raise ValueError("element has positive length")
        z = self.act((0,) * self.datum.rank)
        if not any(z):
            return -1
        return z.index(1)

    def __repr__(self):
        r, word = self.reduced_word()
        return "AffineElement(%s)" % word_string(r, word)


def word_string(r, word):
    parts = [] if r < 0 else ["pi%d" % (r + 1)]
    parts += ["s%d" % (i + 1 if i >= 0 else 0) for i in reversed(word)]
    return " ".join(parts) if parts else "id"


def _lambda(R, w, b):
    out = []
    for alpha in R.roots:
        nu = R.nu(alpha)
        top = R.copair(b, alpha)
        if top.denominator != 1:
            raise ValueError("translation %s not in P" % (b,))
        top = int(top)
        start = 0 if R.is_positive(alpha) else 1
        neg_w = not R.is_positive(w(alpha))
        for j in range(start, top + 1):
            if j == top and not neg_w:
                break
            out.append((alpha, nu * j))
    return frozenset(out)


def affine_simple_root(R, i):
    """alpha_i as an affine root; i = -1 denotes alpha_0 = [-theta, 1]."""
    if i < 0:
        return (vneg(R.theta), Fraction(1))
    return (R.simple_roots[i], Fraction(0))


def is_positive_affine(R, root):
    alpha, c = root
    return c > 0 or (c == 0 and R.is_positive(alpha))


def simple_reflection(R, i):
    """s_i as an AffineElement; i = -1 denotes s_0."""
    if i < 0:
        th = R.theta
        return AffineElement(R, reflection(R, th), vneg(th))
    return AffineElement(R, R.s(i), (0,) * R.rank)


@lru_cache(maxsize=None)
def reflection(R, alpha):
    """The reflection s_alpha as a Weyl element."""
    return R.weyl_from_images([R.reflect_root(alpha, v) for v in R.fund_weights])


def pi_element(R, r):
    """pi_r = pi_{omega_r}."""
    return pi_decomposition(R, R.omega(r))[0]


@lru_cache(maxsize=None)
def _pi_dec(R, b):
    bm, u = R.antidominant(b)
    return AffineElement(R, R.weyl_inverse(u), bm), u


def pi_decomposition(R, b):
    """
    (pi_b, u_b) with b = pi_b u_b, u_b(b) = b_- antidominant, u_b minimal.
    """
    b = tuple(b)
    if not R.in_B(b):
        raise ValueError("%s is not in the lattice B" % (b,))
    return _pi_dec(R, b)


def _reduced_word(x):
    R = x.datum
    word = []
    cur = x
    while cur.length():
        lam = cur.lambda_set()
        for i in [-1] + list(range(R.rank)):
            if affine_simple_root(R, i) in lam:
                cur = cur * simple_reflection(R, i)
                word.append(i)
                break
        else:
            raise AssertionError("no descent found")
    return cur.pi_index(), tuple(word)


def reduced_words(x, limit=None):
    """All reduced words of x (at most ``limit`` of them), same format as reduced_word."""
    R = x.datum
    out = []

    def walk(cur, acc):
        if limit is not None and len(out) >= limit:
            return
        if not cur.length():
            out.append((cur.pi_index(), tuple(acc)))
            return
        lam = cur.lambda_set()
        for i in [-1] + list(range(R.rank)):
            if affine_simple_root(R, i) in lam:
                walk(cur * simple_reflection(R, i), acc + [i])

    walk(x, [])
    return out


def from_word(R, r, word):
    """pi_r s_{word[-1]} ... s_{word[0]}."""
    x = pi_element(R, r) if r >= 0 else AffineElement.identity(R)
    for i in reversed(word):
        x = x * simple_reflection(R, i)
    return x


def affine_action_simple(R, i, z):
    """s_i<<z>> for a point z (rational vector or KVec)."""
    from .rootsys import KVec
    if isinstance(z, KVec):
        return simple_reflection(R, i).act_kvec(z)
    return simple_reflection(R, i).act(z)


def q_plus_le(R, b, c):
    """b <= c, i.e. c - b is in Q_+."""
    d = R.to_alpha(vsub(c, b))
    return all(Fraction(x).denominator == 1 and x >= 0 for x in d)


def succ_compare(R, b, c):
    """
    Compare b and c in the partial order: returns "b<c", "b>c", "b=c" or
    "incomparable", where b < c means c succeeds b.
    """
    b, c = tuple(b), tuple(c)
    if b == c:
        return "b=c"
    bm, _ = R.antidominant(b)
    cm, _ = R.antidominant(c)
    if bm == cm:
        if q_plus_le(R, b, c):
            return "b<c"
        if q_plus_le(R, c, b):
            return "b>c"
        return "incomparable"
    if q_plus_le(R, bm, cm):
        return "b<c"
    if q_plus_le(R, cm, bm):
        return "b>c"
    return "incomparable"


def succeeds(R, c, b):
    """c strictly succeeds b."""
    return succ_compare(R, b, c) == "b<c"


def arrows_from(R, c):
    """
    Arrows leaving c: ("s", i, b) for each i with (alpha_i^vee, c + d) > 0
    where b = s_i<<c>>, and ("pi", r, b) for pi_r in Pi_flat with
    b = pi_r<<c>>.
    """
    c = tuple(c)
    out = []
    for i in [-1] + list(range(R.rank)):
        if i < 0:
            val = 1 - R.pair(R.theta, c)
        else:
            val = c[i]
        if val > 0:
            out.append(("s", i, simple_reflection(R, i).act(c)))
    for r in R.Pi_flat:
        if r >= 0:
            out.append(("pi", r, pi_element(R, r).act(c)))
    return out


def lambda_prime(R, b):
    """
    lambda'(pi_b) as a list of (alpha, j) with alpha > 0: positive roots
    with -(b_-, alpha^vee) > j > 0 when u_b^{-1}(alpha) < 0, and
    -(b_-, alpha^vee) >= j > 0 otherwise.
    """
    pib, u = pi_decomposition(R, b)
    bm = pib.b
    uinv = pib.w
    out = []
    for alpha in R.positive_roots:
        top = -int(R.copair(bm, alpha))
        if not R.is_positive(uinv(alpha)):
            top -= 1
        for j in range(1, top + 1):
            out.append((alpha, j))
    return out


def elements_up_to_length(R, L):
    """All elements of B . W of length <= L (breadth first from Pi_flat)."""
    start = [pi_element(R, r) if r >= 0 else AffineElement.identity(R) for r in R.Pi_flat]
    seen = set(start)
    frontier = list(start)
    out = list(start)
    for _ in range(L):
        nxt = []
        for x in frontier:
            for i in [-1] + list(range(R.rank)):
                y = x * simple_reflection(R, i)
                if y not in seen and y.length() == x.length() + 1:
                    seen.add(y)
                    nxt.append(y)
        out += nxt
        frontier = nxt
    return out


def weights_up_to_length(R, L):
    """All b in B with l(pi_b) <= L, sorted by (length, b), found along arrows from 0."""
    zero = (0,) * R.rank
    seen = {zero: 0}
    frontier = [zero]
    while frontier:
        nxt = []
        for c in frontier:
            for _, _, b in arrows_from(R, c):
                b = tuple(int(x) for x in b)
                if b in seen:
                    continue
                ell = pi_length(R, b)
                if ell <= L:
                    seen[b] = ell
                    nxt.append(b)
        frontier = nxt
    return sorted(seen, key=lambda b: (seen[b], b))


def pi_length(R, b):
    return pi_decomposition(R, b)[0].length()


def format_root(R, root):
    alpha, c = root
    j = c / R.nu(alpha)
    return "[%s;%s]" % (",".join(str(x) for x in R.to_alpha(alpha)), j)


def dump_line(x):
    """Stable text form: ``w-word | b-coords | lambda: [alpha;j]*``."""
    R = x.datum
    r, word = x.reduced_word()
    lam = sorted(x.lambda_set(), key=lambda rt: (rt[1], R.to_alpha(rt[0])))
    return "%s | %s | lambda: %s" % (
        word_string(r, word),
        ",".join(str(v) for v in x.b),
        " ".join(format_root(R, rt) for rt in lam))

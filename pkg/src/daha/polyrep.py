"""
The polynomial representation.

Laurent polynomials in X_b (b in B) with RatFunc coefficients, the
Demazure-Lusztig operators T_i, the group elements pi_r, multiplication by
X_b, the commuting Y_b, and the weight function mu expanded as a truncated
q-series together with the constant-term pairing.
"""

from fractions import Fraction

from .aweyl import AffineElement, affine_simple_root, pi_element, simple_reflection
from .coeff import CTX, ONE, ZERO, QSeries, RatFunc, _mono, _P_ZERO, _terms
from .rootsys import KScalar, vadd, vneg, vscale


class DivisibilityError(ArithmeticError):
    """Internal failure of exact division in a Demazure-Lusztig operator."""


class LaurentPoly:
    """
    A finitely supported map weight -> RatFunc.

    EXAMPLES::

        >>> X = LaurentPoly.monomial((1,))
        >>> (X + X * X).support()
        [(1,), (2,)]
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for b, c in terms.items():
                if not isinstance(c, RatFunc):
                    c = RatFunc.const(c)
                if not c.is_zero():
                    self.terms[tuple(b)] = c

    @classmethod
    def monomial(cls, b, c=ONE):
        return cls({tuple(b): c})

    @classmethod
    def constant(cls, rank, c=ONE):
        return cls({(0,) * rank: c})

    def support(self):
        return sorted(self.terms)

    def coeff(self, b):
        return self.terms.get(tuple(b), ZERO)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for b, c in other.terms.items():
            x = out.get(b)
            out[b] = c if x is None else x + c
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({b: -c for b, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if isinstance(c, RatFunc) and c.is_zero():
            return LaurentPoly()
        return LaurentPoly({b: c * x for b, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        out = {}
        for b, c in self.terms.items():
            for b2, c2 in other.terms.items():
                k = vadd(b, b2)
                x = c * c2
                y = out.get(k)
                out[k] = x if y is None else y + x
        return LaurentPoly(out)

    __rmul__ = scale

    def shift(self, a):
        """Multiplication by X_a."""
        return LaurentPoly({vadd(b, a): c for b, c in self.terms.items()})

    def conj(self):
        """X_b -> X_{-b} and conjugation of coefficients."""
        return LaurentPoly({vneg(b): c.conj() for b, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map_coeffs(self, f):
        return LaurentPoly({b: f(c) for b, c in self.terms.items()})

    def evaluate(self, params, z):
        """Substitute X_a -> q^((a, z)) for a vector or KVec z."""
        total = ZERO
        for b, c in self.terms.items():
            total = total + c * params.qpow(params.pair(b, z))
        return total

    def to_json(self):
        return [{"weight": list(b), "coeff": c.to_string()} for b, c in sorted(self.terms.items())]

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for b in sorted(self.terms):
            c = self.terms[b]
            if not any(b):
                parts.append("(%r)" % c)
            else:
                parts.append("(%r)*X%s" % (c, list(b)))
        return " + ".join(parts)


class PolyRep:
    """
    The polynomial representation for given parameters.

    Generator index conventions: ``i = -1`` is T_0, ``i >= 0`` is T_{i+1};
    ``r = -1`` is pi_0 = 1.
    """

    def __init__(self, params):
        self.params = params
        self.R = R = params.datum
        self.rank = R.rank
        self._th = {}
        self._td = {}
        for i in [-1] + list(range(R.rank)):
            alpha = affine_simple_root(R, i)[0]
            self._th[i] = params.t_half(alpha)
            self._td[i] = self._th[i] - self._th[i].inverse()
        self.q = params.qpow(KScalar(1))
        self.qinv = self.q.inverse()

    # generators

    def t_half(self, i):
        return self._th[i]

    def t_diff(self, i):
        """t_i^(1/2) - t_i^(-1/2)."""
        return self._td[i]

    def X(self, b, f):
        return f.shift(b)

    def T(self, i, f):
        """Demazure-Lusztig operator T_i (i = -1 for T_0)."""
        R = self.R
        th, td = self._th[i], self._td[i]
        out = {}

        def add(b, c):
            x = out.get(b)
            out[b] = c if x is None else x + c

        if i < 0:
            step = vneg(R.theta)
            scal, scal_inv = self.q, self.qinv
        else:
            step = R.simple_roots[i]
            scal = scal_inv = ONE
        for b, c in f.terms.items():
            if i < 0:
                n = -int(R.pair(b, R.theta))
            else:
                n = b[i]
            # s_i(X_b) = X_b A^{-n}, A = scal * X_step
            if n == 0:
                add(b, th * c)
                continue
            add(vadd(b, vscale(-n, step)), th * c * (scal_inv ** n if n > 0 else scal ** (-n)))
            tc = td * c
            if n > 0:
                for j in range(1, n + 1):
                    add(vadd(b, vscale(-j, step)), -tc * scal_inv ** j)
            else:
                for j in range(0, -n):
                    add(vadd(b, vscale(j, step)), tc * scal ** j)
        return LaurentPoly(out)

    def T_demazure(self, i, f):
        """
        T_i through the defining formula, with the division by X_{alpha_i} - 1
        carried out exactly on polynomials; used as an independent check.
        """
        R = self.R
        sf = self.s(i, f)
        diff = sf - f
        if i < 0:
            denom = LaurentPoly({vneg(R.theta): self.q, (0,) * R.rank: -ONE})
        else:
            denom = LaurentPoly({R.simple_roots[i]: ONE, (0,) * R.rank: -ONE})
        quo = divide_exact(diff, denom, R)
        return sf.scale(self._th[i]) + quo.scale(self._td[i])

    def Tinv(self, i, f):
        return self.T(i, f) - f.scale(self._td[i])

    def s(self, i, f):
        """The reflection s_i acting on polynomials."""
        return self.act_element(simple_reflection(self.R, i), f)

    def act_element(self, x, f):
        """An element (w, a) of the affine Weyl group: X_b -> X_{w b} q^{-(b, a)}."""
        R = self.R
        P = self.params
        out = {}
        for b, c in f.terms.items():
            e = -R.pair(b, x.b)
            key = x.w(b)
            val = c * P.qpow(KScalar(e)) if e else c
            y = out.get(key)
            out[key] = val if y is None else y + val
        return LaurentPoly(out)

    def pi(self, r, f):
        if r < 0:
            return f
        return self.act_element(pi_element(self.R, r), f)

    def pi_inv(self, r, f):
        if r < 0:
            return f
        return self.act_element(pi_element(self.R, r).inverse(), f)

    def T_word(self, r, word, f):
        """T_{pi_r s_{word[-1]} ... s_{word[0]}} applied to f."""
        for i in word:
            f = self.T(i, f)
        return self.pi(r, f)

    def T_word_inv(self, r, word, f):
        f = self.pi_inv(r, f)
        for i in reversed(word):
            f = self.Tinv(i, f)
        return f

    def T_element(self, x, f):
        r, word = x.reduced_word()
        return self.T_word(r, word, f)

    def _translation_word(self, b):
        x = AffineElement.translation(self.R, b)
        return x.reduced_word()

    def Y(self, b, f):
        """Y_b = T_{b1} T_{b2}^{-1} with b = b1 - b2, b1 and b2 dominant."""
        R = self.R
        b = tuple(b)
        if all(x >= 0 for x in b):
            return self.T_word(*self._translation_word(b), f)
        two_rho = vscale(2, R.rho)
        m = 1
        while any(x + m * y < 0 for x, y in zip(b, two_rho)):
            m += 1
        b2 = vscale(m, two_rho)
        b1 = vadd(b, b2)
        f = self.T_word_inv(*self._translation_word(b2), f)
        return self.T_word(*self._translation_word(b1), f)

    def Tw0(self, f):
        """T_{w_0} acting on f."""
        for i in reversed(self.R.w0_word):
            f = self.T(i, f)
        return f

    def Tw(self, word, f):
        """T_{s_{word[0]} ... s_{word[-1]}} for a reduced word of a finite Weyl element."""
        for i in reversed(word):
            f = self.T(i, f)
        return f


def divide_exact(num, den, R):
    """
    Exact division of Laurent polynomials where ``den`` has the two-term
    form c X_a - 1.  Raises DivisibilityError if a remainder is left.
    """
    if num.is_zero():
        return LaurentPoly()
    (a, ca), = [(b, c) for b, c in den.terms.items() if any(b)]
    ht = lambda b: R.pair(b, a)
    top = max(ht(b) for b in num.terms)
    rem = dict(num.terms)
    quo = {}
    # num = quo * (ca X_a - 1): the lowest remaining term fixes a term of quo
    while rem:
        b = min(rem, key=ht)
        if ht(b) >= top:
            raise DivisibilityError("non-exact division by %r" % den)
        c = rem.pop(b)
        quo[b] = -c
        nb = vadd(b, a)
        x = rem.get(nb, ZERO) + c * ca
        if x.is_zero():
            rem.pop(nb, None)
        else:
            rem[nb] = x
    return LaurentPoly(quo)


class MuSeries:
    """
    The weight function

        mu = prod_{alpha > 0} prod_{i >= 0}
             (1 - X_alpha q_alpha^i)(1 - X_alpha^{-1} q_alpha^{i+1})
             / ((1 - X_alpha t_alpha q_alpha^i)(1 - X_alpha^{-1} t_alpha q_alpha^{i+1}))

    expanded as a Laurent series in X whose coefficients are power series
    in q, truncated at q-order ``D`` (terms q^e with e <= D are exact).

    Each factor is a univariate series f(z) = sum_m c_m z^m in z = X_alpha;
    coefficients of mu are convolutions over the positive roots, pruned by
    the q-valuation (c_{-m} is divisible by q_alpha^m).
    """

    def __init__(self, params, D):
        if not params.formal and (params.k_sht.denominator != 1 or params.k_lng.denominator != 1
                                  or params.k_sht < 0 or params.k_lng < 0):
            raise ValueError("mu is expanded for formal t or nonnegative integral k only")
        self.params = params
        self.R = R = params.datum
        self.D = D
        self.G = params.grid
        self.cut = self.G * D + 1                    # v-exponent bound (exclusive)
        self._vcut = _mono((self.cut, 0, 0))
        roots = sorted(R.positive_roots, key=lambda a: -R.height(a))
        self.nonsimple = [a for a in roots if R.height(a) > 1]
        self.ratio = max(Fraction(R.height(a)) / R.nu(a) for a in R.positive_roots)
        self._uni = {}
        self._coeffs = {}

    def _poly_of(self, x):
        """RatFunc monomial/Laurent polynomial with nonnegative exponents -> fmpz_mpoly."""
        if not x.den.is_one() or any(e < 0 for e in x.exp):
            raise ValueError("expected a polynomial, got %r" % x)
        return x.num * _mono(x.exp)

    def univariate(self, alpha, mpos):
        """Coefficients c_m of the alpha-factor for -mneg <= m <= mpos, truncated."""
        key = (alpha, mpos)
        if key in self._uni:
            return self._uni[key]
        P = self.params
        R = self.R
        nu = R.nu(alpha)
        Qp = self._poly_of(P.q_alpha(alpha))
        Tp = self._poly_of(P.t(alpha))
        vcut = self._vcut
        imax = int(self.D // nu) + 1
        mneg = imax
        hi = mpos + imax + 1
        lo = -mneg
        size = hi - lo + 1
        arr = [_P_ZERO] * size
        arr[-lo] = CTX.from_dict({(0, 0, 0): 1})

        def tr(p):
            return p % vcut
        Qpow = [CTX.from_dict({(0, 0, 0): 1})]
        for _ in range(imax + 1):
            Qpow.append(tr(Qpow[-1] * Qp))
        for i in range(imax + 1):
            # multiply by (1 - z Q^i), divide by (1 - T z Q^i)
            a = Qpow[i]
            new = list(arr)
            for m in range(size - 1, 0, -1):
                if not arr[m - 1].is_zero():
                    new[m] = tr(new[m] - a * arr[m - 1])
            arr = new
            ta = tr(Tp * a)
            for m in range(1, size):
                if not arr[m - 1].is_zero():
                    arr[m] = tr(arr[m] + ta * arr[m - 1])
            # multiply by (1 - z^-1 Q^{i+1}), divide by (1 - T z^-1 Q^{i+1})
            a = Qpow[i + 1]
            new = list(arr)
            for m in range(0, size - 1):
                if not arr[m + 1].is_zero():
                    new[m] = tr(new[m] - a * arr[m + 1])
            arr = new
            ta = tr(Tp * a)
            for m in range(size - 2, -1, -1):
                if not arr[m + 1].is_zero():
                    arr[m] = tr(arr[m] + ta * arr[m + 1])
        out = {m: arr[m - lo] for m in range(lo, mpos + 1) if not arr[m - lo].is_zero()}
        self._uni[key] = out
        return out

    @staticmethod
    def _vval(p):
        return min(int(m[0]) for m in p.monoms())

    def coefficient(self, w):
        """Coefficient of X_w in mu as a QSeries (exact through q^D)."""
        w = tuple(w)
        if w in self._coeffs:
            return self._coeffs[w]
        R = self.R
        G = self.G
        D = self.D
        wa = R.to_alpha(w)
        if any(Fraction(x).denominator != 1 for x in wa):
            res = QSeries.zero(self.cut, G)
            self._coeffs[w] = res
            return res
        ht_w = sum(wa)
        bound_pos = int(self.ratio * D) + abs(ht_w) + 1
        order = self.nonsimple + [R.simple_roots[i] for i in range(R.rank)]
        states = {(0,) * R.rank: CTX.from_dict({(0, 0, 0): 1})}
        cut = self.cut
        for idx, alpha in enumerate(order):
            hta = R.height(alpha)
            uni = self.univariate(alpha, bound_pos // hta + 1)
            uni_val = {m: self._vval(c) for m, c in uni.items()}
            rest = order[idx + 1:]
            ratio_rest = max((Fraction(R.height(a)) / R.nu(a) for a in rest), default=None)
            aa = R.to_alpha(alpha)
            new = {}
            for vec, p in states.items():
                pval = self._vval(p)
                for m, c in uni.items():
                    if pval + uni_val[m] >= cut:
                        continue
                    nv = tuple(x + m * y for x, y in zip(vec, aa))
                    if ratio_rest is None:
                        if nv != tuple(wa):
                            continue
                        budget = cut
                    else:
                        if not rest_can_fix(R, rest, nv, wa):
                            continue
                        excess = sum(nv) - ht_w
                        # the remaining factors must lower the height by `excess`,
                        # which costs at least excess / ratio_rest powers of q
                        need = -(-excess * G // ratio_rest) if excess > 0 else 0
                        budget = cut - int(need)
                        if pval + uni_val[m] >= budget:
                            continue
                    prod_ = (p * c) % _mono((budget, 0, 0))
                    if prod_.is_zero():
                        continue
                    x = new.get(nv)
                    new[nv] = prod_ if x is None else x + prod_
            states = {k: v for k, v in new.items() if not v.is_zero()}
        p = states.get(tuple(wa), _P_ZERO)
        res = QSeries(p, (0, 0, 0), self.cut, G)
        self._coeffs[w] = res
        return res

    def constant_term(self):
        return self.coefficient((0,) * self.R.rank)


def rest_can_fix(R, rest, nv, wa):
    """Whether roots in ``rest`` (all simple, or a mix) can still move nv to wa."""
    if all(R.height(a) == 1 for a in rest):
        # only simple roots left: each remaining simple root fixes one coordinate
        left = {R.to_alpha(a).index(1) for a in rest}
        return all(nv[i] == wa[i] for i in range(R.rank) if i not in left)
    return True


def consterm_product(params, D, variant="q_alpha"):
    """
    The product prod_{alpha>0} prod_{i>=1} (1 - q^{(rho_k,alpha)} Q_i)^2 /
    ((1 - t_alpha q^{(rho_k,alpha)} Q_i)(1 - t_alpha^{-1} q^{(rho_k,alpha)} Q_i))
    as a QSeries through q^D, with Q_i = q_alpha^i (``variant="q_alpha"``)
    or Q_i = q^i (``variant="q"``).
    """
    R = params.datum
    G = params.grid
    cut = G * D + 1
    total = QSeries.from_laurent(ONE, cut, G)
    rk = params.rho_k
    for alpha in R.positive_roots:
        base = params.qpow(params.pair(rk, alpha))
        ta = params.t(alpha)
        step = R.nu(alpha) if variant == "q_alpha" else 1
        i = 1
        while step * i <= D:
            Qi = params.qpow(KScalar(step * i))
            x = base * Qi
            num = (ONE - x) * (ONE - x)
            den = (ONE - ta * x) * (ONE - ta.inverse() * x)
            total = total * QSeries.expand(num / den, cut, G)
            i += 1
    return total


_MU = {}


def mu_series(params, D):
    """A (memoized) MuSeries for the given parameters and q-order."""
    key = (id(params), D)
    hit = _MU.get(key)
    if hit is None or hit[0] is not params:
        hit = (params, MuSeries(params, D))
        _MU[key] = hit
    return hit[1]


def inner_product_circ(params, f, g, D, mu=None):
    """
    <f, g>_circ = <mu_circ f g^*> as a QSeries exact through q^D (less the
    negative q-valuation of the coefficients of f and g).
    """
    mu = mu or mu_series(params, D)
    cut = mu.cut
    G = params.grid
    ct = mu.constant_term()
    total = QSeries.zero(cut, G)
    gs = g.conj()
    fe = {b: QSeries.expand(c, cut, G) for b, c in f.terms.items()}
    ge = {b: QSeries.expand(c, cut, G) for b, c in gs.terms.items()}
    for b, x in fe.items():
        for c, y in ge.items():
            # <X_b X_c mu> = coefficient of X_{-b-c} in mu
            m = mu.coefficient(vneg(vadd(b, c)))
            if m.poly.is_zero():
                continue
            total = total + x * y * m
    return total * ct.inverse_series(cut)


def star_apply(V, gen, f):
    """H^star(f) for a generator H = ("T", i), ("X", b) or ("pi", r)."""
    kind, a = gen
    if kind == "T":
        return V.Tinv(a, f)
    if kind == "X":
        return V.X(vneg(a), f)
    if kind == "pi":
        return V.pi_inv(a, f)
    raise ValueError("unknown generator %r" % (gen,))


def gen_apply(V, gen, f):
    kind, a = gen
    if kind == "T":
        return V.T(a, f)
    if kind == "X":
        return V.X(a, f)
    if kind == "pi":
        return V.pi(a, f)
    raise ValueError("unknown generator %r" % (gen,))


def check_unitarity(params, gen, pairs, D):
    """
    Compare <H f, g>_circ with <f, H^star g>_circ for each (f, g) in pairs.
    Returns a list of (ok, first differing q-order or None).
    """
    V = PolyRep(params)
    mu = mu_series(params, D)
    out = []
    for f, g in pairs:
        lhs = inner_product_circ(params, gen_apply(V, gen, f), g, D, mu)
        rhs = inner_product_circ(params, f, star_apply(V, gen, g), D, mu)
        d = lhs.first_difference(rhs)
        out.append((d is None, d))
    return out


def truncate_laurent(x, vmax):
    """Drop the terms of a Laurent RatFunc whose v-exponent exceeds vmax."""
    if not x.is_laurent():
        raise ValueError("expected a Laurent polynomial")
    d = {}
    for m, c in _terms(x.num):
        e = (m[0] + x.exp[0], m[1] + x.exp[1], m[2] + x.exp[2])
        if e[0] <= vmax:
            d[e] = c
    return RatFunc.from_dict(d)


def gaussian_inverse_series(params, D, margin):
    """
    The truncated Laurent series sum_b q^{(b,b)/2} X_b over b in B with
    (b,b)/2 - margin(b) <= D; margin bounds the q-loss of later operators.
    """
    R = params.datum
    terms = {}
    bound = 1
    while True:
        added = False
        for b in R.lattice_points(bound):
            if max(abs(x) for x in b) != bound and bound > 1:
                continue
            n = R.pair(b, b) / 2
            if n - margin(b) <= D:
                terms[b] = params.qpow(KScalar(n))
                added = True
        if not added and bound > 1:
            break
        bound += 1
    if (0,) * R.rank not in terms:
        terms[(0,) * R.rank] = ONE
    return LaurentPoly(terms)


def tau_plus_apply(V, gen, f):
    """tau_+(H)(f) for H = ("T", i), ("X", b), ("pi", r)."""
    R = V.R
    kind, a = gen
    if kind == "T" and a < 0:
        # tau_+(T_0) = X_0^{-1} T_0^{-1} = q^{-1} X_theta T_0^{-1}
        return V.Tinv(a, f).shift(R.theta).scale(V.qinv)
    if kind == "pi":
        om = R.omega(a)
        return V.pi(a, f).shift(om).scale(V.params.qpow(KScalar(-R.pair(om, om) / 2)))
    return gen_apply(V, gen, f)


def verify_tau_plus(params, gen, monomials, D):
    """
    Check H(gamma^{-1} f) = gamma^{-1} tau_+(H)(f) through q^D for each
    monomial f; gamma^{-1} is the series sum_b q^{(b,b)/2} X_b.  Returns a
    list of booleans.
    """
    R = params.datum
    V = PolyRep(params)
    G = params.grid
    deg = max((max(abs(x) for x in m) for m in monomials), default=0)
    th2 = 2 * R.pair(R.theta_long, R.theta_long)

    def margin(b):
        # q-loss of T_0, T_0^{-1}, pi_r on X_b is at most |(b, theta)| + 2,
        # and multiplying by a monomial of degree <= deg shifts (b,b)/2
        n = float(R.pair(b, b))
        return (th2 * n) ** 0.5 * (deg + 2) + 2 * deg * deg + 4
    gam = gaussian_inverse_series(params, D, margin)
    vmax = G * D
    out = []
    for a in monomials:
        f = LaurentPoly.monomial(a)
        lhs = gen_apply(V, gen, gam * f)
        rhs = gam * tau_plus_apply(V, gen, f)
        lt = lhs.map_coeffs(lambda c: truncate_laurent(c, vmax))
        rt = rhs.map_coeffs(lambda c: truncate_laurent(c, vmax))
        out.append(lt == rt)
    return out


def affine_braid_orders(R):
    """{(i, j): m_ij} for affine simple reflections with finite m_ij (alpha_0 = -theta)."""
    ranks = [-1] + list(range(R.rank))
    roots = {i: (R.simple_roots[i] if i >= 0 else vneg(R.theta)) for i in ranks}
    out = {}
    for x in ranks:
        for y in ranks:
            if x >= y:
                continue
            a, b = roots[x], roots[y]
            prod = 4 * R.pair(a, b) ** 2 / (R.pair(a, a) * R.pair(b, b))
            m = {0: 2, 1: 3, 2: 4, 3: 6}.get(prod)
            if m is not None:
                out[(x, y)] = m
    return out


def monomials_up_to(R, degree):
    """Weights of B with sum of |omega-coordinates| at most ``degree``."""
    return [b for b in R.lattice_points(degree) if sum(abs(x) for x in b) <= degree]


def check_relations(params, monomials):
    """
    Verify the defining relations of the double affine Hecke algebra on the
    given monomials: quadratic relations, braid relations, pi_r T_i pi_r^{-1}
    = T_j, the cross relations T_i X_b - X_{s_i(b)} T_i =
    (t_i^{1/2} - t_i^{-1/2}) (s_i(X_b) - X_b) / (X_{alpha_i} - 1) and
    pi_r X_b pi_r^{-1} = X_{pi_r(b)}, for b in a basis of B.
    Returns {relation name: first failing monomial or None}.
    """
    R = params.datum
    V = PolyRep(params)
    ranks = [-1] + list(range(R.rank))
    fs = [LaurentPoly.monomial(b) for b in monomials]
    basis = [R.fund_weights[i] for i in range(R.rank) if R.in_B(R.fund_weights[i])]
    if len(basis) < R.rank:
        basis = list(R.simple_roots)
    out = {}

    def record(name, test):
        bad = None
        for b, f in zip(monomials, fs):
            if not test(f):
                bad = b
                break
        out[name] = bad

    for i in ranks:
        th, td = V.t_half(i), V.t_diff(i)
        record("quadratic T%d" % max(i + 1, 0),
               lambda f, i=i, th=th, td=td: V.T(i, V.T(i, f)) == V.T(i, f).scale(td) + f)
    for (x, y), m in affine_braid_orders(R).items():
        def braid(f, x=x, y=y, m=m):
            a, b = f, f
            for j in range(m):
                a = V.T(x if j % 2 == 0 else y, a)
                b = V.T(y if j % 2 == 0 else x, b)
            return a == b
        record("braid T%d T%d" % (max(x + 1, 0), max(y + 1, 0)), braid)
    for r in R.Pi_flat:
        if r < 0:
            continue
        pe = pi_element(R, r)
        for i in ranks:
            img = pe.act_root(affine_simple_root(R, i))
            j = next(j for j in ranks if affine_simple_root(R, j) == img)
            record("pi%d T%d" % (r + 1, max(i + 1, 0)),
                   lambda f, r=r, i=i, j=j: V.pi(r, V.T(i, V.pi_inv(r, f))) == V.T(j, f))
        for a in basis:
            img = V.pi(r, LaurentPoly.monomial(a))
            record("pi%d X%s" % (r + 1, list(a)),
                   lambda f, r=r, a=a, img=img: V.pi(r, V.X(a, V.pi_inv(r, f))) == img * f)
    for i in ranks:
        td = V.t_diff(i)
        if i < 0:
            denom = LaurentPoly({vneg(R.theta): V.q, (0,) * R.rank: -ONE})
        else:
            denom = LaurentPoly({R.simple_roots[i]: ONE, (0,) * R.rank: -ONE})
        for a in basis:
            xa = LaurentPoly.monomial(a)
            sxa = V.s(i, xa)
            rhs_poly = divide_exact(sxa - xa, denom, R).scale(td)
            record("cross T%d X%s" % (max(i + 1, 0), list(a)),
                   lambda f, i=i, a=a, sxa=sxa, rhs_poly=rhs_poly:
                   V.T(i, V.X(a, f)) - sxa * V.T(i, f) == rhs_poly * f)
    return out

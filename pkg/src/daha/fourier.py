"""
Functions on the extended affine Weyl group and difference Fourier transforms.

A ``FuncElem`` is a finitely supported function on affine Weyl group
elements, stored in the delta-basis: ``coeffs[w]`` is the coefficient of
delta_w = mu_bullet(w)^{-1} chi_w.  At the spherical point xi = -rho_k the
support is restricted to the elements pi_b, and we identify pi_b with b_#.

Infinite sums (constant terms, Jackson sums) are evaluated as truncated
q-series; everything else is exact.
"""

from fractions import Fraction

from .aweyl import pi_decomposition, pi_element, simple_reflection
from .coeff import ONE, ZERO, QSeries
from .macdonald import (b_sharp, e_polynomial, length_t_factor, succ_compare,
                        varsigma)
from .polyrep import LaurentPoly, inner_product_circ, mu_series
from .rootsys import KScalar, KVec


class FourierError(ArithmeticError):
    """A vanishing denominator or an element outside the declared index set."""


# ---------------------------------------------------------------------------
# points and the measure


def point_of(params, x, xi=None):
    """The point x<<xi>> (xi = None means -rho_k) as a KVec."""
    if xi is None:
        xi = -params.rho_k
    return x.act_kvec(KVec.lift(xi))


def is_pi_element(x):
    R = x.datum
    b = x.act((0,) * R.rank)
    if not R.in_B(b):
        return False
    return pi_decomposition(R, tuple(int(c) for c in b))[0] == x


def mu_bullet(params, x, xi=None):
    """
    mu_bullet(x) = prod over [alpha, nu_alpha j] in lambda(x) of
    (t^{-1/2} - q_alpha^j t^{1/2} X_alpha(q^xi)) / (t^{1/2} - q_alpha^j t^{-1/2} X_alpha(q^xi)).
    """
    if xi is None:
        xi = -params.rho_k
    val = ONE
    for alpha, c in sorted(x.lambda_set(), key=lambda rt: (rt[1], rt[0])):
        th = params.t_half(alpha)
        y = params.qpow(KScalar(c) + params.pair(alpha, xi))
        num = th.inverse() - y * th
        den = th - y * th.inverse()
        if den.is_zero():
            raise FourierError("mu_bullet factor [%s, %s] has a vanishing denominator" % (alpha, c))
        val = val * num / den
    return val


def mu_bullet_pi(params, b):
    return mu_bullet(params, pi_decomposition(params.datum, tuple(b))[0])


def t_coefficients(params, i, p):
    """
    (A, B) with T_i(delta_w) = A delta_{s_i w} - B delta_w at the point p = w<<xi>>:
    A = (t^{1/2} X - t^{-1/2}) / (X - 1), B = (t^{1/2} - t^{-1/2}) / (X - 1),
    X = X_{alpha_i}(q^p) (with alpha_0 = [-theta, 1]).
    """
    R = params.datum
    if i < 0:
        X = params.qpow(KScalar(1) - params.pair(R.theta, p))
        alpha = R.theta
    else:
        X = params.qpow(params.pair(R.simple_roots[i], p))
        alpha = R.simple_roots[i]
    th = params.t_half(alpha)
    den = X - ONE
    if den.is_zero():
        raise FourierError("X_alpha_%d = 1 at %r" % (max(i + 1, 0), p))
    return (th * X - th.inverse()) / den, (th - th.inverse()) / den


# ---------------------------------------------------------------------------
# functions


class FuncElem:
    """
    A finitely supported function, stored by delta-coordinates.

    EXAMPLES::

        >>> from daha.rootsys import build_root_datum, Params
        >>> P = Params(build_root_datum("A", 1))
        >>> d = FuncElem.delta_pi(P, (0,))
        >>> d.value_pi((0,))
        1
    """

    def __init__(self, params, coeffs=None, xi=None):
        self.params = params
        self.xi = xi
        self.coeffs = {}
        for x, c in (coeffs or {}).items():
            if not c.is_zero():
                self.coeffs[x] = c
        if xi is None:
            for x in self.coeffs:
                if not is_pi_element(x):
                    raise FourierError("%r is outside pi_B" % (x,))

    @classmethod
    def delta(cls, params, x, xi=None):
        return cls(params, {x: ONE}, xi)

    @classmethod
    def delta_pi(cls, params, b):
        return cls(params, {pi_decomposition(params.datum, tuple(b))[0]: ONE})

    @classmethod
    def from_values(cls, params, values, xi=None):
        """From a map element -> function value (chi-coordinates)."""
        return cls(params, {x: v * mu_bullet(params, x, xi) for x, v in values.items()}, xi)

    def value(self, x):
        c = self.coeffs.get(x)
        if c is None:
            return ZERO
        return c / mu_bullet(self.params, x, self.xi)

    def value_pi(self, b):
        return self.value(pi_decomposition(self.params.datum, tuple(b))[0])

    def values(self):
        return {x: self.value(x) for x in self.coeffs}

    def support_pi(self):
        """The weights b of the support (for xi = -rho_k)."""
        R = self.params.datum
        return sorted(tuple(int(c) for c in x.act((0,) * R.rank)) for x in self.coeffs)

    def _new(self, coeffs):
        return FuncElem(self.params, coeffs, self.xi)

    def __add__(self, other):
        out = dict(self.coeffs)
        for x, c in other.coeffs.items():
            out[x] = out[x] + c if x in out else c
        return self._new(out)

    def __neg__(self):
        return self._new({x: -c for x, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return self._new({x: c * v for x, v in self.coeffs.items()})

    def conj(self):
        return self._new({x: c.conj() for x, c in self.coeffs.items()})

    def reflect_varsigma(self):
        """h -> h^varsigma with h^varsigma(pi_b) = h(pi_{varsigma(b)}), for xi = -rho_k."""
        R = self.params.datum
        out = {}
        for b in self.support_pi():
            y = pi_decomposition(R, varsigma(R, b))[0]
            x = pi_decomposition(R, b)[0]
            # values move, delta-coordinates pick up the mu ratio
            out[y] = self.coeffs[x] / mu_bullet(self.params, x) * mu_bullet(self.params, y)
        return self._new(out)

    def __eq__(self, other):
        return isinstance(other, FuncElem) and self.coeffs == other.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "0"
        R = self.params.datum
        parts = []
        for x in sorted(self.coeffs, key=lambda y: (y.length(), y.b)):
            lab = "pi%s" % (list(x.act((0,) * R.rank)),) if self.xi is None else repr(x)
            parts.append("(%r)*delta[%s]" % (self.coeffs[x], lab))
        return " + ".join(parts)


def discretize(params, f, elements, xi=None):
    """
    (delta f)(x) = f(q^{x<<xi>>}) on the given elements, as a FuncElem.
    Raises PoleError through the coefficients if a value is undefined.
    """
    values = {x: f.evaluate(params, point_of(params, x, xi)) for x in elements}
    return FuncElem.from_values(params, values, xi)


def discretize_pi(params, f, weights):
    R = params.datum
    return discretize(params, f, [pi_decomposition(R, tuple(b))[0] for b in weights])


# ---------------------------------------------------------------------------
# the action on delta-functions


def t_bullet(params, i, g):
    """T_i acting on a FuncElem in the delta-basis."""
    R = params.datum
    si = simple_reflection(R, i)
    out = {}
    for x, c in g.coeffs.items():
        A, B = t_coefficients(params, i, point_of(params, x, g.xi))
        out[x] = out.get(x, ZERO) - B * c
        if A.is_zero():
            continue
        y = si * x
        if g.xi is None and not is_pi_element(y):
            raise FourierError("T_%d leaves pi_B at %r" % (max(i + 1, 0), x))
        out[y] = out.get(y, ZERO) + A * c
    return g._new(out)


def t_bullet_inv(params, i, g):
    R = params.datum
    a = R.simple_roots[i] if i >= 0 else R.theta
    td = params.t_half(a) - params.t_half(a).inverse()
    return t_bullet(params, i, g) - g.scale(td)


def pi_bullet(params, r, g):
    if r < 0:
        return g
    p = pi_element(params.datum, r)
    return g._new({p * x: c for x, c in g.coeffs.items()})


def x_bullet(params, a, g):
    """X_a acts by multiplication by q^{(a, x<<xi>>)}."""
    return g._new({x: c * params.qpow(params.pair(a, point_of(params, x, g.xi)))
                   for x, c in g.coeffs.items()})


def t_bullet_w0(params, g, inverse=False):
    """T_{w_0} (or its inverse) on the delta-side."""
    word = params.datum.w0_word
    if inverse:
        for i in word:
            g = t_bullet_inv(params, i, g)
        return g
    for i in reversed(word):
        g = t_bullet(params, i, g)
    return g


# ---------------------------------------------------------------------------
# transforms


def expand_in_e(params, f):
    """
    Coefficients g_b with f = sum g_b E_b / E_b(q^{-rho_k}), found by
    triangularity: a support weight succeeding no other support weight is a
    leading term.
    """
    R = params.datum
    rest = f
    out = {}
    while not rest.is_zero():
        supp = rest.support()
        lead = None
        for b in supp:
            if not any(succ_compare(R, c, b) == "b<c" for c in supp if c != b):
                lead = b
                break
        if lead is None:
            raise FourierError("no leading term in %r" % (rest,))
        E = e_polynomial(params, lead)
        c = rest.coeff(lead)
        g = c * E.eval_at_rho
        out[lead] = out.get(lead, ZERO) + g
        rest = rest - E.poly.scale(c)
    return {b: g for b, g in out.items() if not g.is_zero()}


def spherical_e(params, b):
    return e_polynomial(params, b).spherical()


def transform_psi(params, f):
    """psi(sum g_b E_b) = sum g_b^* delta_b (spherical normalization)."""
    R = params.datum
    g = expand_in_e(params, f)
    return FuncElem(params, {pi_decomposition(R, b)[0]: c.conj() for b, c in g.items()})


def _w0_scale(params, sign):
    return length_t_factor(params, params.datum.w0, sign)


def transform_phi(params, f):
    """phi(sum g_b E_b) = sum g_b prod t^{l(w_0)/2} T_{w_0}^{-1}(delta_{varsigma(b)})."""
    R = params.datum
    g = expand_in_e(params, f)
    total = FuncElem(params)
    for b, c in g.items():
        d = FuncElem.delta_pi(params, varsigma(R, b))
        total = total + t_bullet_w0(params, d, inverse=True).scale(c)
    return total.scale(_w0_scale(params, 1))


def phi_by_pairing(params, f, b, D):
    """<f E_b mu_circ> as a QSeries (the defining formula of phi at pi_b)."""
    return inner_product_circ(params, f, spherical_e(params, b).conj(), D)


def psi_by_pairing(params, f, b, D):
    """<E_b, f>_circ as a QSeries (the defining formula of psi at pi_b)."""
    return inner_product_circ(params, spherical_e(params, b), f, D)


def _series(params, x, D):
    cut = params.grid * D + 1
    return QSeries.expand(x, cut, params.grid)


def verify_transform_window(params, f, weights, D):
    """
    Compare phi(f)(pi_b) and psi(f)(pi_b) from the explicit formulas with the
    pairings truncated at q-order D, for b in ``weights``.  Returns a list of
    (b, phi_ok, psi_ok).
    """
    ph = transform_phi(params, f)
    ps = transform_psi(params, f)
    out = []
    for b in weights:
        a1 = phi_by_pairing(params, f, b, D)
        a2 = psi_by_pairing(params, f, b, D)
        v1 = _series(params, ph.value_pi(b), D)
        v2 = _series(params, ps.value_pi(b), D)
        out.append((tuple(b), a1 == v1, a2 == v2))
    return out


def inverse_transform(params, fhat):
    """
    f = prod t^{-l(w_0)/2} <fhat T_{w_0}(E_{varsigma(.)}) mu_bullet>_#.

    The function b -> E_{varsigma(b)} is regarded as an element of F_# with
    polynomial values; T_{w_0} acts on it as on delta-functions.  Returns a
    LaurentPoly.
    """
    R = params.datum
    total = LaurentPoly()
    for b in fhat.support_pi():
        # <fhat H mu>_# with fhat = sum c_b delta_b picks c_b H(pi_b)
        x = pi_decomposition(R, b)[0]
        c = fhat.coeffs[x]
        total = total + _tw0_e_at(params, b).scale(c)
    return total.scale(_w0_scale(params, -1))


def _tw0_e_at(params, b):
    """The value at pi_b of T_{w_0} applied to the polynomial-valued function c -> E_{varsigma(c)}."""
    R = params.datum
    # expand T_{w_0}(delta_c) and read off coefficients at delta_b:
    # H = sum_c E_{varsigma(c)} chi_c = sum_c E_{varsigma(c)} mu(c) delta_c,
    # so (T H)(pi_b) = sum_c E_{varsigma(c)} mu(c) [T delta_c](pi_b)
    out = LaurentPoly()
    for c in R.orbit(b):
        d = t_bullet_w0(params, FuncElem.delta_pi(params, c))
        v = d.value_pi(b)
        if v.is_zero():
            continue
        out = out + spherical_e(params, varsigma(R, c)).scale(v * mu_bullet_pi(params, c))
    return out


def sharp_pairing(params, f, g):
    """<f g mu_bullet>_# = sum_b f(pi_b) g(pi_b) mu_bullet(pi_b) (no conjugation)."""
    total = ZERO
    keys = set(f.coeffs) & set(g.coeffs)
    for x in keys:
        total = total + f.coeffs[x] * g.coeffs[x] / mu_bullet(params, x, f.xi)
    return total


def plancherel_sides(params, f, g, D):
    """
    (<f g mu_circ>, prod t^{-l(w_0)/2} <fhat T_{w_0}(ghat^varsigma) mu_bullet>_#) as QSeries.
    """
    lhs = inner_product_circ(params, f, g.conj(), D)
    fh = transform_phi(params, f)
    gh = transform_phi(params, g).reflect_varsigma()
    rhs = sharp_pairing(params, fh, t_bullet_w0(params, gh)) * _w0_scale(params, -1)
    return lhs, _series(params, rhs, D)


# ---------------------------------------------------------------------------
# Gaussians and Jackson sums


def gaussian_value(params, b):
    """gamma(pi_b) = q^{(b - 2 u_b^{-1} rho_k, b)/2}, the Gaussian up to q^{(rho_k,rho_k)/2}."""
    R = params.datum
    pib, _ = pi_decomposition(R, tuple(b))
    shifted = KVec.lift(b) - params.rho_k.apply(pib.w).scale(2)
    return params.qpow(params.pair(shifted, b) * Fraction(1, 2))


def gaussian_series(params, bound):
    """sum of q^{(a,a)/2} X_a over a in B with (a,a)/2 <= bound."""
    R = params.datum
    out = {}
    r = 0
    while True:
        found = False
        for a in R.lattice_points(r):
            if r and max(abs(x) for x in a) != r:
                continue
            n = R.pair(a, a) / 2
            if n <= bound:
                out[a] = params.qpow(KScalar(n))
                found = True
        if not found and r > 0:
            break
        r += 1
    return LaurentPoly(out)


def _min_val(params, f):
    """Lowest q-exponent among the coefficients of f (after expansion)."""
    lo = 0
    for c in f.terms.values():
        s = QSeries.expand(c, 1, params.grid)
        lo = min(lo, Fraction(s.valuation(), params.grid))
    return lo


def mehta_product(params, D):
    """prod_{alpha>0} prod_{j>=1} (1 - t^{-1} q_alpha^{(rho_k,alpha^vee)+j}) / (1 - q_alpha^{(rho_k,alpha^vee)+j})."""
    R = params.datum
    G = params.grid
    cut = G * D + 1
    total = QSeries.from_laurent(ONE, cut, G)
    for alpha in R.positive_roots:
        nu = R.nu(alpha)
        base = params.qpow(params.pair(params.rho_k, alpha))      # q_alpha^{(rho_k, alpha^vee)}
        ti = params.t(alpha).inverse()
        j = 1
        while nu * j <= D + 1:
            x = base * params.q_alpha(alpha, j)
            total = total * QSeries.expand((ONE - ti * x) / (ONE - x), cut, G)
            j += 1
    return total


def gauss_integral_check(params, b, c, D):
    """
    Both sides of
      <E_b E_c gamma^{-1} mu_circ> = q^{(b,b)/2 - (b,u_b^{-1} rho_k) + (c,c)/2 - (c,u_c^{-1} rho_k)}
                                     E_c(q^{b_#}) <gamma^{-1} mu_circ>
    for spherical E, and of <gamma^{-1} mu_circ> against the product formula.
    Returns a dict with the series and the verdicts.
    """
    R = params.datum
    Eb = spherical_e(params, b)
    Ec = spherical_e(params, c)
    prod = Eb * Ec
    margin = -_min_val(params, prod) + 2
    gam = gaussian_series(params, D + margin + 1)
    mu = mu_series(params, D)
    one = LaurentPoly.constant(R.rank)
    lhs = inner_product_circ(params, prod * gam, one, D, mu)
    base = inner_product_circ(params, gam, one, D, mu)

    def ex(a):
        pib, _ = pi_decomposition(R, tuple(a))
        return KScalar(R.pair(a, a) / 2) - params.pair(params.rho_k.apply(pib.w), a)
    scal = params.qpow(ex(b) + ex(c)) * Ec.evaluate(params, b_sharp(params, b))
    rhs = base * _series(params, scal, D)
    mehta = mehta_product(params, D)
    return {
        "lhs": lhs, "rhs": rhs, "constant": base, "product": mehta,
        "identity": lhs == rhs, "constant_ok": base == mehta,
    }


def h_theta(params):
    """h_theta(k) = (rho_k, theta^vee) + k_theta."""
    R = params.datum
    th = R.theta
    return params.pair(params.rho_k, th) * Fraction(2, R.pair(th, th)) + params.k_of(th)


def jackson_sum_eta(params, D):
    """
    Both sides of the eta-identity for h_theta(k) = -1:
      sum_{b in B} q^{(b+rho_k, b+rho_k)/2}
        = (sum_{pi_r in Pi_flat} q^{(omega_r+rho_k, omega_r+rho_k)/2})
          prod_{alpha>0, j>=1} (1 - t^{-1} q_alpha^{(rho_k,alpha^vee)+j}) / (1 - q_alpha^{(rho_k,alpha^vee)+j}),
    as q-series through q^D, together with the nonzero values of mu_bullet(pi_b).
    """
    R = params.datum
    if params.formal:
        raise ValueError("k must be a specialized rational number")
    if h_theta(params) != KScalar(-1):
        raise ValueError("hypothesis h_theta(k) = -1 fails (h_theta = %s)" % h_theta(params))
    G = params.grid
    cut = G * D + 1
    rk = params.rho_k
    shift = params.pair(rk, rk) * Fraction(1, 2)
    # terms: (b,b)/2 + (b,rho_k) + (rho_k,rho_k)/2
    terms = {}
    r = 0
    while True:
        found = False
        for b in R.lattice_points(r):
            if r and max(abs(x) for x in b) != r:
                continue
            e = KScalar(R.pair(b, b) / 2) + params.pair(rk, b) + shift
            e = params.normalize(e).c0
            if e <= D + 1:
                found = True
            if e < D + 1:
                terms[b] = e
        if not found and r > 0:
            break
        r += 1
    lhs = QSeries.zero(cut, G)
    for e in terms.values():
        lhs = lhs + QSeries.from_laurent(params.qpow(KScalar(e)), cut, G)
    head = ZERO
    for r in R.Pi_flat:
        om = R.omega(r)
        om_e = KScalar(R.pair(om, om) / 2) + params.pair(rk, om) + shift
        head = head + params.qpow(om_e)
    rhs = QSeries.from_laurent(head, cut, G) * mehta_product(params, D)
    support = {}
    for b in sorted(terms):
        m = mu_bullet_pi(params, b)
        if not m.is_zero():
            support[b] = m
    return {
        "lhs": lhs, "rhs": rhs, "equal": lhs == rhs,
        "mu_support": support, "pi_flat": len(R.Pi_flat),
        "support_ok": len(support) == len(R.Pi_flat) and all(v.is_one() for v in support.values()),
    }

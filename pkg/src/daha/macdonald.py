"""
Nonsymmetric Macdonald polynomials.

E_b is built by the intertwiner recursion along a reduced word of pi_b:
starting from E_0 = 1, each arrow c -> s_i<<c>> applies the Y-intertwiner
t_i^(1/2) tau_+(Phi_i^c) and each arrow c -> pi_r<<c>> applies
tau_+(pi_r).  The module also provides the evaluation, duality, norm and
conjugation formulas and the symmetrization to P-polynomials.
"""

from fractions import Fraction

from .aweyl import (lambda_prime, pi_decomposition, pi_element, simple_reflection,
                    succ_compare)
from .coeff import ONE
from .polyrep import LaurentPoly, PolyRep
from .rootsys import KScalar, KVec, vneg


class RecursionPoleError(ZeroDivisionError):
    """An intertwiner denominator vanishes for the chosen parameters."""


def b_sharp(params, b):
    """b_# = b - u_b^{-1}(rho_k) as a KVec."""
    pib, _ = pi_decomposition(params.datum, b)
    return KVec.lift(b) - params.rho_k.apply(pib.w)


def x_alpha_i_at(params, i, z):
    """X_{alpha_i}(q^z) with alpha_0 = [-theta, 1]."""
    R = params.datum
    if i < 0:
        return params.qpow(KScalar(1) - params.pair(R.theta, z))
    return params.qpow(params.pair(R.simple_roots[i], z))


class NonsymPoly:
    """E_b together with its spectral data."""

    def __init__(self, params, b, poly):
        self.params = params
        self.b = tuple(b)
        self.poly = poly
        self.b_sharp = b_sharp(params, b)
        self.lambda_prime = lambda_prime(params.datum, b)

    @property
    def eval_at_rho(self):
        return self.poly.evaluate(self.params, -self.params.rho_k)

    def spherical(self):
        """The spherical normalization E_b / E_b(q^{-rho_k})."""
        return self.poly.scale(self.eval_at_rho.inverse())

    def __repr__(self):
        return "E_%s = %r" % (list(self.b), self.poly)


_CACHE = {}


def e_polynomial(params, b, word=None):
    """
    E_b by the intertwiner recursion.  ``word`` optionally gives another
    (not necessarily reduced) decomposition pi_b = pi_r s_{w[-1]} ... s_{w[0]}
    as a pair (r, w); the default is the reduced word of pi_b.
    """
    R = params.datum
    b = tuple(b)
    key = (id(params), b, word)
    if key in _CACHE:
        return _CACHE[key][1]
    if word is None:
        pib, _ = pi_decomposition(R, b)
        r, w = pib.reduced_word()
    else:
        r, w = word
    E, c = _chain(params, r, w, "E")
    if c != b:
        raise ValueError("word does not lead to %s" % (b,))
    lead = E.coeff(b)
    if not lead.is_one():
        raise AssertionError("E_%s is not monic: leading coefficient %r" % (b, lead))
    res = NonsymPoly(params, b, E)
    _CACHE[key] = (params, res)
    return res


def _chain(params, r, w, mode):
    """
    Run the intertwiner chain for pi_r s_{w[-1]} ... s_{w[0]} starting at
    c = 0, f = 1.  mode "E" gives E_b, mode "hat" gives E-hat_b (the
    G-intertwiners, normalized to fix the value at q^{-rho_k}).
    """
    R = params.datum
    V = _rep(params)
    E = LaurentPoly.constant(R.rank)
    c = (0,) * R.rank
    for i in w:
        nb = tuple(int(x) for x in simple_reflection(R, i).act(c))
        den = x_alpha_i_at(params, i, b_sharp(params, c)) - ONE
        if den.is_zero():
            raise RecursionPoleError(
                "intertwiner denominator vanishes at s_%d from %s" % (max(i + 1, 0), c))
        phic = V.t_diff(i) / den
        if i < 0:
            # tau_+(T_0) = X_0^{-1} T_0^{-1} = q^{-1} X_theta T_0^{-1}
            te = V.Tinv(i, E).shift(R.theta).scale(V.qinv)
        else:
            te = V.T(i, E)
        E = te + E.scale(phic)
        if mode == "E":
            scal = V.t_half(i) * params.qpow(KScalar((R.pair(nb, nb) - R.pair(c, c)) / 2))
        else:
            phi = V.t_half(i) + phic
            if phi.is_zero():
                raise RecursionPoleError("phi_%d vanishes at %s" % (max(i + 1, 0), c))
            scal = phi.inverse()
        E = E.scale(scal)
        c = nb
    if r >= 0:
        nb = tuple(int(x) for x in pi_element(R, r).act(c))
        om = R.omega(r)
        ex = -R.pair(om, om) / 2
        if mode == "E":
            ex += (R.pair(nb, nb) - R.pair(c, c)) / 2
        E = V.pi(r, E).shift(om).scale(params.qpow(KScalar(ex)))
        c = nb
    return E, c


def e_hat(params, b, word=None):
    """E-hat_b = tau_+(pi_r G_{i_l}^{c_l} ... G_{i_1}^{c_1})(1)."""
    R = params.datum
    if word is None:
        r, w = pi_decomposition(R, tuple(b))[0].reduced_word()
    else:
        r, w = word
    E, c = _chain(params, r, w, "hat")
    if c != tuple(b):
        raise ValueError("word does not lead to %s" % (tuple(b),))
    return E


def spherical_from_hat(params, b):
    """
    q^{(b_- - 2 rho_k, b_-)/2} E-hat_b, which equals the spherical E_b.
    The exponent is forced by the evaluation formula: E_b q^{-(b,b)/2} is
    the lambda'-product times E-hat_b, and E_b(q^{-rho_k}) carries
    q^{(rho_k, b_-)}.
    """
    bm = pi_decomposition(params.datum, tuple(b))[0].b
    ex = params.pair(KVec.lift(bm) - params.rho_k.scale(2), bm) * Fraction(1, 2)
    return e_hat(params, b).scale(params.qpow(ex))


_REPS = {}


def _rep(params):
    key = id(params)
    if key not in _REPS or _REPS[key][0] is not params:
        _REPS[key] = (params, PolyRep(params))
    return _REPS[key][1]


def _filtered(params, lam):
    """Drop roots whose length has k_nu = 0."""
    if params.formal:
        return lam
    R = params.datum
    out = []
    for alpha, j in lam:
        k = params.k_lng if R.is_long(alpha) else params.k_sht
        if k != 0:
            out.append((alpha, j))
    return out


def evaluation_product(params, b):
    """
    q^{(rho_k, b_-)} prod over lambda'(pi_b) of
    (1 - q_alpha^j t_alpha X_alpha(q^rho_k)) / (1 - q_alpha^j X_alpha(q^rho_k)).
    """
    R = params.datum
    pib, _ = pi_decomposition(R, b)
    bm = pib.b
    val = params.qpow(params.pair(params.rho_k, bm))
    for alpha, j in _filtered(params, lambda_prime(R, b)):
        x = params.q_alpha(alpha, j) * params.X_at(alpha, params.rho_k)
        num = ONE - x * params.t(alpha)
        den = ONE - x
        val = val * num / den
    return val


def spherical_value(params, b):
    """(E_b(q^{-rho_k}) by direct substitution, product formula value)."""
    E = e_polynomial(params, b)
    return E.eval_at_rho, evaluation_product(params, b)


def m_factor(params, b):
    """The *-invariant factor M_b with E_b(q^{-rho_k}) = prod t_nu^{-l_nu(u_b)/2} M_b."""
    R = params.datum
    val = ONE
    for alpha, j in _filtered(params, lambda_prime(R, b)):
        x = params.q_alpha(alpha, j) * params.X_at(alpha, params.rho_k)
        th = params.t_half(alpha)
        val = val * (th.inverse() - x * th) / (ONE - x)
    return val


def length_t_factor(params, w, sign=1):
    """prod_nu t_nu^{sign * l_nu(w) / 2}."""
    R = params.datum
    ls, ll = R.length_by_nu(w)
    val = ONE
    if ls:
        a = next(a for a in R.positive_roots if not R.is_long(a))
        val = val * params.t_half(a) ** (sign * ls)
    if ll:
        a = next(a for a in R.positive_roots if R.is_long(a))
        val = val * params.t_half(a) ** (sign * ll)
    return val


def spherical_at(params, b, z):
    """The spherical polynomial of weight b evaluated at q^z."""
    E = e_polynomial(params, b)
    return E.poly.evaluate(params, z) / E.eval_at_rho


def verify_duality(params, b, c):
    lhs = spherical_at(params, b, b_sharp(params, c))
    rhs = spherical_at(params, c, b_sharp(params, b))
    return lhs == rhs, lhs, rhs


def norm(params, b):
    """
    prod over lambda'(pi_b) of (t^{1/2} - q_alpha^j t^{-1/2} X_alpha(q^rho_k))
    / (t^{-1/2} - q_alpha^j t^{1/2} X_alpha(q^rho_k)).
    """
    R = params.datum
    val = ONE
    for alpha, j in _filtered(params, lambda_prime(R, b)):
        x = params.q_alpha(alpha, j) * params.X_at(alpha, params.rho_k)
        th = params.t_half(alpha)
        thi = th.inverse()
        val = val * (th - x * thi) / (thi - x * th)
    return val


def varsigma(R, b):
    """varsigma(b) = -w_0(b)."""
    return tuple(vneg(R.w0(b)))


def conjugate_e(params, b):
    """
    Both sides of the conjugation formula: (E_b^*, prod t_nu^{l_nu(u_b)
    - l_nu(w_0)/2} T_{w_0}(E_{varsigma(b)})).
    """
    R = params.datum
    V = _rep(params)
    lhs = e_polynomial(params, b).poly.conj()
    _, u = pi_decomposition(R, b)
    f = V.Tw0(e_polynomial(params, varsigma(R, b)).poly)
    scal = length_t_factor(params, u, 2) * length_t_factor(params, R.w0, -1)
    return lhs, f.scale(scal)


def symmetric_p(params, b_minus):
    """
    P_{b_-} = sum over c in W(b_+) of prod t_nu^{l_nu(w_c)/2} T_{w_c} E_{b_+},
    with w_c the shortest element sending b_+ to c.
    """
    R = params.datum
    V = _rep(params)
    bp, _ = R.dominant(b_minus)
    E = e_polynomial(params, bp).poly
    total = LaurentPoly()
    for c in R.orbit(bp):
        # w_c: shortest with w_c(b_+) = c; c_+ = b_+ and dominant() gives w with w(c) = b_+
        _, w = R.dominant(c)
        wc = R.weyl_inverse(w)
        word = R.reduced_word(wc)
        total = total + V.Tw(word, E).scale(length_t_factor(params, wc, 1))
    return total


def is_triangular(params, E):
    """E_b - X_b is supported on weights c succeeding b."""
    R = params.datum
    for c in E.poly.terms:
        if c != E.b and succ_compare(R, E.b, c) != "b<c":
            return False
    return True


def y_eigen_check(params, E):
    """Y_a E_b = q^{-(a, b_#)} E_b for a in the omega- or alpha-basis of B."""
    R = params.datum
    V = _rep(params)
    basis = [R.fund_weights[i] for i in range(R.rank) if R.in_B(R.fund_weights[i])]
    if len(basis) < R.rank:
        basis = list(R.simple_roots)
    for a in basis:
        lhs = V.Y(a, E.poly)
        rhs = E.poly.scale(params.qpow(-params.pair(a, E.b_sharp)))
        if lhs != rhs:
            return False
    return True

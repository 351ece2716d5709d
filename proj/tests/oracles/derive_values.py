"""Independent oracle for the frozen expected values used by the C++ tests.

Everything here is computed with sympy / mpmath / numpy, without sharing
code with the library. Run: python3 tests/oracles/derive_values.py
"""
import mpmath as mp
import numpy as np
import sympy as sp

q, x, s, t, z = sp.symbols("q x s t z")
mp.mp.dps = 30


def show(label, value):
    print(f"{label}: {value}")


def qpoch(a, base, n):
    return sp.prod([1 - a * base**j for j in range(n)]) if n > 0 else sp.Integer(1)


def qbinom(n, k):
    if k < 0 or k > n:
        return sp.Integer(0)
    return sp.factor(sp.cancel(qpoch(q, q, n) / (qpoch(q, q, k) * qpoch(q, q, n - k))))


# --- q-calculus -----------------------------------------------------------
show("qbinom(4,2)", sp.expand(qbinom(4, 2)))
show("qbinom(5,2)", sp.expand(qbinom(5, 2)))
show("qbinom(2,1)", sp.expand(qbinom(2, 1)))
show("qnumber(4)", sp.expand(sp.cancel((1 - q**4) / (1 - q))))
show("qpoch(q^2;q)_3 expanded", sp.expand(qpoch(q**2, q, 3)))
show("qpoch(1/2; 1/3)_3", qpoch(sp.Rational(1, 2), sp.Rational(1, 3), 3))
hahn = sp.expand(sp.cancel(((x**3 + 2 * x) - ((q * x) ** 3 + 2 * q * x)) / ((1 - q) * x)))
show("Dq(x^3+2x)", hahn)


# --- families -------------------------------------------------------------
def classical_fib(n):
    """F_n by the recurrence F_{n+1} = x F_n + s F_{n-1}."""
    f = [sp.Integer(0), sp.Integer(1)]
    while len(f) <= n:
        f.append(sp.expand(x * f[-1] + s * f[-2]))
    return f[n]


def classical_lucas(n):
    l = [sp.Integer(2), x]
    while len(l) <= n:
        l.append(sp.expand(x * l[-1] + s * l[-2]))
    return sp.Integer(1) if n == 0 else l[n]


show("F_6", classical_fib(6))
show("L_5", classical_lucas(5))
show("monic fib n=4", sp.expand(classical_fib(5).subs({x: 2 * x, s: 1}) / 2**4))
show("monic lucas n=4", sp.expand(classical_lucas(4).subs(s, 1)))
show("U_5", sp.expand(sp.chebyshevu(5, x)))
show("T_6", sp.expand(sp.chebyshevt(6, x)))


def qfib(n):
    """F_n(x,s|q) via the explicit sum with coefficients q^{k(k+1)/2}[m-k,k]."""
    if n == 0:
        return sp.Integer(0)
    m = n - 1
    return sp.expand(sum(q ** (k * (k + 1) // 2) * qbinom(m - k, k) * s**k * x ** (m - 2 * k)
                         for k in range(m // 2 + 1)))


def qlucas(n):
    if n == 0:
        return sp.Integer(1)
    total = x**n
    for k in range(1, n // 2 + 1):
        ratio = sp.cancel((1 - q**n) / (1 - q ** (n - k)))
        total += q ** (k * (k - 1) // 2) * ratio * qbinom(n - k, k) * s**k * x ** (n - 2 * k)
    return sp.expand(sp.cancel(total))


def hahn_op(f):
    return sp.expand(sp.cancel((f - f.subs(x, q * x)) / ((1 - q) * x)))


# operator recurrence, computed independently of the sums
fr = [sp.Integer(0), sp.Integer(1)]
for _ in range(6):
    fr.append(sp.expand(x * fr[-1] + (q - 1) * s * hahn_op(fr[-1]) + s * fr[-2]))
show("qfib n=5 (sum)", qfib(5))
show("qfib n=5 (recurrence agrees)", sp.expand(fr[5] - qfib(5)) == 0)
show("qlucas n=4", qlucas(4))
show("qlucas n=2", qlucas(2))
show("qfib n=5 at q->1/q", sp.expand(qfib(5).subs(q, 1 / q)))
show("qfib n=5 at (x,s,q)=(1,1,1)", qfib(5).subs({x: 1, s: 1, q: 1}))
show("qlucas n=5 at (x,s,q)=(2,-1/3,1/2)", qlucas(5).subs({x: 2, s: sp.Rational(-1, 3), q: sp.Rational(1, 2)}))


def r_family(n, lucas, sign=-1):
    """x^n 2phi1(q^-n, q^(1-n); lower | q^2; sign*arg/x^2), truncated at n//2."""
    lower = q ** (2 * (1 - n)) if lucas else q ** (-2 * n)
    arg = sign * (q if lucas else 1 / q)
    total = 0
    for k in range(n // 2 + 1):
        term = (qpoch(q ** (-n), q**2, k) * qpoch(q ** (1 - n), q**2, k)
                / (qpoch(lower, q**2, k) * qpoch(q**2, q**2, k)))
        total += sp.cancel(term) * arg**k * x ** (n - 2 * k)
    return sp.expand(sp.cancel(total))


show("RFib n=2 minus x^2", sp.factor(r_family(2, False) - x**2))
show("RLucas n=2 minus x^2", sp.factor(r_family(2, True) - x**2))
show("RLucas n=3 coef of x", sp.factor(r_family(3, True).coeff(x, 1)))
show("RFib n=4 at q=1/2", sp.expand(r_family(4, False).subs(q, sp.Rational(1, 2))))
show("SU n=4 at q=1/2", sp.expand(r_family(4, False, +1).subs(q, sp.Rational(1, 2))))

# recurrence probe: printed coefficient vs index-shifted coefficient
for lucas in (False, True):
    for n in range(1, 6):
        r = [r_family(j, lucas) for j in range(n + 2)]
        printed = sp.simplify(r[n + 1] - x * r[n] - q ** (n - 1) / ((1 + q**n) * (1 + q ** (n + 1))) * r[n - 1])
        shifted = sp.simplify(r[n + 1] - x * r[n] - q ** (n - 1) / ((1 + q ** (n - 1)) * (1 + q**n)) * r[n - 1])
        print("probe", "lucas" if lucas else "fib", n, "printed ok" if printed == 0 else "printed FAIL",
              "shifted ok" if shifted == 0 else "shifted FAIL")


def little_qjacobi(n, a, b, base, var):
    total = 0
    for k in range(n + 1):
        total += (qpoch(base ** (-n), base, k) * qpoch(a * b * base ** (n + 1), base, k)
                  / (qpoch(a * base, base, k) * qpoch(base, base, k))) * (base * var) ** k
    return total


show("little q-Jacobi n=1 a=b=q=1/2", sp.expand(little_qjacobi(1, sp.Rational(1, 2), sp.Rational(1, 2),
                                                                sp.Rational(1, 2), x)))
show("little q-Jacobi n=2 a=1/3 b=2 q=1/2", sp.expand(little_qjacobi(2, sp.Rational(1, 3), 2, sp.Rational(1, 2), x)))

# little q-Jacobi factorizations of the sign-flipped families
for n in range(0, 4):
    for q0 in (sp.Rational(1, 3), sp.Rational(1, 2), sp.Rational(2, 5)):
        Q = q0
        sU = lambda m: r_family(m, False, +1).subs(q, Q)
        sT = lambda m: r_family(m, True, +1).subs(q, Q)
        pre = (-1) ** n * Q ** (n * (n - 1))
        e_u = pre * qpoch(Q, Q**2, n) / qpoch(Q ** (2 * (n + 1)), Q**2, n) * little_qjacobi(n, 1 / Q, Q, Q**2, x**2)
        o_u = pre * qpoch(Q**3, Q**2, n) / qpoch(Q ** (2 * (n + 2)), Q**2, n) * x * little_qjacobi(n, Q, Q, Q**2, x**2)
        e_t = pre * qpoch(Q, Q**2, n) / qpoch(Q ** (2 * n), Q**2, n) * little_qjacobi(n, 1 / Q, 1 / Q, Q**2, x**2)
        o_t = pre * qpoch(Q**3, Q**2, n) / qpoch(Q ** (2 * (n + 1)), Q**2, n) * x * little_qjacobi(n, Q, 1 / Q, Q**2, x**2)
        res = [sp.expand(sU(2 * n) - e_u), sp.expand(sU(2 * n + 1) - o_u),
               sp.expand(sT(2 * n) - e_t), sp.expand(sT(2 * n + 1) - o_t)]
        print("lqj relations n=%d q=%s" % (n, Q), [r == 0 for r in res])

# --- hypergeometric / gamma -----------------------------------------------
show("Gamma(7/2)/sqrt(pi)", sp.gamma(sp.Rational(7, 2)) / sp.sqrt(sp.pi))
show("Gamma(-3/2)/sqrt(pi)", sp.gamma(sp.Rational(-3, 2)) / sp.sqrt(sp.pi))
show("Gamma(5/2)/Gamma(1/2)", sp.gamma(sp.Rational(5, 2)) / sp.gamma(sp.Rational(1, 2)))
show("2F1(-3, 2; 5; 1/2)", sp.hyper([-3, 2], [5], sp.Rational(1, 2)).rewrite(sp.Sum).doit())
show("2F1(-2, 1/2; 3/2; 1/3)",
     sp.hyper([-2, sp.Rational(1, 2)], [sp.Rational(3, 2)], sp.Rational(1, 3)).rewrite(sp.Sum).doit())
a_, b_ = sp.Integer(-6), sp.Rational(5, 2)
gauss2 = sum(sp.rf(a_, k) * sp.rf(b_, k) / (sp.rf((a_ + b_ + 1) / 2, k) * sp.factorial(k)) / 2**k
             for k in range(7))
closed = sp.gamma(sp.Rational(1, 2)) * sp.gamma((a_ + b_ + 1) / 2) / (sp.gamma((a_ + 1) / 2) * sp.gamma((b_ + 1) / 2))
show("Gauss second summation a=-6 b=5/2 (series, closed)", (gauss2, sp.simplify(closed)))

# --- generating functions -------------------------------------------------
ser = sp.series(1 / (1 - x * t - s * t**2), t, 0, 7).removeO()
show("gf fib coef t^6", sp.expand(ser.coeff(t, 6)))
x0, s0, q0 = sp.Rational(2, 3), sp.Rational(-3, 5), sp.Rational(3, 7)
show("qfib F_7 at (2/3,-3/5,3/7)", qfib(7).subs({x: x0, s: s0, q: q0}))

# --- quadrature / fourier -------------------------------------------------
nodes, weights = np.polynomial.hermite.hermgauss(5)
show("hermgauss(5) nodes", [repr(float(v)) for v in nodes])
show("hermgauss(5) weights", [repr(float(v)) for v in weights])


def fourier_lhs(poly, n_shift, a, s_val, q_val, y):
    kappa = mp.sqrt(mp.log(1 / mp.mpf(q_val)) / 2)
    f = sp.lambdify((x, s, q), poly, "mpmath")

    def integrand(u):
        return f(a * mp.exp(1j * kappa * u), s_val, q_val) * mp.exp(1j * u * y - u**2 / 2)

    return mp.quad(integrand, [-mp.inf, 0, mp.inf])


def fourier_rhs(poly, deg, a, s_arg, q_val, y):
    kappa = mp.sqrt(mp.log(1 / mp.mpf(q_val)) / 2)
    f = sp.lambdify((x, s, q), poly, "mpmath")
    return (mp.sqrt(2 * mp.pi) * mp.mpf(q_val) ** (mp.mpf(deg) ** 2 / 4)
            * f(a * mp.exp(-kappa * y), s_arg, 1 / mp.mpf(q_val)) * mp.exp(-mp.mpf(y) ** 2 / 2))


for (kind, deg, a, s_val, q_val, y) in [("qfib", 1, 1, 1, 0.5, 0), ("qfib", 4, 2, -2, 0.3, 1.5),
                                         ("qfib", 6, 1, 1, 0.3, 1.5), ("qlucas", 0, 1, 1, 0.5, 1),
                                         ("qlucas", 5, -2, 1, 0.64, -0.5)]:
    qv = mp.mpf(q_val)
    poly = qfib(deg + 1) if kind == "qfib" else qlucas(deg)
    lhs = fourier_lhs(poly, deg, a, s_val, qv, y)
    s_arg = qv * s_val if kind == "qfib" else s_val
    rhs = fourier_rhs(poly, deg, a, s_arg, qv, y)
    print(f"fourier {kind} n={deg} a={a} s={s_val} q={q_val} y={y}: lhs={mp.nstr(lhs, 20)} rhs={mp.nstr(rhs, 20)}")

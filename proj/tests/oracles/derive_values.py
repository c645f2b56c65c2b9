"""Independent derivation of the frozen expected values used by the C++ tests.

Uses sympy series expansion of closed products only (never the Adams/exp
route the library takes), so the numbers here are an independent check.
Run: python3 tests/oracles/derive_values.py
"""
import sympy as sp

L, t, q = sp.symbols("L t q")


def expand(expr, var, order):
    s = sp.series(expr, var, 0, order + 1).removeO()
    return [sp.expand(s.coeff(var, n)) for n in range(order + 1)]


def exp_product(coeffs, order):
    """Exp(sum_n f_n t^n) = prod_n prod_e (1 - L^e t^n)^(-c_{n,e}) for polynomial f_n."""
    expr = sp.Integer(1)
    for n, f in coeffs.items():
        poly = sp.Poly(sp.expand(f * L**20), L)  # shift so negative powers are fine
        for (e,), c in poly.terms():
            expr *= (1 - L**(e - 20) * t**n) ** (-c)
    return expand(expr, t, order)


def pr(d):
    return sum(L**k for k in range(d + 1))


print("Exp((1+L)t):", exp_product({1: 1 + L}, 3))
print("Exp(L^2 t):", exp_product({1: L**2}, 2))
print("Gottsche A2 prod 1/(1-L^{j+1}t^j):",
      expand(sp.Mul(*[1 / (1 - L**(j + 1) * t**j) for j in range(1, 7)]), t, 5))
print("punctual d=2 r=1:", exp_product({n: L**(n - 1) for n in range(1, 4)}, 3))
print("punctual d=1 r=2:", exp_product({1: 1 + L}, 3))
print("M-series r=2 Exp((1+L)L^3 t/(1-L^2 t)):",
      exp_product({n: (1 + L) * L**3 * L**(2 * (n - 1)) for n in range(1, 3)}, 2))
print("L-series r=2 Exp((1+L) t/(1-L^2 t)):",
      exp_product({n: (1 + L) * L**(2 * (n - 1)) for n in range(1, 4)}, 3))
print("Quot A1 r=2 Exp(L(1+L)t):", exp_product({1: L * (1 + L)}, 2))
print("M2 r=2 Exp((1+L)L^2 t/(1-L^2 t)):",
      exp_product({n: (1 + L) * L**2 * L**(2 * (n - 1)) for n in range(1, 3)}, 2))

# zeta products
print("zeta-curve P1 r=2 q=2:",
      expand(1 / ((1 - t) * (1 - 2 * t)) * 1 / ((1 - 2 * t) * (1 - 4 * t)), t, 6))
counts = [sp.expand(c).subs(L, 2) for c in exp_product({1: (1 + L) * (1 + L)}, 6)]
print("  lhs counts Exp([P1 x P1] t) at q=2:", counts)

# Nakajima, one vertex no arrows, w=3: L^{v(r-v)} [Gr(v, r)]
def gauss(n, k):
    num = sp.Mul(*[1 - L**(n - i) for i in range(k)])
    den = sp.Mul(*[1 - L**(i + 1) for i in range(k)])
    return sp.factor(sp.cancel(num / den))
print("T*Gr(v,3):", [sp.expand(L**(v * (3 - v)) * gauss(3, v)) for v in range(4)])

# M1 Poincare: sum q^{-n} P(M^1(n,r),q) t^n = prod_{i<r} 1/(1-q^i t), r = 2
print("M1 PPoly r=2:", expand(1 / ((1 - t) * (1 - q * t)), t, 3))

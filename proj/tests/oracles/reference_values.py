#!/usr/bin/env python3
"""High-precision reference values for the C++ unit tests.

Computed with mpmath at 40 significant digits, printed at 25. The C++ tests
freeze these numbers as decimal literals; rerun this script if a constant is
ever in doubt. Everything here is built from first definitions (quadrature,
series) independent of the C++ code paths.
"""

import mpmath as mp

mp.mp.dps = 40


def show(label, value):
    print(f"{label:34s} = {mp.nstr(value, 25)}")


# plane-wave spectral data: endpoint E0 = A + iB, fourth-root kappa0 and the
# scattering pair a,b built from it
def kappa0(A, B, k):
    E0 = mp.mpc(A, B)
    return mp.exp(mp.mpf(1) / 4 * mp.log((k - E0) / (k - mp.conj(E0))))


def r_real(A, B, s):
    # reflection coefficient on the real axis from the fourth root: b/a
    kap = kappa0(A, B, s)
    return (kap ** 2 - 1) / (kap ** 2 + 1)


def abs_r_sq(A, B, s):
    u = s - A
    return ((mp.sqrt(u * u + B * B) - abs(u)) / B) ** 2


print("# spectrum/scattering at A=0, B=1, k=2")
A, B = mp.mpf(0), mp.mpf(1)
kap = kappa0(A, B, 2)
a = (kap + 1 / kap) / 2
b = (kap - 1 / kap) / 2
show("kappa0(0,1;2)", kap)
show("a(2)", a)
show("b(2)", b)
show("r(2)", b / a)
show("a^2-b^2", a * a - b * b)

# closed-form |r|^2 cross-check against the fourth-root construction
s_test = mp.mpf("-0.7")
show("|r(-0.7)|^2 (kappa form)", abs(r_real(A, B, s_test)) ** 2)
show("|r(-0.7)|^2 (closed form)", abs_r_sq(A, B, s_test))

print()
print("# band jump f and endpoint amplitude phi_hat(E0), A=0, B=1")
# f on the band: difference of the west/east side limits of r at k = A+iy
def f_band(A, B, y):
    m = ((B - y) / (B + y)) ** mp.mpf(0.25)
    return 4j * m * m / (1 + m ** 4)


show("f(A+0.25i)", f_band(A, B, mp.mpf("0.25")))
show("f(A) (limit y->0)", f_band(A, B, mp.mpf(0)))

# endpoint limit phi_hat = lim f(k) e^{i pi/4}/sqrt(i(k-E0)) along the band
for eps_exp in (6, 10, 14):
    eps = mp.mpf(10) ** (-eps_exp)
    y = B - eps
    k = mp.mpc(A, y)
    E0 = mp.mpc(A, B)
    val = f_band(A, B, y) * mp.exp(1j * mp.pi / 4) / mp.sqrt(1j * (k - E0))
    show(f"phi_hat est (eps=1e-{eps_exp})", val)
show("phi_hat closed form", 4j * mp.exp(1j * mp.pi / 4) / mp.sqrt(2 * B))

print()
print("# delta and chi scalar functions, A=0, B=1")
E0 = mp.mpc(A, B)


def log_one_plus_rsq(s):
    return mp.log(1 + abs_r_sq(A, B, s))


# delta(E0, k0=A): exp[(2 pi i)^{-1} Int_{-inf}^{A} ln(1+|r|^2)/(s-E0) ds]
I_dE0 = mp.quad(lambda s: log_one_plus_rsq(s) / (s - E0), [-mp.inf, -1, 0])
delta_E0 = mp.exp(I_dE0 / (2j * mp.pi))
show("delta(E0, k0=A)", delta_E0)
show("|delta(E0, k0=A)|", abs(delta_E0))

# generic off-axis delta at k = 2+0.5i with k0 = 0.3
k0 = mp.mpf("0.3")
kk = mp.mpc(2, "0.5")
I_gen = mp.quad(lambda s: log_one_plus_rsq(s) / (s - kk), [-mp.inf, -1, 0, k0])
show("delta(2+0.5i, k0=0.3)", mp.exp(I_gen / (2j * mp.pi)))

# chi(k0) at k0=0.01 with N=5, and nu(k0)
k0 = mp.mpf("0.01")
N = mp.mpf(5)
nu = mp.log(1 + abs_r_sq(A, B, k0)) / (2 * mp.pi)
show("nu(0.01)", nu)
show("nu(A) = ln2/(2pi)", mp.log(2) / (2 * mp.pi))

lr0 = mp.log(1 + abs_r_sq(A, B, k0))
I1 = mp.quad(lambda s: (log_one_plus_rsq(s) - lr0) / (s - k0), [-N, 0, k0])
I2 = mp.quad(lambda s: log_one_plus_rsq(s) / (s - k0), [-mp.inf, -N])
chi = (k0 + N) ** (1j * nu) * mp.exp((I1 + I2) / (2j * mp.pi))
show("I1(k0=0.01,N=5)", I1)
show("I2(k0=0.01,N=5)", I2)
show("chi(0.01; N=5)", chi)
show("|chi|", abs(chi))
show("arg chi(0.01; N=5)", mp.arg(chi))

print()
print("# Cauchy transform of sqrt(s)e^{-s} on [0,inf)")
f = lambda s: mp.sqrt(s) * mp.exp(-s)
for zeta in (mp.mpf(-1), mp.mpc(2, 3), mp.mpc(0, "1e3"), mp.mpc(0, "1e4")):
    I = mp.quad(lambda s: f(s) / (s - zeta), [0, 1, 5, 30, mp.inf])
    show(f"C[f]({mp.nstr(zeta, 6)})", I / (2j * mp.pi))

print()
print("# monic generalized-Laguerre values (alpha = 1/2)")
# three-term recurrence: pi_{j+1} = (z - (2j+3/2)) pi_j - j(j+1/2) pi_{j-1}
def pi_monic(n, z):
    p_prev, p = mp.mpf(1), z - mp.mpf(3) / 2
    if n == 0:
        return p_prev
    for j in range(1, n):
        p_prev, p = p, (z - (2 * j + mp.mpf(3) / 2)) * p - j * (j + mp.mpf(1) / 2) * p_prev
    return p


show("pi_3(2)", pi_monic(3, mp.mpf(2)))
show("pi_5(1.7+0.3i)", pi_monic(5, mp.mpc("1.7", "0.3")))
# weighted norm h_2 = Int s^{1/2} e^{-s} pi_2^2 = 2! Gamma(2+3/2)
h2 = mp.quad(lambda s: mp.sqrt(s) * mp.exp(-s) * pi_monic(2, s) ** 2, [0, 5, 40, mp.inf])
show("h_2 (quadrature)", h2)
show("2! Gamma(7/2)", 2 * mp.gamma(mp.mpf(7) / 2))

print()
print("# parabolic cylinder D_a(z) spot values")
cases = [
    (mp.mpc("0.3", "0.2"), mp.mpc("1.5", "0.5")),
    (mp.mpc(0, "-0.5"), 2 * mp.exp(-3j * mp.pi / 4) * mp.mpf("1.2")),
    (mp.mpc(0, "0.5") - 1, 2 * mp.exp(-1j * mp.pi / 4) * mp.mpf("1.1")),
    (mp.mpf("0.3"), mp.mpf(8)),
    (mp.mpc("0.25", "0.4"), 7 * mp.exp(1j * mp.pi / 3)),
    (mp.mpc(0, "-0.8"), 12 * mp.exp(1j * mp.pi / 2)),
]
for aa, zz in cases:
    show(f"D[{mp.nstr(aa, 6)}]({mp.nstr(zz, 6)})", mp.pcfd(aa, zz))

print()
print("# complex Gamma spot values")
show("Gamma(0.3+0.7i)", mp.gamma(mp.mpc("0.3", "0.7")))
show("Gamma(-1.5+0.2i)", mp.gamma(mp.mpc("-1.5", "0.2")))
show("Gamma(i*0.5)", mp.gamma(mp.mpc(0, "0.5")))
show("|Gamma(0.5i)|^2 * 0.5*sinh(pi/2)/pi", abs(mp.gamma(mp.mpc(0, "0.5"))) ** 2 * mp.mpf("0.5") * mp.sinh(mp.pi / 2) / mp.pi)

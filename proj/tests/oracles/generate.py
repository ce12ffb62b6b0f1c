"""Reference values for the unit tests, computed with mpmath at 40 digits.

Run from the repository root:  python3 tests/oracles/generate.py > tests/oracle_values.hpp

p(z; g2, g3) is obtained by inverting z = int_p^inf dt / sqrt(4t^3 - g2 t - g3)
with quadrature, so it shares nothing with the library's evaluator.
"""

from mpmath import mp, mpf, sqrt, cbrt, ellipfun, ellipf, ellipk, elliprf, hyp2f1, quad, findroot, polyroots
from mpmath import sech, sec, csc, csch, atan, exp, atanh, asinh, tan, inf, re, pi

mp.dps = 40


def num(x):
    return format(float(re(x)), ".17g")


def wp(z, g2, g3):
    sign = 1 if z > 0 else -1
    z = abs(z)
    roots = [re(r) for r in polyroots([4, 0, -g2, -g3]) if abs(mp.im(r)) < mpf(10) ** -30]
    e1 = max(roots)

    def integral(p):
        return quad(lambda t: 1 / sqrt(4 * t**3 - g2 * t - g3), [p, p + 1, inf])

    guess = e1 + 1 / z**2
    p = findroot(lambda p: integral(p) - z, guess, tol=mpf(10) ** -30)
    dp = -sign * sqrt(4 * p**3 - g2 * p - g3)
    return p, dp


def am(u, m):
    return findroot(lambda phi: ellipf(phi, m) - u, u)


out = []
emit = out.append
emit("#pragma once")
emit("// Generated by tests/oracles/generate.py (mpmath, 40 digits). Do not edit.")
emit("")
emit("namespace oracle {")
emit("")

emit("struct Rf { double x, y, z, value; };")
emit("inline constexpr Rf kCarlsonRf[] = {")
for x, y, z in [(1, 2, 3), (0, 1, 2), (0.5, 1e-3, 4), (2, 2, 2), (1e-2, 3, 1e3)]:
    emit(f"    {{{x}, {y}, {z}, {num(elliprf(x, y, z))}}},")
emit("};")
emit("")

emit("struct K { double m, value; };")
emit("inline constexpr K kEllipK[] = {")
for m in [0, 0.3, 0.5, 0.9, 0.99, -1, -10]:
    emit(f"    {{{m}, {num(ellipk(m))}}},")
emit("};")
emit("")

emit("struct F { double phi, m, value; };")
emit("inline constexpr F kEllipF[] = {")
for phi, m in [(0.7, 0.3), (1.2, -2), (0.5, 2), (1.0, 0.999), (4.0, 0.5), (-2.5, 0.8), (0.3, 4)]:
    emit(f"    {{{phi}, {m}, {num(ellipf(phi, m))}}},")
emit("};")
emit("")

emit("struct Jac { double u, m, sn, cn, dn; };")
emit("inline constexpr Jac kJacobi[] = {")
for u, m in [(0.5, 0.3), (2.0, 0.7), (-3.7, 0.99), (7.5, 0.5), (1.1, -1), (-2.2, -5), (0.8, 2), (3.3, 4),
             (5.0, 0.999999), (1.5, 1e-9)]:
    sn, cn, dn = (ellipfun(f, u, m) for f in ("sn", "cn", "dn"))
    emit(f"    {{{u}, {m}, {num(sn)}, {num(cn)}, {num(dn)}}},")
emit("};")
emit("")

emit("struct Am { double u, m, value; };")
emit("inline constexpr Am kAmplitude[] = {")
for u, m in [(1.3, 0.7), (10.0, 0.3), (-4.0, -1), (2.5, 0.99)]:
    emit(f"    {{{u}, {m}, {num(am(u, m))}}},")
emit("};")
emit("")

emit("struct Wp { double z, g2, g3, p, dp; };")
emit("inline constexpr Wp kWeierstrass[] = {")
for z, g2, g3 in [(0.3, 1, 0.5), (0.7, 0, -0.25), (0.9, 4, 0), (0.4, 12, -8), (1.1, -3, 1), (0.25, 7, 2)]:
    p, dp = wp(mpf(z), mpf(g2), mpf(g3))
    emit(f"    {{{z}, {g2}, {g3}, {num(p)}, {num(dp)}}},")
emit("};")
emit("")

emit("struct Hyp { double a, b, c, x, value; };")
emit("inline constexpr Hyp kHyp2F1[] = {")
for a, b, c, x in [(0.5, 1 / 3, 4 / 3, -2), (0.5, 0.25, 1.25, -16), (1, 1, 2, -0.5), (0.5, 1 / 3, 4 / 3, -0.25),
                   (-0.3, 0.7, 1.9, 0.8), (0.5, 1 / 3, 4 / 3, -200), (0.5, 0.25, 1.25, 0.6)]:
    emit(f"    {{{num(a)}, {num(b)}, {num(c)}, {x}, {num(hyp2f1(a, b, c, x))}}},")
emit("};")
emit("")

# Closed forms written out directly, lambda gamma = L, xi0 = 0.
L1 = mpf(1)
kz = sqrt(3 / L1) / 2
cases = []
cases.append(("Liouville soliton c1=-1 L=-1", lambda x: sech(x / sqrt(2)) ** 2))
cases.append(("Liouville periodic c1=1 L=-1", lambda x: -sec(x / sqrt(2)) ** 2))
cases.append(("Liouville rational L=0.5", lambda x: 1 / x**2))
cases.append(("Tzitzeica dark", lambda x: 1 - mpf(3) / 2 * sech(kz * x) ** 2))
cases.append(("Tzitzeica csch", lambda x: 1 + mpf(3) / 2 * csch(kz * x) ** 2))
cases.append(("Tzitzeica sec L=-1", lambda x: 1 - mpf(3) / 2 * sec(kz * x) ** 2))
cases.append(("Tzitzeica csc L=-1", lambda x: 1 - mpf(3) / 2 * csc(kz * x) ** 2))
kl = mpf(3) ** mpf(0.25) / cbrt(2)
cases.append(("Tzitzeica lemniscatic", lambda x: (1 - sqrt(3) * ellipfun("cn", kl * x, mpf(1) / 2) ** 2) / cbrt(4)))
cases.append(("sine kink c1=1", lambda x: 4 * atan(exp(x))))
cases.append(("sine kink c1=-1 L=-1", lambda x: -pi + 4 * atan(exp(x))))
cases.append(("sinh kink c1=-1/2", lambda x: 2 * atanh(exp(sqrt(2) * x))))
cases.append(("sinh kink c1=1/2", lambda x: 2 * atanh(tan(x / sqrt(2)))))
cases.append(("sinh amplitude c1=0", lambda x: atanh(ellipfun("sn", x, -1))))
cases.append(("sinh amplitude c1=-1 L=1", lambda x: asinh(sqrt(mpf(1) / 2) / ellipfun("cn", sqrt(3) * x, mpf(2) / 3))))
xs = {"Liouville rational L=0.5": [1.0, -0.75, 2.5], "sinh kink c1=-1/2": [-0.4, -1.5, -3.0],
      "sinh kink c1=1/2": [0.3, -0.9, 1.0]}
emit("struct ClosedForm { const char* name; double xi, value; };")
emit("inline constexpr ClosedForm kClosedForms[] = {")
for name, f in cases:
    for x in xs.get(name, [0.3, -1.7, 2.9]):
        emit(f'    {{"{name}", {x}, {num(f(mpf(x)))}}},')
emit("};")
emit("")

# General Weierstrass Tzitzeica, c1 = 1, L = 1: cubic 2h^3 + 2h^2 + 1, so
# g2 = 1/3, g3 = -124/432 and h = 2 p(xi) - 1/3.
g2, g3 = mpf(1) / 3, mpf(-124) / 432
emit("inline constexpr ClosedForm kTzitzeicaGeneral[] = {")
for x in [0.3, 0.8, -0.5]:
    emit(f'    {{"Tzitzeica general c1=1", {x}, {num(2 * wp(mpf(x), g2, g3)[0] - mpf(1) / 3)}}},')
emit("};")
emit("")

emit("}  // namespace oracle")
print("\n".join(out))

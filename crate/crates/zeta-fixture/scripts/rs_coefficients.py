"""Regenerate src/coefficients.rs: Taylor coefficients in z = p - 1/2 of the
first four Riemann-Siegel correction terms C0..C3.

    python3 scripts/rs_coefficients.py > src/coefficients.rs
"""
import mpmath as mp

mp.mp.dps = 60
pi = mp.pi
DEGREE = 60


def psi(p):
    return mp.cos(2 * pi * (p * p - p - mp.mpf(1) / 16)) / mp.cos(2 * pi * p)


def deriv(coefs, k):
    out = coefs[:]
    for _ in range(k):
        out = [out[i] * i for i in range(1, len(out))]
    return out


def lin(*terms):
    n = max(len(t) for _, t in terms)
    out = [mp.mpf(0)] * n
    for s, t in terms:
        for i, v in enumerate(t):
            out[i] += s * v
    return out


c = mp.taylor(psi, mp.mpf(1) / 2, DEGREE)
table = {
    "C0": c,
    "C1": lin((-1 / (96 * pi**2), deriv(c, 3))),
    "C2": lin((1 / (64 * pi**2), deriv(c, 2)), (1 / (18432 * pi**4), deriv(c, 6))),
    "C3": lin(
        (-1 / (64 * pi**2), deriv(c, 1)),
        (-1 / (3840 * pi**4), deriv(c, 5)),
        (-1 / (5308416 * pi**6), deriv(c, 9)),
    ),
}


def trim(cf):
    # |z| <= 1/2, so a coefficient matters only if |c|·2^-k is visible in f64.
    vals = [float(v) if abs(v) * mp.mpf(2) ** (-i) > 1e-22 else 0.0 for i, v in enumerate(cf)]
    while vals and vals[-1] == 0.0:
        vals.pop()
    return vals


print("// Generated by scripts/rs_coefficients.py; do not edit.")
print()
for name, cf in table.items():
    vals = trim(cf)
    print(f"pub(crate) const {name}: [f64; {len(vals)}] = [")
    for v in vals:
        print(f"    {v!r},")
    print("];")
    print()

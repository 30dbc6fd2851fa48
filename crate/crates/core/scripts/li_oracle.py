"""Regenerates tests/data/li_oracle.txt.

li(x) = li(2) + integral_2^x dt / ln t by adaptive quadrature, with li(2)
itself from mpmath's exponential integral. Points are log-spaced in [2, 1e6].
"""

from mpmath import mp, mpf, quad, log, li, linspace, exp

mp.dps = 40


def main():
    li2 = li(2)
    xs = [exp(u) for u in linspace(log(2), log(mpf(10) ** 6), 100)]
    xs[0], xs[-1] = mpf(2), mpf(10) ** 6
    print("# x hi lo: li(x) = hi + lo as a double-double, quadrature at 40 digits")
    for x in xs:
        x = mpf(float(x))
        nodes = [mpf(2)] + [mpf(10) ** k for k in range(1, 7) if mpf(10) ** k < x] + [x]
        v = li2 + quad(lambda t: 1 / log(t), nodes)
        assert abs(v - li(x)) < mpf(10) ** -25
        hi = float(v)
        print(f"{float(x)!r} {hi!r} {float(v - hi)!r}")


if __name__ == "__main__":
    main()

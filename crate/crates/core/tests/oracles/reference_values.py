"""Independent high-precision reference values (mpmath) frozen into the Rust tests.

Barnes values use the rational-lattice reduction
    zeta_B(s; 1/w, 1, x) = sum_{j<w} zeta_B(s; 1, 1, x + j/w),
    zeta_B(s; 1, 1, x)   = zeta_H(s-1, x) + (1 - x) zeta_H(s, x),
plus homogeneity zeta_B(s; ca, cb, cx) = c^{-s} zeta_B(s; a, b, x) and a<->b symmetry.
None of these go through the integral representation used by the library.
"""
from mpmath import mp, mpf, zeta, log, loggamma, digamma, pi, tanh, cosh, euler, im, mpc

mp.dps = 40
ZP = zeta(-1, derivative=1)


def hz(s, x):
    return zeta(s, x)


def hzp(s, x):
    return zeta(s, x, derivative=1)


def barnes0_11(x):
    return hz(-1, x) + (1 - x) * hz(0, x)


def barnes_p0_11(x):
    return hzp(-1, x) + (1 - x) * hzp(0, x)


def barnes_p0_inv_w(w, x):
    return sum(barnes_p0_11(x + mpf(j) / w) for j in range(w))


def barnes0_inv_w(w, x):
    return sum(barnes0_11(x + mpf(j) / w) for j in range(w))


def barnes_p0(a, b, x):
    """zeta_B'(0;a,b,x) for b/a or a/b an integer."""
    a, b, x = mpf(a), mpf(b), mpf(x)
    if (b / a) == int(b / a):
        # (a, b, x) = b * (a/b, 1, x/b) with a/b = 1/w
        w = int(b / a)
        c = b
        return barnes_p0_inv_w(w, x / c) - barnes0_inv_w(w, x / c) * log(c)
    return barnes_p0(b, a, x)


def orbifold(w):
    return ZP / w - log(w) / (12 * w) - sum(j * loggamma(mpf(j) / w) for j in range(1, w)) / w + (w - 1) * log(2 * pi) / 4


def logdet_orbifold(w, eta):
    w, eta = mpf(w), mpf(eta)
    s = sum(j * loggamma(j / w) for j in range(1, int(w)))
    return (-(w + 1 / w) / 6 * log(tanh(eta / 2)) + (3 - 8 * cosh(eta)) / (12 * w) - 2 / w * ZP
            + 2 / w * s - w / 2 * log(2 * pi) + (w + 3 + 2 / w) / 6 * log(w))


def cap(eta):
    t = tanh(mpf(eta) / 2)
    return -log(t) / 3 - 2 * ZP + mpf(11) / 12 - mpf(4) / 3 / (1 - t * t) - log(2 * pi) / 2


def flat(r):
    return -log(mpf(r)) / 3 + log(2) / 3 - 2 * ZP - mpf(5) / 12 - log(2 * pi) / 2


if __name__ == "__main__":
    print("zeta_R'(-1)", ZP)
    print("euler", euler)
    for j in range(1, 21):
        from mpmath import bernoulli, factorial
        print("B%d/(%d)!" % (2 * j, 2 * j), bernoulli(2 * j) / factorial(2 * j))
    for x in ["0.5", "1e-6", "3.7", "10.25", "1e6"]:
        print("loggamma", x, loggamma(mpf(x)))
    for x in ["0.5", "0.1", "2.5", "17.3"]:
        print("digamma", x, digamma(mpf(x)))
    for p, q in [("1", "0.001"), ("0.3", "2.0"), ("2.5", "40"), ("50", "50"), ("0.02", "0.005")]:
        print("imloggamma", p, q, im(loggamma(mpc(mpf(p), mpf(q)))))
    for x in ["0.1", "0.5", "1", "2.3", "7.5"]:
        print("hzp(-1)", x, hzp(-1, mpf(x)))
    for s, x in [("2.5", "0.3"), ("-3.5", "1.7"), ("0.5", "4"), ("-0.5", "0.25"), ("4.5", "90")]:
        print("hz", s, x, hz(mpf(s), mpf(x)), "hzp", hzp(mpf(s), mpf(x)))
    for w in [2, 3, 6, 12]:
        print("orbifold", w, orbifold(w))
    for a, b, x in [(1, 1, 1), ("0.5", 1, 1), (1, 1, "0.3"), (1, 1, "7.5"), ("0.02", 1, 1), (50, 1, 1),
                    (1, 50, 1), ("0.25", 1, "2.5"), (1, "0.2", "0.04"), (2, 1, 1), (3, "1.5", "0.7")]:
        print("barnes", a, b, x, barnes_p0(a, b, x))
    print("logdet_orbifold 2 1", logdet_orbifold(2, 1))
    print("cap 1", cap(1))
    print("flat 1", flat(1))

"""Independent reference values computed with mpmath."""

import mpmath as mp


def mellin_barnes(spec, z, c, dps=30):
    """H(z) by direct mpmath quadrature of the Mellin-Barnes integral on Re s = c."""
    with mp.workdps(dps):
        def kern(s):
            v = mp.mpf(1)
            for i, (a, A) in enumerate(spec.upper):
                v *= mp.gamma(a + A * s) if i < spec.n else mp.rgamma(1 - a - A * s)
            for j, (b, B) in enumerate(spec.lower):
                v *= mp.gamma(1 - b - B * s) if j < spec.m else mp.rgamma(b + B * s)
            return v * mp.mpf(z) ** (-s)

        val = mp.quad(lambda t: kern(c + 1j * t), [-mp.inf, -20, -5, 0, 5, 20, mp.inf])
        return float(mp.re(val) / (2 * mp.pi))


def fox_wright(upper, lower, z, dps=30):
    """pPsi_q by summing the defining series in mpmath."""
    with mp.workdps(dps):
        def term(k):
            v = mp.power(z, k) / mp.factorial(k)
            for a, A in upper:
                v *= mp.gamma(a + A * k)
            for b, B in lower:
                v *= mp.rgamma(b + B * k)
            return v

        return float(mp.nsum(term, [0, mp.inf]))

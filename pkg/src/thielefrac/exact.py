"""Exact rational-arithmetic reference routines for small instances.

Everything here works over fractions.Fraction: dense polynomials as tuples
of coefficients in ascending powers, continued fractions as coefficient +
node sequences.  These routines are deliberately independent of the
floating-point evaluation paths so they can serve as ground truth in
tests.  Degrees stay small (the recurrence is guarded at n <= 16), so a
dense representation and textbook algorithms are all that is needed.
"""

from fractions import Fraction

MAX_EXACT_TERMS = 17  # coefficients; exact coefficient growth is exponential

ZERO = ()


def ptrim(p):
    p = tuple(p)
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def pdeg(p):
    """Degree of the trimmed polynomial; -1 for the zero polynomial."""
    return len(ptrim(p)) - 1


def padd(p, q):
    n = max(len(p), len(q))
    p = tuple(p) + (Fraction(0),) * (n - len(p))
    q = tuple(q) + (Fraction(0),) * (n - len(q))
    return ptrim(a + b for a, b in zip(p, q))


def pscale(p, c):
    return ptrim(c * a for a in p)


def pmul(p, q):
    p, q = ptrim(p), ptrim(q)
    if not p or not q:
        return ZERO
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return ptrim(out)


def peval(p, x):
    acc = Fraction(0)
    for c in reversed(ptrim(p)):
        acc = acc * x + c
    return acc


def pdivmod(p, q):
    q = ptrim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(ptrim(p))
    quo = [Fraction(0)] * max(len(rem) - len(q) + 1, 0)
    while len(rem) >= len(q):
        c = rem[-1] / q[-1]
        k = len(rem) - len(q)
        quo[k] = c
        for i, b in enumerate(q):
            rem[k + i] -= c * b
        rem = list(ptrim(rem))
        if not rem:
            break
    return ptrim(quo), ptrim(rem)


def pgcd(p, q):
    """Monic gcd via the Euclidean algorithm."""
    p, q = ptrim(p), ptrim(q)
    while q:
        p, q = q, pdivmod(p, q)[1]
    if not p:
        return ZERO
    return pscale(p, 1 / p[-1])


def exact_convergents(coefficients, nodes):
    """All (A_i, B_i) pairs of the three-term recurrence, as exact polynomials.

    coefficients has one more entry than nodes, as in ContinuedFraction.
    """
    if len(coefficients) > MAX_EXACT_TERMS:
        raise ValueError(f"exact recurrence limited to {MAX_EXACT_TERMS} terms")
    if len(coefficients) != len(nodes) + 1:
        raise ValueError("coefficient count must be node count + 1")
    a = [Fraction(c) for c in coefficients]
    z = [Fraction(v) for v in nodes]
    am2, bm2 = ZERO, (Fraction(1),)
    am1, bm1 = (Fraction(1),), ZERO
    out = []
    for j, aj in enumerate(a):
        lin = (Fraction(1),) if j == 0 else (-z[j - 1], Fraction(1))
        anew = padd(pscale(am1, aj), pmul(lin, am2))
        bnew = padd(pscale(bm1, aj), pmul(lin, bm2))
        out.append((anew, bnew))
        am2, bm2, am1, bm1 = am1, bm1, anew, bnew
    return out


def cfrac_to_rational_exact(coefficients, nodes):
    """Final (A_n, B_n) of the fraction as exact polynomials."""
    return exact_convergents(coefficients, nodes)[-1]


def rational_reduce(numer, denom):
    """(numer/gcd, denom/gcd, gcd) with a monic gcd."""
    g = pgcd(numer, denom)
    if pdeg(g) < 1:
        return ptrim(numer), ptrim(denom), g
    return pdivmod(numer, g)[0], pdivmod(denom, g)[0], g


def thiele_exact(xs, fs, order):
    """Exact inverse differences consumed in the given explicit order.

    Returns (coefficients, consumed_nodes, infinite_at): infinite_at is the
    step index at which a zero inverse-difference denominator occurred for
    the requested point (None when the whole order went through).  The
    greedy ordering itself is an input here, never re-derived, so this
    stays independent of the floating-point construction under test.
    """
    xs = [Fraction(v) for v in xs]
    fs = [Fraction(v) for v in fs]
    if len(set(xs)) != len(xs):
        raise ValueError("abscissae must be pairwise distinct")
    order = list(order)
    # working[j]: phi_k[x_0,...,x_{k-1},x_j]; None marks an infinite value
    working = dict(zip(range(len(xs)), fs))
    coeffs, znodes = [], []
    for k, idx in enumerate(order):
        if k > 0:
            prev_a, prev_x = coeffs[-1], znodes[-1]
            for j, val in list(working.items()):
                if val is None:
                    continue
                den = val - prev_a
                working[j] = None if den == 0 else (xs[j] - prev_x) / den
        val = working.pop(idx)
        if val is None:
            return coeffs, znodes, k
        coeffs.append(val if k > 0 else fs[idx])
        znodes.append(xs[idx])
    return coeffs, znodes, None


def residual_exact(coefficients, nodes, i, xs, fs):
    """Exact linearized residuals R_i(x_k) = f_k B_i(x_k) - A_i(x_k).

    Supports the recurrence conventions i = -2 (R = f) and i = -1 (R = -1).
    """
    xs = [Fraction(v) for v in xs]
    fs = [Fraction(v) for v in fs]
    if i == -2:
        return list(fs)
    if i == -1:
        return [Fraction(-1)] * len(xs)
    ai, bi = exact_convergents(coefficients, nodes)[i]
    return [fk * peval(bi, xk) - peval(ai, xk) for xk, fk in zip(xs, fs)]

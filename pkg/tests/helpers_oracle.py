"""Independent oracles used by the test suite.

Nothing here reuses the package's cyclotomic or Smith-form logic: polynomial
arithmetic is plain Fraction lists, root moduli come from numpy on the
squarefree part (repeated roots would otherwise poison float root-finding),
and growth is measured by brute-force exact powering.
"""

from fractions import Fraction

import numpy as np


def poly_deriv(coeffs):
    return [i * c for i, c in enumerate(coeffs)][1:] or [Fraction(0)]


def poly_trim(coeffs):
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    return coeffs


def poly_mod(a, b):
    """Remainder of a by b over Q (coefficients constant-first)."""
    a = [Fraction(c) for c in a]
    b = poly_trim([Fraction(c) for c in b])
    while len(poly_trim(a)) >= len(b) and any(a):
        a = poly_trim(a)
        if len(a) < len(b):
            break
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a = a[:-1]
    return poly_trim(a)


def poly_gcd_monic(a, b):
    a = poly_trim([Fraction(c) for c in a])
    b = poly_trim([Fraction(c) for c in b])
    while any(b):
        a, b = b, poly_mod(a, b)
    return [c / a[-1] for c in a]


def poly_div_exact(a, b):
    """Quotient a / b over Q, asserting zero remainder."""
    a = [Fraction(c) for c in a]
    b = poly_trim([Fraction(c) for c in b])
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    while len(poly_trim(a)) >= len(b) and any(a):
        a = poly_trim(a)
        if len(a) < len(b):
            break
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = f
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a = a[:-1]
    assert not any(poly_trim(a)) or poly_trim(a) == [Fraction(0)], "division not exact"
    return q


def squarefree_part(int_coeffs):
    """Squarefree part of an integer polynomial, as floats for numpy."""
    g = poly_gcd_monic(int_coeffs, poly_deriv(list(int_coeffs)))
    sq = poly_div_exact(int_coeffs, g)
    return [float(c) for c in sq]


def max_root_modulus(int_coeffs) -> float:
    """Largest |root|, numerically, after removing repeated factors."""
    sq = squarefree_part(int_coeffs)
    if len(sq) <= 1:
        return 0.0
    roots = np.roots(sq[::-1])
    return float(max(abs(r) for r in roots)) if len(roots) else 0.0


def brute_norm_growth(M, v, n: int) -> int:
    """sup-norm of M^n v by exact iterated application."""
    w = v
    for _ in range(n):
        w = M.apply(w)
    return w.sup_norm()


def grows_exponentially_brute(M, v, n: int = 60, factor: int = 1000) -> bool:
    """Brute-force exponential-growth detector via a doubling ratio.

    Exponential orbits multiply by at least lambda^n (lambda > 1.2 for the
    non-cyclotomic units reachable at these sizes) between steps n and 2n,
    while polynomial orbits of degree < dim gain at most ~2^dim; the wide gap
    makes the ratio test a sound discriminator, unlike a fixed absolute
    threshold, which linear growth crosses too.
    """
    if v.is_zero():
        return False
    a = brute_norm_growth(M, v, n)
    b = brute_norm_growth(M, v, 2 * n)
    return b > factor * a


def random_unimodular(rnd, size: int, factors: int):
    """Product of elementary row-addition matrices and occasional swaps."""
    from distortion.exact import IntMatrix, mat_mul

    M = IntMatrix.identity(size)
    for _ in range(factors):
        kind = rnd.random()
        rows = [list(r) for r in IntMatrix.identity(size).entries]
        i, j = rnd.sample(range(size), 2)
        if kind < 0.85:
            rows[i][j] = rnd.choice((-1, 1))
            E = IntMatrix.from_rows(rows)
        else:
            rows[i][i] = rows[j][j] = 0
            rows[i][j] = rows[j][i] = 1
            E = IntMatrix.from_rows(rows)
        M = mat_mul(M, E)
    return M

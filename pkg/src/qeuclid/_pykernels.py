"""Pure-Python arithmetic kernels for cyclotomic coefficient vectors.

An element of Q(zeta_m) is carried as ``(nums, den)`` where ``nums`` is a
tuple of ``phi(m)`` integers (coordinates in the power basis modulo the
m-th cyclotomic polynomial) and ``den`` is a positive integer common
denominator.  The pair is normalized: gcd of all numerators and the
denominator is 1, and the zero vector has den == 1.

``red`` is the reduction table of the field: ``red[t]`` gives the basis
coordinates of zeta^(d+t) for t = 0 .. d-2, with integer entries (the
cyclotomic polynomial is monic over Z).

The compiled twin in ``_cykernels.pyx`` implements the same four
functions; ``qeuclid.kernels`` picks one at import time.
"""

from math import gcd

BACKEND = "pure"


def vec_normalize(nums, den):
    """Reduce (nums, den) to canonical form: den > 0, content coprime to den."""
    if den < 0:
        den = -den
        nums = [-v for v in nums]
    g = den
    for v in nums:
        g = gcd(g, v)
        if g == 1:
            return tuple(nums), den
    if g == 0:
        # all numerators zero and den == 0 cannot happen (den > 0 invariant)
        return tuple(nums), 1
    if g > 1:
        nums = [v // g for v in nums]
        den //= g
    if den == 1 and not any(nums):
        return tuple(nums), 1
    return tuple(nums), den


def vec_add(anums, aden, bnums, bden):
    if aden == bden:
        return vec_normalize([a + b for a, b in zip(anums, bnums)], aden)
    return vec_normalize(
        [a * bden + b * aden for a, b in zip(anums, bnums)], aden * bden)


def vec_sub(anums, aden, bnums, bden):
    if aden == bden:
        return vec_normalize([a - b for a, b in zip(anums, bnums)], aden)
    return vec_normalize(
        [a * bden - b * aden for a, b in zip(anums, bnums)], aden * bden)


def vec_mul(anums, aden, bnums, bden, red):
    """Product in the power basis: convolve, then fold degrees >= d via red."""
    d = len(anums)
    conv = [0] * (2 * d - 1)
    for i, a in enumerate(anums):
        if a:
            for j, b in enumerate(bnums):
                if b:
                    conv[i + j] += a * b
    res = conv[:d]
    for t in range(d - 1):
        c = conv[d + t]
        if c:
            row = red[t]
            for j in range(d):
                rv = row[j]
                if rv:
                    res[j] += c * rv
    return vec_normalize(res, aden * bden)

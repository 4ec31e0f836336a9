# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled arithmetic kernels for cyclotomic coefficient vectors.

Same contract as qeuclid._pykernels (the pure-Python twin); numerators
stay arbitrary-precision Python ints, Cython only strips loop and call
overhead from the hot paths.
"""

from math import gcd

BACKEND = "compiled"


def vec_normalize(nums, den):
    cdef Py_ssize_t i, n = len(nums)
    cdef list out
    if den < 0:
        den = -den
        nums = [-v for v in nums]
    g = den
    for i in range(n):
        g = gcd(g, nums[i])
        if g == 1:
            return tuple(nums), den
    if g == 0:
        return tuple(nums), 1
    if g > 1:
        out = [0] * n
        for i in range(n):
            out[i] = nums[i] // g
        den //= g
        nums = out
    if den == 1:
        for i in range(n):
            if nums[i]:
                return tuple(nums), den
        return tuple(nums), 1
    return tuple(nums), den


def vec_add(anums, aden, bnums, bden):
    cdef Py_ssize_t i, n = len(anums)
    cdef list out = [0] * n
    if aden == bden:
        for i in range(n):
            out[i] = anums[i] + bnums[i]
        return vec_normalize(out, aden)
    for i in range(n):
        out[i] = anums[i] * bden + bnums[i] * aden
    return vec_normalize(out, aden * bden)


def vec_sub(anums, aden, bnums, bden):
    cdef Py_ssize_t i, n = len(anums)
    cdef list out = [0] * n
    if aden == bden:
        for i in range(n):
            out[i] = anums[i] - bnums[i]
        return vec_normalize(out, aden)
    for i in range(n):
        out[i] = anums[i] * bden - bnums[i] * aden
    return vec_normalize(out, aden * bden)


def vec_mul(anums, aden, bnums, bden, red):
    cdef Py_ssize_t i, j, t, d = len(anums)
    cdef list conv = [0] * (2 * d - 1)
    cdef list res
    for i in range(d):
        a = anums[i]
        if a:
            for j in range(d):
                b = bnums[j]
                if b:
                    conv[i + j] = conv[i + j] + a * b
    res = conv[:d]
    for t in range(d - 1):
        c = conv[d + t]
        if c:
            row = red[t]
            for j in range(d):
                rv = row[j]
                if rv:
                    res[j] = res[j] + c * rv
    return vec_normalize(res, aden * bden)

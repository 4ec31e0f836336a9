"""Parity between the compiled kernel extension and its pure-Python twin."""

import random
from math import gcd as _gcd

import pytest

from qeuclid import _pykernels
from qeuclid import kernels
from qeuclid.scalars import CyclotomicField

try:
    from qeuclid import _cykernels
except ImportError:
    _cykernels = None

needs_compiled = pytest.mark.skipif(
    _cykernels is None, reason="compiled kernels not built")


def _random_vec(rng, d):
    return [rng.randint(-50, 50) for _ in range(d)], rng.randint(1, 40)


def _content_gcd(nums, den):
    g = den
    for v in nums:
        g = _gcd(g, v)
    return g


class TestNormalizeInvariants:
    @pytest.mark.parametrize("impl", [_pykernels] +
                             ([_cykernels] if _cykernels else []))
    def test_normalized_form(self, impl):
        rng = random.Random(5)
        for _ in range(200):
            nums, den = _random_vec(rng, 4)
            if rng.random() < 0.3:
                den = -den
            out_nums, out_den = impl.vec_normalize(list(nums), den)
            assert out_den > 0
            if any(out_nums):
                assert _content_gcd(out_nums, out_den) == 1
            else:
                assert out_den == 1

    def test_zero_vector(self):
        assert _pykernels.vec_normalize([0, 0], 7) == ((0, 0), 1)


@needs_compiled
class TestBackendParity:
    @pytest.mark.parametrize("m", [3, 5, 9, 15])
    def test_all_ops_agree(self, m):
        field = CyclotomicField(m)
        red = field.reduction
        d = field.degree
        rng = random.Random(m)
        for _ in range(150):
            a_nums, a_den = _random_vec(rng, d)
            b_nums, b_den = _random_vec(rng, d)
            a_nums, a_den = _pykernels.vec_normalize(a_nums, a_den)
            b_nums, b_den = _pykernels.vec_normalize(b_nums, b_den)
            for op in ("vec_add", "vec_sub"):
                assert (getattr(_pykernels, op)(a_nums, a_den, b_nums, b_den)
                        == getattr(_cykernels, op)(a_nums, a_den, b_nums, b_den))
            assert (_pykernels.vec_mul(a_nums, a_den, b_nums, b_den, red)
                    == _cykernels.vec_mul(a_nums, a_den, b_nums, b_den, red))


class TestBackendSelection:
    def test_selection_and_restore(self):
        original = kernels.backend_name()
        assert kernels.set_backend("pure") == "pure"
        assert kernels.backend_name() == "pure"
        one = CyclotomicField(3).one()
        assert (one + one).to_fractions()[0] == 2
        if _cykernels is not None:
            assert kernels.set_backend("compiled") == "compiled"
            assert (one + one).to_fractions()[0] == 2
        kernels.set_backend(original)

    def test_unknown_backend_rejected(self):
        with pytest.raises(ValueError):
            kernels.set_backend("jit")

    def test_env_var_forces_pure_fallback(self):
        import subprocess
        import sys
        code = ("from qeuclid import kernels; "
                "print(kernels.backend_name())")
        out = subprocess.run(
            [sys.executable, "-c", code],
            capture_output=True, text=True, check=True,
            env={"QEUCLID_PURE": "1", "PATH": "/usr/bin:/bin"},
        )
        assert out.stdout.strip() == "pure"

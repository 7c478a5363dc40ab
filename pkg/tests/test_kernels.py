import random

import pytest

from equivqp import kernels
from equivqp.linalg import IntMatrix

needs_ext = pytest.mark.skipif(kernels.BACKEND != "compiled", reason="compiled kernels not built")


def _random_case(rng):
    ell = rng.randint(1, 3)
    fix = IntMatrix(ell, ell, tuple(rng.randint(-2, 2) for _ in range(ell * ell)))
    n = rng.randint(0, 4)
    forms = IntMatrix(ell, n, tuple(rng.randint(-4, 4) for _ in range(ell * n)))
    return fix, forms, rng.randint(1, 12)


def test_backend_flag():
    assert kernels.BACKEND in ("compiled", "python")


def test_python_kernel_small():
    fix = IntMatrix.zeros(2, 0)
    forms = IntMatrix.from_columns([(1, 1)], 2)
    assert kernels.count_fixed_complement(fix, forms, 4, backend="python") == 12
    pts = kernels.fixed_complement_points(fix, forms, 3, backend="python")
    assert pts == [(0, 1), (0, 2), (1, 0), (1, 1), (2, 0), (2, 2)]


@needs_ext
def test_backend_parity():
    rng = random.Random(3)
    for _ in range(200):
        fix, forms, q = _random_case(rng)
        assert (kernels.count_fixed_complement(fix, forms, q, backend="python")
                == kernels.count_fixed_complement(fix, forms, q, backend="compiled"))
        assert (kernels.fixed_complement_points(fix, forms, q, backend="python")
                == kernels.fixed_complement_points(fix, forms, q, backend="compiled"))


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.count_fixed_complement(IntMatrix.zeros(1, 0), IntMatrix.zeros(1, 0), 2, backend="gpu")


def test_pure_python_env_forces_fallback():
    import subprocess
    import sys
    out = subprocess.run([sys.executable, "-c", "from equivqp import kernels; print(kernels.BACKEND)"],
                         env={"EQUIVQP_PURE_PYTHON": "1", "PATH": ""}, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"

"""Dispatch to the compiled enumeration kernels when available.

Set ``EQUIVQP_PURE_PYTHON=1`` to force the pure-Python implementation.
"""

from __future__ import annotations

import os
from array import array

from . import _kernels_py
from .linalg import IntMatrix

DEFAULT_BUDGET = 10 ** 8

_compiled = None
if os.environ.get("EQUIVQP_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled  # type: ignore[no-redef]
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"


class InstanceTooLargeError(ValueError):
    pass


def check_budget(ell: int, q: int, budget: int) -> None:
    if q ** ell > budget:
        raise InstanceTooLargeError(f"q^l = {q}^{ell} exceeds the budget of {budget} points")


def _flat(m: IntMatrix, q: int, typed: bool):
    vals = [v % q for v in m.entries]
    return array("q", vals) if typed else vals


def _impl(backend):
    if backend is None:
        backend = BACKEND
    if backend == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not built")
        return _compiled, True
    if backend == "python":
        return _kernels_py, False
    raise ValueError(f"unknown backend {backend!r}")


def count_fixed_complement(fix: IntMatrix, forms: IntMatrix, q: int,
                           budget: int = DEFAULT_BUDGET, backend=None) -> int:
    """``#{x in (Z/q)^l : x @ fix == 0, (x @ forms)_i != 0 for all i}`` by enumeration."""
    ell = fix.rows
    if forms.rows != ell:
        raise ValueError("fix and forms must have the same number of rows")
    check_budget(ell, q, budget)
    mod, typed = _impl(backend)
    if typed and q >= 2 ** 62:
        mod, typed = _kernels_py, False
    return int(mod.count_fixed_complement(_flat(fix, q, typed), _flat(forms, q, typed),
                                          ell, fix.cols, forms.cols, q))


def fixed_complement_points(fix: IntMatrix, forms: IntMatrix, q: int,
                            budget: int = DEFAULT_BUDGET, backend=None) -> list:
    ell = fix.rows
    if forms.rows != ell:
        raise ValueError("fix and forms must have the same number of rows")
    check_budget(ell, q, budget)
    mod, typed = _impl(backend)
    if typed and q >= 2 ** 62:
        mod, typed = _kernels_py, False
    return [tuple(int(v) for v in p) for p in
            mod.fixed_complement_points(_flat(fix, q, typed), _flat(forms, q, typed),
                                        ell, fix.cols, forms.cols, q)]

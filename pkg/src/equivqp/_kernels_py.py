"""Pure-Python enumeration kernels (fallback for the compiled ``_kernels``).

Both kernels walk ``x`` over ``(Z/q)^l`` in odometer order and keep the
residues ``x @ F`` and ``x @ S`` up to date incrementally: bumping one digit
by 1 mod q always adds that row of the matrix, wraparound included.

Matrices arrive flattened row-major with entries already reduced mod q.
"""


def _walk(fix, forms, ell, nfix, nforms, q, collect):
    accf = [0] * nfix
    accs = [0] * nforms
    x = [0] * ell
    frows = [fix[i * nfix:(i + 1) * nfix] for i in range(ell)]
    srows = [forms[i * nforms:(i + 1) * nforms] for i in range(ell)]
    count = 0
    points = [] if collect else None
    while True:
        if not any(accf) and all(accs):
            count += 1
            if collect:
                points.append(tuple(x))
        i = ell - 1
        while i >= 0:
            fr, sr = frows[i], srows[i]
            for c in range(nfix):
                accf[c] = (accf[c] + fr[c]) % q
            for c in range(nforms):
                accs[c] = (accs[c] + sr[c]) % q
            x[i] += 1
            if x[i] < q:
                break
            x[i] = 0
            i -= 1
        if i < 0:
            return points if collect else count


def count_fixed_complement(fix, forms, ell, nfix, nforms, q):
    """Number of x with x @ fix == 0 and every entry of x @ forms nonzero (mod q)."""
    if ell == 0:
        return 1 if nforms == 0 else 0
    return _walk(fix, forms, ell, nfix, nforms, q, False)


def fixed_complement_points(fix, forms, ell, nfix, nforms, q):
    """The points counted by :func:`count_fixed_complement`, in odometer order."""
    if ell == 0:
        return [()] if nforms == 0 else []
    return _walk(fix, forms, ell, nfix, nforms, q, True)

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; same contract as ``_kernels_py``."""

from libc.stdlib cimport malloc, free


cdef long long _walk(const long long[:] fix, const long long[:] forms, int ell, int nfix,
                     int nforms, long long q, list out):
    cdef long long *accf = <long long *> malloc((nfix + 1) * sizeof(long long))
    cdef long long *accs = <long long *> malloc((nforms + 1) * sizeof(long long))
    cdef long long *x = <long long *> malloc(ell * sizeof(long long))
    cdef long long count = 0
    cdef int i, c, ok
    cdef long long v
    if accf == NULL or accs == NULL or x == NULL:
        free(accf); free(accs); free(x)
        raise MemoryError()
    try:
        for c in range(nfix):
            accf[c] = 0
        for c in range(nforms):
            accs[c] = 0
        for i in range(ell):
            x[i] = 0
        while True:
            ok = 1
            for c in range(nfix):
                if accf[c] != 0:
                    ok = 0
                    break
            if ok:
                for c in range(nforms):
                    if accs[c] == 0:
                        ok = 0
                        break
            if ok:
                count += 1
                if out is not None:
                    out.append(tuple([x[c] for c in range(ell)]))
            i = ell - 1
            while i >= 0:
                for c in range(nfix):
                    v = accf[c] + fix[i * nfix + c]
                    accf[c] = v - q if v >= q else v
                for c in range(nforms):
                    v = accs[c] + forms[i * nforms + c]
                    accs[c] = v - q if v >= q else v
                x[i] += 1
                if x[i] < q:
                    break
                x[i] = 0
                i -= 1
            if i < 0:
                return count
    finally:
        free(accf)
        free(accs)
        free(x)


def count_fixed_complement(const long long[:] fix, const long long[:] forms, int ell, int nfix,
                           int nforms, long long q):
    if ell == 0:
        return 1 if nforms == 0 else 0
    return _walk(fix, forms, ell, nfix, nforms, q, None)


def fixed_complement_points(const long long[:] fix, const long long[:] forms, int ell, int nfix,
                            int nforms, long long q):
    cdef list out = []
    if ell == 0:
        return [()] if nforms == 0 else []
    _walk(fix, forms, ell, nfix, nforms, q, out)
    return out

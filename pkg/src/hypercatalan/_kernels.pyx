# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled convolution kernel; same contract as ``_kernels_py.convolve``."""

DENSE_LIMIT = 1 << 21


def convolve(const long long[::1] ak, const long long[::1] aw, list ac,
             const long long[::1] bk, const long long[::1] bw, list bc,
             limits, Py_ssize_t size):
    cdef long long lf = limits[0], lv = limits[1], le = limits[2], l1 = limits[3]
    cdef Py_ssize_t na = ak.shape[0], nb = bk.shape[0], i, j
    cdef long long fa, va, ea, ka1, key, ka
    cdef object ca
    cdef list acc
    cdef dict sparse
    cdef bint dense = size <= DENSE_LIMIT
    if dense:
        acc = [0] * size
    else:
        sparse = {}
    for i in range(na):
        ka = ak[i]
        ca = ac[i]
        fa = lf - aw[4 * i]
        va = lv - aw[4 * i + 1]
        ea = le - aw[4 * i + 2]
        ka1 = l1 - aw[4 * i + 3]
        for j in range(nb):
            if bw[4 * j] > fa:
                break
            if bw[4 * j + 1] > va or bw[4 * j + 2] > ea or bw[4 * j + 3] > ka1:
                continue
            key = ka + bk[j]
            if dense:
                acc[key] = acc[key] + ca * bc[j]
            else:
                sparse[key] = sparse.get(key, 0) + ca * bc[j]
    if dense:
        return {k: v for k, v in enumerate(acc) if v}
    return {k: v for k, v in sparse.items() if v}

"""Pure-Python convolution kernel; reference for the compiled ``_kernels`` module.

Terms are packed as mixed-radix integers so that adding two keys adds the
underlying type vectors.  ``weights`` is a flat list holding
``(faces, vertex weight, edge weight, k1)`` per term, and ``limits`` bounds
each of those four additive statistics.  The second operand must be sorted by
face count.
"""

DENSE_LIMIT = 1 << 21


def convolve(ak, aw, ac, bk, bw, bc, limits, size):
    lf, lv, le, l1 = limits
    nb = len(bk)
    bf = bw[0::4]
    bv = bw[1::4]
    be = bw[2::4]
    b1 = bw[3::4]
    dense = size <= DENSE_LIMIT
    acc = [0] * size if dense else {}
    for i in range(len(ak)):
        ka = ak[i]
        ca = ac[i]
        fa = lf - aw[4 * i]
        va = lv - aw[4 * i + 1]
        ea = le - aw[4 * i + 2]
        ka1 = l1 - aw[4 * i + 3]
        for j in range(nb):
            if bf[j] > fa:
                break
            if bv[j] > va or be[j] > ea or b1[j] > ka1:
                continue
            key = ka + bk[j]
            if dense:
                acc[key] += ca * bc[j]
            else:
                acc[key] = acc.get(key, 0) + ca * bc[j]
    if dense:
        return {k: v for k, v in enumerate(acc) if v}
    return {k: v for k, v in acc.items() if v}

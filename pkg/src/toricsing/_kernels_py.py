"""Pure-Python box-minimum kernels (reference twin of ``_kernels.pyx``).

Both kernels walk the half-open boxes of the maximal cones with the cyclic
step ``a = k / N`` and keep residues ``k * n_i mod N`` incrementally.  The
value of a box point is returned as an integer numerator over the cone's
index ``N``.  Results are ``(num, den, cone, k)`` for the lexicographically
smallest ``(value, cone, k)`` with ``k >= 1``, or ``None`` when every cone is
unimodular.

Every candidate is checked: the lattice point rebuilt from the residues must
satisfy ``N * m = k * n + (box coefficients) * N`` exactly.
"""

from .errors import InternalConsistencyError


def box_min_blowup(n):
    d = len(n)
    best = None
    for j in range(d):
        nj = n[j]
        if nj < 2:
            continue
        rem = [0] * d
        quo = [0] * d
        for k in range(1, nj):
            num = k
            for i in range(d):
                if i == j:
                    continue
                rem[i] += n[i]
                while rem[i] >= nj:
                    rem[i] -= nj
                    quo[i] += 1
                b = nj - rem[i] if rem[i] else 0
                m_i = quo[i] + (1 if rem[i] else 0)
                if m_i * nj - k * n[i] != b:
                    raise InternalConsistencyError(
                        f"box point of cone {j + 1} at k={k} fails recomposition")
                num += b
            if best is None or num * best[1] < best[0] * nj:
                best = (num, nj, j + 1, k)
    return best


def box_min_fibration(n):
    # cone label 0 drops u_0 (generators e_2..e_d); label t >= 2 drops e_t
    d = len(n)
    big_n = n[0]
    if big_n < 2:
        return None
    best = None
    for label in [0] + list(range(2, d + 1)):
        rem = [0] * d
        for k in range(1, big_n):
            for i in range(1, d):
                rem[i] = (rem[i] + n[i]) % big_n
            if label == 0:
                coeffs = [(big_n - rem[i]) % big_n for i in range(1, d)]
                m_rest = [k * n[i] + coeffs[i - 1] for i in range(1, d)]
            else:
                t = label - 1
                b0 = rem[t]
                coeffs = [b0] + [(rem[t] - rem[i]) % big_n for i in range(1, d) if i != t]
                m_rest = []
                pos = 1
                for i in range(1, d):
                    if i == t:
                        m_rest.append(k * n[i] - b0)
                    else:
                        m_rest.append(k * n[i] - b0 + coeffs[pos])
                        pos += 1
            if any(x % big_n for x in m_rest):
                raise InternalConsistencyError(
                    f"box point of cone {label} at k={k} is not integral")
            num = k + sum(coeffs)
            if best is None or num < best[0]:
                best = (num, big_n, label, k)
    return best

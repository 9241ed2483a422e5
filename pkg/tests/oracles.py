"""Independent brute-force oracles used to cross-check the library.

These reimplement the arithmetic from scratch (ints and lists, no ring
objects) so that the tests do not depend on the code paths they verify.
"""

GF_MODULI = {2: [0], 3: [0], 5: [0], 4: [1, 1], 8: [1, 1, 0], 9: [1, 0]}
GF_CHAR = {2: 2, 3: 3, 4: 2, 5: 5, 8: 2, 9: 3}


def gf_add(q, a, b):
    p = GF_CHAR[q]
    return tuple((x + y) % p for x, y in zip(a, b))


def gf_mul(q, a, b):
    p = GF_CHAR[q]
    k = len(a)
    acc = [0] * (2 * k - 1)
    for i in range(k):
        for j in range(k):
            acc[i + j] += a[i] * b[j]
    modulus = GF_MODULI[q]  # x^k = -(modulus as lower coefficients)
    for d in range(2 * k - 2, k - 1, -1):
        c = acc[d] % p
        acc[d] = 0
        for j in range(k):
            acc[d - k + j] -= c * modulus[j]
    return tuple(v % p for v in acc[:k])


def mat_mul(n, base_mul, base_add, base_zero, a, b):
    out = []
    for i in range(n):
        for j in range(n):
            s = base_zero
            for k in range(n):
                s = base_add(s, base_mul(a[i * n + k], b[k * n + j]))
            out.append(s)
    return tuple(out)


def mat_mul_zmod(n, m, a, b):
    return mat_mul(n, lambda x, y: (x * y) % m, lambda x, y: (x + y) % m, 0, a, b)


def mat_mul_gf(n, q, a, b):
    return mat_mul(n, lambda x, y: gf_mul(q, x, y), lambda x, y: gf_add(q, x, y),
                   (0,) * len(GF_MODULI[q]), a, b)


def additive_closure(add, seed):
    """BFS additive span, no generator reduction."""
    members = set(seed)
    frontier = list(members)
    while frontier:
        x = frontier.pop()
        for y in list(members):
            s = add(x, y)
            if s not in members:
                members.add(s)
                frontier.append(s)
    return members


def poly_mul_int(a, b):
    res = 0
    while a:
        if a & 1:
            res ^= b
        a >>= 1
        b <<= 1
    return res

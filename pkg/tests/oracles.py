"""Slow, independent reference computations used to freeze expected values.

Nothing here imports qrsync: polynomials are plain coefficient lists
(index = power of x) and everything is schoolbook arithmetic.
"""

from itertools import product


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def padd(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return trim([(x + y) % 2 for x, y in zip(a, b)])


def pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim([c % 2 for c in out])


def pdivmod(a, b):
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b):
        shift = len(r) - len(b)
        q[shift] = 1
        for i, c in enumerate(b):
            r[shift + i] = (r[shift + i] + c) % 2
        r = trim(r)
    return trim(q), r


def from_exps(*exps):
    out = [0] * (max(exps) + 1)
    for e in exps:
        out[e] ^= 1
    return trim(out)


def x_pow_mod_naive(a, f):
    return pdivmod([0] * a + [1], f)[1]


def order_by_enumeration(f, limit):
    for a in range(1, limit + 1):
        if x_pow_mod_naive(a, f) == [1]:
            return a
    return None


def is_irreducible_naive(f):
    """Trial division by every polynomial of degree 1..deg(f)//2."""
    d = len(f) - 1
    for k in range(1, d // 2 + 1):
        for low in product((0, 1), repeat=k):
            g = list(low) + [1]
            if not pdivmod(f, g)[1]:
                return False
    return True


def smallest_irreducible_naive(t):
    for v in range(1 << t, 1 << (t + 1)):
        f = [(v >> i) & 1 for i in range(t + 1)]
        if is_irreducible_naive(f):
            return f
    return None


def min_distance_naive(g, n):
    """Weight-enumerate m(x) g(x) over every nonzero message."""
    k = n - (len(g) - 1)
    best = n + 1
    for bits in product((0, 1), repeat=k):
        m = trim(bits)
        if not m:
            continue
        w = sum(pmul(m, g))
        best = min(best, w)
    return best


def squares_mod(p):
    return sorted({x * x % p for x in range(1, p)})


def doubling_orbits(n):
    seen, out = set(), []
    for s in range(n):
        if s in seen:
            continue
        orbit, x = [], s
        while x not in orbit:
            orbit.append(x)
            x = 2 * x % n
        seen.update(orbit)
        out.append(orbit)
    return out


def to_list(poly):
    """qrsync Poly (or int) -> coefficient list."""
    v = int(poly)
    return [(v >> i) & 1 for i in range(v.bit_length())]

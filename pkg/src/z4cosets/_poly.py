"""Low-level polynomial helpers over F2 and Z4.

F2 polynomials are int bitmasks (bit i = coefficient of x^i). Z4 polynomials
are coefficient lists, lowest degree first.
"""

from __future__ import annotations


def f2_degree(a: int) -> int:
    return a.bit_length() - 1


def f2_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def f2_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    q = 0
    db = f2_degree(b)
    while a and f2_degree(a) >= db:
        shift = f2_degree(a) - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def f2_inverse_mod(a: int, m: int) -> int | None:
    """Inverse of ``a`` in F2[x]/(m), or None when gcd(a, m) != 1."""
    r0, r1 = m, f2_divmod(a, m)[1]
    s0, s1 = 0, 1
    while r1:
        q, r = f2_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ f2_mul(q, s1)
    if r0 != 1:
        return None
    return f2_divmod(s0, m)[1]


def z4_to_f2(coeffs) -> int:
    mask = 0
    for i, c in enumerate(coeffs):
        if c & 1:
            mask |= 1 << i
    return mask


def f2_to_z4(mask: int, length: int) -> list[int]:
    return [(mask >> i) & 1 for i in range(length)]


def z4_polymul(a, b) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return [c % 4 for c in out]


def z4_reduce_monic(a, modulus) -> list[int]:
    """Remainder of ``a`` modulo a monic Z4 polynomial (lowest degree first)."""
    m = len(modulus) - 1
    a = [c % 4 for c in a]
    for top in range(len(a) - 1, m - 1, -1):
        c = a[top]
        if c:
            base = top - m
            for k in range(m + 1):
                a[base + k] = (a[base + k] - c * modulus[k]) % 4
    a = a[:m] + [0] * max(0, m - len(a))
    return a

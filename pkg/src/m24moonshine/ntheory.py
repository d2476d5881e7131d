"""Exact integer helpers: symbols, modular square roots, divisors, primes."""

from __future__ import annotations

from math import gcd, isqrt

_SPF: list[int] = [0, 1]  # smallest prime factor, grown on demand


def _grow_spf(limit: int) -> None:
    global _SPF
    if limit < len(_SPF):
        return
    limit = max(limit, 2 * len(_SPF), 1 << 12)
    spf = list(range(limit + 1))
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == p:
            for q in range(p * p, limit + 1, p):
                if spf[q] == q:
                    spf[q] = p
    _SPF = spf


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {p: exponent}."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    _grow_spf(n)
    fac: dict[int, int] = {}
    while n > 1:
        p = _SPF[n]
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        fac[p] = e
    return fac


def divisor_count(n: int) -> int:
    out = 1
    for e in factorize(n).values():
        out *= e + 1
    return out


def divisors(n: int) -> list[int]:
    ds = [1]
    for p, e in factorize(n).items():
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def sigma1(n: int) -> int:
    out = 1
    for p, e in factorize(n).items():
        out *= (p ** (e + 1) - 1) // (p - 1)
    return out


def primes_below(limit: int) -> list[int]:
    if limit <= 2:
        return []
    sieve = bytearray([1]) * limit
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit, p)))
    return [i for i, v in enumerate(sieve) if v]


def gamma0_index(n: int) -> int:
    """Index of Gamma0(n) in SL2(Z): n * prod_{p|n} (1 + 1/p)."""
    idx = n
    for p in factorize(n):
        idx = idx // p * (p + 1)
    return idx


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n), defined for all integers n."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    if n < 0:
        return (-1 if a < 0 else 1) * kronecker(a, -n)
    result = 1
    while n % 2 == 0:
        if a % 2 == 0:
            return 0
        n //= 2
        if a % 8 in (3, 5):
            result = -result
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _sqrt_mod_prime(a: int, p: int) -> int | None:
    """One solution of x^2 = a (mod p), p an odd prime, or None."""
    a %= p
    if a == 0:
        return 0
    if kronecker(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while kronecker(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def _sqrts_mod_odd_prime_power(a: int, p: int, e: int) -> list[int]:
    pe = p**e
    a %= pe
    if a == 0:
        step = p ** ((e + 1) // 2)
        return list(range(0, pe, step))
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    if v % 2 == 1:
        return []
    y = _sqrt_mod_prime(a, p)
    if y is None:
        return []
    # Hensel-lift y to a root of x^2 = a mod p^(e-v)
    f = e - v
    mod = p
    while mod < p**f:
        mod_next = min(mod * mod, p**f)
        y = (y - (y * y - a) * pow(2 * y, -1, mod_next)) % mod_next
        mod = mod_next
    pf = p**f
    half = p ** (v // 2)
    roots = set()
    for y0 in (y % pf, (-y) % pf):
        for t in range(half):
            roots.add((half * (y0 + t * pf)) % pe)
    return sorted(roots)


def _sqrts_mod_power_of_two(a: int, e: int) -> list[int]:
    m = 1 << e
    a %= m
    if e <= 3:
        return [x for x in range(m) if (x * x - a) % m == 0]
    if a == 0:
        step = 1 << ((e + 1) // 2)
        return list(range(0, m, step))
    v = 0
    while a % 2 == 0:
        a //= 2
        v += 1
    if v % 2 == 1:
        return []
    f = e - v
    if f == 1:
        ys = [1]
    elif f == 2:
        ys = [1, 3] if a % 4 == 1 else []
    else:
        if a % 8 != 1:
            ys = []
        else:
            y = 1
            for j in range(3, f):
                if (y * y - a) % (1 << (j + 1)) != 0:
                    y += 1 << (j - 1)
            mf = 1 << f
            ys = sorted({y % mf, (-y) % mf, (y + (mf >> 1)) % mf, (-y + (mf >> 1)) % mf})
    half = 1 << (v // 2)
    mf = 1 << f
    roots = set()
    for y0 in ys:
        for t in range(half):
            roots.add((half * (y0 + t * mf)) % m)
    return sorted(roots)


def sqrts_mod(a: int, m: int) -> list[int]:
    """All x in [0, m) with x^2 = a (mod m)."""
    if m <= 0:
        raise ValueError("modulus must be positive")
    if m == 1:
        return [0]
    residues: list[int] = [0]
    moduli = 1
    for p, e in factorize(m).items():
        pe = p**e
        local = _sqrts_mod_power_of_two(a, e) if p == 2 else _sqrts_mod_odd_prime_power(a, p, e)
        if not local:
            return []
        inv_m = pow(moduli, -1, pe)
        new: list[int] = []
        for r in residues:
            for s in local:
                new.append(r + moduli * ((s - r) * inv_m % pe))
        residues = new
        moduli *= pe
    return sorted(x % m for x in residues)


def modinv(a: int, m: int) -> int:
    return pow(a, -1, m)

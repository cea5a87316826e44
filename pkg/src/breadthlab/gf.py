"""Arithmetic in GF(p^m) with log/antilog tables.

Field elements are plain ints in [0, q): the base-p encoding of the
coefficient vector of the residue polynomial (constant term in the lowest
digit).  0 and 1 are the additive and multiplicative identities under this
encoding.  Multiplication and inversion go through discrete log tables built
once per field, so per-operation cost is O(1) after construction.

The defining modulus is the irreducible monic polynomial of the requested
degree whose coefficient encoding (as a base-p integer) is smallest.  Any
fixed irreducible would do -- all invariants computed downstream only depend
on the field up to isomorphism -- but a deterministic choice keeps every
output byte-reproducible.
"""

from __future__ import annotations

from functools import lru_cache

from .numtheory import divisors, is_prime

MAX_Q = 1 << 20


class FieldSpec:
    """An immutable model of GF(p^m).  Use field_make() to construct."""

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus  # coefficients of the monic degree-m modulus, low degree first, length m+1
        self._exp: list[int] = []
        self._log: list[int] = []
        self._build_tables()

    # -- construction ---------------------------------------------------

    def _build_tables(self):
        """Find a multiplicative generator and fill exp/log tables."""
        q = self.q
        self._log = [0] * q
        for g in range(2, q):
            powers = [1]
            x = g
            while x != 1:
                powers.append(x)
                x = self._polymul(x, g)
            if len(powers) == q - 1:
                self._exp = powers
                for i, v in enumerate(powers):
                    self._log[v] = i
                return
        if q == 2:
            self._exp = [1]
            return
        raise AssertionError(f"no generator found for GF({q})")  # unreachable for a true field

    def _digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.m):
            out.append(a % p)
            a //= p
        return out

    def _undigits(self, coeffs) -> int:
        out = 0
        for c in reversed(coeffs):
            out = out * self.p + (c % self.p)
        return out

    def _polymul(self, a: int, b: int) -> int:
        """Schoolbook product of the residue polynomials, reduced by the modulus."""
        p, m = self.p, self.m
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * m - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] += ca * cb
        # reduce x^(m+k) using x^m = -(modulus minus leading term)
        top = [(-c) % p for c in self.modulus[:m]]
        for k in range(len(prod) - 1, m - 1, -1):
            c = prod[k] % p
            if c:
                for j, t in enumerate(top):
                    prod[k - m + j] += c * t
            prod[k] = 0
        return self._undigits(prod[:m])

    # -- field operations -----------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out, mult = 0, 1
        for _ in range(self.m):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out, mult = 0, 1
        for _ in range(self.m):
            out += ((-a) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(q)")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 to a negative power in GF(q)")
            return 0 if e else 1
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def mult_order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        n = self.q - 1
        k = self._log[a]
        for d in divisors(n):
            if (k * d) % n == 0:
                return d
        raise AssertionError("unreachable")

    def elements(self):
        return range(self.q)

    def __repr__(self):
        return f"FieldSpec(GF({self.p}^{self.m}), modulus={self.modulus})"


def _is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    """Trial division of the monic polynomial by all monic polys of degree 1..m//2."""
    m = len(coeffs) - 1
    for d in range(1, m // 2 + 1):
        for enc in range(p**d):
            div = _enc_to_poly(enc, d, p)
            if _polymod(coeffs, div, p) == ():
                return False
    return True


def _enc_to_poly(enc: int, deg: int, p: int) -> tuple[int, ...]:
    out = []
    for _ in range(deg):
        out.append(enc % p)
        enc //= p
    out.append(1)  # monic
    return tuple(out)


def _polymod(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Remainder of a mod b over GF(p), both monic; () means exact division."""
    r = list(a)
    db = len(b) - 1
    while len(r) - 1 >= db:
        lead = r[-1] % p
        if lead:
            shift = len(r) - 1 - db
            for i, c in enumerate(b):
                r[shift + i] = (r[shift + i] - lead * c) % p
        r.pop()
    while r and r[-1] % p == 0:
        r.pop()
    return tuple(c % p for c in r)


@lru_cache(maxsize=None)
def field_make(p: int, m: int) -> FieldSpec:
    """GF(p^m) with the canonical (smallest-encoding) irreducible modulus."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if p**m > MAX_Q:
        raise ValueError(f"q = {p}^{m} exceeds the cap of 2^20")
    if m == 1:
        return FieldSpec(p, 1, (0, 1))  # modulus x; arithmetic is just mod p
    for enc in range(p**m):
        low = []
        e = enc
        for _ in range(m):
            low.append(e % p)
            e //= p
        coeffs = tuple(low) + (1,)
        if coeffs[0] == 0:
            continue  # divisible by x
        if _is_irreducible(coeffs, p):
            return FieldSpec(p, m, coeffs)
    raise AssertionError(f"no irreducible of degree {m} over GF({p})")  # cannot happen


def primitive_element(F: FieldSpec) -> int:
    """Smallest index whose multiplicative order is exactly q - 1."""
    if F.q == 2:
        return 1
    for a in range(1, F.q):
        if F.mult_order(a) == F.q - 1:
            return a
    raise AssertionError("unreachable")


def theta(F: FieldSpec, t: int) -> int:
    """The Suzuki field twist t -> t^(2^(n+1)) on GF(2^(2n+1)).

    Its defining property, theta(theta(t)) == t^2, holds for every t.
    """
    if F.p != 2:
        raise ValueError("theta requires characteristic 2")
    if F.m % 2 == 0:
        raise ValueError("theta requires odd extension degree 2n+1")
    n = (F.m - 1) // 2
    return F.pow(t, 2 ** (n + 1))

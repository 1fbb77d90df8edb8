"""Finite fields GF(q), q = p^k, with integer-indexed elements.

An element of GF(p^k) is stored as an integer in [0, q): its base-p digits
are the coefficients (low degree first) of a polynomial representative
modulo a fixed monic irreducible polynomial.  For k = 1 this is just the
residue mod p.

Every field carries full addition/multiplication tables built from
log/antilog tables, so that vectorised arithmetic over numpy index arrays
is a single fancy-indexing lookup.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

MAX_ORDER = 1024


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p**k, or raise ValueError naming the factorization."""
    if not isinstance(q, (int, np.integer)) or q < 2:
        raise ValueError(f"field order must be an integer >= 2, got {q!r}")
    q = int(q)
    factors = {}
    m, d = q, 2
    while d * d <= m:
        while m % d == 0:
            factors[d] = factors.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    if len(factors) != 1:
        desc = " * ".join(f"{b}^{e}" if e > 1 else str(b) for b, e in sorted(factors.items()))
        raise ValueError(f"{q} = {desc} is not a prime power")
    ((p, k),) = factors.items()
    return p, k


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


# -- polynomials over GF(p), coefficient lists low degree first --------------

def _poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    a = _poly_trim(a)
    m = _poly_trim(m)
    inv_lead = pow(m[-1], -1, p)
    while len(a) >= len(m):
        c = (a[-1] * inv_lead) % p
        shift = len(a) - len(m)
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        a = _poly_trim(a)
    return a


def _monic_polys(p, deg):
    for tail in itertools.product(range(p), repeat=deg):
        yield list(tail) + [1]


def is_irreducible(poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    poly = _poly_trim(poly)
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(p, d):
            if not _poly_mod(poly, g, p):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k (low degree compared first)."""
    # itertools.product varies the last slot fastest, so c0 is the most significant
    for coeffs in _monic_polys(p, k):
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@dataclass(frozen=True)
class FieldSpec:
    p: int
    k: int
    q: int
    modulus: tuple[int, ...]
    add_table: np.ndarray = field(compare=False, repr=False)
    mul_table: np.ndarray = field(compare=False, repr=False)
    neg_table: np.ndarray = field(compare=False, repr=False)
    inv_table: np.ndarray = field(compare=False, repr=False)
    exp_table: np.ndarray = field(compare=False, repr=False)
    log_table: np.ndarray = field(compare=False, repr=False)

    @property
    def is_prime(self) -> bool:
        return self.k == 1

    @property
    def generator(self) -> int:
        return int(self.exp_table[1]) if self.q > 2 else 1

    def digits(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.k)]

    def from_digits(self, ds) -> int:
        return sum(int(d) * self.p**i for i, d in enumerate(ds))

    # scalar arithmetic on indices; plain ints in, plain ints out
    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in GF({self.q})")
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError(f"division of {a} by zero in GF({self.q})")
        return int(self.mul_table[a, self.inv_table[b]])

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError(f"zero raised to negative power in GF({self.q})")
            return 1 if e == 0 else 0
        return int(self.exp_table[(int(self.log_table[a]) * e) % (self.q - 1)])

    def element(self, index: int) -> FieldElement:
        return FieldElement(self, index)

    def log_digest(self) -> str:
        return hashlib.sha256(np.ascontiguousarray(self.log_table, dtype=np.int64).tobytes()).hexdigest()


def _build_tables(p, k, modulus):
    q = p**k
    digits = np.array([[(a // p**i) % p for i in range(k)] for a in range(q)], dtype=np.int64)
    weights = p ** np.arange(k, dtype=np.int64)
    add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
    neg = ((-digits) % p) @ weights

    def times(a, b):
        if k == 1:
            return (a * b) % p
        da, db = digits[a], digits[b]
        prod = [0] * (2 * k - 1)
        for i in range(k):
            for j in range(k):
                prod[i + j] = (prod[i + j] + int(da[i]) * int(db[j])) % p
        r = _poly_mod(prod, modulus, p) + [0] * k
        return int(sum(c * p**i for i, c in enumerate(r[:k])))

    exp = log = None
    for g in range(1, q):
        powers = [1]
        for _ in range(q - 2):
            powers.append(times(powers[-1], g))
        if len(set(powers)) == q - 1:
            exp = np.array(powers + [1], dtype=np.int64)
            break
    assert exp is not None
    log = np.zeros(q, dtype=np.int64)
    log[exp[: q - 1]] = np.arange(q - 1)

    la = log[:, None] + log[None, :]
    mul = exp[la % (q - 1)]
    mul[0, :] = 0
    mul[:, 0] = 0
    inv = np.zeros(q, dtype=np.int64)
    inv[1:] = exp[(-log[1:]) % (q - 1)]
    return add.astype(np.int64), mul.astype(np.int64), neg.astype(np.int64), inv, exp, log


@lru_cache(maxsize=None)
def make_field(q: int) -> FieldSpec:
    """Construct GF(q) for a prime power q <= MAX_ORDER.

    The modulus is the lexicographically smallest monic irreducible
    polynomial of degree k, so the construction is deterministic.
    """
    p, k = factor_prime_power(q)
    if q > MAX_ORDER:
        raise ValueError(f"field order {q} exceeds the supported bound {MAX_ORDER}")
    modulus = (0, 1) if k == 1 else smallest_irreducible(p, k)
    add, mul, neg, inv, exp, log = _build_tables(p, k, list(modulus))
    for t in (add, mul, neg, inv, exp, log):
        t.setflags(write=False)
    return FieldSpec(p, k, q, modulus, add, mul, neg, inv, exp, log)


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.field.q:
            raise ValueError(f"index {self.index} out of range for GF({self.field.q})")

    def _check(self, other):
        if not isinstance(other, FieldElement):
            return FieldElement(self.field, int(other) % self.field.q if self.field.k == 1 else int(other))
        if other.field != self.field:
            raise ValueError("elements belong to different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.add(self.index, other.index))

    def __sub__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.sub(self.index, other.index))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.mul(self.index, other.index))

    def __truediv__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.div(self.index, other.index))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.index, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.index))

    def __int__(self):
        return self.index

    def __repr__(self):
        return f"GF({self.field.q})<{self.index}>"


_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
    "neg": lambda a, b: -a,
    "inv": lambda a, b: a.inverse(),
}


def arith(a: FieldElement, b, op: str) -> FieldElement:
    """Apply `op` to field elements; for 'pow' the second operand is an integer exponent."""
    if op == "pow":
        return a ** int(b)
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(a, b)


def elements(f: FieldSpec) -> list[FieldElement]:
    return [FieldElement(f, i) for i in range(f.q)]

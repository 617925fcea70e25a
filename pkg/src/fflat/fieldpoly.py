"""Exact arithmetic in odd prime fields F_p and the polynomial ring F_p[x].

Residues are plain ints canonicalized to [0, p).  Polynomials are immutable
coefficient tuples in ascending degree with no trailing zeros; the zero
polynomial is the empty tuple and reports degree -1 (standing in for the
conventional deg(0) = -infinity).  Everything here is pure and hashable.

Root finding and square detection deliberately use exhaustive scans and
Euler's criterion: the whole toolkit runs at desk scale (p up to ~100), where
asymptotically better algorithms buy nothing.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@functools.lru_cache(maxsize=None)
def _sqrt_table(p: int) -> dict[int, tuple[int, ...]]:
    table: dict[int, list[int]] = {a: [] for a in range(p)}
    for y in range(p):
        table[y * y % p].append(y)
    return {a: tuple(ys) for a, ys in table.items()}


@dataclass(frozen=True)
class PrimeField:
    """The prime field F_p for an odd prime p >= 3."""

    p: int

    def __post_init__(self) -> None:
        if self.p == 2:
            raise ValueError("characteristic 2 is not supported")
        if not _is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    def normalize(self, a: int) -> int:
        return a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return pow(a, self.p - 2, self.p)

    def square_roots(self, a: int) -> tuple[int, ...]:
        """All y in [0, p) with y*y = a, ascending (0, 1 or 2 of them)."""
        return _sqrt_table(self.p)[a % self.p]

    # Convenience constructors for polynomials over this field.

    def poly(self, coeffs: Iterable[int]) -> FpPoly:
        return FpPoly(self, tuple(coeffs))

    def zero_poly(self) -> FpPoly:
        return FpPoly(self, ())

    def one_poly(self) -> FpPoly:
        return FpPoly(self, (1,))

    def x_minus(self, a: int) -> FpPoly:
        """The monic linear polynomial x - a."""
        return FpPoly(self, (-a % self.p, 1))


def legendre_symbol(a: int, field: PrimeField) -> int:
    """Euler's criterion: 0 for a = 0, +1 for nonzero squares mod p, -1 otherwise."""
    p = field.p
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@dataclass(frozen=True)
class FpPoly:
    """A polynomial over F_p in canonical form (no trailing zero coefficients)."""

    field: PrimeField
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        p = self.field.p
        c = [x % p for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        """Degree; -1 marks the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _check(self, other: FpPoly) -> None:
        if self.field.p != other.field.p:
            raise ValueError("mixed prime fields")

    def __add__(self, other: FpPoly) -> FpPoly:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return FpPoly(self.field, tuple(out))

    def __neg__(self) -> FpPoly:
        return FpPoly(self.field, tuple(-x for x in self.coeffs))

    def __sub__(self, other: FpPoly) -> FpPoly:
        return self + (-other)

    def __mul__(self, other: FpPoly) -> FpPoly:
        self._check(other)
        if self.is_zero or other.is_zero:
            return FpPoly(self.field, ())
        p = self.field.p
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = (out[i + j] + x * y) % p
        return FpPoly(self.field, tuple(out))

    def scaled(self, c: int) -> FpPoly:
        return FpPoly(self.field, tuple(c * x for x in self.coeffs))

    def __divmod__(self, other: FpPoly) -> tuple[FpPoly, FpPoly]:
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.field.p
        rem = list(self.coeffs)
        d = other.degree
        inv_lead = self.field.inv(other.leading)
        quo = [0] * max(len(rem) - d, 0)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i] % p
            if c == 0:
                continue
            q = c * inv_lead % p
            quo[i - d] = q
            for j, y in enumerate(other.coeffs):
                rem[i - d + j] = (rem[i - d + j] - q * y) % p
        return FpPoly(self.field, tuple(quo)), FpPoly(self.field, tuple(rem))

    def __floordiv__(self, other: FpPoly) -> FpPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: FpPoly) -> FpPoly:
        return divmod(self, other)[1]

    def exact_div(self, other: FpPoly) -> FpPoly:
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("division is not exact")
        return q

    def __call__(self, a: int) -> int:
        # Horner evaluation.
        p = self.field.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % p
        return acc

    def monic(self) -> FpPoly:
        if self.is_zero:
            raise ValueError("zero polynomial cannot be made monic")
        if self.leading == 1:
            return self
        return self.scaled(self.field.inv(self.leading))

    def derivative(self) -> FpPoly:
        return FpPoly(self.field, tuple(i * c for i, c in enumerate(self.coeffs) if i >= 1))

    def pow_mod(self, e: int, mod: FpPoly) -> FpPoly:
        """Square-and-multiply power of self modulo `mod`."""
        if e < 0:
            raise ValueError("negative exponent")
        result = self.field.one_poly() % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    @classmethod
    def from_string(cls, field: PrimeField, text: str) -> FpPoly:
        """Parse comma-separated ascending coefficients, e.g. "9,0,2,4,9,3,5,1"."""
        parts = [s.strip() for s in text.split(",") if s.strip() != ""]
        if not parts:
            raise ValueError("empty polynomial text")
        return cls(field, tuple(int(s) for s in parts))

    def to_string(self) -> str:
        return ",".join(str(c) for c in self.coeffs)


def poly_eval(f: FpPoly, a: int) -> int:
    return f(a % f.field.p)


def poly_gcd(f: FpPoly, g: FpPoly) -> FpPoly:
    """Monic gcd via Euclid; rejects the gcd(0, 0) case."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_ext_gcd(f: FpPoly, g: FpPoly) -> tuple[FpPoly, FpPoly, FpPoly]:
    """Extended Euclid: returns (d, s, t) with d = s*f + t*g and d the monic gcd."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    field = f.field
    zero, one = field.zero_poly(), field.one_poly()
    r0, r1 = f, g
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    c = field.inv(r0.leading)
    return r0.scaled(c), s0.scaled(c), t0.scaled(c)


def is_squarefree(f: FpPoly) -> bool:
    """True iff gcd(f, f') = 1.  Requires deg f >= 1."""
    if f.degree < 1:
        raise ValueError("squarefreeness is only defined for nonconstant polynomials")
    fp = f.derivative()
    if fp.is_zero:
        # f is a p-th power in F_p[x], so certainly not squarefree.
        return False
    return poly_gcd(f, fp).degree == 0


def roots_in_fp(f: FpPoly) -> list[int]:
    """All a in F_p with f(a) = 0, ascending, by exhaustive scan."""
    if f.is_zero:
        raise ValueError("the zero polynomial vanishes everywhere")
    return [a for a in range(f.field.p) if f(a) == 0]

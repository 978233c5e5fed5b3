"""Exact arithmetic in the cyclotomic integers Z[x]/(Phi_N).

Elements are reduced modulo the N-th cyclotomic polynomial, so an element is
zero exactly when its coefficient vector is.  This is the ground truth for
every "does this root-of-unity expression vanish" question in the package.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import DivisionByNonUnit


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod_monic(a, m):
    """Quotient and remainder of ``a`` by the monic polynomial ``m``."""
    a = list(a)
    dm = len(m) - 1
    if len(a) <= dm:
        return [], _trim(a)
    q = [0] * (len(a) - dm)
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k]
        if c:
            q[k - dm] = c
            for j in range(dm + 1):
                a[k - dm + j] -= c * m[j]
    return _trim(q), _trim(a[:dm])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Coefficients (constant term first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p, r = _poly_divmod_monic(p, cyclotomic_polynomial(d))
            assert not r
    return tuple(p)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@dataclass(frozen=True)
class RootOfUnity:
    """zeta_N ** k with zeta_N = exp(2 pi i / N)."""
    N: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % self.N)

    def __mul__(self, other):
        if isinstance(other, RootOfUnity):
            if other.N != self.N:
                L = self.N * other.N // gcd(self.N, other.N)
                return RootOfUnity(L, self.k * (L // self.N) + other.k * (L // other.N))
            return RootOfUnity(self.N, self.k + other.k)
        return NotImplemented

    def __pow__(self, e: int):
        return RootOfUnity(self.N, self.k * e)

    def inverse(self):
        return RootOfUnity(self.N, -self.k)

    @property
    def order(self):
        return order_of(self)


def order_of(z: RootOfUnity) -> int:
    return z.N // gcd(z.N, z.k)


class CycloNumber:
    """Element of Z[zeta_N], stored as a reduced coefficient tuple."""

    __slots__ = ("N", "coeffs")

    def __init__(self, N: int, coeffs=()):
        self.N = N
        _, r = _poly_divmod_monic(list(coeffs), cyclotomic_polynomial(N))
        self.coeffs = tuple(r)

    @classmethod
    def integer(cls, N, n):
        return cls(N, [n])

    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            if other.N != self.N:
                raise ValueError("moduli differ")
            return other
        if isinstance(other, RootOfUnity):
            if other.N != self.N:
                raise ValueError("moduli differ")
            return embed(other)
        if isinstance(other, int):
            return CycloNumber(self.N, [other])
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = o.coeffs + (0,) * (n - len(o.coeffs))
        return CycloNumber(self.N, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.N, [-x for x in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycloNumber(self.N, _poly_mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CycloNumber(self.N, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        """Inverse of +-zeta^k; anything else raises ``DivisionByNonUnit``."""
        for sign in (1, -1):
            for k in range(self.N):
                if self == sign * embed(RootOfUnity(self.N, k)):
                    return sign * embed(RootOfUnity(self.N, -k))
        raise DivisionByNonUnit(f"{self!r} is not a signed root of unity")

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.N, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return f"CycloNumber({self.N}: 0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z^{k}")
        return f"CycloNumber({self.N}: {' + '.join(terms)})"


@lru_cache(maxsize=None)
def _power(N, k):
    return CycloNumber(N, [0] * k + [1])


def embed(z: RootOfUnity) -> CycloNumber:
    return _power(z.N, z.k)


def quantum_number(n: int, q: RootOfUnity) -> CycloNumber:
    """(n)_q = 1 + q + ... + q^(n-1); (0)_q = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = CycloNumber(q.N)
    for j in range(n):
        total = total + embed(q ** j)
    return total

"""Exact polynomials in q with integer coefficients.

Coefficients are plain Python ints, so nothing overflows.  Division is
exact long division and refuses to round: a nonzero remainder where the
quotient is known to be exact means a bug upstream.
"""

from __future__ import annotations

from functools import reduce
from typing import Iterable, Sequence


class QPolynomial:
    """Polynomial ``sum(coeffs[i] * q**i)``, stored without trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPolynomial":
        return cls([0] * exponent + [coeff])

    @classmethod
    def from_counts(cls, exponents: Iterable[int]) -> "QPolynomial":
        """Generating function of a multiset of exponents."""
        cs: list[int] = []
        for e in exponents:
            if e >= len(cs):
                cs.extend([0] * (e + 1 - len(cs)))
            cs[e] += 1
        return cls(cs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QPolynomial([other])
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "QPolynomial | int") -> "QPolynomial":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "QPolynomial | int") -> "QPolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "QPolynomial":
        return _coerce(other) - self

    def __mul__(self, other: "QPolynomial | int") -> "QPolynomial":
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPolynomial":
        if k < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "QPolynomial") -> tuple["QPolynomial", "QPolynomial"]:
        """Long division; the divisor must have leading coefficient +-1."""
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = other.coeffs[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must be monic up to sign for exact integer division")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [0] * max(len(rem) - dq, 0)
        for shift in range(len(rem) - 1 - dq, -1, -1):
            c = rem[shift + dq] * lead
            if c:
                quot[shift] = c
                for j, b in enumerate(other.coeffs):
                    rem[shift + j] -= c * b
        return QPolynomial(quot), QPolynomial(rem)

    def exact_div(self, other: "QPolynomial") -> "QPolynomial":
        """Quotient of a division that must leave no remainder."""
        quot, rem = divmod(self, other)
        if not rem.is_zero():
            raise ArithmeticError(f"inexact division: remainder {rem}")
        return quot

    def scalar_div(self, n: int) -> "QPolynomial":
        """Divide every coefficient by ``n``, which must divide each one."""
        bad = [c for c in self.coeffs if c % n]
        if bad:
            raise ArithmeticError(f"coefficients {bad} not divisible by {n}")
        return QPolynomial(c // n for c in self.coeffs)

    def __call__(self, q):
        """Evaluate by Horner's rule; ints and Fractions stay exact."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def substitute_power(self, k: int) -> "QPolynomial":
        """The polynomial p(q**k)."""
        out = [0] * (k * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return QPolynomial(out)

    def root_power(self, k: int) -> "QPolynomial":
        """The polynomial p(q**(1/k)); only defined if every exponent is a multiple of k."""
        if any(c for i, c in enumerate(self.coeffs) if i % k):
            raise ValueError(f"{self} is not a polynomial in q^{k}")
        return QPolynomial(self.coeffs[::k])

    def __repr__(self) -> str:
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = "q" if i == 1 else f"q^{i}"
                body = power if mag == 1 else f"{mag}{power}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(x) -> QPolynomial:
    if isinstance(x, QPolynomial):
        return x
    if isinstance(x, int):
        return QPolynomial([x])
    raise TypeError(f"cannot treat {type(x).__name__} as a q-polynomial")


ZERO = QPolynomial()
ONE = QPolynomial([1])
Q = QPolynomial([0, 1])


def q_integer(m: int) -> QPolynomial:
    """[m]_q = 1 + q + ... + q^(m-1)."""
    return QPolynomial([1] * m)


def one_minus_q_power(m: int) -> QPolynomial:
    return ONE - QPolynomial.monomial(m)


def _product(polys: Iterable[QPolynomial]) -> QPolynomial:
    return reduce(lambda a, b: a * b, polys, ONE)


def q_binomial(k: int, l: int) -> QPolynomial:
    """Gaussian binomial [k+l choose k]_q, the size generating function of P(k, l)."""
    if k < 0 or l < 0:
        raise ValueError("k and l must be nonnegative")
    num = _product(one_minus_q_power(l + i) for i in range(1, k + 1))
    den = _product(one_minus_q_power(i) for i in range(1, k + 1))
    return num.exact_div(den)


def macmahon(r: int, c: int, t: int) -> QPolynomial:
    """Volume generating function of plane partitions in an r x c x t box."""
    if min(r, c, t) < 0:
        raise ValueError("box dimensions must be nonnegative")
    num = _product(one_minus_q_power(r + t + j - i) for i in range(1, r + 1) for j in range(1, c + 1))
    den = _product(one_minus_q_power(r + c - j - i + 1) for i in range(1, r + 1) for j in range(1, c + 1))
    return num.exact_div(den)


def totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def cyclic_orbit_polynomial(n: int) -> QPolynomial:
    """X(C_n, q): necklaces of length n counted by number of black beads (Polya)."""
    if n < 1:
        raise ValueError("n must be positive")
    total = ZERO
    for d in divisors(n):
        total = total + totient(d) * (ONE + QPolynomial.monomial(d)) ** (n // d)
    return total.scalar_div(n)


def cyclic_self_complementary_count(n: int) -> int:
    """Closed form for X(C_n, -1), valid for n > 2."""
    if n <= 2:
        raise ValueError("the closed form only holds for n > 2; evaluate the polynomial instead")
    total = sum(totient(d) * 2 ** (n // d) for d in divisors(n) if d % 2 == 0)
    if total % n:
        raise ArithmeticError(f"sum {total} not divisible by {n}")
    return total // n


def is_symmetric_unimodal(p: QPolynomial | Sequence[int]) -> bool:
    cs = list(p.coeffs if isinstance(p, QPolynomial) else p)
    if cs != cs[::-1]:
        return False
    i = 0
    while i + 1 < len(cs) and cs[i] <= cs[i + 1]:
        i += 1
    while i + 1 < len(cs) and cs[i] >= cs[i + 1]:
        i += 1
    return i >= len(cs) - 1


__all__ = [
    "ONE",
    "Q",
    "QPolynomial",
    "ZERO",
    "cyclic_orbit_polynomial",
    "cyclic_self_complementary_count",
    "divisors",
    "is_symmetric_unimodal",
    "macmahon",
    "q_binomial",
    "q_integer",
    "totient",
]

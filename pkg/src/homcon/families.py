"""Necklaces (cyclic groups) and the Isbell-style groups without 2-power derangements."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DEFAULT_LIMITS, Limits
from .orbit_complex import ComplexKind, homology
from .permgroup import (
    PermGroup,
    Permutation,
    cyclic_group,
    format_group,
    has_odd_orbit,
    has_two_power_derangement,
)
from .qpoly import ONE, Q, QPolynomial, cyclic_orbit_polynomial

# -- necklaces --------------------------------------------------------------


@dataclass
class NecklaceReport:
    n: int
    homology: list[int]
    orbit_polynomial: QPolynomial
    conjecture_checked: bool = False
    conjecture_holds: bool | None = None
    odd_ranks_vanish: bool | None = None
    predicted: QPolynomial | None = None
    detail: str = ""

    @property
    def euler(self) -> int:
        return sum((-1) ** i * h for i, h in enumerate(self.homology))

    @property
    def poincare(self) -> QPolynomial:
        return QPolynomial(self.homology)


def necklace_homology(n: int, limits: Limits = DEFAULT_LIMITS, threads: int = 1) -> list[int]:
    return homology(cyclic_group(n), ComplexKind.INV_D, limits, threads)


def necklace_report(n: int, check_conjecture: bool = False, limits: Limits = DEFAULT_LIMITS, threads: int = 1) -> NecklaceReport:
    """Homology of the invariant down complex for C_n, optionally with the
    doubling recursion checked against the half-size necklaces.

    The Poincare polynomial A_m(q) used in the recursion includes the
    H_0 term; without it the recursion already fails at n = 2.
    """
    if n < 1:
        raise ValueError("n must be positive")
    limits.check_points(n)
    hom = necklace_homology(n, limits, threads)
    rep = NecklaceReport(n, hom, cyclic_orbit_polynomial(n))
    if not check_conjecture or n % 2:
        return rep
    m = n // 2
    rep.conjecture_checked = True
    rep.odd_ranks_vanish = not any(hom[1::2])
    a_m = QPolynomial(necklace_homology(m, limits, threads))
    quotient, remainder = divmod(Q * a_m + cyclic_orbit_polynomial(m), ONE + Q)
    if not remainder.is_zero():
        rep.conjecture_holds = False
        rep.detail = f"(q A_{m} + X_{m}) / (1+q) leaves remainder {remainder}"
        return rep
    rep.predicted = quotient.substitute_power(2)
    rep.conjecture_holds = rep.odd_ranks_vanish and rep.predicted == rep.poincare
    if not rep.conjecture_holds:
        rep.detail = f"predicted {rep.predicted}, computed {rep.poincare}"
    return rep


# -- GF(2)[x] as integers (bit i = coefficient of x^i) ----------------------


def _pmod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def _is_irreducible(f: int) -> bool:
    deg = f.bit_length() - 1
    for g in range(2, 1 << (deg // 2 + 1)):
        if g.bit_length() - 1 <= deg // 2 and _pmod(f, g) == 0:
            return False
    return deg >= 1


def _order_of_x(f: int, cap: int) -> int | None:
    power = 1
    for e in range(1, cap + 1):
        power = _pmod(power << 1, f)
        if power == 1:
            return e
    return None


def multiplicative_order_of_two(b: int) -> int:
    d, v = 1, 2 % b
    while v != 1:
        v = v * 2 % b
        d += 1
    return d


def poly_str(f: int) -> str:
    terms = []
    for i in range(f.bit_length() - 1, -1, -1):
        if f >> i & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return " + ".join(terms) or "0"


def order_b_factor(b: int, d: int) -> int:
    """Least (as a bitmask) irreducible degree-d divisor of x^b - 1 in which x has order b."""
    xb1 = (1 << b) | 1
    for f in range((1 << d) | 1, 1 << (d + 1), 2):
        if _pmod(xb1, f) == 0 and _is_irreducible(f) and _order_of_x(f, b) == b:
            return f
    raise AssertionError(f"no irreducible factor of degree {d} with order {b}")


# -- vectors in GF(2)^d as bitmasks, bit i = coefficient of e_{i+1} -----------


def _vec_mat(v: int, rows: list[int]) -> int:
    out = 0
    i = 0
    while v:
        if v & 1:
            out ^= rows[i]
        v >>= 1
        i += 1
    return out


def _parity(v: int) -> int:
    return bin(v).count("1") & 1


@dataclass
class IsbellGroup:
    b: int
    d: int
    group: PermGroup
    char_poly: int
    companion: list[int]
    hyperplane: str
    coset_labels: list[tuple[int, int]]
    trace: list[str] = field(default_factory=list)

    @property
    def n(self) -> int:
        return 2 * self.b

    @property
    def expected_order(self) -> int:
        return self.b * 2**self.d


def isbell_group(b: int, limits: Limits = DEFAULT_LIMITS) -> IsbellGroup:
    """Transitive subgroup of S_{2b} with no derangement of 2-power order.

    G = C V with V = GF(2)^d and C cyclic of order b acting irreducibly
    through a companion matrix.  G acts by right multiplication on the
    2b right cosets of the parity hyperplane H.  Elements are affine maps
    x -> x c^k + v, and the coset H(k, v) is labelled (k mod b, parity of
    v c^-k); point number 2k + parity.
    """
    if b < 3 or b % 2 == 0:
        raise ValueError("b must be an odd integer greater than 1")
    limits.check_points(2 * b)
    d = multiplicative_order_of_two(b)
    f = order_b_factor(b, d)
    alpha = f ^ (1 << d)  # bit i-1 holds alpha_i
    if _parity(alpha):
        raise AssertionError("coefficients alpha_i do not sum to zero mod 2")
    # rows of the companion matrix acting on row vectors
    rows = [1 << (i + 1) for i in range(d - 1)] + [alpha]
    ident = [1 << i for i in range(d)]
    powers = [ident]
    for _ in range(1, b):
        powers.append([_vec_mat(r, rows) for r in powers[-1]])
    if [_vec_mat(r, rows) for r in powers[b - 1]] != ident:
        raise AssertionError("companion matrix does not have order b")

    def point(k: int, eps: int) -> int:
        return 2 * (k % b) + eps

    rot = [0] * (2 * b)
    trans = [0] * (2 * b)
    for k in range(b):
        inv = powers[(-k) % b]
        shift = _parity(_vec_mat(1, inv))  # parity of e_1 c^-k
        for eps in (0, 1):
            rot[point(k, eps)] = point(k + 1, eps)
            trans[point(k, eps)] = point(k, eps ^ shift)
    gens = (Permutation(tuple(rot)), Permutation(tuple(trans)))
    group = PermGroup(2 * b, gens)
    labels = [(k, eps) for k in range(b) for eps in (0, 1)]
    trace = [
        f"d = {d} (order of 2 mod {b})",
        f"characteristic polynomial {poly_str(f)}",
        "companion rows " + " ".join(format(r, f"0{d}b")[::-1] for r in rows),
        "H = vectors with even coordinate sum",
        "point 2k+e (0-based) is the coset of maps x c^k + v with parity(v c^-k) = e",
        f"generators {format_group(group)}",
    ]
    return IsbellGroup(b, d, group, f, rows, "sum a_i = 0", labels, trace)


@dataclass(frozen=True)
class ConcentrationReport:
    homology: list[int]
    odd_homology: bool
    transitive: bool
    even_n: bool
    has_odd_orbit: bool
    two_power_derangement: bool | None

    @property
    def predicted_failure(self) -> bool:
        """Transitive on an even number of points with no self-complementary middle orbit."""
        return self.transitive and self.even_n and self.two_power_derangement is False


def concentration_failure_check(group: PermGroup, limits: Limits = DEFAULT_LIMITS, threads: int = 1, derangements: bool = True) -> ConcentrationReport:
    hom = homology(group, ComplexKind.INV_D, limits, threads)
    der = has_two_power_derangement(group, limits) if derangements else None
    return ConcentrationReport(
        homology=hom,
        odd_homology=any(hom[1::2]),
        transitive=group.is_transitive(),
        even_n=group.n % 2 == 0,
        has_odd_orbit=has_odd_orbit(group),
        two_power_derangement=der,
    )

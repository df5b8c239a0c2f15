"""Closed forms, bounds and identities for L_{n,l}, evaluated exactly.

Every polynomial is evaluated in :class:`fractions.Fraction` with its
published prefactor (3/8, 1/16, ...) left in place, then required to be an
integer.  A non-integral value means a coefficient was mistyped.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .geometry import matchstick_number


class FormulaId(enum.Enum):
    L0 = "L0"
    L1 = "L1"
    L2 = "L2"
    L3 = "L3"
    L4 = "L4"
    L5conj = "L5conj"
    L6conj = "L6conj"
    BinoBound = "BinoBound"
    GF_L1 = "GF_L1"
    BinTrans_L2 = "BinTrans_L2"
    BinTrans_L3 = "BinTrans_L3"
    RankSumV = "RankSumV"
    RankSum36 = "RankSum36"
    RankSum35 = "RankSum35"
    RankSum6 = "RankSum6"


# smallest n at which each formula is claimed
MIN_N = {
    FormulaId.L0: 1,
    FormulaId.L1: 1,
    FormulaId.L2: 1,
    FormulaId.L3: 2,
    FormulaId.L4: 3,
    FormulaId.L5conj: 3,
    FormulaId.L6conj: 4,
    FormulaId.BinoBound: 1,
    FormulaId.GF_L1: 0,
    FormulaId.BinTrans_L2: 1,
    FormulaId.BinTrans_L3: 2,
    FormulaId.RankSumV: 1,
    FormulaId.RankSum36: 2,
    FormulaId.RankSum35: 2,
    FormulaId.RankSum6: 2,
}

# lozenge count l -> formula giving L_{n,l}
LOZENGE_FORMULAS = {
    0: FormulaId.L0,
    1: FormulaId.L1,
    2: FormulaId.L2,
    3: FormulaId.L3,
    4: FormulaId.L4,
    5: FormulaId.L5conj,
    6: FormulaId.L6conj,
}

CONJECTURES = (FormulaId.L5conj, FormulaId.L6conj)


class DomainError(ValueError):
    pass


class TranscriptionError(ArithmeticError):
    """A formula that must be integral produced a proper fraction."""


def horner(coeffs, x):
    """Evaluate a polynomial given highest-degree coefficient first."""
    acc = 0
    for c in coeffs:
        acc = acc * x + c
    return acc


# L_{n,5} conjecture: 3/1280 (n-3)(n+3) * this degree-8 factor
L5_FACTOR = (27, -135, -387, 2835, -168, -18732, 19568, 36992, -56320)

# L_{n,6} conjecture: 1/5120 * this degree-12 polynomial.  The published line
# is missing the operator before 19678080 n; "+" is the sign that matches the
# exact counts (see tests/test_closedforms.py, which refits all 13
# coefficients from count_dp at n = 4..16).
L6_POLY = (81, -486, -2835, 21870, 26775, -384786, 131751, 3275730,
           -3798716, -13254088, 22481984, +19678080, -42024960)


def _L2(n):
    return Fraction(3, 8) * (n - 1) * (n - 2) * (3 * n**2 + 3 * n - 4)


def _L3(n):
    return Fraction(1, 16) * (n - 2) * (9 * n**5 - 9 * n**4 - 81 * n**3 + 81 * n**2 + 160 * n - 192)


def _L4(n):
    return (Fraction(3, 128) * (n - 2) * (n - 3)
            * (9 * n**6 + 9 * n**5 - 135 * n**4 - 81 * n**3 + 670 * n**2 + 104 * n - 1216))


def _L5(n):
    return Fraction(3, 1280) * (n - 3) * (n + 3) * horner(L5_FACTOR, n)


def _L6(n):
    return Fraction(1, 5120) * horner(L6_POLY, n)


def _bintrans_L2(n):
    return -3 + 3 * comb(n, 1) - 3 * comb(n, 2) + 27 * comb(n, 3) + 27 * comb(n, 4)


def _bintrans_L3(n):
    return (24 - 22 * comb(n, 1) + 20 * comb(n, 2) + 378 * comb(n, 4)
            + 810 * comb(n, 5) + 405 * comb(n, 6))


def _rank_sum_v(n):
    return 3 * (n - 1) ** 2


def _rank_sum_36(n):
    return 3 * (6 * n - 11) * (n - 2)


def _rank_sum_35(n):
    return Fraction(3, 2) * (n - 2) * (10 * n**3 - 20 * n**2 - 47 * n + 95)


def _rank_sum_6(n):
    return Fraction(3, 8) * (n - 2) * (9 * n**5 - 18 * n**4 - 96 * n**3 + 198 * n**2 + 235 * n - 520)


_EVAL = {
    FormulaId.L0: lambda n: 1,
    FormulaId.L1: lambda n: matchstick_number(n - 1),
    FormulaId.L2: _L2,
    FormulaId.L3: _L3,
    FormulaId.L4: _L4,
    FormulaId.L5conj: _L5,
    FormulaId.L6conj: _L6,
    FormulaId.GF_L1: lambda n: gf_L1_coefficients(n + 1)[n],
    FormulaId.BinTrans_L2: _bintrans_L2,
    FormulaId.BinTrans_L3: _bintrans_L3,
    FormulaId.RankSumV: _rank_sum_v,
    FormulaId.RankSum36: _rank_sum_36,
    FormulaId.RankSum35: _rank_sum_35,
    FormulaId.RankSum6: _rank_sum_6,
}


def _integral(fid: FormulaId, n: int, value) -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise TranscriptionError(f"{fid.value}({n}) = {value} is not an integer")
    return value.numerator


def _check_domain(fid: FormulaId, n: int) -> None:
    if n < MIN_N[fid]:
        raise DomainError(f"{fid.value} is valid for n >= {MIN_N[fid]}, got n={n}")


def eval_formula(fid: FormulaId, n: int, l: int | None = None) -> int:
    """Exact value of a formula at side length n.

    ``l`` is required by, and only used for, :attr:`FormulaId.BinoBound`.
    """
    fid = FormulaId(fid)
    _check_domain(fid, n)
    if fid is FormulaId.BinoBound:
        if l is None:
            raise ValueError("BinoBound needs the lozenge count l")
        return binomial_upper_bound(n, l)
    return _integral(fid, n, _EVAL[fid](n))


def binomial_upper_bound(n: int, l: int) -> int:
    """C(M_{n-1}, l): choose any l internal edges, ignoring conflicts."""
    if n < 1:
        raise DomainError(f"side length must be >= 1, got {n}")
    if l < 0:
        raise DomainError(f"lozenge count must be >= 0, got {l}")
    return comb(matchstick_number(n - 1), l)


def gf_L1_coefficients(count: int) -> list[int]:
    """First ``count`` power-series coefficients of 3x^2 / (1-x)^3.

    Computed by series long division, independently of M_{n-1}.
    """
    num = [0, 0, 3]
    den = [1, -3, 3, -1]
    out = []
    for k in range(count):
        c = num[k] if k < len(num) else 0
        c -= sum(den[j] * out[k - j] for j in range(1, min(k, len(den) - 1) + 1))
        out.append(c)  # den[0] == 1
    return out


@dataclass(frozen=True)
class TransformCheck:
    n: int
    binomial_form: int
    product_form: int

    @property
    def equal(self) -> bool:
        return self.binomial_form == self.product_form


def binomial_transform_check(fid: FormulaId, n_max: int) -> list[TransformCheck]:
    """Compare a binomial-sum form with its product form for n up to n_max."""
    fid = FormulaId(fid)
    product = {FormulaId.BinTrans_L2: FormulaId.L2, FormulaId.BinTrans_L3: FormulaId.L3}
    if fid not in product:
        raise ValueError(f"{fid.value} has no binomial-sum form")
    return [TransformCheck(n, eval_formula(fid, n), eval_formula(product[fid], n))
            for n in range(MIN_N[fid], n_max + 1)]


RANK_SUMS = (FormulaId.RankSumV, FormulaId.RankSum36, FormulaId.RankSum35, FormulaId.RankSum6)


def eval_rank_sum(fid: FormulaId, n: int) -> int:
    fid = FormulaId(fid)
    if fid not in RANK_SUMS:
        raise ValueError(f"{fid.value} is not a rank sum")
    return eval_formula(fid, n)


def l4_decomposition(n: int) -> int:
    """C(M_{n-1},4) minus the three rank sums for four lozenges."""
    _check_domain(FormulaId.L4, n)
    return (binomial_upper_bound(n, 4)
            - eval_rank_sum(FormulaId.RankSum36, n)
            - eval_rank_sum(FormulaId.RankSum35, n)
            - eval_rank_sum(FormulaId.RankSum6, n))


def bracket_form(l: int, n: int) -> int:
    """The leading-correction form of the conjectures for l = 5 and 6.

    C(M,l) - [3(n-1)^2 C(M-2, l-2) - (lower-order correction)].
    """
    m = matchstick_number(n - 1)
    if l == 5:
        fid = FormulaId.L5conj
        low = Fraction(1, 4) * (4704 - 3102 * n + 1845 * n**3 - 2031 * n**2
                                + 60 * n**4 - 315 * n**5 + 63 * n**6)
    elif l == 6:
        fid = FormulaId.L6conj
        low = Fraction(1, 16) * (-131088 + 61472 * n - 41206 * n**3 + 69420 * n**2 - 90 * n**6
                                 - 918 * n**7 + 153 * n**8 - 10851 * n**4 + 9828 * n**5)
    else:
        raise ValueError("bracket forms exist for l = 5 and l = 6 only")
    _check_domain(fid, n)
    return _integral(fid, n, comb(m, l) - (3 * (n - 1) ** 2 * comb(m - 2, l - 2) - low))


def fit_polynomial(points) -> list[Fraction]:
    """Coefficients (highest degree first) of the interpolating polynomial.

    ``points`` is a sequence of (x, y) with distinct x; Newton divided
    differences in exact arithmetic.
    """
    xs = [Fraction(x) for x, _ in points]
    table = [Fraction(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    size = len(xs)
    newton = [table[0]]
    for level in range(1, size):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i])
                 for i in range(size - level)]
        newton.append(table[0])

    # expand sum newton[k] * prod_{i<k} (x - xs[i]), lowest degree first
    coeffs = [Fraction(0)] * size
    basis = [Fraction(1)]
    for k, c in enumerate(newton):
        for i, b in enumerate(basis):
            coeffs[i] += c * b
        if k + 1 < size:
            nxt = [Fraction(0)] * (len(basis) + 1)
            for i, b in enumerate(basis):
                nxt[i + 1] += b
                nxt[i] -= xs[k] * b
            basis = nxt
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs[::-1]


def solve_l6_linear_coefficient(values: dict[int, int]) -> int:
    """Coefficient of n in the degree-12 L6 polynomial implied by exact counts.

    ``values`` maps n to L_{n,6}.  Raises if the counts disagree with each
    other or with the remaining published coefficients.
    """
    found = set()
    for n, value in values.items():
        if n < MIN_N[FormulaId.L6conj]:
            continue
        others = horner(L6_POLY[:-2], n) * n * n + L6_POLY[-1]
        residue = Fraction(5120 * value - others, n)
        found.add(residue)
    if len(found) != 1:
        raise ValueError(f"inconsistent linear coefficients {sorted(found)}")
    (coeff,) = found
    if coeff.denominator != 1:
        raise TranscriptionError(f"linear coefficient {coeff} is not an integer")
    return coeff.numerator

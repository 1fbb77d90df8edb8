"""Closed-form counts for the symplectic orthogonality graph and frame complex.

Everything here is an exact integer or Fraction function of (n, q).  Where a
formula is evaluated outside the range in which the corresponding
configuration exists (e.g. d_0, or row 3 of the mu-table when n = 2), the
literal value is returned and the caller is told the case is unrealised.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial


def _F(x) -> Fraction:
    return Fraction(x)


def _pow(q, e) -> Fraction:
    return Fraction(q) ** e


def _int(x: Fraction) -> int:
    x = Fraction(x)
    if x.denominator != 1:
        raise ValueError(f"expected an integer, got {x}")
    return x.numerator


def sp_order(n: int, q: int) -> int:
    """|Sp_{2n}(q)| = q^(n^2) prod_{i<=n} (q^(2i) - 1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = q ** (n * n)
    for i in range(1, n + 1):
        out *= q ** (2 * i) - 1
    return out


def b(n, q) -> Fraction:
    return (_pow(q, 2 * n - 2) - 1) * (q + 1)


def c(n, q) -> Fraction:
    return (_pow(q, 2 * n - 2) - 1) * (_pow(q, 2 * n - 3) - q)


def d(n, q) -> Fraction:
    """Degree of the orthogonality graph in dimension 2n (d_{n+1} counts its vertices)."""
    return _pow(q, 2 * n - 4) * (_pow(q, 2 * n - 2) - 1) / (q * q - 1)


def e0(n, q) -> Fraction:
    return _pow(q, 2 * n - 4) * (_pow(q, 2 * n - 2) - 1) * (q * q - q + 1)


def e1(n, q) -> Fraction:
    return _pow(q, 2 * n - 4) * (_pow(q, 2 * n - 2) - 1) * (q + 1)


def e2(n, q) -> Fraction:
    return _pow(q, 2 * n - 3) * (_pow(q, 2 * n - 2) - 1) * (q - 2)


@dataclass(frozen=True)
class FormulaTable1:
    n: int
    q: int
    b: int
    c: int
    d: int
    e0: int
    e1: int
    e2: int

    @property
    def census(self) -> tuple[int, int, int, int, int, int]:
        """Sizes of the six classes, in class order."""
        return (1, self.b, self.c, self.d, self.e1, self.e2)


def table1(n: int, q: int) -> FormulaTable1:
    if n < 2:
        raise ValueError("pair counts need n >= 2")
    return FormulaTable1(n, q, *(_int(g(n, q)) for g in (b, c, d, e0, e1, e2)))


def plane_count(n: int, q: int, r: int = 0) -> int:
    if n < 1 or r < 0:
        raise ValueError("need n >= 1, r >= 0")
    return _int(d(n + 1, q) * q ** (2 * r))


def degree(n: int, q: int) -> int:
    return _int(d(n, q))


@dataclass(frozen=True)
class MuTable:
    """6x6 table of transition counts; `entries` are literal formula values."""

    n: int
    q: int
    entries: tuple[tuple[Fraction, ...], ...]
    realized: tuple[bool, ...]

    def matrix(self) -> list[list[int]]:
        """Integer matrix with unrealised rows set to zero."""
        return [[_int(v) for v in row] if ok else [0] * 6 for row, ok in zip(self.entries, self.realized)]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i - 1]


def realized_cases(n: int, q: int) -> tuple[bool, ...]:
    return tuple(v > 0 for v in table1(n, q).census)


def mu_table(n: int, q: int) -> MuTable:
    if n < 2:
        raise ValueError("mu-table needs n >= 2")
    Q = _F(q)
    m = n - 1
    rows = (
        (0, 0, 0, d(n, q), 0, 0),
        (0, 0, 0, d(n - 1, q) * Q**2, Q ** (4 * n - 8), 0),
        (0, 0, Q ** (4 * n - 9), d(n - 2, q) * Q**4, Q ** (4 * n - 10) * (Q + 1), Q ** (4 * n - 9) * (Q - 2)),
        (1, b(m, q), c(m, q), d(m, q), e1(m, q), e2(m, q)),
        (0, Q ** (2 * n - 4), Q ** (2 * n - 5) * (Q ** (2 * n - 4) - 1), d(m, q), e1(m, q), e2(m, q)),
        (0, 0, Q ** (2 * n - 5) * (Q ** (2 * n - 4) - 1), d(m, q), e1(m, q), e2(m, q) + Q ** (2 * n - 4)),
    )
    entries = tuple(tuple(_F(v) for v in r) for r in rows)
    return MuTable(n, q, entries, realized_cases(n, q))


def mu5_formula(n: int, q: int, sum_dim: int, psi_proj_nonzero: bool) -> Fraction:
    """Closed form for mu_5 in terms of dim(S+W) and whether psi(w_S, u_S) != 0."""
    Q = _F(q)
    inner = Q ** (2 * n - 2) - Q ** (2 * n - sum_dim)
    if psi_proj_nonzero:
        inner -= Q**2 - 1
    return Q ** (2 * n - sum_dim - 2) / (Q - 1) * inner


def frame_count(n: int, q: int, m: int) -> int:
    if not 0 <= m <= n:
        raise ValueError(f"frame size m={m} outside [0, {n}]")
    return _int(Fraction(sp_order(n, q), q**m * (q * q - 1) ** m * factorial(m) * sp_order(n - m, q)))


def f_vector(n: int, q: int) -> tuple[int, ...]:
    return tuple(frame_count(n, q, m) for m in range(1, n + 1))


def euler_char(n: int, q: int) -> int:
    """Reduced Euler characteristic, sum_{m=0}^n (-1)^(m+1) |F_m|."""
    return sum((-1) ** (m + 1) * frame_count(n, q, m) for m in range(n + 1))


def euler_char_n3(q: int) -> int:
    return -_int(Fraction(q**12 + 2 * q**10 - q**8 - 2 * q**6 - 3 * q**4 + 3, 3))


def eigenvalues(n: int, q: int) -> list[int]:
    if n < 2:
        raise ValueError("eigenvalue list needs n >= 2")
    dn = degree(n, q)
    if n == 2:
        vals = {dn, -(q ** (2 * n - 4))}
    else:
        vals = {dn, q ** (2 * n - 5), q ** (2 * n - 4), -(q ** (2 * n - 4)), q ** (3 * n - 6), -(q ** (3 * n - 6))}
    return sorted(vals)


def l2_vector(n: int, q: int) -> tuple[Fraction, ...]:
    """Number of length-2 walks between planes in each class."""
    if n < 2:
        raise ValueError("needs n >= 2")
    dm = d(n - 1, q)
    return (d(n, q), dm * q**2, d(n - 2, q) * q**4, dm, dm, dm)


# -- Garland / Cohen-Macaulay predicates ---------------------------------------

def lambda_min(n: int, q: int) -> Fraction:
    """Smallest non-zero normalised-Laplacian eigenvalue, 1 - q^(3n-6)/d_n (n >= 3)."""
    if n < 3:
        raise ValueError("defined for n >= 3")
    return 1 - Fraction(q ** (3 * n - 6)) / d(n, q)


def P(j: int, q: int) -> Fraction:
    Q = _F(q)
    return (Q ** (2 * j - 2) - 1) / (Q ** (j - 2) * (Q * Q - 1)) + j - 1


def garland_condition(n: int, q: int, i: int) -> bool:
    """Spectral gap of links of (i-1)-simplices exceeds i/(i+1)."""
    return lambda_min(n - i, q) > Fraction(i, i + 1)


def half_n_connected(n: int, q: int) -> bool:
    """P_{n'+eps}(q) > n for n = 2n' + eps."""
    half, eps = divmod(n, 2)
    j = half + eps
    return j >= 3 and P(j, q) > n


def prop91_bound(n: int, q: int) -> bool:
    """n > q^2(q^2+1) + n(n-2) / (q^4 (q^4+q^2+1))."""
    return n > q * q * (q * q + 1) + Fraction(n * (n - 2), q**4 * (q**4 + q * q + 1))


def _f_or_zero(n, q, m):
    return frame_count(n, q, m) if 0 <= m <= n else 0


def fvector_nonvanishing(n: int, q: int) -> bool:
    """f_n + f_{n-2} > f_{n-1} + f_{n-3}; forces non-zero rational H_{n-3}."""
    f = lambda m: _f_or_zero(n, q, m)
    return f(n) + f(n - 2) > f(n - 1) + f(n - 3)


def prop91_threshold(q: int, n_max: int = 10_000) -> int:
    for n in range(1, n_max + 1):
        if prop91_bound(n, q):
            return n
    raise ValueError(f"bound never holds for n <= {n_max}")


@dataclass(frozen=True)
class GarlandReport:
    """Garland-method predictions.

    `cm_char0` and `conn_n_minus_4` are the stated hypotheses n < q + 3 and
    n < q^2 + 4.  `rational_connectivity` applies P_j(q) > n directly, so at
    n = q^2 + 4 (where P_4(q) = n + q^-2 > n) it is sharper than the latter.
    """

    n: int
    q: int
    lambda_min: Fraction | None
    p_values: dict[int, Fraction] = field(default_factory=dict)
    rational_connectivity: int = -1
    cm_char0: bool = False
    conn_n_minus_4: bool = False
    conn_half_n: bool = False
    prop91_nonvanishing: bool = False
    fvector_nonvanishing: bool = False
    prop91_threshold: int = 0


def garland_report(n: int, q: int) -> GarlandReport:
    lam = lambda_min(n, q) if n >= 3 else None
    pv = {j: P(j, q) for j in range(3, n + 1)}
    conn = max((n - j for j, v in pv.items() if v > n), default=-1)
    return GarlandReport(
        n=n,
        q=q,
        lambda_min=lam,
        p_values=pv,
        rational_connectivity=conn,
        cm_char0=n < q + 3,
        conn_n_minus_4=n < q * q + 4,
        conn_half_n=half_n_connected(n, q),
        prop91_nonvanishing=prop91_bound(n, q),
        fvector_nonvanishing=fvector_nonvanishing(n, q),
        prop91_threshold=prop91_threshold(q),
    )

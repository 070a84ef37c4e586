"""Evaluators for the partition-indexed discrete orthogonal families
(Meixner, Charlier, Krawtchouk) at arbitrary rational multiplicity d > 0,
the Laguerre companion family, the classical single-variable versions, and
the rank-reduction determinant evaluation available at d = 2.

Each family value is a finite sum over partitions contained in the first
index, with exact rational arithmetic throughout; the summand is symmetric
in the two indices, so duality holds structurally rather than numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb, factorial
from typing import Optional, Sequence, Union

from .conearith import (
    ConeParams,
    cone_params,
    dim_partition,
    falling_row,
    gen_pochhammer,
)
from .errors import DomainError, ParameterError, PoleError
from .jack import JackTable
from .partitions import contains, format_partition, pad, weight

Rat = Union[int, Fraction]


def _index_data(jack: JackTable, m, x):
    params = cone_params(jack)
    m = pad(m, params.r)
    x = pad(x, params.r)
    jack.extend(max(weight(m), weight(x)))
    gm = falling_row(jack, m)
    gx = falling_row(jack, x, max_weight=weight(m))
    return params, m, x, gm, gx


def meixner(m, x, alpha: Rat, c: Rat, jack: JackTable) -> Fraction:
    """Meixner value at index pair (m, x) with parameters (alpha, c != 0)."""
    alpha = Fraction(alpha)
    c = Fraction(c)
    if c == 0:
        raise ParameterError("meixner: c must be nonzero")
    params, m, x, gm, gx = _index_data(jack, m, x)
    z = 1 - 1 / c
    total = Fraction(0)
    for k, gmk in gm.items():
        gxk = gx.get(k)
        if not gxk:
            continue
        poch = gen_pochhammer(alpha, k, params)
        if poch == 0:
            raise PoleError(
                f"meixner: (alpha)_k vanishes at k={format_partition(k)} for alpha={alpha}"
            )
        total += (
            dim_partition(k, jack)
            * gmk
            * gxk
            * z ** weight(k)
            / (gen_pochhammer(params.rank_ratio, k, params) * poch)
        )
    return total


def charlier(m, x, a: Rat, jack: JackTable) -> Fraction:
    """Charlier value at index pair (m, x) with parameter a != 0."""
    a = Fraction(a)
    if a == 0:
        raise ParameterError("charlier: a must be nonzero")
    params, m, x, gm, gx = _index_data(jack, m, x)
    z = Fraction(-1) / a
    total = Fraction(0)
    for k, gmk in gm.items():
        gxk = gx.get(k)
        if not gxk:
            continue
        total += (
            dim_partition(k, jack)
            * gmk
            * gxk
            * z ** weight(k)
            / gen_pochhammer(params.rank_ratio, k, params)
        )
    return total


def krawtchouk(m, x, p: Rat, N: int, jack: JackTable) -> Fraction:
    """Krawtchouk value at (m, x) with p != 0 and box size N; requires the
    first index to fit in the (N, ..., N) box.  The shifted factorial of -N
    never vanishes on contributing terms, so no pole can occur."""
    p = Fraction(p)
    N = int(N)
    if p == 0:
        raise ParameterError("krawtchouk: p must be nonzero")
    if N < 0:
        raise ParameterError("krawtchouk: N must be >= 0")
    params, m, x, gm, gx = _index_data(jack, m, x)
    if not contains(m, (N,) * params.r):
        raise DomainError(
            f"krawtchouk: index {format_partition(m)} not contained in the box N={N}"
        )
    total = Fraction(0)
    for k, gmk in gm.items():
        gxk = gx.get(k)
        if not gxk:
            continue
        poch = gen_pochhammer(Fraction(-N), k, params)
        assert poch != 0
        total += (
            dim_partition(k, jack)
            * gmk
            * gxk
            * (1 / p) ** weight(k)
            / (gen_pochhammer(params.rank_ratio, k, params) * poch)
        )
    return total


def laguerre(m, diag_u: Sequence[Rat], alpha: Rat, jack: JackTable) -> Fraction:
    """Laguerre companion value at the diagonal point ``diag_u``; the
    superscript convention is alpha - n/r."""
    from .conearith import binomial_row

    alpha = Fraction(alpha)
    params = cone_params(jack)
    m = pad(m, params.r)
    jack.extend(weight(m))
    u = tuple(Fraction(v) for v in diag_u)
    if len(u) != params.r:
        raise ValueError(f"diagonal point length {len(u)} != r = {params.r}")
    poch_m = gen_pochhammer(alpha, m, params)
    total = Fraction(0)
    for k, b in binomial_row(jack, m).items():
        poch = gen_pochhammer(alpha, k, params)
        if poch == 0:
            raise PoleError(
                f"laguerre: (alpha)_k vanishes at k={format_partition(k)} for alpha={alpha}"
            )
        sign = -1 if weight(k) % 2 else 1
        total += sign * b * jack.phi(k).eval_at(u) / poch
    return (
        dim_partition(m, jack)
        * poch_m
        / gen_pochhammer(params.rank_ratio, m, params)
        * total
    )


# ---------------------------------------------------------------------------
# classical single-variable versions (independent of everything above)


def _poch1(s: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= s + i
    return out


def univariate_meixner(m: int, x: int, alpha: Rat, c: Rat) -> Fraction:
    alpha = Fraction(alpha)
    c = Fraction(c)
    if c == 0:
        raise ParameterError("c must be nonzero")
    z = 1 - 1 / c
    total = Fraction(0)
    for k in range(min(m, x) + 1):
        poch = _poch1(alpha, k)
        if poch == 0:
            raise PoleError(f"(alpha)_{k} = 0 for alpha={alpha}")
        total += Fraction(factorial(k)) * comb(m, k) * comb(x, k) * z**k / poch
    return total


def univariate_charlier(m: int, x: int, a: Rat) -> Fraction:
    a = Fraction(a)
    if a == 0:
        raise ParameterError("a must be nonzero")
    total = Fraction(0)
    for k in range(min(m, x) + 1):
        total += Fraction(factorial(k)) * comb(m, k) * comb(x, k) * (-1 / a) ** k
    return total


def univariate_krawtchouk(m: int, x: int, p: Rat, N: int) -> Fraction:
    p = Fraction(p)
    if p == 0:
        raise ParameterError("p must be nonzero")
    if not 0 <= m <= N:
        raise DomainError(f"index {m} outside 0..{N}")
    total = Fraction(0)
    for k in range(min(m, x) + 1):
        poch = _poch1(Fraction(-N), k)
        total += Fraction(factorial(k)) * comb(m, k) * comb(x, k) * (1 / p) ** k / poch
    return total


def univariate_laguerre(m: int, u: Rat, alpha: Rat) -> Fraction:
    """Classical Laguerre with superscript alpha - 1, matching the r = 1
    reduction of ``laguerre``."""
    alpha = Fraction(alpha)
    u = Fraction(u)
    total = Fraction(0)
    for k in range(m + 1):
        poch = _poch1(alpha, k)
        if poch == 0:
            raise PoleError(f"(alpha)_{k} = 0 for alpha={alpha}")
        total += Fraction((-1) ** k) * comb(m, k) * u**k / poch
    return _poch1(alpha, m) / Fraction(factorial(m)) * total


def univariate(family: str, m: int, x, **params) -> Fraction:
    need = {
        "meixner": ("alpha", "c"),
        "charlier": ("a",),
        "krawtchouk": ("p", "N"),
        "laguerre": ("alpha",),
    }.get(family)
    if need is None:
        raise ParameterError(f"unknown family {family!r}")
    missing = [k for k in need if params.get(k) is None]
    if missing:
        raise ParameterError(f"{family} needs {', '.join(missing)}")
    if family == "meixner":
        return univariate_meixner(m, x, params["alpha"], params["c"])
    if family == "charlier":
        return univariate_charlier(m, x, params["a"])
    if family == "krawtchouk":
        return univariate_krawtchouk(m, x, params["p"], params["N"])
    return univariate_laguerre(m, x, params["alpha"])


# ---------------------------------------------------------------------------
# determinant evaluation (d = 2 only)


def _det(mat: list) -> Fraction:
    n = len(mat)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1 if inv % 2 else 1)
        for i in range(n):
            term *= mat[i][perm[i]]
            if not term:
                break
        total += term
    return total


def determinant_formula(
    family: str,
    m,
    x,
    jack: JackTable,
    alpha: Optional[Rat] = None,
    c: Optional[Rat] = None,
    a: Optional[Rat] = None,
    p: Optional[Rat] = None,
    N: Optional[int] = None,
) -> Fraction:
    """Value of a family polynomial assembled from an r x r determinant of
    single-variable polynomials at staircase-shifted indices.  Only valid
    at d = 2, where the normalized basis elements degenerate to ratios of
    alternants."""
    if jack.d != 2:
        raise DomainError(f"determinant route needs d = 2, got d = {jack.d}")
    r = jack.r
    m = pad(m, r)
    x = pad(x, r)
    sm = jack.principal(m)
    sx = jack.principal(x)
    delta_fact = Fraction(1)
    for j in range(1, r + 1):
        delta_fact *= factorial(r - j)
    mi = [m[mu] + r - 1 - mu for mu in range(r)]
    xi = [x[nu] + r - 1 - nu for nu in range(r)]

    if family == "meixner":
        alpha = Fraction(alpha)
        c = Fraction(c)
        if alpha.denominator == 1 and alpha <= r - 1:
            raise DomainError(
                f"prefactor pole: alpha={alpha} is an integer <= r-1 = {r - 1}"
            )
        if c == 1 and r > 1:
            raise DomainError("c = 1 makes the prefactor singular for r > 1")
        pref = (1 - 1 / c) ** (-(r * (r - 1)) // 2)
        for j in range(1, r + 1):
            pref *= _poch1(alpha - r + 1, j - 1)
        mat = [
            [univariate_meixner(mi[mu], xi[nu], alpha - r + 1, c) for nu in range(r)]
            for mu in range(r)
        ]
    elif family == "charlier":
        a = Fraction(a)
        pref = (-a) ** (r * (r - 1) // 2)
        mat = [
            [univariate_charlier(mi[mu], xi[nu], a) for nu in range(r)]
            for mu in range(r)
        ]
    elif family == "krawtchouk":
        p = Fraction(p)
        N = int(N)
        if not (contains(m, (N,) * r) and contains(x, (N,) * r)):
            raise DomainError("krawtchouk determinant route needs m, x inside the box")
        pref = p ** (r * (r - 1) // 2)
        for j in range(1, r + 1):
            pref *= _poch1(Fraction(-N - r + 1), j - 1)
        mat = [
            [
                univariate_krawtchouk(mi[mu], xi[nu], p, N + r - 1)
                for nu in range(r)
            ]
            for mu in range(r)
        ]
    else:
        raise ParameterError(f"no determinant route for family {family!r}")

    return pref / (delta_fact * sm * sx) * _det(mat)


# ---------------------------------------------------------------------------
# degenerate-limit gap sequences


def charlier_limit_gaps(m, x, a: Rat, alphas: Sequence[Rat], jack: JackTable) -> list:
    """|Meixner(alpha, a/(a+alpha)) - Charlier(a)| along increasing alpha;
    exact rationals, expected to decay like 1/alpha."""
    a = Fraction(a)
    target = charlier(m, x, a, jack)
    return [
        abs(meixner(m, x, Fraction(al), a / (a + Fraction(al)), jack) - target)
        for al in alphas
    ]


def krawtchouk_limit_gaps(m, x, a: Rat, ns: Sequence[int], jack: JackTable) -> list:
    """|Krawtchouk(a/N, N) - Charlier(a)| along increasing N; exact."""
    a = Fraction(a)
    target = charlier(m, x, a, jack)
    return [abs(krawtchouk(m, x, a / n, n, jack) - target) for n in ns]


# ---------------------------------------------------------------------------
# parameter bundle used by the verification layer and the CLI


FAMILIES = ("meixner", "charlier", "krawtchouk")


@dataclass(frozen=True)
class FamilyParams:
    family: str
    alpha: Optional[Fraction] = None
    c: Optional[Fraction] = None
    a: Optional[Fraction] = None
    p: Optional[Fraction] = None
    N: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES + ("laguerre",):
            raise ParameterError(f"unknown family {self.family!r}")
        need = {
            "meixner": ("alpha", "c"),
            "charlier": ("a",),
            "krawtchouk": ("p", "N"),
            "laguerre": ("alpha",),
        }[self.family]
        for name in need:
            if getattr(self, name) is None:
                raise ParameterError(f"{self.family} needs --{name}")
        for name in ("alpha", "c", "a", "p"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, Fraction(v))
        if self.c == 0 or self.a == 0 or self.p == 0:
            raise ParameterError(f"{self.family}: zero parameter not allowed")
        if self.N is not None and int(self.N) < 0:
            raise ParameterError("krawtchouk: N must be >= 0")

    def evaluate(self, m, x, jack: JackTable) -> Fraction:
        if self.family == "meixner":
            return meixner(m, x, self.alpha, self.c, jack)
        if self.family == "charlier":
            return charlier(m, x, self.a, jack)
        if self.family == "krawtchouk":
            return krawtchouk(m, x, self.p, int(self.N), jack)
        raise ParameterError(f"{self.family} is not indexed by two partitions")

    def label(self) -> dict:
        out = {"family": self.family}
        for name in ("alpha", "c", "a", "p"):
            v = getattr(self, name)
            if v is not None:
                out[name] = str(v)
        if self.N is not None:
            out["N"] = int(self.N)
        return out

"""Exact symmetric polynomials in the monomial basis, and total-degree
truncated symmetric power series on the diagonal.

A symmetric polynomial in ``r`` variables is a sparse map from partition
keys (padded to length ``r``) to ``fractions.Fraction`` coefficients in the
monomial basis m_lambda.  Nothing in this module ever rounds.  Series are
the same maps with a total-degree cap; multiplying two series truncated at
D reproduces the exact product's coefficients up to degree D.

All values are immutable by convention and safe for concurrent readers.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import permutations
from math import comb, factorial
from typing import Iterable, Optional, Union

from .partitions import enumerate_up_to, pad

Rat = Union[int, Fraction]

_ORBITS: dict[tuple, tuple] = {}


def _orbit(key: tuple) -> tuple:
    """Distinct permutations of an exponent tuple, in a fixed order."""
    orb = _ORBITS.get(key)
    if orb is None:
        orb = tuple(sorted(set(permutations(key)), reverse=True))
        _ORBITS[key] = orb
    return orb


def _canonical(r: int, coeffs) -> dict:
    out = {}
    for key, c in coeffs.items():
        c = Fraction(c)
        if c:
            out[pad(key, r)] = c
    return out


def _add_maps(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for k, v in b.items():
        nv = out.get(k, Fraction(0)) + sign * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def _mul_maps(r: int, a: dict, b: dict, cap: Optional[int]) -> dict:
    """Product of two monomial-basis maps, optionally truncated at total
    degree ``cap``.  Works by expanding both orbits and collecting only
    weakly decreasing exponent vectors (the orbit representatives)."""
    out: dict = defaultdict(Fraction)
    bitems = [(bk, sum(bk), bv) for bk, bv in b.items()]
    for ak, av in a.items():
        wa = sum(ak)
        for bk, wb, bv in bitems:
            if cap is not None and wa + wb > cap:
                continue
            coef = av * bv
            for avec in _orbit(ak):
                for bvec in _orbit(bk):
                    e = tuple(x + y for x, y in zip(avec, bvec))
                    if all(e[i] >= e[i + 1] for i in range(r - 1)):
                        out[e] += coef
    return {k: v for k, v in out.items() if v}


def _eval_map(coeffs: dict, point: tuple) -> Fraction:
    total = Fraction(0)
    for key, c in coeffs.items():
        s = Fraction(0)
        for vec in _orbit(key):
            t = Fraction(1)
            for p, a in zip(point, vec):
                if a:
                    t *= p**a
                    if not t:
                        break
            s += t
        total += c * s
    return total


class SymPoly:
    """Symmetric polynomial in ``r`` variables, monomial basis, exact."""

    __slots__ = ("r", "coeffs")

    def __init__(self, r: int, coeffs: Optional[dict] = None):
        self.r = int(r)
        self.coeffs = _canonical(self.r, coeffs or {})

    @classmethod
    def zero(cls, r: int) -> "SymPoly":
        return cls(r)

    @classmethod
    def one(cls, r: int) -> "SymPoly":
        return cls(r, {(0,) * r: 1})

    @classmethod
    def monomial(cls, r: int, key, c: Rat = 1) -> "SymPoly":
        return cls(r, {pad(key, r): Fraction(c)})

    def degree(self) -> int:
        return max((sum(k) for k in self.coeffs), default=0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymPoly)
            and self.r == other.r
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        raise TypeError("SymPoly is not hashable")

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._check(other)
        out = SymPoly(self.r)
        out.coeffs = _add_maps(self.coeffs, other.coeffs)
        return out

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        self._check(other)
        out = SymPoly(self.r)
        out.coeffs = _add_maps(self.coeffs, other.coeffs, -1)
        return out

    def __neg__(self) -> "SymPoly":
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out = SymPoly(self.r)
        out.coeffs = _mul_maps(self.r, self.coeffs, other.coeffs, None)
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Rat) -> "SymPoly":
        c = Fraction(c)
        out = SymPoly(self.r)
        if c:
            out.coeffs = {k: c * v for k, v in self.coeffs.items()}
        return out

    def eval_at(self, point: Iterable[Rat]) -> Fraction:
        pt = tuple(Fraction(p) for p in point)
        if len(pt) != self.r:
            raise ValueError(f"point length {len(pt)} != r = {self.r}")
        return _eval_map(self.coeffs, pt)

    def homogeneous(self, w: int) -> dict:
        return {k: v for k, v in self.coeffs.items() if sum(k) == w}

    def truncated(self, max_degree: int) -> "TruncatedSeries":
        return TruncatedSeries(
            self.r,
            max_degree,
            {k: v for k, v in self.coeffs.items() if sum(k) <= max_degree},
        )

    def __repr__(self):
        terms = sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        return f"SymPoly(r={self.r}, {dict(terms)!r})"

    def _check(self, other):
        if not isinstance(other, (SymPoly, TruncatedSeries)):
            raise TypeError(f"cannot combine SymPoly with {type(other).__name__}")
        if self.r != other.r:
            raise ValueError(f"ambient length mismatch: {self.r} vs {other.r}")


class TruncatedSeries:
    """Symmetric power series in ``r`` variables truncated at a total degree."""

    __slots__ = ("r", "max_degree", "coeffs")

    def __init__(self, r: int, max_degree: int, coeffs: Optional[dict] = None):
        if max_degree < 0:
            raise ValueError("max_degree must be >= 0")
        self.r = int(r)
        self.max_degree = int(max_degree)
        cc = _canonical(self.r, coeffs or {})
        for k in cc:
            if sum(k) > self.max_degree:
                raise ValueError(f"key {k} beyond truncation degree {max_degree}")
        self.coeffs = cc

    @classmethod
    def one(cls, r: int, max_degree: int) -> "TruncatedSeries":
        return cls(r, max_degree, {(0,) * r: 1})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.r == other.r
            and self.max_degree == other.max_degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        raise TypeError("TruncatedSeries is not hashable")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        cap = min(self.max_degree, other.max_degree)
        merged = _add_maps(self.coeffs, other.coeffs)
        return TruncatedSeries(
            self.r, cap, {k: v for k, v in merged.items() if sum(k) <= cap}
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + other.scale(-1)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        if isinstance(other, SymPoly):
            other = other.truncated(self.max_degree)
        cap = min(self.max_degree, other.max_degree)
        out = TruncatedSeries(self.r, cap)
        out.coeffs = _mul_maps(self.r, self.coeffs, other.coeffs, cap)
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Rat) -> "TruncatedSeries":
        c = Fraction(c)
        out = TruncatedSeries(self.r, self.max_degree)
        if c:
            out.coeffs = {k: c * v for k, v in self.coeffs.items()}
        return out

    def coefficient(self, key) -> Fraction:
        return self.coeffs.get(pad(key, self.r), Fraction(0))

    def as_sympoly(self) -> SymPoly:
        return SymPoly(self.r, self.coeffs)

    def _check(self, other):
        if not isinstance(other, (SymPoly, TruncatedSeries)):
            raise TypeError(f"cannot combine TruncatedSeries with {type(other).__name__}")
        if self.r != other.r:
            raise ValueError(f"ambient length mismatch: {self.r} vs {other.r}")

    def __repr__(self):
        terms = sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        return f"TruncatedSeries(r={self.r}, D={self.max_degree}, {dict(terms)!r})"


# ---------------------------------------------------------------------------
# univariate series kernels (coefficient lists of length D + 1)


def u_mul(a: list, b: list, max_degree: int) -> list:
    out = [Fraction(0)] * (max_degree + 1)
    for i, ai in enumerate(a[: max_degree + 1]):
        if not ai:
            continue
        for j, bj in enumerate(b[: max_degree + 1 - i]):
            if bj:
                out[i + j] += ai * bj
    return out


def u_inv(a: list, max_degree: int) -> list:
    """Multiplicative inverse of a series with nonzero constant term."""
    if not a or a[0] == 0:
        raise ZeroDivisionError("series has no inverse: zero constant term")
    inv = [Fraction(0)] * (max_degree + 1)
    inv[0] = 1 / Fraction(a[0])
    for n in range(1, max_degree + 1):
        s = Fraction(0)
        for i in range(1, min(n, len(a) - 1) + 1):
            if a[i]:
                s += Fraction(a[i]) * inv[n - i]
        inv[n] = -inv[0] * s
    return inv


def u_pow(a: list, n: int, max_degree: int) -> list:
    out = [Fraction(1)] + [Fraction(0)] * max_degree
    base = [Fraction(x) for x in a[: max_degree + 1]]
    base += [Fraction(0)] * (max_degree + 1 - len(base))
    for _ in range(n):
        out = u_mul(out, base, max_degree)
    return out


def u_ratio(num: list, den: list, max_degree: int) -> list:
    return u_mul(
        [Fraction(x) for x in num] + [Fraction(0)] * max_degree,
        u_inv([Fraction(x) for x in den], max_degree),
        max_degree,
    )


def u_binomial(exponent: Rat, scale: Rat, max_degree: int) -> list:
    """Coefficients of (1 - scale*z)**exponent for rational exponent."""
    exponent = Fraction(exponent)
    scale = Fraction(scale)
    out = [Fraction(1)]
    for k in range(1, max_degree + 1):
        out.append(out[-1] * (exponent - k + 1) / k * (-scale))
    return out


def u_exp(scale: Rat, max_degree: int) -> list:
    scale = Fraction(scale)
    return [scale**k / factorial(k) for k in range(max_degree + 1)]


# ---------------------------------------------------------------------------
# multivariate builders


def series_per_variable(u: list, r: int, max_degree: int) -> TruncatedSeries:
    """The series prod_i u(z_i) truncated at total degree ``max_degree``."""
    coeffs = {}
    for mu in enumerate_up_to(r, max_degree):
        v = Fraction(1)
        for e in mu:
            v *= u[e] if e < len(u) else Fraction(0)
            if not v:
                break
        if v:
            coeffs[mu] = v
    return TruncatedSeries(r, max_degree, coeffs)


def series_prod_binomial(exponent: Rat, scale: Rat, r: int, max_degree: int) -> TruncatedSeries:
    """Expansion of prod_{i=1..r} (1 - scale*z_i)**exponent to total degree
    <= max_degree; the branch with value 1 at z = 0."""
    return series_per_variable(u_binomial(exponent, scale, max_degree), r, max_degree)


def series_exp_trace(scale: Rat, r: int, max_degree: int) -> TruncatedSeries:
    """Expansion of exp(scale * (z_1 + ... + z_r))."""
    return series_per_variable(u_exp(scale, max_degree), r, max_degree)


def series_compose_diagonal(poly: SymPoly, entry: list, max_degree: int) -> TruncatedSeries:
    """Evaluate a symmetric polynomial at the diagonal point
    (u(z_1), ..., u(z_r)), where ``entry`` holds the coefficients of the
    univariate series u; truncate the result at total degree ``max_degree``."""
    r = poly.r
    max_part = max((k[0] for k in poly.coeffs), default=0)
    base = [Fraction(x) for x in entry[: max_degree + 1]]
    base += [Fraction(0)] * (max_degree + 1 - len(base))
    powers = [[Fraction(1)] + [Fraction(0)] * max_degree]
    for _ in range(max_part):
        powers.append(u_mul(powers[-1], base, max_degree))
    coeffs: dict = {}
    for mu in enumerate_up_to(r, max_degree):
        tot = Fraction(0)
        for lam, c in poly.coeffs.items():
            s = Fraction(0)
            for avec in _orbit(lam):
                t = Fraction(1)
                for a_i, e_i in zip(avec, mu):
                    f = powers[a_i][e_i]
                    if not f:
                        t = Fraction(0)
                        break
                    t *= f
                s += t
            tot += c * s
        if tot:
            coeffs[mu] = tot
    return TruncatedSeries(r, max_degree, coeffs)


def series_phi_of_moebius(x, c_inv: Rat, jack, max_degree: int) -> TruncatedSeries:
    """Diagonal series of the normalized basis element Phi_x at entries
    (1 - c_inv*z_i) / (1 - z_i), truncated at ``max_degree``."""
    entry = u_ratio([1, -Fraction(c_inv)], [1, -1], max_degree)
    return series_compose_diagonal(jack.phi(x), entry, max_degree)


def shift_by_one_map(r: int, coeffs: dict, cap: Optional[int] = None) -> dict:
    """Monomial-basis map of p(1 + z_1, ..., 1 + z_r) for a monomial-basis
    map of p, keeping only total degrees <= cap (all degrees if None)."""
    acc: dict = defaultdict(Fraction)
    for lam, c in coeffs.items():
        hi = sum(lam) if cap is None else min(cap, sum(lam))
        for avec in _orbit(lam):
            _shift_accumulate(acc, avec, c, r, hi)
    return {k: v for k, v in acc.items() if v}


def _shift_accumulate(acc, avec, c, r, cap):
    # walk all e <= avec componentwise with |e| <= cap, weakly decreasing only
    def rec(i, budget, prev, coef, prefix):
        if i == r:
            acc[prefix] += coef
            return
        hi = min(avec[i], budget, prev)
        for e in range(hi + 1):
            rec(i + 1, budget - e, e, coef * comb(avec[i], e), prefix + (e,))

    rec(0, cap, cap, c, ())

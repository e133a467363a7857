"""Exact truncated formal power series over the integers.

Everything here is dense and exact: coefficients are Python ints, and every
value carries fixed truncation bounds chosen at construction.  Truncation is
a quotient operation -- terms that fall outside the bounds are discarded --
so within the bounds every coefficient produced is the true one.  Operations
on values with different bounds are rejected rather than silently coerced.

Three rings are provided:

* ``QPoly``    -- polynomials in q with degrees 0..qmax
* ``ZQSeries`` -- series in z and q on the box 0..zmax by 0..qmax
* ``YQSeries`` -- q-truncated series whose q^n slice is a Laurent
  polynomial in y with exponents -qmax..qmax

plus the classic constructors wired to these rings: finite and infinite
q-Pochhammer products and Gaussian binomial coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "Monomial",
    "Box",
    "QPoly",
    "ZQSeries",
    "YQSeries",
    "poch_finite",
    "poch_infinite",
    "gaussian_binomial",
]


def _acc_conv(dst: list[int], a: list[int], b: list[int], top: int) -> None:
    """dst[i+j] += a[i]*b[j] for all i+j < top, skipping zero coefficients."""
    for i, ai in enumerate(a):
        if ai:
            room = top - i
            if room <= 0:
                break
            for j, bj in enumerate(b[:room]):
                if bj:
                    dst[i + j] += ai * bj


def _acc_conv_ordered(dst: list[int], a: list[int], b: list[int], top: int) -> None:
    """Like _acc_conv but iterates the sparser operand on the outside."""
    na = sum(1 for v in a if v)
    nb = sum(1 for v in b if v)
    if na <= nb:
        _acc_conv(dst, a, b, top)
    else:
        _acc_conv(dst, b, a, top)


def _nonzero(v: list[int]) -> int:
    return sum(1 for c in v if c)


def _term_str(coeff: int, mono: str) -> str:
    if not mono:
        return str(coeff)
    if coeff == 1:
        return mono
    if coeff == -1:
        return "-" + mono
    return f"{coeff}*{mono}"


def _join_terms(terms, limit: int = 10) -> str:
    parts: list[str] = []
    for coeff, mono in terms:
        if len(parts) >= limit:
            parts.append("...")
            break
        s = _term_str(coeff, mono)
        if not parts:
            parts.append(s)
        elif s.startswith("-"):
            parts.append("- " + s[1:])
        else:
            parts.append("+ " + s)
    return " ".join(parts) if parts else "0"


def _pow_str(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def _mono_str(*pairs) -> str:
    return "*".join(s for s in (_pow_str(v, e) for v, e in pairs) if s)


@dataclass(frozen=True)
class Monomial:
    """A single term coeff * z^zdeg * q^qdeg * y^ypow.

    The y exponent may be negative (it tracks the crank); z- and q-degrees
    must be nonnegative.
    """

    coeff: int
    zdeg: int = 0
    qdeg: int = 0
    ypow: int = 0

    def __post_init__(self) -> None:
        if self.zdeg < 0:
            raise ValueError("z-degree must be nonnegative")
        if self.qdeg < 0:
            raise ValueError("q-degree must be nonnegative")


class QPoly:
    """Dense integer polynomial in q, truncated above degree ``qmax``.

    The coefficient list is adopted, not copied; treat instances as
    immutable after construction.
    """

    __slots__ = ("qmax", "coeffs")

    def __init__(self, qmax: int, coeffs: list[int] | None = None):
        if qmax < 0:
            raise ValueError("qmax must be nonnegative")
        if coeffs is None:
            coeffs = [0] * (qmax + 1)
        elif len(coeffs) != qmax + 1:
            raise ValueError("coefficient list must have length qmax + 1")
        self.qmax = qmax
        self.coeffs = coeffs

    @classmethod
    def zero(cls, qmax: int) -> "QPoly":
        return cls(qmax)

    @classmethod
    def one(cls, qmax: int) -> "QPoly":
        c = [0] * (qmax + 1)
        c[0] = 1
        return cls(qmax, c)

    @classmethod
    def monomial(cls, coeff: int, qdeg: int, qmax: int) -> "QPoly":
        """coeff * q^qdeg, or zero if qdeg lies outside the bound."""
        c = [0] * (qmax + 1)
        if 0 <= qdeg <= qmax:
            c[qdeg] = coeff
        return cls(qmax, c)

    def coeff(self, n: int) -> int:
        if not 0 <= n <= self.qmax:
            raise IndexError(f"q-degree {n} outside 0..{self.qmax}")
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: "QPoly") -> None:
        if self.qmax != other.qmax:
            raise ValueError(
                f"truncation bounds differ: qmax {self.qmax} vs {other.qmax}"
            )

    def __add__(self, other):
        if not isinstance(other, QPoly):
            return NotImplemented
        self._check(other)
        return QPoly(self.qmax, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, QPoly):
            return NotImplemented
        self._check(other)
        return QPoly(self.qmax, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return QPoly(self.qmax, [-a for a in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, QPoly):
            return NotImplemented
        self._check(other)
        out = [0] * (self.qmax + 1)
        _acc_conv_ordered(out, self.coeffs, other.coeffs, self.qmax + 1)
        return QPoly(self.qmax, out)

    def __eq__(self, other):
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.qmax == other.qmax and self.coeffs == other.coeffs

    __hash__ = None

    def reciprocal(self) -> "QPoly":
        """Multiplicative inverse within the truncation bound.

        Requires constant term exactly 1; then r satisfies self * r == 1
        up to degree qmax.
        """
        if self.coeffs[0] != 1:
            raise ValueError("reciprocal requires constant term exactly 1")
        nz = [(m, c) for m, c in enumerate(self.coeffs) if c and m > 0]
        r = [0] * (self.qmax + 1)
        r[0] = 1
        for n in range(1, self.qmax + 1):
            acc = 0
            for m, c in nz:
                if m > n:
                    break
                acc += c * r[n - m]
            r[n] = -acc
        return QPoly(self.qmax, r)

    def __repr__(self):
        terms = ((c, _pow_str("q", e)) for e, c in enumerate(self.coeffs) if c)
        return f"QPoly(qmax={self.qmax}: {_join_terms(terms)})"


class ZQSeries:
    """Bivariate integer series on the truncation box z^0..zmax, q^0..qmax.

    ``rows[i][j]`` holds the coefficient of z^i q^j.  The row structure is
    adopted, not copied; treat instances as immutable after construction.
    """

    __slots__ = ("zmax", "qmax", "rows")

    def __init__(self, zmax: int, qmax: int, rows: list[list[int]] | None = None):
        if zmax < 0 or qmax < 0:
            raise ValueError("bounds must be nonnegative")
        if rows is None:
            rows = [[0] * (qmax + 1) for _ in range(zmax + 1)]
        elif len(rows) != zmax + 1 or any(len(r) != qmax + 1 for r in rows):
            raise ValueError("rows must be a (zmax+1) x (qmax+1) array")
        self.zmax = zmax
        self.qmax = qmax
        self.rows = rows

    @classmethod
    def zero(cls, zmax: int, qmax: int) -> "ZQSeries":
        return cls(zmax, qmax)

    @classmethod
    def one(cls, zmax: int, qmax: int) -> "ZQSeries":
        s = cls(zmax, qmax)
        s.rows[0][0] = 1
        return s

    def coeff(self, zdeg: int, qdeg: int) -> int:
        if not 0 <= zdeg <= self.zmax:
            raise IndexError(f"z-degree {zdeg} outside 0..{self.zmax}")
        if not 0 <= qdeg <= self.qmax:
            raise IndexError(f"q-degree {qdeg} outside 0..{self.qmax}")
        return self.rows[zdeg][qdeg]

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def _check(self, other: "ZQSeries") -> None:
        if self.zmax != other.zmax or self.qmax != other.qmax:
            raise ValueError(
                "truncation bounds differ: "
                f"({self.zmax},{self.qmax}) vs ({other.zmax},{other.qmax})"
            )

    def __add__(self, other):
        if not isinstance(other, ZQSeries):
            return NotImplemented
        self._check(other)
        rows = [
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        ]
        return ZQSeries(self.zmax, self.qmax, rows)

    def __sub__(self, other):
        if not isinstance(other, ZQSeries):
            return NotImplemented
        self._check(other)
        rows = [
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        ]
        return ZQSeries(self.zmax, self.qmax, rows)

    def __neg__(self):
        return ZQSeries(self.zmax, self.qmax, [[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if not isinstance(other, ZQSeries):
            return NotImplemented
        self._check(other)
        top = self.qmax + 1
        out = [[0] * top for _ in range(self.zmax + 1)]
        # skip all-zero rows, and within a row pair iterate the sparser one
        a_rows = [(i, r, _nonzero(r)) for i, r in enumerate(self.rows) if any(r)]
        b_rows = [(i, r, _nonzero(r)) for i, r in enumerate(other.rows) if any(r)]
        for ia, ra, ca in a_rows:
            for ib, rb, cb in b_rows:
                iz = ia + ib
                if iz > self.zmax:
                    break
                dst = out[iz]
                if ca <= cb:
                    _acc_conv(dst, ra, rb, top)
                else:
                    _acc_conv(dst, rb, ra, top)
        return ZQSeries(self.zmax, self.qmax, out)

    def __eq__(self, other):
        if not isinstance(other, ZQSeries):
            return NotImplemented
        return (
            self.zmax == other.zmax
            and self.qmax == other.qmax
            and self.rows == other.rows
        )

    __hash__ = None

    def reciprocal(self) -> "ZQSeries":
        """Multiplicative inverse within the box (constant term must be 1).

        Solved row by row in z: the z^0 row is inverted as a univariate
        series, then each higher row follows from the triangular relation
        sum_j a_j * r_(i-j) = 0.
        """
        if self.rows[0][0] != 1:
            raise ValueError("reciprocal requires constant term exactly 1")
        top = self.qmax + 1
        a0 = self.rows[0]
        r0 = QPoly(self.qmax, list(a0)).reciprocal().coeffs
        a0_trivial = not any(a0[1:])
        nz_rows = [(j, r) for j, r in enumerate(self.rows) if j > 0 and any(r)]
        out = [list(r0)]
        for i in range(1, self.zmax + 1):
            t = [0] * top
            for j, aj in nz_rows:
                if j > i:
                    break
                _acc_conv(t, aj, out[i - j], top)
            if a0_trivial:
                out.append([-v for v in t])
            else:
                ri = [0] * top
                _acc_conv_ordered(ri, r0, t, top)
                out.append([-v for v in ri])
        return ZQSeries(self.zmax, self.qmax, out)

    def __repr__(self):
        terms = (
            (c, _mono_str(("z", i), ("q", j)))
            for i, row in enumerate(self.rows)
            for j, c in enumerate(row)
            if c
        )
        return f"ZQSeries(zmax={self.zmax}, qmax={self.qmax}: {_join_terms(terms)})"


class YQSeries:
    """Series in q whose q^n slice is a Laurent polynomial in y.

    ``slices[n][ypow + qmax]`` holds the coefficient of y^ypow q^n; the y
    exponent is confined to -qmax..qmax (enough for crank bookkeeping, where
    every q^n term satisfies |ypow| <= n).  The slice structure is adopted,
    not copied.
    """

    __slots__ = ("qmax", "slices")

    def __init__(self, qmax: int, slices: list[list[int]] | None = None):
        if qmax < 0:
            raise ValueError("qmax must be nonnegative")
        width = 2 * qmax + 1
        if slices is None:
            slices = [[0] * width for _ in range(qmax + 1)]
        elif len(slices) != qmax + 1 or any(len(s) != width for s in slices):
            raise ValueError("slices must be a (qmax+1) x (2*qmax+1) array")
        self.qmax = qmax
        self.slices = slices

    @classmethod
    def zero(cls, qmax: int) -> "YQSeries":
        return cls(qmax)

    @classmethod
    def one(cls, qmax: int) -> "YQSeries":
        s = cls(qmax)
        s.slices[0][qmax] = 1
        return s

    def coeff(self, ypow: int, qdeg: int) -> int:
        if not -self.qmax <= ypow <= self.qmax:
            raise IndexError(f"y-exponent {ypow} outside -{self.qmax}..{self.qmax}")
        if not 0 <= qdeg <= self.qmax:
            raise IndexError(f"q-degree {qdeg} outside 0..{self.qmax}")
        return self.slices[qdeg][ypow + self.qmax]

    def is_zero(self) -> bool:
        return not any(any(s) for s in self.slices)

    def _check(self, other: "YQSeries") -> None:
        if self.qmax != other.qmax:
            raise ValueError(
                f"truncation bounds differ: qmax {self.qmax} vs {other.qmax}"
            )

    def __add__(self, other):
        if not isinstance(other, YQSeries):
            return NotImplemented
        self._check(other)
        slices = [
            [a + b for a, b in zip(sa, sb)]
            for sa, sb in zip(self.slices, other.slices)
        ]
        return YQSeries(self.qmax, slices)

    def __sub__(self, other):
        if not isinstance(other, YQSeries):
            return NotImplemented
        self._check(other)
        slices = [
            [a - b for a, b in zip(sa, sb)]
            for sa, sb in zip(self.slices, other.slices)
        ]
        return YQSeries(self.qmax, slices)

    def __neg__(self):
        return YQSeries(self.qmax, [[-a for a in s] for s in self.slices])

    def __mul__(self, other):
        if not isinstance(other, YQSeries):
            return NotImplemented
        self._check(other)
        qmax = self.qmax
        out = [[0] * (2 * qmax + 1) for _ in range(qmax + 1)]
        a_sl = [(n, s, _nonzero(s)) for n, s in enumerate(self.slices) if any(s)]
        b_sl = [(n, s, _nonzero(s)) for n, s in enumerate(other.slices) if any(s)]
        for na, sa, ca in a_sl:
            for nb, sb, cb in b_sl:
                nq = na + nb
                if nq > qmax:
                    break
                if ca <= cb:
                    _acc_laurent(out[nq], sa, sb, qmax)
                else:
                    _acc_laurent(out[nq], sb, sa, qmax)
        return YQSeries(qmax, out)

    def __eq__(self, other):
        if not isinstance(other, YQSeries):
            return NotImplemented
        return self.qmax == other.qmax and self.slices == other.slices

    __hash__ = None

    def reciprocal(self) -> "YQSeries":
        """Multiplicative inverse within the box.

        The q^0 slice must be the constant Laurent polynomial 1 (in
        particular the constant term is exactly 1); higher slices of the
        inverse then follow from the convolution recurrence.
        """
        qmax = self.qmax
        unit = [0] * (2 * qmax + 1)
        unit[qmax] = 1
        if self.slices[0] != unit:
            raise ValueError("reciprocal requires constant term exactly 1")
        inv = [unit[:]]
        nz = [(m, s) for m, s in enumerate(self.slices) if m > 0 and any(s)]
        for n in range(1, qmax + 1):
            t = [0] * (2 * qmax + 1)
            for m, sm in nz:
                if m > n:
                    break
                _acc_laurent(t, sm, inv[n - m], qmax)
            inv.append([-v for v in t])
        return YQSeries(qmax, inv)

    def __repr__(self):
        terms = (
            (c, _mono_str(("y", e - self.qmax), ("q", n)))
            for n, sl in enumerate(self.slices)
            for e, c in enumerate(sl)
            if c
        )
        return f"YQSeries(qmax={self.qmax}: {_join_terms(terms)})"


def _acc_laurent(dst: list[int], a: list[int], b: list[int], qmax: int) -> None:
    """Laurent convolution of two y-slices, clipped to exponents |e| <= qmax."""
    width = 2 * qmax + 1
    for ia, ca in enumerate(a):
        if ca:
            base = ia - qmax
            lo = max(0, -base)
            hi = min(width, width - base)
            for ib in range(lo, hi):
                cb = b[ib]
                if cb:
                    dst[base + ib] += ca * cb


@dataclass(frozen=True)
class Box:
    """Truncation bounds selecting one of the three series rings.

    ``Box(qmax=n)`` builds QPoly values, ``Box(qmax=n, zmax=m)`` builds
    ZQSeries values, and ``Box(qmax=n, laurent_y=True)`` builds YQSeries
    values.
    """

    qmax: int
    zmax: int | None = None
    laurent_y: bool = False

    def __post_init__(self) -> None:
        if self.qmax < 0:
            raise ValueError("qmax must be nonnegative")
        if self.zmax is not None and self.zmax < 0:
            raise ValueError("zmax must be nonnegative")
        if self.zmax is not None and self.laurent_y:
            raise ValueError("z and Laurent-y bounds cannot be combined")

    def zero(self):
        if self.laurent_y:
            return YQSeries.zero(self.qmax)
        if self.zmax is not None:
            return ZQSeries.zero(self.zmax, self.qmax)
        return QPoly.zero(self.qmax)

    def one(self):
        if self.laurent_y:
            return YQSeries.one(self.qmax)
        if self.zmax is not None:
            return ZQSeries.one(self.zmax, self.qmax)
        return QPoly.one(self.qmax)

    def from_monomial(self, m: Monomial):
        """Embed a monomial, truncating to zero if it lies outside the box."""
        if self.laurent_y:
            if m.zdeg:
                raise ValueError("this box does not track z")
            s = YQSeries.zero(self.qmax)
            if m.qdeg <= self.qmax and abs(m.ypow) <= self.qmax:
                s.slices[m.qdeg][m.ypow + self.qmax] = m.coeff
            return s
        if m.ypow:
            raise ValueError("this box does not track y")
        if self.zmax is not None:
            s = ZQSeries.zero(self.zmax, self.qmax)
            if m.zdeg <= self.zmax and m.qdeg <= self.qmax:
                s.rows[m.zdeg][m.qdeg] = m.coeff
            return s
        if m.zdeg:
            raise ValueError("this box does not track z")
        return QPoly.monomial(m.coeff, m.qdeg, self.qmax)


def poch_finite(a: Monomial, n: int, box: Box):
    """Finite q-Pochhammer product (a; q)_n = prod_{j<n} (1 - a q^j).

    n = 0 is the empty product 1.  Factors whose q-degree leaves the box are
    identically 1 there and are skipped.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    one = box.one()
    s = one
    for j in range(n):
        if a.qdeg + j > box.qmax:
            break
        factor = one - box.from_monomial(
            Monomial(a.coeff, a.zdeg, a.qdeg + j, a.ypow)
        )
        s = s * factor
    return s


def poch_infinite(a: Monomial, box: Box):
    """Infinite q-Pochhammer product (a; q)_inf, exact within the box.

    The q-degree of ``a`` must be positive so that all but finitely many
    factors are 1 after truncation.
    """
    if a.qdeg < 1:
        raise ValueError("infinite product requires a positive q-degree in a")
    one = box.one()
    s = one
    j = 0
    while a.qdeg + j <= box.qmax:
        factor = one - box.from_monomial(
            Monomial(a.coeff, a.zdeg, a.qdeg + j, a.ypow)
        )
        s = s * factor
        j += 1
    return s


@lru_cache(maxsize=32)
def _gaussian_row(a_top: int, qmax: int) -> tuple[tuple[int, ...], ...]:
    """All Gaussian binomials [a_top, 0..a_top] at bound qmax, via q-Pascal.

    Row a is derived from row a-1 by [a, b] = [a-1, b-1] + q^b [a-1, b];
    no division is performed, so every coefficient is exact.
    """
    one = [1] + [0] * qmax
    prev = [one[:]]
    for a in range(1, a_top + 1):
        cur = [one[:]]
        for b in range(1, a):
            new = list(prev[b - 1])
            up = prev[b]
            for t in range(qmax - b + 1):
                v = up[t]
                if v:
                    new[t + b] += v
            cur.append(new)
        cur.append(one[:])
        prev = cur
    return tuple(tuple(r) for r in prev)


def gaussian_binomial(a_top: int, b_low: int, qmax: int) -> QPoly:
    """Gaussian binomial coefficient [a_top choose b_low]_q as a QPoly.

    Zero whenever b_low < 0 or b_low > a_top (in particular for negative
    a_top); otherwise computed by the q-Pascal recurrence and truncated at
    qmax.
    """
    if qmax < 0:
        raise ValueError("qmax must be nonnegative")
    if b_low < 0 or b_low > a_top:
        return QPoly.zero(qmax)
    return QPoly(qmax, list(_gaussian_row(a_top, qmax)[b_low]))

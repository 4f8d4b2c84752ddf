"""Exact truncated power series over the rationals.

A :class:`PowerSeries` lives in ``nvars`` variables and keeps every term of
total degree at most ``precision``.  Binary operations on series of different
precision truncate to the smaller one, so a result never claims more
accuracy than its inputs.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]


def _q(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


def _mono_add(a: tuple, b: tuple) -> tuple:
    return tuple(i + j for i, j in zip(a, b))


class PowerSeries:
    """Truncated power series with exact rational coefficients.

    Univariate series may be built from a plain coefficient sequence;
    multivariate ones take a mapping from exponent tuples to coefficients.

    >>> s = PowerSeries([1, 1], 4)
    >>> (s * PowerSeries([1, -1], 4)).coefficients()
    [Fraction(1, 1), Fraction(0, 1), Fraction(-1, 1), Fraction(0, 1), Fraction(0, 1)]
    """

    __slots__ = ("nvars", "precision", "_c", "_hash")

    def __init__(self, coeffs: Union[Sequence[Scalar], Mapping[tuple, Scalar]],
                 precision: int, nvars: int | None = None):
        if precision < 0:
            raise ValueError("precision must be non-negative")
        if isinstance(coeffs, Mapping):
            items = list(coeffs.items())
            if nvars is None:
                nvars = len(items[0][0]) if items else 1
        else:
            if nvars not in (None, 1):
                raise ValueError("coefficient sequences describe univariate series")
            nvars = 1
            items = [((k,), c) for k, c in enumerate(coeffs)]
        terms = {}
        for mono, c in items:
            mono = tuple(mono)
            if len(mono) != nvars:
                raise ValueError(f"exponent {mono} does not have {nvars} entries")
            if sum(mono) > precision:
                continue
            c = _q(c)
            if c:
                terms[mono] = terms.get(mono, 0) + c
        self.nvars = nvars
        self.precision = precision
        self._c = {m: c for m, c in terms.items() if c}
        self._hash = None

    # -- construction helpers -------------------------------------------

    @classmethod
    def _raw(cls, terms: dict, precision: int, nvars: int) -> "PowerSeries":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.precision = precision
        obj._c = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: Scalar, precision: int, nvars: int = 1) -> "PowerSeries":
        return cls({(0,) * nvars: c}, precision, nvars)

    @classmethod
    def variable(cls, index: int, precision: int, nvars: int = 1) -> "PowerSeries":
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls({mono: 1}, precision, nvars)

    # -- access ---------------------------------------------------------

    def coeff(self, *exps: int) -> Fraction:
        if len(exps) != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents")
        return self._c.get(tuple(exps), Fraction(0))

    def coefficients(self) -> list[Fraction]:
        """Dense coefficient list ``[a_0, ..., a_N]`` of a univariate series."""
        self._require_univariate()
        return [self._c.get((k,), Fraction(0)) for k in range(self.precision + 1)]

    def items(self) -> Iterable[tuple[tuple, Fraction]]:
        return sorted(self._c.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def constant_term(self) -> Fraction:
        return self._c.get((0,) * self.nvars, Fraction(0))

    def is_zero(self) -> bool:
        return not self._c

    def truncate(self, precision: int) -> "PowerSeries":
        precision = min(precision, self.precision)
        return PowerSeries._raw({m: c for m, c in self._c.items() if sum(m) <= precision},
                                precision, self.nvars)

    def _require_univariate(self):
        if self.nvars != 1:
            raise ValueError("operation defined for univariate series only")

    def _check(self, other: "PowerSeries"):
        if self.nvars != other.nvars:
            raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars} variables")

    # -- ring structure -------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            return self + PowerSeries.constant(other, self.precision, self.nvars)
        self._check(other)
        n = min(self.precision, other.precision)
        terms = {m: c for m, c in self._c.items() if sum(m) <= n}
        for m, c in other._c.items():
            if sum(m) <= n:
                v = terms.get(m, 0) + c
                if v:
                    terms[m] = v
                else:
                    terms.pop(m, None)
        return PowerSeries._raw(terms, n, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries._raw({m: -c for m, c in self._c.items()}, self.precision, self.nvars)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            c = _q(other)
            if not c:
                return PowerSeries._raw({}, self.precision, self.nvars)
            return PowerSeries._raw({m: v * c for m, v in self._c.items()},
                                    self.precision, self.nvars)
        self._check(other)
        n = min(self.precision, other.precision)
        terms: dict = {}
        for m1, c1 in self._c.items():
            d1 = sum(m1)
            if d1 > n:
                continue
            for m2, c2 in other._c.items():
                if d1 + sum(m2) > n:
                    continue
                m = _mono_add(m1, m2)
                terms[m] = terms.get(m, 0) + c1 * c2
        return PowerSeries._raw({m: c for m, c in terms.items() if c}, n, self.nvars)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return self * other.recip()
        return self * (Fraction(1) / _q(other))

    def __pow__(self, k: int):
        if k < 0:
            return self.recip() ** (-k)
        result = PowerSeries.constant(1, self.precision, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            if isinstance(other, (int, Fraction)):
                return self == PowerSeries.constant(other, self.precision, self.nvars)
            return NotImplemented
        return (self.nvars == other.nvars and self.precision == other.precision
                and self._c == other._c)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self.precision, frozenset(self._c.items())))
        return self._hash

    def equal_up_to(self, other: "PowerSeries", precision: int | None = None) -> bool:
        """Compare after truncating both sides to a common precision."""
        n = min(self.precision, other.precision)
        if precision is not None:
            n = min(n, precision)
        return self.truncate(n)._c == other.truncate(n)._c

    def __repr__(self):
        return f"PowerSeries({self.format()}, precision={self.precision})"

    def format(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = ["t"] if self.nvars == 1 else [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for mono, c in self.items():
            factors = []
            for name, e in zip(names, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mon = "*".join(factors)
            if not mon:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"{c}*{mon}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    # -- analytic operations ---------------------------------------------

    def recip(self) -> "PowerSeries":
        """Multiplicative inverse; the constant term must be nonzero."""
        a0 = self.constant_term()
        if not a0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        nil = self * (Fraction(1) / a0) - 1
        result = PowerSeries.constant(1, self.precision, self.nvars)
        term = result
        for _ in range(self.precision):
            term = term * (-nil)
            if term.is_zero():
                break
            result = result + term
        return result * (Fraction(1) / a0)

    def substitute(self, args: Sequence["PowerSeries"]) -> "PowerSeries":
        """Plug series with zero constant term into each variable.

        The arguments must share an arity ``m``; the result is an ``m``-variate
        series truncated at the smallest precision involved.
        """
        if len(args) != self.nvars:
            raise ValueError(f"need {self.nvars} arguments, got {len(args)}")
        m = args[0].nvars
        for a in args:
            if a.nvars != m:
                raise ValueError("substituted series must share their arity")
            if a.constant_term():
                raise ValueError("substituted series must have zero constant term")
        n = min([self.precision] + [a.precision for a in args])
        powers = []
        for a in args:
            a = a.truncate(n)
            row = [PowerSeries.constant(1, n, m)]
            top = max((mono[len(powers)] for mono in self._c), default=0)
            for _ in range(min(top, n)):
                row.append(row[-1] * a)
            powers.append(row)
        result = PowerSeries._raw({}, n, m)
        for mono, c in self._c.items():
            if sum(mono) > n:
                continue
            term = PowerSeries.constant(c, n, m)
            for i, e in enumerate(mono):
                if e:
                    term = term * powers[i][e]
            result = result + term
        return result

    def __call__(self, *args: "PowerSeries") -> "PowerSeries":
        return self.substitute(args)

    def shift_down(self, k: int = 1) -> "PowerSeries":
        """Divide a univariate series by ``t**k``; low terms must vanish."""
        self._require_univariate()
        if any(m[0] < k for m in self._c):
            raise ValueError(f"series is not divisible by t^{k}")
        return PowerSeries._raw({(m[0] - k,): c for m, c in self._c.items()},
                                self.precision - k, 1)

    def derivative(self) -> "PowerSeries":
        self._require_univariate()
        return PowerSeries._raw({(m[0] - 1,): c * m[0] for m, c in self._c.items() if m[0]},
                                max(self.precision - 1, 0), 1)

    def revert(self) -> "PowerSeries":
        """Compositional inverse ``r`` with ``self(r(t)) = t``.

        Needs ``self(0) = 0`` and an invertible linear coefficient.
        """
        return _revert(self)


@lru_cache(maxsize=256)
def _revert(s: PowerSeries) -> PowerSeries:
    s._require_univariate()
    if s.constant_term():
        raise ValueError("reversion needs zero constant term")
    a1 = s.coeff(1)
    if not a1:
        raise ValueError("reversion needs a nonzero linear coefficient")
    n = s.precision
    r = PowerSeries({(1,): Fraction(1) / a1}, n, 1)
    for k in range(2, n + 1):
        err = ps_compose(s, r).coeff(k)
        if err:
            r = r - PowerSeries({(k,): err / a1}, n, 1)
    return r


# -- module-level operations ---------------------------------------------

def ps_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    return a + b


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    return a * b


def ps_recip(a: PowerSeries) -> PowerSeries:
    return a.recip()


def ps_compose(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """``a(b(t))`` for univariate series; ``b`` must have zero constant term."""
    a._require_univariate()
    b._require_univariate()
    if b.constant_term():
        raise ValueError("inner series must have zero constant term")
    n = min(a.precision, b.precision)
    b = b.truncate(n)
    coeffs = a.coefficients()[: n + 1]
    result = PowerSeries.constant(coeffs[-1], n)
    for c in reversed(coeffs[:-1]):
        result = result * b + c
    return result


def exp_series(n: int) -> PowerSeries:
    """``exp(t)`` through ``t**n``."""
    return PowerSeries([Fraction(1, factorial(k)) for k in range(n + 1)], n)


def log1p_series(n: int) -> PowerSeries:
    """``log(1 + t)`` through ``t**n``."""
    return PowerSeries([0] + [Fraction((-1) ** (k + 1), k) for k in range(1, n + 1)], n)


def ps_exp(a: PowerSeries) -> PowerSeries:
    """``exp(a)`` for a series with zero constant term (any arity)."""
    if a.constant_term():
        raise ValueError("exp needs zero constant term")
    result = PowerSeries.constant(1, a.precision, a.nvars)
    term = result
    for k in range(1, a.precision + 1):
        term = term * a * Fraction(1, k)
        result = result + term
    return result


def ps_log(a: PowerSeries) -> PowerSeries:
    """``log(a)`` for a series with constant term 1 (any arity)."""
    if a.constant_term() != 1:
        raise ValueError("log needs constant term 1")
    u = a - 1
    result = PowerSeries._raw({}, a.precision, a.nvars)
    term = PowerSeries.constant(1, a.precision, a.nvars)
    for k in range(1, a.precision + 1):
        term = term * u
        result = result + term * Fraction((-1) ** (k + 1), k)
    return result


def todd_series(n: int) -> PowerSeries:
    """``t / (1 - exp(-t))`` through ``t**n``."""
    if n < 0:
        raise ValueError("precision must be non-negative")
    one_minus = 1 - ps_compose(exp_series(n + 1), PowerSeries([0, -1], n + 1))
    return one_minus.shift_down(1).recip()

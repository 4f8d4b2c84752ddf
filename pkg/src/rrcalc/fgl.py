"""Formal group laws of first Chern classes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .series import PowerSeries


@dataclass(frozen=True)
class FormalGroupLaw:
    """Bivariate series ``F`` with ``c1(L1 (x) L2) = F(c1 L1, c1 L2)``.

    Axioms are not enforced at construction; see :func:`fgl_validate`.
    """

    series: PowerSeries
    name: str = ""

    def __post_init__(self):
        if self.series.nvars != 2:
            raise ValueError("a formal group law is a series in two variables")

    @property
    def precision(self) -> int:
        return self.series.precision

    def __call__(self, a, b):
        """Evaluate on two nilpotent arguments (series or ring elements)."""
        if isinstance(a, PowerSeries) and isinstance(b, PowerSeries):
            return self.series.substitute([a, b])
        return evaluate2(self.series, a, b)


def evaluate2(series: PowerSeries, a, b):
    """``sum F_ij a^i b^j`` for ring-like ``a`` and ``b`` sharing a ring."""
    top_i = max((m[0] for m, _ in series.items()), default=0)
    top_j = max((m[1] for m, _ in series.items()), default=0)
    pa = [a ** 0]
    for _ in range(top_i):
        pa.append(pa[-1] * a)
    pb = [b ** 0]
    for _ in range(top_j):
        pb.append(pb[-1] * b)
    total = a * 0
    for (i, j), c in series.items():
        total = total + pa[i] * pb[j] * c
    return total


def fgl_additive(n: int = 12) -> FormalGroupLaw:
    if n < 1:
        raise ValueError("precision must be at least 1")
    return FormalGroupLaw(PowerSeries({(1, 0): 1, (0, 1): 1}, n), "additive")


def fgl_multiplicative(n: int = 12) -> FormalGroupLaw:
    """``F(u, v) = u + v - uv``, the law of ``c1(L) = 1 - [L^*]``."""
    if n < 2:
        raise ValueError("precision must be at least 2")
    return FormalGroupLaw(PowerSeries({(1, 0): 1, (0, 1): 1, (1, 1): -1}, n), "multiplicative")


@dataclass(frozen=True)
class ValidationReport:
    unit: bool
    symmetry: bool
    associativity: bool
    precision: int

    @property
    def ok(self) -> bool:
        return self.unit and self.symmetry and self.associativity


def fgl_validate(F: FormalGroupLaw) -> ValidationReport:
    s = F.series
    n = s.precision
    unit = all(
        s.coeff(i, 0) == (1 if i == 1 else 0) and s.coeff(0, i) == (1 if i == 1 else 0)
        for i in range(n + 1)
    )
    symmetry = all(c == s.coeff(m[1], m[0]) for m, c in s.items())
    x, y, z = (PowerSeries.variable(i, n, 3) for i in range(3))
    left = s.substitute([s.substitute([x, y]), z])
    right = s.substitute([x, s.substitute([y, z])])
    return ValidationReport(unit, symmetry, left == right, n)


def fgl_f_part(F: FormalGroupLaw) -> PowerSeries:
    """The series ``f`` with ``F = x + y + xy f(x, y)``, at precision ``N - 2``."""
    s = F.series - PowerSeries({(1, 0): 1, (0, 1): 1}, F.precision)
    terms = {}
    for (i, j), c in s.items():
        if i == 0 or j == 0:
            raise ValueError(f"F - x - y has term x^{i} y^{j} not divisible by xy")
        terms[(i - 1, j - 1)] = c
    return PowerSeries(terms, max(F.precision - 2, 0), 2)


@lru_cache(maxsize=None)
def fgl_inverse(F: FormalGroupLaw) -> PowerSeries:
    """Formal inverse ``mu`` with ``F(t, mu(t)) = 0``, solved degree by degree."""
    n = F.precision
    t = PowerSeries.variable(0, n)
    mu = -t
    for k in range(2, n + 1):
        err = F.series.substitute([t, mu]).coeff(k)
        if err:
            # dF/dy(0, 0) = 1, so the t^k error is cancelled by the t^k term of mu
            mu = mu - PowerSeries({(k,): err}, n)
    return mu


@lru_cache(maxsize=None)
def fgl_n_series(F: FormalGroupLaw, d: int) -> PowerSeries:
    """``[d]_F(t)``: the d-fold formal sum of ``t``; negative ``d`` via the inverse."""
    n = F.precision
    t = PowerSeries.variable(0, n)
    if d < 0:
        return fgl_inverse(F).substitute([fgl_n_series(F, -d)])
    acc = PowerSeries({}, n, 1)
    for _ in range(d):
        acc = F.series.substitute([acc, t])
    return acc


def fgl_conjugate(F: FormalGroupLaw, s: PowerSeries, name: str = "") -> FormalGroupLaw:
    """Law of the orientation ``c1_new = s(c1)``: ``s(F(r(u), r(v)))`` with ``r = s^-1``."""
    r = s.revert()
    u = PowerSeries.variable(0, F.precision, 2)
    v = PowerSeries.variable(1, F.precision, 2)
    ru, rv = r.substitute([u]), r.substitute([v])
    new = s.substitute([F.series.substitute([ru, rv])])
    return FormalGroupLaw(new, name or f"{F.name}-conjugate")


def _check_unit_series(g: PowerSeries):
    if g.constant_term() != 1:
        raise ValueError("orientation change series must have constant term 1")


def orientation_series(G: PowerSeries) -> PowerSeries:
    """``s(t) = t G(t)`` for a unit series ``G`` with ``G(0) = 1``."""
    _check_unit_series(G)
    return PowerSeries({(k + 1,): c for (k,), c in G.items()}, G.precision + 1)


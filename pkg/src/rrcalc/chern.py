"""Bundles and characteristic classes via the splitting principle.

Chern roots are never materialised.  Every root-wise operation goes through
power sums: ``p_k = sum_j x_j^k`` is obtained from the Chern classes with
Newton's identities, transformed, and converted back.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .fgl import FormalGroupLaw, fgl_inverse
from .ring import RingElement, RingTower
from .series import PowerSeries, exp_series, ps_log, todd_series


# -- symmetric functions -------------------------------------------------------

def newton_e_to_p(e: Sequence, k: int) -> list:
    """Power sums ``p_1..p_k`` from elementary symmetric functions ``e_1, e_2, ...``.

    Works over any commutative ring whose elements support ``+`` and ``*``
    with integers; ``e_i`` beyond the given list are zero.

    >>> newton_e_to_p([5, 6], 2)
    [5, 13]
    """
    def ei(i):
        return e[i - 1] if i <= len(e) else 0

    p: list = []
    for m in range(1, k + 1):
        s = ei(m) * ((-1) ** (m - 1) * m)
        for i in range(1, m):
            s = s + ei(i) * p[m - i - 1] * (-1) ** (i - 1)
        p.append(s)
    return p


def newton_p_to_e(p: Sequence, k: int) -> list:
    """Elementary symmetric functions ``e_1..e_k`` from power sums ``p_1..p_k``."""
    if len(p) < k:
        raise ValueError(f"need {k} power sums, got {len(p)}")
    e: list = []
    for m in range(1, k + 1):
        s = p[m - 1] * (-1) ** (m - 1)
        for i in range(1, m):
            s = s + e[m - i - 1] * p[i - 1] * (-1) ** (i - 1)
        e.append(s * Fraction(1, m))
    return e


# -- bundles -------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Bundle:
    """Vector bundle of rank ``rank`` known through ``chern = (c_1, ..., c_rank)``."""

    rank: int
    chern: tuple
    ring: RingTower

    def __post_init__(self):
        if len(self.chern) != self.rank:
            raise ValueError(f"rank {self.rank} bundle needs {self.rank} Chern classes")
        object.__setattr__(self, "chern", tuple(self.ring.coerce(c) for c in self.chern))

    def c(self, i: int) -> RingElement:
        if i == 0:
            return self.ring.one()
        if 0 < i <= self.rank:
            return self.chern[i - 1]
        return self.ring.zero()

    def total(self) -> list[RingElement]:
        return [self.c(i) for i in range(self.rank + 1)]

    def top(self) -> RingElement:
        return self.c(self.rank)

    def power_sums(self, k: int | None = None) -> list[RingElement]:
        """``[p_0, p_1, ..., p_k]`` with ``p_0 = rank``; ``k`` defaults to the top weight."""
        k = self.ring.top_weight if k is None else k
        ps = [self.ring.coerce(p) for p in newton_e_to_p(list(self.chern), k)]
        return [self.ring.element(self.rank)] + ps

    def as_virtual(self) -> "VirtualBundle":
        return VirtualBundle(self, trivial_bundle(self.ring, 0))

    def __eq__(self, other):
        return (isinstance(other, Bundle) and self.ring == other.ring
                and self.rank == other.rank and self.chern == other.chern)

    def __hash__(self):
        return hash((self.ring, self.rank, self.chern))

    def __repr__(self):
        cs = ", ".join(c.format() for c in self.chern)
        return f"Bundle(rank={self.rank}, c=[{cs}])"


@dataclass(frozen=True)
class VirtualBundle:
    """Formal difference ``positive - negative`` in ``K_0``."""

    positive: Bundle
    negative: Bundle

    def __post_init__(self):
        if self.positive.ring != self.negative.ring:
            raise ValueError("virtual bundle parts must share a ring")

    @property
    def ring(self) -> RingTower:
        return self.positive.ring

    @property
    def virtual_rank(self) -> int:
        return self.positive.rank - self.negative.rank

    def power_sums(self, k: int | None = None) -> list[RingElement]:
        a = self.positive.power_sums(k)
        b = self.negative.power_sums(k)
        return [x - y for x, y in zip(a, b)]

    def chern_classes(self) -> list[RingElement]:
        """``[c_0, ..., c_N]`` of ``c(positive) / c(negative)``, ``N`` the top weight."""
        n = self.ring.top_weight
        inv = [self.ring.one()]
        for k in range(1, n + 1):
            s = self.ring.zero()
            for i in range(1, k + 1):
                s = s + self.negative.c(i) * inv[k - i]
            inv.append(-s)
        out = []
        for k in range(n + 1):
            s = self.ring.zero()
            for i in range(k + 1):
                s = s + self.positive.c(i) * inv[k - i]
            out.append(s)
        return out

    def c(self, i: int) -> RingElement:
        cs = self.chern_classes()
        return cs[i] if i < len(cs) else self.ring.zero()

    def __add__(self, other):
        other = as_virtual(other)
        return VirtualBundle(whitney_sum(self.positive, other.positive),
                             whitney_sum(self.negative, other.negative))

    def __sub__(self, other):
        other = as_virtual(other)
        return VirtualBundle(whitney_sum(self.positive, other.negative),
                             whitney_sum(self.negative, other.positive))

    def __neg__(self):
        return VirtualBundle(self.negative, self.positive)


def as_virtual(V) -> VirtualBundle:
    return V if isinstance(V, VirtualBundle) else V.as_virtual()


def trivial_bundle(ring: RingTower, rank: int) -> Bundle:
    return Bundle(rank, tuple(ring.zero() for _ in range(rank)), ring)


def line_bundle(ring: RingTower, c1) -> Bundle:
    return Bundle(1, (ring.coerce(c1),), ring)


def whitney_sum(V1: Bundle, V2: Bundle) -> Bundle:
    """``c_k(V1 + V2) = sum_{i+j=k} c_i(V1) c_j(V2)``."""
    if V1.ring != V2.ring:
        raise ValueError("Whitney sum of bundles over different rings")
    r = V1.rank + V2.rank
    cs = []
    for k in range(1, r + 1):
        s = V1.ring.zero()
        for i in range(max(0, k - V2.rank), min(k, V1.rank) + 1):
            s = s + V1.c(i) * V2.c(k - i)
        cs.append(s)
    return Bundle(r, tuple(cs), V1.ring)


def direct_sum(bundles: Sequence[Bundle], ring: RingTower | None = None) -> Bundle:
    if not bundles:
        if ring is None:
            raise ValueError("empty direct sum needs a ring")
        return trivial_bundle(ring, 0)
    out = bundles[0]
    for b in bundles[1:]:
        out = whitney_sum(out, b)
    return out


def map_bundle(phi, V):
    """Push Chern data along a ring map (a pullback ``f^*`` on bundles)."""
    if isinstance(V, VirtualBundle):
        return VirtualBundle(map_bundle(phi, V.positive), map_bundle(phi, V.negative))
    return Bundle(V.rank, tuple(phi.apply(c) for c in V.chern), phi.target)


# -- root-wise transformations ---------------------------------------------------

def apply_rootwise(V: Bundle, g: Sequence) -> Bundle:
    """Bundle whose Chern roots are ``g(x_j)`` for the roots ``x_j`` of ``V``.

    ``g`` is a coefficient list ``[g_0, g_1, ...]`` with entries in the ring
    (or rationals).  Power sums transform as
    ``p_k(new) = sum_m [t^m](g^k) p_m(old)``, which is exact because
    ``p_m`` vanishes above the top weight.
    """
    ring = V.ring
    n = ring.top_weight
    g = [ring.coerce(c) for c in list(g)[: n + 1]]
    g += [ring.zero()] * (n + 1 - len(g))
    old = V.power_sums(n)
    gk = [ring.one()] + [ring.zero()] * n
    new_p = []
    for _ in range(V.rank):
        gk = _poly_mul_trunc(gk, g, n)
        s = ring.zero()
        for m in range(n + 1):
            if not gk[m].is_zero():
                s = s + gk[m] * old[m]
        new_p.append(s)
    es = newton_p_to_e(new_p, V.rank)
    return Bundle(V.rank, tuple(ring.coerce(e) for e in es), ring)


def _poly_mul_trunc(a: list, b: list, n: int) -> list:
    out = [a[0] * 0 for _ in range(n + 1)]
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j in range(n + 1 - i):
            if not b[j].is_zero():
                out[i + j] = out[i + j] + x * b[j]
    return out


def bundle_dual(F: FormalGroupLaw, V: Bundle) -> Bundle:
    """``V^*``: roots ``mu(x_j)`` for the formal inverse ``mu`` of ``F``."""
    V.ring.require_precision(F.precision, "formal group law")
    return apply_rootwise(V, fgl_inverse(F).coefficients())


def bundle_tensor_line(F: FormalGroupLaw, V: Bundle, c1L) -> Bundle:
    """``V (x) L``: roots ``F(x_j, c1(L))``."""
    ring = V.ring
    ring.require_precision(F.precision, "formal group law")
    ell = ring.coerce(c1L)
    if ring.graded and not ell.is_homogeneous(1):
        raise ValueError("first Chern class of a line bundle must have weight 1")
    n = ring.top_weight
    powers = [ring.one()]
    for _ in range(n):
        powers.append(powers[-1] * ell)
    g = [ring.zero() for _ in range(n + 1)]
    for (i, j), c in F.series.items():
        if i <= n and j <= n:
            g[i] = g[i] + powers[j] * c
    return apply_rootwise(V, g)


# -- multiplicative extensions ---------------------------------------------------

def _ring_exp(ring: RingTower, a: RingElement) -> RingElement:
    return ring.eval_series(exp_series(max(ring.top_weight, 0)), a)


def mult_extension(F: PowerSeries, V) -> RingElement:
    """``F_x(V) = prod_j F(x_j)`` for a unit series ``F``.

    Computed as ``F(0)^rank * exp(sum_k l_k p_k)`` with
    ``log(F / F(0)) = sum_k l_k t^k``.  Virtual bundles ``A - B`` give
    ``F_x(A) * F_x(B)^-1``.
    """
    f0 = F.constant_term()
    if not f0:
        raise ValueError("multiplicative extension needs a unit series (F(0) != 0)")
    if isinstance(V, VirtualBundle):
        return mult_extension(F, V.positive) * mult_extension(F, V.negative).inverse()
    ring = V.ring
    ring.require_precision(F.precision, "multiplicative series")
    n = ring.top_weight
    logs = ps_log(F * (Fraction(1) / f0)).coefficients()
    ps = V.power_sums(n)
    s = ring.zero()
    for k in range(1, n + 1):
        if logs[k]:
            s = s + ps[k] * logs[k]
    return _ring_exp(ring, s) * (f0 ** V.rank)


def todd_class(V, precision: int | None = None) -> RingElement:
    n = V.ring.top_weight if precision is None else precision
    return mult_extension(todd_series(n), V)


def chern_character(V) -> RingElement:
    """``rank + sum_k p_k / k!`` for a bundle in an additive-theory ring."""
    ring = V.ring
    if isinstance(V, VirtualBundle):
        rank = V.virtual_rank
    else:
        rank = V.rank
    ps = V.power_sums(ring.top_weight)
    out = ring.element(rank)
    for k in range(1, len(ps)):
        out = out + ps[k] * Fraction(1, factorial(k))
    return out


def total_chern(V) -> RingElement:
    if isinstance(V, VirtualBundle):
        cs = V.chern_classes()
    else:
        cs = V.total()
    out = V.ring.zero()
    for c in cs:
        out = out + c
    return out


def chern_class(V, k: int) -> RingElement:
    return V.c(k)

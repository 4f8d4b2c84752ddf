"""Oriented theories, fundamental classes and Gysin pushforwards.

Spaces are towers of split projective bundles over the point, realised in
any theory from their twist data.  Pushforwards along projective lci maps
``Y -> P^n_X -> X`` are ``p_* i_*``: ``i_*`` multiplies a lift by the
fundamental class of the embedding, and ``p_*`` is the functional on
``E(P^n)`` fixed by the polarity of the diagonal class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .chern import (
    Bundle,
    VirtualBundle,
    apply_rootwise,
    as_virtual,
    bundle_tensor_line,
    direct_sum,
    line_bundle,
    map_bundle,
    mult_extension,
    trivial_bundle,
)
from .fgl import (
    FormalGroupLaw,
    fgl_additive,
    fgl_conjugate,
    fgl_inverse,
    fgl_multiplicative,
    fgl_n_series,
    fgl_validate,
)
from .ring import RingElement, RingMap, RingTower, identity_map, ring_extend_proj, ring_point, solve_linear
from .series import PowerSeries

DEFAULT_PRECISION = 12


# -- theories --------------------------------------------------------------------

@dataclass(frozen=True)
class Theory:
    """An oriented theory over ``Q``, determined here by its formal group law.

    ``line_class`` optionally expresses the K-theory class ``[L]`` of a line
    bundle as a series in ``c1(L)``; it exists only for K-type theories.
    """

    name: str
    fgl: FormalGroupLaw
    graded: bool = True
    line_class: Optional[PowerSeries] = None

    @property
    def precision(self) -> int:
        return self.fgl.precision

    def validate(self):
        report = fgl_validate(self.fgl)
        if not report.ok:
            raise ValueError(f"theory {self.name}: formal group law fails {report}")
        return report


@lru_cache(maxsize=None)
def additive_theory(precision: int = DEFAULT_PRECISION, name: str = "additive") -> Theory:
    return Theory(name, fgl_additive(precision), graded=True)


@lru_cache(maxsize=None)
def k_theory(precision: int = DEFAULT_PRECISION) -> Theory:
    """``KH_Q`` with ``c1(L) = 1 - [L^*]``, modelled without Tate twists."""
    n = precision
    # [L] = 1 / (1 - c1(L))
    cls = PowerSeries([1] * (n + 1), n)
    return Theory("K", fgl_multiplicative(n), graded=False, line_class=cls)


FLIP_SERIES_NAME = "t/(1-t)"


def flip_series(precision: int) -> PowerSeries:
    """``t / (1 - t)``: the flipped K orientation ``[L] - 1`` in terms of ``1 - [L^*]``."""
    return PowerSeries([0] + [1] * precision, precision)


@lru_cache(maxsize=None)
def k_flip_theory(precision: int = DEFAULT_PRECISION) -> Theory:
    """K-theory oriented by ``c1(L) = [L] - 1``; law ``u + v + uv``."""
    n = precision
    law = fgl_conjugate(fgl_multiplicative(n), flip_series(n), name="multiplicative-flip")
    return Theory("K-flip", law, graded=False, line_class=PowerSeries([1, 1], n))


THEORY_BUILDERS = {
    "additive": additive_theory,
    "K": k_theory,
    "K-flip": k_flip_theory,
}


def get_theory(name: str, precision: int = DEFAULT_PRECISION) -> Theory:
    try:
        return THEORY_BUILDERS[name](precision)
    except KeyError:
        raise ValueError(f"unknown theory {name!r}; choose from {sorted(THEORY_BUILDERS)}") from None


# -- spaces ------------------------------------------------------------------------

@dataclass(frozen=True)
class Space:
    """Point, or ``P(V)`` for a split bundle ``V`` over a smaller space.

    ``summands`` lists the line bundles of ``V`` as twist vectors
    ``(d_1, ..., d_k)`` meaning ``O_1(d_1) (x) ... (x) O_k(d_k)`` over the
    ``k`` generators of the base.
    """

    base: Optional["Space"] = None
    summands: tuple = ()
    gen: str = ""
    label: str = "pt"

    @property
    def fiber_dim(self) -> int:
        return len(self.summands) - 1 if self.base is not None else 0

    @property
    def ngens(self) -> int:
        return 0 if self.base is None else self.base.ngens + 1

    @property
    def dim(self) -> int:
        return 0 if self.base is None else self.base.dim + self.fiber_dim

    def ring(self, theory: Theory) -> RingTower:
        return _space_ring(self, theory)

    def __str__(self):
        return self.label


POINT = Space()


def proj_bundle(base: Space, summands, gen: str, label: str | None = None) -> Space:
    k = base.ngens
    summands = tuple(tuple(s) for s in summands)
    for s in summands:
        if len(s) != k:
            raise ValueError(f"twist {s} needs {k} entries over {base}")
    if not summands:
        raise ValueError("projective bundle of the zero bundle")
    if label is None:
        label = f"P({'+'.join('O' + str(s) for s in summands)}) over {base}"
    return Space(base, summands, gen, label)


@lru_cache(maxsize=None)
def projective_space(n: int, gen: str = "x") -> Space:
    if n < 0:
        raise ValueError("dimension must be non-negative")
    return proj_bundle(POINT, [()] * (n + 1), gen, f"P{n}")


@lru_cache(maxsize=None)
def product_space(n: int, m: int, gens: tuple = ("x1", "x2")) -> Space:
    """``P^n x P^m`` as the trivial ``P^m`` bundle over ``P^n``."""
    base = projective_space(n, gens[0])
    return proj_bundle(base, [(0,)] * (m + 1), gens[1], f"P{n}xP{m}")


_RING_SPACES: dict = {}


@lru_cache(maxsize=None)
def _space_ring(space: Space, theory: Theory) -> RingTower:
    if space.base is None:
        R = ring_point(theory)
    else:
        B = _space_ring(space.base, theory)
        V = direct_sum([line_bundle(B, line_c1(B, s)) for s in space.summands])
        R = ring_extend_proj(B, V, space.gen)
    _RING_SPACES.setdefault(R, space)
    return R


def space_of(ring: RingTower) -> Space:
    """The space a ring was realised from (the ring must come from :meth:`Space.ring`)."""
    try:
        return _RING_SPACES[ring]
    except KeyError:
        raise ValueError(f"{ring!r} was not built from a catalogued space") from None


def space_bundle(space: Space, summands, theory: Theory) -> Bundle:
    R = space.ring(theory)
    return direct_sum([line_bundle(R, line_c1(R, s)) for s in summands], R)


def n_series_value(ring: RingTower, d: int, a: RingElement) -> RingElement:
    return ring.eval_series(fgl_n_series(ring.theory.fgl, d), a)


def line_c1(ring: RingTower, twists) -> RingElement:
    """``c1(O_1(d_1) (x) ... (x) O_k(d_k))`` with ``O_i(-1)`` tautological at stage ``i``.

    Short twist vectors are padded with zeros (pullback from a lower stage).
    """
    twists = tuple(twists) + (0,) * (ring.ngens - len(twists))
    if len(twists) != ring.ngens:
        raise ValueError("too many twists for this ring")
    F = ring.theory.fgl
    total = ring.zero()
    for i, d in enumerate(twists):
        if d:
            # O(d) = O(-1)^(-d)
            total = F(total, n_series_value(ring, -d, ring.gen(i)))
    return total


def k_class(ring: RingTower, twists) -> RingElement:
    """K-theory class ``[L]`` of a line bundle, for theories with a ``line_class``."""
    theory = ring.theory
    if theory.line_class is None:
        raise ValueError(f"theory {theory.name} has no K-theory line classes")
    return ring.eval_series(theory.line_class, line_c1(ring, twists))


def orientation_class(theory: Theory, ring: RingTower, generator) -> RingElement:
    """The tower generator ``x = c1(O(-1))``."""
    if ring.theory != theory:
        raise ValueError("ring belongs to another theory")
    return ring.gen(generator)


def quotient_bundle(ring: RingTower, generator=-1) -> Bundle:
    """``Q = V / O(-1)`` on a trivial-bundle stage: ``c(Q) = 1 / (1 + x)``."""
    idx = generator if isinstance(generator, int) else ring.names.index(generator)
    if idx < 0:
        idx += ring.ngens
    n = ring.fiber_dims[idx]
    x = ring.gen(idx)
    return Bundle(n, tuple((-x) ** i for i in range(1, n + 1)), ring)


def quotient_bundle_pn(n: int, theory: Theory) -> Bundle:
    if n < 1:
        raise ValueError("n must be at least 1")
    return quotient_bundle(projective_space(n).ring(theory))


# -- diagonal and projections ----------------------------------------------------------

@lru_cache(maxsize=None)
def diagonal_class(n: int, theory: Theory) -> RingElement:
    """``eta_Delta`` in ``E(P^n x P^n)`` as ``c_n(p1^* O(1) (x) p2^* Q)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    R = product_space(n, n).ring(theory)
    R.require_precision(theory.precision, "formal group law")
    Q = quotient_bundle(R, 1)
    o1 = line_c1(R, (1, 0))
    return bundle_tensor_line(theory.fgl, Q, o1).top()


def diagonal_matrix(n: int, theory: Theory) -> list[list[Fraction]]:
    """``a[r][s]``: coefficient of ``x1^r x2^s`` in the diagonal class."""
    eta = diagonal_class(n, theory)
    return [[eta.coefficient((r, s)) for s in range(n + 1)] for r in range(n + 1)]


@dataclass(frozen=True)
class Projection:
    """``p_*`` for ``P^n_X -> X``; ``functional[k] = p_*(x^k)`` over the point.

    Over a base ``X`` the pushforward is ``p_* (x) 1_X``.
    """

    n: int
    theory: Theory
    functional: tuple

    def apply(self, a: RingElement) -> RingElement:
        ring = a.ring
        if ring.ngens == 0 or ring.fiber_dims[-1] != self.n:
            raise ValueError(f"{ring!r} is not a P^{self.n} bundle")
        if ring.theory != self.theory:
            raise ValueError("element belongs to another theory")
        base = ring.parent
        out: dict = {}
        for mono, c in a.terms.items():
            w = self.functional[mono[-1]]
            if w:
                out[mono[:-1]] = out.get(mono[:-1], 0) + c * w
        return base.element(out)

    __call__ = apply


@lru_cache(maxsize=None)
def projection_pushforward(n: int, theory: Theory) -> Projection:
    """Solve ``sum_r a[r][s] w_r = delta(s, 0)``, i.e. ``Phi(p_*) = 1``."""
    if n == 0:
        return Projection(0, theory, (Fraction(1),))
    a = diagonal_matrix(n, theory)
    rows = [[a[r][s] for r in range(n + 1)] for s in range(n + 1)]
    rhs = [Fraction(1 if s == 0 else 0) for s in range(n + 1)]
    sol = solve_linear(rows, rhs)
    if sol is None or _rank(rows) < n + 1:
        raise ArithmeticError(f"polarity matrix of P^{n} in {theory.name} is singular")
    proj = Projection(n, theory, tuple(sol))
    if polarity(proj) != 1:
        raise ArithmeticError("projection functional fails the polarity check")
    return proj


def polarity(proj: Projection) -> RingElement:
    """``Phi(w) = (w (x) 1)(eta_Delta)`` as an element of ``E(P^n)``."""
    n = proj.n
    R = projective_space(n).ring(proj.theory)
    if n == 0:
        return R.element(proj.functional[0])
    a = diagonal_matrix(n, proj.theory)
    x = R.gen(0)
    out = R.zero()
    for s in range(n + 1):
        coeff = sum((a[r][s] * proj.functional[r] for r in range(n + 1)), Fraction(0))
        out = out + x ** s * coeff
    return out


def _rank(rows) -> int:
    m = [list(r) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(rank + 1, len(m)):
            f = m[i][c] / m[rank][c]
            m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


# -- embeddings --------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class RegEmbedding:
    """Regular embedding ``i: Z -> X`` with support forgotten.

    ``pullback`` is ``i^*: E(X) -> E(Z)`` when ``Z`` is modelled; for a
    virtual source only classes ``i^*(b)`` exist and are handled through
    their lifts ``b``.  ``normal`` lives on ``Z`` (or on ``X`` for virtual
    sources, as the bundle whose restriction is the normal bundle).
    """

    name: str
    codim: int
    target: RingTower
    eta: RingElement
    normal: object
    pullback: Optional[RingMap] = None
    source_space: Optional[Space] = None
    target_space: Optional[Space] = None

    def __post_init__(self):
        if self.eta.ring != self.target:
            raise ValueError("fundamental class must live in the target ring")
        if self.target.graded and not self.eta.is_homogeneous(self.codim):
            raise ValueError(f"fundamental class of {self.name} is not of weight {self.codim}")

    @property
    def source(self) -> Optional[RingTower]:
        return self.pullback.target if self.pullback is not None else None

    @property
    def virtual_source(self) -> bool:
        return self.pullback is None

    def lift(self, a: RingElement) -> RingElement:
        """A class ``b`` on the target with ``i^*(b) = a`` (identity on lifts)."""
        if a.ring == self.target:
            return a
        if self.pullback is None or a.ring != self.pullback.target:
            raise ValueError(f"{a.ring!r} is neither the source nor the target of {self.name}")
        return self.pullback.preimage(a)

    def restrict(self, b: RingElement) -> RingElement:
        if self.pullback is None:
            raise ValueError(f"{self.name} has a virtual source")
        return self.pullback.apply(b)


def pushforward_embedding(i: RegEmbedding, b: RingElement) -> RingElement:
    """``i_*(i^* b) = b * eta``; a source class is lifted through ``i^*`` first."""
    return i.lift(b) * i.eta


def self_intersection(i: RegEmbedding) -> tuple[RingElement, RingElement]:
    """``(i^* i_* 1, c_codim(N))``, on lifts when the source is virtual."""
    pushed = pushforward_embedding(i, i.target.one())
    N = i.normal
    if i.virtual_source:
        return pushed, N.c(i.codim)
    return i.restrict(pushed), N.c(i.codim)


def identity_embedding(space: Space, theory: Theory) -> RegEmbedding:
    R = space.ring(theory)
    return RegEmbedding(f"id:{space}", 0, R, R.one(), trivial_bundle(R, 0),
                        identity_map(R), space, space)


def embed_hypersurface(n: int, d: int, theory: Theory) -> RegEmbedding:
    """Degree ``d`` hypersurface ``H`` in ``P^n``; ``eta = c1(O(d))``."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    space = projective_space(n)
    R = space.ring(theory)
    eta = line_c1(R, (d,))
    return RegEmbedding(f"H{d}<P{n}", 1, R, eta, line_bundle(R, eta), None, None, space)


def embed_linear(m: int, n: int, theory: Theory) -> RegEmbedding:
    """``P^m`` in ``P^n`` as a linear subspace; ``eta = c1(O(1))^(n-m)``."""
    if not 0 <= m < n:
        raise ValueError("need 0 <= m < n")
    src, tgt = projective_space(m), projective_space(n)
    S, T = src.ring(theory), tgt.ring(theory)
    pull = RingMap(T, S, [S.gen(0)] if m > 0 else [S.zero()])
    eta = line_c1(T, (1,)) ** (n - m)
    normal = direct_sum([line_bundle(S, line_c1(S, (1,)) if m > 0 else S.zero())] * (n - m))
    return RegEmbedding(f"P{m}<P{n}", n - m, T, eta, normal, pull, src, tgt)


def embed_conic(theory: Theory) -> RegEmbedding:
    """Plane conic: ``P^1 -> P^2`` by ``O(2)``, so ``x -> [2](x)``."""
    src, tgt = projective_space(1), projective_space(2)
    S, T = src.ring(theory), tgt.ring(theory)
    pull = RingMap(T, S, [n_series_value(S, 2, S.gen(0))])
    eta = line_c1(T, (2,))
    normal = line_bundle(S, line_c1(S, (4,)))
    return RegEmbedding("conic<P2", 1, T, eta, normal, pull, src, tgt)


def embed_section(k: int, n: int, theory: Theory) -> RegEmbedding:
    """Constant section ``P^k -> P^k x P^n`` through a point of the fiber."""
    src = projective_space(k, "x1")
    tgt = product_space(k, n)
    S, T = src.ring(theory), tgt.ring(theory)
    images = [S.gen(0) if k > 0 else S.zero(), S.zero()]
    pull = RingMap(T, S, images)
    eta = line_c1(T, (0, 1)) ** n
    normal = direct_sum([line_bundle(S, S.zero())] * n, S)
    return RegEmbedding(f"section:P{k}<P{k}xP{n}", n, T, eta, normal, pull, src, tgt)


def thom_class(V: Bundle, ring: RingTower) -> RingElement:
    """``t(V) = sum_i (-1)^i c_(r-i)(V) x^i`` on ``P(V + 1)``, ``r = rank V``.

    Weight ``r``; for a line bundle this is ``c1(L) - x``, and it vanishes on
    the hyperplane at infinity ``P(V)``.
    """
    r = V.rank
    if ring.parent != V.ring or ring.fiber_dims[-1] != r:
        raise ValueError("ring must be the projective completion of V")
    x = ring.gen(ring.ngens - 1)
    out = ring.zero()
    for i in range(r + 1):
        out = out + ring.include(V.c(r - i)) * x ** i * (-1) ** i
    return out


def completion_space(base: Space, summands, gen: str = "t") -> Space:
    """``P(V + 1)`` for ``V`` the split bundle ``summands`` over ``base``."""
    k = base.ngens
    return proj_bundle(base, list(summands) + [(0,) * k], gen,
                       f"P({'+'.join('O' + str(s) for s in summands)}+1) over {base}")


def embed_zero_section(base: Space, summands, theory: Theory) -> RegEmbedding:
    """Zero section ``X -> P(V + 1)``; ``eta = t(V)`` and ``N = V``."""
    space = completion_space(base, summands)
    S = base.ring(theory)
    T = space.ring(theory)
    V = space_bundle(base, summands, theory)
    pull = RingMap(T, S, list(S.gens) + [S.zero()])
    return RegEmbedding(f"zero:{space}", V.rank, T, thom_class(V, T), V, pull, base, space)


def retraction(i: RegEmbedding) -> RingMap:
    """``r^*`` for the bundle projection retracting a zero section."""
    T, S = i.target, i.source
    return RingMap(S, T, list(T.gens[: S.ngens]))


def embed_diagonal(n: int, theory: Theory) -> RegEmbedding:
    src = projective_space(n)
    tgt = product_space(n, n)
    S, T = src.ring(theory), tgt.ring(theory)
    x = S.gen(0)
    pull = RingMap(T, S, [x, x])
    return RegEmbedding(f"diag:P{n}", n, T, diagonal_class(n, theory),
                        euler_tangent(S, 0), pull, src, tgt)


def cl_class(F: Bundle, ring: RingTower) -> RingElement:
    """``Cl = sum_{i<n} (-1)^(n+1+i) c_i(F) x^(n-i-1)`` on ``P(F)``; ``x Cl = c_n(F)``."""
    n = F.rank
    if ring.parent != F.ring or ring.fiber_dims[-1] != n - 1:
        raise ValueError("ring must be the projectivisation of F")
    x = ring.gen(ring.ngens - 1)
    out = ring.zero()
    for i in range(n):
        out = out + ring.include(F.c(i)) * x ** (n - i - 1) * (-1) ** (n + 1 + i)
    return out


# -- lci maps -----------------------------------------------------------------------------

def euler_tangent(ring: RingTower, generator=-1) -> VirtualBundle:
    """Relative tangent of a trivial ``P^n`` stage: ``(n+1) O(1) - O``."""
    idx = generator if generator >= 0 else ring.ngens + generator
    n = ring.fiber_dims[idx]
    twist = tuple(1 if i == idx else 0 for i in range(ring.ngens))
    o1 = line_bundle(ring, line_c1(ring, twist))
    return VirtualBundle(direct_sum([o1] * (n + 1)), trivial_bundle(ring, 1))


@dataclass(frozen=True, eq=False)
class LciMap:
    """Projective lci map ``f = p i: Y -> P^n_X -> X``.

    ``recipe`` names the geometric construction so that the same map can
    be rebuilt in another theory (see :func:`lci_map`).
    """

    recipe: tuple
    embedding: RegEmbedding
    projection: Projection
    base_space: Space
    virtual_tangent: VirtualBundle = field(default=None)

    @property
    def theory(self) -> Theory:
        return self.projection.theory

    @property
    def source_ring(self) -> RingTower:
        e = self.embedding
        return e.source if not e.virtual_source else e.target

    @property
    def source_space(self) -> Space:
        e = self.embedding
        return e.source_space if not e.virtual_source else e.target_space

    def push(self, a: RingElement) -> RingElement:
        return pushforward_lci(self, a)


def pushforward_lci(f: LciMap, a: RingElement) -> RingElement:
    return f.projection.apply(pushforward_embedding(f.embedding, a))


def virtual_tangent(f: LciMap) -> VirtualBundle:
    return f.virtual_tangent


def _tangent_for(emb: RegEmbedding) -> VirtualBundle:
    Tp = euler_tangent(emb.target)
    if not emb.virtual_source:
        Tp = map_bundle(emb.pullback, Tp)
    return Tp - as_virtual(emb.normal)


def make_lci(recipe: tuple, emb: RegEmbedding, base: Space) -> LciMap:
    n = emb.target.fiber_dims[-1]
    proj = projection_pushforward(n, emb.target.theory)
    return LciMap(recipe, emb, proj, base, _tangent_for(emb))


@lru_cache(maxsize=None)
def lci_map(recipe: tuple, theory: Theory) -> LciMap:
    """Build a catalogued lci map in ``theory``.

    Recipes::

        ("proj", n)          P^n -> pt, identity embedding
        ("linear", m, n)     P^m -> pt through P^m < P^n
        ("conic",)           P^1 -> pt through the plane conic
        ("hyper", n, d)      degree d hypersurface of P^n -> pt
        ("fiber", k, n)      P^k x P^n -> P^k
    """
    kind = recipe[0]
    if kind == "proj":
        (n,) = recipe[1:]
        return make_lci(recipe, identity_embedding(projective_space(n), theory), POINT)
    if kind == "linear":
        m, n = recipe[1:]
        return make_lci(recipe, embed_linear(m, n, theory), POINT)
    if kind == "conic":
        return make_lci(recipe, embed_conic(theory), POINT)
    if kind == "hyper":
        n, d = recipe[1:]
        return make_lci(recipe, embed_hypersurface(n, d, theory), POINT)
    if kind == "fiber":
        k, n = recipe[1:]
        return make_lci(recipe, identity_embedding(product_space(k, n), theory),
                        projective_space(k, "x1"))
    raise ValueError(f"unknown lci recipe {recipe!r}")


def change_orientation_pushforward(f: LciMap, G: PowerSeries, a: RingElement) -> RingElement:
    """``f_*(G^-1_x(T_f) a)``: the pushforward for ``c1_new = G(c1) c1``."""
    correction = mult_extension(G.recip(), f.virtual_tangent)
    return pushforward_lci(f, correction * f.embedding.lift(a) if f.embedding.virtual_source
                           else correction * a)


# -- excess intersection --------------------------------------------------------------------

@dataclass(frozen=True)
class CheckReport:
    name: str
    lhs: RingElement
    rhs: RingElement

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def excess_check(instance: str, theory: Theory) -> CheckReport:
    """Both sides of ``pi^* i_*(a) = j_*(c_top(K) pi'^*(a))`` for a catalogued square.

    ``self-hyper-<n>-<d>``, ``self-linear-<m>-<n>`` and ``self-zero-<a>-<b>``
    are self-intersection squares (``K = N``); ``transversal-<m>-<n>`` is
    ``P^m < P^n`` pulled back along ``P^n x P^1 -> P^n`` (``K = 0``).
    """
    kind, *args = instance.split("-", 1)
    if kind == "self":
        what, rest = args[0].split("-", 1)
        nums = [int(v) for v in rest.split("-")]
        if what == "hyper":
            emb = embed_hypersurface(nums[0], nums[1], theory)
        elif what == "linear":
            emb = embed_linear(nums[0], nums[1], theory)
        elif what == "zero":
            emb = embed_zero_section(projective_space(2), [(v,) for v in nums], theory)
        else:
            raise ValueError(f"unknown excess instance {instance!r}")
        lhs, rhs = self_intersection(emb)
        return CheckReport(instance, lhs, rhs)
    if kind == "transversal":
        m, n = (int(v) for v in args[0].split("-"))
        i = embed_linear(m, n, theory)
        X = product_space(n, 1)
        P = product_space(m, 1)
        RX, RP = X.ring(theory), P.ring(theory)
        pi = RingMap(i.target, RX, [RX.gen(0)])
        pi_prime = RingMap(i.source, RP, [RP.gen(0)] if m > 0 else [RP.zero()])
        j_pull = RingMap(RX, RP, [RP.gen(0) if m > 0 else RP.zero(), RP.gen(1)])
        j = RegEmbedding(f"P{m}xP1<P{n}xP1", n - m, RX, line_c1(RX, (1, 0)) ** (n - m),
                         None, j_pull, P, X)
        lhs_total = RX.zero()
        rhs_total = RX.zero()
        for k in range(m + 1):
            a = i.source.gen(0) ** k if m > 0 else i.source.one()
            lhs_total = lhs_total + pi.apply(pushforward_embedding(i, a)) * (k + 1)
            rhs_total = rhs_total + pushforward_embedding(j, pi_prime.apply(a)) * (k + 1)
        return CheckReport(instance, lhs_total, rhs_total)
    raise ValueError(f"unknown excess instance {instance!r}")


def dual_roots_check(V: Bundle) -> Bundle:
    """``V^{**}`` through two applications of the formal inverse."""
    mu = fgl_inverse(V.ring.theory.fgl).coefficients()
    return apply_rootwise(apply_rootwise(V, mu), mu)

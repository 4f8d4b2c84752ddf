"""Theory morphisms and Riemann-Roch verification.

A morphism of oriented theories ``phi: E -> F`` is determined on towers by
the image ``s`` of the source orientation, ``phi(c1^E) = s(c1^F)``.  Writing
``s(t) = t G(t)``, the Riemann-Roch square reads

    phi(f_*(a)) = fbar_*(G^-1_x(T_f) * phi(a)).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .chern import Bundle, VirtualBundle, apply_rootwise, map_bundle, mult_extension
from .fgl import orientation_series
from .gysin import (
    LciMap,
    Space,
    Theory,
    additive_theory,
    change_orientation_pushforward,
    flip_series,
    k_flip_theory,
    k_theory,
    lci_map,
    pushforward_lci,
    space_of,
)
from .ring import RingElement, RingMap
from .series import PowerSeries, exp_series


@dataclass(frozen=True)
class TheoryMorphism:
    """``phi: source -> target`` with ``phi(c1) = image(c1bar)``."""

    source: Theory
    target: Theory
    image: PowerSeries
    name: str = ""

    def __post_init__(self):
        s = self.image
        if s.nvars != 1:
            raise ValueError("orientation image must be univariate")
        if s.constant_term() or s.coeff(1) != 1:
            raise ValueError("orientation image must be t + O(t^2)")

    @property
    def label(self) -> str:
        return f"{self.source.name}->{self.target.name}"

    def ring_map(self, space: Space) -> RingMap:
        return _morphism_ring_map(self, space)


@lru_cache(maxsize=None)
def _morphism_ring_map(phi: TheoryMorphism, space: Space) -> RingMap:
    S = space.ring(phi.source)
    T = space.ring(phi.target)
    T.require_precision(phi.image.precision, "orientation image")
    images = [T.eval_series(phi.image, g) for g in T.gens]
    return RingMap(S, T, images)


def extract_G(phi: TheoryMorphism) -> PowerSeries:
    """``G`` with ``s(t) = t G(t)``; precision drops by one."""
    G = phi.image.shift_down(1)
    if G.constant_term() != 1:
        raise ValueError("orientation image must have linear coefficient 1")
    return G


def morphism_from_G(source: Theory, target: Theory, G: PowerSeries, name: str = "") -> TheoryMorphism:
    return TheoryMorphism(source, target, orientation_series(G), name)


def chern_character_morphism(precision: int = 12) -> TheoryMorphism:
    """``ch: K -> additive`` with ``ch(1 - [L^*]) = 1 - e^(-c1(L))``."""
    e = exp_series(precision).coefficients()
    s = PowerSeries([0] + [-e[k] * (-1) ** k for k in range(1, precision + 1)], precision)
    return TheoryMorphism(k_theory(precision), additive_theory(precision), s, "ch")


def k_flip_morphism(precision: int = 12) -> TheoryMorphism:
    """Identity of K-theory seen from ``K-flip`` to ``K``: ``[L] - 1 = c/(1 - c)``."""
    return TheoryMorphism(k_flip_theory(precision), k_theory(precision),
                          flip_series(precision), "K-flip->K")


def k_unflip_morphism(precision: int = 12) -> TheoryMorphism:
    """Identity of K-theory from ``K`` to ``K-flip``: ``1 - [L^*] = c/(1 + c)``."""
    return TheoryMorphism(k_theory(precision), k_flip_theory(precision),
                          flip_series(precision).revert(), "K->K-flip")


def additive_flip_morphism(precision: int = 12) -> TheoryMorphism:
    """Additive theory re-oriented by ``-c1(L^*)``, which is ``c1(L)`` again."""
    return TheoryMorphism(additive_theory(precision),
                          additive_theory(precision, "additive-flip"),
                          PowerSeries([0, 1], precision), "additive-flip")


def morphism_apply(phi: TheoryMorphism, a: RingElement) -> RingElement:
    return phi.ring_map(space_of(a.ring)).apply(a)


def transport(phi: TheoryMorphism, V, space: Space):
    """Move a bundle from ``source`` to ``target`` Chern classes.

    ``phi`` sends source roots ``x`` to ``s(xbar)``; reverting ``s``
    root-wise recovers the target roots ``xbar``.
    """
    if isinstance(V, VirtualBundle):
        return VirtualBundle(transport(phi, V.positive, space), transport(phi, V.negative, space))
    moved: Bundle = map_bundle(phi.ring_map(space), V)
    return apply_rootwise(moved, phi.image.revert().coefficients())


# -- verification ----------------------------------------------------------------------

@dataclass(frozen=True)
class RRReport:
    case_name: str
    theory_pair: str
    lhs: RingElement
    rhs: RingElement
    oracle: Optional[Fraction] = None
    ms: float = 0.0

    @property
    def equal(self) -> bool:
        return (self.lhs - self.rhs).is_zero()

    @property
    def oracle_match(self) -> bool:
        if self.oracle is None:
            return True
        try:
            return self.lhs.to_rational() == self.oracle
        except ValueError:
            return False

    @property
    def passed(self) -> bool:
        return self.equal and self.oracle_match


def _sides(phi: TheoryMorphism, f: LciMap, a: RingElement, correct: bool):
    if f.theory != phi.source:
        raise ValueError("lci map is not built in the source theory")
    fbar = lci_map(f.recipe, phi.target)
    lhs = morphism_apply(phi, pushforward_lci(f, a))
    phi_a = morphism_apply(phi, a)
    if correct:
        Ginv = extract_G(phi).recip()
        T = transport(phi, f.virtual_tangent, f.source_space)
        phi_a = mult_extension(Ginv, T) * phi_a
    return lhs, pushforward_lci(fbar, phi_a)


def verify_rr(phi: TheoryMorphism, f: LciMap, a: RingElement, name: str = "",
              oracle: Optional[Fraction] = None) -> RRReport:
    """Both sides of ``phi(f_*(a)) = fbar_*(G^-1_x(T_f) phi(a))``.

    Classes on a virtual source are passed (and mapped) as their ambient lifts.
    """
    start = time.perf_counter()
    lhs, rhs = _sides(phi, f, a, correct=True)
    ms = (time.perf_counter() - start) * 1000
    return RRReport(name, phi.label, lhs, rhs, oracle, ms)


def verify_rr_oriented(phi: TheoryMorphism, f: LciMap, a: RingElement, name: str = "",
                       oracle: Optional[Fraction] = None) -> RRReport:
    """``phi(f_*(a)) = fbar_*(phi(a))`` for orientation-preserving ``phi``."""
    G = extract_G(phi)
    if G != PowerSeries([1], G.precision):
        raise ValueError(f"{phi.label} does not preserve orientations")
    start = time.perf_counter()
    lhs, rhs = _sides(phi, f, a, correct=False)
    ms = (time.perf_counter() - start) * 1000
    return RRReport(name, phi.label, lhs, rhs, oracle, ms)


def reduce_constant(a: RingElement) -> RingElement:
    """Image in ``E(X) / E(pt)``: the unit part is dropped."""
    return a - a.constant_term()


def module_rr_reduced(phi: TheoryMorphism, m: RingElement, k: int = 1, n: int = 1,
                      name: str = "") -> RRReport:
    """RR for ``1 (x) f_*`` with ``f: P^n -> pt``, read in reduced cohomology of ``X = P^k``.

    ``m`` lives on ``P^k x P^n``; both sides are compared modulo ``E(pt)``.
    """
    f = lci_map(("fiber", k, n), phi.source)
    report = verify_rr(phi, f, m, name)
    return RRReport(name, phi.label, reduce_constant(report.lhs), reduce_constant(report.rhs),
                    None, report.ms)


def change_orientation_check(f: LciMap, a: RingElement, name: str = "") -> RRReport:
    """K-flip pushforward rebuilt from scratch vs. the corrected K pushforward.

    Both sides push the same K-theory class: the flipped Gysin data acts on
    its K-flip presentation, the corrected one on the K presentation with
    ``G = 1/(1 - t)``.
    """
    theory = f.theory
    unflip = k_unflip_morphism(theory.precision)
    if theory != unflip.source:
        raise ValueError("change of orientation check runs on K-theory maps")
    start = time.perf_counter()
    G = extract_G(k_flip_morphism(theory.precision))
    fbar = lci_map(f.recipe, unflip.target)
    # read the flipped result back in the K presentation of the base
    rebuilt = morphism_apply(k_flip_morphism(theory.precision),
                             pushforward_lci(fbar, morphism_apply(unflip, a)))
    corrected = change_orientation_pushforward(f, G, a)
    ms = (time.perf_counter() - start) * 1000
    return RRReport(name, "K/K-flip", rebuilt, corrected, None, ms)

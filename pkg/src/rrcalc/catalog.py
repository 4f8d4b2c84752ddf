"""The built-in verification catalog.

Every case is a small Riemann-Roch (or orientation-change) square whose two
sides are computed independently; many also carry a classical oracle value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .gysin import additive_theory, k_class, k_flip_theory, k_theory, lci_map, product_space
from .oracles import chow_pushforward_oracle, euler_char_oracle, hypersurface_chi_oracle
from .rr import (
    RRReport,
    additive_flip_morphism,
    change_orientation_check,
    chern_character_morphism,
    k_flip_morphism,
    module_rr_reduced,
    verify_rr,
    verify_rr_oriented,
)


@dataclass(frozen=True)
class CatalogCase:
    name: str
    theory_pair: str
    space: str
    map: str
    klass: str
    required_precision: int
    runner: Callable[[int, str], RRReport]
    oracle: Optional[Fraction] = None

    def run(self, precision: int) -> RRReport:
        if precision < self.required_precision:
            raise ValueError(f"case {self.name} needs precision >= {self.required_precision}")
        return self.runner(precision, self.name)


def _ch_proj(n: int, d: int):
    def run(precision, name):
        f = lci_map(("proj", n), k_theory(precision))
        a = k_class(f.source_ring, (d,))
        return verify_rr(chern_character_morphism(precision), f, a, name, euler_char_oracle(n, d))
    return run


def _ch_hyper(n: int, d: int, k: int):
    def run(precision, name):
        f = lci_map(("hyper", n, d), k_theory(precision))
        a = k_class(f.source_ring, (k,))
        return verify_rr(chern_character_morphism(precision), f, a, name,
                         hypersurface_chi_oracle(n, d, k))
    return run


def _ch_recipe(recipe: tuple, k: int, oracle: Fraction):
    def run(precision, name):
        f = lci_map(recipe, k_theory(precision))
        a = k_class(f.source_ring, (k,))
        return verify_rr(chern_character_morphism(precision), f, a, name, oracle)
    return run


def _flip_proj(n: int, d: int):
    def run(precision, name):
        f = lci_map(("proj", n), k_flip_theory(precision))
        a = k_class(f.source_ring, (d,))
        return verify_rr(k_flip_morphism(precision), f, a, name, flip_oracle(n, d))
    return run


def flip_oracle(n: int, d: int) -> Fraction:
    """Flipped pushforward of ``[O(d)]`` on ``P^n``: ``chi(O(d) (x) omega) = chi(O(d - n - 1))``."""
    return euler_char_oracle(n, d - n - 1)


def _facil(n: int, k: int):
    def run(precision, name):
        f = lci_map(("proj", n), additive_theory(precision))
        a = f.source_ring.gen(0) ** k
        # x = -h in the additive theory
        oracle = chow_pushforward_oracle(n, k) * (-1) ** k
        return verify_rr_oriented(additive_flip_morphism(precision), f, a, name, oracle)
    return run


def _orient(n: int, k: int):
    def run(precision, name):
        f = lci_map(("proj", n), k_theory(precision))
        return change_orientation_check(f, f.source_ring.gen(0) ** k, name)
    return run


def _module(exps: tuple):
    def run(precision, name):
        R = product_space(1, 1).ring(k_theory(precision))
        m = R.element({exps: 1})
        return module_rr_reduced(chern_character_morphism(precision), m, 1, 1, name)
    return run


def _build() -> dict[str, CatalogCase]:
    cases: list[CatalogCase] = []
    for n in range(1, 5):
        for d in range(-5, 6):
            cases.append(CatalogCase(f"rr-p{n}-O{d}", "ch:K->additive", f"P{n}", f"P{n}->pt",
                                     f"O({d})", 2 * n, _ch_proj(n, d), euler_char_oracle(n, d)))
    for n in range(1, 4):
        for d in range(1, 5):
            for k in (0, 1):
                cases.append(CatalogCase(
                    f"rr-h{d}p{n}-O{k}", "ch:K->additive", f"H{d} in P{n}", f"H{d}->pt",
                    f"O({k})", 2 * n, _ch_hyper(n, d, k), hypersurface_chi_oracle(n, d, k)))
    for k in range(-1, 3):
        cases.append(CatalogCase(f"rr-conic-O{k}", "ch:K->additive", "conic in P2", "P1->P2->pt",
                                 f"O({k})", 4, _ch_recipe(("conic",), k, euler_char_oracle(1, k)),
                                 euler_char_oracle(1, k)))
        cases.append(CatalogCase(f"rr-line-p1p3-O{k}", "ch:K->additive", "P1 in P3", "P1->P3->pt",
                                 f"O({k})", 6, _ch_recipe(("linear", 1, 3), k, euler_char_oracle(1, k)),
                                 euler_char_oracle(1, k)))
    for n in (1, 2):
        for d in (-2, -1, 0, 1, 2):
            cases.append(CatalogCase(f"flip-p{n}-O{d}", "K-flip->K", f"P{n}", f"P{n}->pt",
                                     f"O({d})", 2 * n, _flip_proj(n, d), flip_oracle(n, d)))
        for k in range(n + 1):
            cases.append(CatalogCase(f"orient-p{n}-x{k}", "K/K-flip", f"P{n}", f"P{n}->pt",
                                     f"x^{k}", 2 * n, _orient(n, k)))
    for n in (1, 2, 3):
        for k in range(n + 1):
            oracle = chow_pushforward_oracle(n, k) * (-1) ** k
            cases.append(CatalogCase(f"facil-p{n}-x{k}", "additive->additive-flip", f"P{n}",
                                     f"P{n}->pt", f"x^{k}", 2 * n, _facil(n, k), oracle))
    for label, exps in (("1", (0, 0)), ("x1", (1, 0)), ("x2", (0, 1)), ("x1x2", (1, 1))):
        cases.append(CatalogCase(f"module-p1p1-{label}", "ch:K->additive", "P1xP1",
                                 "P1xP1->P1", label, 2, _module(exps)))
    return {c.name: c for c in cases}


CATALOG: dict[str, CatalogCase] = _build()


def catalog_names() -> list[str]:
    return sorted(CATALOG)


def run_catalog(selection: Optional[Iterable[str]] = None, precision: int = 12) -> list[RRReport]:
    """Run the selected cases (all when ``selection`` is None), ordered by name."""
    names = catalog_names() if selection is None else sorted(set(selection))
    unknown = [n for n in names if n not in CATALOG]
    if unknown:
        raise KeyError(f"unknown catalog case(s): {', '.join(unknown)}")
    return [CATALOG[n].run(precision) for n in names]

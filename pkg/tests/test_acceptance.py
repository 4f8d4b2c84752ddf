"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

All comparisons are exact rational equalities.
"""

import json
from fractions import Fraction

import pytest

from rrcalc.catalog import CATALOG
from rrcalc.cli import main
from rrcalc.fgl import fgl_additive, fgl_f_part, fgl_inverse, fgl_multiplicative, fgl_validate
from rrcalc.gysin import (
    additive_theory,
    cl_class,
    completion_space,
    diagonal_matrix,
    embed_conic,
    embed_diagonal,
    embed_hypersurface,
    embed_linear,
    embed_section,
    embed_zero_section,
    excess_check,
    identity_embedding,
    k_class,
    k_theory,
    lci_map,
    proj_bundle,
    product_space,
    projection_pushforward,
    projective_space,
    pushforward_embedding,
    self_intersection,
    space_bundle,
)
from rrcalc.oracles import euler_char_oracle, hypersurface_chi_oracle, todd_oracle
from rrcalc.report import ReportDocument
from rrcalc.ring import RingMap
from rrcalc.rr import change_orientation_check, chern_character_morphism, module_rr_reduced, verify_rr
from rrcalc.series import PowerSeries, todd_series

THEORIES = [additive_theory(12), k_theory(12)]


@pytest.fixture
def gate(capsys):
    def record(number, title, ok, detail=""):
        line = f"[acceptance {number:>2}] {'PASS' if ok else 'FAIL'}  {title}"
        if detail and not ok:
            line += f"  ({detail})"
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
    return record


def test_01_todd_series(gate):
    coeffs = todd_series(8).coefficients()
    ok = coeffs == todd_oracle(8) and coeffs[:5] == [1, Fraction(1, 2), Fraction(1, 12), 0, Fraction(-1, 720)]
    gate(1, "Todd series through t^8 equals long-division oracle", ok, str(coeffs))


def test_02_fgl_validation(gate):
    failures = []
    for F in (fgl_additive(12), fgl_multiplicative(12)):
        if not fgl_validate(F).ok:
            failures.append(f"{F.name} axioms")
        t = PowerSeries.variable(0, 12)
        if not F(t, fgl_inverse(F)).is_zero():
            failures.append(f"{F.name} inverse")
        x, y = PowerSeries.variable(0, 12, 2), PowerSeries.variable(1, 12, 2)
        rebuilt = x + y + x * y * fgl_f_part(F).substitute([x, y])
        if rebuilt.truncate(10) != F.series.truncate(10):
            failures.append(f"{F.name} f-part")
    gate(2, "FGL unit/symmetry/associativity, F(t, mu(t)) = 0, f-part", not failures, ", ".join(failures))


def catalog_towers():
    yield projective_space(0)
    for n in range(1, 5):
        yield projective_space(n)
        yield product_space(n, n)
    yield product_space(1, 1)
    yield product_space(2, 1)
    yield completion_space(projective_space(2), [(1,), (2,)])
    yield proj_bundle(projective_space(2, "x1"), [(0,), (1,), (2,)], "x2", "twisted")


def test_03_projective_bundle_theorem(gate):
    failures = []
    for theory in THEORIES:
        for space in catalog_towers():
            R = space.ring(theory)
            expected = 1
            for n in R.fiber_dims:
                expected *= n + 1
            basis = R.basis()
            if len(basis) != expected:
                failures.append(f"{space} size")
                continue
            # closure: products of basis monomials reduce into the span of the basis
            elems = [R.element({m: 1}) for m in basis]
            for a in elems:
                for b in elems:
                    if not set((a * b).terms) <= set(basis):
                        failures.append(f"{space} closure")
                        break
    gate(3, "monomial bases have predicted sizes and reduction is closed", not failures, ", ".join(failures))


def test_04_diagonal_shape(gate):
    failures = []
    for theory in THEORIES:
        for n in range(1, 5):
            a = diagonal_matrix(n, theory)
            anti = {a[r][n - r] for r in range(n + 1)}
            if len(anti) != 1 or abs(next(iter(anti))) != 1:
                failures.append(f"{theory.name} n={n} anti-diagonal {anti}")
            if any(a[r][s] for r in range(n + 1) for s in range(n + 1) if r + s < n):
                failures.append(f"{theory.name} n={n} upper zeros")
            projection_pushforward(n, theory)  # raises if the polarity matrix is singular
    gate(4, "diagonal class: zeros above, unit anti-diagonal (one global sign), invertible",
         not failures, ", ".join(failures))


def test_05_diagonal_and_section_pushforwards(gate):
    failures = []
    for theory in THEORIES:
        for n in range(1, 4):
            emb = embed_diagonal(n, theory)
            T = emb.target
            swap = RingMap(T, T, [T.gen(1), T.gen(0)])
            p = lci_map(("fiber", n, n), theory)
            base = projective_space(n, "x1").ring(theory)
            for k in range(n + 1):
                if p.push(swap.apply(pushforward_embedding(emb, emb.source.gen(0) ** k))) != base.gen(0) ** k:
                    failures.append(f"{theory.name} p2*D* n={n} x^{k}")
        for n in range(1, 5):
            emb = embed_section(1, n, theory)
            p = lci_map(("fiber", 1, n), theory)
            base = projective_space(1, "x1").ring(theory)
            for a in (emb.source.one(), emb.source.gen(0)):
                if p.push(pushforward_embedding(emb, a)) != base.element(a.terms):
                    failures.append(f"{theory.name} p*s* n={n}")
    gate(5, "p2* Delta* = id on monomials (n <= 3); p* s* = 1 (n <= 4)", not failures, ", ".join(failures))


def test_06_k_pushforward_oracle(gate):
    K = k_theory(12)
    failures = []
    count = 0
    for n in range(0, 5):
        f = lci_map(("proj", n), K)
        for d in range(-5, 6):
            count += 1
            value = f.push(k_class(f.source_ring, (d,))).to_rational()
            if value != euler_char_oracle(n, d):
                failures.append(f"n={n} d={d}: {value}")
    gate(6, f"K-pushforward of O(d) on P^n equals C(n+d, n) ({count} cases)", not failures, ", ".join(failures))


def test_07_grothendieck_riemann_roch(gate):
    ch = chern_character_morphism(12)
    K = k_theory(12)
    failures = []
    for n in range(1, 5):
        f = lci_map(("proj", n), K)
        for d in range(-5, 6):
            r = verify_rr(ch, f, k_class(f.source_ring, (d,)), oracle=euler_char_oracle(n, d))
            if not r.passed:
                failures.append(f"P{n} O({d})")
    for n in range(1, 4):
        for d in range(1, 5):
            f = lci_map(("hyper", n, d), K)
            for k in (0, 1):
                r = verify_rr(ch, f, k_class(f.source_ring, (k,)), oracle=hypersurface_chi_oracle(n, d, k))
                if not r.passed:
                    failures.append(f"H{d} in P{n} O({k})")
    classical = {(2, 3): 0, (2, 2): 1, (3, 4): 2}
    for (n, d), chi in classical.items():
        f = lci_map(("hyper", n, d), K)
        if verify_rr(ch, f, f.source_ring.one()).lhs.to_rational() != chi:
            failures.append(f"classical H{d} in P{n}")
    gate(7, "GRR exact on P^n (n <= 4) and hypersurfaces (n <= 3, d <= 4); cubic 0, conic 1, K3 2",
         not failures, ", ".join(failures))


def test_08_change_of_orientation(gate):
    K = k_theory(12)
    failures = []
    for n in (1, 2):
        f = lci_map(("proj", n), K)
        for mono in f.source_ring.basis():
            r = change_orientation_check(f, f.source_ring.element({mono: 1}))
            if not r.equal:
                failures.append(f"P{n} {mono}: {r.lhs} vs {r.rhs}")
    gate(8, "K-flip rebuilt pushforward equals G^-1-corrected pushforward on P1, P2 basis",
         not failures, ", ".join(failures))


def test_09_self_intersection_and_excess(gate):
    failures = []
    for theory in THEORIES:
        embeddings = [
            embed_hypersurface(2, 3, theory), embed_hypersurface(3, 2, theory),
            embed_linear(0, 2, theory), embed_linear(1, 3, theory), embed_conic(theory),
            embed_section(1, 2, theory), embed_diagonal(2, theory), embed_diagonal(3, theory),
            embed_zero_section(projective_space(2), [(1,), (2,)], theory),
            embed_zero_section(projective_space(1), [(-1,)], theory),
            identity_embedding(projective_space(2), theory),
        ]
        for emb in embeddings:
            lhs, rhs = self_intersection(emb)
            if lhs != rhs:
                failures.append(f"{theory.name} {emb.name}")
        for name in ("transversal-1-3", "transversal-0-2", "transversal-2-3", "self-hyper-2-3"):
            if not excess_check(name, theory).equal:
                failures.append(f"{theory.name} {name}")
        base = projective_space(2)
        for twists in ([(0,), (0,)], [(1,), (2,)], [(0,), (1,), (-1,)]):
            F = space_bundle(base, twists, theory)
            R = proj_bundle(base, twists, "u").ring(theory)
            if R.gen(R.ngens - 1) * cl_class(F, R) != R.include(F.top()):
                failures.append(f"{theory.name} Cl {twists}")
    gate(9, "i*i_*(1) = c_top(N) for built-ins; transversal excess; x Cl = c_n(F)",
         not failures, ", ".join(failures))


def test_10_factorization_and_functoriality(gate):
    failures = []
    for theory in THEORIES:
        maps = [lci_map(r, theory) for r in (("proj", 1), ("linear", 1, 2), ("linear", 1, 3))]
        for k in range(2):
            values = {f.push(f.source_ring.gen(0) ** k).to_rational() for f in maps}
            if len(values) != 1:
                failures.append(f"{theory.name} x^{k}: {values}")
        i01, i12, i02 = embed_linear(0, 1, theory), embed_linear(1, 2, theory), embed_linear(0, 2, theory)
        chain = pushforward_embedding(i12, pushforward_embedding(i01, i01.source.one()))
        if chain != pushforward_embedding(i02, i02.source.one()):
            failures.append(f"{theory.name} chain")
    gate(10, "factorizations of P1 -> pt agree; (ij)_* = i_* j_* on P0 < P1 < P2",
         not failures, ", ".join(failures))


def test_11_module_rr(gate):
    ch = chern_character_morphism(12)
    R = product_space(1, 1).ring(k_theory(12))
    x1, x2 = R.gen(0), R.gen(1)
    failures = []
    for label, m in (("1", R.one()), ("x1", x1), ("x2", x2), ("x1x2", x1 * x2),
                     ("O(1,1)", k_class(R, (1, 1)))):
        r = module_rr_reduced(ch, m)
        if not r.equal:
            failures.append(label)
    gate(11, "module RR on reduced Kunneth model of P1 x P1", not failures, ", ".join(failures))


def test_12_cli_contract(gate, tmp_path, capsys):
    failures = []
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    if main(["catalog", "--json", str(a)]) != 0:
        failures.append("catalog exit")
    main(["catalog", "--json", str(b)])
    if a.read_bytes() != b.read_bytes():
        failures.append("nondeterministic JSON")
    text = a.read_text(encoding="utf-8")
    doc = ReportDocument.loads(text)
    if ReportDocument.loads(doc.dumps()) != doc or doc.dumps() != text:
        failures.append("round trip")
    data = json.loads(text)
    if data["summary"] != {"passed": len(CATALOG), "failed": 0, "total": len(CATALOG)}:
        failures.append("summary")
    if main(["catalog", "--case", "nonexistent"]) != 2:
        failures.append("usage exit")
    if main(["push", "--theory", "K", "--space", "P2", "--class", "O(2)"]) != 0:
        failures.append("push exit")
    if main(["series", "--bogus"]) != 2:
        failures.append("series usage exit")
    capsys.readouterr()
    gate(12, "CLI exit codes 0/1/2, deterministic JSON, JSON round trip", not failures, ", ".join(failures))

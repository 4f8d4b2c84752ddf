"""Presented cohomology rings of projective-bundle towers.

A tower starts at the point (ring ``Q``) and each stage adjoins a weight-one
generator ``x = c1(O(-1))`` subject to the projective bundle relation

    x^(n+1) + sum_{i=1}^{n+1} (-1)^i c_i(V) x^(n+1-i) = 0

for a rank ``n+1`` bundle ``V`` on the previous stage.  Elements are kept in
reduced normal form: every exponent of generator ``i`` is at most ``n_i``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import TYPE_CHECKING, Iterable, Mapping, Sequence

from .series import PowerSeries

if TYPE_CHECKING:
    from .chern import Bundle
    from .gysin import Theory


def _q(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class _Generator:
    __slots__ = ("name", "fiber_dim", "rule", "key")

    def __init__(self, name: str, fiber_dim: int, rule: dict, chern_key: tuple):
        self.name = name
        self.fiber_dim = fiber_dim
        # x^(n+1) rewritten in lower terms, as {monomial: coefficient}
        self.rule = rule
        self.key = (name, fiber_dim, chern_key)


class RingTower:
    """``E(X)`` for ``X`` an iterated projective bundle over the point."""

    def __init__(self, theory: "Theory", gens: Sequence[_Generator] = (),
                 parent: "RingTower | None" = None):
        self.theory = theory
        self._gens = tuple(gens)
        self.parent = parent
        self._key = (theory, tuple(g.key for g in self._gens))
        self._hash = hash(self._key)
        self._cache: dict = {}

    # -- structure --------------------------------------------------------

    @property
    def ngens(self) -> int:
        return len(self._gens)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self._gens)

    @property
    def fiber_dims(self) -> tuple[int, ...]:
        return tuple(g.fiber_dim for g in self._gens)

    @property
    def top_weight(self) -> int:
        return sum(self.fiber_dims)

    @property
    def graded(self) -> bool:
        return self.theory.graded

    def basis(self) -> list[tuple]:
        """Reduced monomials, ordered by weight then lexicographically."""
        monos = product(*(range(n + 1) for n in self.fiber_dims))
        return sorted(monos, key=lambda m: (sum(m), m))

    def __eq__(self, other):
        return isinstance(other, RingTower) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        gens = ", ".join(f"{g.name}^{g.fiber_dim + 1}" for g in self._gens)
        return f"RingTower[{self.theory.name}]({gens})"

    # -- elements ---------------------------------------------------------

    def element(self, terms: Mapping[tuple, object] | object = 0) -> "RingElement":
        """Build an element from ``{exponent tuple: coefficient}`` or a scalar."""
        if not isinstance(terms, Mapping):
            terms = {(0,) * self.ngens: terms}
        acc: dict = {}
        for mono, c in terms.items():
            mono = tuple(mono)
            if len(mono) != self.ngens:
                raise ValueError(f"monomial {mono} has wrong length for {self!r}")
            c = _q(c)
            if c:
                for red, rc in self._reduce(mono).items():
                    acc[red] = acc.get(red, 0) + c * rc
        return RingElement._raw(self, acc)

    def one(self) -> "RingElement":
        return self.element(1)

    def zero(self) -> "RingElement":
        return RingElement._raw(self, {})

    def gen(self, name_or_index) -> "RingElement":
        if isinstance(name_or_index, str):
            if name_or_index not in self.names:
                raise KeyError(f"unknown generator {name_or_index!r}")
            idx = self.names.index(name_or_index)
        else:
            idx = name_or_index
        mono = tuple(1 if i == idx else 0 for i in range(self.ngens))
        return self.element({mono: 1})

    @property
    def gens(self) -> tuple["RingElement", ...]:
        return tuple(self.gen(i) for i in range(self.ngens))

    def coerce(self, value) -> "RingElement":
        if isinstance(value, RingElement):
            if value.ring != self:
                return self.include(value)
            return value
        return self.element(value)

    def include(self, a: "RingElement") -> "RingElement":
        """Pull back an element of an earlier tower stage."""
        if a.ring == self:
            return a
        k = a.ring.ngens
        stage = self
        while stage is not None and stage.ngens > k:
            stage = stage.parent
        if stage is None or stage != a.ring:
            raise ValueError(f"{a.ring!r} is not a stage of {self!r}")
        pad = (0,) * (self.ngens - k)
        return RingElement._raw(self, {m + pad: c for m, c in a.terms.items()})

    # -- reduction ----------------------------------------------------------

    def _reduce(self, mono: tuple) -> dict:
        hit = self._cache.get(mono)
        if hit is not None:
            return hit
        idx = None
        for i in range(self.ngens - 1, -1, -1):
            if mono[i] > self._gens[i].fiber_dim:
                idx = i
                break
        if idx is None:
            out = {mono: Fraction(1)}
        else:
            g = self._gens[idx]
            rest = list(mono)
            rest[idx] -= g.fiber_dim + 1
            out = {}
            for rmono, rc in g.rule.items():
                m = tuple(a + b for a, b in zip(rest, rmono))
                for red, c in self._reduce(m).items():
                    out[red] = out.get(red, 0) + rc * c
            out = {m: c for m, c in out.items() if c}
        self._cache[mono] = out
        return out

    # -- series -------------------------------------------------------------

    def require_precision(self, precision: int, what: str = "series"):
        if precision < self.top_weight:
            raise ValueError(
                f"{what} precision {precision} is below the top weight {self.top_weight} of {self!r}")

    def eval_series(self, s: PowerSeries, a: "RingElement") -> "RingElement":
        """``s(a)`` for nilpotent ``a``; exact when ``s`` reaches the top weight."""
        a = self.coerce(a)
        if a.constant_term():
            raise ValueError("series can only be evaluated on nilpotent elements")
        self.require_precision(s.precision)
        coeffs = s.coefficients()[: self.top_weight + 1]
        result = self.element(coeffs[-1])
        for c in reversed(coeffs[:-1]):
            result = result * a + c
        return result


def ring_point(theory: "Theory") -> RingTower:
    return RingTower(theory)


def ring_extend_proj(R: RingTower, V: "Bundle", name: str) -> RingTower:
    """Adjoin ``x = c1(O_P(V)(-1))`` for a bundle ``V`` of rank ``n + 1`` on ``R``."""
    if V.ring != R:
        raise ValueError("Chern classes of the bundle must live in the base ring")
    if name in R.names:
        raise ValueError(f"generator name {name!r} already used")
    if V.rank < 1:
        raise ValueError("projectivisation needs a bundle of positive rank")
    n = V.rank - 1
    rule: dict = {}
    chern_key = []
    for i in range(1, n + 2):
        ci = V.chern[i - 1]
        chern_key.append(frozenset(ci.terms.items()))
        sign = -((-1) ** i)
        for mono, c in ci.terms.items():
            m = mono + (n + 1 - i,)
            rule[m] = rule.get(m, 0) + sign * c
    rule = {m: c for m, c in rule.items() if c}
    gens = R._gens + (_Generator(name, n, rule, tuple(chern_key)),)
    return RingTower(R.theory, gens, parent=R)


class RingElement:
    """Element of a :class:`RingTower` in reduced normal form (immutable)."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingTower, terms: Mapping[tuple, object]):
        elem = ring.element(terms)
        self.ring = ring
        self.terms = elem.terms

    @classmethod
    def _raw(cls, ring: RingTower, terms: dict) -> "RingElement":
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = {m: c for m, c in terms.items() if c}
        return obj

    # -- inspection ---------------------------------------------------------

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.ring.ngens, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def valuation(self) -> int | None:
        return min((sum(m) for m in self.terms), default=None)

    def weights(self) -> set[int]:
        return {sum(m) for m in self.terms}

    def is_homogeneous(self, q: int) -> bool:
        return self.weights() <= {q}

    def component(self, q: int) -> "RingElement":
        return RingElement._raw(self.ring, {m: c for m, c in self.terms.items() if sum(m) == q})

    def coefficient(self, mono: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def to_rational(self) -> Fraction:
        if any(sum(m) for m in self.terms):
            raise ValueError(f"{self} is not a scalar")
        return self.constant_term()

    # -- arithmetic -----------------------------------------------------------

    def _other(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise ValueError(f"owner mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.element(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return RingElement._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return RingElement._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _q(other)
            return RingElement._raw(self.ring, {m: v * c for m, v in self.terms.items()})
        other = self._other(other)
        if other is NotImplemented:
            return other
        reduce = self.ring._reduce
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for red, rc in reduce(tuple(a + b for a, b in zip(m1, m2))).items():
                    out[red] = out.get(red, 0) + c * rc
        return RingElement._raw(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / _q(other))
        return self * self._other(other).inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> "RingElement":
        """Inverse of a unit (nonzero constant term plus nilpotent part)."""
        c = self.constant_term()
        if not c:
            raise ZeroDivisionError(f"{self} is not a unit")
        nil = self * (Fraction(1) / c) - 1
        result = self.ring.one()
        term = result
        for _ in range(self.ring.top_weight):
            term = term * (-nil)
            if term.is_zero():
                break
            result = result + term
        result = result * (Fraction(1) / c)
        if self * result != 1:
            raise ArithmeticError(f"failed to invert {self}: nilpotent part is not nilpotent")
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.element(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- printing -------------------------------------------------------------

    def format(self) -> str:
        names = self.ring.names
        parts = []
        for mono in sorted(self.terms, key=lambda m: (sum(m), m)):
            c = self.terms[mono]
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, mono) if e]
            mon = "*".join(factors)
            if not mon:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"{c}*{mon}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    __str__ = format

    def __repr__(self):
        return f"<{self.format()} in {self.ring!r}>"


def elem_reduce(a: RingElement) -> RingElement:
    return a.ring.element(a.terms)


def elem_add(a: RingElement, b: RingElement) -> RingElement:
    return a + b


def elem_mul(a: RingElement, b: RingElement) -> RingElement:
    return a * b


def elem_weight_component(a: RingElement, q: int) -> RingElement:
    return a.component(q)


class RingMap:
    """Ring homomorphism between towers, fixed by generator images.

    Construction verifies that every defining relation of the source maps
    to zero, so :meth:`apply` is well defined.
    """

    def __init__(self, source: RingTower, target: RingTower,
                 images: Sequence[RingElement | int | Fraction], check: bool = True):
        if len(images) != source.ngens:
            raise ValueError(f"need {source.ngens} generator images, got {len(images)}")
        self.source = source
        self.target = target
        self.images = tuple(target.coerce(im) for im in images)
        self._powers = [[target.one()] for _ in self.images]
        self._mono_cache: dict = {}
        if check:
            self._check_relations()

    def _power(self, i: int, e: int) -> RingElement:
        row = self._powers[i]
        while len(row) <= e:
            row.append(row[-1] * self.images[i])
        return row[e]

    def _apply_mono(self, mono: tuple) -> RingElement:
        hit = self._mono_cache.get(mono)
        if hit is None:
            hit = self.target.one()
            for i, e in enumerate(mono):
                if e:
                    hit = hit * self._power(i, e)
            self._mono_cache[mono] = hit
        return hit

    def _apply_terms(self, terms: Mapping[tuple, Fraction]) -> RingElement:
        out = self.target.zero()
        for mono, c in terms.items():
            out = out + self._apply_mono(mono) * c
        return out

    def _check_relations(self):
        for i, g in enumerate(self.source._gens):
            n = g.fiber_dim
            lhs = self._power(i, n + 1) - self._apply_terms(g.rule)
            if not lhs.is_zero():
                raise ValueError(
                    f"relation for {g.name} does not map to zero: {lhs.format()}")

    def apply(self, a: RingElement) -> RingElement:
        if a.ring != self.source:
            raise ValueError(f"element of {a.ring!r} is not in the source {self.source!r}")
        return self._apply_terms(a.terms)

    __call__ = apply

    def matrix(self) -> list[list[Fraction]]:
        """Columns are images of source basis monomials on the target basis."""
        tb = self.target.basis()
        cols = [self._apply_mono(m) for m in self.source.basis()]
        return [[col.coefficient(t) for col in cols] for t in tb]

    def preimage(self, b: RingElement) -> RingElement:
        """Some ``a`` with ``self(a) = b``; raises if ``b`` is not in the image."""
        if b.ring != self.target:
            raise ValueError("element is not in the target ring")
        sb = self.source.basis()
        rows = self.matrix()
        rhs = [b.coefficient(t) for t in self.target.basis()]
        sol = solve_linear(rows, rhs)
        if sol is None:
            raise ValueError(f"{b} is not in the image of the pullback")
        return self.source.element(dict(zip(sb, sol)))


def ring_map_apply(phi: RingMap, a: RingElement) -> RingElement:
    return phi.apply(a)


def identity_map(R: RingTower) -> RingMap:
    return RingMap(R, R, R.gens)


def solve_linear(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """One exact solution of ``rows @ x = rhs`` (free variables set to 0), or None."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    aug = [list(map(_q, r)) + [_q(v)] for r, v in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if aug[i][col]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    if any(aug[i][n] for i in range(r, m)):
        return None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = aug[i][n]
    return x

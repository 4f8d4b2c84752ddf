"""Classical reference values, computed without touching the engine.

Only binomial arithmetic on rationals is used here so that agreement with
the Gysin calculus is independent evidence.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial


def euler_char_oracle(n: int, d: int) -> Fraction:
    """``chi(P^n, O(d)) = prod_{k=1..n} (d + k) / n!``, valid for every integer ``d``.

    >>> euler_char_oracle(2, -3)
    Fraction(1, 1)
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    num = 1
    for k in range(1, n + 1):
        num *= d + k
    return Fraction(num, factorial(n))


def hypersurface_chi_oracle(n: int, d: int, k: int = 0) -> Fraction:
    """``chi(H, O_H(k))`` for a degree ``d`` hypersurface ``H`` in ``P^n``.

    From ``0 -> O(k - d) -> O(k) -> O_H(k) -> 0``.
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    return euler_char_oracle(n, k) - euler_char_oracle(n, k - d)


def chow_pushforward_oracle(n: int, k: int) -> Fraction:
    """Degree of ``h^k`` on ``P^n``: 1 if ``k == n`` else 0."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= {n}")
    return Fraction(1 if k == n else 0)


def todd_oracle(n: int) -> list[Fraction]:
    """Coefficients of ``t / (1 - e^-t)`` by long division of ``(1 - e^-t) / t``."""
    # (1 - e^-t)/t = sum_k (-1)^k t^k / (k+1)!
    den = [Fraction((-1) ** k, factorial(k + 1)) for k in range(n + 1)]
    out: list[Fraction] = []
    for k in range(n + 1):
        rem = (1 if k == 0 else 0) - sum(out[i] * den[k - i] for i in range(k))
        out.append(rem / den[0])
    return out

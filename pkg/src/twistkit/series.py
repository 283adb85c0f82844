"""Exponential/logarithm calculus and BCH on truncated series.

Also houses the Dynkin (left-nested bracketing) criterion used to recognize
Lie elements degree by degree, which is how group-likeness of expansion data
is validated here: an element 1 + higher is group-like exactly when its
logarithm is primitive, and in characteristic zero primitivity of a
homogeneous tensor is the Dynkin condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .algebra import SeriesDomainError, TensorSeries, rational


def texp(u: TensorSeries) -> TensorSeries:
    """exp(u) = sum u^k / k!, truncated.  Requires zero constant term."""
    if u.constant_term() != 0:
        raise SeriesDomainError("exp requires a series with zero constant term")
    result = TensorSeries.unit(u.genus, u.trunc)
    power = result
    factorial = 1
    for k in range(1, u.trunc + 1):
        power = power * u
        if power.is_zero():
            break
        factorial *= k
        result = result + power.scale(rational(1, factorial))
    return result


def tlog(u: TensorSeries) -> TensorSeries:
    """log(u) = sum (-1)^(k+1) (u-1)^k / k, truncated.  Requires constant term 1."""
    if u.constant_term() != 1:
        raise SeriesDomainError("log requires a series with constant term 1")
    v = u - TensorSeries.unit(u.genus, u.trunc)
    result = TensorSeries.zero(u.genus, u.trunc)
    power = TensorSeries.unit(u.genus, u.trunc)
    for k in range(1, u.trunc + 1):
        power = power * v
        if power.is_zero():
            break
        result = result + power.scale(rational((-1) ** (k + 1), k))
    return result


def bch(u: TensorSeries, v: TensorSeries) -> TensorSeries:
    """log(exp(u) exp(v)), exact at the common truncation."""
    if u.constant_term() != 0 or v.constant_term() != 0:
        raise SeriesDomainError("bch requires series with zero constant term")
    return tlog(texp(u) * texp(v))


def dynkin_map(u: TensorSeries) -> TensorSeries:
    """Left-nested bracketing: X1...Xn -> [[...[X1,X2],...],Xn], extended linearly.

    Degree-1 words are fixed; the degree-0 part is annihilated.
    """
    result = TensorSeries.zero(u.genus, u.trunc)
    for word, coeff in u.terms.items():
        if len(word) == 0:
            continue
        bracket = TensorSeries.letter(u.genus, u.trunc, word[0])
        for code in word[1:]:
            bracket = bracket.commutator(TensorSeries.letter(u.genus, u.trunc, code))
        result = result + bracket.scale(coeff)
    return result


def is_lie_element(u: TensorSeries) -> bool:
    """Whether every homogeneous component u_n satisfies dynkin(u_n) = n*u_n."""
    if u.constant_term() != 0:
        return False
    for n in sorted(u.support_degrees()):
        part = u.degree_part(n)
        if dynkin_map(part) != part.scale(n):
            return False
    return True


@dataclass(frozen=True)
class LieSeries:
    """A series whose homogeneous parts are Lie polynomials (no degree-0 part)."""

    series: TensorSeries

    def __post_init__(self) -> None:
        if not is_lie_element(self.series):
            raise SeriesDomainError("series fails the per-degree Dynkin criterion")


def _random_bracket(rng: Random, genus: int, trunc: int, degree: int) -> TensorSeries:
    """A random nested bracket of letters with the given number of leaves."""
    if degree == 1:
        return TensorSeries.letter(genus, trunc, rng.randrange(2 * genus))
    left = rng.randint(1, degree - 1)
    return _random_bracket(rng, genus, trunc, left).commutator(
        _random_bracket(rng, genus, trunc, degree - left)
    )


def random_lie_series(
    genus: int,
    trunc: int,
    min_degree: int,
    seed: int,
    terms_per_degree: int = 1,
) -> LieSeries:
    """A reproducible random Lie series with support in degrees min_degree..trunc.

    Coefficients are small rationals (denominators <= 12) to keep the exact
    arithmetic in downstream products bounded.
    """
    if not (1 <= min_degree <= trunc):
        raise ValueError(f"need 1 <= min_degree <= trunc, got {min_degree}, {trunc}")
    rng = Random(seed)
    total = TensorSeries.zero(genus, trunc)
    for degree in range(min_degree, trunc + 1):
        for _ in range(terms_per_degree):
            num = rng.choice([n for n in range(-6, 7) if n != 0])
            coeff = rational(num, rng.randint(1, 12))
            total = total + _random_bracket(rng, genus, trunc, degree).scale(coeff)
    return LieSeries(total)

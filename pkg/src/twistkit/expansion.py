"""Magnus expansions as data: per-generator logarithms up to a stated valid degree.

The builtin table carries the known low-degree values of a symplectic
expansion (valid through degree 3).  Components beyond the valid degree are
unknown, not zero: evaluation that would read them raises
UnspecifiedDegreeError instead of silently truncating, and the boundary check
reports UNVERIFIABLE when asked beyond its data.
"""

from __future__ import annotations

import enum
import json
import threading
from dataclasses import dataclass, field
from random import Random

from .algebra import TensorSeries, rational
from .series import is_lie_element, random_lie_series, texp, tlog
from .symplectic import AlgebraAutomorphism, check_preserves_omega, omega
from .words import GroupWord, generator_name, zeta


class UnspecifiedDegreeError(ValueError):
    """A computation would read expansion data beyond its authoritative degree."""


class BoundaryStatus(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNVERIFIABLE = "unverifiable"


@dataclass
class ExpansionTable:
    """Logarithm values ell(generator) of a Magnus expansion, one per generator.

    ``valid_degree`` is the highest tensor degree at which the stored data is
    authoritative.  The degree-1 part of ell(a_i) must be A_i and of ell(b_i)
    must be B_i.
    """

    genus: int
    valid_degree: int
    ell_values: dict[int, TensorSeries]
    name: str = "custom"
    _cache: dict = field(default_factory=dict, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.valid_degree < 1:
            raise ValueError("valid_degree must be >= 1")
        for code in range(2 * self.genus):
            if code not in self.ell_values:
                raise ValueError(f"missing log value for generator {generator_name(code)}")
            series = self.ell_values[code]
            if series.genus != self.genus:
                raise ValueError("log value has wrong genus")
            if series.max_degree() > self.valid_degree:
                raise ValueError("log value carries terms beyond valid_degree")
            expected = TensorSeries.letter(self.genus, series.trunc, code)
            if series.degree_part(1) != expected or series.constant_term() != 0:
                raise ValueError(
                    f"log value of {generator_name(code)} violates the Magnus "
                    "condition (degree-1 part must be the matching homology letter)"
                )

    def ell_of_generator(self, code: int, trunc: int) -> TensorSeries:
        if trunc > self.valid_degree:
            raise UnspecifiedDegreeError(
                f"expansion {self.name!r} is authoritative only through degree "
                f"{self.valid_degree}; requested {trunc}"
            )
        stored = self.ell_values[code]
        return stored.truncate(trunc) if stored.trunc >= trunc else stored.with_trunc(trunc)

    def _exp_of_generator(self, code: int, sign: int, trunc: int) -> TensorSeries:
        key = (code, sign, trunc)
        cached = self._cache.get(key)
        if cached is None:
            series = self.ell_of_generator(code, trunc)
            cached = texp(series if sign == 1 else -series)
            with self._lock:
                self._cache[key] = cached
        return cached


def theta(table: ExpansionTable, word: GroupWord, trunc: int) -> TensorSeries:
    """The expansion of a group word: the ordered product of exp(+-ell(generator))."""
    if word.genus != table.genus:
        raise ValueError(f"word genus {word.genus} != table genus {table.genus}")
    result = TensorSeries.unit(table.genus, trunc)
    for gen, exp in word.letters:
        result = result * table._exp_of_generator(gen, exp, trunc)
    return result


def ell(table: ExpansionTable, word: GroupWord, trunc: int) -> TensorSeries:
    """log of theta(word), truncated."""
    return tlog(theta(table, word, trunc))


def massuyeau_theta0(genus: int) -> ExpansionTable:
    """The builtin symplectic expansion data, valid through degree 3.

    ell(a_i) = A_i + (1/2)[A_i,B_i] - (1/12)[B_i,[A_i,B_i]]
               + (1/2) sum_{j<i} [A_i,[A_j,B_j]]
    ell(b_i) = B_i - (1/2)[A_i,B_i] + (1/12)[A_i,[A_i,B_i]]
               + (1/4)[B_i,[A_i,B_i]] + (1/2) sum_{j<i} [B_i,[A_j,B_j]]
    """
    trunc = 3
    half = rational(1, 2)
    twelfth = rational(1, 12)
    quarter = rational(1, 4)
    values: dict[int, TensorSeries] = {}
    c = [
        TensorSeries.letter(genus, trunc, 2 * i).commutator(
            TensorSeries.letter(genus, trunc, 2 * i + 1)
        )
        for i in range(genus)
    ]
    for i in range(genus):
        a = TensorSeries.letter(genus, trunc, 2 * i)
        b = TensorSeries.letter(genus, trunc, 2 * i + 1)
        cross_a = TensorSeries.zero(genus, trunc)
        cross_b = TensorSeries.zero(genus, trunc)
        for j in range(i):
            cross_a = cross_a + a.commutator(c[j])
            cross_b = cross_b + b.commutator(c[j])
        values[2 * i] = (
            a
            + c[i].scale(half)
            - b.commutator(c[i]).scale(twelfth)
            + cross_a.scale(half)
        )
        values[2 * i + 1] = (
            b
            - c[i].scale(half)
            + a.commutator(c[i]).scale(twelfth)
            + b.commutator(c[i]).scale(quarter)
            + cross_b.scale(half)
        )
    return ExpansionTable(genus, 3, values, name="builtin:massuyeau")


def check_boundary(table: ExpansionTable, trunc_claim: int) -> BoundaryStatus:
    """Compare theta(zeta) with exp(omega) through the claimed degree.

    Degrees at most valid_degree are decidable from the stored data (products
    never lower degree); beyond that the answer is UNVERIFIABLE, not FAILS.
    """
    if trunc_claim < 0:
        raise ValueError("claim degree must be >= 0")
    if trunc_claim > table.valid_degree:
        return BoundaryStatus.UNVERIFIABLE
    lhs = theta(table, zeta(table.genus), trunc_claim)
    rhs = texp(omega(table.genus, trunc_claim))
    return BoundaryStatus.HOLDS if lhs == rhs else BoundaryStatus.FAILS


def check_magnus_degree_one(table: ExpansionTable, words: list[GroupWord]) -> bool:
    """Degree-1 part of theta(w) must be the abelianization of w."""
    for word in words:
        value = theta(table, word, 1)
        if value.degree_part(1) != word.abelianization(1):
            return False
    return True


def perturb_expansion(table: ExpansionTable, u: AlgebraAutomorphism) -> ExpansionTable:
    """Compose with an automorphism in IA_omega: ell'(gen) = U(ell(gen)).

    Preserves the Magnus condition (U is the identity on degree 1) and the
    boundary condition (U fixes omega, hence exp(omega)).
    """
    if u.genus != table.genus:
        raise ValueError("automorphism genus does not match table")
    identity = AlgebraAutomorphism.identity(u.genus, u.trunc)
    if u.degree_one_matrix() != identity.degree_one_matrix():
        raise ValueError("perturbation must act as the identity on degree 1")
    if not check_preserves_omega(u):
        raise ValueError("perturbation must preserve omega")
    new_valid = min(table.valid_degree, u.trunc)
    values = {}
    for code in range(2 * table.genus):
        stored = table.ell_of_generator(code, new_valid)
        lifted = stored.with_trunc(u.trunc) if u.trunc > new_valid else stored
        image = u.apply(lifted)
        values[code] = image.truncate(new_valid) if image.trunc > new_valid else image
    return ExpansionTable(table.genus, new_valid, values, name=f"{table.name}+perturbed")


def random_magnus_table(
    genus: int, valid_degree: int, seed: int, name: str | None = None
) -> ExpansionTable:
    """A synthetic full-precision table: letter plus random Lie higher terms.

    Satisfies the Magnus condition and per-degree primitivity by construction;
    no boundary condition is imposed.  Used to validate identities whose
    proofs do not depend on the boundary behavior.
    """
    rng = Random(seed)
    values = {}
    for code in range(2 * genus):
        series = TensorSeries.letter(genus, valid_degree, code)
        if valid_degree >= 2:
            higher = random_lie_series(
                genus, valid_degree, 2, rng.randrange(2**30)
            ).series
            series = series + higher
        values[code] = series
    return ExpansionTable(
        genus, valid_degree, values, name=name or f"synthetic:{seed}"
    )


def check_log_values_lie(table: ExpansionTable) -> bool:
    """Per-degree Dynkin criterion on every stored generator logarithm."""
    return all(
        is_lie_element(table.ell_values[code]) for code in range(2 * table.genus)
    )


# -- JSON import/export -----------------------------------------------------


def table_to_json(table: ExpansionTable) -> dict:
    return {
        "genus": table.genus,
        "valid_degree": table.valid_degree,
        "name": table.name,
        "entries": [
            {
                "gen": generator_name(code),
                "terms": table.ell_values[code].to_json_terms(),
            }
            for code in range(2 * table.genus)
        ],
    }


def table_from_json(data: dict) -> ExpansionTable:
    genus = int(data["genus"])
    valid_degree = int(data["valid_degree"])
    values: dict[int, TensorSeries] = {}
    for entry in data["entries"]:
        name = entry["gen"]
        code = generator_code_from_name(name)
        values[code] = TensorSeries.from_json_terms(genus, valid_degree, entry["terms"])
    return ExpansionTable(genus, valid_degree, values, name=str(data.get("name", "custom")))


def generator_code_from_name(name: str) -> int:
    kind, index = name[:1], name[1:]
    if kind not in ("a", "b") or not index.isdigit():
        raise ValueError(f"not a generator name: {name!r}")
    return 2 * (int(index) - 1) + (0 if kind == "a" else 1)


def save_table(table: ExpansionTable, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(table_to_json(table), handle, indent=2, sort_keys=True)
        handle.write("\n")


def load_table(path: str) -> ExpansionTable:
    with open(path, "r", encoding="utf-8") as handle:
        return table_from_json(json.load(handle))

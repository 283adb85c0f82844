"""Free-group words in the surface group and the figure-eight configuration table.

Generators are written a1, b1, ..., ag, bg; a word is a freely reduced
sequence of signed generators.  The boundary word is the product of the
commutators [a_i, b_i], with xy meaning "x traversed first".

A Configuration names one of the seven ways a loop with a single transverse
double point can sit on the surface, together with its parameters; config_xy
returns the corresponding pair of based loops (x, y) in terms of the
symplectic generators.  The pairs are consumed as data here, not derived from
surface topology.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from .algebra import TensorSeries, rational

SignedLetter = tuple[int, int]  # (generator code, +1 or -1)


class ConfigurationError(ValueError):
    """Raised when configuration parameters violate their stated ranges."""


def generator_code(kind: str, index: int) -> int:
    if kind not in ("a", "b") or index < 1:
        raise ValueError(f"not a generator: {kind}{index}")
    return 2 * (index - 1) + (0 if kind == "a" else 1)


def generator_name(code: int) -> str:
    return f"{'a' if code % 2 == 0 else 'b'}{code // 2 + 1}"


def _reduce(letters) -> tuple[SignedLetter, ...]:
    stack: list[SignedLetter] = []
    for gen, exp in letters:
        if stack and stack[-1][0] == gen and stack[-1][1] == -exp:
            stack.pop()
        else:
            stack.append((gen, exp))
    return tuple(stack)


@dataclass(frozen=True)
class GroupWord:
    """A freely reduced word in the rank-2g free group."""

    genus: int
    letters: tuple[SignedLetter, ...]

    def __post_init__(self) -> None:
        if self.genus < 1:
            raise ValueError(f"genus must be >= 1, got {self.genus}")
        reduced = _reduce(self.letters)
        for gen, exp in reduced:
            if not (0 <= gen < 2 * self.genus):
                raise ValueError(f"generator code {gen} outside genus {self.genus}")
            if exp not in (1, -1):
                raise ValueError(f"exponent must be +1 or -1, got {exp}")
        object.__setattr__(self, "letters", reduced)

    @classmethod
    def identity(cls, genus: int) -> "GroupWord":
        return cls(genus, ())

    @classmethod
    def generator(cls, genus: int, kind: str, index: int, exp: int = 1) -> "GroupWord":
        return cls(genus, ((generator_code(kind, index), exp),))

    def is_identity(self) -> bool:
        return not self.letters

    def render(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(
            generator_name(g) if e == 1 else f"{generator_name(g)}^-1"
            for g, e in self.letters
        )

    def __repr__(self) -> str:
        return f"GroupWord(g={self.genus}: {self.render()})"

    def exponent_sums(self) -> dict[int, int]:
        sums: dict[int, int] = {}
        for gen, exp in self.letters:
            sums[gen] = sums.get(gen, 0) + exp
        return {g: s for g, s in sums.items() if s}

    def abelianization(self, trunc: int) -> TensorSeries:
        """The homology class as a degree-1 series (a_i -> A_i, b_i -> B_i)."""
        terms = {(gen,): rational(s) for gen, s in self.exponent_sums().items()}
        return TensorSeries(self.genus, trunc, terms)


def concat(x: GroupWord, y: GroupWord) -> GroupWord:
    if x.genus != y.genus:
        raise ValueError(f"genus mismatch: {x.genus} vs {y.genus}")
    return GroupWord(x.genus, x.letters + y.letters)


def invert(x: GroupWord) -> GroupWord:
    return GroupWord(x.genus, tuple((g, -e) for g, e in reversed(x.letters)))


def power(x: GroupWord, m: int) -> GroupWord:
    if m < 0:
        return power(invert(x), -m)
    result = GroupWord.identity(x.genus)
    for _ in range(m):
        result = concat(result, x)
    return result


def group_commutator(x: GroupWord, y: GroupWord) -> GroupWord:
    return concat(concat(x, y), concat(invert(x), invert(y)))


def apply_endomorphism(mapping: dict[int, GroupWord], w: GroupWord) -> GroupWord:
    """Extend a generator assignment to the whole word as a group homomorphism."""
    result = GroupWord.identity(w.genus)
    for gen, exp in w.letters:
        image = mapping[gen]
        result = concat(result, image if exp == 1 else invert(image))
    return result


def zeta(genus: int) -> GroupWord:
    """The boundary word: the product of [a_i, b_i] for i = 1..g."""
    result = GroupWord.identity(genus)
    for i in range(1, genus + 1):
        result = concat(
            result,
            group_commutator(
                GroupWord.generator(genus, "a", i), GroupWord.generator(genus, "b", i)
            ),
        )
    return result


def _partial_zeta(genus: int, start: int, stop: int) -> GroupWord:
    """Product of [a_i, b_i] for i = start..stop (inclusive)."""
    result = GroupWord.identity(genus)
    for i in range(start, stop + 1):
        result = concat(
            result,
            group_commutator(
                GroupWord.generator(genus, "a", i), GroupWord.generator(genus, "b", i)
            ),
        )
    return result


_TOKEN = re.compile(r"\[|\]|,|zeta\(\d+\)|[ab]\d+(\^-?\d+)?|\S")


def parse_group_word(text: str, genus: int) -> GroupWord:
    """Parse the text syntax: generators with optional ^exp, [x,y] commutators, zeta(g)."""
    tokens = [m.group(0) for m in _TOKEN.finditer(text)]
    pos = 0

    def parse_atom() -> GroupWord:
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"unexpected end of word: {text!r}")
        tok = tokens[pos]
        if tok == "[":
            pos += 1
            left = parse_atom()
            if pos >= len(tokens) or tokens[pos] != ",":
                raise ValueError(f"expected ',' in commutator: {text!r}")
            pos += 1
            right = parse_atom()
            if pos >= len(tokens) or tokens[pos] != "]":
                raise ValueError(f"unclosed commutator: {text!r}")
            pos += 1
            return group_commutator(left, right)
        if tok.startswith("zeta("):
            pos += 1
            g = int(tok[5:-1])
            if g != genus:
                raise ValueError(f"zeta({g}) in a genus-{genus} word")
            return zeta(genus)
        match = re.fullmatch(r"([ab])(\d+)(?:\^(-?\d+))?", tok)
        if not match:
            raise ValueError(f"bad token {tok!r} in {text!r}")
        kind, index, exp = match.group(1), int(match.group(2)), match.group(3)
        if index > genus:
            raise ValueError(f"generator {tok} outside genus {genus}")
        pos += 1
        return power(GroupWord.generator(genus, kind, index), int(exp) if exp else 1)

    result = GroupWord.identity(genus)
    while pos < len(tokens):
        result = concat(result, parse_atom())
    return result


CONFIG_KINDS = ("I", "II-a", "II-b", "III-a", "III-b", "IV-a", "IV-b")


@dataclass(frozen=True)
class Configuration:
    """One of the seven double-point loop configurations with its parameters.

    I needs g >= 2; II-a/II-b need 1 <= h <= g; III-a/III-b need 2 <= h <= g;
    IV-a/IV-b need k1, k2 >= 1 and h >= 0 with k1 + k2 + h = g.
    """

    kind: str
    g: int
    h: int | None = None
    k1: int | None = None
    k2: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in CONFIG_KINDS:
            raise ConfigurationError(f"unknown configuration kind {self.kind!r}")
        if self.g < 1:
            raise ConfigurationError(f"genus must be >= 1, got {self.g}")
        if self.kind == "I":
            if self.g < 2:
                raise ConfigurationError("case I requires g >= 2")
        elif self.kind in ("II-a", "II-b"):
            if self.h is None or not (1 <= self.h <= self.g):
                raise ConfigurationError(
                    f"case {self.kind} requires 1 <= h <= g, got h={self.h}, g={self.g}"
                )
        elif self.kind in ("III-a", "III-b"):
            if self.h is None or not (2 <= self.h <= self.g):
                raise ConfigurationError(
                    f"case {self.kind} requires 2 <= h <= g, got h={self.h}, g={self.g}"
                )
        else:  # IV-a, IV-b
            if self.k1 is None or self.k2 is None or self.k1 < 1 or self.k2 < 1:
                raise ConfigurationError(
                    f"case {self.kind} requires k1, k2 >= 1, got k1={self.k1}, k2={self.k2}"
                )
            h = 0 if self.h is None else self.h
            if h < 0 or self.k1 + self.k2 + h != self.g:
                raise ConfigurationError(
                    f"case {self.kind} requires k1 + k2 + h = g with h >= 0, "
                    f"got {self.k1} + {self.k2} + {h} != {self.g}"
                )

    @property
    def is_separating(self) -> bool:
        return self.kind != "I"

    @property
    def special_h1(self) -> bool:
        """II-a/II-b with h = 1: two of the three neighborhood boundary curves agree."""
        return self.kind in ("II-a", "II-b") and self.h == 1

    def label(self) -> str:
        params = [f"g={self.g}"]
        if self.h is not None:
            params.append(f"h={self.h}")
        if self.k1 is not None:
            params.append(f"k1={self.k1}")
        if self.k2 is not None:
            params.append(f"k2={self.k2}")
        return f"{self.kind}({', '.join(params)})"

    def params_dict(self) -> dict[str, int]:
        out = {"g": self.g}
        if self.h is not None:
            out["h"] = self.h
        if self.k1 is not None:
            out["k1"] = self.k1
        if self.k2 is not None:
            out["k2"] = self.k2
        return out


def config_xy(config: Configuration) -> tuple[GroupWord, GroupWord]:
    """The based-loop pair (x, y) for a configuration, as listed in the case table."""
    g = config.g
    if config.kind == "I":
        return (
            GroupWord.generator(g, "a", 1),
            GroupWord.generator(g, "a", 2),
        )
    if config.kind in ("II-a", "II-b", "III-a", "III-b"):
        h = config.h
        x = concat(_partial_zeta(g, 1, h), GroupWord.generator(g, "b", h))
        if config.kind == "II-a":
            y = invert(GroupWord.generator(g, "b", h))
        elif config.kind == "II-b":
            y = invert(_partial_zeta(g, 1, h))
        elif config.kind == "III-a":
            ah = GroupWord.generator(g, "a", h)
            y = concat(
                concat(ah, invert(GroupWord.generator(g, "b", h))), invert(ah)
            )
        else:  # III-b
            y = invert(_partial_zeta(g, 1, h - 1))
        return x, y
    # IV-a, IV-b
    k1, k2 = config.k1, config.k2
    x = _partial_zeta(g, 1, k1)
    if config.kind == "IV-a":
        y = _partial_zeta(g, k1 + 1, k1 + k2)
    else:  # IV-b
        y = invert(_partial_zeta(g, 1, k1 + k2))
    return x, y

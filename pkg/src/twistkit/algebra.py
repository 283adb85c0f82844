"""Exact sparse arithmetic in the degree-truncated tensor algebra on surface homology.

The ground vector space H has dimension 2g with ordered basis
A_1 < B_1 < ... < A_g < B_g.  A basis letter is stored as a small integer
code ``2*(i-1)`` for A_i and ``2*(i-1)+1`` for B_i, a monomial is a tuple of
codes, and a series is a sparse mapping from monomials to exact rationals.
Degrees above the truncation window are discarded by every operation, so a
series is an element of the quotient of the completed tensor algebra by the
ideal of degree > trunc.

All values are immutable after construction and every operation is a pure
function; no floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

try:  # gmpy2's C-implemented rationals are ~15x faster; semantics are identical
    from gmpy2 import mpq as rational
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    rational = Fraction

Word = tuple[int, ...]
EMPTY_WORD: Word = ()
RATIONAL_ZERO = rational(0)
RATIONAL_ONE = rational(1)


class StructureMismatchError(ValueError):
    """Raised when two series with different genus or truncation are combined."""


class SeriesDomainError(ValueError):
    """Raised when a series violates the domain of the requested operation."""


def letter_code(kind: str, index: int) -> int:
    if kind not in ("A", "B"):
        raise ValueError(f"letter kind must be 'A' or 'B', got {kind!r}")
    if index < 1:
        raise ValueError(f"letter index must be >= 1, got {index}")
    return 2 * (index - 1) + (0 if kind == "A" else 1)


def letter_name(code: int) -> str:
    kind = "A" if code % 2 == 0 else "B"
    return f"{kind}{code // 2 + 1}"


def letter_from_name(name: str) -> int:
    kind, index = name[:1], name[1:]
    if kind not in ("A", "B") or not index.isdigit() or int(index) < 1:
        raise ValueError(f"not a letter name: {name!r}")
    return letter_code(kind, int(index))


@dataclass(frozen=True)
class Letter:
    """A homology basis letter A_i or B_i.

    The total order A_1 < B_1 < A_2 < B_2 < ... (by ``code``) is fixed
    throughout the package.
    """

    kind: str
    index: int

    def __post_init__(self) -> None:
        letter_code(self.kind, self.index)  # validates

    @property
    def code(self) -> int:
        return letter_code(self.kind, self.index)

    @property
    def name(self) -> str:
        return f"{self.kind}{self.index}"

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        return cls("A" if code % 2 == 0 else "B", code // 2 + 1)

    def __lt__(self, other: "Letter") -> bool:
        return self.code < other.code


def word_names(word: Word) -> list[str]:
    return [letter_name(c) for c in word]


def word_from_names(names: list[str]) -> Word:
    return tuple(letter_from_name(n) for n in names)


def as_rational(value):
    """Coerce an int, Fraction, mpq, or 'p/q' string to the internal rational type.

    Floats are rejected: the whole engine is exact.
    """
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not allowed")
    try:
        return rational(value)
    except Exception as exc:
        raise TypeError(
            f"coefficients must be exact rationals, got {type(value).__name__}"
        ) from exc


class TensorSeries:
    """A sparse element of the tensor algebra truncated above degree ``trunc``.

    ``terms`` maps words (tuples of letter codes) to nonzero exact rationals.  Zero
    coefficients are pruned on construction, so structural equality coincides
    with mathematical equality.  Instances are immutable; arithmetic returns
    fresh objects.
    """

    __slots__ = ("genus", "trunc", "_terms")

    def __init__(self, genus: int, trunc: int, terms=None, *, _internal: bool = False):
        if genus < 1:
            raise ValueError(f"genus must be >= 1, got {genus}")
        if trunc < 0:
            raise ValueError(f"trunc must be >= 0, got {trunc}")
        self.genus = genus
        self.trunc = trunc
        if terms is None:
            terms = {}
        if _internal:
            # caller guarantees valid words, rational values, no zeros
            self._terms = terms
        else:
            clean: dict = {}
            nletters = 2 * genus
            for word, coeff in terms.items():
                word = tuple(word)
                if len(word) > trunc:
                    raise ValueError(f"word {word_names(word)} exceeds truncation {trunc}")
                if any(not (0 <= c < nletters) for c in word):
                    raise ValueError(f"word {word} has letters outside genus {genus}")
                c = as_rational(coeff)
                if c != 0:
                    c0 = clean.get(word)
                    total = c if c0 is None else c0 + c
                    if total:
                        clean[word] = total
                    elif word in clean:
                        del clean[word]
            self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, genus: int, trunc: int) -> "TensorSeries":
        return cls(genus, trunc, {}, _internal=True)

    @classmethod
    def unit(cls, genus: int, trunc: int) -> "TensorSeries":
        return cls(genus, trunc, {EMPTY_WORD: RATIONAL_ONE})

    @classmethod
    def single(cls, genus: int, trunc: int, word, coeff=1) -> "TensorSeries":
        return cls(genus, trunc, {tuple(word): coeff})

    @classmethod
    def letter(cls, genus: int, trunc: int, code: int) -> "TensorSeries":
        return cls(genus, trunc, {(code,): RATIONAL_ONE})

    # -- basic accessors ---------------------------------------------------

    @property
    def terms(self) -> dict:
        """A copy of the underlying term mapping (word -> exact rational)."""
        return dict(self._terms)

    def coefficient(self, word):
        return self._terms.get(tuple(word), RATIONAL_ZERO)

    def constant_term(self):
        return self._terms.get(EMPTY_WORD, RATIONAL_ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int:
        """Smallest degree with a nonzero term; trunc + 1 for the zero series."""
        if not self._terms:
            return self.trunc + 1
        return min(len(w) for w in self._terms)

    def max_degree(self) -> int:
        if not self._terms:
            return 0
        return max(len(w) for w in self._terms)

    def support_degrees(self) -> set[int]:
        return {len(w) for w in self._terms}

    # -- projections -------------------------------------------------------

    def degree_part(self, m: int) -> "TensorSeries":
        if not (0 <= m <= self.trunc):
            raise ValueError(f"degree {m} outside truncation window 0..{self.trunc}")
        terms = {w: c for w, c in self._terms.items() if len(w) == m}
        return TensorSeries(self.genus, self.trunc, terms, _internal=True)

    def truncate(self, new_trunc: int) -> "TensorSeries":
        """Project onto degrees <= new_trunc; the result lives in the smaller window."""
        if not (0 <= new_trunc <= self.trunc):
            raise ValueError(f"truncation {new_trunc} outside window 0..{self.trunc}")
        terms = {w: c for w, c in self._terms.items() if len(w) <= new_trunc}
        return TensorSeries(self.genus, new_trunc, terms, _internal=True)

    def with_trunc(self, new_trunc: int) -> "TensorSeries":
        """The same element viewed in a window of at least the current max degree."""
        if new_trunc < self.max_degree():
            raise ValueError("with_trunc would drop stored terms; use truncate")
        return TensorSeries(self.genus, new_trunc, dict(self._terms), _internal=True)

    # -- arithmetic --------------------------------------------------------

    def _check_compatible(self, other: "TensorSeries") -> None:
        if not isinstance(other, TensorSeries):
            raise TypeError(f"expected TensorSeries, got {type(other).__name__}")
        if self.genus != other.genus or self.trunc != other.trunc:
            raise StructureMismatchError(
                f"genus/trunc mismatch: ({self.genus},{self.trunc}) vs ({other.genus},{other.trunc})"
            )

    def __add__(self, other: "TensorSeries") -> "TensorSeries":
        self._check_compatible(other)
        terms = dict(self._terms)
        for w, c in other._terms.items():
            total = terms.get(w, 0) + c
            if total:
                terms[w] = total
            elif w in terms:
                del terms[w]
        return TensorSeries(self.genus, self.trunc, terms, _internal=True)

    def __sub__(self, other: "TensorSeries") -> "TensorSeries":
        self._check_compatible(other)
        terms = dict(self._terms)
        for w, c in other._terms.items():
            total = terms.get(w, 0) - c
            if total:
                terms[w] = total
            elif w in terms:
                del terms[w]
        return TensorSeries(self.genus, self.trunc, terms, _internal=True)

    def __neg__(self) -> "TensorSeries":
        return TensorSeries(
            self.genus, self.trunc, {w: -c for w, c in self._terms.items()}, _internal=True
        )

    def scale(self, scalar) -> "TensorSeries":
        c = as_rational(scalar)
        if c == 0:
            return TensorSeries.zero(self.genus, self.trunc)
        return TensorSeries(
            self.genus, self.trunc, {w: c * v for w, v in self._terms.items()}, _internal=True
        )

    def __rmul__(self, scalar) -> "TensorSeries":
        return self.scale(scalar)

    def __mul__(self, other) -> "TensorSeries":
        if isinstance(other, (int, Fraction)) or type(other) is type(RATIONAL_ONE):
            return self.scale(other)
        self._check_compatible(other)
        trunc = self.trunc
        # bucket the right factor by degree so overflowing products are skipped early
        by_deg: dict[int, list] = {}
        for w, c in other._terms.items():
            by_deg.setdefault(len(w), []).append((w, c))
        degrees = sorted(by_deg)
        out: dict = {}
        for wa, ca in self._terms.items():
            room = trunc - len(wa)
            if room < 0:
                continue
            for d in degrees:
                if d > room:
                    break
                for wb, cb in by_deg[d]:
                    w = wa + wb
                    total = out.get(w, 0) + ca * cb
                    if total:
                        out[w] = total
                    elif w in out:
                        del out[w]
        return TensorSeries(self.genus, trunc, out, _internal=True)

    def commutator(self, other: "TensorSeries") -> "TensorSeries":
        return self * other - other * self

    # -- comparison and rendering ------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorSeries)
            and self.genus == other.genus
            and self.trunc == other.trunc
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.genus, self.trunc, frozenset(self._terms.items())))

    def sorted_terms(self) -> list:
        """Terms sorted by (degree, lexicographic word): the canonical order."""
        return sorted(self._terms.items(), key=lambda wc: (len(wc[0]), wc[0]))

    def render(self) -> str:
        """Canonical text form, e.g. ``1 + A1*B1 - B1*A1`` or ``1/2*A1``."""
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for word, coeff in self.sorted_terms():
            mono = "*".join(word_names(word))
            mag = abs(coeff)
            if not word:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"TensorSeries(g={self.genus}, trunc={self.trunc}: {self.render()})"

    # -- serialization -----------------------------------------------------

    def to_json_terms(self) -> list[dict]:
        return [
            {"word": word_names(w), "coeff": str(c)} for w, c in self.sorted_terms()
        ]

    @classmethod
    def from_json_terms(cls, genus: int, trunc: int, data: list[dict]) -> "TensorSeries":
        terms: dict = {}
        for entry in data:
            word = word_from_names(entry["word"])
            terms[word] = terms.get(word, RATIONAL_ZERO) + rational(str(entry["coeff"]))
        return cls(genus, trunc, terms)


def commutator(a: TensorSeries, b: TensorSeries) -> TensorSeries:
    """The ring commutator a*b - b*a."""
    return a.commutator(b)

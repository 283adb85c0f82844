"""The symplectic form, the cyclic map N, derivations, and omega-preserving automorphisms.

A tensor t with zero constant term acts as a derivation through the pairing
contraction on the leading letter of each word: the word X u (X a letter)
sends a letter Y to (Y.X) u.  Cyclic tensors N(v) are exactly the derivations
killing the symplectic form; exponentials of such derivations and symplectic
linear substitutions generate the automorphisms this module manipulates.

The intersection pairing is (A_i.B_i) = +1 by default; ``sign=-1`` flips the
global orientation convention everywhere it matters.

One finite-window bookkeeping rule matters throughout: a tensor of degree
p acts as a derivation whose letter images have degree p - 1, so inside a
window of top degree D the image parts of degree D draw on tensor parts of
degree D + 1.  A derivation built from a tensor that was itself produced at
window D is therefore only exact through image degree D - 1, and identities
between tensor-built and conjugation-built derivations must be compared
through one degree below the working window (see derivations_equal_through).
"""

from __future__ import annotations

from random import Random

from .algebra import RATIONAL_ONE, RATIONAL_ZERO, StructureMismatchError, TensorSeries, Word, as_rational, rational
from .linalg import invert_matrix, is_nilpotent


def intersection(a: int, b: int, sign: int = 1) -> int:
    """Pairing of basis letters by code: (A_i.B_i) = sign, (B_i.A_i) = -sign, else 0."""
    if a // 2 != b // 2:
        return 0
    if a % 2 == 0 and b % 2 == 1:
        return sign
    if a % 2 == 1 and b % 2 == 0:
        return -sign
    return 0


def omega(genus: int, trunc: int) -> TensorSeries:
    """The symplectic form: sum of A_i B_i - B_i A_i (zero in windows below degree 2)."""
    if trunc < 2:
        return TensorSeries.zero(genus, trunc)
    terms = {}
    for i in range(genus):
        terms[(2 * i, 2 * i + 1)] = RATIONAL_ONE
        terms[(2 * i + 1, 2 * i)] = rational(-1)
    return TensorSeries(genus, trunc, terms)


def nmap(u: TensorSeries) -> TensorSeries:
    """Cyclic symmetrization: X1...Xm -> sum of all cyclic rotations; kills degree 0."""
    out: dict = {}
    for word, coeff in u.terms.items():
        for i in range(len(word)):
            rotated = word[i:] + word[:i]
            total = out.get(rotated, 0) + coeff
            if total:
                out[rotated] = total
            elif rotated in out:
                del out[rotated]
    return TensorSeries(u.genus, u.trunc, out, _internal=True)


class Derivation:
    """A derivation of the truncated algebra, stored by its values on letters."""

    __slots__ = ("genus", "trunc", "images")

    def __init__(self, genus: int, trunc: int, images: dict[int, TensorSeries]):
        self.genus = genus
        self.trunc = trunc
        self.images = {
            code: images.get(code, TensorSeries.zero(genus, trunc))
            for code in range(2 * genus)
        }
        for img in self.images.values():
            if img.genus != genus or img.trunc != trunc:
                raise StructureMismatchError("derivation image has wrong genus/trunc")

    @classmethod
    def zero(cls, genus: int, trunc: int) -> "Derivation":
        return cls(genus, trunc, {})

    def is_zero(self) -> bool:
        return all(img.is_zero() for img in self.images.values())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Derivation)
            and self.genus == other.genus
            and self.trunc == other.trunc
            and self.images == other.images
        )

    def __repr__(self) -> str:
        body = ", ".join(
            f"{_name(code)} -> {img.render()}" for code, img in sorted(self.images.items())
        )
        return f"Derivation(g={self.genus}, trunc={self.trunc}: {body})"

    def apply(self, u: TensorSeries) -> TensorSeries:
        """Leibniz extension: each letter of each word is replaced by its image."""
        if u.genus != self.genus or u.trunc != self.trunc:
            raise StructureMismatchError("derivation and series have different genus/trunc")
        out: dict = {}
        trunc = self.trunc
        for word, coeff in u.terms.items():
            for i, code in enumerate(word):
                image = self.images[code]
                if image.is_zero():
                    continue
                prefix, suffix = word[:i], word[i + 1 :]
                room = trunc - len(word) + 1
                for v, c in image.terms.items():
                    if len(v) > room:
                        continue
                    w = prefix + v + suffix
                    total = out.get(w, 0) + coeff * c
                    if total:
                        out[w] = total
                    elif w in out:
                        del out[w]
        return TensorSeries(self.genus, self.trunc, out, _internal=True)

    def __add__(self, other: "Derivation") -> "Derivation":
        self._check(other)
        return Derivation(
            self.genus,
            self.trunc,
            {c: self.images[c] + other.images[c] for c in self.images},
        )

    def __sub__(self, other: "Derivation") -> "Derivation":
        self._check(other)
        return Derivation(
            self.genus,
            self.trunc,
            {c: self.images[c] - other.images[c] for c in self.images},
        )

    def __neg__(self) -> "Derivation":
        return Derivation(self.genus, self.trunc, {c: -img for c, img in self.images.items()})

    def scale(self, scalar) -> "Derivation":
        return Derivation(
            self.genus, self.trunc, {c: img.scale(scalar) for c, img in self.images.items()}
        )

    def _check(self, other: "Derivation") -> None:
        if self.genus != other.genus or self.trunc != other.trunc:
            raise StructureMismatchError("derivations have different genus/trunc")

    def degree_one_matrix(self) -> list[list]:
        """Matrix of the degree-preserving letter action; entry [i][j] is coeff of letter i in D(letter j)."""
        n = 2 * self.genus
        return [
            [self.images[j].coefficient((i,)) for j in range(n)] for i in range(n)
        ]


def _name(code: int) -> str:
    from .algebra import letter_name

    return letter_name(code)


def derivation_from_tensor(t: TensorSeries, sign: int = 1) -> Derivation:
    """The derivation of a tensor in T-hat_1, contracting on the first letter of each word."""
    if t.constant_term() != 0:
        raise ValueError("tensor must have zero constant term to define a derivation")
    images: dict[int, dict] = {code: {} for code in range(2 * t.genus)}
    for word, coeff in t.terms.items():
        lead, rest = word[0], word[1:]
        for y in range(2 * t.genus):
            pairing = intersection(y, lead, sign)
            if pairing == 0:
                continue
            bucket = images[y]
            total = bucket.get(rest, 0) + pairing * coeff
            if total:
                bucket[rest] = total
            elif rest in bucket:
                del bucket[rest]
    return Derivation(
        t.genus,
        t.trunc,
        {
            code: TensorSeries(t.genus, t.trunc, terms, _internal=True)
            for code, terms in images.items()
        },
    )


def apply_derivation(d: Derivation, u: TensorSeries) -> TensorSeries:
    return d.apply(u)


def derivation_bracket(d1: Derivation, d2: Derivation) -> Derivation:
    """The commutator of derivations, letter-wise D1(D2(.)) - D2(D1(.))."""
    d1._check(d2)
    images = {
        code: d1.apply(d2.images[code]) - d2.apply(d1.images[code])
        for code in d1.images
    }
    return Derivation(d1.genus, d1.trunc, images)


class AlgebraAutomorphism:
    """A filter-preserving algebra automorphism, stored by its values on letters.

    Each image must have zero constant term and the induced degree-1 linear
    map must be invertible; both are checked on construction.
    """

    __slots__ = ("genus", "trunc", "images", "_word_cache", "_inverse_memo")

    def __init__(self, genus: int, trunc: int, images: dict[int, TensorSeries]):
        self.genus = genus
        self.trunc = trunc
        self.images = {code: images[code] for code in range(2 * genus)}
        for img in self.images.values():
            if img.genus != genus or img.trunc != trunc:
                raise StructureMismatchError("automorphism image has wrong genus/trunc")
            if img.constant_term() != 0:
                raise ValueError("automorphism images must have zero constant term")
        try:
            invert_matrix(self.degree_one_matrix())
        except ValueError as exc:
            raise ValueError(f"degree-1 part is not invertible: {exc}") from exc
        # memo of word -> image product; idempotent, shared across apply calls
        self._word_cache: dict[Word, TensorSeries] = {
            (): TensorSeries.unit(genus, trunc)
        }
        self._inverse_memo: "AlgebraAutomorphism | None" = None

    @classmethod
    def identity(cls, genus: int, trunc: int) -> "AlgebraAutomorphism":
        return cls(
            genus,
            trunc,
            {c: TensorSeries.letter(genus, trunc, c) for c in range(2 * genus)},
        )

    @classmethod
    def from_linear(cls, genus: int, trunc: int, matrix) -> "AlgebraAutomorphism":
        """The multiplicative extension of an invertible linear map on H."""
        images = {}
        for j in range(2 * genus):
            terms = {(i,): as_rational(matrix[i][j]) for i in range(2 * genus) if matrix[i][j]}
            images[j] = TensorSeries(genus, trunc, terms)
        return cls(genus, trunc, images)

    def degree_one_matrix(self) -> list[list]:
        n = 2 * self.genus
        return [[self.images[j].coefficient((i,)) for j in range(n)] for i in range(n)]

    def _word_image(self, word: Word) -> TensorSeries:
        cache = self._word_cache
        hit = cache.get(word)
        if hit is not None:
            return hit
        # extend from the longest cached prefix, one letter at a time
        i = len(word) - 1
        while i > 0 and word[:i] not in cache:
            i -= 1
        current = cache[word[:i]]
        for j in range(i, len(word)):
            current = current * self.images[word[j]]
            cache[word[: j + 1]] = current
        return current

    def apply(self, u: TensorSeries) -> TensorSeries:
        """Substitute letter images and multiply out, truncating as usual."""
        if u.genus != self.genus or u.trunc != self.trunc:
            raise StructureMismatchError("automorphism and series have different genus/trunc")
        out: dict = {}
        for word, coeff in u._terms.items():
            for w, c in self._word_image(word)._terms.items():
                total = out.get(w, 0) + coeff * c
                if total:
                    out[w] = total
                elif w in out:
                    del out[w]
        return TensorSeries(self.genus, self.trunc, out, _internal=True)

    def compose(self, other: "AlgebraAutomorphism") -> "AlgebraAutomorphism":
        """self after other: (self.compose(other))(u) = self(other(u))."""
        if self.genus != other.genus or self.trunc != other.trunc:
            raise StructureMismatchError("automorphisms have different genus/trunc")
        return AlgebraAutomorphism(
            self.genus,
            self.trunc,
            {code: self.apply(img) for code, img in other.images.items()},
        )

    def inverse(self) -> "AlgebraAutomorphism":
        """Degree-by-degree inversion: linear part first, then an IA fixed point."""
        if self._inverse_memo is not None:
            return self._inverse_memo
        genus, trunc = self.genus, self.trunc
        linear_inverse = AlgebraAutomorphism.from_linear(
            genus, trunc, invert_matrix(self.degree_one_matrix())
        )
        phi = self.compose(linear_inverse)  # linear part is now the identity
        psi = {c: TensorSeries.letter(genus, trunc, c) for c in range(2 * genus)}
        for _ in range(trunc):
            psi = {
                c: TensorSeries.letter(genus, trunc, c)
                - (phi.apply(img) - img)
                for c, img in psi.items()
            }
        result = linear_inverse.compose(AlgebraAutomorphism(genus, trunc, psi))
        self._inverse_memo = result
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraAutomorphism)
            and self.genus == other.genus
            and self.trunc == other.trunc
            and self.images == other.images
        )

    def __repr__(self) -> str:
        body = ", ".join(
            f"{_name(code)} -> {img.render()}" for code, img in sorted(self.images.items())
        )
        return f"AlgebraAutomorphism(g={self.genus}, trunc={self.trunc}: {body})"


class NonConvergentExponentialError(ValueError):
    """The letter action of the derivation does not exponentiate at this truncation."""


def exp_derivation(d: Derivation) -> AlgebraAutomorphism:
    """The automorphism exp(D), letter-wise sum of D^k/k!.

    Converges exactly when the degree-preserving part of the letter action is
    nilpotent (automatic when every image lies in degrees >= 2).  Images with
    constant terms are rejected: the result would not be filter-preserving.
    """
    for img in d.images.values():
        if img.constant_term() != 0:
            raise NonConvergentExponentialError(
                "derivation lowers the filtration (letter image has a constant term)"
            )
    if not is_nilpotent(d.degree_one_matrix()):
        raise NonConvergentExponentialError(
            "degree-preserving letter action is not nilpotent"
        )
    images = {}
    # crude global bound on how long a vanishing tail can take to appear
    max_steps = (d.trunc + 1) * (d.trunc * 2 * d.genus + 2)
    for code in range(2 * d.genus):
        total = TensorSeries.letter(d.genus, d.trunc, code)
        term = total
        k = 0
        while not term.is_zero():
            k += 1
            if k > max_steps:
                raise NonConvergentExponentialError(
                    f"exponential of letter {_name(code)} did not terminate"
                )
            term = d.apply(term).scale(rational(1, k))
            total = total + term
        images[code] = total
    return AlgebraAutomorphism(d.genus, d.trunc, images)


def conjugate_derivation(u: AlgebraAutomorphism, d: Derivation) -> Derivation:
    """U D U^{-1} as a derivation, computed letter-wise."""
    if u.genus != d.genus or u.trunc != d.trunc:
        raise StructureMismatchError("automorphism and derivation have different genus/trunc")
    u_inverse = u.inverse()
    images = {
        code: u.apply(d.apply(u_inverse.images[code])) for code in range(2 * u.genus)
    }
    return Derivation(u.genus, u.trunc, images)


def derivations_equal_through(d1: Derivation, d2: Derivation, degree: int) -> bool:
    """Compare letter images up to the given degree (inclusive)."""
    d1._check(d2)
    return all(
        d1.images[c].truncate(degree) == d2.images[c].truncate(degree) for c in d1.images
    )


def tensor_of_derivation(d: Derivation, sign: int = 1) -> TensorSeries:
    """Invert the contraction correspondence: sign * sum of B_i D(A_i) - A_i D(B_i).

    Recovers the cyclic tensor of a derivation in the image of the
    correspondence.  The degree-p part of the tensor reads image parts of
    degree p - 1, so the result is exact through the full window whenever the
    images are.
    """
    total = TensorSeries.zero(d.genus, d.trunc)
    for i in range(d.genus):
        a = TensorSeries.letter(d.genus, d.trunc, 2 * i)
        b = TensorSeries.letter(d.genus, d.trunc, 2 * i + 1)
        total = total + b * d.images[2 * i] - a * d.images[2 * i + 1]
    return total.scale(sign)


def conjugation_law_check(
    u: AlgebraAutomorphism, v: TensorSeries, sign: int = 1
) -> bool:
    """Executable form of U (Nv) U^{-1} = N(Uv) for omega-preserving U.

    The conjugated derivation is converted back to its cyclic tensor, which
    is exact through the full window, and compared there against N(U(v));
    the letter images themselves are also compared through one degree less,
    where both pipelines are exact.
    """
    conjugated = conjugate_derivation(u, derivation_from_tensor(nmap(v), sign))
    target = nmap(u.apply(v))
    if tensor_of_derivation(conjugated, sign) != target:
        return False
    return derivations_equal_through(
        conjugated, derivation_from_tensor(target, sign), u.trunc - 1
    )


def check_preserves_omega(u: AlgebraAutomorphism) -> bool:
    w = omega(u.genus, u.trunc)
    return u.apply(w) == w


def check_kills_omega(d: Derivation) -> bool:
    return d.apply(omega(d.genus, d.trunc)).is_zero()


# -- generators for randomized laws ----------------------------------------


def transvection(
    genus: int, trunc: int, direction: TensorSeries, scalar=1, sign: int = 1
) -> AlgebraAutomorphism:
    """The symplectic linear map Y -> Y + c (Y.X) X for a degree-1 tensor X."""
    if direction.support_degrees() not in ({1}, set()):
        raise ValueError("transvection direction must be a degree-1 tensor")
    c = as_rational(scalar)
    images = {}
    for code in range(2 * genus):
        pairing = sum(
            (
                coeff * intersection(code, x[0], sign)
                for x, coeff in direction.terms.items()
            ),
            RATIONAL_ZERO,
        )
        images[code] = TensorSeries.letter(genus, trunc, code) + direction.scale(c * pairing)
    return AlgebraAutomorphism(genus, trunc, images)


def random_symplectic_linear(
    genus: int, trunc: int, rng: Random, factors: int = 2, sign: int = 1
) -> AlgebraAutomorphism:
    """A product of random transvections; preserves omega by construction."""
    result = AlgebraAutomorphism.identity(genus, trunc)
    for _ in range(factors):
        support = rng.sample(range(2 * genus), k=rng.choice((1, 2)) if genus > 1 else 1)
        terms = {(code,): rational(rng.choice((-1, 1))) for code in support}
        direction = TensorSeries(genus, trunc, terms)
        result = result.compose(
            transvection(genus, trunc, direction, rng.choice([-1, 1]), sign)
        )
    return result


def random_ia_omega(
    genus: int,
    trunc: int,
    rng: Random,
    words: int = 2,
    max_degree: int | None = None,
    sign: int = 1,
) -> AlgebraAutomorphism:
    """exp of the derivation of N(random tensor in T-hat_3): an IA_omega element."""
    cap = max_degree if max_degree is not None else min(trunc, 4)
    terms = {}
    for _ in range(words):
        degree = rng.randint(3, max(3, cap))
        word = tuple(rng.randrange(2 * genus) for _ in range(degree))
        coeff = rational(rng.choice([-2, -1, 1, 2]), rng.randint(1, 4))
        terms[word] = terms.get(word, RATIONAL_ZERO) + coeff
    tensor = nmap(TensorSeries(genus, trunc, terms))
    return exp_derivation(derivation_from_tensor(tensor, sign))

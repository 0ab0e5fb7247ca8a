"""Unital *-endomorphisms of O_d given by generator images.

An endomorphism is pinned down by the images g_i of the d generators; it
is well defined exactly when the images satisfy the same relations as the
generators themselves, which is a finite, exactly decidable check.
"""

from __future__ import annotations

from typing import Sequence

from .algebra import Element, Monomial, identity, isometry
from .errors import AlphabetMismatchError, EndomorphismValidationError, IndexRangeError


class Endomorphism:
    """Generator-image description of a unital *-endomorphism.

    ``apply`` extends the images multiplicatively and *-compatibly to any
    element; word images are cached per instance since recursive systems
    apply the same endomorphism over and over.
    """

    __slots__ = ("d", "images", "_word_cache")

    def __init__(self, images: Sequence[Element]):
        images = tuple(images)
        if not images:
            raise IndexRangeError("an endomorphism needs at least two images")
        d = images[0].d
        if len(images) != d:
            raise IndexRangeError(f"expected {d} images, got {len(images)}")
        if any(img.d != d for img in images):
            raise AlphabetMismatchError("images carry mixed alphabet sizes")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_word_cache", {(): identity(d)})

    def __setattr__(self, name, value):
        raise AttributeError("Endomorphism is immutable")

    def image_of_word(self, word: tuple[int, ...]) -> Element:
        cached = self._word_cache.get(word)
        if cached is None:
            cached = self.image_of_word(word[:-1]) * self.images[word[-1] - 1]
            self._word_cache[word] = cached
        return cached

    def apply(self, x: Element) -> Element:
        if x.d != self.d:
            raise AlphabetMismatchError(f"d mismatch: {x.d} vs {self.d}")
        out = Element.zero(self.d)
        for m, c in x.terms.items():
            img = self.image_of_word(m.create) * self.image_of_word(m.annihilate).adjoint()
            out = out + img.scale(c)
        return out

    def __call__(self, x: Element) -> Element:
        return self.apply(x)

    def relation_failures(self) -> list[str]:
        """Which defining relations the images break (empty when valid)."""
        failures = []
        unit = identity(self.d)
        for i, gi in enumerate(self.images, start=1):
            gi_star = gi.adjoint()
            for j, gj in enumerate(self.images, start=1):
                prod = gi_star * gj
                expected = unit if i == j else Element.zero(self.d)
                if not prod.equals(expected):
                    failures.append(
                        f"image of s{i}* s{j}: expected {expected}, got {prod.normal_form()}"
                    )
        total = Element.zero(self.d)
        for g in self.images:
            total = total + g * g.adjoint()
        if not total.equals(unit):
            failures.append(f"completeness: sum of g_i g_i* = {total.normal_form()} != I")
        return failures


def validate_endomorphism(images: Sequence[Element]) -> Endomorphism:
    """Build an endomorphism, raising with the failed relations if any."""
    endo = Endomorphism(images)
    failures = endo.relation_failures()
    if failures:
        raise EndomorphismValidationError(failures)
    return endo


def apply_endomorphism(e: Endomorphism, x: Element) -> Element:
    return e.apply(x)


def canonical_endomorphism(x: Element) -> Element:
    """X -> sum_i s_i X s_i*, computed by direct sandwiching."""
    out = {}
    for m, c in x.terms.items():
        for i in range(1, x.d + 1):
            out[Monomial((i,) + m.create, (i,) + m.annihilate)] = c
    return Element(x.d, out)


def identity_endomorphism(d: int) -> Endomorphism:
    return Endomorphism([isometry(d, i) for i in range(1, d + 1)])


def rho(d: int) -> Endomorphism:
    """The canonical endomorphism, as a generator-image description."""
    return Endomorphism([canonical_endomorphism(isometry(d, i)) for i in range(1, d + 1)])


def phi1() -> Endomorphism:
    """A gauge-charge-mixing endomorphism of O_2: s1 -> s1 s1* + s2 s1 s2*, s2 -> s2 s2."""
    g1 = Element(2, {((1,), (1,)): 1, ((2, 1), (2,)): 1})
    g2 = Element.word(2, (2, 2), ())
    return validate_endomorphism([g1, g2])


def phi2() -> Endomorphism:
    """A second charge-mixing endomorphism of O_2: s1 -> s2 s1* + s1 s2 s2*, s2 -> s1 s1."""
    g1 = Element(2, {((2,), (1,)): 1, ((1, 2), (2,)): 1})
    g2 = Element.word(2, (1, 1), ())
    return validate_endomorphism([g1, g2])


def is_rho(e: Endomorphism) -> bool:
    """Exact test whether the images coincide with the canonical endomorphism's."""
    return all(
        e.images[i - 1].equals(canonical_endomorphism(isometry(e.d, i)))
        for i in range(1, e.d + 1)
    )

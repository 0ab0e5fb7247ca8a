"""Exact arithmetic in the Cuntz algebra O_d.

O_d (d >= 2) is generated by isometries s_1, ..., s_d subject to

    s_i* s_j = delta_ij I,        s_1 s_1* + ... + s_d s_d* = I.

The first relation reduces any product of generators and adjoints to a
single word s_{a1}..s_{am} (s_{b1}..s_{bn})*, so finite rational linear
combinations of such words are closed under the *-algebra operations.
The second relation makes words of different lengths linearly dependent;
``normal_form`` resolves that by raising every word of an element to a
common length per grade, which yields a canonical representative and a
decision procedure for equality.

Orientation convention: a :class:`Monomial` stores the creation word
``(a1..am)`` and the annihilation word ``(b1..bn)``, where the operator
meaning of the annihilation word is ``(s_{b1}..s_{bn})* = s_{bn}*..s_{b1}*``.

Coefficients are :class:`fractions.Fraction`; every construction in scope
has rational (indeed half-integer) coefficients, so floating point never
enters and equality checks are exact.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from typing import Iterator, NamedTuple, Optional, Union

from .errors import AlphabetMismatchError, IndexRangeError, ParseError

Scalar = Union[int, Fraction]


class Monomial(NamedTuple):
    """A word s_{a1}..s_{am} (s_{b1}..s_{bn})* given by its two index tuples.

    The empty word on both sides is the identity I.
    """

    create: tuple[int, ...]
    annihilate: tuple[int, ...]

    @property
    def excess(self) -> int:
        """Charge of the word under the gauge grading: |create| - |annihilate|."""
        return len(self.create) - len(self.annihilate)

    @property
    def word_length(self) -> int:
        """Total number of letters, |create| + |annihilate|."""
        return len(self.create) + len(self.annihilate)

    @property
    def is_identity(self) -> bool:
        return not self.create and not self.annihilate

    def adjoint(self) -> "Monomial":
        return Monomial(self.annihilate, self.create)

    def __str__(self) -> str:
        return monomial_to_text(self)


IDENTITY_WORD = Monomial((), ())

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _check_d(d) -> int:
    if not isinstance(d, int) or d < 2:
        raise IndexRangeError(f"alphabet size must be an integer >= 2, got {d!r}")
    return d


def _check_word(word, d) -> tuple[int, ...]:
    word = tuple(word)
    for i in word:
        if not isinstance(i, int) or not 1 <= i <= d:
            raise IndexRangeError(f"index {i!r} outside 1..{d}")
    return word


def monomial_mul(x: Monomial, y: Monomial, d: Optional[int] = None) -> Optional[Monomial]:
    """Reduced product of two words, or None when the product is zero.

    The annihilation word of ``x`` meets the creation word of ``y`` head-on;
    the orthogonality relation cancels matching letters one by one, so the
    product survives exactly when one word is a prefix of the other.
    """
    if d is not None:
        _check_word(x.create, d), _check_word(x.annihilate, d)
        _check_word(y.create, d), _check_word(y.annihilate, d)
    xa, yc = x.annihilate, y.create
    la, lc = len(xa), len(yc)
    if la <= lc:
        if xa != yc[:la]:
            return None
        return Monomial(x.create + yc[la:], y.annihilate)
    if yc != xa[:lc]:
        return None
    return Monomial(x.create, y.annihilate + xa[lc:])


def term_sort_key(m: Monomial):
    """Canonical term order: by grade, then creation length, then words."""
    return (m.excess, len(m.create), m.create, m.annihilate)


class Element:
    """Finite rational linear combination of words, tagged with d.

    Instances are immutable by convention: all operations return new
    elements and ``terms`` must be treated as read-only.  Structural
    equality (``==``) compares stored terms; mathematical equality in O_d
    is :meth:`equals`, which canonicalizes the difference first.
    """

    __slots__ = ("d", "_terms")

    def __init__(self, d: int, terms=None):
        _check_d(d)
        clean: dict[Monomial, Fraction] = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for m, c in items:
                m = Monomial(_check_word(m[0], d), _check_word(m[1], d))
                c = Fraction(c)
                if not c:
                    continue
                acc = clean.get(m)
                c = c if acc is None else acc + c
                if c:
                    clean[m] = c
                elif m in clean:
                    del clean[m]
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "_terms", clean)

    # -- construction -----------------------------------------------------

    @classmethod
    def _make(cls, d: int, terms: dict) -> "Element":
        """Internal constructor: caller guarantees valid, zero-free terms."""
        self = object.__new__(cls)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "_terms", terms)
        return self

    @classmethod
    def zero(cls, d: int) -> "Element":
        return cls(d)

    @classmethod
    def word(cls, d: int, create, annihilate, coeff: Scalar = 1) -> "Element":
        return cls(d, {(tuple(create), tuple(annihilate)): coeff})

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        """The term map (read-only by convention)."""
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.sorted_terms())

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: term_sort_key(kv[0]))

    def coefficient(self, create, annihilate) -> Fraction:
        return self._terms.get(Monomial(tuple(create), tuple(annihilate)), _ZERO)

    # -- ring operations ---------------------------------------------------

    def _require_same_d(self, other: "Element"):
        if self.d != other.d:
            raise AlphabetMismatchError(f"d mismatch: {self.d} vs {other.d}")

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        self._require_same_d(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            acc = out.get(m)
            c = c if acc is None else acc + c
            if c:
                out[m] = c
            elif m in out:
                del out[m]
        return Element._make(self.d, out)

    def __neg__(self) -> "Element":
        return Element._make(self.d, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def scale(self, k: Scalar) -> "Element":
        k = Fraction(k)
        if not k:
            return Element._make(self.d, {})
        return Element._make(self.d, {m: c * k for m, c in self._terms.items()})

    def __mul__(self, other) -> "Element":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        self._require_same_d(other)
        out: dict[Monomial, Fraction] = {}
        get = out.get
        for (xc, xa), ca in self._terms.items():
            la = len(xa)
            for (yc, ya), cb in other._terms.items():
                lc = len(yc)
                if la <= lc:
                    if xa != yc[:la]:
                        continue
                    key = Monomial(xc + yc[la:], ya)
                else:
                    if yc != xa[:lc]:
                        continue
                    key = Monomial(xc, ya + xa[lc:])
                c = ca * cb
                acc = get(key)
                if acc is not None:
                    c = acc + c
                if c:
                    out[key] = c
                elif key in out:
                    del out[key]
        return Element._make(self.d, out)

    def __rmul__(self, other) -> "Element":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def adjoint(self) -> "Element":
        """The *-involution: reverses words, keeps (rational) coefficients."""
        return Element._make(
            self.d, {Monomial(a, c): k for (c, a), k in self._terms.items()}
        )

    # -- canonical form ----------------------------------------------------

    def normal_form(self) -> "Element":
        """Canonical representative: per grade, all words raised to equal length.

        Within each grade class the completeness relation lets a word of
        creation length l < L absorb every suffix of length L - l; after
        raising, like words merge and zero coefficients are pruned.  The
        result is idempotent, and x.equals(y) iff (x - y).normal_form()
        is zero.
        """
        by_excess: dict[int, list[tuple[Monomial, Fraction]]] = {}
        for m, c in self._terms.items():
            by_excess.setdefault(m.excess, []).append((m, c))
        out: dict[Monomial, Fraction] = {}
        alphabet = range(1, self.d + 1)
        for grade_terms in by_excess.values():
            target = max(len(m.create) for m, _ in grade_terms)
            for m, c in grade_terms:
                gap = target - len(m.create)
                if gap == 0:
                    keys = (m,)
                else:
                    keys = (
                        Monomial(m.create + w, m.annihilate + w)
                        for w in itertools.product(alphabet, repeat=gap)
                    )
                for key in keys:
                    acc = out.get(key)
                    cc = c if acc is None else acc + c
                    if cc:
                        out[key] = cc
                    elif key in out:
                        del out[key]
        return Element._make(self.d, out)

    def equals(self, other: "Element") -> bool:
        """Mathematical equality in O_d (exact, via the normal form)."""
        if not isinstance(other, Element):
            raise TypeError(f"cannot compare Element with {type(other).__name__}")
        self._require_same_d(other)
        diff = self - other
        if diff.is_zero:
            return True
        return diff.normal_form().is_zero

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.d == other.d and self._terms == other._terms

    __hash__ = None  # mutable-dict backed; use equals()/structural __eq__ only

    # -- grading -----------------------------------------------------------

    def grades(self) -> set[int]:
        return {m.excess for m in self._terms}

    def __str__(self) -> str:
        return element_to_text(self)

    def __repr__(self) -> str:
        return f"Element(d={self.d}, <{element_to_text(self)}>)"


# -- functional aliases for the element operations ---------------------------


def element_add(x: Element, y: Element) -> Element:
    return x + y


def element_scale(x: Element, k: Scalar) -> Element:
    return x.scale(k)


def element_mul(x: Element, y: Element) -> Element:
    return x * y


def adjoint(x: Element) -> Element:
    return x.adjoint()


def normal_form(x: Element) -> Element:
    return x.normal_form()


def equals(x: Element, y: Element) -> bool:
    return x.equals(y)


def identity(d: int) -> Element:
    """The unit I of O_d."""
    return Element.word(d, (), ())


def isometry(d: int, i: int) -> Element:
    """The generating isometry s_i of O_d."""
    _check_d(d)
    if not 1 <= i <= d:
        raise IndexRangeError(f"index {i} outside 1..{d}")
    return Element.word(d, (i,), ())


def raise_monomial(x: Monomial, d: int) -> Element:
    """Rewrite a word via completeness: x = sum_i s_{A i} (s_{B i})^adj."""
    x = Monomial(_check_word(x[0], d), _check_word(x[1], d))
    return Element._make(
        d,
        {Monomial(x.create + (i,), x.annihilate + (i,)): _ONE for i in range(1, d + 1)},
    )


def grade_decompose(x: Element) -> dict[int, Element]:
    """Split an element by gauge charge |create| - |annihilate|."""
    parts: dict[int, dict[Monomial, Fraction]] = {}
    for m, c in x.terms.items():
        parts.setdefault(m.excess, {})[m] = c
    return {g: Element._make(x.d, t) for g, t in sorted(parts.items())}


def is_u1_invariant(x: Element) -> bool:
    """True iff only charge-0 words occur (the gauge-invariant subalgebra)."""
    return all(m.excess == 0 for m in x.terms)


def commutator(x: Element, y: Element) -> Element:
    return x * y - y * x


def anticommutator(x: Element, y: Element) -> Element:
    return x * y + y * x


# -- word enumeration (used by the condition sweeps) ------------------------


def iter_words(d: int, length: int) -> Iterator[tuple[int, ...]]:
    return itertools.product(range(1, d + 1), repeat=length)


def iter_monomials(d: int, max_length: int) -> Iterator[Monomial]:
    """All words of total letter count <= max_length, in a fixed order."""
    for total in range(max_length + 1):
        for la in range(total, -1, -1):
            for create in iter_words(d, la):
                for annihilate in iter_words(d, total - la):
                    yield Monomial(create, annihilate)


# -- text rendering and parsing ---------------------------------------------
#
# Grammar: terms joined by '+'/'-'; a term is an optional 'p/q' or integer
# coefficient followed by letters 's1', 's[12]' (indices > 9 bracketed),
# each optionally starred, or 'I'.  Creation letters precede starred ones;
# the starred letters appear in operator order, i.e. the reverse of the
# stored annihilation word.


def _letter(i: int, star: bool) -> str:
    body = f"s[{i}]" if i > 9 else f"s{i}"
    return body + "*" if star else body


def monomial_to_text(m: Monomial) -> str:
    if m.is_identity:
        return "I"
    parts = [_letter(i, False) for i in m.create]
    parts += [_letter(i, True) for i in reversed(m.annihilate)]
    return " ".join(parts)


def element_to_text(x: Element) -> str:
    if x.is_zero:
        return "0"
    pieces: list[str] = []
    for m, c in x.sorted_terms():
        negative = c < 0
        mag = -c if negative else c
        body = monomial_to_text(m)
        if mag != 1:
            body = f"{mag} {body}"
        if not pieces:
            pieces.append(f"- {body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)


_TOKEN = re.compile(
    r"(?P<frac>\d+/\d+)|(?P<int>\d+)|(?P<letter>s(?:\[\d+\]|\d)\*?)|(?P<ident>I)|(?P<sign>[+-])|(?P<junk>\S)"
)


def _tokenize(text: str):
    for match in _TOKEN.finditer(text):
        kind = match.lastgroup
        if kind == "junk":
            raise ParseError(f"unexpected character {match.group()!r} at {match.start()}")
        yield kind, match.group()


def parse_element(text: str, d: int) -> Element:
    """Parse the grammar emitted by :func:`element_to_text`."""
    _check_d(d)
    terms: list[tuple[Monomial, Fraction]] = []
    sign = 1
    coeff: Optional[Fraction] = None
    create: list[int] = []
    annihilate_rev: list[int] = []
    in_term = False
    dangling_sign = False

    def flush():
        nonlocal sign, coeff, create, annihilate_rev, in_term
        if not in_term:
            raise ParseError("empty term")
        c = coeff if coeff is not None else _ONE
        mono = Monomial(tuple(create), tuple(reversed(annihilate_rev)))
        terms.append((mono, sign * c))
        sign, coeff, create, annihilate_rev, in_term = 1, None, [], [], False

    for kind, tok in _tokenize(text):
        if kind != "sign":
            dangling_sign = False
        if kind == "sign":
            if dangling_sign:
                raise ParseError("consecutive signs")
            if in_term:
                flush()
            dangling_sign = True
            if tok == "-":
                sign = -sign
        elif kind in ("frac", "int"):
            if in_term or coeff is not None:
                raise ParseError(f"unexpected number {tok!r}")
            coeff = Fraction(tok)
            in_term = True  # a bare number stands for that multiple of I
        elif kind == "ident":
            if create or annihilate_rev:
                raise ParseError("I may not follow letters")
            in_term = True
        elif kind == "letter":
            star = tok.endswith("*")
            digits = tok.rstrip("*")[1:].strip("[]")
            idx = int(digits)
            if not 1 <= idx <= d:
                raise IndexRangeError(f"index {idx} outside 1..{d}")
            if star:
                annihilate_rev.append(idx)
            elif annihilate_rev:
                raise ParseError("creation letter after an annihilation letter")
            else:
                create.append(idx)
            in_term = True
    if in_term:
        flush()
    elif dangling_sign or coeff is not None or create or annihilate_rev:
        raise ParseError("trailing incomplete term")
    if not terms:
        raise ParseError("empty input")
    return Element(d, terms)

"""Reduced words in a free product of finite groups.

An element of ``G_0 * G_1 * ... * G_{m-1}`` is stored in its unique normal
form: a tuple of letters ``(factor, element)`` with no identity letters and
no two adjacent letters from the same factor.

Display syntax (used by the CLI and in reports): each letter is written
``g<factor>^<element>``, letters are joined by ``*``, and the empty word is
``1``. For example ``g0^1*g1^1*g0^2``.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import FamilyMismatch, IndexOutOfRange, TrivialFactor, WordSyntaxError
from .groups import FiniteGroup


class Letter(NamedTuple):
    factor: int
    element: int


class FactorFamily:
    """An ordered, finite family of nontrivial finite groups."""

    __slots__ = ("factors", "_key", "_hash")

    def __init__(self, factors: Sequence[FiniteGroup]):
        for i, g in enumerate(factors):
            if g.order < 2:
                raise TrivialFactor(f"factor {i} is trivial; free factors must be nontrivial")
        self.factors: tuple[FiniteGroup, ...] = tuple(factors)
        self._key = tuple(g.table for g in self.factors)
        self._hash = hash(self._key)

    def __len__(self) -> int:
        return len(self.factors)

    def __getitem__(self, i: int) -> FiniteGroup:
        return self.factors[i]

    def __iter__(self):
        return iter(self.factors)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return isinstance(other, FactorFamily) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return "FactorFamily(" + " * ".join(str(g) for g in self.factors) + ")"

    @property
    def identity(self) -> ReducedWord:
        return ReducedWord(self, ())

    def letters(self, factors: Iterable[int] | None = None) -> list[Letter]:
        """All nonidentity letters, ordered by factor then element."""
        idx = range(len(self.factors)) if factors is None else sorted(factors)
        return [Letter(i, x) for i in idx for x in self.factors[i].nonidentity]


class ReducedWord:
    """An element of a free product, held in reduced form.

    Construct through :func:`reduce`, :func:`embed` or arithmetic on existing
    words; the constructor trusts its input.
    """

    __slots__ = ("family", "letters")

    def __init__(self, family: FactorFamily, letters: tuple[Letter, ...]):
        self.family = family
        self.letters = letters

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ReducedWord):
            return NotImplemented
        return self.letters == other.letters and self.family == other.family

    def __hash__(self) -> int:
        return hash(self.letters)

    def __lt__(self, other: ReducedWord) -> bool:
        return (len(self.letters), self.letters) < (len(other.letters), other.letters)

    def __mul__(self, other: ReducedWord) -> ReducedWord:
        return multiply(self, other)

    def __invert__(self) -> ReducedWord:
        return invert(self)

    def __repr__(self) -> str:
        return f"ReducedWord({format_word(self)})"

    def __str__(self) -> str:
        return format_word(self)

    @property
    def is_identity(self) -> bool:
        return not self.letters


def _push(stack: list[Letter], factors: tuple[FiniteGroup, ...], i: int, x: int) -> None:
    g = factors[i]
    if x == g.identity:
        return
    if stack and stack[-1].factor == i:
        y = g.table[stack[-1].element][x]
        if y == g.identity:
            stack.pop()
        else:
            stack[-1] = Letter(i, y)
    else:
        stack.append(Letter(i, x))


def reduce(raw: Iterable[tuple[int, int]], family: FactorFamily) -> ReducedWord:
    """Return the normal form of the product of the letters in ``raw``."""
    factors = family.factors
    stack: list[Letter] = []
    for pos, (i, x) in enumerate(raw):
        if not 0 <= i < len(factors):
            raise IndexOutOfRange(f"letter {pos}: unknown factor {i}")
        if not 0 <= x < factors[i].order:
            raise IndexOutOfRange(f"letter {pos}: element {x} out of range for factor {i}")
        _push(stack, factors, i, x)
    return ReducedWord(family, tuple(stack))


def multiply(u: ReducedWord, v: ReducedWord) -> ReducedWord:
    if u.family is not v.family and u.family != v.family:
        raise FamilyMismatch("cannot multiply words over different factor families")
    if not u.letters:
        return v
    if not v.letters:
        return u
    factors = u.family.factors
    stack = list(u.letters)
    for k, (i, x) in enumerate(v.letters):
        if stack and stack[-1].factor == i:
            _push(stack, factors, i, x)
        else:
            # past the cancellation boundary; the rest of v is already reduced
            return ReducedWord(u.family, tuple(stack) + v.letters[k:])
    return ReducedWord(u.family, tuple(stack))


def invert(u: ReducedWord) -> ReducedWord:
    factors = u.family.factors
    return ReducedWord(
        u.family, tuple(Letter(i, factors[i].inverse[x]) for i, x in reversed(u.letters))
    )


def conjugate(g: ReducedWord, u: ReducedWord) -> ReducedWord:
    """``g * u * g^-1``."""
    return multiply(multiply(g, u), invert(g))


def omega(u: ReducedWord) -> int | None:
    """Factor index of the last syllable, or None for the identity."""
    return u.letters[-1].factor if u.letters else None


def embed(family: FactorFamily, i: int, x: int) -> ReducedWord:
    """The image of ``x`` in factor ``i`` under the canonical embedding."""
    if not 0 <= i < len(family):
        raise IndexOutOfRange(f"unknown factor {i}")
    g = family[i]
    if not 0 <= x < g.order:
        raise IndexOutOfRange(f"element {x} out of range for factor {i}")
    return ReducedWord(family, () if x == g.identity else (Letter(i, x),))


def retract(i: int, u: ReducedWord) -> int:
    """Image of ``u`` under the retraction onto factor ``i`` killing all others."""
    g = u.family[i]
    acc = g.identity
    for j, x in u.letters:
        if j == i:
            acc = g.table[acc][x]
    return acc


def enumerate_words(
    family: FactorFamily, bound: int, factors: Iterable[int] | None = None
) -> Iterator[ReducedWord]:
    """Every reduced word of length at most ``bound``, each once.

    Order is by length, then lexicographic on ``(factor, element)`` letters.
    ``factors`` restricts the letters to the given factor indices.
    """
    letters = family.letters(factors)

    def extend(prefix: tuple[Letter, ...], remaining: int) -> Iterator[tuple[Letter, ...]]:
        if remaining == 0:
            yield prefix
            return
        last = prefix[-1].factor if prefix else None
        for let in letters:
            if let.factor != last:
                yield from extend(prefix + (let,), remaining - 1)

    for k in range(bound + 1):
        for letters_k in extend((), k):
            yield ReducedWord(family, letters_k)


def count_words(family: FactorFamily, bound: int) -> int:
    """Closed-form count of reduced words of length at most ``bound``."""
    sizes = [g.order - 1 for g in family]
    total = 1
    ending = list(sizes)  # words of the current length ending in factor i
    for k in range(1, bound + 1):
        if k > 1:
            s = sum(ending)
            ending = [n * (s - e) for n, e in zip(sizes, ending)]
        total += sum(ending)
    return total


def random_word(family: FactorFamily, length: int, rng) -> ReducedWord:
    """A uniformly built reduced word of exactly ``length`` letters.

    Each letter picks a factor uniformly among those differing from the
    previous letter's factor, then a nonidentity element uniformly.
    ``rng`` is a :class:`numpy.random.Generator`.
    """
    m = len(family)
    if length > 0 and m == 0 or length > 1 and m == 1:
        raise ValueError(f"no reduced word of length {length} over {family!r}")
    letters = []
    last = None
    for _ in range(length):
        if last is None:
            i = int(rng.integers(m))
        else:
            i = int(rng.integers(m - 1))
            if i >= last:
                i += 1
        nonid = family[i].nonidentity
        letters.append(Letter(i, nonid[int(rng.integers(len(nonid)))]))
        last = i
    return ReducedWord(family, tuple(letters))


def format_word(u: ReducedWord | Sequence[tuple[int, int]]) -> str:
    letters = u.letters if isinstance(u, ReducedWord) else u
    if not letters:
        return "1"
    return "*".join(f"g{i}^{x}" for i, x in letters)


_TOKEN = re.compile(r"g(\d+)\^(\d+)")


def parse_word(text: str, family: FactorFamily) -> ReducedWord:
    """Parse display syntax into a word and reduce it.

    Input need not be reduced. Errors carry the character position.
    """
    s = text.strip()
    if s == "1":
        return family.identity
    if not s:
        raise WordSyntaxError("empty word; write 1 for the identity", 0)
    raw = []
    pos = text.index(s[0])
    for chunk in s.split("*"):
        m = _TOKEN.fullmatch(chunk.strip())
        if m is None:
            raise WordSyntaxError(f"malformed letter {chunk!r}, expected g<factor>^<element>", pos)
        i, x = int(m.group(1)), int(m.group(2))
        if i >= len(family):
            raise WordSyntaxError(f"unknown factor {i}", pos)
        if x >= family[i].order:
            raise WordSyntaxError(f"element {x} out of range for factor {i}", pos)
        raw.append((i, x))
        pos += len(chunk) + 1
    return reduce(raw, family)

"""Words in the reflection generators, plus the shared text format.

A word is the formal product of the reflections in its letters, leftmost
letter acting last.  The text format is whitespace-separated tokens, each
either ``g<k>`` (the k-th root of the active base, counted from 0) or an
explicit root ``(+|-)e:<c1>,...,<cnu>`` meaning ``+-e + sum c_i*s_i``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError, WordParseError
from .lattice import ReflectableBase, Root, Semilattice, root_in_rx


@dataclass(frozen=True)
class Word:
    """A finite product of reflections in non-isotropic roots of one rank."""

    rank: int
    letters: tuple[Root, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        for a in self.letters:
            if a.rank != self.rank:
                raise DomainError(f"letter {a} has rank {a.rank}, word has rank {self.rank}")
            if a.sign == 0:
                raise DomainError("word letters must be non-isotropic roots")

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "Word") -> "Word":
        if self.rank != other.rank:
            raise DomainError("cannot concatenate words of different ranks")
        return Word(self.rank, self.letters + other.letters)

    @classmethod
    def empty(cls, rank: int) -> "Word":
        return cls(rank, ())

    @classmethod
    def from_indices(cls, base: ReflectableBase, indices: Iterable[int]) -> "Word":
        roots = base.roots
        letters = []
        for k in indices:
            if not 0 <= k < len(roots):
                raise DomainError(f"generator index {k} out of range 0..{len(roots) - 1}")
            letters.append(roots[k])
        return cls(base.rank, tuple(letters))

    def normalized(self) -> "Word":
        """The same group element written with sign +1 letters (w_a = w_{-a})."""
        return Word(self.rank, tuple(a.normalized() for a in self.letters))

    def reversed(self) -> "Word":
        """The inverse word: letters are involutions, so reversal inverts the product."""
        return Word(self.rank, self.letters[::-1])

    def to_indices(self, base: ReflectableBase) -> tuple[int, ...]:
        """Express every letter as a base generator; raises if one is not in the base."""
        lookup = {a: k for k, a in enumerate(base.roots)}
        out = []
        for a in self.letters:
            k = lookup.get(a.normalized())
            if k is None:
                raise DomainError(f"letter {a} is not a generator of the base")
            out.append(k)
        return tuple(out)


def validate_word(s: Semilattice, word: Word) -> None:
    """Check every letter against the root system over ``s``."""
    if word.rank != s.rank:
        raise DomainError(f"word has rank {word.rank}, semilattice has rank {s.rank}")
    for a in word.letters:
        if not root_in_rx(s, a):
            raise DomainError(f"letter {a} is not a non-isotropic root of the system")


def _parse_explicit(token: str, rank: int) -> Root:
    sign = 1 if token[0] == "+" else -1
    body = token[2:]
    if not body.startswith(":"):
        raise WordParseError(f"explicit root token {token!r} must look like '+e:c1,...'")
    coords = body[1:]
    if rank == 0:
        if coords:
            raise WordParseError(f"rank is 0 but token {token!r} carries coordinates")
        return Root(sign, ())
    parts = coords.split(",")
    if len(parts) != rank:
        raise WordParseError(f"token {token!r} has {len(parts)} coordinates, expected {rank}")
    try:
        lat = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise WordParseError(f"non-integer coordinate in token {token!r}") from exc
    return Root(sign, lat)


def parse_word(text: str, base: ReflectableBase) -> Word:
    """Parse the shared text format against the active base."""
    letters = []
    for token in text.split():
        if token.startswith("g"):
            try:
                k = int(token[1:])
            except ValueError as exc:
                raise WordParseError(f"bad generator token {token!r}") from exc
            if not 0 <= k < len(base.roots):
                raise WordParseError(
                    f"generator token {token!r} out of range 0..{len(base.roots) - 1}"
                )
            letters.append(base.roots[k])
        elif token[:1] in ("+", "-") and token[1:2] == "e":
            letters.append(_parse_explicit(token, base.rank))
        else:
            raise WordParseError(f"unrecognised token {token!r}")
    return Word(base.rank, tuple(letters))


def format_word(word: Word, base: ReflectableBase | None = None) -> str:
    """Render a word in the text format, preferring ``g<k>`` tokens when possible."""
    lookup = {a: k for k, a in enumerate(base.roots)} if base is not None else {}
    tokens = []
    for a in word.letters:
        k = lookup.get(a)
        if k is not None:
            tokens.append(f"g{k}")
        else:
            head = "+" if a.sign > 0 else "-"
            tokens.append(head + "e:" + ",".join(str(c) for c in a.lat))
    return " ".join(tokens)


def random_word(rng: random.Random, s: Semilattice, length: int, spread: int = 2) -> Word:
    """A random word over the root system of ``s`` with lattice parts of bounded size."""
    letters = []
    for _ in range(length):
        sign = rng.choice((1, -1))
        tau = rng.choice(s.cosets)
        lat = tuple(t + 2 * rng.randint(-spread, spread) for t in tau)
        letters.append(Root(sign, lat))
    return Word(s.rank, tuple(letters))


def random_relation_indices(rng: random.Random, nu: int, half_length: int) -> tuple[int, ...]:
    """A random relation word over the baby-base generators, as indices.

    The letters placed at even positions and at odd positions are the same
    multiset, which forces the signed letter sum to vanish; the result is a
    relation of length ``2*half_length``.
    """
    half = [rng.randint(0, nu) for _ in range(half_length)]
    odd = list(half)
    even = list(half)
    rng.shuffle(odd)
    rng.shuffle(even)
    out = []
    for a, b in zip(odd, even):
        out.extend((a, b))
    return tuple(out)

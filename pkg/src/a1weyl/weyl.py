"""Canonical forms and decision procedures for the reflection group on ``V``.

Every element is determined by a parity sign and a lattice vector: the word
``w_{a_1}...w_{a_k}`` evaluates to ``parity = (-1)^k`` and
``shift = sum_i (-1)^(k-i) * sign(a_i) * p(a_i)``.  A word is a relation
exactly when its length is even and the alternating signed sum of lattice
parts vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DomainError
from .intmat import Mat, mat_identity, mat_mul
from .lattice import Root, Vec, checked, vec_add, vec_neg, vec_scale, vec_sub, zero_vec, unit_vec
from .words import Word


@dataclass(frozen=True)
class WeylElement:
    """Canonical form (parity, shift) of a product of reflections."""

    parity: int
    shift: Vec

    def __post_init__(self) -> None:
        if self.parity not in (-1, 1):
            raise DomainError(f"parity must be +1 or -1, got {self.parity}")
        object.__setattr__(self, "shift", tuple(checked(int(c)) for c in self.shift))

    @property
    def rank(self) -> int:
        return len(self.shift)

    @property
    def is_identity(self) -> bool:
        return self.parity == 1 and not any(self.shift)


def identity_element(rank: int) -> WeylElement:
    return WeylElement(1, zero_vec(rank))


def eval_word(word: Word) -> WeylElement:
    k = len(word)
    acc = zero_vec(word.rank)
    for i, a in enumerate(word.letters, start=1):
        coef = a.sign if (k - i) % 2 == 0 else -a.sign
        acc = vec_add(acc, vec_scale(coef, a.lat))
    return WeylElement(1 if k % 2 == 0 else -1, acc)


def compose(a: WeylElement, b: WeylElement) -> WeylElement:
    """Product of canonical forms: shift(ab) = parity(b)*shift(a) + shift(b)."""
    if a.rank != b.rank:
        raise DomainError("rank mismatch in composition")
    return WeylElement(a.parity * b.parity, vec_add(vec_scale(b.parity, a.shift), b.shift))


def inverse(a: WeylElement) -> WeylElement:
    return WeylElement(a.parity, vec_scale(-a.parity, a.shift))


def power(a: WeylElement, k: int) -> WeylElement:
    out = identity_element(a.rank)
    step = a if k >= 0 else inverse(a)
    for _ in range(abs(k)):
        out = compose(out, step)
    return out


def act_on_root(a: WeylElement, beta: Root) -> Root:
    """Image of a root: ``parity*sign(b)*e + p(b) - 2*sign(b)*shift``."""
    if a.rank != beta.rank:
        raise DomainError("rank mismatch between element and root")
    return Root(
        a.parity * beta.sign,
        vec_sub(beta.lat, vec_scale(2 * beta.sign, a.shift)),
    )


def alternating_sum(word: Word) -> Vec:
    """``sum_i (-1)^i * sign(a_i) * p(a_i)`` over the letters of the word."""
    acc = zero_vec(word.rank)
    for i, a in enumerate(word.letters, start=1):
        coef = -a.sign if i % 2 == 1 else a.sign
        acc = vec_add(acc, vec_scale(coef, a.lat))
    return acc


def is_relation_w(word: Word) -> bool:
    """Word problem for the group on ``V``: even length and vanishing alternating sum."""
    return len(word) % 2 == 0 and not any(alternating_sum(word))


def is_alternating(pool: Sequence[Root], tup: Sequence[Root]) -> bool:
    """Even-length tuples over ``pool`` whose alternating signed sum vanishes."""
    allowed = set(pool)
    if any(a not in allowed for a in tup):
        return False
    if len(tup) % 2 != 0:
        return False
    if not tup:
        return True
    word = Word(tup[0].rank, tuple(tup))
    return not any(alternating_sum(word))


def enumerate_alternating(
    pool: Sequence[Root],
    k: int,
    *,
    max_k: int = 12,
    max_letters: int = 8,
) -> Iterator[tuple[Root, ...]]:
    """All alternating k-tuples over ``pool`` in index-lexicographic order.

    Caps are validated eagerly; the returned stream searches depth first,
    pruning on the sup-norm of the partial sum against what the remaining
    positions can still cancel, so it stays cheap for the small pools the
    caps allow.
    """
    if k % 2 != 0:
        raise DomainError(f"tuple length must be even, got {k}")
    if k > max_k:
        raise DomainError(f"tuple length {k} exceeds the cap {max_k}")
    if len(pool) > max_letters:
        raise DomainError(f"pool size {len(pool)} exceeds the cap {max_letters}")
    return _alternating_stream(tuple(pool), k)


def _alternating_stream(pool: tuple[Root, ...], k: int) -> Iterator[tuple[Root, ...]]:
    if k == 0:
        yield ()
        return
    if not pool:
        return
    rank = pool[0].rank
    reach = max((max(abs(c) for c in a.lat) if a.lat else 0) for a in pool)
    chosen: list[Root] = []

    def walk(pos: int, acc: Vec) -> Iterator[tuple[Root, ...]]:
        if pos == k:
            if not any(acc):
                yield tuple(chosen)
            return
        remaining = k - pos
        if acc and max(abs(c) for c in acc) > remaining * reach:
            return
        for a in pool:
            coef = -a.sign if (pos + 1) % 2 == 1 else a.sign
            chosen.append(a)
            yield from walk(pos + 1, vec_add(acc, vec_scale(coef, a.lat)))
            chosen.pop()

    yield from walk(0, zero_vec(rank))


def witness_word_for_element(a: WeylElement) -> Word:
    """An explicit word over the baby-base generators evaluating to ``a``.

    Built from the translation pairs ``w_e w_{e+s_i}`` and, for odd parity, a
    trailing reflection in ``e``; constructive surjectivity of the evaluation.
    """
    nu = a.rank
    e = Root(1, zero_vec(nu))
    target = a.shift if a.parity == 1 else vec_neg(a.shift)
    letters: list[Root] = []
    for i in range(1, nu + 1):
        gi = Root(1, unit_vec(nu, i))
        c = target[i - 1]
        block = (e, gi) if c >= 0 else (gi, e)
        letters.extend(block * abs(c))
    if a.parity == -1:
        letters.append(e)
    return Word(nu, tuple(letters))


def reflection_matrix_w(alpha: Root) -> Mat:
    """Matrix of the reflection in ``alpha`` on the ordered basis (e, s_1..s_nu)."""
    if alpha.sign == 0:
        return mat_identity(alpha.rank + 1)
    n = alpha.rank + 1
    rows = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    rows[0][0] = -1
    for i in range(1, n):
        rows[i][0] = -2 * alpha.sign * alpha.lat[i - 1]
    return tuple(tuple(r) for r in rows)


def matrix_of_word_w(word: Word) -> Mat:
    """Independent oracle: the product of reflection matrices on (e, s_1..s_nu)."""
    out = mat_identity(word.rank + 1)
    for a in word.letters:
        out = mat_mul(out, reflection_matrix_w(a))
    return out


def matrix_of_element_w(a: WeylElement) -> Mat:
    """The matrix a canonical form must equal under the oracle representation."""
    n = a.rank + 1
    rows = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    rows[0][0] = a.parity
    for i in range(1, n):
        rows[i][0] = -2 * a.shift[i - 1]
    return tuple(tuple(r) for r in rows)


def element_to_dict(a: WeylElement) -> dict:
    return {"eps": a.parity, "t": list(a.shift)}


def element_from_dict(data: dict) -> WeylElement:
    return WeylElement(int(data["eps"]), tuple(int(c) for c in data["t"]))

"""The simplex complex, the free group action on it, and loop reduction.

Each simplex ``B(anchor, orient)`` is the set of points
``sum_i (2*anchor_i + orient*t_i) s_i`` with ``t_i >= 0`` and
``sum t_i <= 1``.  The group acts by
``w . B(anchor, orient) = B(anchor + orient*shift(w), parity(w)*orient)``,
freely and transitively.

Paths: the path of ``w_{a_1}...w_{a_k}`` from a base simplex applies the
letters right to left, recording ``k + 1`` simplices; it closes up exactly
when the word is a relation.  Loops reduce to the trivial loop by inserting
or deleting the elementary sub-loops of ``g_i^2`` and ``(g_0 g_i g_j)^2``
(``i < j`` both nonzero); the trace records every elementary move together
with the simplex its sub-loop is based at.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, InternalCheckError
from .lattice import Vec, baby_base, vec_add, vec_scale, zero_vec
from .presentation import (
    RULE_CANCEL,
    RULE_DELETE,
    RULE_INSERT,
    RULE_REVERSE,
    RewriteStep,
    reduction_macros,
)
from .weyl import WeylElement, eval_word, is_relation_w
from .words import Word


@dataclass(frozen=True)
class Simplex:
    anchor: Vec
    orient: int

    def __post_init__(self) -> None:
        if self.orient not in (-1, 1):
            raise DomainError(f"orientation must be +1 or -1, got {self.orient}")
        object.__setattr__(self, "anchor", tuple(int(c) for c in self.anchor))

    @property
    def rank(self) -> int:
        return len(self.anchor)


def base_simplex(rank: int) -> Simplex:
    return Simplex(zero_vec(rank), 1)


def act_on_simplex(a: WeylElement, b: Simplex) -> Simplex:
    if a.rank != b.rank:
        raise DomainError("rank mismatch between element and simplex")
    return Simplex(vec_add(b.anchor, vec_scale(b.orient, a.shift)), a.parity * b.orient)


@dataclass(frozen=True)
class Path:
    """Simplices visited by a word from a base; entry r is the length-r suffix image."""

    simplices: tuple[Simplex, ...]
    word: Word

    def __post_init__(self) -> None:
        if len(self.simplices) != len(self.word) + 1:
            raise DomainError("a path has one simplex per word suffix, ends included")

    @property
    def base(self) -> Simplex:
        return self.simplices[0]

    @property
    def rank(self) -> int:
        return self.word.rank


def path_of_word(word: Word, base: Simplex) -> Path:
    if word.rank != base.rank:
        raise DomainError("rank mismatch between word and base simplex")
    out = [base]
    for a in reversed(word.letters):
        step = WeylElement(-1, vec_scale(a.sign, a.lat))
        out.append(act_on_simplex(step, out[-1]))
    return Path(tuple(out), word)


def is_loop(p: Path) -> bool:
    closed = p.simplices[0] == p.simplices[-1]
    if closed != is_relation_w(p.word):
        raise InternalCheckError("free action violated: loop test disagrees with the word problem")
    return closed


@dataclass(frozen=True)
class Move:
    """Insert or delete one elementary sub-loop.

    ``pos`` is the 0-based word position of the block, ``gens`` is ``(i,)``
    for the two-letter loop of ``g_i^2`` or ``(0, i, j)`` for the six-letter
    loop of ``(g_0 g_i g_j)^2``, and ``base`` is the simplex the sub-loop is
    based at.
    """

    kind: str
    pos: int
    gens: tuple[int, ...]
    base: Simplex


@dataclass(frozen=True)
class MoveTrace:
    start: tuple[int, ...]
    base: Simplex
    moves: tuple[Move, ...]
    macros: tuple[tuple[int, int, str], ...]


def move_block(gens: tuple[int, ...]) -> tuple[int, ...]:
    """The word of the elementary loop named by ``gens``."""
    if len(gens) == 1:
        return (gens[0], gens[0])
    if len(gens) == 3 and gens[0] == 0 and 1 <= gens[1] < gens[2]:
        return gens + gens
    raise DomainError(f"{gens} does not name an elementary loop")


class _Tracer:
    """Applies elementary moves to a live word, recording them with their bases."""

    def __init__(self, indices: Sequence[int], base: Simplex, nu: int):
        self.word = list(indices)
        self.base = base
        self.nu = nu
        self.crumbs = baby_base(nu)
        self.moves: list[Move] = []

    def _loop_base(self, suffix_start: int) -> Simplex:
        tail = Word.from_indices(self.crumbs, self.word[suffix_start:])
        return act_on_simplex(eval_word(tail), self.base)

    def insert(self, pos: int, gens: tuple[int, ...]) -> None:
        block = move_block(gens)
        self.moves.append(Move("insert", pos, gens, self._loop_base(pos)))
        self.word[pos:pos] = list(block)

    def delete(self, pos: int, gens: tuple[int, ...]) -> None:
        block = move_block(gens)
        if tuple(self.word[pos : pos + len(block)]) != block:
            raise InternalCheckError(f"cannot delete {block} at {pos}: block mismatch")
        self.moves.append(Move("delete", pos, gens, self._loop_base(pos + len(block))))
        del self.word[pos : pos + len(block)]

    def pair_for(self, i: int, j: int) -> tuple[int, ...]:
        lo, hi = min(i, j), max(i, j)
        return (0, lo, hi)

    def reverse_triple(self, q: int) -> None:
        """Reverse ``word[q:q+3]`` by elementary moves.

        Triples containing a 0 reverse in four moves against the six-letter
        loop on their two nonzero letters; triples of three nonzero letters
        route through a freshly inserted ``g_0^2`` and three sub-reversals.
        """
        a, b, c = self.word[q : q + 3]
        if a == c:
            return  # palindromic: nothing to do
        if 0 not in (a, b, c):
            self.insert(q + 2, (0,))            # a b 0 0 c
            self.reverse_triple(q)              # 0 b a 0 c
            self.reverse_triple(q + 2)          # 0 b c 0 a
            self.reverse_triple(q)              # c b 0 0 a
            self.delete(q + 2, (0,))            # c b a
            return
        if b == 0:
            d = self.pair_for(a, c)
            i, j = d[1], d[2]
            if (a, c) == (i, j):                # i 0 j -> j 0 i
                self.insert(q + 2, d)           # i 0 [0 i j 0 i j] j
                self.delete(q + 1, (0,))        # i i j 0 i j j
                self.delete(q, (i,))            # j 0 i j j
                self.delete(q + 3, (j,))        # j 0 i
            else:                               # j 0 i -> i 0 j
                self.insert(q + 3, (j,))        # j 0 i j j
                self.insert(q, (i,))            # i i j 0 i j j
                self.insert(q + 1, (0,))        # i 0 0 i j 0 i j j
                self.delete(q + 2, d)           # i 0 j
        elif a == 0:
            d = self.pair_for(b, c)
            i, j = d[1], d[2]
            if (b, c) == (i, j):                # 0 i j -> j i 0
                self.insert(q + 3, (0,))        # 0 i j 0 0
                self.insert(q + 4, (i,))        # 0 i j 0 i i 0
                self.insert(q + 5, (j,))        # 0 i j 0 i j j i 0
                self.delete(q, d)               # j i 0
            else:                               # 0 j i -> i j 0
                self.insert(q + 1, d)           # 0 0 i j 0 i j j i
                self.delete(q, (0,))            # i j 0 i j j i
                self.delete(q + 4, (j,))        # i j 0 i i
                self.delete(q + 3, (i,))        # i j 0
        else:
            d = self.pair_for(a, b)
            i, j = d[1], d[2]
            if (a, b) == (j, i):                # j i 0 -> 0 i j
                self.insert(q, d)               # 0 i j 0 i j j i 0
                self.delete(q + 5, (j,))        # 0 i j 0 i i 0
                self.delete(q + 4, (i,))        # 0 i j 0 0
                self.delete(q + 3, (0,))        # 0 i j
            else:                               # i j 0 -> 0 j i
                self.insert(q + 3, (i,))        # i j 0 i i
                self.insert(q + 4, (j,))        # i j 0 i j j i
                self.insert(q, (0,))            # 0 0 i j 0 i j j i
                self.delete(q + 1, d)           # 0 j i


def _apply_certificate_step(tracer: _Tracer, step: RewriteStep) -> None:
    if step.rule == RULE_CANCEL:
        tracer.delete(step.pos, (step.payload[0],))
    elif step.rule == RULE_DELETE:
        tracer.delete(step.pos, tuple(step.payload[:3]))
    elif step.rule == RULE_INSERT:
        tracer.insert(step.pos, tuple(step.payload[:3]))
    elif step.rule == RULE_REVERSE:
        tracer.reverse_triple(step.pos)
    else:
        raise DomainError(f"unknown certificate rule {step.rule!r}")


def reduce_loop(p: Path) -> MoveTrace:
    """Move a loop over the baby-base generators to the trivial loop at its base.

    Word-level reduction macros drive the process; each of their steps
    expands into elementary insert/delete moves on the path.  The returned
    macro spans group the elementary moves the way the word-level strategy
    grouped its steps.
    """
    if not is_loop(p):
        raise DomainError("only loops can be reduced")
    nu = p.rank
    indices = p.word.to_indices(baby_base(nu))
    tracer = _Tracer(indices, p.base, nu)
    macros: list[tuple[int, int, str]] = []
    for kind, steps in reduction_macros(indices, nu):
        start = len(tracer.moves)
        for step in steps:
            _apply_certificate_step(tracer, step)
        macros.append((start, len(tracer.moves), kind))
    if tracer.word:
        raise InternalCheckError("reduction finished with a non-empty word")
    return MoveTrace(tuple(indices), p.base, tuple(tracer.moves), tuple(macros))


def replay_trace(trace: MoveTrace, upto: int | None = None) -> Path:
    """Replay the first ``upto`` moves (default: all) and return the resulting path."""
    nu = trace.base.rank
    crumbs = baby_base(nu)
    word = list(trace.start)
    moves = trace.moves if upto is None else trace.moves[:upto]
    for mv in moves:
        block = move_block(mv.gens)
        if mv.kind == "insert":
            word[mv.pos : mv.pos] = list(block)
            suffix = word[mv.pos + len(block) :]
        elif mv.kind == "delete":
            if tuple(word[mv.pos : mv.pos + len(block)]) != block:
                raise DomainError(f"trace replay: block {block} absent at {mv.pos}")
            del word[mv.pos : mv.pos + len(block)]
            suffix = word[mv.pos :]
        else:
            raise DomainError(f"unknown move kind {mv.kind!r}")
        tail = Word.from_indices(crumbs, suffix)
        if act_on_simplex(eval_word(tail), trace.base) != mv.base:
            raise DomainError("trace replay: recorded sub-loop base does not match")
    return path_of_word(Word.from_indices(crumbs, word), trace.base)


# ---------------------------------------------------------------------------
# SVG rendering (rank 2 only)
# ---------------------------------------------------------------------------

_SCALE = 40  # pixels per lattice unit
_PAD = 60


def _screen(x: int, y: int) -> tuple[int, int]:
    return (_SCALE * x, -_SCALE * y)


def _triangle(s: Simplex) -> tuple[tuple[int, int], ...]:
    ax, ay = 2 * s.anchor[0], 2 * s.anchor[1]
    return (
        _screen(ax, ay),
        _screen(ax + s.orient, ay),
        _screen(ax, ay + s.orient),
    )


def render_svg(p: Path) -> str:
    """Draw the visited simplices with visit labels B0, B1, ... in order.

    Each simplex is the triangle with corners 2*anchor, 2*anchor + orient*e1,
    2*anchor + orient*e2; a closing loop entry reuses the label of the start.
    Output is deterministic for identical input.
    """
    if p.rank != 2:
        raise DomainError("SVG rendering is implemented for rank 2 only")
    n = len(p.simplices)
    closing = n > 1 and p.simplices[0] == p.simplices[-1]
    labelled = n - 1 if closing else n

    triangles: dict[Simplex, list[str]] = {}
    for r in range(labelled):
        triangles.setdefault(p.simplices[r], []).append(f"B{r}")
    for r in range(labelled, n):
        triangles.setdefault(p.simplices[r], [])

    xs, ys = [0], [0]
    for tri in map(_triangle, triangles):
        for x, y in tri:
            xs.append(x)
            ys.append(y)
    x0, x1 = min(xs) - _PAD, max(xs) + _PAD
    y0, y1 = min(ys) - _PAD, max(ys) + _PAD

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0} {y0} {x1 - x0} {y1 - y0}" '
        f'width="{x1 - x0}" height="{y1 - y0}">',
        f'<line x1="{x0 + 8}" y1="0" x2="{x1 - 8}" y2="0" stroke="#888" stroke-width="1"/>',
        f'<line x1="0" y1="{y0 + 8}" x2="0" y2="{y1 - 8}" stroke="#888" stroke-width="1"/>',
        f'<text x="{x1 - 30}" y="-6" font-size="14">s1</text>',
        f'<text x="6" y="{y0 + 24}" font-size="14">s2</text>',
    ]
    for simplex in sorted(triangles, key=lambda s: (s.anchor, s.orient)):
        pts = " ".join(f"{x},{y}" for x, y in _triangle(simplex))
        parts.append(f'<polygon points="{pts}" fill="none" stroke="#000" stroke-width="2"/>')
    for simplex in sorted(triangles, key=lambda s: (s.anchor, s.orient)):
        labels = triangles[simplex]
        if not labels:
            continue
        tri = _triangle(simplex)
        cx = sum(x for x, _ in tri) // 3 + 4 * simplex.orient
        cy = sum(y for _, y in tri) // 3 - 4 * simplex.orient
        parts.append(f'<text x="{cx}" y="{cy}" font-size="12">{",".join(labels)}</text>')
    parts.append("</svg>")
    return "\n".join(parts)

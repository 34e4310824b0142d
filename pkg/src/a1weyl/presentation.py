"""Presentations of the two groups, soundness checks, and reduction certificates.

The rewriting system lives over the baby-base generators ``g_0..g_nu``.  Its
rules are the involutions ``g_k^2``, the six-letter relators
``(g_0 g_i g_j)^2`` for ``1 <= i < j <= nu``, and the triple reversal
``g_a g_b g_c -> g_c g_b g_a`` (a consequence of the relators).  Every
relation word reduces to the empty word by the macro strategy below, and the
certificate of steps replays deterministically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, InternalCheckError
from .hyperbolic import eval_word_hyp
from .lattice import ReflectableBase, baby_base, is_elliptic_like, support_pairs
from .weyl import enumerate_alternating, eval_word, is_relation_w
from .words import Word

TARGET_W = "W"
TARGET_WT = "Wt"


@dataclass(frozen=True)
class Presentation:
    """Generators by label plus relators as index words into the label list."""

    generators: tuple[str, ...]
    relators: tuple[tuple[int, ...], ...]
    target: str
    truncated_at: int | None = None

    def __post_init__(self) -> None:
        if self.target not in (TARGET_W, TARGET_WT):
            raise DomainError(f"unknown target group {self.target!r}")
        n = len(self.generators)
        for rel in self.relators:
            for g in rel:
                if not 0 <= g < n:
                    raise DomainError(f"relator index {g} out of range for {n} generators")


def presentation_to_dict(p: Presentation) -> dict:
    return {
        "generators": list(p.generators),
        "relators": [list(r) for r in p.relators],
        "target": p.target,
        "truncated_at": p.truncated_at,
    }


def presentation_from_dict(data: dict) -> Presentation:
    return Presentation(
        tuple(str(g) for g in data["generators"]),
        tuple(tuple(int(i) for i in r) for r in data["relators"]),
        str(data["target"]),
        data.get("truncated_at"),
    )


def presentation_alternating(pool: Sequence, kmax: int, *, max_k: int = 12) -> Presentation:
    """Truncation of the full alternating presentation at relator length ``kmax``.

    ``pool`` is the list of generator roots; the untruncated presentation has
    one relator per alternating tuple of every even length, so the result is
    explicitly flagged with its truncation bound.
    """
    if kmax % 2 != 0:
        raise DomainError(f"kmax must be even, got {kmax}")
    if kmax > max_k:
        raise DomainError(f"kmax {kmax} exceeds the cap {max_k}")
    index = {a: i for i, a in enumerate(pool)}
    relators = []
    for k in range(2, kmax + 1, 2):
        for tup in enumerate_alternating(pool, k, max_k=max_k):
            relators.append(tuple(index[a] for a in tup))
    labels = tuple(f"g{i}" for i in range(len(pool)))
    return Presentation(labels, tuple(relators), TARGET_W, truncated_at=kmax)


def presentation_baby_w(nu: int) -> Presentation:
    """Finite presentation of the group on ``V``: involutions plus ``(g0 gi gj)^2``."""
    if nu < 0:
        raise DomainError("rank must be non-negative")
    labels = tuple(f"g{k}" for k in range(nu + 1))
    relators = [(k, k) for k in range(nu + 1)]
    for i in range(1, nu + 1):
        for j in range(i + 1, nu + 1):
            relators.append((0, i, j, 0, i, j))
    return Presentation(labels, tuple(relators), TARGET_W)


def presentation_w_spre(nu: int, pairs: Iterable[tuple[int, int]]) -> Presentation:
    """Variant presentation with one extra generator per designated pair.

    For each designated pair the sextic relator is traded for an involution
    ``g(i,j)^2`` plus the defining relator ``g(i,j) g_i g_0 g_j``; pairs left
    out keep a sextic relator, written ``(g_i g_0 g_j)^2`` here.  With no
    pairs at all this collapses to :func:`presentation_baby_w` verbatim.
    """
    pairs = sorted(set(tuple(p) for p in pairs))
    for i, j in pairs:
        if not 1 <= i < j <= nu:
            raise DomainError(f"pair {(i, j)} out of range for rank {nu}")
    if not pairs:
        return presentation_baby_w(nu)
    labels = [f"g{k}" for k in range(nu + 1)] + [f"g({i},{j})" for i, j in pairs]
    pair_index = {p: nu + 1 + n for n, p in enumerate(pairs)}
    relators = [(k, k) for k in range(len(labels))]
    for i in range(1, nu + 1):
        for j in range(i + 1, nu + 1):
            if (i, j) in pair_index:
                relators.append((pair_index[(i, j)], i, 0, j))
            else:
                relators.append((i, 0, j, i, 0, j))
    return Presentation(tuple(labels), tuple(relators), TARGET_W)


def presentation_hyp(base: ReflectableBase) -> Presentation:
    """Finite presentation of the extended group for an elliptic-like base.

    Involutions for every generator, and for each pair ``i < j`` one
    commutator per generator: with the central word ``g_s g_i g_0 g_j`` when
    base root ``s`` has support ``{i, j}``, else with ``(g_i g_0 g_j)^2``.
    """
    if not is_elliptic_like(base):
        raise DomainError("the hyperbolic presentation requires an elliptic-like base")
    nu = base.rank
    m = len(base.roots) - 1
    labels = tuple(f"g{k}" for k in range(m + 1))
    pairs = support_pairs(base)
    relators = [(k, k) for k in range(m + 1)]
    for i in range(1, nu + 1):
        for j in range(i + 1, nu + 1):
            witness = pairs.get((i, j))
            if witness is not None:
                z = (witness, i, 0, j)
            else:
                z = (i, 0, j, i, 0, j)
            z_inv = z[::-1]
            for k in range(m + 1):
                relators.append((k,) + z + (k,) + z_inv)
    return Presentation(labels, tuple(relators), TARGET_WT)


def headline_relator_count(nu: int) -> int:
    """The advertised relator count nu*(nu+1)/2 + nu + 1 for the baby family.

    ``presentation_hyp`` emits one commutator per generator and pair, which
    matches this count at nu = 2 but exceeds it for nu >= 3; both numbers are
    surfaced so the discrepancy stays visible.
    """
    return nu * (nu + 1) // 2 + nu + 1


def _resolve_label(label: str, base: ReflectableBase) -> tuple[int, ...]:
    """Expand a generator label to base root indices; composite pairs expand
    to the three-letter word g_j g_0 g_i."""
    if label.startswith("g(") and label.endswith(")"):
        try:
            i, j = (int(part) for part in label[2:-1].split(","))
        except ValueError as exc:
            raise DomainError(f"unresolvable generator label {label!r}") from exc
        if not (1 <= i <= base.rank and 1 <= j <= base.rank):
            raise DomainError(f"composite label {label!r} out of range for rank {base.rank}")
        return (j, 0, i)
    if label.startswith("g"):
        try:
            k = int(label[1:])
        except ValueError as exc:
            raise DomainError(f"unresolvable generator label {label!r}") from exc
        if not 0 <= k < len(base.roots):
            raise DomainError(f"generator label {label!r} out of range")
        return (k,)
    raise DomainError(f"unresolvable generator label {label!r}")


@dataclass(frozen=True)
class VerificationReport:
    target: str
    checked: int
    failures: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_presentation(p: Presentation, target: str, base: ReflectableBase) -> VerificationReport:
    """Evaluate every relator in the chosen group; report the ones that survive."""
    if target not in (TARGET_W, TARGET_WT):
        raise DomainError(f"unknown target group {target!r}")
    expansions = [_resolve_label(label, base) for label in p.generators]
    failures = []
    for n, rel in enumerate(p.relators):
        indices = tuple(itertools.chain.from_iterable(expansions[g] for g in rel))
        word = Word.from_indices(base, indices)
        if target == TARGET_W:
            trivial = eval_word(word).is_identity
        else:
            trivial = eval_word_hyp(word).is_identity
        if not trivial:
            failures.append(n)
    return VerificationReport(target, len(p.relators), tuple(failures))


# ---------------------------------------------------------------------------
# Reduction certificates
# ---------------------------------------------------------------------------

RULE_CANCEL = "cancel-involution"
RULE_REVERSE = "triple-reverse"
RULE_DELETE = "delete-relator"
RULE_INSERT = "insert-relator"

MACRO_CANCEL = "cancel"
MACRO_DELETE = "delete-relator"
MACRO_BUBBLE = "bubble"


@dataclass(frozen=True)
class RewriteStep:
    """One rule application: ``pos`` is 0-based in the word before the step."""

    rule: str
    pos: int
    payload: tuple[int, ...]
    before_len: int
    after_len: int


@dataclass(frozen=True)
class RewriteCertificate:
    start: tuple[int, ...]
    steps: tuple[RewriteStep, ...]
    macros: tuple[tuple[int, int, str], ...]
    final_empty: bool

    def macro_count(self) -> int:
        return len(self.macros)


def certificate_to_dict(cert: RewriteCertificate) -> dict:
    return {
        "start": list(cert.start),
        "steps": [
            {
                "rule": s.rule,
                "pos": s.pos,
                "payload": list(s.payload),
                "before_len": s.before_len,
                "after_len": s.after_len,
            }
            for s in cert.steps
        ],
        "macros": [[a, b, kind] for a, b, kind in cert.macros],
        "final_empty": cert.final_empty,
    }


def apply_step(word: Sequence[int], step: RewriteStep) -> list[int]:
    """Apply one certificate step, validating that it matches the word."""
    w = list(word)
    q = step.pos
    if step.rule == RULE_CANCEL:
        if not (0 <= q and q + 2 <= len(w) and w[q] == w[q + 1] == step.payload[0]):
            raise DomainError(f"cancel step does not match word at {q}")
        del w[q : q + 2]
    elif step.rule == RULE_REVERSE:
        if not (0 <= q and q + 3 <= len(w) and tuple(w[q : q + 3]) == step.payload):
            raise DomainError(f"reverse step does not match word at {q}")
        w[q : q + 3] = w[q : q + 3][::-1]
    elif step.rule == RULE_DELETE:
        size = len(step.payload)
        if not (0 <= q and q + size <= len(w) and tuple(w[q : q + size]) == step.payload):
            raise DomainError(f"delete step does not match word at {q}")
        del w[q : q + size]
    elif step.rule == RULE_INSERT:
        if not 0 <= q <= len(w):
            raise DomainError(f"insert position {q} out of range")
        w[q:q] = list(step.payload)
    else:
        raise DomainError(f"unknown rule {step.rule!r}")
    if len(w) != step.after_len:
        raise DomainError("step length bookkeeping does not match")
    return w


def replay_certificate(cert: RewriteCertificate) -> list[list[int]]:
    """All intermediate words, starting from the input and ending empty."""
    word = list(cert.start)
    states = [list(word)]
    for step in cert.steps:
        if len(word) != step.before_len:
            raise DomainError("certificate does not chain: length mismatch")
        word = apply_step(word, step)
        states.append(list(word))
    if cert.final_empty and word:
        raise DomainError("certificate claims the empty word but replay does not reach it")
    return states


def _leftmost_pair(word: Sequence[int]) -> int | None:
    for q in range(len(word) - 1):
        if word[q] == word[q + 1]:
            return q
    return None


def _leftmost_relator(word: Sequence[int], nu: int) -> int | None:
    for q in range(len(word) - 5):
        i, j = word[q + 1], word[q + 2]
        if (
            word[q] == 0
            and word[q + 3] == 0
            and word[q + 4] == i
            and word[q + 5] == j
            and 1 <= i < j <= nu
        ):
            return q
    return None


def _partner_position(word: Sequence[int]) -> int:
    """Smallest 0-based odd index holding the same letter as position 0.

    Letters of a relation word split evenly between even and odd positions,
    so the partner always exists; its absence means the word was no relation.
    """
    first = word[0]
    for q in range(1, len(word), 2):
        if word[q] == first:
            return q
    raise InternalCheckError("no opposite-parity partner; input was not a relation word")


def _macro_once(word: list[int], nu: int, steps: list[RewriteStep]) -> str:
    """Run one macro on ``word`` in place, appending its steps; returns the kind."""

    def cancel_cascade() -> bool:
        did = False
        q = _leftmost_pair(word)
        while q is not None:
            steps.append(RewriteStep(RULE_CANCEL, q, (word[q],), len(word), len(word) - 2))
            del word[q : q + 2]
            did = True
            q = _leftmost_pair(word)
        return did

    if cancel_cascade():
        return MACRO_CANCEL

    q = _leftmost_relator(word, nu)
    if q is not None:
        payload = tuple(word[q : q + 6])
        steps.append(RewriteStep(RULE_DELETE, q, payload, len(word), len(word) - 6))
        del word[q : q + 6]
        return MACRO_DELETE

    # Bubble the first letter toward its opposite-parity partner by triple
    # reversals; the first adjacent equal pair this creates is cancelled,
    # together with any cascade it unlocks.
    partner = _partner_position(word)
    c = 0
    while True:
        if c + 2 >= len(word) or c >= partner:
            raise InternalCheckError("bubble ran past the partner; input was not a relation word")
        if word[c] == word[c + 2]:
            c += 2  # palindromic triple: the reversal would be a no-op
            continue
        payload = tuple(word[c : c + 3])
        steps.append(RewriteStep(RULE_REVERSE, c, payload, len(word), len(word)))
        word[c : c + 3] = word[c : c + 3][::-1]
        c += 2
        if _leftmost_pair(word) is not None:
            cancel_cascade()
            return MACRO_BUBBLE


def reduction_macros(indices: Sequence[int], nu: int):
    """Yield ``(kind, steps)`` macro by macro until the word is empty.

    Precondition (checked): ``indices`` is a relation word over the baby-base
    generators ``0..nu``.  Each macro shortens the word by at least two.
    """
    for g in indices:
        if not 0 <= g <= nu:
            raise DomainError(f"letter {g} outside the generator range 0..{nu}")
    word_obj = Word.from_indices(baby_base(nu), indices)
    if not is_relation_w(word_obj):
        raise DomainError("the word is not a relation, no reduction certificate exists")
    word = list(indices)
    while word:
        steps: list[RewriteStep] = []
        kind = _macro_once(word, nu, steps)
        yield kind, steps


def rewrite_to_identity(indices: Sequence[int], nu: int) -> RewriteCertificate:
    """Reduce a relation word over the baby-base generators to the empty word."""
    steps: list[RewriteStep] = []
    macros: list[tuple[int, int, str]] = []
    for kind, macro_steps in reduction_macros(indices, nu):
        macros.append((len(steps), len(steps) + len(macro_steps), kind))
        steps.extend(macro_steps)
    return RewriteCertificate(tuple(indices), tuple(steps), tuple(macros), True)

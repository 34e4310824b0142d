"""The reflection group on the hyperbolic extension and its center.

The extension adds dual basis vectors l_1..l_nu pairing with s_1..s_nu, so an
element is determined by its restriction to ``V`` (parity, shift) together
with, for each j, the vector ``l_j - w(l_j)`` lying in ``V``.  We store that
vector split into its sign component ``dual_sgn[j]`` and its lattice part
``dual_p[j]``.  The group is a central extension of the group on ``V``: a
word is central exactly when it restricts to the identity on ``V``, and the
center is free abelian with an explicit basis indexed by pairs ``i < j``.

A full matrix representation on the ordered basis (e, s_1..s_nu, l_1..l_nu)
is kept alongside as an independent oracle; the two are compared entry by
entry in the test suite and by the ``oracle-compare`` command.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InternalCheckError
from .intmat import Mat, mat_identity, mat_mul
from .lattice import (
    ReflectableBase,
    Root,
    Vec,
    checked,
    is_elliptic_like,
    support_pairs,
    vec_add,
    vec_scale,
    zero_vec,
)
from .weyl import WeylElement, eval_word, is_relation_w
from .words import Word


@dataclass(frozen=True)
class HyperbolicElement:
    """Canonical form of an element of the extended reflection group.

    ``dual_sgn[j]`` and ``dual_p[j]`` are the sign and lattice components of
    ``l_j - w(l_j)``; together with (parity, shift) they pin the element down.
    """

    parity: int
    shift: Vec
    dual_sgn: Vec
    dual_p: tuple[Vec, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "shift", tuple(checked(int(c)) for c in self.shift))
        object.__setattr__(self, "dual_sgn", tuple(checked(int(c)) for c in self.dual_sgn))
        object.__setattr__(
            self, "dual_p", tuple(tuple(checked(int(c)) for c in row) for row in self.dual_p)
        )
        if len(self.dual_sgn) != len(self.shift) or len(self.dual_p) != len(self.shift):
            raise DomainError("dual data must have one entry per lattice rank")

    @property
    def rank(self) -> int:
        return len(self.shift)

    @property
    def is_identity(self) -> bool:
        return (
            self.parity == 1
            and not any(self.shift)
            and not any(self.dual_sgn)
            and not any(any(row) for row in self.dual_p)
        )

    def projection(self) -> WeylElement:
        """Restriction to ``V``: forget the dual-basis data."""
        return WeylElement(self.parity, self.shift)


def identity_element_hyp(rank: int) -> HyperbolicElement:
    zero = zero_vec(rank)
    return HyperbolicElement(1, zero, zero, tuple(zero for _ in range(rank)))


def eval_word_hyp(word: Word) -> HyperbolicElement:
    """Evaluate a word in the extended group.

    For ``w = w_{a_1}...w_{a_k}`` and each dual index j:

      dual_sgn[j] = sum_i (-1)^(i+1) sign(a_i) p_j(a_i)
      dual_p[j]   = sum_s p_j(a_s) p(a_s)
                    + 2 sum_{s>=2} (-1)^s p_j(a_s) sign(a_s)
                          sum_{r<s} (-1)^r sign(a_r) p(a_r)

    The sign of dual_sgn is pinned by the matrix representation (the k = 1
    case is ``l_j - w(l_j) = p_j(a) * a``, with a plus sign).
    """
    nu = word.rank
    base = eval_word(word)
    sgn_acc = list(zero_vec(nu))
    rows = [list(zero_vec(nu)) for _ in range(nu)]
    prefix = zero_vec(nu)
    for i, a in enumerate(word.letters, start=1):
        par = -1 if i % 2 == 1 else 1
        for j in range(nu):
            pj = a.lat[j]
            if pj == 0:
                continue
            sgn_acc[j] -= par * a.sign * pj
            row = rows[j]
            for c in range(nu):
                row[c] += pj * a.lat[c] + 2 * par * pj * a.sign * prefix[c]
        prefix = vec_add(prefix, vec_scale(par * a.sign, a.lat))
    return HyperbolicElement(
        base.parity, base.shift, tuple(sgn_acc), tuple(tuple(r) for r in rows)
    )


def is_relation_hyp(word: Word) -> bool:
    """Word problem for the extended group: the full canonical form is trivial."""
    return eval_word_hyp(word).is_identity


def is_central(word: Word) -> bool:
    """Centrality test: equivalent to triviality of the restriction to ``V``.

    The equivalence needs a nonzero radical, so rank 0 is rejected rather
    than answered.
    """
    if word.rank == 0:
        raise DomainError("centrality via the restriction to V requires rank >= 1")
    return is_relation_w(word)


def gram_matrix(rank: int) -> Mat:
    """Pairing on (e, s_1..s_nu, l_1..l_nu): (e,e)=2, (s_i,l_j)=delta_ij, rest 0."""
    n = 2 * rank + 1
    rows = [[0] * n for _ in range(n)]
    rows[0][0] = 2
    for i in range(rank):
        rows[1 + i][1 + rank + i] = 1
        rows[1 + rank + i][1 + i] = 1
    return tuple(tuple(r) for r in rows)


def reflection_matrix_hyp(alpha: Root) -> Mat:
    """Reflection in ``alpha`` on the ordered basis (e, s_1..s_nu, l_1..l_nu).

    Images: e -> e - 2*sign(alpha)*alpha, s_i -> s_i, l_j -> l_j - p_j(alpha)*alpha.
    """
    nu = alpha.rank
    n = 2 * nu + 1
    if alpha.sign == 0:
        return mat_identity(n)
    rows = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    rows[0][0] = -1
    for i in range(nu):
        rows[1 + i][0] = -2 * alpha.sign * alpha.lat[i]
    for j in range(nu):
        pj = alpha.lat[j]
        if pj == 0:
            continue
        col = 1 + nu + j
        rows[0][col] = -pj * alpha.sign
        for i in range(nu):
            rows[1 + i][col] = -pj * alpha.lat[i]
    return tuple(tuple(r) for r in rows)


def matrix_of_word(word: Word) -> Mat:
    """Independent oracle: exact product of hyperbolic reflection matrices."""
    out = mat_identity(2 * word.rank + 1)
    for a in word.letters:
        out = mat_mul(out, reflection_matrix_hyp(a))
    return out


def matrix_of_element_hyp(h: HyperbolicElement) -> Mat:
    """Matrix a canonical form must equal: columns read off the defining data."""
    nu = h.rank
    n = 2 * nu + 1
    rows = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    rows[0][0] = h.parity
    for i in range(nu):
        rows[1 + i][0] = -2 * h.shift[i]
    for j in range(nu):
        col = 1 + nu + j
        rows[0][col] = -h.dual_sgn[j]
        for i in range(nu):
            rows[1 + i][col] = -h.dual_p[j][i]
    return tuple(tuple(r) for r in rows)


def preserves_gram(mat: Mat, rank: int) -> bool:
    g = gram_matrix(rank)
    mt = tuple(zip(*mat))
    return mat_mul(mat_mul(mt, g), mat) == g


@dataclass(frozen=True)
class CentralGenerator:
    """One free generator of the center, with the word realising it."""

    pair: tuple[int, int]
    word: Word
    element: HyperbolicElement


def _expected_dual_p(rank: int, pair: tuple[int, int], doubled: bool) -> tuple[Vec, ...]:
    # l_k - w(l_k) = c*(delta_kj*s_i - delta_ki*s_j) with c = 2 outside the
    # support pairs and c = 1 on them.
    i, j = pair
    c = 2 if doubled else 1
    rows = [list(zero_vec(rank)) for _ in range(rank)]
    rows[j - 1][i - 1] = c
    rows[i - 1][j - 1] = -c
    return tuple(tuple(r) for r in rows)


def center_basis(base: ReflectableBase) -> tuple[CentralGenerator, ...]:
    """Explicit free basis of the center for an elliptic-like base.

    For each pair ``i < j``: the word ``g_s g_i g_0 g_j`` when some base root
    has support ``{i, j}`` (``s`` its index), else ``(g_i g_0 g_j)^2``.  Each
    word is checked to be central and to move every dual vector exactly as
    the basis element it names; a violation is an internal error.
    """
    if not is_elliptic_like(base):
        raise DomainError("center basis is only provided for elliptic-like bases")
    nu = base.rank
    pairs = support_pairs(base)
    out = []
    for i in range(1, nu + 1):
        for j in range(i + 1, nu + 1):
            witness = pairs.get((i, j))
            if witness is not None:
                indices = (witness, i, 0, j)
            else:
                indices = (i, 0, j, i, 0, j)
            word = Word.from_indices(base, indices)
            elem = eval_word_hyp(word)
            if not is_central(word):
                raise InternalCheckError(f"center word for pair {(i, j)} is not central")
            expected = _expected_dual_p(nu, (i, j), doubled=witness is None)
            if any(elem.dual_sgn) or elem.dual_p != expected:
                raise InternalCheckError(f"center word for pair {(i, j)} has wrong dual action")
            out.append(CentralGenerator((i, j), word, elem))
    return tuple(out)


def element_to_dict(h: HyperbolicElement) -> dict:
    return {
        "eps": h.parity,
        "t": list(h.shift),
        "s": list(h.dual_sgn),
        "q": [list(row) for row in h.dual_p],
    }


def element_from_dict(data: dict) -> HyperbolicElement:
    return HyperbolicElement(
        int(data["eps"]),
        tuple(int(c) for c in data["t"]),
        tuple(int(c) for c in data["s"]),
        tuple(tuple(int(c) for c in row) for row in data["q"]),
    )

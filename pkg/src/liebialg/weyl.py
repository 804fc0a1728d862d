"""Weyl groups acting on root lists by permutation.

Words are tuples of 0-based simple-reflection indices; the word ``(i, j)``
stands for the product s_i s_j.  Externally elements are named with 1-based
indices, e.g. ``"s1*s2*s1"``, and ``"e"`` for the identity.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from .linalg import Matrix, kernel
from .rootsys import Root, RootSystem

DEFAULT_CAP = 2_000_000

_WORD_RE = re.compile(r"s([0-9]+)$")


class WeylCapExceeded(RuntimeError):
    pass


class WordError(ValueError):
    pass


def weyl_order(rs: RootSystem) -> int:
    total = 1
    for family, n in rs.cartan_type.factors:
        if family == "A":
            total *= math.factorial(n + 1)
        elif family in "BC":
            total *= 2 ** n * math.factorial(n)
        elif family == "D":
            total *= 2 ** (n - 1) * math.factorial(n)
        else:
            total *= {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
                      ("F", 4): 1152, ("G", 2): 12}[(family, n)]
    return total


@dataclass(frozen=True)
class WeylElement:
    perm: tuple[int, ...]
    word: tuple[int, ...] = field(compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def name(self) -> str:
        return format_word(self.word)

    def __repr__(self) -> str:
        return f"WeylElement({self.name})"


def format_word(word) -> str:
    return "*".join(f"s{i + 1}" for i in word) if word else "e"


def parse_word(text: str, rank: int) -> tuple[int, ...]:
    text = text.strip()
    if text in ("e", ""):
        return ()
    out = []
    for part in text.split("*"):
        m = _WORD_RE.match(part.strip())
        if not m:
            raise WordError(f"cannot parse Weyl word {text!r}")
        i = int(m.group(1))
        if not 1 <= i <= rank:
            raise WordError(f"generator s{i} out of range 1..{rank}")
        out.append(i - 1)
    return tuple(out)


class WeylGroup:
    """W(rs) with elements stored as permutations of ``rs.roots``.

    Single elements can be built without enumerating the group; the full
    element list is produced on first access and is subject to ``cap``.
    """

    def __init__(self, rs: RootSystem, cap: int = DEFAULT_CAP):
        self.root_system = rs
        self.cap = cap
        self.npos = rs.npos
        self.simple_perms = tuple(
            tuple(rs.index(rs.reflect(a, b)) for b in rs.roots) for a in rs.simple_roots)
        self._upper: dict[int, int] = {}

    @property
    def rank(self) -> int:
        return self.root_system.rank

    @cached_property
    def identity(self) -> WeylElement:
        return WeylElement(tuple(range(len(self.root_system.roots))), ())

    def order(self) -> int:
        return weyl_order(self.root_system)

    # -- construction --------------------------------------------------------

    def from_perm(self, perm) -> WeylElement:
        """Element with the given permutation, with a reduced word found by right descents."""
        perm = tuple(perm)
        simple_idx = range(self.rank)
        w, record = perm, []
        while True:
            for i in simple_idx:
                if w[i] >= self.npos:  # w(alpha_i) < 0: right descent
                    s = self.simple_perms[i]
                    w = tuple(w[s[j]] for j in range(len(w)))
                    record.append(i)
                    break
            else:
                break
        if w != self.identity.perm:
            raise ValueError("not a Weyl group permutation")
        return WeylElement(perm, tuple(reversed(record)))

    def from_word(self, word) -> WeylElement:
        perm = self.identity.perm
        for i in word:
            s = self.simple_perms[i]
            perm = tuple(perm[s[j]] for j in range(len(perm)))
        return self.from_perm(perm)

    def parse(self, text: str) -> WeylElement:
        return self.from_word(parse_word(text, self.rank))

    def simple(self, i: int) -> WeylElement:
        return WeylElement(self.simple_perms[i], (i,))

    def reflection(self, beta: Root) -> WeylElement:
        rs = self.root_system
        return self.from_perm(tuple(rs.index(rs.reflect(beta, a)) for a in rs.roots))

    # -- enumeration ---------------------------------------------------------

    @cached_property
    def elements(self) -> tuple[WeylElement, ...]:
        n = self.order()
        if n > self.cap:
            raise WeylCapExceeded(f"|W| = {n} exceeds the cap {self.cap}")
        seen = {self.identity.perm}
        out = [self.identity]
        queue = deque(out)
        while queue:
            w = queue.popleft()
            for i, s in enumerate(self.simple_perms):
                p = tuple(w.perm[s[j]] for j in range(len(s)))
                if p not in seen:
                    seen.add(p)
                    x = WeylElement(p, w.word + (i,))
                    out.append(x)
                    queue.append(x)
        assert len(out) == n, (len(out), n)
        return tuple(out)

    @cached_property
    def _position(self) -> dict[tuple[int, ...], int]:
        return {w.perm: k for k, w in enumerate(self.elements)}

    def position(self, w: WeylElement) -> int:
        try:
            return self._position[w.perm]
        except KeyError:
            raise ValueError("element does not belong to this Weyl group") from None

    def canonical(self, perm) -> WeylElement:
        """The enumerated element with this permutation (BFS word)."""
        return self.elements[self._position[tuple(perm)]]

    @cached_property
    def long_element(self) -> WeylElement:
        """w0, reached by climbing through right ascents until none remain."""
        w, word = self.identity.perm, []
        while True:
            for i in range(self.rank):
                if w[i] < self.npos:
                    s = self.simple_perms[i]
                    w = tuple(w[s[k]] for k in range(len(w)))
                    word.append(i)
                    break
            else:
                return WeylElement(w, tuple(word))

    # -- group operations ----------------------------------------------------

    def _check(self, *ws: WeylElement) -> None:
        n = len(self.root_system.roots)
        for w in ws:
            if len(w.perm) != n:
                raise ValueError("element belongs to a different root system")

    def multiply(self, u: WeylElement, v: WeylElement) -> WeylElement:
        self._check(u, v)
        return self.from_perm(tuple(u.perm[k] for k in v.perm))

    def inverse(self, w: WeylElement) -> WeylElement:
        self._check(w)
        inv = [0] * len(w.perm)
        for j, k in enumerate(w.perm):
            inv[k] = j
        return WeylElement(tuple(inv), tuple(reversed(w.word)))

    def length(self, w: WeylElement) -> int:
        return bin(self.inversion_mask(w)).count("1")

    def apply(self, w: WeylElement, alpha) -> Root:
        self._check(w)
        rs = self.root_system
        return rs.roots[w.perm[rs.index(alpha)]]

    def apply_index(self, w: WeylElement, k: int) -> int:
        return w.perm[k]

    def inversion_mask(self, w: WeylElement) -> int:
        """Bitmask over positive-root indices of Phi_w = {a > 0 : w^-1(a) < 0}."""
        self._check(w)
        mask = 0
        npos = self.npos
        # w^-1(a) < 0 with a > 0  <=>  a = w(b) for some b < 0
        for b in range(npos, 2 * npos):
            a = w.perm[b]
            if a < npos:
                mask |= 1 << a
        return mask

    def inversion_set(self, w: WeylElement) -> frozenset[Root]:
        m = self.inversion_mask(w)
        rs = self.root_system
        return frozenset(rs.roots[k] for k in range(self.npos) if m >> k & 1)

    def disjoint_inversions(self, u: WeylElement, v: WeylElement) -> bool:
        return not (self.inversion_mask(u) & self.inversion_mask(v))

    def length_additive(self, u: WeylElement, v: WeylElement) -> bool:
        """l(u) + l(v) == l(u^-1 v)."""
        return self.length(u) + self.length(v) == self.length(self.multiply(self.inverse(u), v))

    def is_involution(self, w: WeylElement) -> bool:
        return all(w.perm[k] == j for j, k in enumerate(w.perm))

    # -- weak order ----------------------------------------------------------

    def upper_set_mask(self, u: WeylElement) -> int:
        """Positions of all v with u <= v, found by climbing u -> u*s_i with l increasing."""
        k = self.position(u)
        if k in self._upper:
            return self._upper[k]
        lengths = [len(w.word) for w in self.elements]
        mask = 1 << k
        queue = deque([u.perm])
        while queue:
            p = queue.popleft()
            lp = lengths[self._position[p]]
            for s in self.simple_perms:
                q = tuple(p[s[j]] for j in range(len(s)))
                pos = self._position[q]
                if lengths[pos] == lp + 1 and not mask >> pos & 1:
                    mask |= 1 << pos
                    queue.append(q)
        self._upper[k] = mask
        return mask

    def weak_leq(self, u: WeylElement, v: WeylElement) -> bool:
        self._check(u, v)
        return bool(self.upper_set_mask(u) >> self.position(v) & 1)

    # -- action on the Cartan subalgebra ------------------------------------

    def matrix_on_roots(self, w: WeylElement) -> Matrix:
        """Matrix of w on the root lattice; column j is w(alpha_j)."""
        rs = self.root_system
        cols = [self.apply(w, a) for a in rs.simple_roots]
        return Matrix.from_rows([[cols[j][i] for j in range(rs.rank)] for i in range(rs.rank)])

    def matrix_on_h(self, w: WeylElement) -> Matrix:
        """Matrix of w on h over the simple coroots; column j is H_{w(alpha_j)}."""
        rs = self.root_system
        cols = [rs.coroot(self.apply(w, a)) for a in rs.simple_roots]
        return Matrix.from_rows([[cols[j][i] for j in range(rs.rank)] for i in range(rs.rank)])

    def minus_fixed_dim(self, w: WeylElement) -> int:
        """dim {x in h : w(x) = -x}."""
        m = self.matrix_on_h(w)
        shifted = Matrix.from_rows([[x + (1 if i == j else 0) for j, x in enumerate(row)]
                                    for i, row in enumerate(m.entries)])
        return kernel(shifted).dim


def enumerate_group(rs: RootSystem, cap: int = DEFAULT_CAP) -> WeylGroup:
    g = WeylGroup(rs, cap)
    g.elements
    return g

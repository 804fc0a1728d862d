"""Root systems of semisimple Cartan types.

Roots are integer tuples over the simple-root basis.  The global order puts
positive roots first, sorted by height and then by coordinates with earlier
simple roots first; the negative block mirrors it, so ``-roots[i]`` sits at
index ``i + npos``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .linalg import Matrix, inverse

Root = tuple[int, ...]

RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_FACTOR_RE = re.compile(r"([A-G])([0-9]+)$")


class CartanTypeError(ValueError):
    pass


class RootError(ValueError):
    pass


@dataclass(frozen=True)
class CartanType:
    factors: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if not self.factors:
            raise CartanTypeError("empty Cartan type")
        for family, rank in self.factors:
            if family not in RANK_BOUNDS:
                raise CartanTypeError(f"unknown family {family!r}")
            lo, hi = RANK_BOUNDS[family]
            if rank < lo or (hi is not None and rank > hi):
                raise CartanTypeError(f"rank {rank} out of range for type {family}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        factors = []
        for part in text.strip().split("x"):
            m = _FACTOR_RE.match(part.strip())
            if not m:
                raise CartanTypeError(f"cannot parse Cartan type {text!r}")
            family, rank = m.group(1), int(m.group(2))
            if family == "C" and rank == 2:
                family = "B"
            factors.append((family, rank))
        return cls(tuple(factors))

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.factors)

    def __str__(self) -> str:
        return "x".join(f"{f}{r}" for f, r in self.factors)


def _chain_gram(lengths: list[int], edges: list[tuple[int, int, int]]) -> list[list[Fraction]]:
    # edges carry (i, j, bond multiplicity); (a_i, a_j) = -m * min(|a_i|^2, |a_j|^2) / 2
    n = len(lengths)
    g = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = Fraction(lengths[i])
    for i, j, m in edges:
        v = -Fraction(m * min(lengths[i], lengths[j]), 2)
        g[i][j] = g[j][i] = v
    return g


def simple_gram(family: str, n: int) -> list[list[Fraction]]:
    """A symmetric form on the simple roots of an irreducible type (Bourbaki labels)."""
    chain = [(i, i + 1, 1) for i in range(n - 1)]
    if family == "A":
        return _chain_gram([2] * n, chain)
    if family == "B":
        return _chain_gram([4] * (n - 1) + [2], chain[:-1] + [(n - 2, n - 1, 2)])
    if family == "C":
        return _chain_gram([2] * (n - 1) + [4], chain[:-1] + [(n - 2, n - 1, 2)])
    if family == "D":
        edges = [(i, i + 1, 1) for i in range(n - 2)] + [(n - 3, n - 1, 1)]
        return _chain_gram([2] * n, edges)
    if family == "E":
        edges = [(0, 2, 1), (1, 3, 1)] + [(i, i + 1, 1) for i in range(2, n - 1)]
        return _chain_gram([2] * n, edges)
    if family == "F":
        return _chain_gram([4, 4, 2, 2], [(0, 1, 1), (1, 2, 2), (2, 3, 1)])
    if family == "G":
        return _chain_gram([2, 6], [(0, 1, 3)])
    raise CartanTypeError(family)


def _block_gram(t: CartanType) -> list[list[Fraction]]:
    r = t.rank
    g = [[Fraction(0)] * r for _ in range(r)]
    off = 0
    for family, n in t.factors:
        sub = simple_gram(family, n)
        for i in range(n):
            for j in range(n):
                g[off + i][off + j] = sub[i][j]
        off += n
    return g


def height(root: Root) -> int:
    return sum(root)


def negate(root: Root) -> Root:
    return tuple(-c for c in root)


def _order_key(root: Root):
    return (height(root), tuple(-c for c in root))


@dataclass(frozen=True, eq=False)
class RootSystem:
    cartan_type: CartanType
    cartan_matrix: tuple[tuple[int, ...], ...]
    roots: tuple[Root, ...]
    inner: Matrix
    components: tuple[int, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan_matrix)

    @cached_property
    def npos(self) -> int:
        return len(self.roots) // 2

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return self.roots[: self.npos]

    @cached_property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def _index(self) -> dict[Root, int]:
        return {r: i for i, r in enumerate(self.roots)}

    def index(self, root) -> int:
        try:
            return self._index[tuple(root)]
        except KeyError:
            raise RootError(f"{tuple(root)} is not a root of {self.cartan_type}") from None

    def is_root(self, root) -> bool:
        return tuple(root) in self._index

    def neg_index(self, i: int) -> int:
        return i + self.npos if i < self.npos else i - self.npos

    def is_positive(self, root) -> bool:
        return self.index(root) < self.npos

    def form(self, a, b) -> Fraction:
        """(a, b) under the Killing-dual form, for any lattice vectors a, b."""
        g = self.inner.entries
        return sum((x * g[i][j] * y for i, x in enumerate(a) if x
                    for j, y in enumerate(b) if y), Fraction(0))

    def pairing(self, a, b) -> Fraction:
        """<a, b^vee> = 2 (a, b) / (b, b)."""
        return 2 * self.form(a, b) / self.form(b, b)

    def reflect(self, beta, alpha) -> Root:
        """s_beta(alpha)."""
        k = self.pairing(alpha, beta)
        assert k.denominator == 1
        return tuple(a - int(k) * b for a, b in zip(alpha, beta))

    def coroot(self, alpha) -> tuple[Fraction, ...]:
        """Coordinates of H_alpha over the simple coroots H_1..H_r."""
        aa = self.form(alpha, alpha)
        return tuple(Fraction(c) * self.form(s, s) / aa for c, s in zip(alpha, self.simple_roots))

    def component(self, root) -> int:
        return self.components[self.index(root)]

    def is_long(self, beta) -> bool:
        self.index(beta)
        comp = self.component(beta)
        bb = self.form(beta, beta)
        return all(self.form(a, a) <= bb for a, c in zip(self.roots, self.components) if c == comp)

    def root_string(self, alpha, beta) -> tuple[int, int]:
        """(p, q) with alpha - p*beta ... alpha + q*beta the beta-string through alpha."""
        alpha, beta = tuple(alpha), tuple(beta)
        self.index(alpha)
        self.index(beta)
        if alpha == beta or alpha == negate(beta):
            raise RootError("root string needs alpha != ±beta")
        p = 0
        while self.is_root(tuple(a - (p + 1) * b for a, b in zip(alpha, beta))):
            p += 1
        q = 0
        while self.is_root(tuple(a + (q + 1) * b for a, b in zip(alpha, beta))):
            q += 1
        return p, q

    def no_three_string(self, beta) -> bool:
        """True iff no beta-string through any root has three or more elements."""
        beta = tuple(beta)
        self.index(beta)
        for alpha in self.roots:
            if alpha == beta or alpha == negate(beta):
                # the string through ±beta is {-beta, beta} (0 is not a root)
                continue
            p, q = self.root_string(alpha, beta)
            if p + q + 1 >= 3:
                return False
        return True

    @cached_property
    def highest_root(self) -> Root:
        """Highest root of the first irreducible factor."""
        return max((r for r, c in zip(self.positive_roots, self.components) if c == 0), key=height)

    @cached_property
    def long_positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.positive_roots if self.is_long(r))


def _generate_roots(cartan: list[list[int]]) -> set[Root]:
    r = len(cartan)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for j in range(r):
                k = sum(beta[i] * cartan[i][j] for i in range(r))
                img = tuple(b - (k if i == j else 0) for i, b in enumerate(beta))
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return seen


def build_root_system(t: CartanType | str) -> RootSystem:
    if isinstance(t, str):
        t = CartanType.parse(t)
    gram = _block_gram(t)
    r = t.rank
    cartan = [[int(2 * gram[i][j] / gram[j][j]) for j in range(r)] for i in range(r)]
    found = _generate_roots(cartan)
    pos = sorted((x for x in found if all(c >= 0 for c in x)), key=_order_key)
    if len(pos) * 2 != len(found):
        raise AssertionError("root closure produced mixed-sign vectors")
    roots = tuple(pos) + tuple(negate(x) for x in pos)

    offsets, off = [], 0
    for _, n in t.factors:
        offsets.append((off, off + n))
        off += n
    comps = tuple(next(k for k, (a, b) in enumerate(offsets) if any(x[a:b])) for x in roots)

    # Killing form on h over the simple coroots: K(H_i, H_j) = sum_alpha alpha(H_i) alpha(H_j)
    evals = [[sum(x[k] * cartan[k][i] for k in range(r)) for i in range(r)] for x in roots]
    kh = Matrix.from_rows([[sum(e[i] * e[j] for e in evals) for j in range(r)] for i in range(r)])
    a = Matrix.from_rows(cartan)
    inner = a @ inverse(kh) @ a.T
    return RootSystem(t, tuple(tuple(row) for row in cartan), roots, inner, comps)

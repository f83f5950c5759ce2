"""Finite and untwisted affine root data with exact integer weights.

Conventions, fixed once and used everywhere downstream:

* Nodes follow the Bourbaki tables.  A finite datum of rank ``n`` has node
  set ``{1, .., n}``; its untwisted affinization adds node ``0``.
* The Cartan matrix is stored as ``cartan[i][j] = alpha_j(h_i)``, so the
  column ``j`` is the coordinate vector of the simple root ``alpha_j`` on
  the basis of simple coroots ``h_i``.
* A weight is the tuple of its integer values on the coroots ``h_i`` (in
  node order) plus the value ``d`` on the scaling element.  Finite-type
  weights simply keep ``d = 0``.
* The affine simple root ``alpha_0`` equals ``delta - theta`` where
  ``theta`` is the highest root; equivalently ``h_0 = c - h_theta`` with
  ``c`` the canonical central element.  A classical weight ``lam`` embeds
  at level zero via ``lam(h_0) = -lam(h_theta)``.
* ``apply_word((i_1, .., i_k), mu)`` is ``s_{i_1}(s_{i_2}(.. s_{i_k}(mu)))``:
  the last letter acts first, matching the composition order of Demazure
  operators.

Everything is integer or ``fractions.Fraction`` arithmetic; no floats.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

from . import errors
from ._linalg import solve_unique

# Inclusive rank ranges of the finite series supported here.
_SERIES_RANKS = {
    "A": (1, 8),
    "B": (2, 8),
    "C": (2, 8),
    "D": (4, 8),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_EXPECTED_POSITIVE = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True)
class Weight:
    """Integer weight: coroot values ``h`` in node order plus grade ``d``."""

    h: tuple[int, ...]
    d: int = 0

    def __add__(self, other: "Weight") -> "Weight":
        if len(self.h) != len(other.h):
            raise ValueError("weights live on different index sets")
        return Weight(tuple(a + b for a, b in zip(self.h, other.h)),
                      self.d + other.d)

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.h), -self.d)

    def __rmul__(self, c: int) -> "Weight":
        return Weight(tuple(c * a for a in self.h), c * self.d)

    def sort_key(self) -> tuple:
        return (self.h, self.d)

    def to_obj(self, with_grade: bool = True) -> dict:
        if with_grade:
            return {"h": list(self.h), "d": self.d}
        return {"h": list(self.h)}


def _build_cartan(series: str, rank: int) -> list[list[int]]:
    """Bourbaki Cartan matrix with entries ``alpha_j(h_i)``."""
    n = rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, down: int = -1, up: int = -1) -> None:
        # 0-based pair; c[i][j] = alpha_j(h_i).
        c[i][j] = down
        c[j][i] = up

    if series == "A":
        for k in range(n - 1):
            link(k, k + 1)
    elif series == "B":
        # Final root short: alpha_n(h_{n-1}) = -1, alpha_{n-1}(h_n) = -2.
        for k in range(n - 2):
            link(k, k + 1)
        link(n - 2, n - 1, down=-1, up=-2)
    elif series == "C":
        # Final root long: alpha_n(h_{n-1}) = -2, alpha_{n-1}(h_n) = -1.
        for k in range(n - 2):
            link(k, k + 1)
        link(n - 2, n - 1, down=-2, up=-1)
    elif series == "D":
        for k in range(n - 3):
            link(k, k + 1)
        link(n - 3, n - 2)
        link(n - 3, n - 1)
    elif series == "E":
        # Chain 1-3-4-5-..-n with node 2 hanging off node 4.
        link(0, 2)
        for k in range(2, n - 1):
            link(k, k + 1)
        link(1, 3)
    elif series == "F":
        link(0, 1)
        link(1, 2, down=-1, up=-2)   # alpha_3 short
        link(2, 3)
    elif series == "G":
        link(0, 1, down=-3, up=-1)   # alpha_1 short
    return c


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> list[int]:
    """Minimal positive integers d with ``d_i c_ij = d_j c_ji``."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(n):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                todo.append(j)
    if any(x is None for x in d):
        raise ValueError("Dynkin diagram is not connected")
    lcm = 1
    for x in d:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in d]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    for i in range(n):
        for j in range(n):
            if ints[i] * cartan[i][j] != ints[j] * cartan[j][i]:
                raise ValueError("symmetrizer check failed")
    return ints


def _positive_roots(cartan: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """All positive roots in simple-root coordinates, by reflection closure."""
    n = len(cartan)
    simple = [tuple(1 if k == j else 0 for k in range(n)) for j in range(n)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        beta = frontier.pop()
        for i in range(n):
            pairing = sum(beta[j] * cartan[i][j] for j in range(n))
            cand = list(beta)
            cand[i] -= pairing
            cand_t = tuple(cand)
            if cand_t not in roots:
                roots.add(cand_t)
                frontier.append(cand_t)
    pos = [b for b in roots if all(x >= 0 for x in b)]
    pos.sort(key=lambda b: (sum(b), b))
    return pos


@dataclass(frozen=True)
class RootDatum:
    """Finite root datum over Bourbaki nodes ``1..rank``."""

    series: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[tuple[int, ...], ...]
    theta_coords: tuple[int, ...]            # highest root on simple roots
    theta_h: tuple[int, ...]                 # theta(h_i) in node order
    marks: tuple[int, ...]                   # theta_coords, kept by name
    comarks: tuple[int, ...]                 # h_theta on the h_i basis
    w0_word: tuple[int, ...]
    short_nodes: tuple[int, ...]             # empty iff simply laced
    lacing: int                              # squared-length ratio r-dual

    # -- index bookkeeping -------------------------------------------------

    @property
    def label(self) -> str:
        return f"{self.series}{self.rank}"

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    def pos(self, i: int) -> int:
        if not 1 <= i <= self.rank:
            raise errors.IndexOutOfRange(f"node {i} not in {self.label}")
        return i - 1

    # -- weights -----------------------------------------------------------

    def weight(self, h: Iterable[int], d: int = 0) -> Weight:
        ht = tuple(int(x) for x in h)
        if len(ht) != self.rank:
            raise ValueError(f"expected {self.rank} coroot values")
        return Weight(ht, d)

    @property
    def zero_weight(self) -> Weight:
        return Weight((0,) * self.rank, 0)

    def fundamental_weight(self, i: int) -> Weight:
        p = self.pos(i)
        return Weight(tuple(1 if k == p else 0 for k in range(self.rank)), 0)

    @property
    def rho(self) -> Weight:
        return Weight((1,) * self.rank, 0)

    def value(self, mu: Weight, i: int) -> int:
        return mu.h[self.pos(i)]

    def simple_root(self, i: int) -> Weight:
        p = self.pos(i)
        return Weight(tuple(self.cartan[k][p] for k in range(self.rank)), 0)

    def is_dominant(self, mu: Weight) -> bool:
        return all(x >= 0 for x in mu.h)

    def is_short_node(self, i: int) -> bool:
        return i in self.short_nodes

    def root_lacing(self, i: int) -> int:
        """Squared-length ratio of a long root to ``alpha_i``."""
        return self.symmetrizer[max(range(self.rank),
                                    key=self.symmetrizer.__getitem__)] \
            // self.symmetrizer[self.pos(i)]

    def coroot(self, beta: Sequence[int]) -> tuple[int, ...]:
        """Coefficients of ``h_beta`` on the ``h_i`` basis."""
        n = self.rank
        q = sum(beta[i] * beta[j] * self.symmetrizer[i] * self.cartan[i][j]
                for i in range(n) for j in range(n))
        coeffs = [Fraction(2 * self.symmetrizer[j] * beta[j], q)
                  for j in range(n)]
        if any(x.denominator != 1 for x in coeffs):
            raise ValueError("coroot coefficients must be integral")
        return tuple(int(x) for x in coeffs)

    def pair_coroot(self, mu: Weight, beta: Sequence[int]) -> int:
        return sum(c * v for c, v in zip(self.coroot(beta), mu.h))


@dataclass(frozen=True)
class AffineDatum:
    """Untwisted affinization of a finite root datum; node set ``0..rank``."""

    finite: RootDatum
    cartan: tuple[tuple[int, ...], ...]      # over nodes 0..rank
    dual_marks: tuple[int, ...]              # level functional, node order
    marks: tuple[int, ...]                   # delta on the simple roots

    @property
    def label(self) -> str:
        return f"{self.finite.label}~"

    @property
    def rank(self) -> int:
        return self.finite.rank

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(range(0, self.rank + 1))

    def pos(self, i: int) -> int:
        if not 0 <= i <= self.rank:
            raise errors.IndexOutOfRange(f"node {i} not in {self.label}")
        return i

    def weight(self, h: Iterable[int], d: int = 0) -> Weight:
        ht = tuple(int(x) for x in h)
        if len(ht) != self.rank + 1:
            raise ValueError(f"expected {self.rank + 1} coroot values")
        return Weight(ht, d)

    def fundamental_weight(self, i: int) -> Weight:
        p = self.pos(i)
        return Weight(tuple(1 if k == p else 0 for k in range(self.rank + 1)),
                      0)

    @property
    def delta(self) -> Weight:
        return Weight((0,) * (self.rank + 1), 1)

    def value(self, mu: Weight, i: int) -> int:
        return mu.h[self.pos(i)]

    def simple_root(self, i: int) -> Weight:
        p = self.pos(i)
        col = tuple(self.cartan[k][p] for k in range(self.rank + 1))
        return Weight(col, 1 if i == 0 else 0)

    def is_dominant(self, mu: Weight) -> bool:
        return all(x >= 0 for x in mu.h)

    def level(self, mu: Weight) -> int:
        return sum(a * v for a, v in zip(self.dual_marks, mu.h))

    def embed_classical(self, lam: Weight, grade: int = 0) -> Weight:
        """Level-zero embedding of a classical weight, placed at ``grade``."""
        if len(lam.h) != self.rank:
            raise ValueError("classical weight has wrong rank")
        h0 = -sum(a * v for a, v in zip(self.finite.comarks, lam.h))
        return Weight((h0,) + lam.h, grade)

    def classical_part(self, mu: Weight) -> Weight:
        return Weight(mu.h[1:], 0)


Datum = Union[RootDatum, AffineDatum]


def build_finite_datum(series: str, rank: int) -> RootDatum:
    """Construct the finite root datum for a Cartan-Killing label."""
    if series not in _SERIES_RANKS:
        raise errors.UnknownType(f"unknown series {series!r}")
    lo, hi = _SERIES_RANKS[series]
    if not (isinstance(rank, int) and lo <= rank <= hi):
        raise errors.UnknownType(f"rank {rank} invalid for series {series}")

    cartan = _build_cartan(series, rank)
    sym = _symmetrizer(cartan)
    pos = _positive_roots(cartan)
    if len(pos) != _EXPECTED_POSITIVE[series](rank):
        raise AssertionError("positive root count mismatch")

    theta = max(pos, key=lambda b: (sum(b), b))
    theta_h = tuple(sum(theta[j] * cartan[i][j] for j in range(rank))
                    for i in range(rank))
    if any(v < 0 for v in theta_h):
        raise AssertionError("highest root is not dominant")
    dmax = max(sym)
    comarks = []
    for j in range(rank):
        num = theta[j] * sym[j]
        if num % dmax:
            raise AssertionError("comarks must be integral")
        comarks.append(num // dmax)

    # Longest-element word: greedily reduce -rho, recording letters in the
    # order they act; the word then satisfies apply_word(word, rho) = -rho.
    cur = [-1] * rank
    word: list[int] = []
    while True:
        neg = next((i for i in range(rank) if cur[i] < 0), None)
        if neg is None:
            break
        v = cur[neg]
        cur = [cur[k] - v * cartan[k][neg] for k in range(rank)]
        word.append(neg + 1)
    if len(word) != len(pos) or any(x != 1 for x in cur):
        raise AssertionError("longest-element word has wrong length")

    short = tuple(i + 1 for i in range(rank) if sym[i] < dmax)
    lacing = dmax // min(sym)

    return RootDatum(
        series=series,
        rank=rank,
        cartan=tuple(tuple(row) for row in cartan),
        symmetrizer=tuple(sym),
        positive_roots=tuple(pos),
        theta_coords=theta,
        theta_h=theta_h,
        marks=theta,
        comarks=tuple(comarks),
        w0_word=tuple(word),
        short_nodes=short,
        lacing=lacing,
    )


_LABEL_RE = re.compile(r"^([A-G])([0-9]+)$")


def datum_from_label(label: str) -> RootDatum:
    """Parse a label such as ``C2`` into a finite root datum."""
    m = _LABEL_RE.match(label.strip())
    if not m:
        raise errors.UnknownType(f"cannot parse type label {label!r}")
    return build_finite_datum(m.group(1), int(m.group(2)))


def affinize(rd: RootDatum) -> AffineDatum:
    """Untwisted affinization with ``alpha_0 = delta - theta``."""
    n = rd.rank
    cartan = [[0] * (n + 1) for _ in range(n + 1)]
    cartan[0][0] = 2
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            cartan[i][j] = rd.cartan[i - 1][j - 1]
        cartan[i][0] = -rd.theta_h[i - 1]                 # alpha_0(h_i)
        cartan[0][i] = -sum(rd.comarks[k] * rd.cartan[k][i - 1]
                            for k in range(n))            # alpha_i(h_0)
    dual_marks = (1,) + rd.comarks
    marks = (1,) + rd.marks

    ad = AffineDatum(
        finite=rd,
        cartan=tuple(tuple(row) for row in cartan),
        dual_marks=dual_marks,
        marks=marks,
    )
    # Structural checks: generalized-Cartan shape, roots of level zero, and
    # alpha_0 + theta = delta in coroot values and grade.
    for i in range(n + 1):
        for j in range(n + 1):
            if i == j:
                assert cartan[i][j] == 2
            else:
                assert cartan[i][j] <= 0
                assert (cartan[i][j] == 0) == (cartan[j][i] == 0)
    for i in ad.indices:
        assert ad.level(ad.simple_root(i)) == 0
    total = ad.simple_root(0)
    for i in range(1, n + 1):
        total = total + rd.marks[i - 1] * ad.simple_root(i)
    assert total == ad.delta
    return ad


# -- Weyl group action -----------------------------------------------------


def reflect_weight(datum: Datum, i: int, mu: Weight) -> Weight:
    """Simple reflection ``s_i(mu) = mu - mu(h_i) alpha_i``."""
    v = datum.value(mu, i)
    if v == 0:
        return mu
    return mu - v * datum.simple_root(i)


def apply_word(datum: Datum, word: Sequence[int], mu: Weight) -> Weight:
    """Act by a word, last letter first."""
    cur = mu
    for i in reversed(word):
        cur = reflect_weight(datum, i, cur)
    return cur


def make_dominant(datum: Datum, mu: Weight,
                  tie_break: str = "min") -> tuple[Weight, tuple[int, ...]]:
    """Reduce to the dominant chamber.

    Returns ``(lam, word)`` with ``lam`` dominant and
    ``apply_word(word, lam) == mu``; the word is reduced.  Each step reflects
    at a node with negative value, by default the smallest such node
    (``tie_break="max"`` picks the largest instead and is exposed for
    cross-checks).  Affine weights must have positive level, otherwise the
    walk need not terminate.
    """
    if isinstance(datum, AffineDatum) and datum.level(mu) <= 0:
        raise errors.ZeroLevel(
            f"level {datum.level(mu)} weight cannot be reduced")
    pick = min if tie_break == "min" else max
    cur = mu
    word: list[int] = []
    while True:
        neg = [i for i in datum.indices if datum.value(cur, i) < 0]
        if not neg:
            return cur, tuple(word)
        i = pick(neg)
        cur = reflect_weight(datum, i, cur)
        word.append(i)


def dominance_leq(datum: Datum, mu: Weight, lam: Weight) -> bool:
    """True iff ``lam - mu`` is a nonnegative integer sum of simple roots."""
    diff = lam - mu
    cols = [datum.simple_root(i) for i in datum.indices]
    rows = [[alpha.h[k] for alpha in cols] for k in range(len(diff.h))]
    rhs = list(diff.h)
    if isinstance(datum, AffineDatum):
        rows.append([alpha.d for alpha in cols])
        rhs.append(diff.d)
    sol = solve_unique(rows, rhs)
    if sol is None:
        return False
    return all(x.denominator == 1 and x >= 0 for x in sol)


# -- short-root subsystem ---------------------------------------------------


@dataclass(frozen=True)
class ShortEmbedding:
    """Short-root subsystem of a non-simply-laced datum.

    ``nodes[k]`` is the parent node carried by subdatum node ``k + 1``.  The
    subdatum is an honest type-A datum in its own simply-laced normalization;
    the change of squared length relative to the parent shows up downstream
    only as a rescaled level, never inside this embedding.
    """

    parent: RootDatum
    subdatum: RootDatum
    nodes: tuple[int, ...]

    def restrict(self, mu: Weight) -> Weight:
        """Restriction of a parent weight to the short coroots."""
        return Weight(tuple(mu.h[self.parent.pos(i)] for i in self.nodes), 0)

    def section(self, mu: Weight) -> tuple[Fraction, ...]:
        """Rational section on parent coroot values, root by root.

        Sends each subdatum simple root to the matching parent simple root
        and extends linearly; the image of a lattice weight may have
        fractional parent coordinates.
        """
        coords = _root_coordinates(self.subdatum, mu)
        n = self.parent.rank
        out = [Fraction(0)] * n
        for c, node in zip(coords, self.nodes):
            alpha = self.parent.simple_root(node)
            out = [a + c * v for a, v in zip(out, alpha.h)]
        return tuple(out)


def _root_coordinates(rd: RootDatum, mu: Weight) -> list[Fraction]:
    cols = [rd.simple_root(i) for i in rd.indices]
    rows = [[alpha.h[k] for alpha in cols] for k in range(rd.rank)]
    sol = solve_unique(rows, list(mu.h))
    assert sol is not None
    return sol


def short_subdatum(rd: RootDatum) -> ShortEmbedding:
    """Subsystem spanned by the short simple roots; type A by inspection."""
    if not rd.short_nodes:
        raise errors.SimplyLaced(f"{rd.label} has no short roots")
    nodes = rd.short_nodes
    k = len(nodes)
    sub = build_finite_datum("A", k)
    for a in range(k):
        for b in range(k):
            pa, pb = rd.pos(nodes[a]), rd.pos(nodes[b])
            if rd.cartan[pa][pb] != sub.cartan[a][b]:
                raise AssertionError("short subsystem is not a type-A chain")
    return ShortEmbedding(parent=rd, subdatum=sub, nodes=nodes)


def eta_lambda(se: ShortEmbedding, lam: Weight, mu: Weight) -> Weight:
    """Lift of a subdatum weight below ``restrict(lam)`` back to the parent.

    Writes ``restrict(lam) - mu`` as a nonnegative integer combination of
    subdatum simple roots and subtracts the matching parent simple roots
    from ``lam``.  The result is again an integral parent weight.
    """
    diff = se.restrict(lam) - mu
    sub = se.subdatum
    cols = [sub.simple_root(i) for i in sub.indices]
    rows = [[alpha.h[k] for alpha in cols] for k in range(sub.rank)]
    sol = solve_unique(rows, list(diff.h))
    if sol is None or any(x.denominator != 1 or x < 0 for x in sol):
        raise errors.NotBelow(
            "weight is not below the restriction in the subsystem")
    out = lam
    for c, node in zip(sol, se.nodes):
        out = out - int(c) * se.parent.simple_root(node)
    return out

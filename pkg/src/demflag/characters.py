"""Formal characters and the Demazure operator in its ladder form.

A formal character is a finite integer combination of exponentials of
weights of one fixed datum; mixing datums is refused.  The Demazure
operator for node ``i`` acts term by term on ``e^mu`` with ``n = mu(h_i)``:

* ``n >= 0``  gives the ladder ``e^mu + e^(mu - alpha_i) + .. + e^(s_i mu)``,
* ``n == -1`` gives zero,
* ``n <= -2`` gives minus the interior ladder
  ``e^(mu + alpha_i) + .. + e^(s_i mu - alpha_i)``.

Composites along a reduced word therefore stay exact in integers, and the
operator is idempotent node by node.

A graded classical character records a finite-type character together with
an integer grade on every term.  It is the shadow of an affine character:
restrict each weight to the finite coroots and read the grade off the
``d`` value.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from . import errors
from .root_data import AffineDatum, Datum, RootDatum, Weight, reflect_weight


class FormalCharacter:
    """Finite map ``Weight -> nonzero int`` over one datum."""

    __slots__ = ("datum", "_terms")

    def __init__(self, datum: Datum, terms: Mapping[Weight, int]):
        self.datum = datum
        self._terms = {w: c for w, c in terms.items() if c != 0}

    @classmethod
    def zero(cls, datum: Datum) -> "FormalCharacter":
        return cls(datum, {})

    @classmethod
    def monomial(cls, datum: Datum, w: Weight, c: int = 1) -> "FormalCharacter":
        return cls(datum, {w: c})

    def _check(self, other: "FormalCharacter") -> None:
        if self.datum.label != other.datum.label:
            raise ValueError(
                f"mixed datums {self.datum.label} and {other.datum.label}")

    def terms(self) -> list[tuple[Weight, int]]:
        return sorted(self._terms.items(), key=lambda t: t[0].sort_key())

    def coefficient(self, w: Weight) -> int:
        return self._terms.get(w, 0)

    def support(self) -> list[Weight]:
        return [w for w, _ in self.terms()]

    def mass(self) -> int:
        return sum(self._terms.values())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, FormalCharacter)
                and self.datum.label == other.datum.label
                and self._terms == other._terms)

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        self._check(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return FormalCharacter(self.datum, out)

    def __neg__(self) -> "FormalCharacter":
        return FormalCharacter(self.datum,
                               {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "FormalCharacter") -> "FormalCharacter":
        return self + (-other)

    def scale(self, c: int) -> "FormalCharacter":
        return FormalCharacter(self.datum,
                               {w: c * v for w, v in self._terms.items()})

    def __mul__(self, other: "FormalCharacter") -> "FormalCharacter":
        self._check(other)
        out: dict[Weight, int] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return FormalCharacter(self.datum, out)

    def __repr__(self) -> str:
        inner = " + ".join(f"{c}*e[{w.h},{w.d}]" for w, c in self.terms())
        return f"FormalCharacter({self.datum.label}: {inner or '0'})"


def demazure_step(datum: Datum, i: int, f: FormalCharacter) -> FormalCharacter:
    """One Demazure operator applied to a character, term by term."""
    alpha = datum.simple_root(i)
    out: dict[Weight, int] = {}

    def bump(w: Weight, c: int) -> None:
        out[w] = out.get(w, 0) + c

    for mu, c in f._terms.items():
        n = datum.value(mu, i)
        if n >= 0:
            for k in range(n + 1):
                bump(mu - k * alpha, c)
        elif n <= -2:
            for k in range(1, -n):
                bump(mu + k * alpha, -c)
        # n == -1 contributes nothing.
    return FormalCharacter(datum, out)


def demazure_word_char(datum: Datum, word: Sequence[int],
                       seed: Weight) -> FormalCharacter:
    """Composite Demazure operator along a word, applied to ``e^seed``.

    The last letter acts first, matching ``apply_word``.  For a reduced word
    this is the Demazure character of the corresponding extremal weight.
    """
    f = FormalCharacter.monomial(datum, seed)
    for i in reversed(word):
        f = demazure_step(datum, i, f)
    return f


def weyl_character_finite(rd: RootDatum, lam: Weight) -> FormalCharacter:
    """Character of the simple finite-dimensional module of highest weight."""
    if not rd.is_dominant(lam):
        raise errors.NotDominant(f"{lam.h} is not dominant for {rd.label}")
    return demazure_word_char(rd, rd.w0_word, lam)


class GradedClassicalCharacter:
    """Finite map ``(classical weight, grade) -> nonzero int``."""

    __slots__ = ("datum", "_terms")

    def __init__(self, datum: RootDatum,
                 terms: Mapping[tuple[tuple[int, ...], int], int]):
        self.datum = datum
        self._terms = {k: c for k, c in terms.items() if c != 0}

    @classmethod
    def zero(cls, datum: RootDatum) -> "GradedClassicalCharacter":
        return cls(datum, {})

    def _check(self, other: "GradedClassicalCharacter") -> None:
        if self.datum.label != other.datum.label:
            raise ValueError(
                f"mixed datums {self.datum.label} and {other.datum.label}")

    def terms(self) -> list[tuple[tuple[tuple[int, ...], int], int]]:
        return sorted(self._terms.items(), key=lambda t: (t[0][1], t[0][0]))

    def coefficient(self, lam: Weight, grade: int) -> int:
        return self._terms.get((lam.h, grade), 0)

    def grades(self) -> list[int]:
        return sorted({g for _, g in self._terms})

    def grade_slice(self, grade: int) -> dict[tuple[int, ...], int]:
        return {h: c for (h, g), c in self._terms.items() if g == grade}

    def classical_support(self) -> list[Weight]:
        return sorted({Weight(h, 0) for (h, _) in self._terms},
                      key=lambda w: w.sort_key())

    def mass(self) -> int:
        return sum(self._terms.values())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GradedClassicalCharacter)
                and self.datum.label == other.datum.label
                and self._terms == other._terms)

    def __add__(self, other) -> "GradedClassicalCharacter":
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return GradedClassicalCharacter(self.datum, out)

    def __neg__(self) -> "GradedClassicalCharacter":
        return GradedClassicalCharacter(
            self.datum, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "GradedClassicalCharacter":
        return self + (-other)

    def scale(self, c: int) -> "GradedClassicalCharacter":
        return GradedClassicalCharacter(
            self.datum, {k: c * v for k, v in self._terms.items()})

    def to_records(self) -> list[dict]:
        return [{"weight": {"h": list(h)}, "grade": g, "coeff": c}
                for (h, g), c in self.terms()]

    def __repr__(self) -> str:
        inner = " + ".join(f"{c}*q^{g}e[{h}]" for (h, g), c in self.terms())
        return f"GradedClassicalCharacter({self.datum.label}: {inner or '0'})"


def project_graded_classical(ad: AffineDatum,
                             f: FormalCharacter) -> GradedClassicalCharacter:
    """Drop ``h_0``, keep the finite coroot values, read the grade off ``d``.

    Terms that collide after projection are summed, so coefficients are
    preserved.
    """
    if f.datum.label != ad.label:
        raise ValueError("character does not live on the given affine datum")
    out: dict[tuple[tuple[int, ...], int], int] = {}
    for w, c in f._terms.items():
        key = (w.h[1:], w.d)
        out[key] = out.get(key, 0) + c
    return GradedClassicalCharacter(ad.finite, out)


def forget_grading(g: GradedClassicalCharacter) -> FormalCharacter:
    """Sum out the grade, leaving a plain finite-type character."""
    out: dict[Weight, int] = {}
    for (h, _), c in g._terms.items():
        w = Weight(h, 0)
        out[w] = out.get(w, 0) + c
    return FormalCharacter(g.datum, out)


def shift_grade(g: GradedClassicalCharacter, m: int) -> GradedClassicalCharacter:
    """Add ``m`` to every grade."""
    return GradedClassicalCharacter(
        g.datum, {(h, grade + m): c for (h, grade), c in g._terms.items()})


def check_w_invariance_per_grade(rd: RootDatum,
                                 g: GradedClassicalCharacter) -> bool:
    """True iff every grade slice is invariant under all simple reflections."""
    for grade in g.grades():
        sl = g.grade_slice(grade)
        for i in rd.indices:
            reflected: dict[tuple[int, ...], int] = {}
            for h, c in sl.items():
                rh = reflect_weight(rd, i, Weight(h, 0)).h
                reflected[rh] = reflected.get(rh, 0) + c
            if reflected != sl:
                return False
    return True

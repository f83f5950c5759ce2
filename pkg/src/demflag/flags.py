"""Flags by higher-level Demazure characters and graded Weyl characters.

The decomposition engine is triangular leading-term subtraction.  A graded,
Weyl-invariant classical character is peeled one piece at a time: pick a
dominance-maximal classical weight of the residue, take its least grade and
coefficient, subtract that multiple of the matching Demazure character at
the target level shifted to that grade.  Triangularity of Demazure
characters (top weight with coefficient one, everything else strictly
below) makes the outcome independent of how ties between incomparable
maxima are broken.

The graded character of a local Weyl module is assembled as follows.  In
simply-laced type it is a single level-one Demazure character.  Otherwise
the short-root subsystem carries a level-one Demazure character of its own
simply-laced affinization, which decomposes at target level equal to the
lacing number; each piece lifts through the short subsystem back to the
parent, where it names a level-one Demazure character with the same grade
shift and multiplicity.  The sum is the graded Weyl character, and the list
of lifted pieces is its flag.

Characters of local Weyl modules multiply: the module for a sum of
dominant weights attached to pairwise distinct labels is the tensor
product of the modules of the summands, so its ungraded character is the
product of theirs.  That is also the source of the dimension check against
the product over fundamental weights.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import errors
from .characters import (FormalCharacter, GradedClassicalCharacter,
                         check_w_invariance_per_grade, forget_grading,
                         shift_grade)
from .demazure import DemazureLabel, demazure_character
from .root_data import (AffineDatum, RootDatum, Weight, affinize,
                        dominance_leq, eta_lambda, short_subdatum)


@dataclass(frozen=True)
class FlagDecomposition:
    """Pieces ``(classical weight, grade, multiplicity)`` at one level."""

    level: int
    pieces: tuple[tuple[Weight, int, int], ...]

    def to_obj(self) -> dict:
        return {
            "level": self.level,
            "pieces": [{"lambda": {"h": list(w.h)}, "grade": g, "mult": c}
                       for w, g, c in self.pieces],
        }

    def multiset(self) -> list[tuple[tuple[int, ...], int]]:
        """Pairs (weight h-values, grade), one entry per multiplicity."""
        out = []
        for w, g, c in self.pieces:
            out.extend([(w.h, g)] * c)
        return sorted(out)


@dataclass(frozen=True)
class DominantLWeight:
    """Dominant weight split as labelled summands; labels must differ."""

    factors: tuple[tuple[Weight, str], ...]

    def __post_init__(self) -> None:
        labels = [a for _, a in self.factors]
        if len(set(labels)) != len(labels):
            raise ValueError("summand labels must be pairwise distinct")

    def weight(self, rd: RootDatum) -> Weight:
        total = rd.zero_weight
        for w, _ in self.factors:
            total = total + w
        return total


def _maximal_weights(datum: RootDatum,
                     weights: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    out = []
    for h in weights:
        w = Weight(h, 0)
        if not any(h != o and dominance_leq(datum, w, Weight(o, 0))
                   for o in weights):
            out.append(h)
    return out


def greedy_decompose(ad: AffineDatum, g: GradedClassicalCharacter,
                     level: int, tie_break: str = "max") -> FlagDecomposition:
    """Peel a graded invariant character into level-``level`` pieces.

    Requires per-grade Weyl invariance up front.  ``tie_break`` selects
    among incomparable dominance-maximal weights ("max" or "min" in
    lexicographic order); the resulting multiset of pieces does not depend
    on the choice.
    """
    rd = ad.finite
    if g.datum.label != rd.label:
        raise ValueError("character datum does not match the affine datum")
    if not check_w_invariance_per_grade(rd, g):
        raise errors.NonDominantLeading(
            "character is not Weyl invariant grade by grade")
    pick = max if tie_break == "max" else min
    residue = g
    pieces: list[tuple[Weight, int, int]] = []
    while len(residue) > 0:
        support = sorted({h for h, _ in residue._terms})
        lead_h = pick(_maximal_weights(rd, support))
        lead = Weight(lead_h, 0)
        if not rd.is_dominant(lead):
            raise errors.NonDominantLeading(
                f"leading weight {lead_h} is not dominant")
        grade = min(gr for h, gr in residue._terms if h == lead_h)
        coeff = residue.coefficient(lead, grade)
        if coeff < 0:
            raise errors.NegativeMultiplicity(
                f"piece ({lead_h}, {grade}) has coefficient {coeff}")
        piece = demazure_character(ad, DemazureLabel(level, lead, 0))
        residue = residue - shift_grade(piece, grade).scale(coeff)
        pieces.append((lead, grade, coeff))
    return FlagDecomposition(level=level, pieces=tuple(pieces))


def level_flag(ad: AffineDatum, level: int, to_level: int,
               lam: Weight) -> FlagDecomposition:
    """Flag of a level-``level`` character by level-``to_level`` pieces.

    Only available in simply-laced type, where such flags exist for every
    higher target level.
    """
    if ad.finite.short_nodes:
        raise errors.NotSimplyLaced(
            f"{ad.finite.label} is not simply laced")
    if to_level <= level:
        raise ValueError("target level must exceed the source level")
    g = demazure_character(ad, DemazureLabel(level, lam, 0))
    return greedy_decompose(ad, g, to_level)


def graded_weyl_character(
        rd: RootDatum,
        lam: Weight) -> tuple[GradedClassicalCharacter, FlagDecomposition]:
    """Graded character of the local Weyl module and its level-one flag."""
    if not rd.is_dominant(lam):
        raise errors.NotDominant(f"{lam.h} is not dominant for {rd.label}")
    ad = affinize(rd)
    if not rd.short_nodes:
        char = demazure_character(ad, DemazureLabel(1, lam, 0))
        return char, FlagDecomposition(level=1, pieces=((lam, 0, 1),))

    se = short_subdatum(rd)
    sub_ad = affinize(se.subdatum)
    lam_short = se.restrict(lam)
    short_char = demazure_character(sub_ad, DemazureLabel(1, lam_short, 0))
    short_flag = greedy_decompose(sub_ad, short_char, rd.lacing)

    pieces = []
    total = GradedClassicalCharacter.zero(rd)
    for mu, grade, mult in short_flag.pieces:
        lifted = eta_lambda(se, lam, mu)
        piece = demazure_character(ad, DemazureLabel(1, lifted, 0))
        total = total + shift_grade(piece, grade).scale(mult)
        pieces.append((lifted, grade, mult))
    return total, FlagDecomposition(level=1, pieces=tuple(pieces))


def weyl_dim_product_check(rd: RootDatum,
                           lam: Weight) -> tuple[bool, tuple[int, int]]:
    """Compare the Weyl-module dimension with the fundamental product."""
    mass = graded_weyl_character(rd, lam)[0].mass()
    product = 1
    for i in rd.indices:
        mult = rd.value(lam, i)
        if mult:
            product *= graded_weyl_character(
                rd, rd.fundamental_weight(i))[0].mass() ** mult
    return mass == product, (mass, product)


def local_weyl_character(rd: RootDatum,
                         varpi: DominantLWeight) -> FormalCharacter:
    """Ungraded character of the tensor product over the labelled summands."""
    out = FormalCharacter.monomial(rd, rd.zero_weight)
    for w, _ in varpi.factors:
        out = out * forget_grading(graded_weyl_character(rd, w)[0])
    return out

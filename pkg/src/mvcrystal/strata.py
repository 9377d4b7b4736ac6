"""Finest strata of the Demazure and opposite Demazure filtrations.

iota(P) is the Bruhat-least x whose Demazure family contains P, found
as min W(P, i) over the zero-position subwords of one word; kappa(P)
is the Bruhat-greatest x whose opposite family contains P, found from
the vertex condition over all reduced words of w0 (gated) or by the
membership predicate beyond the gate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .demazure import (
    in_opposite_demazure,
    oracle_binf_demazure_set,
    oracle_demazure_set,
    oracle_opposite_set,
)
from .polytopes import LusztigDatum, canonicalize, change_word, star, weight
from .weyl import (
    SizeGateError,
    WeylElement,
    bruhat_leq,
    coset_min,
    elements_leq,
    maximal_coset_reps,
    minimal_coset_reps,
)
from .words import all_words_w0, hecke_product


@dataclass(frozen=True)
class Stratum:
    """Finest strata of both filtrations through a polytope."""

    iota: WeylElement
    kappa: WeylElement | None = None


def _zero_demazure_product(P: LusztigDatum) -> WeylElement:
    letters = P.word.letters
    return hecke_product(P.datum, (letters[l] for l, v in enumerate(P.n) if v == 0))


def iota(P: LusztigDatum) -> WeylElement:
    """Bruhat minimum of W(P, i) = {v * w0 : v spelled by a subword of
    the zero-position letters}; reduced into W^lam_min for an integral
    base (a no-op by minimality, kept as a guard)."""
    datum = P.datum
    dem = _zero_demazure_product(P)
    w0 = datum.longest_element()
    candidates = [v * w0 for v in elements_leq(dem)]
    best = min(candidates, key=lambda z: z.length)
    assert all(bruhat_leq(best, z) for z in candidates)
    if P.base is not None:
        best = coset_min(best, P.base)
    return best


def iota_shortcut(P: LusztigDatum) -> WeylElement:
    """0-Hecke fast path: iota(P) = D * w0 with D the Demazure product of
    the zero-position letters.  Equivalent to iota by the subword
    property; kept separate and oracle-tested rather than trusted."""
    return _zero_demazure_product(P) * P.datum.longest_element()


def kappa(P: LusztigDatum) -> WeylElement:
    """Bruhat maximum of Y(P) over all reduced words of w0 (gated).

    Beyond the enumeration gate use kappa_predicate, which decides the
    same element through opposite-membership tests.
    """
    datum = P.datum
    if P.base is None:
        raise ValueError("kappa is defined for a highest-weight base only")
    try:
        words = all_words_w0(datum)
    except SizeGateError as err:
        raise SizeGateError(f"{err}; use kappa_predicate (or oracle_kappa) instead") from err
    w0 = datum.longest_element()
    w0lam = w0.act(P.base)
    found = set()
    for word in words:
        dd = change_word(P, word)
        prefixes = word.prefixes()
        from .demazure import _path_vertices

        mus = _path_vertices(dd)
        for l in range(len(word), -1, -1):
            if mus[l] != prefixes[l].act(w0lam):
                break
            found.add(prefixes[l] * w0)
    return _bruhat_max(found)


def kappa_predicate(P: LusztigDatum) -> WeylElement:
    """kappa as max{z in W^lam_max : P lies in the opposite family of z}."""
    if P.base is None:
        raise ValueError("kappa is defined for a highest-weight base only")
    members = [
        z
        for z in maximal_coset_reps(P.datum, P.base)
        if in_opposite_demazure(P, z).member
    ]
    return _bruhat_max(members)


def _bruhat_max(elements):
    elements = list(elements)
    best = max(elements, key=lambda z: z.length)
    assert all(bruhat_leq(z, best) for z in elements)
    return best


def _bruhat_min(elements):
    elements = list(elements)
    best = min(elements, key=lambda z: z.length)
    assert all(bruhat_leq(best, z) for z in elements)
    return best


def oracle_iota(P: LusztigDatum) -> WeylElement:
    """iota from the stratification definition: the Bruhat-least z whose
    (inductively generated) Demazure family contains P."""
    datum = P.datum
    key = canonicalize(P)
    if P.base is not None:
        members = [
            z
            for z in minimal_coset_reps(datum, P.base)
            if key in oracle_demazure_set(z, P.base)
        ]
    else:
        depth = -sum(weight(P).coords)
        members = [
            z
            for z in datum.full_group()
            if key in oracle_binf_demazure_set(z, depth)
        ]
    return _bruhat_min(members)


def oracle_kappa(P: LusztigDatum) -> WeylElement:
    """kappa from the stratification definition, via the inductively
    generated opposite families."""
    if P.base is None:
        raise ValueError("kappa is defined for a highest-weight base only")
    key = canonicalize(P)
    members = [
        z
        for z in maximal_coset_reps(P.datum, P.base)
        if key in oracle_opposite_set(z, P.base)
    ]
    return _bruhat_max(members)


def check_iota_star(P: LusztigDatum) -> bool:
    """Verification endpoint: iota(P*) equals iota(P) inverse."""
    if P.base is not None:
        raise ValueError("the star involution lives on the infinity family")
    return iota_shortcut(star(P)) == iota_shortcut(P).inverse()


def stratum(P: LusztigDatum) -> Stratum:
    """Both strata; kappa falls back to the predicate route past the gate."""
    i = iota_shortcut(P)
    k = None
    if P.base is not None:
        try:
            k = kappa(P)
        except SizeGateError:
            k = kappa_predicate(P)
    return Stratum(iota=i, kappa=k)

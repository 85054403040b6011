"""Exact complement calculus for log pairs, backed by a C++ core."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from . import _core
from ._core import ComplementsError, DomainError, ParseError, run

RationalLike = Union[Fraction, int, str]

__all__ = [
    "ComplementsError",
    "DomainError",
    "ParseError",
    "is_member",
    "rounding_lemma_holds",
    "complement_coeff",
    "is_n_complement_coeffwise",
    "curve_compl",
    "curve_has_n_complement",
    "curve_is_exceptional",
    "enumerate_exceptional_standard",
    "arrangement_compl",
    "arrangement_has_n_complement",
    "candidate_exceptional",
    "enumerate_candidate_exceptional",
    "different_coefficient",
    "duval",
    "discrepancies",
    "lct_table",
    "run",
]


def _q(x: RationalLike) -> str:
    return str(Fraction(x))


def _boundary(d: Union[Mapping[str, RationalLike], Sequence[RationalLike]]):
    if isinstance(d, Mapping):
        return [(str(k), _q(v)) for k, v in d.items()]
    return [(f"P{i + 1}", _q(v)) for i, v in enumerate(d)]


def _report(r):
    return {"n": r["n"], "klt": r["klt"], "witness": {k: Fraction(v) for k, v in r["witness"]}}


def is_member(alpha: RationalLike, set: str = "Msm") -> bool:
    return _core.is_member(_q(alpha), set)


def rounding_lemma_holds(alpha: RationalLike, n: int) -> bool:
    return _core.rounding_lemma_holds(_q(alpha), n)


def complement_coeff(d: RationalLike, n: int) -> int:
    return int(_core.complement_coeff(_q(d), n))


def is_n_complement_coeffwise(boundary, candidate, n: int) -> bool:
    return _core.is_n_complement_coeffwise(_boundary(boundary), _boundary(candidate), n)


def curve_compl(boundary, cap: int = 100):
    return _report(_core.curve_compl(_boundary(boundary), cap))


def curve_has_n_complement(boundary, n: int) -> bool:
    return _core.curve_has_n_complement(_boundary(boundary), n)


def curve_is_exceptional(boundary) -> bool:
    return _core.curve_is_exceptional(_boundary(boundary))


def enumerate_exceptional_standard(max_points: int):
    return [tuple(c) for c in _core.enumerate_exceptional_standard(max_points)]


def arrangement_compl(dim: int, boundary, cap: int = 100):
    return _report(_core.arrangement_compl(dim, _boundary(boundary), cap))


def arrangement_has_n_complement(dim: int, boundary, n: int) -> bool:
    return _core.arrangement_has_n_complement(dim, _boundary(boundary), n)


def candidate_exceptional(dim: int, boundary) -> bool:
    return _core.candidate_exceptional(dim, _boundary(boundary))


def enumerate_candidate_exceptional(dim: int):
    collections, const = _core.enumerate_candidate_exceptional(dim)
    return [tuple(c) for c in collections], const


def different_coefficient(m: int, terms: Iterable[tuple] = ()) -> Fraction:
    return Fraction(_core.different_coefficient(m, [(_q(b), int(n)) for b, n in terms]))


def _doc(x) -> str:
    return x if isinstance(x, str) else json.dumps(x)


def duval(graph) -> dict:
    return dict(_core.duval(_doc(graph)))


def discrepancies(graph) -> dict:
    return {k: Fraction(v) for k, v in _core.discrepancies(_doc(graph))}


def lct_table(table) -> dict:
    r = _core.lct_table(_doc(table))
    return {
        "breakpoints": [Fraction(b) for b in r["breakpoints"]],
        "pieces": [(Fraction(s), Fraction(c)) for s, c in r["pieces"]],
        "alpha0": Fraction(r["alpha0"]),
        "active_at_alpha0": list(r["active_at_alpha0"]),
    }

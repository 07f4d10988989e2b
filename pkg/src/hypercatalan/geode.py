"""Geode and Jumbo Geode arrays.

``S - 1 = (t2 + t3 + ...) G`` and ``T - 1 = (t1 + t2 + ...) J``.  The Geode
is available both as an exact series quotient and through an integer
recurrence over hyper-Catalan numbers; the two are cross-checked.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .catalan_core import VerificationReport, hyper_catalan
from .series import (
    Bounds,
    TruncatedSeries,
    divide_by_layer1,
    face_sum,
    multiply,
    solve_S,
    solve_T,
)
from .type_vectors import HYPER, TypeVector, enumerate_types


@dataclass(frozen=True)
class GeodeEntry:
    index: TypeVector
    value: int


def _plus(x: Optional[int], d: int) -> Optional[int]:
    return None if x is None else x + d


def geode_series(
    max_faces: Optional[int],
    max_degree: int,
    *,
    max_vertices: Optional[int] = None,
    max_edges: Optional[int] = None,
) -> TruncatedSeries:
    """Geode series ``(S - 1) / (t2 + ... + t_D)`` truncated to the given bounds.

    ``S`` is built one face layer (and one pivot weight) deeper so that every
    retained Geode coefficient is determined.
    """
    if max_degree < 2:
        raise ValueError(f"max_degree must be at least 2, got {max_degree}")
    s = solve_S(_plus(max_faces, 1), max_degree,
                max_vertices=_plus(max_vertices, 1), max_edges=_plus(max_edges, 2))
    return divide_by_layer1(s - 1, face_sum(s.bounds))


def jumbo_geode_series(
    max_faces: Optional[int],
    max_degree: int,
    max_k1: Optional[int] = None,
    *,
    max_vertices: Optional[int] = None,
    max_edges: Optional[int] = None,
) -> TruncatedSeries:
    """Jumbo Geode series ``(T - 1) / (t1 + t2 + ... + t_D)``.

    The division pivots on ``t1``, so ``T`` is computed without a ``k1`` cap
    and the quotient is truncated to ``max_k1`` afterwards.
    """
    if max_degree < 1:
        raise ValueError(f"max_degree must be at least 1, got {max_degree}")
    t = solve_T(_plus(max_faces, 1), max_degree, None,
                max_vertices=max_vertices, max_edges=_plus(max_edges, 1))
    j = divide_by_layer1(t - 1, face_sum(t.bounds))
    if max_k1 is not None:
        j = j.truncate(max_k1=max_k1)
    return j


def _c(parts: list) -> int:
    return hyper_catalan(TypeVector(tuple(parts), HYPER))


@lru_cache(maxsize=None)
def _geode(parts: tuple) -> int:
    m = list(parts)
    if m == []:
        m = [0]
    maxi = m.index(max(m))
    m[maxi] += 1
    s = _c(m)
    for i in range(len(m)):
        if i != maxi and m[i] > 0:
            m[i] -= 1
            s += -_geode(tuple(m))
            m[i] += 1
    m[maxi] -= 1
    return s


def geode_number(m) -> int:
    """``G_m`` by the integer recurrence over hyper-Catalan numbers.

    Bump the first maximal entry, take its hyper-Catalan number, and subtract
    the Geode values obtained by lowering each other nonzero entry in turn.
    """
    if isinstance(m, TypeVector):
        if m.base_index != HYPER:
            raise ValueError("Geode numbers are indexed by base-2 type vectors")
        parts = m.parts
    else:
        parts = tuple(int(x) for x in m)
    return _geode(tuple(parts))


def geode_table(max_faces: int, max_degree: int) -> list:
    return [GeodeEntry(m, geode_number(m)) for m in enumerate_types(max_faces, max_degree)]


def geode_crosscheck(max_faces: int, max_degree: int) -> VerificationReport:
    """Recurrence values against the series quotient, plus the factorization round trip."""
    g = geode_series(max_faces, max_degree)
    types = enumerate_types(max_faces, max_degree)
    for i, m in enumerate(types):
        rec = geode_number(m)
        ser = g.coefficient(m)
        if rec != ser or rec < 0:
            return VerificationReport(
                "geode-xcheck", False, i + 1,
                {"type": f"[{m}]", "recurrence": rec, "series": ser},
            )
    s = solve_S(max_faces + 1, max_degree)
    lhs = multiply(face_sum(s.bounds), g)
    target = s - 1
    if not lhs.same_terms(target):
        bad = _first_difference(lhs, target)
        return VerificationReport("geode-xcheck", False, len(types), bad)
    return VerificationReport("geode-xcheck", True, len(types),
                              details={"factorization_terms": len(target)})


def jumbo_factorization_check(max_faces: int, max_degree: int) -> VerificationReport:
    j = jumbo_geode_series(max_faces, max_degree)
    t = solve_T(max_faces + 1, max_degree)
    lhs = multiply(face_sum(t.bounds), j)
    target = t - 1
    if not lhs.same_terms(target):
        return VerificationReport("jumbo-factorization", False, len(target), _first_difference(lhs, target))
    return VerificationReport("jumbo-factorization", True, len(target))


def _first_difference(a: TruncatedSeries, b: TruncatedSeries) -> dict:
    bounds: Bounds = a.bounds.meet(b.bounds)
    a = a.truncate(bounds)
    b = b.truncate(bounds)
    for m in enumerate_types(bounds.max_faces, bounds.max_degree, bounds.base_index, bounds.max_k1,
                             max_vertices=bounds.max_vertices, max_edges=bounds.max_edges):
        if a.coefficient(m) != b.coefficient(m):
            return {"type": f"[{m}]", "product": a.coefficient(m), "expected": b.coefficient(m)}
    return {}

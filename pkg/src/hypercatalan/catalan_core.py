"""Closed forms, recurrences and identity checks for the hyper-Catalan family."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Optional, Sequence

from .errors import InvalidMultinomial, Unsupported
from .type_vectors import HYPER, TUTRANK, TypeVector, enumerate_types, stats


@dataclass
class VerificationReport:
    """Outcome of an identity check over a finite range."""

    name: str
    passed: bool
    checked: int
    counterexample: Optional[dict] = None
    details: dict = field(default_factory=dict)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{self.name}: {status} ({self.checked} cases)"
        if self.counterexample:
            pairs = ", ".join(f"{k}={v}" for k, v in self.counterexample.items())
            line += f"; first counterexample: {pairs}"
        return line


def _exact_int(value: Fraction) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {value}")
    return value.numerator


def multinomial(top: int, parts: Sequence[int]) -> int:
    """``top! / (parts[0]! ... (top - sum(parts))!)``; the remainder part is implicit."""
    if any(p < 0 for p in parts):
        raise InvalidMultinomial(f"negative part in {list(parts)}")
    rest = top - sum(parts)
    if rest < 0:
        raise InvalidMultinomial(f"parts {list(parts)} exceed {top}")
    result = 1
    left = top
    for p in list(parts) + [rest]:
        result *= comb(left, p)
        left -= p
    return result


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def _as_hyper(m) -> TypeVector:
    if isinstance(m, TypeVector):
        if m.base_index != HYPER:
            raise Unsupported("hyper-Catalan numbers are indexed by base-2 type vectors")
        return m
    return TypeVector(tuple(m), HYPER)


def hyper_catalan(m) -> int:
    """``C_m = (E-1)! / ((V-1)! m!)``."""
    m = _as_hyper(m)
    s = stats(m)
    q = Fraction(factorial(s.edges - 1), factorial(s.vertices - 1) * prod(factorial(p) for p in m.parts))
    return _exact_int(q)


def hyper_catalan_power(m, r: int) -> int:
    """Coefficient of ``t^m`` in ``S^r``: ``r (r-2+E)! / (m! (r-2+V)!)``."""
    m = _as_hyper(m)
    if r < 0:
        raise Unsupported("negative powers of S are not supported")
    if r == 0:
        return 1 if m.is_null else 0
    s = stats(m)
    q = Fraction(
        r * factorial(r - 2 + s.edges),
        prod(factorial(p) for p in m.parts) * factorial(r - 2 + s.vertices),
    )
    return _exact_int(q)


def tutrank(k) -> int:
    """``T[m1; m] = binom(m1 + E_m - 1, m1) C_m`` for ``k = [m1, m2, m3, ...]``."""
    if not isinstance(k, TypeVector):
        k = TypeVector(tuple(k), TUTRANK)
    if k.base_index != TUTRANK:
        raise Unsupported("Tutrank numbers are indexed by base-1 type vectors")
    m1 = k[1]
    m = TypeVector(k.parts[1:], HYPER)
    e = stats(m).edges
    return comb(m1 + e - 1, m1) * hyper_catalan(m)


def fuss(n: int, m: int) -> int:
    """Two-parameter Fuss number ``(nm)! / ((1 + (n-1)m)! m!)``."""
    if n < 2:
        raise Unsupported(f"Fuss numbers need n >= 2, got {n}")
    return _exact_int(Fraction(factorial(n * m), factorial(1 + (n - 1) * m) * factorial(m)))


# --- recurrence -------------------------------------------------------------

def _recurrence_terms(target: tuple, j: int, candidates: list):
    """Yield multiplicity lists of non-null candidates summing to ``target`` using at most ``j`` parts."""
    def rec(start, remaining, slots, chosen):
        if not any(remaining):
            yield list(chosen)
            return
        if slots == 0:
            return
        for idx in range(start, len(candidates)):
            cand = candidates[idx]
            if any(c > r for c, r in zip(cand, remaining)):
                continue
            # take ``mult`` copies of this candidate
            mult = 0
            rem = remaining
            while slots - mult > 0:
                rem = tuple(r - c for r, c in zip(rem, cand))
                if any(r < 0 for r in rem):
                    break
                mult += 1
                chosen.append((idx, mult))
                yield from rec(idx + 1, rem, slots - mult, chosen)
                chosen.pop()

    yield from rec(0, target, j, [])


@lru_cache(maxsize=None)
def _recurrence(parts: tuple) -> int:
    if not any(parts):
        return 1
    n = len(parts)
    total = 0
    for pos in range(n):
        if parts[pos] == 0:
            continue
        j = pos + 2
        target = parts[:pos] + (parts[pos] - 1,) + parts[pos + 1:]
        f = sum(target)
        if f == 0:
            total += 1  # j copies of the null type
            continue
        candidates = [
            t.padded(n)
            for t in enumerate_types(f, n + 1, HYPER)
            if not t.is_null
        ]
        candidates = [c for c in candidates if all(x <= y for x, y in zip(c, target))]
        for choice in _recurrence_terms(target, j, candidates):
            mults = [mult for _, mult in choice]
            nulls = j - sum(mults)
            term = multinomial(j, mults + [nulls])
            for idx, mult in choice:
                term *= _recurrence(candidates[idx]) ** mult
            total += term
    return total


def hyper_catalan_recurrence(m) -> int:
    """``C_m`` from the multiset recurrence alone, starting from ``C[] = 1``.

    For each index ``j`` with ``m_j > 0`` the remaining type ``m - e_j`` is
    split into a multiset of ``j`` smaller types; each split contributes its
    multinomial count times the product of their values.
    """
    m = _as_hyper(m)
    if m.is_null:
        return 1
    return _recurrence(m.parts)


# --- identity checks ---------------------------------------------------------

def segner_check(max_m: int) -> VerificationReport:
    """Check ``C_{m+1} = sum_n C_n C_{m-n}`` for ``m <= max_m`` using hyper-Catalan values."""
    cat = [hyper_catalan([n]) for n in range(max_m + 2)]
    for m in range(max_m + 1):
        rhs = sum(cat[n] * cat[m - n] for n in range(m + 1))
        if cat[m + 1] != rhs:
            return VerificationReport(
                "segner", False, m + 1, {"m": m, "lhs": cat[m + 1], "rhs": rhs}
            )
    return VerificationReport("segner", True, max_m + 1)


def _partitions(n: int, k: int, largest: int):
    """Partitions of ``n`` into exactly ``k`` parts, each at most ``largest``, as part lists."""
    if k == 0:
        if n == 0:
            yield []
        return
    if n < k:
        return
    for first in range(min(largest, n - (k - 1)), 0, -1):
        for rest in _partitions(n - first, k - 1, first):
            yield [first] + rest


def fine_lhs(n: int, k: int) -> int:
    """Sum of ``multinomial(k; k1, k2, ...)`` over ``sum k_i = k``, ``sum i k_i = n``."""
    if n == 0 and k == 0:
        return 1
    if k <= 0 or k > n:
        return 0
    total = 0
    for parts in _partitions(n, k, n):
        counts = {}
        for p in parts:
            counts[p] = counts.get(p, 0) + 1
        total += multinomial(k, list(counts.values()))
    return total


def fine_check(max_n: int) -> VerificationReport:
    checked = 0
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            checked += 1
            lhs = fine_lhs(n, k)
            rhs = comb(n - 1, k - 1)
            if lhs != rhs:
                return VerificationReport(
                    "fine", False, checked, {"n": n, "k": k, "lhs": lhs, "rhs": rhs}
                )
    return VerificationReport("fine", True, checked)


def recurrence_check(max_faces: int, max_degree: int) -> VerificationReport:
    types = enumerate_types(max_faces, max_degree)
    for i, m in enumerate(types):
        rec = hyper_catalan_recurrence(m)
        closed = hyper_catalan(m)
        if rec != closed:
            return VerificationReport(
                "recurrence", False, i + 1, {"type": f"[{m}]", "recurrence": rec, "closed_form": closed}
            )
    return VerificationReport("recurrence", True, len(types))


def tutrank_reduction_check(max_faces: int, max_degree: int) -> VerificationReport:
    """``T[0, m2, m3, ...] = C[m2, m3, ...]``."""
    types = enumerate_types(max_faces, max_degree)
    for i, m in enumerate(types):
        t = tutrank(TypeVector((0,) + m.parts, TUTRANK))
        c = hyper_catalan(m)
        if t != c:
            return VerificationReport(
                "tutrank-reduction", False, i + 1, {"type": f"[{m}]", "tutrank": t, "hyper_catalan": c}
            )
    return VerificationReport("tutrank-reduction", True, len(types))


# --- series against closed forms ----------------------------------------------

def facelayer_check(max_faces: int, max_degree: int) -> VerificationReport:
    """``S - 1 - sum t_k S^k`` vanishes layer by layer and ``[t^m]S = C_m``."""
    from .series import residual_S, solve_S

    s = solve_S(max_faces, max_degree)
    r = residual_S(s)
    for f in range(max_faces + 1):
        layer = r.face_layer(f)
        if len(layer):
            parts, c = next(iter(layer.items_raw()))
            return VerificationReport(
                "facelayers", False, f + 1,
                {"layer": f, "type": f"[{TypeVector(parts)}]", "residual": c},
            )
    for m in enumerate_types(max_faces, max_degree):
        if s.coefficient(m) != hyper_catalan(m):
            return VerificationReport(
                "facelayers", False, max_faces + 1,
                {"type": f"[{m}]", "series": s.coefficient(m), "closed_form": hyper_catalan(m)},
            )
    return VerificationReport("facelayers", True, max_faces + 1,
                              details={"terms": len(s)})


def mane_check(max_r: int, max_faces: int, max_degree: int) -> VerificationReport:
    """Coefficients of ``S^r`` against the Mane power closed form for ``r <= max_r``."""
    from .series import power, solve_S

    s = solve_S(max_faces, max_degree)
    types = enumerate_types(max_faces, max_degree)
    checked = 0
    for r in range(max_r + 1):
        sr = power(s, r)
        for m in types:
            checked += 1
            a, b = sr.coefficient(m), hyper_catalan_power(m, r)
            if a != b:
                return VerificationReport(
                    "mane", False, checked, {"r": r, "type": f"[{m}]", "series": a, "closed_form": b}
                )
    return VerificationReport("mane", True, checked)


def tutrank_check(max_faces: int, max_degree: int, max_k1: Optional[int]) -> VerificationReport:
    """Tutrank closed form against ``solve_T``, then the reduction to hyper-Catalans."""
    from .series import solve_T

    t = solve_T(max_faces, max_degree, max_k1)
    types = enumerate_types(max_faces, max_degree, TUTRANK, max_k1)
    for i, k in enumerate(types):
        a, b = t.coefficient(k), tutrank(k)
        if a != b:
            return VerificationReport(
                "tutrank", False, i + 1, {"type": f"[{k}]", "series": a, "closed_form": b}
            )
    red = tutrank_reduction_check(max_faces, max(2, max_degree))
    if not red.passed:
        return red
    return VerificationReport("tutrank", True, len(types) + red.checked)

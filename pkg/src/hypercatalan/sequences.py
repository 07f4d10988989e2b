"""Projections of S, G, T and J onto polynomials in v, e, f and named sequences.

A projection substitutes ``t_k -> w_k * v^a e^b f^c`` where the exponents are
read off the Euler statistics of each term's type vector rather than carried
as extra series variables.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .catalan_core import VerificationReport, fuss
from .geode import geode_series, jumbo_geode_series
from .series import TruncatedSeries, solve_S, solve_T
from .type_vectors import TypeVector, stats

# exponent functionals on (V - 2, E - 1, F)
VERTEX = (1, 0, 0)
EDGE = (0, 1, 0)
FACE = (0, 0, 1)


@dataclass(frozen=True)
class ProjectionSpec:
    """Substitution rule: each variable's exponent is a linear functional of ``(V-2, E-1, F)``.

    ``weights`` multiplies ``t_k`` by a scalar (``0`` drops it).  With
    ``euler_prefactor`` the functionals are applied to ``(V, E, F)``, which
    multiplies vertex/edge layerings by ``e v^2``.
    """

    variables: tuple
    weights: Mapping = field(default_factory=dict)
    euler_prefactor: bool = False
    name: str = ""
    oeis: Optional[str] = None

    def __post_init__(self):
        if not 1 <= len(self.variables) <= 3:
            raise ValueError("a projection has between one and three output variables")
        for name, coeffs in self.variables:
            if len(coeffs) != 3 or any(int(c) != c or c < 0 for c in coeffs):
                raise ValueError(f"variable {name!r} needs three natural coefficients")

    @property
    def names(self) -> tuple:
        return tuple(n for n, _ in self.variables)

    def exponents(self, m: TypeVector) -> tuple:
        s = stats(m)
        if self.euler_prefactor:
            base = (s.vertices, s.edges, s.faces)
        else:
            base = (s.vertices - 2, s.edges - 1, s.faces)
        return tuple(sum(a * b for a, b in zip(coeffs, base)) for _, coeffs in self.variables)


@dataclass
class Projection:
    """Polynomial in up to three variables; ``terms`` maps exponent tuples to coefficients."""

    variables: tuple
    terms: dict
    name: str = ""
    oeis: Optional[str] = None

    def coefficient(self, *exps) -> Fraction:
        return self.terms.get(tuple(exps), 0)

    def sequence(self, n: int, start: int = 0) -> list:
        """Coefficients of ``x^start .. x^(start+n-1)`` for a univariate projection."""
        if len(self.variables) != 1:
            raise ValueError("sequence() needs a univariate projection")
        return [self.terms.get((i,), 0) for i in range(start, start + n)]

    def row(self, lead: int) -> dict:
        """``{second exponent: coefficient}`` for the terms with first exponent ``lead``."""
        out = {}
        for exps, c in self.terms.items():
            if exps[0] == lead:
                out[exps[1:]] = out.get(exps[1:], 0) + c
        return dict(sorted(out.items()))

    def rows(self, leads: Sequence[int]) -> dict:
        return {lead: self.row(lead) for lead in leads}

    def format(self, descending: bool = True) -> str:
        items = sorted(self.terms.items(), reverse=descending)
        parts = []
        for exps, c in items:
            mono = "*".join(
                v + (f"^{e}" if e > 1 else "") for v, e in zip(self.variables, exps) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts) if parts else "0"

    def __add__(self, other: "Projection") -> "Projection":
        if self.variables != other.variables:
            raise ValueError("projections have different variables")
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return Projection(self.variables, {k: c for k, c in terms.items() if c})


def _weight(spec: ProjectionSpec, m: TypeVector):
    w = 1
    for k, count in m.items():
        if k in spec.weights:
            wk = spec.weights[k]
            if wk == 0:
                return 0
            w *= Fraction(wk) ** count
    return w


def project(s: TruncatedSeries, spec: ProjectionSpec) -> Projection:
    terms = {}
    for m, c in s.terms.items():
        w = _weight(spec, m)
        if not w:
            continue
        key = spec.exponents(m)
        terms[key] = terms.get(key, 0) + c * w
    cleaned = {}
    for k, c in sorted(terms.items()):
        if c:
            c = Fraction(c)
            cleaned[k] = c.numerator if c.denominator == 1 else c
    return Projection(spec.names, cleaned, spec.name, spec.oeis)


# --- presets -----------------------------------------------------------------

SCHROEDER = ProjectionSpec((("v", VERTEX),), name="little Schroeder", oeis="A001003")
RIORDAN = ProjectionSpec((("e", EDGE),), name="Riordan", oeis="A005043")
CAYLEY = ProjectionSpec((("v", VERTEX), ("f", FACE)), name="Cayley", oeis="A033282")
LAYERS_VEF = ProjectionSpec((("v", VERTEX), ("e", EDGE), ("f", FACE)), name="vertex layers")
LAYERS_EVF = ProjectionSpec((("e", EDGE), ("v", VERTEX), ("f", FACE)), name="edge layers")


def schroeder(terms: int = 9, max_degree: Optional[int] = None) -> Projection:
    s = solve_S(None, max_degree or max(2, terms), max_vertices=terms - 1)
    return project(s, SCHROEDER)


def riordan(terms: int = 11, max_degree: Optional[int] = None) -> Projection:
    """``S[e^2, e^3, ...]``; a ``max_degree`` below ``terms - 1`` drops the high ``t_k``."""
    s = solve_S(None, max_degree or max(2, terms - 1), max_edges=terms - 1)
    return project(s, RIORDAN)


def cayley(rows: int = 7, max_degree: Optional[int] = None) -> Projection:
    s = solve_S(None, max_degree or rows + 1, max_vertices=rows)
    return project(s, CAYLEY)


def project_geode(kind: str, terms: int, max_degree: Optional[int] = None) -> Projection:
    """Geode projections; ``terms`` counts sequence terms, or Cayley rows."""
    if kind == "schroeder":
        g = geode_series(None, max_degree or max(2, terms), max_vertices=terms - 1)
        spec = SCHROEDER
    elif kind == "riordan":
        g = geode_series(None, max_degree or max(2, terms - 1), max_edges=terms - 1)
        spec = RIORDAN
    elif kind == "cayley":
        g = geode_series(None, max_degree or terms + 1, max_vertices=terms)
        spec = CAYLEY
    else:
        raise ValueError(f"unknown Geode projection {kind!r}")
    p = project(g, spec)
    p.name = f"Geode {spec.name}"
    p.oeis = None
    return p


def project_jumbo(kind: str, terms: int, max_k1: Optional[int] = None,
                  max_degree: Optional[int] = None) -> Projection:
    """Jumbo Geode projections.

    ``riordan``: ``t_k -> e^k``.  ``edge_layers``: ``t_k -> v^(k-1) e^k f``
    grouped by ``e`` up to ``e^terms``.  ``vertex_layers``: grouped by ``v``
    up to ``v^terms`` with ``k1 <= max_k1`` (vertex layers are infinite
    without that cap).
    """
    if kind == "riordan":
        j = jumbo_geode_series(None, max_degree or max(1, terms - 1), max_edges=terms - 1)
        spec = RIORDAN
    elif kind == "edge_layers":
        j = jumbo_geode_series(None, max_degree or max(1, terms), max_edges=terms)
        spec = LAYERS_EVF
    elif kind == "vertex_layers":
        if max_k1 is None:
            raise ValueError("vertex layers need max_k1")
        j = jumbo_geode_series(terms + max_k1, max_degree or terms + 1, max_k1, max_vertices=terms)
        spec = LAYERS_VEF
    else:
        raise ValueError(f"unknown Jumbo Geode projection {kind!r}")
    p = project(j, spec)
    p.name = f"Jumbo Geode {kind}"
    return p


def tutrank_catalan(terms: int = 11, minus_one: bool = True) -> Projection:
    """``T[e, e^2, e^3, ...]``: the Catalan numbers, shifted when ``minus_one``."""
    top = terms if minus_one else terms - 1
    t = solve_T(None, max(1, top), max_edges=top)
    if minus_one:
        t = t - 1
    p = project(t, RIORDAN)
    p.name = "Tutrank Catalan" + (" (T-1)" if minus_one else "")
    p.oeis = "A000108"
    return p


def tutrank_riordan(terms: int = 11, minus_one: bool = True) -> Projection:
    """``T[0, e^2, e^3, ...]``, which recovers the Riordan numbers."""
    top = terms if minus_one else terms - 1
    t = solve_T(None, max(1, top), max_edges=top)
    if minus_one:
        t = t - 1
    spec = ProjectionSpec((("e", EDGE),), weights={1: 0}, name="Tutrank Riordan", oeis="A005043")
    return project(t, spec)


def fuss_reversion(n: int, terms: int) -> list:
    """Coefficients ``[y^1..y^terms]`` of ``z - 1`` where ``1 - z + y z^n = 0``.

    Computed from the hyper-Catalan series with only ``t_n`` nonzero.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    s = solve_S(terms, n, max_vertices=(n - 1) * terms, indices=[n])
    out = []
    for m in range(1, terms + 1):
        key = TypeVector((0,) * (n - 2) + (m,))
        c = s.coefficient(key)
        out.append(c.numerator if c.denominator == 1 else c)
    return out


def fuss_check(max_n: int, max_m: int) -> VerificationReport:
    checked = 0
    for n in range(2, max_n + 1):
        series_vals = fuss_reversion(n, max_m)
        for m in range(1, max_m + 1):
            checked += 1
            if series_vals[m - 1] != fuss(n, m):
                return VerificationReport(
                    "fuss", False, checked,
                    {"n": n, "m": m, "series": series_vals[m - 1], "closed_form": fuss(n, m)},
                )
    return VerificationReport("fuss", True, checked)


# --- export ------------------------------------------------------------------

def to_bfile(values: Sequence, offset: int = 0) -> str:
    """b-file text: ``index value`` per line."""
    return "".join(f"{offset + i} {v}\n" for i, v in enumerate(values))


def sequence_to_csv(values: Sequence, offset: int = 0) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["index", "value"])
    for i, v in enumerate(values):
        w.writerow([offset + i, v])
    return buf.getvalue()


def table_to_csv(rows: Mapping[int, Mapping[tuple, object]], lead: str, inner: str) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([lead, inner, "coefficient"])
    for a, row in rows.items():
        for exps, c in row.items():
            w.writerow([a, ",".join(map(str, exps)), c])
    return buf.getvalue()


def _json_number(c):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def projection_to_json(p: Projection) -> str:
    doc = {
        "name": p.name,
        "oeis": p.oeis,
        "variables": list(p.variables),
        "terms": [{"exponents": list(k), "coefficient": _json_number(c)} for k, c in sorted(p.terms.items())],
    }
    return json.dumps(doc, indent=2)

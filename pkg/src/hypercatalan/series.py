"""Sparse truncated multivariate power series over exact rationals.

Series are indexed by :class:`TypeVector` and truncated by face count and
degree, optionally also by ``k1`` (Tutrank series), by ``V - 2`` and by
``E - 1``.  All four statistics are additive under multiplication, so
truncated products are exact on every retained term.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from . import kernels
from .errors import BaseMismatch, NotDivisible, OutOfTruncation
from .type_vectors import (
    HYPER,
    TUTRANK,
    TypeVector,
    edge_weight,
    position_caps,
    vertex_weight,
)

_BIG = 1 << 60


def _norm(c):
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, str):
        return _norm(Fraction(c))
    if isinstance(c, float):
        raise TypeError("floats are not exact; pass a Fraction or a 'num/den' string")
    return _norm(Fraction(c))


def _strip(parts: tuple) -> tuple:
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


def _min_opt(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


@dataclass(frozen=True)
class Bounds:
    max_faces: Optional[int]
    max_degree: int
    base_index: int = HYPER
    max_k1: Optional[int] = None
    max_vertices: Optional[int] = None
    max_edges: Optional[int] = None

    def __post_init__(self):
        if self.base_index == HYPER and self.max_k1 is not None:
            object.__setattr__(self, "max_k1", None)
        # fail early on unbounded shapes
        position_caps(self.max_degree, self.base_index, self.max_faces, self.max_k1,
                      self.max_vertices, self.max_edges)

    @property
    def dim(self) -> int:
        return max(0, self.max_degree - self.base_index + 1)

    def weights(self, parts: tuple) -> tuple:
        f = v = e = 0
        for i, c in enumerate(parts):
            if c:
                k = self.base_index + i
                f += c
                v += vertex_weight(k) * c
                e += edge_weight(k) * c
        k1 = parts[0] if (self.base_index == TUTRANK and parts) else 0
        return f, v, e, k1

    def limits(self) -> tuple:
        return tuple(_BIG if x is None else x
                     for x in (self.max_faces, self.max_vertices, self.max_edges, self.max_k1))

    def admits(self, parts: tuple) -> bool:
        if len(parts) > self.dim:
            return False
        w = self.weights(parts)
        return all(x <= lim for x, lim in zip(w, self.limits()))

    def meet(self, other: "Bounds") -> "Bounds":
        if self.base_index != other.base_index:
            raise BaseMismatch(f"base {self.base_index} series combined with base {other.base_index}")
        return Bounds(
            _min_opt(self.max_faces, other.max_faces),
            min(self.max_degree, other.max_degree),
            self.base_index,
            _min_opt(self.max_k1, other.max_k1),
            _min_opt(self.max_vertices, other.max_vertices),
            _min_opt(self.max_edges, other.max_edges),
        )

    def face_limit(self) -> int:
        """Largest face count any admitted term can have."""
        caps = position_caps(self.max_degree, self.base_index, self.max_faces, self.max_k1,
                             self.max_vertices, self.max_edges)
        total = sum(caps)
        return total if self.max_faces is None else min(total, self.max_faces)

    def as_dict(self) -> dict:
        return {
            "base_index": self.base_index,
            "max_faces": self.max_faces,
            "max_degree": self.max_degree,
            "max_k1": self.max_k1,
            "max_vertices": self.max_vertices,
            "max_edges": self.max_edges,
        }


class _Layout:
    """Mixed-radix packing of type vectors; key addition is vector addition within bounds."""

    def __init__(self, bounds: Bounds):
        self.bounds = bounds
        caps = position_caps(bounds.max_degree, bounds.base_index, bounds.max_faces,
                             bounds.max_k1, bounds.max_vertices, bounds.max_edges)
        self.caps = caps
        strides = []
        s = 1
        for c in caps:
            strides.append(s)
            s *= c + 1
        self.strides = strides
        self.size = s

    def pack(self, parts: tuple) -> int:
        return sum(p * s for p, s in zip(parts, self.strides))

    def unpack(self, key: int) -> tuple:
        out = []
        for c in self.caps:
            key, r = divmod(key, c + 1)
            out.append(r)
        return _strip(tuple(out))

    def encode(self, data: Mapping[tuple, object], by_faces: bool = False):
        items = list(data.items())
        if by_faces:
            items.sort(key=lambda kv: sum(kv[0]))
        keys = []
        wts = []
        coefs = []
        for parts, c in items:
            keys.append(self.pack(parts))
            wts.extend(self.bounds.weights(parts))
            coefs.append(c)
        return keys, wts, coefs


class TruncatedSeries:
    """Immutable truncated power series ``sum_m c_m t^m``.

    Terms outside the bounds passed to the constructor are discarded.
    """

    __slots__ = ("_data", "bounds")

    def __init__(
        self,
        terms: Optional[Mapping] = None,
        max_faces: Optional[int] = None,
        max_degree: int = 2,
        base_index: int = HYPER,
        max_k1: Optional[int] = None,
        *,
        max_vertices: Optional[int] = None,
        max_edges: Optional[int] = None,
        bounds: Optional[Bounds] = None,
    ):
        if bounds is None:
            bounds = Bounds(max_faces, max_degree, base_index, max_k1, max_vertices, max_edges)
        self.bounds = bounds
        data = {}
        for key, c in (terms or {}).items():
            parts = self._key_parts(key)
            c = _norm(c)
            if c and bounds.admits(parts):
                data[parts] = data.get(parts, 0) + c
        self._data = {k: v for k, v in data.items() if v}

    def _key_parts(self, key) -> tuple:
        if isinstance(key, TypeVector):
            if key.base_index != self.bounds.base_index:
                raise BaseMismatch(f"base {key.base_index} key in base {self.bounds.base_index} series")
            return key.parts
        if isinstance(key, str):
            return TypeVector.parse(key, self.bounds.base_index).parts
        return _strip(tuple(int(x) for x in key))

    @classmethod
    def _raw(cls, data: dict, bounds: Bounds) -> "TruncatedSeries":
        obj = cls.__new__(cls)
        obj.bounds = bounds
        obj._data = data
        return obj

    # --- bounds accessors --------------------------------------------------
    @property
    def base_index(self) -> int:
        return self.bounds.base_index

    @property
    def max_faces(self):
        return self.bounds.max_faces

    @property
    def max_degree(self) -> int:
        return self.bounds.max_degree

    @property
    def max_k1(self):
        return self.bounds.max_k1

    @property
    def max_vertices(self):
        return self.bounds.max_vertices

    @property
    def max_edges(self):
        return self.bounds.max_edges

    # --- inspection --------------------------------------------------------
    @property
    def terms(self) -> dict:
        """``{TypeVector: Fraction}`` in enumeration order."""
        return {TypeVector(p, self.base_index): Fraction(c) for p, c in self.items_raw()}

    def items_raw(self):
        """``(parts, coefficient)`` pairs sorted by faces then reverse-lex parts."""
        dim = self.bounds.dim

        def key(item):
            parts = item[0] + (0,) * (dim - len(item[0]))
            return (sum(parts), tuple(-p for p in parts))

        return sorted(self._data.items(), key=key)

    def __len__(self) -> int:
        return len(self._data)

    def __bool__(self) -> bool:
        return bool(self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.bounds == other.bounds and self._data == other._data

    def __hash__(self):
        return hash((self.bounds, frozenset(self._data.items())))

    def __repr__(self) -> str:
        return f"TruncatedSeries({format_series(self)}; {self.bounds.as_dict()})"

    def same_terms(self, other: "TruncatedSeries") -> bool:
        """Equality of coefficients on the common truncation, ignoring bounds."""
        b = self.bounds.meet(other.bounds)
        return self.truncate(b)._data == other.truncate(b)._data

    def coefficient(self, m) -> Fraction:
        if isinstance(m, TypeVector) and m.base_index != self.base_index:
            raise BaseMismatch(f"base {m.base_index} key in base {self.base_index} series")
        parts = self._key_parts(m)
        if not self.bounds.admits(parts):
            raise OutOfTruncation(f"[{','.join(map(str, parts))}] lies outside the truncation {self.bounds.as_dict()}")
        return Fraction(self._data.get(parts, 0))

    def __getitem__(self, m) -> Fraction:
        return self.coefficient(m)

    def truncate(self, bounds: Optional[Bounds] = None, **changes) -> "TruncatedSeries":
        if bounds is None:
            bounds = replace(self.bounds, **changes)
        if bounds.base_index != self.base_index:
            raise BaseMismatch("cannot change the base of a series")
        return TruncatedSeries._raw({p: c for p, c in self._data.items() if bounds.admits(p)}, bounds)

    def face_layer(self, faces: int) -> "TruncatedSeries":
        return TruncatedSeries._raw({p: c for p, c in self._data.items() if sum(p) == faces}, self.bounds)

    def map_coefficients(self, fn) -> "TruncatedSeries":
        data = {p: _norm(fn(c)) for p, c in self._data.items()}
        return TruncatedSeries._raw({p: c for p, c in data.items() if c}, self.bounds)

    # --- arithmetic --------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = constant(other, bounds=self.bounds)
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = constant(other, bounds=self.bounds)
        return add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return multiply(self, other)
        c = _norm(other)
        return self.map_coefficients(lambda x: x * c)

    __rmul__ = __mul__

    def __pow__(self, r: int):
        return power(self, r)


# --- constructors ------------------------------------------------------------

def _bounds_from(bounds, kwargs) -> Bounds:
    if bounds is not None:
        return bounds
    return Bounds(
        kwargs.get("max_faces"), kwargs.get("max_degree", 2), kwargs.get("base_index", HYPER),
        kwargs.get("max_k1"), kwargs.get("max_vertices"), kwargs.get("max_edges"),
    )


def constant(c, bounds: Optional[Bounds] = None, **kwargs) -> TruncatedSeries:
    b = _bounds_from(bounds, kwargs)
    c = _norm(c)
    return TruncatedSeries._raw({(): c} if c else {}, b)


def zero(bounds: Optional[Bounds] = None, **kwargs) -> TruncatedSeries:
    return TruncatedSeries._raw({}, _bounds_from(bounds, kwargs))


def variable(index: int, coef=1, bounds: Optional[Bounds] = None, **kwargs) -> TruncatedSeries:
    """The monomial ``coef * t_index``."""
    b = _bounds_from(bounds, kwargs)
    if index < b.base_index:
        raise ValueError(f"index {index} below base {b.base_index}")
    parts = (0,) * (index - b.base_index) + (1,)
    c = _norm(coef)
    data = {parts: c} if c and b.admits(parts) else {}
    return TruncatedSeries._raw(data, b)


def linear_form(coefs: Mapping[int, object], bounds: Optional[Bounds] = None, **kwargs) -> TruncatedSeries:
    """``sum_k coefs[k] * t_k``."""
    b = _bounds_from(bounds, kwargs)
    out = zero(b)
    for k, c in coefs.items():
        out = out + variable(k, c, b)
    return out


def face_sum(bounds: Bounds, indices: Optional[Iterable[int]] = None) -> TruncatedSeries:
    """``t_b + t_{b+1} + ... + t_D`` over the admissible indices."""
    if indices is None:
        indices = range(bounds.base_index, bounds.max_degree + 1)
    return linear_form({k: 1 for k in indices}, bounds)


# --- ring operations ---------------------------------------------------------

def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    bounds = a.bounds.meet(b.bounds)
    data = {p: c for p, c in a._data.items() if bounds.admits(p)}
    for p, c in b._data.items():
        if bounds.admits(p):
            data[p] = data.get(p, 0) + c
    return TruncatedSeries._raw({p: _norm(c) for p, c in data.items() if c}, bounds)


def multiply(a: TruncatedSeries, b: TruncatedSeries, backend: Optional[str] = None) -> TruncatedSeries:
    bounds = a.bounds.meet(b.bounds)
    if not a._data or not b._data:
        return zero(bounds)
    layout = _Layout(bounds)
    da = {p: c for p, c in a._data.items() if bounds.admits(p)}
    db = {p: c for p, c in b._data.items() if bounds.admits(p)}
    if len(da) < len(db):
        da, db = db, da
    ak, aw, ac = layout.encode(da)
    bk, bw, bc = layout.encode(db, by_faces=True)
    packed = kernels.convolve(ak, aw, ac, bk, bw, bc, bounds.limits(), layout.size, backend)
    data = {}
    for key, c in packed.items():
        c = _norm(c)
        if c:
            data[layout.unpack(key)] = c
    return TruncatedSeries._raw(data, bounds)


def power(a: TruncatedSeries, r: int) -> TruncatedSeries:
    if r < 0:
        raise ValueError("negative powers are not supported")
    result = constant(1, a.bounds)
    base = a
    while r:
        if r & 1:
            result = multiply(result, base)
        r >>= 1
        if r:
            base = multiply(base, base)
    return result


def _horner_tail(s: TruncatedSeries, first: int, last: int, indices=None) -> TruncatedSeries:
    """``t_first + s (t_{first+1} + s (... + s t_last))`` over the allowed indices."""
    allowed = None if indices is None else set(indices)
    acc = zero(s.bounds)
    for k in range(last, first - 1, -1):
        if acc:
            acc = multiply(s, acc)
        if allowed is None or k in allowed:
            acc = acc + variable(k, 1, s.bounds)
    return acc


def _substitute_geometric(s: TruncatedSeries, first: int, indices=None) -> TruncatedSeries:
    """``sum_{k=first}^{D} t_k s^k``."""
    tail = _horner_tail(s, first, s.max_degree, indices)
    out = tail
    for _ in range(first):
        out = multiply(s, out)
    return out


def solve_S(
    max_faces: Optional[int],
    max_degree: int,
    *,
    max_vertices: Optional[int] = None,
    max_edges: Optional[int] = None,
    indices: Optional[Iterable[int]] = None,
) -> TruncatedSeries:
    """Hyper-Catalan series, the fixed point of ``S = 1 + sum_{k>=2} t_k S^k``.

    Iterates from ``S = 1``; each pass fixes one more face layer, so the face
    limit of the bounds is the number of passes.  ``indices`` restricts which
    ``t_k`` are nonzero.
    """
    if max_degree < 2:
        raise ValueError(f"max_degree must be at least 2, got {max_degree}")
    bounds = Bounds(max_faces, max_degree, HYPER, None, max_vertices, max_edges)
    idx = None if indices is None else sorted(set(indices))
    s = constant(1, bounds)
    for _ in range(bounds.face_limit()):
        s = 1 + _substitute_geometric(s, 2, idx)
    return s


def solve_T(
    max_faces: Optional[int],
    max_degree: int,
    max_k1: Optional[int] = None,
    *,
    max_vertices: Optional[int] = None,
    max_edges: Optional[int] = None,
) -> TruncatedSeries:
    """Tutrank series, the fixed point of ``T = 1 + sum_{k>=1} t_k T^k``."""
    if max_degree < 1:
        raise ValueError(f"max_degree must be at least 1, got {max_degree}")
    bounds = Bounds(max_faces, max_degree, TUTRANK, max_k1, max_vertices, max_edges)
    t = constant(1, bounds)
    for _ in range(bounds.face_limit()):
        t = 1 + _substitute_geometric(t, 1)
    return t


def residual_S(s: TruncatedSeries) -> TruncatedSeries:
    """``s - 1 - sum_k t_k s^k``; identically zero exactly when ``s`` is the truncated fixed point."""
    return s - 1 - _substitute_geometric(s, 2)


def residual_T(t: TruncatedSeries) -> TruncatedSeries:
    return t - 1 - _substitute_geometric(t, 1)


def face_layer_table(s: TruncatedSeries) -> list:
    """Per face layer: ``[f^F](s - 1)`` and the separate ``[f^F](t_k s^k)`` contributions."""
    first = s.base_index
    rows = []
    parts = {}
    for k in range(first, s.max_degree + 1):
        parts[k] = multiply(variable(k, 1, s.bounds), power(s, k))
    lhs = s - 1
    for f in range(s.bounds.face_limit() + 1):
        rows.append({
            "faces": f,
            "lhs": lhs.face_layer(f),
            "rhs": {k: p.face_layer(f) for k, p in parts.items()},
        })
    return rows


def divide_by_layer1(numerator: TruncatedSeries, denominator: TruncatedSeries) -> TruncatedSeries:
    """Exact quotient ``Q`` with ``numerator = denominator * Q`` on the truncation.

    ``denominator`` must be a linear form ``sum_k c_k t_k``.  The lowest index
    ``p`` it contains is the pivot: terms are eliminated in order of
    decreasing ``m_p``, which keeps every coefficient needed later inside the
    numerator's bounds.  The quotient loses one face layer and the pivot's
    vertex and edge weights from the numerator's bounds.
    """
    if numerator.base_index != denominator.base_index:
        raise BaseMismatch("numerator and denominator have different bases")
    base = numerator.base_index
    lin = {}
    for parts, c in denominator._data.items():
        if sum(parts) != 1:
            raise ValueError("denominator must be homogeneous of face degree 1")
        lin[base + len(parts) - 1] = c
    if not lin:
        raise ZeroDivisionError("division by the zero series")
    nb = numerator.bounds
    p = min(lin)
    cp = lin[p]
    pi = p - base
    if p == 1 and nb.max_k1 is not None and nb.max_k1 < nb.face_limit():
        raise ValueError("pivot t_1 needs the numerator untruncated in k1; truncate the quotient instead")
    if nb.max_faces is not None and nb.max_faces < 1:
        raise ValueError("numerator must keep at least one face layer")

    dim = nb.dim
    rem = {}
    for parts, c in numerator._data.items():
        rem[parts + (0,) * (dim - len(parts))] = c
    by_pivot = {}
    for key in rem:
        by_pivot.setdefault(key[pi], set()).add(key)
    others = [(k - base, c) for k, c in sorted(lin.items()) if k != p]
    quotient = {}
    top = max(by_pivot, default=0)
    for level in range(top, -1, -1):
        # eliminations at this level only create keys at level - 1
        for key in sorted(by_pivot.pop(level, ()), reverse=True):
            r = rem.pop(key, 0)
            if not r:
                continue
            if level == 0:
                raise NotDivisible(f"nonzero remainder {r} at [{','.join(map(str, _strip(key)))}]")
            q = _norm(Fraction(r) / Fraction(cp))
            qkey = key[:pi] + (level - 1,) + key[pi + 1:]
            quotient[_strip(qkey)] = q
            for oi, oc in others:
                if oi >= dim:
                    continue
                tkey = qkey[:oi] + (qkey[oi] + 1,) + qkey[oi + 1:]
                if not nb.admits(_strip(tkey)):
                    continue
                val = rem.get(tkey, 0) - oc * q
                rem[tkey] = val
                by_pivot.setdefault(tkey[pi], set()).add(tkey)
    qbounds = Bounds(
        None if nb.max_faces is None else nb.max_faces - 1,
        nb.max_degree,
        base,
        None if nb.max_k1 is None else (nb.max_k1 - 1 if p == 1 else nb.max_k1),
        None if nb.max_vertices is None else nb.max_vertices - vertex_weight(p),
        None if nb.max_edges is None else nb.max_edges - edge_weight(p),
    )
    return TruncatedSeries._raw(
        {k: c for k, c in quotient.items() if c and qbounds.admits(k)}, qbounds
    )


def coefficient(s: TruncatedSeries, m) -> Fraction:
    return s.coefficient(m)


# --- text and JSON -----------------------------------------------------------

def format_coefficient(c) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def format_monomial(parts: tuple, base: int) -> str:
    factors = []
    for i, e in enumerate(parts):
        if e:
            factors.append(f"t{base + i}" + (f"^{e}" if e > 1 else ""))
    return "*".join(factors)


def format_series(s: TruncatedSeries) -> str:
    """Human-readable polynomial, lowest face layer first."""
    out = []
    for parts, c in s.items_raw():
        mono = format_monomial(parts, s.base_index)
        c = Fraction(c)
        if not mono:
            out.append(str(c))
        elif c == 1:
            out.append(mono)
        elif c == -1:
            out.append("-" + mono)
        else:
            out.append(f"{c}*{mono}")
    if not out:
        return "0"
    return " + ".join(out).replace("+ -", "- ")


def to_json(s: TruncatedSeries) -> dict:
    doc = dict(s.bounds.as_dict())
    doc["terms"] = {
        ",".join(map(str, parts)): format_coefficient(c) for parts, c in s.items_raw()
    }
    return doc


def from_json(doc: Mapping) -> TruncatedSeries:
    bounds = Bounds(
        doc.get("max_faces"), doc["max_degree"], doc.get("base_index", HYPER),
        doc.get("max_k1"), doc.get("max_vertices"), doc.get("max_edges"),
    )
    terms = {}
    for key, val in doc.get("terms", {}).items():
        terms[TypeVector.parse(key, bounds.base_index)] = Fraction(val)
    return TruncatedSeries(terms, bounds=bounds)

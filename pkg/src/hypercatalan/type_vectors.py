"""Type vectors indexing the hyper-Catalan and Tutrank arrays.

A hyper-Catalan type ``m = [m2, m3, ...]`` counts faces by polygon size and
starts at index 2; a Tutrank type ``k = [k1, k2, ...]`` also allows two-gons
and starts at index 1.  Both are stored without trailing zeros.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import BaseMismatch, InvalidTypeVector, UnboundedEnumeration

HYPER = 2
TUTRANK = 1


@dataclass(frozen=True)
class EulerStats:
    vertices: int
    edges: int
    faces: int

    @property
    def euler_characteristic(self) -> int:
        return self.vertices - self.edges + self.faces


@dataclass(frozen=True, order=False)
class TypeVector:
    """Canonical face-count vector; ``parts[i]`` is the count at index ``base_index + i``."""

    parts: tuple = ()
    base_index: int = HYPER

    def __post_init__(self):
        if self.base_index not in (TUTRANK, HYPER):
            raise InvalidTypeVector(f"base_index must be 1 or 2, got {self.base_index!r}")
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise InvalidTypeVector(f"negative entry in {list(parts)}")
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "parts", parts[:end])

    @classmethod
    def parse(cls, text: str, base_index: int = HYPER) -> "TypeVector":
        """Parse the comma-separated encoding, e.g. ``"1,0,1"``; ``""`` is the null vector."""
        text = text.strip().strip("[]").strip()
        if not text:
            return cls((), base_index)
        try:
            raw = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise InvalidTypeVector(f"cannot parse type vector {text!r}") from None
        return cls(tuple(raw), base_index)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __repr__(self) -> str:
        tag = "" if self.base_index == HYPER else ", base_index=1"
        return f"TypeVector([{str(self)}]{tag})"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __add__(self, other: "TypeVector") -> "TypeVector":
        return combine(self, other)

    def __getitem__(self, index: int) -> int:
        """Count at polygon index ``index`` (2 = triangles, 1 = two-gons); zero past the end."""
        i = index - self.base_index
        if i < 0:
            raise IndexError(f"index {index} below base {self.base_index}")
        return self.parts[i] if i < len(self.parts) else 0

    @property
    def is_null(self) -> bool:
        return not self.parts

    @property
    def degree(self) -> int:
        """Highest index carrying a nonzero count, 0 for the null vector."""
        return self.base_index + len(self.parts) - 1 if self.parts else 0

    @property
    def faces(self) -> int:
        return sum(self.parts)

    def padded(self, length: int) -> tuple:
        if length < len(self.parts):
            raise InvalidTypeVector(f"{self!r} does not fit in {length} slots")
        return self.parts + (0,) * (length - len(self.parts))

    def items(self) -> Iterator[tuple]:
        """Yield ``(index, count)`` for the nonzero entries."""
        for i, p in enumerate(self.parts):
            if p:
                yield self.base_index + i, p


NULL = TypeVector()


def normalize(raw: Iterable[int], base_index: int = HYPER) -> TypeVector:
    return TypeVector(tuple(raw), base_index)


def unit(index: int, base_index: int = HYPER) -> TypeVector:
    """The vector with a single 1 at polygon index ``index``."""
    if index < base_index:
        raise InvalidTypeVector(f"index {index} below base {base_index}")
    return TypeVector((0,) * (index - base_index) + (1,), base_index)


def vertex_weight(index: int) -> int:
    """Contribution of one face at ``index`` to V - 2."""
    return index - 1


def edge_weight(index: int) -> int:
    """Contribution of one face at ``index`` to E - 1."""
    return index


def stats(m: TypeVector) -> EulerStats:
    v = 2
    e = 1
    f = 0
    for k, count in m.items():
        v += vertex_weight(k) * count
        e += edge_weight(k) * count
        f += count
    return EulerStats(v, e, f)


def combine(a: TypeVector, b: TypeVector) -> TypeVector:
    if a.base_index != b.base_index:
        raise BaseMismatch(f"cannot combine base {a.base_index} with base {b.base_index}")
    n = max(len(a.parts), len(b.parts))
    pa = a.padded(n)
    pb = b.padded(n)
    return TypeVector(tuple(x + y for x, y in zip(pa, pb)), a.base_index)


def position_caps(
    max_degree: int,
    base_index: int = HYPER,
    max_faces: Optional[int] = None,
    max_k1: Optional[int] = None,
    max_vertices: Optional[int] = None,
    max_edges: Optional[int] = None,
) -> list:
    """Largest admissible count at each slot under the given bounds.

    ``max_vertices`` bounds V - 2 and ``max_edges`` bounds E - 1; both are
    additive under :func:`combine`, as is the face count.
    """
    if max_degree < base_index:
        return []
    caps = []
    for k in range(base_index, max_degree + 1):
        limits = []
        if max_faces is not None:
            limits.append(max_faces)
        if max_vertices is not None and vertex_weight(k) > 0:
            limits.append(max_vertices // vertex_weight(k))
        if max_edges is not None:
            limits.append(max_edges // edge_weight(k))
        if k == 1 and max_k1 is not None:
            limits.append(max_k1)
        if not limits:
            raise UnboundedEnumeration(
                f"no bound limits the count at index {k}; give max_faces, max_edges"
                + (" or max_k1" if k == 1 else " or max_vertices")
            )
        caps.append(max(0, min(limits)))
    return caps


def _sort_key(parts: tuple):
    return (sum(parts), tuple(-p for p in parts))


def enumerate_types(
    max_faces: Optional[int],
    max_degree: int,
    base_index: int = HYPER,
    max_k1: Optional[int] = None,
    *,
    max_vertices: Optional[int] = None,
    max_edges: Optional[int] = None,
) -> list:
    """All canonical type vectors within the bounds.

    Ordered by face count, then reverse-lexicographically on the parts, so
    ``[2]`` precedes ``[1,1]`` precedes ``[0,2]``.
    """
    if max_degree < 2:
        if not (base_index == TUTRANK and max_degree == 1):
            raise InvalidTypeVector(f"max_degree must be at least 2, got {max_degree}")
    caps = position_caps(max_degree, base_index, max_faces, max_k1, max_vertices, max_edges)
    n = len(caps)
    f_lim = max_faces if max_faces is not None else sum(caps)
    v_lim = max_vertices
    e_lim = max_edges
    out = []
    buf = [0] * n

    def rec(i, f_left, v_left, e_left):
        if i == n:
            out.append(tuple(buf))
            return
        k = base_index + i
        vw = vertex_weight(k)
        ew = edge_weight(k)
        c = 0
        while c <= caps[i] and c <= f_left:
            if v_left is not None and c * vw > v_left:
                break
            if e_left is not None and c * ew > e_left:
                break
            buf[i] = c
            rec(
                i + 1,
                f_left - c,
                None if v_left is None else v_left - c * vw,
                None if e_left is None else e_left - c * ew,
            )
            c += 1
        buf[i] = 0

    rec(0, f_lim, v_lim, e_lim)
    out.sort(key=_sort_key)
    return [TypeVector(p, base_index) for p in out]


def parse_list(texts: Sequence[str], base_index: int = HYPER) -> list:
    return [TypeVector.parse(t, base_index) for t in texts]

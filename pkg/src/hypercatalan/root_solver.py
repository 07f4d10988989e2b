"""Polynomial roots from the truncated hyper-Catalan series, with Taylor-shift bootstrapping.

Polynomials are given in the standard orientation ``f(x) = sum a_i x^i``.
The series root works on ``c0 - c1 x + sum_{k>=2} c_k x^k``, so internally
``(c0, c1, c_k) = (a0, -a1, a_k)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Optional, Sequence

from .catalan_core import hyper_catalan
from .errors import PivotZero
from .type_vectors import enumerate_types, stats


def to_fraction(x) -> Fraction:
    """Exact rational from an int, Fraction, Decimal or a decimal/``a/b`` string."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Decimal)):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(str(x).strip())


def round_sig(x: Fraction, digits: int) -> Fraction:
    """Round to ``digits`` significant decimal digits, as an exact rational."""
    if x == 0:
        return Fraction(0)
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(x.numerator) / Decimal(x.denominator)
    return Fraction(d)


def to_decimal(x: Fraction, digits: int) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits
        return Decimal(x.numerator) / Decimal(x.denominator)


@dataclass(frozen=True)
class ExactPolynomial:
    """Dense polynomial ``a0 + a1 x + ... + ad x^d`` with rational coefficients."""

    coeffs: tuple

    def __post_init__(self):
        cs = [to_fraction(c) for c in self.coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs) if cs else (Fraction(0),))

    @classmethod
    def parse(cls, text: str) -> "ExactPolynomial":
        """Comma-separated ``a0,a1,...``; entries may be integers, decimals or ``p/q``."""
        return cls(tuple(tok for tok in text.split(",") if tok.strip()))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if any(self.coeffs) else -1

    def __call__(self, x) -> Fraction:
        x = to_fraction(x)
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def taylor_shift(self, x0) -> "ExactPolynomial":
        return taylor_shift(self, x0)

    def geometric_coefficients(self) -> tuple:
        """``(c0, c1, {k: c_k})`` for ``c0 - c1 x + sum c_k x^k``."""
        a = self.coeffs + (Fraction(0),) * max(0, 2 - len(self.coeffs))
        return a[0], -a[1], {k: a[k] for k in range(2, len(a))}

    def substitution_parameters(self) -> dict:
        """``t_k = c0^(k-1) c_k / c1^k``, mapping ``f`` onto ``1 - alpha + sum t_k alpha^k``."""
        c0, c1, ck = self.geometric_coefficients()
        if c1 == 0:
            raise PivotZero("linear coefficient is zero")
        return {k: c0 ** (k - 1) * c / c1 ** k for k, c in ck.items()}

    def __str__(self) -> str:
        terms = []
        for i, a in enumerate(self.coeffs):
            if a == 0 and self.degree > 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(f"{a}" + (f"*{mono}" if mono else ""))
        return " + ".join(terms).replace("+ -", "- ")


def taylor_shift(p: ExactPolynomial, x0) -> ExactPolynomial:
    """Coefficients of ``p(x0 + y)`` in ``y`` by repeated synthetic division."""
    x0 = to_fraction(x0)
    a = list(p.coeffs)
    n = len(a) - 1
    if x0 == 0:
        return ExactPolynomial(tuple(a))
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            a[j] += x0 * a[j + 1]
    return ExactPolynomial(tuple(a))


def series_eval(
    p: ExactPolynomial,
    max_faces: int,
    max_degree: Optional[int] = None,
    digits: Optional[int] = None,
):
    """Truncated series root ``sum_m C_m c0^(V_m - 1) c^m / c1^(E_m)`` over ``F_m <= max_faces``.

    Returns an exact :class:`Fraction`, or a :class:`Decimal` with ``digits``
    significant digits when ``digits`` is given.
    """
    c0, c1, ck = p.geometric_coefficients()
    if c1 == 0:
        raise PivotZero("linear coefficient is zero; shift the polynomial first")
    deg = p.degree if max_degree is None else max_degree
    total = Fraction(0)
    if deg < 2:
        total = c0 / c1
    else:
        for m in enumerate_types(max_faces, deg):
            term = Fraction(1)
            for k, count in m.items():
                c = ck.get(k, 0)
                if c == 0:
                    term = 0
                    break
                term *= c ** count
            if not term:
                continue
            s = stats(m)
            total += hyper_catalan(m) * term * c0 ** (s.vertices - 1) / c1 ** s.edges
    if digits is not None:
        return to_decimal(total, digits)
    return total


@dataclass
class SolveConfig:
    max_faces: int = 3
    max_degree: Optional[int] = None
    iterations: int = 2
    working_precision: int = 20
    initial_guess: object = 0

    def __post_init__(self):
        if self.working_precision < 16:
            raise ValueError("working_precision must be at least 16 digits")
        if self.iterations < 1:
            raise ValueError("iterations must be at least 1")


@dataclass
class IterationRecord:
    index: int
    shift_point: Fraction
    shifted_coeffs: tuple
    increment: Optional[Fraction]
    residual: Fraction


@dataclass
class SolveReport:
    records: list = field(default_factory=list)
    root: Optional[Fraction] = None
    root_residual: Optional[Fraction] = None
    converged: bool = False
    error: Optional[str] = None
    digits: int = 20

    @property
    def residuals(self) -> list:
        out = [r.residual for r in self.records]
        if self.root_residual is not None and (not self.records or self.records[-1].shift_point != self.root):
            out.append(self.root_residual)
        return out

    def root_decimal(self, digits: Optional[int] = None) -> Decimal:
        return to_decimal(self.root, digits or self.digits)

    def as_dict(self) -> dict:
        d = self.digits

        def dec(x):
            return None if x is None else str(to_decimal(Fraction(x), d))

        return {
            "root": dec(self.root),
            "root_residual": dec(self.root_residual),
            "converged": self.converged,
            "error": self.error,
            "iterations": [
                {
                    "index": r.index,
                    "shift_point": dec(r.shift_point),
                    "shifted_coeffs": [dec(c) for c in r.shifted_coeffs],
                    "increment": dec(r.increment),
                    "residual": dec(r.residual),
                }
                for r in self.records
            ],
        }


def bootstrap_solve(p: ExactPolynomial, cfg: Optional[SolveConfig] = None) -> SolveReport:
    """Iterate ``x <- x + series_eval(p(x + y))`` from the initial guess.

    Each iterate is rounded to the working precision before the exact shift.
    Stops after ``cfg.iterations`` steps, when the residual drops below
    ``10^-digits``, or when the shifted polynomial has a zero linear term
    (reported in ``error``; nudge the guess and retry).
    """
    cfg = cfg or SolveConfig()
    if p.degree < 1:
        raise ValueError("cannot solve a constant polynomial")
    digits = cfg.working_precision
    tol = Fraction(1, 10 ** digits)
    report = SolveReport(digits=digits)
    x = round_sig(to_fraction(cfg.initial_guess), digits)
    for i in range(cfg.iterations):
        q = taylor_shift(p, x)
        res = abs(q.coeffs[0])
        rec = IterationRecord(i, x, q.coeffs, None, res)
        report.records.append(rec)
        if res < tol:
            break
        try:
            inc = series_eval(q, cfg.max_faces, cfg.max_degree)
        except PivotZero:
            report.error = (
                f"zero linear coefficient at x = {to_decimal(x, digits)}; "
                "perturb the initial guess toward the wanted root"
            )
            break
        rec.increment = inc
        x = round_sig(x + inc, digits)
    report.root = x
    report.root_residual = abs(p(x))
    rs = report.residuals
    if report.error is None:
        if report.root_residual < tol:
            report.converged = True
        elif len(rs) >= 3:
            report.converged = rs[-3] > rs[-2] > rs[-1]
        elif len(rs) == 2:
            report.converged = rs[-2] > rs[-1]
    return report


def quadratic_minus_root(t) -> float:
    """Smaller root of ``1 - x + t x^2`` for ``0 < t < 1/4``, in floating point."""
    from math import sqrt

    t = float(to_fraction(t))
    return (1 - sqrt(1 - 4 * t)) / (2 * t)


def from_geometric(c0, c1, ck: dict) -> ExactPolynomial:
    """Standard-orientation polynomial for ``c0 - c1 x + sum c_k x^k``."""
    deg = max([1] + list(ck))
    coeffs = [Fraction(0)] * (deg + 1)
    coeffs[0] = to_fraction(c0)
    coeffs[1] = -to_fraction(c1)
    for k, c in ck.items():
        coeffs[k] = to_fraction(c)
    return ExactPolynomial(tuple(coeffs))


def evaluate_geometric(ts: dict, alpha) -> Fraction:
    """``1 - alpha + sum t_k alpha^k``."""
    alpha = to_fraction(alpha)
    return 1 - alpha + sum(t * alpha ** k for k, t in ts.items())


def coefficients_to_str(cs: Sequence[Fraction], digits: int) -> list:
    return [str(to_decimal(c, digits)) for c in cs]

"""Root finding and comparative statics for the equilibrium blocks.

1D solves use bisection with optional secant acceleration; robustness beats
speed since every schedule in the model is monotone.  2D solves use damped
Newton with a finite-difference Jacobian and fall back to nested bisection
when the Jacobian degenerates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields as _dc_fields, is_dataclass
from typing import Callable

from .core import MacroAtlasError


class SolverError(MacroAtlasError, RuntimeError):
    """Base class for solver failures."""


class NonBracketingError(SolverError):
    """f has the same sign at both bracket endpoints."""


class NoConvergenceError(SolverError):
    """The iteration budget ran out before |f| < tolF."""


class SingularJacobianError(SolverError):
    """Newton hit a (numerically) singular Jacobian and no fallback applied."""


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float
    tolX: float = 1e-12
    tolF: float = 1e-10
    maxIter: int = 200

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ValueError("bracket requires lo < hi")
        if self.tolX <= 0 or self.tolF <= 0:
            raise ValueError("tolerances must be positive")
        if self.maxIter <= 0:
            raise ValueError("maxIter must be positive")


@dataclass(frozen=True)
class SolveReport:
    root: float | tuple[float, float]
    residual: float
    iterations: int
    converged: bool


def find_root_1d(f: Callable[[float], float], bracket: Bracket,
                 accelerate: bool = True) -> SolveReport:
    """Locate a sign change of f inside the bracket.

    With ``accelerate`` a secant proposal is tried each step and accepted when
    it lands strictly inside the current interval; otherwise the step is a
    plain midpoint.  Raises NonBracketingError when f(lo)*f(hi) > 0 and
    NoConvergenceError when maxIter is exhausted.
    """
    lo, hi = bracket.lo, bracket.hi
    flo, fhi = f(lo), f(hi)
    if abs(flo) < bracket.tolF:
        return SolveReport(lo, flo, 0, True)
    if abs(fhi) < bracket.tolF:
        return SolveReport(hi, fhi, 0, True)
    if flo * fhi > 0:
        raise NonBracketingError(
            f"f({lo})={flo:g} and f({hi})={fhi:g} have the same sign")

    for it in range(1, bracket.maxIter + 1):
        x = None
        # secant proposals alternate with plain midpoints so the interval
        # provably halves at least every other iteration
        if accelerate and it % 2 == 1 and fhi != flo:
            cand = hi - fhi * (hi - lo) / (fhi - flo)
            if lo < cand < hi:
                x = cand
        if x is None:
            x = 0.5 * (lo + hi)
        fx = f(x)
        if abs(fx) < bracket.tolF:
            return SolveReport(x, fx, it, True)
        if flo * fx < 0:
            hi, fhi = x, fx
        else:
            lo, flo = x, fx
        if hi - lo < bracket.tolX:
            # interval exhausted; accept the better endpoint if it qualifies
            x, fx = (lo, flo) if abs(flo) <= abs(fhi) else (hi, fhi)
            if abs(fx) < bracket.tolF:
                return SolveReport(x, fx, it, True)
    raise NoConvergenceError(
        f"no root with |f| < {bracket.tolF:g} after {bracket.maxIter} iterations")


def bisection_iteration_bound(bracket: Bracket) -> int:
    """Iterations pure bisection needs to shrink the bracket below tolX."""
    return math.ceil(math.log2((bracket.hi - bracket.lo) / bracket.tolX))


Func2 = Callable[[float, float], tuple[float, float]]


def solve_2d(F: Func2, start: tuple[float, float], tolF: float = 1e-10,
             tolX: float = 1e-12, maxIter: int = 200,
             fallback: tuple[Bracket, Bracket] | None = None) -> SolveReport:
    """Damped Newton on a 2-equation system.

    On a singular Jacobian or a stalled line search, retries via nested
    bisection when ``fallback`` brackets (outer in x, inner in y) are given;
    otherwise raises SingularJacobianError / NoConvergenceError.
    """
    x, y = float(start[0]), float(start[1])
    fx, fy = F(x, y)

    def norm(a: float, b: float) -> float:
        return max(abs(a), abs(b))

    for it in range(1, maxIter + 1):
        if norm(fx, fy) < tolF:
            return SolveReport((x, y), norm(fx, fy), it - 1, True)
        hx = 1e-7 * max(1.0, abs(x))
        hy = 1e-7 * max(1.0, abs(y))
        f1p = F(x + hx, y)
        f1m = F(x - hx, y)
        f2p = F(x, y + hy)
        f2m = F(x, y - hy)
        j11 = (f1p[0] - f1m[0]) / (2 * hx)
        j21 = (f1p[1] - f1m[1]) / (2 * hx)
        j12 = (f2p[0] - f2m[0]) / (2 * hy)
        j22 = (f2p[1] - f2m[1]) / (2 * hy)
        det = j11 * j22 - j12 * j21
        scale = max(abs(j11), abs(j12), abs(j21), abs(j22), 1e-300)
        if abs(det) < 1e-14 * scale * scale:
            return _solve_2d_nested(F, fallback, tolF,
                                    reason="singular Jacobian")
        dx = -(fx * j22 - fy * j12) / det
        dy = -(j11 * fy - j21 * fx) / det
        # backtracking line search on the max-norm residual
        step = 1.0
        base = norm(fx, fy)
        for _ in range(50):
            nx, ny = x + step * dx, y + step * dy
            nfx, nfy = F(nx, ny)
            if norm(nfx, nfy) < base:
                x, y, fx, fy = nx, ny, nfx, nfy
                break
            step *= 0.5
        else:
            return _solve_2d_nested(F, fallback, tolF,
                                    reason="line search stalled")
        if norm(fx, fy) < tolF:
            return SolveReport((x, y), norm(fx, fy), it, True)
        if abs(step * dx) < tolX and abs(step * dy) < tolX:
            break
    if norm(fx, fy) < tolF:
        return SolveReport((x, y), norm(fx, fy), maxIter, True)
    return _solve_2d_nested(F, fallback, tolF, reason="iteration budget spent")


def _solve_2d_nested(F: Func2, fallback: tuple[Bracket, Bracket] | None,
                     tolF: float, reason: str) -> SolveReport:
    """Outer bisection in x of F1(x, y*(x)) with y*(x) an inner 1D solve of F2."""
    if fallback is None:
        if reason == "singular Jacobian":
            raise SingularJacobianError(reason + " and no fallback bracket")
        raise NoConvergenceError(reason + " and no fallback bracket")
    outer, inner = fallback
    iterations = 0

    def inner_root(x: float) -> float:
        nonlocal iterations
        rep = find_root_1d(lambda y: F(x, y)[1], inner)
        iterations += rep.iterations
        return rep.root  # type: ignore[return-value]

    rep = find_root_1d(lambda x: F(x, inner_root(x))[0], outer)
    x = rep.root  # type: ignore[assignment]
    y = inner_root(x)
    fx, fy = F(x, y)
    res = max(abs(fx), abs(fy))
    if res >= tolF:
        raise NoConvergenceError(
            f"nested bisection residual {res:g} above tolF after {reason}")
    return SolveReport((x, y), res, iterations + rep.iterations, True)


def comparative_static(solve, params, field: str, h: float) -> dict[str, float]:
    """Central-difference sensitivity of every solved field to one parameter.

    ``solve`` maps Params to any numeric dataclass (normally EconState);
    returns {field name: d(field)/d(parameter)}.
    """
    hi = solve(params.with_field(field, getattr(params, field) + h))
    lo = solve(params.with_field(field, getattr(params, field) - h))
    if not (is_dataclass(hi) and is_dataclass(lo)):
        raise TypeError("solve must return a dataclass of numeric fields")
    out = {}
    for f in _dc_fields(hi):
        out[f.name] = (getattr(hi, f.name) - getattr(lo, f.name)) / (2.0 * h)
    return out

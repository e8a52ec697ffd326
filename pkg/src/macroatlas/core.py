"""Model primitives: parameters, solved states, curves, and the symbol registry.

Functional forms used throughout the engine:

    production   Y  = A * K**alpha * L**(1 - alpha)          (Cobb-Douglas)
    consumption  C  = c0 + c1*(Y - T) - e*r
    investment   I  = I0 - d*r
    money demand MD = P * kY * Y * exp(-b*i)                 (semi-log liquidity)
    user cost    UC = (r + delta) * pK

Units convention: interest and inflation rates (i, r, piE, pi) are carried in
percent points; delta, n, s and unemployment rates are fractions per period.
The registry records units; converting between the two scales is the caller's
job (see ``capital_demand`` call sites for the r/100 bridge).

Everything here is a pure function of its arguments and every value type is
frozen, so unrestricted concurrent use is safe.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, fields, replace


class MacroAtlasError(Exception):
    """Base class for engine errors."""


class ParamValidationError(MacroAtlasError, ValueError):
    """A parameter violates its documented range; message names the field."""


# ---------------------------------------------------------------------------
# Parameters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Params:
    """Every exogenous quantity of the model economy.

    Defaults constitute the reference scenario used by the CLI, the service,
    and the test suite.
    """

    alpha: float = 0.5    # capital share in production
    A: float = 1.0        # total factor productivity
    K: float = 10_000.0   # aggregate capital stock
    delta: float = 0.08   # depreciation rate (fraction/period)
    n: float = 0.02       # population growth rate (fraction/period)
    s: float = 0.2        # saving rate (fraction of Y)
    theta: float = 1.0    # leisure weight in household utility
    H: float = 16.0       # per-household time endowment (hours)
    m: float = 8.0        # per-household nonlabor income
    Nh: float = 100.0     # number of identical households
    c0: float = 200.0     # autonomous consumption
    c1: float = 0.75      # marginal propensity to consume
    e: float = 10.0       # interest sensitivity of consumption
    I0: float = 200.0     # autonomous investment
    d: float = 25.0       # interest sensitivity of investment
    T: float = 100.0      # lump-sum taxes
    G: float = 300.0      # government expenditures
    Ms: float = 1_000.0   # nominal money supply
    kY: float = 0.5       # money-demand income coefficient
    b: float = 0.1        # money-demand interest semi-elasticity
    pK: float = 1.0       # price of capital goods
    gamma: float = 1.0    # SRAS price-output elasticity
    PE: float = 1.0       # price expectation
    piE: float = 0.0      # expected inflation (percent points)
    beta: float = 0.5     # Phillips slope
    Ubar: float = 0.05    # natural unemployment rate (fraction)
    omega: float = 0.5    # output-gap-to-unemployment coefficient

    def __post_init__(self) -> None:
        self.validate()

    def validate(self) -> None:
        def fail(name: str, rule: str) -> None:
            raise ParamValidationError(
                f"{name}={getattr(self, name)!r} violates {rule}")

        for name in ("alpha", "c1"):
            v = getattr(self, name)
            if not 0.0 < v < 1.0:
                fail(name, "0 < value < 1")
        for name in ("A", "K", "H", "Nh", "d", "kY", "b", "gamma", "pK", "PE"):
            if getattr(self, name) <= 0.0:
                fail(name, "value > 0")
        for name in ("delta", "n", "s", "theta", "e", "m", "omega", "beta", "Ubar"):
            if getattr(self, name) < 0.0:
                fail(name, "value >= 0")
        if not 0.0 <= self.s <= 1.0:
            fail("s", "0 <= s <= 1")
        if not 0.0 <= self.Ubar < 1.0:
            fail("Ubar", "0 <= Ubar < 1")

    # -- serialization -------------------------------------------------

    def with_field(self, name: str, value: float) -> "Params":
        if name not in PARAM_FIELDS:
            raise ParamValidationError(f"unknown parameter {name!r}")
        return replace(self, **{name: float(value)})

    def to_dict(self) -> dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_dict(cls, raw: dict) -> "Params":
        unknown = sorted(set(raw) - PARAM_FIELDS)
        if unknown:
            raise ParamValidationError(f"unknown parameter key(s): {', '.join(unknown)}")
        try:
            values = {k: float(v) for k, v in raw.items()}
        except (TypeError, ValueError) as exc:
            raise ParamValidationError(f"non-numeric parameter value: {exc}") from exc
        return cls(**values)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Params":
        return cls.from_dict(json.loads(text))

    def to_config_text(self) -> str:
        lines = [f"{f.name} = {getattr(self, f.name)!r}" for f in fields(self)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_config_text(cls, text: str) -> "Params":
        """Parse the flat ``key = value`` format; '#' starts a comment."""
        raw: dict[str, str] = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ParamValidationError(f"config line {lineno}: expected key = value")
            key, _, value = line.partition("=")
            raw[key.strip()] = value.strip()
        return cls.from_dict(raw)


PARAM_FIELDS = frozenset(f.name for f in fields(Params))

DEFAULT_PARAMS = Params()


# ---------------------------------------------------------------------------
# Solved state
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EconState:
    """A complete endogenous solution of the economy.

    ``w`` and ``L`` are the labor-market clearing values (they define Ybar);
    ``leisure`` is the aggregate complement Nh*H - L.  Rates i, r, pi are in
    percent points; Uu is a fraction.
    """

    Y: float
    C: float
    Ipriv: float
    Snat: float
    P: float
    i: float
    r: float
    w: float
    L: float
    Uu: float
    pi: float
    Ybar: float
    leisure: float

    def validate(self, params: Params, tol: float = 1e-8) -> None:
        if self.P <= 0.0:
            raise MacroAtlasError(f"state invariant P > 0 violated: P={self.P}")
        if self.w <= 0.0:
            raise MacroAtlasError(f"state invariant w > 0 violated: w={self.w}")
        if not -tol <= self.L <= params.Nh * params.H + tol:
            raise MacroAtlasError(f"state invariant 0 <= L <= Nh*H violated: L={self.L}")
        if abs(self.Snat - (self.Y - self.C - params.G)) > tol:
            raise MacroAtlasError("state invariant Snat = Y - C - G violated")

    def to_dict(self) -> dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_dict(cls, raw: dict) -> "EconState":
        return cls(**{k: float(v) for k, v in raw.items()})


STATE_FIELDS = tuple(f.name for f in fields(EconState))


# ---------------------------------------------------------------------------
# Curves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Curve:
    """A sampled (x, y) series with semantic axis labels.

    Points must be strictly increasing in x, except for vertical schedules
    (LRAS, a money-supply line, LRPC) which hold x constant and move strictly
    in y.  ``name`` and ``variant`` ("current" / "baseline") exist for
    rendering overlays and serialization; markers are named points such as
    an equilibrium.
    """

    xLabel: str
    yLabel: str
    points: tuple[tuple[float, float], ...]
    markers: dict[str, tuple[float, float]] = field(default_factory=dict)
    name: str = ""
    variant: str = "current"

    def __post_init__(self) -> None:
        if len(self.points) < 2:
            raise ValueError("a curve needs at least two points")
        for label in (self.xLabel, self.yLabel):
            if label not in REGISTRY.glyphs():
                raise ValueError(f"axis label {label!r} is not a registered symbol")
        xs = [p[0] for p in self.points]
        ys = [p[1] for p in self.points]
        if all(x == xs[0] for x in xs):
            # vertical schedule: x pinned, y strictly monotone
            if not (all(a < b for a, b in zip(ys, ys[1:]))
                    or all(a > b for a, b in zip(ys, ys[1:]))):
                raise ValueError("vertical curve must be strictly monotone in y")
        elif not all(a < b for a, b in zip(xs, xs[1:])):
            raise ValueError("curve points must be strictly increasing in x")

    @property
    def is_vertical(self) -> bool:
        return all(p[0] == self.points[0][0] for p in self.points)

    def to_dict(self) -> dict:
        out = {
            "xLabel": self.xLabel,
            "yLabel": self.yLabel,
            "points": [list(p) for p in self.points],
            "markers": {k: list(v) for k, v in self.markers.items()},
            "name": self.name,
            "variant": self.variant,
        }
        return out

    @classmethod
    def from_dict(cls, raw: dict) -> "Curve":
        return cls(
            xLabel=raw["xLabel"],
            yLabel=raw["yLabel"],
            points=tuple((float(x), float(y)) for x, y in raw["points"]),
            markers={k: (float(v[0]), float(v[1])) for k, v in raw.get("markers", {}).items()},
            name=raw.get("name", ""),
            variant=raw.get("variant", "current"),
        )


def curve_from_samples(xs, ys, xLabel: str, yLabel: str, *, name: str = "",
                       variant: str = "current",
                       markers: dict[str, tuple[float, float]] | None = None) -> Curve:
    """Build a Curve from parallel samples, sorting so x ascends."""
    pts = sorted(zip((float(x) for x in xs), (float(y) for y in ys)))
    return Curve(xLabel=xLabel, yLabel=yLabel, points=tuple(pts),
                 markers=markers or {}, name=name, variant=variant)


# ---------------------------------------------------------------------------
# Symbol registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SymbolEntry:
    key: str          # unique registry key
    glyph: str        # symbol as printed in the notation table
    description: str
    unit: str
    owner: str        # owning type.field or op:name
    context: str = ""  # disambiguates overloaded glyphs
    in_scope: bool = True


class SymbolRegistry:
    """Notation-table symbols mapped to the fields and operations owning them.

    Overloaded glyphs (L, I, U, W appear more than once in the table) get one
    entry per meaning, distinguished by ``context``; they are flagged, not
    merged.  Monetary aggregates M0/M1 are registered out of scope: money
    supply is the single exogenous scalar Ms.
    """

    def __init__(self, entries: list[SymbolEntry]):
        self.entries: dict[str, SymbolEntry] = {}
        for entry in entries:
            if entry.key in self.entries:
                raise ValueError(f"duplicate registry key {entry.key!r}")
            if entry.in_scope and not entry.owner:
                raise ValueError(f"in-scope symbol {entry.key!r} lacks an owner")
            self.entries[entry.key] = entry

    def glyphs(self, in_scope_only: bool = True) -> set[str]:
        return {e.glyph for e in self.entries.values()
                if e.in_scope or not in_scope_only}

    def lookup(self, glyph: str) -> list[SymbolEntry]:
        return [e for e in self.entries.values() if e.glyph == glyph]

    def overloaded_glyphs(self) -> set[str]:
        seen: dict[str, int] = {}
        for e in self.entries.values():
            seen[e.glyph] = seen.get(e.glyph, 0) + 1
        return {g for g, count in seen.items() if count > 1}

    def unit_of(self, glyph: str) -> str:
        hits = self.lookup(glyph)
        if not hits:
            raise KeyError(glyph)
        return hits[0].unit


def _build_registry() -> SymbolRegistry:
    E = SymbolEntry
    entries = [
        E("fixed-marker", "-", "Fixed", "", "overlay convention: baseline curves"),
        E("changing-marker", "~", "Changing", "", "overlay convention: current curves"),
        E("income", "I", "Income", "real units", "HouseholdChoice.cons",
          context="household budget"),
        E("income-at-wage", "I(w1)", "Income at wage rate 1", "real units",
          "op:leisure_choice"),
        E("utility", "U", "Utility level OR Utility Indifference Curve", "utils",
          "HouseholdChoice.utility", context="household choice"),
        E("leisure-hours", "L", "Leisure hours", "hours", "HouseholdChoice.leisure",
          context="household choice"),
        E("hours-worked", "W", "Hours worked", "hours", "HouseholdChoice.labor",
          context="household choice"),
        E("nominal-wage", "W", "Nominal wage rate", "currency per hour", "",
          context="labor market", in_scope=False),
        E("real-wage", "w", "Real wage rate OR W/P", "output units per hour",
          "EconState.w"),
        E("price-level", "P", "Price level", "price units", "EconState.P"),
        E("income-effect", "I.E", "Income effect", "hours",
          "SlutskyDecomposition.income"),
        E("substitution-effect", "S.E", "Substitution effect", "hours",
          "SlutskyDecomposition.substitution"),
        E("labor-hours", "L", "Labor supplied OR Labor hours worked", "hours",
          "EconState.L", context="labor market"),
        E("labor-supply", "LS", "Supply of labor", "hours", "op:labor_supply"),
        E("labor-demand", "LD", "Demand for labor", "hours", "op:labor_demand"),
        E("marginal-cost-of-labor", "MCL", "Marginal cost of labor",
          "output units per hour", "op:labor_demand", context="wage line"),
        E("mpl", "MPL", "Marginal product of labor", "output units per hour",
          "op:mpl"),
        E("output", "Y", "Output (Income)", "output units", "EconState.Y"),
        E("tfp", "A", "Technology level OR Total Factor Productivity (TFP) level",
          "output units", "Params.A"),
        E("production-function", "PF", "Production function", "", "op:production"),
        E("mpl-slope", "MPL'", "Derivative of marginal product of labor with respect to L",
          "per hour", "op:mpl", context="diminishing returns"),
        E("mpk", "MPK", "Marginal product of capital", "output per capital unit",
          "op:mpk"),
        E("mpk-slope", "MPK'", "Derivative of marginal product of capital with respect to K",
          "per capital unit", "op:mpk", context="diminishing returns"),
        E("function-of", "f(.)", "Function of", "", "op:production",
          context="per-worker form"),
        E("depreciation", "δ", "Depreciation rate", "fraction per period",
          "Params.delta"),
        E("capital-per-worker", "k", "Capital per worker (K/L)",
          "capital units per worker", "op:solow_solve"),
        E("k-star", "k*", "Steady-state k", "capital units per worker",
          "SolowSolution.kStar"),
        E("k-gold", "k-gold", "Golden-rule k", "capital units per worker",
          "SolowSolution.kGold"),
        E("population-growth", "n", "Population growth rate", "fraction per period",
          "Params.n"),
        E("saving-rate", "s", "Saving rate (S/Y)", "fraction", "Params.s"),
        E("lras", "LRAS", "Long-run aggregate supply", "", "op:lras_output"),
        E("sras", "SRAS", "Short-run aggregate supply", "", "op:sras_output"),
        E("as", "AS", "Aggregate supply", "", "op:sras_output",
          context="supply block"),
        E("ad", "AD", "Aggregate demand", "", "op:ad_output"),
        E("full-employment", "FE", "Full employment", "", "op:labor_market_eq"),
        E("ybar", "Y⁻", "Output level at full employment", "output units",
          "EconState.Ybar"),
        E("price-expectation", "PE", "Price expectation", "price units",
          "Params.PE"),
        E("money-supply", "MS⁻", "Money supply", "nominal units", "Params.Ms"),
        E("m0", "M0",
          "Sum of currency in circulation (notes and coins) plus banks' reserves "
          "with the central bank", "nominal units", "", in_scope=False),
        E("m1", "M1",
          "Currency in circulation plus current (checking) accounts plus deposit "
          "accounts transferable by checks", "nominal units", "", in_scope=False),
        E("nominal-rate", "i", "Nominal interest rate", "percent points",
          "EconState.i"),
        E("real-rate", "r", "Real interest rate", "percent points", "EconState.r"),
        E("money-demand", "MD", "Money demand (Demand for money)", "nominal units",
          "op:money_demand"),
        E("lm", "LM", "Liquidity-Money equilibrium curve", "", "op:lm_rate"),
        E("liquidity-function", "L(Y, i)", "Liquidity function", "real units",
          "op:money_demand", context="liquidity preference"),
        E("national-saving", "S", "National saving", "output units",
          "EconState.Snat"),
        E("investment", "I", "National investment", "output units",
          "EconState.Ipriv", context="goods market"),
        E("is", "IS", "Investment-Saving curve", "", "op:is_output"),
        E("capital-stock", "K", "Capital stock", "capital units", "Params.K"),
        E("user-cost", "UC", "User cost of capital", "output per capital unit",
          "op:user_cost"),
        E("expenditures", "E", "Expenditures", "output units",
          "op:keynesian_cross_solve"),
        E("government", "G", "Government Expenditures", "output units", "Params.G"),
        E("investment-at-rate", "I(r1)", 'Investments made at the interest rate "r1"',
          "output units", "op:investment_demand"),
        E("consumption", "C", "Consumption", "output units", "EconState.C"),
        E("inflation", "π", "Inflation rate", "percent points", "EconState.pi"),
        E("unemployment", "U", "Unemployment rate", "fraction", "EconState.Uu",
          context="labor outcomes"),
        E("u-natural", "U⁻", "The natural rate of unemployment", "fraction",
          "Params.Ubar"),
        E("lrpc", "LRPC", "Long-run Philips curve", "", "op:phillips"),
        E("srpc", "SRPC", "Short-run Philips curve", "", "op:phillips"),
    ]
    return SymbolRegistry(entries)


REGISTRY = _build_registry()

# Notation-table lines, keyed to the registry entry that owns each one.  The
# audit test walks this map to prove full coverage.
NOTATION_TABLE = {
    "- : Fixed": "fixed-marker",
    "~ : Changing": "changing-marker",
    "I: Income": "income",
    "I(w1): Income at wage rate 1": "income-at-wage",
    "U: Utility level OR Utility Indifference Curve": "utility",
    "L: Leisure hours": "leisure-hours",
    "W: Hours worked": "hours-worked",
    "W: Nominal wage rate": "nominal-wage",
    "w: Real wage rate OR W/P": "real-wage",
    "P: Price level": "price-level",
    "I.E: Income effect": "income-effect",
    "S.E: Substitution effect": "substitution-effect",
    "L: Labor supplied OR Labor hours worked": "labor-hours",
    "LS: Supply of labor": "labor-supply",
    "LD: Demand for labor": "labor-demand",
    "MCL: Marginal cost of labor": "marginal-cost-of-labor",
    "MPL: Marginal product of labor": "mpl",
    "Y: Output (Income)": "output",
    "A: Technology level OR Total Factor Productivity (TFP) level": "tfp",
    "PF: Production function": "production-function",
    "MPL': Derivative of marginal product of labor with respect to L": "mpl-slope",
    "MPK: Marginal product of capital": "mpk",
    "MPK': Derivative of marginal product of capital with respect to K": "mpk-slope",
    "F(.) OR f(.): Function of": "function-of",
    "δ : Depreciation rate": "depreciation",
    "k: Capital per worker (K/L)": "capital-per-worker",
    "k*: Steady-state k": "k-star",
    "k-gold: Golden-rule k": "k-gold",
    "n: Population growth rate": "population-growth",
    "s: Saving rate (S/Y)": "saving-rate",
    "LRAS: Long-run aggregate supply": "lras",
    "SRAS: Short-run aggregate supply": "sras",
    "AS: Aggregate supply": "as",
    "AD: Aggregate demand": "ad",
    "FE: Full employment": "full-employment",
    "Y⁻ of Y of FE: Output level at full employment": "ybar",
    "PE: Price expectation": "price-expectation",
    "MS⁻: Money supply": "money-supply",
    "M0: Sum of currency in circulation (notes and coins) plus banks' reserves with the central bank": "m0",
    "M1: Currency in circulation plus current (checking) accounts plus deposit accounts transferable by checks": "m1",
    "i: Nominal interest rate": "nominal-rate",
    "r: Real interest rate": "real-rate",
    "MD: Money demand (Demand for money)": "money-demand",
    "LM: Liquidity-Money equilibrium curve": "lm",
    "L(Y, i): Liquidity function": "liquidity-function",
    "S: National saving": "national-saving",
    "I: National investment": "investment",
    "IS: Investment-Saving curve": "is",
    "K: Capital stock": "capital-stock",
    "UC: User cost of capital": "user-cost",
    "E: Expenditures": "expenditures",
    "G: Government Expenditures": "government",
    'I(r1): Investments made at the interest rate "r1"': "investment-at-rate",
    "C: Consumption": "consumption",
    "π : Inflation rate": "inflation",
    "U: Unemployment rate": "unemployment",
    "U⁻: The natural rate of unemployment": "u-natural",
    "LRPC: Long-run Philips curve": "lrpc",
    "SRPC: Short-run Philips curve": "srpc",
}


# ---------------------------------------------------------------------------
# Primitive operations
# ---------------------------------------------------------------------------

def production(A: float, K: float, L: float, alpha: float) -> float:
    """Cobb-Douglas output A * K**alpha * L**(1-alpha)."""
    if A < 0 or K < 0 or L < 0:
        raise ValueError("production inputs must be nonnegative")
    return A * K**alpha * L**(1.0 - alpha)


def mpl(A: float, K: float, L: float, alpha: float) -> float:
    """Marginal product of labor, (1-alpha) * A * (K/L)**alpha."""
    if L <= 0:
        raise ValueError("mpl requires L > 0")
    if A < 0 or K < 0:
        raise ValueError("production inputs must be nonnegative")
    return (1.0 - alpha) * A * (K / L) ** alpha


def mpk(A: float, K: float, L: float, alpha: float) -> float:
    """Marginal product of capital, alpha * A * (L/K)**(1-alpha)."""
    if K <= 0:
        raise ValueError("mpk requires K > 0")
    if A < 0 or L < 0:
        raise ValueError("production inputs must be nonnegative")
    return alpha * A * (L / K) ** (1.0 - alpha)


def consumption(Y: float, r: float, c0: float, c1: float, T: float, e: float) -> float:
    """C = c0 + c1*(Y - T) - e*r; e > 0 makes saving slope upward in r."""
    return c0 + c1 * (Y - T) - e * r


def investment_demand(r: float, I0: float, d: float) -> float:
    """I = I0 - d*r.  May be negative at high r; plotting layers clip, the
    solver does not."""
    return I0 - d * r


def money_demand(P: float, Y: float, i: float, kY: float, b: float) -> float:
    """MD = P * kY * Y * exp(-b*i): homogeneous of degree 1 in P, increasing
    in Y, decreasing in i."""
    if P <= 0:
        raise ValueError("money_demand requires P > 0")
    if Y < 0:
        raise ValueError("money_demand requires Y >= 0")
    return P * kY * Y * math.exp(-b * i)


def user_cost(r: float, delta: float, pK: float) -> float:
    """Rental rate of capital (r + delta) * pK."""
    if r + delta < 0:
        raise ValueError("user_cost requires r + delta >= 0")
    return (r + delta) * pK


def capital_demand(uc: float, L: float, A: float, alpha: float, pK: float) -> float:
    """Capital stock at which mpk equals the real rental uc/pK.

    Closed form: Kd = L * (alpha * A * pK / uc)**(1/(1-alpha)).
    """
    if uc <= 0:
        raise ValueError("capital_demand requires uc > 0")
    if L <= 0:
        raise ValueError("capital_demand requires L > 0")
    return L * (alpha * A * pK / uc) ** (1.0 / (1.0 - alpha))

"""Radius problems: majorant functions and closed-form Bohr radii.

Each Bohr-type result handled by this package is identified by a variant tag
(a stable CLI-facing identifier) plus whatever parameters the statement
carries: the quasiconformality constant K, the dilatation amplitude k, the
monomial exponent n.  A variant is either *closed-form* (its radius is an
algebraic expression) or *root-defined* (its radius is the unique zero in
(0,1) of a strictly increasing majorant function).  Both kinds are evaluable
here; certified root extraction lives in ``solver``.

Variant summary:

    thm11_univalent              closed form   3 - sqrt(8)        bound d
    thm11_convex                 closed form   1/3                bound d
    thm12_quasi(K)               closed form   see below          bound d
    thm12_quasi_convex(K)        closed form   (K+1)/(5K+1)       bound d
    thm22_bohr                   closed form   1/3                bound 1
    thm23_quasi(K)               closed form   see below          bound 1
    thm23_quasi_convex(K)        closed form   (K+1)/(3K+1)       bound 1
    thm23_subordination(K)       closed form   min(1/3, quasi)    bound 1
    thm23_subordination_convex(K) closed form  min(1/3, convex)   bound 1
    thm24_monomial(k, n)         root-defined                     bound 1
    cor25_monomial(n)            root-defined  (k -> 1 limit)     bound 1
    thm27_mobius                 root-defined                     bound 1+|a|
    thm29_convex_direction       root-defined  (5-sqrt(17))/4     bound 1
    thm210_convex_direction_s0   root-defined                     bound 1
    thm211_convex                root-defined  (3-sqrt(5))/2      bound 1

"bound d" marks the families whose Bohr sum is compared against the distance
from the image of 0 to the image boundary; the caller supplies that distance
(catalog presets: 1/4 for the full-growth maps, 1/2 for half-plane maps).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

VARIANTS = (
    "thm11_univalent",
    "thm11_convex",
    "thm12_quasi",
    "thm12_quasi_convex",
    "thm22_bohr",
    "thm23_quasi",
    "thm23_quasi_convex",
    "thm23_subordination",
    "thm23_subordination_convex",
    "thm24_monomial",
    "cor25_monomial",
    "thm27_mobius",
    "thm29_convex_direction",
    "thm210_convex_direction_s0",
    "thm211_convex",
)

# Short spellings accepted anywhere a variant is named (CLI included).
THEOREM_ALIASES = {
    "thm11": "thm11_univalent",
    "thm12": "thm12_quasi",
    "thm12_convex": "thm12_quasi_convex",
    "thm22": "thm22_bohr",
    "thm23": "thm23_quasi",
    "thm23_convex": "thm23_quasi_convex",
    "thm23_sub": "thm23_subordination",
    "thm23_sub_convex": "thm23_subordination_convex",
    "thm24": "thm24_monomial",
    "cor25": "cor25_monomial",
    "thm27": "thm27_mobius",
    "thm29": "thm29_convex_direction",
    "thm210": "thm210_convex_direction_s0",
    "thm211": "thm211_convex",
}

ROOT_DEFINED = frozenset(
    {
        "thm24_monomial",
        "cor25_monomial",
        "thm27_mobius",
        "thm29_convex_direction",
        "thm210_convex_direction_s0",
        "thm211_convex",
    }
)

# Variants whose bound is the caller-supplied boundary distance d.
NEEDS_DISTANCE = frozenset(
    {"thm11_univalent", "thm11_convex", "thm12_quasi", "thm12_quasi_convex"}
)

_NEEDS_K = frozenset(
    {
        "thm12_quasi",
        "thm12_quasi_convex",
        "thm23_quasi",
        "thm23_quasi_convex",
        "thm23_subordination",
        "thm23_subordination_convex",
    }
)

# K at which the quasiconformal radius (2K+1-sqrt(K(3K+2)))/(K+1) crosses
# 1/3, i.e. where the min rule switches branch.  Regression value; algebra
# gives exactly 2.
THM23_MIN_RULE_CROSSOVER_K = 2.0

_DESCRIPTIONS = {
    "thm11_univalent": "subordinates of a univalent analytic map; bound is the boundary distance d; radius 3-sqrt(8)",
    "thm11_convex": "subordinates of a convex univalent analytic map; bound d; radius 1/3",
    "thm12_quasi": "K-quasiconformal harmonic map with univalent analytic part; bound d; radius (5K+1-sqrt(8K(3K+1)))/(K+1)",
    "thm12_quasi_convex": "K-quasiconformal harmonic map with convex analytic part; bound d; radius (K+1)/(5K+1)",
    "thm22_bohr": "subordinates of a normalized univalent analytic map; bound 1; radius 1/3",
    "thm23_quasi": "K-quasiconformal harmonic map with univalent analytic part; bound 1; radius (2K+1-sqrt(K(3K+2)))/(K+1)",
    "thm23_quasi_convex": "K-quasiconformal harmonic map with convex analytic part; bound 1; radius (K+1)/(3K+1)",
    "thm23_subordination": "harmonic subordinates of the thm23_quasi family; bound 1; radius min(1/3, base radius)",
    "thm23_subordination_convex": "harmonic subordinates of the thm23_quasi_convex family; bound 1; radius min(1/3, base radius)",
    "thm24_monomial": "harmonic map with dilatation k e^{i theta} z^n; bound 1; root-defined radius",
    "cor25_monomial": "harmonic map with dilatation e^{i theta} z^n (k -> 1 limit); bound 1; root-defined radius",
    "thm27_mobius": "harmonic map with disk-automorphism dilatation; bound 1+|a|; root of r^3 - 3r^2 + 5r - 1",
    "thm29_convex_direction": "univalent harmonic map convex in one direction; bound 1; radius (5-sqrt(17))/4",
    "thm210_convex_direction_s0": "harmonic map convex in one direction with b_1 = 0; bound 1; root-defined radius",
    "thm211_convex": "convex univalent harmonic map with b_1 = 0; bound 1; radius (3-sqrt(5))/2",
}


def resolve_variant(name: str) -> str:
    """Canonical variant tag, accepting the short aliases."""
    canonical = THEOREM_ALIASES.get(name, name)
    if canonical not in VARIANTS:
        known = ", ".join(sorted(THEOREM_ALIASES))
        raise ValueError(f"unknown variant {name!r}; short names: {known}")
    return canonical


@dataclass(frozen=True)
class RadiusProblem:
    """One radius statement: variant tag plus the parameters it demands.

    K >= 1 for the quasiconformal families, k in (0, 1] and integer n >= 1
    for the monomial-dilatation family, n alone for its k -> 1 limit.
    Parameters not demanded by the variant are rejected.
    """

    variant: str
    K: float | None = None
    k: float | None = None
    n: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "variant", resolve_variant(self.variant))
        v = self.variant
        if v in _NEEDS_K:
            if self.K is None:
                raise ValueError(f"{v} requires K")
            if not self.K >= 1.0:
                raise ValueError("K must be >= 1")
        elif self.K is not None:
            raise ValueError(f"{v} takes no K parameter")
        if v == "thm24_monomial":
            if self.k is None:
                raise ValueError(f"{v} requires k")
            if not 0.0 < self.k <= 1.0:
                raise ValueError("k must lie in (0, 1]")
        elif self.k is not None:
            raise ValueError(f"{v} takes no k parameter")
        if v in ("thm24_monomial", "cor25_monomial"):
            if self.n is None:
                raise ValueError(f"{v} requires n")
            if not isinstance(self.n, (int, np.integer)) or self.n < 1:
                raise ValueError("n must be an integer >= 1")
        elif self.n is not None:
            raise ValueError(f"{v} takes no n parameter")

    @property
    def root_defined(self) -> bool:
        return self.variant in ROOT_DEFINED

    def describe(self) -> str:
        """One-line statement of family, bound, and radius expression."""
        parts = [_DESCRIPTIONS[self.variant]]
        params = []
        if self.K is not None:
            params.append(f"K={self.K:g}")
        if self.k is not None:
            params.append(f"k={self.k:g}")
        if self.n is not None:
            params.append(f"n={self.n}")
        if params:
            parts.append("(" + ", ".join(params) + ")")
        return " ".join(parts)

    def bound(self, distance: float | None = None, mobius_a: float | None = None) -> float:
        """Right side of the Bohr inequality for this variant.

        Distance-scaled variants require ``distance`` (the caller-known
        d from the image of 0 to the image boundary); the automorphism
        variant requires ``mobius_a`` and returns 1 + |a|, a constant the
        statement supplies without interpretation; all other variants
        return 1.
        """
        v = self.variant
        if v in NEEDS_DISTANCE:
            if mobius_a is not None:
                raise ValueError(f"{v} takes no mobius_a")
            if distance is None:
                raise ValueError(f"{v} bound needs the boundary distance d")
            if not distance > 0:
                raise ValueError("distance must be positive")
            return float(distance)
        if v == "thm27_mobius":
            if distance is not None:
                raise ValueError(f"{v} takes no distance")
            if mobius_a is None:
                raise ValueError(f"{v} bound needs the dilatation parameter a")
            if not -1.0 < mobius_a < 1.0:
                raise ValueError("a must lie in (-1, 1)")
            return 1.0 + abs(mobius_a)
        if distance is not None or mobius_a is not None:
            raise ValueError(f"{v} has the fixed bound 1")
        return 1.0


def closed_form_radius(p: RadiusProblem) -> float | None:
    """Algebraic radius where one exists, else None.

    The root-defined cubic/quadratic variants with solvable equations
    (thm29, thm211) report their algebraic roots too, so the solver can be
    cross-checked against them.
    """
    v = p.variant
    if v == "thm11_univalent":
        return 3.0 - math.sqrt(8.0)
    if v in ("thm11_convex", "thm22_bohr"):
        return 1.0 / 3.0
    if v == "thm12_quasi":
        K = p.K
        return (5.0 * K + 1.0 - math.sqrt(8.0 * K * (3.0 * K + 1.0))) / (K + 1.0)
    if v == "thm12_quasi_convex":
        return (p.K + 1.0) / (5.0 * p.K + 1.0)
    if v == "thm23_quasi":
        K = p.K
        return (2.0 * K + 1.0 - math.sqrt(K * (3.0 * K + 2.0))) / (K + 1.0)
    if v == "thm23_quasi_convex":
        return (p.K + 1.0) / (3.0 * p.K + 1.0)
    if v == "thm23_subordination":
        return min(1.0 / 3.0, closed_form_radius(RadiusProblem("thm23_quasi", K=p.K)))
    if v == "thm23_subordination_convex":
        return min(
            1.0 / 3.0, closed_form_radius(RadiusProblem("thm23_quasi_convex", K=p.K))
        )
    if v == "thm29_convex_direction":
        return (5.0 - math.sqrt(17.0)) / 4.0
    if v == "thm211_convex":
        return (3.0 - math.sqrt(5.0)) / 2.0
    return None


def majorant_value(p: RadiusProblem, r):
    """Majorant minus bound for a root-defined variant, at r in [0, 1).

    Normalized so the value is negative below the radius and positive
    above; every root-defined majorant is strictly increasing on (0, 1),
    which is what makes the bisection certificate meaningful.  Accepts
    scalar or array r.  Closed-form variants have no majorant here and
    raise, directing the caller to ``closed_form_radius``.
    """
    if not p.root_defined:
        raise ValueError(
            f"{p.variant} has a closed-form radius; use closed_form_radius"
        )
    rs = np.asarray(r, dtype=np.float64)
    if np.any(rs < 0.0) or np.any(rs >= 1.0):
        raise ValueError("r must lie in [0, 1)")
    v = p.variant
    if v in ("thm24_monomial", "cor25_monomial"):
        k = 1.0 if v == "cor25_monomial" else p.k
        n = p.n
        one = 1.0 - rs
        # log(1-r) through log1p(-r) keeps accuracy near r = 0.
        val = (
            (k + 1.0) * rs / one**2
            - 2.0 * n * k * rs / one
            - k * n**2 * np.log1p(-rs)
            - 1.0
        )
    elif v == "thm27_mobius":
        val = rs**3 - 3.0 * rs**2 + 5.0 * rs - 1.0
    elif v == "thm29_convex_direction":
        # -(2r^2 - 5r + 1): negated so the sign convention holds.
        val = -(2.0 * rs**2 - 5.0 * rs + 1.0)
    elif v == "thm210_convex_direction_s0":
        # Monotone series form; the equivalent cubic 4r^3 - 9r^2 + 12r - 3
        # has the opposite sign below the root.
        one = 1.0 - rs
        val = 2.0 * rs * (1.0 + rs) / (3.0 * one**3) + rs / (3.0 * one) - 1.0
    else:  # thm211_convex
        val = rs / (1.0 - rs) ** 2 - 1.0
    if rs.ndim == 0:
        return float(val)
    return val


# ---------------------------------------------------------------------------
# Series identities behind the majorants.

IDENTITY_NAMES = (
    "sum_m_rm",
    "sum_rm",
    "sum_rm_over_m",
    "sum_m_mplus1_rm",
    "sum_2m2plus1_over3_rm",
)


@dataclass(frozen=True)
class MajorantIdentity:
    """A summable term family t(m) r^m with its closed form in r.

    Every majorant above is a combination of these five sums; checking each
    truncation against its closed form pins the algebra the majorants rely
    on.
    """

    name: str
    term: Callable[[np.ndarray, float], np.ndarray]
    closed_form: Callable[[float], float]


IDENTITIES = {
    "sum_m_rm": MajorantIdentity(
        "sum_m_rm",
        lambda m, r: m * r**m,
        lambda r: r / (1.0 - r) ** 2,
    ),
    "sum_rm": MajorantIdentity(
        "sum_rm",
        lambda m, r: r**m,
        lambda r: r / (1.0 - r),
    ),
    "sum_rm_over_m": MajorantIdentity(
        "sum_rm_over_m",
        lambda m, r: r**m / m,
        lambda r: -math.log1p(-r),
    ),
    "sum_m_mplus1_rm": MajorantIdentity(
        "sum_m_mplus1_rm",
        lambda m, r: m * (m + 1.0) * r**m,
        lambda r: r * (1.0 + r) / (1.0 - r) ** 3 + r / (1.0 - r) ** 2,
    ),
    "sum_2m2plus1_over3_rm": MajorantIdentity(
        "sum_2m2plus1_over3_rm",
        lambda m, r: (2.0 * m**2 + 1.0) / 3.0 * r**m,
        lambda r: 2.0 * r * (1.0 + r) / (3.0 * (1.0 - r) ** 3)
        + r / (3.0 * (1.0 - r)),
    ),
}


def m2_tail(r: float, M: int) -> float:
    """Closed form of sum_{m > M} m^2 r^m, for 0 <= r < 1.

    With N = M + 1 the tail is
    r^N [N^2 - (2N^2 - 2N - 1) r + (N-1)^2 r^2] / (1-r)^3, evaluated
    directly so no full-minus-partial cancellation occurs.
    """
    if not 0.0 <= r < 1.0:
        raise ValueError("r must lie in [0, 1)")
    if M < 0:
        raise ValueError("M must be >= 0")
    if r == 0.0:
        return 0.0
    N = M + 1
    poly = N**2 - (2.0 * N**2 - 2.0 * N - 1.0) * r + (N - 1) ** 2 * r**2
    return float(r**N * poly / (1.0 - r) ** 3)


def identity_tail_bound(r: float, M: int) -> float:
    """Tail bound valid for every identity above: terms are <= 2 m^2 r^m."""
    return 2.0 * m2_tail(r, M)


def majorant_identity_check(identity: MajorantIdentity, r: float, M: int) -> float:
    """|truncated sum - closed form|; must sit within identity_tail_bound."""
    if not 0.0 <= r <= 0.95:
        raise ValueError("r must lie in [0, 0.95] for the stated tail bound")
    if M < 1:
        raise ValueError("M must be >= 1")
    m = np.arange(1, M + 1, dtype=np.float64)
    partial = float(np.sum(identity.term(m, r)))
    return abs(partial - identity.closed_form(r))

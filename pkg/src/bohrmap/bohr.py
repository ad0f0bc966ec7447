"""Bohr partial sums with rigorous tails, inequality profiles, sharpness.

The central quantity is S(r) = sum_{m=1..M} (|a_m| + |b_m|) r^m for a
truncated harmonic map.  Each partial sum is paired with a closed-form tail
bound C * sum_{m>M} m^2 r^m, sound whenever the map's coefficients satisfy
|a_m| + |b_m| <= C m^2 for all m; the catalog records a valid C per named
map, and exact polynomials may pass C = 0.  A verdict "pass" at r means
S(r) + tail <= bound, so a pass is a proof at that point, not an estimate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .catalog import (
    BOUNDARY_DISTANCE,
    TAIL_CONSTANTS,
    NamedMap,
    closed_form_eval,
    make_map,
)
from .radii import RadiusProblem, m2_tail
from .series import HarmonicMap, circle_grid, eval_harmonic
from .solver import solve_radius

DEFAULT_MARGIN = 1e-3
DEFAULT_GRID_SIZE = 256
DEFAULT_TAIL_CONSTANT = 2.0


@dataclass(frozen=True)
class BohrProfile:
    """Grid of partial Bohr sums, tail bounds, and per-point verdicts."""

    map_id: str
    r_grid: np.ndarray
    partial_sums: np.ndarray
    tail_bounds: np.ndarray
    bound: float
    verdicts: np.ndarray = field(default=None)

    def __post_init__(self):
        r = np.asarray(self.r_grid, dtype=np.float64)
        sums = np.asarray(self.partial_sums, dtype=np.float64)
        tails = np.asarray(self.tail_bounds, dtype=np.float64)
        if r.ndim != 1 or sums.shape != r.shape or tails.shape != r.shape:
            raise ValueError("grid, sums, and tails must be 1-d and equal length")
        if np.any(r < 0.0) or np.any(r >= 1.0) or np.any(np.diff(r) <= 0.0):
            raise ValueError("r_grid must be strictly increasing within [0, 1)")
        if np.any(sums < 0.0) or np.any(np.diff(sums) < 0.0):
            raise ValueError("partial sums must be nonnegative and nondecreasing")
        if np.any(tails < 0.0):
            raise ValueError("tail bounds must be nonnegative")
        if not self.bound > 0.0:
            raise ValueError("bound must be positive")
        expected = sums + tails <= self.bound
        if self.verdicts is None:
            verdicts = expected
        else:
            verdicts = np.asarray(self.verdicts, dtype=bool)
            if verdicts.shape != r.shape or np.any(verdicts != expected):
                raise ValueError("verdicts must equal (partial + tail <= bound)")
        object.__setattr__(self, "r_grid", r)
        object.__setattr__(self, "partial_sums", sums)
        object.__setattr__(self, "tail_bounds", tails)
        object.__setattr__(self, "verdicts", verdicts)

    @property
    def all_pass(self) -> bool:
        return bool(np.all(self.verdicts))

    def to_csv(self) -> str:
        lines = ["r,partial_sum,tail_bound,bound,verdict"]
        for r, s, t, v in zip(
            self.r_grid, self.partial_sums, self.tail_bounds, self.verdicts
        ):
            verdict = "pass" if v else "fail"
            lines.append(
                f"{r:.12g},{s:.12g},{t:.12g},{self.bound:.12g},{verdict}"
            )
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "map_id": self.map_id,
            "r_grid": [float(x) for x in self.r_grid],
            "partial_sums": [float(x) for x in self.partial_sums],
            "tail_bounds": [float(x) for x in self.tail_bounds],
            "bound": self.bound,
            "verdicts": [bool(v) for v in self.verdicts],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def bohr_partial_sum(
    f: HarmonicMap,
    r: float,
    M: int | None = None,
    tail_constant: float = DEFAULT_TAIL_CONSTANT,
) -> tuple[float, float]:
    """(sum_{m=1..M} (|a_m|+|b_m|) r^m, tail bound) at radius r.

    M defaults to the truncation order and may not exceed it.  The tail is
    tail_constant * sum_{m>M} m^2 r^m in closed form; pass the catalog's
    constant for named maps, 0 for exact polynomials.
    """
    if not 0.0 <= r < 1.0:
        raise ValueError("r must lie in [0, 1)")
    if M is None:
        M = f.order
    if not 0 <= M <= f.order:
        raise ValueError("M must lie in [0, truncation order]")
    if tail_constant < 0.0:
        raise ValueError("tail_constant must be >= 0")
    moduli = f.coefficient_moduli()[1 : M + 1]
    powers = r ** np.arange(1, M + 1, dtype=np.float64)
    total = float(moduli @ powers) if M >= 1 else 0.0
    return total, tail_constant * m2_tail(r, M)


def verify_inequality(
    f: HarmonicMap,
    p: RadiusProblem,
    *,
    map_id: str = "custom",
    bound: float | None = None,
    radius: float | None = None,
    margin: float = DEFAULT_MARGIN,
    grid_size: int = DEFAULT_GRID_SIZE,
    M: int | None = None,
    tail_constant: float = DEFAULT_TAIL_CONSTANT,
    distance: float | None = None,
    mobius_a: float | None = None,
) -> BohrProfile:
    """Profile of the Bohr inequality on r in [0, radius - margin].

    The radius defaults to the solved radius of p, the bound to p's own
    (with ``distance``/``mobius_a`` forwarded for the variants that need
    them).  Failing verdicts are data, not errors: the profile reports them
    and ``all_pass`` summarizes.
    """
    if not margin > 0.0:
        raise ValueError("margin must be positive")
    if grid_size < 2:
        raise ValueError("grid_size must be >= 2")
    if radius is None:
        radius = solve_radius(p).root
    if bound is None:
        bound = p.bound(distance=distance, mobius_a=mobius_a)
    top = radius - margin
    if not 0.0 < top < 1.0:
        raise ValueError("radius - margin must lie in (0, 1)")
    grid = np.linspace(0.0, top, grid_size)
    sums = np.empty(grid_size)
    tails = np.empty(grid_size)
    for i, r in enumerate(grid):
        sums[i], tails[i] = bohr_partial_sum(f, float(r), M=M, tail_constant=tail_constant)
    return BohrProfile(
        map_id=map_id,
        r_grid=grid,
        partial_sums=sums,
        tail_bounds=tails,
        bound=float(bound),
    )


def sharpness_scan(
    f: HarmonicMap,
    p: RadiusProblem,
    epsilon: float,
    *,
    bound: float | None = None,
    radius: float | None = None,
    M: int | None = None,
    distance: float | None = None,
    mobius_a: float | None = None,
) -> float:
    """Partial sum at (radius + epsilon) minus the bound.

    For a theorem's extremal map the sum meets the bound at the radius with
    equality, so any epsilon > 0 must give a strictly positive excess; that
    excess is returned (no tail is added: the truncated sum alone already
    overshooting is the demonstration).
    """
    if not epsilon > 0.0:
        raise ValueError("epsilon must be positive")
    if radius is None:
        radius = solve_radius(p).root
    if bound is None:
        bound = p.bound(distance=distance, mobius_a=mobius_a)
    r = radius + epsilon
    if not r < 1.0:
        raise ValueError("radius + epsilon must stay below 1")
    total, _ = bohr_partial_sum(f, r, M=M, tail_constant=0.0)
    return total - float(bound)


def boundary_reach(
    map_spec: NamedMap | HarmonicMap, r: float, samples: int = 4096
) -> tuple[float, float]:
    """(max |f|, min |f|) over equally spaced points of the circle |z| = r.

    Named maps are evaluated from their closed forms, arbitrary harmonic
    maps from their truncated series.  The minimum is the sampled distance
    from f(0) = 0 to the image curve; no exact boundary distance is
    computed.
    """
    if not 0.0 < r < 1.0:
        raise ValueError("r must lie in (0, 1)")
    if samples < 64:
        raise ValueError("samples must be >= 64")
    points = circle_grid(r, samples)
    if isinstance(map_spec, NamedMap):
        values = closed_form_eval(map_spec, points)
    elif isinstance(map_spec, HarmonicMap):
        values = eval_harmonic(map_spec, points)
    else:
        raise TypeError("map_spec must be a NamedMap or HarmonicMap")
    moduli = np.abs(values)
    return float(np.max(moduli)), float(np.min(moduli))


# Map/variant pairings whose hypotheses are actually satisfied, used by the
# CLI to refuse meaningless verify/sharpness runs.  The library functions
# accept any pairing so tests can probe failures.
COMPATIBLE = {
    "koebe_analytic": ("thm11_univalent", "thm22_bohr"),
    "half_plane_analytic": ("thm11_univalent", "thm11_convex", "thm22_bohr"),
    "harmonic_koebe_K": ("thm210_convex_direction_s0",),
    "half_plane_L": ("thm210_convex_direction_s0", "thm211_convex"),
    "f0_sharp": ("thm24_monomial", "cor25_monomial"),
    "p_k": ("thm12_quasi", "thm23_quasi"),
    "q_k": ("thm12_quasi_convex", "thm23_quasi_convex", "thm23_quasi"),
}


def check_pairing(spec: NamedMap, p: RadiusProblem) -> None:
    """Raise unless the named map satisfies the variant's hypotheses."""
    allowed = COMPATIBLE.get(spec.name, ())
    if p.variant not in allowed:
        raise ValueError(
            f"{spec.name} is not a documented extremal/witness for {p.variant}; "
            f"valid variants: {', '.join(allowed) or 'none'}"
        )
    if spec.name == "f0_sharp":
        # f0's dilatation is z itself: the k = 1, n = 1 member of the family.
        if p.variant == "thm24_monomial" and (p.k != 1.0 or p.n != 1):
            raise ValueError("f0_sharp matches thm24_monomial only at k = 1, n = 1")
        if p.variant == "cor25_monomial" and p.n != 1:
            raise ValueError("f0_sharp matches cor25_monomial only at n = 1")
    if spec.name in ("p_k", "q_k") and p.K is not None:
        k_max = (p.K - 1.0) / (p.K + 1.0)
        if spec.k > k_max + 1e-12:
            raise ValueError(
                f"map k = {spec.k:g} exceeds (K-1)/(K+1) = {k_max:g}; "
                "the map is not K-quasiconformal for this K"
            )


def default_bound_inputs(spec: NamedMap, p: RadiusProblem) -> dict:
    """Keyword presets for RadiusProblem.bound for a catalog pairing.

    Distance-scaled variants pick up the catalog's boundary distance for
    the map; other variants need nothing.
    """
    from .radii import NEEDS_DISTANCE

    if p.variant in NEEDS_DISTANCE:
        if spec.name not in BOUNDARY_DISTANCE:
            raise ValueError(f"no boundary-distance preset for {spec.name}")
        return {"distance": BOUNDARY_DISTANCE[spec.name]}
    return {}


def profile_for_named_map(
    spec: NamedMap,
    p: RadiusProblem,
    *,
    bound: float | None = None,
    radius: float | None = None,
    margin: float = DEFAULT_MARGIN,
    grid_size: int = DEFAULT_GRID_SIZE,
    M: int | None = None,
) -> BohrProfile:
    """verify_inequality for a catalog map with its presets filled in."""
    check_pairing(spec, p)
    kwargs = {} if bound is not None else default_bound_inputs(spec, p)
    return verify_inequality(
        make_map(spec),
        p,
        map_id=spec.name,
        bound=bound,
        radius=radius,
        margin=margin,
        grid_size=grid_size,
        M=M,
        tail_constant=TAIL_CONSTANTS[spec.name],
        **kwargs,
    )

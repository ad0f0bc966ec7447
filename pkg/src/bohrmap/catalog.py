"""Catalog of the extremal and reference maps.

Seven maps recur in the sharpness analysis.  Two are analytic (the Koebe
function and the right half-plane map), five are harmonic.  Each is available
both as a truncated coefficient model, for Bohr partial sums, and as a closed
form, for independent evaluation on the disk.

Coefficient models (m >= 1, everything else zero):

    koebe_analytic       a_m = m
    half_plane_analytic  a_m = 1
    harmonic_koebe_K     a_m = (m+1)(2m+1)/6,  b_m = (m-1)(2m-1)/6
    half_plane_L         a_m = (m+1)/2,        b_m = (1-m)/2
    f0_sharp             a_m = m,              b_m = (m-1)^2/m
    p_k                  a_m = m,              b_m = k m
    q_k                  a_m = 1,              b_m = k
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .series import DEFAULT_ORDER, HarmonicMap, PowerSeries

MAP_NAMES = (
    "koebe_analytic",
    "half_plane_analytic",
    "harmonic_koebe_K",
    "half_plane_L",
    "f0_sharp",
    "p_k",
    "q_k",
)

ALIASES = {
    "koebe": "koebe_analytic",
    "half_plane": "half_plane_analytic",
    "K": "harmonic_koebe_K",
    "L": "half_plane_L",
    "f0": "f0_sharp",
}

# Maps whose sharpness family is parameterized by the dilatation bound k.
PARAMETRIC_MAPS = ("p_k", "q_k")

# C such that |a_m| + |b_m| <= C m^2 for every m >= 1; feeds the tail bound.
TAIL_CONSTANTS = {
    "koebe_analytic": 2.0,
    "half_plane_analytic": 1.0,
    "harmonic_koebe_K": 1.0,
    "half_plane_L": 1.0,
    "f0_sharp": 2.0,
    "p_k": 2.0,
    "q_k": 2.0,
}

# Distance from the image of 0 to the image boundary, where known in closed
# form.  This is the d appearing in the distance-scaled Bohr bounds.
BOUNDARY_DISTANCE = {
    "koebe_analytic": 0.25,
    "half_plane_analytic": 0.5,
    "f0_sharp": 0.25,
    "p_k": 0.25,
    "q_k": 0.5,
}


def resolve_name(name: str) -> str:
    """Canonical catalog name, accepting the short aliases."""
    canonical = ALIASES.get(name, name)
    if canonical not in MAP_NAMES:
        known = ", ".join(MAP_NAMES + tuple(ALIASES))
        raise ValueError(f"unknown map {name!r}; expected one of: {known}")
    return canonical


@dataclass(frozen=True)
class NamedMap:
    """A catalog map selection: canonical name, optional k, truncation order."""

    name: str
    k: float | None = None
    order: int = DEFAULT_ORDER

    def __post_init__(self):
        object.__setattr__(self, "name", resolve_name(self.name))
        if self.name in PARAMETRIC_MAPS:
            if self.k is None:
                raise ValueError(f"{self.name} requires the dilatation bound k")
            if not 0.0 <= self.k <= 1.0:
                raise ValueError("k must lie in [0, 1]")
        elif self.k is not None:
            raise ValueError(f"{self.name} takes no k parameter")
        if self.order < 2:
            raise ValueError("order must be >= 2")


def make_map(spec: NamedMap) -> HarmonicMap:
    """Truncated coefficient model of the selected map."""
    order = spec.order
    m = np.arange(1, order + 1, dtype=np.float64)
    a = np.zeros(order + 1, dtype=np.complex128)
    b = np.zeros(order + 1, dtype=np.complex128)
    name = spec.name
    if name == "koebe_analytic":
        a[1:] = m
    elif name == "half_plane_analytic":
        a[1:] = 1.0
    elif name == "harmonic_koebe_K":
        a[1:] = (m + 1.0) * (2.0 * m + 1.0) / 6.0
        b[1:] = (m - 1.0) * (2.0 * m - 1.0) / 6.0
    elif name == "half_plane_L":
        a[1:] = (m + 1.0) / 2.0
        b[1:] = (1.0 - m) / 2.0
    elif name == "f0_sharp":
        a[1:] = m
        b[1:] = (m - 1.0) ** 2 / m
    elif name == "p_k":
        a[1:] = m
        b[1:] = spec.k * m
    elif name == "q_k":
        a[1:] = 1.0
        b[1:] = spec.k
    else:  # pragma: no cover - resolve_name already screens
        raise ValueError(f"unknown map {name!r}")
    return HarmonicMap(PowerSeries(a), PowerSeries(b))


def closed_form_eval(spec: NamedMap, z):
    """Evaluate the selected map from its closed form, |z| < 1 required.

    Serves as the truncation-free oracle for the coefficient models: at
    moderate |z| the series and this evaluation must agree to rounding.
    """
    zs = np.asarray(z, dtype=np.complex128)
    if not np.all(np.isfinite(zs)):
        raise ValueError("evaluation points must be finite")
    if np.any(np.abs(zs) >= 1.0):
        raise ValueError("closed forms are only valid for |z| < 1")
    one = 1.0 - zs
    koebe = zs / one**2
    half = zs / one
    name = spec.name
    if name == "koebe_analytic":
        out = koebe
    elif name == "half_plane_analytic":
        out = half
    elif name == "harmonic_koebe_K":
        hk = (zs - zs**2 / 2.0 + zs**3 / 6.0) / one**3
        gk = (zs**2 / 2.0 + zs**3 / 6.0) / one**3
        out = hk + np.conj(gk)
    elif name == "half_plane_L":
        hl = (zs - zs**2 / 2.0) / one**2
        gl = -(zs**2) / 2.0 / one**2
        out = hl + np.conj(gl)
    elif name == "f0_sharp":
        # g0 = sum (m-1)^2/m z^m = koebe - 2*half - log(1-z), termwise.
        g0 = koebe - 2.0 * half - np.log1p(-zs)
        out = koebe + np.conj(g0)
    elif name == "p_k":
        out = koebe + spec.k * np.conj(koebe)
    elif name == "q_k":
        out = half + spec.k * np.conj(half)
    else:  # pragma: no cover
        raise ValueError(f"unknown map {name!r}")
    if zs.ndim == 0:
        return complex(out)
    return out

"""Checkable analytic residue: the isotopy parameter and profile checks.

Two small pieces of the construction are finite enough to verify
numerically:

* the integer t_0 used to isotope a coordinate rotation to the
  identity near the boundary, fixed by the congruences t_0 = -1 mod
  a_0 and t_0 = 0 mod a_i (a Chinese-remainder problem that is
  solvable exactly when a_0 is coprime to the other exponents);
* the profile functions: the pair (h_1, h_2) defining the contact
  form h_1 gamma + h_2 dphi near the binding, whose contact condition
  is the non-vanishing of (h_1 h_2' - h_2 h_1') / r, and the cutoff
  function f interpolating 1 -> 0 with derivative bounded by 1 - eps.

Profiles are validated on sampled grids with central finite
differences (one-sided at the ends).  Tolerances are relative to the
profile magnitude, so rescaling both h_1 and h_2 by a positive
constant never changes a verdict.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources
from typing import Sequence

from .errors import GridTooCoarse, NonCoprime
from .pham import BrieskornExponents

MIN_GRID_POINTS = 16
DEFAULT_TOLERANCE = 1e-6

# Fraction of the outer grid that must already be constant (where the
# binding form hands over to the mapping-torus form).  The Wronskian
# condition is checked strictly inside this collar.
BOUNDARY_COLLAR = 0.1


@dataclass(frozen=True)
class ProfileSample:
    """Sampled binding profiles h_1, h_2 on a radial grid from 0."""

    r_grid: tuple[float, ...]
    h1_values: tuple[float, ...]
    h2_values: tuple[float, ...]

    def __post_init__(self) -> None:
        for name in ("r_grid", "h1_values", "h2_values"):
            v = getattr(self, name)
            if not isinstance(v, tuple):
                object.__setattr__(self, name, tuple(float(x) for x in v))
        if len(self.r_grid) < MIN_GRID_POINTS:
            raise GridTooCoarse(
                f"need at least {MIN_GRID_POINTS} grid points, got {len(self.r_grid)}"
            )
        if len(self.h1_values) != len(self.r_grid) or len(self.h2_values) != len(self.r_grid):
            raise ValueError("profile arrays must match the grid length")
        if self.r_grid[0] != 0.0:
            raise ValueError("radial grid must start at 0")
        if any(b <= a for a, b in zip(self.r_grid, self.r_grid[1:])):
            raise ValueError("radial grid must be strictly increasing")


@dataclass(frozen=True)
class DeformationProfile:
    """Sampled cutoff f with plateau radii R0 < R1 and margin epsilon."""

    r_grid: tuple[float, ...]
    f_values: tuple[float, ...]
    R0: float
    R1: float
    epsilon: float

    def __post_init__(self) -> None:
        for name in ("r_grid", "f_values"):
            v = getattr(self, name)
            if not isinstance(v, tuple):
                object.__setattr__(self, name, tuple(float(x) for x in v))
        if len(self.r_grid) < MIN_GRID_POINTS:
            raise GridTooCoarse(
                f"need at least {MIN_GRID_POINTS} grid points, got {len(self.r_grid)}"
            )
        if len(self.f_values) != len(self.r_grid):
            raise ValueError("profile array must match the grid length")
        if any(b <= a for a, b in zip(self.r_grid, self.r_grid[1:])):
            raise ValueError("radial grid must be strictly increasing")
        if not self.R0 < self.R1:
            raise ValueError("need R0 < R1")
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError("epsilon must lie in (0, 1)")


@dataclass(frozen=True)
class ProfileVerdict:
    """Outcome of a profile validation; failures name the violated checks."""

    passed: bool
    failures: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {"passed": self.passed, "failures": list(self.failures)}


def isotopy_parameter(a: BrieskornExponents) -> int:
    """Least positive t_0 with t_0 = -1 mod a_0, t_0 = 0 mod a_i (i >= 1).

    Raises NonCoprime when a_0 shares a factor with a later exponent,
    in which case no such integer exists.
    """
    a0 = a[0]
    rest = a.a[1:]
    for ai in rest:
        if math.gcd(a0, ai) > 1:
            raise NonCoprime(
                f"gcd({a0}, {ai}) > 1: the rotation cannot be isotoped to the identity"
            )
    L = math.lcm(*rest)
    s = (-pow(L, -1, a0)) % a0
    return L * s


def isotopy_modulus(a: BrieskornExponents) -> int:
    """Period of the solution set: all choices are t_0 + k * modulus."""
    a0 = a[0]
    rest = a.a[1:]
    for ai in rest:
        if math.gcd(a0, ai) > 1:
            raise NonCoprime(
                f"gcd({a0}, {ai}) > 1: the rotation cannot be isotoped to the identity"
            )
    return a0 * math.lcm(*rest)


def _finite_differences(r: Sequence[float], y: Sequence[float]) -> list[float]:
    """Central differences on a (possibly nonuniform) grid, one-sided at ends."""
    n = len(r)
    out = [0.0] * n
    out[0] = (y[1] - y[0]) / (r[1] - r[0])
    out[-1] = (y[-1] - y[-2]) / (r[-1] - r[-2])
    for i in range(1, n - 1):
        out[i] = (y[i + 1] - y[i - 1]) / (r[i + 1] - r[i - 1])
    return out


def _fit_quadratic_coefficient(r: Sequence[float], h2: Sequence[float]) -> float:
    """Least-squares c for h2 ~ c r^2 through the origin."""
    num = sum(h * x * x for x, h in zip(r, h2))
    den = sum(x**4 for x in r)
    return num / den if den else 0.0


def validate_binding_profiles(
    p: ProfileSample, tolerance: float = DEFAULT_TOLERANCE
) -> ProfileVerdict:
    """Check that (h_1, h_2) define a contact form on the binding handle.

    In order:

    1. ``h1_positive`` -- h_1 > 0 on the whole grid;
    2. ``wronskian_vanishes`` / ``wronskian_sign_change`` -- the
       finite-difference quantity (h_1 h_2' - h_2 h_1') / r keeps one
       sign and magnitude above tolerance strictly inside the boundary
       collar, with the r -> 0 limit taken from the quadratic
       extrapolation of h_2;
    3. ``h2_not_quadratic`` -- near r = 0, h_2 fits c r^2;
    4. ``not_constant_near_boundary`` -- on the outer 10% of the grid
       both profiles are constant, so the form matches the
       mapping-torus form there.

    Tolerance is relative to the profile magnitude.
    """
    r, h1, h2 = p.r_grid, p.h1_values, p.h2_values
    n = len(r)
    R = r[-1]
    h1_mag = max(abs(v) for v in h1) or 1.0
    h2_mag = max(abs(v) for v in h2) or 1.0
    failures: list[str] = []

    if min(h1) <= 0.0:
        failures.append("h1_positive")

    d1 = _finite_differences(r, h1)
    d2 = _finite_differences(r, h2)
    collar_start = R * (1.0 - BOUNDARY_COLLAR)
    interior = [i for i in range(1, n) if r[i] < collar_start]
    if not interior:
        raise GridTooCoarse("no interior grid points below the boundary collar")

    fit_window = [i for i in range(n) if r[i] <= R * 0.1]
    if len(fit_window) < 3:
        fit_window = list(range(3))
    c = _fit_quadratic_coefficient([r[i] for i in fit_window], [h2[i] for i in fit_window])

    wronskian_over_r = [
        (h1[i] * d2[i] - h2[i] * d1[i]) / r[i] for i in interior
    ]
    wronskian_over_r.append(2.0 * c * h1[0])  # r -> 0 limit
    w_threshold = tolerance * h1_mag * h2_mag / (R * R)
    if any(abs(w) <= w_threshold for w in wronskian_over_r):
        failures.append("wronskian_vanishes")
    elif len({w > 0 for w in wronskian_over_r}) > 1:
        failures.append("wronskian_sign_change")

    fit_residual = max(abs(h2[i] - c * r[i] * r[i]) for i in fit_window)
    if fit_residual > tolerance * h2_mag:
        failures.append("h2_not_quadratic")

    collar = [i for i in range(n) if r[i] >= collar_start]
    for values, mag in ((h1, h1_mag), (h2, h2_mag)):
        band = [values[i] for i in collar]
        if max(band) - min(band) > tolerance * mag:
            failures.append("not_constant_near_boundary")
            break

    return ProfileVerdict(passed=not failures, failures=tuple(failures))


def validate_deformation_profile(
    d: DeformationProfile, tolerance: float = DEFAULT_TOLERANCE
) -> bool:
    """True iff f is 1 up to R0, 0 from R1 on, with |f'| < 1 - epsilon."""
    return deformation_profile_verdict(d, tolerance).passed


def deformation_profile_verdict(
    d: DeformationProfile, tolerance: float = DEFAULT_TOLERANCE
) -> ProfileVerdict:
    """Named-check variant of validate_deformation_profile.

    Checks, in order: ``head_one`` (f = 1 on [0, R0]), ``tail_zero``
    (f = 0 on [R1, end]), ``slope_bound`` (finite-difference |f'| <
    1 - epsilon everywhere).
    """
    r, f = d.r_grid, d.f_values
    scale = max(1.0, max(abs(v) for v in f))
    failures: list[str] = []

    head = [f[i] for i in range(len(r)) if r[i] <= d.R0]
    if any(abs(v - 1.0) > tolerance * scale for v in head):
        failures.append("head_one")

    tail = [f[i] for i in range(len(r)) if r[i] >= d.R1]
    if not tail:
        raise GridTooCoarse("grid does not reach R1; cannot check the tail plateau")
    if any(abs(v) > tolerance * scale for v in tail):
        failures.append("tail_zero")

    slopes = _finite_differences(r, f)
    if max(abs(s) for s in slopes) >= 1.0 - d.epsilon:
        failures.append("slope_bound")

    return ProfileVerdict(passed=not failures, failures=tuple(failures))


def reference_binding_profile() -> ProfileSample:
    """The bundled witness pair: h_1 = 2 - r^2 and h_2 = r^2 near the
    binding, eased to constants on the outer collar."""
    payload = json.loads(
        resources.files("openbook5")
        .joinpath("data", "reference_binding_profile.json")
        .read_text()
    )
    return ProfileSample(
        r_grid=tuple(payload["r"]),
        h1_values=tuple(payload["h1"]),
        h2_values=tuple(payload["h2"]),
    )


def make_reference_binding_profile(points: int = 161) -> ProfileSample:
    """Analytic construction of the bundled profile on [0, 1].

    Quadratic pieces up to 0.6, a C^1 easing with derivatives
    4 (0.9 - r) in magnitude on [0.6, 0.9], constants on the final
    collar, so the Wronskian stays positive strictly inside the collar
    while both profiles are exactly constant on it.
    """
    if points < MIN_GRID_POINTS:
        raise GridTooCoarse(f"need at least {MIN_GRID_POINTS} points")
    r_grid = [i / (points - 1) for i in range(points)]
    h1, h2 = [], []
    for r in r_grid:
        if r <= 0.6:
            h1.append(2.0 - r * r)
            h2.append(r * r)
        elif r <= 0.9:
            h1.append(3.08 - 3.6 * r + 2.0 * r * r)
            h2.append(-1.08 + 3.6 * r - 2.0 * r * r)
        else:
            h1.append(1.46)
            h2.append(0.54)
    return ProfileSample(tuple(r_grid), tuple(h1), tuple(h2))

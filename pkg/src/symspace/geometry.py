"""Physical geometry of a symmetric space from its catalog entry.

The metric is a positive multiple of the negated Killing form,
<,> = -eps (,); the space is then Einstein with Ricci constant 1/(2 eps).
With psi the highest restricted root in Killing units:

    i(M)^2 = pi^2 * eps / (psi, psi)
    d(M)^2 = pi^2 * eps * dmax^2 / (psi, psi)
    kappa  = (psi, psi) / eps          (max sectional curvature)

where dmax^2 is the squared farthest-vertex norm of the restricted
system's Cartan polytope under highest-root normalization, so that
i(M) * sqrt(kappa) = pi exactly.

Conjugate-point and cut predicates operate on the Cartan slice in Killing
units, with inputs pre-divided by pi: a slice vector h is conjugate when
some restricted root has nonzero integer inner product with it, and the
cut face is the unit level of the highest root on the dominant chamber.
Mapping a general tangent vector to its slice representative is outside
this module; callers supply slice coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .catalog import SpaceEntry, SpaceLabel, resolve, to_json_dict as entry_json
from .linalg import DimensionMismatch, PiSqrtValue, format_rational
from .polytope import (CartanPolytope, SliceClass, build_polytope,
                       classify_point, dominant_representative)
from .roots import RootKind, RootSystem, build


class NoCanonicalMetric(LookupError):
    """Raised when a canonical metric preset is requested but not defined."""


class EmptyProduct(ValueError):
    """Raised when combining an empty list of factors."""


@dataclass(frozen=True)
class MetricSpec:
    """Metric scale: explicit eps, a Ricci constant, or a catalog preset."""

    mode: str                      # "epsilon" | "ricci" | "canonical"
    value: Fraction | None = None

    @classmethod
    def epsilon(cls, value) -> "MetricSpec":
        v = Fraction(value)
        if v <= 0:
            raise ValueError(f"epsilon must be positive, got {v}")
        return cls("epsilon", v)

    @classmethod
    def ricci(cls, value) -> "MetricSpec":
        v = Fraction(value)
        if v <= 0:
            raise ValueError(f"Ricci constant must be positive, got {v}")
        return cls("ricci", v)

    @classmethod
    def canonical(cls) -> "MetricSpec":
        return cls("canonical")


DEFAULT_METRIC = MetricSpec.epsilon(1)


@dataclass(frozen=True)
class GeometryReport:
    space: SpaceEntry
    epsilon: Fraction
    psi_sq: Fraction
    d_sq_sigma: Fraction           # polytope max of the restricted system
    injectivity_radius: PiSqrtValue
    diameter: PiSqrtValue
    kappa: Fraction
    ricci: Fraction


@lru_cache(maxsize=None)
def _system(kind: RootKind) -> RootSystem:
    return build(kind)


@lru_cache(maxsize=None)
def _polytope(kind: RootKind) -> CartanPolytope:
    return build_polytope(_system(kind))


def _epsilon_for(entry: SpaceEntry, metric: MetricSpec) -> Fraction:
    if metric.mode == "epsilon":
        return metric.value
    if metric.mode == "ricci":
        return Fraction(1, 2) / metric.value
    if metric.mode == "canonical":
        if entry.canonical_epsilon is None:
            raise NoCanonicalMetric(f"no canonical metric preset for {entry.label}")
        return entry.canonical_epsilon
    raise ValueError(f"unknown metric mode {metric.mode!r}")  # pragma: no cover


def report(label: SpaceLabel | str, metric: MetricSpec = DEFAULT_METRIC) -> GeometryReport:
    """Compute the geometric quantities of a catalog space under a metric."""
    entry = resolve(label)
    eps = _epsilon_for(entry, metric)
    psi_sq = entry.psi_sq_killing
    d_sq = _polytope(entry.restricted).d_sq
    return GeometryReport(
        space=entry,
        epsilon=eps,
        psi_sq=psi_sq,
        d_sq_sigma=d_sq,
        injectivity_radius=PiSqrtValue(eps / psi_sq),
        diameter=PiSqrtValue(eps * d_sq / psi_sq),
        kappa=psi_sq / eps,
        ricci=Fraction(1, 2) / eps,
    )


def kappa_relation_check(rep: GeometryReport) -> Fraction:
    """i(M)^2 * kappa / pi^2 - 1; identically zero when the two formulas agree."""
    return rep.injectivity_radius.radicand * rep.kappa - 1


@lru_cache(maxsize=None)
def _killing_weights(entry: SpaceEntry) -> tuple[tuple[tuple[int, ...], tuple[Fraction, ...]], ...]:
    """Pairs (root, Killing-Gram row action of the root) for the restricted system."""
    rs = _system(entry.restricted)
    gram_k = rs.gram.scaled(entry.psi_sq_killing)
    return tuple((r, gram_k.mul_vec(tuple(Fraction(c) for c in r)))
                 for r in sorted(rs.roots))


def is_conjugate(label: SpaceLabel | str, h) -> bool:
    """True when some restricted root pairs to a nonzero integer with h.

    h is a rational vector in simple-root coordinates of the restricted
    system, Killing units, divided by pi.
    """
    entry = resolve(label)
    rs = _system(entry.restricted)
    h = tuple(Fraction(c) for c in h)
    if len(h) != rs.rank:
        raise DimensionMismatch(f"point length {len(h)} != rank {rs.rank}")
    for _root, w in _killing_weights(entry):
        v = sum((hi * wi for hi, wi in zip(h, w)), Fraction(0))
        if v != 0 and v.denominator == 1:
            return True
    return False


def cut_classify(label: SpaceLabel | str, h) -> SliceClass:
    """Classify a Killing-unit slice vector against the cut face.

    The vector is first reduced to its dominant representative, so the
    result is invariant under the restricted Weyl group; Interior means
    the ray is still minimizing past this point, the cut face marks cut
    points, Outside lies beyond them.
    """
    return cut_details(label, h)["classification"]


def cut_details(label: SpaceLabel | str, h) -> dict:
    entry = resolve(label)
    rs = _system(entry.restricted)
    h = tuple(Fraction(c) for c in h)
    if len(h) != rs.rank:
        raise DimensionMismatch(f"point length {len(h)} != rank {rs.rank}")
    dom, nrefl = dominant_representative(rs, h)
    scaled = tuple(entry.psi_sq_killing * c for c in dom)
    cls = classify_point(_polytope(entry.restricted), scaled)
    return {
        "classification": cls,
        "dominant_representative": dom,
        "reflections": nrefl,
        "conjugate": is_conjugate(label, h),
    }


def product(reports: list[GeometryReport] | tuple[GeometryReport, ...]) -> tuple[PiSqrtValue, PiSqrtValue]:
    """Injectivity radius and diameter of a product of factors.

    The injectivity radius is the minimum over factors; the squared
    diameter is the sum of squared factor diameters.
    """
    if not reports:
        raise EmptyProduct("product of no factors")
    inj = min(r.injectivity_radius for r in reports)
    diam_sq = sum((r.diameter.radicand for r in reports), Fraction(0))
    return inj, PiSqrtValue(diam_sq)


def report_json_dict(rep: GeometryReport) -> dict:
    out = {"space": entry_json(rep.space)}
    out.update({
        "epsilon": format_rational(rep.epsilon),
        "ricci": format_rational(rep.ricci),
        "kappa": format_rational(rep.kappa),
        "psi_sq": format_rational(rep.psi_sq),
        "d_sq_sigma": format_rational(rep.d_sq_sigma),
        "injectivity_radius": rep.injectivity_radius.to_json(),
        "diameter": rep.diameter.to_json(),
    })
    return out

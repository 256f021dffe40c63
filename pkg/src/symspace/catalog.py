"""Classification catalog of compact simply connected symmetric spaces.

Each entry records the ambient root system, the restricted root system,
the restriction factor (the ratio of the squared Killing lengths of the
highest restricted root and the highest ambient root, 1 or 1/2), and the
squared Killing length of the highest restricted root.  Type II entries
(group manifolds) are labelled by their root system; their factor is
always 1/2.

The restriction factors are classification data; where the black-node set
of the involution's Satake diagram is embedded (standard Araki data,
translated to this package's node numbering) they are independently
cross-checkable: the factor is 1 exactly when every black node is
orthogonal to the highest root.

Low-rank coincidences (b1=a1, c2=b2, d3=a3) are resolved here through an
alias table; `ambient`/`restricted` always hold a buildable kind while
`ambient_name`/`restricted_name` keep the nominal classification label.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .killing import canonical_kind, delta_sq_formula, perp_simple_indices
from .linalg import format_rational
from .roots import InvalidRank, RootKind, build, parse_kind

HALF = Fraction(1, 2)
ONE = Fraction(1)

SERIES = ("AI", "AII", "AIII", "CI", "CII", "BDI", "DIII",
          "EI", "EII", "EIII", "EIV", "EV", "EVI", "EVII", "EVIII", "EIX",
          "FI", "FII", "G", "GROUP")


class InvalidParams(ValueError):
    """Raised when a space label violates its parameter constraints."""


class MissingSatakeData(LookupError):
    """Raised when a cross-check needs black-node data that is not embedded."""


@dataclass(frozen=True)
class SpaceLabel:
    series: str
    n: int | None = None
    p: int | None = None
    q: int | None = None
    kind: RootKind | None = None

    def __str__(self) -> str:
        if self.series == "GROUP":
            return f"GROUP:{self.kind}"
        if self.n is not None:
            return f"{self.series}:n={self.n}"
        if self.p is not None:
            return f"{self.series}:p={self.p},q={self.q}"
        return self.series


@dataclass(frozen=True)
class SpaceEntry:
    label: SpaceLabel
    name: str                     # manifold, e.g. "SU(4)/SO(4)" or "G_{2,5}(R)"
    space_type: str               # "I" or "II"
    ambient: RootKind             # buildable ambient kind (aliased if needed)
    ambient_name: str             # nominal ambient label
    restricted: RootKind          # buildable restricted kind
    restricted_name: str          # nominal restricted label
    restriction_factor: Fraction
    psi_sq_killing: Fraction      # squared Killing length of the highest restricted root
    satake_black_nodes: frozenset[int] | None   # 1-based simple-root indices
    canonical_epsilon: Fraction | None = None


def parse_label(text: str) -> SpaceLabel:
    """Parse "AI:n=4", "AIII:p=2,q=5", "G", "GROUP:e8"."""
    head, _, tail = text.strip().partition(":")
    series = head.strip().upper()
    if series not in SERIES:
        raise InvalidParams(f"unknown series {head.strip()!r}")
    if series == "GROUP":
        if not tail:
            raise InvalidParams("GROUP needs a root-system kind, e.g. GROUP:e8")
        try:
            return SpaceLabel(series="GROUP", kind=parse_kind(tail))
        except InvalidRank as e:
            raise InvalidParams(str(e)) from e
    pairs: dict[str, int] = {}
    if tail:
        for item in tail.split(","):
            key, _, value = item.partition("=")
            key = key.strip().lower()
            if key not in ("n", "p", "q") or not value.strip().lstrip("-").isdigit():
                raise InvalidParams(f"bad parameter {item!r}")
            pairs[key] = int(value)
    needs = {"AI": {"n"}, "AII": {"n"}, "CI": {"n"}, "DIII": {"n"},
             "AIII": {"p", "q"}, "CII": {"p", "q"}, "BDI": {"p", "q"}}
    want = needs.get(series, set())
    if set(pairs) != want:
        raise InvalidParams(f"{series} takes parameters {sorted(want)}, got {sorted(pairs)}")
    return SpaceLabel(series=series, n=pairs.get("n"), p=pairs.get("p"), q=pairs.get("q"))


# Fixed rows: ambient, restricted, factor, Satake black nodes, manifold name.
_EXCEPTIONAL_ROWS: dict[str, tuple[str, str, Fraction, frozenset[int] | None, str]] = {
    "EI":    ("e6", "e6", ONE, frozenset(), "(e6, sp(4))"),
    "EII":   ("e6", "f4", ONE, frozenset(), "(e6, su(6)+su(2))"),
    "EIII":  ("e6", "bc2", ONE, frozenset({2, 3, 4}), "(e6, so(10)+R)"),
    "EIV":   ("e6", "a2", HALF, frozenset({2, 3, 4, 6}), "(e6, f4)"),
    "EV":    ("e7", "e7", ONE, frozenset(), "(e7, su(8))"),
    "EVI":   ("e7", "f4", ONE, frozenset({1, 3, 7}), "(e7, so(12)+su(2))"),
    "EVII":  ("e7", "c3", ONE, frozenset({3, 4, 5, 7}), "(e7, e6+R)"),
    "EVIII": ("e8", "e8", ONE, frozenset(), "(e8, so(16))"),
    "EIX":   ("e8", "f4", ONE, frozenset({4, 5, 6, 8}), "(e8, e7+su(2))"),
    "FI":    ("f4", "f4", ONE, frozenset(), "(f4, sp(3)+su(2))"),
    "FII":   ("f4", "bc1", HALF, frozenset({1, 2, 3}), "(f4, so(9))"),
    "G":     ("g2", "g2", ONE, frozenset(), "(g2, su(2)+su(2))"),
}

_GROUP_NAMES = {"a": lambda l: f"SU({l + 1})", "b": lambda l: f"Spin({2 * l + 1})",
                "c": lambda l: f"Sp({l})", "d": lambda l: f"Spin({2 * l})",
                "e": lambda l: f"E{l}", "f": lambda l: "F4", "g": lambda l: "G2"}


def _nominal_to_kind(name: str) -> RootKind:
    """Parse a nominal label like "c2" and collapse rank coincidences."""
    s = name.strip().lower()
    i = 0
    while i < len(s) and s[i].isalpha():
        i += 1
    fam, rank = s[:i], int(s[i:])
    if fam == "bc":
        return RootKind("bc", rank)
    return canonical_kind(fam, rank)


def _entry(label, name, space_type, ambient_name, restricted_name, factor,
           satake, canonical_eps=None) -> SpaceEntry:
    ambient = _nominal_to_kind(ambient_name)
    restricted = _nominal_to_kind(restricted_name)
    psi = factor * delta_sq_formula(ambient)
    return SpaceEntry(label=label, name=name, space_type=space_type,
                      ambient=ambient, ambient_name=ambient_name,
                      restricted=restricted, restricted_name=restricted_name,
                      restriction_factor=factor, psi_sq_killing=psi,
                      satake_black_nodes=satake, canonical_epsilon=canonical_eps)


def resolve(label: SpaceLabel | str) -> SpaceEntry:
    """Resolve a space label into its catalog entry."""
    if isinstance(label, str):
        label = parse_label(label)
    s = label.series

    if s == "GROUP":
        kind = label.kind
        if kind is None:
            raise InvalidParams("GROUP needs a root-system kind")
        if not kind.is_reduced:
            raise InvalidParams("group manifolds have reduced root systems; bc is not valid")
        return SpaceEntry(label=label, name=_GROUP_NAMES[kind.family](kind.rank),
                          space_type="II", ambient=kind, ambient_name=str(kind),
                          restricted=kind, restricted_name=str(kind),
                          restriction_factor=HALF,
                          psi_sq_killing=HALF * delta_sq_formula(kind),
                          satake_black_nodes=None)

    if s in _EXCEPTIONAL_ROWS:
        amb, restr, factor, satake, name = _EXCEPTIONAL_ROWS[s]
        return _entry(label, name, "I", amb, restr, factor, satake)

    if s == "AI":
        n = _need(label.n, "n", "AI")
        if n < 2:
            raise InvalidParams("AI requires n >= 2")
        return _entry(label, f"SU({n})/SO({n})", "I", f"a{n - 1}", f"a{n - 1}",
                      ONE, frozenset())

    if s == "AII":
        n = _need(label.n, "n", "AII")
        if n < 2:
            raise InvalidParams("AII requires n >= 2")
        satake = frozenset(range(1, 2 * n, 2))
        return _entry(label, f"SU({2 * n})/Sp({n})", "I", f"a{2 * n - 1}",
                      f"a{n - 1}", HALF, satake)

    if s == "AIII":
        p, q = _need_pq(label, "AIII")
        restr = "bc1" if p == 1 else (f"c{p}" if p == q else f"bc{p}")
        satake = frozenset(range(p + 1, q))
        return _entry(label, f"G_{{{p},{q}}}(C)", "I", f"a{p + q - 1}", restr,
                      ONE, satake)

    if s == "CI":
        n = _need(label.n, "n", "CI")
        if n < 1:
            raise InvalidParams("CI requires n >= 1")
        return _entry(label, f"Sp({n})/U({n})", "I", f"c{n}", f"c{n}",
                      ONE, frozenset())

    if s == "CII":
        p, q = _need_pq(label, "CII")
        restr = "bc1" if p == 1 else (f"c{p}" if p == q else f"bc{p}")
        satake = None
        if p + q >= 3:
            satake = frozenset(range(1, 2 * p, 2)) | frozenset(range(2 * p + 1, p + q + 1))
        return _entry(label, f"G_{{{p},{q}}}(H)", "I", f"c{p + q}", restr,
                      HALF, satake)

    if s == "BDI":
        return _resolve_bdi(label)

    if s == "DIII":
        n = _need(label.n, "n", "DIII")
        if n < 4:
            raise InvalidParams("DIII requires n >= 4")
        if n % 2 == 0:
            restr = f"c{n // 2}"
            satake = frozenset(range(1, n, 2))
        else:
            restr = f"bc{(n - 1) // 2}"
            satake = frozenset(range(1, n - 1, 2))
        return _entry(label, f"SO({2 * n})/U({n})", "I", f"d{n}", restr,
                      ONE, satake)

    raise InvalidParams(f"unknown series {s!r}")  # pragma: no cover


def _need(value, key, series) -> int:
    if value is None:
        raise InvalidParams(f"{series} requires parameter {key}")
    return value


def _need_pq(label, series) -> tuple[int, int]:
    p = _need(label.p, "p", series)
    q = _need(label.q, "q", series)
    if not 1 <= p <= q:
        raise InvalidParams(f"{series} requires 1 <= p <= q, got p={p}, q={q}")
    return p, q


def _resolve_bdi(label: SpaceLabel) -> SpaceEntry:
    p, q = _need_pq(label, "BDI")
    if p == 1 and q < 2:
        raise InvalidParams("BDI with p=1 requires q >= 2")
    if p == q and p < 4:
        raise InvalidParams("BDI with p=q requires p >= 4 "
                            "(p=q=2 splits as a product; p=q=3 is AI:n=4)")
    total = p + q
    if total % 2 == 1:
        m = (total - 1) // 2
        ambient_name = f"b{m}"
        black = frozenset(range(p + 1, m + 1)) if p < m else frozenset()
        aliased = m < 2
    else:
        m = total // 2
        ambient_name = f"d{m}"
        black = frozenset(range(p + 1, m + 1)) if p <= m - 2 else frozenset()
        aliased = m < 4
    satake = black if (not black or not aliased) else None

    if p == 1:
        restr = "a1"
        factor = HALF if q >= 3 else ONE
    elif p < q:
        restr = f"b{p}"
        factor = ONE
    else:
        restr = f"d{p}"
        factor = ONE

    if ambient_name == "d2":
        # so(4) splits into two a1 ideals swapped by the involution; the
        # halving factor carries the whole reduction, so the buildable
        # ambient is a single a1 factor, and the black-node criterion
        # (which presumes a simple ambient) does not apply.
        ambient = RootKind("a", 1)
        satake = None
    else:
        ambient = _nominal_to_kind(ambient_name)

    psi = factor * delta_sq_formula(ambient)
    return SpaceEntry(label=label, name=f"G_{{{p},{q}}}(R)", space_type="I",
                      ambient=ambient, ambient_name=ambient_name,
                      restricted=_nominal_to_kind(restr), restricted_name=restr,
                      restriction_factor=factor, psi_sq_killing=psi,
                      satake_black_nodes=satake,
                      canonical_epsilon=Fraction(1, 2 * (p + q - 2)))


def restriction_factor_crosscheck(entry: SpaceEntry) -> bool:
    """Check the stored factor against the black-node criterion.

    The factor is 1 exactly when every black node of the Satake diagram is
    orthogonal to the highest ambient root; returns whether the embedded
    data agrees with the stored factor.
    """
    if entry.satake_black_nodes is None:
        raise MissingSatakeData(f"no black-node data for {entry.label}")
    rs = build(entry.ambient)
    perp = {i + 1 for i in perp_simple_indices(rs)}
    return (entry.satake_black_nodes <= perp) == (entry.restriction_factor == 1)


def enumerate_table(which: str, param_bound: int) -> list[SpaceEntry]:
    """All rows of classification table "4.1" or "4.2" with parameters <= bound."""
    if param_bound < 1:
        raise InvalidParams("param_bound must be >= 1")
    if which not in ("4.1", "4.2"):
        raise InvalidParams(f"unknown table {which!r}; use 4.1 or 4.2")
    out: list[SpaceEntry] = []
    if which == "4.2":
        for fam, lo in (("a", 1), ("b", 2), ("c", 3), ("d", 4)):
            for l in range(lo, param_bound + 1):
                out.append(resolve(SpaceLabel("GROUP", kind=RootKind(fam, l))))
        for fam, l in (("e", 6), ("e", 7), ("e", 8), ("f", 4), ("g", 2)):
            out.append(resolve(SpaceLabel("GROUP", kind=RootKind(fam, l))))
        return out

    for n in range(2, param_bound + 1):
        out.append(resolve(SpaceLabel("AI", n=n)))
    for n in range(2, param_bound + 1):
        out.append(resolve(SpaceLabel("AII", n=n)))
    for p in range(1, param_bound + 1):
        for q in range(p, param_bound + 1):
            out.append(resolve(SpaceLabel("AIII", p=p, q=q)))
    for n in range(1, param_bound + 1):
        out.append(resolve(SpaceLabel("CI", n=n)))
    for p in range(1, param_bound + 1):
        for q in range(p, param_bound + 1):
            out.append(resolve(SpaceLabel("CII", p=p, q=q)))
    for p in range(1, param_bound + 1):
        for q in range(p, param_bound + 1):
            if (p == 1 and q >= 2) or (2 <= p < q) or (4 <= p == q):
                out.append(resolve(SpaceLabel("BDI", p=p, q=q)))
    for n in range(4, param_bound + 1):
        out.append(resolve(SpaceLabel("DIII", n=n)))
    for series in ("EI", "EII", "EIII", "EIV", "EV", "EVI", "EVII", "EVIII",
                   "EIX", "FI", "FII", "G"):
        out.append(resolve(SpaceLabel(series)))
    return out


def to_json_dict(entry: SpaceEntry) -> dict:
    return {
        "label": str(entry.label),
        "name": entry.name,
        "type": entry.space_type,
        "ambient": entry.ambient_name,
        "ambient_built": str(entry.ambient),
        "restricted": entry.restricted_name,
        "restricted_built": str(entry.restricted),
        "restriction_factor": format_rational(entry.restriction_factor),
        "psi_sq_killing": format_rational(entry.psi_sq_killing),
        "satake_black_nodes": (sorted(entry.satake_black_nodes)
                               if entry.satake_black_nodes is not None else None),
        "canonical_epsilon": (format_rational(entry.canonical_epsilon)
                              if entry.canonical_epsilon is not None else None),
    }

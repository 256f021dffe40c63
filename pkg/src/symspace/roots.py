"""Irreducible root systems realized in simple-root coordinates.

Each family (a, b, c, d, e6, e7, e8, f4, g2 and the non-reduced bc) is
built from three pieces of data: its Cartan matrix, the relative squared
lengths of its simple roots, and the coefficients of the highest root.
Roots are stored as integer coefficient vectors over the simple roots and
generated by closing the simple roots under all simple reflections; all
inner products go through the Gram matrix, which is normalized so that
the highest root has squared length 1.

Node numbering runs along the chain first; for d, e6, e7, e8 the node
hanging off the chain comes last (it attaches to the chain node with the
largest highest-root coefficient).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import DimensionMismatch, Matrix, format_rational

MAX_ROOTS = 500

_EXCEPTIONAL_RANKS = {"e": (6, 7, 8), "f": (4,), "g": (2,)}
_MIN_RANK = {"a": 1, "b": 2, "c": 3, "d": 4, "bc": 1}


class InvalidRank(ValueError):
    """Raised for a family/rank combination outside the classification."""


class NonTerminating(RuntimeError):
    """Raised when reflection closure exceeds MAX_ROOTS (corrupt Cartan data)."""


@dataclass(frozen=True)
class RootKind:
    """A root-system type: family letter(s) plus rank."""

    family: str
    rank: int

    def __post_init__(self):
        fam = self.family.lower()
        object.__setattr__(self, "family", fam)
        if fam in _MIN_RANK:
            if self.rank < _MIN_RANK[fam]:
                raise InvalidRank(f"{fam} requires rank >= {_MIN_RANK[fam]}, got {self.rank}")
        elif fam in _EXCEPTIONAL_RANKS:
            if self.rank not in _EXCEPTIONAL_RANKS[fam]:
                raise InvalidRank(f"no system {fam}{self.rank}")
        else:
            raise InvalidRank(f"unknown family {self.family!r}")

    @property
    def is_reduced(self) -> bool:
        return self.family != "bc"

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def parse_kind(text: str) -> RootKind:
    """Parse "a3", "bc2", "E8" (case-insensitive) into a RootKind."""
    s = text.strip().lower()
    i = 0
    while i < len(s) and s[i].isalpha():
        i += 1
    fam, digits = s[:i], s[i:]
    if not fam or not digits.isdigit():
        raise InvalidRank(f"cannot parse root-system kind {text!r}")
    return RootKind(fam, int(digits))


def root_count(kind: RootKind) -> int:
    """Classical root count per family."""
    l = kind.rank
    if kind.family == "a":
        return l * (l + 1)
    if kind.family in ("b", "c"):
        return 2 * l * l
    if kind.family == "d":
        return 2 * l * (l - 1)
    if kind.family == "bc":
        return 2 * l * l + 2 * l
    if kind.family == "e":
        return {6: 72, 7: 126, 8: 240}[l]
    return 48 if kind.family == "f" else 12


def _chain_cartan(l: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(l)] for i in range(l)]
    for i in range(l - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    return a


def cartan_matrix(kind: RootKind) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix A[i][j] = 2(a_i, a_j)/(a_j, a_j); for bc, of the indivisible set."""
    fam, l = kind.family, kind.rank
    if fam == "a" or (fam == "bc" and l == 1):
        a = _chain_cartan(l)
    elif fam in ("b", "bc"):
        a = _chain_cartan(l)
        a[l - 2][l - 1] = -2          # short last node
    elif fam == "c":
        a = _chain_cartan(l)
        a[l - 1][l - 2] = -2          # long last node
    elif fam == "d":
        a = _chain_cartan(l - 1)
        for row in a:
            row.append(0)
        a.append([0] * l)
        a[l - 1][l - 1] = 2
        a[l - 3][l - 1] = a[l - 1][l - 3] = -1
    elif fam == "e":
        a = _chain_cartan(l - 1)
        for row in a:
            row.append(0)
        a.append([0] * l)
        a[l - 1][l - 1] = 2
        branch = {6: 2, 7: 3, 8: 4}[l]  # chain node carrying the off-chain edge
        a[branch][l - 1] = a[l - 1][branch] = -1
    elif fam == "f":
        a = _chain_cartan(4)
        a[1][2] = -2                  # nodes 3,4 short
    elif fam == "g":
        a = [[2, -3], [-1, 2]]
    else:  # pragma: no cover
        raise InvalidRank(fam)
    return tuple(tuple(r) for r in a)


def _relative_lengths(kind: RootKind) -> tuple[Fraction, ...]:
    """Squared simple-root lengths up to overall scale."""
    fam, l = kind.family, kind.rank
    two = Fraction(2)
    if fam in ("a", "d", "e"):
        return (two,) * l
    if fam in ("b", "bc"):
        if l == 1:
            return (two,)
        return (two,) * (l - 1) + (Fraction(1),)
    if fam == "c":
        return (Fraction(1),) * (l - 1) + (two,)
    if fam == "f":
        return (two, two, Fraction(1), Fraction(1))
    if fam == "g":
        return (Fraction(3), Fraction(1))
    raise InvalidRank(fam)  # pragma: no cover


def highest_root_coeffs(kind: RootKind) -> tuple[int, ...]:
    """Coefficients of the highest root over the simple roots."""
    fam, l = kind.family, kind.rank
    if fam == "a":
        return (1,) * l
    if fam == "b":
        return (1,) + (2,) * (l - 1)
    if fam == "c":
        return (2,) * (l - 1) + (1,)
    if fam == "d":
        return (1,) + (2,) * (l - 3) + (1, 1)
    if fam == "e":
        return {6: (1, 2, 3, 2, 1, 2),
                7: (1, 2, 3, 4, 3, 2, 2),
                8: (2, 3, 4, 5, 6, 4, 2, 3)}[l]
    if fam == "f":
        return (2, 3, 4, 2)
    if fam == "g":
        return (2, 3)
    if fam == "bc":
        return (2,) * l
    raise InvalidRank(fam)  # pragma: no cover


def generate_roots(cartan) -> frozenset[tuple[int, ...]]:
    """Close the simple roots under all simple reflections.

    Coefficient arithmetic is pure integer: s_j sends a coefficient vector
    b to b - (sum_i b_i A[i][j]) e_j.  Negatives arise automatically since
    s_i(a_i) = -a_i.  Raises NonTerminating past MAX_ROOTS.
    """
    l = len(cartan)
    simples = [tuple(1 if i == j else 0 for j in range(l)) for i in range(l)]
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for r in frontier:
            for j in range(l):
                c = sum(r[i] * cartan[i][j] for i in range(l))
                if c == 0:
                    continue
                img = list(r)
                img[j] -= c
                t = tuple(img)
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
            if len(seen) > MAX_ROOTS:
                raise NonTerminating(f"closure exceeded {MAX_ROOTS} roots")
        frontier = nxt
    return frozenset(seen)


@dataclass(frozen=True)
class RootSystem:
    """A realized root system with highest-root-normalized Gram matrix."""

    kind: RootKind
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    gram: Matrix
    roots: frozenset[tuple[int, ...]]
    indivisible_roots: frozenset[tuple[int, ...]]
    highest_root: tuple[int, ...]

    def root_norm_sq(self, r) -> Fraction:
        v = tuple(Fraction(x) for x in r)
        return dot_gram(self.gram, v, v)


def dot_gram(gram: Matrix, u, v) -> Fraction:
    u = tuple(Fraction(x) for x in u)
    v = tuple(Fraction(x) for x in v)
    if len(u) != gram.rows or len(v) != gram.cols:
        raise DimensionMismatch("vector length does not match Gram rank")
    w = gram.mul_vec(v)
    return sum((a * b for a, b in zip(u, w)), Fraction(0))


def inner(rs: RootSystem, u, v) -> Fraction:
    """Inner product of coefficient vectors through the stored Gram matrix."""
    return dot_gram(rs.gram, u, v)


def build(kind: RootKind | str) -> RootSystem:
    """Construct the full root system of the given kind."""
    if isinstance(kind, str):
        kind = parse_kind(kind)
    l = kind.rank
    cartan = cartan_matrix(kind)
    lengths = _relative_lengths(kind)
    # Omega_ij = A[j][i] * (a_i, a_i) / 2, then rescale so (psi, psi) = 1.
    raw = [[cartan[j][i] * lengths[i] / 2 for j in range(l)] for i in range(l)]
    psi = highest_root_coeffs(kind)
    norm = sum(psi[i] * raw[i][j] * psi[j] for i in range(l) for j in range(l))
    gram = Matrix.from_rows(raw).scaled(Fraction(1, 1) / norm)

    indivisible = generate_roots(cartan)
    if kind.family == "bc":
        short_sq = min(dot_gram(gram, r, r) for r in indivisible)
        doubles = {tuple(2 * x for x in r) for r in indivisible
                   if dot_gram(gram, r, r) == short_sq}
        roots = frozenset(indivisible | doubles)
    else:
        roots = indivisible

    if len(roots) != root_count(kind):
        raise RuntimeError(
            f"{kind}: generated {len(roots)} roots, expected {root_count(kind)}")

    best = max(roots, key=lambda r: (sum(r), r))
    if best != psi:
        raise RuntimeError(f"{kind}: highest root {best} != expected {psi}")
    return RootSystem(kind=kind, rank=l, cartan=cartan, gram=gram,
                      roots=roots, indivisible_roots=indivisible,
                      highest_root=psi)


def highest_root(rs: RootSystem) -> tuple[int, ...]:
    """The unique root maximal in the coefficient-sum order."""
    return max(rs.roots, key=lambda r: (sum(r), r))


def to_json_dict(rs: RootSystem) -> dict:
    return {
        "kind": str(rs.kind),
        "family": rs.kind.family,
        "rank": rs.rank,
        "cartan_matrix": [list(row) for row in rs.cartan],
        "gram": rs.gram.to_json(),
        "root_count": len(rs.roots),
        "indivisible_count": len(rs.indivisible_roots),
        "highest_root": list(rs.highest_root),
        "psi_sq": format_rational(dot_gram(rs.gram, rs.highest_root, rs.highest_root)),
    }

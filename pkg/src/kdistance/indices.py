"""Edge partitions, k-distance degree indices and index polynomials."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping

import numpy as np

from .errors import ProfileMismatch, UnknownKind
from .graph import KDegreeProfile, MolecularGraph, k_degree_profile


class IndexKind(enum.Enum):
    LM1 = "lm1"
    LM2 = "lm2"
    HLM1 = "hlm1"
    HLM2 = "hlm2"
    LSO = "lso"
    LF = "lf"
    HLF = "hlf"
    LY = "ly"
    LYCO = "lyco"
    M1 = "m1"
    M2 = "m2"
    F = "f"
    HF = "hf"
    Y = "y"
    YCO = "yco"
    SO = "so"
    HM2 = "hm2"
    HM2CO = "hm2co"

    @property
    def token(self) -> str:
        return self.value

    @property
    def is_classical(self) -> bool:
        return self in CLASSICAL_KINDS

    @property
    def is_real(self) -> bool:
        return self in (IndexKind.LSO, IndexKind.SO)

    @classmethod
    def parse(cls, token: "str | IndexKind") -> "IndexKind":
        if isinstance(token, IndexKind):
            return token
        try:
            return cls(token.strip().lower())
        except ValueError:
            raise UnknownKind(f"unknown index {token!r}; expected one of {', '.join(k.value for k in cls)}") from None


LEAP_KINDS = (
    IndexKind.LM1, IndexKind.LM2, IndexKind.HLM1, IndexKind.HLM2, IndexKind.LSO,
    IndexKind.LF, IndexKind.HLF, IndexKind.LY, IndexKind.LYCO,
)
CLASSICAL_KINDS = (
    IndexKind.M1, IndexKind.M2, IndexKind.F, IndexKind.HF, IndexKind.Y,
    IndexKind.YCO, IndexKind.SO, IndexKind.HM2, IndexKind.HM2CO,
)
POLYNOMIAL_KINDS = (IndexKind.LM1, IndexKind.LM2, IndexKind.HLM1, IndexKind.HLM2)

# Edge functors on the endpoint degrees.  Integer-valued ones take Python ints
# so sums stay exact at any size.
EDGE_FUNCTORS: dict[IndexKind, Callable[[int, int], int | float]] = {
    IndexKind.LM1: lambda a, b: a + b,
    IndexKind.LM2: lambda a, b: a * b,
    IndexKind.HLM1: lambda a, b: (a + b) ** 2,
    IndexKind.HLM2: lambda a, b: (a * b) ** 2,
    IndexKind.LSO: lambda a, b: math.sqrt(a + b),
    IndexKind.LF: lambda a, b: a * a + b * b,
    IndexKind.HLF: lambda a, b: (a * a + b * b) ** 2,
    IndexKind.LY: lambda a, b: a ** 3 + b ** 3,
    IndexKind.M1: lambda a, b: a + b,
    IndexKind.M2: lambda a, b: a * b,
    IndexKind.F: lambda a, b: a * a + b * b,
    IndexKind.HF: lambda a, b: (a * a + b * b) ** 2,
    IndexKind.Y: lambda a, b: a ** 3 + b ** 3,
    IndexKind.SO: lambda a, b: math.sqrt(a * a + b * b),
    IndexKind.HM2: lambda a, b: (a * b) ** 2,
}

_POLY_EXPONENT = {
    IndexKind.LM1: lambda a, b: a + b,
    IndexKind.LM2: lambda a, b: a * b,
    IndexKind.HLM1: lambda a, b: (a + b) ** 2,
    IndexKind.HLM2: lambda a, b: (a * b) ** 2,
}


@dataclass(frozen=True)
class EdgePartition:
    """Edge counts keyed by the unordered pair of endpoint k-degrees, ``a <= b``."""

    k: int
    classes: Mapping[tuple[int, int], int]

    @property
    def total(self) -> int:
        return sum(self.classes.values())

    def sorted_items(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self.classes.items())

    def diff(self, other: "EdgePartition") -> dict[tuple[int, int], int]:
        """Per-class ``self - other``; classes absent on one side count as 0."""
        keys = set(self.classes) | set(other.classes)
        out = {}
        for key in sorted(keys):
            delta = self.classes.get(key, 0) - other.classes.get(key, 0)
            if delta:
                out[key] = delta
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgePartition):
            return NotImplemented
        return dict(self.classes) == dict(other.classes)

    def __str__(self) -> str:
        return ";".join(f"{a}-{b}:{f}" for (a, b), f in self.sorted_items())


@dataclass(frozen=True)
class IndexPolynomial:
    """Sparse polynomial with non-negative integer exponents; zero terms are dropped."""

    terms: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(e): int(c) for e, c in self.terms.items() if c}
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def __call__(self, x) -> Fraction:
        return poly_eval(self, x)

    def derivative_at_one(self) -> int:
        return sum(e * c for e, c in self.terms.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IndexPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}x^{e}" for e, c in self.terms.items())


def poly_eval(poly: IndexPolynomial, x) -> Fraction:
    """Exact value of ``sum c * x**e`` for rational ``x``."""
    x = Fraction(x)
    return sum((c * x ** e for e, c in poly.terms.items()), Fraction(0))


def _check_profile(g: MolecularGraph, profile: KDegreeProfile) -> None:
    if len(profile) != g.vertex_count:
        raise ProfileMismatch(f"profile has {len(profile)} entries but the graph has {g.vertex_count} vertices")


def _endpoint_degrees(g: MolecularGraph, degrees: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    e = g.edges
    a = degrees[e[:, 0]]
    b = degrees[e[:, 1]]
    return np.minimum(a, b), np.maximum(a, b)


def edge_partition(g: MolecularGraph, profile: KDegreeProfile) -> EdgePartition:
    _check_profile(g, profile)
    if g.edge_count == 0:
        return EdgePartition(profile.k, {})
    lo, hi = _endpoint_degrees(g, profile.degrees)
    base = int(hi.max()) + 1
    codes, counts = np.unique(lo * base + hi, return_counts=True)
    classes = {(int(c) // base, int(c) % base): int(f) for c, f in zip(codes, counts)}
    return EdgePartition(profile.k, classes)


def _ordinary(g: MolecularGraph, profile: KDegreeProfile) -> KDegreeProfile:
    return profile if profile.k == 1 else k_degree_profile(g, 1)


def _hm2_coindex(g: MolecularGraph, degrees: np.ndarray) -> int:
    # Sum over all unordered distinct pairs, minus the adjacent ones.
    sq = [int(d) ** 2 for d in degrees.tolist()]
    s1 = sum(sq)
    s2 = sum(v * v for v in sq)
    all_pairs = (s1 * s1 - s2) // 2
    adjacent = sum(sq[u] * sq[v] for u, v in g.edges.tolist())
    return all_pairs - adjacent


def partition_index(partition: EdgePartition, kind: IndexKind | str) -> int | float:
    """Evaluate an edge-sum index class by class: ``sum freq * f(a, b)``."""
    kind = IndexKind.parse(kind)
    f = EDGE_FUNCTORS.get(kind)
    if f is None:
        raise UnknownKind(f"{kind.token} is not an edge-sum index")
    if kind.is_real:
        return math.fsum(freq * f(a, b) for (a, b), freq in partition.sorted_items())
    return sum(freq * f(a, b) for (a, b), freq in partition.classes.items())


def edge_sum_index(g: MolecularGraph, profile: KDegreeProfile, kind: IndexKind | str) -> int | float:
    """Direct per-edge evaluation in canonical edge order (no grouping)."""
    kind = IndexKind.parse(kind)
    _check_profile(g, profile)
    f = EDGE_FUNCTORS.get(kind)
    if f is None:
        raise UnknownKind(f"{kind.token} is not an edge-sum index")
    d = profile.degrees.tolist()
    values = (f(d[u], d[v]) for u, v in g.edges.tolist())
    return math.fsum(values) if kind.is_real else sum(values)


def compute_index(g: MolecularGraph, profile: KDegreeProfile, kind: IndexKind | str) -> int | float:
    """Value of one index; exact ``int`` for every kind except LSO and SO.

    Leap kinds use the supplied profile.  Classical kinds (m1, f, so, ...) use
    ordinary degrees, i.e. the k=1 profile, whatever ``profile.k`` is.
    LYCO and YCO use ``(n - 1) * second-power sum - third-power sum`` with
    ``n`` the vertex count.
    """
    kind = IndexKind.parse(kind)
    _check_profile(g, profile)
    if kind.is_classical:
        profile = _ordinary(g, profile)

    if kind is IndexKind.LYCO:
        return (g.vertex_count - 1) * compute_index(g, profile, IndexKind.LF) - compute_index(g, profile, IndexKind.LY)
    if kind is IndexKind.YCO:
        return (g.vertex_count - 1) * compute_index(g, profile, IndexKind.F) - compute_index(g, profile, IndexKind.Y)
    if kind is IndexKind.HM2CO:
        return _hm2_coindex(g, profile.degrees)

    if kind.is_real:
        # Fixed canonical edge order; fsum makes the result independent of blocking.
        lo, hi = _endpoint_degrees(g, profile.degrees)
        if kind is IndexKind.LSO:
            vals = np.sqrt((lo + hi).astype(np.float64))
        else:
            vals = np.sqrt((lo * lo + hi * hi).astype(np.float64))
        return math.fsum(vals.tolist())
    return partition_index(edge_partition(g, profile), kind)


def compute_indices(
    g: MolecularGraph, profile: KDegreeProfile, kinds: Iterable[IndexKind | str]
) -> dict[IndexKind, int | float]:
    return {IndexKind.parse(kd): compute_index(g, profile, kd) for kd in kinds}


def partition_polynomial(partition: EdgePartition, kind: IndexKind | str) -> IndexPolynomial:
    kind = IndexKind.parse(kind)
    if kind not in _POLY_EXPONENT:
        raise UnknownKind(f"no polynomial defined for {kind.token}")
    expo = _POLY_EXPONENT[kind]
    terms: dict[int, int] = {}
    for (a, b), freq in partition.classes.items():
        e = expo(a, b)
        terms[e] = terms.get(e, 0) + freq
    return IndexPolynomial(terms)


def compute_polynomial(g: MolecularGraph, profile: KDegreeProfile, kind: IndexKind | str) -> IndexPolynomial:
    """Generating polynomial: one ``x**w(e)`` per edge, ``w`` the kind's edge functor."""
    return partition_polynomial(edge_partition(g, profile), kind)

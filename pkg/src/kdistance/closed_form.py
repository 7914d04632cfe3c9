"""Published closed-form expressions for the zigzag and rhombic families.

Everything here is evaluated exactly as printed, including the expressions
that disagree with the BFS computation; :mod:`kdistance.verify` does the
judging.  Square-root sums are kept symbolic in :class:`RadicalSum`.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Mapping

from .errors import InvalidParameter, UnknownKind
from .indices import EdgePartition, IndexKind, IndexPolynomial

RADICAL_BASIS = (1, 2, 3, 5, 6, 7, 10)


class Family(enum.Enum):
    ZIGZAG = "zigzag"
    RHOMBIC = "rhombic"

    @classmethod
    def parse(cls, token: "str | Family") -> "Family":
        if isinstance(token, Family):
            return token
        try:
            return cls(token.strip().lower())
        except ValueError:
            raise InvalidParameter(f"unknown family {token!r}; expected zigzag or rhombic") from None


class RadicalSum:
    """Exact value ``sum c_d * sqrt(d)`` with rational ``c_d`` and squarefree ``d``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, Fraction | int] | None = None):
        clean: dict[int, Fraction] = {}
        for d, c in (coeffs or {}).items():
            if d not in RADICAL_BASIS:
                raise ValueError(f"sqrt({d}) is outside the radical basis {RADICAL_BASIS}")
            c = Fraction(c)
            if c:
                clean[d] = c
        self.coeffs = dict(sorted(clean.items()))

    @classmethod
    def sqrt(cls, x: int, coeff: Fraction | int = 1) -> "RadicalSum":
        """``coeff * sqrt(x)`` reduced to the basis; ``x`` must be a basis element times a square."""
        for d in RADICAL_BASIS:
            q, rem = divmod(x, d)
            if rem == 0 and math.isqrt(q) ** 2 == q:
                return cls({d: Fraction(coeff) * math.isqrt(q)})
        raise ValueError(f"sqrt({x}) does not reduce to the radical basis")

    def __add__(self, other: "RadicalSum | int | Fraction") -> "RadicalSum":
        if not isinstance(other, RadicalSum):
            other = RadicalSum({1: other})
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, Fraction(0)) + c
        return RadicalSum(out)

    __radd__ = __add__

    def __neg__(self) -> "RadicalSum":
        return RadicalSum({d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, RadicalSum) else -Fraction(other))

    def __mul__(self, k: int | Fraction) -> "RadicalSum":
        return RadicalSum({d: c * k for d, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __float__(self) -> float:
        return math.fsum(float(c) * math.sqrt(d) for d, c in self.coeffs.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RadicalSum):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self.coeffs.items()))

    def __repr__(self) -> str:
        parts = [f"{c}" if d == 1 else f"{c}*sqrt({d})" for d, c in self.coeffs.items()]
        return "RadicalSum(" + " + ".join(parts or ["0"]) + ")"


S = RadicalSum.sqrt

CLOSED_KINDS = (
    IndexKind.LM1, IndexKind.LM2, IndexKind.HLM1, IndexKind.HLM2, IndexKind.LSO,
    IndexKind.HLF, IndexKind.LY, IndexKind.LYCO, IndexKind.LF,
)


def _check(p) -> int:
    if isinstance(p, bool) or int(p) != p or p < 2:
        raise InvalidParameter(f"closed forms are stated for integer p >= 2, got {p!r}")
    return int(p)


def _zigzag_index(p: int, kind: IndexKind):
    if kind is IndexKind.LSO:
        return 4 * (1 + S(5) + S(7)) + (p - 1) * (S(2, 8) + S(10, 3) + S(6, 2)) + 3 * p
    return {
        IndexKind.LM1: 83 * p - 18,
        IndexKind.LM2: 173 * p - 73,
        IndexKind.HLM1: 709 * p - 350,
        IndexKind.HLM2: 3337 * p - 2257,
        IndexKind.HLF: 14453 * p - 9468,
        IndexKind.LY: 1655 * p - 930,
        IndexKind.LF: 363 * p - 154,
        IndexKind.LYCO: -1292 * p * p + 2068 * p - 776,
    }[kind]


def _rhombic_index(p: int, kind: IndexKind):
    if kind is IndexKind.LSO:
        return (
            6 * p * p * S(3)
            + p * (S(2, 16) + S(10, 4) - S(3, 16))
            + 4 * (S(5) - S(10))
            + 2 * (S(6) + S(7, 4) + S(3, 5) - S(2, 16))
        )
    return {
        IndexKind.LM1: 36 * p * p + 8 * p - 20,
        IndexKind.LM2: 108 * p * p - 64 * p - 34,
        IndexKind.HLM1: 432 * p * p - 240 * p - 140,
        IndexKind.HLM2: 3888 * p * p - 6016 * p + 1538,
        IndexKind.HLF: 15552 * p * p - 22464 * p + 5044,
        IndexKind.LY: 1296 * p * p - 1312 * p - 32,
        IndexKind.LF: 216 * p * p - 112 * p - 72,
        IndexKind.LYCO: -1080 * p ** 3 + 2280 * p * p - 1160 * p - 40,
    }[kind]


def closed_index(family: Family | str, p: int, kind: IndexKind | str) -> int | RadicalSum:
    """Printed closed form of ``kind`` at ``p``.

    LSO comes back as a :class:`RadicalSum` (``float()`` it for a number).
    LYCO is the printed ``(p - 1)`` variant, not the ``(n - 1)`` definition
    used by :func:`kdistance.indices.compute_index`.
    """
    family = Family.parse(family)
    kind = IndexKind.parse(kind)
    p = _check(p)
    if kind not in CLOSED_KINDS:
        raise UnknownKind(f"no closed form for {kind.token}")
    if family is Family.ZIGZAG:
        return _zigzag_index(p, kind)
    return _rhombic_index(p, kind)


def _zigzag_poly(p: int, kind: IndexKind) -> dict[int, int]:
    q = p - 1
    return {
        IndexKind.LM1: {4: 2, 5: 4, 6: 2 * q, 7: 4, 8: 4 * q, 9: p, 10: 3 * q},
        IndexKind.LM2: {4: 2, 6: 4, 9: 2 * q, 12: 4, 15: 4 * q, 20: p, 25: 3 * q},
        IndexKind.HLM1: {16: 2, 25: 4, 49: 4, 64: 4 * q, 81: p, 100: 3 * q, 36: 2 * q},
        IndexKind.HLM2: {16: 2, 36: 4, 81: 2 * q, 144: 4, 225: 4 * q, 400: p, 625: 3 * q},
    }[kind]


def _rhombic_poly(p: int, kind: IndexKind) -> dict[int, int]:
    inner = 3 * p * p - 8 * p + 5
    return {
        IndexKind.LM1: {5: 4, 6: 2, 7: 8, 8: 8 * (p - 2), 10: 4 * (p - 1), 12: inner},
        IndexKind.LM2: {6: 4, 9: 2, 12: 8, 16: 8 * (p - 2), 24: 4 * (p - 1), 36: inner},
        IndexKind.HLM1: {25: 4, 36: 2, 49: 8, 64: 8 * (p - 2), 100: 4 * (p - 1), 144: inner},
        IndexKind.HLM2: {36: 4, 81: 2, 144: 8, 256: 8 * (p - 2), 576: 4 * (p - 1), 1296: inner},
    }[kind]


def closed_polynomial(family: Family | str, p: int, kind: IndexKind | str) -> IndexPolynomial:
    family = Family.parse(family)
    kind = IndexKind.parse(kind)
    p = _check(p)
    if kind not in (IndexKind.LM1, IndexKind.LM2, IndexKind.HLM1, IndexKind.HLM2):
        raise UnknownKind(f"no closed polynomial for {kind.token}")
    terms = _zigzag_poly(p, kind) if family is Family.ZIGZAG else _rhombic_poly(p, kind)
    return IndexPolynomial(terms)


def closed_partition(family: Family | str, p: int) -> EdgePartition:
    """Tabulated k=2 edge partition at ``p``; empty classes are omitted."""
    family = Family.parse(family)
    p = _check(p)
    if family is Family.ZIGZAG:
        classes = {(2, 2): 2, (2, 3): 4, (3, 3): 2 * (p - 1), (3, 4): 4, (3, 5): 4 * (p - 1), (4, 5): p, (5, 5): 3 * (p - 1)}
    else:
        classes = {
            (2, 3): 4, (3, 3): 2, (3, 4): 8, (4, 4): 8 * (p - 2), (4, 6): 4 * (p - 1),
            (6, 6): (p - 1) ** 2 + 2 * (p - 1) * (p - 2),
        }
    return EdgePartition(2, {key: f for key, f in classes.items() if f})


def vertex_count(family: Family | str, p: int) -> int:
    family = Family.parse(family)
    return 8 * p + 2 if family is Family.ZIGZAG else 2 * p * (p + 2)


def edge_count(family: Family | str, p: int) -> int:
    family = Family.parse(family)
    return 10 * p + 1 if family is Family.ZIGZAG else 3 * p * p + 4 * p - 1


def internal_vertex_count(family: Family | str, p: int) -> int:
    family = Family.parse(family)
    return 0 if family is Family.ZIGZAG else 2 * (p - 1) ** 2

"""Benzenoid systems built from hexagons on an axial lattice.

A hexagon at axial ``(q, r)`` has six neighbors at the offsets in
``AXIAL_DIRECTIONS`` (listed in cyclic order).  Each corner of a hexagon is
the meeting point of that hexagon and two mutually adjacent neighbors, so it
is keyed exactly by the integer sum of the three centers:
``3*(q, r) + d_i + d_{i+1}``.  Adjacent hexagons then share precisely two
corner keys and the edge between them, with no floating point involved.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import DisconnectedSystem, EmptySystem, InvalidParameter
from .graph import MolecularGraph, _from_canonical

AXIAL_DIRECTIONS: tuple[tuple[int, int], ...] = ((1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1))

_DIRS = np.array(AXIAL_DIRECTIONS, dtype=np.int64)
_CORNER_OFFSETS = _DIRS + np.roll(_DIRS, -1, axis=0)


class HexCoord(NamedTuple):
    q: int
    r: int

    def neighbors(self) -> list["HexCoord"]:
        return [HexCoord(self.q + dq, self.r + dr) for dq, dr in AXIAL_DIRECTIONS]


@dataclass(frozen=True)
class HexagonalSystem:
    hexes: frozenset[HexCoord]
    internal_vertex_count: int

    @property
    def h(self) -> int:
        return len(self.hexes)


def _as_coords(hexes: Iterable) -> list[HexCoord]:
    return [hx if isinstance(hx, HexCoord) else HexCoord(int(hx[0]), int(hx[1])) for hx in hexes]


def _check_connected(centers: np.ndarray) -> None:
    """``centers`` must be sorted lexicographically and duplicate-free."""
    h = len(centers)
    codes = _encode(centers)
    rows, cols = [], []
    for d in _DIRS[:3]:
        target = _encode_like(centers + d, centers)
        pos = np.searchsorted(codes, target)
        pos[pos == h] = 0
        hit = (codes[pos] == target) & _in_box(centers + d, centers)
        rows.append(np.nonzero(hit)[0])
        cols.append(pos[hit])
    r = np.concatenate(rows)
    c = np.concatenate(cols)
    adj = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(h, h))
    count, labels = connected_components(adj, directed=False)
    if count > 1:
        stray = int((labels != labels[0]).sum())
        raise DisconnectedSystem(f"{stray} of {h} hexagons are not connected to the rest")


def _encode(xy: np.ndarray) -> np.ndarray:
    # Order-preserving: sorting codes sorts points lexicographically by (x, y).
    return _encode_like(xy, xy)


def _encode_like(xy: np.ndarray, ref: np.ndarray) -> np.ndarray:
    flat = ref.reshape(-1, 2)
    lo = flat.min(axis=0)
    width = int(flat[:, 1].max() - lo[1]) + 1
    return (xy[..., 0] - lo[0]) * width + (xy[..., 1] - lo[1])


def _in_box(xy: np.ndarray, ref: np.ndarray) -> np.ndarray:
    lo = ref.min(axis=0)
    hi = ref.max(axis=0)
    return np.all((xy >= lo) & (xy <= hi), axis=1)


def build_system(hexes: Iterable) -> tuple[MolecularGraph, HexagonalSystem]:
    """Molecular graph of a connected set of hexagons.

    Vertex ids follow sorted corner-key order.  Raises EmptySystem or
    DisconnectedSystem.
    """
    coords = _as_coords(hexes)
    if not coords:
        raise EmptySystem("a hexagonal system needs at least one hexagon")
    centers = np.unique(np.array(coords, dtype=np.int64).reshape(-1, 2), axis=0)
    _check_connected(centers)
    corners = 3 * centers[:, None, :] + _CORNER_OFFSETS[None, :, :]  # (h, 6, 2)
    codes = _encode(corners)
    keys, ids = np.unique(codes.ravel(), return_inverse=True)
    ids = ids.reshape(-1, 6).astype(np.int64)

    a = ids
    b = np.roll(ids, -1, axis=1)
    lo = np.minimum(a, b).ravel()
    hi = np.maximum(a, b).ravel()
    n = len(keys)
    edge_codes = np.unique(lo * n + hi)
    edges = np.stack(np.divmod(edge_codes, n), axis=1).astype(np.int64)

    corner_use = np.bincount(ids.ravel(), minlength=n)
    internal = int((corner_use == 3).sum())
    g = _from_canonical(n, np.ascontiguousarray(edges))
    return g, HexagonalSystem(frozenset(HexCoord(q, r) for q, r in centers.tolist()), internal)


def zigzag_hexes(p: int) -> list[HexCoord]:
    """``p`` rows of two hexagons, each row attached under the previous row's right hexagon."""
    _check_p(p, 1)
    out = []
    for i in range(p):
        out.append(HexCoord(i, i))
        out.append(HexCoord(i + 1, i))
    return out


def rhombic_hexes(p: int) -> list[HexCoord]:
    _check_p(p, 1)
    return [HexCoord(i, j) for i in range(p) for j in range(p)]


def _check_p(p, minimum: int) -> None:
    if isinstance(p, bool) or int(p) != p or p < minimum:
        raise InvalidParameter(f"p must be an integer >= {minimum}, got {p!r}")


def zigzag_system(p: int) -> tuple[MolecularGraph, HexagonalSystem]:
    return build_system(zigzag_hexes(p))


def rhombic_system(p: int) -> tuple[MolecularGraph, HexagonalSystem]:
    return build_system(rhombic_hexes(p))


def zigzag(p: int) -> MolecularGraph:
    """Zigzag chain Z_p: 2p hexagons, 8p+2 vertices, 10p+1 edges."""
    return zigzag_system(p)[0]


def rhombic(p: int) -> MolecularGraph:
    """Rhombic system R_p: a p x p parallelogram of hexagons."""
    return rhombic_system(p)[0]


def parse_hexes(text: str) -> list[HexCoord]:
    """Parse one ``q r`` pair per line; blank lines and ``#`` comments are skipped."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InvalidParameter(f"line {lineno}: expected 'q r', got {raw!r}")
        try:
            out.append(HexCoord(int(parts[0]), int(parts[1])))
        except ValueError:
            raise InvalidParameter(f"line {lineno}: expected 'q r', got {raw!r}") from None
    return out


def corner_multiplicity(hexes: Iterable) -> Counter:
    """How many hexagons meet at each corner key; a slow reference for tests."""
    counts: Counter = Counter()
    for c in set(_as_coords(hexes)):
        for i in range(6):
            d1 = AXIAL_DIRECTIONS[i]
            d2 = AXIAL_DIRECTIONS[(i + 1) % 6]
            counts[(3 * c.q + d1[0] + d2[0], 3 * c.r + d1[1] + d2[1])] += 1
    return counts

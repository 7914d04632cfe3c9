"""Immutable simple graphs and k-distance degrees.

Vertices are the integers ``0..n-1``.  Adjacency is held in CSR form so the
depth-truncated BFS in :func:`k_degree_profile` can run level-synchronously
over every source vertex at once with numpy.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence, TextIO

import numpy as np

from .errors import DuplicateEdge, EdgeListFormatError, IdOutOfRange, InvalidParameter, SelfLoop


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


class MolecularGraph:
    """Undirected simple graph in canonical form.

    ``edges`` is an ``(m, 2)`` int64 array with ``u < v`` in every row and
    rows sorted lexicographically.  Arrays are read-only, so instances can be
    shared freely.
    """

    __slots__ = ("_n", "_edges", "_indptr", "_indices")

    def __init__(self, vertex_count: int, edges: np.ndarray, indptr: np.ndarray, indices: np.ndarray):
        # Use new_graph(); this constructor trusts its arguments.
        self._n = int(vertex_count)
        self._edges = _frozen(edges)
        self._indptr = _frozen(indptr)
        self._indices = _frozen(indices)

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> np.ndarray:
        return self._edges

    @property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        return self._indptr, self._indices

    def neighbors(self, v: int) -> np.ndarray:
        return self._indices[self._indptr[v]:self._indptr[v + 1]]

    @property
    def adjacency(self) -> list[list[int]]:
        return [self.neighbors(v).tolist() for v in range(self._n)]

    def degrees(self) -> np.ndarray:
        return np.diff(self._indptr)

    def edge_list(self) -> list[tuple[int, int]]:
        return [(int(u), int(v)) for u, v in self._edges]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MolecularGraph):
            return NotImplemented
        return self._n == other._n and np.array_equal(self._edges, other._edges)

    def __hash__(self) -> int:
        return hash((self._n, self._edges.tobytes()))

    def __repr__(self) -> str:
        return f"MolecularGraph(n={self._n}, m={self.edge_count})"


def new_graph(vertex_count: int, edges: Iterable[Sequence[int]] | np.ndarray) -> MolecularGraph:
    """Validate an edge list and return the canonical graph.

    Raises IdOutOfRange, SelfLoop or DuplicateEdge; ``(u, v)`` and ``(v, u)``
    count as the same edge.
    """
    n = int(vertex_count)
    if n < 0:
        raise InvalidParameter(f"vertex_count must be non-negative, got {n}")
    arr = np.asarray(edges if isinstance(edges, np.ndarray) else list(edges), dtype=np.int64)
    if arr.size == 0:
        arr = arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise EdgeListFormatError("edges must be pairs of vertex ids")

    bad = (arr < 0) | (arr >= n)
    if bad.any():
        row = int(np.argwhere(bad)[0][0])
        raise IdOutOfRange(f"edge {tuple(arr[row].tolist())} has an endpoint outside 0..{n - 1}")
    loops = arr[:, 0] == arr[:, 1]
    if loops.any():
        v = int(arr[loops][0, 0])
        raise SelfLoop(f"self-loop at vertex {v}")

    canon = np.sort(arr, axis=1)
    order = np.lexsort((canon[:, 1], canon[:, 0]))
    canon = canon[order]
    if len(canon) > 1:
        dup = np.all(canon[1:] == canon[:-1], axis=1)
        if dup.any():
            u, v = canon[1:][dup][0].tolist()
            raise DuplicateEdge(f"edge ({u}, {v}) given more than once")
    return _from_canonical(n, np.ascontiguousarray(canon))


def _from_canonical(n: int, edges: np.ndarray) -> MolecularGraph:
    # Both orientations, sorted by (source, target): rows of a CSR with sorted neighbor lists.
    src = np.concatenate([edges[:, 0], edges[:, 1]])
    dst = np.concatenate([edges[:, 1], edges[:, 0]])
    order = np.lexsort((dst, src))
    indices = dst[order].astype(np.int64)
    counts = np.bincount(src, minlength=n) if n else np.zeros(0, dtype=np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return MolecularGraph(n, edges, indptr, indices)


@dataclass(frozen=True, eq=False)
class KDegreeProfile:
    """``degrees[v]`` is the number of vertices at distance exactly ``k`` from ``v``."""

    k: int
    degrees: np.ndarray

    def __len__(self) -> int:
        return len(self.degrees)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KDegreeProfile):
            return NotImplemented
        return self.k == other.k and np.array_equal(self.degrees, other.degrees)


def _in_sorted(values: np.ndarray, sorted_ref: np.ndarray) -> np.ndarray:
    if len(sorted_ref) == 0:
        return np.zeros(len(values), dtype=bool)
    pos = np.searchsorted(sorted_ref, values)
    pos[pos == len(sorted_ref)] = 0
    return sorted_ref[pos] == values


def _expand(indptr: np.ndarray, indices: np.ndarray, src: np.ndarray, vtx: np.ndarray):
    """All (source, neighbor) pairs reachable in one step from the (source, vertex) pairs."""
    starts = indptr[vtx]
    lengths = indptr[vtx + 1] - starts
    total = int(lengths.sum())
    if total == 0:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    offsets = np.repeat(starts - (np.cumsum(lengths) - lengths), lengths)
    nbr = indices[offsets + np.arange(total, dtype=np.int64)]
    return np.repeat(src, lengths), nbr


def k_degree_profile(g: MolecularGraph, k: int) -> KDegreeProfile:
    """Count the vertices at exact distance ``k`` from every vertex.

    Runs one BFS per source, all sources advanced together level by level and
    stopped at depth ``k``.  Pairs are tracked as ``source * n + vertex`` keys;
    a neighbor of a depth-``d-1`` vertex lies at depth ``d-2``, ``d-1`` or
    ``d``, so only the two previous levels are kept for deduplication.  Work
    and memory are bounded by the sizes of the radius-``k`` balls.
    """
    if int(k) != k or k < 1:
        raise InvalidParameter(f"k must be a positive integer, got {k!r}")
    k = int(k)
    n = g.vertex_count
    if n == 0:
        return KDegreeProfile(k, _frozen(np.zeros(0, dtype=np.int64)))
    indptr, indices = g.csr

    n64 = np.int64(n)
    src = np.arange(n, dtype=np.int64)
    vtx = src.copy()
    prev_keys = np.zeros(0, dtype=np.int64)
    cur_keys = src * n64 + vtx
    for _ in range(k):
        s, v = _expand(indptr, indices, src, vtx)
        keys = np.unique(s * n64 + v)
        keys = keys[~(_in_sorted(keys, cur_keys) | _in_sorted(keys, prev_keys))]
        prev_keys, cur_keys = cur_keys, keys
        src, vtx = np.divmod(keys, n64)
        if len(keys) == 0:
            break
    degrees = np.bincount(src, minlength=n).astype(np.int64)
    return KDegreeProfile(k, _frozen(degrees))


def write_edge_list(g: MolecularGraph, out: TextIO) -> None:
    """Write ``n m`` then one ``u v`` line per edge, ascending."""
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges.tolist())
    out.write("\n".join(lines) + "\n")


def format_edge_list(g: MolecularGraph) -> str:
    import io

    buf = io.StringIO()
    write_edge_list(g, buf)
    return buf.getvalue()


def parse_edge_list(text: str) -> MolecularGraph:
    rows: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListFormatError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append([int(parts[0]), int(parts[1])])
        except ValueError:
            raise EdgeListFormatError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise EdgeListFormatError("missing 'n m' header line")
    (n, m), edges = rows[0], rows[1:]
    if len(edges) != m:
        raise EdgeListFormatError(f"header declares {m} edges, found {len(edges)}")
    return new_graph(n, edges)


def read_edge_list(path: str | Path) -> MolecularGraph:
    return parse_edge_list(Path(path).read_text())

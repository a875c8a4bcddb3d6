"""Simple graphs, degree sequences, and seeded G(n, p) sampling.

The sampler walks the C(n, 2) edge slots of the upper triangle in a fixed
row-major order (slot 0 is {1,2}, slot 1 is {1,3}, ...) and draws the gaps
between present edges geometrically, so the cost is proportional to the
number of edges actually produced rather than to C(n, 2).  The degree-only
and full-graph samplers consume the identical random stream: with equal
seeds, the graph's degree sequence matches the degree sampler exactly.

Per-replicate seeds are derived from (master, stream) by a 64-bit avalanche
mix, so replicates can be generated in any order, on any number of workers,
with identical results.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import IO, Iterable, Iterator

import numpy as np

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

# Full-graph materialization guard; degree-only sampling has no such limit.
MAX_GRAPH_VERTICES = 100_000


def mix_seed(master: int, stream: int) -> int:
    """Derive a 64-bit sub-stream seed from (master, stream).

    This is the splitmix64 output function applied to master + stream
    increments of the golden-ratio constant; a pure function of its
    arguments with full avalanche, so distinct streams land far apart.
    """
    z = (master + (stream + 1) * _GOLDEN) & _MASK64
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return z ^ (z >> 31)


@dataclass(frozen=True)
class Seed:
    """Master seed plus a replicate stream index."""

    master: int
    stream: int = 0

    def __post_init__(self) -> None:
        for name in ("master", "stream"):
            v = getattr(self, name)
            if not 0 <= v < 2**64:
                raise ValueError(f"Seed.{name} must be a 64-bit unsigned integer, got {v}")

    def derived(self) -> int:
        return mix_seed(self.master, self.stream)


@dataclass(frozen=True)
class GnpParams:
    """Vertex count and edge probability of a G(n, p) model."""

    n: int
    p: float

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not 0.0 < self.p < 1.0:
            raise ValueError(
                f"p must lie strictly inside (0, 1), got {self.p}; deterministic "
                "empty/complete graphs are available via SimpleGraph.empty/complete"
            )

    @property
    def edge_slots(self) -> int:
        return self.n * (self.n - 1) // 2


@dataclass(frozen=True)
class DegreeSequence:
    """Degree vector of a simple graph on n vertices."""

    n: int
    degrees: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.degrees, dtype=np.int64)
        if arr.shape != (self.n,):
            raise ValueError(f"expected {self.n} degrees, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() > self.n - 1):
            raise ValueError("degrees must lie in [0, n-1]")
        if int(arr.sum()) % 2 != 0:
            raise ValueError("degree sum must be even (handshake parity)")
        arr.setflags(write=False)
        object.__setattr__(self, "degrees", arr)

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees.tolist())

    def __len__(self) -> int:
        return self.n


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph on vertices 1..n with no loops or multi-edges."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        seen = set()
        canon = []
        for (i, j) in self.edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge ({i}, {j}) outside vertex range 1..{self.n}")
            e = (i, j) if i < j else (j, i)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            canon.append(e)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, ())

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(n, tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)


class EdgeListError(ValueError):
    """Malformed edge-list input; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


def read_edge_list(stream: IO[str] | Iterable[str], n_override: int | None = None) -> SimpleGraph:
    """Parse a UTF-8 edge list: one "i j" pair per line, 1-based labels.

    Blank lines and lines starting with '#' are ignored.  The vertex count
    is the largest label seen unless ``n_override`` declares trailing
    isolated vertices.
    """
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    max_label = 0
    for line_no, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListError(line_no, f"expected two vertex labels, got {len(tokens)} tokens")
        try:
            i, j = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListError(line_no, f"vertex labels must be integers, got {tokens!r}") from None
        if i < 1 or j < 1:
            raise EdgeListError(line_no, f"vertex labels are 1-based positives, got ({i}, {j})")
        if i == j:
            raise EdgeListError(line_no, f"self-loop at vertex {i}")
        e = (i, j) if i < j else (j, i)
        if e in seen:
            raise EdgeListError(line_no, f"duplicate edge {e}")
        seen.add(e)
        edges.append(e)
        max_label = max(max_label, j, i)
    n = max(max_label, 1)
    if n_override is not None:
        if n_override < max_label:
            raise ValueError(f"declared vertex count {n_override} is below the largest label {max_label}")
        n = n_override
    return SimpleGraph(n, tuple(edges))


def degree_sequence(g: SimpleGraph) -> DegreeSequence:
    """Degree vector of a graph: d_i = number of neighbours of vertex i."""
    deg = np.zeros(g.n, dtype=np.int64)
    for (i, j) in g.edges:
        deg[i - 1] += 1
        deg[j - 1] += 1
    return DegreeSequence(g.n, deg)


def complement_degrees(d: DegreeSequence) -> DegreeSequence:
    """Entrywise n-1-d_i: the degree sequence of the complement graph."""
    return DegreeSequence(d.n, (d.n - 1) - d.degrees)


# ---------------------------------------------------------------------------
# G(n, p) sampling
# ---------------------------------------------------------------------------


def _rng_for(seed: Seed) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed.derived()))


def _sample_edge_slots(rng: np.random.Generator, m_slots: int, p: float) -> np.ndarray:
    """Ascending slot indices of the present edges among m_slots Bernoulli(p) slots.

    Gaps between successive present edges are geometric, generated by
    inverse transform from uniform batches; the number and order of draws
    is a deterministic function of (m_slots, p) and the values drawn, so a
    fixed seed yields a fixed result.
    """
    if m_slots == 0:
        return np.empty(0, dtype=np.int64)
    log_q = math.log1p(-p)
    chunks: list[np.ndarray] = []
    cursor = -1  # last slot emitted
    while cursor < m_slots - 1:
        expected = (m_slots - 1 - cursor) * p
        batch = int(expected + 6.0 * math.sqrt(expected + 1.0)) + 16
        u = rng.random(batch)
        # gaps are >= 0, so int truncation of the ratio is the floor
        jumps = (np.log1p(-u) * (1.0 / log_q)).astype(np.int64) + 1
        pos = cursor + np.cumsum(jumps)
        if pos[-1] >= m_slots:
            chunks.append(pos[pos < m_slots])
            cursor = m_slots - 1
        else:
            chunks.append(pos)
            cursor = int(pos[-1])
    if len(chunks) == 1:
        return chunks[0]
    return np.concatenate(chunks) if chunks else np.empty(0, dtype=np.int64)


# For small n the slot -> (i, j) map is a cached table lookup; beyond the
# cap the quadratic-root decode below stays O(1) in memory.
_PAIR_LUT_MAX = 1024


@lru_cache(maxsize=4)
def _pair_lut(n: int) -> tuple[np.ndarray, np.ndarray]:
    i_idx, j_idx = np.triu_indices(n, k=1)
    return i_idx.astype(np.int64), j_idx.astype(np.int64)


def _slots_to_pairs(slots: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Invert the row-major upper-triangle numbering: slot -> 0-based (i, j).

    Row i occupies slots [i*(2n-1-i)/2, (i+1)*(2n-2-i)/2).  The float
    quadratic-root estimate can be off by one in the last place, so one
    integer fix-up pass per direction follows it.
    """
    if n <= _PAIR_LUT_MAX:
        lut_i, lut_j = _pair_lut(n)
        return lut_i[slots], lut_j[slots]
    if slots.size == 0:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty
    twon1 = 2 * n - 1
    disc = float(twon1) * float(twon1) - 8.0 * slots.astype(np.float64)
    i = ((twon1 - np.sqrt(disc)) * 0.5).astype(np.int64)
    np.minimum(i, n - 2, out=i)
    np.maximum(i, 0, out=i)
    # offset(0) = 0 <= slot and offset(n-1) = C(n,2) > slot keep i in range.
    i -= (i * (twon1 - i)) // 2 > slots
    nxt = i + 1
    i += (nxt * (twon1 - nxt)) // 2 <= slots
    offsets = (i * (twon1 - i)) // 2
    j = i + 1 + (slots - offsets)
    return i, j


def sample_gnp_degrees(params: GnpParams, seed: Seed) -> DegreeSequence:
    """Degree sequence of one G(n, p) draw, in O(n) memory.

    Only the degrees are materialized: each realized edge slot increments
    the degrees of its two endpoints.
    """
    rng = _rng_for(seed)
    slots = _sample_edge_slots(rng, params.edge_slots, params.p)
    i, j = _slots_to_pairs(slots, params.n)
    deg = np.bincount(i, minlength=params.n) + np.bincount(j, minlength=params.n)
    return DegreeSequence(params.n, deg.astype(np.int64))


def sample_gnp_graph(
    params: GnpParams, seed: Seed, max_vertices: int = MAX_GRAPH_VERTICES
) -> SimpleGraph:
    """One full G(n, p) draw as an edge set (1-based labels).

    Shares the edge-slot stream with :func:`sample_gnp_degrees`: for the
    same (params, seed) the degree sequence of the returned graph equals
    the degree sampler's output.
    """
    if params.n > max_vertices:
        raise ValueError(
            f"n={params.n} exceeds the full-graph guard ({max_vertices}); "
            "use sample_gnp_degrees for degree-only statistics"
        )
    rng = _rng_for(seed)
    slots = _sample_edge_slots(rng, params.edge_slots, params.p)
    i, j = _slots_to_pairs(slots, params.n)
    edges = tuple(zip((i + 1).tolist(), (j + 1).tolist()))
    return SimpleGraph(params.n, edges)

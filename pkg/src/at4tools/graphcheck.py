"""Concrete-graph verification: witness generators, SRG/DRG checking, and
distance profiles of automorphisms.

Graphs are stored as bitset adjacency rows, which keeps every check exact
and fast at the few-hundred-vertex scale this package needs.  The star
witness is the unique SRG(56, 10, 0, 2), built from hyperovals of the
order-4 projective plane and accepted only after it verifies its own
parameters.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .at4 import IntersectionArray
from .exactnum import is_prime
from .higman import AutProfile, alpha1_candidates, chi_filter, chi_values
from .srg import SrgParams, fixed_point_order_bound, local_family_params


class GraphError(Exception):
    """Parse or construction failure for a concrete graph."""


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitset rows."""

    __slots__ = ("n", "rows", "_dist")

    def __init__(self, rows):
        rows = tuple(rows)
        n = len(rows)
        full = (1 << n) - 1
        for i, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"vertex {i} has a neighbor out of range")
            if (row >> i) & 1:
                raise GraphError(f"loop at vertex {i}")
            for j in _bits(row):
                if not (rows[j] >> i) & 1:
                    raise GraphError(f"asymmetric edge {i}-{j}")
        self.n = n
        self.rows = rows
        self._dist = None

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(rows)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def bfs_distances(self, start: int) -> tuple[int, ...]:
        """Distances from start, -1 for unreachable vertices."""
        dist = [-1] * self.n
        dist[start] = 0
        seen = frontier = 1 << start
        d = 0
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.rows[v]
            nxt &= ~seen
            d += 1
            for v in _bits(nxt):
                dist[v] = d
            seen |= nxt
            frontier = nxt
        return tuple(dist)

    def distances(self) -> tuple[tuple[int, ...], ...]:
        """All-pairs distance matrix, computed once and cached."""
        if self._dist is None:
            self._dist = tuple(self.bfs_distances(v) for v in range(self.n))
        return self._dist

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return -1 not in self.bfs_distances(0)

    def diameter(self) -> int:
        if self.n == 0:
            raise GraphError("diameter of the empty graph is undefined")
        if not self.is_connected():
            raise GraphError("diameter of a disconnected graph is undefined")
        return max(max(row) for row in self.distances())

    def induced(self, vertices) -> "Graph":
        vs = sorted(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        rows = []
        for v in vs:
            row = 0
            for w in _bits(self.rows[v]):
                if w in pos:
                    row |= 1 << pos[w]
            rows.append(row)
        return Graph(rows)


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_graph(text: str) -> tuple[Graph, tuple[str, ...]]:
    """Parse the adjacency text format, returning the graph and a warning
    per edge that had to be symmetrized.

    Format: a header line ``n <count>``, then one line per vertex
    ``i: j k l`` with sorted 0-based neighbors.  Blank lines and ``#``
    comments are ignored.  Loops and malformed lines raise GraphError with
    the offending line number.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise GraphError("empty input: expected header line 'n <count>'")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
        raise GraphError(f"line {lineno}: expected header 'n <count>', got {header!r}")
    n = int(parts[1])
    directed = [0] * n
    for lineno, line in lines[1:]:
        head, sep, tail = line.partition(":")
        if not sep or not head.strip().isdigit():
            raise GraphError(f"line {lineno}: expected 'i: neighbors', got {line!r}")
        i = int(head)
        if i >= n:
            raise GraphError(f"line {lineno}: vertex {i} out of range for n = {n}")
        for tok in tail.split():
            if not tok.isdigit():
                raise GraphError(f"line {lineno}: bad neighbor {tok!r}")
            j = int(tok)
            if j >= n:
                raise GraphError(f"line {lineno}: neighbor {j} out of range for n = {n}")
            if j == i:
                raise GraphError(f"line {lineno}: loop at vertex {i}")
            directed[i] |= 1 << j
    warnings = []
    rows = list(directed)
    for i in range(n):
        for j in _bits(directed[i]):
            if not (directed[j] >> i) & 1:
                warnings.append(f"edge {i}-{j} listed only once; symmetrized")
                rows[j] |= 1 << i
    return Graph(rows), tuple(warnings)


def load_graph(text: str) -> Graph:
    """Parse the adjacency text format, applying undirected closure."""
    return parse_graph(text)[0]


def graph_to_text(g: Graph) -> str:
    """Byte-deterministic rendering of the adjacency text format."""
    out = [f"n {g.n}"]
    for v in range(g.n):
        nbrs = " ".join(map(str, g.neighbors(v)))
        out.append(f"{v}: {nbrs}" if nbrs else f"{v}:")
    return "\n".join(out) + "\n"


def parse_permutations(text: str, n: int) -> tuple[tuple[int, ...], ...]:
    """Parse one permutation per line: n space-separated images.

    Being a bijection is not checked here; a corrupted line of the right
    shape is reported by the audit rather than rejected at parse time.
    """
    perms = []
    for lineno, line in _content_lines(text):
        toks = line.split()
        if len(toks) != n:
            raise GraphError(f"line {lineno}: expected {n} images, got {len(toks)}")
        try:
            perms.append(tuple(int(t) for t in toks))
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer image") from None
    return tuple(perms)


def permutations_to_text(perms) -> str:
    return "".join(" ".join(map(str, p)) + "\n" for p in perms)


def perm_order(perm: tuple[int, ...]) -> int:
    """Order of a permutation: lcm of its cycle lengths."""
    seen = [False] * len(perm)
    order = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        v = start
        while not seen[v]:
            seen[v] = True
            v = perm[v]
            length += 1
        order = math.lcm(order, length)
    return order


# ---------------------------------------------------------------------------
# witness generators
# ---------------------------------------------------------------------------


def generate_petersen() -> Graph:
    """Kneser graph on the 2-subsets of a 5-set: SRG(10, 3, 0, 1)."""
    pairs = list(combinations(range(5), 2))
    edges = [
        (i, j)
        for i, j in combinations(range(10), 2)
        if not set(pairs[i]) & set(pairs[j])
    ]
    return Graph.from_edges(10, edges)


# GF(4) as {0, 1, w, w+1} encoded 0..3; addition is xor
_GF4_MUL = ((0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2))
_GF4_INV = (0, 1, 3, 2)


def _normalize(v: tuple[int, int, int]) -> tuple[int, int, int]:
    for c in v:
        if c:
            inv = _GF4_INV[c]
            return tuple(_GF4_MUL[inv][x] for x in v)
    raise ValueError("zero vector has no projective point")


@lru_cache(maxsize=1)
def _plane():
    """Points and line bitmasks of the projective plane of order 4."""
    pts = sorted(
        {
            _normalize((x, y, z))
            for x in range(4)
            for y in range(4)
            for z in range(4)
            if x or y or z
        }
    )
    index = {pt: i for i, pt in enumerate(pts)}
    lines = []
    for form in pts:
        mask = 0
        for i, pt in enumerate(pts):
            dot = 0
            for a, b in zip(form, pt):
                dot ^= _GF4_MUL[a][b]
            if dot == 0:
                mask |= 1 << i
        assert mask.bit_count() == 5
        lines.append(mask)
    assert len(pts) == len(lines) == 21
    return tuple(pts), index, tuple(sorted(lines))


@lru_cache(maxsize=1)
def _hyperovals() -> tuple[int, ...]:
    """All 6-point sets meeting every line in 0 or 2 points, as bitmasks.

    Built as 6-arcs: a point extends an arc iff it lies on none of the
    arc's secant lines.  Every 6-arc in this plane meets each line evenly,
    which is re-checked for each output."""
    pts, index, lines = _plane()
    line_through = [[0] * 21 for _ in range(21)]
    for mask in lines:
        members = list(_bits(mask))
        for a in members:
            for b in members:
                if a != b:
                    line_through[a][b] = mask
    ovals = []

    def extend(arc, secants):
        if len(arc) == 6:
            mask = 0
            for a in arc:
                mask |= 1 << a
            assert all((mask & line).bit_count() in (0, 2) for line in lines)
            ovals.append(mask)
            return
        for nxt in range((arc[-1] + 1) if arc else 0, 21):
            if (secants >> nxt) & 1:
                continue
            new_secants = secants
            for a in arc:
                new_secants |= line_through[a][nxt]
            extend(arc + [nxt], new_secants)

    extend([], 0)
    return tuple(sorted(ovals))


def _matrix_point_perm(m) -> tuple[int, ...]:
    """Permutation of plane points induced by an invertible matrix over GF(4)."""
    pts, index, _ = _plane()
    perm = []
    for pt in pts:
        image = tuple(
            _GF4_MUL[m[i][0]][pt[0]] ^ _GF4_MUL[m[i][1]][pt[1]] ^ _GF4_MUL[m[i][2]][pt[2]]
            for i in range(3)
        )
        perm.append(index[_normalize(image)])
    assert len(set(perm)) == 21
    return tuple(perm)


@lru_cache(maxsize=1)
def _transvection_perms() -> tuple[tuple[int, ...], ...]:
    """Point permutations of the 18 elementary transvections, which
    generate the determinant-1 collineations."""
    perms = []
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            for lam in (1, 2, 3):
                m = [[1 if a == b else 0 for b in range(3)] for a in range(3)]
                m[i][j] = lam
                perms.append(_matrix_point_perm(m))
    return tuple(perms)


def _frobenius_perm() -> tuple[int, ...]:
    """Point permutation of the squaring field automorphism."""
    pts, index, _ = _plane()
    frob = (0, 1, 3, 2)  # x -> x^2 on GF(4)
    return tuple(index[_normalize(tuple(frob[c] for c in pt))] for pt in pts)


def _apply_point_perm(mask: int, perm: tuple[int, ...]) -> int:
    out = 0
    for b in _bits(mask):
        out |= 1 << perm[b]
    return out


def _disjointness_rows(vertices: tuple[int, ...]) -> list[int]:
    rows = [0] * len(vertices)
    for i in range(len(vertices)):
        for j in range(i + 1, len(vertices)):
            if vertices[i] & vertices[j] == 0:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


@lru_cache(maxsize=1)
def _gewirtz_class() -> tuple[int, ...]:
    """The 56-hyperoval class the graph is built on: orbit of the least
    hyperoval under the determinant-1 collineations, validated as
    SRG(56, 10, 0, 2); other classes are searched if the first fails."""
    ovals = _hyperovals()
    gens = _transvection_perms()
    target = SrgParams(56, 10, 0, 2)
    remaining = set(ovals)
    while remaining:
        seed = min(remaining)
        orbit = {seed}
        queue = deque([seed])
        while queue:
            cur = queue.popleft()
            for perm in gens:
                img = _apply_point_perm(cur, perm)
                if img not in orbit:
                    orbit.add(img)
                    queue.append(img)
        remaining -= orbit
        if len(orbit) != 56:
            continue
        vertices = tuple(sorted(orbit))
        if verify_srg(Graph(_disjointness_rows(vertices))) == target:
            return vertices
    raise GraphError("no hyperoval class produced SRG(56, 10, 0, 2)")


def generate_gewirtz() -> Graph:
    """The SRG(56, 10, 0, 2) on a 56-hyperoval class of the order-4
    projective plane, adjacency being disjointness; self-validating."""
    return Graph(_disjointness_rows(_gewirtz_class()))


def gewirtz_automorphisms(count: int = 150) -> tuple[tuple[int, ...], ...]:
    """At least ``count`` distinct automorphisms of the hyperoval-class
    graph, generated from the construction's own symmetries (elementary
    transvections, plus the field automorphism when it preserves the class)
    closed under composition breadth-first."""
    vertices = _gewirtz_class()
    vindex = {mask: i for i, mask in enumerate(vertices)}
    gens = []
    point_perms = list(_transvection_perms())
    frob = _frobenius_perm()
    if all(_apply_point_perm(mask, frob) in vindex for mask in vertices):
        point_perms.append(frob)
    for perm in point_perms:
        gens.append(tuple(vindex[_apply_point_perm(mask, perm)] for mask in vertices))
    ident = tuple(range(56))
    seen = {ident}
    out = [ident]
    queue = deque([ident])
    while queue and len(out) < count:
        cur = queue.popleft()
        for g in gens:
            nxt = tuple(g[c] for c in cur)
            if nxt not in seen:
                seen.add(nxt)
                out.append(nxt)
                queue.append(nxt)
                if len(out) >= count:
                    break
    return tuple(out)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


def verify_srg(g: Graph) -> SrgParams | None:
    """Return (v, k, lam, mu) iff g is strongly regular: connected,
    non-complete, constant valency, constant common-neighbor counts over
    edges and over non-edges."""
    n = g.n
    if n < 3 or not g.is_connected():
        return None
    k = g.degree(0)
    if any(g.degree(v) != k for v in range(1, n)):
        return None
    if k == n - 1:
        return None
    lam = mu = None
    for u in range(n):
        row = g.rows[u]
        for v in range(u + 1, n):
            common = (row & g.rows[v]).bit_count()
            if (row >> v) & 1:
                if lam is None:
                    lam = common
                elif lam != common:
                    return None
            else:
                if mu is None:
                    mu = common
                elif mu != common:
                    return None
    if lam is None or mu is None or mu == 0:
        return None
    return SrgParams(n, k, lam, mu)


def verify_drg(g: Graph) -> IntersectionArray | None:
    """Return the intersection array iff g is distance-regular: for every
    base vertex, the neighbor counts one layer in, same layer, and one
    layer out depend only on the distance."""
    n = g.n
    if n < 2 or not g.is_connected():
        return None
    dist = g.distances()
    d = max(max(row) for row in dist)
    if d == 0:
        return None
    b = [None] * (d + 1)
    c = [None] * (d + 1)
    for u in range(n):
        du = dist[u]
        if max(du) != d:
            return None
        layer = [0] * (d + 1)
        for w in range(n):
            layer[du[w]] |= 1 << w
        for w in range(n):
            i = du[w]
            row = g.rows[w]
            ci = (row & layer[i - 1]).bit_count() if i > 0 else 0
            bi = (row & layer[i + 1]).bit_count() if i < d else 0
            if b[i] is None:
                b[i], c[i] = bi, ci
            elif b[i] != bi or c[i] != ci:
                return None
    if b[d] != 0 or c[1] != 1:
        return None
    return IntersectionArray(tuple(b[:d]), tuple(c[1:]))


def is_permutation(seq, n: int) -> bool:
    return len(seq) == n and len(set(seq)) == n and all(0 <= x < n for x in seq)


def is_automorphism(g: Graph, sigma) -> bool:
    """True iff sigma is a bijection of the vertices preserving adjacency."""
    if len(sigma) != g.n:
        raise ValueError(f"permutation length {len(sigma)} does not match n = {g.n}")
    if not is_permutation(sigma, g.n):
        return False
    for u in range(g.n):
        image = 0
        for w in _bits(g.rows[u]):
            image |= 1 << sigma[w]
        if g.rows[sigma[u]] != image:
            return False
    return True


def alpha_profile(g: Graph, sigma) -> tuple[int, ...]:
    """Counts (alpha_0..alpha_d) of vertices moved to each distance by an
    automorphism of a connected graph."""
    if not is_automorphism(g, sigma):
        raise ValueError("sigma is not an automorphism")
    if not g.is_connected():
        raise ValueError("alpha_profile requires a connected graph")
    dist = g.distances()
    counts = [0] * (g.diameter() + 1)
    for v in range(g.n):
        counts[dist[v][sigma[v]]] += 1
    return tuple(counts)


def distance_partition(g: Graph, base: int) -> tuple[tuple[int, ...], ...]:
    """Layers of vertices by distance from a base vertex of a connected
    graph; the layers partition the vertex set."""
    dist = g.bfs_distances(base)
    if -1 in dist:
        raise GraphError("distance_partition requires a connected graph")
    layers = [[] for _ in range(max(dist) + 1)]
    for v, d in enumerate(dist):
        layers[d].append(v)
    return tuple(tuple(layer) for layer in layers)


def fix_subgraph(g: Graph, sigmas) -> Graph:
    """Induced subgraph on the vertices fixed by every given automorphism."""
    for sigma in sigmas:
        if not is_automorphism(g, sigma):
            raise ValueError("fix_subgraph requires automorphisms")
    fixed = [v for v in range(g.n) if all(s[v] == v for s in sigmas)]
    return g.induced(fixed)


# ---------------------------------------------------------------------------
# end-to-end audit against the constraint engine
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AuditReport:
    """Per-element outcomes of auditing measured automorphism profiles
    against the character-sum constraints."""

    p: int
    total: int
    passed: int
    failures: tuple[tuple[int, tuple[str, ...]], ...]
    orders: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "total": self.total,
            "passed": self.passed,
            "failures": [[i, list(codes)] for i, codes in self.failures],
            "orders": list(self.orders),
        }


def audit_family_graph(g: Graph, p: int, sigmas) -> AuditReport:
    """Audit each permutation of a concrete family member: automorphism
    check, fixed-set bound, character integrality for every element, and
    the congruence filter plus alpha_1 admissibility for prime orders
    (the latter only when p > 2)."""
    params = local_family_params(p)
    measured = verify_srg(g)
    if measured != params:
        raise GraphError(
            f"graph verifies as {measured and measured.as_tuple()}, expected {params.as_tuple()}"
        )
    bound = fixed_point_order_bound(params)
    failures = []
    orders = []
    for idx, sigma in enumerate(sigmas):
        codes = []
        if len(sigma) != g.n or not is_permutation(sigma, g.n):
            failures.append((idx, ("not-a-permutation",)))
            orders.append(0)
            continue
        if not is_automorphism(g, sigma):
            failures.append((idx, ("not-automorphism",)))
            orders.append(0)
            continue
        order = perm_order(sigma)
        orders.append(order)
        profile = alpha_profile(g, sigma)
        fix = profile[0]
        if order > 1 and fix > bound:
            codes.append("fix-bound-exceeded")
        aut = AutProfile(order, profile[0], profile[1], profile[2])
        chi1, chi2 = chi_values(p, aut)
        if chi1.denominator != 1 or chi2.denominator != 1:
            codes.append("non-integral-character")
        elif is_prime(order):
            verdict = chi_filter(p, aut)
            if not verdict.ok:
                codes.extend(verdict.reasons)
            if p > 2 and fix <= bound and profile[1] not in alpha1_candidates(p, order, fix):
                codes.append("alpha1-not-admissible")
        if codes:
            failures.append((idx, tuple(codes)))
    return AuditReport(p, len(sigmas), len(sigmas) - len(failures), tuple(failures), tuple(orders))

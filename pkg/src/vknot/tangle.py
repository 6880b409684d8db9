"""(2,2)-tangle calculus: closures, the bilinear closure formula, the 3x3
recursion matrices and the max-plus degree recursion.

A tangle has four open strand ends tagged WT (west-top), WB (west-bottom),
ET (east-top), EB (east-bottom).  Its three closures join the ends pairwise:

* D: WT-WB and ET-EB
* N: WT-ET and WB-EB
* X: WT-EB and WB-ET, the two arcs crossing once in a virtual crossing

Closure results are closed planar diagrams; orientations are re-derived
after closing because a closure arc may join two strand heads.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import (CLASSICAL, VIRTUAL, Crossing, DiagramError, GaussCode,
                      PlanarDiagram, to_gauss)
from .invariants import bracket_pd
from .laurent import (BOTTOM, InexactDivision, LaurentPoly, MaxPlusDeg,
                      MaxPlusMatrix, RationalFn, mu, poly_divmod_exact)

END_TAGS = ("WT", "WB", "ET", "EB")

D_CLOSE = "D"
N_CLOSE = "N"
X_CLOSE = "X"


@dataclass
class TangleDiagram:
    """Planar fragment with four dangling darts (or direct wires between ends).

    ``ends`` maps each tag to a dart of some interior crossing, or to None if
    the end belongs to a crossing-free wire listed in ``wires``.
    """

    crossings: list[Crossing]
    raw_edges: list[tuple[int, int]]          # interior connections, unoriented
    ends: dict[str, int | None]
    wires: list[tuple[str, str]]              # crossing-free strands between tags

    def __post_init__(self):
        if sorted(self.ends) != sorted(END_TAGS):
            raise DiagramError(f"tangle ends must be exactly {END_TAGS}")

    def classical_count(self) -> int:
        return sum(1 for c in self.crossings if c.kind == CLASSICAL)

    def shifted(self, offset: int) -> "TangleDiagram":
        return TangleDiagram(
            [Crossing(c.kind, tuple(d + offset for d in c.rot), c.sign)
             for c in self.crossings],
            [(a + offset, b + offset) for a, b in self.raw_edges],
            {t: (None if d is None else d + offset) for t, d in self.ends.items()},
            list(self.wires),
        )

    def max_dart(self) -> int:
        m = -1
        for c in self.crossings:
            m = max(m, max(c.rot))
        return m


@dataclass(frozen=True)
class BracketVector:
    """Brackets of the three closures (⟨D⟩, ⟨N⟩, ⟨X⟩) of one tangle."""

    d: LaurentPoly
    n: LaurentPoly
    x: LaurentPoly

    def as_tuple(self) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
        return (self.d, self.n, self.x)

    def maxdegs(self) -> tuple[MaxPlusDeg, MaxPlusDeg, MaxPlusDeg]:
        return (self.d.max_degree(), self.n.max_degree(), self.x.max_degree())


def _reorient(crossings: list[Crossing], raw_edges: list[tuple[int, int]],
              circles: int = 0) -> PlanarDiagram:
    """Assemble a closed diagram from unoriented edges.

    Walks every component, assigns a travel direction, and rewrites each
    classical crossing record (rotation root and sign) to match.  Over/under
    data is preserved, so the bracket is unaffected by the choices made here.
    """
    partner: dict[int, int] = {}
    for a, b in raw_edges:
        if a in partner or b in partner:
            raise DiagramError("dart used by two edges")
        partner[a] = b
        partner[b] = a
    strand_mate: dict[int, int] = {}
    for c in crossings:
        for s in range(4):
            strand_mate[c.rot[s]] = c.rot[(s + 2) % 4]
    if sorted(partner) != sorted(strand_mate):
        raise DiagramError("edges do not cover every dart exactly once")

    is_in: dict[int, bool] = {}
    for start in sorted(strand_mate):
        if start in is_in:
            continue
        d = start
        while d not in is_in:
            is_in[d] = True                  # strand enters the crossing here
            out = strand_mate[d]
            is_in[out] = False
            d = partner[out]

    new_crossings = []
    for c in crossings:
        rot = c.rot
        if c.kind == VIRTUAL:
            new_crossings.append(Crossing(VIRTUAL, rot))
            continue
        if not is_in[rot[0]]:
            rot = rot[2:] + rot[:2]
        sign = 1 if is_in[rot[3]] else -1
        new_crossings.append(Crossing(CLASSICAL, rot, sign))

    edges = {}
    for label, (a, b) in enumerate(raw_edges, start=1):
        tail, head = (a, b) if is_in[b] else (b, a)
        edges[label] = (tail, head)
    return PlanarDiagram(new_crossings, edges, base_edge=1 if edges else None,
                         circles=circles)


def _resolve_paths(links: list[tuple], degree1_nodes: set):
    """Resolve an undirected link structure of tags and darts.

    ``links`` are undirected connections between nodes; a node is either
    ``("dart", d)`` or ``("tag", name)``.  Dart nodes and nodes listed in
    ``degree1_nodes`` have exactly one link; every other tag has exactly two.
    Returns (dart-dart edges, end-to-end paths keyed by degree-1 nodes,
    circle count).
    """
    adj: dict = {}
    for a, b in links:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    for node, nbrs in adj.items():
        want = 1 if (node[0] == "dart" or node in degree1_nodes) else 2
        if len(nbrs) != want:
            raise DiagramError(f"node {node} has {len(nbrs)} links, expected {want}")

    visited = set()
    edges = []
    open_paths = {}
    for start in sorted(adj, key=repr):
        if start in visited or not (start[0] == "dart" or start in degree1_nodes):
            continue
        visited.add(start)
        prev, cur = start, adj[start][0]
        while cur[0] == "tag" and cur not in degree1_nodes:
            visited.add(cur)
            nbrs = adj[cur]
            nxt = nbrs[1] if nbrs[0] == prev else nbrs[0]
            prev, cur = cur, nxt
        visited.add(cur)
        key = tuple(sorted((repr(start), repr(cur))))
        if (start, cur) in open_paths or (cur, start) in open_paths:
            continue
        open_paths[(start, cur)] = True
        if start[0] == "dart" and cur[0] == "dart":
            edges.append((start[1], cur[1]))
    circles = 0
    for node in adj:
        if node not in visited:
            # untouched pure-tag cycle
            circles += 1
            x, prev = node, None
            while x not in visited:
                visited.add(x)
                nbrs = adj[x]
                x, prev = (nbrs[1] if nbrs[0] == prev else nbrs[0]), x
    endpoints = {}
    for (a, b) in open_paths:
        if a in degree1_nodes:
            endpoints[a] = b
        if b in degree1_nodes:
            endpoints[b] = a
    return edges, endpoints, circles


def close_pd(t: TangleDiagram, mode: str) -> PlanarDiagram:
    """Closure as a closed planar diagram (any number of components)."""
    if mode not in (D_CLOSE, N_CLOSE, X_CLOSE):
        raise DiagramError(f"unknown closure mode {mode!r}")
    crossings = [Crossing(c.kind, c.rot, c.sign) for c in t.crossings]
    raw = list(t.raw_edges)

    links: list[tuple] = []
    for a, b in t.wires:
        links.append((("tag", a), ("tag", b)))
    for tag in END_TAGS:
        if t.ends[tag] is not None:
            links.append((("tag", tag), ("dart", t.ends[tag])))
    if mode == X_CLOSE:
        nd = t.max_dart() + 1
        vrot = (nd, nd + 1, nd + 2, nd + 3)  # toward WT, ET, EB, WB
        crossings.append(Crossing(VIRTUAL, vrot))
        for dart, tag in zip(vrot, ("WT", "ET", "EB", "WB")):
            links.append((("tag", tag), ("dart", dart)))
    else:
        pairs = {D_CLOSE: [("WT", "WB"), ("ET", "EB")],
                 N_CLOSE: [("WT", "ET"), ("WB", "EB")]}[mode]
        for a, b in pairs:
            links.append((("tag", a), ("tag", b)))

    edges, _, circles = _resolve_paths(links, degree1_nodes=set())
    raw.extend(edges)
    if circles and crossings:
        # A crossing-free unknot component alongside crossings: keep it as an
        # explicit loop count on the bracket side only.
        raise DiagramError("closure produced a free circle next to crossings")
    return _reorient(crossings, raw, circles=circles)


def close(t: TangleDiagram, mode: str) -> GaussCode:
    """Closure as a Gauss code; errors if the closure is not a knot."""
    d = close_pd(t, mode)
    if d.component_count() != 1:
        raise DiagramError(f"{mode}-closure has {d.component_count()} components")
    return to_gauss(d)


def tangle_sum(t: TangleDiagram, s: TangleDiagram) -> TangleDiagram:
    """Side-by-side sum: t's east ends glue to s's west ends."""
    s2 = s.shifted(t.max_dart() + 1)
    crossings = t.crossings + s2.crossings
    raw = list(t.raw_edges) + list(s2.raw_edges)

    links: list[tuple] = []
    for a, b in t.wires:
        links.append((("tag", "t." + a), ("tag", "t." + b)))
    for a, b in s2.wires:
        links.append((("tag", "s." + a), ("tag", "s." + b)))
    for prefix, tg in (("t.", t), ("s.", s2)):
        for tag in END_TAGS:
            if tg.ends[tag] is not None:
                links.append((("tag", prefix + tag), ("dart", tg.ends[tag])))
    links.append((("tag", "t.ET"), ("tag", "s.WT")))
    links.append((("tag", "t.EB"), ("tag", "s.WB")))

    outer = {("tag", "t.WT"): "WT", ("tag", "t.WB"): "WB",
             ("tag", "s.ET"): "ET", ("tag", "s.EB"): "EB"}
    edges, endpoints, circles = _resolve_paths(links, degree1_nodes=set(outer))
    if circles:
        raise DiagramError("tangle sum produced a closed circle")
    raw.extend(edges)
    ends: dict[str, int | None] = {tag: None for tag in END_TAGS}
    wires = []
    seen = set()
    for node, partner in endpoints.items():
        if node in seen:
            continue
        tag = outer[node]
        if partner[0] == "dart":
            ends[tag] = partner[1]
        else:
            seen.add(partner)
            wires.append((tag, outer[partner]))
    return TangleDiagram(crossings, raw, ends, wires)


def trivial_tangle() -> TangleDiagram:
    """Two uncrossed strands joining the west pair and the east pair.

    Its N-closure is the unknot and its D-closure falls apart into two
    circles.
    """
    return TangleDiagram([], [], {t: None for t in END_TAGS},
                         [("WT", "WB"), ("ET", "EB")])


def bracket_vector(t: TangleDiagram) -> BracketVector:
    """State-sum brackets of the three closures."""
    return BracketVector(bracket_pd(close_pd(t, D_CLOSE)),
                         bracket_pd(close_pd(t, N_CLOSE)),
                         bracket_pd(close_pd(t, X_CLOSE)))


# ---------------------------------------------------------------------------
# Lemma matrix and closure-sum formula
# ---------------------------------------------------------------------------


def _kappa_inv() -> LaurentPoly:
    # (mu - 1)(mu + 2) = A^4 - A^2 - A^-2 + A^-4
    return LaurentPoly("A", {4: 1, 2: -1, -2: -1, -4: 1})


def _a_numerators() -> list[list[LaurentPoly]]:
    one = LaurentPoly.one("A")
    alpha_num = mu() + one            # -A^2 + 1 - A^-2
    beta_num = -one
    return [[alpha_num if i == j else beta_num for j in range(3)] for i in range(3)]


def matrix_A() -> list[list[RationalFn]]:
    """The closure-sum matrix with α on the diagonal and β off it."""
    den = _kappa_inv()
    return [[RationalFn(num, den) for num in row] for row in _a_numerators()]


def closure_sum_bracket(t: TangleDiagram, s: TangleDiagram) -> LaurentPoly:
    """⟨N(t+s)⟩ evaluated through the bilinear closure formula."""
    vt = bracket_vector(t).as_tuple()
    vs = bracket_vector(s).as_tuple()
    anum = _a_numerators()
    total = LaurentPoly.zero("A")
    for i in range(3):
        for j in range(3):
            total = total + vt[i] * anum[i][j] * vs[j]
    return poly_divmod_exact(total, _kappa_inv())


# ---------------------------------------------------------------------------
# The B and BA matrices and the S_n recursion
# ---------------------------------------------------------------------------

# Published reference values; matrix_B() recomputes every entry from the
# D_1..D_9 diagrams and refuses to return on any mismatch, so a drift in the
# diagram encodings or bracket conventions cannot pass silently.
_B_REFERENCE = {
    (0, 0): {12: -1, 0: 1, 4: -1, -4: -1},
    (0, 1): {10: 1, 6: 3, 2: 1, -2: -1},
    (0, 2): {10: 1, 6: -1, 4: -3, 2: -1, 0: 1, -2: 1},
    (1, 0): {6: 1},
    (1, 1): {8: -1, 4: -1},
    (1, 2): {6: 1},
    (2, 0): {10: 1, 8: 1, 4: -2, 2: -1, 0: 1, -2: 1},
    (2, 1): {8: -1, 4: -1, 0: -1},
    (2, 2): {4: -1, 2: 1, 0: 2, -2: 1, -4: -1, -6: -1},
}


class ConventionMismatch(AssertionError):
    """A computed bracket disagrees with its published value."""


def matrix_B() -> list[list[LaurentPoly]]:
    """The 3x3 matrix of brackets of the nine recursion links, recomputed."""
    from . import families
    rows = []
    for r in range(3):
        row = []
        for c in range(3):
            j = 3 * r + c + 1
            val = bracket_pd(families.d_link(j))
            ref = LaurentPoly("A", _B_REFERENCE[(r, c)])
            if val != ref:
                raise ConventionMismatch(
                    f"bracket of D_{j} is {val}, published value is {ref}")
            row.append(val)
        rows.append(row)
    return rows


def ba_matrix() -> tuple[list[list[LaurentPoly]], LaurentPoly]:
    """B·A as (polynomial grid, common denominator)."""
    b = matrix_B()
    anum = _a_numerators()
    grid = []
    for i in range(3):
        row = []
        for j in range(3):
            acc = LaurentPoly.zero("A")
            for k in range(3):
                acc = acc + b[i][k] * anum[k][j]
            row.append(acc)
        grid.append(row)
    return grid, _kappa_inv()


def ba_max() -> MaxPlusMatrix:
    """Max-plus shadow of B·A: entrywise maxdeg minus the denominator degree."""
    grid, den = ba_matrix()
    dd = den.max_degree()
    rows = []
    for row in grid:
        rows.append([BOTTOM if p.is_zero()
                     else MaxPlusDeg(p.max_degree().value - dd.value) for p in row])
    return MaxPlusMatrix(rows)


def sn_bracket_vector(n: int) -> BracketVector:
    """Closure brackets of S_n through the B·A recursion, exactly reduced."""
    if n < 1:
        raise ValueError("n must be positive")
    from . import families
    vec = list(bracket_vector(families.tangle_S(1)).as_tuple())
    grid, den = ba_matrix()
    for _ in range(n - 1):
        nxt = []
        for i in range(3):
            acc = LaurentPoly.zero("A")
            for j in range(3):
                acc = acc + grid[i][j] * vec[j]
            nxt.append(poly_divmod_exact(acc, den))
        vec = nxt
    return BracketVector(*vec)


def vkn_bracket(n: int) -> LaurentPoly:
    """⟨VK_n⟩ along the tangle route: row(T) · A · column(S_n)."""
    if n < 1:
        raise ValueError("n must be positive")
    from . import families
    rowt = bracket_vector(families.tangle_T()).as_tuple()
    vs = sn_bracket_vector(n).as_tuple()
    anum = _a_numerators()
    total = LaurentPoly.zero("A")
    for i in range(3):
        for j in range(3):
            total = total + rowt[i] * anum[i][j] * vs[j]
    return poly_divmod_exact(total, _kappa_inv())


def degree_vector(n: int) -> tuple[MaxPlusDeg, MaxPlusDeg, MaxPlusDeg]:
    """Max-plus iteration of (B·A)_max from the S_1 degree triple."""
    if n < 1:
        raise ValueError("n must be positive")
    from . import families
    vec = list(bracket_vector(families.tangle_S(1)).maxdegs())
    m = ba_max()
    for _ in range(n - 1):
        vec = m.matvec(vec)
    return tuple(vec)

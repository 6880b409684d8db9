"""Diagram representations: Gauss codes and planar diagrams with rotation systems.

A planar diagram is a combinatorial map: every crossing owns four darts listed
in counterclockwise rotation order, and edges pair darts (a directed edge runs
from its tail dart to its head dart).  For a classical crossing the rotation
starts at the incoming understrand, so slot 0 is the under-in port and slot 2
the under-out; the sign then says which remaining slot the overstrand enters
(slot 3 for positive, slot 1 for negative).  Virtual crossings wire slot 0 to
slot 2 and slot 1 to slot 3.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

OVER = "O"
UNDER = "U"


class DiagramError(ValueError):
    """Malformed diagram data or an operation applied to the wrong input."""


# ---------------------------------------------------------------------------
# Gauss codes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Pass:
    crossing: int
    strand: str  # OVER or UNDER
    sign: int    # +1 or -1


class GaussCode:
    """Cyclic sequence of signed over/under passes of a virtual knot diagram."""

    def __init__(self, passes: Iterable[Pass]):
        self.passes = tuple(passes)
        self._validate()

    def _validate(self) -> None:
        seen: dict[int, list[Pass]] = {}
        for p in self.passes:
            if p.strand not in (OVER, UNDER):
                raise DiagramError(f"bad strand marker {p.strand!r}")
            if p.sign not in (1, -1):
                raise DiagramError(f"bad sign {p.sign!r} at crossing {p.crossing}")
            seen.setdefault(p.crossing, []).append(p)
        for cid, ps in seen.items():
            if len(ps) != 2:
                raise DiagramError(f"crossing {cid} occurs {len(ps)} times, expected 2")
            if ps[0].strand == ps[1].strand:
                raise DiagramError(f"crossing {cid} has two {ps[0].strand} passes")
            if ps[0].sign != ps[1].sign:
                raise DiagramError(f"crossing {cid} has inconsistent signs")

    def __len__(self) -> int:
        return len(self.passes)

    @property
    def crossings(self) -> list[int]:
        out, seen = [], set()
        for p in self.passes:
            if p.crossing not in seen:
                seen.add(p.crossing)
                out.append(p.crossing)
        return out

    def sign_of(self, cid: int) -> int:
        for p in self.passes:
            if p.crossing == cid:
                return p.sign
        raise DiagramError(f"unknown crossing {cid}")

    def is_empty(self) -> bool:
        return not self.passes

    def normalized(self) -> "GaussCode":
        """Canonical form: minimal rotation with ids renamed by first appearance."""
        if not self.passes:
            return self
        best = None
        n = len(self.passes)
        for r in range(n):
            rot = self.passes[r:] + self.passes[:r]
            names: dict[int, int] = {}
            key = []
            for p in rot:
                if p.crossing not in names:
                    names[p.crossing] = len(names) + 1
                key.append((names[p.crossing], p.strand, p.sign))
            if best is None or key < best:
                best = key
        return GaussCode(Pass(c, s, g) for c, s, g in best)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GaussCode):
            return NotImplemented
        return self.passes == other.passes

    def __hash__(self) -> int:
        return hash(self.passes)

    def __str__(self) -> str:
        return format_gauss(self)

    def __repr__(self) -> str:
        return f"GaussCode({format_gauss(self)!r})"


_ITEM_RE = re.compile(r"([OU])(\d+)([+-])\Z")


def parse_gauss(text: str) -> GaussCode:
    """Parse the bit-exact grammar ``("O"|"U") digits ("+"|"-")`` joined by commas."""
    if text == "":
        return GaussCode(())
    passes = []
    for item in text.split(","):
        m = _ITEM_RE.match(item)
        if not m:
            raise DiagramError(f"syntax error in gauss code item {item!r}")
        strand, cid, sgn = m.group(1), int(m.group(2)), 1 if m.group(3) == "+" else -1
        passes.append(Pass(cid, strand, sgn))
    return GaussCode(passes)


def format_gauss(g: GaussCode) -> str:
    return ",".join(f"{p.strand}{p.crossing}{'+' if p.sign > 0 else '-'}"
                    for p in g.passes)


def interlaced_pairs(g: GaussCode) -> list[tuple[int, int]]:
    """Crossing pairs whose chords interlace in the chord diagram of the code."""
    pos: dict[int, list[int]] = {}
    for i, p in enumerate(g.passes):
        pos.setdefault(p.crossing, []).append(i)
    ids = list(pos)
    out = []
    for i, a in enumerate(ids):
        a0, a1 = pos[a]
        for b in ids[i + 1:]:
            inside = sum(1 for x in pos[b] if a0 < x < a1)
            if inside == 1:
                out.append((a, b))
    return out


# ---------------------------------------------------------------------------
# Planar diagrams
# ---------------------------------------------------------------------------

CLASSICAL = "X"
VIRTUAL = "V"


@dataclass
class Crossing:
    kind: str                       # CLASSICAL or VIRTUAL
    rot: tuple[int, int, int, int]  # darts in ccw order; slot 0 = under-in if classical
    sign: int = 0                   # +1/-1 for classical, 0 for virtual

    def over_in_slot(self) -> int:
        if self.kind != CLASSICAL:
            raise DiagramError("virtual crossing has no overstrand")
        return 3 if self.sign > 0 else 1


@dataclass(frozen=True)
class Region:
    id: int
    boundary: tuple[tuple[int, int], ...]  # (crossing index, corner index) incidences

    def crossing_ids(self) -> list[int]:
        out, seen = [], set()
        for ci, _ in self.boundary:
            if ci not in seen:
                seen.add(ci)
                out.append(ci)
        return out


class PlanarDiagram:
    """4-valent plane graph with rotation system and directed edges.

    ``edges`` maps a positive label to ``(tail_dart, head_dart)``.  ``circles``
    counts crossing-free closed loops (the crossingless unknot is the diagram
    with no crossings and ``circles == 1``).
    """

    def __init__(self, crossings: Sequence[Crossing], edges: dict[int, tuple[int, int]],
                 base_edge: int | None = None, circles: int = 0,
                 region_names: dict[str, tuple[int, int]] | None = None):
        self.crossings = list(crossings)
        self.edges = dict(edges)
        self.base_edge = base_edge if base_edge is not None else (min(edges) if edges else None)
        self.circles = circles
        self.region_names = dict(region_names or {})
        self._alpha: dict[int, int] = {}
        self._in_darts: set[int] = set()
        for label, (tail, head) in self.edges.items():
            self._alpha[tail] = head
            self._alpha[head] = tail
            self._in_darts.add(head)
        self.validate()

    # -- structural checks -------------------------------------------------

    def validate(self) -> None:
        darts = [d for c in self.crossings for d in c.rot]
        if len(set(darts)) != len(darts):
            raise DiagramError("duplicate dart in rotation system")
        dartset = set(darts)
        ends = [d for pair in self.edges.values() for d in pair]
        if sorted(ends) != sorted(darts):
            raise DiagramError("edges do not cover every dart exactly once")
        if self.circles and self.crossings:
            raise DiagramError("crossing-free loops may not coexist with crossings")
        for c in self.crossings:
            if c.kind == CLASSICAL and c.sign not in (1, -1):
                raise DiagramError("classical crossing needs a sign")
            if c.kind == VIRTUAL and c.sign != 0:
                raise DiagramError("virtual crossing carries no sign")
            for d in self._strand_in_darts(c):
                if d not in self._in_darts:
                    raise DiagramError("edge direction disagrees with crossing direction")
        if self.edges and self.base_edge not in self.edges:
            raise DiagramError(f"base edge {self.base_edge} does not exist")

    def _strand_in_darts(self, c: Crossing) -> list[int]:
        if c.kind == CLASSICAL:
            return [c.rot[0], c.rot[c.over_in_slot()]]
        return [d for d in c.rot if d in self._in_darts]

    # -- dart helpers --------------------------------------------------------

    def dart_location(self, d: int) -> tuple[int, int]:
        for ci, c in enumerate(self.crossings):
            if d in c.rot:
                return ci, c.rot.index(d)
        raise DiagramError(f"unknown dart {d}")

    def alpha(self, d: int) -> int:
        return self._alpha[d]

    def is_in_dart(self, d: int) -> bool:
        return d in self._in_darts

    def through(self, d: int) -> int:
        """Out-dart reached by entering the crossing at in-dart d."""
        ci, slot = self.dart_location(d)
        c = self.crossings[ci]
        if c.kind == VIRTUAL:
            return c.rot[(slot + 2) % 4]
        if slot == 0:
            return c.rot[2]
        if slot != c.over_in_slot():
            raise DiagramError(f"dart {d} is not an entry port")
        return c.rot[4 - slot]  # 3 -> 1 and 1 -> 3

    def edge_of_dart(self, d: int) -> int:
        for label, pair in self.edges.items():
            if d in pair:
                return label
        raise DiagramError(f"dart {d} not on any edge")

    # -- global structure ----------------------------------------------------

    def component_count(self) -> int:
        remaining = set(self._in_darts)
        count = 0
        while remaining:
            d = min(remaining)
            while d in remaining:
                remaining.remove(d)
                d = self._alpha[self.through(d)]
            count += 1
        return count + self.circles

    def classical_count(self) -> int:
        return sum(1 for c in self.crossings if c.kind == CLASSICAL)

    def virtual_count(self) -> int:
        return sum(1 for c in self.crossings if c.kind == VIRTUAL)

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings if c.kind == CLASSICAL)

    def copy(self) -> "PlanarDiagram":
        return PlanarDiagram([Crossing(c.kind, c.rot, c.sign) for c in self.crossings],
                             dict(self.edges), self.base_edge, self.circles,
                             dict(self.region_names))

    def __repr__(self) -> str:
        return (f"PlanarDiagram({self.classical_count()} classical, "
                f"{self.virtual_count()} virtual, circles={self.circles})")


def faces(d: PlanarDiagram) -> list[Region]:
    """All faces of the rotation system, each as a cyclic list of corners.

    Corner ``(ci, s)`` is the sector between rotation slots ``s`` and ``s+1``
    of crossing ``ci``.  A connected diagram with V crossings has V+2 faces.
    """
    if not d.crossings:
        # The crossingless circle bounds two faces with no corners.
        return [Region(0, ()), Region(1, ())] if d.circles else []
    sigma: dict[int, int] = {}
    corner_of: dict[int, tuple[int, int]] = {}
    for ci, c in enumerate(d.crossings):
        for s in range(4):
            sigma[c.rot[s]] = c.rot[(s + 1) % 4]
            corner_of[c.rot[s]] = (ci, s)
    seen: set[int] = set()
    out: list[Region] = []
    for start in sorted(corner_of):
        if start in seen:
            continue
        cycle = []
        x = start
        while x not in seen:
            seen.add(x)
            cycle.append(corner_of[x])
            x = d.alpha(sigma[x])
        out.append(Region(len(out), tuple(cycle)))
    return out


def check_planarity(d: PlanarDiagram) -> None:
    """Assert the Euler face count V+2 of a connected plane diagram."""
    if not d.crossings:
        return
    f = len(faces(d))
    v = len(d.crossings)
    if f != v + 2:
        raise DiagramError(f"rotation system is not planar: {f} faces for {v} crossings")


def region_by_name(d: PlanarDiagram, name: str) -> Region:
    if name not in d.region_names:
        raise DiagramError(f"diagram has no region named {name!r}")
    anchor = d.region_names[name]
    for r in faces(d):
        if anchor in r.boundary:
            return r
    raise DiagramError(f"anchor corner for region {name!r} not found in any face")


def to_gauss(d: PlanarDiagram) -> GaussCode:
    """Walk the single component from the base edge, recording classical passes."""
    if d.component_count() != 1:
        raise DiagramError("to_gauss requires a single-component diagram")
    if not d.crossings:
        return GaussCode(())
    start = d.edges[d.base_edge][1]
    names: dict[int, int] = {}
    passes = []
    dart = start
    visited = 0
    while True:
        ci, slot = d.dart_location(dart)
        c = d.crossings[ci]
        if c.kind == CLASSICAL:
            if ci not in names:
                names[ci] = len(names) + 1
            passes.append(Pass(names[ci], UNDER if slot == 0 else OVER, c.sign))
        dart = d.alpha(d.through(dart))
        visited += 1
        if dart == start:
            break
        if visited > 2 * len(d._alpha):
            raise DiagramError("traversal failed to close up")
    return GaussCode(passes)


def flip_crossing(d: PlanarDiagram, ci: int) -> PlanarDiagram:
    """Exchange over/under at classical crossing ci (sign negates)."""
    if not 0 <= ci < len(d.crossings):
        raise DiagramError(f"crossing index {ci} out of range")
    out = d.copy()
    c = out.crossings[ci]
    if c.kind != CLASSICAL:
        raise DiagramError(f"crossing {ci} is virtual")
    k = c.over_in_slot()
    c.rot = c.rot[k:] + c.rot[:k]
    c.sign = -c.sign
    out.validate()
    return out


# ---------------------------------------------------------------------------
# Gauss code -> planar diagram
# ---------------------------------------------------------------------------


class _Builder:
    """Incremental constructor for planar diagrams."""

    def __init__(self):
        self.crossings: list[Crossing] = []
        self.edges: dict[int, tuple[int, int]] = {}
        self._next_dart = 0
        self._next_edge = 1

    def darts(self, n: int) -> list[int]:
        out = list(range(self._next_dart, self._next_dart + n))
        self._next_dart += n
        return out

    def classical(self, sign: int, rot: Sequence[int]) -> int:
        self.crossings.append(Crossing(CLASSICAL, tuple(rot), sign))
        return len(self.crossings) - 1

    def virtual(self, rot: Sequence[int]) -> int:
        self.crossings.append(Crossing(VIRTUAL, tuple(rot)))
        return len(self.crossings) - 1

    def connect(self, tail: int, head: int) -> int:
        label = self._next_edge
        self._next_edge += 1
        self.edges[label] = (tail, head)
        return label

    def build(self, base_edge: int | None = None, circles: int = 0,
              region_names: dict[str, tuple[int, int]] | None = None) -> PlanarDiagram:
        return PlanarDiagram(self.crossings, self.edges, base_edge, circles, region_names)


def _to_planar_kinks(g: GaussCode) -> PlanarDiagram:
    """Planar realization of a code with no interlaced chords, by kink peeling.

    Works inside out: repeatedly strip an adjacent pair of passes of one
    crossing, then rebuild by inserting curls in reverse order.  Produces no
    virtual crossings.
    """
    # Peel: track arcs with persistent tokens so reinsertion targets survive.
    n2 = len(g.passes)
    arcs = [("arc", i) for i in range(n2)]  # arcs[i] precedes passes[i]
    work = list(zip(arcs, g.passes))
    kinks = []  # (pass_first, token_before, token_loop, merged_token)
    token_counter = n2
    while work:
        m = len(work)
        hit = next(t for t in range(m)
                   if work[t][1].crossing == work[(t + 1) % m][1].crossing)
        a_first, p_first = work[hit]
        a_second, _ = work[(hit + 1) % m]
        a_after = work[(hit + 2) % m][0] if m > 2 else None
        merged = ("arc", token_counter)
        token_counter += 1
        kinks.append((p_first, a_first, a_second, a_after, merged))
        if m == 2:
            rest = []
        else:
            rest = [work[(hit + k) % m] for k in range(2, m)]
            rest[0] = (merged, rest[0][1])
        work = rest

    b = _Builder()
    token_edge: dict[tuple, int] = {}

    def insert_kink(pfirst: Pass, before_tok, loop_tok, after_tok, target_edge: int | None):
        over_first = pfirst.strand == OVER
        fi, fo, si, so = b.darts(4)
        if over_first:
            rot = (si, fo, so, fi) if pfirst.sign > 0 else (si, fi, so, fo)
        else:
            rot = (fi, so, fo, si) if pfirst.sign > 0 else (fi, si, fo, so)
        b.classical(pfirst.sign, rot)
        loop = b.connect(fo, si)
        token_edge[loop_tok] = loop
        if target_edge is None:
            outer = b.connect(so, fi)
            token_edge[before_tok] = outer
            if after_tok is not None:
                token_edge[after_tok] = outer
        else:
            tail, head = b.edges[target_edge]
            del b.edges[target_edge]
            e_before = b.connect(tail, fi)
            e_after = b.connect(so, head)
            token_edge[before_tok] = e_before
            if after_tok is not None:
                token_edge[after_tok] = e_after

    first = True
    for pfirst, before_tok, loop_tok, after_tok, merged in reversed(kinks):
        target = None if first else token_edge.pop(merged)
        insert_kink(pfirst, before_tok, loop_tok, after_tok, target)
        first = False

    base = token_edge[("arc", 0)]
    d = b.build(base_edge=base)
    check_planarity(d)
    return d


def _to_planar_disc(g: GaussCode) -> PlanarDiagram:
    """General planarization: crossings inside a disc, wires routed outside.

    Wire t (joining pass t to pass t+1) leaves the disc radially, runs
    counterclockwise on its own radius level, and re-enters radially.  Every
    radial/arc intersection becomes a virtual crossing, so arbitrary codes
    are realized at the cost of extra virtual crossings.
    """
    n = len(g.crossings)
    ids = {cid: i for i, cid in enumerate(g.crossings)}
    b = _Builder()
    cdarts = []
    for cid in g.crossings:
        rot = b.darts(4)
        b.classical(g.sign_of(cid), rot)
        cdarts.append(rot)

    def pass_ports(p: Pass) -> tuple[int, int]:
        rot = cdarts[ids[p.crossing]]
        if p.strand == UNDER:
            return rot[0], rot[2]
        return (rot[3], rot[1]) if p.sign > 0 else (rot[1], rot[3])

    # Boundary slot of each crossing dart: crossing i owns slots 4i..4i+3.
    slot_of = {}
    for i, rot in enumerate(cdarts):
        for s in range(4):
            slot_of[rot[s]] = 4 * i + s
    nslots = 4 * n

    wires = []  # (slot_a, slot_b, out_dart, in_dart)
    m = len(g.passes)
    for t in range(m):
        _, out_dart = pass_ports(g.passes[t])
        in_dart, _ = pass_ports(g.passes[(t + 1) % m])
        wires.append((slot_of[out_dart], slot_of[in_dart], out_dart, in_dart))

    def ccw_between(a: int, b: int, x: int) -> bool:
        """x strictly inside the ccw interval from a to b (slot angles)."""
        if a == b:
            return False
        return (x - a) % nslots < (b - a) % nslots and x != a and x != b

    # Virtual crossings: later wire's radial at `slot` crosses earlier wire s's arc.
    vxs = []  # records (arc_wire, level=arc_wire, slot, rot darts)
    on_radial: dict[int, list[int]] = {}   # slot -> vx indices (level ascending)
    on_arc: dict[int, list[int]] = {}      # wire -> vx indices (ccw order)
    for t, (a_t, b_t, _, _) in enumerate(wires):
        for slot in (a_t, b_t):
            for s in range(t):
                a_s, b_s, _, _ = wires[s]
                if ccw_between(a_s, b_s, slot):
                    rot = b.darts(4)  # (outward, arc-fwd, inward, arc-bwd) ccw
                    vxs.append((s, slot, rot))
                    on_radial.setdefault(slot, []).append(len(vxs) - 1)
                    on_arc.setdefault(s, []).append(len(vxs) - 1)

    for s, slot, rot in vxs:
        b.virtual(rot)
    for s in on_arc:
        a_s = wires[s][0]
        on_arc[s].sort(key=lambda i: (vxs[i][1] - a_s) % nslots)
    for slot in on_radial:
        on_radial[slot].sort(key=lambda i: vxs[i][0])

    base_edge = None
    for t, (a_t, b_t, out_dart, in_dart) in enumerate(wires):
        chain: list[tuple[int, int]] = [(out_dart, out_dart)]
        # outward radial: virtuals with level < t, ascending
        for i in on_radial.get(a_t, []):
            if vxs[i][0] < t:
                rot = vxs[i][2]
                chain.append((rot[2], rot[0]))  # enter inward side, leave outward
        # arc at level t, ccw: virtuals sitting on this wire's arc
        for i in on_arc.get(t, []):
            rot = vxs[i][2]
            chain.append((rot[3], rot[1]))  # enter from cw side, leave ccw
        # inward radial at b_t: levels < t, descending
        for i in reversed(on_radial.get(b_t, [])):
            if vxs[i][0] < t:
                rot = vxs[i][2]
                chain.append((rot[0], rot[2]))
        chain.append((in_dart, in_dart))
        for (_, tail), (head, _) in zip(chain, chain[1:]):
            label = b.connect(tail, head)
            if t == m - 1 and head == in_dart:
                base_edge = label

    d = b.build(base_edge=base_edge)
    check_planarity(d)
    return d


def to_planar(g: GaussCode) -> PlanarDiagram:
    """Realize a Gauss code in the plane, inserting virtual crossings as needed.

    Codes whose chord diagram has no interlacements are realized with zero
    virtual crossings; all other codes go through the disc router.
    """
    if g.is_empty():
        return PlanarDiagram([], {}, circles=1)
    if not interlaced_pairs(g):
        return _to_planar_kinks(g)
    return _to_planar_disc(g)


# ---------------------------------------------------------------------------
# Planar diagram text form
# ---------------------------------------------------------------------------


_PD_LINE = re.compile(r"(Xp|Xm|V)\((\d+),(\d+),(\d+),(\d+)\)\Z")


def format_planar(d: PlanarDiagram) -> str:
    """One crossing per line as Xp/Xm/V(edge,edge,edge,edge) plus a base line."""
    if not d.crossings:
        return "base 1\n" if d.circles else ""
    lines = []
    for c in d.crossings:
        labels = [d.edge_of_dart(x) for x in c.rot]
        tag = "V" if c.kind == VIRTUAL else ("Xp" if c.sign > 0 else "Xm")
        lines.append(f"{tag}({labels[0]},{labels[1]},{labels[2]},{labels[3]})")
    lines.append(f"base {d.base_edge}")
    return "\n".join(lines) + "\n"


def parse_planar(text: str) -> PlanarDiagram:
    rows = []
    base = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("base "):
            base = int(line.split()[1])
            continue
        m = _PD_LINE.match(line)
        if not m:
            raise DiagramError(f"bad planar diagram line {line!r}")
        rows.append((m.group(1), tuple(int(x) for x in m.groups()[1:])))
    if not rows:
        if base is not None:
            return PlanarDiagram([], {}, circles=1)
        raise DiagramError("empty planar diagram text")

    label_count: dict[int, int] = {}
    for _, labs in rows:
        for e in labs:
            label_count[e] = label_count.get(e, 0) + 1
    bad = [e for e, k in label_count.items() if k != 2]
    if bad:
        raise DiagramError(f"edge labels {sorted(bad)} do not appear exactly twice")

    b = _Builder()
    dart_at: dict[int, list[int]] = {e: [] for e in label_count}
    in_flags: dict[int, bool | None] = {}
    for tag, labs in rows:
        rot = b.darts(4)
        if tag == "V":
            b.virtual(rot)
            for s in range(4):
                in_flags[rot[s]] = None
        else:
            sign = 1 if tag == "Xp" else -1
            b.classical(sign, rot)
            over_in = 3 if sign > 0 else 1
            for s in range(4):
                in_flags[rot[s]] = s in (0, over_in)
        for s in range(4):
            dart_at[labs[s]].append(rot[s])

    # Edge directions: classical ports are decisive; virtual ports propagate
    # (slots 0/2 and 1/3 are one strand each, so one end is in and one out).
    crossings = b.crossings
    dart_rot = {}
    for ci, c in enumerate(crossings):
        for s, dd in enumerate(c.rot):
            dart_rot[dd] = (ci, s)

    changed = True
    while changed:
        changed = False
        for e, (d1, d2) in list(dart_at.items()):
            f1, f2 = in_flags[d1], in_flags[d2]
            if f1 is None and f2 is not None:
                in_flags[d1] = not f2
                changed = True
            elif f2 is None and f1 is not None:
                in_flags[d2] = not f1
                changed = True
        for ci, c in enumerate(crossings):
            if c.kind != VIRTUAL:
                continue
            for a, bb in ((0, 2), (1, 3)):
                fa, fb = in_flags[c.rot[a]], in_flags[c.rot[bb]]
                if fa is None and fb is not None:
                    in_flags[c.rot[a]] = not fb
                    changed = True
                elif fb is None and fa is not None:
                    in_flags[c.rot[bb]] = not fa
                    changed = True
    for e, (d1, d2) in dart_at.items():
        if in_flags[d1] is None:
            raise DiagramError(f"cannot orient edge {e} (virtual-only component)")
        if in_flags[d1] == in_flags[d2]:
            raise DiagramError(f"edge {e} has two heads or two tails")

    edges = {}
    for e, (d1, d2) in dart_at.items():
        head, tail = (d1, d2) if in_flags[d1] else (d2, d1)
        edges[e] = (tail, head)
    if base is None:
        base = min(edges)
    return PlanarDiagram(crossings, edges, base)

"""Generators for the explicit diagram families.

Everything is produced programmatically from block gadgets plus closing
wires, so the block counts scale arbitrarily:

* ``km(m)``       -- the m-block classical knot family with regions R1..Rm
* ``vkn(n)``      -- the (n+1)-block virtual knot family, as a Gauss code
* ``tangle_T``    -- the 2-braid tangle with two classical + two virtual
                     crossings
* ``tangle_S(n)`` -- n chained blocks capped on the east
* ``d_link(j)``   -- the nine closed recursion links, j = 1..9

Crossing rotations are transcribed from the drawn geometry; every builder
output passes the planarity (Euler) check, and the published bracket values
pin the conventions end to end.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import (CLASSICAL, VIRTUAL, Crossing, DiagramError, GaussCode,
                      PlanarDiagram, check_planarity, to_gauss)
from .tangle import (END_TAGS, TangleDiagram, close_pd, tangle_sum,
                     trivial_tangle, _reorient)


class _Frag:
    """Accumulates crossings and unoriented internal edges for a fragment."""

    def __init__(self):
        self.crossings: list[Crossing] = []
        self.raw: list[tuple[int, int]] = []
        self._next = 0

    def darts(self, n: int = 4) -> list[int]:
        out = list(range(self._next, self._next + n))
        self._next += n
        return out

    def classical(self, sign: int, rot) -> None:
        self.crossings.append(Crossing(CLASSICAL, tuple(rot), sign))

    def virtual(self, rot) -> None:
        self.crossings.append(Crossing(VIRTUAL, tuple(rot)))

    def wire(self, a: int, b: int) -> None:
        self.raw.append((a, b))


@dataclass
class _SBlock:
    """Ports of one six-crossing block of the virtual family.

    Flow: W0 -> E0 (bottom wire, not materialized here), W2 -> W1 (hook down
    the west column), E1 -> W3 (up the east column), E3 -> E2 (the long
    strand through the braid).
    """
    w1_out: int
    w2_in: int
    w3_out: int
    e1_in: int
    e2_out: int
    e3_in: int
    classical_start: int  # index of c^1 in the fragment's crossing list


def _s_block(f: _Frag) -> _SBlock:
    start = len(f.crossings)
    # Classical crossings c1..c6; rotation slot 0 is the under-in port.
    c1 = f.darts()   # hook x under the inner-U line heading west   (N,W,S,E)
    c2 = f.darts()   # east column under the same line              (S,E,N,W)
    c3 = f.darts()   # hook x under the long line heading east      (N,W,S,E)
    c4 = f.darts()   # east column under the long line              (S,E,N,W)
    c5 = f.darts()   # braid: west-bound strand under               (SE,NE,NW,SW)
    c6 = f.darts()   # braid: same pattern, east end
    f.classical(+1, c1)
    f.classical(-1, c2)
    f.classical(-1, c3)
    f.classical(+1, c4)
    f.classical(+1, c5)
    f.classical(+1, c6)
    va = f.darts()   # hook x over the upper return line            (N,W,S,E)
    vb = f.darts()   # hook x over the inner-U return               (N,W,S,E)
    vc = f.darts()   # east column over the inner-U return          (N,W,S,E)
    vd = f.darts()   # east column over the upper return            (N,W,S,E)
    ve = f.darts()   # braid virtual, east                          (NE,NW,SW,SE)
    vf = f.darts()   # braid virtual, west
    for v in (va, vb, vc, vd, ve, vf):
        f.virtual(v)

    # Hook strand (enters W2, descends, leaves at W1).
    f.wire(va[2], vb[0])
    f.wire(vb[2], c1[0])
    f.wire(c1[2], c3[0])
    # East column strand (enters E1, ascends, leaves at W3).
    f.wire(c4[2], c2[0])
    f.wire(c2[2], vc[2])
    f.wire(vc[0], vd[2])
    # Long strand (enters E3, west through the braid, U-turn, back east,
    # upper return west, then the lower line east to E2).
    f.wire(c6[2], ve[0])
    f.wire(ve[2], c5[0])
    f.wire(c5[2], vf[0])
    f.wire(vf[2], c2[1])
    f.wire(c2[3], c1[3])
    f.wire(c1[1], vb[1])
    f.wire(vb[3], vc[1])
    f.wire(vc[3], vf[1])
    f.wire(vf[3], c5[3])
    f.wire(c5[1], ve[1])
    f.wire(ve[3], c6[3])
    f.wire(c6[1], vd[3])
    f.wire(vd[1], va[3])
    f.wire(va[1], c3[1])
    f.wire(c3[3], c4[3])

    return _SBlock(w1_out=c3[2], w2_in=va[0], w3_out=vd[0],
                   e1_in=c4[0], e2_out=c4[1], e3_in=c6[0],
                   classical_start=start)


def _t_braid(f: _Frag):
    """The two-classical/two-virtual braid of the tangle T (block c0)."""
    t1 = f.darts()   # (NW,SW,SE,NE): under = west-top strand heading southeast
    t2 = f.darts()
    f.classical(+1, t1)
    f.classical(+1, t2)
    u1 = f.darts()   # (NE,NW,SW,SE)
    u2 = f.darts()
    f.virtual(u1)
    f.virtual(u2)
    # Strand from WT: under t1, up through u1, under t2, up through u2, to ET.
    f.wire(t1[2], u1[2])
    f.wire(u1[0], t2[0])
    f.wire(t2[2], u2[2])
    # Strand from EB: back through u2, over t2, through u1, over t1, to WB.
    f.wire(u2[1], t2[3])
    f.wire(t2[1], u1[3])
    f.wire(u1[1], t1[3])
    ends = {"WT": t1[0], "WB": t1[1], "ET": u2[0], "EB": u2[3]}
    return ends


def tangle_T() -> TangleDiagram:
    f = _Frag()
    ends = _t_braid(f)
    return TangleDiagram(f.crossings, f.raw, ends, [])


def tangle_S(n: int) -> TangleDiagram:
    """n chained blocks with the east cap; ports on the west."""
    if n < 1:
        raise ValueError("n must be positive")
    f = _Frag()
    blocks = [_s_block(f) for _ in range(n)]
    for left, right in zip(blocks, blocks[1:]):
        f.wire(left.e2_out, right.w2_in)
        f.wire(right.w1_out, left.e1_in)
        f.wire(right.w3_out, left.e3_in)
    last = blocks[-1]
    f.wire(last.e2_out, last.e1_in)          # east cap, inner pair
    ends = {"WT": blocks[0].w2_in, "WB": blocks[0].w1_out,
            "ET": blocks[0].w3_out, "EB": last.e3_in}
    return TangleDiagram(f.crossings, f.raw, ends, [])


def vkn_pd(n: int) -> PlanarDiagram:
    """The n-block virtual knot as an oriented planar diagram."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return PlanarDiagram([], {}, circles=1)
    f = _Frag()
    tends = _t_braid(f)
    blocks = [_s_block(f) for _ in range(n)]
    for left, right in zip(blocks, blocks[1:]):
        f.wire(left.e2_out, right.w2_in)
        f.wire(right.w1_out, left.e1_in)
        f.wire(right.w3_out, left.e3_in)
    last = blocks[-1]
    f.wire(last.e2_out, last.e1_in)
    f.wire(tends["ET"], blocks[0].w2_in)     # tangle sum gluing
    f.wire(blocks[0].w1_out, tends["EB"])
    f.wire(blocks[0].w3_out, tends["WT"])    # north closure arc
    f.wire(tends["WB"], last.e3_in)          # south closure arc

    d = _reorient(f.crossings, f.raw)
    # Base the traversal on the north arc so the code starts at block c0.
    for label, (tail, head) in d.edges.items():
        if head == tends["WT"]:
            d.base_edge = label
            break
    check_planarity(d)
    return d


def vkn(n: int) -> GaussCode:
    """Gauss code of the n-block virtual knot; n = 0 is the empty code."""
    if n == 0:
        return GaussCode(())
    return to_gauss(vkn_pd(n))


# ---------------------------------------------------------------------------
# The nine recursion links D_1..D_9
# ---------------------------------------------------------------------------


def d_link(j: int) -> PlanarDiagram:
    """Closed link diagram feeding entry b_rc of the recursion matrix,
    j = 3r + c + 1: one block, west wiring per row r, east wiring per
    column c, with wirings D/N/X for 0/1/2.

    Port stacks run bottom to top: west (bottom line, W1, W2, W3), east
    (bottom line, E1, E2, E3).  D joins the outer and inner pairs, N the
    adjacent pairs, X the interleaved pairs through one virtual crossing.
    """
    if not 1 <= j <= 9:
        raise DiagramError("d_link index must be 1..9")
    r, c = divmod(j - 1, 3)
    f = _Frag()
    blk = _s_block(f)

    links: list[tuple] = []
    links.append((("tag", "W0"), ("tag", "E0")))  # the bottom line itself
    for tagname, dart in (("W1", blk.w1_out), ("W2", blk.w2_in), ("W3", blk.w3_out),
                          ("E1", blk.e1_in), ("E2", blk.e2_out), ("E3", blk.e3_in)):
        links.append((("tag", tagname), ("dart", dart)))

    def add_wiring(side: str, mode: int) -> None:
        if mode == 2:
            rot = f.darts()
            f.virtual(rot)
            # Crossed-arcs rotation, mirror images on the two sides.
            order = (1, 2, 3, 0) if side == "W" else (1, 0, 3, 2)
            for dart, i in zip(rot, order):
                links.append((("dart", dart), ("tag", f"{side}{i}")))
        else:
            pairs = [(0, 3), (1, 2)] if mode == 0 else [(0, 1), (2, 3)]
            for a, b in pairs:
                links.append((("tag", f"{side}{a}"), ("tag", f"{side}{b}")))

    add_wiring("W", r)
    add_wiring("E", c)

    from .tangle import _resolve_paths
    edges, _, circles = _resolve_paths(links, degree1_nodes=set())
    if circles:
        raise DiagramError("recursion link closure produced a free circle")
    d = _reorient(f.crossings, f.raw + edges)
    check_planarity(d)
    return d


# ---------------------------------------------------------------------------
# The classical family K_m
# ---------------------------------------------------------------------------


@dataclass
class _KBlock:
    w10_out: int
    w90_in: int
    w100_out: int
    e10_in: int
    e90_out: int
    e100_in: int
    region_anchor: tuple[int, int]  # (crossing index, corner index) inside R


def _k_block(f: _Frag) -> _KBlock:
    start = len(f.crossings)
    k1 = f.darts()   # lower left column crossing   (N,W,S,E) sign -
    k2 = f.darts()   # (W,S,E,N) sign +
    k3 = f.darts()   # (N,W,S,E) sign +
    k4 = f.darts()   # (E,N,W,S) sign -
    k5 = f.darts()   # (S,E,N,W) sign +
    k6 = f.darts()   # (W,S,E,N) sign -
    k7 = f.darts()   # (S,E,N,W) sign -
    k8 = f.darts()   # (E,N,W,S) sign +
    k9 = f.darts()   # middle diagonal              (NE,NW,SW,SE) sign -
    f.classical(-1, k1)
    f.classical(+1, k2)
    f.classical(+1, k3)
    f.classical(-1, k4)
    f.classical(+1, k5)
    f.classical(-1, k6)
    f.classical(-1, k7)
    f.classical(+1, k8)
    f.classical(-1, k9)

    # Hook strand: enters at W90 and descends the west column to W10.
    f.wire(k4[3], k3[0])
    f.wire(k3[2], k2[3])
    f.wire(k2[1], k1[0])
    # East column strand: enters at E10 and ascends to the top line (W100).
    f.wire(k5[2], k6[1])
    f.wire(k6[3], k7[0])
    f.wire(k7[2], k8[3])
    # Internal strand: E100 in, across the middle, out east at E90.
    f.wire(k8[2], k4[0])
    f.wire(k4[2], k9[1])
    f.wire(k9[3], k2[0])
    f.wire(k2[2], k6[0])
    f.wire(k6[2], k7[1])
    f.wire(k7[3], k3[3])
    f.wire(k3[1], k9[0])
    f.wire(k9[2], k1[1])
    f.wire(k1[3], k5[3])

    return _KBlock(w10_out=k1[2], w90_in=k4[1], w100_out=k8[1],
                   e10_in=k5[0], e90_out=k5[1], e100_in=k8[0],
                   region_anchor=(start + 2, 3))


def km(m: int) -> PlanarDiagram:
    """The m-block classical knot with named regions R1..Rm."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0:
        return PlanarDiagram([], {}, circles=1)
    f = _Frag()
    # West cap: two positive crossings closing the left end.
    w1 = f.darts()   # (NW,SW,SE,NE) sign +
    w2 = f.darts()   # (SE,NE,NW,SW) sign +
    f.classical(+1, w1)
    f.classical(+1, w2)
    f.wire(w1[2], w2[3])
    f.wire(w2[2], w1[3])

    blocks = [_k_block(f) for _ in range(m)]
    for left, right in zip(blocks, blocks[1:]):
        f.wire(right.w10_out, left.e10_in)
        f.wire(left.e90_out, right.w90_in)
        f.wire(right.w100_out, left.e100_in)
    first, last = blocks[0], blocks[-1]
    f.wire(first.w100_out, w1[0])       # top line into the cap
    f.wire(w2[1], first.w90_in)
    f.wire(first.w10_out, w2[0])
    f.wire(w1[1], last.e100_in)         # bottom line east, up the far cap
    f.wire(last.e90_out, last.e10_in)   # east cap, inner pair

    d = _reorient(f.crossings, f.raw)
    for label, (tail, head) in d.edges.items():
        if tail == w1[1]:
            d.base_edge = label
            break
    d.region_names = {f"R{i + 1}": blocks[i].region_anchor for i in range(m)}
    check_planarity(d)
    # The drawn orientation is fixed: re-derivation must not have flipped it.
    _assert_km_orientation(d)
    return d


def _assert_km_orientation(d: PlanarDiagram) -> None:
    signs = [c.sign for c in d.crossings if c.kind == CLASSICAL]
    expected = [1, 1] + [-1, 1, 1, -1, 1, -1, -1, 1, -1] * ((len(signs) - 2) // 9)
    if signs != expected:
        raise DiagramError("K_m orientation drifted from the drawn family")


def family_ids() -> list[str]:
    return ["km", "vkn", "tangle-t", "tangle-s"] + [f"d{j}" for j in range(1, 10)]

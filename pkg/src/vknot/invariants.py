"""Single-diagram invariants: bracket state sum, writhe, f-polynomial, arc
labeling, crossing weights and the affine index polynomial.

The bracket is the full sum over all 2^n smoothing states.  States are
enumerated with crossing ids ascending and the A-split as bit 0; the loop
count of every state in a chunk is found simultaneously with a pointer
doubling cycle count (numpy), so 2^20 states stay in the seconds range.
A structurally independent enumeration (opposite bit order, visited-flag
loop walking, no numpy) is kept alongside as an oracle for small codes.
"""

from __future__ import annotations

import numpy as np

from .diagram import (CLASSICAL, OVER, UNDER, DiagramError, GaussCode,
                      PlanarDiagram)
from .laurent import LaurentPoly, mu

DEFAULT_MAX_BRUTEFORCE = 24


class BruteforceCapExceeded(RuntimeError):
    """State sum refused: too many classical crossings for 2^n enumeration."""


# ---------------------------------------------------------------------------
# State machinery on Gauss codes
# ---------------------------------------------------------------------------

A_SPLIT = "A"
B_SPLIT = "B"


def _code_darts(g: GaussCode):
    """Strand-end bookkeeping: crossing i owns darts 4i..4i+3 as
    (under-in, under-out, over-in, over-out); alpha pairs consecutive passes."""
    order = g.crossings
    index = {cid: i for i, cid in enumerate(order)}
    n = len(order)
    alpha = np.zeros(4 * n, dtype=np.int64)
    m = len(g.passes)
    for t in range(m):
        p, q = g.passes[t], g.passes[(t + 1) % m]
        out = 4 * index[p.crossing] + (1 if p.strand == UNDER else 3)
        inn = 4 * index[q.crossing] + (0 if q.strand == UNDER else 2)
        alpha[out] = inn
        alpha[inn] = out
    return order, index, alpha


def _split_pairing(sign: int, split: str) -> list[tuple[int, int]]:
    """Dart pairing of one smoothing, as offsets (u_in,u_out,o_in,o_out)=(0,1,2,3)."""
    a_pairs = [(0, 3), (1, 2)] if sign > 0 else [(0, 2), (1, 3)]
    b_pairs = [(0, 2), (1, 3)] if sign > 0 else [(0, 3), (1, 2)]
    return a_pairs if split == A_SPLIT else b_pairs


def resolve_state(g: GaussCode, assignment: dict[int, str]):
    """Loop count and split counts of one smoothing state.

    Returns a ``BracketState``-shaped tuple object with fields
    ``choice, a_count, b_count, loops``.
    """
    order, index, alpha = _code_darts(g)
    missing = [cid for cid in order if cid not in assignment]
    if missing:
        raise DiagramError(f"state assignment missing crossings {missing}")
    if g.is_empty():
        return BracketState(dict(assignment), 0, 0, 1)
    n = len(order)
    pair = np.zeros(4 * n, dtype=np.int64)
    a_count = 0
    for cid in order:
        split = assignment[cid]
        if split not in (A_SPLIT, B_SPLIT):
            raise DiagramError(f"bad split {split!r} for crossing {cid}")
        if split == A_SPLIT:
            a_count += 1
        base = 4 * index[cid]
        for x, y in _split_pairing(g.sign_of(cid), split):
            pair[base + x] = base + y
            pair[base + y] = base + x
    loops = _count_loops(pair, alpha)
    return BracketState(dict(assignment), a_count, n - a_count, loops)


class BracketState:
    def __init__(self, choice: dict[int, str], a_count: int, b_count: int, loops: int):
        self.choice = choice
        self.a_count = a_count
        self.b_count = b_count
        self.loops = loops

    def __repr__(self):
        return f"BracketState(a={self.a_count}, b={self.b_count}, loops={self.loops})"


def _count_loops(pair: np.ndarray, alpha: np.ndarray) -> int:
    """Loops of one state: cycles of pair∘alpha come in mirror pairs."""
    f = pair[alpha]
    seen = np.zeros(len(f), dtype=bool)
    cycles = 0
    for start in range(len(f)):
        if seen[start]:
            continue
        x = start
        while not seen[x]:
            seen[x] = True
            x = f[x]
        cycles += 1
    return cycles // 2


# ---------------------------------------------------------------------------
# Bracket polynomial
# ---------------------------------------------------------------------------


def _bracket_from_tables(n: int, alpha: np.ndarray, pair_a: np.ndarray,
                         pair_b: np.ndarray, extra_loops: int,
                         chunk_bits: int = 13) -> LaurentPoly:
    """Shared state-sum core: full enumeration of all 2^n states.

    ``pair_a``/``pair_b`` give each dart's partner under the A- and B-split of
    its own crossing; dart d belongs to crossing d//4.
    """
    ndarts = len(alpha)
    counts: dict[tuple[int, int], int] = {}
    total = 1 << n
    chunk = min(total, 1 << chunk_bits)
    crossing_of = np.arange(ndarts, dtype=np.int64) // 4
    doublings = max(1, int(np.ceil(np.log2(ndarts))) + 1)
    pack = 4 * ndarts  # loops never reach this
    for lo in range(0, total, chunk):
        states = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        bits = (states[:, None] >> crossing_of[None, :]) & 1  # 1 = A-split
        pair = np.where(bits == 1, pair_a[None, :], pair_b[None, :])
        f = np.take_along_axis(pair, np.broadcast_to(alpha, pair.shape), axis=1)
        m = np.broadcast_to(np.arange(ndarts, dtype=np.int64), f.shape).copy()
        g = f
        for _ in range(doublings):
            m = np.minimum(m, np.take_along_axis(m, g, axis=1))
            g = np.take_along_axis(g, g, axis=1)
        ncyc = (m == np.arange(ndarts, dtype=np.int64)[None, :]).sum(axis=1)
        loops = ncyc // 2 + extra_loops
        acount = np.zeros(len(states), dtype=np.int64)
        for i in range(n):
            acount += (states >> i) & 1
        key = acount * pack + loops
        uniq, cnt = np.unique(key, return_counts=True)
        for k, c in zip(uniq.tolist(), cnt.tolist()):
            a, l = divmod(k, pack)
            counts[(2 * a - n, l)] = counts.get((2 * a - n, l), 0) + c

    loop_val = mu("A")
    powers: dict[int, LaurentPoly] = {}
    result = LaurentPoly.zero("A")
    for (exp, loops), c in sorted(counts.items()):
        if loops - 1 not in powers:
            powers[loops - 1] = loop_val ** (loops - 1)
        result = result + powers[loops - 1].shift(exp).scale(c)
    return result


def bracket(g: GaussCode, max_bruteforce: int = DEFAULT_MAX_BRUTEFORCE) -> LaurentPoly:
    """Kauffman bracket ⟨D⟩ = Σ_S A^(a-b) (-A²-A⁻²)^(loops-1) over all states."""
    n = len(g.crossings)
    if n == 0:
        return LaurentPoly.one("A")
    if n > max_bruteforce:
        raise BruteforceCapExceeded(
            f"{n} crossings exceed the cap of {max_bruteforce}; use the tangle route")
    order, index, alpha = _code_darts(g)
    pair_a = np.zeros(4 * n, dtype=np.int64)
    pair_b = np.zeros(4 * n, dtype=np.int64)
    for cid in order:
        base = 4 * index[cid]
        for x, y in _split_pairing(g.sign_of(cid), A_SPLIT):
            pair_a[base + x] = base + y
            pair_a[base + y] = base + x
        for x, y in _split_pairing(g.sign_of(cid), B_SPLIT):
            pair_b[base + x] = base + y
            pair_b[base + y] = base + x
    return _bracket_from_tables(n, alpha, pair_a, pair_b, extra_loops=0)


def bracket_pd(d: PlanarDiagram, max_bruteforce: int = DEFAULT_MAX_BRUTEFORCE) -> LaurentPoly:
    """Bracket of a closed planar diagram; works for any number of components.

    Virtual crossings pass strands straight through every state, so they are
    contracted out of the dart structure before enumeration.
    """
    order = [ci for ci, c in enumerate(d.crossings) if c.kind == CLASSICAL]
    n = len(order)
    if n > max_bruteforce:
        raise BruteforceCapExceeded(
            f"{n} crossings exceed the cap of {max_bruteforce}; use the tangle route")
    if not d.crossings:
        return mu("A") ** (d.circles - 1) if d.circles else LaurentPoly.one("A")

    # Pack classical crossing k's rotation into darts 4k..4k+3.
    pos: dict[int, int] = {}
    for k, ci in enumerate(order):
        for s, dart in enumerate(d.crossings[ci].rot):
            pos[dart] = 4 * k + s
    through: dict[int, int] = {}
    for c in d.crossings:
        if c.kind == VIRTUAL:
            for s in range(4):
                through[c.rot[s]] = c.rot[(s + 2) % 4]
    raw_alpha = {}
    for tail, head in d.edges.values():
        raw_alpha[tail] = head
        raw_alpha[head] = tail

    def skip_virtuals(dart: int) -> int:
        while dart in through:
            dart = raw_alpha[through[dart]]
        return dart

    if n > 0:
        alpha = np.zeros(4 * n, dtype=np.int64)
        for dart, p in pos.items():
            alpha[p] = pos[skip_virtuals(raw_alpha[dart])]
        pair_a = np.zeros(4 * n, dtype=np.int64)
        pair_b = np.zeros(4 * n, dtype=np.int64)
        for k in range(n):
            for x, y in ((0, 1), (2, 3)):
                pair_a[4 * k + x], pair_a[4 * k + y] = 4 * k + y, 4 * k + x
            for x, y in ((1, 2), (3, 0)):
                pair_b[4 * k + x], pair_b[4 * k + y] = 4 * k + y, 4 * k + x
        return _bracket_from_tables(n, alpha, pair_a, pair_b, extra_loops=d.circles)

    # Virtual-only diagram: every state is the same immersed collection.
    loops = 0
    remaining = set(raw_alpha)
    while remaining:
        x = next(iter(remaining))
        while x in remaining:
            remaining.remove(x)
            y = through[x]
            remaining.discard(y)
            x = raw_alpha[y]
        loops += 1
    return mu("A") ** (loops + d.circles - 1)


def bracket_oracle(g: GaussCode) -> LaurentPoly:
    """Independent bracket: opposite bit order, explicit loop walking, no numpy.

    Kept deliberately separate from :func:`bracket` for cross-validation.
    """
    order = list(reversed(g.crossings))
    n = len(order)
    if n == 0:
        return LaurentPoly.one("A")
    if n > 16:
        raise BruteforceCapExceeded("oracle bracket is for small codes only")
    index = {cid: i for i, cid in enumerate(order)}
    m = len(g.passes)
    alpha: dict[int, int] = {}
    for t in range(m):
        p, q = g.passes[t], g.passes[(t + 1) % m]
        out = 4 * index[p.crossing] + (1 if p.strand == UNDER else 3)
        inn = 4 * index[q.crossing] + (0 if q.strand == UNDER else 2)
        alpha[out] = inn
        alpha[inn] = out
    loop_val = mu("A")
    total = LaurentPoly.zero("A")
    for state in range((1 << n) - 1, -1, -1):
        pair: dict[int, int] = {}
        a_count = 0
        for cid in order:
            i = index[cid]
            split = B_SPLIT if (state >> i) & 1 else A_SPLIT
            if split == A_SPLIT:
                a_count += 1
            for x, y in _split_pairing(g.sign_of(cid), split):
                pair[4 * i + x] = 4 * i + y
                pair[4 * i + y] = 4 * i + x
        unvisited = set(range(4 * n))
        loops = 0
        while unvisited:
            x = next(iter(unvisited))
            while x in unvisited:
                unvisited.remove(x)
                y = pair[alpha[x]]
                unvisited.discard(alpha[x])
                x = y
            loops += 1
        total = total + (loop_val ** (loops - 1)).shift(2 * a_count - n)
    return total


# ---------------------------------------------------------------------------
# Writhe and f-polynomial
# ---------------------------------------------------------------------------


def writhe(g: GaussCode) -> int:
    """Sum of the signs of all classical crossings."""
    return sum(g.sign_of(cid) for cid in g.crossings)


def f_polynomial(g: GaussCode, max_bruteforce: int = DEFAULT_MAX_BRUTEFORCE) -> LaurentPoly:
    """f_D(A) = (-A³)^(-w(D)) ⟨D⟩, the writhe-normalized bracket."""
    return normalize_bracket(bracket(g, max_bruteforce), writhe(g))


def normalize_bracket(br: LaurentPoly, w: int) -> LaurentPoly:
    sign = 1 if w % 2 == 0 else -1
    return br.shift(-3 * w).scale(sign)


# ---------------------------------------------------------------------------
# Arc labeling and the affine index polynomial
# ---------------------------------------------------------------------------


class ArcLabeling:
    """Integer labels on the arcs between consecutive classical passes.

    Arc k is the segment entered after the k-th pass; arc 0 is labeled 0.
    """

    def __init__(self, labels: dict[int, int]):
        self.labels = dict(labels)

    def __getitem__(self, k: int) -> int:
        return self.labels[k]

    def __len__(self) -> int:
        return len(self.labels)


def _label_step(p) -> int:
    # Overstrand decrements at a positive crossing and increments at a
    # negative one; the understrand does the opposite.
    if (p.sign > 0) == (p.strand == OVER):
        return -1
    return 1


def arc_labels(g: GaussCode) -> ArcLabeling:
    if g.is_empty():
        return ArcLabeling({0: 0})
    m = len(g.passes)
    if sum(_label_step(p) for p in g.passes) != 0:
        raise DiagramError("arc labeling does not close up (not a knot code)")
    labels = {}
    cur = 0
    labels[0] = 0
    for k in range(1, m):
        cur += _label_step(g.passes[k])
        labels[k] = cur
    return ArcLabeling(labels)


def crossing_weight(g: GaussCode, labeling: ArcLabeling, cid: int) -> int:
    """Index value W_D(c) = sgn(c)(a - b - 1) with a, b the incoming labels."""
    m = len(g.passes)
    over_in = under_in = None
    for t, p in enumerate(g.passes):
        if p.crossing == cid:
            incoming = labeling[(t - 1) % m]
            if p.strand == OVER:
                over_in = incoming
            else:
                under_in = incoming
    if over_in is None or under_in is None:
        raise DiagramError(f"unknown crossing {cid}")
    sign = g.sign_of(cid)
    if sign > 0:
        return over_in - under_in - 1
    return -(under_in - over_in - 1)


def affine_index(g: GaussCode) -> LaurentPoly:
    """P_D(t) = Σ_c sgn(c)(t^W(c) - 1) over classical crossings."""
    labeling = arc_labels(g)
    total = LaurentPoly.zero("t")
    for cid in g.crossings:
        w = crossing_weight(g, labeling, cid)
        s = g.sign_of(cid)
        total = total + LaurentPoly("t", {w: s}) - LaurentPoly("t", {0: s})
    return total

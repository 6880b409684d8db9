"""Kawauchi's c0 coefficient polynomial via its three computation rules.

Rule 1: c0(unknot) = 1.
Rule 2: x·c0(L+) - c0(L-) = c0(L0) for a skein triple whose L+ and L- are
knots and whose L0 is a 2-component link.
Rule 3: c0(K1 ∪ K2) = (x-1)·x^(-λ)·c0(K1)·c0(K2) for a 2-component link
with linking number λ and knot components.

Trees of these resolutions are evaluated exactly; the only divisions are by
powers of x, which are exponent shifts in the Laurent ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .laurent import LaurentPoly

PLUS = "+"
MINUS = "-"


@dataclass(frozen=True)
class Unknot:
    pass


@dataclass(frozen=True)
class CrossingResolve:
    role: str                      # PLUS or MINUS: the sign of the resolved crossing
    switched: "SkeinNode"          # the crossing-changed knot
    smoothed: "TwoComponent"       # the oriented smoothing


@dataclass(frozen=True)
class TwoComponent:
    linking: int
    comp1: "SkeinNode"
    comp2: "SkeinNode"


SkeinNode = Union[Unknot, CrossingResolve, TwoComponent]

UNKNOT = Unknot()


class SkeinError(ValueError):
    pass


def eval_c0(node: SkeinNode) -> LaurentPoly:
    """Evaluate a skein tree to the c0 polynomial in x."""
    if isinstance(node, Unknot):
        return LaurentPoly.one("x")
    if isinstance(node, TwoComponent):
        if isinstance(node.comp1, TwoComponent) or isinstance(node.comp2, TwoComponent):
            raise SkeinError("rule 3 components must be knots, not links")
        x_minus_1 = LaurentPoly("x", {1: 1, 0: -1})
        prod = eval_c0(node.comp1) * eval_c0(node.comp2)
        return (x_minus_1 * prod).shift(-node.linking)
    if isinstance(node, CrossingResolve):
        if not isinstance(node.smoothed, TwoComponent):
            raise SkeinError("the smoothing of a knot crossing is a 2-component link")
        sw = eval_c0(node.switched)
        sm = eval_c0(node.smoothed)
        if node.role == PLUS:
            # x·c0(this) = c0(switched) + c0(smoothed)
            return (sw + sm).shift(-1)
        if node.role == MINUS:
            # c0(this) = x·c0(switched) - c0(smoothed)
            return sw.shift(1) - sm
        raise SkeinError(f"bad crossing role {node.role!r}")
    raise SkeinError(f"not a skein node: {node!r}")


def c0_Lm(m: int) -> LaurentPoly:
    """Closed recursion c0(L_m) = 1 - (x-1)² c0(L_{m-1}) with c0(L_0) = 1."""
    if m < 0:
        raise ValueError("m must be non-negative")
    one = LaurentPoly.one("x")
    sq = LaurentPoly("x", {2: 1, 1: -2, 0: 1})  # (x-1)^2
    cur = one
    for _ in range(m):
        cur = one - sq * cur
    return cur


def c0_Km(m: int) -> LaurentPoly:
    """c0(K_m) = (1/x)(1 + (x-1) c0(L_m)); K_0 is the unknot."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0:
        return LaurentPoly.one("x")
    x_minus_1 = LaurentPoly("x", {1: 1, 0: -1})
    return (LaurentPoly.one("x") + x_minus_1 * c0_Lm(m)).shift(-1)


def build_km_tree(m: int) -> SkeinNode:
    """The explicit resolution tree of the m-block knot family.

    One unrolled level resolves a positive crossing into the unknot plus a
    split-off component, steps through a negative crossing, and lands on the
    previous level, mirroring the closed recursion of :func:`c0_Km`.
    """
    if m < 1:
        raise ValueError("m must be positive")

    def lm(k: int) -> SkeinNode:
        if k == 0:
            return UNKNOT
        lprime = CrossingResolve(PLUS, UNKNOT, TwoComponent(0, UNKNOT, lm(k - 1)))
        return CrossingResolve(MINUS, UNKNOT, TwoComponent(-1, UNKNOT, lprime))

    return CrossingResolve(PLUS, UNKNOT, TwoComponent(0, UNKNOT, lm(m)))


def tree_depth(node: SkeinNode) -> int:
    if isinstance(node, Unknot):
        return 1
    if isinstance(node, TwoComponent):
        return 1 + max(tree_depth(node.comp1), tree_depth(node.comp2))
    return 1 + max(tree_depth(node.switched), tree_depth(node.smoothed))


# -- text form ----------------------------------------------------------------


def format_skein(node: SkeinNode) -> str:
    if isinstance(node, Unknot):
        return "U"
    if isinstance(node, TwoComponent):
        return f"L({node.linking},{format_skein(node.comp1)},{format_skein(node.comp2)})"
    return f"R{node.role}({format_skein(node.switched)},{format_skein(node.smoothed)})"


def parse_skein(text: str) -> SkeinNode:
    """Parse the nested form ``U``, ``R+(a,b)``, ``R-(a,b)``, ``L(n,a,b)``."""
    s = "".join(text.split())
    node, rest = _parse_node(s)
    if rest:
        raise SkeinError(f"trailing input {rest!r}")
    return node


def _parse_node(s: str):
    if s.startswith("U"):
        return UNKNOT, s[1:]
    if s.startswith("R+(") or s.startswith("R-("):
        role = s[1]
        a, rest = _parse_node(s[3:])
        if not rest.startswith(","):
            raise SkeinError("expected ',' in R node")
        b, rest = _parse_node(rest[1:])
        if not rest.startswith(")"):
            raise SkeinError("expected ')' in R node")
        if not isinstance(b, TwoComponent):
            raise SkeinError("second child of R must be an L node")
        return CrossingResolve(role, a, b), rest[1:]
    if s.startswith("L("):
        body = s[2:]
        i = 0
        while i < len(body) and (body[i].isdigit() or body[i] == "-"):
            i += 1
        if i == 0 or not body[i:].startswith(","):
            raise SkeinError("expected integer linking number in L node")
        lam = int(body[:i])
        a, rest = _parse_node(body[i + 1:])
        if not rest.startswith(","):
            raise SkeinError("expected ',' in L node")
        b, rest = _parse_node(rest[1:])
        if not rest.startswith(")"):
            raise SkeinError("expected ')' in L node")
        return TwoComponent(lam, a, b), rest[1:]
    raise SkeinError(f"cannot parse skein node at {s[:20]!r}")

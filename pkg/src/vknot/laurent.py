"""Exact one-variable Laurent polynomial arithmetic plus the max-plus degree algebra.

Polynomials carry a variable tag ("A", "t" or "x"); mixing tags in a binary
operation is an error, never a coercion.  Coefficients are Python ints, so
they never overflow.  All values are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


class VariableMismatch(ValueError):
    """Raised when two polynomials with different variable tags are combined."""


class InexactDivision(ArithmeticError):
    """Raised when an exact Laurent division leaves a remainder."""


class LaurentPoly:
    """Laurent polynomial with integer coefficients, stored sparsely.

    The zero polynomial has an empty term map.  Stored coefficients are
    never zero.
    """

    __slots__ = ("variable", "_terms")

    def __init__(self, variable: str, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        self.variable = variable
        cleaned: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coef in items:
            if coef:
                cleaned[int(exp)] = cleaned.get(int(exp), 0) + int(coef)
                if cleaned[int(exp)] == 0:
                    del cleaned[int(exp)]
        self._terms = cleaned

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, variable: str) -> "LaurentPoly":
        return cls(variable)

    @classmethod
    def one(cls, variable: str) -> "LaurentPoly":
        return cls(variable, {0: 1})

    @classmethod
    def monomial(cls, variable: str, exp: int, coef: int = 1) -> "LaurentPoly":
        return cls(variable, {exp: coef})

    # -- basic queries ----------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def max_degree(self) -> "MaxPlusDeg":
        """Largest exponent with nonzero coefficient; BOTTOM for zero."""
        if not self._terms:
            return BOTTOM
        return MaxPlusDeg(max(self._terms))

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no minimum degree")
        return min(self._terms)

    def eval_at_one(self) -> int:
        """Sum of all coefficients, i.e. the value at variable = 1."""
        return sum(self._terms.values())

    # -- ring operations --------------------------------------------------

    def _check(self, other: "LaurentPoly") -> None:
        if self.variable != other.variable:
            raise VariableMismatch(
                f"cannot combine polynomials in {self.variable!r} and {other.variable!r}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
            if out[e] == 0:
                del out[e]
        return LaurentPoly(self.variable, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.variable, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.variable, out)

    def scale(self, k: int) -> "LaurentPoly":
        return LaurentPoly(self.variable, {e: k * c for e, c in self._terms.items()})

    def shift(self, n: int) -> "LaurentPoly":
        """Multiply by variable**n (n may be negative); always exact."""
        return LaurentPoly(self.variable, {e + n: c for e, c in self._terms.items()})

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are not defined for LaurentPoly")
        result = LaurentPoly.one(self.variable)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute_inverse(self) -> "LaurentPoly":
        """Apply variable -> variable**-1 (exponent negation)."""
        return LaurentPoly(self.variable, {-e: c for e, c in self._terms.items()})

    # -- equality / hashing -----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variable == other.variable and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.variable, tuple(sorted(self._terms.items()))))

    # -- text / JSON forms --------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.variable!r}, {format_poly(self)!r})"

    def to_json_obj(self) -> dict:
        return {
            "variable": self.variable,
            "terms": [{"exp": e, "coef": c} for e, c in sorted(self._terms.items())],
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "LaurentPoly":
        return cls(obj["variable"], {int(t["exp"]): int(t["coef"]) for t in obj["terms"]})


def format_poly(p: LaurentPoly) -> str:
    """Canonical text form: terms ascending by exponent, explicit signs.

    Examples: ``0``, ``1``, ``-A^-4 + 1 - A^4 - A^12``, ``-t^-2 + 2 - t^2``.
    """
    if p.is_zero():
        return "0"
    pieces: list[str] = []
    for e in sorted(p.terms):
        c = p.coeff(e)
        if e == 0:
            mono = str(abs(c))
        else:
            var = p.variable if e == 1 else f"{p.variable}^{e}"
            mono = var if abs(c) == 1 else f"{abs(c)}{var}"
        if not pieces:
            pieces.append(f"-{mono}" if c < 0 else mono)
        else:
            pieces.append(f"- {mono}" if c < 0 else f"+ {mono}")
    return " ".join(pieces)


def parse_poly(text: str, variable: str) -> LaurentPoly:
    """Parse the canonical text form back into a polynomial."""
    text = text.strip()
    if text == "0":
        return LaurentPoly.zero(variable)
    terms: dict[int, int] = {}
    for chunk in text.replace("- ", "-").replace("+ ", "+").split():
        sign = 1
        if chunk.startswith("-"):
            sign, chunk = -1, chunk[1:]
        elif chunk.startswith("+"):
            chunk = chunk[1:]
        if variable in chunk:
            head, _, tail = chunk.partition(variable)
            coef = int(head) if head else 1
            exp = int(tail[1:]) if tail.startswith("^") else 1
        else:
            coef, exp = int(chunk), 0
        terms[exp] = terms.get(exp, 0) + sign * coef
    return LaurentPoly(variable, terms)


# -- exact division and rational functions ---------------------------------


def poly_divmod_exact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact quotient num/den in the Laurent ring; InexactDivision otherwise."""
    num._check(den)
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return LaurentPoly.zero(num.variable)
    # Shift both to ordinary polynomials and long-divide from the top.
    nmin, dmin = num.min_degree(), den.min_degree()
    rem = {e - nmin: c for e, c in num.terms.items()}
    dvs = {e - dmin: c for e, c in den.terms.items()}
    ddeg = max(dvs)
    dlead = dvs[ddeg]
    quot: dict[int, int] = {}
    while rem:
        rdeg = max(rem)
        if rdeg < ddeg:
            raise InexactDivision(f"{num} is not divisible by {den}")
        lead = rem[rdeg]
        if lead % dlead:
            raise InexactDivision(f"{num} is not divisible by {den}")
        q = lead // dlead
        qexp = rdeg - ddeg
        quot[qexp] = q
        for e, c in dvs.items():
            k = e + qexp
            rem[k] = rem.get(k, 0) - q * c
            if rem[k] == 0:
                del rem[k]
    return LaurentPoly(num.variable, {e + nmin - dmin: c for e, c in quot.items()})


@dataclass(frozen=True)
class RationalFn:
    """Lazily unreduced quotient of Laurent polynomials.

    Kept unreduced on purpose: the tangle pipeline guarantees every value we
    finally extract divides exactly, so no Laurent gcd is ever needed.
    """

    num: LaurentPoly
    den: LaurentPoly

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("RationalFn with zero denominator")
        self.num._check(self.den)

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalFn":
        return cls(p, LaurentPoly.one(p.variable))

    def __add__(self, other: "RationalFn") -> "RationalFn":
        return RationalFn(self.num * other.den + other.num * self.den,
                          self.den * other.den)

    def __mul__(self, other: "RationalFn") -> "RationalFn":
        return RationalFn(self.num * other.num, self.den * other.den)

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalFn):
            return NotImplemented
        # Cross-multiplicative equality: p/q == r/s iff p*s == r*q.
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RationalFn is unhashable (equality is cross-multiplicative)")

    def reduce_exact(self) -> LaurentPoly:
        """The exact polynomial quotient; raises InexactDivision on failure."""
        return poly_divmod_exact(self.num, self.den)


# -- max-plus (tropical) degree algebra -------------------------------------


@dataclass(frozen=True, order=False)
class MaxPlusDeg:
    """A degree in the max-plus semiring; value None is BOTTOM (zero poly)."""

    value: int | None = None

    def is_bottom(self) -> bool:
        return self.value is None

    def __add__(self, other: "MaxPlusDeg") -> "MaxPlusDeg":
        if self.value is None or other.value is None:
            return BOTTOM
        return MaxPlusDeg(self.value + other.value)

    def max(self, other: "MaxPlusDeg") -> "MaxPlusDeg":
        if self.value is None:
            return other
        if other.value is None:
            return self
        return MaxPlusDeg(max(self.value, other.value))

    def __le__(self, other: "MaxPlusDeg") -> bool:
        if self.value is None:
            return True
        if other.value is None:
            return False
        return self.value <= other.value

    def __str__(self) -> str:
        return "BOTTOM" if self.value is None else str(self.value)


BOTTOM = MaxPlusDeg(None)


class MaxPlusMatrix:
    """Dense matrix over the max-plus degree semiring."""

    def __init__(self, entries: Sequence[Sequence[MaxPlusDeg]]):
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(row) != self.cols for row in self.entries):
            raise ValueError("ragged max-plus matrix")

    def matvec(self, v: Sequence[MaxPlusDeg]) -> list[MaxPlusDeg]:
        """out_i = max_j (M_ij + v_j) with BOTTOM absorbing under +."""
        if len(v) != self.cols:
            raise ValueError(f"dimension mismatch: {self.cols} columns vs vector of {len(v)}")
        out = []
        for row in self.entries:
            acc = BOTTOM
            for m, x in zip(row, v):
                acc = acc.max(m + x)
            out.append(acc)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MaxPlusMatrix):
            return NotImplemented
        return self.entries == other.entries


# -- spec-facing functional aliases -----------------------------------------


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def poly_maxdeg(p: LaurentPoly) -> MaxPlusDeg:
    return p.max_degree()


def poly_eval_at_one(p: LaurentPoly) -> int:
    return p.eval_at_one()


def rat_reduce_exact(r: RationalFn) -> LaurentPoly:
    return r.reduce_exact()


def maxplus_matvec(m: MaxPlusMatrix, v: Sequence[MaxPlusDeg]) -> list[MaxPlusDeg]:
    return m.matvec(v)


def mu(variable: str = "A") -> LaurentPoly:
    """The loop value -A^2 - A^-2 of the bracket state sum."""
    return LaurentPoly(variable, {2: -1, -2: -1})

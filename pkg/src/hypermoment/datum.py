"""Hypergeometric data {alpha, beta} and their validity flags.

Parameters are rationals taken modulo 1 and stored in [0, 1); the entry 1 of
beta is therefore stored as 0.  Named families:

* ``HD(s, t)``    = {{1/s, 1 - 1/s}, {1, 1/t}}
* ``HD(2, s, t)`` = {{1/2, 1/s, 1 - 1/s}, {1, 1/t, 1 - 1/t}}
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import DenominatorTooLarge

MAX_DENOMINATOR = 24


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _mod1(x) -> Fraction:
    f = Fraction(x)
    return f - (f.numerator // f.denominator)


def _defined_over_q(params: tuple[Fraction, ...]) -> bool:
    # each denominator's primitive classes must appear with equal multiplicity
    counts = Counter(params)
    for s in {a.denominator for a in params}:
        mult = {counts.get(Fraction(j, s), 0) for j in range(s) if gcd(j, s) == 1}
        if len(mult) != 1:
            return False
    return True


def _interlace(alpha: tuple[Fraction, ...], beta: tuple[Fraction, ...]) -> bool:
    pts = sorted([(a, 0) for a in alpha] + [(b, 1) for b in beta])
    if len({x for x, _ in pts}) != len(pts):
        return False
    labels = [lab for _, lab in pts]
    return all(labels[i] != labels[i + 1] for i in range(len(labels) - 1))


@dataclass(frozen=True)
class HGDatum:
    """A validated hypergeometric datum.

    ``alpha`` and ``beta`` are sorted tuples of Fractions in [0, 1).  ``M``
    is the least common denominator.  The three flags are informational;
    evaluators themselves insist on ``defined_over_Q and primitive``.
    """

    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]
    M: int
    defined_over_Q: bool
    primitive: bool
    algebraic: bool
    name: str | None = field(default=None, compare=False)

    @property
    def length(self) -> int:
        return len(self.alpha)

    @property
    def zigzag_min(self) -> int:
        """``min_x #{b <= x} - #{a <= x}`` over x in [0, 1)."""
        return min(sum(b <= x for b in self.beta) - sum(a <= x for a in self.alpha)
                   for x in self.alpha + self.beta)

    @property
    def scale(self) -> int:
        """s such that ``p^s * H_p`` is an integer (s = -zigzag_min)."""
        return max(0, -self.zigzag_min)

    def label(self) -> str:
        if self.name:
            return self.name
        fmt = lambda xs: ",".join(str(x) for x in xs)
        return f"{{{fmt(self.alpha)};{fmt(self.beta)}}}"

    def __str__(self) -> str:
        return self.label()


def validate_datum(alpha, beta, name: str | None = None) -> HGDatum:
    """Normalize parameters mod 1 and compute M and the three flags.

    Raises :class:`DenominatorTooLarge` past denominator 24 and
    ``ValueError`` when the two multisets differ in size.
    """
    a = tuple(sorted(_mod1(x) for x in alpha))
    b = tuple(sorted(_mod1(x) for x in beta))
    if len(a) != len(b) or not a:
        raise ValueError("alpha and beta must be non-empty and of equal length")
    for x in a + b:
        if x.denominator > MAX_DENOMINATOR:
            raise DenominatorTooLarge(f"denominator of {x} exceeds {MAX_DENOMINATOR}")
    M = 1
    for x in a + b:
        M = _lcm(M, x.denominator)
    return HGDatum(
        alpha=a,
        beta=b,
        M=M,
        defined_over_Q=_defined_over_q(a) and _defined_over_q(b),
        primitive=not set(a) & set(b),
        algebraic=_interlace(a, b),
        name=name,
    )


def hd(*args: int) -> HGDatum:
    """Named datum ``HD(s, t)`` or ``HD(2, s, t)``."""
    if len(args) == 2:
        s, t = args
        return validate_datum([Fraction(1, s), 1 - Fraction(1, s)],
                              [0, Fraction(1, t)], name=f"HD({s},{t})")
    if len(args) == 3 and args[0] == 2:
        _, s, t = args
        return validate_datum([Fraction(1, 2), Fraction(1, s), 1 - Fraction(1, s)],
                              [0, Fraction(1, t), 1 - Fraction(1, t)],
                              name=f"HD(2,{s},{t})")
    raise ValueError(f"no named datum HD{args}")


def hd_d(d: int) -> HGDatum:
    """``HD_d = HD(d, 1)``, the datum attached to the elliptic family of index d."""
    return hd(d, 1)


LENGTH_TWO = [(2, 1), (3, 1), (4, 1), (6, 1), (3, 2), (4, 2), (6, 2)]
LENGTH_THREE = [(2, 2, 1), (2, 3, 1), (2, 4, 1), (2, 6, 1), (2, 2, 3), (2, 2, 4),
                (2, 2, 6), (2, 3, 4), (2, 3, 6), (2, 4, 3), (2, 4, 6), (2, 6, 3),
                (2, 6, 4)]
ALGEBRAIC_CASES = [(4, 2), (3, 2), (6, 2), (2, 4, 3), (2, 6, 4), (2, 6, 3)]


def all_named_data() -> list[HGDatum]:
    """The 7 length-two and 13 length-three data that are defined over Q and primitive."""
    return [hd(*args) for args in LENGTH_TWO + LENGTH_THREE]


_HD_RE = re.compile(r"^\s*HD\s*\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)\s*$", re.IGNORECASE)


def parse_datum(text: str) -> HGDatum:
    """Parse ``"HD(3,1)"``, ``"HD(2,4,3)"`` or ``"1/2,1/2;0,0"``."""
    m = _HD_RE.match(text)
    if m:
        return hd(*(int(v) for v in m.group(1).split(",")))
    if ";" in text:
        left, right = text.split(";", 1)
        parse = lambda part: [Fraction(v.strip()) for v in part.split(",") if v.strip()]
        return validate_datum(parse(left), parse(right))
    raise ValueError(f"cannot parse datum {text!r}")

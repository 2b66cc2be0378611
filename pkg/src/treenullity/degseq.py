"""Tree degree sequences and the closed formulas attached to them.

A degree sequence is a *tree degree sequence* when its n positive entries sum
to 2n - 2; every such sequence is realized by at least one labeled tree.  All
quantities here are exact integers: the leaf count l, the edge count m, the
annihilation number a (largest prefix of the sorted sequence whose sum stays
within m), and the extremal matching / nullity / independence values over all
trees realizing the sequence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from .errors import InvalidDegree, NotTreeSum, ParseError, TooSmall

_TOKEN_SPLIT = re.compile(r"[\s,]+")


@dataclass(frozen=True)
class DegreeSequence:
    """Canonical (nondecreasing) tree degree sequence on n >= 2 vertices."""

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        canon = tuple(sorted(self.degrees))
        object.__setattr__(self, "degrees", canon)
        n = len(canon)
        if n < 2:
            raise TooSmall(f"need at least 2 degrees, got {n}")
        if canon[0] < 1:
            raise InvalidDegree(f"degree {canon[0]} < 1")
        if sum(canon) != 2 * n - 2:
            raise NotTreeSum(
                f"degrees sum to {sum(canon)}, a tree on {n} vertices needs {2 * n - 2}"
            )

    @property
    def n(self) -> int:
        return len(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __getitem__(self, i: int) -> int:
        return self.degrees[i]

    def __str__(self) -> str:
        return ",".join(str(d) for d in self.degrees)


@dataclass(frozen=True)
class SequenceStats:
    """Leaf count, edge count and annihilation number of a sequence."""

    l: int
    m: int
    a: int


@dataclass(frozen=True)
class BoundsReport:
    """Extremal values over all labeled trees realizing one sequence.

    nu_max / nullity_min / alpha_min come from the leaf-count formulas,
    nu_min / nullity_max / alpha_max from the annihilation number:

        nu_max      = n - l              if l >= ceil(n/2), else floor(n/2)
        nullity_min = n - 2 * nu_max
        alpha_min   = n - nu_max
        nu_min      = n - a
        nullity_max = 2a - n
        alpha_max   = a

    ``extremal_equal`` is true exactly when every realization shares one
    nullity, i.e. a = max(l, ceil(n/2)).
    """

    n: int
    l: int
    m: int
    a: int
    nu_min: int
    nu_max: int
    nullity_min: int
    nullity_max: int
    alpha_min: int
    alpha_max: int
    extremal_equal: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "l": self.l,
            "m": self.m,
            "a": self.a,
            "nu_min": self.nu_min,
            "nu_max": self.nu_max,
            "nullity_min": self.nullity_min,
            "nullity_max": self.nullity_max,
            "alpha_min": self.alpha_min,
            "alpha_max": self.alpha_max,
            "extremal_equal": self.extremal_equal,
        }


def parse_sequence(text: str) -> DegreeSequence:
    """Parse comma- and/or whitespace-separated integers, in any order.

    The result is canonicalized (sorted), so any permutation of the same
    multiset parses to an identical sequence.
    """
    tokens = [t for t in _TOKEN_SPLIT.split(text.strip()) if t]
    degrees = []
    for t in tokens:
        try:
            degrees.append(int(t, 10))
        except ValueError:
            raise ParseError(f"not an integer: {t!r}") from None
    return DegreeSequence(tuple(degrees))


def stats(s: DegreeSequence) -> SequenceStats:
    """Leaf count l, edge count m = n - 1, and annihilation number a.

    a is the largest index (1-based) such that the sum of the a smallest
    degrees is at most m.
    """
    l = 0
    for d in s.degrees:
        if d != 1:
            break
        l += 1
    m = s.n - 1
    a = 0
    prefix = 0
    for d in s.degrees:
        prefix += d
        if prefix > m:
            break
        a += 1
    return SequenceStats(l=l, m=m, a=a)


def bounds(s: DegreeSequence) -> BoundsReport:
    """Extremal matching number, nullity and independence number of ``s``.

    n = 2 is the one degenerate case: the single edge has nu = 1 and nullity
    0, which the leaf-count branch formula would miss.
    """
    n = s.n
    st = stats(s)
    l, m, a = st.l, st.m, st.a

    if n == 2:
        nu_max = 1
    elif l >= (n + 1) // 2:
        nu_max = n - l
    else:
        nu_max = n // 2

    nu_min = n - a
    report = BoundsReport(
        n=n,
        l=l,
        m=m,
        a=a,
        nu_min=nu_min,
        nu_max=nu_max,
        nullity_min=n - 2 * nu_max,
        nullity_max=2 * a - n,
        alpha_min=n - nu_max,
        alpha_max=a,
        extremal_equal=(nu_min == nu_max),
    )
    return report


def min_max_equal(s: DegreeSequence) -> bool:
    """True when every tree realizing ``s`` has the same nullity.

    For n > 2 this is equivalent to a = max(l, ceil(n/2)); n = 2 has a unique
    realization and returns True.
    """
    b = bounds(s)
    return b.nu_min == b.nu_max


def literal_characterization(s: DegreeSequence) -> bool:
    """The unamended equal-extremes condition: a = l or a = floor(n/2).

    Kept alongside :func:`min_max_equal` so the places where the two
    conditions disagree (odd-n path-like sequences such as (1,1,2,2,2)) can
    be surfaced explicitly.
    """
    st = stats(s)
    return st.a == st.l or st.a == s.n // 2

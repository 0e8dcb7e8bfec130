"""Sequences of positive roots over a commutation class, and the orders on
them: the convex total order of a member word, the heap partial order, the
bi-lexicographic order of a member, and the coarse order (bi-lex for every
member at once)."""

from __future__ import annotations

from dataclasses import dataclass

from .rootsys import PosRoot
from .words import CommClass, ReducedWord


@dataclass(frozen=True)
class RootSequence:
    """A finite multiset of positive roots drawn from a commutation class,
    stored as a multiplicity vector aligned with the representative word."""

    cls: CommClass
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != len(self.cls):
            raise ValueError("multiplicity vector does not match the class length")
        if any(c < 0 for c in self.counts):
            raise ValueError("negative multiplicity")

    @staticmethod
    def from_roots(cls: CommClass, roots) -> "RootSequence":
        counts = [0] * len(cls)
        for r in roots:
            counts[cls.position(cls.system.root(r))] += 1
        return RootSequence(cls, tuple(counts))

    @staticmethod
    def from_strings(cls: CommClass, texts) -> "RootSequence":
        return RootSequence.from_roots(
            cls, (cls.system.parse_root(t) for t in texts)
        )

    def weight(self) -> tuple[int, ...]:
        wt = [0] * self.cls.system.rank
        for k, c in enumerate(self.counts):
            if c:
                for j, x in enumerate(self.cls.roots[k].coeffs):
                    wt[j] += c * x
        return tuple(wt)

    def size(self) -> int:
        return sum(self.counts)

    def roots(self) -> tuple[PosRoot, ...]:
        """The multiset expanded in representative order."""
        out = []
        for k, c in enumerate(self.counts):
            out.extend([self.cls.roots[k]] * c)
        return tuple(out)

    def support(self) -> tuple[PosRoot, ...]:
        return tuple(self.cls.roots[k] for k, c in enumerate(self.counts) if c)

    def mult(self, beta: PosRoot) -> int:
        return self.counts[self.cls.position(beta)]

    def __str__(self) -> str:
        fmt = self.cls.system.format_root
        return "(" + ",".join(fmt(r) for r in self.roots()) + ")"

    def to_json(self) -> dict:
        fmt = self.cls.system.format_root
        return {
            "roots": [fmt(r) for r in self.roots()],
            "weight": list(self.weight()),
        }


def pair(cls: CommClass, alpha, beta) -> RootSequence:
    return RootSequence.from_roots(cls, (alpha, beta))


def total_less(cls: CommClass, alpha: PosRoot, beta: PosRoot) -> bool:
    """alpha before beta in the representative word of the class."""
    return cls.position(alpha) < cls.position(beta)


def partial_less(cls: CommClass, alpha: PosRoot, beta: PosRoot) -> bool:
    """alpha before beta in every member of the class (the heap order)."""
    return cls.prec(alpha, beta)


def _member_positions(seq: RootSequence, member: ReducedWord | None) -> list[int]:
    """Class positions listed in the order the given member visits them."""
    cls = seq.cls
    if member is None:
        return list(range(len(cls)))
    from .words import roots_of_word

    return [cls.position(r) for r in roots_of_word(member)]


def bilex_less(
    a: RootSequence, b: RootSequence, member: ReducedWord | None = None
) -> bool:
    """a < b in the bi-lex order induced by a class member: the multiplicity
    vectors differ, and a is smaller at both the first and the last position
    where they do (positions taken in the member's total order)."""
    if a.cls is not b.cls:
        raise ValueError("sequences live over different commutation classes")
    order = _member_positions(a, member)
    diffs = [k for k in order if a.counts[k] != b.counts[k]]
    if not diffs:
        return False
    return a.counts[diffs[0]] < b.counts[diffs[0]] and (
        a.counts[diffs[-1]] < b.counts[diffs[-1]]
    )


def coarse_less(a: RootSequence, b: RootSequence) -> bool:
    """a < b in the bi-lex order of every class member simultaneously.

    A differing position is first in some member iff it is heap-minimal among
    the differing positions, and last iff heap-maximal; so the condition is
    that a is smaller at every heap-minimal and every heap-maximal position
    of the difference support.
    """
    if a.cls is not b.cls:
        raise ValueError("sequences live over different commutation classes")
    cls = a.cls
    diffs = [k for k in range(len(cls)) if a.counts[k] != b.counts[k]]
    if not diffs:
        return False
    mask = 0
    for k in diffs:
        mask |= 1 << k
    for k in diffs:
        is_min = not (cls._below[k] & mask)
        is_max = not (cls._above[k] & mask)
        if (is_min or is_max) and a.counts[k] >= b.counts[k]:
            return False
    return True


def coarse_less_brute(a: RootSequence, b: RootSequence) -> bool:
    """Reference implementation: check bi-lex against every class member."""
    return all(bilex_less(a, b, member=w) for w in a.cls.linear_extensions())

"""Distance polynomials read off an AR quiver, and the closed-form
denominator polynomials of the corresponding untwisted affine quantum
algebras (types A and D proven, type E conjectural).

A factored polynomial in z whose roots are powers of (-q) is stored as the
multiset of exponents; no coefficient arithmetic is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arquiver import ARQuiver, DynkinQuiver, build_ar_quiver
from .orders import RootSequence
from .rootsys import UnsupportedType
from .seqcalc import gdist


class WellDefinednessViolation(AssertionError):
    """Two pairs in the same residue/gap slot disagree on gdist."""


@dataclass(frozen=True)
class DistancePolynomial:
    """prod_t (z - (-q)^t)^{mult[t]}, stored as sorted (t, mult) factors."""

    factors: tuple[tuple[int, int], ...]

    @staticmethod
    def from_dict(d: dict[int, int]) -> "DistancePolynomial":
        return DistancePolynomial(
            tuple(sorted((t, m) for t, m in d.items() if m))
        )

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def degree(self) -> int:
        return sum(m for _, m in self.factors)

    def times(self, t: int) -> "DistancePolynomial":
        d = self.as_dict()
        d[t] = d.get(t, 0) + 1
        return DistancePolynomial.from_dict(d)

    def format(self, style: str = "text") -> str:
        if not self.factors:
            return "1"
        parts = []
        for t, m in self.factors:
            sign = "-" if t % 2 == 0 else "+"
            if style == "latex":
                base = f"(z{sign}q^{{{t}}})"
                parts.append(base if m == 1 else base + f"^{{{m}}}")
            else:
                base = f"(z{sign}q^{t})"
                parts.append(base if m == 1 else base + f"^{m}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.format()

    def to_json(self) -> list[dict]:
        return [{"t": t, "mult": m} for t, m in self.factors]


@dataclass(frozen=True)
class DenominatorEntry:
    """One d_{k,l}: the distance polynomial with the dual-Coxeter correction
    factor merged in when l = k*."""

    k: int
    l: int
    poly: DistancePolynomial
    correction: bool
    conjectural: bool

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "l": self.l,
            "factors": self.poly.to_json(),
            "correction": self.correction,
            "conjectural": self.conjectural,
        }


def comparable_pairs(arq: ARQuiver):
    """All pairs (alpha, beta) with alpha strictly below beta in the quiver
    order, together with their residues and coordinate gap."""
    cls = arq.comm_class()
    roots = cls.roots
    for i in range(len(roots)):
        for j in range(len(roots)):
            if i != j and cls.prec_pos(i, j):
                a, b = roots[i], roots[j]
                ka, pa = arq.coordinate(a)
                kb, pb = arq.coordinate(b)
                yield a, b, (min(ka, kb), max(ka, kb)), abs(pa - pb)


def pairs_at(arq: ARQuiver, k: int, l: int, t: int):
    """Comparable pairs whose residues are {k, l} and coordinate gap is t."""
    key = (min(k, l), max(k, l))
    return [
        (a, b) for a, b, kk, tt in comparable_pairs(arq) if kk == key and tt == t
    ]


def _gdist_of_pair(arq: ARQuiver, a, b) -> int:
    cls = arq.comm_class()
    return gdist(RootSequence.from_roots(cls, (a, b)))


def o_t(arq: ARQuiver, k: int, l: int, t: int, check_all: bool = False) -> int:
    """gdist shared by every pair in the (k, l, t) slot; 0 if the slot is
    empty.  With check_all the agreement across members is verified."""
    members = pairs_at(arq, k, l, t)
    if not members:
        return 0
    vals = [
        _gdist_of_pair(arq, a, b)
        for a, b in (members if check_all else members[:1])
    ]
    if len(set(vals)) > 1:
        raise WellDefinednessViolation(
            f"pairs at residues ({k},{l}) gap {t} have gdists {sorted(set(vals))}"
        )
    return vals[0]


@lru_cache(maxsize=None)
def _o_table(Q: DynkinQuiver, check_all: bool = False) -> dict:
    """{(k, l, t): o_t} over every occupied slot, k <= l."""
    arq = build_ar_quiver(Q)
    slots: dict[tuple[int, int, int], list] = {}
    for a, b, (k, l), t in comparable_pairs(arq):
        slots.setdefault((k, l, t), []).append((a, b))
    out = {}
    for key, members in slots.items():
        vals = {
            _gdist_of_pair(arq, a, b)
            for a, b in (members if check_all else members[:1])
        }
        if len(vals) > 1:
            raise WellDefinednessViolation(
                f"pairs at residues ({key[0]},{key[1]}) gap {key[2]} "
                f"have gdists {sorted(vals)}"
            )
        out[key] = vals.pop()
    return out


def distance_polynomial(
    Q: DynkinQuiver, k: int, l: int, check_all: bool = False
) -> DistancePolynomial:
    """prod_t (z-(-q)^t)^{max(o_t over Q and its reversal)}."""
    key = (min(k, l), max(k, l))
    d: dict[int, int] = {}
    for table in (_o_table(Q, check_all), _o_table(Q.rev(), check_all)):
        for (kk, ll, t), o in table.items():
            if (kk, ll) == key:
                d[t] = max(d.get(t, 0), o)
    return DistancePolynomial.from_dict(d)


def denominator(
    Q: DynkinQuiver, k: int, l: int, check_all: bool = False
) -> DenominatorEntry:
    """d_{k,l}: the distance polynomial, times (z-(-q)^{h_dual}) when l = k*."""
    sys_ = Q.system
    poly = distance_polynomial(Q, k, l, check_all)
    correction = sys_.w0_involution[k] == l
    if correction:
        poly = poly.times(sys_.dual_coxeter)
    return DenominatorEntry(k, l, poly, correction, sys_.kind == "E")


def denominator_closed_form(kind: str, n: int, k: int, l: int) -> DistancePolynomial:
    """The known factored denominator of the untwisted affine algebra of type
    A_n or D_n for the fundamental-weight indices k, l."""
    d: dict[int, int] = {}

    def add(t):
        d[t] = d.get(t, 0) + 1

    if kind == "A":
        for x in range(1, min(k, l, n + 1 - k, n + 1 - l) + 1):
            add(abs(k - l) + 2 * x)
    elif kind == "D":
        if k > l:
            k, l = l, k
        if l <= n - 2:
            for x in range(1, min(k, l) + 1):
                add(abs(k - l) + 2 * x)
                add(2 * n - 2 - k - l + 2 * x)
        elif k <= n - 2:
            for x in range(1, k + 1):
                add(n - k - 1 + 2 * x)
        elif k != l:
            for x in range(1, (n - 1) // 2 + 1):
                add(4 * x)
        else:
            for x in range(1, n // 2 + 1):
                add(4 * x - 2)
    else:
        raise UnsupportedType(f"no closed-form denominator for type {kind}")
    return DistancePolynomial.from_dict(d)


@dataclass(frozen=True)
class VerificationReport:
    quiver: str
    mismatches: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "quiver": self.quiver,
            "ok": self.ok,
            "mismatches": list(self.mismatches),
        }


def verify_denominator(Q: DynkinQuiver, check_all: bool = False) -> VerificationReport:
    """Compare d_{k,l} read off the quiver with the closed form, all k <= l."""
    sys_ = Q.system
    if sys_.kind not in ("A", "D"):
        raise UnsupportedType("closed forms are known for types A and D only")
    bad = []
    for k in range(1, sys_.rank + 1):
        for l in range(k, sys_.rank + 1):
            got = denominator(Q, k, l, check_all).poly
            want = denominator_closed_form(sys_.kind, sys_.rank, k, l)
            if got != want:
                bad.append(
                    {"k": k, "l": l, "computed": str(got), "expected": str(want)}
                )
    return VerificationReport(Q.orientation_str(), tuple(bad))


def conjecture_table(Q: DynkinQuiver, check_all: bool = False) -> tuple[DenominatorEntry, ...]:
    """The full d_{k,l} matrix (k <= l) read off a type-E quiver."""
    sys_ = Q.system
    if sys_.kind != "E":
        raise UnsupportedType("the conjectural table is for type E")
    return tuple(
        denominator(Q, k, l, check_all)
        for k in range(1, sys_.rank + 1)
        for l in range(k, sys_.rank + 1)
    )

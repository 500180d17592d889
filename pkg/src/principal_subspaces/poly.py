"""The commutative polynomial algebra on generators x(m), m in Z, with its
weight/charge bigrading.

A generator x(m) has weight -m and charge 1.  A monomial is the multiset of
its generator indices, stored as a non-decreasing tuple; coefficients are
exact rationals.  Term and basis orderings are graded-lexicographic on the
index tuple, so every matrix built downstream has a reproducible column
order.  Indices range over all of Z: membership in the subalgebras with
indices <= -1 or <= -2 is a property of an element, not a separate type,
because the translation map genuinely produces indices >= 0.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = int | Fraction


class Monomial:
    """Finite multiset of generator indices, canonically sorted."""

    __slots__ = ("indices",)

    def __init__(self, indices: Iterable[int] = ()):
        self.indices = tuple(sorted(indices))

    @property
    def weight(self) -> int:
        return -sum(self.indices)

    @property
    def charge(self) -> int:
        return len(self.indices)

    def sort_key(self) -> tuple:
        return (self.weight, self.charge, self.indices)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.indices + other.indices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.indices == other.indices

    def __hash__(self) -> int:
        return hash(self.indices)

    def __lt__(self, other: "Monomial") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return f"Monomial({self.indices!r})"

    def __str__(self) -> str:
        if not self.indices:
            return "1"
        parts = []
        for m, mult in sorted(Counter(self.indices).items()):
            parts.append(f"x({m})" if mult == 1 else f"x({m})^{mult}")
        return "*".join(parts)


UNIT = Monomial(())


class PolyQ:
    """Finite linear combination of monomials with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(
        self,
        terms: dict[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] | None = None,
    ):
        acc: dict[Monomial, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, dict) else terms
            for mono, c in items:
                f = c if isinstance(c, Fraction) else Fraction(c)
                if not f:
                    continue
                prev = acc.get(mono)
                new = f if prev is None else prev + f
                if new:
                    acc[mono] = new
                elif prev is not None:
                    del acc[mono]
        self.terms = acc

    @classmethod
    def zero(cls) -> "PolyQ":
        return cls()

    @classmethod
    def one(cls) -> "PolyQ":
        return cls({UNIT: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def bidegree(self) -> tuple[int, int]:
        """(weight, charge) of a nonzero bihomogeneous element."""
        if not self.terms:
            raise ValueError("the zero polynomial has no bidegree")
        degrees = {(m.weight, m.charge) for m in self.terms}
        if len(degrees) > 1:
            raise ValueError("polynomial mixes bidegrees")
        return degrees.pop()

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def __add__(self, other: "PolyQ") -> "PolyQ":
        if not isinstance(other, PolyQ):
            return NotImplemented
        out = dict(self.terms)
        for mono, c in other.terms.items():
            new = out.get(mono, 0) + c
            if new:
                out[mono] = new
            else:
                out.pop(mono, None)
        res = PolyQ()
        res.terms = out
        return res

    def __neg__(self) -> "PolyQ":
        res = PolyQ()
        res.terms = {m: -c for m, c in self.terms.items()}
        return res

    def __sub__(self, other: "PolyQ") -> "PolyQ":
        return self + (-other)

    def __mul__(self, other: "PolyQ | Scalar") -> "PolyQ":
        if isinstance(other, PolyQ):
            out: dict[Monomial, Fraction] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    mono = m1 * m2
                    new = out.get(mono, 0) + c1 * c2
                    if new:
                        out[mono] = new
                    else:
                        out.pop(mono, None)
            res = PolyQ()
            res.terms = out
            return res
        if isinstance(other, (int, Fraction)):
            if not other:
                return PolyQ()
            res = PolyQ()
            res.terms = {m: c * other for m, c in self.terms.items()}
            return res
        return NotImplemented

    def __rmul__(self, other: "Scalar") -> "PolyQ":
        return self.__mul__(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyQ):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        return f"PolyQ({str(self)!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for i, (mono, c) in enumerate(self.sorted_terms()):
            mag = abs(c)
            if mono.indices:
                body = str(mono) if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            if i == 0:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)


def x(m: int) -> PolyQ:
    """The generator x(m) as a polynomial."""
    return PolyQ({Monomial((m,)): 1})


def translate(p: PolyQ, s: int = 1) -> PolyQ:
    """Translation automorphism: every generator index shifted by -s.

    Charge is preserved and the weight of a charge-k homogeneous element
    moves by k*s; the inverse is ``translate(p, -s)``.
    """
    if s == 0:
        return p
    return PolyQ(
        {Monomial(m - s for m in mono.indices): c for mono, c in p.terms.items()}
    )


def drop_minus_one_terms(p: PolyQ) -> PolyQ:
    """Project onto the subalgebra with indices <= -2 by deleting every term
    containing x(-1).  Defined only on input supported on indices <= -1."""
    out: dict[Monomial, Fraction] = {}
    for mono, c in p.terms.items():
        if mono.indices and mono.indices[-1] >= 0:
            raise ValueError("projection requires all generator indices <= -1")
        if not mono.indices or mono.indices[-1] != -1:
            out[mono] = c
    return PolyQ(out)


def derive(p: PolyQ) -> PolyQ:
    """The derivation with derive(x(m)) = -m * x(m-1).

    Linear, satisfies the Leibniz rule, raises weight by one and preserves
    charge.
    """
    acc: list[tuple[Monomial, Fraction]] = []
    for mono, c in p.terms.items():
        counts = Counter(mono.indices)
        for m, mult in counts.items():
            if m == 0:
                continue
            rest = list(mono.indices)
            rest.remove(m)
            rest.append(m - 1)
            acc.append((Monomial(rest), c * mult * (-m)))
    return PolyQ(acc)


def enumerate_monomials(weight: int, charge: int, floor: int = -1) -> list[Monomial]:
    """All monomials of the given weight and charge with every index <= floor,
    in graded-lexicographic (index-tuple ascending) order.

    Equivalently: partitions of ``weight`` into exactly ``charge`` parts, each
    part at least ``-floor``.  Returns [] when no such monomial exists.
    """
    if floor > -1:
        raise ValueError("floor must be <= -1")
    if weight < 0 or charge < 0:
        return []
    min_part = -floor
    out: list[Monomial] = []

    def descend(remaining: int, parts_left: int, cap: int, prefix: list[int]) -> None:
        if parts_left == 0:
            if remaining == 0:
                out.append(Monomial(prefix))
            return
        hi = min(cap, remaining - (parts_left - 1) * min_part)
        lo = max(min_part, -(-remaining // parts_left))
        for part in range(hi, lo - 1, -1):
            descend(remaining - part, parts_left - 1, part, prefix + [-part])

    descend(weight, charge, weight, [])
    return out


def coordinates(p: PolyQ, basis: Sequence[Monomial]) -> list[Fraction]:
    """Coordinate vector of ``p`` over an ordered monomial basis."""
    index = {mono: i for i, mono in enumerate(basis)}
    vec = [Fraction(0)] * len(basis)
    for mono, c in p.terms.items():
        i = index.get(mono)
        if i is None:
            raise ValueError(f"monomial {mono} outside the given basis")
        vec[i] = c
    return vec

"""Hyperideals of a finite Krasner hyperring and their lattice.

A hyperideal is an additive subhypergroup that absorbs multiplication on
the requested sides.  Everything here is exhaustive: the carrier is small
enough that the ideal lattice is enumerated by scanning the subsets that
contain 0, with an explicit refusal above the configured bound.

Canonical order everywhere is the integer value of the member bit mask.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    BoundExceededError,
    ElementSet,
    HyperRing,
    TheoremViolationError,
    bits,
    hypersum,
    mask_of,
)

ENUMERATION_BOUND = 12

SIDEDNESS = ("left", "right", "two-sided")


@dataclass(frozen=True)
class IdealCheck:
    ok: bool
    clause: str = ""
    witness: tuple = ()
    detail: str = ""

    def __bool__(self):
        return self.ok


def _as_mask(ring: HyperRing, members) -> int:
    if isinstance(members, HyperIdeal):
        members = members.members
    if isinstance(members, ElementSet):
        if members.carrier is not ring.carrier:
            raise ValueError("member set lives over a different carrier")
        return members.mask
    return ring.subset(members).mask


def is_hyperideal(ring: HyperRing, members, sidedness: str = "two-sided") -> IdealCheck:
    """Decide whether a subset is a hyperideal, with a witness on failure."""
    ring.require_validated()
    if sidedness not in SIDEDNESS:
        raise ValueError(f"sidedness must be one of {SIDEDNESS}")
    s = _as_mask(ring, members)
    if not s & 1:
        return IdealCheck(False, "zero", (), "must contain the additive identity")
    add = ring.add_masks
    neg = ring.neg_table
    mul = ring.mul_table
    n = ring.order
    for a in bits(s):
        if not (1 << neg[a]) & s:
            return IdealCheck(False, "neg-closure", (a,), f"-{a} = {neg[a]} escapes the set")
        for b in bits(s):
            if add[a][b] & ~s:
                return IdealCheck(False, "add-closure", (a, b), f"{a} + {b} escapes the set")
    if sidedness in ("right", "two-sided"):
        for a in bits(s):
            row = mul[a]
            for r in range(n):
                if not (1 << row[r]) & s:
                    return IdealCheck(False, "right-absorption", (a, r), f"{a} * {r} escapes the set")
    if sidedness in ("left", "two-sided"):
        for a in bits(s):
            for r in range(n):
                if not (1 << mul[r][a]) & s:
                    return IdealCheck(False, "left-absorption", (r, a), f"{r} * {a} escapes the set")
    return IdealCheck(True)


class HyperIdeal:
    """A subset validated as a hyperideal of a fixed ring.

    The whole ring counts (it is the improper hyperideal); ``proper``
    distinguishes it.  Equality and hashing go through the member mask,
    so ideals found with different sidedness flags but equal members
    compare equal.
    """

    __slots__ = ("ring", "members", "sidedness")

    def __init__(self, ring: HyperRing, members, sidedness: str = "two-sided"):
        check = is_hyperideal(ring, members, sidedness)
        if not check:
            raise ValueError(
                f"not a {sidedness} hyperideal: {check.clause} fails at {check.witness}"
            )
        self.ring = ring
        self.members = ring.carrier.from_mask(_as_mask(ring, members))
        self.sidedness = sidedness

    @classmethod
    def _trusted(cls, ring: HyperRing, mask: int, sidedness: str) -> "HyperIdeal":
        self = object.__new__(cls)
        self.ring = ring
        self.members = ring.carrier.from_mask(mask)
        self.sidedness = sidedness
        return self

    @property
    def key(self) -> int:
        return self.members.mask

    @property
    def proper(self) -> bool:
        return not self.members.is_full()

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        if not isinstance(other, HyperIdeal):
            return NotImplemented
        return self.ring is other.ring and self.members.mask == other.members.mask

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((id(self.ring), self.members.mask))

    def __repr__(self):
        return f"<{self.sidedness} ideal {self.members!r} of {self.ring.name or 'ring'}>"


def enumerate_ideals(ring: HyperRing, sidedness: str = "two-sided",
                     bound: int = ENUMERATION_BOUND) -> tuple:
    """All hyperideals of the given sidedness, ordered by member mask."""
    ring.require_validated()
    if ring.order > bound:
        raise BoundExceededError(
            f"ideal enumeration scans 2^{ring.order - 1} subsets; "
            f"order {ring.order} exceeds the bound {bound}"
        )
    found = []
    for half in range(1 << (ring.order - 1)):
        mask = half << 1 | 1
        if is_hyperideal(ring, ring.carrier.from_mask(mask), sidedness):
            found.append(HyperIdeal._trusted(ring, mask, sidedness))
    return tuple(found)


@dataclass(frozen=True)
class IdealLattice:
    """Two sided and right ideals of a ring plus the distinguished families."""

    ring: HyperRing
    two_sided: tuple
    right: tuple
    maximal: tuple
    prime: tuple
    maximal_right: tuple

    @classmethod
    def build(cls, ring: HyperRing, bound: int = ENUMERATION_BOUND) -> "IdealLattice":
        two_sided = enumerate_ideals(ring, "two-sided", bound)
        right = enumerate_ideals(ring, "right", bound)
        maximal = tuple(i for i in two_sided if _is_maximal_in(i, two_sided))
        prime = tuple(i for i in two_sided if i.proper and _prime_witness(i, two_sided) is None)
        maximal_right = tuple(i for i in right if _is_maximal_in(i, right))
        return cls(ring, two_sided, right, maximal, prime, maximal_right)

    def proper_two_sided(self) -> tuple:
        return tuple(i for i in self.two_sided if i.proper)


def _is_maximal_in(ideal: HyperIdeal, family) -> bool:
    if not ideal.proper:
        return False
    m = ideal.members.mask
    for other in family:
        om = other.members.mask
        if om != m and m & ~om == 0 and other.proper:
            return False
    return True


def is_maximal(ideal: HyperIdeal, lattice: IdealLattice) -> bool:
    family = lattice.right if ideal.sidedness == "right" else lattice.two_sided
    return _is_maximal_in(ideal, family)


def maximal_above(ideal: HyperIdeal, lattice: IdealLattice) -> HyperIdeal:
    """Some maximal ideal of the same sidedness containing the input.

    Finite carriers make this a scan; ties break to the smallest member
    mask so the answer is reproducible.
    """
    if not ideal.proper:
        raise ValueError("the improper ideal is contained in no maximal ideal")
    family = lattice.maximal_right if ideal.sidedness == "right" else lattice.maximal
    m = ideal.members.mask
    for cand in family:  # already in canonical mask order
        if m & ~cand.members.mask == 0:
            return cand
    raise TheoremViolationError(
        f"proper ideal {ideal.members!r} lies under no maximal ideal"
    )


def ideal_intersection(ideals) -> HyperIdeal:
    ideals = tuple(ideals)
    if not ideals:
        raise ValueError("need at least one ideal")
    ring = ideals[0].ring
    mask = ring.carrier.full_mask
    sided = ideals[0].sidedness
    for i in ideals:
        if i.ring is not ring:
            raise ValueError("ideals over different rings")
        if i.sidedness != sided:
            sided = "two-sided"
        mask &= i.members.mask
    out = HyperIdeal(ring, ring.carrier.from_mask(mask), sided)
    return out


def ideal_sum(ideals) -> HyperIdeal:
    """Elements lying in some hypersum of one representative per ideal."""
    ideals = tuple(ideals)
    if not ideals:
        raise ValueError("need at least one ideal")
    ring = ideals[0].ring
    sided = ideals[0].sidedness
    acc = ideals[0].members
    for i in ideals[1:]:
        if i.ring is not ring:
            raise ValueError("ideals over different rings")
        if i.sidedness != sided:
            sided = "two-sided"
        acc = hypersum(ring, acc, i.members)
    check = is_hyperideal(ring, acc, sided)
    if not check:
        raise TheoremViolationError(
            f"sum of {sided} ideals failed {check.clause} at {check.witness}"
        )
    return HyperIdeal._trusted(ring, acc.mask, sided)


def sum_of_products_closure(add, products_mask: int) -> int:
    """Elements lying in some finite hypersum of the given products."""
    result = products_mask
    while True:
        grown = result
        for y in bits(result):
            row = add[y]
            for p in bits(products_mask):
                grown |= row[p]
        if grown == result:
            return result
        result = grown


def ideal_product(a, b, ring: HyperRing | None = None):
    """Product: all elements lying in finite sums of pairwise products.

    Accepts hyperideals or plain element sets over the same ring.  When
    both inputs are hyperideals, the result is asserted to be one and is
    returned as such; otherwise the raw element set comes back.
    """
    a_ideal = isinstance(a, HyperIdeal)
    b_ideal = isinstance(b, HyperIdeal)
    if a_ideal:
        ring = a.ring
    elif b_ideal:
        ring = b.ring
    elif ring is None:
        raise ValueError("pass the ring when neither operand is a HyperIdeal")
    ring.require_validated()
    a_set = a.members if a_ideal else a
    b_set = b.members if b_ideal else b
    for s in (a_set, b_set):
        if not isinstance(s, ElementSet) or s.carrier is not ring.carrier:
            raise ValueError("operands must live over the same ring")
    mul = ring.mul_table
    products = 0
    for x in bits(a_set.mask):
        row = mul[x]
        for y in bits(b_set.mask):
            products |= 1 << row[y]
    closed = sum_of_products_closure(ring.add_masks, products)
    if a_ideal and b_ideal and a.sidedness == b.sidedness:
        sided = a.sidedness
        check = is_hyperideal(ring, ring.carrier.from_mask(closed), sided)
        if not check:
            raise TheoremViolationError(
                f"product of {sided} ideals failed {check.clause} at {check.witness}"
            )
        return HyperIdeal._trusted(ring, closed, sided)
    return ring.carrier.from_mask(closed)


def generated_ideal(ring: HyperRing, members, sidedness: str = "two-sided") -> HyperIdeal:
    """Smallest hyperideal containing the given elements.

    Computed by closing under hypersums, negation and the absorbing
    multiplications.  ``cross_check_generated`` confirms it against the
    lattice route.
    """
    ring.require_validated()
    if sidedness not in SIDEDNESS:
        raise ValueError(f"sidedness must be one of {SIDEDNESS}")
    mask = _as_mask(ring, members) | 1
    add = ring.add_masks
    neg = ring.neg_table
    mul = ring.mul_table
    n = ring.order
    while True:
        grown = mask
        for a in bits(mask):
            grown |= 1 << neg[a]
            for b in bits(mask):
                grown |= add[a][b]
            if sidedness in ("right", "two-sided"):
                row = mul[a]
                for r in range(n):
                    grown |= 1 << row[r]
            if sidedness in ("left", "two-sided"):
                for r in range(n):
                    grown |= 1 << mul[r][a]
        if grown == mask:
            break
        mask = grown
    return HyperIdeal(ring, ring.carrier.from_mask(mask), sidedness)


def cross_check_generated(ring: HyperRing, members, lattice: IdealLattice) -> HyperIdeal:
    """Lattice route for ``generated_ideal``: intersect every two sided
    ideal containing the set.  Raises if the two routes disagree."""
    mask = _as_mask(ring, members)
    above = [i for i in lattice.two_sided if mask & ~i.members.mask == 0]
    closed = generated_ideal(ring, members, "two-sided")
    via_lattice = ideal_intersection(above) if above else None
    if via_lattice is None or via_lattice.members.mask != closed.members.mask:
        raise TheoremViolationError(
            f"generated ideal mismatch for {ring.subset(bits(mask))!r}"
        )
    return closed


def nilpotent_elements(ring: HyperRing) -> ElementSet:
    """Elements with some power equal to 0 (diagnostic)."""
    ring.require_validated()
    mul = ring.mul_table
    out = 0
    for a in range(ring.order):
        x = a
        for _ in range(ring.order + 1):
            if x == 0:
                out |= 1 << a
                break
            x = mul[x][a]
    return ring.carrier.from_mask(out)


def nil_radical(ring: HyperRing, lattice: IdealLattice) -> HyperIdeal:
    """Intersection of the prime two sided hyperideals.

    With no primes at all the intersection over the empty family is the
    whole ring; for the one element ring that is still {0}.
    """
    if not lattice.prime:
        return HyperIdeal._trusted(ring, ring.carrier.full_mask, "two-sided")
    return ideal_intersection(lattice.prime)


@dataclass(frozen=True)
class PrimeCheck:
    ok: bool
    witness: tuple = ()

    def __bool__(self):
        return self.ok


def _prime_witness(ideal: HyperIdeal, two_sided) -> tuple | None:
    p = ideal.members.mask
    for a in two_sided:
        am = a.members.mask
        for b in two_sided:
            if ideal_product(a, b).members.mask & ~p == 0:
                if am & ~p and b.members.mask & ~p:
                    return (a, b)
    return None


def is_prime(ideal: HyperIdeal, lattice: IdealLattice) -> PrimeCheck:
    """Primality against every pair of two sided hyperideals,
    the improper one included."""
    if not ideal.proper:
        raise ValueError("prime ideals are proper by definition")
    w = _prime_witness(ideal, lattice.two_sided)
    return PrimeCheck(w is None, w or ())


@dataclass(frozen=True)
class Quotient:
    """Quotient hyperring together with the coset data and projection."""

    ring: HyperRing          # the quotient structure
    source: HyperRing
    ideal: HyperIdeal
    cosets: tuple            # member mask of each coset, coset of 0 first
    coset_of: tuple          # element index -> coset index
    projection: object       # RingHom from morphisms

    def coset_members(self, index: int) -> ElementSet:
        return self.source.carrier.from_mask(self.cosets[index])


def quotient_ring(ring: HyperRing, ideal: HyperIdeal) -> Quotient:
    """R / a for a two sided hyperideal a.

    Cosets are a + r; the tables are built from representatives and
    checked to be representative independent, then the quotient is
    validated like any other ring.
    """
    ring.require_validated()
    if ideal.ring is not ring:
        raise ValueError("ideal belongs to a different ring")
    if ideal.sidedness != "two-sided":
        raise ValueError("quotients need a two sided hyperideal")
    n = ring.order
    k = ideal.members
    coset_mask = [hypersum(ring, k, ring.singleton(r)).mask for r in range(n)]
    cosets = [coset_mask[0]]
    for m in sorted(set(coset_mask)):
        if m != coset_mask[0]:
            cosets.append(m)
    index = {m: i for i, m in enumerate(cosets)}
    coset_of = tuple(index[coset_mask[r]] for r in range(n))

    covered = 0
    for m in cosets:
        if covered & m:
            raise TheoremViolationError("cosets fail to partition the carrier")
        covered |= m
    if covered != ring.carrier.full_mask:
        raise TheoremViolationError("cosets fail to cover the carrier")

    q = len(cosets)
    add = [[None] * q for _ in range(q)]
    mul = [[None] * q for _ in range(q)]
    for i in range(q):
        for j in range(q):
            seen_add = None
            seen_mul = None
            for r1 in bits(cosets[i]):
                for r2 in bits(cosets[j]):
                    s = frozenset(coset_of[t] for t in bits(ring.add_masks[r1][r2]))
                    m = coset_of[ring.mul_table[r1][r2]]
                    if seen_add is None:
                        seen_add, seen_mul = s, m
                    elif s != seen_add or m != seen_mul:
                        raise TheoremViolationError(
                            f"coset tables depend on representatives at ({i}, {j})"
                        )
            add[i][j] = sorted(seen_add)
            mul[i][j] = seen_mul
    neg = []
    for i in range(q):
        images = {coset_of[ring.neg_table[r]] for r in bits(cosets[i])}
        if len(images) != 1:
            raise TheoremViolationError("negation is not constant on cosets")
        neg.append(images.pop())

    unit = None if ring.unit is None else coset_of[ring.unit]
    label = f"{ring.name or 'R'}/{ideal.members!r}"
    out = HyperRing(add, neg, mul, unit=unit, name=label)
    report = out.validate()
    if not report.ok:
        raise TheoremViolationError(
            f"quotient by a verified ideal failed validation: {report.failures}"
        )

    from .morphisms import RingHom

    projection = RingHom(ring, out, coset_of, name=f"project {label}")
    return Quotient(out, ring, ideal, tuple(cosets), coset_of, projection)

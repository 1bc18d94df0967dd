"""Strong homomorphisms between Krasner hyperrings and the maps they
induce on primitive ideal spaces.

Strong means the image of a hypersum equals the hypersum of the images.
The weaker inclusion-only notion shows up in failure details so a near
miss is distinguishable from a wild map, but nothing here accepts it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import (
    AxiomCheck,
    BoundExceededError,
    HyperRing,
    TheoremViolationError,
    VerificationReport,
    bits,
    mask_of,
)
from .ideals import (
    HyperIdeal,
    IdealLattice,
    is_hyperideal,
    nil_radical,
    quotient_ring,
)
from .spectrum import SpectrumSpace

HOM_SEARCH_BOUND = 6


@dataclass(frozen=True)
class RingHom:
    """Map between hyperrings given by a value table on the source."""

    source: HyperRing
    target: HyperRing
    mapping: tuple
    name: str | None = None
    unit_preserving: bool = False

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(int(v) for v in self.mapping))
        if len(self.mapping) != self.source.order:
            raise ValueError("mapping must cover the source carrier")
        for v in self.mapping:
            self.target.carrier.check_element(v)
        if self.unit_preserving and (self.source.unit is None or self.target.unit is None):
            raise ValueError("unit preservation needs units on both sides")

    def __call__(self, a: int) -> int:
        return self.mapping[a]

    def image_mask(self) -> int:
        return mask_of(self.mapping)

    def is_surjective(self) -> bool:
        return self.image_mask() == self.target.carrier.full_mask

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    def __repr__(self):
        label = self.name or f"{self.source.name or 'R'} -> {self.target.name or 'S'}"
        return f"<RingHom {label}>"


def verify_strong_hom(hom: RingHom) -> VerificationReport:
    src, dst, f = hom.source, hom.target, hom.mapping
    checks = []
    checks.append(AxiomCheck(
        "zero", f[0] == 0, () if f[0] == 0 else (0,),
        "" if f[0] == 0 else "0 must map to 0"))

    bad = None
    detail = ""
    for a in range(src.order):
        for b in range(src.order):
            image = mask_of(f[t] for t in bits(src.add_masks[a][b]))
            expected = dst.add_masks[f[a]][f[b]]
            if image != expected:
                bad = (a, b)
                detail = ("image only covers part of the target hypersum "
                          "(a weak hom, not a strong one)"
                          if image & ~expected == 0 else
                          "image escapes the target hypersum")
                break
        if bad:
            break
    checks.append(AxiomCheck("strong-addition", bad is None, bad or (), detail))

    bad = None
    for a in range(src.order):
        if f[src.neg_table[a]] != dst.neg_table[f[a]]:
            bad = (a,)
            break
    checks.append(AxiomCheck(
        "negation", bad is None, bad or (),
        "" if bad is None else f"f(-{bad[0]}) != -f({bad[0]})"))

    bad = None
    for a in range(src.order):
        for b in range(src.order):
            if f[src.mul_table[a][b]] != dst.mul_table[f[a]][f[b]]:
                bad = (a, b)
                break
        if bad:
            break
    checks.append(AxiomCheck(
        "multiplication", bad is None, bad or (),
        "" if bad is None else "f(a b) != f(a) f(b) at " + str(bad)))

    if hom.unit_preserving:
        ok = f[src.unit] == dst.unit
        checks.append(AxiomCheck(
            "unit", ok, () if ok else (src.unit,),
            "" if ok else "declared unit preserving but f(1) != 1"))

    return VerificationReport(subject=hom.name or "ring hom", checks=tuple(checks))


def kernel_ideal(hom: RingHom) -> HyperIdeal:
    """Preimage of 0, asserted to be a two sided hyperideal."""
    members = [a for a, v in enumerate(hom.mapping) if v == 0]
    check = is_hyperideal(hom.source, members, "two-sided")
    if not check:
        raise TheoremViolationError(
            f"kernel of a strong hom failed {check.clause} at {check.witness}"
        )
    return HyperIdeal(hom.source, members, "two-sided")


def preimage_ideal(hom: RingHom, ideal: HyperIdeal) -> HyperIdeal:
    """Pullback of a hyperideal of the target, asserted to keep its
    sidedness."""
    if ideal.ring is not hom.target:
        raise ValueError("ideal must live in the hom's target")
    members = [a for a, v in enumerate(hom.mapping) if 1 << v & ideal.members.mask]
    check = is_hyperideal(hom.source, members, ideal.sidedness)
    if not check:
        raise TheoremViolationError(
            f"preimage of a {ideal.sidedness} hyperideal failed "
            f"{check.clause} at {check.witness}"
        )
    return HyperIdeal(hom.source, members, ideal.sidedness)


def compose(outer: RingHom, inner: RingHom) -> RingHom:
    if inner.target is not outer.source:
        raise ValueError("homs do not chain")
    return RingHom(inner.source, outer.target,
                   tuple(outer.mapping[v] for v in inner.mapping),
                   name=f"{outer.name or 'g'} o {inner.name or 'f'}")


def identity_hom(ring: HyperRing) -> RingHom:
    return RingHom(ring, ring, tuple(range(ring.order)), name="id",
                   unit_preserving=ring.is_unital)


def enumerate_ring_homs(source: HyperRing, target: HyperRing,
                        bound: int = HOM_SEARCH_BOUND,
                        surjective_only: bool = False) -> tuple:
    """All verified strong homs, exhaustively over maps fixing 0."""
    if source.order > bound or target.order > bound:
        raise BoundExceededError(
            f"hom search is exhaustive over {target.order}^{source.order - 1} maps; "
            f"orders ({source.order}, {target.order}) exceed the bound {bound}"
        )
    if surjective_only and source.order < target.order:
        return ()
    out = []
    for rest in itertools.product(range(target.order), repeat=source.order - 1):
        hom = RingHom(source, target, (0,) + rest)
        if surjective_only and not hom.is_surjective():
            continue
        if verify_strong_hom(hom).ok:
            out.append(hom)
    return tuple(out)


@dataclass(frozen=True)
class InducedMap:
    """The pullback map on primitive ideal spaces.

    Goes from the primitives of the hom's target to those of its source.
    A pulled back ideal can fail to be primitive; such points are listed
    in escapes with their pullbacks and leave None in point_map, rather
    than raising, so sweeps can tally them.
    """

    hom: RingHom
    domain: SpectrumSpace
    codomain: SpectrumSpace
    point_map: tuple
    escapes: tuple = field(default=())

    @property
    def total(self) -> bool:
        return all(v is not None for v in self.point_map)

    def apply(self, pmask: int) -> int:
        out = 0
        for i in bits(pmask):
            v = self.point_map[i]
            if v is None:
                raise ValueError(f"point {i} has no image")
            out |= 1 << v
        return out

    def image_pmask(self) -> int:
        return self.apply(self.domain.full_pmask)


def induced_map(hom: RingHom, domain: SpectrumSpace | None = None,
                codomain: SpectrumSpace | None = None) -> InducedMap:
    if domain is None:
        domain = SpectrumSpace.build(hom.target)
    if codomain is None:
        codomain = SpectrumSpace.build(hom.source)
    lookup = {m: i for i, m in enumerate(codomain.point_masks)}
    point_map = []
    escapes = []
    for i, q in enumerate(domain.points):
        pulled = preimage_ideal(hom, q)
        j = lookup.get(pulled.members.mask)
        point_map.append(j)
        if j is None:
            escapes.append((i, pulled))
    return InducedMap(hom, domain, codomain, tuple(point_map), tuple(escapes))


def is_continuous(imap: InducedMap) -> bool:
    """Preimages of closed sets are closed; needs a total map."""
    if not imap.total:
        raise ValueError("continuity only makes sense for a total map")
    for d in imap.codomain.closed_sets():
        pre = 0
        for i, v in enumerate(imap.point_map):
            if 1 << v & d:
                pre |= 1 << i
        if not imap.domain.is_closed(pre):
            return False
    return True


@dataclass(frozen=True)
class EmbeddingReport:
    """How close a pullback map comes to a closed embedding."""

    total: bool
    injective: bool
    image_is_kernel_vanishing: bool
    closed_sets_correspond: bool

    @property
    def ok(self) -> bool:
        return (self.total and self.injective
                and self.image_is_kernel_vanishing and self.closed_sets_correspond)


def check_closed_embedding(imap: InducedMap) -> EmbeddingReport:
    """For a surjective hom the pullback should embed the target's
    primitives onto the vanishing set of the kernel, closed sets matching
    in both directions."""
    if not imap.hom.is_surjective():
        raise ValueError("closed embedding check expects a surjective hom")
    if not imap.total:
        return EmbeddingReport(False, False, False, False)
    pm = imap.point_map
    injective = len(set(pm)) == len(pm)
    image = imap.image_pmask()
    expected = imap.codomain.vanishing_set(kernel_ideal(imap.hom))
    forward = {imap.apply(c) for c in imap.domain.closed_sets()}
    restricted = {d & image for d in imap.codomain.closed_sets()}
    return EmbeddingReport(
        total=True,
        injective=injective,
        image_is_kernel_vanishing=image == expected,
        closed_sets_correspond=forward == restricted,
    )


@dataclass(frozen=True)
class DensityReport:
    dense: bool
    kernel_in_radical: bool

    @property
    def agree(self) -> bool:
        return self.dense == self.kernel_in_radical


def check_density(imap: InducedMap, lattice: IdealLattice | None = None) -> DensityReport:
    """Compare density of the pullback image against the kernel sitting
    inside the intersection of the primes."""
    if not imap.total:
        raise ValueError("density check expects a total map")
    image = imap.image_pmask()
    dense = imap.codomain.closure(image) == imap.codomain.full_pmask
    rad = nil_radical(imap.hom.source, lattice or IdealLattice.build(imap.hom.source))
    ker = kernel_ideal(imap.hom)
    return DensityReport(dense=dense,
                         kernel_in_radical=ker.members.mask & ~rad.members.mask == 0)


@dataclass(frozen=True)
class RadicalQuotientReport:
    total: bool
    bijective: bool
    closed_sets_correspond: bool

    @property
    def ok(self) -> bool:
        return self.total and self.bijective and self.closed_sets_correspond


def check_radical_homeomorphism(ring: HyperRing,
                                lattice: IdealLattice | None = None) -> RadicalQuotientReport:
    """Killing the intersection of the primes should not move the
    primitive ideal space: the projection's pullback must be a bijection
    matching closed sets both ways."""
    lat = lattice or IdealLattice.build(ring)
    rad = nil_radical(ring, lat)
    quot = quotient_ring(ring, rad)
    imap = induced_map(quot.projection)
    if not imap.total:
        return RadicalQuotientReport(False, False, False)
    pm = imap.point_map
    bijective = (len(set(pm)) == len(pm)
                 and imap.image_pmask() == imap.codomain.full_pmask
                 and imap.domain.size == imap.codomain.size)
    forward = {imap.apply(c) for c in imap.domain.closed_sets()}
    backward = set(imap.codomain.closed_sets())
    return RadicalQuotientReport(
        total=True,
        bijective=bijective,
        closed_sets_correspond=forward == backward,
    )

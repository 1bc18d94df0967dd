"""Right hypermodules over a finite Krasner hyperring.

A right hypermodule is a canonical hypergroup (M, +, -, 0) with a single
valued action M x R -> M that distributes over both hyperadditions, is
associative against the ring multiplication and kills 0.  The ring acting
on itself gives the regular module; right hyperideals are exactly its
subhypermodules.

Module homomorphisms here are the strong kind: the image of a hypersum
equals the hypersum of the images as sets, not merely a subset of it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    AxiomCheck,
    BoundExceededError,
    Carrier,
    ElementSet,
    HyperRing,
    NotValidatedError,
    TheoremViolationError,
    VerificationReport,
    bits,
    hypergroup_checks,
    mask_of,
)
from .ideals import ENUMERATION_BOUND, HyperIdeal, IdealCheck, is_hyperideal, sum_of_products_closure

HOM_SEARCH_BOUND = 6


class HyperModule:
    """Right hypermodule given by explicit tables.

    madd : n x n table of nonempty subsets of the module carrier
    mneg : length n negation table
    act  : n x |R| table, act[m][r] is the single element m * r
    """

    __slots__ = ("ring", "carrier", "madd_masks", "mneg_table", "act_table",
                 "unital", "name", "_checked")

    def __init__(self, ring: HyperRing, madd, mneg, act, unital=False, name=None):
        # construction stays permissive so broken fixtures can be built
        # and then interrogated; validate() is the gate
        self.ring = ring
        mneg_t = tuple(int(v) for v in mneg)
        n = len(mneg_t)
        self.carrier = Carrier(n)
        rows = tuple(tuple(mask_of(int(i) for i in cell) for cell in row) for row in madd)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError("madd table shape must match the module carrier")
        for row in rows:
            for m in row:
                if m >> n:
                    raise ValueError("madd entry mentions an element outside the carrier")
        self.madd_masks = rows
        for v in mneg_t:
            self.carrier.check_element(v)
        self.mneg_table = mneg_t
        acts = tuple(tuple(int(v) for v in row) for row in act)
        if len(acts) != n or any(len(r) != ring.order for r in acts):
            raise ValueError("act table must be module order by ring order")
        for row in acts:
            for v in row:
                self.carrier.check_element(v)
        self.act_table = acts
        self.unital = bool(unital)
        self.name = name
        self._checked = False

    @property
    def order(self) -> int:
        return self.carrier.size

    @property
    def validated(self) -> bool:
        return self._checked

    def require_validated(self):
        if not self._checked:
            raise NotValidatedError(f"{self!r} has not passed validation; call validate() first")

    def madd(self, a: int, b: int) -> ElementSet:
        return ElementSet(self.carrier, self.madd_masks[a][b])

    def mneg(self, a: int) -> int:
        return self.mneg_table[a]

    def act(self, m: int, r: int) -> int:
        return self.act_table[m][r]

    def subset(self, members) -> ElementSet:
        return self.carrier.subset(members)

    def msum(self, x: ElementSet, y: ElementSet) -> ElementSet:
        out = 0
        for a in bits(x.mask):
            row = self.madd_masks[a]
            for b in bits(y.mask):
                out |= row[b]
        return ElementSet(self.carrier, out)

    def validate(self) -> "ModuleReport":
        self.ring.require_validated()
        hg = VerificationReport(
            subject=self.name or "module hypergroup",
            checks=tuple(hypergroup_checks(self.order, self.madd_masks, self.mneg_table)),
        )
        mod = verify_hypermodule(self)
        report = ModuleReport(hypergroup=hg, module=mod)
        if report.ok:
            self._checked = True
        return report

    def encoding(self) -> tuple:
        return (
            self.order,
            tuple(m for row in self.madd_masks for m in row),
            self.mneg_table,
            tuple(v for row in self.act_table for v in row),
        )

    def __repr__(self):
        label = self.name or f"module of order {self.order}"
        return f"<HyperModule {label}{'' if self._checked else ' (unchecked)'}>"


@dataclass(frozen=True)
class ModuleReport:
    hypergroup: VerificationReport
    module: VerificationReport

    @property
    def ok(self) -> bool:
        return self.hypergroup.ok and self.module.ok

    @property
    def failures(self) -> tuple:
        return self.hypergroup.failures + self.module.failures

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "hypergroup": self.hypergroup.as_dict(),
            "module": self.module.as_dict(),
        }


def verify_hypermodule(module: HyperModule) -> VerificationReport:
    """The four action axioms, plus the unit action when declared."""
    ring = module.ring
    n = module.order
    nr = ring.order
    madd = module.madd_masks
    act = module.act_table
    checks = []

    bad = None
    for a in range(n):
        for b in range(n):
            for r in range(nr):
                image = mask_of(act[t][r] for t in bits(madd[a][b]))
                if image != madd[act[a][r]][act[b][r]]:
                    bad = (a, b, r)
                    break
            if bad:
                break
        if bad:
            break
    checks.append(AxiomCheck(
        "sum-action", bad is None, bad or (),
        "" if bad is None else "(m + m') r != mr + m'r at " + str(bad)))

    bad = None
    radd = ring.add_masks
    for a in range(n):
        row = act[a]
        for r in range(nr):
            for s in range(nr):
                image = mask_of(row[t] for t in bits(radd[r][s]))
                if image != madd[row[r]][row[s]]:
                    bad = (a, r, s)
                    break
            if bad:
                break
        if bad:
            break
    checks.append(AxiomCheck(
        "action-sum", bad is None, bad or (),
        "" if bad is None else "m (r + s) != mr + ms at " + str(bad)))

    bad = None
    mul = ring.mul_table
    for a in range(n):
        row = act[a]
        for r in range(nr):
            for s in range(nr):
                if row[mul[r][s]] != act[row[r]][s]:
                    bad = (a, r, s)
                    break
            if bad:
                break
        if bad:
            break
    checks.append(AxiomCheck(
        "action-associativity", bad is None, bad or (),
        "" if bad is None else "m (r s) != (m r) s at " + str(bad)))

    bad = None
    for a in range(n):
        if act[a][0] != 0:
            bad = (a,)
            break
    checks.append(AxiomCheck(
        "zero-action", bad is None, bad or (),
        "" if bad is None else f"{bad[0]} * 0 != 0"))

    if module.unital and ring.unit is not None:
        u = ring.unit
        bad = None
        for a in range(n):
            if act[a][u] != a:
                bad = (a,)
                break
        checks.append(AxiomCheck(
            "unit-action", bad is None, bad or (),
            "" if bad is None else f"{bad[0]} * 1 != {bad[0]}"))

    return VerificationReport(subject=module.name or "hypermodule", checks=tuple(checks))


def regular_module(ring: HyperRing) -> HyperModule:
    """The ring acting on itself from the right."""
    ring.require_validated()
    mod = HyperModule(
        ring,
        madd=[[list(bits(m)) for m in row] for row in ring.add_masks],
        mneg=ring.neg_table,
        act=[list(row) for row in ring.mul_table],
        unital=ring.is_unital,
        name=f"{ring.name or 'R'} as module",
    )
    report = mod.validate()
    if not report.ok:
        raise TheoremViolationError(
            f"regular module of a verified ring failed validation: {report.failures}"
        )
    return mod


def is_subhypermodule(module: HyperModule, members) -> IdealCheck:
    """Closure of a subset under madd, mneg and the ring action."""
    module.require_validated()
    if isinstance(members, ElementSet):
        if members.carrier is not module.carrier:
            raise ValueError("member set lives over a different carrier")
        s = members.mask
    else:
        s = module.subset(members).mask
    if not s & 1:
        return IdealCheck(False, "zero", (), "must contain the additive identity")
    madd = module.madd_masks
    for a in bits(s):
        if not (1 << module.mneg_table[a]) & s:
            return IdealCheck(False, "neg-closure", (a,), f"-{a} escapes the set")
        for b in bits(s):
            if madd[a][b] & ~s:
                return IdealCheck(False, "add-closure", (a, b), f"{a} + {b} escapes the set")
        row = module.act_table[a]
        for r in range(module.ring.order):
            if not (1 << row[r]) & s:
                return IdealCheck(False, "action-closure", (a, r), f"{a} * {r} escapes the set")
    return IdealCheck(True)


def enumerate_subhypermodules(module: HyperModule, bound: int = ENUMERATION_BOUND) -> tuple:
    module.require_validated()
    if module.order > bound:
        raise BoundExceededError(
            f"submodule enumeration scans 2^{module.order - 1} subsets; "
            f"order {module.order} exceeds the bound {bound}"
        )
    out = []
    for half in range(1 << (module.order - 1)):
        mask = half << 1 | 1
        if is_subhypermodule(module, module.carrier.from_mask(mask)):
            out.append(module.carrier.from_mask(mask))
    return tuple(out)


def submodule(module: HyperModule, members) -> HyperModule:
    """A subhypermodule as a standalone structure (elements reindexed,
    0 first)."""
    check = is_subhypermodule(module, members)
    if not check:
        raise ValueError(f"not a subhypermodule: {check.clause} fails at {check.witness}")
    s = members.mask if isinstance(members, ElementSet) else module.subset(members).mask
    elems = list(bits(s))
    index = {e: i for i, e in enumerate(elems)}
    madd = [[[index[t] for t in bits(module.madd_masks[a][b])] for b in elems] for a in elems]
    mneg = [index[module.mneg_table[a]] for a in elems]
    act = [[index[module.act_table[a][r]] for r in range(module.ring.order)] for a in elems]
    sub = HyperModule(module.ring, madd, mneg, act, unital=module.unital,
                      name=f"{module.name or 'M'} restricted to {module.carrier.from_mask(s)!r}")
    report = sub.validate()
    if not report.ok:
        raise TheoremViolationError(f"subhypermodule failed validation: {report.failures}")
    return sub


def cyclic_submodule(module: HyperModule, m: int) -> ElementSet:
    """Smallest subhypermodule containing m."""
    module.require_validated()
    module.carrier.check_element(m)
    mask = 1 | 1 << m
    madd = module.madd_masks
    nr = module.ring.order
    while True:
        grown = mask
        for a in bits(mask):
            grown |= 1 << module.mneg_table[a]
            for b in bits(mask):
                grown |= madd[a][b]
            row = module.act_table[a]
            for r in range(nr):
                grown |= 1 << row[r]
        if grown == mask:
            return module.carrier.from_mask(mask)
        mask = grown


def action_is_zero(module: HyperModule) -> bool:
    return all(v == 0 for row in module.act_table for v in row)


def is_simple(module: HyperModule, bound: int = ENUMERATION_BOUND) -> bool:
    """Nonzero action and exactly two subhypermodules."""
    if action_is_zero(module):
        return False
    return len(enumerate_subhypermodules(module, bound)) == 2


def module_ideal_product(module: HyperModule, ideal: HyperIdeal) -> ElementSet:
    """Elements lying in finite sums of products m * a, asserted to be a
    subhypermodule."""
    module.require_validated()
    if ideal.ring is not module.ring:
        raise ValueError("ideal belongs to a different ring")
    products = 0
    for m in range(module.order):
        row = module.act_table[m]
        for a in bits(ideal.members.mask):
            products |= 1 << row[a]
    closed = sum_of_products_closure(module.madd_masks, products)
    out = module.carrier.from_mask(closed)
    check = is_subhypermodule(module, out)
    if not check:
        raise TheoremViolationError(
            f"M * ideal failed {check.clause} at {check.witness}"
        )
    return out


def annihilator(module: HyperModule) -> HyperIdeal:
    """Ring elements acting as zero on the whole module; asserted to be a
    two sided hyperideal."""
    module.require_validated()
    act = module.act_table
    n = module.order
    good = [r for r in range(module.ring.order) if all(act[m][r] == 0 for m in range(n))]
    check = is_hyperideal(module.ring, good, "two-sided")
    if not check:
        raise TheoremViolationError(
            f"annihilator failed {check.clause} at {check.witness}"
        )
    return HyperIdeal(module.ring, good, "two-sided")


@dataclass(frozen=True)
class ModuleQuotient:
    module: HyperModule
    source: HyperModule
    kernel_members: ElementSet
    cosets: tuple
    coset_of: tuple
    projection: "ModuleHom"


def quotient_module(module: HyperModule, members) -> ModuleQuotient:
    """M / K for a subhypermodule K, tables checked to be representative
    independent and the result validated."""
    check = is_subhypermodule(module, members)
    if not check:
        raise ValueError(f"not a subhypermodule: {check.clause} fails at {check.witness}")
    k = members if isinstance(members, ElementSet) else module.subset(members)
    n = module.order
    coset_mask = [module.msum(k, module.carrier.singleton(m)).mask for m in range(n)]
    cosets = [coset_mask[0]]
    for m in sorted(set(coset_mask)):
        if m != coset_mask[0]:
            cosets.append(m)
    index = {m: i for i, m in enumerate(cosets)}
    coset_of = tuple(index[coset_mask[m]] for m in range(n))

    covered = 0
    for m in cosets:
        if covered & m:
            raise TheoremViolationError("module cosets fail to partition the carrier")
        covered |= m
    if covered != module.carrier.full_mask:
        raise TheoremViolationError("module cosets fail to cover the carrier")

    q = len(cosets)
    nr = module.ring.order
    madd = [[None] * q for _ in range(q)]
    for i in range(q):
        for j in range(q):
            seen = None
            for a in bits(cosets[i]):
                for b in bits(cosets[j]):
                    s = frozenset(coset_of[t] for t in bits(module.madd_masks[a][b]))
                    if seen is None:
                        seen = s
                    elif s != seen:
                        raise TheoremViolationError(
                            f"quotient addition depends on representatives at ({i}, {j})"
                        )
            madd[i][j] = sorted(seen)
    act = [[None] * nr for _ in range(q)]
    for i in range(q):
        for r in range(nr):
            images = {coset_of[module.act_table[a][r]] for a in bits(cosets[i])}
            if len(images) != 1:
                raise TheoremViolationError(
                    f"quotient action depends on representatives at ({i}, {r})"
                )
            act[i][r] = images.pop()
    mneg = []
    for i in range(q):
        images = {coset_of[module.mneg_table[a]] for a in bits(cosets[i])}
        if len(images) != 1:
            raise TheoremViolationError("quotient negation depends on representatives")
        mneg.append(images.pop())

    out = HyperModule(module.ring, madd, mneg, act, unital=module.unital,
                      name=f"{module.name or 'M'}/{k!r}")
    report = out.validate()
    if not report.ok:
        raise TheoremViolationError(
            f"quotient by a verified subhypermodule failed validation: {report.failures}"
        )
    projection = ModuleHom(module, out, coset_of, name="project")
    return ModuleQuotient(out, module, k, tuple(cosets), coset_of, projection)


@dataclass(frozen=True)
class ModuleHom:
    """Map between right hypermodules over one ring, given by a value table."""

    source: HyperModule
    target: HyperModule
    mapping: tuple
    name: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(int(v) for v in self.mapping))
        if len(self.mapping) != self.source.order:
            raise ValueError("mapping must cover the source carrier")
        for v in self.mapping:
            self.target.carrier.check_element(v)
        if self.source.ring is not self.target.ring:
            raise ValueError("module homs need a common base ring")

    def __call__(self, m: int) -> int:
        return self.mapping[m]


def verify_module_hom(hom: ModuleHom) -> VerificationReport:
    """Strong additivity (set equality) plus action equivariance."""
    src, dst, f = hom.source, hom.target, hom.mapping
    checks = []
    checks.append(AxiomCheck(
        "zero", f[0] == 0, () if f[0] == 0 else (0,),
        "" if f[0] == 0 else "0 must map to 0"))

    bad = None
    detail = ""
    for a in range(src.order):
        for b in range(src.order):
            image = mask_of(f[t] for t in bits(src.madd_masks[a][b]))
            expected = dst.madd_masks[f[a]][f[b]]
            if image != expected:
                bad = (a, b)
                detail = ("image only covers part of the target hypersum"
                          if image & ~expected == 0 else
                          "image escapes the target hypersum")
                break
        if bad:
            break
    checks.append(AxiomCheck("strong-addition", bad is None, bad or (), detail))

    bad = None
    for a in range(src.order):
        for r in range(src.ring.order):
            if f[src.act_table[a][r]] != dst.act_table[f[a]][r]:
                bad = (a, r)
                break
        if bad:
            break
    checks.append(AxiomCheck(
        "action", bad is None, bad or (),
        "" if bad is None else "f(m r) != f(m) r at " + str(bad)))

    return VerificationReport(subject=hom.name or "module hom", checks=tuple(checks))


def hom_kernel(hom: ModuleHom) -> ElementSet:
    """Preimage of 0; asserted to be a subhypermodule of the source."""
    mask = mask_of(m for m, v in enumerate(hom.mapping) if v == 0)
    out = hom.source.carrier.from_mask(mask)
    check = is_subhypermodule(hom.source, out)
    if not check:
        raise TheoremViolationError(f"kernel failed {check.clause} at {check.witness}")
    return out


def hom_image(hom: ModuleHom) -> ElementSet:
    """Range; asserted to be a subhypermodule of the target."""
    mask = mask_of(hom.mapping)
    out = hom.target.carrier.from_mask(mask)
    check = is_subhypermodule(hom.target, out)
    if not check:
        raise TheoremViolationError(f"image failed {check.clause} at {check.witness}")
    return out


def enumerate_module_homs(source: HyperModule, target: HyperModule,
                          bound: int = HOM_SEARCH_BOUND) -> tuple:
    """All verified module homs, exhaustively over maps fixing 0."""
    if source.order > bound or target.order > bound:
        raise BoundExceededError(
            f"hom search is exhaustive over {target.order}^{source.order - 1} maps; "
            f"orders ({source.order}, {target.order}) exceed the bound {bound}"
        )
    out = []
    for rest in itertools.product(range(target.order), repeat=source.order - 1):
        hom = ModuleHom(source, target, (0,) + rest)
        if verify_module_hom(hom).ok:
            out.append(hom)
    return tuple(out)


def _profile(module: HyperModule, m: int) -> tuple:
    # invariants of m under any isomorphism (which fixes the ring pointwise)
    sizes = tuple(sorted(module.madd_masks[m][b].bit_count() for b in range(module.order)))
    self_sum = module.madd_masks[m][m].bit_count()
    zeros = tuple(module.act_table[m][r] == 0 for r in range(module.ring.order))
    return (sizes, self_sum, module.mneg_table[m] == m, zeros)


def find_isomorphism(a: HyperModule, b: HyperModule) -> tuple | None:
    """A bijective module hom a -> b as a mapping tuple, or None.

    Permutation search fixing 0, pruned by local structure profiles.
    """
    if a.ring is not b.ring or a.order != b.order:
        return None
    n = a.order
    prof_a = [_profile(a, m) for m in range(n)]
    prof_b = [_profile(b, m) for m in range(n)]
    if sorted(prof_a) != sorted(prof_b):
        return None
    rest = range(1, n)
    for perm in itertools.permutations(rest):
        mapping = (0,) + perm
        if any(prof_a[m] != prof_b[mapping[m]] for m in rest):
            continue
        hom = ModuleHom(a, b, mapping)
        if verify_module_hom(hom).ok:
            return mapping
    return None


def restrict_scalars(module: HyperModule, hom) -> HyperModule:
    """View a module over the hom's target as one over its source, acting
    through the hom; the axioms are re-verified rather than assumed."""
    if hom.target is not module.ring:
        raise ValueError("module must live over the hom's target ring")
    act = [[module.act_table[m][hom.mapping[r]] for r in range(hom.source.order)]
           for m in range(module.order)]
    out = HyperModule(hom.source,
                      madd=[[list(bits(x)) for x in row] for row in module.madd_masks],
                      mneg=module.mneg_table,
                      act=act,
                      unital=False,
                      name=f"{module.name or 'M'} via {hom.name or 'hom'}")
    report = out.validate()
    if not report.ok:
        raise TheoremViolationError(
            f"scalar restriction failed validation: {report.failures}"
        )
    return out

"""Finite Krasner hyperrings over a dense carrier.

A Krasner hyperring (R, +, *, -, 0) has a multivalued addition: a + b is a
nonempty subset of R rather than a single element.  The additive structure
is a canonical hypergroup and multiplication is single valued, associative,
absorbing through 0 and distributive over the hyperaddition (as set
equality on both sides).

Carriers are index sets {0, .., n-1} and element 0 is the additive
identity by convention.  Subsets are stored as bit masks, so all the set
algebra below is integer arithmetic.

Structures built from raw tables start out unchecked.  Run ``validate()``
(or the individual ``verify_*`` functions) before handing a structure to
the lattice, module, or spectrum layers; those layers refuse unchecked
input rather than silently trusting a table.
"""

from __future__ import annotations

from dataclasses import dataclass


class CarrierMismatchError(ValueError):
    """Two operands live over different carriers."""


class NotValidatedError(RuntimeError):
    """A structure was used before its verification passed."""


class BoundExceededError(ValueError):
    """An enumeration would exceed its configured bound."""


class TheoremViolationError(AssertionError):
    """A property that holds for every valid structure failed.

    Raised only from invariants that are theorems for verified input, so
    seeing one means either the input bypassed validation or the theorem
    itself has a counterexample worth reporting.
    """


def mask_of(members) -> int:
    m = 0
    for i in members:
        m |= 1 << i
    return m


def bits(mask: int):
    """Indices of the set bits of ``mask``, ascending."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


class Carrier:
    """Index set {0, .., size-1}.  Compared by identity on purpose:
    two structures of equal order still have distinct carriers."""

    __slots__ = ("size", "full_mask")

    def __init__(self, size: int):
        if size < 1:
            raise ValueError("carrier needs at least the zero element")
        self.size = size
        self.full_mask = (1 << size) - 1

    def check_element(self, i: int) -> int:
        if not 0 <= i < self.size:
            raise ValueError(f"element {i} outside carrier of size {self.size}")
        return i

    def subset(self, members) -> "ElementSet":
        m = 0
        for i in members:
            self.check_element(i)
            m |= 1 << i
        return ElementSet(self, m)

    def from_mask(self, mask: int) -> "ElementSet":
        if mask & ~self.full_mask:
            raise ValueError("mask has bits outside the carrier")
        return ElementSet(self, mask)

    def singleton(self, i: int) -> "ElementSet":
        self.check_element(i)
        return ElementSet(self, 1 << i)

    def empty(self) -> "ElementSet":
        return ElementSet(self, 0)

    def full(self) -> "ElementSet":
        return ElementSet(self, self.full_mask)

    def __repr__(self):
        return f"Carrier({self.size})"


class ElementSet:
    """Subset of a carrier, stored as a bit mask."""

    __slots__ = ("carrier", "mask")

    def __init__(self, carrier: Carrier, mask: int):
        self.carrier = carrier
        self.mask = mask

    def _lift(self, other: "ElementSet") -> int:
        if not isinstance(other, ElementSet):
            raise TypeError(f"expected ElementSet, got {type(other).__name__}")
        if other.carrier is not self.carrier:
            raise CarrierMismatchError("operands live over different carriers")
        return other.mask

    def __or__(self, other):
        return ElementSet(self.carrier, self.mask | self._lift(other))

    def __and__(self, other):
        return ElementSet(self.carrier, self.mask & self._lift(other))

    def __sub__(self, other):
        return ElementSet(self.carrier, self.mask & ~self._lift(other))

    def complement(self) -> "ElementSet":
        return ElementSet(self.carrier, self.carrier.full_mask & ~self.mask)

    def __le__(self, other):
        m = self._lift(other)
        return self.mask & ~m == 0

    def __lt__(self, other):
        m = self._lift(other)
        return self.mask != m and self.mask & ~m == 0

    def __eq__(self, other):
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.carrier is other.carrier and self.mask == other.mask

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((id(self.carrier), self.mask))

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.carrier.size and self.mask >> i & 1 == 1

    def __iter__(self):
        return bits(self.mask)

    def __len__(self):
        return self.mask.bit_count()

    def __bool__(self):
        return self.mask != 0

    @property
    def members(self) -> tuple:
        return tuple(bits(self.mask))

    def is_full(self) -> bool:
        return self.mask == self.carrier.full_mask

    def __repr__(self):
        return "{" + ",".join(str(i) for i in self) + "}"


@dataclass(frozen=True)
class AxiomCheck:
    axiom: str
    ok: bool
    witness: tuple = ()
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    subject: str
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> tuple:
        return tuple(c for c in self.checks if not c.ok)

    def witness(self, axiom: str):
        for c in self.checks:
            if c.axiom == axiom:
                return c.witness
        raise KeyError(axiom)

    def as_dict(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checks": [
                {
                    "axiom": c.axiom,
                    "ok": c.ok,
                    "witness": list(c.witness),
                    "detail": c.detail,
                }
                for c in self.checks
            ],
        }


def _normalize_set_table(n: int, table) -> tuple:
    rows = tuple(table)
    if len(rows) != n:
        raise ValueError(f"set table must have {n} rows, got {len(rows)}")
    out = []
    for row in rows:
        cells = tuple(row)
        if len(cells) != n:
            raise ValueError(f"set table rows must have {n} cells, got {len(cells)}")
        out.append(tuple(mask_of(int(i) for i in cell) for cell in cells))
    for row in out:
        for m in row:
            if m >> n:
                raise ValueError("set table entry mentions an element outside the carrier")
    return tuple(out)


def _normalize_value_table(n: int, table, what: str) -> tuple:
    rows = tuple(table)
    if len(rows) != n:
        raise ValueError(f"{what} table must have {n} rows, got {len(rows)}")
    out = []
    for row in rows:
        cells = tuple(int(v) for v in row)
        if len(cells) != n:
            raise ValueError(f"{what} table rows must have {n} cells, got {len(cells)}")
        for v in cells:
            if not 0 <= v < n:
                raise ValueError(f"{what} value {v} outside carrier of size {n}")
        out.append(cells)
    return tuple(out)


class HyperRing:
    """Krasner hyperring given by explicit finite tables.

    add   : n x n table of nonempty subsets (any iterables of indices)
    neg   : length n list, neg[a] is the claimed additive inverse of a
    mul   : n x n table of single elements
    unit  : optional claimed multiplicative identity

    The tables are stored as given.  Nothing is trusted until
    ``validate()`` has passed; most operations in the other modules call
    ``require_validated()`` first.
    """

    __slots__ = ("carrier", "add_masks", "neg_table", "mul_table", "unit", "name", "_checked")

    def __init__(self, add, neg, mul, unit=None, name=None):
        neg_t = tuple(int(v) for v in neg)
        n = len(neg_t)
        self.carrier = Carrier(n)
        self.add_masks = _normalize_set_table(n, add)
        for v in neg_t:
            self.carrier.check_element(v)
        self.neg_table = neg_t
        self.mul_table = _normalize_value_table(n, mul, "mul")
        self.unit = None if unit is None else self.carrier.check_element(int(unit))
        self.name = name
        self._checked = False

    @property
    def order(self) -> int:
        return self.carrier.size

    @property
    def is_unital(self) -> bool:
        return self.unit is not None

    @property
    def validated(self) -> bool:
        return self._checked

    def require_validated(self):
        if not self._checked:
            raise NotValidatedError(
                f"{self!r} has not passed validation; call validate() first"
            )

    def add(self, a: int, b: int) -> ElementSet:
        return ElementSet(self.carrier, self.add_masks[a][b])

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def subset(self, members) -> ElementSet:
        return self.carrier.subset(members)

    def singleton(self, i: int) -> ElementSet:
        return self.carrier.singleton(i)

    def full_set(self) -> ElementSet:
        return self.carrier.full()

    def validate(self) -> "RingReport":
        """Run both verification passes and mark the ring usable on success."""
        hg = verify_canonical_hypergroup(self)
        ring = verify_hyperring(self)
        report = RingReport(hypergroup=hg, ring=ring)
        if report.ok:
            self._checked = True
        return report

    def encoding(self) -> tuple:
        """Canonical tuple encoding of the tables (used for ordering,
        fingerprints and isomorphism tests)."""
        return (
            self.order,
            tuple(m for row in self.add_masks for m in row),
            self.neg_table,
            tuple(v for row in self.mul_table for v in row),
            -1 if self.unit is None else self.unit,
        )

    def __repr__(self):
        label = self.name or f"hyperring of order {self.order}"
        return f"<HyperRing {label}{'' if self._checked else ' (unchecked)'}>"


@dataclass(frozen=True)
class RingReport:
    hypergroup: VerificationReport
    ring: VerificationReport

    @property
    def ok(self) -> bool:
        return self.hypergroup.ok and self.ring.ok

    @property
    def failures(self) -> tuple:
        return self.hypergroup.failures + self.ring.failures

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "hypergroup": self.hypergroup.as_dict(),
            "ring": self.ring.as_dict(),
        }


def hypersum(ring: HyperRing, x: ElementSet, y: ElementSet) -> ElementSet:
    """Set sum: union of a + b over a in x, b in y.  Empty inputs give
    the empty set."""
    if x.carrier is not ring.carrier or y.carrier is not ring.carrier:
        raise CarrierMismatchError("hypersum operands must live over the ring's carrier")
    add = ring.add_masks
    out = 0
    for a in bits(x.mask):
        row = add[a]
        for b in bits(y.mask):
            out |= row[b]
    return ElementSet(ring.carrier, out)


def neg_set(ring: HyperRing, x: ElementSet) -> ElementSet:
    """Elementwise additive inverse of a subset."""
    if x.carrier is not ring.carrier:
        raise CarrierMismatchError("neg_set operand must live over the ring's carrier")
    return ElementSet(ring.carrier, mask_of(ring.neg_table[a] for a in bits(x.mask)))


def _sum_row(add, row_mask: int, c: int) -> int:
    out = 0
    for x in bits(row_mask):
        out |= add[x][c]
    return out


def _sum_col(add, a: int, col_mask: int) -> int:
    out = 0
    row = add[a]
    for y in bits(col_mask):
        out |= row[y]
    return out


def hypergroup_checks(n: int, add, neg) -> list:
    """Axiom checks for a canonical hypergroup given raw mask tables.

    Shared by rings and modules; returns a list of AxiomCheck.  Witnesses
    are the smallest offending tuples in scan order.
    """
    checks = []

    bad = None
    for a in range(n):
        for b in range(n):
            if not add[a][b]:
                bad = (a, b)
                break
        if bad:
            break
    checks.append(AxiomCheck(
        "totality", bad is None, bad or (),
        "" if bad is None else f"{bad[0]} + {bad[1]} is empty"))
    if bad is not None:
        # the remaining checks assume nonempty entries
        return checks

    bad = None
    for a in range(n):
        for b in range(a + 1, n):
            if add[a][b] != add[b][a]:
                bad = (a, b)
                break
        if bad:
            break
    checks.append(AxiomCheck(
        "commutativity", bad is None, bad or (),
        "" if bad is None else f"{bad[0]} + {bad[1]} differs from {bad[1]} + {bad[0]}"))

    bad = None
    for a in range(n):
        for b in range(n):
            ab = add[a][b]
            for c in range(n):
                if _sum_row(add, ab, c) != _sum_col(add, a, add[b][c]):
                    bad = (a, b, c)
                    break
            if bad:
                break
        if bad:
            break
    checks.append(AxiomCheck(
        "associativity", bad is None, bad or (),
        "" if bad is None else "(a + b) + c != a + (b + c) at " + str(bad)))

    bad = None
    for a in range(n):
        if add[a][0] != 1 << a:
            bad = (a,)
            break
    checks.append(AxiomCheck(
        "identity", bad is None, bad or (),
        "" if bad is None else f"{bad[0]} + 0 != {{{bad[0]}}}"))

    bad = None
    detail = ""
    for a in range(n):
        candidates = [b for b in range(n) if add[a][b] & 1]
        if len(candidates) != 1:
            bad = (a,)
            detail = f"element {a} has {len(candidates)} additive inverses"
            break
        if candidates[0] != neg[a]:
            bad = (a,)
            detail = f"neg table says -{a} = {neg[a]} but 0 lies in {a} + {candidates[0]}"
            break
    checks.append(AxiomCheck("negation", bad is None, bad or (), detail))

    # reversibility is stated relative to the declared neg table, so it is
    # still checkable when the negation axiom itself failed
    bad = None
    detail = ""
    for b in range(n):
        nb = neg[b]
        for c in range(n):
            nc = neg[c]
            for a in bits(add[b][c]):
                # a in b + c forces c in -b + a and b in a - c
                if not add[nb][a] >> c & 1:
                    bad, detail = (a, b, c), f"{c} not in -{b} + {a}"
                    break
                if not add[a][nc] >> b & 1:
                    bad, detail = (a, b, c), f"{b} not in {a} - {c}"
                    break
            if bad:
                break
        if bad:
            break
    checks.append(AxiomCheck("reversibility", bad is None, bad or (), detail))

    return checks


def verify_canonical_hypergroup(ring: HyperRing) -> VerificationReport:
    """Check the additive tables against the canonical hypergroup axioms."""
    checks = hypergroup_checks(ring.order, ring.add_masks, ring.neg_table)
    return VerificationReport(subject=ring.name or "hypergroup", checks=tuple(checks))


def verify_hyperring(ring: HyperRing) -> VerificationReport:
    """Check the multiplicative axioms.

    Meaningful on top of a passing hypergroup check; run ``validate()``
    to get both in the right order.
    """
    n = ring.order
    add = ring.add_masks
    mul = ring.mul_table
    checks = []

    bad = None
    for a in range(n):
        for b in range(n):
            ab = mul[a][b]
            for c in range(n):
                if mul[ab][c] != mul[a][mul[b][c]]:
                    bad = (a, b, c)
                    break
            if bad:
                break
        if bad:
            break
    checks.append(AxiomCheck(
        "mul-associativity", bad is None, bad or (),
        "" if bad is None else "(a * b) * c != a * (b * c) at " + str(bad)))

    bad = None
    for a in range(n):
        if mul[a][0] != 0 or mul[0][a] != 0:
            bad = (a,)
            break
    checks.append(AxiomCheck(
        "absorption", bad is None, bad or (),
        "" if bad is None else f"products of {bad[0]} with 0 are not 0"))

    bad = None
    for a in range(n):
        row = mul[a]
        for b in range(n):
            for c in range(n):
                image = mask_of(row[t] for t in bits(add[b][c]))
                if image != add[row[b]][row[c]]:
                    bad = (a, b, c)
                    break
            if bad:
                break
        if bad:
            break
    checks.append(AxiomCheck(
        "left-distributivity", bad is None, bad or (),
        "" if bad is None else "a * (b + c) != a*b + a*c at " + str(bad)))

    bad = None
    for c in range(n):
        for a in range(n):
            for b in range(n):
                image = mask_of(mul[t][c] for t in bits(add[a][b]))
                if image != add[mul[a][c]][mul[b][c]]:
                    bad = (a, b, c)
                    break
            if bad:
                break
        if bad:
            break
    checks.append(AxiomCheck(
        "right-distributivity", bad is None, bad or (),
        "" if bad is None else "(a + b) * c != a*c + b*c at " + str(bad)))

    if ring.unit is not None:
        u = ring.unit
        bad = None
        for a in range(n):
            if mul[a][u] != a or mul[u][a] != a:
                bad = (a,)
                break
        checks.append(AxiomCheck(
            "unit", bad is None, bad or (),
            "" if bad is None else f"{u} does not act as identity on {bad[0]}"))

    return VerificationReport(subject=ring.name or "hyperring", checks=tuple(checks))


def find_unit(n: int, mul) -> int | None:
    """Two sided multiplicative identity of a raw mul table, if any."""
    for u in range(n):
        if all(mul[a][u] == a and mul[u][a] == a for a in range(n)):
            return u
    return None

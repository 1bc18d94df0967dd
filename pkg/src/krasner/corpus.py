"""Exhaustive generation of small Krasner hyperrings.

Hyperaddition tables are found first.  A table is a membership relation
on triples (p, q, r) standing for r in p + q, and commutativity plus the
two reversibility moves generate a little group acting on triples; any
valid table is a union of orbits.  The identity and negation axioms pin
some orbits in, rule some out, and kill a negation table outright when
one orbit is pinned both ways.  That leaves a subset search over the few
free orbits, filtered by nonemptiness and associativity, and every
survivor is pushed through the full validator rather than trusted.

Multiplication tables are then filled in by backtracking over the
nonzero entries, pruning with whatever associativity and distributivity
instances are already determined.

Everything is deterministic: fixed enumeration orders, no hashing of
anything but canonical encodings.  Rings are deduplicated up to
relabelings fixing 0, and the canonical form is the minimum encoding
over those relabelings.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass

from .core import HyperRing, TheoremViolationError, bits, find_unit, hypergroup_checks

HARD_ORDER_CAP = 4


def _involutions(n: int) -> list:
    """Self inverse permutations of 0..n-1 fixing 0, lexicographic."""
    out = []
    perm = [None] * n
    if n:
        perm[0] = 0

    def rec(i):
        if i == n:
            out.append(tuple(perm))
            return
        if perm[i] is not None:
            rec(i + 1)
            return
        perm[i] = i
        rec(i + 1)
        perm[i] = None
        for j in range(i + 1, n):
            if perm[j] is None:
                perm[i], perm[j] = j, i
                rec(i + 1)
                perm[i], perm[j] = None, None

    rec(1 if n > 1 else n)
    return out


def _triple_orbits(n: int, nu: tuple):
    """Orbits of (p, q, r) under swap and the two reversibility moves."""
    total = n * n * n
    seen = [False] * total
    orbits = []
    for start in range(total):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        orbit = []
        while stack:
            t = stack.pop()
            orbit.append(t)
            p, rest = divmod(t, n * n)
            q, r = divmod(rest, n)
            for img in ((q * n + p) * n + r,
                        (nu[p] * n + r) * n + q,
                        (r * n + nu[q]) * n + p):
                if not seen[img]:
                    seen[img] = True
                    stack.append(img)
        orbit.sort()
        orbits.append(tuple(orbit))
    orbits.sort()
    return orbits


def _associative(n: int, add) -> bool:
    for a in range(n):
        row_a = add[a]
        for b in range(n):
            ab = row_a[b]
            for c in range(n):
                lhs = 0
                for t in bits(ab):
                    lhs |= add[t][c]
                rhs = 0
                for u in bits(add[b][c]):
                    rhs |= row_a[u]
                if lhs != rhs:
                    return False
    return True


def enumerate_hypergroups(n: int, dedupe: bool = True) -> tuple:
    """All canonical hypergroups on {0..n-1} as (add_masks, neg) pairs.

    With dedupe, one representative per relabeling class (permutations
    fixing 0), sorted by canonical encoding.
    """
    if n < 1:
        raise ValueError("order must be positive")
    if n == 1:
        return ((((1,),), (0,)),)

    found = []
    for nu in _involutions(n):
        in_mask = 0
        out_mask = 0
        for a in range(n):
            in_mask |= 1 << (a * n + 0) * n + a
            in_mask |= 1 << (0 * n + a) * n + a
            in_mask |= 1 << (a * n + nu[a]) * n + 0
            for r in range(n):
                if r != a:
                    out_mask |= 1 << (a * n + 0) * n + r
                    out_mask |= 1 << (0 * n + a) * n + r
            for b in range(n):
                if b != nu[a]:
                    out_mask |= 1 << (a * n + b) * n + 0

        base = 0
        free = []
        dead = False
        for orbit in _triple_orbits(n, nu):
            omask = 0
            for t in orbit:
                omask |= 1 << t
            has_in = bool(omask & in_mask)
            has_out = bool(omask & out_mask)
            if has_in and has_out:
                dead = True
                break
            if has_in:
                base |= omask
            elif not has_out:
                free.append(omask)
        if dead:
            continue

        # a subset must leave no cell empty; record which free orbits can
        # rescue each cell the base misses
        requirements = []
        impossible = False
        for p in range(n):
            for q in range(n):
                cell = 0
                for r in range(n):
                    cell |= 1 << (p * n + q) * n + r
                if base & cell:
                    continue
                req = 0
                for i, omask in enumerate(free):
                    if omask & cell:
                        req |= 1 << i
                if not req:
                    impossible = True
                    break
                requirements.append(req)
            if impossible:
                break
        if impossible:
            continue

        for chosen in range(1 << len(free)):
            if any(not chosen & req for req in requirements):
                continue
            t_mask = base
            for i in bits(chosen):
                t_mask |= free[i]
            add = tuple(
                tuple(
                    sum(1 << r for r in range(n) if t_mask >> (p * n + q) * n + r & 1)
                    for q in range(n))
                for p in range(n))
            if not _associative(n, add):
                continue
            checks = hypergroup_checks(n, add, nu)
            if not all(c.ok for c in checks):
                raise TheoremViolationError(
                    "orbit construction produced a bad table; "
                    + "; ".join(c.axiom for c in checks if not c.ok)
                )
            found.append((add, nu))

    if not dedupe:
        return tuple(sorted(found))
    canon = {}
    for add, nu in found:
        key = min(_relabel_add(n, add, perm)
                  for perm in _zero_fixing_perms(n))
        if key not in canon:
            canon[key] = (add, nu)
    return tuple(canon[k] for k in sorted(canon))


def _zero_fixing_perms(n: int):
    for rest in itertools.permutations(range(1, n)):
        yield (0,) + rest


def _relabel_add(n: int, add, perm) -> tuple:
    out = [[0] * n for _ in range(n)]
    for p in range(n):
        for q in range(n):
            m = 0
            for r in bits(add[p][q]):
                m |= 1 << perm[r]
            out[perm[p]][perm[q]] = m
    return tuple(tuple(row) for row in out)


def mult_tables(n: int, add) -> tuple:
    """Every multiplication making the hypergroup a hyperring, as full
    n x n tuples; zero row and column forced, deterministic order."""
    if n == 1:
        return (((0,),),)
    sums = [[tuple(bits(add[b][c])) for c in range(n)] for b in range(n)]
    slots = [(i, j) for i in range(1, n) for j in range(1, n)]
    table = [[0] * n for _ in range(n)]
    known = [[i == 0 or j == 0 for j in range(n)] for i in range(n)]
    out = []

    def consistent() -> bool:
        for x in range(1, n):
            for y in range(1, n):
                if not known[x][y]:
                    continue
                xy = table[x][y]
                for z in range(1, n):
                    if not known[y][z]:
                        continue
                    yz = table[y][z]
                    if known[xy][z] and known[x][yz] and table[xy][z] != table[x][yz]:
                        return False
        for a in range(1, n):
            row = table[a]
            ka = known[a]
            for b in range(n):
                for c in range(b, n):
                    parts = sums[b][c]
                    if ka[b] and ka[c] and all(ka[t] for t in parts):
                        image = 0
                        for t in parts:
                            image |= 1 << row[t]
                        if image != add[row[b]][row[c]]:
                            return False
                    if known[b][a] and known[c][a] and all(known[t][a] for t in parts):
                        image = 0
                        for t in parts:
                            image |= 1 << table[t][a]
                        if image != add[table[b][a]][table[c][a]]:
                            return False
        return True

    def rec(k):
        if k == len(slots):
            out.append(tuple(tuple(row) for row in table))
            return
        i, j = slots[k]
        for v in range(n):
            table[i][j] = v
            known[i][j] = True
            if consistent():
                rec(k + 1)
            known[i][j] = False
        table[i][j] = 0

    rec(0)
    return tuple(out)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    ring: HyperRing


def ring_canonical_key(ring: HyperRing) -> tuple:
    """Minimum encoding over relabelings fixing 0; equal keys mean
    isomorphic rings."""
    n = ring.order
    best = None
    for perm in _zero_fixing_perms(n):
        add = _relabel_add(n, ring.add_masks, perm)
        neg = [0] * n
        mul = [[0] * n for _ in range(n)]
        for a in range(n):
            neg[perm[a]] = perm[ring.neg_table[a]]
            for b in range(n):
                mul[perm[a]][perm[b]] = perm[ring.mul_table[a][b]]
        key = (tuple(x for row in add for x in row), tuple(neg),
               tuple(v for row in mul for v in row))
        if best is None or key < best:
            best = key
    return (n,) + best


_CACHE = {}


def generate_corpus(max_order: int = HARD_ORDER_CAP, dedupe: bool = True,
                    per_order_limit: int | None = None) -> tuple:
    """Every hyperring up to max_order as named validated entries.

    per_order_limit keeps only the first so many rings of each order in
    canonical order, which is how big sweeps stay bounded without losing
    reproducibility.
    """
    if max_order > HARD_ORDER_CAP:
        raise ValueError(
            f"generation is exhaustive and grows savagely; {max_order} is past "
            f"the supported cap {HARD_ORDER_CAP}"
        )
    key = (max_order, dedupe, per_order_limit)
    if key in _CACHE:
        return _CACHE[key]
    entries = []
    for n in range(1, max_order + 1):
        rings = []
        seen = set()
        for add, nu in enumerate_hypergroups(n, dedupe=dedupe):
            members = [[list(bits(m)) for m in row] for row in add]
            for mul in mult_tables(n, add):
                ring = HyperRing(members, nu, mul, unit=find_unit(n, mul))
                if dedupe:
                    ck = ring_canonical_key(ring)
                    if ck in seen:
                        continue
                    seen.add(ck)
                report = ring.validate()
                if not report.ok:
                    raise TheoremViolationError(
                        f"generator produced an invalid ring: {report.failures}"
                    )
                rings.append(ring)
        rings.sort(key=lambda r: r.encoding())
        if per_order_limit is not None:
            rings = rings[:per_order_limit]
        for i, ring in enumerate(rings):
            ring.name = f"r{n}_{i}"
            entries.append(CorpusEntry(name=ring.name, ring=ring))
    result = tuple(entries)
    _CACHE[key] = result
    return result


def corpus_fingerprint(entries, max_order: int, dedupe: bool = True,
                       per_order_limit: int | None = None) -> str:
    """Stable digest of the generation parameters and every table."""
    h = hashlib.sha256()
    h.update(repr((max_order, dedupe, per_order_limit)).encode())
    for e in entries:
        h.update(e.name.encode())
        h.update(repr(e.ring.encoding()).encode())
    return h.hexdigest()

"""How many finite Krasner hyperrings are there, really?

Exhaustive counts by order, raw and up to relabeling. The growth is why
the generator caps out at order 4.
"""

from krasner.corpus import (
    enumerate_hypergroups,
    generate_corpus,
    mult_tables,
    ring_canonical_key,
)

print("canonical hypergroups by order (raw / distinct up to relabeling):")
for n in (1, 2, 3):
    raw = enumerate_hypergroups(n, dedupe=False)
    slim = enumerate_hypergroups(n)
    print(f"  order {n}: {len(raw):3d} / {len(slim)}")
print(f"  order 4:       / {len(enumerate_hypergroups(4))}")

print("\nmultiplications compatible with each order 3 hypergroup:")
for add, neg in enumerate_hypergroups(3):
    muls = mult_tables(3, add)
    rows = ["".join(f"{m:x}" for m in row) for row in add]
    print(f"  add masks {'/'.join(rows)}: {len(muls)} multiplication(s)")

corpus = generate_corpus(max_order=4)
by_order = {}
for entry in corpus:
    by_order[entry.ring.order] = by_order.get(entry.ring.order, 0) + 1
print(f"\nfull corpus: {len(corpus)} rings: " +
      ", ".join(f"{c} of order {o}" for o, c in sorted(by_order.items())))

unital = sum(1 for e in corpus if e.ring.is_unital)
print(f"{unital} have a unit, {len(corpus) - unital} do not")

# canonical keys are what keeps the corpus free of relabeled duplicates
e = corpus[7]
print(f"\ncanonical key of {e.name}: {ring_canonical_key(e.ring)}")

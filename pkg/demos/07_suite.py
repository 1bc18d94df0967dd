"""Sweep the whole corpus through every theorem check and read the report.

The same sweep backs `khr check`; here the report object is poked at
directly. Skips are structural (a check needing a unit skips unit-free
rings); info lines mark rings where a unit-dependent equivalence, true
as stated only with a unit, comes apart.
"""

from collections import Counter

from krasner.suite import CHECK_IDS, counterexample_search, run_theorem_suite

report = run_theorem_suite(max_order=3)
print(f"{len(report.rows)} rings x {len(CHECK_IDS)} checks -> {report.counts}")

statuses = Counter()
for row in report.rows:
    for r in row.results:
        statuses[r.id, r.status] += 1
worst = [(cid, s) for (cid, s), c in statuses.items() if s in ("info", "skip")]
print("\nchecks that ever skip or inform:")
for cid in sorted({cid for cid, _ in worst}):
    info = statuses.get((cid, "info"), 0)
    skip = statuses.get((cid, "skip"), 0)
    print(f"  {cid}: {skip} skip(s), {info} info line(s)")

print("\none ring in full:")
row = report.rows[9]
print(f"{row.name} (order {row.order})")
for r in row.results:
    detail = f" - {r.detail}" if r.detail and r.status != "pass" else ""
    print(f"  [{r.status}] {r.id}{detail}")

# the searches hunt for separations the theorems leave open
for kind in ("t1-failure", "prime-not-primitive"):
    result = counterexample_search(kind, max_order=3)
    print(f"\nsearch {kind}: {len(result.found)} finding(s) "
          f"in {result.scanned} rings")
    for name, detail in result.found[:3]:
        print(f"  {name}: {detail}")

"""
The relation catalog
====================

Every contiguous relation, parameter recurrence, Kummer transformation
and quadratic transformation the package knows about lives in one
catalog of records.  Each record carries the machine-checkable residual
form of its identity, so the whole catalog doubles as a self-test: the
`hyperd verify` command sweeps it over pseudo-random points.
"""

from collections import Counter

from hyperd.relations import apply_ladder, build_catalog, check_relation, \
    sweep_record

cat = build_catalog()

# %%
# What is in it.

print(len(cat), "records")
print(sorted(Counter(r.family for r in cat.values()).items()))
print()
for rid in ("f0.contiguity", "f1.recurF.raise-up", "f2.kummer.pow",
            "q.double5"):
    print("%-22s %s" % (rid, cat[rid].statement))

# %%
# Checking one relation at one point returns the scaled residual.

res = check_relation(cat["f0.contiguity"], {"m": 1}, 0.4)
print("\nf0.contiguity at m=1, z=0.4:", res)

# %%
# Sweeping a record draws parameters and points from a fixed seed, so
# the numbers are reproducible run to run.

pts = sweep_record(cat["f2.recurFI.0mp"], n=25)
print("f2.recurFI.0mp 25-point sweep, worst scaled residual:",
      max(p.scaled for p in pts))

# %%
# Recurrence records double as ladder operators: step alpha up through
# the solved-for side of the identity.

r = apply_ladder(cat["f0.recurF.raise"], {"alpha": 0.3}, 0.5)
print("\nF(alpha=1.3; 0.5) via ladder:", r.value)

# %%
# Relations guard their own hypotheses.  A relation that lowers m is
# inapplicable at m = 0 and says so instead of producing a wrong value.

from hyperd.errors import Inapplicable

try:
    check_relation(cat["f1.recurD.lower-down"], {"m": 0, "theta": 0.7}, 0.5)
except Inapplicable as e:
    print("\nm = 0:", e)

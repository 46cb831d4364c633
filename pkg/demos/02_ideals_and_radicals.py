"""Ideal enumeration, comparizer ideals, and the radicals.

Right ideals are exactly the down-closed sets of the divisibility preorder
(b below a when b lies in aS), so they are enumerated without touching the
power set.  The comparizer radical C(S) collects every element c such that
for all a, b either a is in bS or b*c falls into aS; S is a right chain
monoid exactly when C(S) is everything.
"""
from sgideals import IdealKind, enumerate_ideals, mask_elems
from sgideals.classify import comparizer_radical, is_right_chain, radicals
from sgideals.corpus import corpus

for name in ("min2", "chain_x4", "ef4", "delta3"):
    entry = corpus()[name]
    s = entry.semigroup
    nm = entry.element_names

    def show(mask):
        return "{" + ", ".join(nm[i] for i in mask_elems(mask)) + "}"

    fam = enumerate_ideals(s, IdealKind.RIGHT)
    print(f"== {name} (order {s.n}) ==")
    print(f"  right ideals ({len(fam)}):")
    for m in fam:
        print("   ", show(m))
    print("  right chain:", is_right_chain(s),
          " comparizer radical:", show(comparizer_radical(s)))
    rad = radicals(s)
    print("  prime radical:            ", show(rad.prime_radical))
    print("  completely prime radical: ", show(rad.completely_prime_radical))
    print("  nil radical:              ", show(rad.nil_radical))
    print("  nilpotent elements:       ", show(rad.nilpotent_elements))
    print("  nonunits:                 ", show(rad.nonunits))
    print()

print("Note how the delta monoid (x_i x_j = 0 unless i == j) drives the")
print("comparizer radical down to the zero ideal: its principal right")
print("ideals are pairwise incomparable, so no nonzero element can mediate")
print("between them.")

"""The completely prime spectrum and the classification of its covers.

A prime segment is a covering pair of the completely prime spectrum, with a
formal bottom segment below each minimal member.  Segments classify as
archimedean (each gap element sits in an ideal whose power intersection is
the base), simple (nothing strictly between), or exceptional (a prime but
not completely prime ideal covers from below); degenerate finite inputs can
satisfy two branch definitions at once, in which case the label follows the
case order of the classification argument and the overlap is reported.
"""
from sgideals import mask_elems
from sgideals.corpus import build_chain_x, corpus
from sgideals.segments import classify_segment, completely_prime_spectrum, prime_segments

for name in ("min2", "chain_x4", "ef4", "min_chain4", "delta3"):
    entry = corpus()[name]
    s = entry.semigroup
    nm = entry.element_names
    show = lambda m: "{" + ", ".join(nm[i] for i in mask_elems(m)) + "}"

    print(f"== {name} ==")
    spec = completely_prime_spectrum(s)
    print("  spectrum:", ", ".join(show(m) for m in spec))
    for seg in prime_segments(s):
        cls = classify_segment(s, seg)
        lo = "(bottom)" if seg.bottom else show(seg.lower)
        tag = "  [branches overlap]" if cls.overlap else ""
        print(f"  {lo} < {show(seg.upper)}  ->  {cls.label}{tag}")
    print()

print("The order-3 chain with x^2 = 0 is the degenerate case: its only")
print("segment satisfies both the simple and the archimedean definitions.")
s = build_chain_x(1)
(seg,) = prime_segments(s)
cls = classify_segment(s, seg)
print("branches:", cls.branches, "-> label", cls.label)

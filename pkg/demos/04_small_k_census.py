"""Brute-force censuses of G_k for k <= 5: degrees, triangles, clique numbers.

These are the trust anchors for everything else in the package: the searcher
and the constructions are required to agree with plain enumeration wherever
enumeration is feasible.

Run:  python demos/04_small_k_census.py
"""

import math

from modclique import OutcomeKind, SearchConfig, census, search

print("=" * 72)
print("Census of G_k for k = 2..5 (k^k vertices; degree is uniformly k!)")
print("=" * 72)
print(f"\n{'k':>3} {'vertices':>9} {'degree':>7} {'triangles':>10} {'omega':>6}")
for k in (2, 3, 4, 5):
    r = census(k)
    assert r.degree == math.factorial(k)
    print(f"{r.k:>3} {r.vertex_count:>9} {r.degree:>7} "
          f"{r.triangle_count:>10} {r.omega:>6}")

print("""
Notes:
  * even k have no triangles at all, so omega = 2 there;
  * prime k attain omega = k via the multiplication-table clique;
  * the triangle counts come from two unrelated arguments (an ordered-pair
    correspondence and, for k <= 3, direct triple enumeration) that must
    agree before the value is reported.
""")

print("=" * 72)
print("Exhaustive search agrees with the brute-force clique numbers")
print("=" * 72)
print()

for k in (2, 3, 4, 5):
    omega = census(k, with_omega=True).omega
    verdicts = []
    for size in range(2, omega + 2):
        out = search(SearchConfig(k=k, target_size=size))
        verdicts.append("found" if out.kind is OutcomeKind.FOUND else "none")
    assert verdicts == ["found"] * (omega - 1) + ["none"]
    print(f"G_{k}: sizes 2..{omega + 1} -> {', '.join(verdicts)}   (omega = {omega})")

"""Tour of the basics: the edge predicate, the bundled 4-cliques, and what a
verification report looks like when a certificate is broken.

Run:  python demos/01_edges_and_certificates.py
"""

from modclique import (
    ModFunction,
    UncheckedCertificate,
    builtin_certificate,
    difference,
    identity_function,
    is_bijection,
    is_edge,
    normalize,
    serialize,
    verify,
    zero_function,
)

print("=" * 72)
print("Vertices of G_k are functions Z_k -> Z_k; {f, g} is an edge iff")
print("(f - g) mod k is a bijection of Z_k.")
print("=" * 72)

k = 15
zero = zero_function(k)
ident = identity_function(k)
print(f"\nzero - identity is an edge in G_{k}:", is_edge(zero, ident))

doubled = ModFunction(4, tuple((2 * x) % 4 for x in range(4)))
print("zero - (2x mod 4) is an edge in G_4:", is_edge(zero_function(4), doubled))
print("  (2x mod 4 only ever takes the values 0 and 2)")

print("\n" + "=" * 72)
print("Bundled certificates: known 4-cliques for k = 15, 21, 27")
print("=" * 72)

for kk in (15, 21, 27):
    cert = builtin_certificate(kk)
    report = verify(cert)
    print(f"\n{report.summary()}")
    for row in cert.rows:
        print(f"  {row}")

print("\nEvery pairwise difference of the k=15 rows is a permutation:")
c15 = builtin_certificate(15)
for s in range(4):
    for t in range(s + 1, 4):
        d = difference(c15.rows[t], c15.rows[s])
        print(f"  rows {t}-{s}: {d}   bijection: {is_bijection(d)}")

print("\n" + "=" * 72)
print("A broken certificate gets a pinpointed violation report")
print("=" * 72)

broken = UncheckedCertificate(
    4, (zero_function(4), identity_function(4), doubled)
)
report = verify(broken)
print(f"\n{report.summary()}")
for v in report.violations:
    print(
        f"  rows ({v.row_s},{v.row_t}): difference takes value {v.value} "
        f"at both points {v.point_a} and {v.point_b}"
    )

print("\n" + "=" * 72)
print("Normalization: zero row, identity row, later rows vanish at 0, sorted")
print("=" * 72)

c21 = builtin_certificate(21)
print("\nk=21 certificate as shipped (rows 2 and 3 do not vanish at 0):")
for row in c21.rows[2:]:
    print(f"  {row}")
print("\nafter normalize (an equivalent clique; it re-verifies):")
for row in normalize(c21).rows[2:]:
    print(f"  {row}")

print("\nCanonical file form of the k=15 certificate:\n")
print(serialize(c15))

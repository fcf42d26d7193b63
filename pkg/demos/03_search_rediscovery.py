"""Exhaustive and randomized clique search.

The searcher fixes the zero and identity rows, pins every later row to 0 at
the origin, and fills the remaining cells column by column under the
pairwise used-difference constraints.  Exhausting that tree is a proof of
nonexistence for the whole graph, because every clique normalizes into the
searched subspace.

Run:  python demos/03_search_rediscovery.py
"""

from modclique import (
    OutcomeKind,
    SearchConfig,
    SearchMode,
    builtin_certificate,
    normalize,
    search,
)

print("=" * 72)
print("Exhaustive verdicts: triangle-freeness for even k, and omega(9) = 3")
print("=" * 72)
print()

for k in (2, 4, 6, 8, 10):
    out = search(SearchConfig(k=k, target_size=3))
    assert out.kind is OutcomeKind.EXHAUSTED_NONE
    print(f"G_{k:<2} has no triangle        "
          f"(exhausted {out.stats.nodes:>6} nodes in {out.stats.wall_time:.3f}s)")

out = search(SearchConfig(k=9, target_size=4))
assert out.kind is OutcomeKind.EXHAUSTED_NONE
print(f"G_9  has no 4-clique       "
      f"(exhausted {out.stats.nodes:>6} nodes in {out.stats.wall_time:.3f}s)")

out = search(SearchConfig(k=7, target_size=7))
print(f"G_7  has a 7-clique        "
      f"(found after {out.stats.nodes} nodes; every prime k attains k)")

print()
print("=" * 72)
print("Seeded completion: fix a known third row of a 4-clique over Z_15")
print("=" * 72)

seed = normalize(builtin_certificate(15)).rows[2]
print(f"\nseed row: {seed}")
out = search(SearchConfig(k=15, target_size=4, seed_rows=(seed,)))
print(f"completion found in {out.stats.nodes} nodes:")
for row in out.certificate.rows:
    print(f"  {row}")

print()
print("=" * 72)
print("Unseeded rediscovery at k=15: randomized value order with restarts")
print("=" * 72)

out = search(
    SearchConfig(
        k=15,
        target_size=4,
        mode=SearchMode.FIRST_FOUND,
        node_limit=2_000_000,
        restarts=40,
        rng_seed=0,
    )
)
print(f"\nfound on restart {out.stats.restarts_used} after {out.stats.nodes} "
      f"total nodes ({out.stats.wall_time:.2f}s):")
for row in out.certificate.rows:
    print(f"  {row}")

print("""
Backtracking runtimes here are heavy-tailed: a single deterministic pass can
stall in a barren subtree, while short randomized passes with restarts are
reliably quick.  The same recipe reaches k=21 in under ten million nodes
(about half a minute) and k=27 in some tens of millions:

    search(SearchConfig(k=21, target_size=4, mode=SearchMode.FIRST_FOUND,
                        node_limit=12_000_000, restarts=40, rng_seed=0))
    search(SearchConfig(k=27, target_size=4, mode=SearchMode.FIRST_FOUND,
                        node_limit=400_000_000, restarts=400, rng_seed=1))
""")

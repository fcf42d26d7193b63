"""Clique constructions and lower bounds on the clique number of G_k.

Three sources of cliques, each yielding a verified certificate:

* the multiplication table rows j -> i*j mod k for i = 0 .. spf(k)-1, a
  clique of size the smallest prime factor of k;
* composition: cliques over n and over m combine into a clique over n*m of
  size min(m_n, m_m), via q(i*m + j) = f(i)*m + g(j);
* a registry of stored certificates (the bundled 4-cliques by default).

``lower_bound`` maximizes over these by dynamic programming on the divisor
lattice of k and records a replayable provenance tree; ``materialize_bound``
replays that tree back into an explicit certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .certificate import (
    CertificateError,
    CliqueCertificate,
    builtin_certificates,
    certify,
    parse,
)
from .core import ModFunction, validate_modulus

_WORD_BITS = 63  # moduli must stay machine-word sized


def smallest_prime_factor(k: int) -> int:
    """Least prime dividing k, by trial division."""
    validate_modulus(k)
    if k % 2 == 0:
        return 2
    d = 3
    while d * d <= k:
        if k % d == 0:
            return d
        d += 2
    return k


def is_prime(k: int) -> bool:
    return k >= 2 and smallest_prime_factor(k) == k


def prime_construction(k: int) -> CliqueCertificate:
    """The clique {j -> i*j mod k : 0 <= i < spf(k)}.

    Any two rows differ by j -> (i - i')*j with 0 < |i - i'| < spf(k), which
    is coprime to k and hence a bijection, so the certificate verifies.
    """
    validate_modulus(k)
    p = smallest_prime_factor(k)
    rows = tuple(
        ModFunction(k, tuple((i * j) % k for j in range(k))) for i in range(p)
    )
    return CliqueCertificate(k, rows)


def check_composed_modulus(n: int, m: int) -> int:
    """n*m, provided the product still fits a machine word."""
    if n.bit_length() + m.bit_length() > _WORD_BITS:
        raise ValueError(f"composed modulus {n}*{m} exceeds the word size")
    return n * m


def compose(left: CliqueCertificate, right: CliqueCertificate) -> CliqueCertificate:
    """Combine a clique over n and a clique over m into one over n*m.

    Row t sends the unique decomposition i*m + j (0 <= i < n, 0 <= j < m) to
    left[t](i)*m + right[t](j); the output keeps min(row counts) rows and is
    re-verified on construction.
    """
    n, m = left.k, right.k
    k = check_composed_modulus(n, m)
    s = min(left.row_count, right.row_count)
    rows = []
    for t in range(s):
        f = left.rows[t].values
        g = right.rows[t].values
        rows.append(
            ModFunction(k, tuple(f[i] * m + g[j] for i in range(n) for j in range(m)))
        )
    return CliqueCertificate(k, tuple(rows))


class CertificateRegistry:
    """Verified certificates keyed by exact modulus.

    Lookup happens only at the query modulus itself; products of registry
    entries are reached through the divisor DP, never by implicit lookup.
    When two certificates share a modulus the one with more rows wins.
    """

    def __init__(self, certs=()):
        self._by_k: dict[int, CliqueCertificate] = {}
        for c in certs:
            self.add(c)

    def add(self, cert: CliqueCertificate):
        if not isinstance(cert, CliqueCertificate):
            raise TypeError("registry only accepts verified CliqueCertificate values")
        cur = self._by_k.get(cert.k)
        if cur is None or cert.row_count > cur.row_count:
            self._by_k[cert.k] = cert

    def get(self, k: int) -> CliqueCertificate | None:
        return self._by_k.get(k)

    def moduli(self) -> tuple[int, ...]:
        return tuple(sorted(self._by_k))

    def __len__(self) -> int:
        return len(self._by_k)

    @classmethod
    def builtin(cls) -> "CertificateRegistry":
        return cls(builtin_certificates())

    @classmethod
    def from_directory(cls, path: str | Path) -> "CertificateRegistry":
        """Load every *.cert file in a directory; all must verify."""
        reg = cls()
        files = sorted(Path(path).glob("*.cert"))
        if not files:
            raise FileNotFoundError(f"no *.cert files in {path}")
        for f in files:
            try:
                reg.add(certify(parse(f.read_text())))
            except (ValueError, CertificateError) as exc:
                raise CertificateError(f"{f}: {exc}") from exc
        return reg


@dataclass(frozen=True)
class PrimeConstruction:
    p: int


@dataclass(frozen=True)
class StoredCertificate:
    k: int
    m: int


@dataclass(frozen=True)
class Product:
    n: int
    m: int
    left: "BoundReport"
    right: "BoundReport"


Provenance = Union[PrimeConstruction, StoredCertificate, Product]


@dataclass(frozen=True)
class BoundReport:
    """A lower bound on the clique number of G_k with a replayable derivation.

    ``exact`` is set only where the bound is known to be the clique number:
    even k (the graph is triangle-free, bound 2) and prime k (bound k).
    """

    k: int
    lower_bound: int
    provenance: Provenance
    exact: bool


def _product_nodes(report: BoundReport) -> int:
    if isinstance(report.provenance, Product):
        return (
            1
            + _product_nodes(report.provenance.left)
            + _product_nodes(report.provenance.right)
        )
    return 0


_KIND_RANK = {PrimeConstruction: 0, StoredCertificate: 1, Product: 2}


def _candidate_key(report: BoundReport) -> tuple:
    """Sort key: higher bound first, then fewer Product nodes, then leaf kind,
    then lexicographically smallest presented (n, m)."""
    prov = report.provenance
    pair = (prov.n, prov.m) if isinstance(prov, Product) else (0, 0)
    return (-report.lower_bound, _product_nodes(report), _KIND_RANK[type(prov)], pair)


def lower_bound(k: int, registry: CertificateRegistry | None = None) -> BoundReport:
    """Best lower bound on the clique number of G_k from the three sources.

    Dynamic programming over the divisors of k: at each divisor take the max
    of spf, a stored certificate at exactly that modulus, and min over all
    factorizations n*m of the factor bounds.  Ties go to the derivation with
    fewer Product nodes, then to the lexicographically smallest (n, m); a
    Product is presented binding-side first (the factor whose bound equals
    the min comes first, matching the composition order used on replay).
    """
    validate_modulus(k)
    if registry is None:
        registry = CertificateRegistry.builtin()
    memo: dict[int, BoundReport] = {}
    return _lower_bound_memo(k, registry, memo)


def _lower_bound_memo(
    k: int, registry: CertificateRegistry, memo: dict[int, BoundReport]
) -> BoundReport:
    got = memo.get(k)
    if got is not None:
        return got
    exact = k % 2 == 0 or is_prime(k)
    p = smallest_prime_factor(k)
    candidates = [BoundReport(k, p, PrimeConstruction(p), exact)]
    stored = registry.get(k)
    if stored is not None:
        candidates.append(
            BoundReport(k, stored.row_count, StoredCertificate(k, stored.row_count), exact)
        )
    d = 2
    while d * d <= k:
        if k % d == 0:
            a, b = d, k // d
            ra = _lower_bound_memo(a, registry, memo)
            rb = _lower_bound_memo(b, registry, memo)
            # binding side (smaller bound) first; tie -> smaller modulus
            if (rb.lower_bound, rb.k) < (ra.lower_bound, ra.k):
                ra, rb = rb, ra
            candidates.append(
                BoundReport(
                    k,
                    min(ra.lower_bound, rb.lower_bound),
                    Product(ra.k, rb.k, ra, rb),
                    exact,
                )
            )
        d += 1
    best = min(candidates, key=_candidate_key)
    memo[k] = best
    return best


def provenance_lines(report: BoundReport, indent: int = 0) -> list[str]:
    """Plain-text rendering of a bound's derivation tree, one node per line."""
    prov = report.provenance
    if isinstance(prov, PrimeConstruction):
        how = f"prime construction (p={prov.p})"
    elif isinstance(prov, StoredCertificate):
        how = f"stored certificate ({prov.m} rows)"
    else:
        how = f"product {prov.n} x {prov.m}"
    tag = " (exact)" if report.exact else ""
    lines = [
        f"{'  ' * indent}G_{report.k}: clique number >= "
        f"{report.lower_bound}{tag} via {how}"
    ]
    if isinstance(prov, Product):
        lines.extend(provenance_lines(prov.left, indent + 1))
        lines.extend(provenance_lines(prov.right, indent + 1))
    return lines


def materialize_bound(
    report: BoundReport, registry: CertificateRegistry | None = None
) -> CliqueCertificate:
    """Replay a bound's provenance into an explicit verified certificate of
    exactly ``report.lower_bound`` rows over ``report.k``."""
    if registry is None:
        registry = CertificateRegistry.builtin()
    prov = report.provenance
    if isinstance(prov, PrimeConstruction):
        cert = prime_construction(report.k)
    elif isinstance(prov, StoredCertificate):
        stored = registry.get(prov.k)
        if stored is None or stored.row_count != prov.m:
            raise CertificateError(
                f"registry no longer holds a {prov.m}-row certificate at k={prov.k}"
            )
        cert = stored
    else:
        cert = compose(
            materialize_bound(prov.left, registry),
            materialize_bound(prov.right, registry),
        )
    if cert.k != report.k or cert.row_count != report.lower_bound:
        raise CertificateError(
            f"replayed certificate is {cert.row_count} rows over {cert.k}, "
            f"report claims {report.lower_bound} over {report.k}"
        )
    return cert

"""Clique certificates: verification, normalization, and a line-oriented file format.

A clique certificate is a modulus k together with m functions Z_k -> Z_k that
are pairwise adjacent in G_k.  Read row-wise it is exactly an m x k difference
matrix over Z_k.  Certificates arrive in two states:

* ``UncheckedCertificate`` -- shape-valid rows of the right modulus, no claim
  about adjacency.  This is what ``parse`` returns.
* ``CliqueCertificate`` -- constructing one runs the full pairwise check and
  raises ``CertificateError`` on any violation, so holding an instance is
  proof the rows really form a clique.  Downstream operations (composition,
  the bound registry, normalization) only accept this type.

The file format is plain text: optional '#' comment lines, a "k m" header
line, then m rows of k residues.  Canonical output uses single spaces, one
row per line, and a trailing newline.

Three known 4-cliques (k = 15, 21, 27) ship as package data; the two
nontrivial rows for 21 and 27 are stored together with the zero and identity
rows they extend.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Sequence, Union

import numpy as np

from .core import (
    ModFunction,
    add_constant,
    difference,
    identity_function,
    invert_permutation,
    relabel_domain,
    validate_modulus,
    zero_function,
)

BUILTIN_MODULI = (15, 21, 27)


class CertificateError(ValueError):
    """A certificate failed verification or structural validation."""


class CertificateFormatError(ValueError):
    """Malformed certificate text; carries 1-based line (and column) info."""

    def __init__(self, message: str, line: int, column: int | None = None):
        loc = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{message} ({loc})")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class PairViolation:
    """Witness that rows s and t are not adjacent: their difference takes the
    same value at two domain points."""

    row_s: int
    row_t: int
    point_a: int
    point_b: int
    value: int


@dataclass(frozen=True)
class VerificationReport:
    k: int
    row_count: int
    violations: tuple[PairViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        if self.ok:
            return f"OK: {self.row_count}-clique in G_{self.k}"
        return (
            f"FAIL: {len(self.violations)} non-adjacent row pair(s) "
            f"in G_{self.k}"
        )


def _check_rows(k: int, rows: Sequence[ModFunction]) -> tuple[ModFunction, ...]:
    validate_modulus(k)
    rows = tuple(rows)
    if not rows:
        raise CertificateError("a certificate needs at least one row")
    for i, r in enumerate(rows):
        if not isinstance(r, ModFunction):
            raise CertificateError(f"row {i} is not a ModFunction")
        if r.k != k:
            raise CertificateError(f"row {i} has modulus {r.k}, expected {k}")
    return rows


@dataclass(frozen=True)
class UncheckedCertificate:
    """Rows of the right shape and modulus, adjacency not yet checked."""

    k: int
    rows: tuple[ModFunction, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", _check_rows(self.k, self.rows))

    @property
    def row_count(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class CliqueCertificate:
    """A verified clique in G_k.  Construction performs the O(m^2 k) pairwise
    check and refuses any certificate that is not actually a clique."""

    k: int
    rows: tuple[ModFunction, ...]

    def __post_init__(self):
        rows = _check_rows(self.k, self.rows)
        object.__setattr__(self, "rows", rows)
        report = _verification_report(self.k, rows)
        if not report.ok:
            first = report.violations[0]
            raise CertificateError(
                f"rows {first.row_s} and {first.row_t} are not adjacent: "
                f"difference takes value {first.value} at both "
                f"{first.point_a} and {first.point_b} "
                f"({len(report.violations)} violating pair(s) total)"
            )

    @property
    def row_count(self) -> int:
        return len(self.rows)


CertificateLike = Union[UncheckedCertificate, CliqueCertificate]


def _collision_witness(diff_values: Sequence[int], k: int) -> tuple[int, int, int]:
    """First (a, b, value) with diff[a] == diff[b] == value, a < b."""
    first_at = [-1] * k
    for j, d in enumerate(diff_values):
        if first_at[d] >= 0:
            return first_at[d], j, d
        first_at[d] = j
    raise AssertionError("no collision in a non-bijective difference")


def _verification_report(k: int, rows: Sequence[ModFunction]) -> VerificationReport:
    m = len(rows)
    if m < 2:
        return VerificationReport(k, m, ())
    dtype = np.int32 if 2 * k * m < 2**31 else np.int64
    table = np.asarray([r.values for r in rows], dtype=dtype)
    # Row t minus row s has entries in (-k, k); shifting row s's block by
    # 2k*s + k drops every difference into the half-open band
    # (2k*s, 2k*(s+1)), residue r landing at in-band offset r or r + k.
    # k entries of a difference row cover all k residue classes iff the
    # difference is a permutation, so a clique shows every class hit.
    band_base = np.arange(m, dtype=dtype)[:, None] * (2 * k) + k
    violations: list[PairViolation] = []
    for t in range(1, m):
        diffs = table[t] - table[:t]
        diffs += band_base[:t]
        hit = np.zeros(2 * k * t, dtype=bool)
        hit[diffs.ravel()] = True
        bands = hit.reshape(t, 2 * k)
        good = (bands[:, :k] | bands[:, k:]).all(axis=1)
        for s in np.nonzero(~good)[0]:
            row_s, row_t = rows[int(s)].values, rows[t].values
            a, b, d = _collision_witness(
                [(x - y) % k for x, y in zip(row_t, row_s)], k
            )
            violations.append(PairViolation(int(s), t, a, b, d))
    return VerificationReport(k, m, tuple(violations))


def verify(cert: CertificateLike) -> VerificationReport:
    """Check every unordered row pair for adjacency.

    Returns a report listing, for each violating pair, one collision witness
    (two domain points where the pair's difference repeats a value); the
    witness is re-checkable from the certificate alone.  A CliqueCertificate
    already ran this exact check when it was constructed, so its report is
    returned without recomputation; re-check from scratch by wrapping the
    rows in an UncheckedCertificate.
    """
    if isinstance(cert, CliqueCertificate):
        return VerificationReport(cert.k, cert.row_count, ())
    return _verification_report(cert.k, cert.rows)


def certify(cert: CertificateLike) -> CliqueCertificate:
    """Promote to a verified certificate, raising CertificateError on failure."""
    if isinstance(cert, CliqueCertificate):
        return cert
    return CliqueCertificate(cert.k, cert.rows)


def normalize(cert: CliqueCertificate) -> CliqueCertificate:
    """Canonical form of a verified clique with at least two rows.

    Subtract row 0 from everything (row 0 becomes zero), relabel the domain
    by the inverse of the now-bijective row 1 (row 1 becomes the identity),
    shift each later row so it vanishes at 0, and sort rows 2.. into strictly
    increasing lexicographic order.  Each step preserves pairwise adjacency,
    so the result verifies; idempotent by construction.
    """
    if cert.row_count < 2:
        raise CertificateError("normalization needs at least two rows")
    k = cert.k
    shifted = [difference(r, cert.rows[0]) for r in cert.rows]
    sigma = invert_permutation(shifted[1])
    relabeled = [relabel_domain(r, sigma) for r in shifted]
    tail = sorted(
        (add_constant(r, -r.values[0]) for r in relabeled[2:]),
        key=lambda r: r.values,
    )
    rows = (zero_function(k), identity_function(k), *tail)
    return CliqueCertificate(k, rows)


def is_normalized(cert: CliqueCertificate) -> bool:
    """True iff cert is a fixed point of normalize."""
    if cert.row_count < 2:
        return False
    if cert.rows[0] != zero_function(cert.k):
        return False
    if cert.rows[1] != identity_function(cert.k):
        return False
    tail = cert.rows[2:]
    if any(r.values[0] != 0 for r in tail):
        return False
    return all(a.values < b.values for a, b in zip(tail, tail[1:]))


# ---------------------------------------------------------------------------
# file format


def serialize(cert: CertificateLike) -> str:
    """Canonical text form: "k m" header, one row per line, single spaces,
    trailing newline."""
    lines = [f"{cert.k} {len(cert.rows)}"]
    lines.extend(str(r) for r in cert.rows)
    return "\n".join(lines) + "\n"


def _parse_int(token: str, lineno: int, column: int, what: str) -> int:
    if not re.fullmatch(r"[+-]?\d+", token):
        raise CertificateFormatError(f"{what}: {token!r} is not an integer", lineno, column)
    return int(token)


def parse(text: str) -> UncheckedCertificate:
    """Parse certificate text into an unchecked certificate.

    Lines starting with '#' are comments.  Raises CertificateFormatError with
    line/column diagnostics for a malformed header, wrong row count or length,
    or an out-of-range value.
    """
    data: list[tuple[int, str]] = []
    lines = text.split("\n")
    for i, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            continue
        if not stripped:
            if i == len(lines) or all(not l.strip() for l in lines[i:]):
                continue  # trailing blank region
            raise CertificateFormatError("unexpected blank line", i)
        data.append((i, raw))

    if not data:
        raise CertificateFormatError("empty input: missing \"k m\" header", 1)

    header_line, header = data[0]
    tokens = list(re.finditer(r"\S+", header))
    if len(tokens) != 2:
        raise CertificateFormatError(
            f"header must be \"k m\", got {len(tokens)} token(s)", header_line
        )
    k = _parse_int(tokens[0].group(), header_line, tokens[0].start() + 1, "modulus")
    m = _parse_int(tokens[1].group(), header_line, tokens[1].start() + 1, "row count")
    if k < 2:
        raise CertificateFormatError(
            f"modulus must be at least 2, got {k}", header_line, tokens[0].start() + 1
        )
    if m < 1:
        raise CertificateFormatError(
            f"row count must be at least 1, got {m}", header_line, tokens[1].start() + 1
        )

    body = data[1:]
    if len(body) < m:
        last = body[-1][0] if body else header_line
        raise CertificateFormatError(f"expected {m} rows, found {len(body)}", last)
    if len(body) > m:
        raise CertificateFormatError(
            f"expected {m} rows, found extra data", body[m][0]
        )

    rows = []
    for lineno, line in body:
        toks = list(re.finditer(r"\S+", line))
        if len(toks) != k:
            raise CertificateFormatError(
                f"row must have {k} values, got {len(toks)}", lineno
            )
        values = []
        for t in toks:
            col = t.start() + 1
            v = _parse_int(t.group(), lineno, col, "value")
            if not 0 <= v < k:
                raise CertificateFormatError(
                    f"value {v} out of range [0, {k})", lineno, col
                )
            values.append(v)
        rows.append(ModFunction(k, tuple(values)))
    return UncheckedCertificate(k, tuple(rows))


def read_certificate(path: str | Path) -> UncheckedCertificate:
    return parse(Path(path).read_text())


def write_certificate(path: str | Path, cert: CertificateLike):
    Path(path).write_text(serialize(cert))


@lru_cache(maxsize=None)
def builtin_certificate(k: int) -> CliqueCertificate:
    """One of the bundled 4-cliques (k in 15, 21, 27), parsed and verified."""
    if k not in BUILTIN_MODULI:
        raise KeyError(f"no bundled certificate for k={k}; have {BUILTIN_MODULI}")
    text = (resources.files(__package__) / "certs" / f"k{k}.cert").read_text()
    return certify(parse(text))


def builtin_certificates() -> tuple[CliqueCertificate, ...]:
    return tuple(builtin_certificate(k) for k in BUILTIN_MODULI)

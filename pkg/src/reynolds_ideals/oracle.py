"""Brute-force verification of T_1, center and socle over GF(2).

These enumerations walk all 2^dim elements of a small algebra and test
the defining condition of each space literally, element by element,
with no row reduction, kernels or orthogonal complements involved.
They exist to guard the linear-algebra pipeline against systematic
error, so they must stay independent of it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Algebra, center, commutator_space, socle
from .errors import InvariantViolation
from .linalg import Subspace, complement_projector
from .reynolds import t_space

__all__ = [
    "OracleLimit",
    "OracleResult",
    "enumerate_center",
    "enumerate_socle",
    "enumerate_t1",
    "oracle_check",
]

_CHUNK = 1 << 15


@dataclass(frozen=True)
class OracleLimit:
    """Enumeration guard: at most 2^max_dim elements, GF(2) only."""

    max_dim: int = 16

    def admit(self, a: Algebra) -> None:
        if a.p != 2:
            raise ValueError("the exhaustive oracle only supports p = 2")
        if a.dim > self.max_dim:
            raise ValueError(
                f"dim {a.dim} exceeds the oracle limit {self.max_dim}; refusing to enumerate"
            )


def _chunks(dim: int):
    total = 1 << dim
    cols = np.arange(dim, dtype=np.uint64)
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        idx = np.arange(start, stop, dtype=np.uint64)
        yield ((idx[:, None] >> cols) & 1).astype(np.uint8)


def _span(rows: np.ndarray, dim: int) -> Subspace:
    if rows.size == 0:
        return Subspace.zero(dim, 2)
    return Subspace.from_rows(rows.astype(np.int64), dim, 2)


def enumerate_t1(a: Algebra, limit: OracleLimit | None = None) -> Subspace:
    """All x with x*x in K(A), by squaring every element of the algebra.

    Asserts the kept set is literally closed under addition (it must be,
    since squaring is additive mod K in characteristic 2); a failure
    would mean the multiplication table itself is broken.
    """
    (limit or OracleLimit()).admit(a)
    d = a.dim
    k_space = commutator_space(a)
    # Membership in K via the complement coordinates of its RREF basis.
    q, _ = complement_projector(k_space)
    # x^2 projected: x_i x_j Q(b_i b_j) summed over ordered pairs; split into
    # the diagonal plus the symmetrized off-diagonal part.
    proj = np.tensordot(a.table % 2, q.T % 2, axes=(2, 0)) % 2  # (i, j, qdim)
    diag = proj[np.arange(d), np.arange(d)]  # (d, qdim)
    iu, ju = np.triu_indices(d, k=1)
    cross = (proj[iu, ju] + proj[ju, iu]) % 2  # (npairs, qdim)

    kept: list[np.ndarray] = []
    count = 0
    for x in _chunks(d):
        pairs = (x[:, iu] & x[:, ju]).astype(np.float32)
        sq = (x.astype(np.float32) @ diag.astype(np.float32)) + pairs @ cross.astype(np.float32)
        ok = np.all((sq % 2) == 0, axis=1)
        count += int(np.count_nonzero(ok))
        if np.any(ok):
            kept.append(x[ok])
    rows = np.vstack(kept) if kept else np.zeros((0, d), dtype=np.uint8)
    span = _span(rows, d)
    if count != 1 << span.dim:
        raise InvariantViolation(
            "elements with x^2 in K(A) do not form a subspace; multiplication is corrupted"
        )
    return span


def enumerate_center(a: Algebra, limit: OracleLimit | None = None) -> Subspace:
    """All x commuting with every basis element."""
    (limit or OracleLimit()).admit(a)
    d = a.dim
    # x b_i - b_i x = x @ (table[:, i, :] - table[i, :, :]), stacked over i.
    diff = (a.table.transpose(1, 0, 2) - a.table) % 2  # (m, i, l)
    flat = diff.reshape(d, d * d).astype(np.float32)
    kept = []
    for x in _chunks(d):
        vals = (x.astype(np.float32) @ flat) % 2
        ok = np.all(vals == 0, axis=1)
        if np.any(ok):
            kept.append(x[ok])
    rows = np.vstack(kept) if kept else np.zeros((0, d), dtype=np.uint8)
    return _span(rows, d)


def enumerate_socle(a: Algebra, limit: OracleLimit | None = None) -> Subspace:
    """All x with x r = r x = 0 for every radical basis element r."""
    (limit or OracleLimit()).admit(a)
    d = a.dim
    rad = sorted(a.radical_indices)
    if not rad:
        return Subspace.full(d, 2)
    left = a.table[:, rad, :].reshape(d, -1)  # x * b_r
    right = a.table[rad, :, :].transpose(1, 0, 2).reshape(d, -1)  # b_r * x
    flat = np.hstack([left, right]).astype(np.float32)
    kept = []
    for x in _chunks(d):
        vals = (x.astype(np.float32) @ flat) % 2
        ok = np.all(vals == 0, axis=1)
        if np.any(ok):
            kept.append(x[ok])
    rows = np.vstack(kept) if kept else np.zeros((0, d), dtype=np.uint8)
    return _span(rows, d)


@dataclass(frozen=True)
class OracleResult:
    passed: bool
    mismatches: tuple[str, ...]
    dims: dict[str, int]


def oracle_check(a: Algebra, limit: OracleLimit | None = None) -> OracleResult:
    """Compare every enumerated space against its pipeline counterpart."""
    mismatches = []
    dims: dict[str, int] = {}
    for name, enum_fn, pipe_fn in (
        ("t1", enumerate_t1, lambda alg: t_space(alg, 1)),
        ("center", enumerate_center, center),
        ("socle", enumerate_socle, socle),
    ):
        enumerated = enum_fn(a, limit)
        pipelined = pipe_fn(a)
        dims[name] = enumerated.dim
        if enumerated != pipelined:
            mismatches.append(
                f"{name}: enumeration gives dim {enumerated.dim}, pipeline dim {pipelined.dim}"
            )
    return OracleResult(passed=not mismatches, mismatches=tuple(mismatches), dims=dims)

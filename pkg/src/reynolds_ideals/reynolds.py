"""Generalized Reynolds ideals and derived-equivalence fingerprints.

For a symmetric algebra A over GF(p) with commutator subspace K(A),
the sets T_n(A) = {x : x^(p^n) in K(A)} are subspaces because the
p-power map is additive modulo K(A) in characteristic p, and their
orthogonal spaces under the symmetrizing form form a descending chain
of ideals of the center,

    Z(A) = T_0(A)^perp >= T_1(A)^perp >= T_2(A)^perp >= ...

whose members, dimensions, and the radical filtrations of the quotient
rings Z(A)/T_n(A)^perp are all invariant under derived equivalence.
This module computes the chain via the induced linear p-power map on
A/K(A), packages the invariants into a canonical byte-serializable
fingerprint, and compares fingerprints.  A fingerprint mismatch
certifies that two algebras are not derived equivalent; equality
proves nothing.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

import numpy as np

from .core import (
    Algebra,
    BilinearForm,
    cartan_matrix,
    center,
    commutator_space,
    socle,
    symmetrizing_form,
)
from .errors import InvariantViolation
from .linalg import (
    Subspace,
    as_vector,
    complement_projector,
    intersect,
    kernel,
    mul_mod,
    orthogonal_complement,
)

__all__ = [
    "CommutativeAlgebra",
    "CompareResult",
    "Fingerprint",
    "PowerMap",
    "ReynoldsReport",
    "analyze",
    "compare",
    "fingerprint",
    "power_map",
    "quotient_ring",
    "radical_filtration",
    "reynolds_ideal",
    "t_space",
]


# ---------------------------------------------------------------------------
# The p-power map on A/K(A)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PowerMap:
    """The linear map x + K |-> x^p + K in quotient coordinates."""

    p: int
    commutator: Subspace
    projector: np.ndarray  # (q, dim): quotient coordinates; kernel = K
    lift_indices: tuple[int, ...]  # standard basis vectors lifting the quotient basis
    matrix: np.ndarray  # (q, q)

    @property
    def quotient_dim(self) -> int:
        return self.matrix.shape[0]


def power_map(a: Algebra, commutator: Subspace | None = None) -> PowerMap:
    """Build the induced p-power map on A/K(A) and verify it is defined.

    Well-definedness needs kappa^p in K for every basis element kappa
    of K; a failure means the multiplication table is corrupted.
    """
    k_space = commutator_space(a) if commutator is None else commutator
    q, free = complement_projector(k_space)
    p = a.p
    for row in k_space.basis:
        if np.any(q @ a.power(row, p) % p):
            raise InvariantViolation("power map is not well defined: kappa^p left K(A)")
    mat = np.zeros((len(free), len(free)), dtype=np.int64)
    for col, f in enumerate(free):
        e = np.zeros(a.dim, dtype=np.int64)
        e[f] = 1
        mat[:, col] = (q @ a.power(e, p)) % p
    return PowerMap(p=p, commutator=k_space, projector=q, lift_indices=free, matrix=mat)


def t_space(a: Algebra, n: int, pm: PowerMap | None = None) -> Subspace:
    """T_n(A) = {x : x^(p^n) lies in the commutator subspace}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if pm is None:
        pm = power_map(a)
    if n == 0:
        return Subspace.full(a.dim, a.p)
    mat = pm.matrix
    for _ in range(n - 1):
        mat = mul_mod(mat, pm.matrix, a.p)
    return kernel(mul_mod(mat, pm.projector, a.p), a.p)


def reynolds_ideal(
    a: Algebra,
    n: int,
    pm: PowerMap | None = None,
    form: BilinearForm | None = None,
    centre: Subspace | None = None,
) -> Subspace:
    """T_n(A)^perp, validated to be an ideal of the center."""
    if form is None:
        form = symmetrizing_form(a)
    if pm is None:
        pm = power_map(a)
    if centre is None:
        centre = center(a)
    tn = t_space(a, n, pm)
    ideal = orthogonal_complement(tn, form.gram)
    if ideal.dim + tn.dim != a.dim:
        raise InvariantViolation("non-degeneracy failed: dim T_n + dim T_n^perp != dim A")
    if not ideal.is_subspace_of(centre):
        raise InvariantViolation("T_n^perp is not contained in the center")
    for z in centre.basis:
        for v in ideal.basis:
            if not ideal.contains(a.multiply(z, v)):
                raise InvariantViolation("T_n^perp is not an ideal of the center")
    return ideal


# ---------------------------------------------------------------------------
# Quotient rings of the center and their radical filtrations
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CommutativeAlgebra:
    """A commutative finite-dimensional algebra in its own coordinates."""

    p: int
    table: np.ndarray  # (dim, dim, dim)
    one: np.ndarray

    @property
    def dim(self) -> int:
        return self.table.shape[0]

    def multiply(self, x, y) -> np.ndarray:
        x = as_vector(x, self.p)
        y = as_vector(y, self.p)
        return (y @ np.tensordot(x, self.table, axes=(0, 0))) % self.p

    def power(self, x, n: int) -> np.ndarray:
        out = as_vector(x, self.p)
        for _ in range(n - 1):
            out = self.multiply(out, x)
        return out

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.table, self.table.transpose(1, 0, 2)))

    def subspace_product(self, a: Subspace, b: Subspace) -> Subspace:
        if a.dim == 0 or b.dim == 0:
            return Subspace.zero(self.dim, self.p)
        m1 = np.tensordot(a.basis, self.table, axes=(1, 0)) % self.p
        m2 = np.tensordot(b.basis, m1, axes=(1, 1)) % self.p
        return Subspace.from_rows(m2.reshape(-1, self.dim), self.dim, self.p)


def quotient_ring(centre: Subspace, ideal: Subspace, a: Algebra) -> CommutativeAlgebra:
    """The ring Z/I on a complement basis of the ideal I inside Z."""
    p = a.p
    if not ideal.is_subspace_of(centre):
        raise ValueError("the ideal is not contained in the given center")
    for z in centre.basis:
        for v in ideal.basis:
            if not ideal.contains(a.multiply(z, v)):
                raise ValueError("the given subspace is not an ideal of the center")
    # Z is in RREF, so the Z-coordinates of v in Z are just v at Z's pivots.
    zpiv = list(centre.pivots)
    ideal_in_z = Subspace.from_rows(ideal.basis[:, zpiv], centre.dim, p)
    q, free = complement_projector(ideal_in_z)
    r = len(free)
    lifts = [centre.basis[f] for f in free]
    table = np.zeros((r, r, r), dtype=np.int64)
    for t in range(r):
        for u in range(r):
            prod = a.multiply(lifts[t], lifts[u])
            if not centre.contains(prod):
                raise InvariantViolation("center is not closed under multiplication")
            table[t, u] = (q @ prod[zpiv]) % p
    one_vec = a.one()
    if not centre.contains(one_vec):
        raise InvariantViolation("identity does not lie in the center")
    one_q = (q @ one_vec[zpiv]) % p
    return CommutativeAlgebra(p=p, table=table, one=one_q)


def radical_filtration(ring: CommutativeAlgebra) -> list[int]:
    """Radical layer dimensions (dim rad^i / rad^(i+1)) of a commutative ring.

    The radical is the nilradical, computed as the kernel of the m-fold
    Frobenius coordinate map with p^m >= dim; valid over prime fields,
    where x -> x^p is linear on a commutative algebra.
    """
    if not ring.is_commutative():
        raise ValueError("radical filtration requires a commutative ring")
    d, p = ring.dim, ring.p
    if d == 0:
        return []
    frob = np.zeros((d, d), dtype=np.int64)
    for t in range(d):
        e = np.zeros(d, dtype=np.int64)
        e[t] = 1
        frob[:, t] = ring.power(e, p)
    m = 1
    iterated = frob
    while p**m < d:
        iterated = mul_mod(iterated, frob, p)
        m += 1
    rad = kernel(iterated, p)
    layers: list[int] = []
    cur = Subspace.full(d, p)
    nxt = rad
    while cur.dim > 0:
        if len(layers) > d:
            raise InvariantViolation("radical filtration did not terminate")
        layers.append(cur.dim - nxt.dim)
        cur = nxt
        nxt = ring.subspace_product(cur, rad)
    return layers


# ---------------------------------------------------------------------------
# Reports, fingerprints, comparison
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChainRow:
    n: int
    dim_t: int
    dim_t_perp: int
    radical_layers: tuple[int, ...]


@dataclass(frozen=True)
class ReynoldsReport:
    """Every computed invariant of one algebra, JSON-serializable."""

    meta: dict | None
    p: int
    dim: int
    dim_center: int
    dim_commutator: int
    cartan: tuple[tuple[int, ...], ...] | None
    chain: tuple[ChainRow, ...]
    n_stab: int | None
    truncated: bool

    def to_dict(self) -> dict:
        return {
            "meta": self.meta,
            "p": self.p,
            "dim": self.dim,
            "dim_center": self.dim_center,
            "dim_commutator": self.dim_commutator,
            "cartan": None if self.cartan is None else [list(r) for r in self.cartan],
            "chain": [
                {
                    "n": row.n,
                    "dim_t": row.dim_t,
                    "dim_t_perp": row.dim_t_perp,
                    "radical_layers": list(row.radical_layers),
                }
                for row in self.chain
            ],
            "n_stab": self.n_stab,
            "truncated": self.truncated,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


@dataclass(frozen=True, eq=False)
class Fingerprint:
    """Canonical serialization of the derived invariants of one algebra."""

    payload: dict

    def to_bytes(self) -> bytes:
        return json.dumps(self.payload, separators=(",", ":")).encode("utf-8")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Fingerprint):
            return NotImplemented
        return self.to_bytes() == other.to_bytes()

    def __hash__(self) -> int:
        return hash(self.to_bytes())


def _canonical_cartan(c: np.ndarray) -> tuple[tuple[int, ...], ...]:
    """Lexicographically minimal simultaneous row/column permutation."""
    n = c.shape[0]
    best = None
    for perm in itertools.permutations(range(n)):
        candidate = tuple(tuple(int(c[i, j]) for j in perm) for i in perm)
        if best is None or candidate < best:
            best = candidate
    return best


@dataclass(frozen=True)
class AnalysisContext:
    """Heavyweight intermediates kept for tests and the oracle CLI."""

    centre: Subspace
    commutator: Subspace
    soc: Subspace
    form: BilinearForm
    pm: PowerMap
    t_spaces: tuple[Subspace, ...]
    ideals: tuple[Subspace, ...]


def analyze(
    a: Algebra,
    n_max: int | None = None,
    meta: dict | None = None,
    with_context: bool = False,
):
    """Compute the full invariant report for one algebra.

    Validates along the way: K(A)^perp = Z(A), soc(A) contained in Z(A)
    and in every T_n(A)^perp, weak descent of the chain, and that the
    stabilized ideal equals soc(A) intersect Z(A).
    """
    p, d = a.p, a.dim
    if n_max is None:
        n_max = d
    centre = center(a)
    comm = commutator_space(a)
    soc = socle(a)
    form = symmetrizing_form(a)

    if orthogonal_complement(comm, form.gram) != centre:
        raise InvariantViolation("K(A)^perp differs from the center")
    if not soc.is_subspace_of(centre):
        raise InvariantViolation("socle is not central")

    pm = power_map(a, comm)
    rows: list[ChainRow] = []
    t_spaces: list[Subspace] = []
    ideals: list[Subspace] = []
    n_stab: int | None = None
    mat = pm.matrix
    prev_t: Subspace | None = None
    prev_ideal: Subspace | None = None
    for n in range(1, n_max + 1):
        tn = kernel(mul_mod(mat, pm.projector, p), p)
        ideal = orthogonal_complement(tn, form.gram)
        if ideal.dim + tn.dim != d:
            raise InvariantViolation("non-degeneracy failed on T_n")
        if not pm.commutator.is_subspace_of(tn):
            raise InvariantViolation("T_n does not contain the commutator subspace")
        if prev_t is not None and not prev_t.is_subspace_of(tn):
            raise InvariantViolation("T_n chain is not ascending")
        if prev_ideal is not None and not ideal.is_subspace_of(prev_ideal):
            raise InvariantViolation("T_n^perp chain is not descending")
        if not soc.is_subspace_of(ideal):
            raise InvariantViolation("socle escaped a generalized Reynolds ideal")
        if not ideal.is_subspace_of(centre):
            raise InvariantViolation("T_n^perp is not contained in the center")
        if prev_ideal is not None and ideal == prev_ideal:
            n_stab = n - 1
            break
        t_spaces.append(tn)
        ideals.append(ideal)
        layers = radical_filtration(quotient_ring(centre, ideal, a))
        rows.append(
            ChainRow(n=n, dim_t=tn.dim, dim_t_perp=ideal.dim, radical_layers=tuple(layers))
        )
        prev_t, prev_ideal = tn, ideal
        mat = mul_mod(mat, pm.matrix, p)

    truncated = n_stab is None
    if not truncated:
        stable = ideals[-1]
        if stable != intersect(soc, centre):
            raise InvariantViolation("stabilized ideal differs from soc(A) meet Z(A)")

    cartan = None
    if a.vertex is not None:
        cartan = tuple(tuple(int(x) for x in row) for row in cartan_matrix(a))

    report = ReynoldsReport(
        meta=meta,
        p=p,
        dim=d,
        dim_center=centre.dim,
        dim_commutator=comm.dim,
        cartan=cartan,
        chain=tuple(rows),
        n_stab=n_stab,
        truncated=truncated,
    )
    if with_context:
        ctx = AnalysisContext(
            centre=centre,
            commutator=comm,
            soc=soc,
            form=form,
            pm=pm,
            t_spaces=tuple(t_spaces),
            ideals=tuple(ideals),
        )
        return report, ctx
    return report


def fingerprint(a: Algebra, n_max: int | None = None) -> Fingerprint:
    return fingerprint_from_report(analyze(a, n_max=n_max))


def fingerprint_from_report(report: ReynoldsReport) -> Fingerprint:
    cartan = None
    if report.cartan is not None:
        cartan = [list(r) for r in _canonical_cartan(np.asarray(report.cartan))]
    payload = {
        "p": report.p,
        "dim": report.dim,
        "cartan": cartan,
        "dim_center": report.dim_center,
        "t_perp_dims": [row.dim_t_perp for row in report.chain],
        "radical_layers": [list(row.radical_layers) for row in report.chain],
        "truncated": report.truncated,
    }
    return Fingerprint(payload=payload)


@dataclass(frozen=True)
class CompareResult:
    verdict: str  # "DISTINGUISHED" or "INCONCLUSIVE"
    field: str | None
    value_a: object
    value_b: object
    fingerprint_a: Fingerprint
    fingerprint_b: Fingerprint
    truncated: bool

    def describe(self) -> str:
        if self.verdict == "DISTINGUISHED":
            return f"DISTINGUISHED at {self.field}: {self.value_a} vs {self.value_b}"
        note = " (chain truncated)" if self.truncated else ""
        return f"INCONCLUSIVE: all computed invariants agree{note}"


def compare_fingerprints(fa: Fingerprint, fb: Fingerprint) -> CompareResult:
    pa, pb = fa.payload, fb.payload
    checks: list[tuple[str, object, object]] = [
        ("p", pa["p"], pb["p"]),
        ("dim", pa["dim"], pb["dim"]),
        ("cartan", pa["cartan"], pb["cartan"]),
        ("dim_center", pa["dim_center"], pb["dim_center"]),
    ]
    length = max(len(pa["t_perp_dims"]), len(pb["t_perp_dims"]))
    for i in range(length):
        da = pa["t_perp_dims"][i] if i < len(pa["t_perp_dims"]) else None
        db = pb["t_perp_dims"][i] if i < len(pb["t_perp_dims"]) else None
        checks.append((f"dim_t{i + 1}_perp", da, db))
        la = pa["radical_layers"][i] if i < len(pa["radical_layers"]) else None
        lb = pb["radical_layers"][i] if i < len(pb["radical_layers"]) else None
        checks.append((f"radical_layers(n={i + 1})", la, lb))
    truncated = bool(pa["truncated"] or pb["truncated"])
    for name, va, vb in checks:
        if va != vb:
            return CompareResult(
                verdict="DISTINGUISHED",
                field=name,
                value_a=va,
                value_b=vb,
                fingerprint_a=fa,
                fingerprint_b=fb,
                truncated=truncated,
            )
    return CompareResult(
        verdict="INCONCLUSIVE",
        field=None,
        value_a=None,
        value_b=None,
        fingerprint_a=fa,
        fingerprint_b=fb,
        truncated=truncated,
    )


def compare(a0: Algebra, a1: Algebra, n_max: int | None = None) -> CompareResult:
    """DISTINGUISHED iff the fingerprints differ (never proves equivalence)."""
    return compare_fingerprints(fingerprint(a0, n_max), fingerprint(a1, n_max))

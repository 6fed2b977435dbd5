"""Finite-dimensional algebras over GF(p) given by structure constants.

An Algebra carries a distinguished basis (with printable labels), the
multiplication table ``table[i, j, :]`` = coefficient vector of
``b_i * b_j``, the indices of the primitive idempotents, the
indices spanning the Jacobson radical, and optionally a (source,
target) vertex pair per basis element for path-basis algebras.

The radical is designated rather than computed: for a path-basis
algebra it is the span of the non-idempotent basis paths.  ``validate``
checks that the designation is safe (two-sided ideal, nilpotent,
codimension = number of idempotents) along with the identity,
idempotent orthogonality and full associativity of the table.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import InvariantViolation
from .linalg import (
    FieldSpec,
    Subspace,
    as_vector,
    kernel,
    mul_mod,
    rref,
)

__all__ = [
    "Algebra",
    "BilinearForm",
    "algebra_from_json",
    "algebra_to_json",
    "cartan_matrix",
    "center",
    "commutator_space",
    "radical",
    "require_valid",
    "socle",
    "symmetrizing_form",
    "validate",
]


@dataclass(frozen=True, eq=False)
class Algebra:
    """A finite-dimensional associative unital algebra over GF(p)."""

    field: FieldSpec
    labels: tuple[str, ...]
    idempotents: tuple[int, ...]
    radical_indices: tuple[int, ...]
    table: np.ndarray  # (dim, dim, dim) structure constants
    vertex: tuple[tuple[int, int], ...] | None = None

    def __post_init__(self):
        d = len(self.labels)
        table = np.asarray(self.table, dtype=np.int64) % self.p
        if table.shape != (d, d, d):
            raise ValueError("structure-constant table has wrong shape")
        table = np.ascontiguousarray(table)
        table.flags.writeable = False
        object.__setattr__(self, "table", table)
        if len(set(self.labels)) != d:
            raise ValueError("basis labels must be unique")
        if self.vertex is not None and len(self.vertex) != d:
            raise ValueError("vertex data must cover every basis element")
        covered = sorted(self.idempotents) + sorted(self.radical_indices)
        if sorted(covered) != list(range(d)):
            raise ValueError("idempotents and radical indices must partition the basis")

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no basis element labelled {label!r}") from None

    def basis_element(self, label: str) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[self.index_of(label)] = 1
        return v

    def element(self, coeffs: dict[str, int]) -> np.ndarray:
        """Element from a {label: coefficient} mapping."""
        v = np.zeros(self.dim, dtype=np.int64)
        for label, coef in coeffs.items():
            v[self.index_of(label)] = coef % self.p
        return v

    def one(self) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[list(self.idempotents)] = 1
        return v

    def multiply(self, x, y) -> np.ndarray:
        x = as_vector(x, self.p)
        y = as_vector(y, self.p)
        m = np.tensordot(x, self.table, axes=(0, 0))  # (j, l)
        return (y @ m) % self.p

    def power(self, x, n: int) -> np.ndarray:
        if n < 1:
            raise ValueError("power expects n >= 1")
        out = as_vector(x, self.p)
        for _ in range(n - 1):
            out = self.multiply(out, x)
        return out

    def left_mult_matrix(self, x) -> np.ndarray:
        """Matrix of v -> x * v."""
        x = as_vector(x, self.p)
        return np.tensordot(x, self.table, axes=(0, 0)).T % self.p

    def right_mult_matrix(self, x) -> np.ndarray:
        """Matrix of v -> v * x."""
        x = as_vector(x, self.p)
        return np.tensordot(x, self.table, axes=(0, 1)).T % self.p

    def subspace_product(self, a: Subspace, b: Subspace) -> Subspace:
        """Span of all products u * v with u in a, v in b."""
        if a.dim == 0 or b.dim == 0:
            return Subspace.zero(self.dim, self.p)
        m1 = np.tensordot(a.basis, self.table, axes=(1, 0)) % self.p  # (ra, j, l)
        m2 = np.tensordot(b.basis, m1, axes=(1, 1)) % self.p  # (rb, ra, l)
        return Subspace.from_rows(m2.reshape(-1, self.dim), self.dim, self.p)

    def __repr__(self) -> str:
        return f"Algebra(dim={self.dim}, p={self.p})"


def validate(a: Algebra) -> list[str]:
    """Check every structural invariant; returns a list of failures.

    An empty list means the algebra is valid.  Checks: entries reduced,
    the sum of idempotents is a two-sided identity, the idempotents are
    orthogonal idempotents, multiplication is associative on all basis
    triples, and the designated radical is a nilpotent two-sided ideal
    of codimension equal to the number of idempotents.
    """
    failures: list[str] = []
    d, p, t = a.dim, a.p, a.table

    one = a.one()
    left = np.tensordot(one, t, axes=(0, 0)) % p  # (j, l): one * b_j
    right = np.tensordot(one, t, axes=(0, 1)) % p  # (i, l): b_i * one
    if not np.array_equal(left, np.eye(d, dtype=np.int64)):
        failures.append("identity: sum of idempotents is not a left identity")
    if not np.array_equal(right, np.eye(d, dtype=np.int64)):
        failures.append("identity: sum of idempotents is not a right identity")

    for i in a.idempotents:
        for j in a.idempotents:
            expect = np.zeros(d, dtype=np.int64)
            if i == j:
                expect[i] = 1
            if not np.array_equal(t[i, j], expect):
                failures.append(f"idempotents: e[{i}] * e[{j}] is not {'e' if i == j else '0'}")

    if not _associative(a):
        failures.append("associativity: some triple (b_i b_j) b_k != b_i (b_j b_k)")

    rad = list(a.radical_indices)
    if rad:
        idem = list(a.idempotents)
        if np.any(t[np.ix_(rad, range(d), idem)]) or np.any(t[np.ix_(range(d), rad, idem)]):
            failures.append("radical: designated span is not a two-sided ideal")
        else:
            rad_space = radical(a)
            power = rad_space
            steps = 0
            while power.dim > 0:
                nxt = a.subspace_product(power, power)
                steps += 1
                if nxt.dim >= power.dim or steps > d:
                    failures.append("radical: designated span is not nilpotent")
                    break
                power = nxt
    if d - len(rad) != len(a.idempotents):
        failures.append("radical: codimension differs from the number of idempotents")

    return failures


def _associative(a: Algebra) -> bool:
    d, p, t = a.dim, a.p, a.table
    flat = t.reshape(d * d, d)
    right_flat = t.reshape(d, d * d)
    for i in range(d):
        lhs = mul_mod(t[i], right_flat, p)  # (j, (k, l))
        rhs = mul_mod(flat, t[i], p)  # ((j, k), l)
        if not np.array_equal(lhs.reshape(d, d, d), rhs.reshape(d, d, d)):
            return False
    return True


def require_valid(a: Algebra) -> Algebra:
    failures = validate(a)
    if failures:
        raise ValueError("invalid algebra: " + "; ".join(failures))
    return a


def radical(a: Algebra) -> Subspace:
    rows = np.zeros((len(a.radical_indices), a.dim), dtype=np.int64)
    for r, i in enumerate(sorted(a.radical_indices)):
        rows[r, i] = 1
    return Subspace.from_rows(rows, a.dim, a.p)


def socle(a: Algebra) -> Subspace:
    """Two-sided annihilator of the radical: {x : x rad = rad x = 0}."""
    rad = sorted(a.radical_indices)
    if not rad:
        return Subspace.full(a.dim, a.p)
    d = a.dim
    # x * b_i has coefficients sum_m x_m table[m, i, :]; b_i * x uses table[i, m, :].
    blocks = [a.table[:, i, :].T for i in rad] + [a.table[i, :, :].T for i in rad]
    return kernel(np.vstack(blocks).reshape(-1, d), a.p)


def center(a: Algebra) -> Subspace:
    """{x : x b = b x for all basis b}, via the stacked commutation operator."""
    d = a.dim
    # Row block for b_i: (left mult by b_i) - (right mult by b_i) acting on x.
    blocks = [(a.table[i, :, :] - a.table[:, i, :]).T % a.p for i in range(d)]
    return kernel(np.vstack(blocks), a.p)


def commutator_space(a: Algebra) -> Subspace:
    """Span of all commutators b_i b_j - b_j b_i."""
    d = a.dim
    diffs = (a.table - a.table.transpose(1, 0, 2)) % a.p
    iu, ju = np.triu_indices(d, k=1)
    return Subspace.from_rows(diffs[iu, ju], d, a.p)


def cartan_matrix(a: Algebra) -> np.ndarray:
    """Counts of basis elements in each e_i A e_j block, by vertex data."""
    if a.vertex is None:
        raise ValueError("algebra carries no vertex data")
    verts = sorted({v for st in a.vertex for v in st})
    index = {v: n for n, v in enumerate(verts)}
    c = np.zeros((len(verts), len(verts)), dtype=np.int64)
    for src, tgt in a.vertex:
        c[index[src], index[tgt]] += 1
    return c


@dataclass(frozen=True)
class BilinearForm:
    """The symmetrizing form <x, y> = psi(x y) with its Gram matrix."""

    psi: np.ndarray  # socle-indicator functional on the basis
    gram: np.ndarray  # gram[i, j] = psi(b_i b_j)

    def pair(self, x, y, a: Algebra) -> int:
        x = as_vector(x, a.p)
        y = as_vector(y, a.p)
        return int((x @ self.gram @ y) % a.p)


def symmetrizing_form(a: Algebra) -> BilinearForm:
    """Build the socle-indicator form and verify it is symmetrizing.

    psi sends the basis elements lying in soc(A) to 1 and every other
    basis element to 0; the hypothesis that those elements span the
    socle is checked, as are symmetry, associativity on basis triples
    and non-degeneracy of the Gram matrix.
    """
    d, p = a.dim, a.p
    soc = socle(a)
    psi = np.zeros(d, dtype=np.int64)
    for i in range(d):
        v = np.zeros(d, dtype=np.int64)
        v[i] = 1
        if soc.contains(v):
            psi[i] = 1
    span = Subspace.from_rows(np.diag(psi), d, p)
    if span != soc:
        raise ValueError("socle is not spanned by basis elements; the indicator form does not apply")

    gram = np.tensordot(a.table, psi, axes=(2, 0)) % p
    if not np.array_equal(gram, gram.T):
        raise ValueError("symmetrizing form is not symmetric on this algebra")
    _, rank, _ = rref(gram, p)
    if rank != d:
        raise ValueError("symmetrizing form is degenerate")
    lhs = mul_mod(a.table.reshape(d * d, d), gram, p).reshape(d, d, d)  # psi((b_i b_j) b_k)
    rhs = np.tensordot(gram, a.table, axes=(1, 2)) % p  # (i, j, k): sum_m gram[i, m] t[j, k, m]
    if not np.array_equal(lhs, rhs):
        raise InvariantViolation("form is not associative on basis triples")
    return BilinearForm(psi=psi, gram=gram)


# ---------------------------------------------------------------------------
# Algebra file format
# ---------------------------------------------------------------------------

def algebra_to_json(a: Algebra) -> str:
    """Serialize to the on-disk JSON format (deterministic bytes)."""
    if a.vertex is None:
        raise ValueError("algebra file format requires vertex data")
    entries = []
    d = a.dim
    for i in range(d):
        for j in range(d):
            for k in np.nonzero(a.table[i, j])[0]:
                entries.append([i, j, int(k), int(a.table[i, j, k])])
    doc = {
        "p": a.p,
        "dim": d,
        "labels": list(a.labels),
        "idempotents": list(a.idempotents),
        "radical": sorted(a.radical_indices),
        "vertex": [[src, tgt] for src, tgt in a.vertex],
        "mult": entries,
    }
    return json.dumps(doc, indent=2) + "\n"


def algebra_from_json(text: str) -> Algebra:
    """Parse the JSON format and validate the resulting algebra."""
    doc = json.loads(text)
    try:
        p = int(doc["p"])
        d = int(doc["dim"])
        labels = tuple(str(x) for x in doc["labels"])
        idem = tuple(int(x) for x in doc["idempotents"])
        rad = tuple(int(x) for x in doc["radical"])
        vertex = tuple((int(s), int(t)) for s, t in doc["vertex"])
        mult = doc["mult"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed algebra file: {exc}") from exc
    if len(labels) != d:
        raise ValueError("malformed algebra file: label count differs from dim")
    table = np.zeros((d, d, d), dtype=np.int64)
    for entry in mult:
        i, j, k, coeff = (int(x) for x in entry)
        table[i, j, k] = coeff % p
    a = Algebra(
        field=FieldSpec(p),
        labels=labels,
        idempotents=idem,
        radical_indices=rad,
        table=table,
        vertex=vertex,
    )
    return require_valid(a)

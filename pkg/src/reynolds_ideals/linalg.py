"""Exact dense linear algebra over prime fields GF(p).

All routines operate on numpy integer matrices whose entries are the
least non-negative residues mod p.  Subspaces are stored via their
reduced row-echelon basis, which is unique, so two subspaces are equal
iff their basis arrays are bitwise equal.  Row reduction over GF(2)
uses uint8 XOR row operations; other primes use generic modular
elimination.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "FieldSpec",
    "Subspace",
    "as_matrix",
    "complement_projector",
    "intersect",
    "is_prime",
    "kernel",
    "mul_mod",
    "orthogonal_complement",
    "preimage",
    "rref",
    "subspace_sum",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The prime field GF(p)."""

    p: int = 2

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")


def as_matrix(entries, p: int) -> np.ndarray:
    """Coerce to a 2-d int64 array with entries reduced mod p."""
    m = np.atleast_2d(np.asarray(entries, dtype=np.int64))
    return m % p


def as_vector(entries, p: int) -> np.ndarray:
    v = np.asarray(entries, dtype=np.int64).reshape(-1)
    return v % p


def mul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact matrix product mod p.

    Runs the multiply in float64 (BLAS); exactness requires every dot
    product to stay below 2**53, which holds comfortably for the matrix
    sizes and primes this package deals with.
    """
    inner = a.shape[-1]
    if inner * (p - 1) ** 2 >= 2**53:
        raise ValueError("matrix product too large for exact float64 arithmetic")
    prod = np.asarray(a, dtype=np.float64) @ np.asarray(b, dtype=np.float64)
    return (prod % p).astype(np.int64)


def _rref_gf2(mat: np.ndarray) -> tuple[np.ndarray, int, list[int]]:
    r = (mat % 2).astype(np.uint8)
    m, n = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            r[[row, piv]] = r[[piv, row]]
        others = np.nonzero(r[:, col])[0]
        others = others[others != row]
        if others.size:
            r[others] ^= r[row]
        pivots.append(col)
        row += 1
    return r.astype(np.int64), row, pivots


def _rref_gfp(mat: np.ndarray, p: int) -> tuple[np.ndarray, int, list[int]]:
    r = (np.asarray(mat, dtype=np.int64) % p).copy()
    m, n = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            r[[row, piv]] = r[[piv, row]]
        inv = pow(int(r[row, col]), -1, p)
        r[row] = (r[row] * inv) % p
        others = np.nonzero(r[:, col])[0]
        others = others[others != row]
        if others.size:
            r[others] = (r[others] - np.outer(r[others, col], r[row])) % p
        pivots.append(col)
        row += 1
    return r, row, pivots


def rref(mat, p: int) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row-echelon form over GF(p).

    Args:
        mat: matrix-like, entries interpreted mod p.
        p: prime modulus.

    Returns:
        (R, rank, pivots): R is the unique RREF of mat, rank the number
        of nonzero rows, pivots the strictly increasing pivot columns.
    """
    m = as_matrix(mat, p)
    if p == 2:
        return _rref_gf2(m)
    return _rref_gfp(m, p)


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of GF(p)^ambient in canonical (RREF basis) form."""

    p: int
    ambient: int
    basis: np.ndarray  # (dim, ambient), RREF, no zero rows
    pivots: tuple[int, ...]

    @classmethod
    def from_rows(cls, rows, ambient: int, p: int) -> "Subspace":
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, ambient)
        r, rank, pivots = rref(rows, p)
        basis = np.ascontiguousarray(r[:rank])
        basis.flags.writeable = False
        return cls(p=p, ambient=ambient, basis=basis, pivots=tuple(pivots))

    @classmethod
    def zero(cls, ambient: int, p: int) -> "Subspace":
        return cls.from_rows(np.zeros((0, ambient), dtype=np.int64), ambient, p)

    @classmethod
    def full(cls, ambient: int, p: int) -> "Subspace":
        return cls.from_rows(np.eye(ambient, dtype=np.int64), ambient, p)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def contains(self, v) -> bool:
        v = as_vector(v, self.p)
        if v.shape[0] != self.ambient:
            raise ValueError("vector has wrong ambient dimension")
        return bool(np.all(self.reduce(v) == 0))

    def reduce(self, v) -> np.ndarray:
        """Residual of v after eliminating all pivot coordinates."""
        v = as_vector(v, self.p)
        if self.dim == 0:
            return v
        coeffs = v[list(self.pivots)]
        return (v - coeffs @ self.basis) % self.p

    def is_subspace_of(self, other: "Subspace") -> bool:
        if (self.p, self.ambient) != (other.p, other.ambient):
            raise ValueError("ambient mismatch")
        return all(other.contains(row) for row in self.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.p == other.p
            and self.ambient == other.ambient
            and self.basis.shape == other.basis.shape
            and bool(np.array_equal(self.basis, other.basis))
        )

    def __hash__(self) -> int:
        return hash((self.p, self.ambient, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, p={self.p})"


def kernel(mat, p: int) -> Subspace:
    """Right kernel {v : mat @ v = 0} as a canonical subspace."""
    m = as_matrix(mat, p)
    nrows, ncols = m.shape
    if nrows == 0:
        return Subspace.full(ncols, p)
    r, rank, pivots = rref(m, p)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    if not free:
        return Subspace.zero(ncols, p)
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for row, col in enumerate(pivots):
            basis[t, col] = (-r[row, f]) % p
    return Subspace.from_rows(basis, ncols, p)


def preimage(mat, target: Subspace) -> Subspace:
    """{v : mat @ v lies in target}, canonical."""
    p = target.p
    m = as_matrix(mat, p)
    if m.shape[0] != target.ambient:
        raise ValueError("target ambient dimension must equal the row count of mat")
    aug = np.hstack([m, (-target.basis.T) % p])
    ker = kernel(aug, p)
    return Subspace.from_rows(ker.basis[:, : m.shape[1]], m.shape[1], p)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if (a.p, a.ambient) != (b.p, b.ambient):
        raise ValueError("subspace sum requires equal ambient spaces")
    return Subspace.from_rows(np.vstack([a.basis, b.basis]), a.ambient, a.p)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    if (a.p, a.ambient) != (b.p, b.ambient):
        raise ValueError("subspace intersection requires equal ambient spaces")
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.ambient, a.p)
    # Solve A^T x = B^T y; each kernel row (x, y) yields the common vector x @ A.
    aug = np.hstack([a.basis.T, (-b.basis.T) % a.p])
    ker = kernel(aug, a.p)
    if ker.dim == 0:
        return Subspace.zero(a.ambient, a.p)
    rows = mul_mod(ker.basis[:, : a.dim], a.basis, a.p)
    return Subspace.from_rows(rows, a.ambient, a.p)


def complement_projector(s: Subspace) -> tuple[np.ndarray, tuple[int, ...]]:
    """Projection onto the non-pivot coordinates modulo the subspace.

    Returns (Q, free) where free lists the non-pivot columns of s and
    Q is the (len(free) x ambient) matrix sending x to the free
    coordinates of x reduced modulo s; Q @ x = 0 iff x lies in s, and
    the standard basis vectors at the free columns lift a basis of the
    quotient space.
    """
    d, p = s.ambient, s.p
    free = tuple(c for c in range(d) if c not in set(s.pivots))
    m = np.eye(d, dtype=np.int64)
    for t, pc in enumerate(s.pivots):
        m[:, pc] = (m[:, pc] - s.basis[t]) % p
    return m[list(free), :], free


def orthogonal_complement(s: Subspace, gram: np.ndarray) -> Subspace:
    """{v : b @ gram @ v = 0 for every basis row b of s}.

    gram must be an invertible ambient x ambient matrix; singularity is
    rejected because it would break dim(s) + dim(complement) = ambient.
    """
    g = as_matrix(gram, s.p)
    if g.shape != (s.ambient, s.ambient):
        raise ValueError("gram matrix has wrong shape")
    _, rank, _ = rref(g, s.p)
    if rank != s.ambient:
        raise ValueError("gram matrix is singular (form is degenerate)")
    if s.dim == 0:
        return Subspace.full(s.ambient, s.p)
    return kernel(mul_mod(s.basis, g, s.p), s.p)

"""Generators for the tame two-vertex quiver algebra families.

All three families live on the quiver with vertices 1, 2 and arrows

    a: 1 -> 1 (loop),  b: 1 -> 2,  g: 2 -> 1,  h: 2 -> 2 (loop),

composing left to right, so the word "abg" is the 1 -> 1 path a then b
then g.  Families (selected by the strings ``d2b``, ``sd1``, ``sd2``):

* ``d2b``  -- dihedral type D(2B)^{k,s}(c):
      bh = 0, hg = 0, gb = 0, a^2 = c (abg)^k,
      (abg)^k = (bga)^k, h^s = (gab)^k,
  with s = 1 meaning the loop h does not exist and h^s stands for
  (gab)^k.
* ``sd1``  -- semidihedral type SD(2B)_1^{k,t}(c): as d2b with t >= 2
  and a^2 = (bga)^(k-1) bg + c (abg)^k.
* ``sd2``  -- semidihedral type SD(2B)_2^{k,t}(c), t >= 2, k + t >= 4:
      bh = (abg)^(k-1) ab, gb = h^(t-1), hg = (gab)^(k-1) ga,
      bh^2 = 0, h^2 g = 0, a^2 = c (abg)^k,
  with the identifications h^(t-1) = gb and h^t = (gab)^k = hgb.

Multiplication tables are built by rewriting concatenations of basis
words.  Rules are applied at the leftmost matching position (longest
left-hand side first); any term whose word grows past ``length_cap``
letters is dropped as zero, which is sound because paths longer than
the longest socle word vanish in these algebras.  The rewriting system
is not certified confluent a priori; instead every generated algebra
is validated in full (associativity, identity, radical designation),
which catches any rewrite defect.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Algebra, require_valid
from .errors import InvariantViolation
from .linalg import FieldSpec

__all__ = [
    "ARROWS",
    "FamilyParams",
    "PathWord",
    "RewriteRule",
    "build_family",
    "dihedral_algebra",
    "expected_t1_dim",
    "reduce_path",
    "sd1_algebra",
    "sd2_algebra",
]

ARROWS: dict[str, tuple[int, int]] = {"a": (1, 1), "b": (1, 2), "g": (2, 1), "h": (2, 2)}

FAMILIES = ("d2b", "sd1", "sd2")


def word_target(src: int, arrows: str) -> int:
    v = src
    for ch in arrows:
        s, t = ARROWS[ch]
        if s != v:
            raise ValueError(f"word {arrows!r} is not composable at {ch!r}")
        v = t
    return v


@dataclass(frozen=True)
class PathWord:
    """A path in the quiver; empty arrow strings are the idempotents."""

    src: int
    arrows: str

    def __post_init__(self):
        if self.src not in (1, 2):
            raise ValueError("source vertex must be 1 or 2")
        word_target(self.src, self.arrows)

    @property
    def tgt(self) -> int:
        return word_target(self.src, self.arrows)

    def __len__(self) -> int:
        return len(self.arrows)


@dataclass(frozen=True)
class RewriteRule:
    """lhs -> sum of (coefficient, word) terms, endpoint-compatible."""

    lhs: str
    rhs: tuple[tuple[int, str], ...]

    def __post_init__(self):
        if not self.lhs:
            raise ValueError("rewrite rule needs a nonempty left-hand side")
        src = ARROWS[self.lhs[0]][0]
        tgt = word_target(src, self.lhs)
        for _, w in self.rhs:
            if not w:
                raise ValueError("empty right-hand side words are not supported")
            if ARROWS[w[0]][0] != src or word_target(src, w) != tgt:
                raise ValueError(f"rule {self.lhs!r} -> {w!r} changes endpoints")


@dataclass(frozen=True)
class FamilyParams:
    """Parameters (family, k, s, c, p); s plays the role of t for sd1/sd2."""

    family: str
    k: int
    s: int
    c: int
    p: int = 2

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose one of {FAMILIES}")
        if self.c not in (0, 1):
            raise ValueError("the scalar c must be 0 or 1")
        FieldSpec(self.p)
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.family == "d2b" and self.s < 1:
            raise ValueError("d2b requires s >= 1")
        if self.family in ("sd1", "sd2") and self.s < 2:
            raise ValueError(f"{self.family} requires t >= 2")
        if self.family == "sd2" and self.k + self.s < 4:
            raise ValueError("sd2 requires k + t >= 4")


# ---------------------------------------------------------------------------
# Rewriting
# ---------------------------------------------------------------------------

_MAX_REWRITE_STEPS = 100_000


def _reduce(rules: list[RewriteRule], word: str, cap: int, p: int) -> dict[str, int]:
    """Normalize a word; returns {normal word: coefficient}.

    Rules fire at the leftmost matching position, longest lhs first.
    Terms longer than ``cap`` are dropped (zero).  Raises if the step
    budget is exhausted, which would signal a non-terminating rule set.
    """
    ordered = sorted(rules, key=lambda r: -len(r.lhs))
    pending: dict[str, int] = {}
    out: dict[str, int] = {}

    def push(target: dict[str, int], w: str, coeff: int) -> None:
        coeff %= p
        if coeff == 0:
            return
        new = (target.get(w, 0) + coeff) % p
        if new:
            target[w] = new
        else:
            target.pop(w, None)

    if len(word) <= cap:
        push(pending, word, 1)
    steps = 0
    while pending:
        w = next(iter(pending))
        coeff = pending.pop(w)
        match = None
        for pos in range(len(w)):
            for rule in ordered:
                if w.startswith(rule.lhs, pos):
                    match = (pos, rule)
                    break
            if match:
                break
        if match is None:
            push(out, w, coeff)
            continue
        steps += 1
        if steps > _MAX_REWRITE_STEPS:
            raise InvariantViolation("rewriting step budget exhausted; rule set does not terminate")
        pos, rule = match
        head, tail = w[:pos], w[pos + len(rule.lhs):]
        for rcoeff, rword in rule.rhs:
            new = head + rword + tail
            if len(new) <= cap:
                push(pending, new, coeff * rcoeff)
    return out


def reduce_path(rules: list[RewriteRule], w: PathWord | str, length_cap: int, p: int = 2) -> dict[str, int]:
    """Public reduction entry point; see the module docstring for semantics."""
    if isinstance(w, PathWord):
        arrows = w.arrows
    else:
        arrows = w
        if arrows:
            word_target(ARROWS[arrows[0]][0], arrows)
    return _reduce(rules, arrows, length_cap, p)


# ---------------------------------------------------------------------------
# Basis descriptions
# ---------------------------------------------------------------------------

def _cycle_label(cycle: str, i: int, tail: str = "") -> str:
    if i == 0:
        return tail
    head = cycle if i == 1 else f"{cycle}^{i}"
    return f"{head}.{tail}" if tail else head


def _h_label(j: int) -> str:
    return "h" if j == 1 else f"h^{j}"


def _basis_b11(k: int, socle_label: str) -> list[tuple[str, str, tuple[int, int]]]:
    rows = [("", "e1", (1, 1))]
    rows += [("abg" * i, _cycle_label("abg", i), (1, 1)) for i in range(1, k)]
    rows += [("a", "a", (1, 1))]
    rows += [("abg" * i + "a", _cycle_label("abg", i, "a"), (1, 1)) for i in range(1, k)]
    rows += [("bga" * i, _cycle_label("bga", i), (1, 1)) for i in range(1, k)]
    rows += [("bg", "bg", (1, 1))]
    rows += [("bga" * i + "bg", _cycle_label("bga", i, "bg"), (1, 1)) for i in range(1, k)]
    rows += [("abg" * k, socle_label, (1, 1))]
    return rows


def _basis_offdiag(k: int) -> list[tuple[str, str, tuple[int, int]]]:
    rows = [("b", "b", (1, 2))]
    rows += [("bga" * i + "b", _cycle_label("bga", i, "b"), (1, 2)) for i in range(1, k)]
    rows += [("ab", "ab", (1, 2))]
    rows += [("abg" * i + "ab", _cycle_label("abg", i, "ab"), (1, 2)) for i in range(1, k)]
    rows += [("g", "g", (2, 1))]
    rows += [("gab" * i + "g", _cycle_label("gab", i, "g"), (2, 1)) for i in range(1, k)]
    rows += [("ga", "ga", (2, 1))]
    rows += [("gab" * i + "ga", _cycle_label("gab", i, "ga"), (2, 1)) for i in range(1, k)]
    return rows


def _dihedral_like_basis(k: int, s: int, socle2_label: str):
    """Basis of d2b/sd1: the two loops' powers meet the three 3-cycles."""
    rows = _basis_b11(k, _cycle_label("abg", k))
    rows += _basis_offdiag(k)
    rows += [("", "e2", (2, 2))]
    rows += [("gab" * i, _cycle_label("gab", i), (2, 2)) for i in range(1, k)]
    rows += [("h" * j, _h_label(j), (2, 2)) for j in range(1, s)]
    rows += [("gab" * k, socle2_label, (2, 2))]
    return rows


def _sd2_basis(k: int, t: int):
    rows = _basis_b11(k, _cycle_label("abg", k))
    rows += _basis_offdiag(k)
    rows += [("", "e2", (2, 2))]
    rows += [("gab" * i, _cycle_label("gab", i), (2, 2)) for i in range(1, k)]
    rows += [("h" * j, _h_label(j), (2, 2)) for j in range(1, t)]
    rows += [("gab" * k, _h_label(t), (2, 2))]
    return rows


# ---------------------------------------------------------------------------
# Rule sets
# ---------------------------------------------------------------------------

def _d2b_rules(k: int, s: int, c: int) -> list[RewriteRule]:
    abg_k = "abg" * k
    gab_k = "gab" * k
    rules = [
        RewriteRule("gb", ()),
        RewriteRule("aa", ((c, abg_k),) if c else ()),
        RewriteRule("bga" * k, ((1, abg_k),)),
        RewriteRule(gab_k + "g", ()),
    ]
    if s >= 2:
        rules += [
            RewriteRule("bh", ()),
            RewriteRule("hg", ()),
            RewriteRule("h" * s, ((1, gab_k),)),
        ]
    else:
        # s = 1: the loop h does not exist; h^s stands for (gab)^k.
        rules += [RewriteRule("b" + gab_k, ())]
    return rules


def _sd1_rules(k: int, t: int, c: int) -> list[RewriteRule]:
    abg_k = "abg" * k
    gab_k = "gab" * k
    square = ((1, "bga" * (k - 1) + "bg"),) + (((c, abg_k),) if c else ())
    return [
        RewriteRule("gb", ()),
        RewriteRule("bh", ()),
        RewriteRule("hg", ()),
        RewriteRule("aa", square),
        RewriteRule("bga" * k, ((1, abg_k),)),
        RewriteRule("h" * t, ((1, gab_k),)),
        RewriteRule(gab_k + "g", ()),
    ]


def _sd2_rules(k: int, t: int, c: int) -> list[RewriteRule]:
    abg_k = "abg" * k
    gab_k = "gab" * k
    return [
        RewriteRule("bhh", ()),
        RewriteRule("hhg", ()),
        RewriteRule("bh", ((1, "abg" * (k - 1) + "ab"),)),
        RewriteRule("hg", ((1, "gab" * (k - 1) + "ga"),)),
        RewriteRule("gb", ((1, "h" * (t - 1)),)),
        RewriteRule("aa", ((c, abg_k),) if c else ()),
        RewriteRule("bga" * k, ((1, abg_k),)),
        RewriteRule("h" * t, ((1, gab_k),)),
        RewriteRule(gab_k + "g", ()),
    ]


# ---------------------------------------------------------------------------
# Table construction
# ---------------------------------------------------------------------------

def _build(basis_rows, rules: list[RewriteRule], cap: int, p: int) -> Algebra:
    words = [PathWord(src=vt[0], arrows=w) for w, _, vt in basis_rows]
    labels = tuple(label for _, label, _ in basis_rows)
    verts = tuple(vt for _, _, vt in basis_rows)
    d = len(words)
    index: dict[tuple[int, str], int] = {}
    for n, pw in enumerate(words):
        key = (pw.src, pw.arrows)
        if key in index:
            raise InvariantViolation(f"duplicate basis word {key}")
        index[key] = n

    idem = tuple(n for n, pw in enumerate(words) if not pw.arrows)
    rad = tuple(n for n, pw in enumerate(words) if pw.arrows)

    table = np.zeros((d, d, d), dtype=np.int64)
    for i, wi in enumerate(words):
        for j, wj in enumerate(words):
            if wi.tgt != wj.src:
                continue
            combined = wi.arrows + wj.arrows
            if not combined:
                table[i, j, index[(wi.src, "")]] = 1
                continue
            for w, coeff in _reduce(rules, combined, cap, p).items():
                key = (wi.src, w)
                if key not in index:
                    raise InvariantViolation(
                        f"product reduced to non-basis word {w!r} (from {combined!r})"
                    )
                table[i, j, index[key]] = coeff

    return require_valid(
        Algebra(
            field=FieldSpec(p),
            labels=labels,
            idempotents=idem,
            radical_indices=rad,
            table=table,
            vertex=verts,
        )
    )


def dihedral_algebra(k: int, s: int, c: int, p: int = 2) -> Algebra:
    """The dihedral-type algebra D(2B)^{k,s}(c) over GF(p); dim 9k+s."""
    params = FamilyParams("d2b", k, s, c, p)
    socle2 = _h_label(s) if s >= 2 else _cycle_label("gab", k)
    rows = _dihedral_like_basis(k, s, socle2)
    return _build(rows, _d2b_rules(k, s, c), cap=max(3 * k, s), p=params.p)


def sd1_algebra(k: int, t: int, c: int, p: int = 2) -> Algebra:
    """The semidihedral-type algebra SD(2B)_1^{k,t}(c) over GF(p); dim 9k+t."""
    params = FamilyParams("sd1", k, t, c, p)
    rows = _dihedral_like_basis(k, t, _h_label(t))
    return _build(rows, _sd1_rules(k, t, c), cap=max(3 * k, t), p=params.p)


def sd2_algebra(k: int, t: int, c: int, p: int = 2) -> Algebra:
    """The semidihedral-type algebra SD(2B)_2^{k,t}(c) over GF(p); dim 9k+t."""
    params = FamilyParams("sd2", k, t, c, p)
    rows = _sd2_basis(k, t)
    return _build(rows, _sd2_rules(k, t, c), cap=max(3 * k, t), p=params.p)


def build_family(params: FamilyParams) -> Algebra:
    if params.family == "d2b":
        return dihedral_algebra(params.k, params.s, params.c, params.p)
    if params.family == "sd1":
        return sd1_algebra(params.k, params.s, params.c, params.p)
    return sd2_algebra(params.k, params.s, params.c, params.p)


# ---------------------------------------------------------------------------
# Closed-form dimension of T_1
# ---------------------------------------------------------------------------

def expected_t1_dim(params: FamilyParams) -> int | None:
    """Closed-form dim T_1, or None where no closed form is available.

    Covers d2b and sd1 for every parity of (k, s) and both scalars, and
    sd2 only when k and t are both odd.  Only meaningful for p = 2.
    """
    if params.p != 2:
        return None
    k, s, c = params.k, params.s, params.c
    if params.family in ("d2b", "sd1"):
        base = (8 * k - 2) + (k - (k + 2) // 2) + (s + 1 - (s + 2) // 2)
        k_even, s_even = k % 2 == 0, s % 2 == 0
        if c == 0:
            extra = 2 if (k_even and s_even) else 1
        else:
            if k_even and s_even:
                extra = 2
            elif k_even or s_even:
                extra = 1
            else:
                extra = 0
        return base + extra
    if k % 2 == 1 and s % 2 == 1:
        return (8 * k - 2) + (k - 1) // 2 + (s + 1) // 2 + (1 if c == 0 else 0)
    return None

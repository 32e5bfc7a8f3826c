"""Reduced simplicial homology ranks over prime fields and the rationals.

Boundary matrices carry the usual alternating signs over the sorted vertex
order and include the augmentation map sending every vertex to the empty face,
so Betti numbers here are reduced.  All arithmetic is exact: bit-set
elimination over GF(2), modular elimination for odd primes, and fraction-free
(Bareiss) elimination over the integers for the rational ranks.

A complex whose only face is the empty face, or the void complex, has no
vertex to hang homology on; such inputs report the verdict "empty", which
every acyclicity consumer treats as passing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .complexes import LabeledComplex

VERDICT_EMPTY = "empty"
VERDICT_ACYCLIC = "acyclic"
VERDICT_NOT_ACYCLIC = "not_acyclic"


class HomologyError(ValueError):
    pass


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: GF(p) for a prime p, or the rationals."""

    kind: str
    p: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "prime":
            if self.p is None or self.p < 2:
                raise HomologyError("prime field needs p >= 2")
            if any(self.p % d == 0 for d in range(2, int(self.p**0.5) + 1)):
                raise HomologyError(f"{self.p} is not prime")
        elif self.kind == "rationals":
            if self.p is not None:
                raise HomologyError("the rationals take no modulus")
        else:
            raise HomologyError(f"unknown field kind {self.kind!r}")

    def render(self) -> str:
        return "q" if self.kind == "rationals" else f"gf{self.p}"

    def __str__(self) -> str:
        return self.render()

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        text = text.strip().lower()
        if text in ("q", "rationals", "rational"):
            return cls("rationals")
        if text.startswith("gf"):
            return cls("prime", int(text[2:]))
        raise HomologyError(f"cannot parse field {text!r}")


GF2 = FieldSpec("prime", 2)
GF32003 = FieldSpec("prime", 32003)
RATIONALS = FieldSpec("rationals")
DEFAULT_FIELDS = (GF2, GF32003)


@dataclass(frozen=True)
class HomologyProfile:
    field: FieldSpec
    betti_minus_one: int
    betti: tuple[int, ...]

    @property
    def is_acyclic(self) -> bool:
        return self.betti_minus_one == 0 and all(b == 0 for b in self.betti)

    def to_json_dict(self) -> dict:
        return {
            "field": self.field.render(),
            "betti_minus_one": self.betti_minus_one,
            "betti": list(self.betti),
        }


def boundary_matrix(delta: LabeledComplex, i: int) -> list[list[int]]:
    """Matrix of the boundary map from i-faces to (i-1)-faces; i = 0 gives the
    augmentation row of ones.  Rows and columns follow the complex's face order."""
    if i < 0:
        raise HomologyError("boundary dimension must be nonnegative")
    cols = delta.faces_of_size(i + 1)
    if i == 0:
        return [[1] * len(cols)]
    rows = delta.faces_of_size(i)
    row_index = {face: r for r, face in enumerate(rows)}
    matrix = [[0] * len(cols) for _ in rows]
    for c, face in enumerate(cols):
        sign = 1
        for drop in range(len(face)):
            sub = face[:drop] + face[drop + 1:]
            matrix[row_index[sub]][c] = sign
            sign = -sign
    return matrix


def _rank_gf2(matrix: Sequence[Sequence[int]]) -> int:
    rows = []
    for row in matrix:
        mask = 0
        for j, entry in enumerate(row):
            if entry % 2:
                mask |= 1 << j
        if mask:
            rows.append(mask)
    rank = 0
    while rows:
        pivot = rows.pop()
        rank += 1
        low = pivot & -pivot
        rows = [r ^ pivot if r & low else r for r in rows]
        rows = [r for r in rows if r]
    return rank


def _rank_mod_p(matrix: Sequence[Sequence[int]], p: int) -> int:
    rows = [[entry % p for entry in row] for row in matrix]
    rows = [row for row in rows if any(row)]
    if not rows:
        return 0
    cols = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < cols:
        pivot_row = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot_row is None:
            col += 1
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        inv = pow(rows[rank][col], p - 2, p) if p > 2 else rows[rank][col]
        norm = [(entry * inv) % p for entry in rows[rank]]
        rows[rank] = norm
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [(a - factor * b) % p for a, b in zip(rows[r], norm)]
        rank += 1
        col += 1
    return rank


def _rank_rational(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free elimination over the integers; exact rational rank."""
    rows = [list(row) for row in matrix if any(row)]
    if not rows:
        return 0
    cols = len(rows[0])
    rank = 0
    col = 0
    previous_pivot = 1
    while rank < len(rows) and col < cols:
        pivot_row = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot_row is None:
            col += 1
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            factor = rows[r][col]
            rows[r] = [
                (pivot * a - factor * b) // previous_pivot
                for a, b in zip(rows[r], rows[rank])
            ]
        previous_pivot = pivot
        rank += 1
        col += 1
    return rank


def matrix_rank(matrix: Sequence[Sequence[int]], field: FieldSpec) -> int:
    if not matrix or not any(len(row) for row in matrix):
        return 0
    if field.kind == "rationals":
        return _rank_rational(matrix)
    if field.p == 2:
        return _rank_gf2(matrix)
    return _rank_mod_p(matrix, field.p)


def reduced_betti(delta: LabeledComplex, field: FieldSpec) -> HomologyProfile:
    """Reduced Betti numbers up to the top dimension; needs at least one vertex."""
    if not delta.has_vertices:
        raise HomologyError("reduced homology here needs a complex with a vertex")
    top = delta.dim
    face_counts = [len(delta.faces_of_size(size)) for size in range(1, top + 2)]
    ranks = [matrix_rank(boundary_matrix(delta, i), field) for i in range(top + 1)]
    ranks.append(0)
    betti = tuple(
        face_counts[i] - ranks[i] - ranks[i + 1] for i in range(top + 1)
    )
    return HomologyProfile(field=field, betti_minus_one=1 - ranks[0], betti=betti)


def is_acyclic(
    delta: LabeledComplex, fields: Sequence[FieldSpec] = DEFAULT_FIELDS
) -> dict[FieldSpec, str]:
    """Verdict per field: 'empty' when there is no vertex, else 'acyclic' or
    'not_acyclic'.  Empty counts as passing everywhere downstream."""
    out: dict[FieldSpec, str] = {}
    if not delta.has_vertices:
        for field in fields:
            out[field] = VERDICT_EMPTY
        return out
    for field in fields:
        profile = reduced_betti(delta, field)
        out[field] = VERDICT_ACYCLIC if profile.is_acyclic else VERDICT_NOT_ACYCLIC
    return out


def verdict_passes(verdict: str) -> bool:
    return verdict in (VERDICT_EMPTY, VERDICT_ACYCLIC)

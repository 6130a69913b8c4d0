"""Reduced simplicial homology over Q or a prime field.

The chain complex is augmented: C_{-1} is one-dimensional, spanned by the
empty face, so the irrelevant complex {emptyset} has H~_{-1} = k and a cone
has no homology at all.  Boundary signs follow the usual convention on faces
sorted by ground-set position: dropping the j-th smallest element carries
sign (-1)^j.

Dimensions are all that is reported: dim H~_d = nullity(d_d) - rank(d_{d+1}),
where the boundary d_d has one column per d-face and one row per (d-1)-face,
both in the complex's canonical face order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import linalg
from .complexes import SimplicialComplex


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals (modulus None) or GF(p), p prime."""

    modulus: Optional[int] = None

    def __post_init__(self) -> None:
        p = self.modulus
        if p is None:
            return
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"modulus must be prime, got {p}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    def __str__(self) -> str:
        return "Q" if self.modulus is None else f"GF({self.modulus})"


RATIONALS = FieldSpec.rationals()


def parse_field(text: str) -> FieldSpec:
    """Parse a field name: 'q'/'Q'/'0' for the rationals, or a prime."""
    t = text.strip()
    if t.lower() in ("q", "0", "rational", "rationals"):
        return FieldSpec.rationals()
    try:
        p = int(t)
    except ValueError:
        raise ValueError(f"unrecognized field {text!r}; use 'q' or a prime") from None
    return FieldSpec.prime(p)


def boundary_matrix(k: SimplicialComplex, d: int) -> list[dict[int, int]]:
    """The boundary map from d-chains to (d-1)-chains as sparse columns.

    Columns follow faces_of_dimension(d), rows follow faces_of_dimension(d-1).
    For d = 0 every vertex maps to the single empty face with coefficient +1.
    """
    if d < 0:
        raise ValueError("boundary_matrix is defined for d >= 0")
    row_index = {f: i for i, f in enumerate(k.faces_of_dimension(d - 1))}
    cols: list[dict[int, int]] = []
    for face in k.faces_of_dimension(d):
        col: dict[int, int] = {}
        sign = 1
        for j in range(len(face)):
            sub = face[:j] + face[j + 1 :]
            col[row_index[sub]] = sign
            sign = -sign
        cols.append(col)
    return cols


def boundary_matrices(k: SimplicialComplex) -> list[list[dict[int, int]]]:
    """[d_0, d_1, ..., d_dim]; empty list for the void complex."""
    return [boundary_matrix(k, d) for d in range(0, k.dim + 1)]


def _rank(k: SimplicialComplex, d: int, field: FieldSpec) -> int:
    if d < 0 or d > k.dim:
        return 0
    cols = boundary_matrix(k, d)
    nrows = len(k.faces_of_dimension(d - 1))
    return linalg.rank(cols, nrows, modulus=field.modulus)


def reduced_homology(k: SimplicialComplex, field: FieldSpec = RATIONALS) -> list[int]:
    """Dimensions [dim H~_{-1}, dim H~_0, ..., dim H~_dim].

    The void complex yields [0] (nothing in any degree, reported at -1 for
    shape stability).
    """
    if k.is_void:
        return [0]
    counts = [len(k.faces_of_dimension(d)) for d in range(-1, k.dim + 1)]
    ranks = [0] + [
        linalg.rank(boundary_matrix(k, d), counts[d], modulus=field.modulus)
        for d in range(0, k.dim + 1)
    ] + [0]
    # entry i covers degree d = i - 1; nullity(d_d) = f_d - rank(d_d)
    return [counts[i] - ranks[i] - ranks[i + 1] for i in range(len(counts))]


def homology_dimension(k: SimplicialComplex, d: int, field: FieldSpec = RATIONALS) -> int:
    """dim H~_d, computing only the two boundary ranks that matter."""
    if k.is_void or d < -1 or d > k.dim:
        return 0
    f_d = len(k.faces_of_dimension(d))
    return f_d - _rank(k, d, field) - _rank(k, d + 1, field)


def euler_characteristic_check(k: SimplicialComplex, field: FieldSpec = RATIONALS) -> bool:
    """Reduced Euler characteristic from face counts equals the one from homology."""
    if k.is_void:
        return True
    from_faces = 0
    for d in range(-1, k.dim + 1):
        sign = 1 if d % 2 == 0 else -1
        from_faces += sign * len(k.faces_of_dimension(d))
    hom = reduced_homology(k, field)
    from_homology = sum((1 if i % 2 == 1 else -1) * h for i, h in enumerate(hom))
    return from_faces == from_homology

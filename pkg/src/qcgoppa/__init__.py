"""Invariant irreducible polynomials over GF(2^n) and the quasi-cyclic
Goppa-type codes built from them."""

from .gf2e import Fe, FieldCtx, TowerEmbedding, build_tower, default_field, make_field
from .polyring import Poly

__all__ = [
    "Fe",
    "FieldCtx",
    "Poly",
    "TowerEmbedding",
    "build_tower",
    "default_field",
    "make_field",
]

"""Exact weighted-Hamming-metric toolkit over small finite fields."""

from whamming.errors import (
    CapExceededError,
    FieldError,
    InstanceError,
    PreconditionError,
    WhammingError,
)
from whamming.gf import FieldElement, FieldSpec, elements, field_create
from whamming.kernels import BACKEND
from whamming.linalg import Subspace, dual, point_of, projective_points, qbinom, rref, subspaces, subspaces_containing
from whamming.wspace import CodeMatrix, WeightedSpace, Wt, chi, column_map, dist, supp, wt

__version__ = "0.1.0"

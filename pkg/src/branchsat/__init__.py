"""Branching cones, Levi-movability and saturation checks for pairs G in Ghat."""

__version__ = "0.1.0"

from .exceptions import (  # noqa: E402
    BranchSatError,
    CatalogFormatError,
    DimensionError,
    HypothesisViolated,
    InvalidType,
    NotDominant,
    NotPointed,
    UnknownPair,
)
from .rootsystem import RootSystem, build_root_system  # noqa: E402
from .embeddings import EmbeddedPair, builtin_pair, lr_lattice, validate_embedding  # noqa: E402
from .admissible import admissible_one_param_subgroups  # noqa: E402
from .levimov import candidate_pairs, generate_h_representation, inequality, is_levi_movable  # noqa: E402
from .polycone import Cone, extreme_rays, hilbert_basis, minimal_h_representation  # noqa: E402
from .branching import branch_multiplicity, dominant_character, in_lr  # noqa: E402
from .pipeline import check_saturation, compute_cone, verify_rays  # noqa: E402

__all__ = [
    "BranchSatError",
    "CatalogFormatError",
    "DimensionError",
    "HypothesisViolated",
    "InvalidType",
    "NotDominant",
    "NotPointed",
    "UnknownPair",
    "RootSystem",
    "build_root_system",
    "EmbeddedPair",
    "builtin_pair",
    "lr_lattice",
    "validate_embedding",
    "admissible_one_param_subgroups",
    "candidate_pairs",
    "generate_h_representation",
    "inequality",
    "is_levi_movable",
    "Cone",
    "extreme_rays",
    "hilbert_basis",
    "minimal_h_representation",
    "branch_multiplicity",
    "dominant_character",
    "in_lr",
    "check_saturation",
    "compute_cone",
    "verify_rays",
]

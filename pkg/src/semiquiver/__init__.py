"""Exact computations with representations of bound quivers and their semi-invariants."""
from .canonical import (CanonicalSpec, build_canonical, canonical_algebra, class_LTR, isotropic_root,
                        tame_class, tube_module)
from .decompose import decompose
from .errors import (BadParameters, BadWeights, CyclicQuiver, DecompositionFailure, ExceptionalPoint,
                    FormatError, InvalidRelation, NoDimensionVector, NonSquare, NotMultipleOfIsotropicRoot,
                    PdimTooLarge, QuiverError, ShapeMismatch, TooLarge, UnsupportedStrategy,
                    VerificationFailed, WeightMismatch)
from .projectives import Presentation, minimal_presentation, projective, realize, weight_of_module
from .quiver import (Arrow, BoundQuiver, Path, PathElement, Quiver, cartan_matrix, classify_dimvector,
                     euler_form, euler_pairing, path_space_basis, tits_form, topological_order)
from .representation import (HomBasis, ModuleSampler, Representation, act, check_module, direct_sum, end_dim,
                             evaluate, hom_basis, hom_dim, orbit_dim, sample_module)
from .semi_invariants import (BlockMap, SemiInvariantValue, c_phi, c_V, phi_direct_sum, sample_phi, si_dim,
                              weight_of)
from .stability import (HilbertTable, StabilityVerdict, enumerate_subdims_ff, find_destabilizer, hilbert_table,
                        recognize_products, semistable_verdict, submodule_generated)

__version__ = "0.1.0"

__all__ = [
    "Arrow", "BadParameters", "BadWeights", "BlockMap", "BoundQuiver", "CanonicalSpec", "CyclicQuiver",
    "DecompositionFailure", "ExceptionalPoint", "FormatError", "HilbertTable", "HomBasis", "InvalidRelation",
    "ModuleSampler", "NoDimensionVector", "NonSquare", "NotMultipleOfIsotropicRoot", "Path", "PathElement",
    "PdimTooLarge", "Presentation", "Quiver", "QuiverError", "Representation", "SemiInvariantValue",
    "ShapeMismatch", "StabilityVerdict", "TooLarge", "UnsupportedStrategy", "VerificationFailed",
    "WeightMismatch", "act", "build_canonical", "c_V", "c_phi", "canonical_algebra", "cartan_matrix",
    "check_module", "class_LTR", "classify_dimvector", "decompose", "direct_sum", "end_dim",
    "enumerate_subdims_ff", "euler_form", "euler_pairing", "evaluate", "find_destabilizer", "hilbert_table",
    "hom_basis", "hom_dim", "isotropic_root", "minimal_presentation", "orbit_dim", "path_space_basis",
    "phi_direct_sum", "projective", "realize", "recognize_products", "sample_module", "sample_phi",
    "semistable_verdict", "si_dim", "submodule_generated", "tame_class", "tits_form", "topological_order",
    "tube_module", "weight_of", "weight_of_module",
]

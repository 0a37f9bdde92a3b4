"""Index of seaweed (biparabolic) subalgebras of simple Lie algebras."""

from .cascade import CascadeMember, CascadeSet, cascade, cascade_chain, dim_span_epsilons, kg
from .chevalley import StructureConstants, structure_constants
from .meander import CompositionPair, MeanderGraph, compositions_from_subsets, meander_index_sl
from .parabolic import parabolic_of_index
from .rootsys import (
    InputError,
    RootSystem,
    SimpleType,
    build_root_system,
    connected_components,
    highest_root,
    pairing,
    root_system,
    strongly_orthogonal,
)
from .seaweed import (
    PairReport,
    Seaweed,
    WitnessData,
    build_seaweed,
    candidate_form,
    check_rank_bound,
    d_bound,
    generic_index,
    kernel_basis,
    phi_matrix,
    verify_pair,
    witness_quantities,
)

__version__ = "0.1.0"

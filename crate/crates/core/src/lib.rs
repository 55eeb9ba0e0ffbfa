//! Generalized reciprocal distance (`RD_α`) spectra of joined-union graphs and
//! of power graphs of finite groups.

pub mod closed_form;
pub mod error;
pub mod families;
pub mod graph;
pub mod groups;
pub mod joined_union;
pub mod matrices;
pub mod partition;
pub mod printed;
pub mod spectral;

pub use closed_form::{
    closed_form, cyclic_spectrum, dihedral_spectrum, elementary_abelian_spectrum, nonabelian_pq_spectrum,
    oracle_spectrum, quaternion_spectrum, verify_closed_form, ClosedFormSpectrum, ExplicitEigenvalue,
    VerificationReport,
};
pub use error::{Error, Result};
pub use families::{registry, PowerGraphFamily, Registry};
pub use graph::{all_pairs_distances, parse_edge_list, DistanceMatrix, Graph};
pub use groups::{
    cayley_power_graph, divisor_graph, euler_phi, structural_power_graph, verify_decomposition, DivisorGraph,
    GroupElements, GroupSpec, IsomorphismReport, StructuralDecomposition,
};
pub use joined_union::{join_three_spectrum, joined_union_quotient, joined_union_spectrum, BlockData, JoinedUnionPlan};
pub use matrices::{
    rd_alpha_matrix, reciprocal_distance_matrix, reciprocal_transmission, reciprocal_transmissions, SymMatrix,
};
pub use partition::{is_equitable, quotient_matrix, VertexPartition};
pub use printed::{PrintedCheck, PrintedFormula};
pub use spectral::{
    general_eigenvalues, spectra_equal, sym_eigenvalues, sym_eigenvalues_default, union, MatchReport, QuotientMatrix,
    Spectrum,
};

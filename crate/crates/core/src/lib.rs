//! Complex projective line arrangements over Q: incidence data, the C_k
//! classification, admissibility certificates for rank-one local systems,
//! and the Aomoto complex of the Orlik–Solomon algebra.

pub mod admissibility;
pub mod aomoto;
pub mod arrangement;
pub mod classify;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod exact;
pub mod format;
pub mod local_system;

pub use admissibility::{
    bounded_shift_search, certify_c0_c1, certify_c2, certify_c3_concurrent, decide, double_shift,
    extremal, verify, Certificate, ConcurrentOutcome, ExtremalData, Method, Verdict,
};
pub use aomoto::{aomoto_dims, betti, AomotoResult};
pub use arrangement::{intersect, Arrangement, MultiplePoint, ProjLine, ProjPoint};
pub use classify::{classify, covers, CkClassification};
pub use exact::{ExactMatrix, QComplex, Rational};
pub use local_system::{exp_compatible, point_residues, standard_lift, LocalSystem, ResidueVector};

//! Matrix Lie algebras, their representations, and the index engine.

pub mod algebra;
pub mod index;
pub mod rep;
pub mod sl2;
pub mod space;

pub use algebra::{is_nilpotent, MatrixLieAlgebra};
pub use index::{
    check_vinberg, compare, dual_action_matrix, index, index_escalated, index_of_algebra, index_with, Comparison,
    IndexConfig, IndexReport, Mode, VinbergCheck,
};
pub use rep::Representation;
pub use space::{bracket_representation, MatrixSpace};
pub use sl2::{sl2, sl2_complete, sl2_complete_with_h, sl2_irrep, NilpotencyCertificate, Sl2Triple};

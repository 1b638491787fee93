//! Classical algebras, involutions and symmetric pairs.

pub mod forms;
pub mod pair;

pub use forms::{borel_gl, gl, isometry_algebra, sl, so, sp, BilinearForm, FormKind};
pub use pair::{ClassicalType, Family, GradedCentralizer, Involution, SymmetricPair, SymmetricRank};

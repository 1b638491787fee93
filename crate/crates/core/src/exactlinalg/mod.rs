//! Exact linear algebra over `Q` and over `Q[x_1, ..., x_k]`.

pub mod matrix;
pub mod poly;
pub mod rank;
pub mod rational;
pub mod span;

pub use matrix::{RationalMatrix, Vector};
pub use poly::{LinearForm, Monomial, Poly, PolyMatrix};
pub use rank::{generic_rank, generic_rank_with, RankCertificate, RankMode, RankOptions};
pub use rational::Rational;
pub use span::{independent_rows, SpanBasis};

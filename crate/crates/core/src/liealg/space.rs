//! Linear subspaces of `gl_n` that need not be subalgebras.

use serde::{Serialize, Serializer};

use super::algebra::MatrixLieAlgebra;
use super::rep::Representation;
use crate::error::{Error, Result};
use crate::exactlinalg::{independent_rows, Rational, RationalMatrix, SpanBasis, Vector};

#[derive(Clone, Debug)]
pub struct MatrixSpace {
    ambient: usize,
    basis: Vec<RationalMatrix>,
    span: SpanBasis,
}

impl MatrixSpace {
    pub fn new(ambient: usize, basis: Vec<RationalMatrix>) -> Result<Self> {
        if let Some(b) = basis.iter().find(|b| b.rows() != ambient || b.cols() != ambient) {
            return Err(Error::Shape(format!("{}x{} matrix in gl_{ambient}", b.rows(), b.cols())));
        }
        let flat: Vec<Vector> = basis.iter().map(|b| b.entries().to_vec()).collect();
        let span = SpanBasis::new(ambient * ambient, &flat)?;
        Ok(MatrixSpace { ambient, basis, span })
    }

    /// The span of `mats`, keeping a greedy independent subfamily as basis.
    pub fn spanned_by(ambient: usize, mats: Vec<RationalMatrix>) -> Result<Self> {
        let flat: Vec<Vector> = mats.iter().map(|b| b.entries().to_vec()).collect();
        let keep = independent_rows(&flat);
        let basis = keep.into_iter().map(|i| mats[i].clone()).collect();
        Self::new(ambient, basis)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[RationalMatrix] {
        &self.basis
    }

    pub fn element(&self, c: &[Rational]) -> RationalMatrix {
        RationalMatrix::from_flat(self.ambient, self.span.combine(c))
    }

    pub fn coords(&self, m: &RationalMatrix) -> Result<Vector> {
        if m.rows() != self.ambient || m.cols() != self.ambient {
            return Err(Error::Shape(format!("{}x{} matrix in gl_{}", m.rows(), m.cols(), self.ambient)));
        }
        self.span.coords(m.entries())
    }

    pub fn contains(&self, m: &RationalMatrix) -> bool {
        self.coords(m).is_ok()
    }
}

impl Serialize for MatrixSpace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.basis.serialize(s)
    }
}

/// The bracket action of `acting` on a subspace it normalizes. A
/// homomorphism by the Jacobi identity; membership of every bracket in
/// `module` is certified.
pub fn bracket_representation(acting: &MatrixLieAlgebra, module: &MatrixSpace) -> Result<Representation> {
    use rayon::prelude::*;
    let action = acting
        .basis()
        .par_iter()
        .map(|s| {
            let cols = module.basis().iter().map(|t| module.coords(&s.commutator(t))).collect::<Result<Vec<_>>>()?;
            Ok(RationalMatrix::from_columns(module.dim(), &cols))
        })
        .collect::<Result<Vec<_>>>()?;
    Representation::new_trusted(acting.clone(), module.dim(), action)
}

//! Lie algebras realized as spans of square rational matrices.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlinalg::{Rational, RationalMatrix, SpanBasis, Vector};

/// An ordered basis of `ambient × ambient` matrices closed under commutator.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "AlgebraRepr", into = "AlgebraRepr")]
pub struct MatrixLieAlgebra {
    label: String,
    ambient: usize,
    basis: Vec<RationalMatrix>,
    span: SpanBasis,
}

#[derive(Serialize, Deserialize)]
struct AlgebraRepr {
    label: String,
    ambient: usize,
    basis: Vec<RationalMatrix>,
}

impl TryFrom<AlgebraRepr> for MatrixLieAlgebra {
    type Error = Error;
    fn try_from(r: AlgebraRepr) -> Result<Self> {
        MatrixLieAlgebra::new(r.label, r.ambient, r.basis)
    }
}

impl From<MatrixLieAlgebra> for AlgebraRepr {
    fn from(a: MatrixLieAlgebra) -> Self {
        AlgebraRepr { label: a.label, ambient: a.ambient, basis: a.basis }
    }
}

impl MatrixLieAlgebra {
    /// Builds the algebra and certifies independence and bracket closure.
    pub fn new(label: impl Into<String>, ambient: usize, basis: Vec<RationalMatrix>) -> Result<Self> {
        let alg = Self::new_unchecked_closure(label, ambient, basis)?;
        alg.certify_closure()?;
        Ok(alg)
    }

    /// Certifies independence only; for bases known to be closed (fixed
    /// points of automorphisms, kernels of derivations, and the like).
    pub fn new_unchecked_closure(label: impl Into<String>, ambient: usize, basis: Vec<RationalMatrix>) -> Result<Self> {
        if let Some(b) = basis.iter().find(|b| b.rows() != ambient || b.cols() != ambient) {
            return Err(Error::Shape(format!("{}x{} basis element in gl_{ambient}", b.rows(), b.cols())));
        }
        let flat: Vec<Vector> = basis.iter().map(|b| b.entries().to_vec()).collect();
        let span = SpanBasis::new(ambient * ambient, &flat)?;
        Ok(MatrixLieAlgebra { label: label.into(), ambient, basis, span })
    }

    pub fn certify_closure(&self) -> Result<()> {
        let k = self.dim();
        let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
        pairs.par_iter().try_for_each(|&(i, j)| {
            let c = self.basis[i].commutator(&self.basis[j]);
            self.coords(&c).map(|_| ()).map_err(|_| {
                Error::OutOfSpan(format!("[b{i}, b{j}] leaves the span of `{}`", self.label))
            })
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
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

    /// The matrix `Σ c_i b_i`.
    pub fn element(&self, c: &[Rational]) -> RationalMatrix {
        assert_eq!(c.len(), self.dim(), "coordinate vector length");
        RationalMatrix::from_flat(self.ambient, self.span.combine(c))
    }

    /// Coordinates of a matrix in the basis, or [`Error::OutOfSpan`].
    pub fn coords(&self, m: &RationalMatrix) -> Result<Vector> {
        if m.rows() != self.ambient || m.cols() != self.ambient {
            return Err(Error::Shape(format!("{}x{} matrix in gl_{}", m.rows(), m.cols(), self.ambient)));
        }
        self.span.coords(m.entries())
    }

    pub fn contains(&self, m: &RationalMatrix) -> bool {
        self.coords(m).is_ok()
    }

    /// Bracket of two elements given in coordinates.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        self.coords(&self.element(x).commutator(&self.element(y)))
    }

    /// Matrix of `ad m` restricted to the algebra, for `m` in the ambient
    /// `gl` normalizing it: column `j` holds the coordinates of `[m, b_j]`.
    pub fn ad_matrix(&self, m: &RationalMatrix) -> Result<RationalMatrix> {
        let cols: Vec<Vector> =
            self.basis.par_iter().map(|b| self.coords(&m.commutator(b))).collect::<Result<_>>()?;
        Ok(RationalMatrix::from_columns(self.dim(), &cols))
    }

    /// Subalgebra spanned by the given coordinate vectors; closure certified.
    pub fn subalgebra(&self, label: impl Into<String>, vecs: &[Vector]) -> Result<Self> {
        let basis = vecs.iter().map(|c| self.element(c)).collect();
        MatrixLieAlgebra::new(label, self.ambient, basis)
    }

    /// Whether every pair of basis elements commutes.
    pub fn is_abelian(&self) -> bool {
        let k = self.dim();
        (0..k).all(|i| (i + 1..k).all(|j| self.basis[i].commutator(&self.basis[j]).is_zero()))
    }

    /// Block-diagonal direct product; basis of `self` first.
    pub fn direct_product(&self, other: &Self) -> Result<Self> {
        let (n1, n2) = (self.ambient, other.ambient);
        let z1 = RationalMatrix::zeros(n1, n1);
        let z2 = RationalMatrix::zeros(n2, n2);
        let mut basis: Vec<RationalMatrix> =
            self.basis.iter().map(|b| RationalMatrix::block_diag(&[b, &z2])).collect();
        basis.extend(other.basis.iter().map(|b| RationalMatrix::block_diag(&[&z1, b])));
        MatrixLieAlgebra::new_unchecked_closure(format!("{}x{}", self.label, other.label), n1 + n2, basis)
    }
}

/// `x^ambient = 0`.
pub fn is_nilpotent(x: &RationalMatrix) -> bool {
    assert!(x.is_square(), "nilpotency of a non-square matrix");
    let n = x.rows();
    if n == 0 {
        return true;
    }
    let mut p = x.clone();
    for _ in 1..n {
        if p.is_zero() {
            return true;
        }
        p = p.mul(x);
    }
    p.is_zero()
}

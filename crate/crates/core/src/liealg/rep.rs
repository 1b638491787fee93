//! Finite-dimensional representations of matrix Lie algebras.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::algebra::MatrixLieAlgebra;
use crate::error::{Error, Result};
use crate::exactlinalg::{Rational, RationalMatrix, Vector};

/// An algebra with one `dim × dim` action matrix per basis element.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "RepRepr", into = "RepRepr")]
pub struct Representation {
    algebra: MatrixLieAlgebra,
    dim: usize,
    action: Vec<RationalMatrix>,
}

#[derive(Serialize, Deserialize)]
struct RepRepr {
    algebra: MatrixLieAlgebra,
    dim: usize,
    action: Vec<RationalMatrix>,
}

impl TryFrom<RepRepr> for Representation {
    type Error = Error;
    fn try_from(r: RepRepr) -> Result<Self> {
        Representation::new(r.algebra, r.dim, r.action)
    }
}

impl From<Representation> for RepRepr {
    fn from(r: Representation) -> Self {
        RepRepr { algebra: r.algebra, dim: r.dim, action: r.action }
    }
}

impl Representation {
    /// Builds the representation and certifies that it respects brackets.
    pub fn new(algebra: MatrixLieAlgebra, dim: usize, action: Vec<RationalMatrix>) -> Result<Self> {
        let rep = Self::new_trusted(algebra, dim, action)?;
        rep.certify_homomorphism()?;
        Ok(rep)
    }

    /// Shape checks only. Used for actions that are homomorphisms by
    /// construction (bracket actions, duals, sums and restrictions of
    /// certified representations).
    pub fn new_trusted(algebra: MatrixLieAlgebra, dim: usize, action: Vec<RationalMatrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::Shape(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        if let Some(a) = action.iter().find(|a| a.rows() != dim || a.cols() != dim) {
            return Err(Error::Shape(format!("{}x{} action matrix on a module of dimension {dim}", a.rows(), a.cols())));
        }
        Ok(Representation { algebra, dim, action })
    }

    /// `ρ([b_i, b_j]) = [ρ(b_i), ρ(b_j)]` on all basis pairs.
    pub fn certify_homomorphism(&self) -> Result<()> {
        let k = self.algebra.dim();
        let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
        pairs.par_iter().try_for_each(|&(i, j)| {
            let b = self.algebra.basis();
            let c = self.algebra.coords(&b[i].commutator(&b[j]))?;
            let lhs = self.act_matrix(&c);
            let rhs = self.action[i].commutator(&self.action[j]);
            if lhs == rhs {
                Ok(())
            } else {
                Err(Error::NotHomomorphism(format!("basis pair ({i}, {j}) of `{}`", self.algebra.label())))
            }
        })
    }

    pub fn algebra(&self) -> &MatrixLieAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[RationalMatrix] {
        &self.action
    }

    /// `ρ(Σ c_i b_i)`.
    pub fn act_matrix(&self, c: &[Rational]) -> RationalMatrix {
        let mut out = RationalMatrix::zeros(self.dim, self.dim);
        for (ci, a) in c.iter().zip(&self.action) {
            if !ci.is_zero() {
                out.add_scaled(ci, a);
            }
        }
        out
    }

    /// The trivial module of the given dimension.
    pub fn trivial(algebra: MatrixLieAlgebra, dim: usize) -> Self {
        let action = vec![RationalMatrix::zeros(dim, dim); algebra.dim()];
        Representation { algebra, dim, action }
    }

    /// The defining module `𝕜^ambient`.
    pub fn standard(algebra: MatrixLieAlgebra) -> Self {
        let dim = algebra.ambient();
        let action = algebra.basis().to_vec();
        Representation { algebra, dim, action }
    }

    pub fn adjoint(algebra: MatrixLieAlgebra) -> Result<Self> {
        let action = algebra.basis().iter().map(|b| algebra.ad_matrix(b)).collect::<Result<Vec<_>>>()?;
        let dim = algebra.dim();
        Ok(Representation { algebra, dim, action })
    }

    /// `ρ*(s) = −ρ(s)ᵀ`.
    pub fn dual(&self) -> Self {
        let action = self.action.iter().map(|a| a.transpose().scale(&Rational::from(-1))).collect();
        Representation { algebra: self.algebra.clone(), dim: self.dim, action }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.algebra.basis() != other.algebra.basis() {
            return Err(Error::Inconsistent("direct sum of modules over different algebras".into()));
        }
        let action = self.action.iter().zip(&other.action).map(|(a, b)| RationalMatrix::block_diag(&[a, b])).collect();
        Ok(Representation { algebra: self.algebra.clone(), dim: self.dim + other.dim, action })
    }

    /// `m V`, the direct sum of `m` copies.
    pub fn m_copies(&self, m: usize) -> Self {
        let action = self
            .action
            .iter()
            .map(|a| {
                let blocks: Vec<&RationalMatrix> = std::iter::repeat_n(a, m).collect();
                RationalMatrix::block_diag(&blocks)
            })
            .collect();
        Representation { algebra: self.algebra.clone(), dim: self.dim * m, action }
    }

    /// `V ⊗ W` over the direct product algebra, acting by `x ⊗ 1 + 1 ⊗ y`.
    pub fn tensor_product(&self, other: &Self) -> Result<Self> {
        let algebra = self.algebra.direct_product(&other.algebra)?;
        let ia = RationalMatrix::identity(self.dim);
        let ib = RationalMatrix::identity(other.dim);
        let mut action: Vec<RationalMatrix> = self.action.iter().map(|a| a.kronecker(&ib)).collect();
        action.extend(other.action.iter().map(|b| ia.kronecker(b)));
        Ok(Representation { algebra, dim: self.dim * other.dim, action })
    }

    /// Restriction to a subalgebra whose basis has coordinates `coords` here.
    pub fn restrict(&self, sub: MatrixLieAlgebra, coords: &[Vector]) -> Result<Self> {
        if coords.len() != sub.dim() {
            return Err(Error::Shape("one coordinate vector per subalgebra basis element expected".into()));
        }
        let action = coords.iter().map(|c| self.act_matrix(c)).collect();
        Ok(Representation { algebra: sub, dim: self.dim, action })
    }

    /// `s · v`.
    pub fn act(&self, s: &[Rational], v: &[Rational]) -> Vector {
        self.act_matrix(s).mul_vec(v)
    }

    /// The matrix whose column `j` is `b_j · v`.
    pub fn orbit_map(&self, v: &[Rational]) -> Result<RationalMatrix> {
        if v.len() != self.dim {
            return Err(Error::Shape(format!("vector of length {} in a module of dimension {}", v.len(), self.dim)));
        }
        let cols: Vec<Vector> = self.action.iter().map(|a| a.mul_vec(v)).collect();
        Ok(RationalMatrix::from_columns(self.dim, &cols))
    }

    /// Stationary subalgebra `q_v`, with the coordinates of its basis in `q`.
    pub fn stabilizer(&self, v: &[Rational]) -> Result<(MatrixLieAlgebra, Vec<Vector>)> {
        let kernel = self.orbit_map(v)?.kernel_basis();
        let label = format!("stab({})", self.algebra.label());
        let alg = self.algebra.subalgebra(label, &kernel)?;
        Ok((alg, kernel))
    }

    /// A basis of the tangent space `q · v`.
    pub fn tangent_space(&self, v: &[Rational]) -> Result<Vec<Vector>> {
        let (r, pivots) = self.orbit_map(v)?.transpose().rref();
        Ok((0..pivots.len()).map(|i| r.row(i).to_vec()).collect())
    }

    /// The `q_v`-module `V / q·v`. The complement of `q·v` is spanned by the
    /// standard basis vectors off the echelon pivots of `q·v`.
    pub fn quotient_module(&self, v: &[Rational]) -> Result<Representation> {
        let tangent = self.tangent_space(v)?;
        let (stab, coords) = self.stabilizer(v)?;
        let n = self.dim;
        let pivots: Vec<usize> = tangent
            .iter()
            .map(|t| t.iter().position(|x| !x.is_zero()).expect("nonzero echelon row"))
            .collect();
        let complement: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
        let mut cols = tangent.clone();
        cols.extend(complement.iter().map(|&i| {
            let mut e = vec![Rational::zero(); n];
            e[i] = Rational::one();
            e
        }));
        let change = RationalMatrix::from_columns(n, &cols)
            .inverse()
            .ok_or_else(|| Error::SelfCheck("tangent space and complement are dependent".into()))?;
        let t = tangent.len();
        let q = complement.len();
        let action = coords
            .iter()
            .map(|c| {
                let induced = change.mul(&self.act_matrix(c));
                let mut out = RationalMatrix::zeros(q, q);
                for (a, &col) in complement.iter().enumerate() {
                    for b in 0..q {
                        out.set(b, a, induced.get(t + b, col).clone());
                    }
                }
                out
            })
            .collect();
        Representation::new(stab, q, action)
    }
}

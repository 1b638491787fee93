//! Bilinear forms and the classical matrix Lie algebras.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlinalg::{Rational, RationalMatrix};
use crate::liealg::MatrixLieAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Symmetric,
    Skew,
}

impl FormKind {
    /// `ε` with `Jᵀ = εJ`.
    pub fn sign(self) -> i64 {
        match self {
            FormKind::Symmetric => 1,
            FormKind::Skew => -1,
        }
    }
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormKind::Symmetric => "symmetric",
            FormKind::Skew => "skew",
        })
    }
}

/// `(v, w) = vᵀ J w` with `J` invertible and `Jᵀ = ±J`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FormRepr", into = "FormRepr")]
pub struct BilinearForm {
    matrix: RationalMatrix,
    inverse: RationalMatrix,
    kind: FormKind,
}

#[derive(Serialize, Deserialize)]
struct FormRepr {
    matrix: RationalMatrix,
    kind: FormKind,
}

impl TryFrom<FormRepr> for BilinearForm {
    type Error = Error;
    fn try_from(r: FormRepr) -> Result<Self> {
        BilinearForm::new(r.matrix, r.kind)
    }
}

impl From<BilinearForm> for FormRepr {
    fn from(f: BilinearForm) -> Self {
        FormRepr { matrix: f.matrix, kind: f.kind }
    }
}

impl BilinearForm {
    pub fn new(matrix: RationalMatrix, kind: FormKind) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::InvalidForm("Gram matrix is not square".into()));
        }
        let t = matrix.transpose();
        let ok = match kind {
            FormKind::Symmetric => t == matrix,
            FormKind::Skew => t == matrix.scale(&Rational::from(-1)),
        };
        if !ok {
            return Err(Error::InvalidForm(format!("Gram matrix is not {kind}")));
        }
        let inverse = matrix.inverse().ok_or_else(|| Error::InvalidForm("Gram matrix is singular".into()))?;
        Ok(BilinearForm { matrix, inverse, kind })
    }

    /// Antidiagonal ones.
    pub fn standard_symmetric(n: usize) -> Self {
        let mut j = RationalMatrix::zeros(n, n);
        for i in 0..n {
            j.set(i, n - 1 - i, Rational::one());
        }
        BilinearForm::new(j, FormKind::Symmetric).expect("antidiagonal form")
    }

    /// Antidiagonal with `+1` in the upper half and `−1` in the lower half.
    pub fn standard_skew(n2: usize) -> Result<Self> {
        if n2 % 2 != 0 {
            return Err(Error::InvalidForm(format!("skew form on odd dimension {n2}")));
        }
        let mut j = RationalMatrix::zeros(n2, n2);
        for i in 0..n2 {
            j.set(i, n2 - 1 - i, Rational::from(if i < n2 / 2 { 1 } else { -1 }));
        }
        BilinearForm::new(j, FormKind::Skew)
    }

    pub fn standard(kind: FormKind, n: usize) -> Result<Self> {
        match kind {
            FormKind::Symmetric => Ok(Self::standard_symmetric(n)),
            FormKind::Skew => Self::standard_skew(n),
        }
    }

    /// Orthogonal direct sum.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.kind != other.kind {
            return Err(Error::InvalidForm("direct sum of forms of different kinds".into()));
        }
        BilinearForm::new(RationalMatrix::block_diag(&[&self.matrix, &other.matrix]), self.kind)
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn inverse(&self) -> &RationalMatrix {
        &self.inverse
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `−J⁻¹ Aᵀ J`, the adjoint of `A` up to sign.
    pub fn sigma(&self, a: &RationalMatrix) -> RationalMatrix {
        self.inverse.mul(&a.transpose()).mul(&self.matrix).scale(&Rational::from(-1))
    }

    /// `J⁻¹ X` for `X` running over matrices with `Xᵀ = sign·X`: this is
    /// the space `{A : AᵀJ = sign·ε·JA}` where `Jᵀ = εJ`.
    pub fn twisted_basis(&self, sign: i64) -> Vec<RationalMatrix> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                if i == j && sign < 0 {
                    continue;
                }
                let mut x = RationalMatrix::zeros(n, n);
                x.set(i, j, Rational::one());
                if i != j {
                    x.set(j, i, Rational::from(sign));
                }
                out.push(self.inverse.mul(&x));
            }
        }
        out
    }

    /// Basis of `{A : AᵀJ + JA = 0}`.
    pub fn isometry_basis(&self) -> Vec<RationalMatrix> {
        self.twisted_basis(-self.kind.sign())
    }

    /// Basis of `{A : AᵀJ = JA}` (the self-adjoint maps).
    pub fn self_adjoint_basis(&self) -> Vec<RationalMatrix> {
        self.twisted_basis(self.kind.sign())
    }

    pub fn preserves(&self, a: &RationalMatrix) -> bool {
        a.transpose().mul(&self.matrix).add(&self.matrix.mul(a)).is_zero()
    }
}

/// `gl_n` with basis `E_ij` in row-major order.
pub fn gl(n: usize) -> MatrixLieAlgebra {
    let basis = (0..n).flat_map(|i| (0..n).map(move |j| RationalMatrix::unit(n, i, j))).collect();
    MatrixLieAlgebra::new_unchecked_closure(format!("gl{n}"), n, basis).expect("elementary matrices")
}

/// `sl_n`: off-diagonal `E_ij` then `E_ii − E_{i+1,i+1}`.
pub fn sl(n: usize) -> MatrixLieAlgebra {
    let mut basis: Vec<RationalMatrix> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| RationalMatrix::unit(n, i, j)))
        .collect();
    for i in 0..n.saturating_sub(1) {
        basis.push(RationalMatrix::unit(n, i, i).sub(&RationalMatrix::unit(n, i + 1, i + 1)));
    }
    MatrixLieAlgebra::new_unchecked_closure(format!("sl{n}"), n, basis).expect("independent basis")
}

/// Upper-triangular matrices.
pub fn borel_gl(n: usize) -> MatrixLieAlgebra {
    let basis = (0..n).flat_map(|i| (i..n).map(move |j| RationalMatrix::unit(n, i, j))).collect();
    MatrixLieAlgebra::new_unchecked_closure(format!("b(gl{n})"), n, basis).expect("elementary matrices")
}

pub fn so(form: &BilinearForm) -> Result<MatrixLieAlgebra> {
    if form.kind() != FormKind::Symmetric {
        return Err(Error::InvalidForm("so needs a symmetric form".into()));
    }
    MatrixLieAlgebra::new_unchecked_closure(format!("so{}", form.dim()), form.dim(), form.isometry_basis())
}

pub fn sp(form: &BilinearForm) -> Result<MatrixLieAlgebra> {
    if form.kind() != FormKind::Skew {
        return Err(Error::InvalidForm("sp needs a skew form".into()));
    }
    MatrixLieAlgebra::new_unchecked_closure(format!("sp{}", form.dim()), form.dim(), form.isometry_basis())
}

/// `so(J)` or `sp(J)` according to the kind of `J`.
pub fn isometry_algebra(form: &BilinearForm) -> MatrixLieAlgebra {
    match form.kind() {
        FormKind::Symmetric => so(form),
        FormKind::Skew => sp(form),
    }
    .expect("kind matches")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        for n in 1..=5 {
            let g = so(&BilinearForm::standard_symmetric(n)).unwrap();
            assert_eq!(g.dim(), n * (n - 1) / 2);
            g.certify_closure().unwrap();
        }
        for n in 1..=3 {
            let g = sp(&BilinearForm::standard_skew(2 * n).unwrap()).unwrap();
            assert_eq!(g.dim(), n * (2 * n + 1));
            g.certify_closure().unwrap();
        }
        assert_eq!(borel_gl(4).dim(), 10);
        assert_eq!(sl(3).dim(), 8);
        sl(3).certify_closure().unwrap();
    }

    #[test]
    fn wrong_forms_are_rejected() {
        assert!(BilinearForm::standard_skew(3).is_err());
        let sym = BilinearForm::standard_symmetric(2);
        assert!(sp(&sym).is_err());
        let singular = RationalMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert!(BilinearForm::new(singular, FormKind::Symmetric).is_err());
        let notsym = RationalMatrix::from_i64(&[&[1, 2], &[0, 1]]);
        assert!(BilinearForm::new(notsym, FormKind::Symmetric).is_err());
    }

    #[test]
    fn isometries_preserve_the_form() {
        let f = BilinearForm::standard_skew(4).unwrap();
        assert!(f.isometry_basis().iter().all(|a| f.preserves(a)));
        assert!(f.self_adjoint_basis().iter().all(|a| f.sigma(a) == a.scale(&Rational::from(-1))));
    }
}

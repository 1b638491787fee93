//! Coordinates with respect to a linearly independent family of vectors.

use super::matrix::{rref_in_place, RationalMatrix, Vector};
use super::rational::Rational;
use crate::error::{Error, Result};

/// A basis of a subspace of `Q^N`, prepared for fast coordinate extraction.
///
/// Coordinates are read off a set of pivot positions and then checked against
/// the full vector, so membership is always certified.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    ambient: usize,
    basis: Vec<Vec<(usize, Rational)>>,
    pivots: Vec<usize>,
    pivot_inverse: RationalMatrix,
}

impl SpanBasis {
    pub fn new(ambient: usize, vectors: &[Vector]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::Shape(format!("vector of length {} in ambient dimension {ambient}", v.len())));
        }
        let k = vectors.len();
        let mut rows: Vec<Vec<Rational>> = vectors.to_vec();
        let pivots = rref_in_place(&mut rows, ambient);
        if pivots.len() < k {
            return Err(Error::Dependent(format!("{k} vectors span only dimension {}", pivots.len())));
        }
        let square = RationalMatrix::from_rows(
            pivots.iter().map(|&p| vectors.iter().map(|v| v[p].clone()).collect()).collect(),
        )
        .unwrap_or_else(|_| RationalMatrix::zeros(0, 0));
        let pivot_inverse = if k == 0 {
            RationalMatrix::zeros(0, 0)
        } else {
            square.inverse().ok_or_else(|| Error::Dependent("pivot block is singular".into()))?
        };
        let basis = vectors
            .iter()
            .map(|v| v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect())
            .collect();
        Ok(SpanBasis { ambient, basis, pivots, pivot_inverse })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Coordinates of `x`, or [`Error::OutOfSpan`] when `x` is not in the span.
    pub fn coords(&self, x: &[Rational]) -> Result<Vector> {
        let c = self.coords_unchecked(x)?;
        let mut residual = x.to_vec();
        for (ci, b) in c.iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (i, bi) in b {
                residual[*i] -= &(ci * bi);
            }
        }
        if let Some(i) = residual.iter().position(|r| !r.is_zero()) {
            return Err(Error::OutOfSpan(format!("residual at position {i}")));
        }
        Ok(c)
    }

    /// Coordinates read from the pivot positions only.
    pub fn coords_unchecked(&self, x: &[Rational]) -> Result<Vector> {
        if x.len() != self.ambient {
            return Err(Error::Shape(format!("vector of length {} in ambient dimension {}", x.len(), self.ambient)));
        }
        let sub: Vector = self.pivots.iter().map(|&p| x[p].clone()).collect();
        Ok(self.pivot_inverse.mul_vec(&sub))
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.coords(x).is_ok()
    }

    /// The linear combination `Σ c_i b_i`.
    pub fn combine(&self, c: &[Rational]) -> Vector {
        let mut out = vec![Rational::zero(); self.ambient];
        for (ci, b) in c.iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (i, bi) in b {
                out[*i] += &(ci * bi);
            }
        }
        out
    }
}

/// Indices of a maximal linearly independent subfamily, chosen greedily in
/// order.
pub fn independent_rows(vectors: &[Vector]) -> Vec<usize> {
    let mut echelon: Vec<(usize, Vector)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        let mut w = v.clone();
        for (p, row) in &echelon {
            if w[*p].is_zero() {
                continue;
            }
            let f = w[*p].clone();
            for (wi, ri) in w.iter_mut().zip(row) {
                if !ri.is_zero() {
                    *wi -= &(&f * ri);
                }
            }
        }
        if let Some(p) = w.iter().position(|x| !x.is_zero()) {
            let inv = w[p].recip();
            for x in w.iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
            echelon.push((p, w));
            chosen.push(idx);
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn coordinates_and_membership() {
        let s = SpanBasis::new(3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]).unwrap();
        assert_eq!(s.coords(&v(&[2, 5, 3])).unwrap(), v(&[2, 3]));
        assert!(matches!(s.coords(&v(&[1, 0, 0])), Err(Error::OutOfSpan(_))));
        assert_eq!(s.combine(&v(&[2, 3])), v(&[2, 5, 3]));
    }

    #[test]
    fn greedy_independent_subfamily() {
        let fam = [v(&[1, 0, 1]), v(&[2, 0, 2]), v(&[0, 1, 0]), v(&[1, 1, 1]), v(&[0, 0, 1])];
        assert_eq!(independent_rows(&fam), vec![0, 2, 4]);
    }

    #[test]
    fn dependent_family() {
        assert!(matches!(SpanBasis::new(2, &[v(&[1, 2]), v(&[2, 4])]), Err(Error::Dependent(_))));
    }
}

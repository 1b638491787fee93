//! `sl_2`, its simple modules `R_d`, and Jacobson–Morozov completion.

use serde::{Deserialize, Serialize};

use super::algebra::{is_nilpotent, MatrixLieAlgebra};
use super::rep::Representation;
use crate::error::{Error, Result};
use crate::exactlinalg::{Rational, RationalMatrix, Vector};

/// `sl_2` with basis `e = E₁₂`, `h = E₁₁ − E₂₂`, `f = E₂₁`.
pub fn sl2() -> MatrixLieAlgebra {
    let basis = vec![
        RationalMatrix::from_i64(&[&[0, 1], &[0, 0]]),
        RationalMatrix::from_i64(&[&[1, 0], &[0, -1]]),
        RationalMatrix::from_i64(&[&[0, 0], &[1, 0]]),
    ];
    MatrixLieAlgebra::new("sl2", 2, basis).expect("sl2 is closed")
}

/// `R_d` on binary forms of degree `d`, basis `x^{d−k} y^k` for `k = 0..=d`.
pub fn sl2_irrep(d: usize) -> Representation {
    let n = d + 1;
    let mut e = RationalMatrix::zeros(n, n);
    let mut h = RationalMatrix::zeros(n, n);
    let mut f = RationalMatrix::zeros(n, n);
    for k in 0..n {
        h.set(k, k, Rational::from(d as i64 - 2 * k as i64));
        if k > 0 {
            e.set(k - 1, k, Rational::from(k as i64));
        }
        if k < d {
            f.set(k + 1, k, Rational::from((d - k) as i64));
        }
    }
    Representation::new(sl2(), n, vec![e, h, f]).expect("R_d respects brackets")
}

/// `e, h, f` as coordinate vectors over an algebra basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sl2Triple {
    pub e: Vector,
    pub h: Vector,
    pub f: Vector,
}

impl Sl2Triple {
    /// `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`.
    pub fn certify(&self, alg: &MatrixLieAlgebra) -> Result<()> {
        let two = Rational::from(2);
        let he = alg.bracket(&self.h, &self.e)?;
        let hf = alg.bracket(&self.h, &self.f)?;
        let ef = alg.bracket(&self.e, &self.f)?;
        let ok = he.iter().zip(&self.e).all(|(a, b)| *a == b * &two)
            && hf.iter().zip(&self.f).all(|(a, b)| *a == -(b * &two))
            && ef == self.h;
        if ok {
            Ok(())
        } else {
            Err(Error::SelfCheck("sl2 bracket identities fail".into()))
        }
    }

    pub fn matrices(&self, alg: &MatrixLieAlgebra) -> [RationalMatrix; 3] {
        [alg.element(&self.e), alg.element(&self.h), alg.element(&self.f)]
    }
}

fn check_nilpotent_member(alg: &MatrixLieAlgebra, e: &RationalMatrix) -> Result<Vector> {
    if e.is_zero() {
        return Err(Error::Precondition("sl2 completion needs e ≠ 0".into()));
    }
    if !is_nilpotent(e) {
        return Err(Error::Precondition("e is not nilpotent".into()));
    }
    alg.coords(e).map_err(|_| Error::Precondition(format!("e is not in `{}`", alg.label())))
}

/// Solves `[e, f] = h`, `[h, f] = −2f` for `f`.
fn solve_f(alg: &MatrixLieAlgebra, ad_e: &RationalMatrix, h: &Vector) -> Result<Vector> {
    let ad_h = alg.ad_matrix(&alg.element(h))?;
    let k = alg.dim();
    let two = Rational::from(2);
    let mut rows = ad_e.to_rows();
    for (i, mut row) in ad_h.to_rows().into_iter().enumerate() {
        row[i] += &two;
        rows.push(row);
    }
    let stacked = RationalMatrix::from_rows(rows)?;
    let mut rhs = h.clone();
    rhs.extend(std::iter::repeat_n(Rational::zero(), k));
    stacked.solve(&rhs).ok_or_else(|| Error::NoSolution("no f with [e,f] = h and [h,f] = −2f".into()))
}

/// Jacobson–Morozov completion of a nonzero nilpotent `e ∈ alg`.
pub fn sl2_complete(alg: &MatrixLieAlgebra, e: &RationalMatrix) -> Result<Sl2Triple> {
    let ec = check_nilpotent_member(alg, e)?;
    let ad_e = alg.ad_matrix(e)?;
    // h = [e, z] with [e, [e, z]] = −2e, so [h, e] = 2e.
    let target: Vector = ec.iter().map(|x| x * &Rational::from(-2)).collect();
    let z = ad_e
        .mul(&ad_e)
        .solve(&target)
        .ok_or_else(|| Error::NoSolution("e has no sl2 completion inside the algebra".into()))?;
    let h = ad_e.mul_vec(&z);
    let f = solve_f(alg, &ad_e, &h)?;
    let triple = Sl2Triple { e: ec, h, f };
    triple.certify(alg)?;
    Ok(triple)
}

/// Completion with a prescribed neutral element `h`.
pub fn sl2_complete_with_h(alg: &MatrixLieAlgebra, e: &RationalMatrix, h: &RationalMatrix) -> Result<Sl2Triple> {
    let ec = check_nilpotent_member(alg, e)?;
    let hc = alg.coords(h).map_err(|_| Error::Precondition("h is not in the algebra".into()))?;
    let ad_e = alg.ad_matrix(e)?;
    let f = solve_f(alg, &ad_e, &hc)?;
    let triple = Sl2Triple { e: ec, h: hc, f };
    triple.certify(alg)?;
    Ok(triple)
}

/// A one-parameter subgroup certifying that `v` lies in the nullcone:
/// `generator` acts diagonally and every nonzero coordinate of `v` has
/// positive weight, so `exp(−t·generator)·v → 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilpotencyCertificate {
    pub generator: Vector,
}

impl NilpotencyCertificate {
    pub fn verify(&self, rep: &Representation, v: &[Rational]) -> Result<()> {
        if self.generator.len() != rep.algebra().dim() || v.len() != rep.dim() {
            return Err(Error::Shape("certificate does not match the representation".into()));
        }
        let a = rep.act_matrix(&self.generator);
        if !a.is_diagonal() {
            return Err(Error::Precondition("certificate generator is not diagonal".into()));
        }
        match v.iter().enumerate().find(|(i, x)| !x.is_zero() && (a.get(*i, *i).is_negative() || a.get(*i, *i).is_zero())) {
            Some((i, _)) => Err(Error::Precondition(format!("coordinate {i} has non-positive weight"))),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_module_and_casimir() {
        assert_eq!(sl2_irrep(1).action(), sl2().basis());
        for d in 0..=4 {
            let r = sl2_irrep(d);
            let [e, h, f] = [&r.action()[0], &r.action()[1], &r.action()[2]];
            let half = Rational::new(1, 2);
            let cas = e.mul(f).add(&f.mul(e)).add(&h.mul(h).scale(&half));
            let expect = Rational::new((d * (d + 2)) as i64, 2);
            assert_eq!(cas, RationalMatrix::identity(d + 1).scale(&expect));
        }
    }

    #[test]
    fn standard_triple() {
        let g = sl2();
        let t = sl2_complete(&g, &g.basis()[0]).unwrap();
        let [_, h, f] = t.matrices(&g);
        assert_eq!(h, RationalMatrix::from_i64(&[&[1, 0], &[0, -1]]));
        assert_eq!(f, RationalMatrix::unit(2, 1, 0));
        assert!(sl2_complete(&g, &RationalMatrix::zeros(2, 2)).is_err());
    }
}

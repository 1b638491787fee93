//! `ad h` gradings, heights, gluing modulo 4 and the quantity `δ`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::reps::ClassicalNilpotent;
use crate::error::{Error, Result};
use crate::exactlinalg::{Rational, RationalMatrix, Vector};
use crate::liealg::{bracket_representation, index, index_escalated, IndexConfig, IndexReport, MatrixLieAlgebra, MatrixSpace, Mode};
use crate::pairs::{ClassicalType, Family, SymmetricPair};

/// `g = ⊕ g(i)` with `g(i) = {x : [h,x] = ix}`; levels hold coordinate
/// vectors over the algebra basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdGrading {
    pub h: RationalMatrix,
    pub levels: BTreeMap<i64, Vec<Vector>>,
}

impl AdGrading {
    pub fn dim(&self, i: i64) -> usize {
        self.levels.get(&i).map_or(0, Vec::len)
    }

    pub fn is_even(&self) -> bool {
        self.levels.keys().all(|i| i % 2 == 0)
    }

    /// The level as matrices.
    pub fn level_basis(&self, alg: &MatrixLieAlgebra, i: i64) -> Vec<RationalMatrix> {
        self.levels.get(&i).map_or_else(Vec::new, |vs| vs.iter().map(|c| alg.element(c)).collect())
    }
}

/// Eigenspace decomposition of `ad h`; fails unless `ad h` is diagonalizable
/// with integer eigenvalues.
pub fn ad_grading(alg: &MatrixLieAlgebra, h: &RationalMatrix) -> Result<AdGrading> {
    let ad = alg.ad_matrix(h)?;
    let k = alg.dim();
    // Gershgorin: every eigenvalue is bounded by the largest absolute row sum.
    let bound = (0..k)
        .map(|i| ad.row(i).iter().map(Rational::abs).sum::<Rational>())
        .max()
        .unwrap_or_else(Rational::zero);
    let b = Rational::from(bound.numer() / bound.denom())
        .to_i64()
        .ok_or_else(|| Error::Unsupported("ad h has huge entries".into()))?;
    let mut levels = BTreeMap::new();
    let mut total = 0;
    for lambda in -b..=b {
        let mut shifted = ad.clone();
        for i in 0..k {
            let x = shifted.get(i, i) - &Rational::from(lambda);
            shifted.set(i, i, x);
        }
        let ker = shifted.kernel_basis();
        if !ker.is_empty() {
            total += ker.len();
            levels.insert(lambda, ker);
        }
    }
    if total != k {
        return Err(Error::Precondition("ad h is not diagonalizable with integer eigenvalues".into()));
    }
    Ok(AdGrading { h: h.clone(), levels })
}

/// Minimal `N` with `(ad e)^{N+1} = 0`.
pub fn height(alg: &MatrixLieAlgebra, e: &RationalMatrix) -> Result<usize> {
    let ad = alg.ad_matrix(e)?;
    let mut p = ad.clone();
    let mut n = 0;
    while !p.is_zero() {
        p = p.mul(&ad);
        n += 1;
        if n > 2 * alg.ambient() + 2 {
            return Err(Error::Precondition("ad e is not nilpotent".into()));
        }
    }
    Ok(n)
}

fn check_even_height4(x: &ClassicalNilpotent, grading: &AdGrading) -> Result<()> {
    if !grading.is_even() {
        return Err(Error::Precondition(format!("{} is not even", x.partition)));
    }
    let ht = height(&x.algebra, &x.e)?;
    if ht != 4 {
        return Err(Error::Precondition(format!("{} has height {ht}, not 4", x.partition)));
    }
    Ok(())
}

/// The symmetric pair `g₀ = ⊕ g(4i)`, `g₁ = ⊕ g(4i+2)`, realized as `Ad D`
/// with `D = diag((−1)^⌊h_k/2⌋)` on the defining module.
pub fn glue_mod4(x: &ClassicalNilpotent) -> Result<SymmetricPair> {
    let grading = ad_grading(&x.algebra, &x.h)?;
    check_even_height4(x, &grading)?;
    glue_with(x, &grading)
}

fn glue_with(x: &ClassicalNilpotent, grading: &AdGrading) -> Result<SymmetricPair> {
    let n = x.h.rows();
    let hs: Vec<i64> = (0..n)
        .map(|i| x.h.get(i, i).to_i64().ok_or_else(|| Error::Precondition("h has non-integer eigenvalues".into())))
        .collect::<Result<_>>()?;
    if !x.h.is_diagonal() || hs.iter().any(|v| (v - hs[0]).rem_euclid(2) != 0) {
        return Err(Error::Precondition("h must be diagonal with eigenvalues of one parity".into()));
    }
    let signs: Vec<Rational> =
        hs.iter().map(|v| Rational::from(if v.div_euclid(2).rem_euclid(2) == 0 { 1 } else { -1 })).collect();
    let plus = signs.iter().filter(|s| s.is_one()).count();
    let minus = n - plus;
    let d = RationalMatrix::diagonal(&signs);
    let family = match (&x.ty, &x.form) {
        (ClassicalType::Gl, _) => Family::GlGl { p: plus, q: minus },
        (ty, Some(f)) => {
            let j = f.matrix();
            let preserved = d.mul(j).mul(&d) == *j;
            match (ty, preserved) {
                (ClassicalType::So, true) => Family::SoSo { p: plus, q: minus },
                (ClassicalType::So, false) => Family::SoGl { n: n / 2 },
                (_, true) => Family::SpSp { p: plus / 2, q: minus / 2 },
                (_, false) => Family::SpGl { n: n / 2 },
            }
        }
        _ => return Err(Error::Inconsistent("so/sp nilpotent without a form".into())),
    };
    let pair = SymmetricPair::inner(family, x.form.clone(), d)?;
    if !pair.g1().contains(&x.e) {
        return Err(Error::SelfCheck("e is not in g1 of the glued pair".into()));
    }
    let dim0: usize = grading.levels.iter().filter(|(i, _)| i.rem_euclid(4) == 0).map(|(_, v)| v.len()).sum();
    if dim0 != pair.g0().dim() {
        return Err(Error::SelfCheck("g0 differs from the sum of the levels 4i".into()));
    }
    Ok(pair)
}

/// Kernel of `ad e` on the span of `basis`.
fn centralizer_in(e: &RationalMatrix, basis: &[RationalMatrix], n: usize) -> Vec<RationalMatrix> {
    let cols: Vec<Vector> = basis.iter().map(|b| e.commutator(b).into_flat()).collect();
    RationalMatrix::from_columns(n * n, &cols)
        .kernel_basis()
        .iter()
        .map(|c| {
            let mut m = RationalMatrix::zeros(n, n);
            for (ci, b) in c.iter().zip(basis) {
                if !ci.is_zero() {
                    m.add_scaled(ci, b);
                }
            }
            m
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaRecord {
    pub family: Family,
    pub partition: String,
    pub dim_g0: usize,
    pub dim_g1: usize,
    pub dim_g4: usize,
    /// Generic stabilizer dimension of `(G₀ : g₁)`.
    pub dim_s: usize,
    /// Generic stabilizer dimension of `(G(0)_e : g(2)_e)`.
    pub dim_s_e: usize,
    /// `dim g(4) + dim S^e − dim S`.
    pub delta: i64,
    /// `ind(g_{e,0}, g_{e,1})`, computed directly.
    pub ind_centralizer: IndexReport,
    /// `ind(g₀, g₁)`.
    pub rank: usize,
    /// `ind(g_{e,0}, g_{e,1}) − ind(g₀, g₁)`.
    pub delta_direct: i64,
    /// Both routes rest on exact ranks.
    pub exact: bool,
}

/// `δ` by the dimension formula and by the direct index difference; a
/// disagreement between exact values is an error.
pub fn delta(x: &ClassicalNilpotent, cfg: &IndexConfig) -> Result<DeltaRecord> {
    let grading = ad_grading(&x.algebra, &x.h)?;
    check_even_height4(x, &grading)?;
    let pair = glue_with(x, &grading)?;
    let n = x.algebra.ambient();
    let rank = pair.symmetric_rank(&cfg.fork(10))?;
    let dim_g0 = pair.g0().dim();
    let dim_g1 = pair.g1().dim();
    let dim_s = dim_g0 + rank.table - dim_g1;

    let g0e = centralizer_in(&x.e, &grading.level_basis(&x.algebra, 0), n);
    let g2e = centralizer_in(&x.e, &grading.level_basis(&x.algebra, 2), n);
    let dim_g4 = grading.dim(4);
    let acting = MatrixLieAlgebra::new(format!("g(0)_e {}", x.partition), n, g0e)?;
    let module = MatrixSpace::new(n, g2e)?;
    let srep = bracket_representation(&acting, &module)?.dual();
    let escalate = |r: &crate::liealg::Representation, c: &IndexConfig| -> Result<IndexReport> {
        let first = index(r, c)?;
        if first.is_exact() || cfg.mode != Mode::Auto {
            Ok(first)
        } else {
            index_escalated(r, c)
        }
    };
    let s_report = escalate(&srep, &cfg.fork(11))?;
    let dim_s_e = acting.dim() - s_report.max_orbit_dim;
    let delta = dim_g4 as i64 + dim_s_e as i64 - dim_s as i64;

    let gc = pair.graded_centralizer(&x.e)?;
    let ind_centralizer = escalate(&gc.rep, &cfg.fork(12))?;
    let delta_direct = ind_centralizer.index as i64 - rank.table as i64;
    let exact = s_report.is_exact() && ind_centralizer.is_exact();
    if exact && delta != delta_direct {
        return Err(Error::SelfCheck(format!(
            "δ formula gives {delta} but the index difference is {delta_direct}"
        )));
    }
    if ind_centralizer.index < rank.table {
        return Err(Error::SelfCheck("index of the centralizer module below the rank".into()));
    }
    Ok(DeltaRecord {
        family: pair.family(),
        partition: x.partition.to_string(),
        dim_g0,
        dim_g1,
        dim_g4,
        dim_s,
        dim_s_e,
        delta,
        ind_centralizer,
        rank: rank.table,
        delta_direct,
        exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::sl2_complete_with_h;
    use crate::orbits::{nilpotent_in_classical, Partition};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn regular_sl2_levels() {
        let alg = crate::liealg::sl2();
        let h = RationalMatrix::from_i64(&[&[1, 0], &[0, -1]]);
        let g = ad_grading(&alg, &h).unwrap();
        assert_eq!((g.dim(-2), g.dim(0), g.dim(2)), (1, 1, 1));
    }

    #[test]
    fn gl7_331_grading_table() {
        let x = nilpotent_in_classical(ClassicalType::Gl, &p("3,3,1")).unwrap();
        sl2_complete_with_h(&x.algebra, &x.e, &x.h).unwrap();
        let g = ad_grading(&x.algebra, &x.h).unwrap();
        assert!(g.is_even());
        assert_eq!((g.dim(0), g.dim(2), g.dim(4)), (17, 12, 4));
        assert_eq!(height(&x.algebra, &x.e).unwrap(), 4);
        let pair = glue_mod4(&x).unwrap();
        assert_eq!(pair.family(), Family::GlGl { p: 3, q: 4 });
    }

    #[test]
    fn minimal_nilpotent_has_height_two() {
        let x = nilpotent_in_classical(ClassicalType::Gl, &p("2,1,1")).unwrap();
        assert_eq!(height(&x.algebra, &x.e).unwrap(), 2);
        assert!(glue_mod4(&x).is_err());
    }
}

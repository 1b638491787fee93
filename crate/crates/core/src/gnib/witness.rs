//! Explicit covectors `α ∈ g_{e,1}*` whose stabilizer has dimension equal to
//! the rank, in the coordinates of an orbit representative.
//!
//! With `w_i` the first vector of block `i`, a map `φ ∈ g_e` has coefficients
//! `c_i^{j,s}(φ)`, the coefficient of `e^s w_j` in `φ(w_i)`.

use serde::{Deserialize, Serialize};

use crate::exactlinalg::{Rational, RationalMatrix, Vector};
use crate::orbits::OrbitRep;
use crate::pairs::{Family, GradedCentralizer};
use crate::Result;

/// One term `a · c_i^{j,d}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessTerm {
    pub weight: i64,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub terms: Vec<WitnessTerm>,
    pub vanishes_on_ge0: bool,
    pub dim_stab_ge0: usize,
    pub dim_stab_ge1: usize,
    /// `dim (g_{e,1})_α = rank` and `α(g_{e,0}) = 0`.
    pub confirmed: bool,
}

fn offsets(rep: &OrbitRep) -> Vec<usize> {
    rep.blocks
        .iter()
        .scan(0, |acc, b| {
            let o = *acc;
            *acc += b.size;
            Some(o)
        })
        .collect()
}

/// The covector of the affirmative families; `None` for other families.
pub fn witness_terms(rep: &OrbitRep) -> Option<Vec<WitnessTerm>> {
    let b = &rep.blocks;
    let classes = {
        // a_i = a_{i*}, numbered 1, 2, … in block order.
        let mut w = vec![0i64; b.len()];
        let mut next = 0;
        for i in 0..b.len() {
            if w[i] == 0 {
                next += 1;
                w[i] = next;
                w[b[i].partner] = next;
            }
        }
        w
    };
    let terms = match rep.family {
        Family::GlSo { .. } => {
            (0..b.len()).map(|i| WitnessTerm { weight: i as i64 + 1, source: i, target: i }).collect()
        }
        Family::GlSp { .. } => (0..b.len()).map(|i| WitnessTerm { weight: classes[i], source: i, target: i }).collect(),
        Family::SpGl { .. } => (0..b.len())
            .map(|i| WitnessTerm { weight: classes[i], source: i, target: b[i].partner })
            .collect(),
        _ => return None,
    };
    Some(terms)
}

fn evaluate(terms: &[WitnessTerm], off: &[usize], rep: &OrbitRep, phi: &RationalMatrix) -> Rational {
    let mut acc = Rational::zero();
    for t in terms {
        let d = rep.blocks[t.target].size - 1;
        acc += &(Rational::from(t.weight) * phi.get(off[t.target] + d, off[t.source]));
    }
    acc
}

/// Evaluates the covector and the dimensions of both stabilizer parts.
/// Returns `None` when the family has no explicit covector.
pub fn witness(rep: &OrbitRep, gc: &GradedCentralizer, rank: usize) -> Result<Option<Witness>> {
    let Some(terms) = witness_terms(rep) else { return Ok(None) };
    let off = offsets(rep);
    let alpha: Vector = gc.ge1.basis().iter().map(|y| evaluate(&terms, &off, rep, y)).collect();
    let vanishes_on_ge0 = gc.ge0.basis().iter().all(|x| evaluate(&terms, &off, rep, x).is_zero());
    // B[z][y] = α([y, z]) for z ∈ g_{e,0}, y ∈ g_{e,1}.
    let (k0, k1) = (gc.ge0.dim(), gc.ge1.dim());
    let mut b = RationalMatrix::zeros(k0, k1);
    for (zi, z) in gc.ge0.basis().iter().enumerate() {
        for (yi, y) in gc.ge1.basis().iter().enumerate() {
            let c = gc.ge1.coords(&y.commutator(z))?;
            let v: Rational = c.iter().zip(&alpha).fold(Rational::zero(), |s, (a, b)| s + a * b);
            b.set(zi, yi, v);
        }
    }
    let r = b.rank();
    let (dim_stab_ge0, dim_stab_ge1) = (k0 - r, k1 - r);
    Ok(Some(Witness {
        terms,
        vanishes_on_ge0,
        dim_stab_ge0,
        dim_stab_ge1,
        confirmed: vanishes_on_ge0 && dim_stab_ge1 == rank,
    }))
}

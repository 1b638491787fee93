//! The index `ind(q, V) = dim V − max_{ξ ∈ V*} dim q·ξ` and the Vinberg
//! inequality `ind(q, V*) ≤ ind(q_v, (V/q·v)*)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::algebra::MatrixLieAlgebra;
use super::rep::Representation;
use crate::error::{Error, Result};
use crate::exactlinalg::rank::{derive_seed, symbolic_admissible};
use crate::exactlinalg::{generic_rank_with, LinearForm, PolyMatrix, Rational, RankCertificate, RankMode, RankOptions};

/// How ranks are certified. `Auto` samples first and escalates to exact
/// elimination only where a comparison stays undecided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[serde(rename = "montecarlo")]
    MonteCarlo,
    Symbolic,
    #[default]
    Auto,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::MonteCarlo => "montecarlo",
            Mode::Symbolic => "symbolic",
            Mode::Auto => "auto",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Mode::Auto),
            other => other.parse::<RankMode>().map(|m| match m {
                RankMode::Symbolic => Mode::Symbolic,
                RankMode::MonteCarlo => Mode::MonteCarlo,
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexConfig {
    pub mode: Mode,
    pub seed: u64,
    pub rank: RankOptions,
}

impl Default for IndexConfig {
    fn default() -> Self {
        IndexConfig { mode: Mode::Auto, seed: 0, rank: RankOptions::default() }
    }
}

impl IndexConfig {
    pub fn with_mode(mode: Mode, seed: u64) -> Self {
        IndexConfig { mode, seed, ..Self::default() }
    }

    /// Same settings with an independent seed for sub-computation `tag`.
    pub fn fork(&self, tag: u64) -> Self {
        IndexConfig { seed: derive_seed(self.seed, tag), ..*self }
    }

    fn first_mode(&self) -> RankMode {
        match self.mode {
            Mode::Symbolic => RankMode::Symbolic,
            Mode::MonteCarlo | Mode::Auto => RankMode::MonteCarlo,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexReport {
    pub module_dim: usize,
    pub algebra_dim: usize,
    /// The certified (sampled or exact) maximal orbit dimension in `V*`.
    pub max_orbit_dim: usize,
    /// `module_dim − max_orbit_dim`: exact, or an upper bound for a sampled
    /// certificate with nonzero failure bound.
    pub index: usize,
    pub lower_bound: usize,
    pub certificate: RankCertificate,
}

impl IndexReport {
    pub fn is_exact(&self) -> bool {
        self.lower_bound == self.index
    }
}

/// `M(ξ)`: column `j` is `ρ*(b_j) ξ` at a symbolic covector `ξ ∈ V*`.
pub fn dual_action_matrix(rep: &Representation) -> PolyMatrix {
    let n = rep.dim();
    let k = rep.algebra().dim();
    let mut cols: Vec<Vec<Vec<(usize, Rational)>>> = vec![vec![Vec::new(); n]; k];
    for (j, a) in rep.action().iter().enumerate() {
        for l in 0..n {
            for (i, x) in a.row(l).iter().enumerate() {
                if !x.is_zero() {
                    // ρ*(b_j)_{i l} = −ρ(b_j)_{l i}
                    cols[j][i].push((l, -x));
                }
            }
        }
    }
    let mut entries = Vec::with_capacity(n * k);
    for i in 0..n {
        for col in &cols {
            entries.push(LinearForm::from_terms(Rational::zero(), col[i].clone()));
        }
    }
    let vars = (0..n).map(|l| format!("xi{l}")).collect();
    PolyMatrix::new(n, k, vars, entries).expect("variables are in range")
}

/// Index with a fixed rank mode.
pub fn index_with(rep: &Representation, mode: RankMode, seed: u64, opts: &RankOptions) -> Result<IndexReport> {
    let m = dual_action_matrix(rep);
    let certificate = generic_rank_with(&m, mode, seed, opts)?;
    let n = rep.dim();
    let index = n - certificate.value;
    let lower_bound = if certificate.is_exact() { index } else { n - m.structural_rank_bound() };
    Ok(IndexReport {
        module_dim: n,
        algebra_dim: rep.algebra().dim(),
        max_orbit_dim: certificate.value,
        index,
        lower_bound,
        certificate,
    })
}

/// `ind(q, V)`. Monte-Carlo certificates give an upper bound on the index.
pub fn index(rep: &Representation, cfg: &IndexConfig) -> Result<IndexReport> {
    index_with(rep, cfg.first_mode(), cfg.seed, &cfg.rank)
}

/// Exact index when the size guard allows, otherwise the sampled report.
pub fn index_escalated(rep: &Representation, cfg: &IndexConfig) -> Result<IndexReport> {
    let m = dual_action_matrix(rep);
    if symbolic_admissible(&m, &cfg.rank).is_ok() {
        index_with(rep, RankMode::Symbolic, cfg.seed, &cfg.rank)
    } else {
        index_with(rep, RankMode::MonteCarlo, cfg.seed, &cfg.rank)
    }
}

/// `ind q`, measured on coadjoint orbits.
pub fn index_of_algebra(alg: &MatrixLieAlgebra, cfg: &IndexConfig) -> Result<IndexReport> {
    index(&Representation::adjoint(alg.clone())?, cfg)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Comparison {
    Equal,
    Unequal,
    Inconclusive,
}

/// Compares `lhs ≤ rhs` style index bounds where the inequality is known.
pub fn compare(lhs: &IndexReport, rhs: &IndexReport) -> Comparison {
    if rhs.index <= lhs.lower_bound {
        Comparison::Equal
    } else if lhs.index < rhs.lower_bound {
        Comparison::Unequal
    } else {
        Comparison::Inconclusive
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VinbergCheck {
    pub lhs: IndexReport,
    pub rhs: IndexReport,
    pub status: Comparison,
}

/// Both sides of `ind(q, V*) ≤ ind(q_v, (V/q·v)*)`.
pub fn check_vinberg(rep: &Representation, v: &[Rational], cfg: &IndexConfig) -> Result<VinbergCheck> {
    let lhs_rep = rep.dual();
    let rhs_rep = rep.quotient_module(v)?.dual();
    let (c1, c2) = (cfg.fork(1), cfg.fork(2));
    let mut lhs = index(&lhs_rep, &c1)?;
    let mut rhs = index(&rhs_rep, &c2)?;
    let mut status = compare(&lhs, &rhs);
    if status == Comparison::Inconclusive && cfg.mode == Mode::Auto {
        lhs = index_escalated(&lhs_rep, &c1)?;
        rhs = index_escalated(&rhs_rep, &c2)?;
        status = compare(&lhs, &rhs);
    }
    if lhs.lower_bound > rhs.index {
        return Err(Error::SelfCheck(format!(
            "Vinberg inequality violated: lhs ≥ {} > rhs ≤ {}",
            lhs.lower_bound, rhs.index
        )));
    }
    Ok(VinbergCheck { lhs, rhs, status })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::RationalMatrix;

    fn gl(n: usize) -> MatrixLieAlgebra {
        let basis = (0..n).flat_map(|i| (0..n).map(move |j| RationalMatrix::unit(n, i, j))).collect();
        MatrixLieAlgebra::new(format!("gl{n}"), n, basis).unwrap()
    }

    #[test]
    fn trivial_and_standard() {
        let cfg = IndexConfig::with_mode(Mode::Symbolic, 0);
        let t = Representation::trivial(gl(2), 1);
        assert_eq!(index(&t, &cfg).unwrap().index, 1);
        let s = Representation::standard(gl(3));
        assert_eq!(index(&s, &cfg).unwrap().index, 0);
    }

    #[test]
    fn gl_n_has_index_n() {
        for n in 1..=3 {
            let sym = index_of_algebra(&gl(n), &IndexConfig::with_mode(Mode::Symbolic, 0)).unwrap();
            let mc = index_of_algebra(&gl(n), &IndexConfig::with_mode(Mode::MonteCarlo, 5)).unwrap();
            assert_eq!(sym.index, n);
            assert_eq!(mc.index, n);
        }
    }

    #[test]
    fn vinberg_at_zero_and_generic() {
        let r = Representation::standard(gl(2)).m_copies(2);
        let cfg = IndexConfig::default();
        let zero = vec![Rational::zero(); 4];
        let c = check_vinberg(&r, &zero, &cfg).unwrap();
        assert_eq!(c.status, Comparison::Equal);
        let v: Vec<Rational> = [1, 0, 0, 1].iter().map(|&x| Rational::from(x)).collect();
        let c = check_vinberg(&r, &v, &cfg).unwrap();
        assert_eq!(c.status, Comparison::Equal);
        assert_eq!(c.lhs.index, 0);
    }
}

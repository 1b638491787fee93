//! Good nilpotent index behaviour of isotropy representations.
//!
//! At a nilpotent `e ∈ g₁` the Vinberg inequality reads
//! `rk(G/G₀) ≤ ind(g_{e,0}, g_{e,1})`; a pair has GNIB when it is an
//! equality at every orbit.

pub mod report;
pub mod reproduce;
pub mod witness;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlinalg::RationalMatrix;
use crate::liealg::{index, index_escalated, index_of_algebra, IndexConfig, IndexReport, MatrixLieAlgebra, Mode};
use crate::orbits::{delta, enumerate_orbit_reps, nilpotent_in_classical, DeltaRecord, OrbitRep, Partition};
use crate::pairs::{ClassicalType, Family, SymmetricPair};

pub use report::{render, Format};
pub use reproduce::{expected_bundle, reproduce, reproduce_all, Bundle, Expected, Options, Reproduction, Suite, REPRODUCTION_IDS};
pub use witness::{witness, witness_terms, Witness, WitnessTerm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    EqualCertified,
    UnequalCertified,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrbitVerdict {
    pub orbit: String,
    pub partition: String,
    pub rank: usize,
    pub dim_ge0: usize,
    pub dim_ge1: usize,
    /// `ind(g_{e,0}, g_{e,1})`: certified upper bound.
    pub index: usize,
    /// Best proven lower bound, at least the rank.
    pub lower_bound: usize,
    pub status: Status,
    pub report: IndexReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip)]
    pub ms: u128,
}

fn status_of(report: &IndexReport, rank: usize) -> Status {
    if report.index == rank {
        Status::EqualCertified
    } else if report.lower_bound > rank {
        Status::UnequalCertified
    } else {
        Status::Inconclusive
    }
}

/// Verdict at an arbitrary nilpotent `e ∈ g₁`.
pub fn verdict_at(
    pair: &SymmetricPair,
    e: &RationalMatrix,
    orbit: &str,
    partition: &str,
    cfg: &IndexConfig,
) -> Result<(OrbitVerdict, crate::pairs::GradedCentralizer)> {
    let start = Instant::now();
    let rank = pair.family().rank_table();
    let gc = pair.graded_centralizer(e)?;
    let mut report = index(&gc.rep, cfg)?;
    if cfg.mode == Mode::Auto && status_of(&report, rank) != Status::EqualCertified && !report.is_exact() {
        report = index_escalated(&gc.rep, cfg)?;
    }
    if report.index < rank {
        return Err(Error::SelfCheck(format!(
            "{} at {orbit}: index {} below the rank {rank}",
            pair.family(),
            report.index
        )));
    }
    let status = status_of(&report, rank);
    Ok((
        OrbitVerdict {
            orbit: orbit.to_string(),
            partition: partition.to_string(),
            rank,
            dim_ge0: gc.ge0.dim(),
            dim_ge1: gc.ge1.dim(),
            index: report.index,
            lower_bound: report.lower_bound.max(rank),
            status,
            report,
            witness: None,
            ms: start.elapsed().as_millis(),
        },
        gc,
    ))
}

/// Verdict at an orbit representative, in the coordinates of its own pair.
pub fn gnib_at(rep: &OrbitRep, cfg: &IndexConfig) -> Result<OrbitVerdict> {
    let start = Instant::now();
    let pair = rep.pair()?;
    let (mut v, gc) = verdict_at(&pair, &rep.e, &rep.id, &rep.partition.to_string(), cfg)?;
    v.witness = witness(rep, &gc, v.rank)?;
    v.ms = start.elapsed().as_millis();
    Ok(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Overall {
    #[serde(rename = "GNIB")]
    Gnib,
    #[serde(rename = "no-GNIB")]
    NoGnib,
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

impl std::fmt::Display for Overall {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Overall::Gnib => "GNIB",
            Overall::NoGnib => "no-GNIB",
            Overall::Inconclusive => "inconclusive",
        })
    }
}

impl std::str::FromStr for Overall {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gnib" => Ok(Overall::Gnib),
            "no-gnib" | "nognib" => Ok(Overall::NoGnib),
            "inconclusive" => Ok(Overall::Inconclusive),
            _ => Err(Error::Parse(format!("unknown verdict {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairReport {
    pub pair: String,
    #[serde(flatten)]
    pub family: Family,
    pub rank: usize,
    pub rank_certificate: IndexReport,
    pub mode: Mode,
    pub seed: u64,
    pub orbits: Vec<OrbitVerdict>,
    pub overall: Overall,
    /// GNIB of an isotropy representation implies GIB.
    pub gib: bool,
}

impl PairReport {
    pub fn aggregate(orbits: &[OrbitVerdict]) -> Overall {
        if orbits.iter().any(|v| v.status == Status::UnequalCertified) {
            Overall::NoGnib
        } else if orbits.iter().all(|v| v.status == Status::EqualCertified) {
            Overall::Gnib
        } else {
            Overall::Inconclusive
        }
    }
}

/// 64-bit FNV-1a, used to give each orbit a seed independent of sweep order.
pub fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3))
}

/// Sweeps every nilpotent orbit of `g₀` in `g₁`.
pub fn gnib_check(family: Family, cfg: &IndexConfig) -> Result<PairReport> {
    family.validate()?;
    let pair = SymmetricPair::standard(family)?;
    let rank = pair.symmetric_rank(&cfg.fork(0))?;
    let reps = enumerate_orbit_reps(family)?;
    let mut orbits = reps.par_iter().map(|r| gnib_at(r, &cfg.fork(fnv1a(&r.id)))).collect::<Result<Vec<_>>>()?;
    orbits.sort_by(|a, b| a.orbit.cmp(&b.orbit));
    let overall = PairReport::aggregate(&orbits);
    Ok(PairReport {
        pair: family.to_string(),
        family,
        rank: rank.table,
        rank_certificate: rank.computed,
        mode: cfg.mode,
        seed: cfg.seed,
        orbits,
        overall,
        gib: overall == Overall::Gnib,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DeltaCertificate {
    pub record: DeltaRecord,
    pub pair: String,
    /// `δ > 0` with exact certificates: the glued pair has no GNIB.
    pub no_gnib: bool,
}

/// `δ` for an even height-4 nilpotent and the no-GNIB claim it supports.
pub fn delta_certificate(ty: ClassicalType, partition: &Partition, cfg: &IndexConfig) -> Result<DeltaCertificate> {
    let x = nilpotent_in_classical(ty, partition)?;
    let record = delta(&x, cfg)?;
    Ok(DeltaCertificate {
        pair: record.family.to_string(),
        no_gnib: record.delta > 0 && record.exact,
        record,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharbonnelRecord {
    #[serde(rename = "type")]
    pub ty: ClassicalType,
    pub partition: String,
    pub dim_centralizer: usize,
    pub index: IndexReport,
    pub rank: usize,
    pub equal: bool,
}

/// Rank of `gl_n`, `so_n`, `sp_n` (for `sp`, `n` is the matrix size).
pub fn classical_rank(ty: ClassicalType, n: usize) -> usize {
    match ty {
        ClassicalType::Gl => n,
        ClassicalType::So | ClassicalType::Sp => n / 2,
    }
}

/// `ind g_e` against `rk g`.
pub fn charbonnel_check(ty: ClassicalType, partition: &Partition, cfg: &IndexConfig) -> Result<CharbonnelRecord> {
    let x = nilpotent_in_classical(ty, partition)?;
    let ad = x.algebra.ad_matrix(&x.e)?;
    let ker = ad.kernel_basis();
    let ge: MatrixLieAlgebra = x.algebra.subalgebra(format!("{ty}_e {partition}"), &ker)?;
    let mut report = index_of_algebra(&ge, cfg)?;
    let rank = classical_rank(ty, partition.total());
    if cfg.mode == Mode::Auto && !report.is_exact() && report.index != rank {
        report = index_escalated(&crate::liealg::Representation::adjoint(ge.clone())?, cfg)?;
    }
    Ok(CharbonnelRecord {
        ty,
        partition: partition.to_string(),
        dim_centralizer: ge.dim(),
        equal: report.index == rank && report.lower_bound <= rank,
        index: report,
        rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> IndexConfig {
        IndexConfig::default()
    }

    #[test]
    fn gl5_so5_every_orbit_equal() {
        let r = gnib_check(Family::GlSo { n: 5 }, &cfg()).unwrap();
        assert_eq!(r.orbits.len(), 7);
        assert_eq!(r.overall, Overall::Gnib);
        for v in &r.orbits {
            assert_eq!(v.index, 5, "{}", v.orbit);
            let w = v.witness.as_ref().unwrap();
            assert!(w.confirmed, "{}: {w:?}", v.orbit);
        }
    }

    #[test]
    fn sp6_gl3_witnesses() {
        let r = gnib_check(Family::SpGl { n: 3 }, &cfg()).unwrap();
        assert_eq!(r.overall, Overall::Gnib);
        for v in &r.orbits {
            let w = v.witness.as_ref().unwrap();
            assert!(w.confirmed, "{}: {w:?}", v.orbit);
        }
    }

    #[test]
    fn gl4_sp4_witnesses() {
        let r = gnib_check(Family::GlSp { n: 2 }, &cfg()).unwrap();
        assert_eq!(r.overall, Overall::Gnib);
        assert!(r.orbits.iter().all(|v| v.witness.as_ref().unwrap().confirmed));
    }

    #[test]
    fn gl7_gl3_gl4_bad_orbit() {
        let fam = Family::GlGl { p: 3, q: 4 };
        let reps = enumerate_orbit_reps(fam).unwrap();
        let rep = reps.iter().find(|r| r.id == "{bab,bab,a}").unwrap();
        let v = gnib_at(rep, &IndexConfig::with_mode(Mode::Symbolic, 0)).unwrap();
        assert_eq!((v.dim_ge0, v.dim_ge1), (9, 8));
        assert!(v.lower_bound >= 4);
        assert_eq!(v.status, Status::UnequalCertified);
    }

    #[test]
    fn charbonnel_small() {
        let c = charbonnel_check(ClassicalType::Gl, &"2,2".parse().unwrap(), &cfg()).unwrap();
        assert!(c.equal);
        assert_eq!(c.rank, 4);
        let c = charbonnel_check(ClassicalType::So, &"3,3,1".parse().unwrap(), &cfg()).unwrap();
        assert_eq!((c.index.index, c.rank), (3, 3));
    }
}

//! Generic rank of polynomial matrices: exact symbolic elimination, or a
//! seeded Monte-Carlo lower bound with a Schwartz–Zippel failure bound.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::matrix::bareiss_rank;
use super::poly::{LinearForm, Poly, PolyMatrix, MAX_PACKED_VARS};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Smallest admissible Monte-Carlo sample box radius.
pub const MIN_BOX: u64 = 1_000_000;
pub const DEFAULT_TRIALS: u32 = 3;
pub const DEFAULT_BOX: u64 = 1_000_000_000;
/// Matrices beyond this dimension with more than [`GUARD_VARS`] indeterminates
/// are refused by symbolic mode unless forced.
pub const DEFAULT_MAX_SYMBOLIC_DIM: usize = 64;
pub const GUARD_VARS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RankMode {
    Symbolic,
    #[serde(rename = "montecarlo")]
    MonteCarlo,
}

impl fmt::Display for RankMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RankMode::Symbolic => "symbolic",
            RankMode::MonteCarlo => "montecarlo",
        })
    }
}

impl FromStr for RankMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symbolic" => Ok(RankMode::Symbolic),
            "montecarlo" | "monte-carlo" | "mc" => Ok(RankMode::MonteCarlo),
            other => Err(Error::Parse(format!("unknown rank mode `{other}`"))),
        }
    }
}

/// Tunables for [`generic_rank_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankOptions {
    pub trials: u32,
    pub sample_box: u64,
    pub max_symbolic_dim: usize,
    pub force_symbolic: bool,
}

impl Default for RankOptions {
    fn default() -> Self {
        RankOptions {
            trials: DEFAULT_TRIALS,
            sample_box: DEFAULT_BOX,
            max_symbolic_dim: DEFAULT_MAX_SYMBOLIC_DIM,
            force_symbolic: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCertificate {
    pub value: usize,
    pub mode: RankMode,
    pub trials: u32,
    #[serde(rename = "box")]
    pub sample_box: u64,
    /// Zero for symbolic results and for Monte-Carlo values that meet the
    /// structural upper bound.
    pub failure_bound: Rational,
}

impl RankCertificate {
    /// The value is the exact generic rank (not merely a lower bound).
    pub fn is_exact(&self) -> bool {
        self.failure_bound.is_zero()
    }
}

/// Splitmix64 of `seed` and `tag`: independent, reproducible sub-seeds.
pub fn derive_seed(seed: u64, tag: u64) -> u64 {
    let mut z = seed ^ tag.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(0x6A09_E667_F3BC_C909);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Generic rank with explicit parameters.
pub fn generic_rank(m: &PolyMatrix, mode: RankMode, seed: u64, trials: u32, sample_box: u64) -> Result<RankCertificate> {
    let opts = RankOptions { trials, sample_box, ..RankOptions::default() };
    generic_rank_with(m, mode, seed, &opts)
}

pub fn generic_rank_with(m: &PolyMatrix, mode: RankMode, seed: u64, opts: &RankOptions) -> Result<RankCertificate> {
    match mode {
        RankMode::Symbolic => {
            let value = symbolic_rank(m, opts)?;
            Ok(RankCertificate { value, mode, trials: 0, sample_box: 0, failure_bound: Rational::zero() })
        }
        RankMode::MonteCarlo => monte_carlo_rank(m, seed, opts),
    }
}

/// Whether symbolic mode would accept this matrix under `opts`.
pub fn symbolic_admissible(m: &PolyMatrix, opts: &RankOptions) -> Result<()> {
    let used = used_vars(m).len();
    if used > MAX_PACKED_VARS {
        return Err(Error::SymbolicTooLarge(format!(
            "{used} indeterminates exceed the {MAX_PACKED_VARS}-variable polynomial packing"
        )));
    }
    let big = m.rows() > opts.max_symbolic_dim || m.cols() > opts.max_symbolic_dim;
    if big && used > GUARD_VARS && !opts.force_symbolic {
        return Err(Error::SymbolicTooLarge(format!(
            "{}x{} matrix in {used} indeterminates (limit {} with more than {GUARD_VARS} variables)",
            m.rows(),
            m.cols(),
            opts.max_symbolic_dim
        )));
    }
    if m.rows().min(m.cols()) > 255 {
        return Err(Error::SymbolicTooLarge("minor degrees would overflow exponent packing".into()));
    }
    Ok(())
}

fn used_vars(m: &PolyMatrix) -> Vec<usize> {
    let mut used: Vec<usize> = (0..m.rows())
        .flat_map(|i| (0..m.cols()).flat_map(move |j| m.get(i, j).terms.iter().map(|t| t.0)))
        .collect();
    used.sort_unstable();
    used.dedup();
    used
}

fn monte_carlo_rank(m: &PolyMatrix, seed: u64, opts: &RankOptions) -> Result<RankCertificate> {
    if opts.sample_box < MIN_BOX {
        return Err(Error::BoxTooSmall(opts.sample_box, MIN_BOX));
    }
    if opts.trials == 0 {
        return Err(Error::Precondition("Monte-Carlo rank needs at least one trial".into()));
    }
    let structural = m.structural_rank_bound();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b = opts.sample_box as i64;
    let mut best = 0;
    for _ in 0..opts.trials {
        let point: Vec<BigInt> = (0..m.vars().len()).map(|_| BigInt::from(rng.gen_range(-b..=b))).collect();
        best = best.max(bareiss_rank(m.eval_integer(&point)));
        if best == structural {
            break;
        }
    }
    let failure_bound = if best == structural || m.max_degree() == 0 {
        Rational::zero()
    } else {
        let per_trial = Rational::new(
            BigInt::from(m.rows().min(m.cols()) as u64 * u64::from(m.max_degree())),
            BigInt::from(2) * BigInt::from(opts.sample_box) + BigInt::one(),
        );
        (0..opts.trials).fold(Rational::one(), |acc, _| acc * &per_trial)
    };
    Ok(RankCertificate { value: best, mode: RankMode::MonteCarlo, trials: opts.trials, sample_box: opts.sample_box, failure_bound })
}

fn symbolic_rank(m: &PolyMatrix, opts: &RankOptions) -> Result<usize> {
    symbolic_admissible(m, opts)?;
    // Renumber the indeterminates that actually occur so they fit the packing.
    let used = used_vars(m);
    let mut remap = vec![usize::MAX; m.vars().len()];
    for (k, &v) in used.iter().enumerate() {
        remap[v] = k;
    }
    let entries: Vec<LinearForm> = (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
        .map(|(i, j)| {
            let f = m.get(i, j);
            LinearForm::from_terms(f.constant.clone(), f.terms.iter().map(|(v, c)| (remap[*v], c.clone())).collect())
        })
        .collect();
    let compact = PolyMatrix::with_anonymous_vars(m.rows(), m.cols(), used.len(), entries)?;
    Ok(bareiss_poly_rank(compact.integer_polys()))
}

/// Fraction-free elimination over `ℤ[x]` with full pivoting; the pivot at each
/// step is the nonzero entry with fewest terms (then lowest degree).
pub(crate) fn bareiss_poly_rank(mut a: Vec<Vec<Poly<BigInt>>>) -> usize {
    let m = a.len();
    if m == 0 {
        return 0;
    }
    let n = a[0].len();
    let mut prev = Poly::constant(BigInt::one());
    let mut r = 0;
    while r < m.min(n) {
        let mut best: Option<(usize, u32, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(r) {
            for (j, p) in row.iter().enumerate().skip(r) {
                if p.is_zero() {
                    continue;
                }
                let key = (p.num_terms(), p.degree());
                if best.is_none_or(|(t, d, _, _)| key < (t, d)) {
                    best = Some((key.0, key.1, i, j));
                }
            }
        }
        let Some((_, _, pi, pj)) = best else { break };
        a.swap(r, pi);
        for row in a.iter_mut() {
            row.swap(r, pj);
        }
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = &pivot_row[r];
        let prev_ref = &prev;
        tail.par_iter_mut().for_each(|row| {
            let lead = std::mem::replace(&mut row[r], Poly::zero());
            for j in r + 1..n {
                let mut x = pivot.mul(&row[j]);
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    x = x.sub(&lead.mul(&pivot_row[j]));
                }
                if !x.is_zero() {
                    x = x.div_exact(prev_ref).expect("Bareiss division is exact");
                }
                row[j] = x;
            }
        });
        prev = head[r][r].clone();
        r += 1;
    }
    r
}

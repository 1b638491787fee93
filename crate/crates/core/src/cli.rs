//! The `indexlab` command line.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlinalg::RankOptions;
use crate::gnib::{self, Format, Options, Overall};
use crate::liealg::{index, index_escalated, sl2_irrep, IndexConfig, IndexReport, MatrixLieAlgebra, Mode, Representation};
use crate::orbits::Partition;
use crate::pairs::{borel_gl, gl, sl, so, sp, BilinearForm, ClassicalType, Family, SymmetricPair};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_ERROR: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "indexlab", version, about = "Exact index computations and GNIB checks for classical symmetric pairs")]
pub struct Cli {
    #[command(flatten)]
    pub run: RunArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// montecarlo, symbolic or auto.
    #[arg(long, global = true, default_value = "auto")]
    pub mode: String,
    /// Master seed; falls back to INDEXLAB_SEED, then 0.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Monte-Carlo evaluations per rank.
    #[arg(long, global = true)]
    pub trials: Option<u32>,
    /// Half-width of the integer sample box.
    #[arg(long = "box", global = true)]
    pub sample_box: Option<u64>,
    /// json, md or csv.
    #[arg(long, global = true, default_value = "json")]
    pub format: String,
    /// Largest matrix side for symbolic elimination with many variables.
    #[arg(long, global = true)]
    pub max_symbolic_dim: Option<usize>,
    /// Run symbolic elimination past the size guard.
    #[arg(long, global = true)]
    pub force_symbolic: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// `dim V − max dim q·v` over `v ∈ V` for a named module or a
    /// representation JSON file.
    Index {
        /// e.g. coadjoint:borel-gl4, isotropy:gl5/so5, standard:sp4, sl2-irrep:3.
        spec: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        /// Print the representation as JSON instead of its index.
        #[arg(long)]
        dump_rep: bool,
    },
    /// Sweep every nilpotent orbit of a symmetric pair.
    PairCheck {
        /// gl/so, gl/sp, sp/gl, so/gl, gl/glpq, so/sopq or sp/sppq.
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        /// GNIB or no-GNIB.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Run a bundled reproduction, or `all`.
    Reproduce {
        id: String,
        /// Largest n for sl-n-table.
        #[arg(long, default_value_t = 6)]
        max: usize,
    },
    /// The dimension count for an even height-4 nilpotent.
    Delta {
        /// gl, so or sp.
        ty: String,
        #[arg(long)]
        partition: String,
    },
}

impl RunArgs {
    pub fn config(&self) -> Result<IndexConfig> {
        let seed = match self.seed {
            Some(s) => s,
            None => match std::env::var("INDEXLAB_SEED") {
                Ok(s) => s.trim().parse().map_err(|_| Error::Parse(format!("INDEXLAB_SEED={s:?} is not an integer")))?,
                Err(_) => 0,
            },
        };
        let mut rank = RankOptions::default();
        if let Some(t) = self.trials {
            rank.trials = t;
        }
        if let Some(b) = self.sample_box {
            rank.sample_box = b;
        }
        if let Some(d) = self.max_symbolic_dim {
            rank.max_symbolic_dim = d;
        }
        rank.force_symbolic = self.force_symbolic;
        Ok(IndexConfig { mode: self.mode.parse::<Mode>()?, seed, rank })
    }

    pub fn format(&self) -> Result<Format> {
        self.format.parse()
    }
}

fn number(s: &str, what: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse(format!("{what}: expected a number in {s:?}")))
}

/// `gl3`, `sl2`, `borel-gl4`, `so5`, `sp4`.
pub fn parse_algebra(s: &str) -> Result<MatrixLieAlgebra> {
    if let Some(n) = s.strip_prefix("borel-gl") {
        return Ok(borel_gl(number(n, s)?));
    }
    let (head, n) = s.split_at(s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len()));
    let n = number(n, s)?;
    match head {
        "gl" => Ok(gl(n)),
        "sl" => Ok(sl(n)),
        "so" => so(&BilinearForm::standard_symmetric(n)),
        "sp" => sp(&BilinearForm::standard_skew(n)?),
        _ => Err(Error::Unsupported(format!("algebra {s:?}"))),
    }
}

fn split_factor(s: &str, prefix: &str) -> Result<usize> {
    s.strip_prefix(prefix).ok_or_else(|| Error::Parse(format!("expected {prefix}<n>, got {s:?}"))).and_then(|n| number(n, s))
}

/// `gl5/so5`, `gl6/sp6`, `sp6/gl3`, `so8/gl4`, `gl7/gl3xgl4`, `so8/so4xso4`,
/// `sp12/sp6xsp6`.
pub fn parse_pair_name(s: &str) -> Result<Family> {
    let (g, g0) = s.split_once('/').ok_or_else(|| Error::Parse(format!("pair {s:?} must be g/g0")))?;
    if g.len() < 3 || g0.len() < 3 || !g.is_ascii() || !g0.is_ascii() {
        return Err(Error::Parse(format!("pair {s:?} must look like gl5/so5")));
    }
    let family = if let Some((a, b)) = g0.split_once('x') {
        let prefix = &a[..2];
        let (p, q) = (split_factor(a, prefix)?, split_factor(b, prefix)?);
        let total = split_factor(g, prefix)?;
        let fam = match prefix {
            "gl" => Family::GlGl { p, q },
            "so" => Family::SoSo { p, q },
            "sp" if p % 2 == 0 && q % 2 == 0 => Family::SpSp { p: p / 2, q: q / 2 },
            _ => return Err(Error::Unsupported(format!("pair {s:?}"))),
        };
        if fam.ambient() != total {
            return Err(Error::Inconsistent(format!("{s:?}: factor sizes do not add up")));
        }
        fam
    } else {
        let (gp, n) = g.split_at(2);
        let (hp, m) = g0.split_at(2);
        let (n, m) = (number(n, s)?, number(m, s)?);
        match (gp, hp) {
            ("gl", "so") if n == m => Family::GlSo { n },
            ("gl", "sp") if n == m && n % 2 == 0 => Family::GlSp { n: n / 2 },
            ("sp", "gl") if n == 2 * m => Family::SpGl { n: m },
            ("so", "gl") if n == 2 * m => Family::SoGl { n: m },
            _ => return Err(Error::Unsupported(format!("pair {s:?}"))),
        }
    };
    family.validate()?;
    Ok(family)
}

/// A module named `kind:arg`.
pub fn parse_rep_spec(spec: &str) -> Result<Representation> {
    let (kind, arg) = spec.split_once(':').ok_or_else(|| Error::Parse(format!("rep spec {spec:?} must be kind:arg")))?;
    match kind {
        "coadjoint" => Ok(Representation::adjoint(parse_algebra(arg)?)?.dual()),
        "adjoint" => Representation::adjoint(parse_algebra(arg)?),
        "standard" => Ok(Representation::standard(parse_algebra(arg)?)),
        "dual-standard" => Ok(Representation::standard(parse_algebra(arg)?).dual()),
        "isotropy" => SymmetricPair::standard(parse_pair_name(arg)?)?.isotropy_rep(),
        "sl2-irrep" => Ok(sl2_irrep(number(arg, spec)?)),
        _ => Err(Error::Unsupported(format!("rep kind {kind:?}"))),
    }
}

fn render_pairs(rows: &[(String, String)], format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => unreachable!("JSON goes through serde"),
        Format::Md => {
            out.push_str("| field | value |\n|---|---|\n");
            for (k, v) in rows {
                writeln!(out, "| {k} | {v} |").unwrap();
            }
        }
        Format::Csv => {
            let (ks, vs): (Vec<_>, Vec<_>) = rows.iter().cloned().unzip();
            writeln!(out, "{}\n{}", ks.join(","), vs.join(",")).unwrap();
        }
    }
    Ok(out)
}

fn emit<T: Serialize>(value: &T, rows: impl FnOnce() -> Vec<(String, String)>, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(value)? + "\n"),
        f => render_pairs(&rows(), f),
    }
}

fn index_rows(r: &IndexReport) -> Vec<(String, String)> {
    vec![
        ("module_dim".into(), r.module_dim.to_string()),
        ("algebra_dim".into(), r.algebra_dim.to_string()),
        ("max_orbit_dim".into(), r.max_orbit_dim.to_string()),
        ("index".into(), r.index.to_string()),
        ("lower_bound".into(), r.lower_bound.to_string()),
        ("mode".into(), r.certificate.mode.to_string()),
    ]
}

/// Output text and exit code of one invocation.
pub fn run(cli: &Cli) -> Result<(String, u8)> {
    let cfg = cli.run.config()?;
    let format = cli.run.format()?;
    match &cli.command {
        Command::Index { spec, file, dump_rep } => {
            let rep = match (spec, file) {
                (Some(s), None) => parse_rep_spec(s)?,
                (None, Some(path)) => serde_json::from_str(&std::fs::read_to_string(path)?)?,
                _ => return Err(Error::Parse("give exactly one of a spec or --file".into())),
            };
            if *dump_rep {
                return Ok((serde_json::to_string_pretty(&rep)? + "\n", EXIT_PASS));
            }
            // Orbits are measured in the named module itself.
            let dual = rep.dual();
            let mut report = index(&dual, &cfg)?;
            if cfg.mode == Mode::Auto && !report.is_exact() {
                report = index_escalated(&dual, &cfg)?;
            }
            Ok((emit(&report, || index_rows(&report), format)?, EXIT_PASS))
        }
        Command::PairCheck { family, n, p, q, expect } => {
            let fam = Family::parse(family, *n, *p, *q)?;
            let expect = expect.as_deref().map(str::parse::<Overall>).transpose()?;
            let report = gnib::gnib_check(fam, &cfg)?;
            let code = match (report.overall, expect) {
                (Overall::Inconclusive, _) => EXIT_INCONCLUSIVE,
                (got, Some(want)) if got != want => EXIT_MISMATCH,
                _ => EXIT_PASS,
            };
            Ok((gnib::render(&report, format)?, code))
        }
        Command::Reproduce { id, max } => {
            let opts = Options { max: *max };
            let start = Instant::now();
            let (text, pass) = if id == "all" {
                let suite = gnib::reproduce_all(&cfg, &opts)?;
                let rows = || {
                    suite.results.iter().map(|r| (r.id.clone(), if r.pass { "pass" } else { "FAIL" }.to_string())).collect()
                };
                (emit(&suite, rows, format)?, suite.pass)
            } else {
                let r = gnib::reproduce(id, &cfg, &opts)?;
                let rows = || vec![(r.id.clone(), if r.pass { "pass" } else { "FAIL" }.to_string())];
                (emit(&r, rows, format)?, r.pass)
            };
            eprintln!("reproduce {id}: {} in {:.2?}", if pass { "pass" } else { "FAIL" }, start.elapsed());
            Ok((text, if pass { EXIT_PASS } else { EXIT_MISMATCH }))
        }
        Command::Delta { ty, partition } => {
            let ty: ClassicalType = ty.parse()?;
            let partition: Partition = partition.parse()?;
            let c = gnib::delta_certificate(ty, &partition, &cfg)?;
            let d = &c.record;
            let rows = || {
                vec![
                    ("pair".into(), c.pair.clone()),
                    ("dim_g4".into(), d.dim_g4.to_string()),
                    ("dim_S".into(), d.dim_s.to_string()),
                    ("dim_S_e".into(), d.dim_s_e.to_string()),
                    ("delta".into(), d.delta.to_string()),
                    ("delta_direct".into(), d.delta_direct.to_string()),
                    ("no_gnib".into(), c.no_gnib.to_string()),
                ]
            };
            Ok((emit(&c, rows, format)?, EXIT_PASS))
        }
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

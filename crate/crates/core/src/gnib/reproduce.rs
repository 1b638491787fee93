//! Named reproductions checked against a bundled, versioned table of
//! expected outcomes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use super::{charbonnel_check, delta_certificate, gnib_at, gnib_check, PairReport, Status};
use crate::error::{Error, Result};
use crate::exactlinalg::rank::derive_seed;
use crate::exactlinalg::{Rational, Vector};
use crate::liealg::{
    check_vinberg, index, index_of_algebra, sl2_irrep, Comparison, IndexConfig, NilpotencyCertificate, Representation,
};
use crate::orbits::{enumerate_orbit_reps, partitions, Partition};
use crate::pairs::{borel_gl, gl, sl, ClassicalType, Family};

const BUNDLE: &str = include_str!("../../data/expected.json");

pub const REPRODUCTION_IDS: [&str; 22] = [
    "borel-gl4",
    "sl2xsl2",
    "mV-gib",
    "sum-gib",
    "thm-gl-so",
    "thm-gl-sp",
    "thm-sp-gl",
    "thm-so-gl",
    "rank1-orbits",
    "rk3-gl",
    "rk3-so",
    "rk3-sp",
    "delta-examples",
    "charbonnel",
    "remark-gl2",
    "remark-gl3",
    "remark-so2",
    "remark-so3",
    "remark-sp4",
    "remark-sp6",
    "sl-n-table",
    "all",
];

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Expected {
    pub id: String,
    pub location: String,
    pub quote: String,
    pub expected: Value,
    #[serde(default)]
    pub input: Value,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Bundle {
    pub version: u32,
    pub reproductions: Vec<Expected>,
}

pub fn expected_bundle() -> Result<Bundle> {
    Ok(serde_json::from_str(BUNDLE)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Largest `n` in the `sl-n-table` sweep.
    pub max: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { max: 6 }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Reproduction {
    pub id: String,
    pub location: String,
    pub expected: Value,
    pub observed: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Suite {
    pub version: u32,
    pub seed: u64,
    pub mode: crate::liealg::Mode,
    pub results: Vec<Reproduction>,
    pub pass: bool,
}

/// Every key of `expected` is present in `observed` with a matching value;
/// arrays must agree elementwise.
pub fn matches(expected: &Value, observed: &Value) -> bool {
    match (expected, observed) {
        (Value::Object(e), Value::Object(o)) => e.iter().all(|(k, v)| o.get(k).is_some_and(|w| matches(v, w))),
        (Value::Array(e), Value::Array(o)) => e.len() == o.len() && e.iter().zip(o).all(|(a, b)| matches(a, b)),
        _ => expected == observed,
    }
}

fn lookup<'a>(bundle: &'a Bundle, id: &str) -> Result<&'a Expected> {
    bundle
        .reproductions
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::Unsupported(format!("unknown reproduction {id:?}")))
}

fn rationals(v: &Value) -> Result<Vector> {
    let arr = v.as_array().ok_or_else(|| Error::Parse("expected an array of rationals".into()))?;
    arr.iter()
        .map(|x| {
            let s = x.as_str().ok_or_else(|| Error::Parse("rational must be a string".into()))?;
            s.parse::<Rational>().map_err(|_| Error::Parse(format!("bad rational {s:?}")))
        })
        .collect()
}

fn sweep(families: &[Family], cfg: &IndexConfig) -> Result<Vec<PairReport>> {
    families.iter().map(|&f| gnib_check(f, cfg)).collect()
}

fn verdicts(reports: &[PairReport]) -> Value {
    let m: Map<String, Value> = reports.iter().map(|r| (r.pair.clone(), json!(r.overall.to_string()))).collect();
    json!({ "verdicts": m })
}

fn borel_gl4(cfg: &IndexConfig) -> Result<Value> {
    let b = borel_gl(4);
    let coadjoint = Representation::adjoint(b.clone())?.dual();
    let report = index_of_algebra(&b, cfg)?;
    let xi: Vector = b
        .basis()
        .iter()
        .map(|m| {
            let sup = (0..3).any(|i| !m.get(i, i + 1).is_zero());
            if sup { Rational::one() } else { Rational::zero() }
        })
        .collect();
    let (stab, _) = coadjoint.stabilizer(&xi)?;
    let stab_index = index_of_algebra(&stab, &cfg.fork(1))?;
    Ok(json!({
        "index": report.index,
        "index_exact": report.is_exact(),
        "stabilizer_dim": stab.dim(),
        "stabilizer_abelian": stab.is_abelian(),
        "stabilizer_index": stab_index.index,
    }))
}

fn sl2xsl2(input: &Value, cfg: &IndexConfig) -> Result<Value> {
    let rep = sl2_irrep(3).tensor_product(&sl2_irrep(1))?;
    let v = rationals(&input["coordinates"])?;
    let cert = NilpotencyCertificate { generator: rationals(&input["certificate"]["generator"])? };
    let nilpotency_certified = cert.verify(&rep, &v).is_ok();
    let quotient = rep.quotient_module(&v)?;
    let trivial = quotient.action().iter().all(|a| a.is_zero());
    let c = check_vinberg(&rep, &v, cfg)?;
    Ok(json!({
        "lhs": c.lhs.index,
        "rhs": c.rhs.index,
        "quotient_dim": quotient.dim(),
        "stabilizer_dim": quotient.algebra().dim(),
        "stabilizer_acts_trivially": trivial,
        "nilpotency_certified": nilpotency_certified,
        "status": c.status,
    }))
}

/// Vinberg equality at structured points and at seeded random points.
fn gib_sampled(rep: &Representation, structured: &[Vector], cfg: &IndexConfig, samples: usize) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(cfg.seed, 0x6962));
    let mut points = structured.to_vec();
    for _ in 0..samples {
        points.push((0..rep.dim()).map(|_| Rational::from(rng.gen_range(-3i64..=3))).collect());
    }
    let statuses = points
        .par_iter()
        .enumerate()
        .map(|(i, v)| check_vinberg(rep, v, &cfg.fork(i as u64 + 1)).map(|c| c.status))
        .collect::<Result<Vec<_>>>()?;
    Ok(statuses.iter().all(|s| *s == Comparison::Equal))
}

/// `(v_1, …, v_r, 0, …)` with `v_i` the standard basis, for each `r ≤ n`.
fn rank_points(n: usize, m: usize) -> Vec<Vector> {
    (0..=n.min(m))
        .map(|r| {
            let mut v = vec![Rational::zero(); n * m];
            for i in 0..r {
                v[i * n + i] = Rational::one();
            }
            v
        })
        .collect()
}

fn m_v_gib(cfg: &IndexConfig) -> Result<Value> {
    let mut cases = Map::new();
    for (name, alg) in [("gl2", gl(2)), ("b2", borel_gl(2)), ("sl2", sl(2))] {
        for m in [2usize, 3] {
            let module = Representation::standard(alg.clone()).dual().m_copies(m);
            let c = cfg.fork(m as u64);
            let ind = index(&module, &c)?;
            let gib = gib_sampled(&module, &rank_points(2, m), &c, 6)?;
            cases.insert(
                format!("{name} m={m}"),
                json!({ "index": ind.index, "formula": 2 * m - alg.dim(), "gib_sampled": gib }),
            );
        }
    }
    Ok(json!({ "cases": cases }))
}

fn sum_gib(cfg: &IndexConfig) -> Result<Value> {
    let q = gl(2);
    let v = Representation::standard(q.clone()).dual().m_copies(2);
    let mut cases = Map::new();
    for (name, w) in [
        ("W=trivial", Representation::trivial(q.clone(), 1)),
        ("W=standard", Representation::standard(q.clone())),
        ("W=adjoint", Representation::adjoint(q.clone())?),
    ] {
        let module = w.direct_sum(&v)?;
        let ind = index(&module.dual(), cfg)?;
        let structured: Vec<Vector> = rank_points(2, 2)
            .into_iter()
            .map(|p| std::iter::repeat_n(Rational::zero(), w.dim()).chain(p).collect())
            .collect();
        let gib = gib_sampled(&module, &structured, cfg, 6)?;
        cases.insert(
            name.to_string(),
            json!({ "index": ind.index, "formula": module.dim() - q.dim(), "gib_sampled": gib }),
        );
    }
    Ok(json!({ "cases": cases }))
}

fn rank1(cfg: &IndexConfig) -> Result<Value> {
    let mut fams = Vec::new();
    for n in 3..=6 {
        fams.extend([Family::GlGl { p: n - 1, q: 1 }, Family::SpSp { p: n - 1, q: 1 }, Family::SoSo { p: n - 1, q: 1 }]);
    }
    let mut pairs = Map::new();
    for r in sweep(&fams, cfg)? {
        let nonzero = enumerate_orbit_reps(r.family)?.iter().filter(|x| !x.is_zero()).count();
        pairs.insert(r.pair.clone(), json!({ "nonzero_orbits": nonzero, "verdict": r.overall.to_string(), "rank": r.rank }));
    }
    Ok(json!({ "pairs": pairs }))
}

fn rk3_gl(cfg: &IndexConfig) -> Result<Value> {
    let fam = Family::GlGl { p: 3, q: 4 };
    let report = gnib_check(fam, cfg)?;
    let mut out = verdicts(std::slice::from_ref(&report));
    let bad: Vec<&str> =
        report.orbits.iter().filter(|v| v.status == Status::UnequalCertified).map(|v| v.orbit.as_str()).collect();
    out["bad_orbits"] = json!(bad);
    let reps = enumerate_orbit_reps(fam)?;
    let rep = reps
        .iter()
        .find(|r| r.id == "{bab,bab,a}")
        .ok_or_else(|| Error::SelfCheck("orbit {bab,bab,a} missing".into()))?;
    let v = gnib_at(rep, &IndexConfig { mode: crate::liealg::Mode::Symbolic, ..*cfg })?;
    out["bad_orbit"] = json!({
        "orbit": v.orbit,
        "dim_ge0": v.dim_ge0,
        "dim_ge1": v.dim_ge1,
        "index": v.index,
        "exact": v.report.is_exact(),
        "index_at_least_4": v.lower_bound >= 4,
    });
    Ok(out)
}

fn delta_examples(cfg: &IndexConfig) -> Result<Value> {
    let cases = [
        (ClassicalType::Gl, "3,3,1"),
        (ClassicalType::Gl, "3,3,1,1"),
        (ClassicalType::So, "3,3,1"),
        (ClassicalType::So, "3,3,1,1"),
        (ClassicalType::Sp, "3,3,3,3,1,1"),
    ];
    let mut out = Map::new();
    for (i, (ty, p)) in cases.iter().enumerate() {
        let d = delta_certificate(*ty, &p.parse()?, &cfg.fork(i as u64))?;
        out.insert(
            format!("{ty} {p}"),
            json!({
                "pair": d.pair,
                "delta": d.record.delta,
                "delta_direct": d.record.delta_direct,
                "delta_positive": d.record.delta > 0,
                "no_gnib": d.no_gnib,
            }),
        );
    }
    Ok(json!({ "cases": out }))
}

fn charbonnel(input: &Value, cfg: &IndexConfig) -> Result<Value> {
    let max = |k: &str, d: u64| input.get(k).and_then(Value::as_u64).unwrap_or(d) as usize;
    let mut out = Map::new();
    for (ty, lo, hi, step) in [
        (ClassicalType::Gl, 1, max("gl_max", 6), 1),
        (ClassicalType::So, 2, max("so_max", 7), 1),
        (ClassicalType::Sp, 2, max("sp_max", 6), 2),
    ] {
        let parts: Vec<Partition> = (lo..=hi).step_by(step).flat_map(partitions).collect();
        let records = parts
            .par_iter()
            .map(|p| match charbonnel_check(ty, p, &cfg.fork(super::fnv1a(&p.to_string()))) {
                Ok(r) => Ok(Some(r.equal)),
                Err(Error::InvalidPartition(_)) => Ok(None),
                Err(e) => Err(e),
            })
            .collect::<Result<Vec<_>>>()?;
        let admissible: Vec<bool> = records.into_iter().flatten().collect();
        out.insert(
            ty.to_string(),
            json!({ "partitions": admissible.len(), "all_equal": admissible.iter().all(|&b| b) }),
        );
    }
    Ok(Value::Object(out))
}

/// The `sl_n` classification at the `gl` level, `2 ≤ n ≤ max`.
pub fn sl_n_families(max: usize) -> Vec<(usize, Family)> {
    let mut out = Vec::new();
    for n in 2..=max {
        out.push((n, Family::GlSo { n }));
        if n % 2 == 0 {
            out.push((n, Family::GlSp { n: n / 2 }));
        }
        for p in 1..=n / 2 {
            out.push((n, Family::GlGl { p, q: n - p }));
        }
    }
    out
}

fn sl_n_table(input: &Value, cfg: &IndexConfig, opts: &Options) -> Result<Value> {
    let supported = input.get("max_supported").and_then(Value::as_u64).unwrap_or(8) as usize;
    if opts.max > supported || opts.max < 2 {
        return Err(Error::Unsupported(format!("sl-n-table supports 2 ≤ max ≤ {supported}")));
    }
    let fams = sl_n_families(opts.max);
    let rows = fams
        .iter()
        .map(|&(n, f)| gnib_check(f, cfg).map(|r| json!({ "n": n, "pair": r.pair, "verdict": r.overall.to_string() })))
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({ "table": rows }))
}

fn family_list(id: &str) -> Option<Vec<Family>> {
    let v: Vec<Family> = match id {
        "thm-gl-so" => (2..=6).map(|n| Family::GlSo { n }).collect(),
        "thm-gl-sp" => (1..=3).map(|n| Family::GlSp { n }).collect(),
        "thm-sp-gl" => (1..=4).map(|n| Family::SpGl { n }).collect(),
        "thm-so-gl" => (2..=4).map(|n| Family::SoGl { n }).collect(),
        "rk3-so" => vec![Family::SoSo { p: 3, q: 4 }],
        "rk3-sp" => vec![Family::SpSp { p: 3, q: 4 }],
        "remark-gl2" => (4..=6).map(|n| Family::GlGl { p: 2, q: n - 2 }).collect(),
        "remark-gl3" => vec![Family::GlGl { p: 3, q: 3 }],
        "remark-so2" => (4..=8).map(|n| Family::SoSo { p: 2, q: n - 2 }).collect(),
        "remark-so3" => vec![Family::SoSo { p: 3, q: 3 }],
        "remark-sp4" => (3..=4).map(|n| Family::SpSp { p: 2, q: n - 2 }).collect(),
        "remark-sp6" => vec![Family::SpSp { p: 3, q: 3 }],
        _ => return None,
    };
    Some(v)
}

/// Restricts the bundled expectation to what a run with `opts` covers.
fn scoped_expectation(id: &str, expected: &Value, opts: &Options) -> Value {
    if id != "sl-n-table" {
        return expected.clone();
    }
    let rows: Vec<Value> = expected["table"]
        .as_array()
        .map(|a| a.iter().filter(|r| r["n"].as_u64().is_some_and(|n| n as usize <= opts.max)).cloned().collect())
        .unwrap_or_default();
    json!({ "table": rows })
}

/// Runs one named reproduction (not `"all"`).
pub fn reproduce(id: &str, cfg: &IndexConfig, opts: &Options) -> Result<Reproduction> {
    let bundle = expected_bundle()?;
    reproduce_in(&bundle, id, cfg, opts)
}

fn reproduce_in(bundle: &Bundle, id: &str, cfg: &IndexConfig, opts: &Options) -> Result<Reproduction> {
    let entry = lookup(bundle, id)?;
    let c = cfg.fork(super::fnv1a(id));
    let observed = if let Some(fams) = family_list(id) {
        verdicts(&sweep(&fams, &c)?)
    } else {
        match id {
            "borel-gl4" => borel_gl4(&c)?,
            "sl2xsl2" => sl2xsl2(&entry.input, &c)?,
            "mV-gib" => m_v_gib(&c)?,
            "sum-gib" => sum_gib(&c)?,
            "rank1-orbits" => rank1(&c)?,
            "rk3-gl" => rk3_gl(&c)?,
            "delta-examples" => delta_examples(&c)?,
            "charbonnel" => charbonnel(&entry.input, &c)?,
            "sl-n-table" => sl_n_table(&entry.input, &c, opts)?,
            _ => return Err(Error::Unsupported(format!("no script for {id:?}"))),
        }
    };
    let expected = scoped_expectation(id, &entry.expected, opts);
    let pass = matches(&expected, &observed);
    Ok(Reproduction { id: id.to_string(), location: entry.location.clone(), expected, observed, pass })
}

/// Every reproduction in bundle order.
pub fn reproduce_all(cfg: &IndexConfig, opts: &Options) -> Result<Suite> {
    let bundle = expected_bundle()?;
    let results = bundle
        .reproductions
        .iter()
        .map(|e| reproduce_in(&bundle, &e.id, cfg, opts))
        .collect::<Result<Vec<_>>>()?;
    let pass = results.iter().all(|r| r.pass);
    Ok(Suite { version: bundle.version, seed: cfg.seed, mode: cfg.mode, results, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundle_covers_every_id() {
        let b = expected_bundle().unwrap();
        assert_eq!(b.version, 1);
        for id in REPRODUCTION_IDS.iter().filter(|&&i| i != "all") {
            assert!(lookup(&b, id).is_ok(), "{id}");
        }
        assert_eq!(b.reproductions.len(), REPRODUCTION_IDS.len() - 1);
    }

    #[test]
    fn subset_matching() {
        let e = json!({"a": 1, "b": {"c": true}});
        assert!(matches(&e, &json!({"a": 1, "b": {"c": true, "d": 2}, "x": 0})));
        assert!(!matches(&e, &json!({"a": 1, "b": {"c": false}})));
        assert!(!matches(&e, &json!({"b": {"c": true}})));
    }

    #[test]
    fn borel_and_sl2xsl2() {
        let cfg = IndexConfig::default();
        for id in ["borel-gl4", "sl2xsl2"] {
            let r = reproduce(id, &cfg, &Options::default()).unwrap();
            assert!(r.pass, "{id}: {}", r.observed);
        }
    }
}

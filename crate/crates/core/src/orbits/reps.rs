//! Nilpotent orbit representatives in adapted cyclic bases.
//!
//! A representative is a list of Jordan blocks. Block `i` of size `d_i + 1`
//! spans `v_{i,s} = e^s w_i`. Blocks carrying a form are either self-paired
//! or paired with a partner of the same size, with
//! `(v_{i,a}, v_{i*,d−a}) = η^a` where `η = ±1` records whether `e` is
//! self-adjoint or skew-adjoint. Sign data give `D v_{i,s} = ε_i (−1)^s v_{i,s}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::{ABDiagram, Partition};
use crate::error::{Error, Result};
use crate::exactlinalg::{Rational, RationalMatrix};
use crate::liealg::{is_nilpotent, MatrixLieAlgebra};
use crate::pairs::{gl, isometry_algebra, BilinearForm, ClassicalType, Family, FormKind, SymmetricPair};

/// Constraints shared by the representatives of one family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Rules {
    form: Option<FormKind>,
    /// `+1`: `e` is self-adjoint for the form; `−1`: skew-adjoint.
    eta: i64,
    /// `Some(τ)` when a sign operator `D` with `DᵀJD = τJ` is present.
    tau: Option<i64>,
    /// Required dimension of the `+1` eigenspace of `D`.
    plus: usize,
}

fn rules(f: Family) -> Rules {
    use FormKind::*;
    let r = |form, eta, tau, plus| Rules { form, eta, tau, plus };
    match f {
        Family::GlSo { .. } => r(Some(Symmetric), 1, None, 0),
        Family::GlSp { .. } => r(Some(Skew), 1, None, 0),
        Family::SpGl { n } => r(Some(Skew), -1, Some(-1), n),
        Family::SoGl { n } => r(Some(Symmetric), -1, Some(-1), n),
        Family::GlGl { p, .. } => r(None, 1, Some(1), p),
        Family::SoSo { p, .. } => r(Some(Symmetric), -1, Some(1), p),
        Family::SpSp { p, .. } => r(Some(Skew), -1, Some(1), 2 * p),
    }
}

fn pow_sign(base: i64, k: usize) -> i64 {
    if base >= 0 || k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// One Jordan block: its size, the sign of its cyclic vector (when a sign
/// operator is present), and the index of its partner block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Block {
    pub size: usize,
    pub sign: Option<i8>,
    pub partner: usize,
}

impl Block {
    /// Number of `+1` eigenvectors of `D` in the block.
    fn plus_count(&self) -> usize {
        match self.sign {
            Some(1) => self.size.div_ceil(2),
            Some(_) => self.size / 2,
            None => 0,
        }
    }
}

/// An indecomposable piece: one self-paired block or a pair of blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Unit {
    Single { size: usize, sign: Option<i8> },
    Pair { size: usize, signs: Option<(i8, i8)> },
}

impl Unit {
    fn blocks(&self, first: usize) -> Vec<Block> {
        match *self {
            Unit::Single { size, sign } => vec![Block { size, sign, partner: first }],
            Unit::Pair { size, signs } => vec![
                Block { size, sign: signs.map(|s| s.0), partner: first + 1 },
                Block { size, sign: signs.map(|s| s.1), partner: first },
            ],
        }
    }

    fn total(&self) -> usize {
        match *self {
            Unit::Single { size, .. } => size,
            Unit::Pair { size, .. } => 2 * size,
        }
    }

    fn plus(&self) -> usize {
        self.blocks(0).iter().map(Block::plus_count).sum()
    }
}

fn sign_char(s: i8) -> char {
    if s > 0 {
        '+'
    } else {
        '-'
    }
}

fn units_for(r: &Rules, n: usize) -> Vec<Unit> {
    let mut out = Vec::new();
    let signs: Vec<Option<i8>> = if r.tau.is_some() { vec![Some(1), Some(-1)] } else { vec![None] };
    for size in (1..=n).rev() {
        let d = size - 1;
        let Some(kind) = r.form else {
            out.extend(signs.iter().map(|&sign| Unit::Single { size, sign }));
            continue;
        };
        let self_ok = pow_sign(r.eta, d) == kind.sign() && r.tau.is_none_or(|t| pow_sign(-1, d) == t);
        if self_ok {
            out.extend(signs.iter().map(|&sign| Unit::Single { size, sign }));
        } else if 2 * size <= n {
            match r.tau {
                None => out.push(Unit::Pair { size, signs: None }),
                Some(t) if t * pow_sign(-1, d) == 1 => {
                    out.push(Unit::Pair { size, signs: Some((1, 1)) });
                    out.push(Unit::Pair { size, signs: Some((-1, -1)) });
                }
                Some(_) => out.push(Unit::Pair { size, signs: Some((1, -1)) }),
            }
        }
    }
    out
}

/// All multisets of units with the given total size and `+` count.
fn unit_multisets(units: &[Unit], total: usize, plus: Option<usize>) -> Vec<Vec<Unit>> {
    fn go(
        units: &[Unit],
        idx: usize,
        rest: usize,
        plus: Option<usize>,
        cur: &mut Vec<Unit>,
        out: &mut Vec<Vec<Unit>>,
    ) {
        if rest == 0 {
            if plus.is_none_or(|p| p == 0) {
                out.push(cur.clone());
            }
            return;
        }
        if idx == units.len() {
            return;
        }
        let u = units[idx];
        let mut k = 0;
        loop {
            let used = k * u.total();
            if used > rest || plus.is_some_and(|p| k * u.plus() > p) {
                break;
            }
            go(units, idx + 1, rest - used, plus.map(|p| p - k * u.plus()), cur, out);
            cur.push(u);
            k += 1;
        }
        cur.truncate(cur.len() - k);
    }
    let mut out = Vec::new();
    go(units, 0, total, plus, &mut Vec::new(), &mut out);
    out
}

/// How a representative was parameterized.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Decoration {
    /// Jordan type alone.
    Plain,
    /// Partner index per block and, for inner families, the sign of each
    /// cyclic vector.
    Paired { pairing: Vec<usize>, signs: Option<Vec<i8>> },
    Ab { rows: ABDiagram },
}

/// A nilpotent `e ∈ g₁` in an adapted basis with its own Gram matrix and sign
/// operator; `pair()` rebuilds the owning symmetric pair in these coordinates.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitRep {
    pub family: Family,
    pub id: String,
    pub partition: Partition,
    pub decoration: Decoration,
    pub blocks: Vec<Block>,
    pub e: RationalMatrix,
    pub form: Option<BilinearForm>,
    /// The sign operator `D` of an inner family.
    pub signs: Option<RationalMatrix>,
}

impl fmt::Display for OrbitRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.family, self.id)
    }
}

fn offsets(blocks: &[Block]) -> Vec<usize> {
    let mut off = Vec::with_capacity(blocks.len());
    let mut acc = 0;
    for b in blocks {
        off.push(acc);
        acc += b.size;
    }
    off
}

/// The nilpotent shift `v_{i,s} ↦ v_{i,s+1}`.
pub fn jordan_matrix(sizes: &[usize]) -> RationalMatrix {
    let n = sizes.iter().sum();
    let mut e = RationalMatrix::zeros(n, n);
    let mut off = 0;
    for &s in sizes {
        for a in 0..s.saturating_sub(1) {
            e.set(off + a + 1, off + a, Rational::one());
        }
        off += s;
    }
    e
}

fn gram(blocks: &[Block], kind: FormKind, eta: i64) -> Result<BilinearForm> {
    let off = offsets(blocks);
    let n: usize = blocks.iter().map(|b| b.size).sum();
    let mut j = RationalMatrix::zeros(n, n);
    for (i, b) in blocks.iter().enumerate() {
        let k = b.partner;
        if k < i {
            continue;
        }
        if blocks[k].size != b.size {
            return Err(Error::InvalidRep(format!("blocks {i} and {k} are paired but of different sizes")));
        }
        let d = b.size - 1;
        for a in 0..=d {
            let val = Rational::from(pow_sign(eta, a));
            if k == i {
                j.set(off[i] + a, off[i] + d - a, val);
            } else {
                j.set(off[i] + a, off[k] + d - a, val.clone());
                j.set(off[k] + d - a, off[i] + a, val * Rational::from(kind.sign()));
            }
        }
    }
    BilinearForm::new(j, kind).map_err(|err| Error::InvalidRep(format!("block pairing gives no form: {err}")))
}

fn sign_matrix(blocks: &[Block]) -> Result<RationalMatrix> {
    let mut d = Vec::new();
    for b in blocks {
        let s = b.sign.ok_or_else(|| Error::InvalidRep("missing sign".into()))?;
        for t in 0..b.size {
            d.push(Rational::from(i64::from(s) * pow_sign(-1, t)));
        }
    }
    Ok(RationalMatrix::diagonal(&d))
}

fn unit_label(u: &Unit, family: Family) -> String {
    match *u {
        Unit::Single { size, sign: None } => size.to_string(),
        Unit::Single { size, sign: Some(s) } => {
            if matches!(family, Family::GlGl { .. }) {
                ABDiagram::row_word(size, s > 0)
            } else {
                format!("{size}{}", sign_char(s))
            }
        }
        Unit::Pair { size, signs: None } => format!("{size}^2"),
        Unit::Pair { size, signs: Some((a, b)) } => format!("({size}{},{size}{})", sign_char(a), sign_char(b)),
    }
}

impl OrbitRep {
    /// Builds a representative from explicit blocks.
    pub fn from_blocks(family: Family, blocks: Vec<Block>) -> Result<Self> {
        let r = rules(family);
        let n: usize = blocks.iter().map(|b| b.size).sum();
        if n != family.ambient() {
            return Err(Error::InvalidRep(format!("blocks fill {n} of {} dimensions", family.ambient())));
        }
        let sizes: Vec<usize> = blocks.iter().map(|b| b.size).collect();
        let e = jordan_matrix(&sizes);
        let form = r.form.map(|k| gram(&blocks, k, r.eta)).transpose()?;
        let signs = r.tau.map(|_| sign_matrix(&blocks)).transpose()?;
        let partition = Partition::from_unsorted(sizes)?;
        let decoration = match family {
            Family::GlSo { .. } => Decoration::Plain,
            Family::GlGl { .. } => Decoration::Ab {
                rows: ABDiagram::new(
                    blocks.iter().map(|b| ABDiagram::row_word(b.size, b.sign == Some(1))).collect(),
                )?,
            },
            _ => Decoration::Paired {
                pairing: blocks.iter().map(|b| b.partner).collect(),
                signs: r.tau.map(|_| blocks.iter().map(|b| b.sign.unwrap_or(0)).collect()),
            },
        };
        let id = match &decoration {
            Decoration::Plain => partition.to_string(),
            Decoration::Ab { rows } => rows.to_string(),
            Decoration::Paired { .. } => {
                let mut parts = Vec::new();
                let mut i = 0;
                while i < blocks.len() {
                    let b = blocks[i];
                    let u = if b.partner == i {
                        Unit::Single { size: b.size, sign: b.sign }
                    } else {
                        let s2 = blocks[b.partner].sign;
                        Unit::Pair { size: b.size, signs: b.sign.zip(s2) }
                    };
                    parts.push(unit_label(&u, family));
                    i += if b.partner == i { 1 } else { 2 };
                }
                format!("[{}]", parts.join(" "))
            }
        };
        Ok(OrbitRep { family, id, partition, decoration, blocks, e, form, signs })
    }

    /// The owning symmetric pair, in the coordinates of this representative.
    pub fn pair(&self) -> Result<SymmetricPair> {
        match (self.family, &self.form, &self.signs) {
            (Family::GlSo { .. } | Family::GlSp { .. }, Some(f), None) => SymmetricPair::outer(self.family, f.clone()),
            (Family::GlGl { .. }, None, Some(d)) => SymmetricPair::inner(self.family, None, d.clone()),
            (_, Some(f), Some(d)) => SymmetricPair::inner(self.family, Some(f.clone()), d.clone()),
            _ => Err(Error::InvalidRep("form and sign data do not match the family".into())),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.e.is_zero()
    }
}

/// One representative per admissible decoration. Several representatives of
/// one orbit may occur; every orbit is represented.
pub fn enumerate_orbit_reps(family: Family) -> Result<Vec<OrbitRep>> {
    family.validate()?;
    let r = rules(family);
    let n = family.ambient();
    let units = units_for(&r, n);
    let mut out = Vec::new();
    for ms in unit_multisets(&units, n, r.tau.map(|_| r.plus)) {
        let mut blocks = Vec::new();
        for u in &ms {
            let first = blocks.len();
            blocks.extend(u.blocks(first));
        }
        out.push(OrbitRep::from_blocks(family, blocks)?);
    }
    out.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(out)
}

/// Sizes of Jordan blocks from the ranks of powers of `e`.
pub fn jordan_type(e: &RationalMatrix) -> Result<Partition> {
    if !is_nilpotent(e) {
        return Err(Error::Precondition("Jordan type of a non-nilpotent matrix".into()));
    }
    let n = e.rows();
    let mut ranks = vec![n];
    let mut p = RationalMatrix::identity(n);
    while *ranks.last().expect("nonempty") > 0 {
        p = p.mul(e);
        ranks.push(p.rank());
    }
    // #blocks of size ≥ k is r_{k−1} − r_k.
    let ge: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for k in 1..=ge.len() {
        let exactly = ge[k - 1] - ge.get(k).copied().unwrap_or(0);
        parts.extend(std::iter::repeat_n(k, exactly));
    }
    Partition::from_unsorted(parts)
}

/// The checks passed by a valid representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepCertificate {
    pub id: String,
    pub checks: Vec<String>,
}

/// Certifies every invariant of a representative; fails on the first
/// violation, naming it.
pub fn validate_rep(rep: &OrbitRep) -> Result<RepCertificate> {
    let r = rules(rep.family);
    let fail = |what: &str| Err(Error::InvalidRep(format!("{}: {what}", rep.id)));
    let mut checks = Vec::new();
    if !is_nilpotent(&rep.e) {
        return fail("e is not nilpotent");
    }
    checks.push("nilpotent".to_string());
    if jordan_type(&rep.e)? != rep.partition {
        return fail("Jordan type differs from the declared partition");
    }
    checks.push(format!("jordan type {}", rep.partition));
    let minus = Rational::from(-1);
    if let Some(kind) = r.form {
        let Some(f) = &rep.form else { return fail("missing form") };
        if f.kind() != kind || f.dim() != rep.family.ambient() {
            return fail("form has the wrong kind or size");
        }
        let j = f.matrix();
        let lhs = rep.e.transpose().mul(j);
        let rhs = j.mul(&rep.e).scale(&Rational::from(r.eta));
        if lhs != rhs {
            return fail(if r.eta > 0 { "e is not self-adjoint for the form" } else { "e does not preserve the form" });
        }
        checks.push("form compatibility".to_string());
    }
    if let Some(tau) = r.tau {
        let Some(d) = &rep.signs else { return fail("missing sign operator") };
        let n = d.rows();
        if !d.is_diagonal() || d.mul(d) != RationalMatrix::identity(n) {
            return fail("sign operator is not a diagonal involution");
        }
        if d.mul(&rep.e).mul(d) != rep.e.scale(&minus) {
            return fail("σ(e) ≠ −e");
        }
        let plus = (0..n).filter(|&i| d.get(i, i).is_one()).count();
        if plus != r.plus {
            return fail("eigenspace dimensions of σ do not match the family");
        }
        if let Some(f) = &rep.form {
            let j = f.matrix();
            if d.transpose().mul(j).mul(d) != j.scale(&Rational::from(tau)) {
                return fail("sign operator is incompatible with the form");
            }
        }
        checks.push("σ(e) = −e".to_string());
    } else if let Some(f) = &rep.form {
        if f.sigma(&rep.e) != rep.e.scale(&minus) {
            return fail("σ(e) ≠ −e");
        }
        checks.push("σ(e) = −e".to_string());
    }
    Ok(RepCertificate { id: rep.id.clone(), checks })
}

/// A nilpotent element of `gl_n`, `so(J)` or `sp(J)` in Jordan normal form
/// with its neutral element `h = diag(2s − d_i)`.
#[derive(Clone, Debug)]
pub struct ClassicalNilpotent {
    pub ty: ClassicalType,
    pub partition: Partition,
    pub blocks: Vec<Block>,
    pub e: RationalMatrix,
    pub h: RationalMatrix,
    pub form: Option<BilinearForm>,
    pub algebra: MatrixLieAlgebra,
}

/// `e` of the given Jordan type in `gl`, `so` or `sp`. In `so` even parts,
/// and in `sp` odd parts, must have even multiplicity.
pub fn nilpotent_in_classical(ty: ClassicalType, partition: &Partition) -> Result<ClassicalNilpotent> {
    let n = partition.total();
    let (kind, eta) = match ty {
        ClassicalType::Gl => (None, 1),
        ClassicalType::So => (Some(FormKind::Symmetric), -1),
        ClassicalType::Sp => (Some(FormKind::Skew), -1),
    };
    let mut blocks = Vec::new();
    match kind {
        None => {
            for &s in partition.parts() {
                let i = blocks.len();
                blocks.push(Block { size: s, sign: None, partner: i });
            }
        }
        Some(k) => {
            let parts = partition.parts();
            let mut i = 0;
            while i < parts.len() {
                let s = parts[i];
                let idx = blocks.len();
                if pow_sign(eta, s - 1) == k.sign() {
                    blocks.push(Block { size: s, sign: None, partner: idx });
                    i += 1;
                } else if i + 1 < parts.len() && parts[i + 1] == s {
                    blocks.push(Block { size: s, sign: None, partner: idx + 1 });
                    blocks.push(Block { size: s, sign: None, partner: idx });
                    i += 2;
                } else {
                    let which = if k == FormKind::Symmetric { "even" } else { "odd" };
                    return Err(Error::InvalidPartition(format!(
                        "{partition} in {ty}: {which} parts need even multiplicity"
                    )));
                }
            }
        }
    }
    let sizes: Vec<usize> = blocks.iter().map(|b| b.size).collect();
    let e = jordan_matrix(&sizes);
    let hdiag: Vec<Rational> =
        sizes.iter().flat_map(|&s| (0..s).map(move |t| Rational::from(2 * t as i64 + 1 - s as i64))).collect();
    let h = RationalMatrix::diagonal(&hdiag);
    let form = kind.map(|k| gram(&blocks, k, eta)).transpose()?;
    let algebra = match &form {
        None => gl(n),
        Some(f) => isometry_algebra(f),
    };
    if !algebra.contains(&e) || !algebra.contains(&h) {
        return Err(Error::SelfCheck(format!("normal form of {partition} leaves {ty}")));
    }
    Ok(ClassicalNilpotent { ty, partition: partition.clone(), blocks, e, h, form, algebra })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(f: Family) -> usize {
        enumerate_orbit_reps(f).unwrap().len()
    }

    #[test]
    fn outer_families_follow_partitions() {
        assert_eq!(count(Family::GlSo { n: 4 }), 5);
        // partitions of 6 with even multiplicities: (3,3), (2,2,1,1), (1^6)
        assert_eq!(count(Family::GlSp { n: 3 }), 3);
    }

    #[test]
    fn every_rep_validates() {
        for f in [
            Family::GlSo { n: 4 },
            Family::GlSp { n: 2 },
            Family::SpGl { n: 3 },
            Family::SoGl { n: 4 },
            Family::GlGl { p: 3, q: 4 },
            Family::SoSo { p: 3, q: 3 },
            Family::SpSp { p: 2, q: 1 },
        ] {
            for rep in enumerate_orbit_reps(f).unwrap() {
                validate_rep(&rep).unwrap();
            }
        }
    }

    #[test]
    fn gl7_bad_orbit_is_enumerated() {
        let reps = enumerate_orbit_reps(Family::GlGl { p: 3, q: 4 }).unwrap();
        assert!(reps.iter().any(|r| r.id == "{bab,bab,a}"));
        let reps = enumerate_orbit_reps(Family::GlGl { p: 4, q: 3 }).unwrap();
        assert!(reps.iter().any(|r| r.id == "{aba,bab,a}"));
    }

    #[test]
    fn negative_controls() {
        let rep = enumerate_orbit_reps(Family::GlSo { n: 3 }).unwrap().pop().unwrap();
        let mut bad = rep.clone();
        let mut j = bad.form.clone().unwrap().matrix().clone();
        j.set(0, 2, Rational::from(-1));
        j.set(2, 0, Rational::from(-1));
        bad.form = Some(BilinearForm::new(j, FormKind::Symmetric).unwrap());
        assert!(validate_rep(&bad).is_err());
        let mut zero = rep;
        zero.e = RationalMatrix::zeros(3, 3);
        assert!(validate_rep(&zero).is_err());
    }

    #[test]
    fn classical_admissibility() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert!(nilpotent_in_classical(ClassicalType::Sp, &p("3,3")).is_ok());
        assert!(nilpotent_in_classical(ClassicalType::Sp, &p("3,1")).is_err());
        assert!(nilpotent_in_classical(ClassicalType::So, &p("2,1")).is_err());
        let x = nilpotent_in_classical(ClassicalType::So, &p("3,3,1")).unwrap();
        assert_eq!(jordan_type(&x.e).unwrap(), p("3,3,1"));
    }
}

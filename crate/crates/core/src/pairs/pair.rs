//! Symmetric pairs `g = g₀ ⊕ g₁`, isotropy representations and graded
//! centralizers.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::forms::{gl, isometry_algebra, BilinearForm, FormKind};
use crate::error::{Error, Result};
use crate::exactlinalg::{Rational, RationalMatrix, Vector};
use crate::liealg::{
    bracket_representation, index, index_escalated, is_nilpotent, IndexConfig, IndexReport, MatrixLieAlgebra,
    MatrixSpace, Mode, Representation,
};

/// The supported classical families. `GlSp { n }` is `(gl_{2n}, sp_{2n})`,
/// `SpGl { n }` is `(sp_{2n}, gl_n)`, `SoGl { n }` is `(so_{2n}, gl_n)` and
/// `SpSp { p, q }` is `(sp_{2p+2q}, sp_{2p} × sp_{2q})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    GlSo { n: usize },
    GlSp { n: usize },
    SpGl { n: usize },
    SoGl { n: usize },
    GlGl { p: usize, q: usize },
    SoSo { p: usize, q: usize },
    SpSp { p: usize, q: usize },
}

/// The ambient classical algebra of a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassicalType {
    Gl,
    So,
    Sp,
}

impl fmt::Display for ClassicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassicalType::Gl => "gl",
            ClassicalType::So => "so",
            ClassicalType::Sp => "sp",
        })
    }
}

impl std::str::FromStr for ClassicalType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gl" => Ok(ClassicalType::Gl),
            "so" => Ok(ClassicalType::So),
            "sp" => Ok(ClassicalType::Sp),
            other => Err(Error::Unsupported(format!("classical type `{other}`"))),
        }
    }
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::GlSo { .. } => "gl/so",
            Family::GlSp { .. } => "gl/sp",
            Family::SpGl { .. } => "sp/gl",
            Family::SoGl { .. } => "so/gl",
            Family::GlGl { .. } => "gl/glpq",
            Family::SoSo { .. } => "so/sopq",
            Family::SpSp { .. } => "sp/sppq",
        }
    }

    /// Parses a family tag with its size parameters.
    pub fn parse(tag: &str, n: Option<usize>, p: Option<usize>, q: Option<usize>) -> Result<Self> {
        let need = |x: Option<usize>, name: &str| {
            x.ok_or_else(|| Error::Inconsistent(format!("family `{tag}` needs --{name}")))
        };
        let fam = match tag {
            "gl/so" => Family::GlSo { n: need(n, "n")? },
            "gl/sp" => Family::GlSp { n: need(n, "n")? },
            "sp/gl" | "sp/gln" => Family::SpGl { n: need(n, "n")? },
            "so/gl" | "so/gln" => Family::SoGl { n: need(n, "n")? },
            "gl/glpq" => Family::GlGl { p: need(p, "p")?, q: need(q, "q")? },
            "so/sopq" => Family::SoSo { p: need(p, "p")?, q: need(q, "q")? },
            "sp/sppq" => Family::SpSp { p: need(p, "p")?, q: need(q, "q")? },
            other => return Err(Error::Unsupported(format!("family `{other}`"))),
        };
        fam.validate()?;
        Ok(fam)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            Family::GlSo { n } | Family::GlSp { n } | Family::SpGl { n } => n >= 1,
            Family::SoGl { n } => n >= 1,
            Family::GlGl { p, q } | Family::SoSo { p, q } | Family::SpSp { p, q } => p >= 1 && q >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Inconsistent(format!("{self}: sizes must be positive")))
        }
    }

    pub fn params(&self) -> BTreeMap<&'static str, usize> {
        match *self {
            Family::GlSo { n } | Family::GlSp { n } | Family::SpGl { n } | Family::SoGl { n } => {
                BTreeMap::from([("n", n)])
            }
            Family::GlGl { p, q } | Family::SoSo { p, q } | Family::SpSp { p, q } => {
                BTreeMap::from([("p", p), ("q", q)])
            }
        }
    }

    /// Size of the matrices in `g`.
    pub fn ambient(&self) -> usize {
        match *self {
            Family::GlSo { n } => n,
            Family::GlSp { n } | Family::SpGl { n } | Family::SoGl { n } => 2 * n,
            Family::GlGl { p, q } | Family::SoSo { p, q } => p + q,
            Family::SpSp { p, q } => 2 * (p + q),
        }
    }

    pub fn classical_type(&self) -> ClassicalType {
        match self {
            Family::GlSo { .. } | Family::GlSp { .. } | Family::GlGl { .. } => ClassicalType::Gl,
            Family::SoGl { .. } | Family::SoSo { .. } => ClassicalType::So,
            Family::SpGl { .. } | Family::SpSp { .. } => ClassicalType::Sp,
        }
    }

    /// `rk(G/G₀)` from the classical table.
    pub fn rank_table(&self) -> usize {
        match *self {
            Family::GlSo { n } | Family::GlSp { n } | Family::SpGl { n } => n,
            Family::SoGl { n } => n / 2,
            Family::GlGl { p, q } | Family::SoSo { p, q } | Family::SpSp { p, q } => p.min(q),
        }
    }

    /// `dim g₀` in closed form.
    pub fn dim_g0(&self) -> usize {
        let so = |m: usize| m * m.saturating_sub(1) / 2;
        let sp = |m: usize| m * (2 * m + 1);
        match *self {
            Family::GlSo { n } => so(n),
            Family::GlSp { n } => sp(n),
            Family::SpGl { n } | Family::SoGl { n } => n * n,
            Family::GlGl { p, q } => p * p + q * q,
            Family::SoSo { p, q } => so(p) + so(q),
            Family::SpSp { p, q } => sp(p) + sp(q),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::GlSo { n } => write!(f, "(gl{n}, so{n})"),
            Family::GlSp { n } => write!(f, "(gl{}, sp{})", 2 * n, 2 * n),
            Family::SpGl { n } => write!(f, "(sp{}, gl{n})", 2 * n),
            Family::SoGl { n } => write!(f, "(so{}, gl{n})", 2 * n),
            Family::GlGl { p, q } => write!(f, "(gl{}, gl{p}xgl{q})", p + q),
            Family::SoSo { p, q } => write!(f, "(so{}, so{p}xso{q})", p + q),
            Family::SpSp { p, q } => write!(f, "(sp{}, sp{}xsp{})", 2 * (p + q), 2 * p, 2 * q),
        }
    }
}

/// An involutive automorphism of `g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "kebab-case")]
pub enum Involution {
    /// `A ↦ −J⁻¹AᵀJ` on `gl_n`.
    OuterByForm(BilinearForm),
    /// `A ↦ DAD` with `D² = 1`.
    InnerByConjugation(RationalMatrix),
}

impl Involution {
    pub fn apply(&self, a: &RationalMatrix) -> RationalMatrix {
        match self {
            Involution::OuterByForm(form) => form.sigma(a),
            Involution::InnerByConjugation(d) => d.mul(a).mul(d),
        }
    }
}

/// A symmetric pair. The basis of `g` lists the basis of `g₀` first and
/// then the basis of `g₁`.
#[derive(Clone, Debug)]
pub struct SymmetricPair {
    family: Family,
    g: MatrixLieAlgebra,
    form: Option<BilinearForm>,
    sigma: Involution,
    g0: MatrixLieAlgebra,
    g1: MatrixSpace,
}

impl SymmetricPair {
    /// The pair of a family in its standard coordinates.
    pub fn standard(family: Family) -> Result<Self> {
        family.validate()?;
        let n = family.ambient();
        let signs = |plus: usize, minus: usize| {
            let d: Vec<Rational> =
                (0..plus).map(|_| Rational::one()).chain((0..minus).map(|_| Rational::from(-1))).collect();
            RationalMatrix::diagonal(&d)
        };
        match family {
            Family::GlSo { .. } => Self::outer(family, BilinearForm::standard_symmetric(n)),
            Family::GlSp { .. } => Self::outer(family, BilinearForm::standard_skew(n)?),
            Family::SpGl { n: m } => Self::inner(family, Some(BilinearForm::standard_skew(n)?), signs(m, m)),
            Family::SoGl { n: m } => Self::inner(family, Some(BilinearForm::standard_symmetric(n)), signs(m, m)),
            Family::GlGl { p, q } => Self::inner(family, None, signs(p, q)),
            Family::SoSo { p, q } => {
                let j = BilinearForm::standard_symmetric(p).direct_sum(&BilinearForm::standard_symmetric(q))?;
                Self::inner(family, Some(j), signs(p, q))
            }
            Family::SpSp { p, q } => {
                let j = BilinearForm::standard_skew(2 * p)?.direct_sum(&BilinearForm::standard_skew(2 * q)?)?;
                Self::inner(family, Some(j), signs(2 * p, 2 * q))
            }
        }
    }

    /// `(gl_n, so(J))` or `(gl_n, sp(J))` with `σ(A) = −J⁻¹AᵀJ`.
    pub fn outer(family: Family, form: BilinearForm) -> Result<Self> {
        let n = form.dim();
        let g0 = MatrixLieAlgebra::new_unchecked_closure(
            format!("{}{n}", if form.kind() == FormKind::Symmetric { "so" } else { "sp" }),
            n,
            form.isometry_basis(),
        )?;
        let g1 = MatrixSpace::new(n, form.self_adjoint_basis())?;
        Self::assemble(family, format!("gl{n}"), None, Involution::OuterByForm(form), g0, g1)
    }

    /// Inner pair on `gl_n` (no form) or on `so(J)`/`sp(J)`, with `σ = Ad D`.
    pub fn inner(family: Family, form: Option<BilinearForm>, d: RationalMatrix) -> Result<Self> {
        let n = d.rows();
        if !d.is_square() || d.mul(&d) != RationalMatrix::identity(n) {
            return Err(Error::Inconsistent("conjugating matrix must square to the identity".into()));
        }
        let g = match &form {
            None => gl(n),
            Some(f) => {
                if f.dim() != n {
                    return Err(Error::Inconsistent("form and involution sizes differ".into()));
                }
                let j = f.matrix();
                let djd = d.transpose().mul(j).mul(&d);
                if djd != *j && djd != j.scale(&Rational::from(-1)) {
                    return Err(Error::Inconsistent("D neither preserves nor negates the form".into()));
                }
                isometry_algebra(f)
            }
        };
        let half = Rational::new(1, 2);
        let (plus, minus): (Vec<_>, Vec<_>) = g
            .basis()
            .iter()
            .map(|b| {
                let s = d.mul(b).mul(&d);
                (b.add(&s).scale(&half), b.sub(&s).scale(&half))
            })
            .unzip();
        let g0s = MatrixSpace::spanned_by(n, plus.into_iter().filter(|m| !m.is_zero()).collect())?;
        let g1 = MatrixSpace::spanned_by(n, minus.into_iter().filter(|m| !m.is_zero()).collect())?;
        let label0 = format!("g0{family}");
        let g0 = MatrixLieAlgebra::new_unchecked_closure(label0, n, g0s.basis().to_vec())?;
        let label = g.label().to_string();
        Self::assemble(family, label, form, Involution::InnerByConjugation(d), g0, g1)
    }

    fn assemble(
        family: Family,
        label: String,
        form: Option<BilinearForm>,
        sigma: Involution,
        g0: MatrixLieAlgebra,
        g1: MatrixSpace,
    ) -> Result<Self> {
        let n = g0.ambient();
        let mut basis = g0.basis().to_vec();
        basis.extend(g1.basis().iter().cloned());
        let g = MatrixLieAlgebra::new_unchecked_closure(label, n, basis)?;
        let pair = SymmetricPair { family, g, form, sigma, g0, g1 };
        pair.certify()?;
        Ok(pair)
    }

    /// `σ² = 1`, `σ` respects brackets on basis pairs, `σ = ±1` on `g₀`/`g₁`,
    /// and the grading inclusions `[g₀,g₀] ⊆ g₀`, `[g₀,g₁] ⊆ g₁`, `[g₁,g₁] ⊆ g₀`.
    pub fn certify(&self) -> Result<()> {
        let minus = Rational::from(-1);
        for b in self.g0.basis() {
            if self.sigma.apply(b) != *b {
                return Err(Error::SelfCheck("σ is not the identity on g0".into()));
            }
        }
        for b in self.g1.basis() {
            if self.sigma.apply(b) != b.scale(&minus) {
                return Err(Error::SelfCheck("σ is not −1 on g1".into()));
            }
        }
        if let Some(f) = &self.form {
            if !self.g.basis().iter().all(|b| f.preserves(b)) {
                return Err(Error::SelfCheck("g does not preserve the form".into()));
            }
        }
        let k0 = self.g0.dim();
        let k = self.g.dim();
        let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
        pairs.par_iter().try_for_each(|&(i, j)| {
            let b = self.g.basis();
            let c = b[i].commutator(&b[j]);
            let ok = match (i < k0, j < k0) {
                (true, true) | (false, false) => self.g0.contains(&c),
                _ => self.g1.contains(&c),
            };
            if ok {
                Ok(())
            } else {
                Err(Error::SelfCheck(format!("grading violated by basis pair ({i}, {j}) of {}", self.family)))
            }
        })?;
        // σ² = 1 and σ[x,y] = [σx,σy] follow from the eigenspace checks and
        // the grading on the basis, which determines σ on all of g.
        Ok(())
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn g(&self) -> &MatrixLieAlgebra {
        &self.g
    }

    pub fn g0(&self) -> &MatrixLieAlgebra {
        &self.g0
    }

    pub fn g1(&self) -> &MatrixSpace {
        &self.g1
    }

    pub fn form(&self) -> Option<&BilinearForm> {
        self.form.as_ref()
    }

    pub fn sigma(&self) -> &Involution {
        &self.sigma
    }

    /// `(G₀ : g₁)`.
    pub fn isotropy_rep(&self) -> Result<Representation> {
        bracket_representation(&self.g0, &self.g1)
    }

    /// `ind(g₀, g₁)` computed on the dual isotropy module and checked
    /// against the classical table.
    pub fn symmetric_rank(&self, cfg: &IndexConfig) -> Result<SymmetricRank> {
        let rep = self.isotropy_rep()?.dual();
        let table = self.family.rank_table();
        let mut computed = index(&rep, cfg)?;
        if computed.index != table && cfg.mode == Mode::Auto {
            computed = index_escalated(&rep, cfg)?;
        }
        if computed.index < table || computed.lower_bound > table || (computed.is_exact() && computed.index != table)
        {
            return Err(Error::SelfCheck(format!(
                "{}: computed rank in [{}, {}] but the table gives {table}",
                self.family, computed.lower_bound, computed.index
            )));
        }
        Ok(SymmetricRank { table, computed })
    }

    /// `g_e = g_{e,0} ⊕ g_{e,1}` for nilpotent `e ∈ g₁`.
    pub fn graded_centralizer(&self, e: &RationalMatrix) -> Result<GradedCentralizer> {
        if !self.g1.contains(e) {
            return Err(Error::Precondition("e is not in g1".into()));
        }
        if !is_nilpotent(e) {
            return Err(Error::Precondition("e is not nilpotent".into()));
        }
        let n = self.g.ambient();
        // ad e maps g₀ → g₁ and g₁ → g₀; kernels are taken in those coordinates.
        let ad_cols = |from: &[RationalMatrix], to: &(dyn Fn(&RationalMatrix) -> Result<Vector> + Sync), rows: usize| {
            let cols = from.par_iter().map(|b| to(&e.commutator(b))).collect::<Result<Vec<_>>>()?;
            Ok::<_, Error>(RationalMatrix::from_columns(rows, &cols))
        };
        let m0 = ad_cols(self.g0.basis(), &|m| self.g1.coords(m), self.g1.dim())?;
        let m1 = ad_cols(self.g1.basis(), &|m| self.g0.coords(m), self.g0.dim())?;
        let ge0_basis: Vec<RationalMatrix> = m0.kernel_basis().iter().map(|c| self.g0.element(c)).collect();
        let ge1_basis: Vec<RationalMatrix> = m1.kernel_basis().iter().map(|c| self.g1.element(c)).collect();
        let ge0 = MatrixLieAlgebra::new(format!("g0_e{}", self.family), n, ge0_basis)?;
        let ge1 = MatrixSpace::new(n, ge1_basis)?;
        let rep = bracket_representation(&ge0, &ge1)?;
        Ok(GradedCentralizer { e: e.clone(), ge0, ge1, rep })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricRank {
    pub table: usize,
    pub computed: IndexReport,
}

#[derive(Clone, Debug)]
pub struct GradedCentralizer {
    pub e: RationalMatrix,
    pub ge0: MatrixLieAlgebra,
    pub ge1: MatrixSpace,
    /// The bracket action of `g_{e,0}` on `g_{e,1}`.
    pub rep: Representation,
}

impl GradedCentralizer {
    pub fn dim(&self) -> usize {
        self.ge0.dim() + self.ge1.dim()
    }
}

#[derive(Serialize)]
struct PairRepr<'a> {
    family: &'static str,
    params: BTreeMap<&'static str, usize>,
    g0: &'a MatrixLieAlgebra,
    g1: &'a [RationalMatrix],
    sigma: &'a Involution,
}

impl Serialize for SymmetricPair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PairRepr {
            family: self.family.tag(),
            params: self.family.params(),
            g0: &self.g0,
            g1: self.g1.basis(),
            sigma: &self.sigma,
        }
        .serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(f: Family) -> (usize, usize) {
        let p = SymmetricPair::standard(f).unwrap();
        (p.g0().dim(), p.g1().dim())
    }

    #[test]
    fn standard_dimensions() {
        assert_eq!(dims(Family::GlSo { n: 3 }), (3, 6));
        assert_eq!(dims(Family::GlSp { n: 2 }), (10, 6));
        assert_eq!(dims(Family::SpGl { n: 2 }), (4, 6));
        assert_eq!(dims(Family::SoGl { n: 4 }), (16, 12));
        assert_eq!(dims(Family::GlGl { p: 3, q: 4 }), (25, 24));
        assert_eq!(dims(Family::SoSo { p: 3, q: 2 }), (4, 6));
        assert_eq!(dims(Family::SpSp { p: 1, q: 2 }), (13, 8));
    }

    #[test]
    fn closed_form_g0_dimensions() {
        for f in [
            Family::GlSo { n: 4 },
            Family::GlSp { n: 2 },
            Family::SpGl { n: 3 },
            Family::SoGl { n: 3 },
            Family::GlGl { p: 2, q: 3 },
            Family::SoSo { p: 4, q: 3 },
            Family::SpSp { p: 2, q: 1 },
        ] {
            assert_eq!(dims(f).0, f.dim_g0(), "{f}");
        }
    }

    #[test]
    fn centre_lies_in_g1_for_outer_pairs() {
        let p = SymmetricPair::standard(Family::GlSo { n: 3 }).unwrap();
        assert!(p.g1().contains(&RationalMatrix::identity(3)));
    }

    #[test]
    fn ranks_match_the_table() {
        let cfg = IndexConfig::default();
        for f in [Family::GlSo { n: 4 }, Family::SpGl { n: 3 }, Family::SoGl { n: 4 }, Family::GlGl { p: 2, q: 3 }] {
            let p = SymmetricPair::standard(f).unwrap();
            assert_eq!(p.symmetric_rank(&cfg).unwrap().computed.index, f.rank_table(), "{f}");
        }
    }

    #[test]
    fn centralizer_of_zero() {
        let p = SymmetricPair::standard(Family::SpGl { n: 2 }).unwrap();
        let c = p.graded_centralizer(&RationalMatrix::zeros(4, 4)).unwrap();
        assert_eq!((c.ge0.dim(), c.ge1.dim()), (4, 6));
    }
}

//! Constructors and validators for the published unique range set
//! polynomial families.
//!
//! Every constructor checks each side condition of its family exactly and
//! records the outcome in `checked_conditions`; a failed condition becomes a
//! named [`Violation`]. Simple zeros are always verified through
//! `gcd(P, P') = 1`, never assumed.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{
    binomial, critical_value_resultant, poly_gcd, squarefree_decomposition, squarefree_part,
    GaussRat, Poly,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyId {
    LiYang,
    An,
    FrankReinders,
    Alzahary,
    Bcj,
    Bc,
    AnHoa,
}

impl FamilyId {
    pub const ALL: [FamilyId; 7] = [
        FamilyId::LiYang,
        FamilyId::An,
        FamilyId::FrankReinders,
        FamilyId::Alzahary,
        FamilyId::Bcj,
        FamilyId::Bc,
        FamilyId::AnHoa,
    ];

    /// Stable string id used on the command line.
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyId::LiYang => "li-yang",
            FamilyId::An => "an",
            FamilyId::FrankReinders => "frank-reinders",
            FamilyId::Alzahary => "alzahary",
            FamilyId::Bcj => "bcj",
            FamilyId::Bc => "bc",
            FamilyId::AnHoa => "an-hoa",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| format!("unknown family '{s}'"))
    }
}

/// Function class a unique range set claim is made for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Mode {
    Meromorphic,
    Entire,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Meromorphic => "mero",
            Mode::Entire => "entire",
        }
    }
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mero" | "meromorphic" => Ok(Mode::Meromorphic),
            "entire" => Ok(Mode::Entire),
            _ => Err(format!("unknown mode '{s}' (expected mero or entire)")),
        }
    }
}

/// Degree threshold used for the `z^n + a z^(n-m) + b` family, which is
/// quoted with two different bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ThresholdRule {
    /// `n > 2m + 10` (meromorphic), 15-element minimum.
    LiYang15,
    /// `n > 2m + 8` (meromorphic), 13-element minimum.
    Yi13,
}

impl FromStr for ThresholdRule {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "liyang15" | "li-yang-15" => Ok(ThresholdRule::LiYang15),
            "yi13" | "yi-13" => Ok(ThresholdRule::Yi13),
            _ => Err(format!("unknown threshold rule '{s}' (expected liyang15 or yi13)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Unevaluated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckedCondition {
    pub name: String,
    pub status: CheckStatus,
    pub evidence: String,
}

impl CheckedCondition {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ViolationKind {
    DegreeTooSmall,
    CoefficientExcluded,
    ZeroParameter,
    NotCoprime,
    MultipleRoots,
    InvalidParameter,
    DegreeMismatch,
    ClaimMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub condition: String,
    pub evidence: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("{family}: {} condition(s) violated: {}", violations.len(), violation_names(violations))]
    Validation {
        family: FamilyId,
        violations: Vec<Violation>,
    },
    #[error("invalid transform: {0}")]
    InvalidTransform(String),
    #[error("internal identity failed for {family}: {detail}")]
    ConstructionBug { family: FamilyId, detail: String },
}

fn violation_names(v: &[Violation]) -> String {
    v.iter()
        .map(|v| format!("{} ({:?})", v.condition, v.kind))
        .collect::<Vec<_>>()
        .join(", ")
}

impl FamilyError {
    pub fn violations(&self) -> &[Violation] {
        match self {
            FamilyError::Validation { violations, .. } => violations,
            _ => &[],
        }
    }

    pub fn has_kind(&self, kind: ViolationKind) -> bool {
        self.violations().iter().any(|v| v.kind == kind)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Scalar(#[serde(serialize_with = "ser_display")] GaussRat),
    Text(String),
}

fn ser_display<S: serde::Serializer>(v: &GaussRat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(n) => write!(f, "{n}"),
            ParamValue::Scalar(c) => write!(f, "{c}"),
            ParamValue::Text(t) => f.write_str(t),
        }
    }
}

/// A validated member of one of the families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    pub family: FamilyId,
    /// Parameters in declaration order.
    pub params: Vec<(String, ParamValue)>,
    pub poly: Poly,
    pub mode: Mode,
    pub checked_conditions: Vec<CheckedCondition>,
    /// Number of distinct zeros of `P'`.
    pub k: usize,
    /// Multiplicities of the distinct zeros of `P'`, ascending.
    pub critical_multiplicities: Vec<usize>,
    /// Whether `P` takes distinct values at distinct critical points.
    pub separated: bool,
    /// Smallest cardinality published for this family in this mode.
    pub published_elements: Option<usize>,
}

impl FamilyInstance {
    pub fn degree(&self) -> usize {
        self.poly.deg()
    }

    pub fn param(&self, name: &str) -> Option<&ParamValue> {
        self.params.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    pub fn condition(&self, name: &str) -> Option<&CheckedCondition> {
        self.checked_conditions.iter().find(|c| c.name == name)
    }
}

/// Critical data of `p`: `(k, multiplicities with repetition, separated)`.
pub(crate) fn critical_summary(p: &Poly) -> (usize, Vec<usize>, bool) {
    let dp = p.derivative();
    if dp.is_zero() || dp.is_constant() {
        return (0, Vec::new(), true);
    }
    let strata = squarefree_decomposition(&dp).expect("nonzero derivative");
    let mut mults = Vec::new();
    for (f, m) in &strata {
        mults.extend(std::iter::repeat_n(*m, f.deg()));
    }
    let k = mults.len();
    let r = critical_value_resultant(p).expect("degree at least 2");
    let distinct_values = squarefree_part(&r).expect("resultant nonzero").deg();
    (k, mults, distinct_values == k)
}

pub(crate) fn has_simple_zeros(p: &Poly) -> bool {
    poly_gcd(p, &p.derivative()).map(|g| g.is_one()).unwrap_or(false)
}

struct Checker {
    family: FamilyId,
    conditions: Vec<CheckedCondition>,
    violations: Vec<Violation>,
}

impl Checker {
    fn new(family: FamilyId) -> Self {
        Checker {
            family,
            conditions: Vec::new(),
            violations: Vec::new(),
        }
    }

    fn check(&mut self, name: &str, ok: bool, kind: ViolationKind, evidence: impl Into<String>) -> bool {
        let evidence = evidence.into();
        self.conditions.push(CheckedCondition {
            name: name.to_string(),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            evidence: evidence.clone(),
        });
        if !ok {
            self.violations.push(Violation {
                kind,
                condition: name.to_string(),
                evidence,
            });
        }
        ok
    }

    fn unevaluated(&mut self, name: &str, evidence: &str) {
        self.conditions.push(CheckedCondition {
            name: name.to_string(),
            status: CheckStatus::Unevaluated,
            evidence: evidence.to_string(),
        });
    }

    fn nonzero(&mut self, name: &str, value: &GaussRat) -> bool {
        self.check(
            &format!("{name}_nonzero"),
            !value.is_zero(),
            ViolationKind::ZeroParameter,
            format!("{name} = {value}"),
        )
    }

    fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    fn fail(self) -> FamilyError {
        FamilyError::Validation {
            family: self.family,
            violations: self.violations,
        }
    }

    /// Simple zeros plus critical structure; consumes the checker into an
    /// instance when everything passed.
    fn finish(
        mut self,
        poly: Poly,
        params: Vec<(String, ParamValue)>,
        mode: Mode,
        expected_k: Option<usize>,
        published_elements: Option<usize>,
    ) -> Result<FamilyInstance, FamilyError> {
        let simple = has_simple_zeros(&poly);
        self.check(
            "simple_zeros",
            simple,
            ViolationKind::MultipleRoots,
            if simple { "gcd(P, P') = 1" } else { "gcd(P, P') is nonconstant" },
        );
        let (k, mults, separated) = critical_summary(&poly);
        if let Some(expected) = expected_k {
            self.check(
                "critical_count",
                k == expected,
                ViolationKind::ClaimMismatch,
                format!("P' has k = {k} distinct zeros (expected {expected})"),
            );
        }
        self.conditions.push(CheckedCondition {
            name: "separation".into(),
            status: if separated { CheckStatus::Pass } else { CheckStatus::Fail },
            evidence: "distinct critical points have distinct critical values".into(),
        });
        if !self.ok() {
            return Err(self.fail());
        }
        let mut sorted = mults;
        sorted.sort_unstable();
        Ok(FamilyInstance {
            family: self.family,
            params,
            poly,
            mode,
            checked_conditions: self.conditions,
            k,
            critical_multiplicities: sorted,
            separated,
            published_elements,
        })
    }
}

fn int(n: i64) -> GaussRat {
    GaussRat::from_int(n)
}

fn frac(n: i64, d: i64) -> GaussRat {
    GaussRat::ratio(n, d)
}

fn gcd_u(a: usize, b: usize) -> usize {
    a.gcd(&b)
}

/// `z^n + a z^(n-m) + b`.
pub fn li_yang_poly(n: usize, m: usize, a: &GaussRat, b: &GaussRat) -> Poly {
    Poly::from_terms([(n, GaussRat::one()), (n - m, a.clone()), (0, b.clone())])
}

/// `z^n + a z^(n-m) + b z^(n-2m) + c`.
pub fn an_poly(n: usize, m: usize, a: &GaussRat, b: &GaussRat, c: &GaussRat) -> Poly {
    Poly::from_terms([
        (n, GaussRat::one()),
        (n - m, a.clone()),
        (n - 2 * m, b.clone()),
        (0, c.clone()),
    ])
}

/// `((n-1)(n-2)/2) z^n − n(n−2) z^(n−1) + (n(n−1)/2) z^(n−2) − c`.
pub fn frank_reinders_poly(n: usize, c: &GaussRat) -> Poly {
    let ni = n as i64;
    Poly::from_terms([
        (n, frac((ni - 1) * (ni - 2), 2)),
        (n - 1, int(-ni * (ni - 2))),
        (n - 2, frac(ni * (ni - 1), 2)),
        (0, -c),
    ])
}

/// `a z^n − n(n−1) z^2 + 2n(n−2) b z − (n−1)(n−2) b^2`.
pub fn alzahary_poly(n: usize, a: &GaussRat, b: &GaussRat) -> Poly {
    let ni = n as i64;
    Poly::from_terms([
        (n, a.clone()),
        (2, int(-ni * (ni - 1))),
        (1, &int(2 * ni * (ni - 2)) * b),
        (0, &int(-(ni - 1) * (ni - 2)) * &(b * b)),
    ])
}

/// `z^n − (2n/(n−m)) z^(n−m) + (n/(n−2m)) z^(n−2m) + c`.
pub fn bcj_poly(n: usize, m: usize, c: &GaussRat) -> Poly {
    let (ni, mi) = (n as i64, m as i64);
    Poly::from_terms([
        (n, GaussRat::one()),
        (n - m, frac(-2 * ni, ni - mi)),
        (n - 2 * m, frac(ni, ni - 2 * mi)),
        (0, c.clone()),
    ])
}

/// The double binomial sum `Q` whose derivative is `(z−a)^n (z−b)^m`.
pub fn bc_q(m: usize, n: usize, a: &GaussRat, b: &GaussRat) -> Poly {
    let mut terms = Vec::new();
    let top = n + m + 1;
    for i in 0..=m {
        for j in 0..=n {
            let e = top - i - j;
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            let c = binomial(m as u64, i as u64) * binomial(n as u64, j as u64) * sign;
            let coeff = GaussRat::from_rational(BigRational::new(c, (e as i64).into()));
            terms.push((e, &(&coeff * &a.pow(j as u32)) * &b.pow(i as u32)));
        }
    }
    Poly::from_terms(terms)
}

/// `z^n + (a z + b)^n + c`.
pub fn an_hoa_poly(n: usize, a: &GaussRat, b: &GaussRat, c: &GaussRat) -> Poly {
    let lin = Poly::new(vec![b.clone(), a.clone()]);
    &(&Poly::monomial(GaussRat::one(), n) + &lin.pow(n as u32)) + &Poly::constant(c.clone())
}

fn scalar(name: &str, v: &GaussRat) -> (String, ParamValue) {
    (name.to_string(), ParamValue::Scalar(v.clone()))
}

fn integer(name: &str, v: usize) -> (String, ParamValue) {
    (name.to_string(), ParamValue::Int(v as i64))
}

/// `z^n + a z^(n−m) + b` with the degree threshold chosen by `rule`.
pub fn construct_li_yang(
    n: usize,
    m: usize,
    a: &GaussRat,
    b: &GaussRat,
    mode: Mode,
    rule: ThresholdRule,
) -> Result<FamilyInstance, FamilyError> {
    let mut ck = Checker::new(FamilyId::LiYang);
    ck.nonzero("a", a);
    ck.nonzero("b", b);
    let m_min = match mode {
        Mode::Meromorphic => 2,
        Mode::Entire => 1,
    };
    ck.check(
        "m_lower_bound",
        m >= m_min,
        ViolationKind::InvalidParameter,
        format!("m = {m}, need m >= {m_min}"),
    );
    let threshold = match (mode, rule) {
        (Mode::Meromorphic, ThresholdRule::LiYang15) => 2 * m + 10,
        (Mode::Meromorphic, ThresholdRule::Yi13) => 2 * m + 8,
        (Mode::Entire, _) => 2 * m + 4,
    };
    ck.check(
        "degree_threshold",
        n > threshold,
        ViolationKind::DegreeTooSmall,
        format!("n = {n}, need n > {threshold} ({rule:?})"),
    );
    if m == 0 || m >= n {
        return Err(ck.fail());
    }
    ck.check(
        "coprime_n_n_minus_m",
        gcd_u(n, n - m) == 1,
        ViolationKind::NotCoprime,
        format!("gcd({n}, {}) = {}", n - m, gcd_u(n, n - m)),
    );
    if !ck.ok() {
        return Err(ck.fail());
    }
    let published = match (mode, rule) {
        (Mode::Meromorphic, ThresholdRule::LiYang15) => 15,
        (Mode::Meromorphic, ThresholdRule::Yi13) => 13,
        (Mode::Entire, _) => 7,
    };
    let params = vec![
        integer("n", n),
        integer("m", m),
        scalar("a", a),
        scalar("b", b),
        (
            "rule".to_string(),
            ParamValue::Text(match rule {
                ThresholdRule::LiYang15 => "liyang15".into(),
                ThresholdRule::Yi13 => "yi13".into(),
            }),
        ),
    ];
    ck.finish(li_yang_poly(n, m, a, b), params, mode, Some(m + 1), Some(published))
}

/// `z^n + a z^(n−m) + b z^(n−2m) + c`.
pub fn construct_an(
    n: usize,
    m: usize,
    a: &GaussRat,
    b: &GaussRat,
    c: &GaussRat,
) -> Result<FamilyInstance, FamilyError> {
    let mut ck = Checker::new(FamilyId::An);
    ck.nonzero("a", a);
    ck.nonzero("b", b);
    ck.nonzero("c", c);
    let a2 = a * a;
    let b4 = &int(4) * b;
    ck.check(
        "a_squared_ne_4b",
        a2 != b4,
        ViolationKind::CoefficientExcluded,
        format!("a^2 = {a2}, 4b = {b4}"),
    );
    ck.check(
        "degree_threshold",
        n > 8 + 4 * m,
        ViolationKind::DegreeTooSmall,
        format!("n = {n}, need n > {}", 8 + 4 * m),
    );
    if m == 0 || 2 * m >= n {
        ck.check("m_range", false, ViolationKind::InvalidParameter, format!("need 1 <= m < n/2, m = {m}"));
        return Err(ck.fail());
    }
    ck.check(
        "coprime_n_2m",
        gcd_u(n, 2 * m) == 1,
        ViolationKind::NotCoprime,
        format!("gcd({n}, {}) = {}", 2 * m, gcd_u(n, 2 * m)),
    );
    if !ck.ok() {
        return Err(ck.fail());
    }
    let params = vec![integer("n", n), integer("m", m), scalar("a", a), scalar("b", b), scalar("c", c)];
    ck.finish(an_poly(n, m, a, b, c), params, Mode::Meromorphic, None, Some(13))
}

pub fn construct_frank_reinders(n: usize, c: &GaussRat) -> Result<FamilyInstance, FamilyError> {
    let mut ck = Checker::new(FamilyId::FrankReinders);
    ck.check(
        "degree_threshold",
        n >= 11,
        ViolationKind::DegreeTooSmall,
        format!("n = {n}, need n >= 11"),
    );
    ck.check(
        "c_not_0_or_1",
        !c.is_zero() && !c.is_one(),
        ViolationKind::CoefficientExcluded,
        format!("c = {c}"),
    );
    if !ck.ok() {
        return Err(ck.fail());
    }
    let params = vec![integer("n", n), scalar("c", c)];
    ck.finish(frank_reinders_poly(n, c), params, Mode::Meromorphic, Some(2), Some(11))
}

pub fn construct_alzahary(n: usize, a: &GaussRat, b: &GaussRat) -> Result<FamilyInstance, FamilyError> {
    let mut ck = Checker::new(FamilyId::Alzahary);
    ck.nonzero("a", a);
    ck.nonzero("b", b);
    ck.check(
        "degree_threshold",
        n >= 11,
        ViolationKind::DegreeTooSmall,
        format!("n = {n}, need n >= 11"),
    );
    if n >= 2 {
        let abn = a * &b.pow(n as u32 - 2);
        ck.check(
            "a_b_pow_n_minus_2_not_1_or_2",
            !abn.is_one() && abn != int(2),
            ViolationKind::CoefficientExcluded,
            format!("a*b^(n-2) = {abn}"),
        );
    }
    if !ck.ok() {
        return Err(ck.fail());
    }
    let params = vec![integer("n", n), scalar("a", a), scalar("b", b)];
    ck.finish(alzahary_poly(n, a, b), params, Mode::Meromorphic, None, Some(11))
}

/// The constant excluded for the `bcj` family: `−(1 − 2n/(n−m) + n/(n−2m))/2`.
pub fn bcj_excluded_constant(n: usize, m: usize) -> GaussRat {
    let (ni, mi) = (n as i64, m as i64);
    let s = &(&GaussRat::one() - &frac(2 * ni, ni - mi)) + &frac(ni, ni - 2 * mi);
    -(&s * &frac(1, 2))
}

pub fn construct_bcj(n: usize, m: usize, c: &GaussRat) -> Result<FamilyInstance, FamilyError> {
    let mut ck = Checker::new(FamilyId::Bcj);
    ck.check("m_lower_bound", m >= 1, ViolationKind::InvalidParameter, format!("m = {m}, need m >= 1"));
    let bound = (2 * m + 8).max(4 * m + 1);
    ck.check(
        "degree_threshold",
        n > bound,
        ViolationKind::DegreeTooSmall,
        format!("n = {n}, need n > max(2m+8, 4m+1) = {bound}"),
    );
    ck.nonzero("c", c);
    if !ck.ok() {
        return Err(ck.fail());
    }
    let excluded = bcj_excluded_constant(n, m);
    ck.check(
        "c_ne_excluded_constant",
        *c != excluded,
        ViolationKind::CoefficientExcluded,
        format!("c = {c}, excluded {excluded}"),
    );
    let (ni, mi) = (n as i64, m as i64);
    let modulus = frac(2 * mi * mi, (ni - mi) * (ni - 2 * mi)).re;
    let modsq = &modulus * &modulus;
    ck.check(
        "modulus_c_ne_bound",
        c.norm_sqr() != modsq,
        ViolationKind::CoefficientExcluded,
        format!("|c|^2 = {}, excluded |c| = {}", c.norm_sqr(), modulus),
    );
    if !ck.ok() {
        return Err(ck.fail());
    }
    let poly = bcj_poly(n, m, c);
    // P' = n z^(n−2m−1) (z^m − 1)^2
    let zm1 = Poly::from_terms([(m, GaussRat::one()), (0, int(-1))]);
    let expected = &Poly::monomial(int(ni), n - 2 * m - 1) * &zm1.pow(2);
    if poly.derivative() != expected {
        return Err(FamilyError::ConstructionBug {
            family: FamilyId::Bcj,
            detail: "P' != n z^(n-2m-1) (z^m - 1)^2".into(),
        });
    }
    ck.check(
        "derivative_identity",
        true,
        ViolationKind::ClaimMismatch,
        "P' = n z^(n-2m-1) (z^m - 1)^2 coefficientwise",
    );
    let params = vec![integer("n", n), integer("m", m), scalar("c", c)];
    ck.finish(poly, params, Mode::Meromorphic, Some(m + 1), Some(11))
}

pub fn construct_bc(
    m: usize,
    n: usize,
    a: &GaussRat,
    b: &GaussRat,
    c: &GaussRat,
) -> Result<FamilyInstance, FamilyError> {
    let mut ck = Checker::new(FamilyId::Bc);
    ck.check("a_ne_b", a != b, ViolationKind::CoefficientExcluded, format!("a = {a}, b = {b}"));
    ck.nonzero("b", b);
    ck.check(
        "degree_sum",
        m + n > 9,
        ViolationKind::DegreeTooSmall,
        format!("m + n = {}, need > 9", m + n),
    );
    ck.check(
        "max_exponent",
        m.max(n) >= 3,
        ViolationKind::InvalidParameter,
        format!("max(m, n) = {}, need >= 3", m.max(n)),
    );
    ck.check(
        "min_exponent",
        m.min(n) >= 2,
        ViolationKind::InvalidParameter,
        format!("min(m, n) = {}, need >= 2", m.min(n)),
    );
    if !ck.ok() {
        return Err(ck.fail());
    }
    let q = bc_q(m, n, a, b);
    let expected = &Poly::linear(a).pow(n as u32) * &Poly::linear(b).pow(m as u32);
    if q.derivative() != expected {
        return Err(FamilyError::ConstructionBug {
            family: FamilyId::Bc,
            detail: "Q' != (z-a)^n (z-b)^m".into(),
        });
    }
    ck.check(
        "derivative_identity",
        true,
        ViolationKind::ClaimMismatch,
        "Q' = (z-a)^n (z-b)^m coefficientwise",
    );
    let (qa, qb) = (q.eval(a), q.eval(b));
    let mid = &(&qa + &qb) * &frac(1, 2);
    let excluded = [GaussRat::zero(), -&qa, -&qb, -mid];
    ck.check(
        "c_not_excluded",
        !excluded.contains(c),
        ViolationKind::CoefficientExcluded,
        format!(
            "c = {c}, excluded {{{}}}",
            excluded.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")
        ),
    );
    if !ck.ok() {
        return Err(ck.fail());
    }
    let poly = &q + &Poly::constant(c.clone());
    let params = vec![
        integer("m", m),
        integer("n", n),
        scalar("a", a),
        scalar("b", b),
        scalar("c", c),
        integer("degree", n + m + 1),
    ];
    ck.finish(poly, params, Mode::Meromorphic, Some(2), Some(11))
}

pub fn construct_an_hoa(
    n: usize,
    a: &GaussRat,
    b: &GaussRat,
    c: &GaussRat,
) -> Result<FamilyInstance, FamilyError> {
    let mut ck = Checker::new(FamilyId::AnHoa);
    ck.check(
        "degree_threshold",
        n >= 25,
        ViolationKind::DegreeTooSmall,
        format!("n = {n}, need n >= 25"),
    );
    ck.nonzero("a", a);
    ck.nonzero("b", b);
    ck.nonzero("c", c);
    if !ck.ok() {
        return Err(ck.fail());
    }
    let lead = &GaussRat::one() + &a.pow(n as u32);
    ck.check(
        "leading_coefficient_nonzero",
        !lead.is_zero(),
        ViolationKind::DegreeMismatch,
        format!("1 + a^n = {lead}"),
    );
    for name in ["c_ne_b^d/a^d", "a^2d_ne_1", "c_ne_a^d*b^d", "c_ne_(-1)^d*b^d/a^2d", "c_ne_(-1)^d*b^d"] {
        ck.unevaluated(name, "exponent d is undefined; simple zeros are checked directly instead");
    }
    if !ck.ok() {
        return Err(ck.fail());
    }
    let params = vec![integer("n", n), scalar("a", a), scalar("b", b), scalar("c", c)];
    ck.finish(an_hoa_poly(n, a, b, c), params, Mode::Meromorphic, None, Some(25))
}

/// Moves the zero set `S` to `α·S + β`, re-checking the geometric
/// conditions on the new polynomial.
pub fn shift_family(
    inst: &FamilyInstance,
    alpha: &GaussRat,
    beta: &GaussRat,
) -> Result<FamilyInstance, FamilyError> {
    let inv = alpha
        .inv()
        .ok_or_else(|| FamilyError::InvalidTransform("alpha must be nonzero".into()))?;
    let poly = inst
        .poly
        .affine_substitute(&inv, &(-(beta * &inv)))
        .map_err(|e| FamilyError::InvalidTransform(e.to_string()))?;
    let mut ck = Checker::new(inst.family);
    ck.conditions = inst
        .checked_conditions
        .iter()
        .filter(|c| !matches!(c.name.as_str(), "simple_zeros" | "critical_count" | "separation"))
        .cloned()
        .collect();
    let (k, mut mults, separated) = critical_summary(&poly);
    mults.sort_unstable();
    ck.check(
        "shift_preserves_k",
        k == inst.k,
        ViolationKind::ClaimMismatch,
        format!("k = {k} (original {})", inst.k),
    );
    ck.check(
        "shift_preserves_multiplicities",
        mults == inst.critical_multiplicities,
        ViolationKind::ClaimMismatch,
        format!("critical multiplicities {mults:?}"),
    );
    ck.check(
        "shift_preserves_separation",
        separated == inst.separated,
        ViolationKind::ClaimMismatch,
        format!("separation {separated} (original {})", inst.separated),
    );
    let mut params = inst.params.clone();
    params.push(scalar("alpha", alpha));
    params.push(scalar("beta", beta));
    ck.finish(poly, params, inst.mode, Some(inst.k), inst.published_elements)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    #[test]
    fn frank_reinders_examples() {
        let fr = construct_frank_reinders(11, &g(3)).unwrap();
        assert_eq!(fr.degree(), 11);
        assert_eq!(fr.k, 2);
        assert_eq!(fr.critical_multiplicities, vec![2, 8]);
        assert!(fr.separated);
        assert_eq!(fr.published_elements, Some(11));
        let e = construct_frank_reinders(11, &g(1)).unwrap_err();
        assert!(e.has_kind(ViolationKind::CoefficientExcluded));
        let e = construct_frank_reinders(10, &g(3)).unwrap_err();
        assert!(e.has_kind(ViolationKind::DegreeTooSmall));
        // P(1) - P(0) = 1
        let p = &fr.poly;
        assert_eq!(&p.eval(&g(1)) - &p.eval(&g(0)), g(1));
    }

    #[test]
    fn li_yang_examples() {
        let ly = construct_li_yang(13, 2, &g(1), &g(1), Mode::Meromorphic, ThresholdRule::Yi13).unwrap();
        assert_eq!(ly.k, 3);
        assert_eq!(ly.published_elements, Some(13));
        let e = construct_li_yang(12, 3, &g(1), &g(1), Mode::Entire, ThresholdRule::Yi13).unwrap_err();
        assert!(e.has_kind(ViolationKind::NotCoprime));
        assert!(construct_li_yang(15, 2, &g(1), &g(1), Mode::Meromorphic, ThresholdRule::LiYang15).is_ok());
        let e = construct_li_yang(13, 2, &g(1), &g(1), Mode::Meromorphic, ThresholdRule::LiYang15).unwrap_err();
        assert!(e.has_kind(ViolationKind::DegreeTooSmall));
        let e = construct_li_yang(13, 1, &g(1), &g(1), Mode::Meromorphic, ThresholdRule::Yi13).unwrap_err();
        assert!(e.has_kind(ViolationKind::InvalidParameter));
    }

    #[test]
    fn an_examples() {
        assert!(construct_an(13, 1, &g(1), &g(1), &g(1)).is_ok());
        let e = construct_an(13, 1, &g(2), &g(1), &g(1)).unwrap_err();
        assert!(e.has_kind(ViolationKind::CoefficientExcluded));
        let e = construct_an(14, 1, &g(1), &g(1), &g(1)).unwrap_err();
        assert!(e.has_kind(ViolationKind::NotCoprime));
    }

    #[test]
    fn alzahary_examples() {
        let al = construct_alzahary(11, &g(3), &g(1)).unwrap();
        assert!(al.condition("simple_zeros").unwrap().passed());
        let e = construct_alzahary(11, &g(2), &g(1)).unwrap_err();
        assert!(e.has_kind(ViolationKind::CoefficientExcluded));
        let e = construct_alzahary(10, &g(3), &g(1)).unwrap_err();
        assert!(e.has_kind(ViolationKind::DegreeTooSmall));
    }

    #[test]
    fn bcj_examples() {
        let b = construct_bcj(11, 1, &g(5)).unwrap();
        assert_eq!(b.k, 2);
        assert_eq!(b.critical_multiplicities, vec![2, 8]);
        // |c| = 2m^2/((n-m)(n-2m)) = 2/90
        let e = construct_bcj(11, 1, &GaussRat::ratio(1, 45)).unwrap_err();
        assert!(e.has_kind(ViolationKind::CoefficientExcluded));
        let on_circle = GaussRat::new(crate::arith::rat(0, 1), crate::arith::rat(-1, 45));
        assert!(construct_bcj(11, 1, &on_circle).is_err());
        let e = construct_bcj(9, 1, &g(5)).unwrap_err();
        assert!(e.has_kind(ViolationKind::DegreeTooSmall));
        let ex = bcj_excluded_constant(11, 1);
        assert!(construct_bcj(11, 1, &ex).unwrap_err().has_kind(ViolationKind::CoefficientExcluded));
    }

    #[test]
    fn bc_examples() {
        let bc = construct_bc(3, 7, &g(0), &g(1), &g(1)).unwrap();
        assert_eq!(bc.degree(), 11);
        assert_eq!(bc.k, 2);
        let expected = &Poly::monomial(g(1), 7) * &Poly::from_ints(&[-1, 1]).pow(3);
        assert_eq!(bc.poly.derivative(), expected);
        assert!(construct_bc(3, 7, &g(1), &g(1), &g(1)).unwrap_err().has_kind(ViolationKind::CoefficientExcluded));
        let qa = bc_q(3, 7, &g(0), &g(1)).eval(&g(1));
        assert_eq!(qa, GaussRat::ratio(-1, 1320));
        let e = construct_bc(3, 7, &g(0), &g(1), &-qa).unwrap_err();
        assert!(e.has_kind(ViolationKind::CoefficientExcluded));
    }

    #[test]
    fn an_hoa_examples() {
        let e = construct_an_hoa(24, &g(1), &g(1), &g(1)).unwrap_err();
        assert!(e.has_kind(ViolationKind::DegreeTooSmall));
        let e = construct_an_hoa(25, &g(1), &g(0), &g(1)).unwrap_err();
        assert!(e.has_kind(ViolationKind::ZeroParameter));
        let ah = construct_an_hoa(25, &g(1), &g(1), &g(1)).unwrap();
        assert_eq!(ah.degree(), 25);
        assert_eq!(ah.published_elements, Some(25));
        assert_eq!(
            ah.checked_conditions.iter().filter(|c| c.status == CheckStatus::Unevaluated).count(),
            5
        );
        // a = -1, n odd: the leading terms cancel
        let e = construct_an_hoa(25, &g(-1), &g(1), &g(1)).unwrap_err();
        assert!(e.has_kind(ViolationKind::DegreeMismatch));
    }

    #[test]
    fn shift_reproduces_translated_forms() {
        let ly = construct_li_yang(13, 2, &g(1), &g(1), Mode::Meromorphic, ThresholdRule::Yi13).unwrap();
        let beta = GaussRat::complex(2, -1);
        let sh = shift_family(&ly, &GaussRat::one(), &beta).unwrap();
        let t = Poly::linear(&beta);
        let expected = &(&t.pow(13) + &t.pow(11)) + &Poly::one();
        assert_eq!(sh.poly, expected);
        assert_eq!(sh.k, 3);
        let same = shift_family(&ly, &GaussRat::one(), &GaussRat::zero()).unwrap();
        assert_eq!(same.poly, ly.poly);
        assert!(matches!(
            shift_family(&ly, &GaussRat::zero(), &beta),
            Err(FamilyError::InvalidTransform(_))
        ));
    }
}

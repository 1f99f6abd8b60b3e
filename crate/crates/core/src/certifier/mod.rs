//! Hypothesis checking for unique-range-set theorems.
//!
//! Every check is exact: critical points come from the squarefree
//! decomposition of `P'`, separation of critical values from the
//! squarefree degree of the critical-value resultant, and uniqueness
//! polynomials are never decided, only refuted by an affine symmetry or
//! asserted by the caller.

mod symmetry;

pub use symmetry::{
    affine_symmetry, holds_exactly, root_centroid, support_gcd, Generator, SymmetryKind,
    SymmetryReport, Verification,
};

use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{
    critical_value_resultant, poly_gcd, squarefree_decomposition, squarefree_part, GaussRat, Poly,
};
use crate::families::Mode;
use crate::roots::{isolate_roots, IsolationError, IsolationOptions, RootCluster};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertifyError {
    #[error("polynomial of degree {got} given; at least {needed} required")]
    DegreeTooSmall { needed: usize, got: usize },
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error(transparent)]
    Isolation(#[from] IsolationError),
}

/// Critical points of `P` and the separation of their values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalStructure {
    /// Number of distinct zeros of `P'`.
    pub k: usize,
    /// Zeros of `P'`, each with its multiplicity `q_j`.
    pub clusters: Vec<RootCluster>,
    /// `(squarefree factor, multiplicity)` strata of `P'`.
    pub strata: Vec<(Poly, usize)>,
    /// Distinct critical points have distinct critical values.
    pub separation: bool,
    /// Every `q_j ≥ 2`.
    pub no_simple_critical_zero: bool,
}

impl CriticalStructure {
    /// Multiplicities `q_j` in ascending order.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut q: Vec<usize> = self.clusters.iter().map(|c| c.multiplicity).collect();
        q.sort_unstable();
        q
    }
}

/// Exact critical data without root isolation.
#[derive(Debug, Clone, PartialEq, Eq)]
struct CriticalData {
    k: usize,
    strata: Vec<(Poly, usize)>,
    distinct_values: usize,
    separation: bool,
}

impl CriticalData {
    fn of(p: &Poly) -> Result<Self, CertifyError> {
        let n = p.deg();
        if n < 2 {
            return Err(CertifyError::DegreeTooSmall { needed: 2, got: n });
        }
        let strata = squarefree_decomposition(&p.derivative()).expect("nonconstant derivative");
        let k = strata.iter().map(|(f, _)| f.deg()).sum();
        let r = critical_value_resultant(p).expect("degree at least 2");
        let distinct = squarefree_part(&r).expect("nonzero resultant").deg();
        Ok(CriticalData {
            k,
            strata,
            distinct_values: distinct,
            separation: distinct == k,
        })
    }

    fn multiplicities(&self) -> Vec<usize> {
        let mut q: Vec<usize> = self
            .strata
            .iter()
            .flat_map(|(f, m)| std::iter::repeat_n(*m, f.deg()))
            .collect();
        q.sort_unstable();
        q
    }

    fn no_simple_critical_zero(&self) -> bool {
        self.strata.iter().all(|(_, m)| *m >= 2)
    }
}

/// Critical structure of `p` (degree ≥ 2) with default isolation options.
pub fn critical_structure(p: &Poly) -> Result<CriticalStructure, CertifyError> {
    critical_structure_with(p, &IsolationOptions::default())
}

pub fn critical_structure_with(
    p: &Poly,
    opts: &IsolationOptions,
) -> Result<CriticalStructure, CertifyError> {
    let data = CriticalData::of(p)?;
    let clusters = isolate_roots(&p.derivative(), opts)?;
    let no_simple = data.no_simple_critical_zero();
    Ok(CriticalStructure {
        k: data.k,
        clusters,
        strata: data.strata,
        separation: data.separation,
        no_simple_critical_zero: no_simple,
    })
}

/// Separation decided through the minimal polynomial of `P` acting on
/// `ℚ(i)[z]/(s)`, `s` the squarefree part of `P'`: that algebra is a product
/// of fields indexed by the critical points, so the minimal polynomial of
/// `P mod s` has one simple root per distinct critical value.
pub fn separation_by_minimal_polynomial(p: &Poly) -> Result<bool, CertifyError> {
    let n = p.deg();
    if n < 2 {
        return Err(CertifyError::DegreeTooSmall { needed: 2, got: n });
    }
    let s = squarefree_part(&p.derivative()).expect("nonzero derivative");
    let k = s.deg();
    let r = p.rem(&s);
    let mut rows = Vec::with_capacity(k);
    let mut power = Poly::one();
    for _ in 0..k {
        rows.push((0..k).map(|j| power.coeff(j)).collect::<Vec<_>>());
        power = (&power * &r).rem(&s);
    }
    Ok(rank(rows) == k)
}

fn rank(mut rows: Vec<Vec<GaussRat>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] * &inv;
            for c in col..cols {
                let delta = &factor * &rows[rank][c];
                rows[r][c] -= &delta;
            }
        }
        rank += 1;
    }
    rank
}

/// Outcome of the gap-form shape test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapForm {
    pub pass: bool,
    pub n: usize,
    /// Largest middle exponent `m < n` with a nonzero coefficient.
    pub m: Option<usize>,
    /// Witness `p ∈ [2, m]` with `a_p ≠ 0` and `gcd(p, 3) = 1`.
    pub p: Option<usize>,
    pub failures: Vec<String>,
}

/// Checks the shape `a_n zⁿ + Σ_{j=2}^{m} a_j z^j + a_0` with `n − m ≥ 3`
/// and some `p ∈ [2, m]`, `a_p a_m ≠ 0`, `gcd(p, 3) = 1`.
pub fn gap_form_check(poly: &Poly) -> GapForm {
    let n = poly.degree().unwrap_or(0);
    let mut failures = Vec::new();
    if poly.degree().is_none() {
        failures.push("zero polynomial".to_string());
    }
    if n >= 2 && !poly.coeff(1).is_zero() {
        failures.push("nonzero z^1 coefficient".to_string());
    }
    let m = (2..n).rev().find(|&j| !poly.coeff(j).is_zero());
    match m {
        None => failures.push("no nonzero middle coefficient of degree >= 2".to_string()),
        Some(m) if n - m < 3 => failures.push(format!("n - m = {} < 3", n - m)),
        Some(_) => {}
    }
    let p = m.and_then(|m| (2..=m).find(|&j| !poly.coeff(j).is_zero() && j.gcd(&3) == 1));
    if m.is_some() && p.is_none() {
        failures.push("no exponent p in [2, m] with a_p != 0 and gcd(p, 3) = 1".to_string());
    }
    GapForm {
        pass: failures.is_empty(),
        n,
        m,
        p,
        failures,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TheoremId {
    #[serde(rename = "Fujimoto_T11_CM")]
    FujimotoCm,
    #[serde(rename = "Fujimoto_Bai_WeakWeight")]
    FujimotoWeakWeight,
    #[serde(rename = "Equiv_Weight2_C21")]
    EquivWeight2,
    #[serde(rename = "Equiv_Weak3_C32")]
    EquivWeak3,
    #[serde(rename = "Equiv_All_C33")]
    EquivAll,
    #[serde(rename = "TwoSet_T42")]
    TwoSetWeight2,
    #[serde(rename = "TwoSet_T43")]
    TwoSetWeight3,
    #[serde(rename = "GapForm_TB")]
    GapForm,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::FujimotoCm,
        TheoremId::FujimotoWeakWeight,
        TheoremId::EquivWeight2,
        TheoremId::EquivWeak3,
        TheoremId::EquivAll,
        TheoremId::TwoSetWeight2,
        TheoremId::TwoSetWeight3,
        TheoremId::GapForm,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::FujimotoCm => "Fujimoto_T11_CM",
            TheoremId::FujimotoWeakWeight => "Fujimoto_Bai_WeakWeight",
            TheoremId::EquivWeight2 => "Equiv_Weight2_C21",
            TheoremId::EquivWeak3 => "Equiv_Weak3_C32",
            TheoremId::EquivAll => "Equiv_All_C33",
            TheoremId::TwoSetWeight2 => "TwoSet_T42",
            TheoremId::TwoSetWeight3 => "TwoSet_T43",
            TheoremId::GapForm => "GapForm_TB",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for TheoremId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown theorem id '{s}'"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub pass: bool,
    pub evidence: String,
}

fn hyp(name: &str, pass: bool, evidence: impl Into<String>) -> Hypothesis {
    Hypothesis {
        name: name.to_string(),
        pass,
        evidence: evidence.into(),
    }
}

/// One theorem checked against one polynomial. The conclusion is present
/// exactly when every hypothesis passed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub theorem_id: TheoremId,
    pub mode: Mode,
    pub hypotheses: Vec<Hypothesis>,
    pub conclusion: Option<String>,
    pub conditional_on: Vec<String>,
}

impl Certificate {
    fn new(
        theorem_id: TheoremId,
        mode: Mode,
        hypotheses: Vec<Hypothesis>,
        conclusion: String,
        conditional_on: Vec<String>,
    ) -> Self {
        let issued = hypotheses.iter().all(|h| h.pass);
        Certificate {
            theorem_id,
            mode,
            hypotheses,
            conclusion: issued.then_some(conclusion),
            conditional_on,
        }
    }

    pub fn passed(&self) -> bool {
        self.conclusion.is_some()
    }

    pub fn hypothesis(&self, name: &str) -> Option<&Hypothesis> {
        self.hypotheses.iter().find(|h| h.name == name)
    }
}

fn ursm(mode: Mode) -> &'static str {
    match mode {
        Mode::Meromorphic => "URSM",
        Mode::Entire => "URSE",
    }
}

fn simple_zeros_hypothesis(p: &Poly) -> Hypothesis {
    let ok = poly_gcd(p, &p.derivative()).map(|g| g.is_one()).unwrap_or(false);
    hyp(
        "simple_zeros",
        ok,
        if ok {
            format!("gcd(P, P') = 1: S has {} elements", p.deg())
        } else {
            "gcd(P, P') is nonconstant: P has a repeated zero".to_string()
        },
    )
}

fn separation_hypothesis(data: Option<&CriticalData>) -> Hypothesis {
    match data {
        Some(d) => hyp(
            "separation",
            d.separation,
            format!(
                "{} distinct critical values at k = {} critical points",
                d.distinct_values, d.k
            ),
        ),
        None => hyp("separation", false, "P' has no zeros"),
    }
}

/// Symmetry-based refutation plus caller assertion.
fn uniqueness_hypothesis(p: &Poly, asserted: bool) -> (Hypothesis, String) {
    if p.deg() < 1 {
        return (
            hyp("uniqueness_polynomial", false, "constant polynomial"),
            "uniqueness-polynomial status not decided".into(),
        );
    }
    let sym = affine_symmetry(p);
    let (refuted, detail) = match &sym.kind {
        SymmetryKind::TrivialOnly => (false, "affine symmetry: trivial only".to_string()),
        SymmetryKind::Continuous => (
            true,
            "affine symmetry: continuous scaling family refutes uniqueness".to_string(),
        ),
        SymmetryKind::Cyclic { order, .. } => (
            true,
            format!("affine symmetry: cyclic of order {order} refutes uniqueness"),
        ),
    };
    let pass = !refuted && (asserted || sym.is_trivial());
    let evidence = if asserted {
        format!("asserted by caller; {detail}")
    } else {
        format!("not asserted; {detail} (necessary condition only)")
    };
    let conditional = if asserted {
        "uniqueness-polynomial status asserted by caller; affine-symmetry necessary condition checked"
    } else {
        "uniqueness-polynomial status not decided; only the affine-symmetry necessary condition was checked"
    };
    (hyp("uniqueness_polynomial", pass, evidence), conditional.into())
}

fn degree_hypothesis(ok: bool, n: usize, rule: String) -> Hypothesis {
    hyp("degree_threshold", ok, format!("n = {n}; requires {rule}"))
}

/// The CM theorem for uniqueness polynomials with separated critical
/// values and its weak-weight (`l ≥ 3`) refinement.
///
/// Returns `[Fujimoto_T11_CM, Fujimoto_Bai_WeakWeight]`.
pub fn certify_fujimoto(p: &Poly, mode: Mode, uniqueness_asserted: bool) -> Vec<Certificate> {
    let n = p.deg();
    let data = CriticalData::of(p).ok();
    let k = data.as_ref().map_or(0, |d| d.k);
    let q = data.as_ref().map(CriticalData::multiplicities).unwrap_or_default();
    let shape_ok = k >= 3 || (k == 2 && q.iter().min().is_some_and(|&m| m >= 2));
    let shape = hyp(
        "critical_shape",
        shape_ok,
        format!("k = {k}, q = {q:?}; requires k >= 3, or k = 2 with min q >= 2"),
    );
    let (bound, rule) = match mode {
        Mode::Meromorphic => (2 * k + 6, format!("n > 2k + 6 = {}", 2 * k + 6)),
        Mode::Entire => (2 * k + 2, format!("n > 2k + 2 = {}", 2 * k + 2)),
    };
    let (unique, conditional) = uniqueness_hypothesis(p, uniqueness_asserted);
    let hypotheses = vec![
        simple_zeros_hypothesis(p),
        separation_hypothesis(data.as_ref()),
        shape,
        degree_hypothesis(n > bound, n, rule),
        unique,
    ];
    let u = ursm(mode);
    vec![
        Certificate::new(
            TheoremId::FujimotoCm,
            mode,
            hypotheses.clone(),
            format!("the zero set S of P ({n} elements) is a {u}"),
            vec![conditional.clone()],
        ),
        Certificate::new(
            TheoremId::FujimotoWeakWeight,
            mode,
            hypotheses,
            format!("the zero set S of P ({n} elements) is a {u}_l) for every l >= 3"),
            vec![conditional],
        ),
    ]
}

/// Set-level equivalences between CM, weight-2 and weak-weight-3 unique
/// range sets. Returns `[Equiv_Weight2_C21, Equiv_Weak3_C32, Equiv_All_C33]`.
pub fn certify_weight_equivalence(p: &Poly, mode: Mode) -> Vec<Certificate> {
    let n = p.deg();
    let k = CriticalData::of(p).map_or(0, |d| d.k);
    let (bound, rule) = match mode {
        Mode::Meromorphic => (2 * k + 7, format!("n >= 2k + 7 = {}", 2 * k + 7)),
        Mode::Entire => (2 * k + 3, format!("n >= 2k + 3 = {}", 2 * k + 3)),
    };
    let critical = hyp(
        "critical_count",
        n >= 2,
        format!("P' has k = {k} distinct zeros"),
    );
    let hypotheses = vec![
        simple_zeros_hypothesis(p),
        critical,
        degree_hypothesis(n >= bound && n >= 2, n, rule),
    ];
    let u = ursm(mode);
    let conditional = vec![
        "equivalence only: upgrades an established unique range set, does not establish one"
            .to_string(),
    ];
    vec![
        Certificate::new(
            TheoremId::EquivWeight2,
            mode,
            hypotheses.clone(),
            format!("S ({n} elements) is a {u}_2 if and only if S is a {u}"),
            conditional.clone(),
        ),
        Certificate::new(
            TheoremId::EquivWeak3,
            mode,
            hypotheses.clone(),
            format!("S ({n} elements) is a {u}_3) if and only if S is a {u}"),
            conditional.clone(),
        ),
        Certificate::new(
            TheoremId::EquivAll,
            mode,
            hypotheses,
            format!("for S ({n} elements): {u} <=> {u}_2 <=> {u}_3)"),
            conditional,
        ),
    ]
}

/// Two-set certificates plus the sets they concern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSetReport {
    /// Weight-2 sharing of `S₁` with `S₂` IM (needs `k ≥ 3`).
    pub weight2: Certificate,
    /// Weight-3 sharing of `S₁` with `S₂` IM (needs no simple critical zero).
    pub weight3: Certificate,
    /// Zeros of `P`.
    pub s1: Vec<RootCluster>,
    /// Distinct zeros of `P'`.
    pub s2: Vec<RootCluster>,
}

impl TwoSetReport {
    pub fn certificates(&self) -> [&Certificate; 2] {
        [&self.weight2, &self.weight3]
    }
}

/// Checks both two-set theorems: `S₁` = zeros of `P`, `S₂` = critical points.
pub fn certify_two_set(
    p: &Poly,
    mode: Mode,
    uniqueness_asserted: bool,
) -> Result<TwoSetReport, CertifyError> {
    let n = p.deg();
    let data = CriticalData::of(p)?;
    let opts = IsolationOptions::default();
    let s1 = isolate_roots(p, &opts)?;
    let s2 = isolate_roots(&p.derivative(), &opts)?;
    let k = data.k;
    let (unique, conditional) = uniqueness_hypothesis(p, uniqueness_asserted);
    let frame = "the auxiliary lemma frame: n >= 5 and k >= 3, or n >= 5, k = 2 and no simple zero of P'";
    let conditional_on = vec![conditional, frame.to_string()];
    let base = [
        simple_zeros_hypothesis(p),
        separation_hypothesis(Some(&data)),
        unique,
    ];

    let (bound42, rule42) = match mode {
        Mode::Meromorphic => (k + 7, format!("n >= k + 7 = {}", k + 7)),
        Mode::Entire => (k + 3, format!("n >= k + 3 = {}", k + 3)),
    };
    let mut h42 = base.to_vec();
    h42.push(hyp("critical_count", k >= 3, format!("k = {k}; requires k >= 3")));
    h42.push(degree_hypothesis(n >= bound42, n, rule42));

    let bound43 = match mode {
        Mode::Meromorphic => (10usize.saturating_sub(2 * k)).max(5),
        Mode::Entire => 5,
    };
    let rule43 = match mode {
        Mode::Meromorphic => format!("n >= max(10 - 2k, 5) = {bound43}"),
        Mode::Entire => "n >= 5".to_string(),
    };
    let q = data.multiplicities();
    let mut h43 = base.to_vec();
    h43.push(hyp("critical_count", k >= 2, format!("k = {k}; requires k >= 2")));
    h43.push(hyp(
        "no_simple_critical_zero",
        data.no_simple_critical_zero(),
        format!("q = {q:?}; requires every q_j >= 2"),
    ));
    h43.push(degree_hypothesis(n >= bound43, n, rule43));

    let u = ursm(mode);
    let functions = match mode {
        Mode::Meromorphic => "meromorphic",
        Mode::Entire => "entire",
    };
    Ok(TwoSetReport {
        weight2: Certificate::new(
            TheoremId::TwoSetWeight2,
            mode,
            h42,
            format!(
                "non-constant {functions} f, g sharing S1 ({n} points) with weight 2 and S2 ({k} points) IM are identical"
            ),
            conditional_on.clone(),
        ),
        weight3: Certificate::new(
            TheoremId::TwoSetWeight3,
            mode,
            h43,
            format!(
                "non-constant {functions} f, g sharing S1 ({n} points) with weight 3 and S2 ({k} points) IM are identical ({u}-type pair)"
            ),
            conditional_on,
        ),
        s1,
        s2,
    })
}

/// Gap-form equivalence: uniqueness polynomial ⇔ weight-2 ⇔ weak-weight-3
/// ⇔ CM unique range set ⇔ uniqueness polynomial in the broad sense.
pub fn certify_gap_form(p: &Poly, mode: Mode) -> Certificate {
    let n = p.deg();
    let gap = gap_form_check(p);
    let k = CriticalData::of(p).map_or(0, |d| d.k);
    let (bound, rule) = match mode {
        Mode::Meromorphic => (2 * k + 7, format!("n >= 2k + 7 = {}", 2 * k + 7)),
        Mode::Entire => (2 * k + 3, format!("n >= 2k + 3 = {}", 2 * k + 3)),
    };
    let gap_evidence = if gap.pass {
        format!(
            "n = {}, m = {}, witness p = {}",
            gap.n,
            gap.m.expect("pass has m"),
            gap.p.expect("pass has p")
        )
    } else {
        gap.failures.join("; ")
    };
    let hypotheses = vec![
        simple_zeros_hypothesis(p),
        hyp("gap_form", gap.pass, gap_evidence),
        degree_hypothesis(n >= bound && n >= 2, n, rule),
    ];
    let u = ursm(mode);
    Certificate::new(
        TheoremId::GapForm,
        mode,
        hypotheses,
        format!(
            "for S ({n} elements): P uniqueness polynomial <=> S is a {u}_2 <=> S is a {u}_3) <=> S is a {u} <=> P uniqueness polynomial in the broad sense"
        ),
        vec!["equivalence only: none of the equivalent statements is established".to_string()],
    )
}

/// `Θ_f + Θ_g + δ₀/2 > (2k + 6 − n)/2`, decided exactly.
pub fn deficiency_inequality(
    theta_f: &BigRational,
    theta_g: &BigRational,
    delta0: &BigRational,
    n: usize,
    k: usize,
) -> Result<bool, CertifyError> {
    let unit = |name: &str, v: &BigRational| {
        if v < &BigRational::zero() || v > &BigRational::one() {
            Err(CertifyError::OutOfRange(format!("{name} = {v} not in [0, 1]")))
        } else {
            Ok(())
        }
    };
    unit("theta_f", theta_f)?;
    unit("theta_g", theta_g)?;
    unit("delta0", delta0)?;
    if n < 1 {
        return Err(CertifyError::OutOfRange("n must be at least 1".into()));
    }
    let two = BigRational::from_integer(2.into());
    let lhs = theta_f + theta_g + delta0 / &two;
    let rhs = BigRational::new((2 * k as i64 + 6 - n as i64).into(), 2.into());
    Ok(lhs > rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::families::{bcj_poly, frank_reinders_poly, li_yang_poly};

    fn g(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    #[test]
    fn frank_reinders_structure() {
        let p = frank_reinders_poly(11, &g(3));
        let cs = critical_structure(&p).unwrap();
        assert_eq!(cs.k, 2);
        assert_eq!(cs.multiplicities(), vec![2, 8]);
        assert!(cs.separation);
        assert!(cs.no_simple_critical_zero);
        assert!(cs.clusters.iter().any(|c| c.multiplicity == 8 && c.disk.contains(&g(0))));
        assert!(cs.clusters.iter().any(|c| c.multiplicity == 2 && c.disk.contains(&g(1))));
        assert!(separation_by_minimal_polynomial(&p).unwrap());
        assert!(affine_symmetry(&p).is_trivial());
    }

    #[test]
    fn unseparated_critical_values() {
        let p = Poly::from_ints(&[-1, 0, 1]).pow(2);
        let cs = critical_structure(&p).unwrap();
        assert_eq!(cs.k, 3);
        assert!(!cs.separation);
        assert!(!separation_by_minimal_polynomial(&p).unwrap());
        assert!(critical_structure(&Poly::from_ints(&[1, 1])).is_err());
    }

    #[test]
    fn li_yang_count() {
        let p = li_yang_poly(15, 2, &g(1), &g(3));
        let cs = critical_structure(&p).unwrap();
        assert_eq!(cs.k, 3);
        let q: usize = cs.clusters.iter().map(|c| c.multiplicity).sum();
        assert_eq!(q, p.deg() - 1);
    }

    #[test]
    fn gap_form_examples() {
        let ok = gap_form_check(&Poly::from_ints(&[1, 0, 1, 1, 0, 0, 0, 1]));
        assert!(ok.pass);
        assert_eq!((ok.n, ok.m, ok.p), (7, Some(3), Some(2)));
        assert!(!gap_form_check(&Poly::from_ints(&[1, 0, 0, 0, 0, 1, 0, 1])).pass);
        assert!(!gap_form_check(&Poly::from_ints(&[1, 1, 0, 0, 0, 0, 0, 1])).pass);
        // only middle exponent 3: gcd(3, 3) = 3
        let bad = gap_form_check(&Poly::from_ints(&[1, 0, 0, 1, 0, 0, 0, 1]));
        assert!(!bad.pass && bad.p.is_none());
    }

    #[test]
    fn fujimoto_thresholds() {
        let p = bcj_poly(11, 1, &g(5));
        let certs = certify_fujimoto(&p, Mode::Meromorphic, true);
        assert!(certs.iter().all(Certificate::passed), "{certs:#?}");
        assert_eq!(certs[0].theorem_id, TheoremId::FujimotoCm);
        let p10 = bcj_poly(10, 1, &g(5));
        let c10 = &certify_fujimoto(&p10, Mode::Meromorphic, true)[0];
        assert!(!c10.passed());
        assert!(!c10.hypothesis("degree_threshold").unwrap().pass);
        let p7 = frank_reinders_poly(7, &g(3));
        assert!(certify_fujimoto(&p7, Mode::Entire, true)[0].passed());
        // z^4 - 1 refutes uniqueness even when asserted
        let sym = &certify_fujimoto(&Poly::from_ints(&[-1, 0, 0, 0, 1]), Mode::Entire, true)[0];
        assert!(!sym.hypothesis("uniqueness_polynomial").unwrap().pass);
    }

    #[test]
    fn weight_equivalence() {
        let certs = certify_weight_equivalence(&frank_reinders_poly(11, &g(3)), Mode::Meromorphic);
        assert_eq!(certs.len(), 3);
        assert!(certs.iter().all(Certificate::passed));
        let yi = li_yang_poly(13, 2, &g(1), &g(3));
        assert!(certify_weight_equivalence(&yi, Mode::Meromorphic)[0].passed());
        let twelve = li_yang_poly(12, 2, &g(1), &g(3));
        let c = &certify_weight_equivalence(&twelve, Mode::Meromorphic)[0];
        assert!(!c.passed() && c.conclusion.is_none());
    }

    #[test]
    fn two_set_example() {
        let p = frank_reinders_poly(6, &g(3));
        let rep = certify_two_set(&p, Mode::Meromorphic, true).unwrap();
        assert!(rep.weight3.passed(), "{:#?}", rep.weight3);
        assert!(!rep.weight2.passed());
        assert_eq!(rep.s2.len(), 2);
        assert!(rep.s2.iter().any(|c| c.disk.contains(&g(0)) && c.multiplicity == 3));
        assert!(rep.s2.iter().any(|c| c.disk.contains(&g(1)) && c.multiplicity == 2));
        let ly = li_yang_poly(11, 2, &g(1), &g(3));
        assert!(certify_two_set(&ly, Mode::Meromorphic, true).unwrap().weight2.passed());
        // z^3 - 3z has simple critical zeros
        let simple = Poly::from_ints(&[1, -3, 0, 1]);
        let rep = certify_two_set(&simple, Mode::Entire, true).unwrap();
        assert!(!rep.weight3.hypothesis("no_simple_critical_zero").unwrap().pass);
    }

    #[test]
    fn deficiency_examples() {
        let one = rat(1, 1);
        let zero = rat(0, 1);
        for k in 1..=5 {
            for n in 3..=30 {
                assert_eq!(
                    deficiency_inequality(&one, &one, &zero, n, k).unwrap(),
                    n > 2 * k + 2
                );
            }
            assert!(deficiency_inequality(&zero, &zero, &zero, 2 * k + 7, k).unwrap());
            assert!(!deficiency_inequality(&zero, &zero, &zero, 2 * k + 6, k).unwrap());
        }
        assert!(deficiency_inequality(&rat(3, 2), &zero, &zero, 5, 1).is_err());
    }

    #[test]
    fn serialization_field_order() {
        let c = &certify_weight_equivalence(&frank_reinders_poly(11, &g(3)), Mode::Entire)[0];
        let s = serde_json::to_string(c).unwrap();
        let keys = ["\"theorem_id\"", "\"mode\"", "\"hypotheses\"", "\"conclusion\"", "\"conditional_on\""];
        let pos: Vec<usize> = keys.iter().map(|k| s.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert!(s.contains("\"Equiv_Weight2_C21\""));
    }
}

//! Set sharing for rational maps, decided exactly.
//!
//! For a rational map `f = num/den` and a set `S` given as the zero set of
//! `P`, the `S`-points of `f` in `ℂ` are the zeros of the homogenized
//! numerator `N = Σ p_i num^i den^(n−i)`, with multiplicity equal to the
//! multiplicity of the `a`-point of `f`. Squarefree decomposition of `N`
//! groups those points into strata of equal multiplicity, and every sharing
//! notion becomes a finite list of polynomial equalities.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{poly_gcd, squarefree_decomposition, squarefree_part, GaussRat, Poly};
use crate::certifier::{affine_symmetry, SymmetryKind};
use crate::parse::{parse_ratio_literal, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SharingError {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("constant rational map where a non-constant one is required")]
    ConstantMap,
    #[error("the zero polynomial does not define a value set")]
    ZeroPolynomial,
    #[error("value {0} is not shared ignoring multiplicities")]
    NotShared(String),
    #[error("auxiliary function undefined: {0}")]
    Undefined(&'static str),
    #[error("division by the zero rational map")]
    DivisionByZero,
}

/// Reduced quotient `num/den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMap {
    num: Poly,
    den: Poly,
}

impl RationalMap {
    pub fn new(num: Poly, den: Poly) -> Result<Self, SharingError> {
        if den.is_zero() {
            return Err(SharingError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalMap {
                num,
                den: Poly::one(),
            });
        }
        let g = poly_gcd(&num, &den).expect("den nonzero");
        let num = num.exact_div(&g).expect("gcd divides");
        let den = den.exact_div(&g).expect("gcd divides");
        let lc = den.lead().inv().expect("nonzero lead");
        Ok(RationalMap {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn polynomial(p: Poly) -> Self {
        RationalMap {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: GaussRat) -> Self {
        Self::polynomial(Poly::constant(c))
    }

    /// The identity map `z`.
    pub fn identity() -> Self {
        Self::polynomial(Poly::x())
    }

    /// `a·z + b`.
    pub fn affine(a: &GaussRat, b: &GaussRat) -> Self {
        Self::polynomial(Poly::new(vec![b.clone(), a.clone()]))
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let (num, den) = parse_ratio_literal(text)?;
        Ok(Self::new(num, den).expect("parser rejects zero denominators"))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// `max(deg num, deg den)`; zero for constants.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.deg())
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn derivative(&self) -> Self {
        let top = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(top, &self.den * &self.den).expect("nonzero square")
    }

    pub fn add(&self, other: &Self) -> Self {
        let top = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::new(top, &self.den * &other.den).expect("nonzero product")
    }

    pub fn sub(&self, other: &Self) -> Self {
        let top = &(&self.num * &other.den) - &(&other.num * &self.den);
        Self::new(top, &self.den * &other.den).expect("nonzero product")
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("nonzero product")
    }

    pub fn div(&self, other: &Self) -> Result<Self, SharingError> {
        if other.is_zero() {
            return Err(SharingError::DivisionByZero);
        }
        Ok(Self::new(&self.num * &other.den, &self.den * &other.num).expect("nonzero divisor"))
    }

    pub fn eval(&self, z: &GaussRat) -> Option<GaussRat> {
        self.den.eval(z).inv().map(|d| &self.num.eval(z) * &d)
    }

    /// `P∘f` as a reduced rational map.
    pub fn compose_into(&self, p: &Poly) -> Self {
        let n = p.degree().unwrap_or(0);
        Self::new(homogenized(p, self), self.den.pow(n as u32)).expect("nonzero power")
    }
}

impl fmt::Display for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{num:{},den:{}}}", self.num, self.den)
    }
}

impl fmt::Debug for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for RationalMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `Σ p_i num^i den^(n−i)`: the numerator of `P∘f` before reduction.
fn homogenized(p: &Poly, f: &RationalMap) -> Poly {
    let n = p.degree().unwrap_or(0);
    let mut num_pows = vec![Poly::one()];
    let mut den_pows = vec![Poly::one()];
    for i in 1..=n {
        num_pows.push(&num_pows[i - 1] * &f.num);
        den_pows.push(&den_pows[i - 1] * &f.den);
    }
    let mut acc = Poly::zero();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc = &acc + &(&num_pows[i] * &den_pows[n - i]).scale(c);
    }
    acc
}

fn require_nonconstant(f: &RationalMap) -> Result<(), SharingError> {
    if f.is_constant() {
        Err(SharingError::ConstantMap)
    } else {
        Ok(())
    }
}

/// `S`-points of `f` grouped by exact multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharedSpectrum {
    /// `(monic squarefree stratum, multiplicity)`, multiplicities increasing.
    pub strata: Vec<(Poly, usize)>,
    /// Multiplicity of `z = ∞` as an `S`-point.
    pub infinity_mult: usize,
}

impl SharedSpectrum {
    pub fn stratum(&self, m: usize) -> Poly {
        self.strata
            .iter()
            .find(|(_, k)| *k == m)
            .map(|(f, _)| f.clone())
            .unwrap_or_else(Poly::one)
    }

    /// Product of the strata with multiplicity `> m`.
    pub fn above(&self, m: usize) -> Poly {
        self.strata
            .iter()
            .filter(|(_, k)| *k > m)
            .fold(Poly::one(), |acc, (f, _)| &acc * f)
    }

    /// `Σ m·deg(stratum_m) + infinity_mult`.
    pub fn mass(&self) -> usize {
        self.strata.iter().map(|(f, m)| m * f.deg()).sum::<usize>() + self.infinity_mult
    }

    fn max_multiplicity(&self) -> usize {
        self.strata.iter().map(|(_, m)| *m).max().unwrap_or(0)
    }
}

/// Spectrum of `f` over the distinct zeros of `p`.
///
/// A repeated factor of `p` does not enlarge `S`, so `p` is replaced by its
/// squarefree part; the mass is then `|S|·deg f`.
pub fn spectrum(f: &RationalMap, p: &Poly) -> Result<SharedSpectrum, SharingError> {
    require_nonconstant(f)?;
    if p.is_zero() {
        return Err(SharingError::ZeroPolynomial);
    }
    let s = if p.is_constant() { Poly::one() } else { squarefree_part(p).expect("nonzero") };
    let n = s.deg();
    let big_n = homogenized(&s, f);
    let finite = big_n.deg();
    let strata = if big_n.is_constant() {
        Vec::new()
    } else {
        squarefree_decomposition(&big_n).expect("nonzero")
    };
    Ok(SharedSpectrum {
        strata,
        infinity_mult: n * f.degree() - finite,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ShareMode {
    Cm,
    Weighted(usize),
    WeakWeight(usize),
    Im,
}

impl fmt::Display for ShareMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShareMode::Cm => f.write_str("CM"),
            ShareMode::Weighted(k) => write!(f, "weighted({k})"),
            ShareMode::WeakWeight(k) => write!(f, "weak({k})"),
            ShareMode::Im => f.write_str("IM"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShareOutcome {
    Equal,
    /// `witness` vanishes exactly on the disagreeing points of `class`.
    Differ { class: String, witness: Poly },
}

impl ShareOutcome {
    pub fn is_equal(&self) -> bool {
        *self == ShareOutcome::Equal
    }
}

/// Monic polynomial vanishing exactly on the symmetric difference of the
/// zero sets of two monic squarefree polynomials.
fn symmetric_difference(a: &Poly, b: &Poly) -> Poly {
    let g = poly_gcd(a, b).expect("nonzero");
    let a_only = a.exact_div(&g).expect("gcd divides");
    let b_only = b.exact_div(&g).expect("gcd divides");
    &a_only * &b_only
}

fn compare(class: String, a: &Poly, b: &Poly) -> Option<ShareOutcome> {
    (a != b).then(|| ShareOutcome::Differ {
        class,
        witness: symmetric_difference(a, b),
    })
}

/// Decides whether `f` and `g` share the zero set of `p` in `mode`.
pub fn share_check(
    f: &RationalMap,
    g: &RationalMap,
    p: &Poly,
    mode: ShareMode,
) -> Result<ShareOutcome, SharingError> {
    let sf = spectrum(f, p)?;
    let sg = spectrum(g, p)?;
    let exact_up_to = |k: usize| -> Option<ShareOutcome> {
        (1..=k).find_map(|m| compare(format!("multiplicity {m}"), &sf.stratum(m), &sg.stratum(m)))
    };
    let top = sf.max_multiplicity().max(sg.max_multiplicity());
    let outcome = match mode {
        ShareMode::Cm => exact_up_to(top),
        ShareMode::Weighted(k) => exact_up_to(k.min(top))
            .or_else(|| compare(format!("multiplicity > {k}"), &sf.above(k), &sg.above(k))),
        ShareMode::WeakWeight(k) => exact_up_to(k.min(top)),
        ShareMode::Im => compare("any multiplicity".into(), &sf.above(0), &sg.above(0)),
    };
    Ok(outcome.unwrap_or(ShareOutcome::Equal))
}

/// A target value on the Riemann sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Point {
    Finite(GaussRat),
    Infinity,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(a) => write!(f, "{a}"),
            Point::Infinity => f.write_str("inf"),
        }
    }
}

/// Polynomial whose zeros are the finite `a`-points of `f`, with multiplicity.
fn a_point_poly(f: &RationalMap, a: &Point) -> Poly {
    match a {
        Point::Finite(a) => f.num() - &f.den().scale(a),
        Point::Infinity => f.den().clone(),
    }
}

fn distinct_roots(p: &Poly) -> usize {
    if p.is_constant() {
        0
    } else {
        squarefree_part(p).expect("nonzero").deg()
    }
}

/// `(δ(a; f), Θ(a; f))` for a non-constant rational map.
pub fn deficiency(f: &RationalMap, a: &Point) -> Result<(BigRational, BigRational), SharingError> {
    require_nonconstant(f)?;
    let d = f.degree();
    let pts = a_point_poly(f, a);
    let counted = pts.deg();
    let distinct = distinct_roots(&pts);
    let ratio = |x: usize| BigRational::new(x.into(), d.into());
    Ok((ratio(d - counted), BigRational::one() - ratio(distinct)))
}

/// Integer slopes of the shared-point counting functions at one value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SharedPointCounts {
    /// Common points with `p > q`.
    pub nbar_l_f: usize,
    /// Common points with `q > p`.
    pub nbar_l_g: usize,
    /// Common points with `p = q = 1`.
    pub n_e_simple: usize,
    /// Common points with `p = q ≥ 2`.
    pub nbar_e_multiple: usize,
    /// Common points with `p ≠ q`.
    pub nbar_star: usize,
}

/// Classifies the common finite `a`-points of `f` (multiplicity `p`) and
/// `g` (multiplicity `q`).
pub fn classify_shared_points(
    f: &RationalMap,
    g: &RationalMap,
    a: &Point,
) -> Result<SharedPointCounts, SharingError> {
    require_nonconstant(f)?;
    require_nonconstant(g)?;
    let pf = a_point_poly(f, a);
    let pg = a_point_poly(g, a);
    let reduce = |p: &Poly| if p.is_constant() { Poly::one() } else { squarefree_part(p).unwrap() };
    if reduce(&pf) != reduce(&pg) {
        return Err(SharingError::NotShared(a.to_string()));
    }
    let strata = |p: &Poly| {
        if p.is_constant() {
            Vec::new()
        } else {
            squarefree_decomposition(p).unwrap()
        }
    };
    let (sf, sg) = (strata(&pf), strata(&pg));
    let mut counts = SharedPointCounts {
        nbar_l_f: 0,
        nbar_l_g: 0,
        n_e_simple: 0,
        nbar_e_multiple: 0,
        nbar_star: 0,
    };
    for (ff, p) in &sf {
        for (gg, q) in &sg {
            let common = poly_gcd(ff, gg).unwrap().deg();
            match p.cmp(q) {
                std::cmp::Ordering::Greater => counts.nbar_l_f += common,
                std::cmp::Ordering::Less => counts.nbar_l_g += common,
                std::cmp::Ordering::Equal if *p == 1 => counts.n_e_simple += common,
                std::cmp::Ordering::Equal => counts.nbar_e_multiple += common,
            }
        }
    }
    // Points of unequal multiplicity are the zeros and poles of pf/pg.
    let quotient = RationalMap::new(pf, pg).expect("non-constant g has a-point poly");
    counts.nbar_star = distinct_roots(quotient.num()) + distinct_roots(quotient.den());
    Ok(counts)
}

/// `F = 1/P(f)`.
fn reciprocal_of_composition(f: &RationalMap, p: &Poly) -> Result<RationalMap, SharingError> {
    RationalMap::constant(GaussRat::one())
        .div(&f.compose_into(p))
        .map_err(|_| SharingError::Undefined("P(f) vanishes identically"))
}

/// `H = F''/F' − G''/G'` with `F = 1/P(f)`, `G = 1/P(g)`.
pub fn h_function(f: &RationalMap, g: &RationalMap, p: &Poly) -> Result<RationalMap, SharingError> {
    let big_f = reciprocal_of_composition(f, p)?;
    let big_g = reciprocal_of_composition(g, p)?;
    let (f1, g1) = (big_f.derivative(), big_g.derivative());
    let zero = |_| SharingError::Undefined("F' or G' vanishes identically");
    let a = f1.derivative().div(&f1).map_err(zero)?;
    let b = g1.derivative().div(&g1).map_err(zero)?;
    Ok(a.sub(&b))
}

/// `φ = F'/F − G'/G` with `F = 1/P(f)`, `G = 1/P(g)`.
pub fn phi_function(f: &RationalMap, g: &RationalMap, p: &Poly) -> Result<RationalMap, SharingError> {
    let big_f = reciprocal_of_composition(f, p)?;
    let big_g = reciprocal_of_composition(g, p)?;
    let zero = |_| SharingError::Undefined("F or G vanishes identically");
    let a = big_f.derivative().div(&big_f).map_err(zero)?;
    let b = big_g.derivative().div(&big_g).map_err(zero)?;
    Ok(a.sub(&b))
}

/// A pair `f ≠ g` sharing the zero set of `p` CM, when one can be built
/// exactly from an affine symmetry of `p`.
///
/// Besides affine symmetries with coefficients in `ℚ(i)`, a centered
/// binomial `a_n (z − c)^n + a_0` admits the inversion
/// `g = c + t/(z − c)` whenever some `t ∈ ℚ(i)` has `tⁿ = (a_0/a_n)²`.
pub fn counterexample_witness(p: &Poly) -> Option<(RationalMap, RationalMap)> {
    if p.degree().unwrap_or(0) < 1 {
        return None;
    }
    let f = RationalMap::identity();
    let sym = affine_symmetry(p);
    let g = match &sym.kind {
        SymmetryKind::Continuous => RationalMap::affine(&GaussRat::from_int(2), &-&sym.centroid),
        SymmetryKind::TrivialOnly => return None,
        SymmetryKind::Cyclic { .. } => match sym.rational_symmetry() {
            Some((a, b, _)) => RationalMap::affine(&a, &b),
            None => inversion_witness(&sym.centered, &sym.centroid)?,
        },
    };
    let sound = f != g
        && share_check(&f, &g, p, ShareMode::Cm)
            .map(|o| o.is_equal())
            .unwrap_or(false);
    sound.then_some((f, g))
}

fn inversion_witness(centered: &Poly, c: &GaussRat) -> Option<RationalMap> {
    let n = centered.deg();
    let support = centered.coeffs().iter().filter(|x| !x.is_zero()).count();
    if support != 2 || centered.coeff(0).is_zero() {
        return None;
    }
    let r = &centered.coeff(0) / &centered.lead();
    let t = gaussian_nth_root(&(&r * &r), n)?;
    // c + t/(z − c) = (c z − c² + t)/(z − c)
    let num = Poly::new(vec![&t - &(c * c), c.clone()]);
    RationalMap::new(num, Poly::linear(c)).ok()
}

/// Some `t ∈ ℚ(i)` with `tⁿ = s`, found by rationalizing floating-point
/// candidates and confirmed exactly.
fn gaussian_nth_root(s: &GaussRat, n: usize) -> Option<GaussRat> {
    use num_traits::ToPrimitive;
    let (re, im) = (s.re.to_f64()?, s.im.to_f64()?);
    let modulus = re.hypot(im).powf(1.0 / n as f64);
    let arg = im.atan2(re);
    (0..n).find_map(|j| {
        let theta = (arg + 2.0 * std::f64::consts::PI * j as f64) / n as f64;
        let t = GaussRat::new(
            rationalize(modulus * theta.cos())?,
            rationalize(modulus * theta.sin())?,
        );
        (t.pow(n as u32) == *s).then_some(t)
    })
}

/// Continued-fraction approximant with denominator at most `10^6`.
fn rationalize(x: f64) -> Option<BigRational> {
    use num_bigint::BigInt;
    if !x.is_finite() {
        return None;
    }
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut v = x;
    for _ in 0..40 {
        let a = v.floor();
        let ai = BigInt::from(a as i64);
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        if k2 > BigInt::from(1_000_000) {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = v - a;
        if frac.abs() < 1e-12 {
            break;
        }
        v = 1.0 / frac;
    }
    (!k1.is_zero()).then(|| BigRational::new(h1, k1))
}

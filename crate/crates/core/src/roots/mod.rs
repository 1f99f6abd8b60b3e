//! Certified isolation of complex polynomial roots.
//!
//! Each squarefree stratum of the input is solved on its own: Aberth
//! iteration in `BigFloat` arithmetic polishes approximations that start on
//! a circle, then every approximation is wrapped in a disk of radius
//! `d·|W_i|`, where `W_i = f(z_i) / (lc·Π_{j≠i}(z_i − z_j))` is the
//! Weierstrass correction evaluated in exact rational arithmetic. If those
//! `d` disks are pairwise disjoint, each contains exactly one root. On
//! failure the working precision doubles and polishing resumes.

mod bigfloat;

pub use bigfloat::{BigFloat, CFloat};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{squarefree_decomposition, GaussRat, Poly};

/// Working precision used when none is requested.
pub const DEFAULT_PRECISION: u32 = 128;
/// Default radius bound exponent: disks are shrunk below `2^-53`.
pub const DEFAULT_RADIUS_LOG2: i64 = -53;
const MAX_PRECISION: u32 = 1 << 15;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IsolationError {
    #[error("degenerate input: root isolation needs a polynomial of degree at least 1")]
    Degenerate,
    #[error("radius bound must be positive")]
    InvalidRadius,
    #[error("certification failed up to {bits} bits of precision")]
    PrecisionExhausted { bits: u32 },
}

#[derive(Debug, Clone)]
pub struct IsolationOptions {
    pub radius_bound: BigFloat,
    pub precision: u32,
}

impl Default for IsolationOptions {
    fn default() -> Self {
        IsolationOptions {
            radius_bound: BigFloat::pow2(DEFAULT_RADIUS_LOG2),
            precision: DEFAULT_PRECISION,
        }
    }
}

/// Closed disk with a binary floating-point center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disk {
    pub center_re: BigFloat,
    pub center_im: BigFloat,
    pub radius: BigFloat,
}

impl Disk {
    pub fn center(&self) -> GaussRat {
        GaussRat::new(self.center_re.to_rational(), self.center_im.to_rational())
    }

    /// Exact test `|c₁ − c₂| > r₁ + r₂`.
    pub fn is_disjoint(&self, other: &Disk) -> bool {
        let gap = (&self.center() - &other.center()).norm_sqr();
        let r = self.radius.to_rational() + other.radius.to_rational();
        gap > &r * &r
    }

    /// Exact test `|z − c| ≤ r`.
    pub fn contains(&self, z: &GaussRat) -> bool {
        let d = (z - &self.center()).norm_sqr();
        let r = self.radius.to_rational();
        d <= &r * &r
    }

    pub fn center_f64(&self) -> (f64, f64) {
        (self.center_re.to_f64(), self.center_im.to_f64())
    }
}

/// A certified disk holding exactly one distinct root of `p`, with the
/// multiplicity that root has in `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCluster {
    pub disk: Disk,
    pub multiplicity: usize,
    /// Index into the squarefree decomposition of the isolated polynomial.
    pub source_stratum: usize,
    factor: Poly,
}

impl RootCluster {
    /// The squarefree stratum polynomial whose unique root in `disk` this is.
    pub fn factor(&self) -> &Poly {
        &self.factor
    }
}

/// Lossless serialization of a cluster.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClusterReport {
    pub center_re_hex: String,
    pub center_im_hex: String,
    pub radius_hex: String,
    pub multiplicity: usize,
}

impl From<&RootCluster> for ClusterReport {
    fn from(c: &RootCluster) -> Self {
        ClusterReport {
            center_re_hex: c.disk.center_re.to_hex(),
            center_im_hex: c.disk.center_im.to_hex(),
            radius_hex: c.disk.radius.to_hex(),
            multiplicity: c.multiplicity,
        }
    }
}

/// Isolates every distinct root of `p` in pairwise disjoint disks of radius
/// at most `opts.radius_bound`, sorted by center `(Re, Im)`.
pub fn isolate_roots(p: &Poly, opts: &IsolationOptions) -> Result<Vec<RootCluster>, IsolationError> {
    if p.deg() < 1 {
        return Err(IsolationError::Degenerate);
    }
    if opts.radius_bound.is_zero() || opts.radius_bound.is_negative() {
        return Err(IsolationError::InvalidRadius);
    }
    let strata = squarefree_decomposition(p).map_err(|_| IsolationError::Degenerate)?;
    let mut clusters = Vec::new();
    for (idx, (factor, mult)) in strata.iter().enumerate() {
        for disk in isolate_squarefree(factor, opts)? {
            clusters.push(RootCluster {
                disk,
                multiplicity: *mult,
                source_stratum: idx,
                factor: factor.clone(),
            });
        }
    }
    separate_across_strata(&mut clusters);
    clusters.sort_by(|a, b| {
        (&a.disk.center_re, &a.disk.center_im).cmp(&(&b.disk.center_re, &b.disk.center_im))
    });
    Ok(clusters)
}

/// Disks of different strata are certified independently; shrink any that
/// touch until they separate (their roots are distinct).
fn separate_across_strata(clusters: &mut [RootCluster]) {
    loop {
        let mut clash = None;
        'outer: for i in 0..clusters.len() {
            for j in i + 1..clusters.len() {
                if !clusters[i].disk.is_disjoint(&clusters[j].disk) {
                    clash = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((i, j)) = clash else { return };
        for k in [i, j] {
            let r = &clusters[k].disk.radius;
            let target = BigFloat::from_parts(r.mantissa().clone(), r.exponent() - 8);
            clusters[k] = refine(&clusters[k], &target);
        }
    }
}

/// Isolates the (simple) roots of a squarefree polynomial.
pub fn isolate_squarefree(f: &Poly, opts: &IsolationOptions) -> Result<Vec<Disk>, IsolationError> {
    let n = f.deg();
    if n < 1 {
        return Err(IsolationError::Degenerate);
    }
    let mut prec = opts.precision.max(64);
    let mut z = initial_guesses(f, 0);
    let mut attempt = 0u32;
    while prec <= MAX_PRECISION {
        let coeffs = to_cfloat(f, prec);
        let dcoeffs = to_cfloat(&f.derivative(), prec);
        aberth(&coeffs, &dcoeffs, &mut z, prec, 80 + 10 * n);
        let centers: Vec<GaussRat> = z.iter().map(cfloat_to_gauss).collect();
        if let Some(radii) = inclusion_radii(f, &centers) {
            if radii.iter().all(|r| *r <= opts.radius_bound) {
                return Ok(z
                    .into_iter()
                    .zip(radii)
                    .map(|(c, radius)| Disk {
                        center_re: c.re,
                        center_im: c.im,
                        radius,
                    })
                    .collect());
            }
        }
        attempt += 1;
        prec *= 2;
        if attempt % 3 == 0 {
            z = initial_guesses(f, attempt);
        }
    }
    Err(IsolationError::PrecisionExhausted { bits: MAX_PRECISION })
}

/// Shrinks a cluster's disk to radius `radius_bound` by Newton steps; the
/// new disk is certified to contain a root and to lie inside the old one.
pub fn refine(c: &RootCluster, radius_bound: &BigFloat) -> RootCluster {
    if c.disk.radius <= *radius_bound {
        return c.clone();
    }
    let f = &c.factor;
    let df = f.derivative();
    let n = f.deg() as i64;
    let target = -radius_bound.magnitude().unwrap_or(-64);
    let mut prec = (target + 64).max(DEFAULT_PRECISION as i64) as u32;
    let mut z = CFloat::new(c.disk.center_re.clone(), c.disk.center_im.clone());
    loop {
        let coeffs = to_cfloat(f, prec);
        let dcoeffs = to_cfloat(&df, prec);
        for _ in 0..200 {
            let fz = horner(&coeffs, &z, prec);
            let dz = horner(&dcoeffs, &z, prec);
            if fz.is_zero() || dz.is_zero() {
                break;
            }
            let step = fz.div(&dz, prec);
            z = z.sub(&step, prec);
            if small_step(&step, &z, prec) {
                break;
            }
        }
        let zc = cfloat_to_gauss(&z);
        let val = f.eval(&zc);
        let radius = if val.is_zero() {
            Some(BigFloat::zero())
        } else {
            let d = df.eval(&zc);
            (!d.is_zero()).then(|| {
                let q = (&val / &d).norm_sqr() * BigRational::from_integer((n * n).into());
                sqrt_upper(&q)
            })
        };
        if let Some(r_new) = radius {
            let cand = Disk {
                center_re: z.re.clone(),
                center_im: z.im.clone(),
                radius: r_new.clone(),
            };
            if r_new <= *radius_bound && disk_inside(&cand, &c.disk) {
                return RootCluster {
                    disk: cand,
                    ..c.clone()
                };
            }
        }
        assert!(prec <= MAX_PRECISION, "refinement of a certified simple root did not converge");
        prec *= 2;
    }
}

fn disk_inside(inner: &Disk, outer: &Disk) -> bool {
    let (ri, ro) = (inner.radius.to_rational(), outer.radius.to_rational());
    if ri > ro {
        return false;
    }
    let d = (&inner.center() - &outer.center()).norm_sqr();
    let slack = ro - ri;
    d <= &slack * &slack
}

fn to_cfloat(f: &Poly, prec: u32) -> Vec<CFloat> {
    f.coeffs()
        .iter()
        .map(|c| {
            CFloat::new(
                BigFloat::from_rational(&c.re, prec),
                BigFloat::from_rational(&c.im, prec),
            )
        })
        .collect()
}

fn cfloat_to_gauss(z: &CFloat) -> GaussRat {
    GaussRat::new(z.re.to_rational(), z.im.to_rational())
}

fn horner(coeffs: &[CFloat], z: &CFloat, prec: u32) -> CFloat {
    let mut acc = CFloat::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(z, prec).add(c, prec);
    }
    acc
}

fn small_step(step: &CFloat, z: &CFloat, prec: u32) -> bool {
    match step.magnitude() {
        None => true,
        Some(ms) => {
            let scale = z.magnitude().unwrap_or(i64::MIN / 2).max(-(prec as i64));
            ms < scale - (prec as i64 - 12)
        }
    }
}

fn initial_guesses(f: &Poly, attempt: u32) -> Vec<CFloat> {
    let n = f.deg();
    let lead = gauss_abs_f64(&f.lead());
    // Fujiwara bound on the root moduli
    let mut bound: f64 = 0.0;
    for k in 1..=n {
        let a = gauss_abs_f64(&f.coeff(n - k)) / lead;
        if a > 0.0 {
            let root = if k == n { (a / 2.0).powf(1.0 / k as f64) } else { a.powf(1.0 / k as f64) };
            bound = bound.max(2.0 * root);
        }
    }
    if !bound.is_finite() || bound <= 0.0 {
        bound = 1.0;
    }
    let radius = bound * (1.0 + 0.07 * attempt as f64);
    let offset = 0.4 + 0.61 * attempt as f64;
    (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / n as f64 + offset;
            CFloat::from_f64(radius * theta.cos(), radius * theta.sin())
        })
        .collect()
}

fn gauss_abs_f64(c: &GaussRat) -> f64 {
    let re = c.re.to_f64().unwrap_or(0.0);
    let im = c.im.to_f64().unwrap_or(0.0);
    re.hypot(im)
}

/// Aberth–Ehrlich iteration in place; returns whether every correction fell
/// below the working precision.
fn aberth(coeffs: &[CFloat], dcoeffs: &[CFloat], z: &mut [CFloat], prec: u32, max_iter: usize) -> bool {
    let n = z.len();
    let one = CFloat::from_f64(1.0, 0.0);
    let nudge = CFloat::new(BigFloat::pow2(-(prec as i64) / 2), BigFloat::pow2(-(prec as i64) / 3));
    for _ in 0..max_iter {
        let mut done = true;
        for i in 0..n {
            let fz = horner(coeffs, &z[i], prec);
            if fz.is_zero() {
                continue;
            }
            let dfz = horner(dcoeffs, &z[i], prec);
            let mut sum = CFloat::zero();
            let mut collided = false;
            for j in 0..n {
                if j == i {
                    continue;
                }
                let diff = z[i].sub(&z[j], prec);
                if diff.is_zero() {
                    collided = true;
                    break;
                }
                sum = sum.add(&one.div(&diff, prec), prec);
            }
            if collided || dfz.is_zero() {
                z[i] = z[i].add(&nudge, prec);
                done = false;
                continue;
            }
            let ratio = fz.div(&dfz, prec);
            let denom = one.sub(&ratio.mul(&sum, prec), prec);
            let step = if denom.is_zero() { ratio } else { ratio.div(&denom, prec) };
            z[i] = z[i].sub(&step, prec);
            if !small_step(&step, &z[i], prec) {
                done = false;
            }
        }
        if done {
            return true;
        }
    }
    false
}

/// Inclusion radii `d·|W_i|` for distinct centers, or `None` when the
/// centers coincide or the disks are not pairwise disjoint.
fn inclusion_radii(f: &Poly, centers: &[GaussRat]) -> Option<Vec<BigFloat>> {
    let n = centers.len();
    let lead = f.lead();
    let scale = BigRational::from_integer(BigInt::from((n * n) as u64));
    let mut radii = Vec::with_capacity(n);
    for (i, c) in centers.iter().enumerate() {
        let mut denom = lead.clone();
        for (j, other) in centers.iter().enumerate() {
            if j != i {
                denom = &denom * &(c - other);
            }
        }
        if denom.is_zero() {
            return None;
        }
        let w = &f.eval(c) / &denom;
        radii.push(sqrt_upper(&(w.norm_sqr() * &scale)));
    }
    for i in 0..n {
        let ri = radii[i].to_rational();
        for j in i + 1..n {
            let gap = (&centers[i] - &centers[j]).norm_sqr();
            let r = &ri + radii[j].to_rational();
            if gap <= &r * &r {
                return None;
            }
        }
    }
    Some(radii)
}

/// A dyadic upper bound on `√q` with about 64 significant bits.
pub(crate) fn sqrt_upper(q: &BigRational) -> BigFloat {
    if q.is_zero() {
        return BigFloat::zero();
    }
    debug_assert!(q.is_positive());
    let (a, b) = (q.numer(), q.denom());
    let log2 = a.bits() as i64 - b.bits() as i64;
    let s = 66 - log2 / 2;
    // t = q·4^s, and isqrt(floor t) + 1 > √t
    let t = if s >= 0 {
        (a << (2 * s) as usize).div_floor(b)
    } else {
        a.div_floor(&(b << (-2 * s) as usize))
    };
    BigFloat::from_parts(t.sqrt() + 1, -s)
}

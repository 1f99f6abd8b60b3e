use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{ArithError, GaussRat};

/// Dense univariate polynomial over the Gaussian rationals, lowest degree
/// first. Trailing zeros are always trimmed, so the zero polynomial is the
/// empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<GaussRat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<GaussRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `z`.
    pub fn x() -> Self {
        Self::monomial(GaussRat::one(), 1)
    }

    pub fn monomial(c: GaussRat, k: usize) -> Self {
        let mut coeffs = vec![GaussRat::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| GaussRat::from_int(c)).collect())
    }

    /// `z - root`.
    pub fn linear(root: &GaussRat) -> Self {
        Self::new(vec![-root, GaussRat::one()])
    }

    /// Builds `Σ c·z^k` from `(k, c)` pairs; repeated exponents accumulate.
    pub fn from_terms<I: IntoIterator<Item = (usize, GaussRat)>>(terms: I) -> Self {
        let mut coeffs: Vec<GaussRat> = Vec::new();
        for (k, c) in terms {
            if coeffs.len() <= k {
                coeffs.resize(k + 1, GaussRat::zero());
            }
            coeffs[k] += &c;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[GaussRat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<GaussRat> {
        self.coeffs
    }

    /// Coefficient of `z^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> GaussRat {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussRat::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn lead(&self) -> GaussRat {
        self.coeffs.last().cloned().unwrap_or_else(GaussRat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &GaussRat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.lead().inv() {
            Some(inv) => self.scale(&inv),
            None => Poly::zero(),
        }
    }

    pub fn eval(&self, z: &GaussRat) -> GaussRat {
        let mut acc = GaussRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &GaussRat::from_int(k as i64))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(inner(z))` by Horner's scheme.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Euclidean division. Panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let inv_lead = divisor.lead().inv().expect("nonzero lead");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![GaussRat::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &inv_lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let t = &c * d;
                rem[k + j] -= &t;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        !self.is_zero() && other.rem(self).is_zero()
    }

    /// `p(αz + β)`.
    pub fn affine_substitute(&self, alpha: &GaussRat, beta: &GaussRat) -> Result<Poly, ArithError> {
        if alpha.is_zero() {
            return Err(ArithError::InvalidTransform(
                "affine substitution needs a nonzero scale".into(),
            ));
        }
        Ok(self.compose(&Poly::new(vec![beta.clone(), alpha.clone()])))
    }

    /// `z^n p(1/z)`: coefficients reversed inside a window of length `n+1`.
    pub fn reversal(&self, n: usize) -> Result<Poly, ArithError> {
        let d = self.deg();
        if !self.is_zero() && n < d {
            return Err(ArithError::InvalidTransform(format!(
                "reversal window {n} is below the degree {d}"
            )));
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n + 1, GaussRat::zero());
        coeffs.reverse();
        Ok(Poly::new(coeffs))
    }

    /// Reversal with the window equal to the degree.
    pub fn reversed(&self) -> Poly {
        self.reversal(self.deg()).expect("window equals degree")
    }
}

/// Monic greatest common divisor.
pub fn poly_gcd(p: &Poly, q: &Poly) -> Result<Poly, ArithError> {
    if p.is_zero() && q.is_zero() {
        return Err(ArithError::DegenerateInput("gcd of two zero polynomials"));
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    while !b.is_zero() {
        let r = a.rem(&b);
        a = b;
        // keep intermediate remainders monic to limit coefficient growth
        b = r.monic();
    }
    Ok(a.monic())
}

/// Squarefree decomposition `p / lead(p) = Π F_m^m` by Yun's algorithm.
///
/// Returns the nontrivial monic factors in strictly increasing order of
/// multiplicity.
pub fn squarefree_decomposition(p: &Poly) -> Result<Vec<(Poly, usize)>, ArithError> {
    if p.is_zero() {
        return Err(ArithError::DegenerateInput(
            "squarefree decomposition of the zero polynomial",
        ));
    }
    let f = p.monic();
    let mut out = Vec::new();
    if f.is_constant() {
        return Ok(out);
    }
    let df = f.derivative();
    let c = poly_gcd(&f, &df)?;
    let mut w = f.exact_div(&c).expect("gcd divides");
    let mut y = df.exact_div(&c).expect("gcd divides");
    let mut z = &y - &w.derivative();
    let mut m = 1;
    while !w.is_constant() {
        let g = poly_gcd(&w, &z)?;
        if !g.is_constant() {
            out.push((g.clone(), m));
        }
        w = w.exact_div(&g).expect("gcd divides");
        y = z.exact_div(&g).expect("gcd divides");
        z = &y - &w.derivative();
        m += 1;
    }
    Ok(out)
}

/// Monic squarefree part (the product of all strata).
pub fn squarefree_part(p: &Poly) -> Result<Poly, ArithError> {
    if p.is_zero() {
        return Err(ArithError::DegenerateInput(
            "squarefree part of the zero polynomial",
        ));
    }
    let f = p.monic();
    let g = poly_gcd(&f, &f.derivative())?;
    Ok(f.exact_div(&g).expect("gcd divides").monic())
}

/// Pseudo-remainder `lead(b)^(deg a - deg b + 1) · a mod b`.
fn pseudo_rem(a: &Poly, b: &Poly) -> Poly {
    let delta = a.deg() - b.deg();
    a.rem(b).scale(&b.lead().pow(delta as u32 + 1))
}

/// Resultant by the subresultant pseudo-remainder sequence.
pub fn resultant(p: &Poly, q: &Poly) -> GaussRat {
    if p.is_zero() || q.is_zero() {
        return GaussRat::zero();
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    let mut sign_neg = false;
    if a.deg() < b.deg() {
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            sign_neg = true;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let finish = |v: GaussRat, neg: bool| if neg { -v } else { v };
    if b.deg() == 0 {
        return finish(b.lead().pow(a.deg() as u32), sign_neg);
    }
    let mut g = GaussRat::one();
    let mut h = GaussRat::one();
    loop {
        let delta = a.deg() - b.deg();
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        let divisor = &g * &h.pow(delta as u32);
        b = r.scale(&divisor.inv().expect("nonzero subresultant divisor"));
        g = a.lead();
        // h <- g^δ / h^(δ-1)
        h = if delta == 0 {
            h
        } else {
            &g.pow(delta as u32) / &h.pow(delta as u32 - 1)
        };
        if b.is_zero() {
            return GaussRat::zero();
        }
        if b.deg() == 0 {
            let da = a.deg() as u32;
            let v = &b.lead().pow(da) / &h.pow(da - 1);
            return finish(v, sign_neg);
        }
    }
}

/// `R(w) = Res_z(p'(z), w - p(z))`, whose distinct roots are the critical
/// values of `p`.
///
/// `R` has degree `deg p - 1` in `w`; it is recovered from `deg p` scalar
/// resultants at `w = 0, 1, …` by Newton interpolation.
pub fn critical_value_resultant(p: &Poly) -> Result<Poly, ArithError> {
    let n = p.deg();
    if p.is_zero() || n < 2 {
        return Err(ArithError::NoCriticalPoints { degree: n });
    }
    let dp = p.derivative();
    let nodes: Vec<GaussRat> = (0..n as i64).map(GaussRat::from_int).collect();
    let values: Vec<GaussRat> = nodes
        .iter()
        .map(|w| {
            let shifted = &Poly::constant(w.clone()) - p;
            resultant(&dp, &shifted)
        })
        .collect();
    Ok(interpolate(&nodes, &values))
}

/// Newton-form interpolation through `(nodes[i], values[i])`.
pub fn interpolate(nodes: &[GaussRat], values: &[GaussRat]) -> Poly {
    assert_eq!(nodes.len(), values.len());
    let n = nodes.len();
    let mut dd = values.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &nodes[i] - &nodes[i - j];
            dd[i] = &num / &den;
        }
    }
    let mut acc = Poly::zero();
    for i in (0..n).rev() {
        acc = &(&acc * &Poly::linear(&nodes[i])) + &Poly::constant(dd[i].clone());
    }
    acc
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![GaussRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Prints the bracketed little-endian literal, e.g. `[-1, 0, 0, 0, 1]`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{self}")
    }
}

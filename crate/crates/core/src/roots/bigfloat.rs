use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Binary floating-point number `mant · 2^exp` with an unbounded mantissa.
///
/// Values are kept normalized (odd mantissa, or zero with exponent 0), so
/// equality is value equality. Rounding to a precision happens only in the
/// arithmetic helpers that take a `prec` argument.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
}

impl BigFloat {
    pub fn zero() -> Self {
        BigFloat {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn from_parts(mant: BigInt, exp: i64) -> Self {
        let mut f = BigFloat { mant, exp };
        f.normalize();
        f
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_parts(BigInt::from(n), 0)
    }

    /// `2^e`.
    pub fn pow2(e: i64) -> Self {
        BigFloat {
            mant: BigInt::one(),
            exp: e,
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    fn normalize(&mut self) {
        if self.mant.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.mant.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mant >>= tz;
            self.exp += tz as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    /// Rounds to at most `prec` significant bits, ties away from zero.
    pub fn round(&self, prec: u32) -> Self {
        let bits = self.mant.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = bits - prec as u64;
        let negative = self.mant.is_negative();
        let mag = self.mant.magnitude().clone();
        let half = num_bigint::BigUint::one() << (shift - 1);
        let rounded = (mag + half) >> shift;
        let mant = BigInt::from_biguint(if negative { Sign::Minus } else { Sign::Plus }, rounded);
        Self::from_parts(mant, self.exp + shift as i64)
    }

    /// Approximate `floor(log2 |x|)`; `None` for zero.
    pub fn magnitude(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exp + self.mant.bits() as i64 - 1)
        }
    }

    pub fn neg(&self) -> Self {
        BigFloat {
            mant: -self.mant.clone(),
            exp: self.exp,
        }
    }

    pub fn abs(&self) -> Self {
        BigFloat {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    pub fn add(&self, other: &Self, prec: u32) -> Self {
        if self.is_zero() {
            return other.round(prec);
        }
        if other.is_zero() {
            return self.round(prec);
        }
        let (ma, mb) = (self.magnitude().unwrap(), other.magnitude().unwrap());
        // an addend entirely below the rounding unit only matters for ties
        let gap = prec as i64 + 4;
        if ma - mb > gap {
            return self.round(prec);
        }
        if mb - ma > gap {
            return other.round(prec);
        }
        let e = self.exp.min(other.exp);
        let m = (&self.mant << (self.exp - e) as usize) + (&other.mant << (other.exp - e) as usize);
        Self::from_parts(m, e).round(prec)
    }

    pub fn sub(&self, other: &Self, prec: u32) -> Self {
        self.add(&other.neg(), prec)
    }

    pub fn mul(&self, other: &Self, prec: u32) -> Self {
        Self::from_parts(&self.mant * &other.mant, self.exp + other.exp).round(prec)
    }

    /// Quotient rounded to `prec` bits. Panics on division by zero.
    pub fn div(&self, other: &Self, prec: u32) -> Self {
        assert!(!other.is_zero(), "BigFloat division by zero");
        if self.is_zero() {
            return Self::zero();
        }
        let shift = (prec as i64 + 2 + other.mant.bits() as i64 - self.mant.bits() as i64).max(0);
        let num = &self.mant << shift as usize;
        let q = num.div_floor(&other.mant);
        Self::from_parts(q, self.exp - other.exp - shift).round(prec)
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as usize)
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    /// Nearest `prec`-bit value to an exact rational.
    pub fn from_rational(r: &BigRational, prec: u32) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        let (n, d) = (r.numer(), r.denom());
        let shift = prec as i64 + 2 + d.bits() as i64 - n.bits() as i64;
        let q = if shift >= 0 {
            (n << shift as usize).div_floor(d)
        } else {
            n.div_floor(&(d << (-shift) as usize))
        };
        Self::from_parts(q, -shift).round(prec)
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 || !x.is_finite() {
            return Self::zero();
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mant, exp) = if raw_exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        Self::from_parts(BigInt::from(mant) * sign, exp)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let r = self.round(53);
        let m = r.mant.to_f64().unwrap_or(0.0);
        let e = r.exp.clamp(-2000, 2000) as i32;
        m * 2f64.powi(e / 2) * 2f64.powi(e - e / 2)
    }

    /// Lossless hexadecimal literal, e.g. `0x1.8p+1` or `-0x1p-53`.
    pub fn to_hex(&self) -> String {
        if self.is_zero() {
            return "0x0p+0".to_string();
        }
        let sign = if self.is_negative() { "-" } else { "" };
        let mag = self.mant.magnitude();
        let bits = mag.bits();
        let e = self.exp + bits as i64 - 1;
        let frac_bits = bits - 1;
        let exp_str = if e >= 0 { format!("+{e}") } else { e.to_string() };
        if frac_bits == 0 {
            return format!("{sign}0x1p{exp_str}");
        }
        let pad = (4 - frac_bits % 4) % 4;
        let frac = (mag - (num_bigint::BigUint::one() << (bits - 1))) << pad;
        let digits = ((frac_bits + pad) / 4) as usize;
        let mut hex = frac.to_str_radix(16);
        while hex.len() < digits {
            hex.insert(0, '0');
        }
        format!("{sign}0x1.{hex}p{exp_str}")
    }

    /// Parses `[-]0x<hex>[.<hex>]p<exp>`.
    pub fn parse_hex(text: &str) -> Option<Self> {
        let t = text.trim();
        let (negative, t) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        let t = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X"))?;
        let (body, exp) = t.split_once(['p', 'P'])?;
        let exp: i64 = exp.parse().ok()?;
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        let digits = format!("{int_part}{frac_part}");
        let mant = BigInt::parse_bytes(digits.as_bytes(), 16)?;
        let mant = if negative { -mant } else { mant };
        Some(Self::from_parts(mant, exp - 4 * frac_part.len() as i64))
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigFloat {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as usize;
        let b = &other.mant << (other.exp - e) as usize;
        a.cmp(&b)
    }
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_hex())
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_hex())
    }
}

/// Complex number with `BigFloat` parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFloat {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl CFloat {
    pub fn zero() -> Self {
        CFloat {
            re: BigFloat::zero(),
            im: BigFloat::zero(),
        }
    }

    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        CFloat { re, im }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        CFloat::new(BigFloat::from_f64(re), BigFloat::from_f64(im))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Self, prec: u32) -> Self {
        CFloat::new(self.re.add(&o.re, prec), self.im.add(&o.im, prec))
    }

    pub fn sub(&self, o: &Self, prec: u32) -> Self {
        CFloat::new(self.re.sub(&o.re, prec), self.im.sub(&o.im, prec))
    }

    pub fn mul(&self, o: &Self, prec: u32) -> Self {
        let wide = prec + 8;
        let re = self.re.mul(&o.re, wide).sub(&self.im.mul(&o.im, wide), prec);
        let im = self.re.mul(&o.im, wide).add(&self.im.mul(&o.re, wide), prec);
        CFloat::new(re, im)
    }

    pub fn div(&self, o: &Self, prec: u32) -> Self {
        let wide = prec + 8;
        let den = o.re.mul(&o.re, wide).add(&o.im.mul(&o.im, wide), wide);
        let re = self.re.mul(&o.re, wide).add(&self.im.mul(&o.im, wide), wide);
        let im = self.im.mul(&o.re, wide).sub(&self.re.mul(&o.im, wide), wide);
        CFloat::new(re.div(&den, prec), im.div(&den, prec))
    }

    /// Approximate `floor(log2 |z|)` within one unit; `None` for zero.
    pub fn magnitude(&self) -> Option<i64> {
        match (self.re.magnitude(), self.im.magnitude()) {
            (None, None) => None,
            (a, b) => Some(a.unwrap_or(i64::MIN).max(b.unwrap_or(i64::MIN))),
        }
    }
}

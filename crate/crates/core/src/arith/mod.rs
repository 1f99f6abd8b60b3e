//! Exact arithmetic over `ℚ(i)` and dense univariate polynomials.

mod gauss;
mod poly;

pub use gauss::GaussRat;
pub use poly::{
    critical_value_resultant, interpolate, poly_gcd, resultant, squarefree_decomposition,
    squarefree_part, Poly,
};

use num_bigint::BigInt;
use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("no critical points: degree {degree} is below 2")]
    NoCriticalPoints { degree: usize },
    #[error("invalid transform: {0}")]
    InvalidTransform(String),
}

/// Binomial coefficient as an exact integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `num/den` as an exact rational. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

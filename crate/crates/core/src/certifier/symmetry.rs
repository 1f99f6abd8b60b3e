use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{GaussRat, Poly};

/// Symmetry `P(a z + b) = c P(z)` of order `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    /// `a` is a root of unity in `ℚ(i)` (order 2 or 4).
    Exact { a: GaussRat, b: GaussRat, c: GaussRat },
    /// `a` is a primitive root of unity of this order outside `ℚ(i)`;
    /// `b = centroid·(1 − a)` and `c = a^n` are implied.
    RootOfUnity { order: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymmetryKind {
    TrivialOnly,
    Cyclic { order: usize, generator: Generator },
    Continuous,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verification {
    /// `P(az+b) − c·P(z)` expanded and found identically zero.
    CoefficientIdentity,
    /// Every centered exponent gap is divisible by the order.
    SupportGcd,
    /// Nothing to verify.
    None,
}

impl Verification {
    pub fn as_str(self) -> &'static str {
        match self {
            Verification::CoefficientIdentity => "coefficient-identity",
            Verification::SupportGcd => "support-gcd",
            Verification::None => "none",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport {
    pub kind: SymmetryKind,
    pub centroid: GaussRat,
    /// `P(z + centroid)`, whose `z^(n-1)` coefficient vanishes.
    pub centered: Poly,
    pub verification: Verification,
}

impl SymmetryReport {
    pub fn is_trivial(&self) -> bool {
        self.kind == SymmetryKind::TrivialOnly
    }

    pub fn order(&self) -> Option<usize> {
        match self.kind {
            SymmetryKind::Cyclic { order, .. } => Some(order),
            _ => None,
        }
    }

    /// A nontrivial symmetry `(a, b, c)` with `a` in `ℚ(i)`, if one exists.
    ///
    /// For cyclic orders outside `{2, 4}` this falls back to the order-4 or
    /// order-2 subgroup when the order is divisible by 4 or 2.
    pub fn rational_symmetry(&self) -> Option<(GaussRat, GaussRat, GaussRat)> {
        let SymmetryKind::Cyclic { order, generator } = &self.kind else {
            return None;
        };
        if let Generator::Exact { a, b, c } = generator {
            return Some((a.clone(), b.clone(), c.clone()));
        }
        let a = if order % 4 == 0 {
            GaussRat::i()
        } else if order % 2 == 0 {
            GaussRat::from_int(-1)
        } else {
            return None;
        };
        Some(exact_generator(&a, &self.centroid, self.centered.deg()))
    }
}

fn exact_generator(a: &GaussRat, centroid: &GaussRat, n: usize) -> (GaussRat, GaussRat, GaussRat) {
    let b = centroid * &(&GaussRat::one() - a);
    (a.clone(), b, a.pow(n as u32))
}

/// Root centroid `−a_(n−1) / (n·a_n)`.
pub fn root_centroid(p: &Poly) -> GaussRat {
    let n = p.deg();
    let num = -p.coeff(n - 1);
    &num / &(&p.lead() * &GaussRat::from_int(n as i64))
}

/// Detects the affine symmetries `P(az+b) = cP(z)` of `p` (degree ≥ 1).
///
/// After centering at the root centroid, the symmetry group is cyclic of
/// order `d = gcd{n − i : ã_i ≠ 0, i < n}`; an empty support means every
/// scaling is a symmetry.
pub fn affine_symmetry(p: &Poly) -> SymmetryReport {
    let n = p.deg();
    assert!(n >= 1, "affine_symmetry needs degree >= 1");
    let centroid = root_centroid(p);
    let centered = p
        .affine_substitute(&GaussRat::one(), &centroid)
        .expect("unit scale");
    let d = support_gcd(&centered);
    let (kind, verification) = match d {
        None => (SymmetryKind::Continuous, Verification::None),
        Some(1) => (SymmetryKind::TrivialOnly, Verification::None),
        Some(order) => {
            let a = match order {
                2 => Some(GaussRat::from_int(-1)),
                4 => Some(GaussRat::i()),
                _ => None,
            };
            match a {
                Some(a) => {
                    let (a, b, c) = exact_generator(&a, &centroid, n);
                    assert!(
                        holds_exactly(p, &a, &b, &c),
                        "support gcd {order} without a coefficient identity"
                    );
                    (
                        SymmetryKind::Cyclic {
                            order,
                            generator: Generator::Exact { a, b, c },
                        },
                        Verification::CoefficientIdentity,
                    )
                }
                None => (
                    SymmetryKind::Cyclic {
                        order,
                        generator: Generator::RootOfUnity { order },
                    },
                    Verification::SupportGcd,
                ),
            }
        }
    };
    SymmetryReport {
        kind,
        centroid,
        centered,
        verification,
    }
}

/// `gcd{n − i : coefficient i nonzero, i < n}`; `None` for a monomial.
pub fn support_gcd(centered: &Poly) -> Option<usize> {
    let n = centered.deg();
    centered.coeffs()[..n]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, _)| n - i)
        .reduce(|a, b| a.gcd(&b))
}

/// Exact check of `P(az + b) = c·P(z)`.
pub fn holds_exactly(p: &Poly, a: &GaussRat, b: &GaussRat, c: &GaussRat) -> bool {
    p.affine_substitute(a, b)
        .map(|lhs| lhs == p.scale(c))
        .unwrap_or(false)
}

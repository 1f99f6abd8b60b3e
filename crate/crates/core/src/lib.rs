//! Exact toolkit for unique range set polynomials: family constructors,
//! hypothesis certificates, affine-symmetry refutation and weighted set
//! sharing for rational maps.

pub mod arith;
pub mod parse;
pub mod roots;
pub mod families;
pub mod certifier;
pub mod sharing;
pub mod cli;

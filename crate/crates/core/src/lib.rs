//! Exact Demazure operators, parabolic double cosets, Frobenius dual bases and
//! atomic Leibniz rules over an arbitrary exact coefficient ring.
//!
//! Everything is generic over [`scalar::Coeff`]; the aliases below fix the
//! common choices.

pub mod cosets;
pub mod coxeter;
pub mod frobenius;
pub mod leibniz;
pub mod linalg;
pub mod poly;
pub mod realization;
pub mod scalar;
pub mod symmetric;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use scalar::{Coeff, Field, ModP};

pub type ZPoly = poly::Polynomial<BigInt>;
pub type QPoly = poly::Polynomial<BigRational>;
pub type ZRealization = realization::Realization<BigInt>;
pub type QRealization = realization::Realization<BigRational>;
pub type ZDualBases = frobenius::DualBases<BigInt>;
pub type ZContext = leibniz::LeibnizContext<BigInt>;
pub type ZCertificate = leibniz::LeibnizCertificate<BigInt>;

//! Constructive representation theory of the 0-Schur algebra S₀(n,r), the
//! 0-Hecke algebra H_r(0) and the degenerate quantum group U₀(gl_n), over
//! exact rationals.

pub mod cartan;
pub mod compositions;
pub mod crystal;
pub mod error;
pub mod exactlin;
pub mod export;
pub mod functors;
pub mod hecke;
pub mod matrices;
pub mod module;
pub mod relations;
pub mod schur;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};

/// Exact rational scalar.
pub type Rat = num_rational::BigRational;
/// Dense rational matrix.
pub type RatMatrix = exactlin::Matrix<Rat>;
/// Rational subspace in reduced echelon form.
pub type RatSubspace = exactlin::Subspace<Rat>;

/// Integer as a rational.
pub fn rat(x: i64) -> Rat {
    Rat::from_integer(x.into())
}

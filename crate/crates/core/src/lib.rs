pub mod coxeter;
pub mod cyclotomic;
pub mod diagram;
pub mod error;
pub mod matrix;
pub mod poincare;
pub mod poly;
pub mod ratfunc;
pub mod report;
pub mod roots;
pub mod scalar;
pub mod singularities;
pub mod tables;
pub mod verify;
pub mod weights;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use scalar::Scalar;
pub use weights::{DynkinLabel, ReprType, WeightSequence};

pub type Rational = BigRational;
pub type IntPoly = Poly<BigInt>;
pub type RatPoly = Poly<BigRational>;
pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<BigRational>;

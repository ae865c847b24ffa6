//! The coefficient rings K ⊂ KN ⊂ KH.

mod bivariate;
mod klein;
mod laurent;
mod scalar;

pub use klein::Klein;
pub use laurent::{Exponent, LaurentPoly, Var};
pub(crate) use laurent::{write_monomial, write_term};
pub use scalar::{is_prime, Field, Scalar};

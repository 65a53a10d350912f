//! Colored Jones polynomials of knots presented as closed braids, computed
//! by summing stacked walks read off a deformed Burau matrix.

pub mod bench;
pub mod braid;
pub mod burau;
pub mod cjp;
pub mod error;
pub mod laurent;
pub mod oracle;
pub mod par;
pub mod table;
pub mod weyl;

pub use braid::{BraidWord, Crossing, Sign};
pub use cjp::{colored_jones, CjpOptions, CjpResult};
pub use error::{Error, Result};
pub use laurent::LaurentPolynomial;
pub use weyl::{ExponentKey, KeyedMonomial, Letter, LetterCounts, WalkSum};

//! Exact construction and certification of biregular functions of two
//! paravector variables.
//!
//! The pipeline builds `F0 = u1 P + v1 w P + u2 P n + v2 w P n` from
//! holomorphic axial data and a homogeneous biregular polynomial `P`, applies
//! `Lap_x^{k+(m-1)/2} Lap_y^{l+(m-1)/2}`, and certifies the result with exact
//! rational arithmetic. A second route computes the same function from
//! closed-form axial operators; the two must agree term for term.

pub mod axial;
pub mod clifford;
pub mod error;
pub mod fueter;
pub mod generators;
pub mod json;
pub mod mvpoly;
pub mod numeric;

pub use clifford::{AlgebraContext, Blade, Multivector, Scalar};
pub use error::{Error, Result};
pub use mvpoly::{Block, CliffPoly, Monomial, OperatorSpec, Side, VarId};

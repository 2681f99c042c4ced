//! Exact flatness testing for finitely presented modules over polynomial
//! bases.
//!
//! The crate is generic over the coefficient [`Field`]; [`Rational`] and the
//! prime fields [`Fp`] are provided, with `Q*` aliases below for the common
//! rational case.

pub mod context;
pub mod error;
pub mod expr;
pub mod field;
pub mod free;
pub mod groebner;
pub mod ideal;
pub mod monomial;
pub mod poly;
pub mod syzygy;

pub use context::{Ctx, GbStats};
pub use error::{Error, Result};
pub use field::{Field, Fp, Rational};
pub use free::{FreeElem, Matrix};
pub use groebner::{normal_form, normal_form_poly, Basis};
pub use ideal::{Ideal, Submodule};
pub use monomial::{BaseOrder, Monomial, TermOrder};
pub use poly::Poly;
pub use syzygy::{kernel_of_map, syzygies};

pub type QPoly = Poly<Rational>;
pub type QFreeElem = FreeElem<Rational>;

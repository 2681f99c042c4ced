//! Finitely presented modules over affine algebras of a polynomial base
//! ring, with tensor constructions and torsion over the base.

pub mod algebra;
pub mod module;
pub mod tensor;
pub mod torsion;

pub use algebra::{AffineAlgebra, BaseTower};
pub use module::PresentedModule;
pub use tensor::{tensor_over_base, tensor_over_field, tensor_power};
pub use torsion::TorsionDecomposition;

pub type QAlgebra = AffineAlgebra<flatlab_core::Rational>;
pub type QModule = PresentedModule<flatlab_core::Rational>;

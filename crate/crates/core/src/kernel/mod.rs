//! Exact scalar, polynomial and symmetric-matrix arithmetic.

pub mod binary;
pub mod dual;
pub mod ldlt;
pub mod linalg;
pub mod mpoly;
mod parse;
pub mod rat;
pub mod symmat;
pub mod upoly;

pub use binary::BinaryForm;
pub use dual::DualRat;
pub use ldlt::{ldlt_signature, PivotBlock, SignatureCert};
pub use mpoly::{Monomial, MPoly, Scalar};
pub use rat::Rat;
pub use symmat::SymMat;
pub use upoly::UPoly;

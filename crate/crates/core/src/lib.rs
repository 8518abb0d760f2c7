//! Exact certificates for hyperbolicity of real projective varieties.
//!
//! The crate is organised bottom-up:
//!
//! * [`kernel`]: rationals, dual numbers, sparse polynomials, symmetric
//!   matrices and an exact pivoted LDLᵀ that reports inertia.
//! * [`realcert`]: Hermite (trace form) matrices, Sturm chains, Bézout
//!   matrices and interlacing certificates for univariate data.
//! * [`engine`]: hyperbolicity verdicts for hypersurfaces, quadrics and
//!   rational curves, the Nuij operator and parametric family scans.
//! * [`fanlab`]: monomial ideals, Hilbert data, canonical distractions,
//!   fans and the tightening path driver.
//! * [`defcheck`]: zero-dimensional quotient algebras, trace forms,
//!   first-order deformations over the dual numbers and strictness checks.
//! * [`cli`]: task documents, certificates and the bundled example corpus.
//!
//! Everything is exact. No floating-point value ever feeds a verdict.

pub mod cli;
pub mod defcheck;
pub mod engine;
pub mod error;
pub mod fanlab;
pub mod kernel;
pub mod realcert;

pub use error::{Error, Result};
pub use kernel::{BinaryForm, DualRat, MPoly, Rat, SignatureCert, SymMat, UPoly};

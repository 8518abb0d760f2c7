//! Zero-dimensional quotient algebras, trace forms and first-order
//! deformations over the dual numbers.

pub mod algebra;
pub mod deform;
pub mod groebner;

pub use algebra::{quotient_algebra, QuotientAlgebra};
pub use deform::{
    apply_deformation, deformation_form, deformation_form_with_lifts, is_strict, socle_shortcut, DeformationForm,
    DeformationHom, DeformedAlgebra, SocleOutcome, SocleVerdict, StrictnessCert, FIRST_ORDER_QUALIFIER,
};
pub use groebner::{buchberger, buchberger_with, MonomialOrder, GroebnerBasis, ScopeGuard};
pub mod restrict;

pub use restrict::{restrict_deformation, AffineChart, Restriction};

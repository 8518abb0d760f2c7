//! Monomial ideals, distractions, fans and the tightening path.

pub mod distraction;
pub mod fan;
pub mod hilbert;
pub mod monomial;
pub mod tighten;

pub use distraction::{canonical_distraction, distraction_fan, sigma_family, DistractionAssignment};
pub use fan::{fan_disjoint_from_e, is_fan, is_tight_fan, n_star, n_star_geq, n_star_monomial, p_invariant, Fan, LinearPrime};
pub use hilbert::{hilbert, HilbertData};
pub use monomial::MonomialIdeal;
pub use tighten::{
    distraction_step, fan_snapshot, ideal_hilbert, mu_sequence, scheme_disjoint_from_e, sigma_step, tighten_driver,
    tighten_step, DriverOutcome, PathStep, Snapshot, StepKind, TightenOutcome, TightenReport, DEFAULT_MU_BUDGET,
};

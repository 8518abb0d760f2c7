//! Hyperbolicity verdicts for hypersurfaces, quadrics and rational curves,
//! the Nuij operator and parametric family scans.

pub mod curve;
pub mod hypersurface;
pub mod nuij;
pub mod quadric;
pub mod sample;
pub mod subspace;

pub use curve::{curve_hyperbolicity, projection_forms, CurveHypCert, CurveVerdict, PencilWitness, RationalCurveParam};
pub use hypersurface::{hypersurface_scan, line_hyperbolicity, LineVerdict, ScanReport, ScanVerdict};
pub use nuij::{nuij_smooth, nuij_step, nuij_sweeps};
pub use quadric::{gram_matrix, quadric_hyperbolicity, QuadricVerdict};
pub use sample::{Sampler, SamplerKind};
pub use subspace::LinearSubspace;
pub mod family;

pub use family::{
    family_scan, singularity_scan, specialize, variety_scan, FiberChecker, FiberEntry, FiberReport, ParamPoly,
    SingularityScan, VarietyScan,
};

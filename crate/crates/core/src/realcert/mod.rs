//! Real-rootedness and interlacing certificates for univariate data.

pub mod bezout;
pub mod hermite;
pub mod sturm;

pub use bezout::{bezout_matrix, interlace_certificate, InterlaceCert, InterlaceVerdict};
pub use hermite::{hermite_matrix, newton_power_sums, real_rooted_status, RealRootStatus, RootTag};
pub use sturm::{sturm_count_in, sturm_distinct_real_roots, sturm_sequence};

//! Task documents, certificates and the bundled corpus.

pub mod corpus;
pub mod run;
pub mod task;

pub use run::{run, summary, Certificate, Outcome};
pub use task::{Task, TaskDocument};

//! Driving a fan of two lines to a tight fan by linear specializations.

use hypcert::fanlab::{tighten_driver, DriverOutcome, Fan, DEFAULT_MU_BUDGET};

fn main() -> hypcert::Result<()> {
    let fan = Fan::parse("(x2 - x0, x3); (x2, x3 - x0)", 4, 1)?;
    println!("start {fan}, p = {}, tight: {}", fan.p_invariant()?, fan.is_tight());
    let report = tighten_driver(&fan, DEFAULT_MU_BUDGET)?;
    for (i, s) in report.steps.iter().enumerate() {
        println!("step {i} {:?} {:?}", s.kind, s.parameters);
        println!("  {} -> {}", s.input, s.output);
        println!("  p {:?} -> {:?}, Hilbert polynomial {}", s.before.p, s.after.p, s.after.hilbert_polynomial);
    }
    match &report.outcome {
        DriverOutcome::Tight { fan } => println!("tight: {fan}"),
        DriverOutcome::NeedsSchemeStep { fan, last_reason, .. } => println!("stuck at {fan}: {last_reason}"),
    }
    Ok(())
}

//! A sampled scan of the reciprocal threefold section family: clean for small
//! positive t, falsified once t leaves the hyperbolic range.

use hypcert::cli::task::RatText;
use hypcert::cli::{corpus, run, Task};
use hypcert::kernel::rat::rat;

fn main() -> hypcert::Result<()> {
    let mut doc = corpus::load("reciprocal-threefold-section")?;
    if let Task::FamilyScan { t, .. } = &mut doc.task {
        *t = [(1, 50), (1, 20), (1, 10), (1, 5), (-1, 20)].iter().map(|&(n, d)| RatText(rat(n, d))).collect();
    }
    let cert = run(&doc)?;
    for f in cert.result["fibers"].as_array().into_iter().flatten() {
        let r = &f["report"];
        println!(
            "t = {:>6}: {} ({} of {} directions fail)",
            f["t"].as_str().unwrap_or("?"),
            r["verdict"].as_str().unwrap_or("?"),
            r["failures"].as_array().map_or(0, |v| v.len()),
            r["directions"]
        );
    }
    Ok(())
}

//! The reciprocal surface example from the bundled corpus: first-order strictness at the
//! four nodes, then a sampled scan of the family for small parameters.

use hypcert::cli::{corpus, run, summary};

fn main() -> hypcert::Result<()> {
    let doc = corpus::load("reciprocal-surface")?;
    let cert = run(&doc)?;
    print!("{}", summary(&cert));
    for sub in cert.result.as_array().into_iter().flatten() {
        if let Some(fibers) = sub["result"]["fibers"].as_array() {
            for f in fibers {
                let r = &f["report"];
                println!("t = {}: {} directions, {} failures", f["t"], r["directions"], r["failures"].as_array().map_or(0, |v| v.len()));
            }
        }
    }
    Ok(())
}

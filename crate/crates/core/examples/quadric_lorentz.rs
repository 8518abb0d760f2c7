//! Exact verdicts for quadrics, checked against a line scan.

use hypcert::engine::{hypersurface_scan, quadric_hyperbolicity, Sampler};
use hypcert::kernel::rat::vec_of;
use hypcert::MPoly;

fn main() -> hypcert::Result<()> {
    let cases = [
        ("x0^2 - x1^2 - x2^2 - x3^2", vec_of(&[1, 0, 0, 0])),
        ("x0^2 - x1^2 - x2^2 - x3^2", vec_of(&[0, 1, 0, 0])),
        ("x0^2 + x1^2 - x2^2 - x3^2", vec_of(&[1, 0, 0, 0])),
        ("x0*x1 - x2^2 - x3^2", vec_of(&[1, 1, 0, 0])),
    ];
    let sampler = Sampler::random(200, 11);
    for (text, e) in &cases {
        let q = MPoly::parse(text, 4)?;
        let exact = quadric_hyperbolicity(&q, e)?;
        let scan = hypersurface_scan(&q, e, &sampler)?;
        let s = &exact.signature;
        let e: Vec<String> = e.iter().map(|x| x.to_string()).collect();
        println!("{text} at e = ({})", e.join(", "));
        println!("  Gram inertia (+{}, -{}, 0:{}), hyperbolic: {}", s.n_pos, s.n_neg, s.n_zero, exact.hyperbolic);
        println!("  scan {:?} ({} bad lines of {})", scan.verdict, scan.failures.len(), scan.sample_count);
    }
    Ok(())
}

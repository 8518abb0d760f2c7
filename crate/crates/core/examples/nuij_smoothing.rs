//! The Nuij operator turns a product of linear forms into a strictly hyperbolic polynomial.

use hypcert::engine::{hypersurface_scan, nuij_sweeps, Sampler};
use hypcert::kernel::rat::{rat, vec_of};
use hypcert::MPoly;

fn main() -> hypcert::Result<()> {
    let f = MPoly::parse("x0^2*(x0 + x1 - x2)", 3)?;
    let e = vec_of(&[1, 1, 0]);
    let sampler = Sampler::random(100, 1);
    for (k, g) in nuij_sweeps(&f, &e, &rat(1, 2))?.iter().enumerate() {
        let scan = hypersurface_scan(g, &e, &sampler)?;
        println!("sweep {k}: {:?}", scan.verdict);
        if k == 0 {
            println!("  {g}");
        }
    }
    Ok(())
}

//! A rational quintic in P^3 and the Bézout matrix of its projection pencil.
//!
//! Run with `cargo run --example bezout_trefoil`.

use hypcert::engine::{curve_hyperbolicity, projection_forms, LinearSubspace, RationalCurveParam};
use hypcert::kernel::rat::vec_of;
use hypcert::realcert::bezout_matrix;

fn main() -> hypcert::Result<()> {
    let curve = RationalCurveParam::parse(
        &["x1^3*x0^2 - 3*x1*x0^4", "x1^4*x0 - 4*x1^2*x0^3", "x1^5 - 10*x1*x0^4", "x0^5"],
        5,
    )?;
    let e = LinearSubspace::from_points(4, &[vec_of(&[0, 0, 1, -2]), vec_of(&[1, -3, 21, -2])])?;

    let (f, g) = projection_forms(&curve, &e)?;
    println!("projection pencil:\n  f = {f}\n  g = {g}");

    let b = bezout_matrix(&f, &g)?;
    println!("Bézout matrix:");
    for row in b.to_rows() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>8}")).collect();
        println!("  [{}]", cells.join(" "));
    }

    let cert = curve_hyperbolicity(&curve, &e)?;
    let s = &cert.interlace.signature;
    println!("signature (+{}, -{}, 0:{})", s.n_pos, s.n_neg, s.n_zero);
    println!("verdict: {:?}", cert.verdict);
    Ok(())
}

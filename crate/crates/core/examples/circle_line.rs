//! A circle meeting a tangent line: strictness of a deformation, and the socle shortcut.

use hypcert::defcheck::{buchberger, is_strict, quotient_algebra, socle_shortcut, DeformationHom, MonomialOrder};
use hypcert::kernel::rat::vec_of;
use hypcert::MPoly;

fn main() -> hypcert::Result<()> {
    let gens = [MPoly::parse("1 - x0^2 - x1^2", 2)?, MPoly::parse("x0^2 - x0", 2)?];
    let a = quotient_algebra(&buchberger(&gens, MonomialOrder::GrLex)?)?;
    let points = [vec_of(&[0, 1]), vec_of(&[0, -1]), vec_of(&[1, 0])];
    let f = MPoly::parse("x0*x1", 2)?;
    println!("dim A = {}, nilradical dimension {}", a.dim(), a.nilradical_basis()?.len());

    for (g1, g2) in [("1", "0"), ("0", "1"), ("-1", "0"), ("-3", "1"), ("x1^2", "x0")] {
        let phi = DeformationHom::new(vec![MPoly::parse(g1, 2)?, MPoly::parse(g2, 2)?]);
        let strict = is_strict(&a, &phi)?;
        let socle = socle_shortcut(&a, &points, &phi, &f)?;
        println!("φ = ({g1}, {g2}): strict {}, shortcut {:?} value {:?}", strict.verdict, socle.verdict, socle.value.map(|v| v.to_string()));
    }
    Ok(())
}

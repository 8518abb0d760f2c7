//! First-order deformations of the triple point `x^3 = 0` over the dual numbers.

use hypcert::defcheck::{buchberger, deformation_form, is_strict, quotient_algebra, DeformationHom, MonomialOrder};
use hypcert::MPoly;

fn main() -> hypcert::Result<()> {
    let a = quotient_algebra(&buchberger(&[MPoly::parse("x0^3", 1)?], MonomialOrder::GrLex)?)?;
    println!("A = Q[x]/(x^3), dimension {}", a.dim());
    // φ(x^3) = -(a x^2 + b x + c), i.e. I' = (x^3 - ε(a x^2 + b x + c))
    for image in ["-(x0^2 + 2*x0 + 3)", "-(x0 - 1)", "-5", "0"] {
        let phi = DeformationHom::new(vec![MPoly::parse(image, 1)?]);
        let form = deformation_form(&a, &phi)?;
        let cert = is_strict(&a, &phi)?;
        println!("φ(x^3) = {image}");
        println!("  b_φ = {:?}", form.matrix.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());
        println!("  strict: {} ({})", cert.verdict, cert.qualifier);
    }
    Ok(())
}

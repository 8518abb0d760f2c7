//! Two twisted cubics, each hyperbolic with respect to the same line.

use hypcert::engine::{curve_hyperbolicity, LinearSubspace, RationalCurveParam};
use hypcert::kernel::rat::vec_of;

fn main() -> hypcert::Result<()> {
    let e = LinearSubspace::from_points(4, &[vec_of(&[4, 0, 1, 0]), vec_of(&[0, 1, 0, 1])])?;
    let curves = [
        ["x0^3", "x0^2*x1", "x0*x1^2", "x1^3"],
        ["x1^3 - x0^2*x1", "1/2*x0*x1^2 - x0^2*x1", "1/4*x0*x1^2", "2*x0*x1^2 - 2*x0^2*x1 - x0^3"],
    ];
    for forms in &curves {
        let curve = RationalCurveParam::parse(forms, 3)?;
        let cert = curve_hyperbolicity(&curve, &e)?;
        println!("({})", forms.join(" : "));
        println!("  pencil {} | {}", cert.forms.0, cert.forms.1);
        println!("  orientation {}, verdict {:?}", cert.interlace.orientation, cert.verdict);
    }
    Ok(())
}

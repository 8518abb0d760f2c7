//! From a thick point of a line to three reduced lines: canonical distraction and its fan.

use hypcert::fanlab::{distraction_fan, hilbert, n_star, DistractionAssignment, MonomialIdeal};
use hypcert::kernel::rat::vec_of;

fn main() -> hypcert::Result<()> {
    let ideal = MonomialIdeal::parse("x2^2, x2*x3, x3^2", 4)?;
    let data = hilbert(&ideal);
    println!("I = ({ideal}), balanced: {}", ideal.is_balanced());
    println!("Hilbert polynomial {}", data.hilbert_polynomial);

    let t = DistractionAssignment::from_lists(&[(2, vec_of(&[1, 2])), (3, vec_of(&[3, 4]))])?;
    for g in t.distraction(&ideal)? {
        println!("  {g}");
    }
    let fan = distraction_fan(&ideal, &t, 1)?;
    println!("fan {fan}");
    println!("  Hilbert polynomial {}", fan.hilbert_polynomial()?);
    println!("  disjoint from E: {}", fan.disjoint_from_e());
    println!("  n_* = {:?}", n_star(&fan)?);
    Ok(())
}

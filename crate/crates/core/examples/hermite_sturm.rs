//! Counting real roots twice: signature of the Hermite matrix and a Sturm chain.

use hypcert::kernel::rat::vec_of;
use hypcert::kernel::{ldlt_signature, UPoly};
use hypcert::realcert::{hermite_matrix, real_rooted_status, sturm_distinct_real_roots};

fn main() -> hypcert::Result<()> {
    let samples = [
        UPoly::from_roots(&vec_of(&[-2, 1, 1, 3])),
        UPoly::new(vec_of(&[1, 0, 1])),
        UPoly::new(vec_of(&[-1, -1, 0, 1])),
        &UPoly::from_roots(&vec_of(&[0, 5])) * &UPoly::new(vec_of(&[2, 2, 1])),
    ];
    for f in &samples {
        let h = hermite_matrix(f)?;
        let sig = ldlt_signature(&h);
        let sturm = sturm_distinct_real_roots(f)?;
        println!("{f}");
        println!(
            "  Hermite signature {} (rank {}), Sturm {sturm}, {:?}",
            sig.signature(),
            sig.n_pos + sig.n_neg,
            real_rooted_status(f)?.tag
        );
    }
    Ok(())
}

// The maximal-class family: class 2n - 3 for every n, and the
// presentation-level criterion against the computed class in dimension 8.

use saa::classify::enumerate_presentations;
use saa::presentation::{build_algebra, is_maximal_class_presentation, maximal_class_family};
use saa::{Nilpotency, PrimeField, Result};

pub fn run_example() -> Result<()> {
    let field = PrimeField::new(3)?;
    for n in 4..=7 {
        let p = maximal_class_family(n, field)?;
        let a = build_algebra(&p);
        println!("n = {n}: class {}, lcs {:?}", a.nilpotency_class(), a.series().lcs_dims());
        assert_eq!(a.nilpotency_class(), Nilpotency::Class(2 * n - 3));
    }

    let mut agree = 0;
    let mut maximal = 0;
    for p in enumerate_presentations(4, field, u128::MAX)? {
        let class5 = build_algebra(&p).nilpotency_class() == Nilpotency::Class(5);
        maximal += usize::from(class5);
        agree += usize::from(is_maximal_class_presentation(&p)? == class5);
    }
    println!("GF(3), n = 4: {maximal} presentations of class 5; criterion agrees on {agree} of 6561");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}

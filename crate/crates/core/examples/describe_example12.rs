// The 12-dimensional algebra of class 4 whose `L^2 L^2` is not an ideal.

use saa::presentation::builtin;
use saa::{Nilpotency, PrimeField, Result, UcsMethod};

pub fn run_example() -> Result<()> {
    for p in [3, 5, 7] {
        let a = builtin("example12", PrimeField::new(p)?, None)?.algebra();
        let report = a.series();
        println!("GF({p}): lcs {:?}, ucs {:?}, class {}", report.lcs_dims(), report.ucs_dims(), report.class);

        let lcs = a.lower_central_series();
        let l2l2 = a.subspace_product(&lcs[1], &lcs[1])?;
        println!(
            "  dim L2L2 = {}, ideal: {}, inside L4: {}",
            l2l2.dim(),
            a.is_ideal(&l2l2),
            l2l2.is_subspace_of(&lcs[3])
        );
        assert_eq!(a.nilpotency_class(), Nilpotency::Class(4));
        assert_eq!(a.upper_central_series(UcsMethod::Direct), a.upper_central_series(UcsMethod::Dual));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}

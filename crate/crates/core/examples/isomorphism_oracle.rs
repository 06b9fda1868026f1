//! Cross-checks the normal-form classifier against exhaustive search over
//! Sp(6, 2).

use saa::classify::{brute_force_isomorphic, is_isomorphism, OracleResult, DEFAULT_ORACLE_BUDGET};
use saa::presentation::{build_algebra, builtin, NilpotentPresentation};
use saa::{classify_small, PrimeField, Result};

pub fn run_example() -> Result<()> {
    // two dimension-6 presentations with the same label
    let f = PrimeField::new(2)?;
    let a = builtin("P1", f, None)?.algebra();
    let mut other = NilpotentPresentation::new(f, 3);
    other.set_alpha(1, 2, 3, 1)?;
    let b = build_algebra(&other);
    println!("P1: {}, alpha(1,2,3) = 1: {}", classify_small(&a)?, classify_small(&b)?);
    match brute_force_isomorphic(&a, &b, DEFAULT_ORACLE_BUDGET)? {
        OracleResult::Yes(theta) => {
            assert!(is_isomorphism(&a, &b, &theta));
            println!("witness over GF(2):\n{theta}");
        }
        other => println!("oracle: {other:?}"),
    }

    // a "no" needs the whole group: |Sp(6, 2)| = 1451520
    let abelian = builtin("abelian6", f, None)?.algebra();
    let verdict = brute_force_isomorphic(&abelian, &a, DEFAULT_ORACLE_BUDGET)?;
    println!("abelian6 vs P1 over GF(2): {verdict:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}

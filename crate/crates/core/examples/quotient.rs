// Induced algebras on `I^perp / I` for the isotropic ideals of the chain.

use saa::presentation::{build_isotropic_chain, builtin};
use saa::{classify_small, PrimeField, Result};

pub fn run_example() -> Result<()> {
    let field = PrimeField::new(5)?;
    let a = builtin("maxclass4", field, None)?.algebra();
    let chain = build_isotropic_chain(&a)?;
    for r in 1..=a.half_dim() {
        let q = a.induced_quotient(chain.term(r))?;
        let label = if q.dim() <= 8 && q.dim() > 0 {
            classify_small(&q).map_or_else(|e| e.to_string(), |l| l.to_string())
        } else {
            "-".to_string()
        };
        println!("I_{r}: quotient of dimension {}, class {}, label {label}", q.dim(), q.nilpotency_class());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}

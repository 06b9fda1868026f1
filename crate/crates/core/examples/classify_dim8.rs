// Labels every catalogue algebra of dimension 8, then scrambles each by a
// random symplectic change of basis and labels it again.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use saa::classify::{cube_invariant, SymplecticClosure};
use saa::presentation::builtin;
use saa::{classify_small, fingerprint, Matrix, PrimeField, Result};

fn random_symplectic(rng: &mut ChaCha8Rng, field: PrimeField, n: usize) -> Matrix {
    let closure = SymplecticClosure::new(field, n);
    let mut m = Matrix::identity(field, 2 * n);
    for _ in 0..40 {
        let g = closure.generator(rng.gen_range(0..closure.generator_count()));
        m = m.mul(&g).expect("square");
    }
    m
}

pub fn run_example() -> Result<()> {
    let field = PrimeField::new(7)?;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut names: Vec<(String, Option<u64>)> = ["abelian8", "P2", "P3"].iter().map(|s| (s.to_string(), None)).collect();
    names.extend((1..7).map(|r| ("Pr".to_string(), Some(r))));
    for (name, r) in names {
        let a = builtin(&name, field, r)?.algebra();
        let label = classify_small(&a)?;
        let scrambled = a.change_basis(&random_symplectic(&mut rng, field, 4))?;
        let again = classify_small(&scrambled)?;
        let shown = r.map_or(name.clone(), |r| format!("{name}(r={r})"));
        print!("{shown:<10} {label:<10} {}", fingerprint(&a));
        if label.to_string().starts_with("Lr") {
            print!("; cube invariant {}", cube_invariant(&a)?);
        }
        println!();
        assert_eq!(label, again);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}

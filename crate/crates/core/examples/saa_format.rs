// Writes a presentation in the `.saa` text format, reads it back, and shows
// the round trip through a random standard basis.

use saa::presentation::{builtin, extract_presentation, parse_saa, to_saa_string, SaaData};
use saa::{build_algebra, PrimeField, Result};

pub fn run_example() -> Result<()> {
    let field = PrimeField::new(7)?;
    let b = builtin("Pr", field, Some(3))?;
    let text = to_saa_string(&b.data);
    print!("{text}");
    let back = parse_saa(&text)?;
    assert_eq!(back, b.data);

    // a general algebra is written as raw triples
    let (p, basis) = extract_presentation(&b.algebra())?;
    assert_eq!(build_algebra(&p), b.algebra().change_basis(&basis)?);
    let as_form = SaaData::Form(b.algebra().form().clone());
    print!("{}", to_saa_string(&as_form));

    let err = parse_saa("saa 1\np 7\nn 4\nx 1 2 3 9\n").unwrap_err();
    println!("rejected: {err}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}

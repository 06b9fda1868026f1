use std::time::Instant;

use saa::classify::{census_with, CensusOptions, Classifier};
use saa::PrimeField;

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(4, |s| s.parse().expect("n"));
    let p: u64 = args.next().map_or(3, |s| s.parse().expect("p"));
    let classifier = match args.next().as_deref() {
        Some("invariants") => Classifier::Invariants,
        _ => Classifier::NormalForm,
    };
    let field = PrimeField::new(p).expect("prime");
    let start = Instant::now();
    let census = census_with(n, field, CensusOptions { classifier, ..Default::default() }).expect("census");
    print!("{}", census.to_table());
    eprintln!("elapsed {:.2?}", start.elapsed());
}

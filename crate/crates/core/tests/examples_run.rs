//! The cheap cargo examples double as smoke tests.

mod describe_example12 {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/describe_example12.rs"));
}

mod classify_dim8 {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/classify_dim8.rs"));
}

mod maximal_class {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/maximal_class.rs"));
}

mod quotient {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/quotient.rs"));
}

mod saa_format {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/saa_format.rs"));
}

#[test]
fn examples_run() {
    describe_example12::run_example().unwrap();
    classify_dim8::run_example().unwrap();
    maximal_class::run_example().unwrap();
    quotient::run_example().unwrap();
    saa_format::run_example().unwrap();
}

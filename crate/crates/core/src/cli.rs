//! The `saa` command line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{Algebra, Nilpotency};
use crate::classify::{
    brute_force_isomorphic, census_with, classify_small, fingerprint, CensusOptions, Classifier, OracleResult,
    DEFAULT_ENUMERATION_BUDGET, DEFAULT_ORACLE_BUDGET,
};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::presentation::{builtin, builtin_names, is_maximal_class_presentation, read_saa, to_saa_string, SaaData};
use crate::verify::{self, Catalogue};

#[derive(Parser, Debug)]
#[command(name = "saa", version, about = "Symplectic alternating algebras over prime fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CensusFormat {
    Table,
    Lines,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassifierArg {
    NormalForm,
    Invariants,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension, central series, center and rank of an algebra.
    Describe { file: PathBuf },
    /// Isomorphism class label of a nilpotent algebra of dimension <= 8.
    Classify { file: PathBuf },
    /// Classify every presentation with the given n over GF(p).
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        /// Worker threads; output does not depend on it.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = CensusFormat::Table)]
        format: CensusFormat,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: u128,
        #[arg(long, value_enum, default_value_t = ClassifierArg::NormalForm)]
        classifier: ClassifierArg,
    },
    /// Compare the maximal-class criterion with the computed class.
    MaximalClass { file: PathBuf },
    /// Decide isomorphism of two algebras.
    Iso {
        first: PathBuf,
        second: PathBuf,
        /// Search the symplectic group instead of comparing labels.
        #[arg(long)]
        brute_force: bool,
        #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
        budget: usize,
    },
    /// Re-check the structural facts the library relies on.
    VerifyPaper {
        /// Run only these checks.
        #[arg(long)]
        only: Vec<String>,
    },
    /// Write a catalogue algebra as a `.saa` file.
    Builtin {
        name: String,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long)]
        p: u64,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code: 0 success, 1 domain error, 2 usage error.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command) {
        Ok((text, ok)) => {
            let _ = write!(out, "{text}");
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

pub fn main() -> i32 {
    run(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr())
}

fn join(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn describe(a: &Algebra) -> String {
    let fp = fingerprint(a);
    let mut s = format!("dimension {} over {}\n", a.dim(), a.field());
    s += &format!("class {}; lcs dims {}\n", fp.class, join(&fp.lcs_dims));
    s += &format!("class {}; center dim {}; ucs dims {}\n", fp.class, fp.dim_center, join(&fp.ucs_dims));
    s += &format!("center isotropic: {}\n", if fp.center_isotropic { "yes" } else { "no" });
    s += &format!("rank {}; dim L2L2 {}\n", fp.rank, fp.dim_l2l2);
    s
}

pub fn maximal_class_report(data: &SaaData) -> Result<String> {
    let p = data
        .presentation()
        .ok_or_else(|| Error::OutOfRange("maximal-class needs a presentation (x/y stanzas)".into()))?;
    let criterion = is_maximal_class_presentation(p)?;
    let class = data.algebra().nilpotency_class();
    let bound = 2 * p.half_dim() - 3;
    let is_max = class == Nilpotency::Class(bound);
    let class_text = if is_max { format!("class {class} = 2n−3") } else { format!("class {class}") };
    Ok(format!(
        "criterion: {}; {}; agreement: {}\n",
        if criterion { "yes" } else { "no" },
        class_text,
        if criterion == is_max { "yes" } else { "no" }
    ))
}

fn iso_report(a: &Algebra, b: &Algebra, brute_force: bool, budget: usize) -> Result<(String, bool)> {
    if a.field() != b.field() {
        return Err(Error::MismatchedModuli {
            left: a.field().modulus(),
            right: b.field().modulus(),
        });
    }
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    if a == b {
        return Ok(("isomorphic (identity)\n".into(), true));
    }
    if brute_force {
        return match brute_force_isomorphic(a, b, budget)? {
            OracleResult::Yes(theta) => Ok((format!("isomorphic\nwitness:\n{theta}\n"), true)),
            OracleResult::No => Ok(("non-isomorphic\n".into(), true)),
            OracleResult::BudgetExceeded { explored } => Ok((
                format!("undecided: budget exhausted after {explored} group elements\n"),
                false,
            )),
        };
    }
    if a.dim() > 8 {
        return Err(Error::UnsupportedDimension(a.dim()));
    }
    let (la, lb) = (classify_small(a)?, classify_small(b)?);
    let verdict = if la == lb { "isomorphic" } else { "non-isomorphic" };
    Ok((format!("{verdict}\n"), true))
}

fn execute(command: Command) -> Result<(String, bool)> {
    match command {
        Command::Describe { file } => Ok((describe(&read_saa(file)?.algebra()), true)),
        Command::Classify { file } => {
            let a = read_saa(file)?.algebra();
            Ok((format!("{}\n", classify_small(&a)?), true))
        }
        Command::Census {
            n,
            p,
            jobs,
            format,
            budget,
            classifier,
        } => {
            let field = PrimeField::new(p)?;
            let options = CensusOptions {
                budget,
                classifier: match classifier {
                    ClassifierArg::NormalForm => Classifier::NormalForm,
                    ClassifierArg::Invariants => Classifier::Invariants,
                },
                ..Default::default()
            };
            let census = match jobs {
                Some(j) => rayon::ThreadPoolBuilder::new()
                    .num_threads(j.max(1))
                    .build()
                    .map_err(|e| Error::OutOfRange(format!("cannot start {j} workers: {e}")))?
                    .install(|| census_with(n, field, options))?,
                None => census_with(n, field, options)?,
            };
            let text = match format {
                CensusFormat::Table => census.to_table(),
                CensusFormat::Lines => census.to_lines(),
            };
            Ok((text, true))
        }
        Command::MaximalClass { file } => Ok((maximal_class_report(&read_saa(file)?)?, true)),
        Command::Iso {
            first,
            second,
            brute_force,
            budget,
        } => iso_report(&read_saa(first)?.algebra(), &read_saa(second)?.algebra(), brute_force, budget),
        Command::VerifyPaper { only } => {
            let results = verify::run(&Catalogue::default(), &only)?;
            let mut text = String::new();
            for r in &results {
                text += &format!("{r}\n");
            }
            let passed = results.iter().filter(|r| r.passed).count();
            text += &format!("{passed}/{} checks passed\n", results.len());
            Ok((text, passed == results.len()))
        }
        Command::Builtin { name, r, p, output } => {
            let field = PrimeField::new(p)?;
            let b = builtin(&name, field, r).map_err(|e| match e {
                Error::UnknownBuiltin(n) => {
                    Error::UnknownBuiltin(format!("{n}; known: {}", builtin_names().join(", ")))
                }
                other => other,
            })?;
            let text = to_saa_string(&b.data);
            match output {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| Error::Parse {
                        line: 0,
                        message: format!("cannot write {}: {e}", path.display()),
                    })?;
                    Ok((String::new(), true))
                }
                None => Ok((text, true)),
            }
        }
    }
}

//! Re-derives the structural facts about nilpotent symplectic alternating
//! algebras that the library relies on, each as a named, independently
//! runnable check.

use std::fmt;

use crate::algebra::{Algebra, Nilpotency, UcsMethod};
use crate::classify::{census, enumerate_presentations, ClassLabel};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::Subspace;
use crate::presentation::{
    build_algebra, build_isotropic_chain, builtin, extract_presentation,
    is_maximal_class_presentation,
};

/// Algebras the checks are run against; replaceable so that a damaged entry
/// can be shown to fail exactly the checks that depend on it.
#[derive(Clone, Copy)]
pub struct Catalogue {
    pub example12: fn(PrimeField) -> Algebra,
    pub l5dim2: fn(PrimeField) -> Algebra,
    pub maxclass: fn(usize, PrimeField) -> Algebra,
}

impl Default for Catalogue {
    fn default() -> Self {
        Catalogue {
            example12: |f| builtin("example12", f, None).expect("builtin").algebra(),
            l5dim2: |f| builtin("l5dim2", f, None).expect("builtin").algebra(),
            maxclass: |n, f| builtin(&format!("maxclass{n}"), f, None).expect("builtin").algebra(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimResult {
    pub id: &'static str,
    pub description: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for ClaimResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} ({})",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.description,
            self.detail
        )
    }
}

type Check = fn(&Catalogue) -> Result<(bool, String)>;

const CLAIMS: &[(&str, &str, Check)] = &[
    ("example12", "12-dim example: lcs 12 9 6 3 0, class 4, L2L2 of dim 3, not an ideal, not in L4", example12_claim),
    ("duality", "upper central series equals perps of the lower central series", duality),
    ("rank_center", "dim L - dim L2 = dim Z(L) >= 2", rank_center),
    ("no_dim1_term", "no lower central term of dimension 1", no_dim1_term),
    ("no_dim2_term", "dim L^m != 2 for m = 2, 3, 4; the example has dim L5 = 2", no_dim2_term),
    ("chain_bound", "isotropic ideal chains exist and class <= 2n - 3", chain_bound),
    ("maxclass_quantities", "maxclass(5): dim Z3 L2 = 1, dim L4 L3 = 2, class 7", maxclass_quantities),
    ("maxclass_criterion", "maximal-class criterion iff class 5 on all 3^8 presentations", maxclass_criterion),
    ("lie_assoc", "Lie or associative implies L3 = 0 over GF(3), GF(5)", lie_assoc),
    ("roundtrip", "extracted presentations rebuild the algebra exactly", roundtrip),
    ("census_counts", "census class counts 2, 4, 4, 6 for (n, p) = (3, 3), (4, 3), (4, 5), (4, 7)", census_counts),
];

pub fn claim_ids() -> Vec<&'static str> {
    CLAIMS.iter().map(|c| c.0).collect()
}

/// Runs the named checks (all when `only` is empty) in catalogue order.
pub fn run(catalogue: &Catalogue, only: &[String]) -> Result<Vec<ClaimResult>> {
    for id in only {
        if !CLAIMS.iter().any(|c| c.0 == id) {
            return Err(Error::OutOfRange(format!(
                "unknown claim `{id}` (known: {})",
                claim_ids().join(", ")
            )));
        }
    }
    let mut out = Vec::new();
    for &(id, description, check) in CLAIMS {
        if !only.is_empty() && !only.iter().any(|o| o == id) {
            continue;
        }
        let (passed, detail) = match check(catalogue) {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        out.push(ClaimResult {
            id,
            description,
            passed,
            detail,
        });
    }
    Ok(out)
}

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).expect("small prime")
}

/// All presentations with n = 3 and n = 4 over `field`.
pub fn sweep(field: PrimeField) -> impl Iterator<Item = Algebra> {
    let small = enumerate_presentations(3, field, u128::MAX).expect("no budget");
    let large = enumerate_presentations(4, field, u128::MAX).expect("no budget");
    small.chain(large).map(|p| build_algebra(&p))
}

/// Counts algebras of the GF(3) sweep failing `pred`.
fn count_failures(pred: impl Fn(&Algebra) -> bool) -> (usize, usize) {
    let mut total = 0;
    let mut bad = 0;
    for a in sweep(gf(3)) {
        total += 1;
        if !pred(&a) {
            bad += 1;
        }
    }
    (total, bad)
}

fn verdict((total, bad): (usize, usize)) -> (bool, String) {
    (bad == 0, format!("{bad} failures in {total} algebras"))
}

fn example12_claim(c: &Catalogue) -> Result<(bool, String)> {
    let mut notes = Vec::new();
    let mut ok = true;
    for p in [3, 5, 7] {
        let a = (c.example12)(gf(p));
        let lcs = a.lower_central_series();
        let dims: Vec<usize> = lcs.iter().map(Subspace::dim).collect();
        let l2l2 = a.subspace_product(&lcs[1], &lcs[1])?;
        let this = dims == [12, 9, 6, 3, 0]
            && a.nilpotency_class() == Nilpotency::Class(4)
            && l2l2.dim() == 3
            && !a.is_ideal(&l2l2)
            && !l2l2.is_subspace_of(&lcs[3]);
        if !this {
            notes.push(format!("GF({p}): lcs {dims:?}, dim L2L2 {}", l2l2.dim()));
        }
        ok &= this;
    }
    Ok((ok, if ok { "GF(3), GF(5), GF(7)".into() } else { notes.join("; ") }))
}

fn duality_holds(a: &Algebra) -> bool {
    a.upper_central_series(UcsMethod::Direct) == a.upper_central_series(UcsMethod::Dual)
}

fn duality(c: &Catalogue) -> Result<(bool, String)> {
    let (total, mut bad) = count_failures(duality_holds);
    if !duality_holds(&(c.example12)(gf(3))) {
        bad += 1;
    }
    Ok(verdict((total + 1, bad)))
}

fn rank_center(_: &Catalogue) -> Result<(bool, String)> {
    Ok(verdict(count_failures(|a| {
        let s = a.series();
        let z = a.center().dim();
        s.rank == z && z >= 2
    })))
}

fn no_dim1_term(_: &Catalogue) -> Result<(bool, String)> {
    Ok(verdict(count_failures(|a| a.lower_central_series().iter().all(|t| t.dim() != 1))))
}

fn no_dim2_term(c: &Catalogue) -> Result<(bool, String)> {
    let (total, bad) = count_failures(|a| {
        let lcs = a.lower_central_series();
        (1..=3).all(|m| lcs.get(m).is_none_or(|t| t.dim() != 2))
    });
    let example = (c.l5dim2)(gf(3));
    let l5 = example.lower_central_series().get(4).map_or(0, Subspace::dim);
    let (ok, detail) = verdict((total, bad));
    Ok((ok && l5 == 2, format!("{detail}; example dim L5 = {l5}")))
}

fn chain_bound(_: &Catalogue) -> Result<(bool, String)> {
    Ok(verdict(count_failures(|a| {
        let n = a.half_dim();
        let class_ok = match a.nilpotency_class() {
            Nilpotency::Class(c) => n < 3 || c <= 2 * n - 3,
            Nilpotency::NotNilpotent => false,
        };
        class_ok && build_isotropic_chain(a).is_ok_and(|ch| ch.is_valid_for(a))
    })))
}

fn maxclass_quantities(c: &Catalogue) -> Result<(bool, String)> {
    let mut notes = Vec::new();
    let mut ok = true;
    for p in [3, 5] {
        let a = (c.maxclass)(5, gf(p));
        let lcs = a.lower_central_series();
        let ucs = a.upper_central_series(UcsMethod::Direct);
        if lcs.len() < 5 || ucs.len() < 4 {
            ok = false;
            notes.push(format!("GF({p}): series too short"));
            continue;
        }
        let z3l2 = a.subspace_product(&ucs[3], &lcs[1])?.dim();
        let l4l3 = a.subspace_product(&lcs[3], &lcs[2])?.dim();
        let class = a.nilpotency_class();
        ok &= z3l2 == 1 && l4l3 == 2 && class == Nilpotency::Class(7);
        notes.push(format!("GF({p}): {z3l2}, {l4l3}, class {class}"));
    }
    Ok((ok, notes.join("; ")))
}

fn maxclass_criterion(_: &Catalogue) -> Result<(bool, String)> {
    let mut bad = 0;
    let mut maximal = 0;
    for p in enumerate_presentations(4, gf(3), u128::MAX)? {
        let criterion = is_maximal_class_presentation(&p)?;
        let class5 = build_algebra(&p).nilpotency_class() == Nilpotency::Class(5);
        maximal += usize::from(class5);
        bad += usize::from(criterion != class5);
    }
    Ok((bad == 0, format!("{bad} disagreements, {maximal} of class 5")))
}

fn lie_assoc(_: &Catalogue) -> Result<(bool, String)> {
    let mut total = 0;
    let mut bad = 0;
    for p in [3, 5] {
        for a in sweep(gf(p)) {
            total += 1;
            if (a.is_lie() || a.is_associative()) && a.lower_central_series().get(2).is_some_and(|t| !t.is_zero()) {
                bad += 1;
            }
        }
    }
    Ok(verdict((total, bad)))
}

fn roundtrip(_: &Catalogue) -> Result<(bool, String)> {
    Ok(verdict(count_failures(|a| match extract_presentation(a) {
        Ok((p, basis)) => a.change_basis(&basis).is_ok_and(|b| b == build_algebra(&p)),
        Err(_) => false,
    })))
}

fn census_counts(_: &Catalogue) -> Result<(bool, String)> {
    let mut ok = true;
    let mut notes = Vec::new();
    for (n, p, expected) in [(3, 3, 2), (4, 3, 4), (4, 5, 4), (4, 7, 6)] {
        let c = census(n, gf(p))?;
        let labels: Vec<String> = c.labels().iter().map(ClassLabel::to_string).collect();
        ok &= c.rows.len() == expected && c.rows.iter().map(|r| r.count).sum::<u128>() == c.total;
        notes.push(format!("({n}, {p}): {}", labels.join(" ")));
    }
    Ok((ok, notes.join("; ")))
}

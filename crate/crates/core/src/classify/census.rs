use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::presentation::{build_algebra, NilpotentPresentation};

use super::enumerate::{PresentationSpace, DEFAULT_ENUMERATION_BUDGET};
use super::{classify_by_invariants, classify_small, fingerprint, ClassLabel, Fingerprint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Classifier {
    /// [`classify_small`]: explicit normal forms.
    #[default]
    NormalForm,
    /// [`classify_by_invariants`]: center dimension and cube invariant.
    Invariants,
}

impl Classifier {
    pub fn classify(self, a: &Algebra) -> Result<ClassLabel> {
        match self {
            Classifier::NormalForm => classify_small(a),
            Classifier::Invariants => classify_by_invariants(a),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusOptions {
    pub budget: u128,
    pub classifier: Classifier,
    /// Presentations per work unit.
    pub chunk: u128,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            budget: DEFAULT_ENUMERATION_BUDGET,
            classifier: Classifier::default(),
            chunk: 4096,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub label: ClassLabel,
    pub count: u128,
    /// The first presentation in enumeration order with this label.
    pub presentation: NilpotentPresentation,
    pub fingerprint: Fingerprint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub field: PrimeField,
    pub n: usize,
    pub total: u128,
    pub rows: Vec<CensusRow>,
}

type Tally = BTreeMap<ClassLabel, (u128, u128)>;

fn merge(mut a: Tally, b: Tally) -> Tally {
    for (label, (count, first)) in b {
        let e = a.entry(label).or_insert((0, first));
        e.0 += count;
        e.1 = e.1.min(first);
    }
    a
}

fn classify_range(space: &PresentationSpace, start: u128, end: u128, classifier: Classifier) -> Result<Tally> {
    let mut tally = Tally::new();
    for index in start..end {
        // both classifiers reject non-nilpotent input
        let a = build_algebra(&space.presentation_at(index));
        let label = classifier.classify(&a)?;
        let e = tally.entry(label).or_insert((0, index));
        e.0 += 1;
    }
    Ok(tally)
}

pub fn census(n: usize, field: PrimeField) -> Result<Census> {
    census_with(n, field, CensusOptions::default())
}

/// Classifies every presentation, sharding the index range across threads.
pub fn census_with(n: usize, field: PrimeField, options: CensusOptions) -> Result<Census> {
    if n > 4 {
        return Err(Error::UnsupportedDimension(2 * n));
    }
    let space = PresentationSpace::new(n, field);
    space.check_budget(options.budget)?;
    let total = space.total();
    let chunk = options.chunk.max(1);
    let shards = total.div_ceil(chunk);
    let tally = (0..shards as u64)
        .into_par_iter()
        .map(|s| {
            let start = u128::from(s) * chunk;
            classify_range(&space, start, (start + chunk).min(total), options.classifier)
        })
        .try_reduce(Tally::new, |a, b| Ok(merge(a, b)))?;
    let rows = tally
        .into_iter()
        .map(|(label, (count, first))| {
            let presentation = space.presentation_at(first);
            let fingerprint = fingerprint(&build_algebra(&presentation));
            CensusRow {
                label,
                count,
                presentation,
                fingerprint,
            }
        })
        .collect();
    Ok(Census { field, n, total, rows })
}

impl Census {
    pub fn count_of(&self, label: ClassLabel) -> u128 {
        self.rows.iter().find(|r| r.label == label).map_or(0, |r| r.count)
    }

    pub fn labels(&self) -> Vec<ClassLabel> {
        self.rows.iter().map(|r| r.label).collect()
    }

    /// Header line, then one row per class: label, count, fingerprint.
    pub fn to_table(&self) -> String {
        let mut out = format!(
            "census n={} p={}: {} presentations, {} classes\n",
            self.n,
            self.field.modulus(),
            self.total,
            self.rows.len()
        );
        let _ = writeln!(out, "{:<12} {:>12}  fingerprint", "label", "count");
        for row in &self.rows {
            let _ = writeln!(out, "{:<12} {:>12}  {}", row.label.to_string(), row.count, row.fingerprint);
        }
        out
    }

    /// `class <label> count <k>`, one line per class.
    pub fn to_lines(&self) -> String {
        self.rows
            .iter()
            .map(|r| format!("class {} count {}\n", r.label, r.count))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn dim6_census() {
        let c = census(3, gf(3)).unwrap();
        assert_eq!(c.labels(), vec![ClassLabel::Abelian(6), ClassLabel::N6]);
        assert_eq!(c.count_of(ClassLabel::Abelian(6)), 1);
        assert_eq!(c.count_of(ClassLabel::N6), 8);
        assert_eq!(c.to_lines(), "class Abelian(6) count 1\nclass N6 count 8\n");
    }

    #[test]
    fn chunking_does_not_change_result() {
        let f = gf(2);
        let a = census_with(4, f, CensusOptions { chunk: 7, ..Default::default() }).unwrap();
        let b = census_with(4, f, CensusOptions { chunk: 1000, ..Default::default() }).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.rows.iter().map(|r| r.count).sum::<u128>(), 256);
    }

    #[test]
    fn classifiers_agree_over_gf3() {
        let f = gf(3);
        let a = census_with(4, f, CensusOptions::default()).unwrap();
        let b = census_with(4, f, CensusOptions { classifier: Classifier::Invariants, ..Default::default() }).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.labels(), vec![ClassLabel::Abelian(8), ClassLabel::L2, ClassLabel::L3, ClassLabel::Lr(1)]);
    }

    #[test]
    fn rejects_large_n() {
        assert_eq!(census(5, gf(2)).err(), Some(Error::UnsupportedDimension(10)));
    }
}

use std::ops::Range;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::presentation::{parameter_slots, NilpotentPresentation, ParamKind, Triple};

pub const DEFAULT_ENUMERATION_BUDGET: u128 = 10_000_000;

/// All presentations with a given `n` over a field, indexed by the base-`p`
/// number whose most significant digit is the first parameter slot.
#[derive(Clone, Debug)]
pub struct PresentationSpace {
    field: PrimeField,
    n: usize,
    slots: Vec<(ParamKind, Triple)>,
    total: u128,
}

impl PresentationSpace {
    pub fn new(n: usize, field: PrimeField) -> Self {
        let slots = parameter_slots(n);
        let total = u128::from(field.modulus())
            .checked_pow(slots.len() as u32)
            .unwrap_or(u128::MAX);
        PresentationSpace {
            field,
            n,
            slots,
            total,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn half_dim(&self) -> usize {
        self.n
    }

    pub fn total(&self) -> u128 {
        self.total
    }

    pub fn check_budget(&self, budget: u128) -> Result<()> {
        if self.total > budget {
            Err(Error::BudgetExceeded {
                required: self.total,
                budget,
            })
        } else {
            Ok(())
        }
    }

    /// Parameter values of the presentation at `index`.
    pub fn digits(&self, mut index: u128) -> Vec<u32> {
        let p = u128::from(self.field.modulus());
        let mut values = vec![0u32; self.slots.len()];
        for v in values.iter_mut().rev() {
            *v = (index % p) as u32;
            index /= p;
        }
        values
    }

    pub fn presentation_at(&self, index: u128) -> NilpotentPresentation {
        let values = self.digits(index);
        let mut p = NilpotentPresentation::new(self.field, self.n);
        for (&(kind, (i, j, k)), &v) in self.slots.iter().zip(&values) {
            p.set(kind, i, j, k, v).expect("slots are valid");
        }
        p
    }

    /// Index of a presentation with the same `n` and field.
    pub fn index_of(&self, p: &NilpotentPresentation) -> u128 {
        let q = u128::from(self.field.modulus());
        p.parameters().iter().fold(0, |acc, &v| acc * q + u128::from(v))
    }

    pub fn iter_range(&self, range: Range<u128>) -> impl Iterator<Item = NilpotentPresentation> + '_ {
        range.map(move |i| self.presentation_at(i))
    }
}

/// Every presentation in lexicographic parameter order, refusing spaces
/// larger than `budget`.
pub fn enumerate_presentations(
    n: usize,
    field: PrimeField,
    budget: u128,
) -> Result<impl Iterator<Item = NilpotentPresentation>> {
    let space = PresentationSpace::new(n, field);
    space.check_budget(budget)?;
    let total = space.total;
    Ok((0..total).map(move |i| space.presentation_at(i)))
}

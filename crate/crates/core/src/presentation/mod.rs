//! Nilpotent presentations: the values `alpha(i,j,k) = (x_i y_j, y_k)` and
//! `beta(i,j,k) = (y_i y_j, y_k)` for `1 <= i < j < k <= n`, with every other
//! triple of basis vectors pairing to zero.

mod builtin;
mod chain;
mod format;

use std::collections::BTreeMap;
use std::fmt;

pub use builtin::{builtin, builtin_names, Builtin};
pub use chain::{build_isotropic_chain, build_isotropic_chain_with, extract_presentation, extract_presentation_with_chain, ChainStrategy, IsotropicChain};
pub use format::{parse_saa, read_saa, to_saa_string, write_saa, SaaData};

use crate::algebra::{Algebra, TernaryForm};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::Subspace;

/// Global 0-based basis index of `x_i` (1-based `i`).
pub const fn x(i: usize) -> usize {
    2 * (i - 1)
}

/// Global 0-based basis index of `y_i` (1-based `i`).
pub const fn y(i: usize) -> usize {
    2 * (i - 1) + 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParamKind {
    Alpha,
    Beta,
}

pub type Triple = (usize, usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NilpotentPresentation {
    field: PrimeField,
    n: usize,
    alpha: BTreeMap<Triple, u32>,
    beta: BTreeMap<Triple, u32>,
}

/// `2 * C(n, 3)`.
pub fn parameter_count(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 3
    }
}

/// Parameter slots in enumeration order: alpha keys ascending, then beta keys
/// ascending.
pub fn parameter_slots(n: usize) -> Vec<(ParamKind, Triple)> {
    let mut triples = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                triples.push((i, j, k));
            }
        }
    }
    let mut slots: Vec<_> = triples.iter().map(|&t| (ParamKind::Alpha, t)).collect();
    slots.extend(triples.iter().map(|&t| (ParamKind::Beta, t)));
    slots
}

impl NilpotentPresentation {
    pub fn new(field: PrimeField, n: usize) -> Self {
        NilpotentPresentation {
            field,
            n,
            alpha: BTreeMap::new(),
            beta: BTreeMap::new(),
        }
    }

    /// Builds a presentation from values listed in [`parameter_slots`] order.
    pub fn from_parameters(field: PrimeField, n: usize, values: &[u32]) -> Result<Self> {
        let slots = parameter_slots(n);
        if values.len() != slots.len() {
            return Err(Error::DimensionMismatch {
                expected: slots.len(),
                got: values.len(),
            });
        }
        let mut p = Self::new(field, n);
        for (&(kind, (i, j, k)), &v) in slots.iter().zip(values) {
            p.set(kind, i, j, k, v)?;
        }
        Ok(p)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn half_dim(&self) -> usize {
        self.n
    }

    fn check_triple(&self, i: usize, j: usize, k: usize) -> Result<()> {
        if 1 <= i && i < j && j < k && k <= self.n {
            Ok(())
        } else {
            Err(Error::MalformedTriple(i, j, k, self.n))
        }
    }

    /// Sets a value; zero removes the entry. Values are reduced mod p.
    pub fn set(&mut self, kind: ParamKind, i: usize, j: usize, k: usize, value: u32) -> Result<()> {
        self.check_triple(i, j, k)?;
        let v = value % self.field.modulus();
        let map = match kind {
            ParamKind::Alpha => &mut self.alpha,
            ParamKind::Beta => &mut self.beta,
        };
        if v == 0 {
            map.remove(&(i, j, k));
        } else {
            map.insert((i, j, k), v);
        }
        Ok(())
    }

    pub fn set_alpha(&mut self, i: usize, j: usize, k: usize, value: u32) -> Result<()> {
        self.set(ParamKind::Alpha, i, j, k, value)
    }

    pub fn set_beta(&mut self, i: usize, j: usize, k: usize, value: u32) -> Result<()> {
        self.set(ParamKind::Beta, i, j, k, value)
    }

    pub fn alpha(&self, i: usize, j: usize, k: usize) -> u32 {
        self.alpha.get(&(i, j, k)).copied().unwrap_or(0)
    }

    pub fn beta(&self, i: usize, j: usize, k: usize) -> u32 {
        self.beta.get(&(i, j, k)).copied().unwrap_or(0)
    }

    pub fn alpha_entries(&self) -> impl Iterator<Item = (Triple, u32)> + '_ {
        self.alpha.iter().map(|(&t, &v)| (t, v))
    }

    pub fn beta_entries(&self) -> impl Iterator<Item = (Triple, u32)> + '_ {
        self.beta.iter().map(|(&t, &v)| (t, v))
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_empty() && self.beta.is_empty()
    }

    /// All parameter values in [`parameter_slots`] order.
    pub fn parameters(&self) -> Vec<u32> {
        parameter_slots(self.n)
            .into_iter()
            .map(|(kind, (i, j, k))| match kind {
                ParamKind::Alpha => self.alpha(i, j, k),
                ParamKind::Beta => self.beta(i, j, k),
            })
            .collect()
    }

    pub fn to_form(&self) -> TernaryForm {
        let mut form = TernaryForm::new(self.field, self.n);
        for (&(i, j, k), &v) in &self.alpha {
            form.set(x(i), y(j), y(k), v).expect("valid triple");
        }
        for (&(i, j, k), &v) in &self.beta {
            form.set(y(i), y(j), y(k), v).expect("valid triple");
        }
        form
    }

    /// Reads a form as a presentation, failing if any nonzero triple lies
    /// outside the alpha/beta pattern.
    pub fn from_form(form: &TernaryForm) -> Result<Self> {
        let mut p = Self::new(form.field(), form.half_dim());
        for ([a, b, c], v) in form.entries() {
            let (i, j, k) = (a / 2 + 1, b / 2 + 1, c / 2 + 1);
            let ok = b % 2 == 1 && c % 2 == 1 && i < j && j < k;
            if !ok {
                return Err(Error::Inconsistent(format!(
                    "triple ({}, {}, {}) is not of presentation shape",
                    crate::algebra::basis_name(a),
                    crate::algebra::basis_name(b),
                    crate::algebra::basis_name(c)
                )));
            }
            let kind = if a % 2 == 0 { ParamKind::Alpha } else { ParamKind::Beta };
            p.set(kind, i, j, k, v)?;
        }
        Ok(p)
    }
}

impl fmt::Display for NilpotentPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        write!(f, "{{")?;
        for (&(i, j, k), v) in &self.alpha {
            write!(f, "{}(x{i}y{j}, y{k}) = {v}", if first { "" } else { ", " })?;
            first = false;
        }
        for (&(i, j, k), v) in &self.beta {
            write!(f, "{}(y{i}y{j}, y{k}) = {v}", if first { "" } else { ", " })?;
            first = false;
        }
        write!(f, "}} over {}, n = {}", self.field, self.n)
    }
}

pub fn build_algebra(p: &NilpotentPresentation) -> Algebra {
    Algebra::new(p.to_form())
}

/// The maximal-class test on a presentation with `n >= 4`: the products
/// `x_k y_{k+1}` are nonzero for `2 <= k <= n - 2`, and `x_1 y_2`, `y_1 y_2`
/// are linearly independent.
pub fn is_maximal_class_presentation(p: &NilpotentPresentation) -> Result<bool> {
    let n = p.half_dim();
    if n < 4 {
        return Err(Error::OutOfRange(format!(
            "maximal-class criterion needs n >= 4, got n = {n}"
        )));
    }
    let a = build_algebra(p);
    for k in 2..=n - 2 {
        if a.basis_product(x(k), y(k + 1)).iter().all(|&v| v == 0) {
            return Ok(false);
        }
    }
    let span = Subspace::span(
        a.field(),
        a.dim(),
        &[a.basis_product(x(1), y(2)).to_vec(), a.basis_product(y(1), y(2)).to_vec()],
    )?;
    Ok(span.dim() == 2)
}

/// `(x_k y_{k+1}, y_n) = -1` for `1 <= k <= n - 2` and `(y_1 y_2, y_{n-1}) = -1`.
pub fn maximal_class_family(n: usize, field: PrimeField) -> Result<NilpotentPresentation> {
    if n < 4 {
        return Err(Error::OutOfRange(format!(
            "maximal-class family needs n >= 4, got n = {n}"
        )));
    }
    let minus_one = field.modulus() - 1;
    let mut p = NilpotentPresentation::new(field, n);
    for k in 1..=n - 2 {
        p.set_alpha(k, k + 1, n, minus_one)?;
    }
    p.set_beta(1, 2, n - 1, minus_one)?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Nilpotency;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn parameter_counts() {
        assert_eq!(parameter_count(2), 0);
        assert_eq!(parameter_count(3), 2);
        assert_eq!(parameter_count(4), 8);
        assert_eq!(parameter_count(5), 20);
        for n in 0..8 {
            assert_eq!(parameter_slots(n).len(), parameter_count(n));
        }
        assert_eq!(
            parameter_slots(4)[..4],
            [
                (ParamKind::Alpha, (1, 2, 3)),
                (ParamKind::Alpha, (1, 2, 4)),
                (ParamKind::Alpha, (1, 3, 4)),
                (ParamKind::Alpha, (2, 3, 4))
            ]
        );
    }

    #[test]
    fn rejects_malformed_triples() {
        let mut p = NilpotentPresentation::new(gf(3), 4);
        assert!(p.set_alpha(2, 2, 3, 1).is_err());
        assert!(p.set_alpha(3, 2, 4, 1).is_err());
        assert!(p.set_beta(1, 2, 5, 1).is_err());
        assert!(p.set_beta(0, 2, 3, 1).is_err());
        p.set_beta(1, 2, 3, 4).unwrap();
        assert_eq!(p.beta(1, 2, 3), 1);
    }

    #[test]
    fn empty_presentation_is_abelian() {
        for n in 0..5 {
            let a = build_algebra(&NilpotentPresentation::new(gf(5), n));
            assert!(a.is_abelian());
            assert!(matches!(a.nilpotency_class(), Nilpotency::Class(c) if c <= 1));
        }
    }

    #[test]
    fn form_round_trip() {
        let f = gf(7);
        let p = NilpotentPresentation::from_parameters(f, 4, &[1, 2, 0, 3, 4, 0, 5, 6]).unwrap();
        assert_eq!(NilpotentPresentation::from_form(&p.to_form()).unwrap(), p);
        assert_eq!(p.parameters(), vec![1, 2, 0, 3, 4, 0, 5, 6]);
        let mut bad = TernaryForm::new(f, 4);
        bad.set(x(1), x(2), y(3), 1).unwrap();
        assert!(NilpotentPresentation::from_form(&bad).is_err());
        let mut bad = TernaryForm::new(f, 4);
        bad.set(x(2), y(2), y(3), 1).unwrap();
        assert!(NilpotentPresentation::from_form(&bad).is_err());
    }

    #[test]
    fn maximal_class_family_classes() {
        for p in [2, 3, 5] {
            for (n, class) in [(4, 5), (5, 7), (6, 9)] {
                let pres = maximal_class_family(n, gf(p)).unwrap();
                assert!(is_maximal_class_presentation(&pres).unwrap());
                assert_eq!(build_algebra(&pres).nilpotency_class(), Nilpotency::Class(class));
            }
        }
        assert!(maximal_class_family(3, gf(3)).is_err());
    }

    #[test]
    fn criterion_examples() {
        let f = gf(5);
        assert!(!is_maximal_class_presentation(&NilpotentPresentation::new(f, 4)).unwrap());
        assert!(is_maximal_class_presentation(&NilpotentPresentation::new(f, 3)).is_err());
        let mut p = NilpotentPresentation::new(f, 4);
        p.set_alpha(2, 3, 4, 1).unwrap();
        p.set_alpha(1, 2, 3, 1).unwrap();
        p.set_beta(1, 2, 4, 1).unwrap();
        assert!(is_maximal_class_presentation(&p).unwrap());
        let a = build_algebra(&p);
        assert_eq!(a.nilpotency_class(), Nilpotency::Class(5));
        assert_eq!(a.lower_central_series()[4].dim(), 2);
    }
}

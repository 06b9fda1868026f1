//! Ascending chains of isotropic ideals and the standard bases adapted to them.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

use super::NilpotentPresentation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ChainStrategy {
    /// Fill the chain inside the center first whenever the center is
    /// isotropic, then extend as in [`ChainStrategy::Plain`].
    #[default]
    CenterAdapted,
    /// From `I`, take the largest `m` with `I^perp L^m` not inside `I` and
    /// adjoin the first echelon row of `I^perp L^m` outside `I`.
    Plain,
}

/// `I_0 < I_1 < ... < I_n` with `dim I_r = r`, each an isotropic ideal and
/// `I_r L <= I_{r-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotropicChain {
    terms: Vec<Subspace>,
}

impl IsotropicChain {
    pub fn terms(&self) -> &[Subspace] {
        &self.terms
    }

    pub fn term(&self, r: usize) -> &Subspace {
        &self.terms[r]
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Checks every chain invariant against `a`.
    pub fn is_valid_for(&self, a: &Algebra) -> bool {
        let n = a.half_dim();
        if self.terms.len() != n + 1 {
            return false;
        }
        for (r, t) in self.terms.iter().enumerate() {
            if t.dim() != r || t.ambient_dim() != a.dim() || !t.is_isotropic(a.gram()) {
                return false;
            }
            if r > 0 {
                let prev = &self.terms[r - 1];
                if !prev.is_subspace_of(t) || !a.times_algebra(t).is_subspace_of(prev) {
                    return false;
                }
            }
        }
        true
    }
}

fn first_row_outside(space: &Subspace, inside: &Subspace) -> Option<Vec<u32>> {
    space
        .basis_vectors()
        .find(|v| !inside.contains(v))
        .map(<[u32]>::to_vec)
}

pub fn build_isotropic_chain(a: &Algebra) -> Result<IsotropicChain> {
    build_isotropic_chain_with(a, ChainStrategy::default())
}

/// Fails with [`Error::NotNilpotent`] when some `I^perp L^m` stops shrinking
/// outside `I`; a completed chain forces nilpotency, so no separate check is
/// needed.
pub fn build_isotropic_chain_with(a: &Algebra, strategy: ChainStrategy) -> Result<IsotropicChain> {
    let n = a.half_dim();
    let center = a.center();
    let use_center = strategy == ChainStrategy::CenterAdapted && center.is_isotropic(a.gram());
    let mut current = a.zero_space();
    let mut terms = vec![current.clone()];
    while current.dim() < n {
        let mut next = None;
        if use_center {
            next = first_row_outside(&center, &current);
        }
        if next.is_none() {
            let mut t = current.perp(a.gram())?;
            let mut candidate = None;
            while !t.is_subspace_of(&current) {
                let next_t = a.times_algebra(&t);
                if next_t.dim() == t.dim() {
                    return Err(Error::NotNilpotent);
                }
                candidate = Some(std::mem::replace(&mut t, next_t));
            }
            let t = candidate.ok_or_else(|| {
                Error::Inconsistent("isotropic ideal of dimension < n equals its perp".into())
            })?;
            next = first_row_outside(&t, &current);
        }
        let u = next.expect("a vector outside the current term exists");
        current = current.sum(&Subspace::span(a.field(), a.dim(), &[u])?)?;
        terms.push(current.clone());
    }
    Ok(IsotropicChain { terms })
}

/// A presentation of `a` and the standard basis realising it; the rows of the
/// matrix are `x_1, y_1, ..., x_n, y_n` in the old coordinates, so that
/// `build_algebra(&p) == a.change_basis(&basis)?`.
pub fn extract_presentation(a: &Algebra) -> Result<(NilpotentPresentation, Matrix)> {
    let chain = build_isotropic_chain(a)?;
    extract_presentation_with_chain(a, &chain)
}

pub fn extract_presentation_with_chain(
    a: &Algebra,
    chain: &IsotropicChain,
) -> Result<(NilpotentPresentation, Matrix)> {
    let n = a.half_dim();
    let d = a.dim();
    let f = a.field();
    if chain.len() != n + 1 {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            got: chain.len(),
        });
    }
    // x_{n+1-k} spans I_k modulo I_{k-1}
    let mut xs = vec![Vec::new(); n + 1];
    for k in 1..=n {
        xs[n + 1 - k] = first_row_outside(chain.term(k), chain.term(k - 1))
            .ok_or_else(|| Error::Inconsistent("chain terms do not grow".into()))?;
    }
    let mut ys: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for k in 1..=n {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        let mut rhs = Vec::new();
        // coefficients of v -> (w, v): (w, x_j) = -w_{y_j}, (w, y_j) = w_{x_j}
        let functional = |w: &[u32]| -> Vec<u32> {
            (0..d)
                .map(|i| if i % 2 == 0 { f.neg(w[i + 1]) } else { w[i - 1] })
                .collect()
        };
        for w in chain.term(n - k).basis_vectors() {
            rows.push(functional(w));
            rhs.push(0);
        }
        for j in 1..=n {
            rows.push(functional(&xs[j]));
            rhs.push(u32::from(j == k));
        }
        for yj in ys.iter().take(k).skip(1) {
            rows.push(functional(yj));
            rhs.push(0);
        }
        let m = Matrix::from_rows(f, d, &rows)?;
        ys[k] = m
            .solve(&rhs)?
            .ok_or_else(|| Error::Inconsistent(format!("no admissible y{k}")))?;
    }
    let mut rows = Vec::with_capacity(d);
    for k in 1..=n {
        rows.push(xs[k].clone());
        rows.push(ys[k].clone());
    }
    let basis = Matrix::from_rows(f, d, &rows)?;
    if !a.is_standard_basis(&basis) {
        return Err(Error::Inconsistent("completed basis is not standard".into()));
    }
    let form = a.form_in_basis(&basis);
    let p = NilpotentPresentation::from_form(&form)?;
    Ok((p, basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::presentation::{build_algebra, x, y};

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn abelian_chain_is_coordinate_flag() {
        let f = gf(3);
        let a = Algebra::abelian(f, 3);
        let chain = build_isotropic_chain(&a).unwrap();
        for r in 0..=3 {
            let idx: Vec<usize> = (1..=r).map(x).collect();
            assert_eq!(chain.term(r), &Subspace::coordinate(f, 6, &idx));
        }
        let (p, _) = extract_presentation(&a).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn p1_chain_and_round_trip() {
        let f = gf(5);
        let mut p1 = NilpotentPresentation::new(f, 3);
        p1.set_beta(1, 2, 3, 1).unwrap();
        let a = build_algebra(&p1);
        for strategy in [ChainStrategy::CenterAdapted, ChainStrategy::Plain] {
            let chain = build_isotropic_chain_with(&a, strategy).unwrap();
            assert!(chain.is_valid_for(&a));
            assert_eq!(chain.term(3), &Subspace::coordinate(f, 6, &[x(1), x(2), x(3)]));
            let (p, basis) = extract_presentation_with_chain(&a, &chain).unwrap();
            assert_eq!(build_algebra(&p), a.change_basis(&basis).unwrap());
            assert_eq!(p.alpha_entries().count(), 0);
            assert_eq!(p.beta_entries().count(), 1);
        }
    }

    #[test]
    fn not_nilpotent_is_rejected() {
        let f = gf(5);
        let mut form = crate::algebra::TernaryForm::new(f, 2);
        form.set(x(1), x(2), y(2), 1).unwrap();
        form.set(y(1), x(2), y(2), 1).unwrap();
        let a = Algebra::new(form);
        assert_eq!(build_isotropic_chain(&a), Err(Error::NotNilpotent));
        assert_eq!(extract_presentation(&a).map(|_| ()), Err(Error::NotNilpotent));
    }

    #[test]
    fn maximal_class_chain_starts_with_centers() {
        let f = gf(7);
        let mut p = NilpotentPresentation::new(f, 4);
        p.set_alpha(2, 3, 4, 3).unwrap();
        p.set_alpha(1, 2, 4, 1).unwrap();
        p.set_beta(1, 2, 3, 1).unwrap();
        let a = build_algebra(&p);
        let ucs = a.upper_central_series(crate::algebra::UcsMethod::Direct);
        for strategy in [ChainStrategy::CenterAdapted, ChainStrategy::Plain] {
            let chain = build_isotropic_chain_with(&a, strategy).unwrap();
            assert!(chain.is_valid_for(&a));
            assert_eq!(chain.term(2), &ucs[1]);
            assert_eq!(chain.term(3), &ucs[2]);
        }
    }
}

//! Symplectic alternating algebras given by an alternating ternary form on a
//! standard basis, together with their central series and structural
//! predicates.
//!
//! Basis index `2i` is `x_{i+1}` and `2i + 1` is `y_{i+1}` (0-based). The
//! product is recovered from the form through the nondegenerate pairing: the
//! `x_j` coordinate of `u v` is `phi(u, v, y_j)` and the `y_j` coordinate is
//! `-phi(u, v, x_j)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{standard_pair, EchelonBasis, GramMatrix, Matrix, Subspace};

/// Values `(e_a e_b, e_c)` on sorted index triples `a < b < c`; zero values
/// are not stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TernaryForm {
    field: PrimeField,
    n: usize,
    entries: BTreeMap<[usize; 3], u32>,
}

/// Sorts three distinct indices and returns the permutation sign.
fn sort_triple(a: usize, b: usize, c: usize) -> Option<([usize; 3], bool)> {
    if a == b || b == c || a == c {
        return None;
    }
    let mut t = [a, b, c];
    let mut odd = false;
    for i in 0..3 {
        for j in 0..2 - i {
            if t[j] > t[j + 1] {
                t.swap(j, j + 1);
                odd = !odd;
            }
        }
    }
    Some((t, odd))
}

impl TernaryForm {
    pub fn new(field: PrimeField, n: usize) -> Self {
        TernaryForm {
            field,
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn half_dim(&self) -> usize {
        self.n
    }

    /// Sets `phi(e_a, e_b, e_c) = value`, extended by total antisymmetry.
    /// Indices are 0-based global basis indices and must be distinct.
    pub fn set(&mut self, a: usize, b: usize, c: usize, value: u32) -> Result<()> {
        let d = 2 * self.n;
        if a >= d || b >= d || c >= d {
            return Err(Error::MalformedTriple(a, b, c, self.n));
        }
        let (key, odd) = sort_triple(a, b, c).ok_or(Error::MalformedTriple(a, b, c, self.n))?;
        let f = self.field;
        let v = value % f.modulus();
        let v = if odd { f.neg(v) } else { v };
        if v == 0 {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, v);
        }
        Ok(())
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> u32 {
        match sort_triple(a, b, c) {
            None => 0,
            Some((key, odd)) => {
                let v = self.entries.get(&key).copied().unwrap_or(0);
                if odd {
                    self.field.neg(v)
                } else {
                    v
                }
            }
        }
    }

    /// Nonzero entries in increasing triple order.
    pub fn entries(&self) -> impl Iterator<Item = ([usize; 3], u32)> + '_ {
        self.entries.iter().map(|(k, &v)| (*k, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `phi(u, v, w)` for arbitrary vectors, summing 3x3 minors.
    pub fn evaluate(&self, u: &[u32], v: &[u32], w: &[u32]) -> u32 {
        let f = self.field;
        let mut acc = 0;
        for (&[a, b, c], &g) in &self.entries {
            let minor = det3(f, [u[a], u[b], u[c]], [v[a], v[b], v[c]], [w[a], w[b], w[c]]);
            acc = f.mul_add(acc, g, minor);
        }
        acc
    }
}

fn det3(f: PrimeField, r0: [u32; 3], r1: [u32; 3], r2: [u32; 3]) -> u32 {
    let m = |a, b| f.mul(a, b);
    let t0 = m(r0[0], f.sub(m(r1[1], r2[2]), m(r1[2], r2[1])));
    let t1 = m(r0[1], f.sub(m(r1[0], r2[2]), m(r1[2], r2[0])));
    let t2 = m(r0[2], f.sub(m(r1[0], r2[1]), m(r1[1], r2[0])));
    f.add(f.sub(t0, t1), t2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Nilpotency {
    Class(usize),
    NotNilpotent,
}

impl Nilpotency {
    pub fn class(self) -> Option<usize> {
        match self {
            Nilpotency::Class(c) => Some(c),
            Nilpotency::NotNilpotent => None,
        }
    }
}

impl fmt::Display for Nilpotency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nilpotency::Class(c) => write!(f, "{c}"),
            Nilpotency::NotNilpotent => write!(f, "not nilpotent"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UcsMethod {
    /// `Z_{m+1} = {x : x L <= Z_m}` solved as a linear system.
    Direct,
    /// `Z_m = (L^{m+1})^perp`.
    Dual,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub lcs: Vec<Subspace>,
    pub ucs: Vec<Subspace>,
    pub class: Nilpotency,
    /// `dim L - dim L^2`.
    pub rank: usize,
}

impl SeriesReport {
    pub fn lcs_dims(&self) -> Vec<usize> {
        self.lcs.iter().map(Subspace::dim).collect()
    }

    pub fn ucs_dims(&self) -> Vec<usize> {
        self.ucs.iter().map(Subspace::dim).collect()
    }
}

#[derive(Clone, Debug)]
pub struct Algebra {
    field: PrimeField,
    n: usize,
    form: TernaryForm,
    gram: GramMatrix,
    // table[(i * d + j) * d + k] = k-th coordinate of e_i e_j
    table: Vec<u32>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.n == other.n && self.table == other.table
    }
}

impl Eq for Algebra {}

impl Algebra {
    pub fn new(form: TernaryForm) -> Self {
        let field = form.field;
        let n = form.n;
        let d = 2 * n;
        let mut table = vec![0u32; d * d * d];
        for (&[a, b, c], &g) in &form.entries {
            let perms = [
                ([a, b, c], false),
                ([b, c, a], false),
                ([c, a, b], false),
                ([b, a, c], true),
                ([a, c, b], true),
                ([c, b, a], true),
            ];
            for ([p, q, r], odd) in perms {
                let val = if odd { field.neg(g) } else { g };
                let base = (p * d + q) * d;
                if r % 2 == 1 {
                    // phi(p, q, y_j) lands on x_j
                    table[base + r - 1] = field.add(table[base + r - 1], val);
                } else {
                    table[base + r + 1] = field.sub(table[base + r + 1], val);
                }
            }
        }
        Algebra {
            field,
            n,
            gram: GramMatrix::standard(field, n),
            form,
            table,
        }
    }

    pub fn abelian(field: PrimeField, n: usize) -> Self {
        Self::new(TernaryForm::new(field, n))
    }

    /// Builds an algebra directly from structure constants without checking
    /// any axiom. `table[(i * d + j) * d + k]` is coordinate `k` of `e_i e_j`.
    /// Use [`Algebra::check_axioms`] to audit the result.
    pub fn from_product_table_unchecked(field: PrimeField, n: usize, table: Vec<u32>) -> Result<Self> {
        let d = 2 * n;
        if table.len() != d * d * d {
            return Err(Error::DimensionMismatch {
                expected: d * d * d,
                got: table.len(),
            });
        }
        let table: Vec<u32> = table.into_iter().map(|v| v % field.modulus()).collect();
        let mut form = TernaryForm::new(field, n);
        for a in 0..d {
            for b in a + 1..d {
                for c in b + 1..d {
                    let prod = &table[(a * d + b) * d..(a * d + b + 1) * d];
                    let mut ec = vec![0; d];
                    ec[c] = 1;
                    let v = standard_pair(field, prod, &ec);
                    form.set(a, b, c, v)?;
                }
            }
        }
        Ok(Algebra {
            field,
            n,
            gram: GramMatrix::standard(field, n),
            form,
            table,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn half_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn form(&self) -> &TernaryForm {
        &self.form
    }

    pub fn gram(&self) -> &GramMatrix {
        &self.gram
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|&v| v == 0)
    }

    /// `e_i e_j` as a coordinate slice.
    #[inline]
    pub fn basis_product(&self, i: usize, j: usize) -> &[u32] {
        let d = self.dim();
        &self.table[(i * d + j) * d..(i * d + j + 1) * d]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field, self.dim())
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(self.field, self.dim())
    }

    fn check_vector(&self, v: &[u32]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: v.len(),
            });
        }
        if let Some(&bad) = v.iter().find(|&&x| x >= self.field.modulus()) {
            return Err(Error::UnreducedEntry {
                value: bad,
                modulus: self.field.modulus(),
            });
        }
        Ok(())
    }

    pub fn multiply(&self, u: &[u32], v: &[u32]) -> Result<Vec<u32>> {
        self.check_vector(u)?;
        self.check_vector(v)?;
        Ok(self.mul(u, v))
    }

    pub(crate) fn mul(&self, u: &[u32], v: &[u32]) -> Vec<u32> {
        let d = self.dim();
        let f = self.field;
        let mut out = vec![0u32; d];
        for (i, &ui) in u.iter().enumerate() {
            if ui == 0 {
                continue;
            }
            for (j, &vj) in v.iter().enumerate() {
                if vj == 0 || i == j {
                    continue;
                }
                let c = f.mul(ui, vj);
                let prod = self.basis_product(i, j);
                for k in 0..d {
                    if prod[k] != 0 {
                        out[k] = f.mul_add(out[k], c, prod[k]);
                    }
                }
            }
        }
        out
    }

    /// `v e_j`.
    pub(crate) fn mul_basis_right(&self, v: &[u32], j: usize) -> Vec<u32> {
        let mut out = vec![0u32; self.dim()];
        self.mul_basis_right_into(v, j, &mut out);
        out
    }

    /// `v e_j` written into `out`.
    pub(crate) fn mul_basis_right_into(&self, v: &[u32], j: usize, out: &mut [u32]) {
        let d = self.dim();
        let f = self.field;
        out.fill(0);
        for (i, &vi) in v.iter().enumerate() {
            if vi == 0 {
                continue;
            }
            let prod = self.basis_product(i, j);
            for k in 0..d {
                if prod[k] != 0 {
                    out[k] = f.mul_add(out[k], vi, prod[k]);
                }
            }
        }
    }

    /// `(u, v)` under the standard form.
    pub fn pair(&self, u: &[u32], v: &[u32]) -> u32 {
        standard_pair(self.field, u, v)
    }

    /// `phi(u, v, w) = (u v, w)`.
    pub fn ternary(&self, u: &[u32], v: &[u32], w: &[u32]) -> u32 {
        self.pair(&self.mul(u, v), w)
    }

    pub fn subspace_product(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        if u.ambient_dim() != self.dim() || v.ambient_dim() != self.dim() {
            return Err(Error::AmbientMismatch {
                left: u.ambient_dim(),
                right: v.ambient_dim(),
            });
        }
        let mut span = EchelonBasis::new(self.field, self.dim());
        if v.is_full() {
            // U L: products with basis vectors are cheaper
            let mut w = vec![0u32; self.dim()];
            for a in u.basis_vectors() {
                for j in 0..self.dim() {
                    self.mul_basis_right_into(a, j, &mut w);
                    span.insert_scratch(&mut w);
                    if span.is_full() {
                        return Ok(span.into_subspace());
                    }
                }
            }
        } else {
            for a in u.basis_vectors() {
                for b in v.basis_vectors() {
                    span.insert(&self.mul(a, b));
                    if span.is_full() {
                        return Ok(span.into_subspace());
                    }
                }
            }
        }
        Ok(span.into_subspace())
    }

    /// `U L`.
    pub fn times_algebra(&self, u: &Subspace) -> Subspace {
        self.subspace_product(u, &self.full_space())
            .expect("ambient matches by construction")
    }

    /// `L^1 = L, L^{m+1} = L^m L`, stopping at zero or when the series
    /// stabilises; the stable term is not repeated.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let mut terms = vec![self.full_space()];
        for _ in 0..=self.dim() {
            let last = terms.last().expect("nonempty");
            if last.is_zero() {
                break;
            }
            let next = self.times_algebra(last);
            if next.dim() == last.dim() {
                break;
            }
            terms.push(next);
        }
        terms
    }

    /// `Z_{m+1}` from `Z_m`: kernel of `x -> (x e_j mod Z_m)_j`, with the
    /// quotient read off the non-pivot coordinates of `Z_m`.
    pub fn next_center(&self, z: &Subspace) -> Subspace {
        let d = self.dim();
        let mut is_pivot = vec![false; d];
        for &p in z.pivots() {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..d).filter(|&c| !is_pivot[c]).collect();
        let mut m = Matrix::zeros(self.field, d * free.len(), d);
        for j in 0..d {
            for i in 0..d {
                let product = self.basis_product(i, j);
                let reduced;
                let r = if z.is_zero() {
                    product
                } else {
                    reduced = z.reduce(product);
                    &reduced
                };
                for (t, &c) in free.iter().enumerate() {
                    m.set(j * free.len() + t, i, r[c]);
                }
            }
        }
        m.kernel()
    }

    pub fn upper_central_series(&self, method: UcsMethod) -> Vec<Subspace> {
        match method {
            UcsMethod::Dual => self
                .lower_central_series()
                .iter()
                .map(|t| t.perp(&self.gram).expect("ambient matches"))
                .collect(),
            UcsMethod::Direct => {
                let mut terms = vec![self.zero_space()];
                for _ in 0..=self.dim() {
                    let last = terms.last().expect("nonempty");
                    if last.is_full() {
                        break;
                    }
                    let next = self.next_center(last);
                    if next.dim() == last.dim() {
                        break;
                    }
                    terms.push(next);
                }
                terms
            }
        }
    }

    pub fn nilpotency_class(&self) -> Nilpotency {
        Self::class_from_lcs(&self.lower_central_series())
    }

    fn class_from_lcs(lcs: &[Subspace]) -> Nilpotency {
        let last = lcs.last().expect("lcs is nonempty");
        if last.is_zero() {
            Nilpotency::Class(lcs.len() - 1)
        } else {
            Nilpotency::NotNilpotent
        }
    }

    pub fn series(&self) -> SeriesReport {
        let lcs = self.lower_central_series();
        let ucs = self.upper_central_series(UcsMethod::Direct);
        let class = Self::class_from_lcs(&lcs);
        let rank = self.dim() - lcs.get(1).map_or(0, Subspace::dim);
        SeriesReport {
            lcs,
            ucs,
            class,
            rank,
        }
    }

    pub fn is_ideal(&self, ideal: &Subspace) -> bool {
        ideal.ambient_dim() == self.dim() && self.times_algebra(ideal).is_subspace_of(ideal)
    }

    pub fn center(&self) -> Subspace {
        self.next_center(&self.zero_space())
    }

    /// Audits the structure constants on basis triples: the product is
    /// alternating, `phi` is totally antisymmetric and `(u v, w) = (v w, u)`.
    pub fn check_axioms(&self) -> bool {
        let d = self.dim();
        let f = self.field;
        let e: Vec<Vec<u32>> = (0..d).map(|i| self.basis_vector(i)).collect();
        let phi = |i: usize, j: usize, k: usize| standard_pair(f, self.basis_product(i, j), &e[k]);
        for i in 0..d {
            if self.basis_product(i, i).iter().any(|&v| v != 0) {
                return false;
            }
            for j in 0..d {
                let (a, b) = (self.basis_product(i, j), self.basis_product(j, i));
                if a.iter().zip(b).any(|(&x, &y)| f.add(x, y) != 0) {
                    return false;
                }
                for k in 0..d {
                    let v = phi(i, j, k);
                    if v != phi(j, k, i)
                        || f.add(v, phi(j, i, k)) != 0
                        || f.add(v, phi(i, k, j)) != 0
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Jacobi identity on all basis triples.
    pub fn is_lie(&self) -> bool {
        let d = self.dim();
        let f = self.field;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let a = self.mul_basis_right(self.basis_product(i, j), k);
                    let b = self.mul_basis_right(self.basis_product(j, k), i);
                    let c = self.mul_basis_right(self.basis_product(k, i), j);
                    if (0..d).any(|t| f.add(f.add(a[t], b[t]), c[t]) != 0) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `(e_i e_j) e_k = e_i (e_j e_k)` on all basis triples.
    pub fn is_associative(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            let ei = self.basis_vector(i);
            for j in 0..d {
                for k in 0..d {
                    let left = self.mul_basis_right(self.basis_product(i, j), k);
                    let right = self.mul(&ei, self.basis_product(j, k));
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether the rows of `basis` form a standard basis: `(x_i, y_j) =
    /// delta_ij` and every other pairing zero.
    pub fn is_standard_basis(&self, basis: &Matrix) -> bool {
        let d = self.dim();
        if basis.rows() != d || basis.cols() != d || basis.field() != self.field {
            return false;
        }
        for a in 0..d {
            for b in 0..d {
                let expected = if a % 2 == 0 && b == a + 1 {
                    1
                } else if b % 2 == 0 && a == b + 1 {
                    self.field.modulus() - 1
                } else {
                    0
                };
                if self.pair(basis.row(a), basis.row(b)) != expected {
                    return false;
                }
            }
        }
        true
    }

    /// The same algebra written in a new standard basis whose vectors are the
    /// rows of `basis` (old coordinates).
    pub fn change_basis(&self, basis: &Matrix) -> Result<Algebra> {
        if !self.is_standard_basis(basis) {
            return Err(Error::NotStandardBasis(
                "rows do not pair as x1, y1, ..., xn, yn".into(),
            ));
        }
        Ok(Algebra::new(self.form_in_basis(basis)))
    }

    pub(crate) fn form_in_basis(&self, basis: &Matrix) -> TernaryForm {
        let d = basis.rows();
        let mut form = TernaryForm::new(self.field, d / 2);
        let rows: Vec<&[u32]> = (0..d).map(|i| basis.row(i)).collect();
        for a in 0..d {
            for b in a + 1..d {
                let ab = self.mul(rows[a], rows[b]);
                if ab.iter().all(|&v| v == 0) {
                    continue;
                }
                for c in b + 1..d {
                    let v = self.pair(&ab, rows[c]);
                    if v != 0 {
                        form.set(a, b, c, v).expect("indices in range");
                    }
                }
            }
        }
        form
    }

    /// The algebra induced on `I^perp / (I cap I^perp)`, written in a standard
    /// basis built by greedy symplectic Gram-Schmidt.
    pub fn induced_quotient(&self, ideal: &Subspace) -> Result<Algebra> {
        if ideal.ambient_dim() != self.dim() {
            return Err(Error::AmbientMismatch {
                left: ideal.ambient_dim(),
                right: self.dim(),
            });
        }
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let perp = ideal.perp(&self.gram)?;
        let radical = ideal.intersect(&perp)?;
        let mut reps: Vec<Vec<u32>> = Vec::new();
        let mut span = EchelonBasis::from_subspace(&radical);
        for v in perp.basis_vectors() {
            if span.insert(v) {
                reps.push(v.to_vec());
            }
        }
        let basis = symplectic_gram_schmidt(self.field, reps)?;
        let m = basis.len();
        let basis = Matrix::from_rows(self.field, self.dim(), &basis)?;
        let mut form = TernaryForm::new(self.field, m / 2);
        for a in 0..m {
            for b in a + 1..m {
                let ab = self.mul(basis.row(a), basis.row(b));
                for c in b + 1..m {
                    form.set(a, b, c, self.pair(&ab, basis.row(c)))?;
                }
            }
        }
        Ok(Algebra::new(form))
    }
}

/// Pairs up vectors spanning a nondegenerate space into `x1, y1, x2, y2, ...`.
/// The first remaining vector becomes `x`; the first later vector pairing
/// nontrivially with it, rescaled, becomes `y`; the rest are projected off.
pub fn symplectic_gram_schmidt(field: PrimeField, mut vectors: Vec<Vec<u32>>) -> Result<Vec<Vec<u32>>> {
    let f = field;
    let mut out = Vec::with_capacity(vectors.len());
    while !vectors.is_empty() {
        let u = vectors.remove(0);
        let Some(pos) = vectors.iter().position(|w| standard_pair(f, &u, w) != 0) else {
            return Err(Error::Inconsistent(
                "form is degenerate on the spanned space".into(),
            ));
        };
        let w = vectors.remove(pos);
        let scale = f.inv(standard_pair(f, &u, &w))?;
        let v: Vec<u32> = w.iter().map(|&x| f.mul(x, scale)).collect();
        for z in vectors.iter_mut() {
            let zv = standard_pair(f, z, &v);
            let zu = standard_pair(f, z, &u);
            for t in 0..z.len() {
                z[t] = f.sub(z[t], f.mul(zv, u[t]));
                z[t] = f.mul_add(z[t], zu, v[t]);
            }
        }
        out.push(u);
        out.push(v);
    }
    Ok(out)
}

impl fmt::Display for Algebra {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "SAA of dimension {} over {}", self.dim(), self.field)?;
        for ([a, b, c], v) in self.form.entries() {
            write!(out, "\n  ({}{}, {}) = {}", basis_name(a), basis_name(b), basis_name(c), v)?;
        }
        Ok(())
    }
}

/// `x3`, `y1`, ... for a 0-based basis index.
pub fn basis_name(i: usize) -> String {
    format!("{}{}", if i % 2 == 0 { 'x' } else { 'y' }, i / 2 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    const fn x(i: usize) -> usize {
        2 * (i - 1)
    }
    const fn y(i: usize) -> usize {
        2 * (i - 1) + 1
    }

    fn unit(d: usize, i: usize) -> Vec<u32> {
        let mut v = vec![0; d];
        v[i] = 1;
        v
    }

    fn p1(field: PrimeField) -> Algebra {
        let mut form = TernaryForm::new(field, 3);
        form.set(y(1), y(2), y(3), 1).unwrap();
        Algebra::new(form)
    }

    fn example12(field: PrimeField) -> Algebra {
        let mut form = TernaryForm::new(field, 6);
        form.set(x(3), y(5), y(6), 1).unwrap();
        form.set(x(2), y(4), y(6), 1).unwrap();
        form.set(x(1), y(4), y(5), 1).unwrap();
        form.set(y(1), y(2), y(3), 1).unwrap();
        Algebra::new(form)
    }

    #[test]
    fn ternary_form_antisymmetry() {
        let f = gf(5);
        let mut t = TernaryForm::new(f, 2);
        t.set(2, 0, 1, 3).unwrap();
        assert_eq!(t.get(0, 1, 2), 3);
        assert_eq!(t.get(1, 0, 2), 2);
        assert_eq!(t.get(0, 0, 2), 0);
        assert!(t.set(0, 0, 1, 1).is_err());
        assert!(t.set(0, 1, 9, 1).is_err());
        t.set(0, 1, 2, 0).unwrap();
        assert!(t.is_empty());
    }

    #[test]
    fn products_in_p1() {
        let a = p1(gf(3));
        assert_eq!(a.multiply(&unit(6, y(1)), &unit(6, y(2))).unwrap(), unit(6, x(3)));
        let u = vec![1, 2, 0, 1, 2, 2];
        assert_eq!(a.multiply(&u, &u).unwrap(), vec![0; 6]);
        assert!(a.multiply(&[0; 4], &u).is_err());
        assert!(a.multiply(&[5, 0, 0, 0, 0, 0], &u).is_err());
    }

    #[test]
    fn products_in_example12() {
        let f = gf(7);
        let a = example12(f);
        let d = 12;
        let m = |p: usize, q: usize| a.multiply(&unit(d, p), &unit(d, q)).unwrap();
        let neg = |i: usize| {
            let mut v = vec![0; d];
            v[i] = 6;
            v
        };
        assert_eq!(m(y(2), y(3)), unit(d, x(1)));
        assert_eq!(m(x(3), y(5)), unit(d, x(6)));
        assert_eq!(m(x(3), y(6)), neg(x(5)));
        assert_eq!(m(x(2), y(4)), unit(d, x(6)));
        assert_eq!(m(x(2), y(6)), neg(x(4)));
        assert_eq!(m(x(1), y(4)), unit(d, x(5)));
        assert_eq!(m(x(1), y(5)), neg(x(4)));
        assert_eq!(m(y(1), y(2)), unit(d, x(3)));
        assert_eq!(m(y(1), y(3)), neg(x(2)));
        assert_eq!(m(y(4), y(5)), neg(y(1)));
        assert_eq!(m(y(4), y(6)), neg(y(2)));
        assert_eq!(m(y(5), y(6)), neg(y(3)));
    }

    #[test]
    fn example12_structure() {
        let f = gf(3);
        let a = example12(f);
        let r = a.series();
        assert_eq!(r.lcs_dims(), vec![12, 9, 6, 3, 0]);
        assert_eq!(r.ucs_dims(), vec![0, 3, 6, 9, 12]);
        assert_eq!(r.class, Nilpotency::Class(4));
        let l2 = &r.lcs[1];
        let l2l2 = a.subspace_product(l2, l2).unwrap();
        assert_eq!(l2l2, Subspace::coordinate(f, 12, &[x(1), x(2), x(3)]));
        assert!(!a.is_ideal(&l2l2));
        assert!(!l2l2.is_subspace_of(&r.lcs[3]));
        assert!(a.check_axioms());
        assert_eq!(
            a.upper_central_series(UcsMethod::Direct),
            a.upper_central_series(UcsMethod::Dual)
        );
    }

    #[test]
    fn abelian_basics() {
        let f = gf(5);
        let a = Algebra::abelian(f, 3);
        assert_eq!(a.series().lcs_dims(), vec![6, 0]);
        assert_eq!(a.upper_central_series(UcsMethod::Direct).len(), 2);
        assert_eq!(a.nilpotency_class(), Nilpotency::Class(1));
        assert_eq!(a.center(), a.full_space());
        assert!(a.is_lie() && a.is_associative());
        let zero = Algebra::abelian(f, 0);
        assert_eq!(zero.nilpotency_class(), Nilpotency::Class(0));
    }

    #[test]
    fn p1_center_and_lie() {
        let f = gf(3);
        let a = p1(f);
        assert_eq!(a.center(), Subspace::coordinate(f, 6, &[x(1), x(2), x(3)]));
        assert!(a.is_lie());
        assert_eq!(a.nilpotency_class(), Nilpotency::Class(2));
    }

    #[test]
    fn ideals() {
        let a = example12(gf(5));
        assert!(a.is_ideal(&a.zero_space()));
        assert!(a.is_ideal(&a.full_space()));
        for t in a.lower_central_series() {
            assert!(a.is_ideal(&t));
        }
    }

    #[test]
    fn corrupted_table_fails_audit() {
        let f = gf(5);
        let a = p1(f);
        assert!(a.check_axioms());
        let d = 6;
        let mut table = vec![0u32; d * d * d];
        // y1 y2 = x3 but y2 y1 left at zero
        table[(y(1) * d + y(2)) * d + x(3)] = 1;
        let bad = Algebra::from_product_table_unchecked(f, 3, table).unwrap();
        assert!(!bad.check_axioms());
        // alternating but violating the cyclic identity
        let mut table = vec![0u32; d * d * d];
        table[(y(1) * d + y(2)) * d + x(3)] = 1;
        table[(y(2) * d + y(1)) * d + x(3)] = 4;
        let bad = Algebra::from_product_table_unchecked(f, 3, table).unwrap();
        assert!(!bad.check_axioms());
    }

    #[test]
    fn non_nilpotent_algebra() {
        // (x1 y1, x2) style form with a nonzero pairing cycle: e.g. phi(x1,y1,x2)=1 and phi(x2, y2, y1)=1
        let f = gf(5);
        let mut form = TernaryForm::new(f, 2);
        form.set(x(1), x(2), y(2), 1).unwrap();
        form.set(y(1), x(2), y(2), 1).unwrap();
        let a = Algebra::new(form);
        assert!(a.check_axioms());
        let lcs = a.lower_central_series();
        assert_eq!(a.nilpotency_class(), Nilpotency::NotNilpotent);
        assert!(!lcs.last().unwrap().is_zero());
        assert_eq!(
            a.upper_central_series(UcsMethod::Direct),
            a.upper_central_series(UcsMethod::Dual)
        );
    }

    #[test]
    fn quotient_trivial_cases() {
        let a = example12(gf(3));
        assert_eq!(a.induced_quotient(&a.zero_space()).unwrap(), a);
        assert_eq!(a.induced_quotient(&a.full_space()).unwrap().dim(), 0);
        let not_ideal = a.subspace_product(&a.lower_central_series()[1], &a.lower_central_series()[1]).unwrap();
        assert_eq!(a.induced_quotient(&not_ideal), Err(Error::NotAnIdeal));
    }

    #[test]
    fn quotient_by_isotropic_ideal() {
        let f = gf(5);
        let a = example12(f);
        let l4 = a.lower_central_series()[3].clone();
        let q = a.induced_quotient(&l4).unwrap();
        assert_eq!(q.dim(), 12 - 2 * l4.dim());
        assert!(q.check_axioms());
    }

    #[test]
    fn change_basis_rejects_non_symplectic() {
        let f = gf(3);
        let a = p1(f);
        let mut m = Matrix::identity(f, 6);
        m.set(0, 0, 2);
        assert!(a.change_basis(&m).is_err());
        assert_eq!(a.change_basis(&Matrix::identity(f, 6)).unwrap(), a);
    }

    #[test]
    fn evaluate_matches_product() {
        let f = gf(7);
        let a = example12(f);
        let u: Vec<u32> = (0..12).map(|i| (i * 3 + 1) % 7).collect();
        let v: Vec<u32> = (0..12).map(|i| (i * i + 2) % 7).collect();
        let w: Vec<u32> = (0..12).map(|i| (5 * i + 4) % 7).collect();
        assert_eq!(a.form().evaluate(&u, &v, &w), a.ternary(&u, &v, &w));
    }
}

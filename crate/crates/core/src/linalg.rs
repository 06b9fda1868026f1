//! Dense exact linear algebra over GF(p).
//!
//! Vectors are plain residue slices in basis order `x1, y1, x2, y2, ...`.
//! A [`Subspace`] always stores its basis in reduced row-echelon form with
//! zero rows pruned, so two subspaces are equal exactly when their stored
//! bases are equal.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from rows of already reduced residues.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
            for &v in row {
                if v >= field.modulus() {
                    return Err(Error::UnreducedEntry {
                        value: v,
                        modulus: field.modulus(),
                    });
                }
            }
            data.extend_from_slice(row);
        }
        Ok(Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix from signed integers, reducing each entry.
    pub fn from_i64_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let reduced: Vec<Vec<u32>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, cols, &reduced)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: u32) {
        self.data[i * self.cols + j] = value % self.field.modulus();
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn push_row(&mut self, row: &[u32]) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: row.len(),
            });
        }
        self.data.extend_from_slice(row);
        self.rows += 1;
        Ok(())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.mul_add(out.data[idx], a, other.get(k, j));
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.rows);
        let f = self.field;
        let mut out = vec![0u32; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let row = self.row(k);
            for j in 0..self.cols {
                out[j] = f.mul_add(out[j], a, row[j]);
            }
        }
        out
    }

    /// Reduces in place to reduced row-echelon form and returns the pivot
    /// columns. Zero rows end up at the bottom.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(sel) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if sel != r {
                for j in 0..cols {
                    self.data.swap(sel * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.data[r * cols + c]).expect("pivot is nonzero");
            for j in c..cols {
                self.data[r * cols + j] = f.mul(self.data[r * cols + j], inv);
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c];
                if factor == 0 {
                    continue;
                }
                let neg = f.neg(factor);
                for j in c..cols {
                    let v = self.data[r * cols + j];
                    if v != 0 {
                        self.data[i * cols + j] = f.mul_add(self.data[i * cols + j], neg, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row-echelon form with zero rows pruned.
    pub fn rref(&self) -> Matrix {
        self.rref_with_pivots().0
    }

    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        m.rows = pivots.len();
        m.data.truncate(m.rows * m.cols);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// `{x : M x = 0}` as a subspace of `F^cols`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref_with_pivots();
        let cols = self.cols;
        let f = self.field;
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; cols];
            v[free] = 1;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        Subspace::span(f, cols, &basis).expect("kernel vectors have the right length")
    }

    /// A solution of `M x = rhs` with every free variable set to zero, or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[u32]) -> Result<Option<Vec<u32>>> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: rhs.len(),
            });
        }
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            aug.data[i * (self.cols + 1)..i * (self.cols + 1) + self.cols]
                .copy_from_slice(self.row(i));
            aug.data[i * (self.cols + 1) + self.cols] = rhs[i] % self.field.modulus();
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0u32; self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(i, self.cols);
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i * 2 * n + j] = self.get(i, j);
            }
            aug.data[i * 2 * n + n + i] = 1;
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.data[i * n + j] = aug.get(i, n + j);
            }
        }
        Some(inv)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Incrementally maintained reduced row-echelon basis.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(field: PrimeField, ambient: usize) -> Self {
        EchelonBasis {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        EchelonBasis {
            field: s.field,
            ambient: s.ambient,
            rows: s.basis.row_vecs(),
            pivots: s.pivots.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    fn reduce_in_place(&self, v: &mut [u32]) {
        let f = self.field;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (x, &r) in v.iter_mut().zip(row) {
                if r != 0 {
                    *x = f.mul_add(*x, neg, r);
                }
            }
        }
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.insert_scratch(&mut w)
    }

    /// Like [`EchelonBasis::insert`], reducing `w` in place; when the span
    /// grows the buffer is taken over and `w` is reset to zeros.
    pub fn insert_scratch(&mut self, w: &mut Vec<u32>) -> bool {
        debug_assert_eq!(w.len(), self.ambient);
        self.reduce_in_place(w);
        let Some(p) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let mut w = std::mem::replace(w, vec![0; self.ambient]);
        let f = self.field;
        let inv = f.inv(w[p]).expect("nonzero");
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[p];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (x, &r) in row.iter_mut().zip(&w) {
                if r != 0 {
                    *x = f.mul_add(*x, neg, r);
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, w);
        true
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w.iter().all(|&x| x == 0)
    }

    pub fn into_subspace(self) -> Subspace {
        let mut data = Vec::with_capacity(self.rows.len() * self.ambient);
        for r in &self.rows {
            data.extend_from_slice(r);
        }
        Subspace {
            field: self.field,
            ambient: self.ambient,
            basis: Matrix {
                field: self.field,
                rows: self.rows.len(),
                cols: self.ambient,
                data,
            },
            pivots: self.pivots,
        }
    }
}

/// A subspace of `F^ambient` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        let (basis, pivots) = m.rref_with_pivots();
        Subspace {
            field: m.field,
            ambient: m.cols,
            basis,
            pivots,
        }
    }

    pub fn span(field: PrimeField, ambient: usize, vectors: &[Vec<u32>]) -> Result<Self> {
        let mut b = EchelonBasis::new(field, ambient);
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    got: v.len(),
                });
            }
            let v: Vec<u32> = v.iter().map(|&x| x % field.modulus()).collect();
            b.insert(&v);
        }
        Ok(b.into_subspace())
    }

    /// Span of a set of standard basis vectors.
    pub fn coordinate(field: PrimeField, ambient: usize, indices: &[usize]) -> Self {
        let vecs: Vec<Vec<u32>> = indices
            .iter()
            .map(|&i| {
                let mut v = vec![0; ambient];
                v[i] = 1;
                v
            })
            .collect();
        Self::span(field, ambient, &vecs).expect("indices in range")
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[u32]> {
        (0..self.basis.rows).map(move |i| self.basis.row(i))
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        if self.field != other.field {
            return Err(Error::MismatchedModuli {
                left: self.field.modulus(),
                right: other.field.modulus(),
            });
        }
        Ok(())
    }

    /// Canonical representative of `v` modulo this subspace: zero at every
    /// pivot column.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = w[p];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (x, &r) in w.iter_mut().zip(self.basis.row(i)) {
                if r != 0 {
                    *x = f.mul_add(*x, neg, r);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        v.len() == self.ambient && self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && self.dim() <= other.dim()
            && self.basis_vectors().all(|v| other.contains(v))
    }

    /// Standard basis vectors at the non-pivot columns; they span a
    /// complement of this subspace.
    pub fn complement_basis(&self) -> Vec<Vec<u32>> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient)
            .filter(|&c| !is_pivot[c])
            .map(|c| {
                let mut v = vec![0; self.ambient];
                v[c] = 1;
                v
            })
            .collect()
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut b = EchelonBasis::from_subspace(self);
        for v in other.basis_vectors() {
            if b.is_full() {
                break;
            }
            b.insert(v);
        }
        Ok(b.into_subspace())
    }

    /// Intersection by the kernel method: coefficient vectors `(a, b)` with
    /// `a U + b V = 0` give the common vectors `a U`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let (k, l) = (self.dim(), other.dim());
        if k == 0 || l == 0 {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        let mut stacked = Matrix::zeros(self.field, k + l, self.ambient);
        for i in 0..k {
            stacked.data[i * self.ambient..(i + 1) * self.ambient]
                .copy_from_slice(self.basis.row(i));
        }
        for i in 0..l {
            stacked.data[(k + i) * self.ambient..(k + i + 1) * self.ambient]
                .copy_from_slice(other.basis.row(i));
        }
        let kernel = stacked.transpose().kernel();
        let mut b = EchelonBasis::new(self.field, self.ambient);
        for c in kernel.basis_vectors() {
            b.insert(&self.basis.apply_row(&c[..k]));
        }
        Ok(b.into_subspace())
    }

    pub fn perp(&self, gram: &GramMatrix) -> Result<Subspace> {
        if gram.dim() != self.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: gram.dim(),
            });
        }
        if self.dim() == 0 {
            return Ok(Subspace::full(self.field, self.ambient));
        }
        let functionals = self.basis.mul(&gram.matrix)?;
        Ok(functionals.kernel())
    }

    pub fn is_isotropic(&self, gram: &GramMatrix) -> bool {
        let vs: Vec<&[u32]> = self.basis_vectors().collect();
        for (i, u) in vs.iter().enumerate() {
            for v in &vs[i + 1..] {
                if gram.pair(u, v) != 0 {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<dim {} in F^{}>", self.dim(), self.ambient)?;
        if self.dim() > 0 {
            write!(f, "\n{}", self.basis)?;
        }
        Ok(())
    }
}

/// Gram matrix of the alternating form in a standard basis
/// `x1, y1, ..., xn, yn`: `n` diagonal blocks `[[0, 1], [-1, 0]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    n: usize,
    matrix: Matrix,
}

impl GramMatrix {
    pub fn standard(field: PrimeField, n: usize) -> Self {
        let mut m = Matrix::zeros(field, 2 * n, 2 * n);
        for i in 0..n {
            m.set(2 * i, 2 * i + 1, 1);
            m.set(2 * i + 1, 2 * i, field.modulus() - 1);
        }
        GramMatrix { n, matrix: m }
    }

    pub fn half_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `(u, v) = sum_i u_{x_i} v_{y_i} - u_{y_i} v_{x_i}`.
    #[inline]
    pub fn pair(&self, u: &[u32], v: &[u32]) -> u32 {
        standard_pair(self.matrix.field, u, v)
    }
}

#[inline]
pub(crate) fn standard_pair(f: PrimeField, u: &[u32], v: &[u32]) -> u32 {
    let mut acc = 0u32;
    for i in (0..u.len()).step_by(2) {
        acc = f.mul_add(acc, u[i], v[i + 1]);
        acc = f.sub(acc, f.mul(u[i + 1], v[i]));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn e(d: usize, i: usize) -> Vec<u32> {
        let mut v = vec![0; d];
        v[i] = 1;
        v
    }

    #[test]
    fn rref_examples() {
        let f = gf(3);
        assert_eq!(Matrix::zeros(f, 2, 2).rref().rows(), 0);
        assert_eq!(Matrix::identity(f, 3).rref(), Matrix::identity(f, 3));
        let m = Matrix::from_rows(f, 2, &[vec![2, 0], vec![0, 0]]).unwrap();
        assert_eq!(m.rref(), Matrix::from_rows(f, 2, &[vec![1, 0]]).unwrap());
    }

    #[test]
    fn rref_is_deterministic_and_preserves_row_space() {
        let f = gf(5);
        let m = Matrix::from_i64_rows(f, &[vec![1, 2, 3, 4], vec![2, 4, 1, 0], vec![3, 1, 4, 4]])
            .unwrap();
        let (r, piv) = m.rref_with_pivots();
        assert_eq!(piv.len(), m.rank());
        let s = Subspace::from_matrix(&m);
        for i in 0..m.rows() {
            assert!(s.contains(m.row(i)));
        }
        assert_eq!(Subspace::from_matrix(&r), s);
    }

    #[test]
    fn sum_examples() {
        let f = gf(3);
        let u = Subspace::coordinate(f, 4, &[0, 2]);
        assert_eq!(u.sum(&Subspace::zero(f, 4)).unwrap(), u);
        assert_eq!(u.sum(&u).unwrap(), u);
        assert_eq!(
            Subspace::coordinate(f, 4, &[0])
                .sum(&Subspace::coordinate(f, 4, &[1]))
                .unwrap(),
            Subspace::coordinate(f, 4, &[0, 1])
        );
        assert_eq!(
            u.sum(&Subspace::zero(f, 6)),
            Err(Error::AmbientMismatch { left: 4, right: 6 })
        );
    }

    #[test]
    fn intersect_examples() {
        let f = gf(3);
        let c = |ix: &[usize]| Subspace::coordinate(f, 4, ix);
        assert_eq!(c(&[0, 1]).intersect(&c(&[0, 1])).unwrap(), c(&[0, 1]));
        assert_eq!(c(&[0]).intersect(&c(&[1])).unwrap(), Subspace::zero(f, 4));
        assert_eq!(c(&[0, 1]).intersect(&c(&[1, 2])).unwrap(), c(&[1]));
    }

    #[test]
    fn perp_examples() {
        let f = gf(5);
        let g = GramMatrix::standard(f, 2);
        assert_eq!(Subspace::zero(f, 4).perp(&g).unwrap(), Subspace::full(f, 4));
        assert_eq!(Subspace::full(f, 4).perp(&g).unwrap(), Subspace::zero(f, 4));
        // perp of x1 is x1, x2, y2
        assert_eq!(
            Subspace::coordinate(f, 4, &[0]).perp(&g).unwrap(),
            Subspace::coordinate(f, 4, &[0, 2, 3])
        );
    }

    #[test]
    fn isotropy_examples() {
        let f = gf(7);
        let g = GramMatrix::standard(f, 3);
        assert!(Subspace::zero(f, 6).is_isotropic(&g));
        assert!(!Subspace::coordinate(f, 6, &[0, 1]).is_isotropic(&g));
        assert!(Subspace::coordinate(f, 6, &[0, 2, 4]).is_isotropic(&g));
    }

    #[test]
    fn gram_is_antisymmetric_and_nondegenerate() {
        let f = gf(3);
        let g = GramMatrix::standard(f, 3);
        let m = g.matrix();
        for i in 0..6 {
            assert_eq!(m.get(i, i), 0);
            for j in 0..6 {
                assert_eq!(m.get(i, j), f.neg(m.get(j, i)));
                assert_eq!(g.pair(&e(6, i), &e(6, j)), m.get(i, j));
            }
        }
        assert!(m.inverse().is_some());
    }

    #[test]
    fn solve_and_inverse() {
        let f = gf(7);
        let m = Matrix::from_i64_rows(f, &[vec![1, 2], vec![3, 4]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(f, 2));
        let x = m.solve(&[1, 0]).unwrap().unwrap();
        assert_eq!(m.apply_row(&[0, 0]), vec![0, 0]);
        let lhs: Vec<u32> = (0..2)
            .map(|i| f.add(f.mul(m.get(i, 0), x[0]), f.mul(m.get(i, 1), x[1])))
            .collect();
        assert_eq!(lhs, vec![1, 0]);
        let singular = Matrix::from_i64_rows(f, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(singular.inverse().is_none());
        assert_eq!(singular.solve(&[0, 1]).unwrap(), None);
    }

    #[test]
    fn kernel_dimension() {
        let f = gf(5);
        let m = Matrix::from_i64_rows(f, &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]).unwrap();
        let k = m.kernel();
        assert_eq!(k.dim(), 2);
        for v in k.basis_vectors() {
            assert!(m.apply_row_t(v).iter().all(|&x| x == 0));
        }
    }

    impl Matrix {
        fn apply_row_t(&self, v: &[u32]) -> Vec<u32> {
            self.transpose().apply_row(v)
        }
    }

    #[test]
    fn perp_involution_exhaustive_gf2_dim4() {
        let f = gf(2);
        let g = GramMatrix::standard(f, 2);
        // every subspace of GF(2)^4 arises as the span of a subset of its 15 nonzero vectors;
        // spans of pairs and triples already reach all of them
        let vecs: Vec<Vec<u32>> = (1u32..16)
            .map(|m| (0..4).map(|b| (m >> b) & 1).collect())
            .collect();
        let mut seen = std::collections::HashSet::new();
        for a in 0..vecs.len() {
            for b in a..vecs.len() {
                for c in b..vecs.len() {
                    for d in c..vecs.len() {
                        let s = Subspace::span(
                            f,
                            4,
                            &[vecs[a].clone(), vecs[b].clone(), vecs[c].clone(), vecs[d].clone()],
                        )
                        .unwrap();
                        seen.insert(s);
                    }
                }
            }
        }
        seen.insert(Subspace::zero(f, 4));
        // 1 + 15 + 35 + 15 + 1 subspaces of GF(2)^4
        assert_eq!(seen.len(), 67);
        for u in &seen {
            let p = u.perp(&g).unwrap();
            assert_eq!(u.dim() + p.dim(), 4);
            assert_eq!(&p.perp(&g).unwrap(), u);
            for v in &seen {
                assert_eq!(u.is_subspace_of(v), v.perp(&g).unwrap().is_subspace_of(&p));
            }
        }
    }
}

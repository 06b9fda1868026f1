//! Exhaustive isomorphism search over the symplectic group, generated by
//! breadth-first closure. Only practical for tiny fields and dimensions.

use std::collections::HashSet;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{standard_pair, Matrix};

pub const DEFAULT_ORACLE_BUDGET: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleResult {
    /// Rows are the images of the basis vectors of the first algebra, in the
    /// coordinates of the second.
    Yes(Matrix),
    No,
    BudgetExceeded { explored: usize },
}

#[derive(Clone, Debug)]
enum Generator {
    /// `x -> x + (x, v) v`
    Transvection(Vec<u32>),
    /// `x_i -> g x_i`, `y_i -> y_i / g` on one block.
    Torus { block: usize, scale: u32, inverse: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureOutcome {
    /// The visitor accepted this element.
    Found(Matrix),
    /// The whole group was generated; carries its order.
    Complete(usize),
    BudgetExceeded(usize),
}

/// Breadth-first enumeration of `Sp(2n, p)` from transvections along `e_i`
/// and `e_i + e_j`, plus diagonal torus elements when `p > 2`.
#[derive(Clone, Debug)]
pub struct SymplecticClosure {
    field: PrimeField,
    n: usize,
    generators: Vec<Generator>,
    bits: u32,
}

impl SymplecticClosure {
    pub fn new(field: PrimeField, n: usize) -> Self {
        let d = 2 * n;
        let mut generators = Vec::new();
        for i in 0..d {
            let mut v = vec![0; d];
            v[i] = 1;
            generators.push(Generator::Transvection(v));
        }
        for i in 0..d {
            for j in i + 1..d {
                let mut v = vec![0; d];
                v[i] = 1;
                v[j] = 1;
                generators.push(Generator::Transvection(v));
            }
        }
        if field.modulus() > 2 {
            let g = field.primitive_root();
            let g_inv = field.inv(g).expect("primitive root is nonzero");
            for block in 0..n {
                generators.push(Generator::Torus { block, scale: g, inverse: g_inv });
                generators.push(Generator::Torus { block, scale: g_inv, inverse: g });
            }
        }
        let bits = 32 - (field.modulus() - 1).leading_zeros();
        SymplecticClosure {
            field,
            n,
            generators,
            bits,
        }
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// The `i`-th generator as a row-image matrix; products of these give
    /// random symplectic changes of basis.
    pub fn generator(&self, i: usize) -> Matrix {
        let d = 2 * self.n;
        let id = Matrix::identity(self.field, d);
        let mut out = vec![0; d * d];
        let flat: Vec<u32> = id.row_vecs().concat();
        self.apply(&flat, &self.generators[i], &mut out);
        let rows: Vec<Vec<u32>> = out.chunks(d).map(<[u32]>::to_vec).collect();
        Matrix::from_rows(self.field, d, &rows).expect("square")
    }

    fn pack(&self, m: &[u32]) -> Box<[u64]> {
        let total = m.len() * self.bits as usize;
        let mut out = vec![0u64; total.div_ceil(64)];
        for (i, &v) in m.iter().enumerate() {
            let pos = i * self.bits as usize;
            out[pos / 64] |= u64::from(v) << (pos % 64);
            if pos % 64 + self.bits as usize > 64 {
                out[pos / 64 + 1] |= u64::from(v) >> (64 - pos % 64);
            }
        }
        out.into_boxed_slice()
    }

    fn unpack(&self, key: &[u64], out: &mut [u32]) {
        let mask = (1u64 << self.bits) - 1;
        for (i, slot) in out.iter_mut().enumerate() {
            let pos = i * self.bits as usize;
            let mut v = key[pos / 64] >> (pos % 64);
            if pos % 64 + self.bits as usize > 64 {
                v |= key[pos / 64 + 1] << (64 - pos % 64);
            }
            *slot = (v & mask) as u32;
        }
    }

    /// `g` followed by the generator, i.e. the generator applied to each row.
    fn apply(&self, g: &[u32], gen: &Generator, out: &mut [u32]) {
        let f = self.field;
        let d = 2 * self.n;
        out.copy_from_slice(g);
        match gen {
            Generator::Transvection(v) => {
                for row in out.chunks_mut(d) {
                    let c = standard_pair(f, row, v);
                    if c != 0 {
                        for (r, &vt) in row.iter_mut().zip(v) {
                            *r = f.mul_add(*r, c, vt);
                        }
                    }
                }
            }
            Generator::Torus { block, scale, inverse } => {
                for row in out.chunks_mut(d) {
                    row[2 * block] = f.mul(row[2 * block], *scale);
                    row[2 * block + 1] = f.mul(row[2 * block + 1], *inverse);
                }
            }
        }
    }

    /// Visits group elements (as row-image matrices) breadth first from the
    /// identity until `visit` accepts one, the group is exhausted, or more
    /// than `budget` distinct elements have been produced.
    pub fn search(&self, budget: usize, mut visit: impl FnMut(&[u32]) -> bool) -> ClosureOutcome {
        let d = 2 * self.n;
        let mut identity = vec![0u32; d * d];
        for i in 0..d {
            identity[i * d + i] = 1;
        }
        let to_matrix = |m: &[u32]| {
            let rows: Vec<Vec<u32>> = m.chunks(d).map(<[u32]>::to_vec).collect();
            Matrix::from_rows(self.field, d, &rows).expect("reduced entries")
        };
        if visit(&identity) {
            return ClosureOutcome::Found(to_matrix(&identity));
        }
        let mut seen: HashSet<Box<[u64]>> = HashSet::new();
        let start = self.pack(&identity);
        seen.insert(start.clone());
        let mut frontier = vec![start];
        let mut g = vec![0u32; d * d];
        let mut h = vec![0u32; d * d];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for key in &frontier {
                self.unpack(key, &mut g);
                for gen in &self.generators {
                    self.apply(&g, gen, &mut h);
                    let packed = self.pack(&h);
                    if seen.contains(&packed) {
                        continue;
                    }
                    if seen.len() >= budget {
                        return ClosureOutcome::BudgetExceeded(seen.len());
                    }
                    seen.insert(packed.clone());
                    if visit(&h) {
                        return ClosureOutcome::Found(to_matrix(&h));
                    }
                    next.push(packed);
                }
            }
            frontier = next;
        }
        ClosureOutcome::Complete(seen.len())
    }

    /// Size of the generated group, if it fits in `budget`.
    pub fn group_order(&self, budget: usize) -> Option<usize> {
        match self.search(budget, |_| false) {
            ClosureOutcome::Complete(k) => Some(k),
            _ => None,
        }
    }
}

/// Whether the rows of `theta` (images of the basis of `a`, coordinates of
/// `b`) give an isomorphism: a standard basis, and `theta(e_i e_j) =
/// theta(e_i) theta(e_j)` for all basis pairs.
pub fn is_isomorphism(a: &Algebra, b: &Algebra, theta: &Matrix) -> bool {
    if !b.is_standard_basis(theta) {
        return false;
    }
    let d = a.dim();
    for i in 0..d {
        for j in 0..d {
            let left = theta.apply_row(a.basis_product(i, j));
            let right = b.mul(theta.row(i), theta.row(j));
            if left != right {
                return false;
            }
        }
    }
    true
}

/// Searches the symplectic group for an isomorphism from `a` to `b`.
pub fn brute_force_isomorphic(a: &Algebra, b: &Algebra, budget: usize) -> Result<OracleResult> {
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
    let d = a.dim();
    let f = a.field();
    let target: Vec<([usize; 3], u32)> = {
        let mut t = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    t.push(([i, j, k], a.form().get(i, j, k)));
                }
            }
        }
        t
    };
    let matches = |m: &[u32]| {
        let row = |i: usize| &m[i * d..(i + 1) * d];
        let mut cached: Option<((usize, usize), Vec<u32>)> = None;
        for &([i, j, k], want) in &target {
            if cached.as_ref().map(|c| c.0) != Some((i, j)) {
                cached = Some(((i, j), b.mul(row(i), row(j))));
            }
            let prod = &cached.as_ref().expect("just set").1;
            if standard_pair(f, prod, row(k)) != want {
                return false;
            }
        }
        true
    };
    let closure = SymplecticClosure::new(f, a.half_dim());
    match closure.search(budget, matches) {
        ClosureOutcome::Found(theta) => {
            if is_isomorphism(a, b, &theta) {
                Ok(OracleResult::Yes(theta))
            } else {
                Err(Error::Inconsistent("oracle witness failed verification".into()))
            }
        }
        ClosureOutcome::Complete(_) => Ok(OracleResult::No),
        ClosureOutcome::BudgetExceeded(explored) => Ok(OracleResult::BudgetExceeded { explored }),
    }
}

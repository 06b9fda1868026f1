use std::collections::HashSet;

use crate::algebra::Algebra;
use crate::linalg::Subspace;

/// Every ideal of dimension `k` of a nilpotent algebra over a small field.
///
/// In a nilpotent algebra each ideal `J` of dimension `k` contains an ideal
/// `J'` of dimension `k - 1` with `J L <= J'`, so `J = J' + Fv` with `v L <= J'`.
/// Growing ideals one dimension at a time this way reaches all of them.
pub fn ideals_of_dimension(a: &Algebra, k: usize) -> Vec<Subspace> {
    let f = a.field();
    let p = f.modulus() as usize;
    let mut level = vec![a.zero_space()];
    for _ in 0..k {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for j in &level {
            let c = a.next_center(j);
            let basis: Vec<&[u32]> = c.basis_vectors().collect();
            let m = basis.len();
            let mut coeffs = vec![0usize; m];
            loop {
                // odometer over all coefficient vectors
                let mut i = 0;
                while i < m {
                    coeffs[i] += 1;
                    if coeffs[i] < p {
                        break;
                    }
                    coeffs[i] = 0;
                    i += 1;
                }
                if i == m {
                    break;
                }
                let mut v = vec![0u32; a.dim()];
                for (b, &cf) in basis.iter().zip(&coeffs) {
                    for t in 0..v.len() {
                        v[t] = f.mul_add(v[t], cf as u32, b[t]);
                    }
                }
                if j.contains(&v) {
                    continue;
                }
                let grown = j
                    .sum(&Subspace::span(f, a.dim(), &[v]).expect("vector length"))
                    .expect("same ambient");
                if seen.insert(grown.clone()) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
}

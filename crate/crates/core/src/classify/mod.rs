//! Classification of nilpotent algebras of dimension at most 8, invariant
//! fingerprints, enumeration of presentations and an exhaustive isomorphism
//! oracle for small fields.

mod census;
mod enumerate;
mod ideals;
mod oracle;

use std::fmt;
use std::str::FromStr;

pub use census::{census, census_with, Census, CensusOptions, CensusRow, Classifier};
pub use enumerate::{enumerate_presentations, PresentationSpace, DEFAULT_ENUMERATION_BUDGET};
pub use ideals::ideals_of_dimension;
pub use oracle::{brute_force_isomorphic, is_isomorphism, ClosureOutcome, OracleResult, SymplecticClosure, DEFAULT_ORACLE_BUDGET};

use crate::algebra::{Algebra, Nilpotency};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::presentation::{build_algebra, extract_presentation, x, y, NilpotentPresentation};

/// Isomorphism class of a nilpotent algebra of dimension at most 8.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    Abelian(usize),
    N6,
    L2,
    L3,
    /// Carries the smallest residue of the cube coset of `r`.
    Lr(u32),
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Abelian(d) => write!(f, "Abelian({d})"),
            ClassLabel::N6 => write!(f, "N6"),
            ClassLabel::L2 => write!(f, "L2"),
            ClassLabel::L3 => write!(f, "L3"),
            ClassLabel::Lr(r) => write!(f, "Lr({r})"),
        }
    }
}

impl FromStr for ClassLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = |prefix: &str| {
            s.strip_prefix(prefix)
                .and_then(|r| r.strip_prefix('('))
                .and_then(|r| r.strip_suffix(')'))
        };
        let bad = || Error::OutOfRange(format!("not a class label: `{s}`"));
        match s {
            "N6" => Ok(ClassLabel::N6),
            "L2" => Ok(ClassLabel::L2),
            "L3" => Ok(ClassLabel::L3),
            _ => {
                if let Some(d) = inner("Abelian") {
                    d.parse().map(ClassLabel::Abelian).map_err(|_| bad())
                } else if let Some(r) = inner("Lr") {
                    r.parse().map(ClassLabel::Lr).map_err(|_| bad())
                } else {
                    Err(bad())
                }
            }
        }
    }
}

/// Basis-independent data; equal for isomorphic algebras.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub lcs_dims: Vec<usize>,
    pub ucs_dims: Vec<usize>,
    pub class: Nilpotency,
    pub dim_center: usize,
    pub center_isotropic: bool,
    pub dim_l2l2: usize,
    pub rank: usize,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        write!(
            f,
            "lcs {}; ucs {}; class {}; center {} {}; L2L2 {}; rank {}",
            join(&self.lcs_dims),
            join(&self.ucs_dims),
            self.class,
            self.dim_center,
            if self.center_isotropic { "isotropic" } else { "non-isotropic" },
            self.dim_l2l2,
            self.rank
        )
    }
}

pub fn fingerprint(a: &Algebra) -> Fingerprint {
    let series = a.series();
    let center = &series.ucs[1.min(series.ucs.len() - 1)];
    let l2 = series.lcs.get(1).cloned().unwrap_or_else(|| a.zero_space());
    let l2l2 = a.subspace_product(&l2, &l2).expect("same ambient");
    Fingerprint {
        lcs_dims: series.lcs_dims(),
        ucs_dims: series.ucs_dims(),
        class: series.class,
        dim_center: center.dim(),
        center_isotropic: center.is_isotropic(a.gram()),
        dim_l2l2: l2l2.dim(),
        rank: series.rank,
    }
}

fn require_nilpotent(a: &Algebra) -> Result<()> {
    match a.nilpotency_class() {
        Nilpotency::Class(_) => Ok(()),
        Nilpotency::NotNilpotent => Err(Error::NotNilpotent),
    }
}

/// Rows of `m` with the listed replacements applied; every replacement is
/// computed from the original rows.
fn replace_rows(m: &Matrix, replacements: &[(usize, Vec<u32>)]) -> Matrix {
    let mut out = m.clone();
    for (i, row) in replacements {
        for (j, &v) in row.iter().enumerate() {
            out.set(*i, j, v);
        }
    }
    out
}

fn lin(f: crate::field::PrimeField, terms: &[(u32, &[u32])]) -> Vec<u32> {
    let d = terms[0].1.len();
    let mut out = vec![0; d];
    for &(c, v) in terms {
        for t in 0..d {
            out[t] = f.mul_add(out[t], c, v[t]);
        }
    }
    out
}

/// A standard basis (rows, old coordinates) in which a nonabelian nilpotent
/// algebra of dimension 6 has the single triple `(y1 y2, y3) = 1`.
pub fn normalize_dim6(a: &Algebra) -> Result<Matrix> {
    if a.dim() != 6 {
        return Err(Error::UnsupportedDimension(a.dim()));
    }
    if a.is_abelian() {
        return Err(Error::Inconsistent("abelian algebra has no dimension-6 normal form".into()));
    }
    let f = a.field();
    let (p, mut basis) = extract_presentation(a)?;
    let one = 1;
    let minus = |v: u32| f.neg(v);
    if p.beta(1, 2, 3) == 0 {
        // x1, y1 -> -y1, x1
        let (x1, y1) = (basis.row(x(1)).to_vec(), basis.row(y(1)).to_vec());
        basis = replace_rows(&basis, &[(x(1), lin(f, &[(minus(one), &y1)])), (y(1), x1)]);
    }
    let b = a.form_in_basis(&basis).get(y(1), y(2), y(3));
    let b_inv = f.inv(b)?;
    let (x3, y3) = (basis.row(x(3)).to_vec(), basis.row(y(3)).to_vec());
    basis = replace_rows(&basis, &[(x(3), lin(f, &[(b, &x3)])), (y(3), lin(f, &[(b_inv, &y3)]))]);
    let alpha = a.form_in_basis(&basis).get(x(1), y(2), y(3));
    let (x1, y1) = (basis.row(x(1)).to_vec(), basis.row(y(1)).to_vec());
    basis = replace_rows(&basis, &[(x(1), lin(f, &[(1, &x1), (minus(alpha), &y1)]))]);
    let mut target = NilpotentPresentation::new(f, 3);
    target.set_beta(1, 2, 3, 1)?;
    if a.form_in_basis(&basis) != target.to_form() {
        return Err(Error::Inconsistent("dimension-6 normalization did not reach (y1y2, y3) = 1".into()));
    }
    Ok(basis)
}

/// For a dimension-8 algebra of maximal class: a standard basis (rows, old
/// coordinates) in which it has presentation `(x2 y3, y4) = r`,
/// `(x1 y2, y4) = 1`, `(y1 y2, y3) = 1`, together with that `r`.
pub fn normalize_maximal_class_dim8(a: &Algebra) -> Result<(u32, Matrix)> {
    if a.dim() != 8 {
        return Err(Error::UnsupportedDimension(a.dim()));
    }
    let f = a.field();
    let (p, mut basis) = extract_presentation(a)?;
    let b = build_algebra(&p);
    // x4' = x1 y2 and x3' = y1 y2 lie in Z = span(x3, x4)
    let u = b.basis_product(x(1), y(2)).to_vec();
    let w = b.basis_product(y(1), y(2)).to_vec();
    let offend = |v: &[u32]| v.iter().enumerate().any(|(i, &c)| c != 0 && i != x(3) && i != x(4));
    if offend(&u) || offend(&w) {
        return Err(Error::Inconsistent("x1y2, y1y2 do not lie in span(x3, x4)".into()));
    }
    // columns: coefficients of x3, x4
    let m = Matrix::from_rows(f, 2, &[vec![w[x(3)], w[x(4)]], vec![u[x(3)], u[x(4)]]])?;
    let minv = m
        .inverse()
        .ok_or_else(|| Error::Inconsistent("x1y2 and y1y2 are dependent".into()))?;
    // new x3 = m00 x3 + m01 x4, new x4 = m10 x3 + m11 x4; the dual pair
    // y3', y4' uses the inverse transpose
    let rows = basis.row_vecs();
    let (ox3, oy3, ox4, oy4) = (&rows[x(3)], &rows[y(3)], &rows[x(4)], &rows[y(4)]);
    basis = replace_rows(
        &basis,
        &[
            (x(3), lin(f, &[(m.get(0, 0), ox3), (m.get(0, 1), ox4)])),
            (x(4), lin(f, &[(m.get(1, 0), ox3), (m.get(1, 1), ox4)])),
            (y(3), lin(f, &[(minv.get(0, 0), oy3), (minv.get(1, 0), oy4)])),
            (y(4), lin(f, &[(minv.get(0, 1), oy3), (minv.get(1, 1), oy4)])),
        ],
    );
    let t = |i: usize| a.ternary(basis.row(i), basis.row(y(3)), basis.row(y(4)));
    let r = t(x(2));
    let r_inv = f.inv(r).map_err(|_| Error::Inconsistent("(x2y3, y4) vanishes".into()))?;
    let (g1, g2, g3) = (t(x(1)), t(y(1)), t(y(2)));
    let ca = f.mul(g1, r_inv);
    let cb = f.mul(g2, r_inv);
    let cc = f.mul(f.sub(f.add(g3, f.mul(ca, g2)), f.mul(cb, g1)), r_inv);
    let rows = basis.row_vecs();
    let (x1, y1, x2, y2) = (&rows[x(1)], &rows[y(1)], &rows[x(2)], &rows[y(2)]);
    basis = replace_rows(
        &basis,
        &[
            (x(1), lin(f, &[(1, x1), (f.neg(ca), x2)])),
            (y(1), lin(f, &[(1, y1), (f.neg(cb), x2)])),
            (y(2), lin(f, &[(1, y2), (ca, y1), (f.neg(cb), x1), (f.neg(cc), x2)])),
        ],
    );
    let mut target = NilpotentPresentation::new(f, 4);
    target.set_alpha(2, 3, 4, r)?;
    target.set_alpha(1, 2, 4, 1)?;
    target.set_beta(1, 2, 3, 1)?;
    if a.form_in_basis(&basis) != target.to_form() {
        return Err(Error::Inconsistent("maximal-class normalization did not reach P(r)".into()));
    }
    Ok((r, basis))
}

/// `((u3 u4) u3, (u3 u4) u4)` for vectors `u3, u4` spanning a complement of
/// `L^2` in a dimension-8 algebra of maximal class; in the normal form this
/// equals `-det^3 r^2`, so its square determines the cube coset of `r`.
pub fn cube_invariant(a: &Algebra) -> Result<u32> {
    if a.dim() != 8 {
        return Err(Error::UnsupportedDimension(a.dim()));
    }
    let l2 = a.times_algebra(&a.full_space());
    if l2.dim() != 6 {
        return Err(Error::Inconsistent(format!("dim L^2 = {} for a maximal-class algebra", l2.dim())));
    }
    let comp = l2.complement_basis();
    let uv = a.mul(&comp[0], &comp[1]);
    Ok(a.pair(&a.mul(&uv, &comp[0]), &a.mul(&uv, &comp[1])))
}

/// Label of a maximal-class dimension-8 algebra read off the cube invariant.
pub fn lr_label_from_invariant(a: &Algebra) -> Result<ClassLabel> {
    let f = a.field();
    let q = cube_invariant(a)?;
    let rep = f.cube_coset_rep(f.mul(q, q))?;
    Ok(ClassLabel::Lr(rep))
}

pub fn classify_small(a: &Algebra) -> Result<ClassLabel> {
    let d = a.dim();
    if d > 8 {
        return Err(Error::UnsupportedDimension(d));
    }
    if a.is_abelian() {
        return Ok(ClassLabel::Abelian(d));
    }
    // the normalizations build an isotropic chain, which already forces
    // nilpotency; only the branches read off the center need the check
    match d {
        6 => {
            normalize_dim6(a)?;
            Ok(ClassLabel::N6)
        }
        8 => {
            let z = a.center();
            match z.dim() {
                5 if !z.is_isotropic(a.gram()) => require_nilpotent(a).map(|_| ClassLabel::L2),
                3 => require_nilpotent(a).map(|_| ClassLabel::L3),
                2 => {
                    let (r, _) = normalize_maximal_class_dim8(a)?;
                    Ok(ClassLabel::Lr(a.field().cube_coset_rep(r)?))
                }
                k => {
                    require_nilpotent(a)?;
                    Err(Error::Inconsistent(format!(
                        "nilpotent algebra of dimension 8 with center of dimension {k}"
                    )))
                }
            }
        }
        // a nonabelian nilpotent algebra of dimension <= 4 cannot exist
        _ => {
            require_nilpotent(a)?;
            Err(Error::Inconsistent(format!("nonabelian nilpotent algebra of dimension {d}")))
        }
    }
}

/// Same labels as [`classify_small`], read off the center dimension and the
/// cube invariant without building normal forms.
pub fn classify_by_invariants(a: &Algebra) -> Result<ClassLabel> {
    let d = a.dim();
    if d > 8 {
        return Err(Error::UnsupportedDimension(d));
    }
    require_nilpotent(a)?;
    if a.is_abelian() {
        return Ok(ClassLabel::Abelian(d));
    }
    match d {
        6 => Ok(ClassLabel::N6),
        8 => {
            let z = a.center();
            match z.dim() {
                5 => Ok(ClassLabel::L2),
                3 => Ok(ClassLabel::L3),
                2 => lr_label_from_invariant(a),
                k => Err(Error::Inconsistent(format!(
                    "nilpotent algebra of dimension 8 with center of dimension {k}"
                ))),
            }
        }
        _ => Err(Error::Inconsistent(format!("nonabelian nilpotent algebra of dimension {d}"))),
    }
}

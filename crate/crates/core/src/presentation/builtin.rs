//! Catalogue of named algebras.

use crate::algebra::{Algebra, TernaryForm};
use crate::error::{Error, Result};
use crate::field::PrimeField;

use super::{maximal_class_family, x, y, NilpotentPresentation, SaaData};

/// Names accepted by [`builtin`]; `<n>` is a half-dimension, `<d>` an even
/// dimension.
pub fn builtin_names() -> &'static [&'static str] {
    &[
        "example12",
        "l5dim2",
        "P1",
        "P2",
        "P3",
        "Pr",
        "maxclass<n>",
        "abelian<d>",
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Builtin {
    pub name: String,
    pub data: SaaData,
}

impl Builtin {
    pub fn algebra(&self) -> Algebra {
        self.data.algebra()
    }
}

fn example12(field: PrimeField) -> TernaryForm {
    let mut form = TernaryForm::new(field, 6);
    for (a, b, c) in [(x(3), y(5), y(6)), (x(2), y(4), y(6)), (x(1), y(4), y(5)), (y(1), y(2), y(3))] {
        form.set(a, b, c, 1).expect("valid triple");
    }
    form
}

fn presentation(field: PrimeField, n: usize, alpha: &[(usize, usize, usize, u32)], beta: &[(usize, usize, usize, u32)]) -> NilpotentPresentation {
    let mut p = NilpotentPresentation::new(field, n);
    for &(i, j, k, v) in alpha {
        p.set_alpha(i, j, k, v).expect("valid triple");
    }
    for &(i, j, k, v) in beta {
        p.set_beta(i, j, k, v).expect("valid triple");
    }
    p
}

fn parse_size(rest: &str) -> Option<usize> {
    let rest = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
    rest.parse().ok()
}

/// Looks up a named algebra over `field`. `r` is required by `Pr` (nonzero)
/// and rejected elsewhere.
pub fn builtin(name: &str, field: PrimeField, r: Option<u64>) -> Result<Builtin> {
    let key = name.to_ascii_lowercase();
    if key != "pr" && r.is_some() {
        return Err(Error::OutOfRange(format!("builtin `{name}` takes no r parameter")));
    }
    let data = match key.as_str() {
        "example12" => SaaData::Form(example12(field)),
        "l5dim2" => {
            SaaData::Presentation(presentation(field, 4, &[(2, 3, 4, 1), (1, 2, 3, 1)], &[(1, 2, 4, 1)]))
        }
        "p1" => SaaData::Presentation(presentation(field, 3, &[], &[(1, 2, 3, 1)])),
        "p2" => SaaData::Presentation(presentation(field, 4, &[], &[(1, 2, 3, 1)])),
        "p3" => SaaData::Presentation(presentation(field, 4, &[(1, 3, 4, 1)], &[(1, 2, 3, 1)])),
        "pr" => {
            let r = r.ok_or_else(|| Error::OutOfRange("Pr needs a parameter r".into()))?;
            let r = field.element(r).value();
            if r == 0 {
                return Err(Error::OutOfRange("Pr needs r != 0".into()));
            }
            SaaData::Presentation(presentation(field, 4, &[(2, 3, 4, r), (1, 2, 4, 1)], &[(1, 2, 3, 1)]))
        }
        _ => {
            if let Some(rest) = key.strip_prefix("maxclass") {
                let n = parse_size(rest).ok_or_else(|| Error::UnknownBuiltin(name.into()))?;
                SaaData::Presentation(maximal_class_family(n, field)?)
            } else if let Some(rest) = key.strip_prefix("abelian") {
                let d = parse_size(rest).ok_or_else(|| Error::UnknownBuiltin(name.into()))?;
                if d % 2 != 0 {
                    return Err(Error::OutOfRange(format!("abelian dimension {d} is odd")));
                }
                SaaData::Presentation(NilpotentPresentation::new(field, d / 2))
            } else {
                return Err(Error::UnknownBuiltin(name.into()));
            }
        }
    };
    Ok(Builtin {
        name: name.to_string(),
        data,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Nilpotency;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn catalogue_dimensions_and_classes() {
        let f = gf(7);
        let get = |name: &str, r: Option<u64>| builtin(name, f, r).unwrap().algebra();
        let e = get("example12", None);
        assert_eq!((e.dim(), e.nilpotency_class()), (12, Nilpotency::Class(4)));
        let p3 = get("P3", None);
        assert_eq!((p3.dim(), p3.center().dim()), (8, 3));
        let p2 = get("P2", None);
        assert_eq!(p2.center().dim(), 5);
        assert!(!p2.center().is_isotropic(p2.gram()));
        assert_eq!(get("P1", None).nilpotency_class(), Nilpotency::Class(2));
        assert_eq!(get("Pr", Some(2)).nilpotency_class(), Nilpotency::Class(5));
        assert_eq!(get("l5dim2", None).nilpotency_class(), Nilpotency::Class(5));
        assert_eq!(get("maxclass5", None).nilpotency_class(), Nilpotency::Class(7));
        assert_eq!(get("maxclass(6)", None).nilpotency_class(), Nilpotency::Class(9));
        assert!(get("abelian8", None).is_abelian());
    }

    #[test]
    fn catalogue_errors() {
        let f = gf(7);
        assert_eq!(builtin("nope", f, None), Err(Error::UnknownBuiltin("nope".into())));
        assert!(builtin("Pr", f, Some(0)).is_err());
        assert!(builtin("Pr", f, Some(14)).is_err());
        assert!(builtin("Pr", f, None).is_err());
        assert!(builtin("P1", f, Some(1)).is_err());
        assert!(builtin("maxclass3", f, None).is_err());
        assert!(builtin("abelian7", f, None).is_err());
    }
}

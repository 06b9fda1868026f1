//! Prime fields GF(p) with exact residue arithmetic.
//!
//! [`PrimeField`] is a copyable handle carrying the modulus. Hot loops in the
//! linear algebra work on raw `u32` residues through the `PrimeField` methods;
//! [`FieldElement`] is the checked value type used at API boundaries.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Checks primality by trial division.
    pub fn new(p: u64) -> Result<Self> {
        if !(2..(1u64 << 31)).contains(&p) {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.p
    }

    pub fn element(self, value: u64) -> FieldElement {
        FieldElement {
            value: (value % self.p as u64) as u32,
            modulus: self.p,
        }
    }

    pub fn from_i64(self, value: i64) -> u32 {
        value.rem_euclid(self.p as i64) as u32
    }

    pub fn zero(self) -> FieldElement {
        self.element(0)
    }

    pub fn one(self) -> FieldElement {
        self.element(1)
    }

    /// All residues `0..p` in increasing order.
    pub fn elements(self) -> impl Iterator<Item = FieldElement> {
        (0..self.p).map(move |v| FieldElement {
            value: v,
            modulus: self.p,
        })
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        let p = self.p as u64;
        (if s >= p { s - p } else { s }) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.p as u64 - b as u64) as u32
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// `acc + a * b`.
    #[inline]
    pub fn mul_add(self, acc: u32, a: u32, b: u32) -> u32 {
        ((acc as u64 + a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(self, a: u32) -> Result<u32> {
        let a = a % self.p;
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let (mut old_r, mut r) = (a as i64, self.p as i64);
        let (mut old_s, mut s) = (1i64, 0i64);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        debug_assert_eq!(old_r, 1);
        Ok(self.from_i64(old_s))
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Number of cosets of the cube subgroup in F*, i.e. gcd(3, p - 1).
    pub fn cube_index(self) -> u32 {
        if (self.p - 1) % 3 == 0 {
            3
        } else {
            1
        }
    }

    /// Whether a nonzero residue is a cube in F*.
    pub fn is_cube(self, a: u32) -> bool {
        let a = a % self.p;
        if a == 0 {
            return false;
        }
        if self.cube_index() == 1 {
            return true;
        }
        self.pow(a, ((self.p - 1) / 3) as u64) == 1
    }

    /// Smallest residue `s` with `r / s` a cube; constant on cosets of (F*)^3.
    pub fn cube_coset_rep(self, r: u32) -> Result<u32> {
        let r = r % self.p;
        if r == 0 {
            return Err(Error::ZeroCubeCoset);
        }
        if self.cube_index() == 1 {
            return Ok(1);
        }
        for s in 1..self.p {
            let q = self.mul(r, self.inv(s)?);
            if self.is_cube(q) {
                return Ok(s);
            }
        }
        unreachable!("1 lies in some coset of every nonzero residue")
    }

    /// Smallest generator of the cyclic group F*.
    pub fn primitive_root(self) -> u32 {
        if self.p == 2 {
            return 1;
        }
        let order = self.p as u64 - 1;
        let mut factors = Vec::new();
        let mut m = order;
        let mut f = 2;
        while f * f <= m {
            if m % f == 0 {
                factors.push(f);
                while m % f == 0 {
                    m /= f;
                }
            }
            f += 1;
        }
        if m > 1 {
            factors.push(m);
        }
        (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, order / q) != 1))
            .expect("F* is cyclic")
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// A canonical residue in `[0, p)` tagged with its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    value: u32,
    modulus: u32,
}

impl FieldElement {
    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn field(self) -> PrimeField {
        PrimeField { p: self.modulus }
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn apply(self, op: ArithOp, rhs: FieldElement) -> Result<FieldElement> {
        if self.modulus != rhs.modulus {
            return Err(Error::MismatchedModuli {
                left: self.modulus,
                right: rhs.modulus,
            });
        }
        let f = self.field();
        let value = match op {
            ArithOp::Add => f.add(self.value, rhs.value),
            ArithOp::Sub => f.sub(self.value, rhs.value),
            ArithOp::Mul => f.mul(self.value, rhs.value),
        };
        Ok(FieldElement {
            value,
            modulus: self.modulus,
        })
    }

    pub fn checked_add(self, rhs: FieldElement) -> Result<FieldElement> {
        self.apply(ArithOp::Add, rhs)
    }

    pub fn checked_sub(self, rhs: FieldElement) -> Result<FieldElement> {
        self.apply(ArithOp::Sub, rhs)
    }

    pub fn checked_mul(self, rhs: FieldElement) -> Result<FieldElement> {
        self.apply(ArithOp::Mul, rhs)
    }

    pub fn inverse(self) -> Result<FieldElement> {
        Ok(FieldElement {
            value: self.field().inv(self.value)?,
            modulus: self.modulus,
        })
    }

    pub fn cube_coset_rep(self) -> Result<FieldElement> {
        Ok(FieldElement {
            value: self.field().cube_coset_rep(self.value)?,
            modulus: self.modulus,
        })
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

// The operator impls panic on mismatched moduli; use `apply` for a checked variant.
macro_rules! impl_op {
    ($trait:ident, $method:ident, $op:expr) => {
        impl $trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.apply($op, rhs).expect("field elements from different fields")
            }
        }
    };
}

impl_op!(Add, add, ArithOp::Add);
impl_op!(Sub, sub, ArithOp::Sub);
impl_op!(Mul, mul, ArithOp::Mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            value: self.field().neg(self.value),
            modulus: self.modulus,
        }
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{int::is_prime, AlgebraError};

/// The prime field GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field {
    p: u32,
}

impl Field {
    /// Prime powers are rejected with a dedicated diagnostic.
    pub fn new(p: u32) -> Result<Self, AlgebraError> {
        if is_prime(p as u64) {
            return Ok(Field { p });
        }
        if p > 1 {
            let base = (2..=p).find(|d| p.is_multiple_of(*d)).unwrap();
            let mut q = p;
            let mut k = 0;
            while q.is_multiple_of(base) {
                q /= base;
                k += 1;
            }
            if q == 1 {
                return Err(AlgebraError::PrimePower { q: p, p: base, k });
            }
        }
        Err(AlgebraError::NotPrime(p))
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn elem(&self, v: i64) -> FieldElem {
        FieldElem { value: v.rem_euclid(self.p as i64) as u32, modulus: self.p }
    }

    pub fn zero(&self) -> FieldElem {
        self.elem(0)
    }

    pub fn one(&self) -> FieldElem {
        self.elem(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.p).map(move |v| FieldElem { value: v, modulus: self.p })
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_element(&self) -> FieldElem {
        let order = (self.p - 1) as u64;
        (1..self.p)
            .map(|v| self.elem(v as i64))
            .find(|a| super::int::multiplicative_order(a.value as u64, self.p as u64) == Some(order))
            .expect("GF(p)^* is cyclic")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElem {
    value: u32,
    modulus: u32,
}

impl FieldElem {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let p = self.modulus as u64;
        let mut base = self.value as u64;
        let mut acc = 1u64 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        FieldElem { value: acc as u32, modulus: self.modulus }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.pow(self.modulus as u64 - 2))
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "mixed field moduli");
    }
}

impl Add for FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: Self) -> Self {
        self.check(&rhs);
        FieldElem { value: (self.value + rhs.value) % self.modulus, modulus: self.modulus }
    }
}

impl Sub for FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: Self) -> Self {
        self.check(&rhs);
        FieldElem { value: (self.value + self.modulus - rhs.value) % self.modulus, modulus: self.modulus }
    }
}

impl Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: Self) -> Self {
        self.check(&rhs);
        FieldElem {
            value: ((self.value as u64 * rhs.value as u64) % self.modulus as u64) as u32,
            modulus: self.modulus,
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> Self {
        FieldElem { value: (self.modulus - self.value) % self.modulus, modulus: self.modulus }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

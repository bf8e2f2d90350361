use std::fmt;

use super::{Field, FieldElem, Matrix};

/// Dense polynomial over GF(p), constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn zero(field: Field) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> Self {
        Self::constant(field.one())
    }

    pub fn x(field: Field) -> Self {
        Poly { field, coeffs: vec![0, 1] }
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::from_elems(vec![c])
    }

    pub fn from_coeffs(field: Field, coeffs: &[i64]) -> Self {
        let mut p = Poly { field, coeffs: coeffs.iter().map(|&c| field.elem(c).value()).collect() };
        p.trim();
        p
    }

    /// `λ^n − 1`.
    pub fn x_pow_minus_one(field: Field, n: usize) -> Self {
        let mut c = vec![0i64; n + 1];
        c[0] = -1;
        c[n] = 1;
        Self::from_coeffs(field, &c)
    }

    pub(crate) fn from_elems(elems: Vec<FieldElem>) -> Self {
        let modulus = elems.first().map(|e| e.modulus()).expect("nonempty coefficient list");
        let field = Field::new(modulus).expect("prime modulus");
        let mut p = Poly { field, coeffs: elems.iter().map(|e| e.value()).collect() };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.field.elem(self.coeffs.get(i).copied().unwrap_or(0) as i64)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    fn zip_with(&self, other: &Poly, op: impl Fn(FieldElem, FieldElem) -> FieldElem) -> Poly {
        assert_eq!(self.field, other.field, "mixed field moduli");
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut p =
            Poly { field: self.field, coeffs: (0..n).map(|i| op(self.coeff(i), other.coeff(i)).value()).collect() };
        p.trim();
        p
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: FieldElem) -> Poly {
        let mut p =
            Poly { field: self.field, coeffs: (0..self.coeffs.len()).map(|i| (self.coeff(i) * c).value()).collect() };
        p.trim();
        p
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.field, other.field, "mixed field moduli");
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let p = self.field.modulus() as u64;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % p;
            }
        }
        let mut r = Poly { field: self.field, coeffs: out.into_iter().map(|c| c as u32).collect() };
        r.trim();
        r
    }

    /// Euclidean division; `None` when dividing by zero.
    pub fn div_rem(&self, divisor: &Poly) -> Option<(Poly, Poly)> {
        let dd = divisor.degree()?;
        let lead_inv = divisor.coeff(dd).inv()?;
        let f = self.field;
        let mut rem: Vec<FieldElem> = (0..self.coeffs.len()).map(|i| self.coeff(i)).collect();
        let qlen = self.coeffs.len().saturating_sub(dd);
        let mut quot = vec![f.zero(); qlen.max(1)];
        for k in (0..qlen).rev() {
            let c = rem[k + dd] * lead_inv;
            quot[k] = c;
            if c.is_zero() {
                continue;
            }
            for j in 0..=dd {
                rem[k + j] = rem[k + j] - c * divisor.coeff(j);
            }
        }
        rem.truncate(dd.max(1));
        if rem.is_empty() {
            rem.push(f.zero());
        }
        Some((Poly::from_elems(quot), Poly::from_elems(rem)))
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Poly) -> bool {
        matches!(other.div_rem(self), Some((_, r)) if r.is_zero())
    }

    pub fn eval(&self, x: FieldElem) -> FieldElem {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, &c| acc * x + self.field.elem(c as i64))
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        assert_eq!(self.field, m.field(), "mixed field moduli");
        let id = Matrix::identity(m.field(), m.dim());
        self.coeffs.iter().rev().fold(Matrix::zero(m.field(), m.dim()), |acc, &c| {
            acc.mul(m).unwrap().add(&id.scale(self.field.elem(c as i64))).unwrap()
        })
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "λ")?,
                (1, c) => write!(f, "{c}λ")?,
                (i, 1) => write!(f, "λ^{i}")?,
                (i, c) => write!(f, "{c}λ^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over GF({})", self, self.field.modulus())
    }
}

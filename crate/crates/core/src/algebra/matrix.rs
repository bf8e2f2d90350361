use std::fmt;

use super::{AlgebraError, Field, FieldElem, Poly};

/// Square matrix over a prime field, row-major.
///
/// Matrices act on row vectors from the right (`v ↦ v·M`), so the product
/// `a.mul(b)` is "apply `a`, then `b`", the same order as permutation
/// products elsewhere in the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    dim: usize,
    entries: Vec<u32>,
}

impl Matrix {
    pub fn identity(field: Field, dim: usize) -> Self {
        let mut m = Self::zero(field, dim);
        for i in 0..dim {
            m.entries[i * dim + i] = 1 % field.modulus();
        }
        m
    }

    pub fn zero(field: Field, dim: usize) -> Self {
        assert!(dim > 0, "matrices have positive dimension");
        Matrix { field, dim, entries: vec![0; dim * dim] }
    }

    /// Entries are reduced mod p, so negative literals are fine.
    pub fn from_rows(field: Field, rows: &[Vec<i64>]) -> Result<Self, AlgebraError> {
        let dim = rows.len();
        if dim == 0 {
            return Err(AlgebraError::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != dim {
                return Err(AlgebraError::RaggedRows { row, len: r.len(), dim });
            }
            entries.extend(r.iter().map(|&v| field.elem(v).value()));
        }
        Ok(Matrix { field, dim, entries })
    }

    pub fn diagonal(field: Field, diag: &[i64]) -> Self {
        let mut m = Self::zero(field, diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.entries[i * m.dim + i] = field.elem(d).value();
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.field.elem(self.entries[i * self.dim + j] as i64)
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        assert_eq!(v.modulus(), self.field.modulus());
        self.entries[i * self.dim + j] = v.value();
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    fn compatible(&self, other: &Matrix) -> Result<(), AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::ModulusMismatch { left: self.field.modulus(), right: other.field.modulus() });
        }
        if self.dim != other.dim {
            return Err(AlgebraError::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, AlgebraError> {
        self.compatible(other)?;
        let n = self.dim;
        let p = self.field.modulus() as u64;
        let mut out = vec![0u32; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k] as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    out[idx] = ((out[idx] as u64 + a * other.entries[k * n + j] as u64) % p) as u32;
                }
            }
        }
        Ok(Matrix { field: self.field, dim: n, entries: out })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, AlgebraError> {
        self.compatible(other)?;
        let p = self.field.modulus();
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| (a + b) % p).collect();
        Ok(Matrix { field: self.field, dim: self.dim, entries })
    }

    pub fn scale(&self, c: FieldElem) -> Matrix {
        let p = self.field.modulus() as u64;
        let entries = self.entries.iter().map(|&a| ((a as u64 * c.value() as u64) % p) as u32).collect();
        Matrix { field: self.field, dim: self.dim, entries }
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.dim;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.entries[i * n + j];
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.dim);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).unwrap();
            }
            base = base.mul(&base).unwrap();
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.field, self.dim)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&a| a == 0)
    }

    pub fn det(&self) -> FieldElem {
        let n = self.dim;
        let mut a: Vec<FieldElem> = (0..n * n).map(|i| self.field.elem(self.entries[i] as i64)).collect();
        let mut det = self.field.one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return self.field.zero();
            };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                }
                det = -det;
            }
            let pv = a[col * n + col];
            det = det * pv;
            let inv = pv.inv().unwrap();
            for r in col + 1..n {
                let f = a[r * n + col] * inv;
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let t = a[col * n + j];
                    a[r * n + j] = a[r * n + j] - f * t;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Matrix, AlgebraError> {
        let n = self.dim;
        let f = self.field;
        let mut a: Vec<FieldElem> = (0..n * n).map(|i| f.elem(self.entries[i] as i64)).collect();
        let mut b: Vec<FieldElem> = (0..n * n).map(|i| if i / n == i % n { f.one() } else { f.zero() }).collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r * n + col].is_zero()).ok_or(AlgebraError::Singular)?;
            for j in 0..n {
                a.swap(piv * n + j, col * n + j);
                b.swap(piv * n + j, col * n + j);
            }
            let inv = a[col * n + col].inv().unwrap();
            for j in 0..n {
                a[col * n + j] = a[col * n + j] * inv;
                b[col * n + j] = b[col * n + j] * inv;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[r * n + col];
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let (ta, tb) = (a[col * n + j], b[col * n + j]);
                    a[r * n + j] = a[r * n + j] - factor * ta;
                    b[r * n + j] = b[r * n + j] - factor * tb;
                }
            }
        }
        Ok(Matrix { field: f, dim: n, entries: b.iter().map(|e| e.value()).collect() })
    }

    /// Row vector times matrix. Components are raw residues in `[0, p)`.
    pub fn apply_row(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.dim);
        let n = self.dim;
        let p = self.field.modulus() as u64;
        let mut out = vec![0u64; n];
        for (k, &vk) in v.iter().enumerate() {
            if vk == 0 {
                continue;
            }
            for (o, &m) in out.iter_mut().zip(&self.entries[k * n..(k + 1) * n]) {
                *o += vk as u64 * m as u64;
            }
        }
        out.into_iter().map(|x| (x % p) as u32).collect()
    }

    /// Characteristic polynomial `det(λI − M)`, via reduction to upper
    /// Hessenberg form (valid over any field).
    pub fn char_poly(&self) -> Poly {
        let n = self.dim;
        let f = self.field;
        let mut h: Vec<FieldElem> = (0..n * n).map(|i| f.elem(self.entries[i] as i64)).collect();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h[i * n + m - 1].is_zero()) else {
                continue;
            };
            if i != m {
                for j in 0..n {
                    h.swap(i * n + j, m * n + j);
                }
                for r in 0..n {
                    h.swap(r * n + i, r * n + m);
                }
            }
            let t_inv = h[m * n + m - 1].inv().unwrap();
            for i in m + 1..n {
                let u = h[i * n + m - 1] * t_inv;
                if u.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = h[m * n + j];
                    h[i * n + j] = h[i * n + j] - u * t;
                }
                for r in 0..n {
                    let t = h[r * n + i];
                    h[r * n + m] = h[r * n + m] + u * t;
                }
            }
        }
        let x = Poly::x(f);
        let mut polys = vec![Poly::one(f)];
        for m in 1..=n {
            let mut pm = x.sub(&Poly::constant(h[(m - 1) * n + m - 1])).mul(&polys[m - 1]);
            let mut t = f.one();
            for i in 1..m {
                t = t * h[(m - i) * n + m - i - 1];
                let c = t * h[(m - i - 1) * n + m - 1];
                pm = pm.sub(&polys[m - i - 1].scale(c));
            }
            polys.push(pm);
        }
        polys.pop().unwrap()
    }

    /// Monic polynomial of least degree annihilating the matrix. Finds the
    /// first linear dependence among `I, M, M², …` by incremental row
    /// reduction of the flattened powers.
    pub fn min_poly(&self) -> Poly {
        let f = self.field;
        let n = self.dim;
        // (reduced vector, pivot column, combination over powers)
        let mut basis: Vec<(Vec<FieldElem>, usize, Vec<FieldElem>)> = Vec::new();
        let mut power = Matrix::identity(f, n);
        for k in 0..=n {
            let mut v: Vec<FieldElem> = power.entries.iter().map(|&e| f.elem(e as i64)).collect();
            let mut comb = vec![f.zero(); k + 1];
            comb[k] = f.one();
            for (row, piv, rc) in &basis {
                let c = v[*piv];
                if c.is_zero() {
                    continue;
                }
                let factor = c * row[*piv].inv().unwrap();
                for (a, b) in v.iter_mut().zip(row) {
                    *a = *a - factor * *b;
                }
                for (a, b) in comb.iter_mut().zip(rc) {
                    *a = *a - factor * *b;
                }
            }
            match v.iter().position(|e| !e.is_zero()) {
                None => return Poly::from_elems(comb),
                Some(piv) => basis.push((v, piv, comb)),
            }
            power = power.mul(self).unwrap();
        }
        unreachable!("Cayley–Hamilton bounds the degree by the dimension")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.field.modulus())?;
        let rows: Vec<&[u32]> = (0..self.dim).map(|i| self.row(i)).collect();
        write!(f, "{:?}", rows)
    }
}

/// Gram matrix of the standard alternating form on GF(p)^{2n}:
/// `J = antidiag(1, …, 1, −1, …, −1)` with `n` ones, so that
/// `B(e_i, e_{2n−1−i}) = 1` for `i < n`.
pub fn symplectic_gram(n: usize, field: Field) -> Matrix {
    assert!(n >= 1);
    let d = 2 * n;
    let mut j = Matrix::zero(field, d);
    for i in 0..d {
        let v = if i < n { field.one() } else { -field.one() };
        j.set(i, d - 1 - i, v);
    }
    j
}

/// `mᵀ·j·m = j`.
pub fn preserves_form(m: &Matrix, j: &Matrix) -> Result<bool, AlgebraError> {
    let lhs = m.transpose().mul(j)?.mul(m)?;
    Ok(&lhs == j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn products() {
        let f = gf(3);
        let i = Matrix::identity(f, 2);
        assert_eq!(i.mul(&i).unwrap(), i);
        let a = Matrix::from_rows(f, &[vec![1, 1], vec![0, 1]]).unwrap();
        let b = Matrix::from_rows(f, &[vec![1, 0], vec![1, 1]]).unwrap();
        let expected = Matrix::from_rows(f, &[vec![2, 1], vec![1, 1]]).unwrap();
        assert_eq!(a.mul(&b).unwrap(), expected);
        assert_eq!(a.mul(&a.inverse().unwrap()).unwrap(), i);
    }

    #[test]
    fn mismatches_are_errors() {
        let a = Matrix::identity(gf(3), 2);
        let b = Matrix::identity(gf(3), 3);
        let c = Matrix::identity(gf(5), 2);
        assert_eq!(a.mul(&b), Err(AlgebraError::DimensionMismatch { left: 2, right: 3 }));
        assert_eq!(a.mul(&c), Err(AlgebraError::ModulusMismatch { left: 3, right: 5 }));
        assert!(preserves_form(&a, &b).is_err());
        assert_eq!(
            Matrix::from_rows(gf(3), &[vec![1, 0], vec![1]]),
            Err(AlgebraError::RaggedRows { row: 1, len: 1, dim: 2 })
        );
    }

    #[test]
    fn singular_has_no_inverse() {
        let a = Matrix::from_rows(gf(5), &[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(a.det(), gf(5).zero());
        assert_eq!(a.inverse(), Err(AlgebraError::Singular));
    }

    #[test]
    fn gram_matrix() {
        let f = gf(3);
        let j = symplectic_gram(1, f);
        assert_eq!(j, Matrix::from_rows(f, &[vec![0, 1], vec![2, 0]]).unwrap());
        for n in 1..=3 {
            let j = symplectic_gram(n, f);
            assert_eq!(j.transpose(), j.scale(-f.one()));
        }
        // antidiagonal with entries ±1: det = ±1 ≠ 0
        assert!(!symplectic_gram(2, f).det().is_zero());
    }

    #[test]
    fn form_membership() {
        let f = gf(3);
        let j2 = symplectic_gram(1, f);
        let j4 = symplectic_gram(2, f);
        assert!(preserves_form(&Matrix::identity(f, 4), &j4).unwrap());
        // diag(2,2): mᵀJm = 4J = J over GF(3)
        assert!(preserves_form(&Matrix::diagonal(f, &[2, 2]), &j2).unwrap());
        let upper =
            Matrix::from_rows(f, &[vec![1, 1, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]).unwrap();
        assert!(!preserves_form(&upper, &j4).unwrap());
    }

    #[test]
    fn min_poly_basic() {
        let f = gf(3);
        assert_eq!(Matrix::identity(f, 3).min_poly().to_string(), "λ + 2");
        assert_eq!(Matrix::zero(f, 3).min_poly().to_string(), "λ");
        // Jordan block J_2(1): (λ − 1)²
        let j = Matrix::from_rows(f, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(j.min_poly().to_string(), "λ^2 + λ + 1");
    }

    /// Oracle: evaluate det(cI − M) directly at every c in GF(p) and compare
    /// with the Hessenberg characteristic polynomial; p > dim makes the
    /// values determine the polynomial.
    #[test]
    fn char_poly_matches_pointwise_determinants() {
        let f = gf(11);
        let m =
            Matrix::from_rows(f, &[vec![3, 1, 4, 1], vec![5, 9, 2, 6], vec![5, 3, 5, 8], vec![9, 7, 9, 3]]).unwrap();
        let cp = m.char_poly();
        assert_eq!(cp.degree(), Some(4));
        for c in f.elements() {
            let shifted = Matrix::identity(f, 4).scale(c).add(&m.scale(-f.one())).unwrap();
            assert_eq!(cp.eval(c), shifted.det());
        }
    }
}

//! Affine Frobenius groups `F ⋊ C` of order `p·n` and faithful matrix
//! representations of them in characteristic coprime to `p`.

use super::ConstructError;
use crate::algebra::{is_prime, multiplicative_order, Field, Matrix, Poly};
use crate::perm::{Perm, PermGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FrobeniusEmbedding {
    /// `GF(r^n)` as an `n`-dimensional `GF(r)`-space: the kernel acts by
    /// multiplication by a root of unity of order `p`, the complement by the
    /// field automorphism `x ↦ x^r`. Needs `ord_p(r) = n`.
    Singer,
    /// Permutation matrices of the action on the `p` points of `GF(p)`.
    PermutationModule,
}

#[derive(Debug, Clone)]
pub struct FrobeniusGroup {
    pub p: u64,
    pub n: u64,
    /// `x ↦ ax + b` on the points of GF(p).
    pub group: PermGroup,
    /// `x ↦ x + 1`
    pub kernel_gen: Perm,
    /// `x ↦ ωx`, `ω` of order `n`
    pub complement_gen: Perm,
    pub embedding: FrobeniusEmbedding,
    pub matrix_field: Field,
    pub kernel_matrix: Matrix,
    pub complement_matrix: Matrix,
}

impl FrobeniusGroup {
    /// Permutation matrices over GF(r) of the kernel and complement generators.
    pub fn permutation_module(&self, r: u32) -> Result<(Matrix, Matrix), ConstructError> {
        let field = Field::new(r)?;
        Ok((perm_matrix(field, &self.kernel_gen), perm_matrix(field, &self.complement_gen)))
    }
}

/// Row-vector convention: `e_i·P = e_{π(i)}`.
fn perm_matrix(field: Field, x: &Perm) -> Matrix {
    let d = x.degree();
    let mut m = Matrix::zero(field, d);
    for i in 0..d {
        m.set(i, x.apply(i), field.one());
    }
    m
}

/// Monic degree-`n` factor of `1 + λ + … + λ^{p−1}` over GF(r), first in
/// lexicographic order of coefficients.
fn cyclotomic_factor(p: u64, n: usize, field: Field) -> Option<Poly> {
    let phi = Poly::from_coeffs(field, &vec![1i64; p as usize]);
    let r = field.modulus() as usize;
    (0..r.pow(n as u32)).find_map(|code| {
        let mut c: Vec<i64> = (0..n).map(|k| ((code / r.pow(k as u32)) % r) as i64).collect();
        c.push(1);
        let f = Poly::from_coeffs(field, &c);
        f.divides(&phi).then_some(f)
    })
}

/// Coordinates of `λ^e mod f` in the basis `1, λ, …, λ^{n−1}`.
fn power_mod(f: &Poly, e: usize) -> Vec<i64> {
    let field = f.field();
    let mut c = vec![0i64; e + 1];
    c[e] = 1;
    let (_, r) = Poly::from_coeffs(field, &c).div_rem(f).unwrap();
    (0..f.degree().unwrap()).map(|k| r.coeff(k).value() as i64).collect()
}

pub fn frobenius_fc(p: u64, n: u64) -> Result<FrobeniusGroup, ConstructError> {
    if !is_prime(p) {
        return Err(ConstructError::InvalidArgument(format!("{p} is not prime")));
    }
    if n <= 1 || !(p - 1).is_multiple_of(n) {
        return Err(ConstructError::InvalidArgument(format!(
            "complement order {n} must exceed 1 and divide {}",
            p - 1
        )));
    }
    let fp = Field::new(p as u32)?;
    let omega = fp.primitive_element().pow((p - 1) / n);
    let kernel_gen = Perm::from_images((0..p).map(|x| ((x + 1) % p) as usize).collect())?;
    let complement_gen = Perm::from_images((0..p).map(|x| (fp.elem(x as i64) * omega).value() as usize).collect())?;
    let group = PermGroup::new(p as usize, vec![kernel_gen.clone(), complement_gen.clone()])?;
    debug_assert_eq!(group.order(), p * n);

    let singer_field = (2..64u64).filter(|&r| r != p && is_prime(r)).find(|&r| multiplicative_order(r, p) == Some(n));
    let (embedding, matrix_field, kernel_matrix, complement_matrix) = match singer_field {
        Some(r) => {
            let field = Field::new(r as u32)?;
            let f = cyclotomic_factor(p, n as usize, field).expect("Φ_p splits into degree-n factors");
            let dim = n as usize;
            let rows = |e: usize| -> Vec<Vec<i64>> { (0..dim).map(|i| power_mod(&f, e * i)).collect() };
            // multiplication by λ: row i = λ^{i+1}
            let mult: Vec<Vec<i64>> = (0..dim).map(|i| power_mod(&f, i + 1)).collect();
            let a = Matrix::from_rows(field, &mult)?;
            let frob = Matrix::from_rows(field, &rows(r as usize))?;
            (FrobeniusEmbedding::Singer, field, a, frob)
        }
        None => {
            let r = (2..).find(|&r| r != p && is_prime(r)).unwrap();
            let field = Field::new(r as u32)?;
            (
                FrobeniusEmbedding::PermutationModule,
                field,
                perm_matrix(field, &kernel_gen),
                perm_matrix(field, &complement_gen),
            )
        }
    };
    Ok(FrobeniusGroup {
        p,
        n,
        group,
        kernel_gen,
        complement_gen,
        embedding,
        matrix_field,
        kernel_matrix,
        complement_matrix,
    })
}

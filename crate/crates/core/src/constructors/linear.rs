//! Matrix groups over GF(p) turned into permutation groups.

use super::ConstructError;
use crate::algebra::{gcd, preserves_form, symplectic_gram, Field, Matrix};
use crate::perm::{Perm, PermError, PermGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixAction {
    /// On the `p^d − 1` nonzero row vectors; faithful.
    Vectors,
    /// On the `(p^d − 1)/(p − 1)` one-dimensional subspaces; the kernel is
    /// the subgroup of scalar matrices.
    Projective,
}

/// A permutation group obtained from matrix generators, with the point
/// labelling. Points are listed in lexicographic order of their vectors;
/// projective points are represented by the vector whose first nonzero
/// coordinate is 1.
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    group: PermGroup,
    field: Field,
    dim: usize,
    action: MatrixAction,
    matrices: Vec<Matrix>,
    points: Vec<Vec<u32>>,
    /// vector code → point index (`u32::MAX` when not a point)
    code_to_point: Vec<u32>,
}

fn encode(v: &[u32], p: u32) -> usize {
    v.iter().fold(0usize, |acc, &c| acc * p as usize + c as usize)
}

fn decode(mut code: usize, p: u32, dim: usize) -> Vec<u32> {
    let mut v = vec![0u32; dim];
    for k in (0..dim).rev() {
        v[k] = (code % p as usize) as u32;
        code /= p as usize;
    }
    v
}

fn normalize(v: &mut [u32], field: Field) {
    if let Some(&lead) = v.iter().find(|&&c| c != 0) {
        let inv = field.elem(lead as i64).inv().unwrap();
        for c in v.iter_mut() {
            *c = (field.elem(*c as i64) * inv).value();
        }
    }
}

impl MatrixGroup {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn into_group(self) -> PermGroup {
        self.group
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> MatrixAction {
        self.action
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn point(&self, i: usize) -> &[u32] {
        &self.points[i]
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn point_index(&self, v: &[u32]) -> Option<usize> {
        let mut w = v.to_vec();
        if self.action == MatrixAction::Projective {
            normalize(&mut w, self.field);
        }
        match self.code_to_point.get(encode(&w, self.field.modulus())) {
            Some(&i) if i != u32::MAX => Some(i as usize),
            _ => None,
        }
    }

    pub fn perm_of(&self, m: &Matrix) -> Result<Perm, ConstructError> {
        if m.field() != self.field || m.dim() != self.dim {
            return Err(ConstructError::InvalidArgument("matrix from a different GL".into()));
        }
        if m.det().is_zero() {
            return Err(ConstructError::NonInvertibleGenerator { index: 0 });
        }
        let images = self
            .points
            .iter()
            .map(|v| self.point_index(&m.apply_row(v)).expect("image of a point is a point"))
            .collect();
        Ok(Perm::from_images(images)?)
    }

    /// Recovers the matrix of a vector-action permutation from the images of
    /// the standard basis. `None` for projective actions.
    pub fn matrix_of(&self, x: &Perm) -> Option<Matrix> {
        if self.action != MatrixAction::Vectors {
            return None;
        }
        let rows: Vec<Vec<i64>> = (0..self.dim)
            .map(|k| {
                let mut e = vec![0u32; self.dim];
                e[k] = 1;
                let img = x.apply(self.point_index(&e).unwrap());
                self.points[img].iter().map(|&c| c as i64).collect()
            })
            .collect();
        Matrix::from_rows(self.field, &rows).ok()
    }
}

pub fn matrix_group(gens: &[Matrix], action: MatrixAction, cap: u64) -> Result<MatrixGroup, ConstructError> {
    let first =
        gens.first().ok_or_else(|| ConstructError::InvalidArgument("at least one generator is required".into()))?;
    let (field, dim) = (first.field(), first.dim());
    for (index, m) in gens.iter().enumerate() {
        if m.field() != field || m.dim() != dim {
            return Err(ConstructError::InvalidArgument(format!("generator {index} has a different shape")));
        }
        if m.det().is_zero() {
            return Err(ConstructError::NonInvertibleGenerator { index });
        }
    }
    let p = field.modulus();
    let total = (p as u64).checked_pow(dim as u32).unwrap_or(u64::MAX);
    let domain = match action {
        MatrixAction::Vectors => total - 1,
        MatrixAction::Projective => (total - 1) / (p as u64 - 1),
    };
    if domain > cap {
        return Err(PermError::CapExceeded { what: "matrix action domain", needed: domain, cap }.into());
    }
    let mut points = Vec::with_capacity(domain as usize);
    let mut code_to_point = vec![u32::MAX; total as usize];
    for (code, slot) in code_to_point.iter_mut().enumerate().skip(1) {
        let v = decode(code, p, dim);
        if action == MatrixAction::Projective && v.iter().find(|&&c| c != 0) != Some(&1) {
            continue;
        }
        *slot = points.len() as u32;
        points.push(v);
    }
    let mut mg = MatrixGroup {
        group: PermGroup::trivial(points.len()),
        field,
        dim,
        action,
        matrices: gens.to_vec(),
        points,
        code_to_point,
    };
    let perms = gens.iter().map(|m| mg.perm_of(m)).collect::<Result<Vec<_>, _>>()?;
    mg.group = PermGroup::new(mg.points.len(), perms)?;
    Ok(mg)
}

fn check_order(mg: &MatrixGroup, family: String, expected: u64) -> Result<(), ConstructError> {
    let found = mg.group().order();
    if found != expected {
        return Err(ConstructError::OrderMismatch { family, expected, found });
    }
    Ok(())
}

fn elementary(field: Field, n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::identity(field, n);
    m.set(i, j, field.one());
    m
}

fn sl_generators(field: Field, n: usize) -> Vec<Matrix> {
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                gens.push(elementary(field, n, i, j));
            }
        }
    }
    gens
}

fn gl_order(n: u32, q: u64) -> u64 {
    (0..n).map(|i| q.pow(n) - q.pow(i)).product()
}

/// `SL_n(p)`, generated by the elementary transvections `I + E_ij`.
pub fn special_linear(n: usize, p: u32, action: MatrixAction, cap: u64) -> Result<MatrixGroup, ConstructError> {
    if n < 2 {
        return Err(ConstructError::InvalidArgument("SL_n needs n >= 2".into()));
    }
    let field = Field::new(p)?;
    let mg = matrix_group(&sl_generators(field, n), action, cap)?;
    let q = p as u64;
    let sl = gl_order(n as u32, q) / (q - 1);
    let expected = match action {
        MatrixAction::Vectors => sl,
        MatrixAction::Projective => sl / gcd(n as u64, q - 1),
    };
    check_order(&mg, format!("SL_{n}({p})"), expected)?;
    Ok(mg)
}

/// `GL_n(p)`: `SL_n(p)` together with `diag(ω, 1, …, 1)` for a primitive `ω`.
pub fn general_linear(n: usize, p: u32, action: MatrixAction, cap: u64) -> Result<MatrixGroup, ConstructError> {
    if n < 1 {
        return Err(ConstructError::InvalidArgument("GL_n needs n >= 1".into()));
    }
    let field = Field::new(p)?;
    let mut gens = sl_generators(field, n);
    let mut d = Matrix::identity(field, n);
    d.set(0, 0, field.primitive_element());
    gens.push(d);
    let mg = matrix_group(&gens, action, cap)?;
    let q = p as u64;
    let gl = gl_order(n as u32, q);
    let expected = match action {
        MatrixAction::Vectors => gl,
        MatrixAction::Projective => gl / (q - 1),
    };
    check_order(&mg, format!("GL_{n}({p})"), expected)?;
    Ok(mg)
}

fn check_psl2_q(q: u32) -> Result<(), ConstructError> {
    if q.is_multiple_of(2) || q > 61 {
        return Err(ConstructError::InvalidArgument(format!("PSL2({q}): q must be an odd prime <= 61")));
    }
    Field::new(q)?;
    Ok(())
}

/// `PSL_2(q)` on the `q + 1` points of the projective line.
pub fn psl2(q: u32) -> Result<MatrixGroup, ConstructError> {
    check_psl2_q(q)?;
    special_linear(2, q, MatrixAction::Projective, u64::MAX)
}

/// `PGL_2(q)` on the `q + 1` points of the projective line.
pub fn pgl2(q: u32) -> Result<MatrixGroup, ConstructError> {
    check_psl2_q(q)?;
    general_linear(2, q, MatrixAction::Projective, u64::MAX)
}

/// `|Sp_{2n}(q)| = q^{n²}·∏_{i=1}^{n} (q^{2i} − 1)`.
pub fn sp_order(n: u32, q: u64) -> u64 {
    q.pow(n * n) * (1..=n).map(|i| q.pow(2 * i) - 1).product::<u64>()
}

/// Symplectic transvection `x ↦ x + B(x, v)·v` for the form
/// `B(x, y) = x·J·yᵀ`, as the matrix `I + (J·vᵀ)·v`.
fn transvection(j: &Matrix, v: &[i64]) -> Matrix {
    let field = j.field();
    let d = j.dim();
    let jv: Vec<_> = (0..d).map(|r| (0..d).fold(field.zero(), |acc, c| acc + j.get(r, c) * field.elem(v[c]))).collect();
    let mut m = Matrix::identity(field, d);
    for (r, jvr) in jv.iter().enumerate() {
        for (c, &vc) in v.iter().enumerate() {
            let cur = m.get(r, c);
            m.set(r, c, cur + *jvr * field.elem(vc));
        }
    }
    m
}

/// Transvections along `e_i` and `e_i + e_j` (`i < j`).
fn sp_generators(n: usize, field: Field) -> Result<Vec<Matrix>, ConstructError> {
    let j = symplectic_gram(n, field);
    let d = 2 * n;
    let mut gens = Vec::new();
    for a in 0..d {
        let mut v = vec![0i64; d];
        v[a] = 1;
        gens.push(transvection(&j, &v));
        for b in a + 1..d {
            let mut w = v.clone();
            w[b] = 1;
            gens.push(transvection(&j, &w));
        }
    }
    for (index, m) in gens.iter().enumerate() {
        if !preserves_form(m, &j)? {
            return Err(ConstructError::FormViolation { index });
        }
    }
    Ok(gens)
}

fn sp_checked(n: usize, p: u32, action: MatrixAction, cap: u64) -> Result<MatrixGroup, ConstructError> {
    if n < 1 || p == 2 {
        return Err(ConstructError::InvalidArgument(format!("Sp_{}({p}) needs n >= 1 and p odd", 2 * n)));
    }
    let field = Field::new(p)?;
    let mg = matrix_group(&sp_generators(n, field)?, action, cap)?;
    let q = p as u64;
    let full = sp_order(n as u32, q);
    let (name, expected) = match action {
        MatrixAction::Vectors => (format!("Sp_{}({p})", 2 * n), full),
        MatrixAction::Projective => (format!("PSp_{}({p})", 2 * n), full / gcd(2, q - 1)),
    };
    check_order(&mg, name, expected)?;
    Ok(mg)
}

/// `Sp_{2n}(p)` on nonzero vectors.
pub fn sp_group(n: usize, p: u32, cap: u64) -> Result<MatrixGroup, ConstructError> {
    sp_checked(n, p, MatrixAction::Vectors, cap)
}

/// `PSp_{2n}(p)` on projective points.
pub fn psp_group(n: usize, p: u32, cap: u64) -> Result<MatrixGroup, ConstructError> {
    sp_checked(n, p, MatrixAction::Projective, cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_orders() {
        let sl = special_linear(2, 5, MatrixAction::Vectors, 1000).unwrap();
        assert_eq!(sl.group().degree(), 24);
        assert_eq!(sl.group().order(), 120);
        let psl = special_linear(2, 5, MatrixAction::Projective, 1000).unwrap();
        assert_eq!(psl.group().degree(), 6);
        assert_eq!(psl.group().order(), 60);
        let gl = general_linear(2, 3, MatrixAction::Vectors, 1000).unwrap();
        assert_eq!(gl.group().degree(), 8);
        assert_eq!(gl.group().order(), 48);
    }

    #[test]
    fn psl2_family() {
        assert_eq!(psl2(5).unwrap().group().order(), 60);
        assert_eq!(psl2(13).unwrap().group().order(), 1092);
        assert_eq!(psl2(13).unwrap().group().degree(), 14);
        let pgl = pgl2(5).unwrap();
        assert_eq!(pgl.group().order() / psl2(5).unwrap().group().order(), 2);
        assert!(psl2(9).is_err());
        assert!(psl2(67).is_err());
        assert!(psl2(2).is_err());
    }

    #[test]
    fn symplectic_orders() {
        assert_eq!(sp_group(1, 3, 1000).unwrap().group().order(), 24);
        let psp = psp_group(2, 3, 1000).unwrap();
        assert_eq!(psp.group().degree(), 40);
        assert_eq!(psp.group().order(), 25920);
        assert!(sp_group(2, 3, 50).is_err());
    }

    #[test]
    fn matrices_round_trip_through_vector_action() {
        let sp = sp_group(2, 3, 1000).unwrap();
        for (m, g) in sp.matrices().iter().zip(sp.group().gens()) {
            assert_eq!(sp.matrix_of(g).as_ref(), Some(m));
        }
    }

    #[test]
    fn singular_generator_rejected() {
        let f = Field::new(3).unwrap();
        let z = Matrix::from_rows(f, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(
            matrix_group(&[Matrix::identity(f, 2), z], MatrixAction::Vectors, 100).unwrap_err(),
            ConstructError::NonInvertibleGenerator { index: 1 }
        );
    }

    #[test]
    fn projective_kernel_is_scalars() {
        // SL2(5): scalars ±I, so |vector action| / |projective action| = 2
        let v = special_linear(2, 5, MatrixAction::Vectors, 1000).unwrap();
        let p = special_linear(2, 5, MatrixAction::Projective, 1000).unwrap();
        assert_eq!(v.group().order() / p.group().order(), 2);
        // GL2(3): scalars {I, 2I}
        let v = general_linear(2, 3, MatrixAction::Vectors, 1000).unwrap();
        let p = general_linear(2, 3, MatrixAction::Projective, 1000).unwrap();
        assert_eq!(v.group().order() / p.group().order(), 2);
    }
}

use super::ConstructError;
use crate::perm::{Perm, PermError, PermGroup};

/// Restriction of `x` to the points `offset..offset+len`, which `x` must
/// map onto themselves.
fn restrict(x: &Perm, offset: usize, len: usize) -> Result<Perm, ConstructError> {
    let images: Vec<usize> = (offset..offset + len).map(|p| x.apply(p)).collect();
    if images.iter().any(|&q| q < offset || q >= offset + len) {
        return Err(ConstructError::InvalidArgument(format!(
            "{x} does not stabilize the block {offset}..{}",
            offset + len
        )));
    }
    Ok(Perm::from_images(images.into_iter().map(|q| q - offset).collect())?)
}

/// Factors acting on consecutive disjoint point ranges.
#[derive(Debug, Clone)]
pub struct DirectProduct {
    group: PermGroup,
    factors: Vec<PermGroup>,
    offsets: Vec<usize>,
}

pub fn direct_product(a: &PermGroup, b: &PermGroup) -> DirectProduct {
    direct_product_of(&[a.clone(), b.clone()])
}

pub fn direct_product_of(factors: &[PermGroup]) -> DirectProduct {
    let mut offsets = Vec::with_capacity(factors.len());
    let mut degree = 0;
    for f in factors {
        offsets.push(degree);
        degree += f.degree();
    }
    let mut dp = DirectProduct { group: PermGroup::trivial(degree), factors: factors.to_vec(), offsets };
    let gens =
        (0..factors.len()).flat_map(|i| factors[i].gens().iter().map(|g| dp.embed(i, g)).collect::<Vec<_>>()).collect();
    dp.group = PermGroup::new(degree, gens).unwrap();
    dp
}

impl DirectProduct {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn factor(&self, i: usize) -> &PermGroup {
        &self.factors[i]
    }

    /// The copy `L_i` of factor `i` inside the product.
    pub fn embedded_factor(&self, i: usize) -> PermGroup {
        let gens = self.factors[i].gens().iter().map(|g| self.embed(i, g)).collect();
        PermGroup::new(self.group.degree(), gens).unwrap()
    }

    pub fn embed(&self, i: usize, x: &Perm) -> Perm {
        let d = self.group.degree();
        let off = self.offsets[i];
        let images =
            (0..d).map(|p| if p >= off && p < off + x.degree() { off + x.apply(p - off) } else { p }).collect();
        Perm::from_images(images).unwrap()
    }

    /// Coordinate projection `π_i` of a product element.
    pub fn project(&self, i: usize, x: &Perm) -> Result<Perm, ConstructError> {
        restrict(x, self.offsets[i], self.factors[i].degree())
    }

    pub fn project_group(&self, i: usize, h: &PermGroup) -> Result<PermGroup, ConstructError> {
        let gens = h.gens().iter().map(|x| self.project(i, x)).collect::<Result<Vec<_>, _>>()?;
        Ok(PermGroup::new(self.factors[i].degree(), gens)?)
    }
}

/// `A ≀ B` in its imprimitive action on `n·d` points, point `(i, j)` being
/// `i·d + j`. A base element `(x_1, …, x_n)` acts by `x_i` on block `i`;
/// a top element `π` sends block `i` to block `iπ`, so conjugating a base
/// element by `π` gives `(x_{1π⁻¹}, …, x_{nπ⁻¹})`.
#[derive(Debug, Clone)]
pub struct WreathProduct {
    group: PermGroup,
    inner: PermGroup,
    top_action: PermGroup,
    base: PermGroup,
    top: PermGroup,
}

pub fn wreath_product(a: &PermGroup, top: &PermGroup) -> Result<WreathProduct, ConstructError> {
    let n = top.degree();
    if n == 0 {
        return Err(ConstructError::InvalidArgument("top group must act on at least one point".into()));
    }
    let mut w = WreathProduct {
        group: PermGroup::trivial(1),
        inner: a.clone(),
        top_action: top.clone(),
        base: PermGroup::trivial(1),
        top: PermGroup::trivial(1),
    };
    let degree = n * a.degree();
    let base_gens: Vec<Perm> =
        (0..n).flat_map(|i| a.gens().iter().map(|g| w.embed_at(i, g)).collect::<Vec<_>>()).collect();
    let top_gens: Vec<Perm> = top.gens().iter().map(|p| w.embed_top(p)).collect();
    w.base = PermGroup::new(degree, base_gens.clone())?;
    w.top = PermGroup::new(degree, top_gens.clone())?;
    w.group = PermGroup::new(degree, base_gens.into_iter().chain(top_gens).collect())?;
    Ok(w)
}

impl WreathProduct {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// The base `V = L_1 × … × L_n`.
    pub fn base(&self) -> &PermGroup {
        &self.base
    }

    /// The complement permuting blocks.
    pub fn top(&self) -> &PermGroup {
        &self.top
    }

    pub fn inner(&self) -> &PermGroup {
        &self.inner
    }

    pub fn top_action(&self) -> &PermGroup {
        &self.top_action
    }

    pub fn block_count(&self) -> usize {
        self.top_action.degree()
    }

    pub fn block_size(&self) -> usize {
        self.inner.degree()
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let d = self.block_size();
        (0..self.block_count()).map(|i| (i * d..(i + 1) * d).collect()).collect()
    }

    /// The base factor `L_i`.
    pub fn factor(&self, i: usize) -> PermGroup {
        let gens = self.inner.gens().iter().map(|g| self.embed_at(i, g)).collect();
        PermGroup::new(self.group.degree(), gens).unwrap()
    }

    /// `{(x, …, x)}`, a copy of `A` inside the base.
    pub fn diagonal(&self) -> PermGroup {
        let n = self.block_count();
        let gens = self.inner.gens().iter().map(|g| self.embed_base(&vec![g.clone(); n]).unwrap()).collect();
        PermGroup::new(self.group.degree(), gens).unwrap()
    }

    fn embed_at(&self, i: usize, x: &Perm) -> Perm {
        let d = self.block_size();
        let mut images: Vec<usize> = (0..self.block_count() * d).collect();
        for j in 0..d {
            images[i * d + j] = i * d + x.apply(j);
        }
        Perm::from_images(images).unwrap()
    }

    pub fn embed_base(&self, coords: &[Perm]) -> Result<Perm, ConstructError> {
        let (n, d) = (self.block_count(), self.block_size());
        if coords.len() != n {
            return Err(ConstructError::InvalidArgument(format!("expected {n} coordinates")));
        }
        let mut images = Vec::with_capacity(n * d);
        for (i, x) in coords.iter().enumerate() {
            if x.degree() != d {
                return Err(PermError::DegreeMismatch { expected: d, found: x.degree() }.into());
            }
            images.extend((0..d).map(|j| i * d + x.apply(j)));
        }
        Ok(Perm::from_images(images)?)
    }

    pub fn embed_top(&self, pi: &Perm) -> Perm {
        let d = self.block_size();
        let images = (0..self.block_count() * d).map(|p| pi.apply(p / d) * d + p % d).collect();
        Perm::from_images(images).unwrap()
    }

    /// Coordinate `π_i`: the action on block `i` of an element fixing it setwise.
    pub fn coordinate(&self, i: usize, x: &Perm) -> Result<Perm, ConstructError> {
        restrict(x, i * self.block_size(), self.block_size())
    }

    pub fn project_group(&self, i: usize, h: &PermGroup) -> Result<PermGroup, ConstructError> {
        let gens = h.gens().iter().map(|x| self.coordinate(i, x)).collect::<Result<Vec<_>, _>>()?;
        Ok(PermGroup::new(self.block_size(), gens)?)
    }

    /// Induced permutation of the blocks.
    pub fn block_image(&self, x: &Perm) -> Perm {
        let d = self.block_size();
        Perm::from_images((0..self.block_count()).map(|i| x.apply(i * d) / d).collect()).unwrap()
    }
}

use super::simplex::SimplexRef;
use super::sset::{Cell, FiniteSimplicialSet};
use crate::error::{Error, Result};

/// A set of nondegenerate cells of an ambient simplicial set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mask {
    bits: Vec<Vec<bool>>,
}

impl Mask {
    pub fn empty(t: &FiniteSimplicialSet) -> Self {
        Mask { bits: t.counts().iter().map(|&k| vec![false; k]).collect() }
    }

    pub fn full(t: &FiniteSimplicialSet) -> Self {
        Mask { bits: t.counts().iter().map(|&k| vec![true; k]).collect() }
    }

    pub fn from_fn(t: &FiniteSimplicialSet, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let bits = t.counts().iter().enumerate().map(|(n, &k)| (0..k).map(|c| f(n, c)).collect()).collect();
        Mask { bits }
    }

    pub fn contains(&self, n: usize, c: usize) -> bool {
        self.bits.get(n).and_then(|v| v.get(c)).copied().unwrap_or(false)
    }

    /// A possibly degenerate simplex lies in the subset iff its base does.
    pub fn contains_ref(&self, r: &SimplexRef) -> bool {
        self.contains(r.base_dim(), r.base)
    }

    pub fn insert(&mut self, n: usize, c: usize) {
        self.bits[n][c] = true;
    }

    pub fn remove(&mut self, n: usize, c: usize) {
        self.bits[n][c] = false;
    }

    pub fn union(&self, other: &Mask) -> Mask {
        Mask { bits: zip_with(&self.bits, &other.bits, |a, b| a || b) }
    }

    pub fn intersection(&self, other: &Mask) -> Mask {
        Mask { bits: zip_with(&self.bits, &other.bits, |a, b| a && b) }
    }

    pub fn is_subset(&self, other: &Mask) -> bool {
        self.iter().all(|(n, c)| other.contains(n, c))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.bits
            .iter()
            .enumerate()
            .flat_map(|(n, v)| v.iter().enumerate().filter(|(_, &b)| b).map(move |(c, _)| (n, c)))
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|v| v.iter().filter(|&&b| b).count()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn counts(&self) -> Vec<usize> {
        self.bits.iter().map(|v| v.iter().filter(|&&b| b).count()).collect()
    }

    /// Cells of dimension at most `d` not in the mask.
    pub fn missing_up_to(&self, d: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (n, v) in self.bits.iter().enumerate().take(d + 1) {
            for (c, &b) in v.iter().enumerate() {
                if !b {
                    out.push((n, c));
                }
            }
        }
        out
    }

    /// Smallest simplicial subset containing the mask.
    pub fn closure(&self, t: &FiniteSimplicialSet) -> Mask {
        let mut m = self.clone();
        for n in (1..m.bits.len()).rev() {
            for c in 0..m.bits[n].len() {
                if m.bits[n][c] {
                    for f in &t.cell(n, c).faces {
                        m.bits[f.base_dim()][f.base] = true;
                    }
                }
            }
        }
        m
    }

    pub fn is_closed(&self, t: &FiniteSimplicialSet) -> bool {
        self.iter().all(|(n, c)| n == 0 || t.cell(n, c).faces.iter().all(|f| self.contains_ref(f)))
    }

    pub fn truncate_to(&self, d: usize) -> Mask {
        let mut m = self.clone();
        for v in m.bits.iter_mut().skip(d + 1) {
            v.iter_mut().for_each(|b| *b = false);
        }
        m
    }
}

fn zip_with(a: &[Vec<bool>], b: &[Vec<bool>], f: impl Fn(bool, bool) -> bool) -> Vec<Vec<bool>> {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(&p, &q)| f(p, q)).collect()).collect()
}

/// An injective, dimension-preserving embedding `sub -> ambient`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inclusion {
    pub sub: FiniteSimplicialSet,
    pub ambient: FiniteSimplicialSet,
    pub embedding: Vec<Vec<usize>>,
}

impl Inclusion {
    pub fn from_mask(ambient: &FiniteSimplicialSet, mask: &Mask) -> Result<Self> {
        Inclusion::from_mask_with(ambient, mask, ambient.is_complete())
    }

    pub fn from_mask_with(ambient: &FiniteSimplicialSet, mask: &Mask, complete: bool) -> Result<Self> {
        if !mask.is_closed(ambient) {
            return Err(Error::InvalidArgument("cell set is not closed under faces".into()));
        }
        let trunc = ambient.trunc_dim();
        let mut embedding: Vec<Vec<usize>> = Vec::with_capacity(trunc + 1);
        let mut back: Vec<Vec<Option<usize>>> = Vec::with_capacity(trunc + 1);
        let mut cells: Vec<Vec<Cell>> = Vec::with_capacity(trunc + 1);
        for n in 0..=trunc {
            let mut emb = Vec::new();
            let mut bk = vec![None; ambient.num_cells(n)];
            let mut level = Vec::new();
            for c in 0..ambient.num_cells(n) {
                if !mask.contains(n, c) {
                    continue;
                }
                bk[c] = Some(emb.len());
                emb.push(c);
                let cell = ambient.cell(n, c);
                let faces = cell
                    .faces
                    .iter()
                    .map(|f| SimplexRef { dim: f.dim, degens: f.degens.clone(), base: back[f.base_dim()][f.base].unwrap() })
                    .collect();
                level.push(Cell { label: cell.label.clone(), faces });
            }
            embedding.push(emb);
            back.push(bk);
            cells.push(level);
        }
        let sub = FiniteSimplicialSet::new(trunc, complete, cells)?;
        Ok(Inclusion { sub, ambient: ambient.clone(), embedding })
    }

    pub fn identity(t: &FiniteSimplicialSet) -> Self {
        Inclusion::from_mask(t, &Mask::full(t)).unwrap()
    }

    pub fn mask(&self) -> Mask {
        let mut m = Mask::empty(&self.ambient);
        for (n, v) in self.embedding.iter().enumerate() {
            for &c in v {
                m.insert(n, c);
            }
        }
        m
    }

    /// Checks that the embedding is injective and commutes with faces.
    pub fn validate(&self) -> Result<()> {
        for (n, v) in self.embedding.iter().enumerate() {
            let mut seen = std::collections::HashSet::new();
            for (c, &a) in v.iter().enumerate() {
                if !seen.insert(a) {
                    return Err(Error::InvalidArgument(format!("embedding not injective in dimension {n}")));
                }
                if n > 0 {
                    for (i, f) in self.sub.cell(n, c).faces.iter().enumerate() {
                        let g = &self.ambient.cell(n, a).faces[i];
                        let mapped = self.embedding[f.base_dim()][f.base];
                        if g.degens != f.degens || g.base != mapped {
                            return Err(Error::FaceMismatch(format!("cell ({n},{c}) face {i}")));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// The `j`-skeleton as a simplicial subset.
pub fn skeleton(t: &FiniteSimplicialSet, j: usize) -> Inclusion {
    let mask = Mask::from_fn(t, |n, _| n <= j);
    Inclusion::from_mask_with(t, &mask, t.is_complete() || j < t.trunc_dim()).unwrap()
}

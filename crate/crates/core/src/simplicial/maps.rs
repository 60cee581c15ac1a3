use super::simplex::SimplexRef;
use super::sset::FiniteSimplicialSet;
use super::subcomplex::Inclusion;
use crate::error::{Error, Result};

/// A simplicial map given on nondegenerate source cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    pub source: FiniteSimplicialSet,
    pub target: FiniteSimplicialSet,
    pub assignment: Vec<Vec<SimplexRef>>,
}

/// Image of a possibly degenerate source simplex under an assignment table.
pub fn image_of(assignment: &[Vec<SimplexRef>], r: &SimplexRef) -> SimplexRef {
    let img = &assignment[r.base_dim()][r.base];
    let tau = img.surjection();
    let comp: Vec<usize> = r.surjection().iter().map(|&t| tau[t]).collect();
    SimplexRef::from_surjection(&comp, img.base)
}

impl SimplicialMap {
    pub fn new(source: FiniteSimplicialSet, target: FiniteSimplicialSet, assignment: Vec<Vec<SimplexRef>>) -> Result<Self> {
        let m = SimplicialMap { source, target, assignment };
        m.validate()?;
        Ok(m)
    }

    /// Checks shape and commutation with every face map.
    pub fn validate(&self) -> Result<()> {
        let s = &self.source;
        let t = &self.target;
        if self.assignment.len() != s.trunc_dim() + 1 {
            return Err(Error::Malformed("assignment table has the wrong number of dimensions".into()));
        }
        for n in 0..=s.trunc_dim() {
            if self.assignment[n].len() != s.num_cells(n) {
                return Err(Error::Malformed(format!("assignment table incomplete in dimension {n}")));
            }
            for (c, img) in self.assignment[n].iter().enumerate() {
                if img.dim != n || img.base_dim() > t.trunc_dim() || img.base >= t.num_cells(img.base_dim()) {
                    return Err(Error::Malformed(format!("cell ({n},{c}) maps outside the target")));
                }
                if n == 0 {
                    continue;
                }
                for (i, f) in s.cell(n, c).faces.iter().enumerate() {
                    if t.face(img, i) != image_of(&self.assignment, f) {
                        return Err(Error::FaceMismatch(format!("cell ({n},{c}) '{}', face {i}", s.cell(n, c).label)));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn apply(&self, r: &SimplexRef) -> SimplexRef {
        image_of(&self.assignment, r)
    }

    /// The map induced by a function on vertices between vertex-determined sets.
    pub fn from_vertex_map(source: &FiniteSimplicialSet, target: &FiniteSimplicialSet, f: &[usize]) -> Result<Self> {
        if !target.is_vertex_determined() {
            return Err(Error::InvalidArgument("target simplices are not determined by their vertices".into()));
        }
        let mut assignment = Vec::with_capacity(source.trunc_dim() + 1);
        for n in 0..=source.trunc_dim() {
            let mut level = Vec::with_capacity(source.num_cells(n));
            for c in 0..source.num_cells(n) {
                let w: Vec<usize> = source.word(n, c).iter().map(|&v| f[v]).collect();
                let r = target.lookup_word(&w).ok_or_else(|| {
                    Error::InvalidArgument(format!("no target simplex with vertex word {w:?}"))
                })?;
                level.push(r);
            }
            assignment.push(level);
        }
        SimplicialMap::new(source.clone(), target.clone(), assignment)
    }

    pub fn from_inclusion(inc: &Inclusion) -> Self {
        let assignment = inc
            .embedding
            .iter()
            .enumerate()
            .map(|(n, v)| v.iter().map(|&c| SimplexRef::nondeg(n, c)).collect())
            .collect();
        SimplicialMap { source: inc.sub.clone(), target: inc.ambient.clone(), assignment }
    }

    pub fn compose(&self, after: &SimplicialMap) -> SimplicialMap {
        let assignment =
            self.assignment.iter().map(|lv| lv.iter().map(|r| after.apply(r)).collect()).collect();
        SimplicialMap { source: self.source.clone(), target: after.target.clone(), assignment }
    }

    pub fn is_injective_on_cells(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.assignment.iter().flatten().all(|r| !r.is_degenerate() && seen.insert((r.dim, r.base)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::construct::{standard_simplex, thick_simplex};

    #[test]
    fn coface_and_codegeneracy() {
        let d1 = standard_simplex(1);
        let d2 = standard_simplex(2);
        let delta1 = SimplicialMap::from_vertex_map(&d1, &d2, &[0, 2]).unwrap();
        assert!(delta1.is_injective_on_cells());
        let sigma0 = SimplicialMap::from_vertex_map(&d2, &d1, &[0, 0, 1]).unwrap();
        let comp = delta1.compose(&sigma0);
        assert_eq!(comp.assignment[1][0], SimplexRef::nondeg(1, 0));
    }

    #[test]
    fn flat_into_thick() {
        let d2 = standard_simplex(2);
        let t2 = thick_simplex(2, 3);
        let m = SimplicialMap::from_vertex_map(&d2, &t2, &[0, 1, 2]).unwrap();
        assert!(m.is_injective_on_cells());
        assert!(SimplicialMap::from_vertex_map(&t2, &d2, &[0, 1, 2]).is_err());
    }
}

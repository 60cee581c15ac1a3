use super::build::{build, CellModel};
use super::sset::FiniteSimplicialSet;
use super::subcomplex::Mask;

/// A cell of a join: from the left factor, the right factor, or a pair
/// `(x, y)` of dimension `dim x + dim y + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum JoinKey {
    Left(usize),
    Right(usize),
    Both { x: (usize, usize), y: (usize, usize) },
}

#[derive(Clone, Debug)]
pub struct JoinSet {
    pub set: FiniteSimplicialSet,
    pub keys: Vec<Vec<JoinKey>>,
}

struct JoinModel<'a> {
    s: &'a FiniteSimplicialSet,
    t: &'a FiniteSimplicialSet,
}

impl CellModel for JoinModel<'_> {
    type Key = JoinKey;

    fn cells(&self, k: usize) -> Vec<JoinKey> {
        let mut out = Vec::new();
        out.extend((0..self.s.num_cells(k)).map(JoinKey::Left));
        out.extend((0..self.t.num_cells(k)).map(JoinKey::Right));
        for p in 0..k {
            let q = k - p - 1;
            for x in 0..self.s.num_cells(p) {
                for y in 0..self.t.num_cells(q) {
                    out.push(JoinKey::Both { x: (p, x), y: (q, y) });
                }
            }
        }
        out
    }

    fn face(&self, key: &JoinKey, n: usize, i: usize) -> (Vec<usize>, JoinKey) {
        use super::simplex::SimplexRef;
        match *key {
            JoinKey::Left(x) => {
                let f = self.s.face(&SimplexRef::nondeg(n, x), i);
                (f.degens, JoinKey::Left(f.base))
            }
            JoinKey::Right(y) => {
                let f = self.t.face(&SimplexRef::nondeg(n, y), i);
                (f.degens, JoinKey::Right(f.base))
            }
            JoinKey::Both { x: (p, x), y: (q, y) } => {
                if i <= p {
                    if p == 0 {
                        return (Vec::new(), JoinKey::Right(y));
                    }
                    let f = self.s.face(&SimplexRef::nondeg(p, x), i);
                    (f.degens.clone(), JoinKey::Both { x: (f.base_dim(), f.base), y: (q, y) })
                } else {
                    if q == 0 {
                        return (Vec::new(), JoinKey::Left(x));
                    }
                    let f = self.t.face(&SimplexRef::nondeg(q, y), i - p - 1);
                    let degens = f.degens.iter().map(|&j| j + p + 1).collect();
                    (degens, JoinKey::Both { x: (p, x), y: (f.base_dim(), f.base) })
                }
            }
        }
    }

    fn vertex_label(&self, key: &JoinKey) -> String {
        match *key {
            JoinKey::Left(x) => self.s.vertex_label(x).to_string(),
            JoinKey::Right(y) => format!("{}'", self.t.vertex_label(y)),
            JoinKey::Both { .. } => unreachable!("pairs have positive dimension"),
        }
    }
}

/// The join `(S ⋆ T)_k = S_k ⊔ T_k ⊔ ⨆_{i+j=k-1} S_i × T_j`.
pub fn join_with_keys(s: &FiniteSimplicialSet, t: &FiniteSimplicialSet) -> JoinSet {
    let (trunc, complete) = match (s.is_complete(), t.is_complete()) {
        (true, true) => {
            let top = match (s.top_dim(), t.top_dim()) {
                (Some(a), Some(b)) => a + b + 1,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (None, None) => 0,
            };
            (top, true)
        }
        (true, false) => (t.trunc_dim(), false),
        (false, true) => (s.trunc_dim(), false),
        (false, false) => (s.trunc_dim().min(t.trunc_dim()), false),
    };
    let built = build(&JoinModel { s, t }, trunc, complete);
    JoinSet { set: built.set, keys: built.keys }
}

pub fn join(s: &FiniteSimplicialSet, t: &FiniteSimplicialSet) -> FiniteSimplicialSet {
    join_with_keys(s, t).set
}

impl JoinSet {
    /// Cells of `A ⋆ B` for simplicial subsets `A`, `B` of the factors.
    pub fn sub_join(&self, a: &Mask, b: &Mask) -> Mask {
        Mask::from_fn(&self.set, |n, c| match self.keys[n][c] {
            JoinKey::Left(x) => a.contains(n, x),
            JoinKey::Right(y) => b.contains(n, y),
            JoinKey::Both { x, y } => a.contains(x.0, x.1) && b.contains(y.0, y.1),
        })
    }
}

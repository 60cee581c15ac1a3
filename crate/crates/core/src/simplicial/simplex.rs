use serde::{Deserialize, Serialize};

/// A possibly degenerate simplex `s_{j_1} ... s_{j_r} x` in Eilenberg–Zilber
/// normal form: `degens` is strictly decreasing and `base` names a
/// nondegenerate simplex of dimension `dim - degens.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimplexRef {
    #[serde(skip)]
    pub dim: usize,
    pub degens: Vec<usize>,
    pub base: usize,
}

impl SimplexRef {
    pub fn nondeg(dim: usize, base: usize) -> Self {
        SimplexRef { dim, degens: Vec::new(), base }
    }

    pub fn base_dim(&self) -> usize {
        self.dim - self.degens.len()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.degens.is_empty()
    }

    /// The monotone surjection `[dim] -> [base_dim]` encoded by the degeneracies.
    pub fn surjection(&self) -> Vec<usize> {
        surjection_from_degens(self.dim, &self.degens)
    }

    pub fn from_surjection(surj: &[usize], base: usize) -> Self {
        SimplexRef { dim: surj.len() - 1, degens: degens_of_word(surj), base }
    }

    /// `s_j` applied to this simplex.
    pub fn degeneracy(&self, j: usize) -> Self {
        assert!(j <= self.dim, "degeneracy index out of range");
        let s = self.surjection();
        let mut t = Vec::with_capacity(s.len() + 1);
        t.extend_from_slice(&s[..=j]);
        t.push(s[j]);
        t.extend_from_slice(&s[j + 1..]);
        SimplexRef::from_surjection(&t, self.base)
    }

    /// Apply a degeneracy word given as a strictly decreasing list.
    pub fn degenerate_by(&self, degens: &[usize]) -> Self {
        let mut r = self.clone();
        for &j in degens.iter().rev() {
            r = r.degeneracy(j);
        }
        r
    }
}

pub fn surjection_from_degens(dim: usize, degens: &[usize]) -> Vec<usize> {
    let mut s = Vec::with_capacity(dim + 1);
    let mut v = 0usize;
    s.push(0);
    for t in 0..dim {
        if !degens.contains(&t) {
            v += 1;
        }
        s.push(v);
    }
    s
}

/// Positions `t` with `w[t] == w[t+1]`, in decreasing order.
pub fn degens_of_word(w: &[usize]) -> Vec<usize> {
    let mut d: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&t| w[t] == w[t + 1]).collect();
    d.reverse();
    d
}

/// Split a word into its degeneracy positions and its adjacent-distinct reduction.
pub fn reduce_word(w: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut reduced = Vec::with_capacity(w.len());
    for &x in w {
        if reduced.last() != Some(&x) {
            reduced.push(x);
        }
    }
    (degens_of_word(w), reduced)
}

/// The coface word `[k-1] -> [k]` skipping `i`.
pub fn coface_word(k: usize, i: usize) -> Vec<usize> {
    (0..=k).filter(|&t| t != i).collect()
}

/// The codegeneracy word `[k+1] -> [k]` repeating `j`.
pub fn codegeneracy_word(k: usize, j: usize) -> Vec<usize> {
    (0..=k + 1).map(|t| if t <= j { t } else { t - 1 }).collect()
}

pub fn is_monotone(w: &[usize]) -> bool {
    w.windows(2).all(|p| p[0] <= p[1])
}

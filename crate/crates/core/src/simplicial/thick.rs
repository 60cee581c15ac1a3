use super::build::{build, CellModel};
use super::simplex::{reduce_word, SimplexRef};
use super::sset::FiniteSimplicialSet;
use super::subcomplex::Mask;

/// Cell of `T ×_Δ 𝚫`: a nondegenerate cell `(p, x)` of `T` and an
/// adjacent-distinct word onto `0..=p`.
pub type ThickKey = (usize, usize, Vec<usize>);

#[derive(Clone, Debug)]
pub struct ThickSet {
    pub set: FiniteSimplicialSet,
    pub keys: Vec<Vec<ThickKey>>,
}

struct ThickModel<'a> {
    t: &'a FiniteSimplicialSet,
}

fn onto_words(p: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(p: usize, len: usize, w: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if w.len() == len {
            let mut seen = vec![false; p + 1];
            w.iter().for_each(|&x| seen[x] = true);
            if seen.iter().all(|&b| b) {
                out.push(w.clone());
            }
            return;
        }
        for v in 0..=p {
            if w.last() == Some(&v) {
                continue;
            }
            w.push(v);
            go(p, len, w, out);
            w.pop();
        }
    }
    let mut out = Vec::new();
    go(p, len, &mut Vec::new(), &mut out);
    out
}

/// Normal form of the simplex `w^* r` where `r` is a simplex of `T` and `w`
/// an arbitrary word in `0..=dim r`.
pub(crate) fn thick_normalize(t: &FiniteSimplicialSet, r: &SimplexRef, w: &[usize]) -> (Vec<usize>, ThickKey) {
    let tau = r.surjection();
    let mut u: Vec<usize> = w.iter().map(|&x| tau[x]).collect();
    let mut cur = SimplexRef::nondeg(r.base_dim(), r.base);
    loop {
        let p = cur.dim;
        let mut seen = vec![false; p + 1];
        u.iter().for_each(|&x| seen[x] = true);
        match (0..=p).rev().find(|&v| !seen[v]) {
            None => break,
            Some(v) => {
                let f = t.face(&cur, v);
                let sigma = f.surjection();
                u = u.iter().map(|&x| sigma[if x > v { x - 1 } else { x }]).collect();
                cur = SimplexRef::nondeg(f.base_dim(), f.base);
            }
        }
    }
    let (degens, reduced) = reduce_word(&u);
    (degens, (cur.dim, cur.base, reduced))
}

impl CellModel for ThickModel<'_> {
    type Key = ThickKey;

    fn cells(&self, k: usize) -> Vec<ThickKey> {
        let mut out = Vec::new();
        for p in 0..=k.min(self.t.trunc_dim()) {
            let words = onto_words(p, k + 1);
            for x in 0..self.t.num_cells(p) {
                for w in &words {
                    out.push((p, x, w.clone()));
                }
            }
        }
        out
    }

    fn face(&self, key: &ThickKey, _n: usize, i: usize) -> (Vec<usize>, ThickKey) {
        let (p, x, w) = key;
        let mut u = w.clone();
        u.remove(i);
        thick_normalize(self.t, &SimplexRef::nondeg(*p, *x), &u)
    }

    fn vertex_label(&self, key: &ThickKey) -> String {
        self.t.vertex_label(key.1).to_string()
    }
}

/// `T ×_Δ 𝚫`, truncated at `trunc`.
pub fn thickify_with_keys(t: &FiniteSimplicialSet, trunc: usize) -> ThickSet {
    let degenerate_only = t.top_dim().map_or(true, |d| d == 0) && t.is_complete();
    let trunc = if degenerate_only { 0 } else { trunc };
    let built = build(&ThickModel { t }, trunc, degenerate_only);
    ThickSet { set: built.set, keys: built.keys }
}

pub fn thickify(t: &FiniteSimplicialSet, trunc: usize) -> FiniteSimplicialSet {
    thickify_with_keys(t, trunc).set
}

impl ThickSet {
    /// Cells of `S ×_Δ 𝚫` for a simplicial subset `S`.
    pub fn thick_of(&self, s: &Mask) -> Mask {
        Mask::from_fn(&self.set, |n, c| {
            let (p, x, _) = &self.keys[n][c];
            s.contains(*p, *x)
        })
    }

    /// The copy of `T` inside `T ×_Δ 𝚫` (identity words).
    pub fn flat_copy(&self, s: &Mask) -> Mask {
        Mask::from_fn(&self.set, |n, c| {
            let (p, x, w) = &self.keys[n][c];
            *p == n && s.contains(*p, *x) && w.iter().enumerate().all(|(t, &v)| t == v)
        })
    }

    /// The cell `(x, w)` for a nondegenerate `x` of `T` and a word in its vertices.
    pub fn image(&self, t: &FiniteSimplicialSet, x: (usize, usize), w: &[usize]) -> Option<SimplexRef> {
        let (degens, key) = thick_normalize(t, &SimplexRef::nondeg(x.0, x.1), w);
        let n = key.2.len() - 1;
        let c = self.keys.get(n)?.iter().position(|k| *k == key)?;
        Some(SimplexRef { dim: w.len() - 1, degens, base: c })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::construct::{boundary, horn, standard_simplex, thick_simplex};

    #[test]
    fn thickify_simplex_is_thick_simplex() {
        for n in 0..=2 {
            let a = thickify(&standard_simplex(n), 3);
            let b = thick_simplex(n, 3);
            assert_eq!(a.counts(), b.counts());
            a.validate().unwrap();
        }
    }

    #[test]
    fn thick_of_small_pieces() {
        let h = horn(1, 1).unwrap();
        assert_eq!(thickify(&h.sub, 4).counts(), vec![1]);
        let b = boundary(1);
        assert_eq!(thickify(&b.sub, 4).counts(), vec![2]);
    }

    #[test]
    fn thickify_horn_counts() {
        let h = horn(2, 1).unwrap();
        let th = thickify(&h.sub, 3);
        th.validate().unwrap();
        // two thick edges glued at a vertex
        assert_eq!(th.counts(), vec![3, 4, 4, 4]);
    }
}

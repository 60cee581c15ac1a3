use super::build::{build, CellModel};
use super::construct::{horn, standard_simplex};
use super::simplex::SimplexRef;
use super::sset::FiniteSimplicialSet;
use super::subcomplex::Mask;
use crate::error::Result;

/// A product together with the pair of factor simplices behind every cell.
#[derive(Clone, Debug)]
pub struct ProductSet {
    pub set: FiniteSimplicialSet,
    pub pairs: Vec<Vec<(SimplexRef, SimplexRef)>>,
}

struct ProductModel<'a> {
    s: &'a FiniteSimplicialSet,
    t: &'a FiniteSimplicialSet,
}

fn subsets(universe: &[usize], size: usize) -> Vec<Vec<usize>> {
    fn go(u: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for k in start..u.len() {
            cur.push(u[k]);
            go(u, size, k + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(universe, size, 0, &mut Vec::new(), &mut out);
    out
}

impl CellModel for ProductModel<'_> {
    type Key = (SimplexRef, SimplexRef);

    fn cells(&self, k: usize) -> Vec<Self::Key> {
        let mut out = Vec::new();
        let positions: Vec<usize> = (0..k).collect();
        for p in 0..=k.min(self.s.trunc_dim()) {
            for ja in subsets(&positions, k - p) {
                let rest: Vec<usize> = positions.iter().copied().filter(|x| !ja.contains(x)).collect();
                for q in (k - rest.len())..=k.min(self.t.trunc_dim()) {
                    for jb in subsets(&rest, k - q) {
                        let mut da = ja.clone();
                        da.reverse();
                        let mut db = jb.clone();
                        db.reverse();
                        for x in 0..self.s.num_cells(p) {
                            for y in 0..self.t.num_cells(q) {
                                out.push((
                                    SimplexRef { dim: k, degens: da.clone(), base: x },
                                    SimplexRef { dim: k, degens: db.clone(), base: y },
                                ));
                            }
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    fn face(&self, key: &Self::Key, _n: usize, i: usize) -> (Vec<usize>, Self::Key) {
        let a = self.s.face(&key.0, i);
        let b = self.t.face(&key.1, i);
        split_common(&a, &b)
    }

    fn vertex_label(&self, key: &Self::Key) -> String {
        format!("({},{})", self.s.vertex_label(key.0.base), self.t.vertex_label(key.1.base))
    }
}

/// Extract the common degeneracies of a pair of simplices of equal dimension.
pub(crate) fn split_common(a: &SimplexRef, b: &SimplexRef) -> (Vec<usize>, (SimplexRef, SimplexRef)) {
    let common: Vec<usize> = a.degens.iter().copied().filter(|j| b.degens.contains(j)).collect();
    let mut sa = a.surjection();
    let mut sb = b.surjection();
    for &t in &common {
        sa.remove(t + 1);
        sb.remove(t + 1);
    }
    (common, (SimplexRef::from_surjection(&sa, a.base), SimplexRef::from_surjection(&sb, b.base)))
}

fn product_trunc(s: &FiniteSimplicialSet, t: &FiniteSimplicialSet) -> (usize, bool) {
    match (s.is_complete(), t.is_complete()) {
        (true, true) => (s.top_dim().unwrap_or(0) + t.top_dim().unwrap_or(0), true),
        (true, false) => (t.trunc_dim(), false),
        (false, true) => (s.trunc_dim(), false),
        (false, false) => (s.trunc_dim().min(t.trunc_dim()), false),
    }
}

/// Product by the shuffle construction: nondegenerate cells are pairs of
/// simplices with disjoint degeneracy sets.
pub fn product_with_pairs(s: &FiniteSimplicialSet, t: &FiniteSimplicialSet) -> ProductSet {
    let (trunc, complete) = product_trunc(s, t);
    let model = ProductModel { s, t };
    let built = build(&model, trunc, complete);
    ProductSet { set: built.set, pairs: built.keys }
}

pub fn product(s: &FiniteSimplicialSet, t: &FiniteSimplicialSet) -> FiniteSimplicialSet {
    product_with_pairs(s, t).set
}

impl ProductSet {
    /// Cells of `A x B` for simplicial subsets `A` and `B` of the factors.
    pub fn sub_product(&self, a: &Mask, b: &Mask) -> Mask {
        Mask::from_fn(&self.set, |n, c| {
            let (x, y) = &self.pairs[n][c];
            a.contains_ref(x) && b.contains_ref(y)
        })
    }

    /// Projection words of a cell to each factor.
    pub fn pair(&self, n: usize, c: usize) -> &(SimplexRef, SimplexRef) {
        &self.pairs[n][c]
    }

    /// Look up a cell from a pair of simplices of the same dimension.
    pub fn lookup_pair(&self, a: &SimplexRef, b: &SimplexRef) -> Option<SimplexRef> {
        let (degens, key) = split_common(a, b);
        let n = a.dim - degens.len();
        let c = self.pairs[n].binary_search(&key).ok()?;
        Some(SimplexRef { dim: a.dim, degens, base: c })
    }
}

/// Prism `Δ^m × Δ^n` with its horn-like simplicial subsets.
#[derive(Clone, Debug)]
pub struct Prism {
    pub m: usize,
    pub n: usize,
    pub product: ProductSet,
    pub left: FiniteSimplicialSet,
    pub right: FiniteSimplicialSet,
}

impl Prism {
    pub fn new(m: usize, n: usize) -> Self {
        let left = standard_simplex(m);
        let right = standard_simplex(n);
        let product = product_with_pairs(&left, &right);
        Prism { m, n, product, left, right }
    }

    pub fn set(&self) -> &FiniteSimplicialSet {
        &self.product.set
    }

    fn boundary_mask(f: &FiniteSimplicialSet, d: usize) -> Mask {
        Mask::from_fn(f, |k, _| k < d)
    }

    /// `(Λ^m_i × Δ^n) ∪ (Δ^m × ∂Δ^n)`.
    pub fn horn_mask(&self, i: usize) -> Result<Mask> {
        let h = horn(self.m, i)?.mask();
        let a = self.product.sub_product(&h, &Mask::full(&self.right));
        let b = self.product.sub_product(&Mask::full(&self.left), &Prism::boundary_mask(&self.right, self.n));
        Ok(a.union(&b))
    }

    /// `(∂Δ^m × Δ^n) ∪ (Δ^m × Λ^n_j)`.
    pub fn tilde_horn_mask(&self, j: usize) -> Result<Mask> {
        let h = horn(self.n, j)?.mask();
        let a = self.product.sub_product(&Prism::boundary_mask(&self.left, self.m), &Mask::full(&self.right));
        let b = self.product.sub_product(&Mask::full(&self.left), &h);
        Ok(a.union(&b))
    }

    /// Top cells as `(cell id, a_1..a_m)` where `a_j` counts the second-factor
    /// steps taken before the `j`-th first-factor step.
    pub fn shuffles(&self) -> Vec<(usize, Vec<usize>)> {
        let top = self.m + self.n;
        (0..self.set().num_cells(top))
            .map(|c| {
                let w = self.set().word(top, c);
                let verts: Vec<(usize, usize)> = w.iter().map(|&v| self.vertex_coords(v)).collect();
                let mut a = Vec::with_capacity(self.m);
                for t in 0..top {
                    if verts[t + 1].0 > verts[t].0 {
                        a.push(verts[t].1);
                    }
                }
                (c, a)
            })
            .collect()
    }

    /// Number of first-factor steps before each second-factor step.
    pub fn dual_shuffles(&self) -> Vec<(usize, Vec<usize>)> {
        let top = self.m + self.n;
        (0..self.set().num_cells(top))
            .map(|c| {
                let w = self.set().word(top, c);
                let verts: Vec<(usize, usize)> = w.iter().map(|&v| self.vertex_coords(v)).collect();
                let mut a = Vec::with_capacity(self.n);
                for t in 0..top {
                    if verts[t + 1].1 > verts[t].1 {
                        a.push(verts[t].0);
                    }
                }
                (c, a)
            })
            .collect()
    }

    pub fn vertex_coords(&self, v: usize) -> (usize, usize) {
        let (x, y) = &self.product.pairs[0][v];
        (x.base, y.base)
    }

    pub fn vertex(&self, a: usize, b: usize) -> usize {
        (0..self.set().num_cells(0)).find(|&v| self.vertex_coords(v) == (a, b)).unwrap()
    }
}

/// `b(π, i) = Σ_{j<=i} a_j − Σ_{j>i} a_j` with `a` indexed from 1.
pub fn shuffle_grade(a: &[usize], i: usize) -> i64 {
    a.iter().enumerate().map(|(j, &x)| if j < i { x as i64 } else { -(x as i64) }).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::construct::thick_simplex;

    #[test]
    fn prism_top_cells() {
        assert_eq!(Prism::new(1, 1).set().num_cells(2), 2);
        assert_eq!(Prism::new(2, 1).set().num_cells(3), 3);
        let p = Prism::new(2, 2);
        assert_eq!(p.set().num_cells(4), 6);
        p.set().validate().unwrap();
    }

    #[test]
    fn unit_factor() {
        let t = standard_simplex(2);
        let p = product(&standard_simplex(0), &t);
        assert_eq!(p.counts(), t.counts());
    }

    #[test]
    fn all_simplices_multiply() {
        let s = standard_simplex(1);
        let t = thick_simplex(1, 4);
        let p = product(&s, &t);
        p.validate().unwrap();
        for k in 0..=4 {
            assert_eq!(p.count_all_simplices(k), s.count_all_simplices(k) * t.count_all_simplices(k));
        }
    }

    #[test]
    fn prism_horn_faces() {
        let p = Prism::new(1, 1);
        let h = p.horn_mask(1).unwrap();
        // {1} x Δ^1 together with Δ^1 x ∂Δ^1
        assert_eq!(h.counts(), vec![4, 3, 0]);
        assert!(h.is_closed(p.set()));
    }

    #[test]
    fn grades() {
        let p = Prism::new(1, 1);
        let mut g: Vec<i64> = p.shuffles().iter().map(|(_, a)| shuffle_grade(a, 1)).collect();
        g.sort();
        assert_eq!(g, vec![0, 1]);
    }
}

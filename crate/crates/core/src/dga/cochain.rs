use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::algebra::{ground_field, DGAlgebra, Element, SparseVec};
use super::rational::{sign, Q};
use crate::error::Result;
use crate::simplicial::{FiniteSimplicialSet, SimplexRef};

/// Nondegenerate cells of a finite simplicial set with the face and
/// front/back data that normalized cochains need.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainShape {
    words: Vec<Vec<Vec<usize>>>,
    /// `faces[k][c][l]`: the face `d_l` when it is nondegenerate.
    faces: Vec<Vec<Vec<Option<usize>>>>,
    /// `splits[k][c][l]`: front face of dimension `l` and back face of dimension `k - l`.
    splits: Vec<Vec<Vec<(Option<usize>, Option<usize>)>>>,
    lookup: HashMap<Vec<usize>, (usize, usize)>,
}

fn nondegenerate(r: SimplexRef) -> Option<usize> {
    (!r.is_degenerate()).then_some(r.base)
}

impl CochainShape {
    /// Cells of `t` in dimensions `0..=max_dim` (and at most the stored truncation).
    pub fn new(t: &FiniteSimplicialSet, max_dim: usize) -> Self {
        let top = max_dim.min(t.trunc_dim());
        let mut words = Vec::new();
        let mut faces = Vec::new();
        let mut splits = Vec::new();
        let mut lookup = HashMap::new();
        for k in 0..=top {
            let n = t.num_cells(k);
            words.push((0..n).map(|c| t.word(k, c).to_vec()).collect::<Vec<_>>());
            for c in 0..n {
                lookup.insert(t.word(k, c).to_vec(), (k, c));
            }
            faces.push(
                (0..n)
                    .map(|c| {
                        if k == 0 {
                            return Vec::new();
                        }
                        (0..=k).map(|l| nondegenerate(t.face(&SimplexRef::nondeg(k, c), l))).collect()
                    })
                    .collect::<Vec<_>>(),
            );
            splits.push(
                (0..n)
                    .map(|c| {
                        let x = SimplexRef::nondeg(k, c);
                        (0..=k)
                            .map(|l| {
                                let front: Vec<usize> = (0..=l).collect();
                                let back: Vec<usize> = (l..=k).collect();
                                (
                                    nondegenerate(t.apply_operator(&x, &front)),
                                    nondegenerate(t.apply_operator(&x, &back)),
                                )
                            })
                            .collect()
                    })
                    .collect::<Vec<_>>(),
            );
        }
        CochainShape { words, faces, splits, lookup }
    }

    pub fn top(&self) -> usize {
        self.words.len() - 1
    }

    pub fn count(&self, k: usize) -> usize {
        self.words.get(k).map_or(0, Vec::len)
    }

    pub fn word(&self, k: usize, c: usize) -> &[usize] {
        &self.words[k][c]
    }

    pub fn cell_of_word(&self, w: &[usize]) -> Option<(usize, usize)> {
        self.lookup.get(w).copied()
    }

    pub fn face(&self, k: usize, c: usize, l: usize) -> Option<usize> {
        self.faces[k][c][l]
    }

    pub fn split(&self, k: usize, c: usize, l: usize) -> (Option<usize>, Option<usize>) {
        self.splits[k][c][l]
    }

    fn word_label(&self, k: usize, c: usize) -> String {
        let w = &self.words[k][c];
        if w.iter().all(|&v| v < 10) {
            w.iter().map(|v| v.to_string()).collect()
        } else {
            w.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
        }
    }
}

/// Basis key of `C^•(T) ⊗ A`: cell dimension, cell, coefficient degree, coefficient basis index.
type Key = (usize, usize, i32, usize);

/// The algebra `C^•(T) ⊗ A` of normalized cochains with coefficients, with
/// the coboundary `(δa)_σ = Σ (-1)^l a_{d_l σ} + (-1)^k d(a_σ)` and the
/// Alexander–Whitney product with Koszul sign `(-1)^{(j-l)(k-l)}`.
#[derive(Clone, Debug)]
pub struct CochainAlgebra {
    pub shape: CochainShape,
    pub coeff: DGAlgebra,
    pub algebra: DGAlgebra,
    keys: Vec<Vec<Key>>,
    index: HashMap<Key, usize>,
}

impl CochainAlgebra {
    fn total_lo(&self) -> i32 {
        self.algebra.lo()
    }

    fn keys_in(&self, t: i32) -> &[Key] {
        usize::try_from(t - self.total_lo()).ok().and_then(|k| self.keys.get(k)).map_or(&[], Vec::as_slice)
    }

    /// The coefficient `x_σ ∈ A` on the cell `(k, c)`.
    pub fn component(&self, x: &Element, k: usize, c: usize) -> Element {
        let mut out = Element::zero();
        for (t, v) in x.parts() {
            let s = t - k as i32;
            let mut coords = vec![Q::zero(); self.coeff.dim(s)];
            for (pos, key) in self.keys_in(t).iter().enumerate() {
                if key.0 == k && key.1 == c {
                    coords[key.3] = v[pos].clone();
                }
            }
            out = &out + &Element::homogeneous(s, coords);
        }
        out
    }

    /// The coefficient on the cell with vertex word `w` (zero when absent).
    pub fn component_by_word(&self, x: &Element, w: &[usize]) -> Element {
        match self.shape.cell_of_word(w) {
            Some((k, c)) => self.component(x, k, c),
            None => Element::zero(),
        }
    }

    /// Assembles an element from coefficients on cells.
    pub fn from_components<'a>(&self, comps: impl IntoIterator<Item = (usize, usize, &'a Element)>) -> Element {
        let mut parts: BTreeMap<i32, Vec<Q>> = BTreeMap::new();
        for (k, c, a) in comps {
            for (s, v) in a.parts() {
                let t = s + k as i32;
                for (b, coef) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    if let Some(&pos) = self.index.get(&(k, c, s, b)) {
                        parts.entry(t).or_insert_with(|| vec![Q::zero(); self.algebra.dim(t)])[pos] += coef;
                    }
                }
            }
        }
        let mut out = Element::zero();
        for (t, v) in parts {
            out = &out + &Element::homogeneous(t, v);
        }
        out
    }

    /// Assembles an element from coefficients indexed by vertex words.
    pub fn from_words<'a>(&self, comps: impl IntoIterator<Item = (&'a [usize], &'a Element)>) -> Element {
        let cells: Vec<(usize, usize, &Element)> = comps
            .into_iter()
            .filter_map(|(w, a)| self.shape.cell_of_word(w).map(|(k, c)| (k, c, a)))
            .collect();
        self.from_components(cells)
    }
}

/// `C^•(T) ⊗ A` for the cells recorded in `shape`. Cochains above the top
/// recorded dimension form a differential ideal, so the result is the
/// quotient by it.
pub fn tensor_dga(shape: &CochainShape, a: &DGAlgebra) -> Result<CochainAlgebra> {
    let top = shape.top();
    let lo = a.lo();
    let hi = a.hi() + top as i32;
    let plain = a.dim(0) == 1 && a.lo() == 0 && a.hi() == 0;
    let mut keys: Vec<Vec<Key>> = Vec::new();
    for t in lo..=hi {
        let mut ks = Vec::new();
        for k in 0..=top {
            let s = t - k as i32;
            for c in 0..shape.count(k) {
                for b in 0..a.dim(s) {
                    ks.push((k, c, s, b));
                }
            }
        }
        keys.push(ks);
    }
    let index: HashMap<Key, usize> =
        keys.iter().flat_map(|ks| ks.iter().enumerate().map(|(p, &key)| (key, p))).collect();
    let labels: Vec<Vec<String>> = keys
        .iter()
        .map(|ks| {
            ks.iter()
                .map(|&(k, c, s, b)| {
                    let w = shape.word_label(k, c);
                    if plain {
                        format!("e{w}")
                    } else {
                        format!("e{w}⊗{}", a.labels(s)[b])
                    }
                })
                .collect()
        })
        .collect();

    // Cofaces: for each cell, the cells of one dimension higher having it as face `l`.
    let mut cofaces: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
    for k in 1..=top {
        for tau in 0..shape.count(k) {
            for l in 0..=k {
                if let Some(c) = shape.face(k, tau, l) {
                    cofaces.entry((k - 1, c)).or_default().push((tau, l));
                }
            }
        }
    }
    let mut diff = Vec::new();
    for t in lo..=hi {
        let cols = &keys[(t - lo) as usize];
        let rows = if t < hi { keys[(t + 1 - lo) as usize].len() } else { 0 };
        let mut m = vec![vec![Q::zero(); cols.len()]; rows];
        if t < hi {
            for (col, &(k, c, s, b)) in cols.iter().enumerate() {
                for &(tau, l) in cofaces.get(&(k, c)).map_or(&[][..], Vec::as_slice) {
                    m[index[&(k + 1, tau, s, b)]][col] += sign(l as i64);
                }
                let dm = a.diff_matrix(s);
                for (r, row) in dm.iter().enumerate() {
                    if !row[b].is_zero() {
                        m[index[&(k, c, s + 1, r)]][col] += sign(k as i64) * &row[b];
                    }
                }
            }
        }
        diff.push(m);
    }

    // Products: cell τ of dimension k1 + k2 whose front and back are (c1, c2).
    let mut glue: HashMap<(usize, usize, usize, usize), Vec<usize>> = HashMap::new();
    for k in 0..=top {
        for tau in 0..shape.count(k) {
            for l in 0..=k {
                if let (Some(f), Some(b)) = shape.split(k, tau, l) {
                    glue.entry((l, f, k - l, b)).or_default().push(tau);
                }
            }
        }
    }
    let coeff_prod = a.product_tables();
    let mut prod = BTreeMap::new();
    for t1 in lo..=hi {
        for t2 in lo..=hi {
            if t1 + t2 < lo || t1 + t2 > hi {
                continue;
            }
            let (ks1, ks2) = (&keys[(t1 - lo) as usize], &keys[(t2 - lo) as usize]);
            let mut table: Vec<Vec<SparseVec>> = vec![vec![Vec::new(); ks2.len()]; ks1.len()];
            let mut nonzero = false;
            for (p, &(k1, c1, s1, b1)) in ks1.iter().enumerate() {
                for (q, &(k2, c2, s2, b2)) in ks2.iter().enumerate() {
                    let Some(taus) = glue.get(&(k1, c1, k2, c2)) else { continue };
                    let Some(pt) = coeff_prod.get(&(s1, s2)) else { continue };
                    let sgn = sign(s1 as i64 * k2 as i64);
                    let mut entry: BTreeMap<usize, Q> = BTreeMap::new();
                    for &tau in taus {
                        for (r, coef) in &pt[b1][b2] {
                            *entry.entry(index[&(k1 + k2, tau, s1 + s2, *r)]).or_insert_with(Q::zero) += &sgn * coef;
                        }
                    }
                    let entry: SparseVec = entry.into_iter().filter(|(_, x)| !x.is_zero()).collect();
                    nonzero |= !entry.is_empty();
                    table[p][q] = entry;
                }
            }
            if nonzero {
                prod.insert((t1, t2), table);
            }
        }
    }
    let mut unit = vec![Q::zero(); keys[(-lo) as usize].len()];
    let one = a.one();
    for c in 0..shape.count(0) {
        for (b, coef) in one.coords(0, a.dim(0)).iter().enumerate() {
            if !coef.is_zero() {
                unit[index[&(0, c, 0, b)]] = coef.clone();
            }
        }
    }
    let name = if plain { "C(T)".to_string() } else { format!("C(T)⊗{}", a.name()) };
    let algebra = DGAlgebra::from_tables(name, lo, labels, diff, prod, unit)?;
    Ok(CochainAlgebra { shape: shape.clone(), coeff: a.clone(), algebra, keys, index })
}

/// Normalized rational cochains on `t` up to dimension `max_dim`.
pub fn cochain_dga(t: &FiniteSimplicialSet, max_dim: usize) -> Result<CochainAlgebra> {
    tensor_dga(&CochainShape::new(t, max_dim), &ground_field())
}

